#ifndef INVGEO_REPORT_HPP
#define INVGEO_REPORT_HPP

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace invgeo {

struct Violation {
  std::string rule;
  std::vector<std::uint64_t> witness;
  std::string detail;
};

// Collects axiom violations found by a validator. Only the first
// `kKeepPerRule` witnesses of each rule are stored; all are counted.
class ValidationReport {
 public:
  static constexpr std::size_t kKeepPerRule = 8;

  void add(std::string rule, std::vector<std::uint64_t> witness,
           std::string detail = {});
  void merge(const ValidationReport& other, const std::string& prefix = {});

  bool empty() const { return totals_.empty(); }
  const std::vector<Violation>& violations() const { return violations_; }
  std::size_t count(const std::string& rule) const;
  std::size_t total() const;
  bool mentions(const std::string& rule) const { return count(rule) != 0; }
  const std::map<std::string, std::size_t>& totals() const { return totals_; }

 private:
  std::vector<Violation> violations_;
  std::map<std::string, std::size_t> totals_;
};

std::ostream& operator<<(std::ostream& os, const ValidationReport& report);

// One line of a verification report: a named predicate with its outcome.
struct PredicateResult {
  std::string name;
  bool pass = false;
  std::string witness;
  std::map<std::string, std::string> constants;
};

}  // namespace invgeo

#endif  // INVGEO_REPORT_HPP
