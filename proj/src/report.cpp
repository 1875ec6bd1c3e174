#include "invgeo/report.hpp"

namespace invgeo {

void ValidationReport::add(std::string rule, std::vector<std::uint64_t> witness,
                           std::string detail) {
  auto& n = totals_[rule];
  if (n < kKeepPerRule)
    violations_.push_back({std::move(rule), std::move(witness), std::move(detail)});
  ++n;
}

void ValidationReport::merge(const ValidationReport& other,
                             const std::string& prefix) {
  std::map<std::string, std::size_t> kept;
  for (const auto& v : other.violations_) {
    auto name = prefix + v.rule;
    if (count(name) + kept[name] < kKeepPerRule) {
      violations_.push_back({name, v.witness, v.detail});
      ++kept[name];
    }
  }
  for (const auto& [rule, n] : other.totals_) totals_[prefix + rule] += n;
}

std::size_t ValidationReport::count(const std::string& rule) const {
  auto it = totals_.find(rule);
  return it == totals_.end() ? 0 : it->second;
}

std::size_t ValidationReport::total() const {
  std::size_t n = 0;
  for (const auto& [_, c] : totals_) n += c;
  return n;
}

std::ostream& operator<<(std::ostream& os, const ValidationReport& report) {
  if (report.empty()) return os << "no violations\n";
  for (const auto& [rule, n] : report.totals())
    os << rule << ": " << n << " violation(s)\n";
  for (const auto& v : report.violations()) {
    os << "  " << v.rule << " witness (";
    for (std::size_t i = 0; i < v.witness.size(); ++i)
      os << (i ? "," : "") << v.witness[i];
    os << ")";
    if (!v.detail.empty()) os << " " << v.detail;
    os << "\n";
  }
  return os;
}

}  // namespace invgeo
