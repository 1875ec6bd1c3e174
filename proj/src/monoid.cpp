#include "invgeo/monoid.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "invgeo/errors.hpp"

namespace invgeo {

InverseMonoid InverseMonoid::generate(std::size_t ground_size,
                                      std::span<const PartialBijection> gens,
                                      const GenerateOptions& options) {
  std::vector<PartialBijection> pool;
  for (const auto& g : gens) {
    if (g.ground_size() != ground_size)
      throw SizeMismatchError("generator " + g.to_string() +
                              " does not act on " +
                              std::to_string(ground_size) + " points");
    pool.push_back(g);
    pool.push_back(invert(g));
  }
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

  std::vector<PartialBijection> found{PartialBijection::identity(ground_size)};
  std::unordered_set<PartialBijection, PartialBijectionHash> seen(found.begin(),
                                                                  found.end());
  auto admit = [&](PartialBijection f) {
    if (seen.insert(f).second) {
      if (found.size() >= options.element_cap)
        throw CapacityError("monoid closure exceeds the element cap of " +
                                std::to_string(options.element_cap),
                            options.element_cap);
      found.push_back(std::move(f));
    }
  };
  for (const auto& g : pool) admit(g);
  // Right-multiplying every found element by every generator enumerates all
  // words, so the result is closed under composition.
  for (std::size_t i = 0; i < found.size(); ++i)
    for (const auto& g : pool) admit(compose(found[i], g));

  std::sort(found.begin(), found.end());

  InverseMonoid m;
  m.order_ = found.size();
  m.ground_size_ = ground_size;
  m.elements_ = std::move(found);
  m.index_.reserve(m.order_);
  for (std::size_t i = 0; i < m.order_; ++i)
    m.index_.emplace(m.elements_[i], static_cast<ElementRef>(i));
  m.identity_ = m.index_.at(PartialBijection::identity(ground_size));

  if (m.order_ <= options.dense_limit) {
    m.table_.resize(m.order_ * m.order_);
    for (std::size_t a = 0; a < m.order_; ++a)
      for (std::size_t b = 0; b < m.order_; ++b)
        m.table_[a * m.order_ + b] =
            m.index_.at(compose(m.elements_[a], m.elements_[b]));
  }
  m.inverse_.resize(m.order_);
  for (std::size_t s = 0; s < m.order_; ++s)
    m.inverse_[s] = m.index_.at(invert(m.elements_[s]));
  m.derive_tables();
  return m;
}

InverseMonoid InverseMonoid::from_table(
    const std::vector<std::vector<ElementRef>>& product, ElementRef identity,
    const TableOptions& options, std::vector<PartialBijection> elements,
    std::vector<std::string> labels) {
  const std::size_t n = product.size();
  if (n == 0) throw ValidationError("product table is empty", {});
  InverseMonoid m;
  m.order_ = n;
  m.table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (product[a].size() != n)
      throw ValidationError("product table is not square", {a, product[a].size()});
    for (std::size_t b = 0; b < n; ++b) {
      if (product[a][b] >= n)
        throw ValidationError("product entry out of range", {a, b, product[a][b]});
      m.table_[a * n + b] = product[a][b];
    }
  }
  if (identity >= n) throw ValidationError("identity out of range", {identity});
  m.identity_ = identity;
  for (std::size_t s = 0; s < n; ++s)
    if (m.product(identity, ElementRef(s)) != s ||
        m.product(ElementRef(s), identity) != s)
      throw ValidationError("identity does not act trivially", {identity, s});

  for_each_triple(n, options.associativity, [&](auto a, auto b, auto c) {
    auto ab = m.product(ElementRef(a), ElementRef(b));
    auto bc = m.product(ElementRef(b), ElementRef(c));
    if (m.product(ab, ElementRef(c)) != m.product(ElementRef(a), bc))
      throw ValidationError("product is not associative", {a, b, c});
    return true;
  });

  m.inverse_.resize(n);
  for (ElementRef s = 0; s < n; ++s) {
    std::size_t count = 0;
    ElementRef found = 0;
    for (ElementRef t = 0; t < n; ++t) {
      if (m.product(m.product(s, t), s) == s &&
          m.product(m.product(t, s), t) == t) {
        if (++count == 1) found = t;
      }
    }
    if (count != 1)
      throw ValidationError("element lacks a unique inverse", {s, count});
    m.inverse_[s] = found;
  }
  m.derive_tables();
  for (auto e : m.idempotents_)
    for (auto f : m.idempotents_)
      if (m.product(e, f) != m.product(f, e))
        throw ValidationError("idempotents do not commute", {e, f});

  if (!elements.empty()) {
    if (elements.size() != n)
      throw ValidationError("element list length differs from order",
                            {elements.size(), n});
    m.ground_size_ = elements.front().ground_size();
    for (std::size_t a = 0; a < n; ++a) {
      if (!m.index_.emplace(elements[a], ElementRef(a)).second)
        throw ValidationError("duplicate element description", {a});
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (compose(elements[a], elements[b]) !=
            elements[m.product(ElementRef(a), ElementRef(b))])
          throw ValidationError("elements disagree with the product table",
                                {a, b});
    m.elements_ = std::move(elements);
  }
  if (!labels.empty()) {
    if (labels.size() != n)
      throw ValidationError("label list length differs from order",
                            {labels.size(), n});
    m.labels_ = std::move(labels);
  }
  return m;
}

void InverseMonoid::derive_tables() {
  idempotent_.assign(order_, false);
  idempotents_.clear();
  dom_.resize(order_);
  ran_.resize(order_);
  for (ElementRef s = 0; s < order_; ++s) {
    if (product(s, s) == s) {
      idempotent_[s] = true;
      idempotents_.push_back(s);
    }
    dom_[s] = product(inverse_[s], s);
    ran_[s] = product(s, inverse_[s]);
  }
}

ElementRef InverseMonoid::lazy_product(ElementRef a, ElementRef b) const {
  return index_.at(compose(elements_[a], elements_[b]));
}

bool InverseMonoid::natural_leq(ElementRef s, ElementRef t) const {
  for (auto e : idempotents_)
    if (product(e, t) == s) return true;
  return false;
}

Partition InverseMonoid::l_classes() const { return Partition(dom_); }
Partition InverseMonoid::r_classes() const { return Partition(ran_); }

std::vector<ElementRef> InverseMonoid::closure(
    std::span<const ElementRef> gens) const {
  std::vector<ElementRef> pool(gens.begin(), gens.end());
  for (auto g : pool) check(g);
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  std::vector<bool> in(order_, false);
  std::vector<ElementRef> found;
  for (auto g : pool) {
    in[g] = true;
    found.push_back(g);
  }
  for (std::size_t i = 0; i < found.size(); ++i)
    for (auto g : pool) {
      auto y = product(found[i], g);
      if (!in[y]) {
        in[y] = true;
        found.push_back(y);
      }
    }
  std::sort(found.begin(), found.end());
  return found;
}

std::optional<ElementRef> InverseMonoid::find(const PartialBijection& f) const {
  auto it = index_.find(f);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string InverseMonoid::describe(ElementRef s) const {
  if (has_elements()) return elements_[s].to_string();
  if (has_labels()) return labels_[s];
  return "#" + std::to_string(s);
}

void InverseMonoid::check(ElementRef s) const {
  if (s >= order_)
    throw PreconditionError("element index out of range", {s, order_});
}

ValidationReport InverseMonoid::validate(const SweepPolicy& associativity) const {
  ValidationReport report;
  for (ElementRef s = 0; s < order_; ++s)
    if (product(identity_, s) != s || product(s, identity_) != s)
      report.add("identity", {s});
  for_each_triple(order_, associativity, [&](auto a, auto b, auto c) {
    auto lhs = product(product(ElementRef(a), ElementRef(b)), ElementRef(c));
    auto rhs = product(ElementRef(a), product(ElementRef(b), ElementRef(c)));
    if (lhs != rhs) report.add("associativity", {a, b, c});
    return true;
  });
  for (ElementRef s = 0; s < order_; ++s) {
    auto t = inverse_[s];
    if (product(s, product(t, s)) != s || product(t, product(s, t)) != t)
      report.add("inverse", {s, t});
    for (ElementRef u = 0; u < order_; ++u)
      if (u != t && product(s, product(u, s)) == s &&
          product(u, product(s, u)) == u)
        report.add("unique-inverse", {s, t, u});
    if (idempotent_[s] != (product(s, s) == s))
      report.add("idempotent-mask", {s});
  }
  for (auto e : idempotents_)
    for (auto f : idempotents_) {
      auto ef = product(e, f);
      if (ef != product(f, e)) report.add("idempotents-commute", {e, f});
      if (!idempotent_[ef]) report.add("idempotents-closed", {e, f});
    }
  return report;
}

}  // namespace invgeo
