#include "invgeo/action.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "invgeo/errors.hpp"

namespace invgeo {

namespace {

constexpr BaseRef kNoBase = std::numeric_limits<BaseRef>::max();

using Bits = std::vector<std::uint64_t>;

bool subset_of(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if ((a[i] & ~b[i]) != 0) return false;
  return true;
}

std::size_t popcount(const Bits& a) {
  std::size_t n = 0;
  for (auto w : a) n += static_cast<std::size_t>(__builtin_popcountll(w));
  return n;
}

}  // namespace

EtaleAction::EtaleAction(std::shared_ptr<const InverseMonoid> monoid,
                         std::shared_ptr<const MetricPresheaf> presheaf,
                         std::vector<PointRef> act)
    : monoid_(std::move(monoid)),
      presheaf_(std::move(presheaf)),
      act_(std::move(act)) {
  const auto n = monoid_->order();
  const auto x = presheaf_->size();
  if (act_.size() != x * n)
    throw PreconditionError("act table must be |X| * N", {act_.size(), x * n});
  for (std::size_t i = 0; i < act_.size(); ++i)
    if (act_[i] >= x)
      throw PreconditionError("act entry out of range", {i / n, i % n, act_[i]});
  const auto& base = presheaf_->base();
  if (base.size() != monoid_->idempotents().size())
    throw PreconditionError("presheaf base is not E(S)",
                            {base.size(), monoid_->idempotents().size()});
  base_of_.assign(n, kNoBase);
  for (BaseRef b = 0; b < base.size(); ++b) {
    auto e = base.elements[b];
    if (e >= n || !monoid_->is_idempotent(e) || base_of_[e] != kNoBase)
      throw PreconditionError("presheaf base is not E(S)", {b, e});
    base_of_[e] = b;
  }
}

EtaleAction cayley_action(std::shared_ptr<const InverseMonoid> monoid,
                          std::span<const ElementRef> quasi_generators) {
  auto presheaf = std::make_shared<const MetricPresheaf>(
      cayley_presheaf(*monoid, quasi_generators));
  const auto n = monoid->order();
  std::vector<PointRef> act(n * n);
  for (ElementRef x = 0; x < n; ++x)
    for (ElementRef s = 0; s < n; ++s) act[x * n + s] = monoid->product(x, s);
  return EtaleAction(std::move(monoid), std::move(presheaf), std::move(act));
}

ValidationReport validate_action(const EtaleAction& a, const SweepPolicy& law) {
  ValidationReport report;
  report.merge(validate_presheaf(a.presheaf()), "presheaf/");
  const auto& s_ = a.monoid();
  const auto& p = a.presheaf();
  const auto& base = p.base();
  const auto n = s_.order();
  const auto xs = p.size();

  for (BaseRef i = 0; i < base.size(); ++i)
    for (BaseRef j = 0; j < base.size(); ++j)
      if (base.elements[base(i, j)] !=
          s_.product(base.elements[i], base.elements[j]))
        report.add("base-meet", {i, j});

  for (PointRef x = 0; x < xs; ++x)
    for (auto e : s_.idempotents())
      if (a.act(x, e) != p.restrict(x, a.base_of(e)))
        report.add("extends-restriction", {x, e});

  auto law_check = [&](std::size_t x, std::size_t s, std::size_t t) {
    auto lhs = a.act(a.act(PointRef(x), ElementRef(s)), ElementRef(t));
    auto rhs = a.act(PointRef(x), s_.product(ElementRef(s), ElementRef(t)));
    if (lhs != rhs) report.add("action-law", {x, s, t});
  };
  if (xs * n * n <= law.exhaustive_limit) {
    for (std::size_t x = 0; x < xs; ++x)
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) law_check(x, s, t);
  } else {
    std::mt19937_64 rng(law.seed);
    std::uniform_int_distribution<std::size_t> px(0, xs - 1), ps(0, n - 1);
    for (std::size_t i = 0; i < law.samples; ++i) {
      auto x = px(rng);
      auto s = ps(rng);
      law_check(x, s, ps(rng));
    }
  }

  for (PointRef x = 0; x < xs; ++x) {
    auto e = base.elements[p.proj(x)];
    for (ElementRef s = 0; s < n; ++s) {
      auto conj = s_.product(s_.inverse(s), s_.product(e, s));
      if (p.proj(a.act(x, s)) != a.base_of(conj))
        report.add("fiber-preservation", {x, s});
    }
  }

  for (BaseRef e = 0; e < base.size(); ++e) {
    auto fiber = p.fiber(e);
    for (auto x : fiber)
      for (auto y : fiber) {
        if (y <= x) continue;
        auto d = p.distance(x, y);
        for (ElementRef s = 0; s < n; ++s)
          if (p.distance(a.act(x, s), a.act(y, s)) > d)
            report.add("lipschitz", {x, y, s});
      }
  }
  return report;
}

IsometryCheck check_theta_isometry(const EtaleAction& a, ElementRef s) {
  a.monoid().check(s);
  const auto& p = a.presheaf();
  auto r = a.base_of(a.monoid().ran(s));
  std::vector<PointRef> domain;
  for (PointRef x = 0; x < p.size(); ++x) domain.push_back(p.restrict(x, r));
  std::sort(domain.begin(), domain.end());
  domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
  for (auto x : domain)
    for (auto y : domain) {
      if (y <= x) continue;
      if (p.distance(x, y) != p.distance(a.act(x, s), a.act(y, s)))
        return {false, std::make_pair(x, y)};
    }
  return {};
}

std::optional<std::uint32_t> coboundedness_constant(const EtaleAction& a,
                                                     PointRef x1) {
  if (x1 >= a.presheaf().size() || !a.in_identity_fiber(x1))
    throw PreconditionError("basepoint is not in the identity fiber", {x1});
  const auto& p = a.presheaf();
  constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> best(p.size(), kNone);
  for (auto b : a.identity_fiber()) {
    auto d = p.distance(x1, b).value();
    for (ElementRef s = 0; s < a.monoid().order(); ++s) {
      auto y = a.act(b, s);
      best[y] = std::min(best[y], d);
    }
  }
  auto worst = *std::max_element(best.begin(), best.end());
  if (worst == kNone) return std::nullopt;
  return worst;
}

std::vector<ElementRef> qualifying_elements(const EtaleAction& a, PointRef y1,
                                            std::uint32_t radius) {
  std::vector<ElementRef> out;
  for (ElementRef s = 0; s < a.monoid().order(); ++s) {
    auto d = a.distance(a.act(y1, s), a.act(y1, a.monoid().dom(s)));
    if (d <= Distance(radius)) out.push_back(s);
  }
  return out;
}

bool in_coset(const InverseMonoid& monoid, ElementRef s, ElementRef f) {
  for (auto e : monoid.idempotents())
    if (monoid.product(f, e) == s) return true;
  return false;
}

bool covers(const InverseMonoid& monoid, std::span<const ElementRef> cover,
            std::span<const ElementRef> set) {
  for (auto s : set) {
    bool hit = false;
    for (auto f : cover)
      if (in_coset(monoid, s, f)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

ProperWitness properness_witness(const EtaleAction& a, PointRef y1,
                                 std::uint32_t radius) {
  if (y1 >= a.presheaf().size() || !a.in_identity_fiber(y1))
    throw PreconditionError("basepoint is not in the identity fiber", {y1});
  const auto& m = a.monoid();
  ProperWitness out;
  out.qualifying = qualifying_elements(a, y1, radius);
  const auto q = out.qualifying.size();
  if (q == 0) {
    out.exact = true;
    return out;
  }
  std::vector<std::int64_t> slot(m.order(), -1);
  for (std::size_t i = 0; i < q; ++i) slot[out.qualifying[i]] = std::int64_t(i);
  const auto words = (q + 63) / 64;

  // Distinct nonempty traces f E(S) n Q, each kept with its least f.
  struct Candidate {
    ElementRef rep;
    Bits bits;
  };
  std::vector<Candidate> candidates;
  for (ElementRef f = 0; f < m.order(); ++f) {
    Bits bits(words, 0);
    bool any = false;
    for (auto e : m.idempotents()) {
      auto fe = m.product(f, e);
      if (slot[fe] >= 0) {
        bits[std::size_t(slot[fe]) / 64] |= 1ULL << (std::size_t(slot[fe]) % 64);
        any = true;
      }
    }
    if (!any) continue;
    bool seen = false;
    for (const auto& c : candidates)
      if (c.bits == bits) {
        seen = true;
        break;
      }
    if (!seen) candidates.push_back({f, std::move(bits)});
  }
  std::vector<Candidate> kept;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < candidates.size() && !dominated; ++j)
      dominated = j != i && subset_of(candidates[i].bits, candidates[j].bits) &&
                  candidates[i].bits != candidates[j].bits;
    if (!dominated) kept.push_back(candidates[i]);
  }

  auto full = [&](const Bits& b) { return popcount(b) == q; };
  if (kept.size() <= 20) {
    const auto c = kept.size();
    for (std::size_t k = 1; k <= c && out.cover.empty(); ++k) {
      // Lexicographic k-subsets of the candidate list.
      std::vector<std::size_t> pick(k);
      for (std::size_t i = 0; i < k; ++i) pick[i] = i;
      while (true) {
        Bits acc(words, 0);
        for (auto i : pick)
          for (std::size_t w = 0; w < words; ++w) acc[w] |= kept[i].bits[w];
        if (full(acc)) {
          for (auto i : pick) out.cover.push_back(kept[i].rep);
          break;
        }
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == c - k + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
    out.exact = true;
  } else {
    Bits acc(words, 0);
    while (!full(acc)) {
      std::size_t best = 0, best_gain = 0;
      for (std::size_t i = 0; i < kept.size(); ++i) {
        std::size_t gain = 0;
        for (std::size_t w = 0; w < words; ++w)
          gain += std::size_t(__builtin_popcountll(kept[i].bits[w] & ~acc[w]));
        if (gain > best_gain) {
          best_gain = gain;
          best = i;
        }
      }
      for (std::size_t w = 0; w < words; ++w) acc[w] |= kept[best].bits[w];
      out.cover.push_back(kept[best].rep);
    }
  }
  std::sort(out.cover.begin(), out.cover.end());
  return out;
}

BasepointShift check_basepoint_shift(const EtaleAction& a, PointRef y1,
                                     PointRef z1, std::uint32_t radius) {
  if (!a.in_identity_fiber(y1) || !a.in_identity_fiber(z1))
    throw PreconditionError("basepoints must lie in the identity fiber", {y1, z1});
  BasepointShift out;
  out.shift = a.distance(y1, z1);
  const auto two_d = Distance(2 * out.shift.value());
  const auto& m = a.monoid();
  for (ElementRef s = 0; s < m.order(); ++s) {
    auto dy = a.distance(a.act(y1, s), a.act(y1, m.dom(s)));
    auto dz = a.distance(a.act(z1, s), a.act(z1, m.dom(s)));
    if (dy > dz + two_d) out.inequality = false;
  }
  auto wide = properness_witness(a, y1, radius + two_d.value());
  auto narrow = qualifying_elements(a, z1, radius);
  out.cover = covers(m, wide.cover, narrow);
  return out;
}

}  // namespace invgeo
