#ifndef AWG_PATHS_HPP
#define AWG_PATHS_HPP

// Constructive bounded-length paths to the canonical representative for the
// classes whose diameter bound is proved by explicit construction:
//   (m,0,0,0)            in B, Bbar, D   length <= 3 (4 in D)
//   (1,k_e>2,0,0)        in B, D         length <= n+1
//   (m>1,k_e>=2,0,0)     in B, D         length <= n-1
// Each construction emits explicit commuting moves first and closes the
// remaining gap with a depth-limited search; the bound is always enforced.

#include "awg/graph.hpp"

namespace awg {

class NotConstructive : public Error {
 public:
  NotConstructive() : Error("descriptor is not one of the constructive cases") {}
};

enum class ConstructiveCase { AllTranspositions, OneTransposition, SeveralTranspositions };

inline std::optional<ConstructiveCase> constructive_case(const ClassDescriptor& d) {
  const auto f = d.family.tag();
  const auto& t = d.type;
  if (t.l != 0 || t.k_o != 0 || t.m == 0) return std::nullopt;
  if (t.k_e == 0 && (f == Family::AffineB || f == Family::AffineBbar || f == Family::AffineD))
    return ConstructiveCase::AllTranspositions;
  if (f != Family::AffineB && f != Family::AffineD) return std::nullopt;
  if (t.m == 1 && t.k_e > 2) return ConstructiveCase::OneTransposition;
  if (t.m > 1 && t.k_e >= 2) return ConstructiveCase::SeveralTranspositions;
  return std::nullopt;
}

/// The five-vertex chain x, x1, x2, x3, w1 for
/// x = (+1 5)^lambda (-2)^2p (-3)^2q (-4)^2r in B~5 with lambda+p+q+r odd.
inline PathWitness rank_five_chain(Label lambda, Label p, Label q, Label r) {
  using detail::checked_add;
  using detail::checked_mul;
  using detail::checked_sub;
  if (detail::mod(lambda + p + q + r, 2) != 1) throw Error("rank-five chain needs an odd label sum");
  auto neg = [](std::size_t a, Label lab) {
    return LabelledCycle{CycleKind::NegOneCycle, a - 1, a - 1, lab};
  };
  auto trans = [](bool pos, std::size_t a, std::size_t b, Label lab) {
    return LabelledCycle{pos ? CycleKind::PosTransposition : CycleKind::NegTransposition, a - 1,
                         b - 1, lab};
  };
  auto make = [](std::vector<LabelledCycle> cycles) { return to_element({5, std::move(cycles)}); };
  Label pq = checked_add(p, q);
  Label one_minus_pq = checked_sub(1, pq);
  PathWitness w;
  w.vertices.push_back(make({trans(true, 1, 5, lambda), neg(2, 2 * p), neg(3, 2 * q), neg(4, 2 * r)}));
  w.vertices.push_back(make({trans(false, 1, 5, checked_sub(one_minus_pq, r)), neg(2, 2 * p),
                             neg(3, 2 * q), neg(4, 2 * r)}));
  w.vertices.push_back(make({trans(false, 2, 3, pq), neg(1, checked_mul(2, one_minus_pq)),
                             neg(4, checked_mul(2, r)), neg(5, checked_mul(-2, r))}));
  w.vertices.push_back(make({trans(false, 4, 5, 0), neg(1, checked_mul(2, one_minus_pq)),
                             neg(2, checked_mul(2, pq)), neg(3, 0)}));
  w.vertices.push_back(make({trans(false, 1, 2, 1), neg(3, 0), neg(4, 0), neg(5, 0)}));
  return w;
}

namespace detail {

/// Removes cycles from a walk so that no vertex repeats.
inline void shortcut(PathWitness& w) {
  std::vector<AffineElement> out;
  std::unordered_map<AffineElement, std::size_t> pos;
  for (auto& v : w.vertices) {
    if (auto it = pos.find(v); it != pos.end()) {
      for (std::size_t i = it->second + 1; i < out.size(); ++i) pos.erase(out[i]);
      out.resize(it->second + 1);
      continue;
    }
    pos.emplace(v, out.size());
    out.push_back(std::move(v));
  }
  w.vertices = std::move(out);
}

/// A neighbour with every transposition sign flipped (optionally keeping
/// one transposition), labels in {0, 1} chosen to stay in the class.
inline std::optional<AffineElement> flipped_neighbor(const AffineElement& x,
                                                     const ClassDescriptor& d) {
  auto form = labelled_cycle_form(x);
  std::vector<std::size_t> trans;
  for (std::size_t i = 0; i < form.cycles.size(); ++i)
    if (form.cycles[i].is_transposition()) trans.push_back(i);
  auto flip = [](CycleKind k) {
    return k == CycleKind::PosTransposition ? CycleKind::NegTransposition
                                            : CycleKind::PosTransposition;
  };
  const std::size_t none = form.cycles.size();
  std::vector<std::size_t> keeps{none};
  keeps.insert(keeps.end(), trans.begin(), trans.end());
  for (auto keep : keeps) {
    for (std::size_t bumped = 0; bumped <= trans.size(); ++bumped) {
      auto g = form;
      for (std::size_t j = 0; j < trans.size(); ++j) {
        auto& c = g.cycles[trans[j]];
        if (trans[j] == keep) continue;
        c.kind = flip(c.kind);
        c.label = j + 1 == bumped ? 1 : 0;
      }
      if (bumped > 0 && trans[bumped - 1] == keep) continue;
      auto y = to_element(g);
      if (y != x && in_class(y, d) && commutes_fast(x, y)) return y;
    }
  }
  return std::nullopt;
}

/// One move that turns a transposition endpoint p >= 2m into (-p)^0 by
/// shifting the transposition onto two free even 1-cycles.
inline std::optional<AffineElement> freeing_move(const AffineElement& x, const ClassDescriptor& d) {
  const auto n = x.rank();
  const auto boundary = static_cast<std::size_t>(2 * d.type.m);
  auto form = labelled_cycle_form(x);
  auto frozen = [&](const LabelledCycle& c) {
    return c.kind == CycleKind::NegOneCycle && c.a >= boundary && c.label == 0;
  };
  std::vector<std::size_t> free_ones;
  for (std::size_t i = 0; i < form.cycles.size(); ++i) {
    const auto& c = form.cycles[i];
    if (c.kind == CycleKind::NegOneCycle && !frozen(c)) free_ones.push_back(i);
  }
  if (free_ones.size() < 2) return std::nullopt;
  std::stable_sort(free_ones.begin(), free_ones.end(), [&](auto i, auto j) {
    return (form.cycles[i].a < boundary) > (form.cycles[j].a < boundary);
  });
  // The transposition with the largest endpoint beyond the boundary.
  std::optional<std::size_t> ti;
  for (std::size_t i = 0; i < form.cycles.size(); ++i) {
    const auto& c = form.cycles[i];
    if (c.is_transposition() && c.b >= boundary && (!ti || c.b > form.cycles[*ti].b)) ti = i;
  }
  if (!ti) return std::nullopt;
  const auto t = form.cycles[*ti];
  const auto& c1 = form.cycles[free_ones[0]];
  const auto& c2 = form.cycles[free_ones[1]];
  Label half = (c1.label + c2.label) / 2;
  std::size_t p = t.b, other = t.a;
  if (t.a >= boundary && t.b < boundary) std::swap(p, other);
  // Positive: mu_a - mu_b = 2 lambda. Negative: mu_a + mu_b = 2 lambda.
  Label twice = checked_mul(2, t.label);
  Label other_label = (t.kind == CycleKind::PosTransposition && other == t.b) ? -twice : twice;
  LabelledCycleForm g{n, {}};
  for (std::size_t i = 0; i < form.cycles.size(); ++i)
    if (i != *ti && i != free_ones[0] && i != free_ones[1]) g.cycles.push_back(form.cycles[i]);
  g.cycles.push_back({CycleKind::NegTransposition, std::min(c1.a, c2.a), std::max(c1.a, c2.a), half});
  g.cycles.push_back({CycleKind::NegOneCycle, p, p, 0});
  g.cycles.push_back({CycleKind::NegOneCycle, other, other, other_label});
  auto y = to_element(g);
  if (y == x || !in_class(y, d) || !commutes_fast(x, y)) return std::nullopt;
  return y;
}

inline std::optional<PathWitness> close_gap(const AffineElement& from, const AffineElement& to,
                                            const ClassDescriptor& d, int depth) {
  if (depth < 0) return std::nullopt;
  Label start = std::max(from.max_abs_label(), to.max_abs_label());
  for (Label L = start; L <= start + 2; ++L) {
    NeighborCache cache(d, L);
    if (auto w = bidirectional_search(from, to, cache, depth, 400'000)) return w;
  }
  return std::nullopt;
}

}  // namespace detail

/// Upper bound on the constructive path length for d.
inline int constructive_bound(const ClassDescriptor& d) {
  if (!constructive_case(d)) throw NotConstructive();
  return predict_connectivity(d).bound;
}

/// A verified path from x to canonical_representative(d) of length at most
/// constructive_bound(d).
inline PathWitness constructive_path(const AffineElement& x, const ClassDescriptor& d) {
  auto kind = constructive_case(d);
  if (!kind) throw NotConstructive();
  if (class_of(x, d.family) != d) throw ClassMismatch();
  const int bound = constructive_bound(d);
  const auto target = canonical_representative(d);
  const auto n = x.rank();

  PathWitness path{{x}};
  if (*kind == ConstructiveCase::AllTranspositions) {
    if (x != target)
      if (auto y = detail::flipped_neighbor(x, d)) path.vertices.push_back(*y);
  } else {
    auto form = labelled_cycle_form(x);
    const auto& c0 = form.cycles.front();
    bool chain_shape = n == 5 && d.family.tag() == Family::AffineB && c0.kind == CycleKind::PosTransposition &&
                       c0.a == 0 && c0.b == 4 && d.split.f_mod4 == 2;
    if (chain_shape) {
      auto w = rank_five_chain(c0.label, x.v()[1] / 2, x.v()[2] / 2, x.v()[3] / 2);
      if (w.vertices.back() == target) path = std::move(w);
    }
    while (path.vertices.back() != target && static_cast<int>(path.length()) < bound - 1 &&
           !chain_shape) {
      auto y = detail::freeing_move(path.vertices.back(), d);
      if (!y) break;
      path.vertices.push_back(std::move(*y));
    }
  }
  detail::shortcut(path);
  if (path.vertices.back() != target) {
    auto rest = detail::close_gap(path.vertices.back(), target, d,
                                  bound - static_cast<int>(path.length()));
    if (rest) {
      path.vertices.insert(path.vertices.end(), rest->vertices.begin() + 1, rest->vertices.end());
    } else {
      // The explicit moves overshot; search from x directly.
      auto whole = detail::close_gap(x, target, d, bound);
      if (!whole) throw std::logic_error("no path within the constructive bound");
      path = std::move(*whole);
    }
    detail::shortcut(path);
  }
  if (auto defect = witness_defect(path, d); !defect.empty())
    throw std::logic_error("constructive path invalid: " + defect);
  if (static_cast<int>(path.length()) > bound)
    throw std::logic_error("constructive path exceeds its bound");
  return path;
}

}  // namespace awg

#endif  // AWG_PATHS_HPP
