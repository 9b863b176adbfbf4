#ifndef AWG_COMMUTING_HPP
#define AWG_COMMUTING_HPP

// Commuting predicates for involutions and structural enumeration of the
// commuting neighbours of a vertex inside a class window.
//
// Commutation of two involutions decomposes exactly over the orbits of
// <sigma_x, sigma_y> on points: both products only mix coordinates within an
// orbit. Orbits of size one and two are decided by the 1-cycle and
// transposition rules; larger orbits by the commutator on that orbit.

#include "awg/conjugacy.hpp"

namespace awg {

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what) : Error("budget exceeded: " + what) {}
};

inline bool commutes_oracle(const AffineElement& x, const AffineElement& y) {
  if (x.rank() != y.rank()) throw RankMismatch(x.rank(), y.rank());
  return multiply(x, y) == multiply(y, x);
}

namespace detail {

/// xy == yx restricted to the coordinates in `orbit`; both are involutions.
inline bool commute_on(const SignedPermutation& sx, const std::vector<Label>& vx,
                       const SignedPermutation& sy, const std::vector<Label>& vy,
                       const std::vector<std::size_t>& orbit) {
  for (auto i : orbit) {
    auto a = sx.target(i);
    auto b = sy.target(i);
    if (sy.target(a) != sx.target(b) || sx.sign(i) * sy.sign(a) != sy.sign(i) * sx.sign(b))
      return false;
    // (xy).v[i] = s_y(i) v_x[t_y(i)] + v_y[i]; (yx).v[i] symmetric.
    Label lhs = checked_add(sy.sign(i) < 0 ? checked_neg(vx[b]) : vx[b], vy[i]);
    Label rhs = checked_add(sx.sign(i) < 0 ? checked_neg(vy[a]) : vy[a], vx[i]);
    if (lhs != rhs) return false;
  }
  return true;
}

inline bool commute_on(const AffineElement& x, const AffineElement& y,
                       const std::vector<std::size_t>& orbit) {
  return commute_on(x.sigma(), x.v(), y.sigma(), y.v(), orbit);
}

/// Orbits of <sigma_x, sigma_y> on points, each sorted, in order of least point.
inline std::vector<std::vector<std::size_t>> joint_orbits(const SignedPermutation& sx,
                                                          const SignedPermutation& sy) {
  const auto n = sx.rank();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t p = 0; p < n; ++p) {
    if (seen[p]) continue;
    std::vector<std::size_t> orbit{p};
    seen[p] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (auto q : {sx.target(orbit[k]), sy.target(orbit[k])})
        if (!seen[q]) {
          seen[q] = true;
          orbit.push_back(q);
        }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

/// Rule for a transposition (sign, label at the smaller point) against two
/// 1-cycles on the same points.
inline bool transposition_vs_one_cycles(const AffineElement& t, const AffineElement& o,
                                        std::size_t a, std::size_t b) {
  bool neg_a = o.sigma().sign(a) < 0;
  bool neg_b = o.sigma().sign(b) < 0;
  if (!neg_a && !neg_b) return true;
  if (neg_a != neg_b) return false;
  Label twice = checked_mul(2, t.v()[a]);
  Label mu = o.v()[a], nu = o.v()[b];
  return t.sigma().sign(a) > 0 ? checked_sub(mu, nu) == twice : checked_add(mu, nu) == twice;
}

}  // namespace detail

/// Orbit-wise commuting test for two involutions; always agrees with
/// commutes_oracle.
inline bool commutes_fast(const AffineElement& x, const AffineElement& y) {
  if (x.rank() != y.rank()) throw RankMismatch(x.rank(), y.rank());
  if (!is_structural_involution(x) || !is_structural_involution(y)) throw NotAnInvolution();
  const auto& sx = x.sigma();
  const auto& sy = y.sigma();
  const auto n = x.rank();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> orbit;
  for (std::size_t p = 0; p < n; ++p) {
    if (seen[p]) continue;
    orbit.assign(1, p);
    seen[p] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (auto q : {sx.target(orbit[k]), sy.target(orbit[k])})
        if (!seen[q]) {
          seen[q] = true;
          orbit.push_back(q);
        }
    if (orbit.size() == 1) {
      // Two negative 1-cycles commute iff their labels agree; a fixed point
      // commutes with anything on that point.
      if (sx.sign(p) < 0 && sy.sign(p) < 0 && x.v()[p] != y.v()[p]) return false;
      continue;
    }
    if (orbit.size() == 2) {
      auto a = std::min(orbit[0], orbit[1]);
      auto b = std::max(orbit[0], orbit[1]);
      bool tx = sx.target(a) == b;
      bool ty = sy.target(a) == b;
      if (tx && ty) {
        if (sx.sign(a) == sy.sign(a) && x.v()[a] != y.v()[a]) return false;
      } else if (tx) {
        if (!detail::transposition_vs_one_cycles(x, y, a, b)) return false;
      } else {
        if (!detail::transposition_vs_one_cycles(y, x, a, b)) return false;
      }
      continue;
    }
    if (!detail::commute_on(x, y, orbit)) return false;
  }
  return true;
}

/// Signed involutions commuting with s having m transpositions, k negative
/// 1-cycles and l fixed points.
inline std::vector<SignedPermutation> centralizer_involutions(const SignedPermutation& s, int m,
                                                              int k, int l,
                                                              bool positive_only = false) {
  const auto n = s.rank();
  std::vector<SignedPermutation> out;
  std::vector<long> tgt(n, -1);
  std::vector<int> sgn(n, 0);
  // Assign y(p) = sg*q, closing under y^2 = 1 and commutation with s.
  auto assign = [&](std::size_t p, std::size_t q, int sg, std::vector<std::size_t>& trail) {
    std::vector<std::tuple<std::size_t, std::size_t, int>> work{{p, q, sg}};
    while (!work.empty()) {
      auto [a, b, g] = work.back();
      work.pop_back();
      for (auto [u, w] : {std::pair{a, b}, std::pair{b, a}}) {
        if (tgt[u] >= 0) {
          if (static_cast<std::size_t>(tgt[u]) != w || sgn[u] != g) return false;
          continue;
        }
        if (positive_only && g < 0) return false;
        tgt[u] = static_cast<long>(w);
        sgn[u] = g;
        trail.push_back(u);
        // y(s(e_u)) = s(y(e_u))
        work.emplace_back(s.target(u), s.target(w), s.sign(u) * g * s.sign(w));
      }
    }
    return true;
  };
  std::function<void()> rec = [&] {
    std::size_t p = 0;
    while (p < n && tgt[p] >= 0) ++p;
    if (p == n) {
      int mm = 0, kk = 0, ll = 0;
      std::vector<std::pair<std::size_t, int>> img(n);
      for (std::size_t i = 0; i < n; ++i) {
        img[i] = {static_cast<std::size_t>(tgt[i]), sgn[i]};
        if (static_cast<std::size_t>(tgt[i]) > i) ++mm;
        else if (static_cast<std::size_t>(tgt[i]) == i) (sgn[i] < 0 ? kk : ll)++;
      }
      if (mm == m && kk == k && ll == l) out.push_back(SignedPermutation::from_images(img));
      return;
    }
    for (std::size_t q = p; q < n; ++q) {
      if (tgt[q] >= 0) continue;
      for (int sg : {1, -1}) {
        std::vector<std::size_t> trail;
        if (assign(p, q, sg, trail)) rec();
        for (auto u : trail) {
          tgt[u] = -1;
          sgn[u] = 0;
        }
      }
    }
  };
  rec();
  return out;
}

namespace detail {

/// Membership plus residues, for elements already known to be involutions.
inline bool in_class(const AffineElement& y, const ClassDescriptor& d) {
  if (!member_of(y, d.family)) return false;
  auto form = labelled_cycle_form(y);
  if (form.type() != d.type) return false;
  return residues_for(d.family.tag(), form, y.sigma().minus_count()) == d.split;
}

/// in_class for the involution (s, v) whose cycle type is already known to
/// match d, without building the element.
inline bool labels_in_class(const SignedPermutation& s, const std::vector<Label>& v, int minus,
                            const ClassDescriptor& d) {
  Label sum = 0, f = 0, tsum = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    sum += v[i];
    auto t = s.target(i);
    if (t > i) {
      f += 2 * v[i];
      tsum += v[i];
    } else if (t == i && s.sign(i) < 0) {
      f += v[i];
    }
  }
  bool b_ok = mod(sum, 2) == 0;
  bool bbar_ok = mod(sum + minus, 2) == 0;
  switch (d.family.tag()) {
    case Family::AffineA: if (minus != 0 || sum != 0) return false; break;
    case Family::AffineB: if (!b_ok) return false; break;
    case Family::AffineBbar: if (!bbar_ok) return false; break;
    case Family::AffineC: break;
    case Family::AffineD: if (!b_ok || !bbar_ok) return false; break;
  }
  const auto& r = d.split;
  switch (split_kind(d.family.tag(), d.type)) {
    case SplitKind::None: return true;
    case SplitKind::FMod4: return r.f_mod4 == mod(f, 4);
    case SplitKind::FPlusMinusMod4: return r.f_plus_minus_mod4 == mod(f + minus, 4);
    case SplitKind::MinusAndFMod4: return r.f_mod4 == mod(f, 4) && r.minus_mod4 == mod(minus, 4);
    case SplitKind::LabelSumMod2: return r.label_sum_mod2 == mod(tsum, 2);
  }
  return false;
}

/// Calls visit(v) for every label vector over sigma with all |labels| <= L
/// that respects the involution relations, given per-point label callbacks.
struct LabelSlot {
  std::size_t point;
  std::size_t partner;  // == point for 1-cycles
  bool negate_partner;
};

inline std::vector<LabelSlot> label_slots(const SignedPermutation& s) {
  std::vector<LabelSlot> slots;
  for (std::size_t i = 0; i < s.rank(); ++i) {
    auto t = s.target(i);
    if (t > i) slots.push_back({i, t, s.sign(i) > 0});
    else if (t == i && s.sign(i) < 0) slots.push_back({i, i, false});
  }
  return slots;
}

}  // namespace detail

/// Memoizes centralizer_involutions for one cycle type.
class CentralizerCache {
 public:
  CentralizerCache(const LabelledCycleType& t, bool positive_only)
      : t_(t), positive_only_(positive_only) {}

  const std::vector<SignedPermutation>& operator()(const SignedPermutation& s) {
    auto it = cache_.find(s);
    if (it == cache_.end())
      it = cache_.emplace(s, centralizer_involutions(s, t_.m, t_.k_e + t_.k_o, t_.l, positive_only_))
               .first;
    return it->second;
  }

 private:
  LabelledCycleType t_;
  bool positive_only_;
  std::unordered_map<SignedPermutation, std::vector<SignedPermutation>> cache_;
};

/// The y != x in class d with all |labels| <= L that commute with x, in a
/// deterministic order without duplicates.
inline std::vector<AffineElement> neighbors_in_class(const AffineElement& x,
                                                     const ClassDescriptor& d, Label L,
                                                     CentralizerCache* cache = nullptr) {
  std::vector<AffineElement> out;
  const auto& t = d.type;
  const bool type_a = d.family.tag() == Family::AffineA;
  std::vector<SignedPermutation> local;
  if (!cache) local = centralizer_involutions(x.sigma(), t.m, t.k_e + t.k_o, t.l, type_a);
  const auto& candidates = cache ? (*cache)(x.sigma()) : local;
  const auto n = x.rank();
  for (const auto& sy : candidates) {
    auto orbits = detail::joint_orbits(x.sigma(), sy);
    // Local label options per orbit.
    struct Option {
      std::vector<std::pair<std::size_t, Label>> values;
      int even = 0, odd = 0;
    };
    std::vector<std::vector<Option>> options;
    bool dead = false;
    std::vector<Label> scratch(n, 0);
    for (const auto& orbit : orbits) {
      std::vector<detail::LabelSlot> slots;
      for (auto s : detail::label_slots(sy))
        if (std::binary_search(orbit.begin(), orbit.end(), s.point)) slots.push_back(s);
      std::vector<Option> local;
      std::vector<Label> choice(slots.size(), -L);
      while (true) {
        for (auto p : orbit) scratch[p] = 0;
        Option opt;
        for (std::size_t i = 0; i < slots.size(); ++i) {
          const auto& s = slots[i];
          scratch[s.point] = choice[i];
          if (s.partner != s.point) {
            scratch[s.partner] = s.negate_partner ? -choice[i] : choice[i];
          } else {
            (detail::mod(choice[i], 2) == 0 ? opt.even : opt.odd)++;
          }
        }
        if (detail::commute_on(x.sigma(), x.v(), sy, scratch, orbit)) {
          for (auto p : orbit) opt.values.emplace_back(p, scratch[p]);
          local.push_back(std::move(opt));
        }
        std::size_t i = 0;
        while (i < choice.size() && choice[i] == L) choice[i++] = -L;
        if (i == choice.size()) break;
        ++choice[i];
      }
      if (local.empty()) {
        dead = true;
        break;
      }
      options.push_back(std::move(local));
    }
    if (dead) continue;
    std::vector<Label> v(n, 0);
    const int minus = sy.minus_count();
    std::function<void(std::size_t, int, int)> combine = [&](std::size_t o, int even, int odd) {
      if (even > t.k_e || odd > t.k_o) return;
      if (o == options.size()) {
        if (even != t.k_e || odd != t.k_o) return;
        if (sy == x.sigma() && v == x.v()) return;
        if (detail::labels_in_class(sy, v, minus, d)) out.emplace_back(sy, v);
        return;
      }
      for (const auto& opt : options[o]) {
        for (auto [p, val] : opt.values) v[p] = val;
        combine(o + 1, even + opt.even, odd + opt.odd);
      }
    };
    combine(0, 0, 0);
  }
  return out;
}

/// Every member of class d whose labels all satisfy |label| <= L, in
/// deterministic order. Throws BudgetExceeded past max_nodes.
inline std::vector<AffineElement> class_members_in_window(const ClassDescriptor& d, Label L,
                                                          std::size_t max_nodes = 5'000'000) {
  std::vector<AffineElement> out;
  const auto& t = d.type;
  const int n = static_cast<int>(d.family.rank());
  auto sigmas = enumerate_signed_involutions(n, t.m, t.k_e + t.k_o, t.l,
                                             d.family.tag() == Family::AffineA);
  for (const auto& s : sigmas) {
    auto slots = detail::label_slots(s);
    const int minus = s.minus_count();
    std::vector<Label> v(n, 0);
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t i, int even, int odd) {
      if (even > t.k_e || odd > t.k_o) return;
      if (i == slots.size()) {
        if (detail::labels_in_class(s, v, minus, d)) {
          if (out.size() >= max_nodes)
            throw BudgetExceeded("class window has more than " + std::to_string(max_nodes) +
                                 " vertices");
          out.emplace_back(s, v);
        }
        return;
      }
      const auto& sl = slots[i];
      for (Label lab = -L; lab <= L; ++lab) {
        v[sl.point] = lab;
        if (sl.partner != sl.point) {
          v[sl.partner] = sl.negate_partner ? -lab : lab;
          rec(i + 1, even, odd);
        } else if (detail::mod(lab, 2) == 0) {
          rec(i + 1, even + 1, odd);
        } else {
          rec(i + 1, even, odd + 1);
        }
      }
      v[sl.point] = 0;
      if (sl.partner != sl.point) v[sl.partner] = 0;
    };
    rec(0, 0, 0);
  }
  return out;
}

/// Every involution of rank n with all |labels| <= L, grouped by signed
/// involution in construction order.
inline std::vector<AffineElement> involutions_in_window(std::size_t n, Label L,
                                                        bool positive_only = false) {
  std::vector<AffineElement> out;
  const int N = static_cast<int>(n);
  for (int m = 0; 2 * m <= N; ++m)
    for (int k = 0; 2 * m + k <= N; ++k) {
      if (m == 0 && k == 0) continue;
      for (const auto& s : enumerate_signed_involutions(N, m, k, N - 2 * m - k, positive_only)) {
        auto slots = detail::label_slots(s);
        std::vector<Label> v(n, 0);
        std::vector<Label> choice(slots.size(), -L);
        while (true) {
          for (std::size_t i = 0; i < slots.size(); ++i) {
            v[slots[i].point] = choice[i];
            if (slots[i].partner != slots[i].point)
              v[slots[i].partner] = slots[i].negate_partner ? -choice[i] : choice[i];
          }
          out.emplace_back(s, v);
          std::size_t i = 0;
          while (i < choice.size() && choice[i] == L) choice[i++] = -L;
          if (i == choice.size()) break;
          ++choice[i];
        }
      }
    }
  return out;
}

}  // namespace awg

#endif  // AWG_COMMUTING_HPP
