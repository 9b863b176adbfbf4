#ifndef AWG_INVOLUTIONS_HPP
#define AWG_INVOLUTIONS_HPP

#include <array>
#include <optional>

#include "awg/core.hpp"

namespace awg {

enum class CycleKind { PosTransposition, NegTransposition, NegOneCycle, FixedPoint };

/// One cycle of a labelled cycle form. For transpositions a < b and the label
/// is v_a; for 1-cycles b == a.
struct LabelledCycle {
  CycleKind kind;
  std::size_t a;
  std::size_t b;
  Label label;

  bool is_transposition() const noexcept {
    return kind == CycleKind::PosTransposition || kind == CycleKind::NegTransposition;
  }

  friend bool operator==(const LabelledCycle&, const LabelledCycle&) = default;
};

/// (m, k_e, k_o, l): transpositions, even- and odd-labelled negative
/// 1-cycles, fixed points.
struct LabelledCycleType {
  int m = 0;
  int k_e = 0;
  int k_o = 0;
  int l = 0;

  int rank() const noexcept { return 2 * m + k_e + k_o + l; }
  bool is_identity() const noexcept { return m == 0 && k_e == 0 && k_o == 0; }

  friend bool operator==(const LabelledCycleType&, const LabelledCycleType&) = default;
  friend auto operator<=>(const LabelledCycleType&, const LabelledCycleType&) = default;
};

inline std::string to_string(const LabelledCycleType& t) {
  return "(" + std::to_string(t.m) + "," + std::to_string(t.k_e) + "," +
         std::to_string(t.k_o) + "," + std::to_string(t.l) + ")";
}

struct LabelledCycleForm {
  std::size_t n = 0;
  /// Sorted by smallest point; covers every point exactly once.
  std::vector<LabelledCycle> cycles;

  LabelledCycleType type() const noexcept {
    LabelledCycleType t;
    for (const auto& c : cycles) {
      switch (c.kind) {
        case CycleKind::PosTransposition:
        case CycleKind::NegTransposition: ++t.m; break;
        case CycleKind::NegOneCycle: (detail::mod(c.label, 2) == 0 ? t.k_e : t.k_o)++; break;
        case CycleKind::FixedPoint: ++t.l; break;
      }
    }
    return t;
  }

  /// Number of positive transpositions.
  int positive_transpositions() const noexcept {
    return static_cast<int>(std::count_if(cycles.begin(), cycles.end(), [](const auto& c) {
      return c.kind == CycleKind::PosTransposition;
    }));
  }
};

class NotAnInvolution : public Error {
 public:
  NotAnInvolution() : Error("not an involution") {}
};

/// Structural test: sigma is a product of signed transpositions
/// and signed 1-cycles with v_b = -v_a over positive transpositions, v_b = v_a
/// over negative ones and v_d = 0 on fixed points. Identity is rejected.
inline bool is_structural_involution(const AffineElement& x) {
  const auto& s = x.sigma();
  const auto& v = x.v();
  bool nontrivial = false;
  for (std::size_t i = 0; i < x.rank(); ++i) {
    auto t = s.target(i);
    if (t == i) {
      if (s.sign(i) > 0 && v[i] != 0) return false;
      if (s.sign(i) < 0) nontrivial = true;
      continue;
    }
    if (s.target(t) != i || s.sign(t) != s.sign(i)) return false;
    if (s.sign(i) > 0 ? v[t] != -v[i] : v[t] != v[i]) return false;
    nontrivial = true;
  }
  return nontrivial;
}

/// True iff x is not the identity and x^2 = 1. Cross-checks the structural
/// criterion and throws std::logic_error if the two ever disagree.
inline bool is_involution(const AffineElement& x) {
  bool mult = !x.is_identity() && multiply(x, x).is_identity();
  if (mult != is_structural_involution(x))
    throw std::logic_error("involution criteria disagree");
  return mult;
}

inline LabelledCycleForm labelled_cycle_form(const AffineElement& x) {
  if (!is_structural_involution(x)) throw NotAnInvolution();
  LabelledCycleForm form;
  form.n = x.rank();
  const auto& s = x.sigma();
  for (std::size_t i = 0; i < x.rank(); ++i) {
    auto t = s.target(i);
    if (t < i) continue;
    if (t == i) {
      form.cycles.push_back({s.sign(i) < 0 ? CycleKind::NegOneCycle : CycleKind::FixedPoint,
                             i, i, x.v()[i]});
    } else {
      form.cycles.push_back({s.sign(i) > 0 ? CycleKind::PosTransposition
                                           : CycleKind::NegTransposition,
                             i, t, x.v()[i]});
    }
  }
  return form;
}

/// Rebuilds the element from a cycle form. Cycles may list a transposition
/// in either orientation; the label always belongs to `a`.
inline AffineElement to_element(const LabelledCycleForm& form) {
  const auto n = form.n;
  std::vector<std::pair<std::size_t, int>> img(n, {0, 0});
  std::vector<Label> v(n, 0);
  std::vector<bool> seen(n, false);
  auto claim = [&](std::size_t p) {
    if (p >= n) throw Error("cycle point out of range");
    if (seen[p]) throw Error("point appears in more than one cycle");
    seen[p] = true;
  };
  for (const auto& c : form.cycles) {
    switch (c.kind) {
      case CycleKind::FixedPoint:
      case CycleKind::NegOneCycle:
        claim(c.a);
        img[c.a] = {c.a, c.kind == CycleKind::FixedPoint ? 1 : -1};
        v[c.a] = c.label;
        break;
      case CycleKind::PosTransposition:
      case CycleKind::NegTransposition: {
        if (c.a == c.b) throw Error("transposition needs two distinct points");
        claim(c.a);
        claim(c.b);
        bool pos = c.kind == CycleKind::PosTransposition;
        img[c.a] = {c.b, pos ? 1 : -1};
        img[c.b] = {c.a, pos ? 1 : -1};
        v[c.a] = c.label;
        v[c.b] = pos ? detail::checked_neg(c.label) : c.label;
        break;
      }
    }
  }
  for (std::size_t p = 0; p < n; ++p)
    if (!seen[p]) img[p] = {p, 1};
  return {SignedPermutation::from_images(img), std::move(v)};
}

inline LabelledCycleType labelled_cycle_type(const AffineElement& x) {
  if (!is_involution(x)) throw NotAnInvolution();
  return labelled_cycle_form(x).type();
}

struct Invariants {
  Label sum = 0;       // coordinate sum of v
  Label sum_plus = 0;  // sum of |v_i|
  int minus = 0;       // minus signs in sigma
  std::optional<Label> f;  // involutions only
};

/// f = 2 * sum over transpositions of v_a (a the smaller point) plus the sum
/// of labels on negative 1-cycles.
inline Label f_value(const LabelledCycleForm& form) {
  Label f = 0;
  for (const auto& c : form.cycles) {
    if (c.is_transposition())
      f = detail::checked_add(f, detail::checked_mul(2, c.label));
    else if (c.kind == CycleKind::NegOneCycle)
      f = detail::checked_add(f, c.label);
  }
  return f;
}

inline Invariants invariants(const AffineElement& x) {
  Invariants r;
  for (auto c : x.v()) {
    r.sum = detail::checked_add(r.sum, c);
    r.sum_plus = detail::checked_add(r.sum_plus, c < 0 ? detail::checked_neg(c) : c);
  }
  r.minus = x.sigma().minus_count();
  if (is_structural_involution(x)) r.f = f_value(labelled_cycle_form(x));
  return r;
}

/// The automorphism of W(C~n) induced by the Coxeter graph symmetry
/// r_i <-> r_(n+2-i). Points are reversed (i -> n+1-i); a label lambda over a
/// plus sign becomes -lambda, over a minus sign 1 - lambda.
inline AffineElement omega(const AffineElement& x) {
  const auto n = x.rank();
  std::vector<std::pair<std::size_t, int>> img(n);
  std::vector<Label> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto ri = n - 1 - i;
    img[ri] = {n - 1 - x.sigma().target(i), x.sigma().sign(i)};
  }
  auto sigma = SignedPermutation::from_images(img);
  // v'_k = (1 - s'(pre(k)))/2 - v_(n-1-k)
  auto inv = sigma.inverse();
  for (std::size_t k = 0; k < n; ++k) {
    Label shift = inv.sign(k) < 0 ? 1 : 0;
    v[k] = detail::checked_sub(shift, x.v()[n - 1 - k]);
  }
  return {std::move(sigma), std::move(v)};
}

/// All signed involutions of rank n with m transpositions (either sign),
/// k negative 1-cycles and l fixed points, in lexicographic construction
/// order. The identity is included when m == k == 0.
inline std::vector<SignedPermutation> enumerate_signed_involutions(int n, int m, int k, int l,
                                                                   bool positive_only = false) {
  std::vector<SignedPermutation> out;
  if (n < 0 || m < 0 || k < 0 || l < 0 || 2 * m + k + l != n) return out;
  std::vector<std::pair<std::size_t, int>> img(n, {0, 0});
  std::vector<bool> used(n, false);
  std::function<void(int, int, int, int)> rec = [&](int p, int mm, int kk, int ll) {
    while (p < n && used[p]) ++p;
    if (p == n) {
      out.push_back(SignedPermutation::from_images(img));
      return;
    }
    used[p] = true;
    if (mm > 0) {
      for (int q = p + 1; q < n; ++q) {
        if (used[q]) continue;
        used[q] = true;
        for (int sg : {1, -1}) {
          if (positive_only && sg < 0) continue;
          img[p] = {static_cast<std::size_t>(q), sg};
          img[q] = {static_cast<std::size_t>(p), sg};
          rec(p + 1, mm - 1, kk, ll);
        }
        used[q] = false;
      }
    }
    if (kk > 0) {
      img[p] = {static_cast<std::size_t>(p), -1};
      rec(p + 1, mm, kk - 1, ll);
    }
    if (ll > 0) {
      img[p] = {static_cast<std::size_t>(p), 1};
      rec(p + 1, mm, kk, ll - 1);
    }
    used[p] = false;
  };
  rec(0, m, k, l);
  return out;
}

}  // namespace awg

#endif  // AWG_INVOLUTIONS_HPP
