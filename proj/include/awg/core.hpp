#ifndef AWG_CORE_HPP
#define AWG_CORE_HPP

// Exact arithmetic for signed permutations and elements (sigma, v) of the
// classical affine Weyl groups, all modelled inside W(C~n).
//
// Conventions: elements act on the right. For a signed permutation s,
// s(e_i) = sign(i) * e_target(i), and a product st means "s, then t".
// Multiplication is (s, v)(t, u) = (st, v^t + u).
//
// Points are 0-indexed in this API; every text and JSON format is 1-indexed.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace awg {

using Label = std::int64_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RankMismatch : public Error {
 public:
  RankMismatch(std::size_t lhs, std::size_t rhs)
      : Error("rank mismatch: " + std::to_string(lhs) + " vs " +
              std::to_string(rhs)) {}
};

namespace detail {

inline Label checked_add(Label a, Label b) {
  Label r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("label arithmetic overflow");
  return r;
}

inline Label checked_sub(Label a, Label b) {
  Label r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("label arithmetic overflow");
  return r;
}

inline Label checked_mul(Label a, Label b) {
  Label r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("label arithmetic overflow");
  return r;
}

inline Label checked_neg(Label a) { return checked_sub(0, a); }

/// Non-negative residue of a modulo m.
inline int mod(Label a, int m) {
  auto r = static_cast<int>(a % m);
  return r < 0 ? r + m : r;
}

inline void hash_combine(std::size_t& seed, std::size_t value) {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace detail

/// A bijection of {0..n-1} with a sign attached to each point.
class SignedPermutation {
 public:
  SignedPermutation() = default;

  /// Identity of rank n.
  explicit SignedPermutation(std::size_t n) : img_(n) {
    for (std::size_t i = 0; i < n; ++i) img_[i] = static_cast<int>(i) + 1;
  }

  /// Builds from (target, sign) pairs, 0-indexed targets.
  static SignedPermutation from_images(
      const std::vector<std::pair<std::size_t, int>>& images) {
    SignedPermutation s;
    const auto n = images.size();
    s.img_.resize(n);
    std::vector<bool> hit(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      auto [t, sg] = images[i];
      if (t >= n) throw Error("signed permutation target out of range");
      if (sg != 1 && sg != -1) throw Error("sign must be +1 or -1");
      if (hit[t]) throw Error("signed permutation is not a bijection");
      hit[t] = true;
      s.img_[i] = sg * (static_cast<int>(t) + 1);
    }
    return s;
  }

  std::size_t rank() const noexcept { return img_.size(); }
  std::size_t target(std::size_t i) const noexcept {
    return static_cast<std::size_t>(std::abs(img_[i]) - 1);
  }
  int sign(std::size_t i) const noexcept { return img_[i] < 0 ? -1 : 1; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != static_cast<int>(i) + 1) return false;
    return true;
  }

  /// Number of minus signs.
  int minus_count() const noexcept {
    return static_cast<int>(
        std::count_if(img_.begin(), img_.end(), [](int x) { return x < 0; }));
  }

  /// This permutation followed by `next`.
  SignedPermutation then(const SignedPermutation& next) const {
    if (next.rank() != rank()) throw RankMismatch(rank(), next.rank());
    SignedPermutation r;
    r.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) {
      auto t = target(i);
      r.img_[i] = sign(i) * next.img_[t];
    }
    return r;
  }

  SignedPermutation inverse() const {
    SignedPermutation r;
    r.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i)
      r.img_[target(i)] = sign(i) * (static_cast<int>(i) + 1);
    return r;
  }

  /// Encoded images: entry i is +-(target + 1).
  const std::vector<int>& encoded() const noexcept { return img_; }

  friend bool operator==(const SignedPermutation&,
                         const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&,
                          const SignedPermutation&) = default;

 private:
  std::vector<int> img_;
};

/// w^s: the right action of s on an integer vector.
inline std::vector<Label> acts_on_vector(const SignedPermutation& s,
                                         const std::vector<Label>& w) {
  if (w.size() != s.rank()) throw RankMismatch(s.rank(), w.size());
  std::vector<Label> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    out[s.target(i)] = s.sign(i) < 0 ? detail::checked_neg(w[i]) : w[i];
  return out;
}

/// An element (sigma, v) of W(C~n).
class AffineElement {
 public:
  AffineElement() = default;

  AffineElement(SignedPermutation sigma, std::vector<Label> v)
      : sigma_(std::move(sigma)), v_(std::move(v)) {
    if (sigma_.rank() != v_.size()) throw RankMismatch(sigma_.rank(), v_.size());
  }

  static AffineElement identity(std::size_t n) {
    return {SignedPermutation(n), std::vector<Label>(n, 0)};
  }

  static AffineElement translation(std::vector<Label> w) {
    auto n = w.size();
    return {SignedPermutation(n), std::move(w)};
  }

  std::size_t rank() const noexcept { return v_.size(); }
  const SignedPermutation& sigma() const noexcept { return sigma_; }
  const std::vector<Label>& v() const noexcept { return v_; }

  bool is_identity() const noexcept {
    return sigma_.is_identity() &&
           std::all_of(v_.begin(), v_.end(), [](Label x) { return x == 0; });
  }

  /// Largest |v_i|.
  Label max_abs_label() const noexcept {
    Label m = 0;
    for (auto x : v_) m = std::max(m, x < 0 ? -x : x);
    return m;
  }

  friend bool operator==(const AffineElement&, const AffineElement&) = default;
  friend auto operator<=>(const AffineElement&, const AffineElement&) = default;

 private:
  SignedPermutation sigma_;
  std::vector<Label> v_;
};

inline std::vector<Label> add_vectors(const std::vector<Label>& a,
                                      const std::vector<Label>& b) {
  std::vector<Label> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = detail::checked_add(a[i], b[i]);
  return r;
}

inline AffineElement multiply(const AffineElement& x, const AffineElement& y) {
  if (x.rank() != y.rank()) throw RankMismatch(x.rank(), y.rank());
  return {x.sigma().then(y.sigma()),
          add_vectors(acts_on_vector(y.sigma(), x.v()), y.v())};
}

inline AffineElement inverse(const AffineElement& x) {
  auto inv = x.sigma().inverse();
  auto w = acts_on_vector(inv, x.v());
  for (auto& c : w) c = detail::checked_neg(c);
  return {std::move(inv), std::move(w)};
}

/// x^g = g^-1 x g, by the closed form (h^-1 s h, v^h + w - w^(h^-1 s h)).
inline AffineElement conjugate(const AffineElement& x, const AffineElement& g) {
  if (x.rank() != g.rank()) throw RankMismatch(x.rank(), g.rank());
  const auto& h = g.sigma();
  auto s = h.inverse().then(x.sigma()).then(h);
  auto vh = acts_on_vector(h, x.v());
  auto ws = acts_on_vector(s, g.v());
  std::vector<Label> out(x.rank());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = detail::checked_sub(detail::checked_add(vh[i], g.v()[i]), ws[i]);
  return {std::move(s), std::move(out)};
}

inline Label coordinate_sum(const AffineElement& x) {
  Label s = 0;
  for (auto c : x.v()) s = detail::checked_add(s, c);
  return s;
}

enum class Family { AffineA, AffineB, AffineBbar, AffineC, AffineD };

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::AffineA: return "AffineA";
    case Family::AffineB: return "AffineB";
    case Family::AffineBbar: return "AffineBbar";
    case Family::AffineC: return "AffineC";
    case Family::AffineD: return "AffineD";
  }
  return "?";
}

/// Short CLI spelling: A, B, Bbar, C, D.
inline std::string_view family_letter(Family f) {
  switch (f) {
    case Family::AffineA: return "A";
    case Family::AffineB: return "B";
    case Family::AffineBbar: return "Bbar";
    case Family::AffineC: return "C";
    case Family::AffineD: return "D";
  }
  return "?";
}

inline Family parse_family(std::string_view s) {
  for (auto f : {Family::AffineA, Family::AffineB, Family::AffineBbar,
                 Family::AffineC, Family::AffineD})
    if (s == family_letter(f) || s == family_name(f)) return f;
  throw Error("unknown group family '" + std::string(s) + "'");
}

inline std::size_t minimum_rank(Family f) {
  switch (f) {
    case Family::AffineA:
    case Family::AffineC: return 2;
    case Family::AffineB:
    case Family::AffineBbar: return 3;
    case Family::AffineD: return 4;
  }
  return 2;
}

/// A group family together with its rank. For AffineA, rank n means the
/// group A~(n-1) acting on n points.
class GroupFamily {
 public:
  GroupFamily(Family tag, std::size_t n) : tag_(tag), n_(n) {
    if (n < minimum_rank(tag))
      throw Error(std::string(family_name(tag)) + " requires n >= " +
                  std::to_string(minimum_rank(tag)) + ", got " +
                  std::to_string(n));
  }

  Family tag() const noexcept { return tag_; }
  std::size_t rank() const noexcept { return n_; }

  friend bool operator==(const GroupFamily&, const GroupFamily&) = default;
  friend auto operator<=>(const GroupFamily&, const GroupFamily&) = default;

 private:
  Family tag_;
  std::size_t n_;
};

/// Parity of sum(v): the homomorphism W(C~n) -> Z/2 with kernel W(B~n).
inline int b_character(const AffineElement& x) {
  return detail::mod(coordinate_sum(x), 2);
}

/// Parity of sum(v) + minus(sigma): kernel is the second copy of B~n.
inline int bbar_character(const AffineElement& x) {
  return detail::mod(coordinate_sum(x) + x.sigma().minus_count(), 2);
}

inline bool member_of(const AffineElement& x, const GroupFamily& g) {
  if (x.rank() != g.rank()) return false;
  switch (g.tag()) {
    case Family::AffineC: return true;
    case Family::AffineB: return b_character(x) == 0;
    case Family::AffineBbar: return bbar_character(x) == 0;
    case Family::AffineD: return b_character(x) == 0 && bbar_character(x) == 0;
    case Family::AffineA:
      return x.sigma().minus_count() == 0 && coordinate_sum(x) == 0;
  }
  return false;
}

namespace detail {

/// Reflection in a single coordinate: (-i) with label `label` at point i.
inline AffineElement negative_one_cycle(std::size_t n, std::size_t i, Label label) {
  std::vector<std::pair<std::size_t, int>> img(n);
  for (std::size_t k = 0; k < n; ++k) img[k] = {k, 1};
  img[i] = {i, -1};
  std::vector<Label> v(n, 0);
  v[i] = label;
  return {SignedPermutation::from_images(img), std::move(v)};
}

/// Transposition of a and b; positive means v_b = -v_a, negative v_b = v_a.
inline AffineElement transposition(std::size_t n, std::size_t a, std::size_t b,
                                   bool positive, Label label) {
  std::vector<std::pair<std::size_t, int>> img(n);
  for (std::size_t k = 0; k < n; ++k) img[k] = {k, 1};
  int s = positive ? 1 : -1;
  img[a] = {b, s};
  img[b] = {a, s};
  std::vector<Label> v(n, 0);
  v[a] = label;
  v[b] = positive ? checked_neg(label) : label;
  return {SignedPermutation::from_images(img), std::move(v)};
}

}  // namespace detail

/// Simple reflections for the family's Coxeter graph.
inline std::vector<AffineElement> generators(const GroupFamily& g) {
  const auto n = g.rank();
  using detail::negative_one_cycle;
  using detail::transposition;
  std::vector<AffineElement> out;
  auto r = [&](std::size_t i) {  // r_i for 1 <= i <= n+1
    if (i == 1) return negative_one_cycle(n, 0, 0);
    if (i == n + 1) return negative_one_cycle(n, n - 1, 1);
    return transposition(n, i - 2, i - 1, true, 0);
  };
  auto s = [&] { return transposition(n, n - 2, n - 1, false, 1); };
  auto t = [&] { return transposition(n, 0, 1, false, 1); };
  switch (g.tag()) {
    case Family::AffineC:
      for (std::size_t i = 1; i <= n + 1; ++i) out.push_back(r(i));
      break;
    case Family::AffineB:
      for (std::size_t i = 1; i <= n; ++i) out.push_back(r(i));
      out.push_back(s());
      break;
    case Family::AffineBbar:
      out.push_back(t());
      for (std::size_t i = 2; i <= n + 1; ++i) out.push_back(r(i));
      break;
    case Family::AffineD:
      out.push_back(t());
      for (std::size_t i = 2; i <= n; ++i) out.push_back(r(i));
      out.push_back(s());
      break;
    case Family::AffineA:
      for (std::size_t i = 2; i <= n; ++i) out.push_back(r(i));
      // reflection in the highest root e_1 - e_n, shifted by one
      out.push_back(transposition(n, 0, n - 1, true, 1));
      break;
  }
  return out;
}

}  // namespace awg

template <>
struct std::hash<awg::SignedPermutation> {
  std::size_t operator()(const awg::SignedPermutation& s) const noexcept {
    std::size_t h = s.rank();
    for (int x : s.encoded()) awg::detail::hash_combine(h, std::hash<int>{}(x));
    return h;
  }
};

template <>
struct std::hash<awg::AffineElement> {
  std::size_t operator()(const awg::AffineElement& x) const noexcept {
    std::size_t h = std::hash<awg::SignedPermutation>{}(x.sigma());
    for (auto c : x.v()) awg::detail::hash_combine(h, std::hash<awg::Label>{}(c));
    return h;
  }
};

#endif  // AWG_CORE_HPP
