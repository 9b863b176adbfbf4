#ifndef AWG_FINITE_HPP
#define AWG_FINITE_HPP

// Commuting involution graphs of the finite Weyl groups W(A_{n-1}), W(B_n)
// and W(D_n), built exhaustively. They provide exact baseline distances and
// the projection lower bound for affine distances.

#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "awg/conjugacy.hpp"

namespace awg {

inline bool finite_commute(const SignedPermutation& a, const SignedPermutation& b) {
  return a.then(b) == b.then(a);
}

/// Members of a finite involution class in construction order.
inline std::vector<SignedPermutation> finite_class_members(const FiniteClassDescriptor& d) {
  std::vector<SignedPermutation> out;
  bool positive_only = d.family == FiniteFamily::FiniteA;
  for (auto& s : enumerate_signed_involutions(static_cast<int>(d.n), d.m, d.k, d.l, positive_only)) {
    if (s.is_identity() || !finite_member_of(s, d.family)) continue;
    if (finite_class_of(s, d.family) == d) out.push_back(std::move(s));
  }
  return out;
}

/// Every involution class of the finite group of the given family and rank.
inline std::vector<FiniteClassDescriptor> finite_classes(FiniteFamily f, std::size_t n) {
  std::vector<FiniteClassDescriptor> out;
  const int N = static_cast<int>(n);
  for (int m = 0; 2 * m <= N; ++m) {
    for (int k = 0; 2 * m + k <= N; ++k) {
      int l = N - 2 * m - k;
      if (m == 0 && k == 0) continue;
      if (f == FiniteFamily::FiniteA && k > 0) continue;
      if (f == FiniteFamily::FiniteD && k % 2 != 0) continue;
      if (f == FiniteFamily::FiniteD && k == 0 && l == 0) {
        for (int r : {0, 2}) out.push_back({f, n, m, k, l, r});
      } else {
        out.push_back({f, n, m, k, l, std::nullopt});
      }
    }
  }
  return out;
}

/// Adjacency of one finite class with all-pairs distances computed on demand.
class FiniteClassGraph {
 public:
  static constexpr int kUnreachable = -1;

  explicit FiniteClassGraph(const FiniteClassDescriptor& d)
      : descriptor_(d), members_(finite_class_members(d)) {
    for (std::size_t i = 0; i < members_.size(); ++i) index_.emplace(members_[i], i);
    adj_.resize(members_.size());
    for (std::size_t i = 0; i < members_.size(); ++i)
      for (std::size_t j = i + 1; j < members_.size(); ++j)
        if (finite_commute(members_[i], members_[j])) {
          adj_[i].push_back(j);
          adj_[j].push_back(i);
        }
  }

  const FiniteClassDescriptor& descriptor() const noexcept { return descriptor_; }
  const std::vector<SignedPermutation>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }

  std::size_t index_of(const SignedPermutation& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) throw Error("signed permutation is not in the finite class");
    return it->second;
  }

  /// BFS distances from vertex `source`, kUnreachable where disconnected.
  const std::vector<int>& distances_from(std::size_t source) const {
    std::lock_guard lock(mu_);
    auto it = dist_.find(source);
    if (it != dist_.end()) return it->second;
    std::vector<int> d(members_.size(), kUnreachable);
    std::deque<std::size_t> q{source};
    d[source] = 0;
    while (!q.empty()) {
      auto u = q.front();
      q.pop_front();
      for (auto w : adj_[u])
        if (d[w] == kUnreachable) {
          d[w] = d[u] + 1;
          q.push_back(w);
        }
    }
    return dist_.emplace(source, std::move(d)).first->second;
  }

  int distance(const SignedPermutation& a, const SignedPermutation& b) const {
    return distances_from(index_of(a))[index_of(b)];
  }

  /// Diameter, or nullopt if the graph is disconnected.
  std::optional<int> diameter() const {
    int best = 0;
    for (std::size_t i = 0; i < members_.size(); ++i)
      for (int d : distances_from(i)) {
        if (d == kUnreachable) return std::nullopt;
        best = std::max(best, d);
      }
    return best;
  }

  std::size_t component_count() const {
    std::vector<bool> seen(members_.size(), false);
    std::size_t count = 0;
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (seen[i]) continue;
      ++count;
      const auto& d = distances_from(i);
      for (std::size_t j = 0; j < d.size(); ++j)
        if (d[j] != kUnreachable) seen[j] = true;
    }
    return count;
  }

 private:
  FiniteClassDescriptor descriptor_;
  std::vector<SignedPermutation> members_;
  std::unordered_map<SignedPermutation, std::size_t> index_;
  std::vector<std::vector<std::size_t>> adj_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::size_t, std::vector<int>> dist_;
};

/// Process-wide cache of finite class graphs.
inline const FiniteClassGraph& finite_class_graph(const FiniteClassDescriptor& d) {
  static std::mutex mu;
  static std::map<FiniteClassDescriptor, std::unique_ptr<FiniteClassGraph>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[d];
  if (!slot) slot = std::make_unique<FiniteClassGraph>(d);
  return *slot;
}

class ClassMismatch : public Error {
 public:
  ClassMismatch() : Error("elements lie in different classes") {}
};

/// Exact distance in the finite commuting involution graph; nullopt when the
/// two lie in different components.
inline std::optional<int> finite_baseline_distance(const SignedPermutation& s,
                                                   const SignedPermutation& t, FiniteFamily f) {
  if (s.rank() != t.rank()) throw RankMismatch(s.rank(), t.rank());
  auto ds = finite_class_of(s, f);
  if (ds != finite_class_of(t, f)) throw ClassMismatch();
  int d = finite_class_graph(ds).distance(s, t);
  if (d == FiniteClassGraph::kUnreachable) return std::nullopt;
  return d;
}

/// The finite-group statement for a class: complete, disconnected, or a
/// diameter bound (exact when `exact` is set).
struct FinitePrediction {
  enum class Kind { Complete, Disconnected, DiameterAtMost, DiameterExactly } kind;
  int value = 0;
  std::string clause;
};

inline FinitePrediction predict_finite(const FiniteClassDescriptor& d) {
  using K = FinitePrediction::Kind;
  const int n = static_cast<int>(d.n);
  if (d.family == FiniteFamily::FiniteA) {
    if (d.l == 1) return {K::Disconnected, 0, "l=1"};
    if (n == 4 && d.m == 1) return {K::Disconnected, 0, "n=4,m=1"};
    if ((n == 6 || n == 8 || n == 10) && d.l == 2) return {K::DiameterExactly, 4, "l=2"};
    return {K::DiameterAtMost, 3, "other"};
  }
  int t = std::max(d.k, d.l);
  if (d.m == 0) return {K::Complete, 1, "i"};
  if (t == 0) return {K::DiameterAtMost, 2, "ii"};
  if (t == 1) return {K::Disconnected, 0, "iii"};
  if (n == 5 && d.m == 1 && t == 2) return {K::DiameterExactly, 5, "v"};
  if (n == 5 && d.m == 1 && t == 3) return {K::DiameterExactly, 2, "v"};
  if (n == 4 && d.m == 1 && t == 2) return {K::Disconnected, 0, "v"};
  if (n > 5) return {K::DiameterAtMost, 4, "iv"};
  throw Error("no finite statement covers " + to_string(d));
}

/// Checks a finite class graph against its prediction.
inline bool finite_prediction_holds(const FiniteClassGraph& g, const FinitePrediction& p) {
  using K = FinitePrediction::Kind;
  auto diam = g.diameter();
  switch (p.kind) {
    case K::Complete: return diam && *diam <= 1;
    case K::Disconnected: return !diam.has_value();
    case K::DiameterAtMost: return diam && *diam <= p.value;
    case K::DiameterExactly: return diam && *diam == p.value;
  }
  return false;
}

}  // namespace awg

#endif  // AWG_FINITE_HPP
