#ifndef AWG_GRAPH_HPP
#define AWG_GRAPH_HPP

// Commuting involution graphs of affine classes: connectivity verdicts with
// certificates, windowed component decomposition, obstruction invariants and
// bidirectional distance search with verified witnesses.

#include <limits>
#include <set>
#include <unordered_set>

#include "awg/commuting.hpp"
#include "awg/finite.hpp"

namespace awg {

/// A vertex is in window L iff every label has absolute value <= L.
struct WindowSpec {
  Label L = 0;
  std::size_t max_nodes = 5'000'000;

  WindowSpec() = default;
  WindowSpec(Label l, std::size_t cap = 5'000'000) : L(l), max_nodes(cap) {
    if (l < 0) throw Error("window bound must be non-negative");
    if (cap == 0) throw Error("node cap must be positive");
  }
};

inline bool in_window(const AffineElement& x, Label L) { return x.max_abs_label() <= L; }

struct PathWitness {
  std::vector<AffineElement> vertices;

  std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
};

/// Empty string if valid, else the first defect found.
inline std::string witness_defect(const PathWitness& w, const ClassDescriptor& d) {
  if (w.vertices.empty()) return "empty path";
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    const auto& x = w.vertices[i];
    if (x.rank() != d.family.rank()) return "vertex " + std::to_string(i) + " has wrong rank";
    if (!is_structural_involution(x)) return "vertex " + std::to_string(i) + " is not an involution";
    if (!member_of(x, d.family) || class_of(x, d.family) != d)
      return "vertex " + std::to_string(i) + " is outside the class";
    if (i == 0) continue;
    if (w.vertices[i - 1] == x) return "vertex " + std::to_string(i) + " repeats its predecessor";
    if (!commutes_oracle(w.vertices[i - 1], x))
      return "edge " + std::to_string(i - 1) + "-" + std::to_string(i) + " does not commute";
  }
  return {};
}

inline bool validate(const PathWitness& w, const ClassDescriptor& d) {
  return witness_defect(w, d).empty();
}

// ---------------------------------------------------------------------------
// Verdicts.

enum class DisconnectionClause {
  Isolation,
  UniqueOneCycle,
  SmallMultiplicity,
  RankFourOneTransposition,
  RankSixBalanced,
};

/// Which kind of argument certifies a disconnection.
enum class CertificateKind {
  Isolation,           // no two class members commute
  ConservedOneCycle,   // the unique 1-cycle of its parity is shared by neighbours
  ConservedSupport,    // the set of points outside transpositions is shared
  FiniteProjection,    // the finite projection is already disconnected
  ConservedPartition,  // the partition into transposition/even/odd blocks is shared
};

inline std::string_view clause_name(DisconnectionClause c) {
  switch (c) {
    case DisconnectionClause::Isolation: return "i";
    case DisconnectionClause::UniqueOneCycle: return "ii";
    case DisconnectionClause::SmallMultiplicity: return "iii";
    case DisconnectionClause::RankFourOneTransposition: return "iv";
    case DisconnectionClause::RankSixBalanced: return "v";
  }
  return "?";
}

inline std::string_view certificate_name(CertificateKind c) {
  switch (c) {
    case CertificateKind::Isolation: return "isolation";
    case CertificateKind::ConservedOneCycle: return "conserved-one-cycle";
    case CertificateKind::ConservedSupport: return "conserved-support";
    case CertificateKind::FiniteProjection: return "finite-projection";
    case CertificateKind::ConservedPartition: return "conserved-partition";
  }
  return "?";
}

struct ConnectivityVerdict {
  enum class Status { Disconnected, ConnectedWithBound } status;
  std::optional<DisconnectionClause> clause;
  std::optional<CertificateKind> certificate;
  int bound = 0;  // diameter bound when connected
  std::string justification;

  bool connected() const noexcept { return status == Status::ConnectedWithBound; }
};

inline std::string to_string(const ConnectivityVerdict& v) {
  if (v.connected()) return "ConnectedWithBound(" + std::to_string(v.bound) + ")";
  return "Disconnected(" + std::string(clause_name(*v.clause)) + ")";
}

inline ConnectivityVerdict predict_connectivity(const ClassDescriptor& d) {
  if (!is_realizable(d)) throw UnrealizableDescriptor();
  const auto fam = d.family.tag();
  if (fam == Family::AffineA) throw Error("connectivity prediction covers B, Bbar, C and D only");
  const auto& t = d.type;
  const int n = static_cast<int>(d.family.rank());
  using S = ConnectivityVerdict::Status;
  auto disc = [](DisconnectionClause c, CertificateKind k, std::string why) {
    return ConnectivityVerdict{S::Disconnected, c, k, 0, std::move(why)};
  };
  if (t.m == 0 && t.l == 0)
    return disc(DisconnectionClause::Isolation, CertificateKind::Isolation,
                "only negative 1-cycles: distinct members never commute");
  if (t.m > 0 && t.l == 0 && (t.k_e == 1 || t.k_o == 1))
    return disc(DisconnectionClause::UniqueOneCycle, CertificateKind::ConservedOneCycle,
                "the unique 1-cycle of its parity is fixed along edges");
  if (t.m > 0 && std::max({t.k_e, t.k_o, t.l}) == 1)
    return disc(DisconnectionClause::SmallMultiplicity, CertificateKind::ConservedSupport,
                "the points outside transpositions are fixed along edges");
  if (n == 4 && t.m == 1)
    return disc(DisconnectionClause::RankFourOneTransposition, CertificateKind::FiniteProjection,
                "the finite projection class graph is disconnected");
  if (n == 6 && t.m == 1 && t.k_e == 2 && t.k_o == 2)
    return disc(DisconnectionClause::RankSixBalanced, CertificateKind::ConservedPartition,
                "the transposition/even/odd partition is fixed along edges");

  ConnectivityVerdict v{S::ConnectedWithBound, std::nullopt, std::nullopt, n + 2,
                        "general bound n+2"};
  // Sharper bounds. Bbar classes are the images of B classes under omega; a
  // D class with a nonzero 1-cycle count equals the B or Bbar class as a set.
  int ke = t.k_e, ko = t.k_o;
  if (fam == Family::AffineBbar) std::swap(ke, ko);
  bool b_like = fam == Family::AffineB || fam == Family::AffineBbar || fam == Family::AffineD;
  if (fam == Family::AffineD && t.k_o > 0 && t.k_e == 0) std::swap(ke, ko);
  if (b_like && t.l == 0 && ko == 0) {
    if (ke == 0) {
      v.bound = fam == Family::AffineD ? 4 : 3;
      v.justification = "all points in transpositions";
    } else if (t.m == 1 && ke > 2) {
      v.bound = n + 1;
      v.justification = "one transposition, more than two 1-cycles";
    } else if (t.m > 1 && ke >= 2) {
      v.bound = n - 1;
      v.justification = "several transpositions, at least two 1-cycles";
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// Obstruction invariants: each is constant along edges of its class graph.

/// Opaque, comparable value of the invariant named by the certificate.
inline std::string obstruction_invariant(const AffineElement& x, const ClassDescriptor& d,
                                         CertificateKind kind) {
  auto form = labelled_cycle_form(x);
  switch (kind) {
    case CertificateKind::Isolation: return format_element(x);
    case CertificateKind::ConservedOneCycle: {
      const auto& t = d.type;
      int parity = t.k_e == 1 ? 0 : 1;
      for (const auto& c : form.cycles)
        if (c.kind == CycleKind::NegOneCycle && detail::mod(c.label, 2) == parity)
          return std::to_string(c.a + 1) + ":" + std::to_string(c.label);
      break;
    }
    case CertificateKind::ConservedSupport: {
      std::string s;
      for (const auto& c : form.cycles)
        if (!c.is_transposition()) s += std::to_string(c.a + 1) + ",";
      return s;
    }
    case CertificateKind::FiniteProjection: {
      auto fd = finite_class_of(x.sigma(), finite_counterpart(d.family.tag()));
      const auto& g = finite_class_graph(fd);
      const auto& dist = g.distances_from(g.index_of(x.sigma()));
      for (std::size_t j = 0; j < dist.size(); ++j)
        if (dist[j] != FiniteClassGraph::kUnreachable) return std::to_string(j);
      break;
    }
    case CertificateKind::ConservedPartition: {
      std::vector<std::size_t> trans, even, odd;
      for (const auto& c : form.cycles) {
        if (c.is_transposition()) {
          trans = {c.a, c.b};
        } else if (c.kind == CycleKind::NegOneCycle) {
          (detail::mod(c.label, 2) == 0 ? even : odd).push_back(c.a);
        }
      }
      std::set<std::vector<std::size_t>> blocks{trans, even, odd};
      std::string s;
      for (const auto& b : blocks) {
        s += "{";
        for (auto p : b) s += std::to_string(p + 1) + ",";
        s += "}";
      }
      return s;
    }
  }
  throw std::logic_error("invariant does not apply to this class");
}

// ---------------------------------------------------------------------------
// Window components.

struct WindowComponents {
  std::vector<AffineElement> vertices;  // deterministic order
  std::vector<std::size_t> component;   // component id per vertex, ids by first vertex
  std::size_t count = 0;
  std::size_t edges = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edge_list;  // when requested
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

inline WindowComponents components_in_window(const ClassDescriptor& d, const WindowSpec& w,
                                             bool keep_edges = false) {
  if (!is_realizable(d)) throw UnrealizableDescriptor();
  WindowComponents out;
  out.vertices = class_members_in_window(d, w.L, w.max_nodes);
  std::unordered_map<AffineElement, std::size_t> index;
  index.reserve(out.vertices.size());
  for (std::size_t i = 0; i < out.vertices.size(); ++i) index.emplace(out.vertices[i], i);
  detail::UnionFind uf(out.vertices.size());
  CentralizerCache centralizers(d.type, d.family.tag() == Family::AffineA);
  for (std::size_t i = 0; i < out.vertices.size(); ++i) {
    for (const auto& y : neighbors_in_class(out.vertices[i], d, w.L, &centralizers)) {
      auto j = index.at(y);
      if (j <= i) continue;
      ++out.edges;
      if (keep_edges) out.edge_list.emplace_back(i, j);
      uf.unite(i, j);
    }
  }
  std::unordered_map<std::size_t, std::size_t> ids;
  out.component.resize(out.vertices.size());
  for (std::size_t i = 0; i < out.vertices.size(); ++i) {
    auto r = uf.find(i);
    auto [it, fresh] = ids.emplace(r, ids.size());
    out.component[i] = it->second;
  }
  out.count = ids.size();
  return out;
}

// ---------------------------------------------------------------------------
// Distance search.

/// Neighbour lists for one class and window, memoized.
class NeighborCache {
 public:
  NeighborCache(ClassDescriptor d, Label L, std::size_t capacity = 200'000)
      : d_(std::move(d)),
        L_(L),
        capacity_(capacity),
        centralizers_(d_.type, d_.family.tag() == Family::AffineA) {}

  const std::vector<AffineElement>& operator()(const AffineElement& x) {
    auto it = lists_.find(x);
    if (it != lists_.end()) return it->second;
    if (lists_.size() >= capacity_) lists_.clear();
    return lists_.emplace(x, neighbors_in_class(x, d_, L_, &centralizers_)).first->second;
  }

  Label window() const noexcept { return L_; }

 private:
  ClassDescriptor d_;
  Label L_;
  std::size_t capacity_;
  CentralizerCache centralizers_;
  std::unordered_map<AffineElement, std::vector<AffineElement>> lists_;
};

struct SearchLimits {
  Label max_window = 4;
  int max_depth = std::numeric_limits<int>::max();
  std::size_t max_nodes = 2'000'000;
};

struct DistanceResult {
  int length = 0;             // witness length: a certified upper bound
  PathWitness witness;
  std::optional<int> lower_bound;  // projection bound; absent if projections disconnected
  Label window = 0;          // window in which the witness was found
};

/// Finite projection distance, in the finite counterpart of the family.
inline std::optional<int> projection_lower_bound(const AffineElement& x, const AffineElement& y,
                                                 Family f) {
  return finite_baseline_distance(x.sigma(), y.sigma(), finite_counterpart(f));
}

namespace detail {

/// Depth-limited bidirectional BFS inside one window.
inline std::optional<PathWitness> bidirectional_search(const AffineElement& x,
                                                       const AffineElement& y,
                                                       NeighborCache& nbrs, int max_depth,
                                                       std::size_t max_nodes) {
  if (x == y) return PathWitness{{x}};
  struct Side {
    std::unordered_map<AffineElement, const AffineElement*> parent;
    std::vector<const AffineElement*> frontier;
    int depth = 0;
  };
  Side a, b;
  auto root = [](Side& s, const AffineElement& v) {
    auto it = s.parent.emplace(v, nullptr).first;
    s.frontier.push_back(&it->first);
  };
  root(a, x);
  root(b, y);
  auto trace = [](const Side& s, const AffineElement* v) {
    std::vector<AffineElement> chain;
    for (; v; v = s.parent.at(*v)) chain.push_back(*v);
    return chain;
  };
  while (!a.frontier.empty() && !b.frontier.empty() && a.depth + b.depth < max_depth) {
    bool forward = a.frontier.size() <= b.frontier.size();
    Side& s = forward ? a : b;
    Side& o = forward ? b : a;
    std::vector<const AffineElement*> next;
    for (const auto* u : s.frontier) {
      for (const auto& v : nbrs(*u)) {
        if (s.parent.count(v)) continue;
        auto it = s.parent.emplace(v, u).first;
        if (auto hit = o.parent.find(v); hit != o.parent.end()) {
          auto left = trace(s, &it->first);
          auto right = trace(o, hit->second);
          std::reverse(left.begin(), left.end());
          left.insert(left.end(), right.begin(), right.end());
          if (!forward) std::reverse(left.begin(), left.end());
          return PathWitness{std::move(left)};
        }
        next.push_back(&it->first);
        if (a.parent.size() + b.parent.size() > max_nodes) return std::nullopt;
      }
    }
    s.frontier = std::move(next);
    ++s.depth;
  }
  return std::nullopt;
}

}  // namespace detail

/// Shortest witness found by expanding windows from the larger label
/// magnitude of x and y up to limits.max_window. Absent if none is found.
inline std::optional<DistanceResult> distance(const AffineElement& x, const AffineElement& y,
                                              const GroupFamily& g,
                                              const SearchLimits& limits = {}) {
  auto d = class_of(x, g);
  if (class_of(y, g) != d) throw ClassMismatch();
  DistanceResult r;
  r.lower_bound = projection_lower_bound(x, y, g.tag());
  Label start = std::max(x.max_abs_label(), y.max_abs_label());
  for (Label L = start; L <= std::max(start, limits.max_window); ++L) {
    NeighborCache cache(d, L);
    auto w = detail::bidirectional_search(x, y, cache, limits.max_depth, limits.max_nodes);
    if (!w) continue;
    if (!validate(*w, d)) throw std::logic_error("search produced an invalid witness");
    r.length = static_cast<int>(w->length());
    r.witness = std::move(*w);
    r.window = L;
    if (r.lower_bound && *r.lower_bound > r.length)
      throw std::logic_error("projection bound exceeds witness length");
    return r;
  }
  return std::nullopt;
}

}  // namespace awg

#endif  // AWG_GRAPH_HPP
