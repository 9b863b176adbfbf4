#ifndef AWG_CONJUGACY_HPP
#define AWG_CONJUGACY_HPP

// Conjugacy classification of involutions in A~(n-1), B~n, B~n-bar, C~n, D~n
// and in the finite groups A(n-1), B(n), D(n).

#include <sstream>

#include "awg/io.hpp"

namespace awg {

/// Residues that separate classes sharing a labelled cycle type. Each field
/// is stored reduced, so descriptor equality is plain field equality.
struct Residues {
  std::optional<int> f_mod4;
  std::optional<int> f_plus_minus_mod4;
  std::optional<int> minus_mod4;
  std::optional<int> label_sum_mod2;

  bool empty() const noexcept {
    return !f_mod4 && !f_plus_minus_mod4 && !minus_mod4 && !label_sum_mod2;
  }

  friend bool operator==(const Residues&, const Residues&) = default;
  friend auto operator<=>(const Residues&, const Residues&) = default;
};

struct ClassDescriptor {
  GroupFamily family;
  LabelledCycleType type;
  Residues split;

  friend bool operator==(const ClassDescriptor&, const ClassDescriptor&) = default;
  friend auto operator<=>(const ClassDescriptor&, const ClassDescriptor&) = default;
};

/// Which residues a type carries in a family.
enum class SplitKind { None, FMod4, FPlusMinusMod4, MinusAndFMod4, LabelSumMod2 };

inline SplitKind split_kind(Family f, const LabelledCycleType& t) {
  switch (f) {
    case Family::AffineC: return SplitKind::None;
    case Family::AffineA: return t.l == 0 ? SplitKind::LabelSumMod2 : SplitKind::None;
    case Family::AffineB:
      return t.k_o == 0 && t.l == 0 ? SplitKind::FMod4 : SplitKind::None;
    case Family::AffineBbar:
      return t.k_e == 0 && t.l == 0 ? SplitKind::FPlusMinusMod4 : SplitKind::None;
    case Family::AffineD:
      if (t.l != 0) return SplitKind::None;
      if (t.k_e == 0 && t.k_o == 0) return SplitKind::MinusAndFMod4;
      // Conjugacy in D~ coincides with B~ (k_e > 0) or B~-bar (k_o > 0) here.
      if (t.k_o == 0) return SplitKind::FMod4;
      if (t.k_e == 0) return SplitKind::FPlusMinusMod4;
      return SplitKind::None;
  }
  return SplitKind::None;
}

/// Whether a labelled cycle type occurs among involutions of the family.
inline bool type_admissible(const GroupFamily& g, const LabelledCycleType& t) {
  if (t.m < 0 || t.k_e < 0 || t.k_o < 0 || t.l < 0) return false;
  if (t.rank() != static_cast<int>(g.rank()) || t.is_identity()) return false;
  switch (g.tag()) {
    case Family::AffineC: return true;
    case Family::AffineB: return t.k_o % 2 == 0;
    case Family::AffineBbar: return t.k_e % 2 == 0;
    case Family::AffineD: return t.k_e % 2 == 0 && t.k_o % 2 == 0;
    case Family::AffineA: return t.k_e == 0 && t.k_o == 0;
  }
  return false;
}

inline bool is_realizable(const ClassDescriptor& d) {
  if (!type_admissible(d.family, d.type)) return false;
  const auto& r = d.split;
  auto in = [](const std::optional<int>& v, std::initializer_list<int> ok) {
    return v && std::find(ok.begin(), ok.end(), *v) != ok.end();
  };
  switch (split_kind(d.family.tag(), d.type)) {
    case SplitKind::None: return r.empty();
    case SplitKind::FMod4:
      return in(r.f_mod4, {0, 2}) && !r.f_plus_minus_mod4 && !r.minus_mod4 && !r.label_sum_mod2;
    case SplitKind::FPlusMinusMod4:
      return in(r.f_plus_minus_mod4, {0, 2}) && !r.f_mod4 && !r.minus_mod4 && !r.label_sum_mod2;
    case SplitKind::MinusAndFMod4:
      return in(r.minus_mod4, {0, 2}) && in(r.f_mod4, {0, 2}) && !r.f_plus_minus_mod4 &&
             !r.label_sum_mod2;
    case SplitKind::LabelSumMod2:
      return in(r.label_sum_mod2, {0, 1}) && !r.f_mod4 && !r.f_plus_minus_mod4 && !r.minus_mod4;
  }
  return false;
}

class NotAMember : public Error {
 public:
  NotAMember() : Error("element is not in the group") {}
};

class UnrealizableDescriptor : public Error {
 public:
  UnrealizableDescriptor() : Error("descriptor is not realizable") {}
};

namespace detail {

inline Residues residues_for(Family fam, const LabelledCycleForm& form, int minus) {
  Residues r;
  auto t = form.type();
  auto f = f_value(form);
  switch (split_kind(fam, t)) {
    case SplitKind::None: break;
    case SplitKind::FMod4: r.f_mod4 = mod(f, 4); break;
    case SplitKind::FPlusMinusMod4: r.f_plus_minus_mod4 = mod(f + minus, 4); break;
    case SplitKind::MinusAndFMod4:
      r.minus_mod4 = mod(minus, 4);
      r.f_mod4 = mod(f, 4);
      break;
    case SplitKind::LabelSumMod2: {
      Label s = 0;
      for (const auto& c : form.cycles)
        if (c.is_transposition()) s = checked_add(s, c.label);
      r.label_sum_mod2 = mod(s, 2);
      break;
    }
  }
  return r;
}

}  // namespace detail

inline ClassDescriptor class_of(const AffineElement& x, const GroupFamily& g) {
  if (!is_involution(x)) throw NotAnInvolution();
  if (!member_of(x, g)) throw NotAMember();
  auto form = labelled_cycle_form(x);
  return {g, form.type(), detail::residues_for(g.tag(), form, x.sigma().minus_count())};
}

inline ClassDescriptor class_of(const AffineElement& x, Family f) {
  return class_of(x, GroupFamily(f, x.rank()));
}

/// The normal form for the class: transpositions (+2i-1 2i)^0, then k_e
/// negative 1-cycles labelled 0, k_o labelled 1, then fixed points, adjusted
/// on the first (or last) transposition to hit the class residues.
inline AffineElement canonical_representative(const ClassDescriptor& d) {
  if (!is_realizable(d)) throw UnrealizableDescriptor();
  const auto& t = d.type;
  LabelledCycleForm form;
  form.n = d.family.rank();
  std::size_t p = 0;
  for (int i = 0; i < t.m; ++i, p += 2)
    form.cycles.push_back({CycleKind::PosTransposition, p, p + 1, 0});
  for (int i = 0; i < t.k_e; ++i, ++p) form.cycles.push_back({CycleKind::NegOneCycle, p, p, 0});
  for (int i = 0; i < t.k_o; ++i, ++p) form.cycles.push_back({CycleKind::NegOneCycle, p, p, 1});
  for (int i = 0; i < t.l; ++i, ++p) form.cycles.push_back({CycleKind::FixedPoint, p, p, 0});
  auto& first = form.cycles.front();
  const auto& r = d.split;
  switch (split_kind(d.family.tag(), t)) {
    case SplitKind::None: break;
    case SplitKind::FMod4:
      if (*r.f_mod4 == 2) {
        if (t.m > 0) first = {CycleKind::NegTransposition, 0, 1, 1};
        else first.label = 2;
      }
      break;
    case SplitKind::FPlusMinusMod4:
      if (*r.f_plus_minus_mod4 != detail::mod(2 * t.k_o, 4)) {
        if (t.m > 0) first.label = 1;
        else first.label = 3;
      }
      break;
    case SplitKind::MinusAndFMod4: {
      auto& last = form.cycles[t.m - 1];
      if (*r.f_mod4 == 2) last = {CycleKind::NegTransposition, last.a, last.b, 1};
      int minus = *r.f_mod4 == 2 ? 2 : 0;
      if (minus != *r.minus_mod4) first.kind = CycleKind::NegTransposition;
      break;
    }
    case SplitKind::LabelSumMod2:
      first.label = *r.label_sum_mod2;
      break;
  }
  auto rep = to_element(form);
  if (class_of(rep, d.family) != d)
    throw std::logic_error("canonical representative lands in the wrong class");
  return rep;
}

namespace detail {

struct Normalization {
  AffineElement conjugator;  // x^conjugator == normal
  AffineElement normal;
};

/// Conjugates an involution of C~n to the normal form of its labelled cycle
/// type: a finite signed permutation aligns the cycles, then a translation
/// reduces the labels.
inline Normalization normalize_in_c(const AffineElement& x) {
  const auto n = x.rank();
  auto form = labelled_cycle_form(x);
  std::vector<std::pair<std::size_t, int>> img(n);
  std::size_t next = 0;
  for (const auto& c : form.cycles) {
    if (!c.is_transposition()) continue;
    img[c.a] = {next, 1};
    img[c.b] = {next + 1, c.kind == CycleKind::PosTransposition ? 1 : -1};
    next += 2;
  }
  for (int parity : {0, 1})
    for (const auto& c : form.cycles)
      if (c.kind == CycleKind::NegOneCycle && mod(c.label, 2) == parity) img[c.a] = {next++, 1};
  for (const auto& c : form.cycles)
    if (c.kind == CycleKind::FixedPoint) img[c.a] = {next++, 1};
  AffineElement g1(SignedPermutation::from_images(img), std::vector<Label>(n, 0));
  auto x1 = conjugate(x, g1);
  std::vector<Label> w(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    auto t = x1.sigma().target(i);
    if (t > i) {
      w[i] = checked_neg(x1.v()[i]);
    } else if (t == i && x1.sigma().sign(i) < 0) {
      Label mu = x1.v()[i];
      w[i] = checked_neg((mu - mod(mu, 2)) / 2);
    }
  }
  auto g = multiply(g1, AffineElement::translation(std::move(w)));
  auto normal = conjugate(x, g);
  return {std::move(g), std::move(normal)};
}

/// Same as normalize_in_c but inside A~(n-1): plain permutations and
/// translations with zero coordinate sum. With no fixed points the first
/// transposition keeps the label-sum parity.
inline Normalization normalize_in_a(const AffineElement& x) {
  const auto n = x.rank();
  auto form = labelled_cycle_form(x);
  std::vector<std::pair<std::size_t, int>> img(n);
  std::size_t next = 0;
  Label label_sum = 0;
  std::vector<Label> lambdas;
  for (const auto& c : form.cycles) {
    if (!c.is_transposition()) continue;
    img[c.a] = {next, 1};
    img[c.b] = {next + 1, 1};
    next += 2;
    lambdas.push_back(c.label);
    label_sum = checked_add(label_sum, c.label);
  }
  std::vector<std::size_t> fixed;
  for (const auto& c : form.cycles)
    if (c.kind == CycleKind::FixedPoint) {
      fixed.push_back(next);
      img[c.a] = {next++, 1};
    }
  AffineElement g1(SignedPermutation::from_images(img), std::vector<Label>(n, 0));
  const auto m = lambdas.size();
  std::vector<Label> delta(m);
  for (std::size_t i = 0; i < m; ++i) delta[i] = checked_neg(lambdas[i]);
  if (fixed.empty()) delta[0] = checked_add(delta[0], mod(label_sum, 2));
  std::vector<Label> s = delta;
  std::vector<Label> w(n, 0);
  if (fixed.empty()) {
    Label total = 0;
    for (auto d : delta) total = checked_add(total, d);
    s[0] = checked_sub(s[0], total);
  }
  Label sum = 0;
  for (std::size_t i = 0; i < m; ++i) {
    w[2 * i] = (s[i] + delta[i]) / 2;
    w[2 * i + 1] = (s[i] - delta[i]) / 2;
    sum = checked_add(sum, s[i]);
  }
  if (!fixed.empty()) w[fixed.front()] = checked_neg(sum);
  auto g = multiply(g1, AffineElement::translation(std::move(w)));
  auto normal = conjugate(x, g);
  return {std::move(g), std::move(normal)};
}

/// Elements of C~n that commute with x, built from its 1-cycles.
inline std::vector<AffineElement> centralizer_corrections(const AffineElement& x) {
  std::vector<AffineElement> out;
  auto form = labelled_cycle_form(x);
  for (const auto& c : form.cycles) {
    if (c.kind == CycleKind::NegOneCycle) {
      out.push_back(negative_one_cycle(x.rank(), c.a, c.label));
    } else if (c.kind == CycleKind::FixedPoint) {
      out.push_back(negative_one_cycle(x.rank(), c.a, 0));
      out.push_back(negative_one_cycle(x.rank(), c.a, 1));
    }
  }
  return out;
}

}  // namespace detail

/// Returns g in G with conjugate(x, g) == y, or nothing when x and y lie in
/// different classes of G.
inline std::optional<AffineElement> find_conjugator(const AffineElement& x, const AffineElement& y,
                                                    const GroupFamily& g) {
  if (class_of(x, g) != class_of(y, g)) return std::nullopt;
  if (x == y) return AffineElement::identity(x.rank());
  auto verified = [&](const AffineElement& h) {
    return member_of(h, g) && conjugate(x, h) == y;
  };
  if (g.tag() == Family::AffineA) {
    auto nx = detail::normalize_in_a(x);
    auto ny = detail::normalize_in_a(y);
    auto h = multiply(nx.conjugator, inverse(ny.conjugator));
    if (!verified(h)) throw std::logic_error("A~ conjugator construction failed");
    return h;
  }
  auto nx = detail::normalize_in_c(x);
  auto ny = detail::normalize_in_c(y);
  if (nx.normal != ny.normal) throw std::logic_error("normal forms differ for equal types");
  auto h = multiply(nx.conjugator, inverse(ny.conjugator));
  if (verified(h)) return h;
  auto corr = detail::centralizer_corrections(x);
  for (std::size_t i = 0; i < corr.size(); ++i) {
    auto c = multiply(corr[i], h);
    if (verified(c)) return c;
  }
  for (std::size_t i = 0; i < corr.size(); ++i)
    for (std::size_t j = i + 1; j < corr.size(); ++j) {
      auto c = multiply(multiply(corr[i], corr[j]), h);
      if (verified(c)) return c;
    }
  throw std::logic_error("no conjugator found for equal descriptors");
}

/// Every realizable descriptor of the family, ordered by type then residues.
inline std::vector<ClassDescriptor> enumerate_descriptors(const GroupFamily& g) {
  std::vector<ClassDescriptor> out;
  const int n = static_cast<int>(g.rank());
  for (int m = 0; 2 * m <= n; ++m)
    for (int ke = 0; 2 * m + ke <= n; ++ke)
      for (int ko = 0; 2 * m + ke + ko <= n; ++ko) {
        LabelledCycleType t{m, ke, ko, n - 2 * m - ke - ko};
        if (!type_admissible(g, t)) continue;
        switch (split_kind(g.tag(), t)) {
          case SplitKind::None: out.push_back({g, t, {}}); break;
          case SplitKind::FMod4:
            for (int r : {0, 2}) out.push_back({g, t, {.f_mod4 = r}});
            break;
          case SplitKind::FPlusMinusMod4:
            for (int r : {0, 2}) out.push_back({g, t, {.f_plus_minus_mod4 = r}});
            break;
          case SplitKind::MinusAndFMod4:
            for (int mr : {0, 2})
              for (int fr : {0, 2}) out.push_back({g, t, {.f_mod4 = fr, .minus_mod4 = mr}});
            break;
          case SplitKind::LabelSumMod2:
            for (int r : {0, 1}) out.push_back({g, t, {.label_sum_mod2 = r}});
            break;
        }
      }
  return out;
}

// ---------------------------------------------------------------------------
// Descriptor text and JSON.

inline std::string to_string(const ClassDescriptor& d) {
  std::string s = std::string(family_letter(d.family.tag())) +
                  ":n=" + std::to_string(d.family.rank()) + ":" + to_string(d.type);
  std::vector<std::string> parts;
  if (d.split.minus_mod4) parts.push_back("minus=" + std::to_string(*d.split.minus_mod4));
  if (d.split.f_mod4) parts.push_back("f=" + std::to_string(*d.split.f_mod4));
  if (d.split.f_plus_minus_mod4) parts.push_back("fm=" + std::to_string(*d.split.f_plus_minus_mod4));
  if (d.split.label_sum_mod2) parts.push_back("sum=" + std::to_string(*d.split.label_sum_mod2));
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i == 0 ? ":" : ",") + parts[i];
  return s;
}

inline nlohmann::json descriptor_to_json(const ClassDescriptor& d) {
  nlohmann::json j = {{"family", family_name(d.family.tag())},
                      {"n", d.family.rank()},
                      {"type", {d.type.m, d.type.k_e, d.type.k_o, d.type.l}}};
  if (!d.split.empty()) {
    nlohmann::json s = nlohmann::json::object();
    if (d.split.f_mod4) s["f_mod4"] = *d.split.f_mod4;
    if (d.split.f_plus_minus_mod4) s["f_plus_minus_mod4"] = *d.split.f_plus_minus_mod4;
    if (d.split.minus_mod4) s["minus_mod4"] = *d.split.minus_mod4;
    if (d.split.label_sum_mod2) s["label_sum_mod2"] = *d.split.label_sum_mod2;
    j["split"] = s;
  }
  return j;
}

inline ClassDescriptor descriptor_from_json(const nlohmann::json& j) {
  try {
    GroupFamily g(parse_family(j.at("family").get<std::string>()), j.at("n").get<std::size_t>());
    auto t = j.at("type").get<std::vector<int>>();
    if (t.size() != 4) throw Error("descriptor type needs four entries");
    ClassDescriptor d{g, {t[0], t[1], t[2], t[3]}, {}};
    if (j.contains("split")) {
      const auto& s = j.at("split");
      for (auto it = s.begin(); it != s.end(); ++it) {
        int v = it.value().get<int>();
        if (it.key() == "f_mod4") d.split.f_mod4 = v;
        else if (it.key() == "f_plus_minus_mod4") d.split.f_plus_minus_mod4 = v;
        else if (it.key() == "minus_mod4") d.split.minus_mod4 = v;
        else if (it.key() == "label_sum_mod2") d.split.label_sum_mod2 = v;
        else throw Error("unknown split key '" + it.key() + "'");
      }
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed descriptor JSON: ") + e.what());
  }
}

/// Parses `B:n=6:(2,2,0,0):f=0` or a JSON object.
inline ClassDescriptor parse_descriptor(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{')
    return descriptor_from_json(nlohmann::json::parse(text));
  auto fail = [&](const std::string& why) -> ClassDescriptor {
    throw Error("bad descriptor '" + std::string(text) + "': " + why);
  };
  std::vector<std::string> fields;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ':' && depth == 0) {
      fields.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  fields.push_back(cur);
  if (fields.size() < 3 || fields.size() > 4) return fail("expected FAMILY:n=N:(m,ke,ko,l)[:residues]");
  auto family = parse_family(fields[0]);
  if (fields[1].rfind("n=", 0) != 0) return fail("missing n=");
  std::size_t n = 0;
  try {
    n = std::stoul(fields[1].substr(2));
  } catch (const std::exception&) {
    return fail("bad rank");
  }
  LabelledCycleType t;
  if (std::sscanf(fields[2].c_str(), "(%d,%d,%d,%d)", &t.m, &t.k_e, &t.k_o, &t.l) != 4)
    return fail("bad type tuple");
  ClassDescriptor d{GroupFamily(family, n), t, {}};
  if (fields.size() == 4) {
    std::stringstream ss(fields[3]);
    std::string kv;
    while (std::getline(ss, kv, ',')) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) return fail("residue needs key=value");
      auto key = kv.substr(0, eq);
      int v = 0;
      try {
        v = std::stoi(kv.substr(eq + 1));
      } catch (const std::exception&) {
        return fail("bad residue value");
      }
      if (key == "f") d.split.f_mod4 = v;
      else if (key == "fm") d.split.f_plus_minus_mod4 = v;
      else if (key == "minus") d.split.minus_mod4 = v;
      else if (key == "sum") d.split.label_sum_mod2 = v;
      else return fail("unknown residue '" + key + "'");
    }
  }
  return d;
}

// ---------------------------------------------------------------------------
// Finite Weyl groups.

enum class FiniteFamily { FiniteA, FiniteB, FiniteD };

inline std::string_view finite_family_name(FiniteFamily f) {
  switch (f) {
    case FiniteFamily::FiniteA: return "FiniteA";
    case FiniteFamily::FiniteB: return "FiniteB";
    case FiniteFamily::FiniteD: return "FiniteD";
  }
  return "?";
}

/// The finite Weyl group whose classes the affine family projects onto.
inline FiniteFamily finite_counterpart(Family f) {
  switch (f) {
    case Family::AffineA: return FiniteFamily::FiniteA;
    case Family::AffineD: return FiniteFamily::FiniteD;
    default: return FiniteFamily::FiniteB;
  }
}

/// Signed cycle type (m, k, l) plus, for D with k = l = 0, minus mod 4.
struct FiniteClassDescriptor {
  FiniteFamily family;
  std::size_t n;
  int m = 0;
  int k = 0;
  int l = 0;
  std::optional<int> minus_mod4;

  friend bool operator==(const FiniteClassDescriptor&, const FiniteClassDescriptor&) = default;
  friend auto operator<=>(const FiniteClassDescriptor&, const FiniteClassDescriptor&) = default;
};

inline bool is_finite_involution(const SignedPermutation& s) {
  return !s.is_identity() && s.then(s).is_identity();
}

inline bool finite_member_of(const SignedPermutation& s, FiniteFamily f) {
  switch (f) {
    case FiniteFamily::FiniteA: return s.minus_count() == 0;
    case FiniteFamily::FiniteB: return true;
    case FiniteFamily::FiniteD: return s.minus_count() % 2 == 0;
  }
  return false;
}

inline FiniteClassDescriptor finite_class_of(const SignedPermutation& s, FiniteFamily f) {
  if (!is_finite_involution(s)) throw NotAnInvolution();
  if (!finite_member_of(s, f)) throw NotAMember();
  FiniteClassDescriptor d{f, s.rank()};
  for (std::size_t i = 0; i < s.rank(); ++i) {
    auto t = s.target(i);
    if (t > i) ++d.m;
    else if (t == i) (s.sign(i) < 0 ? d.k : d.l)++;
  }
  if (f == FiniteFamily::FiniteD && d.k == 0 && d.l == 0) d.minus_mod4 = s.minus_count() % 4;
  return d;
}

inline std::string to_string(const FiniteClassDescriptor& d) {
  std::string s = std::string(finite_family_name(d.family)) + ":n=" + std::to_string(d.n) + ":(" +
                  std::to_string(d.m) + "," + std::to_string(d.k) + "," + std::to_string(d.l) + ")";
  if (d.minus_mod4) s += ":minus=" + std::to_string(*d.minus_mod4);
  return s;
}

}  // namespace awg

#endif  // AWG_CONJUGACY_HPP
