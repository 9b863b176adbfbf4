#ifndef AWG_IO_HPP
#define AWG_IO_HPP

// Labelled-cycle text syntax and JSON encodings for elements.
//
//   element := cycle (ws cycle)*
//   cycle   := '(' sign point [ws point] ')' '^' integer
//   sign    := '+' | '-'
//
// Points are 1-indexed. A transposition's label belongs to the first point
// written. Points not mentioned are fixed with label 0.

#include <cctype>
#include <charconv>
#include <optional>

#include "json.hpp"
#include "awg/involutions.hpp"

namespace awg {

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error("parse error at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  std::size_t pos() const { return pos_; }
  char peek() const { return done() ? '\0' : text_[pos_]; }

  void expect(char c) {
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "'" +
                           (done() ? " but reached end of input"
                                   : std::string(", found '") + peek() + "'"),
                       pos_);
    ++pos_;
  }

  Label integer() {
    auto start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    auto digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) throw ParseError("expected integer", start);
    Label value = 0;
    auto first = text_.data() + (text_[start] == '+' ? start + 1 : start);
    auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_)
      throw ParseError("integer out of range", start);
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses labelled-cycle text. If n is absent the rank is the largest point
/// mentioned.
inline AffineElement parse_element(std::string_view text, std::optional<std::size_t> n = {}) {
  struct Raw {
    int sign;
    Label a, b;
    bool pair;
    Label label;
    std::size_t pos;
  };
  std::vector<Raw> raws;
  detail::Scanner sc(text);
  sc.skip_ws();
  while (!sc.done()) {
    Raw r{};
    r.pos = sc.pos();
    sc.expect('(');
    sc.skip_ws();
    if (sc.peek() == '+') r.sign = 1;
    else if (sc.peek() == '-') r.sign = -1;
    else throw ParseError("expected sign '+' or '-'", sc.pos());
    sc.expect(sc.peek());
    sc.skip_ws();
    auto apos = sc.pos();
    r.a = sc.integer();
    if (r.a < 1) throw ParseError("points are numbered from 1", apos);
    sc.skip_ws();
    if (sc.peek() != ')') {
      auto bpos = sc.pos();
      r.b = sc.integer();
      if (r.b < 1) throw ParseError("points are numbered from 1", bpos);
      if (r.b == r.a) throw ParseError("transposition points must differ", bpos);
      r.pair = true;
      sc.skip_ws();
    }
    sc.expect(')');
    sc.expect('^');
    r.label = sc.integer();
    raws.push_back(r);
    sc.skip_ws();
  }
  Label maxp = 0;
  for (const auto& r : raws) maxp = std::max({maxp, r.a, r.pair ? r.b : 0});
  std::size_t rank = n.value_or(static_cast<std::size_t>(maxp));
  if (rank == 0) throw ParseError("empty element needs an explicit rank", 0);
  LabelledCycleForm form;
  form.n = rank;
  std::vector<bool> seen(rank, false);
  for (const auto& r : raws) {
    for (Label p : {r.a, r.pair ? r.b : r.a}) {
      if (static_cast<std::size_t>(p) > rank)
        throw ParseError("point " + std::to_string(p) + " exceeds rank " + std::to_string(rank),
                         r.pos);
    }
    auto a = static_cast<std::size_t>(r.a - 1);
    if (seen[a]) throw ParseError("point " + std::to_string(r.a) + " repeated", r.pos);
    seen[a] = true;
    if (r.pair) {
      auto b = static_cast<std::size_t>(r.b - 1);
      if (seen[b]) throw ParseError("point " + std::to_string(r.b) + " repeated", r.pos);
      seen[b] = true;
      form.cycles.push_back({r.sign > 0 ? CycleKind::PosTransposition : CycleKind::NegTransposition,
                             a, b, r.label});
    } else {
      form.cycles.push_back({r.sign > 0 ? CycleKind::FixedPoint : CycleKind::NegOneCycle, a, a,
                             r.label});
    }
  }
  return to_element(form);
}

/// Formats an element in labelled-cycle text. Works for involutions and for
/// any element of the same shape (e.g. translations on fixed points); throws
/// for elements the syntax cannot express.
inline std::string format_element(const AffineElement& x, bool include_fixed_points = true) {
  const auto& s = x.sigma();
  const auto& v = x.v();
  std::string out;
  auto emit = [&](const std::string& cyc) {
    if (!out.empty()) out += ' ';
    out += cyc;
  };
  for (std::size_t i = 0; i < x.rank(); ++i) {
    auto t = s.target(i);
    if (t == i) {
      if (s.sign(i) > 0 && v[i] == 0 && !include_fixed_points) continue;
      emit(std::string("(") + (s.sign(i) > 0 ? "+" : "-") + std::to_string(i + 1) + ")^" +
           std::to_string(v[i]));
      continue;
    }
    if (s.target(t) != i || s.sign(t) != s.sign(i) ||
        (s.sign(i) > 0 ? v[t] != -v[i] : v[t] != v[i]))
      throw Error("element has no labelled-cycle text form; use JSON");
    if (t < i) continue;
    emit(std::string("(") + (s.sign(i) > 0 ? "+" : "-") + std::to_string(i + 1) + " " +
         std::to_string(t + 1) + ")^" + std::to_string(v[i]));
  }
  return out;
}

/// {"n":7,"sigma":[[2,1],[1,-1],...],"v":[...]} with 1-indexed targets.
inline nlohmann::json element_to_json(const AffineElement& x) {
  nlohmann::json sigma = nlohmann::json::array();
  for (std::size_t i = 0; i < x.rank(); ++i)
    sigma.push_back({x.sigma().target(i) + 1, x.sigma().sign(i)});
  return {{"n", x.rank()}, {"sigma", sigma}, {"v", x.v()}};
}

inline AffineElement element_from_json(const nlohmann::json& j) {
  try {
    auto n = j.at("n").get<std::size_t>();
    const auto& sj = j.at("sigma");
    if (sj.size() != n) throw Error("sigma length differs from n");
    std::vector<std::pair<std::size_t, int>> img;
    for (const auto& e : sj) {
      auto t = e.at(0).get<long long>();
      if (t < 1 || static_cast<std::size_t>(t) > n) throw Error("sigma target out of range");
      img.emplace_back(static_cast<std::size_t>(t - 1), e.at(1).get<int>());
    }
    auto v = j.at("v").get<std::vector<Label>>();
    return {SignedPermutation::from_images(img), std::move(v)};
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed element JSON: ") + e.what());
  }
}

}  // namespace awg

#endif  // AWG_IO_HPP
