#ifndef AWG_CLI_HPP
#define AWG_CLI_HPP

// Command-line front end. run() takes the argument list without the program
// name and writes to the given streams, so tests drive it in-process.

#include <CLI11.hpp>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "awg/paths.hpp"
#include "awg/verify.hpp"

namespace awg::cli {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsage = 2, kBudget = 3 };

struct RunConfig {
  std::string group = "C";
  std::optional<std::size_t> n;
  Label window = 2;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::size_t max_nodes = 5'000'000;
  std::string out;
};

namespace detail {

inline AffineElement read_element(const std::string& text, std::optional<std::size_t> n) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(std::string("malformed element JSON: ") + e.what());
    }
    auto x = element_from_json(j);
    if (n && x.rank() != *n) throw RankMismatch(*n, x.rank());
    return x;
  }
  return parse_element(text, n);
}

inline GroupFamily read_group(const RunConfig& cfg, std::size_t n) {
  GroupFamily g(parse_family(cfg.group), n);
  return g;
}

inline AffineElement read_member(const std::string& text, const RunConfig& cfg) {
  auto x = read_element(text, cfg.n);
  if (!member_of(x, read_group(cfg, x.rank()))) throw NotAMember();
  return x;
}

inline nlohmann::json elements_json(const std::vector<AffineElement>& xs) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : xs) a.push_back(format_element(x));
  return a;
}

inline nlohmann::json verdict_json(const ConnectivityVerdict& v) {
  nlohmann::json j{{"verdict", to_string(v)}, {"connected", v.connected()},
                   {"justification", v.justification}};
  if (v.connected()) j["bound"] = v.bound;
  if (v.clause) j["clause"] = clause_name(*v.clause);
  if (v.certificate) j["certificate"] = certificate_name(*v.certificate);
  return j;
}

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline int classify(const std::string& text, const RunConfig& cfg, std::ostream& out) {
  auto x = read_element(text, cfg.n);
  if (!is_involution(x)) throw NotAnInvolution();
  auto g = read_group(cfg, x.rank());
  if (!member_of(x, g)) throw NotAMember();
  auto form = labelled_cycle_form(x);
  auto t = form.type();
  auto inv = invariants(x);
  auto d = class_of(x, g);
  if (cfg.format == "json") {
    nlohmann::json j{{"element", format_element(x)},
                     {"type", {t.m, t.k_e, t.k_o, t.l}},
                     {"sum", inv.sum},
                     {"sum_plus", inv.sum_plus},
                     {"minus", inv.minus},
                     {"f", *inv.f},
                     {"descriptor", descriptor_to_json(d)},
                     {"descriptor_text", to_string(d)}};
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "element,type,sum,sum_plus,minus,f,descriptor\n"
        << csv_field(format_element(x)) << "," << csv_field(to_string(t)) << "," << inv.sum << ","
        << inv.sum_plus << "," << inv.minus << "," << *inv.f << "," << to_string(d) << "\n";
  } else {
    out << "element     " << format_element(x) << "\n"
        << "type        " << to_string(t) << "\n"
        << "sum         " << inv.sum << "\n"
        << "sum_plus    " << inv.sum_plus << "\n"
        << "minus       " << inv.minus << "\n"
        << "f           " << *inv.f << "\n"
        << "descriptor  " << to_string(d) << "\n";
  }
  return kOk;
}

inline int commutes(const std::string& a, const std::string& b, const RunConfig& cfg, std::ostream& out) {
  auto x = read_element(a, cfg.n);
  auto y = read_element(b, cfg.n);
  bool c = commutes_fast(x, y);
  if (cfg.format == "json")
    out << nlohmann::json{{"x", format_element(x)}, {"y", format_element(y)}, {"commutes", c}}.dump(2)
        << "\n";
  else
    out << (c ? "true" : "false") << "\n";
  return kOk;
}

inline int neighbors(const std::string& text, const RunConfig& cfg, std::ostream& out) {
  auto x = read_member(text, cfg);
  if (!is_involution(x)) throw NotAnInvolution();
  auto d = class_of(x, read_group(cfg, x.rank()));
  auto ys = neighbors_in_class(x, d, cfg.window);
  if (cfg.format == "json") {
    out << nlohmann::json{{"element", format_element(x)},
                          {"descriptor", to_string(d)},
                          {"window", cfg.window},
                          {"neighbors", elements_json(ys)}}
               .dump(2)
        << "\n";
  } else if (cfg.format == "csv") {
    out << "neighbor\n";
    for (const auto& y : ys) out << csv_field(format_element(y)) << "\n";
  } else {
    out << "# " << to_string(d) << " window " << cfg.window << ": " << ys.size() << " neighbors\n";
    for (const auto& y : ys) out << format_element(y) << "\n";
  }
  return kOk;
}

inline int distance(const std::string& a, const std::string& b, const RunConfig& cfg, std::ostream& out) {
  auto x = read_member(a, cfg);
  auto y = read_member(b, cfg);
  if (!is_involution(x) || !is_involution(y)) throw NotAnInvolution();
  auto g = read_group(cfg, x.rank());
  SearchLimits limits{cfg.window, std::numeric_limits<int>::max(), cfg.max_nodes};
  auto r = awg::distance(x, y, g, limits);
  nlohmann::json lb = r && r->lower_bound ? nlohmann::json(*r->lower_bound) : nlohmann::json();
  if (cfg.format == "json") {
    nlohmann::json j{{"x", format_element(x)}, {"y", format_element(y)}, {"found", r.has_value()}};
    if (r) {
      j["length"] = r->length;
      j["window"] = r->window;
      j["lower_bound"] = lb;
      j["witness"] = elements_json(r->witness.vertices);
    }
    out << j.dump(2) << "\n";
  } else if (!r) {
    out << "no path within window " << cfg.window << "\n";
  } else {
    out << "length " << r->length << " (window " << r->window << ", lower bound "
        << (r->lower_bound ? std::to_string(*r->lower_bound) : "none") << ")\n";
    for (const auto& v : r->witness.vertices) out << format_element(v) << "\n";
  }
  return r ? kOk : kVerificationFailed;
}

inline int graph(const std::string& text, const RunConfig& cfg, std::ostream& out) {
  auto d = parse_descriptor(text);
  if (!is_realizable(d)) throw UnrealizableDescriptor();
  // No prediction is made for type A; the window graph is still emitted.
  std::optional<ConnectivityVerdict> verdict;
  if (d.family.tag() != Family::AffineA) verdict = predict_connectivity(d);
  const std::string verdict_text = verdict ? to_string(*verdict) : "none";
  auto wc = components_in_window(d, WindowSpec(cfg.window, cfg.max_nodes), true);
  std::optional<PathWitness> witness;
  if (constructive_case(d) && !wc.vertices.empty()) witness = constructive_path(wc.vertices.back(), d);

  std::vector<std::size_t> sizes(wc.count, 0);
  for (auto c : wc.component) ++sizes[c];
  std::size_t isolated = std::count(sizes.begin(), sizes.end(), std::size_t{1});

  if (cfg.format == "dot") {
    out << "graph commuting_involutions {\n"
        << "  label=" << dot_quote(to_string(d) + " L=" + std::to_string(cfg.window) + " " + verdict_text)
        << ";\n";
    for (std::size_t i = 0; i < wc.vertices.size(); ++i)
      out << "  v" << i << " [label=" << dot_quote(format_element(wc.vertices[i]))
          << ", component=" << wc.component[i] << "];\n";
    for (auto [a, b] : wc.edge_list) out << "  v" << a << " -- v" << b << ";\n";
    out << "}\n";
  } else if (cfg.format == "json") {
    nlohmann::json vs = nlohmann::json::array();
    for (std::size_t i = 0; i < wc.vertices.size(); ++i)
      vs.push_back({{"element", format_element(wc.vertices[i])}, {"component", wc.component[i]}});
    nlohmann::json es = nlohmann::json::array();
    for (auto [a, b] : wc.edge_list) es.push_back({a, b});
    nlohmann::json j{{"descriptor", descriptor_to_json(d)},
                     {"descriptor_text", to_string(d)},
                     {"window", cfg.window},
                     {"vertices", vs},
                     {"edges", es},
                     {"components", wc.count},
                     {"isolated", isolated}};
    if (verdict) j.update(verdict_json(*verdict));
    else j["verdict"] = verdict_text;
    if (witness) j["witness"] = elements_json(witness->vertices);
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "vertex,element,component,degree\n";
    std::vector<std::size_t> degree(wc.vertices.size(), 0);
    for (auto [a, b] : wc.edge_list) ++degree[a], ++degree[b];
    for (std::size_t i = 0; i < wc.vertices.size(); ++i)
      out << i << "," << csv_field(format_element(wc.vertices[i])) << "," << wc.component[i] << ","
          << degree[i] << "\n";
  } else {
    out << "descriptor  " << to_string(d) << "\n"
        << "window      " << cfg.window << "\n"
        << "verdict     " << verdict_text << "\n"
        << "reason      " << (verdict ? verdict->justification : "no prediction for this family") << "\n"
        << "vertices    " << wc.vertices.size() << "\n"
        << "edges       " << wc.edges << "\n"
        << "components  " << wc.count << "\n"
        << "isolated    " << isolated << "\n";
    if (isolated == wc.vertices.size() && !wc.vertices.empty()) out << "all vertices isolated\n";
    if (witness) {
      out << "witness     length " << witness->length() << "\n";
      for (const auto& v : witness->vertices) out << "  " << format_element(v) << "\n";
    }
  }
  return kOk;
}

inline int verify(const std::string& suite, const RunConfig& cfg, const VerifyConfig& vc, std::ostream& out) {
  Report r;
  if (suite == "all") {
    // Suites are independent; run them concurrently and assemble in order.
    r = Report{"all", vc.seed, {{"n", vc.n}, {"window", vc.window}}, {}};
    std::vector<std::future<Report>> jobs;
    for (const auto& s : suite_names())
      if (s != "all") jobs.push_back(std::async(std::launch::async, [s, vc] { return run_suite(s, vc); }));
    for (auto& j : jobs) r.append(j.get());
  } else {
    r = run_suite(suite, vc);
  }
  out << render_report(r, cfg.format == "dot" ? "text" : cfg.format);
  return r.passed() ? kOk : kVerificationFailed;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Commuting involution graphs in the classical affine Weyl groups", "awg"};
  app.require_subcommand(1);
  RunConfig cfg;
  VerifyConfig vc;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--group", cfg.group, "group family: A, B, Bbar, C, D")
        ->check(CLI::IsMember({"A", "B", "Bbar", "C", "D"}));
    sub->add_option("--n", cfg.n, "rank")->check(CLI::PositiveNumber);
    sub->add_option("--window", cfg.window, "label window L")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", cfg.seed, "sampling seed");
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "dot", "text"}));
    sub->add_option("--max-nodes", cfg.max_nodes, "node budget")->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out, "write output to a file");
  };

  std::string a, b;
  auto* c_classify = app.add_subcommand("classify", "labelled cycle form, invariants and class");
  c_classify->add_option("element", a, "element text or JSON")->required();
  auto* c_commutes = app.add_subcommand("commutes", "test whether two involutions commute");
  c_commutes->add_option("x", a)->required();
  c_commutes->add_option("y", b)->required();
  auto* c_neighbors = app.add_subcommand("neighbors", "class members commuting with an involution");
  c_neighbors->add_option("element", a)->required();
  auto* c_distance = app.add_subcommand("distance", "certified path between two class members");
  c_distance->add_option("x", a)->required();
  c_distance->add_option("y", b)->required();
  auto* c_graph = app.add_subcommand("graph", "window graph of a class with its verdict");
  c_graph->add_option("descriptor", a, "descriptor text or JSON")->required();
  auto* c_verify = app.add_subcommand("verify", "run a verification suite");
  c_verify->add_option("suite", a)->required()->check(CLI::IsMember(suite_names()));
  c_verify->add_option("--pairs", vc.pairs, "distance pairs per class");
  c_verify->add_option("--samples", vc.samples, "constructive samples per class");
  c_verify->add_option("--conjugations", vc.conjugations, "random conjugations per family");
  for (auto* s : {c_classify, c_commutes, c_neighbors, c_distance, c_graph, c_verify}) add_common(s);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  std::ostringstream buf;
  int code = kOk;
  try {
    if (c_classify->parsed()) {
      code = detail::classify(a, cfg, buf);
    } else if (c_commutes->parsed()) {
      code = detail::commutes(a, b, cfg, buf);
    } else if (c_neighbors->parsed()) {
      code = detail::neighbors(a, cfg, buf);
    } else if (c_distance->parsed()) {
      code = detail::distance(a, b, cfg, buf);
    } else if (c_graph->parsed()) {
      code = detail::graph(a, cfg, buf);
    } else {
      vc.n = cfg.n.value_or(4);
      vc.window = cfg.window;
      vc.seed = cfg.seed;
      vc.max_nodes = cfg.max_nodes;
      if (c_verify->count("--group")) vc.family = parse_family(cfg.group);
      code = detail::verify(a, cfg, vc, buf);
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (cfg.out.empty()) {
    out << buf.str();
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << cfg.out << "\n";
      return kUsage;
    }
    f << buf.str();
  }
  return code;
}

}  // namespace awg::cli

#endif  // AWG_CLI_HPP
