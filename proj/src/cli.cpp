#include "mdeg/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include "mdeg/io.hpp"

namespace mdeg::cli {

namespace {

using io::json;

enum class Emit { Json, Dot, Table };

struct RunConfig {
  std::string quiver_path;
  std::string window;
  int max_factors = 3;
  std::optional<int> search_bound;
  Emit emit = Emit::Json;

  // Per-command arguments.
  std::string from, to, start, end, cond = "C1";
  int a = 0, b = 0;
  std::string n, m, w, object, x, y;
  std::string dot_file, json_file;
  bool refine = false;
  bool bounded = false;
  bool levels = false;
  bool allow_nondominant = false;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InputError("output file: cannot write '" + path + "'");
  f << text;
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_hom(const RunConfig& cfg, std::ostream& out) {
  Quiver q = io::load_quiver(cfg.quiver_path);
  Vertex x = io::parse_vertex(cfg.from, "--from");
  Vertex y = io::parse_vertex(cfg.to, "--to");
  q.require_hat_i(x, "--from");
  q.require_hat_i(y, "--to");
  out << hom_dim(q, x, y) << '\n';
  return kOk;
}

int cmd_hammock(const RunConfig& cfg, std::ostream& out) {
  Quiver q = io::load_quiver(cfg.quiver_path);
  Vertex x = io::parse_vertex(cfg.from, "--from");
  Hammock h = knit_hammock(q, x);
  auto [lo, hi] = cfg.window.empty() ? std::pair{x.p, h.p_max()}
                                     : io::parse_window(cfg.window, "--window");
  print_json(out, io::hammock_to_json(h, lo, hi));
  return kOk;
}

int cmd_triangle(const RunConfig& cfg, std::ostream& out) {
  Quiver q = io::load_quiver(cfg.quiver_path);
  Vertex s = io::parse_vertex(cfg.start, "--start");
  Vertex e = io::parse_vertex(cfg.end, "--end");
  q.require_hat_i(s, "--start");
  q.require_hat_i(e, "--end");
  auto par = parallelogram_solve(q, s, e);
  json j{{"format", io::kFormatVersion},
         {"ext1", ext1_dim(q, e, s)},
         {"triangle", par ? io::parallelogram_to_json(q, *par) : json(nullptr)}};
  print_json(out, j);
  return par ? kOk : kRejected;
}

int cmd_formula(const RunConfig& cfg, std::ostream& out) {
  Quiver q = io::load_quiver(cfg.quiver_path);
  Vertex s = io::parse_vertex(cfg.start, "--start");
  q.require_hat_i(s, "--start");
  ParallelogramKind kind;
  if (cfg.cond == "C1") {
    kind = ParallelogramKind::C1;
  } else if (cfg.cond == "C2") {
    kind = ParallelogramKind::C2;
  } else {
    throw InputError("--cond: expected C1 or C2, got '" + cfg.cond + "'");
  }
  auto par = make_parallelogram(q, s, cfg.a, cfg.b, kind);
  json j{{"format", io::kFormatVersion},
         {"parallelogram", par ? io::parallelogram_to_json(q, *par) : json(nullptr)},
         {"v", par ? io::a_vector_to_json(formula_a_monomial(*par)) : json(nullptr)}};
  print_json(out, j);
  return par ? kOk : kRejected;
}

int cmd_order(const RunConfig& cfg, std::ostream& out) {
  Quiver q = io::load_quiver(cfg.quiver_path);
  LaurentMonomial n = io::parse_monomial(cfg.n, "--n");
  LaurentMonomial m = io::parse_monomial(cfg.m, "--m");
  NakajimaOptions opts;
  opts.require_dominant = !cfg.allow_nondominant;
  auto v = nakajima_leq(q, n, m, opts);
  json j{{"format", io::kFormatVersion},
         {"n", n.to_string()},
         {"m", m.to_string()},
         {"comparable", v.has_value()},
         {"verdict", v ? "comparable" : "incomparable"},
         {"v", v ? io::a_vector_to_json(*v) : json(nullptr)}};
  print_json(out, j);
  return v ? kOk : kRejected;
}

int cmd_closure(const RunConfig& cfg, std::ostream& out) {
  Quiver q = io::load_quiver(cfg.quiver_path);
  LaurentMonomial m = io::parse_monomial(cfg.m, "--m");
  ClosurePoset poset = downward_closure(q, m, cfg.search_bound, cfg.levels);
  if (!cfg.dot_file.empty()) write_file(cfg.dot_file, io::closure_to_dot(poset));
  switch (cfg.emit) {
    case Emit::Dot: out << io::closure_to_dot(poset); break;
    case Emit::Json: print_json(out, io::closure_to_json(poset)); break;
    case Emit::Table:
      for (std::size_t k = 0; k < poset.elements.size(); ++k) {
        out << k << '\t' << poset.elements[k].to_string() << (k == poset.top ? "\ttop" : "") << '\n';
      }
      for (auto [lo, up] : poset.covers) out << up << " > " << lo << '\n';
      if (!poset.exact) out << "# bounded search, bound " << poset.search_bound << '\n';
      break;
  }
  return kOk;
}

int cmd_strata(const RunConfig& cfg, std::ostream& out) {
  Quiver q = io::load_quiver(cfg.quiver_path);
  LaurentMonomial w = io::parse_monomial(cfg.w, "--w");
  if (!w.is_dominant()) throw InputError("--w: graded dimensions must be nonnegative");
  GradedDims dims{w.exponents(), {}};
  StrataResult res = cfg.levels    ? strata_by_levels(q, dims)
                     : cfg.bounded ? strata_bounded_search(q, dims, cfg.search_bound.value_or(
                                                                        default_search_bound(w)))
                                   : strata(q, dims, cfg.search_bound);
  if (cfg.emit == Emit::Table) {
    for (const auto& s : res.strata) out << io::a_vector_to_json(s.v).dump() << '\t' << s.m.to_string() << '\n';
    if (res.bounded_search) out << "# bounded search, bound " << res.search_bound << '\n';
  } else {
    print_json(out, io::strata_to_json(res));
  }
  return kOk;
}

int cmd_deg(const RunConfig& cfg, std::ostream& out) {
  Quiver q = io::load_quiver(cfg.quiver_path);
  DerivedObject y = io::parse_object(cfg.object, "--object");
  DegPoset poset = deg_set(q, y);
  if (!cfg.dot_file.empty()) write_file(cfg.dot_file, io::deg_poset_to_dot(poset));
  if (!cfg.json_file.empty()) write_file(cfg.json_file, io::deg_poset_to_json(q, poset).dump(2) + "\n");
  switch (cfg.emit) {
    case Emit::Dot: out << io::deg_poset_to_dot(poset); break;
    case Emit::Json: print_json(out, io::deg_poset_to_json(q, poset)); break;
    case Emit::Table:
      for (std::size_t k = 0; k < poset.size(); ++k) {
        out << k << '\t' << poset.elements()[k].to_string() << '\t'
            << to_monomial(poset.elements()[k]).to_string() << (k == poset.top_index() ? "\ttop" : "")
            << '\n';
      }
      for (const auto& e : poset.covers()) out << e.upper << " > " << e.lower << '\n';
      break;
  }
  return kOk;
}

int cmd_order_delta(const RunConfig& cfg, std::ostream& out) {
  Quiver q = io::load_quiver(cfg.quiver_path);
  DerivedObject x = io::parse_object(cfg.x, "--x");
  DerivedObject y = io::parse_object(cfg.y, "--y");
  auto chain = leq_delta(q, x, y, cfg.refine);
  json j{{"format", io::kFormatVersion},
         {"x", x.to_string()},
         {"y", y.to_string()},
         {"degenerates", chain.has_value()},
         {"chain", chain ? io::chain_to_json(q, *chain) : json(nullptr)}};
  print_json(out, j);
  return chain ? kOk : kRejected;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  Quiver q = io::load_quiver(cfg.quiver_path);
  auto [lo, hi] = io::parse_window(cfg.window, "--window");
  if (cfg.max_factors < 0) throw InputError("--max-factors: must be >= 0");
  TheoremReport r = verify_theorem(q, lo, hi, cfg.max_factors);
  print_json(out, io::theorem_report_to_json(r));
  return r.ok() ? kOk : kCounterexample;
}

int cmd_verify_lemma(const RunConfig& cfg, std::ostream& out) {
  Quiver q = io::load_quiver(cfg.quiver_path);
  auto [lo, hi] = io::parse_window(cfg.window, "--window");
  LemmaReport r = verify_pairwise_lemma(q, lo, hi);
  print_json(out, io::lemma_report_to_json(r));
  return r.ok() ? kOk : kCounterexample;
}

// Windows like "-2..2" start with '-', which the option parser would take for a flag.
std::vector<std::string> join_negative_values(const std::vector<std::string>& args) {
  static const std::vector<std::string> value_options{"--window", "--from", "--to", "--start",
                                                      "--end"};
  std::vector<std::string> out;
  for (std::size_t k = 0; k < args.size(); ++k) {
    const auto& a = args[k];
    if (k + 1 < args.size() && !args[k + 1].empty() && args[k + 1][0] == '-' &&
        std::find(value_options.begin(), value_options.end(), a) != value_options.end()) {
      out.push_back(a + "=" + args[k + 1]);
      ++k;
    } else {
      out.push_back(a);
    }
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Nakajima-order and derived-degeneration engine for Dynkin quivers", "mdeg"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::function<int(const RunConfig&, std::ostream&)> action;

  const std::map<std::string, Emit> emit_names{
      {"json", Emit::Json}, {"dot", Emit::Dot}, {"table", Emit::Table}};

  auto add = [&](const std::string& name, const std::string& help,
                 std::function<int(const RunConfig&, std::ostream&)> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--q", cfg.quiver_path, "quiver spec file (JSON)")->required();
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  auto* hom = add("hom", "dim Hom(V(from), V(to))", cmd_hom);
  hom->add_option("--from", cfg.from, "source vertex i,p")->required();
  hom->add_option("--to", cfg.to, "target vertex j,s")->required();

  auto* hammock = add("hammock", "hammock of V(from) as JSON", cmd_hammock);
  hammock->add_option("--from", cfg.from, "source vertex i,p")->required();
  hammock->add_option("--window", cfg.window, "p-range P0..P1 to print");

  auto* triangle = add("triangle", "solve the parallelogram start -> end", cmd_triangle);
  triangle->add_option("--start", cfg.start, "left corner i,p")->required();
  triangle->add_option("--end", cfg.end, "right corner i',p'")->required();

  auto* formula = add("formula", "A-exponent box of a parallelogram", cmd_formula);
  formula->add_option("--start", cfg.start, "left corner i,p")->required();
  formula->add_option("--a", cfg.a, "long side a")->required();
  formula->add_option("--b", cfg.b, "short side b")->required();
  formula->add_option("--cond", cfg.cond, "C1 or C2");

  auto* order = add("order", "decide n <= m in Nakajima's order", cmd_order);
  order->add_option("--n", cfg.n, "monomial n")->required();
  order->add_option("--m", cfg.m, "monomial m")->required();
  order->add_flag("--allow-nondominant", cfg.allow_nondominant, "accept Laurent monomials");

  auto* closure = add("closure", "dominant monomials below m", cmd_closure);
  closure->add_option("--m", cfg.m, "dominant monomial")->required();
  closure->add_option("--search-bound", cfg.search_bound, "lower exponent bound for D/E search");
  closure->add_flag("--levels", cfg.levels, "exact level-by-level enumeration (any type)");
  closure->add_option("--emit", cfg.emit, "json|dot|table")->transform(CLI::CheckedTransformer(emit_names));
  closure->add_option("--dot", cfg.dot_file, "also write the Hasse diagram here");

  auto* strata_cmd = add("strata", "nonempty strata of the graded quiver variety of W", cmd_strata);
  strata_cmd->add_option("--w", cfg.w, "W as a monomial, e.g. Y[2,-2]*Y[2,0]")->required();
  strata_cmd->add_option("--search-bound", cfg.search_bound, "lower exponent bound for the search");
  strata_cmd->add_flag("--bounded", cfg.bounded, "force the bounded A^{-1} search");
  strata_cmd->add_flag("--levels", cfg.levels, "exact level-by-level enumeration (any type)");
  strata_cmd->add_option("--emit", cfg.emit, "json|table")->transform(CLI::CheckedTransformer(emit_names));

  auto* deg = add("deg", "Deg(Y) with its Hasse diagram", cmd_deg);
  deg->add_option("--object", cfg.object, "object, e.g. V(2,-2)+V(2,0)")->required();
  deg->add_option("--dot", cfg.dot_file, "write the Hasse diagram as DOT");
  deg->add_option("--json", cfg.json_file, "write the poset as JSON");
  deg->add_option("--emit", cfg.emit, "json|dot|table")->transform(CLI::CheckedTransformer(emit_names));

  auto* odelta = add("order-delta", "decide x <=_Delta y with a witness chain", cmd_order_delta);
  odelta->add_option("--x", cfg.x, "lower object")->required();
  odelta->add_option("--y", cfg.y, "upper object")->required();
  odelta->add_flag("--refine", cfg.refine, "use a chain of Hasse covers");

  auto* verify = add("verify", "exhaustive order-equivalence check on a window", cmd_verify);
  verify->add_option("--window", cfg.window, "p-range P0..P1")->required();
  verify->add_option("--max-factors", cfg.max_factors, "largest monomial degree");

  auto* vlemma = add("verify-lemma", "two-term triangle lemma on a window", cmd_verify_lemma);
  vlemma->add_option("--window", cfg.window, "p-range P0..P1")->required();

  std::vector<std::string> reversed = join_negative_values(args);
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\nrun 'mdeg --help' for usage\n";
    return kUsage;
  }

  try {
    return action(cfg, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedType& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace mdeg::cli
