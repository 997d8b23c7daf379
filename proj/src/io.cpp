#include "mdeg/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace mdeg::io {

namespace {

std::string field_error(std::string_view field, const std::string& msg) {
  return std::string(field) + ": " + msg;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view text, std::string_view field) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw InputError(field_error(field, "expected an integer, got '" + std::string(text) + "'"));
  }
  return value;
}

int json_int(const json& j, std::string_view field) {
  if (!j.is_number_integer()) throw InputError(field_error(field, "expected an integer"));
  return j.get<int>();
}

/// Parses "L i , p R" where L/R are the given brackets.
Vertex parse_bracketed(std::string_view term, char open, char close, std::string_view field) {
  term = trim(term);
  if (term.size() < 2 || term.front() != open || term.back() != close) {
    throw InputError(field_error(field, "malformed term '" + std::string(term) + "'"));
  }
  return parse_vertex(term.substr(1, term.size() - 2), field);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= s.size(); ++k) {
    if (k == s.size() || s[k] == sep) {
      parts.push_back(s.substr(start, k - start));
      start = k + 1;
    }
  }
  return parts;
}

std::map<Vertex, int> parse_triples(std::string_view text, std::string_view field) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(field_error(field, std::string("invalid JSON: ") + e.what()));
  }
  if (!j.is_array()) throw InputError(field_error(field, "expected a list of [i,p,k] triples"));
  std::map<Vertex, int> out;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) {
      throw InputError(field_error(field, "expected a list of [i,p,k] triples"));
    }
    Vertex v{json_int(t[0], field), json_int(t[1], field)};
    out[v] += json_int(t[2], field);
  }
  return out;
}

}  // namespace

QuiverSpec parse_quiver_spec(const json& j) {
  if (!j.is_object()) throw InputError("quiver: expected a JSON object");
  QuiverSpec spec;
  if (j.contains("format") && json_int(j["format"], "format") != kFormatVersion) {
    throw InputError("format: unsupported version " + j["format"].dump());
  }
  if (!j.contains("type") || !j["type"].is_string()) throw InputError("type: missing or not a string");
  const auto type = j["type"].get<std::string>();
  if (type == "A") {
    spec.type = DynkinType::A;
  } else if (type == "D") {
    spec.type = DynkinType::D;
  } else if (type == "E") {
    spec.type = DynkinType::E;
  } else {
    throw InputError("type: expected \"A\", \"D\" or \"E\", got \"" + type + "\"");
  }
  if (!j.contains("rank")) throw InputError("rank: missing");
  spec.rank = json_int(j["rank"], "rank");
  if (!j.contains("arrows") || !j["arrows"].is_array()) throw InputError("arrows: missing or not a list");
  for (const auto& a : j["arrows"]) {
    if (!a.is_array() || a.size() != 2) throw InputError("arrows: each arrow must be [source,target]");
    spec.arrows.emplace_back(json_int(a[0], "arrows"), json_int(a[1], "arrows"));
  }
  if (j.contains("height")) {
    const auto& h = j["height"];
    if (!h.is_object()) throw InputError("height: expected an object {\"vertex\": value}");
    std::map<int, int> values;
    for (auto it = h.begin(); it != h.end(); ++it) {
      values[parse_int(it.key(), "height")] = json_int(it.value(), "height");
    }
    spec.height = values;
  }
  // "root": vertex, or [vertex, value]; used only when "height" is absent.
  if (j.contains("root")) {
    const json& r = j["root"];
    if (r.is_array()) {
      if (r.size() != 2) throw InputError("root: expected a vertex or [vertex, value]");
      spec.height_root = json_int(r[0], "root");
      spec.height_root_value = json_int(r[1], "root");
    } else {
      spec.height_root = json_int(r, "root");
    }
  }
  return spec;
}

Quiver load_quiver(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("quiver file: cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("quiver file: invalid JSON in '" + path + "': " + e.what());
  }
  return Quiver::build(parse_quiver_spec(j));
}

json quiver_to_json(const Quiver& q) {
  json arrows = json::array();
  for (auto [s, t] : q.arrows()) arrows.push_back({s, t});
  json height = json::object();
  for (int i = 1; i <= q.rank(); ++i) height[std::to_string(i)] = q.height(i);
  return {{"format", kFormatVersion},
          {"type", std::string(1, type_letter(q.type()))},
          {"rank", q.rank()},
          {"arrows", arrows},
          {"height", height}};
}

Vertex parse_vertex(std::string_view text, std::string_view field) {
  auto parts = split(text, ',');
  if (parts.size() != 2) {
    throw InputError(field_error(field, "expected 'i,p', got '" + std::string(text) + "'"));
  }
  return {parse_int(parts[0], field), parse_int(parts[1], field)};
}

std::pair<int, int> parse_window(std::string_view text, std::string_view field) {
  auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    throw InputError(field_error(field, "expected 'P0..P1', got '" + std::string(text) + "'"));
  }
  int lo = parse_int(text.substr(0, dots), field);
  int hi = parse_int(text.substr(dots + 2), field);
  if (lo > hi) throw InputError(field_error(field, "empty window " + std::string(text)));
  return {lo, hi};
}

LaurentMonomial parse_monomial(std::string_view text, std::string_view field) {
  text = trim(text);
  if (text.empty()) throw InputError(field_error(field, "empty monomial"));
  if (text.front() == '[') return LaurentMonomial(parse_triples(text, field));
  if (text == "1") return {};
  LaurentMonomial m;
  for (auto term : split(text, '*')) {
    term = trim(term);
    int exponent = 1;
    if (auto caret = term.find('^'); caret != std::string_view::npos) {
      exponent = parse_int(term.substr(caret + 1), field);
      term = trim(term.substr(0, caret));
    }
    if (term.empty() || term.front() != 'Y') {
      throw InputError(field_error(field, "expected a factor Y[i,p], got '" + std::string(term) + "'"));
    }
    m *= LaurentMonomial::y(parse_bracketed(term.substr(1), '[', ']', field), exponent);
  }
  return m;
}

DerivedObject parse_object(std::string_view text, std::string_view field) {
  text = trim(text);
  if (text.empty()) throw InputError(field_error(field, "empty object"));
  if (text.front() == '[') {
    auto triples = parse_triples(text, field);
    for (const auto& [v, k] : triples) {
      if (k < 0) throw InputError(field_error(field, "negative multiplicity at " + to_string(v)));
    }
    return DerivedObject(triples);
  }
  if (text == "0") return {};
  DerivedObject x;
  for (auto term : split(text, '+')) {
    term = trim(term);
    if (term.empty() || term.front() != 'V') {
      throw InputError(field_error(field, "expected a summand V(i,p), got '" + std::string(term) + "'"));
    }
    x.add(parse_bracketed(term.substr(1), '(', ')', field));
  }
  return x;
}

json vertex_to_json(const Vertex& v) { return {v.i, v.p}; }

json monomial_to_json(const LaurentMonomial& m) {
  json out = json::array();
  for (const auto& [v, e] : m.exponents()) out.push_back({v.i, v.p, e});
  return out;
}

json object_to_json(const DerivedObject& x) {
  json out = json::array();
  for (const auto& [v, k] : x.multiplicities()) out.push_back({v.i, v.p, k});
  return out;
}

json a_vector_to_json(const AMonomialVector& v) {
  json out = json::array();
  for (const auto& [label, e] : v) {
    if (e != 0) out.push_back({label.i, label.p, e});
  }
  return out;
}

json parallelogram_to_json(const Quiver& q, const Parallelogram& par) {
  DerivedObject middle = middle_object(q, par);
  return {{"start", vertex_to_json(par.start)},
          {"end", vertex_to_json(par.end)},
          {"a", par.a},
          {"b", par.b},
          {"condition", to_string(par.kind)},
          {"middles", {vertex_to_json(par.middles.first), vertex_to_json(par.middles.second)}},
          {"middle_object", middle.to_string()}};
}

json hammock_to_json(const Hammock& h, int p_lo, int p_hi) {
  json dims = json::array();
  for (const auto& [v, d] : h.dims) {
    if (v.p >= p_lo && v.p <= p_hi) dims.push_back({v.i, v.p, d});
  }
  return {{"format", kFormatVersion},
          {"source", vertex_to_json(h.source)},
          {"window", {p_lo, p_hi}},
          {"dims", dims}};
}

json move_to_json(const Quiver& q, const FusionMove& mv) {
  return {{"fuse", {vertex_to_json(mv.y1), vertex_to_json(mv.y2)}},
          {"triangle", parallelogram_to_json(q, mv.parallelogram)},
          {"result", mv.result.to_string()}};
}

json chain_to_json(const Quiver& q, const std::vector<FusionMove>& chain) {
  json out = json::array();
  for (const auto& mv : chain) out.push_back(move_to_json(q, mv));
  return out;
}

json deg_poset_to_json(const Quiver& q, const DegPoset& poset) {
  json elements = json::array();
  for (const auto& x : poset.elements()) {
    elements.push_back({{"object", x.to_string()}, {"monomial", to_monomial(x).to_string()}});
  }
  json covers = json::array();
  for (const auto& e : poset.covers()) {
    covers.push_back({{"upper", e.upper}, {"lower", e.lower}, {"move", move_to_json(q, e.move)}});
  }
  json relation = json::array();
  for (auto [lo, up] : poset.relation()) relation.push_back({lo, up});
  return {{"format", kFormatVersion},
          {"top", poset.top_index()},
          {"size", poset.size()},
          {"elements", elements},
          {"covers", covers},
          {"relation", relation}};
}

json closure_to_json(const ClosurePoset& poset) {
  json elements = json::array();
  for (const auto& m : poset.elements) elements.push_back(m.to_string());
  json covers = json::array();
  for (auto [lo, up] : poset.covers) covers.push_back({{"upper", up}, {"lower", lo}});
  json relation = json::array();
  for (auto [lo, up] : poset.relation) relation.push_back({lo, up});
  return {{"format", kFormatVersion},
          {"top", poset.top},
          {"size", poset.elements.size()},
          {"exact", poset.exact},
          {"bounded_search", !poset.exact},
          {"search_bound", poset.search_bound},
          {"elements", elements},
          {"covers", covers},
          {"relation", relation}};
}

json strata_to_json(const StrataResult& strata) {
  json list = json::array();
  for (const auto& s : strata.strata) {
    list.push_back({{"v", a_vector_to_json(s.v)}, {"monomial", s.m.to_string()}});
  }
  return {{"format", kFormatVersion},
          {"count", strata.strata.size()},
          {"bounded_search", strata.bounded_search},
          {"search_bound", strata.search_bound},
          {"strata", list}};
}

json theorem_report_to_json(const TheoremReport& r) {
  json bad = json::array();
  for (const auto& c : r.counterexamples) {
    bad.push_back({{"n", c.n.to_string()},
                   {"m", c.m.to_string()},
                   {"nakajima", c.nakajima},
                   {"degeneration", c.degeneration}});
  }
  return {{"format", kFormatVersion},
          {"quiver", r.quiver},
          {"window", {r.p_lo, r.p_hi}},
          {"max_factors", r.max_factors},
          {"vertices", r.vertices},
          {"monomials", r.monomials},
          {"pairs", r.pairs},
          {"comparable_pairs", r.comparable_pairs},
          {"fusion_moves", r.fusion_moves_checked},
          {"counterexamples", bad},
          {"equivalent", r.ok()}};
}

json lemma_report_to_json(const LemmaReport& r) {
  json bad = json::array();
  for (const auto& f : r.failures) {
    bad.push_back({{"y1", vertex_to_json(f.y1)}, {"y2", vertex_to_json(f.y2)}, {"reason", f.reason}});
  }
  return {{"format", kFormatVersion},
          {"quiver", r.quiver},
          {"window", {r.p_lo, r.p_hi}},
          {"pairs", r.pairs},
          {"triangles", r.triangles},
          {"failures", bad},
          {"holds", r.ok()}};
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string deg_poset_to_dot(const DegPoset& poset) {
  std::ostringstream os;
  os << "digraph deg {\n  rankdir=TB;\n";
  for (std::size_t k = 0; k < poset.size(); ++k) {
    os << "  n" << k << " [label=\"" << dot_escape(to_monomial(poset.elements()[k]).to_string())
       << "\"];\n";
  }
  for (const auto& e : poset.covers()) os << "  n" << e.upper << " -> n" << e.lower << ";\n";
  os << "}\n";
  return os.str();
}

std::string closure_to_dot(const ClosurePoset& poset) {
  std::ostringstream os;
  os << "digraph closure {\n  rankdir=TB;\n";
  for (std::size_t k = 0; k < poset.elements.size(); ++k) {
    os << "  n" << k << " [label=\"" << dot_escape(poset.elements[k].to_string()) << "\"];\n";
  }
  for (auto [lo, up] : poset.covers) os << "  n" << up << " -> n" << lo << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace mdeg::io
