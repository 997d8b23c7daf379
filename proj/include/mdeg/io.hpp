#pragma once

#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "mdeg/degeneration.hpp"
#include "mdeg/hammock.hpp"
#include "mdeg/monomial.hpp"
#include "mdeg/object.hpp"
#include "mdeg/quiver.hpp"
#include "mdeg/strata.hpp"
#include "mdeg/type_a.hpp"

namespace mdeg::io {

using nlohmann::json;

inline constexpr int kFormatVersion = 1;

// Every parser throws InputError with a message naming the offending field.

/// {"type":"A","rank":3,"arrows":[[1,2],[3,2]],"height":{"1":1,"2":0,"3":1}}
QuiverSpec parse_quiver_spec(const json& j);
Quiver load_quiver(const std::string& path);
json quiver_to_json(const Quiver& q);

/// "i,p"
Vertex parse_vertex(std::string_view text, std::string_view field);
/// "P0..P1"
std::pair<int, int> parse_window(std::string_view text, std::string_view field);

/// "Y[1,1]*Y[1,3]^2", "1", or a JSON list [[i,p,exp],...].
LaurentMonomial parse_monomial(std::string_view text, std::string_view field);
/// "V(2,0)+V(3,1)", "0", or a JSON list [[i,p,mult],...].
DerivedObject parse_object(std::string_view text, std::string_view field);

json vertex_to_json(const Vertex& v);
json monomial_to_json(const LaurentMonomial& m);
json object_to_json(const DerivedObject& x);
json a_vector_to_json(const AMonomialVector& v);
json parallelogram_to_json(const Quiver& q, const Parallelogram& par);
json hammock_to_json(const Hammock& h, int p_lo, int p_hi);
json move_to_json(const Quiver& q, const FusionMove& mv);
json chain_to_json(const Quiver& q, const std::vector<FusionMove>& chain);
json deg_poset_to_json(const Quiver& q, const DegPoset& poset);
json closure_to_json(const ClosurePoset& poset);
json strata_to_json(const StrataResult& strata);
json theorem_report_to_json(const TheoremReport& r);
json lemma_report_to_json(const LemmaReport& r);

/// Graphviz digraph: one node per element labelled by its monomial, edges = covers.
std::string deg_poset_to_dot(const DegPoset& poset);
std::string closure_to_dot(const ClosurePoset& poset);

}  // namespace mdeg::io
