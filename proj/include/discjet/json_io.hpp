#ifndef DISCJET_JSON_IO_HPP
#define DISCJET_JSON_IO_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include <discjet/etale.hpp>
#include <discjet/hopf.hpp>
#include <discjet/jet_group.hpp>
#include <discjet/lie.hpp>
#include <discjet/rep.hpp>

namespace discjet
{

using json = nlohmann::json;

inline constexpr const char *schema_tag = "discjet/1";

// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump_canonical(const json &j);
// Parses text, mapping syntax errors to schema_error.
json parse_document(const std::string &text);
// Throws schema_error unless j is an object carrying "schema": "discjet/1".
void require_schema(const json &j);

json ring_to_json(const base_ring &ring);
ring_ptr ring_from_json(const json &j);

json element_to_json(const ring_element &x);
ring_element element_from_json(const json &j, const ring_ptr &ring);

json series_to_json(const truncated_series &s);
truncated_series series_from_json(const json &j, const ring_ptr &ring);

// {"n", "c", "base", "components"} plus the schema tag.
json jet_to_json(const jet_automorphism &g);
jet_automorphism jet_from_json(const json &j);
// Same layout without the group invariants.
series_tuple tuple_from_json(const json &j);

json derivation_to_json(const derivation &d);
derivation derivation_from_json(const json &j);

json poly_map_to_json(const poly_map &f);
poly_map poly_map_from_json(const json &j, const ring_ptr &ring, std::size_t n);

json roof_to_json(const roof_chart &roof);
roof_chart roof_from_json(const json &j);

json coord_variable_to_json(const coord_variable &v);
coord_variable coord_variable_from_json(const json &j, std::size_t n);

json coord_to_json(const coord_element &x);
coord_element coord_from_json(const json &j, const coordinate_space_ptr &space);
json tensor_to_json(const tensor_element &x);

json rep_to_json(const representation &rep);
representation rep_from_json(const json &j);

json matrix_to_json(const ring_matrix &m, const ring_ptr &ring);

// Coproduct, its unipotent chart, counit and grading for K^(c) in n variables.
json coproduct_document(std::size_t n, int c);
json antipode_document(std::size_t n, int c);

} // namespace discjet

#endif
