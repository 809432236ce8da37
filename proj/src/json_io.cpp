#include <discjet/json_io.hpp>

#include <algorithm>

#include <discjet/errors.hpp>

namespace discjet
{

namespace
{

const json &field(const json &j, const char *key)
{
    if (!j.is_object()) {
        throw schema_error(std::string("expected an object holding '") + key + "'");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        throw schema_error(std::string("missing field '") + key + "'");
    }
    return *it;
}

const json &array_field(const json &j, const char *key)
{
    const auto &a = field(j, key);
    if (!a.is_array()) {
        throw schema_error(std::string("field '") + key + "' must be an array");
    }
    return a;
}

long integer(const json &j, const char *what)
{
    if (!j.is_number_integer()) {
        throw schema_error(std::string(what) + " must be an integer");
    }
    return j.get<long>();
}

int positive_int(const json &j, const char *key, int lo)
{
    const long v = integer(field(j, key), key);
    if (v < lo || v > 1000) {
        throw schema_error(std::string("field '") + key + "' out of range");
    }
    return static_cast<int>(v);
}

rational rational_from_json(const json &j)
{
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return rational(j.get<long>());
    }
    throw schema_error("coefficient must be a rational string \"p/q\" or an integer");
}

multi_index index_from_json(const json &j, std::size_t n)
{
    if (!j.is_array() || j.size() != n) {
        throw schema_error("multi-index must be an array of " + std::to_string(n) + " exponents");
    }
    std::vector<int> e;
    for (const auto &x : j) {
        const long v = integer(x, "exponent");
        if (v < 0 || v > multi_index::max_exponent) {
            throw schema_error("exponent out of range");
        }
        e.push_back(static_cast<int>(v));
    }
    return multi_index(std::span<const int>(e));
}

json index_to_json(const multi_index &j)
{
    return j.exponents();
}

std::size_t checked_dim(const json &j, const char *key)
{
    const int n = positive_int(j, key, 1);
    if (n > static_cast<int>(multi_index::max_dim)) {
        throw schema_error("dimension above " + std::to_string(multi_index::max_dim) + " is not supported");
    }
    return static_cast<std::size_t>(n);
}

json monomial_vars(const coordinate_space &space, std::span<const std::uint16_t> exponents, std::size_t offset)
{
    json vars = json::array();
    for (std::size_t i = 0; i < space.size(); ++i) {
        if (const auto e = exponents[offset + i]) {
            auto v = coord_variable_to_json(space.variables()[i]);
            v["e"] = e;
            vars.push_back(std::move(v));
        }
    }
    return vars;
}

void add_vars(const json &vars, const coordinate_space &space, ring_monomial &m, std::size_t offset)
{
    if (!vars.is_array()) {
        throw schema_error("monomial variables must be an array");
    }
    for (const auto &v : vars) {
        const auto var = coord_variable_from_json(v, space.dim());
        const auto index = space.index_of(var);
        if (!index) {
            throw schema_error("coordinate a^" + std::to_string(var.k + 1) + "_" + var.j.to_string()
                               + " out of range for c = " + std::to_string(space.order()));
        }
        const long e = integer(field(v, "e"), "variable exponent");
        if (e < 1 || e > 60000) {
            throw schema_error("variable exponent out of range");
        }
        m[offset + *index] = static_cast<std::uint16_t>(m[offset + *index] + e);
    }
}

std::string monomial_text(const coordinate_space &space, std::span<const std::uint16_t> exponents, std::size_t offset)
{
    std::string out;
    for (std::size_t i = 0; i < space.size(); ++i) {
        if (const auto e = exponents[offset + i]) {
            out += (out.empty() ? "" : "*") + space.ring()->names()[i];
            if (e > 1) {
                out += "^" + std::to_string(e);
            }
        }
    }
    return out.empty() ? "1" : out;
}

// "3 a3 (x) a2 + ..." in the coordinate names of both factors.
std::string tensor_text(const tensor_element &x)
{
    const auto &space = *x.space();
    std::string out;
    for (const auto &t : x.numerator().terms()) {
        auto coef = t.coef;
        out += out.empty() ? (coef < 0 ? "-" : "") : (coef < 0 ? " - " : " + ");
        if (coef < 0) {
            coef = -coef;
        }
        if (coef != 1) {
            out += to_string(coef) + " ";
        }
        out += monomial_text(space, t.exponents, 0) + " (x) " + monomial_text(space, t.exponents, space.size());
    }
    if (out.empty()) {
        out = "0";
    }
    if (x.det_left() || x.det_right()) {
        out = "(" + out + ") / (det^" + std::to_string(x.det_left()) + " (x) det^" + std::to_string(x.det_right()) + ")";
    }
    return out;
}

json table_entry(const coord_variable &v, json value)
{
    auto out = coord_variable_to_json(v);
    out["value"] = std::move(value);
    return out;
}

} // namespace

std::string dump_canonical(const json &j)
{
    return j.dump(2) + "\n";
}

json parse_document(const std::string &text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw schema_error(std::string("malformed JSON: ") + e.what());
    }
}

void require_schema(const json &j)
{
    if (!j.is_object() || !j.contains("schema") || j["schema"] != schema_tag) {
        throw schema_error(std::string("document lacks \"schema\": \"") + schema_tag + "\"");
    }
}

json ring_to_json(const base_ring &ring)
{
    if (ring.is_symbolic()) {
        return {{"symbols", std::vector<std::string>(ring.names().begin(), ring.names().end())}};
    }
    return {{"nilpotents", std::vector<int>(ring.orders().begin(), ring.orders().end())}};
}

ring_ptr ring_from_json(const json &j)
{
    if (j.is_array()) {
        // bare list of nilpotency orders, as accepted by --base
        json wrapped = {{"nilpotents", j}};
        return ring_from_json(wrapped);
    }
    if (!j.is_object() || j.size() != 1) {
        throw schema_error("base descriptor must hold exactly one of 'nilpotents' or 'symbols'");
    }
    if (j.contains("nilpotents")) {
        std::vector<int> orders;
        for (const auto &x : array_field(j, "nilpotents")) {
            const long v = integer(x, "nilpotency order");
            if (v < 2 || v > 64) {
                throw schema_error("nilpotency order must lie in [2, 64]");
            }
            orders.push_back(static_cast<int>(v));
        }
        return base_ring::nilpotent(std::move(orders));
    }
    if (j.contains("symbols")) {
        std::vector<std::string> names;
        for (const auto &x : array_field(j, "symbols")) {
            if (!x.is_string() || x.get<std::string>().empty()) {
                throw schema_error("symbol names must be nonempty strings");
            }
            names.push_back(x.get<std::string>());
        }
        auto sorted = names;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw schema_error("repeated symbol name");
        }
        return base_ring::symbolic(std::move(names));
    }
    throw schema_error("base descriptor must hold 'nilpotents' or 'symbols'");
}

json element_to_json(const ring_element &x)
{
    json out = json::array();
    for (const auto &t : x.terms()) {
        out.push_back({{"eps", std::vector<int>(t.exponents.begin(), t.exponents.end())}, {"coef", to_string(t.coef)}});
    }
    return out;
}

ring_element element_from_json(const json &j, const ring_ptr &ring)
{
    if (j.is_string() || j.is_number_integer()) {
        return ring_element(ring, rational_from_json(j));
    }
    if (!j.is_array()) {
        throw schema_error("ring element must be a term list or a rational");
    }
    std::vector<ring_element::term> terms;
    for (const auto &t : j) {
        const auto &e = array_field(t, "eps");
        if (e.size() != ring->generators()) {
            throw schema_error("term has " + std::to_string(e.size()) + " exponents, base ring has "
                               + std::to_string(ring->generators()) + " generators");
        }
        ring_monomial m;
        for (const auto &x : e) {
            const long v = integer(x, "exponent");
            if (v < 0 || v > 60000) {
                throw schema_error("exponent out of range");
            }
            m.push_back(static_cast<std::uint16_t>(v));
        }
        terms.push_back({std::move(m), rational_from_json(field(t, "coef"))});
    }
    return ring_element::from_terms(ring, std::move(terms));
}

json series_to_json(const truncated_series &s)
{
    json terms = json::array();
    for (const auto &[j, c] : s.terms()) {
        terms.push_back({{"J", index_to_json(j)}, {"coef", element_to_json(c)}});
    }
    return {{"dim", s.dim()}, {"order", s.order()}, {"terms", std::move(terms)}};
}

truncated_series series_from_json(const json &j, const ring_ptr &ring)
{
    const auto n = checked_dim(j, "dim");
    const int order = positive_int(j, "order", 0);
    truncated_series s(n, order, ring);
    for (const auto &t : array_field(j, "terms")) {
        const auto idx = index_from_json(field(t, "J"), n);
        if (idx.degree() > order) {
            throw schema_error("term of degree " + std::to_string(idx.degree()) + " above the series order "
                               + std::to_string(order));
        }
        s.add_term(idx, element_from_json(field(t, "coef"), ring));
    }
    return s;
}

json jet_to_json(const jet_automorphism &g)
{
    json comps = json::array();
    for (const auto &s : g.components()) {
        comps.push_back(series_to_json(s));
    }
    return {{"schema", schema_tag},
            {"n", g.dim()},
            {"c", g.order()},
            {"base", ring_to_json(*g.ring())},
            {"components", std::move(comps)}};
}

series_tuple tuple_from_json(const json &j)
{
    require_schema(j);
    const auto n = checked_dim(j, "n");
    const int c = positive_int(j, "c", 0);
    const auto ring = ring_from_json(field(j, "base"));
    const auto &comps = array_field(j, "components");
    if (comps.size() != n) {
        throw schema_error("expected " + std::to_string(n) + " components, got " + std::to_string(comps.size()));
    }
    series_tuple out;
    for (const auto &s : comps) {
        auto series = series_from_json(s, ring);
        if (series.dim() != n || series.order() != c) {
            throw schema_error("component shape disagrees with n and c");
        }
        out.push_back(std::move(series));
    }
    return out;
}

jet_automorphism jet_from_json(const json &j)
{
    if (j.contains("role") && j["role"] != "jet") {
        throw schema_error("expected a jet, got role " + j["role"].dump());
    }
    return jet_automorphism(tuple_from_json(j));
}

json derivation_to_json(const derivation &d)
{
    json comps = json::array();
    for (const auto &s : d.coefficients()) {
        comps.push_back(series_to_json(s));
    }
    return {{"schema", schema_tag}, {"role", "derivation"},    {"n", d.dim()},
            {"c", d.order()},       {"base", ring_to_json(*d.ring())}, {"components", std::move(comps)}};
}

derivation derivation_from_json(const json &j)
{
    if (!j.is_object() || !j.contains("role") || j["role"] != "derivation") {
        throw schema_error("expected \"role\": \"derivation\"");
    }
    return derivation(tuple_from_json(j));
}

json poly_map_to_json(const poly_map &f)
{
    json comps = json::array();
    for (const auto &s : f.components()) {
        json terms = json::array();
        for (const auto &[j, c] : s.terms()) {
            terms.push_back({{"J", index_to_json(j)}, {"coef", element_to_json(c)}});
        }
        comps.push_back(std::move(terms));
    }
    return comps;
}

poly_map poly_map_from_json(const json &j, const ring_ptr &ring, std::size_t n)
{
    if (!j.is_array() || j.size() != n) {
        throw schema_error("polynomial map must list " + std::to_string(n) + " components");
    }
    std::vector<std::pair<multi_index, ring_element>> parsed;
    series_tuple comps;
    for (const auto &terms : j) {
        if (!terms.is_array()) {
            throw schema_error("polynomial map component must be a term list");
        }
        std::vector<std::pair<multi_index, ring_element>> list;
        int degree = 1;
        for (const auto &t : terms) {
            auto idx = index_from_json(field(t, "J"), n);
            degree = std::max(degree, idx.degree());
            list.emplace_back(idx, element_from_json(field(t, "coef"), ring));
        }
        truncated_series s(n, degree, ring);
        for (const auto &[idx, c] : list) {
            s.add_term(idx, c);
        }
        comps.push_back(std::move(s));
    }
    int degree = 1;
    for (const auto &s : comps) {
        degree = std::max(degree, s.order());
    }
    for (auto &s : comps) {
        s = s.lift(degree);
    }
    return poly_map(std::move(comps));
}

json roof_to_json(const roof_chart &roof)
{
    json w = json::array();
    for (const auto &x : roof.w) {
        w.push_back(element_to_json(x));
    }
    return {{"schema", schema_tag},
            {"n", roof.phi.dim()},
            {"base", ring_to_json(*roof.phi.ring())},
            {"phi", poly_map_to_json(roof.phi)},
            {"psi", poly_map_to_json(roof.psi)},
            {"w", std::move(w)},
            {"convention", "psi_after_phi_inverse"}};
}

roof_chart roof_from_json(const json &j)
{
    require_schema(j);
    if (j.contains("convention") && j["convention"] != "psi_after_phi_inverse") {
        throw schema_error("unsupported roof convention " + j["convention"].dump());
    }
    const auto n = checked_dim(j, "n");
    const auto ring = ring_from_json(field(j, "base"));
    const auto &w = array_field(j, "w");
    if (w.size() != n) {
        throw schema_error("section must have " + std::to_string(n) + " coordinates");
    }
    std::vector<ring_element> point;
    for (const auto &x : w) {
        point.push_back(element_from_json(x, ring));
    }
    return {poly_map_from_json(field(j, "phi"), ring, n), poly_map_from_json(field(j, "psi"), ring, n),
            std::move(point)};
}

json coord_variable_to_json(const coord_variable &v)
{
    return {{"k", v.k + 1}, {"J", index_to_json(v.j)}};
}

coord_variable coord_variable_from_json(const json &j, std::size_t n)
{
    const long k = integer(field(j, "k"), "k");
    if (k < 1 || k > static_cast<long>(n)) {
        throw schema_error("coordinate index k out of range");
    }
    return {static_cast<std::size_t>(k - 1), index_from_json(field(j, "J"), n)};
}

json coord_to_json(const coord_element &x)
{
    json terms = json::array();
    for (const auto &t : x.numerator().terms()) {
        terms.push_back({{"coef", to_string(t.coef)}, {"vars", monomial_vars(*x.space(), t.exponents, 0)}});
    }
    return {{"numerator", std::move(terms)}, {"det_power", x.det_power()}};
}

coord_element coord_from_json(const json &j, const coordinate_space_ptr &space)
{
    const long d = integer(field(j, "det_power"), "det_power");
    if (d < 0 || d > 1000) {
        throw schema_error("det_power out of range");
    }
    std::vector<ring_element::term> terms;
    for (const auto &t : array_field(j, "numerator")) {
        ring_monomial m(space->size(), 0);
        add_vars(field(t, "vars"), *space, m, 0);
        terms.push_back({std::move(m), rational_from_json(field(t, "coef"))});
    }
    return coord_element(space, ring_element::from_terms(space->ring(), std::move(terms)), static_cast<unsigned>(d));
}

json tensor_to_json(const tensor_element &x)
{
    const auto &space = *x.space();
    json terms = json::array();
    for (const auto &t : x.numerator().terms()) {
        terms.push_back({{"coef", to_string(t.coef)},
                         {"left", monomial_vars(space, t.exponents, 0)},
                         {"right", monomial_vars(space, t.exponents, space.size())}});
    }
    return {{"numerator", std::move(terms)}, {"det_left", x.det_left()}, {"det_right", x.det_right()}};
}

json rep_to_json(const representation &rep)
{
    json rows = json::array();
    for (const auto &row : rep.entries()) {
        json r = json::array();
        for (const auto &x : row) {
            r.push_back(coord_to_json(x));
        }
        rows.push_back(std::move(r));
    }
    return {{"schema", schema_tag}, {"m", rep.size()},         {"n", rep.dim()},
            {"c", rep.order()},     {"weights", rep.weights()}, {"entries", std::move(rows)}};
}

representation rep_from_json(const json &j)
{
    require_schema(j);
    const auto n = checked_dim(j, "n");
    const int c = positive_int(j, "c", 1);
    const int m = positive_int(j, "m", 1);
    const auto space = coordinate_space::get(n, c);
    const auto &rows = array_field(j, "entries");
    if (rows.size() != static_cast<std::size_t>(m)) {
        throw schema_error("entries must have m rows");
    }
    coord_matrix entries;
    for (const auto &row : rows) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(m)) {
            throw schema_error("entries must be an m x m matrix");
        }
        std::vector<coord_element> r;
        for (const auto &x : row) {
            r.push_back(coord_from_json(x, space));
        }
        entries.push_back(std::move(r));
    }
    std::vector<int> weights;
    if (j.contains("weights")) {
        for (const auto &w : array_field(j, "weights")) {
            weights.push_back(static_cast<int>(integer(w, "weight")));
        }
        if (!weights.empty() && weights.size() != static_cast<std::size_t>(m)) {
            throw schema_error("weights must list m integers");
        }
    }
    return representation(n, c, std::move(entries), std::move(weights));
}

json matrix_to_json(const ring_matrix &m, const ring_ptr &ring)
{
    json rows = json::array();
    for (const auto &row : m) {
        json r = json::array();
        for (const auto &x : row) {
            r.push_back(element_to_json(x));
        }
        rows.push_back(std::move(r));
    }
    return {{"schema", schema_tag}, {"base", ring_to_json(*ring)}, {"matrix", std::move(rows)}};
}

json coproduct_document(std::size_t n, int c)
{
    json delta = json::array(), chart = json::array(), eps = json::array(), grading = json::array();
    for (const auto &[v, d] : coproduct(n, c)) {
        auto entry = table_entry(v, tensor_to_json(d));
        entry["text"] = tensor_text(d);
        delta.push_back(std::move(entry));
        const auto u = specialize_unipotent(d);
        auto chart_entry = table_entry(v, tensor_to_json(u));
        chart_entry["text"] = tensor_text(u);
        chart.push_back(std::move(chart_entry));
        auto g = coord_variable_to_json(v);
        g["degree"] = grading_degree(v);
        grading.push_back(std::move(g));
    }
    for (const auto &[v, e] : counit(n, c)) {
        eps.push_back(table_entry(v, to_string(e)));
    }
    return {{"schema", schema_tag},      {"n", n},         {"c", c},
            {"coproduct", std::move(delta)}, {"coproduct_unipotent_chart", std::move(chart)},
            {"counit", std::move(eps)},  {"grading", std::move(grading)}};
}

json antipode_document(std::size_t n, int c)
{
    json table = json::array();
    for (const auto &[v, s] : antipode(n, c)) {
        auto entry = table_entry(v, coord_to_json(s));
        entry["text"] = s.to_string();
        table.push_back(std::move(entry));
    }
    return {{"schema", schema_tag}, {"n", n}, {"c", c}, {"antipode", std::move(table)}};
}

} // namespace discjet
