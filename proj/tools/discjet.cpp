#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <discjet/acceptance.hpp>
#include <discjet/errors.hpp>
#include <discjet/json_io.hpp>

using namespace discjet;

namespace
{

struct options
{
    std::vector<std::string> inputs;
    std::string output;
    std::optional<int> n;
    std::optional<int> c;
    std::string base;
    std::uint64_t seed = 1;
    std::vector<int> criteria;
    std::string rep = "standard";
    std::string golden_dir = DISCJET_GOLDEN_DIR;
};

// I/O failures that are neither schema nor precondition errors.
class io_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw io_error("cannot read " + path);
    }
    std::stringstream text;
    text << in.rdbuf();
    return text.str();
}

void write_atomically(const std::string &path, const std::string &text)
{
    const std::filesystem::path target(path);
    auto temp = target;
    temp += ".tmp";
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out || !(out << text) || !out.flush()) {
            throw io_error("cannot write " + temp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(temp, target, ec);
    if (ec) {
        std::filesystem::remove(temp);
        throw io_error("cannot rename " + temp.string() + " to " + path + ": " + ec.message());
    }
}

void emit(const options &opt, const std::string &text)
{
    if (opt.output.empty() || opt.output == "-") {
        std::cout << text;
    } else {
        write_atomically(opt.output, text);
    }
}

std::vector<json> inputs(const options &opt, std::size_t count)
{
    if (opt.inputs.size() != count) {
        throw schema_error("expected " + std::to_string(count) + " input file(s), got "
                           + std::to_string(opt.inputs.size()));
    }
    std::vector<json> docs;
    for (const auto &path : opt.inputs) {
        docs.push_back(parse_document(read_file(path)));
    }
    return docs;
}

// --n, --c and --base must agree with the document when given.
void check_shape(const options &opt, std::size_t n, int c, const ring_ptr &ring)
{
    if (opt.n && static_cast<std::size_t>(*opt.n) != n) {
        throw schema_error("--n " + std::to_string(*opt.n) + " disagrees with the input (n = " + std::to_string(n) + ")");
    }
    if (opt.c && *opt.c != c) {
        throw schema_error("--c " + std::to_string(*opt.c) + " disagrees with the input (c = " + std::to_string(c) + ")");
    }
    if (!opt.base.empty() && !(*ring_from_json(parse_document(opt.base)) == *ring)) {
        throw schema_error("--base " + opt.base + " disagrees with the base ring of the input");
    }
}

jet_automorphism read_jet(const options &opt, const json &doc)
{
    auto g = jet_from_json(doc);
    check_shape(opt, g.dim(), g.order(), g.ring());
    return g;
}

derivation read_derivation(const options &opt, const json &doc)
{
    auto d = derivation_from_json(doc);
    check_shape(opt, d.dim(), d.order(), d.ring());
    return d;
}

int required(const std::optional<int> &value, const char *flag, int lo)
{
    if (!value) {
        throw schema_error(std::string("missing ") + flag);
    }
    if (*value < lo) {
        throw schema_error(std::string(flag) + " must be at least " + std::to_string(lo));
    }
    return *value;
}

json flags_to_json(const jet_flags &f)
{
    return {{"schema", schema_tag},
            {"in_G", f.in_G},
            {"in_K", f.in_K},
            {"in_K_u", f.in_K_u},
            {"identity_level", f.identity_level}};
}

representation read_rep(const options &opt, std::vector<json> &docs, std::size_t extra)
{
    if (opt.inputs.size() == extra + 1) {
        docs = inputs(opt, extra + 1);
        auto rep = rep_from_json(docs.front());
        docs.erase(docs.begin());
        return rep;
    }
    docs = inputs(opt, extra);
    const auto n = static_cast<std::size_t>(required(opt.n, "--n", 1));
    const int c = required(opt.c, "--c", 1);
    if (opt.rep == "standard") {
        return rep_jet_standard(n, c);
    }
    if (opt.rep == "det") {
        return rep_det(n, c);
    }
    if (opt.rep == "trivial") {
        return rep_trivial(n, c);
    }
    throw schema_error("--rep must be standard, det or trivial");
}

std::string run(const std::string &verb, const options &opt, int &status)
{
    auto out = [](const json &j) { return dump_canonical(j); };
    if (verb == "compose") {
        auto docs = inputs(opt, 2);
        return out(jet_to_json(jet_compose(read_jet(opt, docs[0]), read_jet(opt, docs[1]))));
    }
    if (verb == "invert") {
        return out(jet_to_json(jet_invert(read_jet(opt, inputs(opt, 1)[0]))));
    }
    if (verb == "classify") {
        if (opt.inputs.size() == 2) {
            auto docs = inputs(opt, 2);
            auto g = jet_from_json(docs[0]), h = jet_from_json(docs[1]);
            const int c = required(opt.c, "--c", 0);
            return out({{"schema", schema_tag}, {"c", c}, {"c_equivalent", jets_c_equivalent(g, h, c)}});
        }
        auto docs = inputs(opt, 1);
        auto tuple = tuple_from_json(docs[0]);
        return out(flags_to_json(jet_classify(tuple)));
    }
    if (verb == "split") {
        auto g = read_jet(opt, inputs(opt, 1)[0]);
        auto [a, k] = split_translation(g);
        auto [lin, u] = split_linear_unipotent(k);
        json translation = json::array();
        for (const auto &x : a) {
            translation.push_back(element_to_json(x));
        }
        return out({{"schema", schema_tag},
                    {"translation", std::move(translation)},
                    {"origin_preserving", jet_to_json(k)},
                    {"linear", jet_to_json(lin)},
                    {"unipotent", jet_to_json(u)}});
    }
    if (verb == "coproduct") {
        return out(coproduct_document(static_cast<std::size_t>(required(opt.n, "--n", 1)), required(opt.c, "--c", 1)));
    }
    if (verb == "antipode") {
        return out(antipode_document(static_cast<std::size_t>(required(opt.n, "--n", 1)), required(opt.c, "--c", 1)));
    }
    if (verb == "exp") {
        return out(jet_to_json(exp_derivation(read_derivation(opt, inputs(opt, 1)[0]))));
    }
    if (verb == "log") {
        return out(derivation_to_json(log_unipotent(read_jet(opt, inputs(opt, 1)[0]))));
    }
    if (verb == "bracket") {
        auto docs = inputs(opt, 2);
        return out(derivation_to_json(derivation_bracket(read_derivation(opt, docs[0]), read_derivation(opt, docs[1]))));
    }
    if (verb == "adjoint") {
        auto docs = inputs(opt, 2);
        return out(derivation_to_json(adjoint(read_jet(opt, docs[0]), read_derivation(opt, docs[1]))));
    }
    if (verb == "roof-jet") {
        auto roof = roof_from_json(inputs(opt, 1)[0]);
        return out(jet_to_json(roof_jet(roof, required(opt.c, "--c", 1))));
    }
    if (verb == "roof-check") {
        auto roof = roof_from_json(inputs(opt, 1)[0]);
        check_roof(roof);
        return out({{"schema", schema_tag}, {"etale", true}, {"strict", roof_is_strict(roof)}});
    }
    if (verb == "rep-eval") {
        std::vector<json> docs;
        auto rep = read_rep(opt, docs, 1);
        auto g = jet_from_json(docs[0]);
        return out(matrix_to_json(rep_eval(rep, g), g.ring()));
    }
    if (verb == "rep-check") {
        std::vector<json> docs;
        auto report = rep_check_homomorphism(read_rep(opt, docs, 0));
        json failing = nullptr;
        if (report.failing_entry) {
            failing = {report.failing_entry->first, report.failing_entry->second};
        }
        return out({{"schema", schema_tag}, {"homomorphism", report.ok}, {"failing_entry", failing}});
    }
    if (verb == "rep-bound") {
        std::vector<json> docs;
        auto rep = read_rep(opt, docs, 0);
        auto report = extension_order(rep);
        return out({{"schema", schema_tag},
                    {"weights", rep_weights(rep)},
                    {"alpha0", report.alpha0},
                    {"factoring_order", report.factoring_order},
                    {"bound_holds", report.bound_holds}});
    }
    if (verb == "selftest") {
        const auto results = run_acceptance({opt.seed, opt.golden_dir, opt.criteria});
        status = all_passed(results) ? 0 : 1;
        return format_report(results);
    }
    throw schema_error("unknown verb " + verb);
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Jet groups of the formal disc: batch operations over JSON files"};
    app.require_subcommand(1);
    options opt;
    const std::vector<std::pair<std::string, std::string>> verbs{
        {"compose", "rho o sigma for two jets (--in rho --in sigma)"},
        {"invert", "inverse of a jet"},
        {"classify", "G/K/K_u membership; with two inputs and --c, c-equivalence"},
        {"split", "translation and linear-unipotent factors"},
        {"coproduct", "coproduct, counit and grading of K^(c) (--n, --c)"},
        {"antipode", "antipode of K^(c) (--n, --c)"},
        {"exp", "exponential of a derivation of m-order >= 2"},
        {"log", "logarithm of a unipotent jet"},
        {"bracket", "Lie bracket of two derivations"},
        {"adjoint", "Ad_k D (--in k --in D)"},
        {"roof-jet", "order-c jet of a roof (--c)"},
        {"roof-check", "validates a roof and reports strictness"},
        {"rep-eval", "matrix of a representation at a jet (--in [rep] --in jet)"},
        {"rep-check", "checks the homomorphism identities of a representation"},
        {"rep-bound", "weights, alpha0 and factoring order of a representation"},
        {"selftest", "runs the acceptance suite"},
    };
    for (const auto &[name, help] : verbs) {
        auto *sub = app.add_subcommand(name, help);
        sub->add_option("--in", opt.inputs, "input JSON file (repeatable)");
        sub->add_option("--out", opt.output, "output file, written atomically; stdout if absent");
        sub->add_option("--n", opt.n, "number of variables");
        sub->add_option("--c", opt.c, "truncation order");
        sub->add_option("--base", opt.base, "base ring descriptor, e.g. '[2,3]'");
        sub->add_option("--seed", opt.seed, "seed of the randomized suites");
        sub->add_option("--rep", opt.rep, "built-in representation: standard, det or trivial");
        sub->add_option("--golden-dir", opt.golden_dir, "directory holding coproduct_n1_c4.json");
        if (name == "selftest") {
            sub->add_option("--criteria", opt.criteria, "run only these criteria (1-10)")->delimiter(',');
        }
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::string verb = app.get_subcommands().front()->get_name();
    try {
        int status = 0;
        emit(opt, run(verb, opt, status));
        return status;
    } catch (const schema_error &e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception &e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error &e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 3;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
