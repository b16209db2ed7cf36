// lcf: command-line front end for list-coloring counts, constructions,
// certificates and bounds. Payloads go to stdout as JSON (or CSV for
// `search --format csv`); failures print a JSON diagnostic on stderr.
//
// Exit codes: 0 ok, 1 verification failure, 2 bad input, 3 budget exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lcf/bounds.hpp"
#include "lcf/chrompoly.hpp"
#include "lcf/constructions.hpp"
#include "lcf/exact_count.hpp"
#include "lcf/search.hpp"
#include "lcf/serialize.hpp"

namespace {

using namespace lcf;

struct GraphSource {
    std::string file;
    std::string family;
    int n = 0;
    int l = 0;

    void add_to(CLI::App* cmd)
    {
        cmd->add_option("--graph", file, "graph JSON file");
        cmd->add_option("--family", family, "complete | cycle | tree | k2l | knl")
            ->check(CLI::IsMember({"complete", "cycle", "tree", "k2l", "knl"}));
        cmd->add_option("--n", n, "family size parameter");
        cmd->add_option("--l", l, "second partite set size for k2l / knl");
    }

    struct Resolved {
        Graph graph;
        std::optional<GraphFamily> family;
    };

    Resolved resolve() const
    {
        std::optional<Graph> from_file;
        if (!file.empty())
            from_file = graph_from_json(read_json(file));
        if (family.empty()) {
            if (!from_file)
                throw InvalidArgument("give --graph <file> or --family");
            return {*from_file, std::nullopt};
        }
        GraphFamily f;
        if (family == "complete")
            f = family::Complete{n};
        else if (family == "cycle")
            f = family::Cycle{n};
        else if (family == "k2l")
            f = family::CompleteBipartite{2, l};
        else if (family == "knl")
            f = family::CompleteBipartite{n, l};
        else {
            if (!from_file)
                throw InvalidArgument("--family tree needs --graph <file> with the tree's edges");
            f = family::Tree{from_file->num_vertices(), from_file->edges()};
        }
        return {make_graph(f), f};
    }

    static Json read_json(const std::string& path)
    {
        std::ifstream in(path);
        if (!in)
            throw InvalidArgument("cannot open '" + path + "'");
        try {
            return Json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw InvalidArgument("'" + path + "' is not valid JSON: " + e.what());
        }
    }
};

class Failure : public std::runtime_error {
public:
    Failure(int code, const std::string& msg) : std::runtime_error(msg), code(code) {}
    int code;
};

void emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw InvalidArgument("cannot write '" + out_path + "'");
    out << text;
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact list-coloring counts, constructions and certificates"};
    app.require_subcommand(1);
    std::string out_path;

    // chrompoly
    auto* chrompoly = app.add_subcommand("chrompoly", "evaluate P(G, m)");
    GraphSource cp_src;
    cp_src.add_to(chrompoly);
    long cp_m = 0;
    std::string cp_method;
    chrompoly->add_option("--m", cp_m, "number of colors")->required()->check(CLI::NonNegativeNumber);
    chrompoly->add_option("--method", cp_method, "dc (deletion-contraction) | closed")->check(CLI::IsMember({"dc", "closed"}));

    // count
    auto* count = app.add_subcommand("count", "count proper L-colorings");
    GraphSource ct_src;
    ct_src.add_to(count);
    std::string ct_assignment;
    bool ct_fast = false;
    count->add_option("--assignment", ct_assignment, "list assignment JSON file")->required();
    count->add_flag("--fast", ct_fast, "use the complete-bipartite counter");

    // plf
    auto* plf = app.add_subcommand("plf", "list color function by exhaustive minimization");
    GraphSource plf_src;
    plf_src.add_to(plf);
    int plf_m = 0;
    unsigned plf_workers = 1;
    plf->add_option("--m", plf_m, "list size")->required()->check(CLI::PositiveNumber);
    plf->add_option("--workers", plf_workers, "threads")->check(CLI::PositiveNumber);

    // choosable
    auto* choosable = app.add_subcommand("choosable", "k-choosability, or the list chromatic number without --k");
    GraphSource ch_src;
    ch_src.add_to(choosable);
    std::optional<int> ch_k;
    choosable->add_option("--k", ch_k, "list size")->check(CLI::PositiveNumber);

    // construct
    auto* construct = app.add_subcommand("construct", "emit the transversal bad assignment on K_{n, n^n t}");
    BadAssignmentParams cons{2, 1, 3};
    construct->add_option("--n", cons.n, "size of X")->required();
    construct->add_option("--t", cons.t, "block length")->required();
    construct->add_option("--m", cons.m, "list size")->required();
    construct->add_option("--out", out_path, "write to file instead of stdout");

    // certify
    auto* certify = app.add_subcommand("certify", "certify tau(K_{2,l}) > m");
    long cert_l = 0;
    int cert_m = 0;
    std::string cert_eps = "1/4";
    certify->add_option("--l", cert_l, "size of Y")->required();
    certify->add_option("--m", cert_m, "list size")->required();
    certify->add_option("--eps", cert_eps, "rational epsilon p/q in (0, 2)");
    certify->add_option("--out", out_path, "write to file instead of stdout");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "lower and upper bounds on tau(K_{2,l})");
    long b_l = 0;
    bounds->add_option("--l", b_l, "size of Y")->required();

    // search
    auto* search = app.add_subcommand("search", "look for bad m-assignments on K_{2,l}");
    long s_l = 0;
    std::optional<int> s_m, s_m_lo, s_m_hi, s_universe;
    std::uint64_t s_seed = 0;
    SearchConfig s_cfg;
    std::string s_neighborhood = "swap-one-color";
    std::string s_format = "json";
    search->add_option("--l", s_l, "size of Y")->required();
    search->add_option("--m", s_m, "single list size");
    search->add_option("--m-lo", s_m_lo, "first list size");
    search->add_option("--m-hi", s_m_hi, "last list size");
    search->add_option("--seed", s_seed, "RNG seed")->required();
    search->add_option("--iterations", s_cfg.max_iterations, "proposals per restart");
    search->add_option("--restarts", s_cfg.restarts, "extra random restarts");
    search->add_option("--neighborhood", s_neighborhood, "swap-one-color | retype-y-list");
    search->add_option("--universe", s_universe, "color universe size (default m + 2)");
    search->add_option("--format", s_format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << Json{{"status", "error"}, {"diagnostics", {e.what()}}}.dump() << "\n";
        return 2;
    }

    try {
        Budget budget = Budget::from_env();

        if (chrompoly->parsed()) {
            auto src = cp_src.resolve();
            std::string method = cp_method.empty() ? (src.family ? "closed" : "dc") : cp_method;
            Count v;
            if (method == "closed") {
                if (!src.family)
                    throw InvalidArgument("--method closed needs --family");
                v = closed_form_chrompoly(*src.family, cp_m);
            } else {
                v = chromatic_polynomial_eval(src.graph, cp_m, budget);
            }
            emit(dump({{"value", to_decimal(v)}, {"method", method}}), "");
        } else if (count->parsed()) {
            auto src = ct_src.resolve();
            ListAssignment L = assignment_from_json(GraphSource::read_json(ct_assignment));
            Count v;
            if (ct_fast) {
                auto shape = complete_bipartite_shape(src.graph);
                if (!shape)
                    throw InvalidArgument("--fast needs a complete bipartite graph");
                v = count_bipartite_fast(shape->first, shape->second, L, budget);
            } else {
                v = count_list_colorings(src.graph, L, budget);
            }
            emit(dump({{"value", to_decimal(v)}}), "");
        } else if (plf->parsed()) {
            auto src = plf_src.resolve();
            budget.workers = plf_workers;
            auto r = list_color_function_bruteforce(src.graph, plf_m, budget);
            Count p = chromatic_polynomial_eval(src.graph, plf_m, budget);
            emit(dump({{"value", to_decimal(r.count)},
                       {"chromatic", to_decimal(p)},
                       {"equal", r.count == p},
                       {"assignment", to_json(r.assignment)}}),
                 "");
        } else if (choosable->parsed()) {
            auto src = ch_src.resolve();
            if (ch_k)
                emit(dump({{"k", *ch_k}, {"choosable", is_k_choosable(src.graph, *ch_k, budget)}}), "");
            else
                emit(dump({{"list_chromatic_number", list_chromatic_number(src.graph, budget)}}), "");
        } else if (construct->parsed()) {
            ListAssignment L = build_bad_assignment(cons);
            Json j = to_json(L);
            j["n"] = cons.n;
            j["t"] = cons.t;
            j["m"] = cons.m;
            j["formula_count"] = to_decimal(eval_bad_assignment_formula(cons));
            emit(dump(j), out_path);
        } else if (certify->parsed()) {
            WitnessRecord w = certify_tau_gt(cert_l, cert_m, RationalEpsilon::parse(cert_eps));
            Json j = to_json(w);
            if (!verify_witness(witness_from_json(j)))
                throw Failure(1, "serialized witness failed re-verification");
            emit(dump(j), out_path);
        } else if (bounds->parsed()) {
            emit(dump(to_json(tau_bounds_report(b_l))), "");
        } else if (search->parsed()) {
            int lo, hi;
            if (s_m) {
                if (s_m_lo || s_m_hi)
                    throw InvalidArgument("use either --m or --m-lo/--m-hi");
                lo = hi = *s_m;
            } else if (s_m_lo && s_m_hi) {
                lo = *s_m_lo;
                hi = *s_m_hi;
            } else {
                throw InvalidArgument("give --m or both --m-lo and --m-hi");
            }
            s_cfg.rng_seed = s_seed;
            s_cfg.neighborhood = parse_neighborhood(s_neighborhood);
            s_cfg.color_universe_size = s_universe;
            auto rows = tau_empirical_profile(s_l, lo, hi, s_cfg, budget);
            if (s_format == "csv") {
                std::ostringstream os;
                os << csv_header() << "\n";
                for (const auto& r : rows)
                    os << to_csv(r) << "\n";
                emit(os.str(), "");
            } else {
                Json arr = Json::array();
                for (const auto& r : rows)
                    arr.push_back(to_json(r));
                Json meta = {{"seed", s_seed},
                             {"iterations", s_cfg.max_iterations},
                             {"restarts", s_cfg.restarts},
                             {"neighborhood", to_string(s_cfg.neighborhood)},
                             {"color_universe", s_universe ? Json(*s_universe) : Json("m+2")},
                             {"hypothesis", "y-lists restricted to colors 1..U; U = m+2 is untested as sufficient"}};
                emit(dump({{"rows", arr}, {"meta", meta}}), "");
            }
        }
    } catch (const Failure& e) {
        std::cerr << Json{{"status", "error"}, {"diagnostics", {e.what()}}}.dump() << "\n";
        return e.code;
    } catch (const ResourceLimitError& e) {
        std::cerr << Json{{"status", "error"}, {"diagnostics", {std::string("budget exceeded: ") + e.what()}}}.dump() << "\n";
        return 3;
    } catch (const VerificationError& e) {
        std::cerr << Json{{"status", "error"}, {"diagnostics", {std::string("verification failed: ") + e.what()}}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << Json{{"status", "error"}, {"diagnostics", {e.what()}}}.dump() << "\n";
        return 2;
    }
    return 0;
}
