// mec: census engine for Markov equivalence classes of DAG models.
//
// Machine-readable output goes to stdout or files; diagnostics to stderr.
// Exit codes: 0 success, 1 collisions found (distinct) or a failed check
// (table1), 2 parse/usage error, 3 orientation budget exceeded, 4 I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "mec/catalog.hpp"
#include "mec/census.hpp"
#include "mec/families.hpp"
#include "mec/generate.hpp"
#include "mec/graph6.hpp"
#include "mec/star_decomp.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFound = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitIo = 4;

std::uint64_t default_budget() {
    if (const char* env = std::getenv("MEC_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (...) {
            std::cerr << "warning: ignoring unparseable MEC_BUDGET='" << env << "'\n";
        }
    }
    return mec::kDefaultOrientationBudget;
}

mec::Skeleton input_graph(const std::string& graph6, const std::string& family) {
    if (!family.empty() && !graph6.empty())
        throw std::invalid_argument("give either a graph6 string or --family, not both");
    if (!family.empty()) return mec::make_family(family);
    if (graph6.empty()) throw std::invalid_argument("missing graph: pass graph6 or --family");
    return mec::parse_graph6(graph6);
}

struct InStream {
    std::ifstream file;
    std::istream& get(const std::string& path) {
        if (path == "-") return std::cin;
        file.open(path);
        if (!file) throw std::ios_base::failure("cannot open input file '" + path + "'");
        return file;
    }
};

struct OutStream {
    std::ofstream file;
    std::ostream& get(const std::string& path) {
        if (path == "-") return std::cout;
        file.open(path);
        if (!file) throw std::ios_base::failure("cannot open output file '" + path + "'");
        return file;
    }
};

int cmd_analyze(const std::string& graph6, const std::string& family, std::uint64_t budget,
                bool with_mecs) {
    const mec::Skeleton g = input_graph(graph6, family);
    std::cout << mec::census_to_json_line(mec::census(g, budget), with_mecs) << '\n';
    return kExitOk;
}

int cmd_census(const std::string& in_path, const std::string& out_path,
               const mec::StreamOptions& options) {
    InStream in;
    OutStream out;
    const auto stats = mec::run_census_stream(in.get(in_path), out.get(out_path), options);
    std::cerr << stats.records << " record(s), " << stats.parse_errors << " parse error(s), "
              << stats.budget_errors << " budget error(s)\n";
    if (stats.parse_errors) return kExitParse;
    if (stats.budget_errors) return kExitBudget;
    return kExitOk;
}

int cmd_distinct(const std::string& in_path) {
    InStream in;
    const auto loaded = mec::load_census_records(in.get(in_path));
    if (loaded.error_records) {
        std::cerr << loaded.error_records
                  << " error record(s) in input; distinctness cannot be decided\n";
        return kExitParse;
    }
    const auto report = mec::find_collisions(loaded.records);
    if (report.empty()) {
        std::cerr << "all " << loaded.records.size() << " spectra distinct\n";
        return kExitOk;
    }
    std::cout << mec::collision_report_to_json(report).dump() << '\n';
    std::cerr << report.groups.size() << " collision group(s)\n";
    return kExitFound;
}

int cmd_stardecomp(const std::string& graph6, const std::string& family, std::uint64_t budget) {
    const mec::Skeleton g = input_graph(graph6, family);
    nlohmann::ordered_json j;
    j["graph6"] = mec::encode_graph6(g);
    j["n"] = g.node_count();
    j["edges"] = g.edge_count();
    j["triangle_free"] = mec::is_triangle_free(g);

    const auto covers = mec::minimum_vertex_covers(g);
    j["min_cover_size"] = covers.empty() ? 0 : covers.front().size();
    auto cover_list = nlohmann::ordered_json::array();
    for (const auto& c : covers) cover_list.push_back(c.node_list());
    j["min_covers"] = std::move(cover_list);

    const auto structural = mec::structural_immorality_number(g, budget);
    using App = mec::StructuralImmoralityNumber::Applicability;
    nlohmann::ordered_json st;
    st["applicable"] = structural.applicability == App::applicable
                           ? nlohmann::ordered_json(true)
                           : structural.applicability == App::not_applicable
                                 ? nlohmann::ordered_json(false)
                                 : nlohmann::ordered_json("unknown");
    if (structural.value) st["value"] = *structural.value;
    if (!structural.note.empty()) st["note"] = structural.note;
    j["structural_immorality_number"] = std::move(st);

    if (structural.witness) {
        j["witness"] = mec::decomposition_to_json(*structural.witness);
        try {
            const mec::Dag d = mec::dagify(*structural.witness);
            auto arrows = nlohmann::ordered_json::array();
            for (auto [tail, head] : d.arrows()) arrows.push_back({tail, head});
            j["dagify_arrows"] = std::move(arrows);
        } catch (const mec::DagifyError& e) {
            j["dagify_error"] = e.what();
        }
    }
    std::cout << j.dump() << '\n';
    return kExitOk;
}

int cmd_table1() {
    const auto checks = mec::verify_known_collisions();
    bool all_pass = true;
    for (const auto& check : checks) {
        std::cout << (check.pass ? "PASS" : "FAIL") << ' ' << check.name_a << " vs "
                  << check.name_b;
        if (!check.detail.empty()) std::cout << "  [" << check.detail << ']';
        std::cout << '\n';
        all_pass = all_pass && check.pass;
    }
    return all_pass ? kExitOk : kExitFound;
}

int cmd_figure3(const std::string& in_path, const std::string& out_path) {
    InStream in;
    const auto loaded = mec::load_census_records(in.get(in_path));
    if (loaded.error_records)
        std::cerr << "warning: skipped " << loaded.error_records << " error record(s)\n";
    OutStream out;
    mec::write_size_profile_csv(out.get(out_path), mec::aggregate_size_profile(loaded.records));
    return kExitOk;
}

int cmd_gen(int nodes, bool connected, const std::string& out_path) {
    const auto graphs =
        connected ? mec::nonisomorphic_connected_graphs(nodes) : mec::nonisomorphic_graphs(nodes);
    OutStream out;
    auto& os = out.get(out_path);
    for (const auto& g : graphs) os << mec::encode_graph6(g) << '\n';
    std::cerr << graphs.size() << " graph(s)\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"census engine for Markov equivalence classes of DAG models"};
    app.require_subcommand(1);
    const std::uint64_t env_budget = default_budget();

    std::string graph6, family, in_path = "-", out_path = "-";
    std::uint64_t budget = env_budget;
    bool with_mecs = false;
    int workers = 1, nodes = 0;
    bool connected = false;

    auto* analyze = app.add_subcommand(
        "analyze", "census one skeleton; one JSON record on stdout");
    analyze->add_option("graph6", graph6, "graph6 record");
    analyze->add_option("--family", family,
                        "named family, e.g. path:4, cycle:5, star:3, complete:4, kpq:3:3, "
                        "doublestar:2:3, circulant:8:1,3, empty:2");
    analyze->add_option("--budget", budget, "max acyclic orientations per skeleton");
    analyze->add_flag("--with-mecs", with_mecs, "include per-class fingerprints");

    auto* census_cmd = app.add_subcommand("census", "batch census over a graph6 line stream");
    census_cmd->add_option("--in", in_path, "input file with one graph6 per line ('-' = stdin)");
    census_cmd->add_option("--out", out_path, "output JSONL file ('-' = stdout)");
    census_cmd->add_option("--workers", workers, "worker threads; output order is unaffected");
    census_cmd->add_option("--budget", budget, "max acyclic orientations per skeleton");
    census_cmd->add_flag("--with-mecs", with_mecs, "include per-class fingerprints");

    auto* distinct = app.add_subcommand(
        "distinct", "group census records by size spectrum; exit 0 iff all spectra distinct");
    distinct->add_option("--in", in_path, "census JSONL ('-' = stdin)");

    auto* stardecomp = app.add_subcommand(
        "stardecomp", "minimum vertex covers, structural immorality number, dagified witness");
    stardecomp->add_option("graph6", graph6, "graph6 record");
    stardecomp->add_option("--family", family, "named family (see analyze)");
    stardecomp->add_option("--budget", budget, "decomposition fan-out budget");

    app.add_subcommand("table1",
                       "verify the built-in set of seven 10-node graph pairs with equal spectra");

    auto* figure3 = app.add_subcommand(
        "figure3", "aggregate records into an (edges x log2 class size) proportion CSV");
    figure3->add_option("--in", in_path, "census JSONL ('-' = stdin)");
    figure3->add_option("--out", out_path, "CSV output ('-' = stdout)");

    auto* gen = app.add_subcommand("gen", "emit a catalog of pairwise nonisomorphic graphs");
    gen->add_option("--nodes", nodes, "node count")->required();
    gen->add_flag("--connected", connected, "connected graphs only");
    gen->add_option("--out", out_path, "output file ('-' = stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return cmd_analyze(graph6, family, budget, with_mecs);
        if (census_cmd->parsed())
            return cmd_census(in_path, out_path, {workers, budget, with_mecs});
        if (distinct->parsed()) return cmd_distinct(in_path);
        if (stardecomp->parsed()) return cmd_stardecomp(graph6, family, budget);
        if (app.get_subcommand("table1")->parsed()) return cmd_table1();
        if (figure3->parsed()) return cmd_figure3(in_path, out_path);
        if (gen->parsed()) return cmd_gen(nodes, connected, out_path);
    } catch (const mec::Graph6Error& e) {
        std::cerr << "graph6 parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const mec::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitOk;
}
