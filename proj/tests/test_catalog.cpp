#include <algorithm>
#include <sstream>

#include "doctest.h"

#include "mec/catalog.hpp"
#include "mec/families.hpp"
#include "mec/generate.hpp"
#include "mec/graph6.hpp"

using namespace mec;

namespace {

std::string catalog_text(const std::vector<Skeleton>& graphs) {
    std::string text;
    for (const auto& g : graphs) text += encode_graph6(g) + "\n";
    return text;
}

std::string run_stream(const std::string& input, const StreamOptions& options,
                       StreamStats* stats_out = nullptr) {
    std::istringstream in(input);
    std::ostringstream out;
    const auto stats = run_census_stream(in, out, options);
    if (stats_out) *stats_out = stats;
    return out.str();
}

}  // namespace

TEST_CASE("spectrum keys") {
    SizeSpectrum s;
    s.entries = {{1, 2}, {3, 4}};
    CHECK(spectrum_key(s) == "1:2,3:4");
    CHECK(spectrum_key(SizeSpectrum{}) == "");
}

TEST_CASE("census stream") {
    SUBCASE("order follows the input regardless of workers") {
        StreamStats stats;
        const std::string out = run_stream("Bw\nBg\n", {4, kDefaultOrientationBudget, false},
                                           &stats);
        const auto first_line = out.substr(0, out.find('\n'));
        CHECK(first_line.find("\"graph6\":\"Bw\"") != std::string::npos);
        CHECK(first_line.find("\"num_mecs\":1") != std::string::npos);
        CHECK(stats.records == 2);
        CHECK(stats.clean());
    }
    SUBCASE("parallel output is byte-identical to sequential") {
        auto graphs = nonisomorphic_connected_graphs(5);
        // shuffle-ish input order: reverse, so merge order != completion order
        std::reverse(graphs.begin(), graphs.end());
        const std::string input = catalog_text(graphs);
        const std::string seq = run_stream(input, {1, kDefaultOrientationBudget, false});
        const std::string par4 = run_stream(input, {4, kDefaultOrientationBudget, false});
        const std::string par7 = run_stream(input, {7, kDefaultOrientationBudget, false});
        CHECK(seq == par4);
        CHECK(seq == par7);
    }
    SUBCASE("bad lines become error records and the stream continues") {
        StreamStats stats;
        const std::string out = run_stream("Bw\nnot-graph6-at-all\nBg\n",
                                           {2, kDefaultOrientationBudget, false}, &stats);
        CHECK(stats.records == 3);
        CHECK(stats.parse_errors == 1);
        std::istringstream lines(out);
        std::string line1, line2, line3;
        std::getline(lines, line1);
        std::getline(lines, line2);
        std::getline(lines, line3);
        CHECK(line2.find("\"error\"") != std::string::npos);
        CHECK(line3.find("\"graph6\":\"Bg\"") != std::string::npos);
    }
    SUBCASE("budget overflow becomes an error record with the count reached") {
        StreamStats stats;
        const std::string out =
            run_stream(encode_graph6(make_complete(5)) + "\n", {1, 100, false}, &stats);
        CHECK(stats.budget_errors == 1);
        CHECK(out.find("\"reached\":100") != std::string::npos);
    }
    SUBCASE("labeled 3-node classes give M = 1, 1, 2, 1") {
        const std::string out = run_stream("B?\nB_\nBg\nBw\n", {1, 1u << 20, false});
        std::istringstream lines(out);
        std::vector<std::uint64_t> m_values;
        for (std::string line; std::getline(lines, line);)
            m_values.push_back(census_from_json(nlohmann::ordered_json::parse(line))
                                   .polynomial.total());
        CHECK(m_values == std::vector<std::uint64_t>{1, 1, 2, 1});
    }
}

TEST_CASE("records round-trip through the JSONL loader") {
    const std::string out =
        run_stream(catalog_text(nonisomorphic_connected_graphs(4)), {2, 1u << 20, false});
    std::istringstream in(out);
    const auto loaded = load_census_records(in);
    CHECK(loaded.error_records == 0);
    REQUIRE(loaded.records.size() == 6);
    for (const auto& r : loaded.records) {
        const CensusRecord direct = census(parse_graph6(r.graph6));
        CHECK(r.spectrum == direct.spectrum);
        CHECK(r.polynomial == direct.polynomial);
    }
}

TEST_CASE("collision detection") {
    SUBCASE("known colliding pair: K_4+6K_1 vs K_3+2K_2+3K_1") {
        std::vector<CensusRecord> records;
        records.push_back(census(disjoint_union({make_complete(4), make_empty(6)})));
        records.push_back(census(
            disjoint_union({make_complete(3), make_complete(2), make_complete(2), make_empty(3)})));
        const auto report = find_collisions(records);
        REQUIRE(report.groups.size() == 1);
        CHECK(report.groups[0].key == "24:1");
        CHECK(report.groups[0].graph6.size() == 2);
    }
    SUBCASE("known colliding pair: K_6+2K_2 vs K_5+K_4+K_1") {
        std::vector<CensusRecord> records;
        records.push_back(
            census(disjoint_union({make_complete(6), make_complete(2), make_complete(2)})));
        records.push_back(
            census(disjoint_union({make_complete(5), make_complete(4), make_empty(1)})));
        const auto report = find_collisions(records);
        REQUIRE(report.groups.size() == 1);
        CHECK(report.groups[0].key == "2880:1");
    }
    SUBCASE("connected graphs up to 5 nodes are collision-free") {
        std::vector<CensusRecord> records;
        for (int n = 1; n <= 5; ++n)
            for (const auto& g : nonisomorphic_connected_graphs(n)) records.push_back(census(g));
        CHECK(find_collisions(records).empty());
    }
}

TEST_CASE("the seven built-in collision rows verify") {
    const auto checks = verify_known_collisions();
    REQUIRE(checks.size() == 7);
    for (const auto& check : checks) {
        INFO(check.name_a << " vs " << check.name_b << ": " << check.detail);
        CHECK(check.pass);
    }
}

TEST_CASE("size profile aggregation") {
    SUBCASE("single triangle record lands in one cell") {
        const auto profile = aggregate_size_profile({census(make_complete(3))});
        REQUIRE(profile.cells.size() == 1);
        CHECK(profile.cells[0].edges == 3);
        CHECK(profile.cells[0].log2_bucket == 2);  // floor(log2 6)
        CHECK(profile.cells[0].mecs == 1);
        CHECK(profile.total_mecs == 1);
    }
    SUBCASE("proportions sum to one over the table") {
        std::vector<CensusRecord> records;
        for (const auto& g : nonisomorphic_connected_graphs(4)) records.push_back(census(g));
        const auto profile = aggregate_size_profile(records);
        std::uint64_t total = 0;
        for (const auto& cell : profile.cells) total += cell.mecs;
        CHECK(total == profile.total_mecs);

        std::ostringstream csv;
        write_size_profile_csv(csv, profile);
        const std::string text = csv.str();
        CHECK(text.find("edges,log2_size_bucket,proportion\n") != std::string::npos);
    }
}

TEST_CASE("totals") {
    SUBCASE("all labeled graphs on 3 nodes hold 11 MECs") {
        std::vector<CensusRecord> records;
        for (const auto& g : all_labeled_graphs(3)) records.push_back(census(g));
        const auto t = compute_totals(records);
        CHECK(t.total_mecs == 11);
        CHECK(t.max_mecs_per_skeleton == 2);
        CHECK(t.max_immoralities == 1);
    }
    SUBCASE("single empty graph") {
        const auto t = compute_totals({census(make_empty(1))});
        CHECK(t.total_mecs == 1);
    }
}
