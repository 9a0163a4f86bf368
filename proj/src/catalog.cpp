#include "mec/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

#include "mec/families.hpp"
#include "mec/graph6.hpp"

namespace mec {

std::string spectrum_key(const SizeSpectrum& s) {
    std::string key;
    for (auto [k, count] : s.entries) {
        if (!key.empty()) key += ',';
        key += std::to_string(k) + ':' + std::to_string(count);
    }
    return key;
}

CollisionReport find_collisions(const std::vector<CensusRecord>& records) {
    std::map<std::string, std::vector<std::string>> by_key;
    for (const auto& r : records) by_key[spectrum_key(r.spectrum)].push_back(r.graph6);
    CollisionReport report;
    for (auto& [key, graphs] : by_key)
        if (graphs.size() >= 2) report.groups.push_back({key, std::move(graphs)});
    return report;
}

nlohmann::ordered_json collision_report_to_json(const CollisionReport& report) {
    nlohmann::ordered_json j;
    auto groups = nlohmann::ordered_json::array();
    for (const auto& g : report.groups)
        groups.push_back({{"key", g.key}, {"graphs", g.graph6}});
    j["groups"] = std::move(groups);
    return j;
}

namespace {

enum class LineOutcome { ok, parse_error, budget_error };

std::pair<std::string, LineOutcome> process_line(const std::string& line,
                                                 const StreamOptions& options) {
    try {
        const Skeleton g = parse_graph6(line);
        return {census_to_json_line(census(g, options.budget), options.with_mecs),
                LineOutcome::ok};
    } catch (const Graph6Error& e) {
        nlohmann::ordered_json j{{"graph6", line}, {"error", std::string("parse: ") + e.what()}};
        return {j.dump(), LineOutcome::parse_error};
    } catch (const BudgetExceeded& e) {
        nlohmann::ordered_json j{{"graph6", line},
                                 {"error", std::string("budget: ") + e.what()},
                                 {"reached", e.reached()}};
        return {j.dump(), LineOutcome::budget_error};
    }
}

}  // namespace

StreamStats run_census_stream(std::istream& in, std::ostream& out,
                              const StreamOptions& options) {
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(std::move(line));
    }

    StreamStats stats;
    auto account = [&stats](LineOutcome outcome) {
        ++stats.records;
        if (outcome == LineOutcome::parse_error) ++stats.parse_errors;
        if (outcome == LineOutcome::budget_error) ++stats.budget_errors;
    };

    const int workers = std::max(1, options.workers);
    if (workers == 1 || lines.size() <= 1) {
        for (const auto& line : lines) {
            auto [text, outcome] = process_line(line, options);
            out << text << '\n';
            account(outcome);
        }
        return stats;
    }

    // One skeleton = one task; finished lines are merged back in input order
    // so the output is byte-identical for every worker count.
    std::atomic<std::size_t> next_claim{0};
    std::mutex mu;
    std::condition_variable ready;
    std::map<std::size_t, std::pair<std::string, LineOutcome>> finished;

    auto work = [&] {
        while (true) {
            const std::size_t i = next_claim.fetch_add(1);
            if (i >= lines.size()) return;
            auto result = process_line(lines[i], options);
            {
                std::lock_guard<std::mutex> lock(mu);
                finished.emplace(i, std::move(result));
            }
            ready.notify_one();
        }
    };

    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);

    for (std::size_t expected = 0; expected < lines.size(); ++expected) {
        std::unique_lock<std::mutex> lock(mu);
        ready.wait(lock, [&] { return finished.count(expected) > 0; });
        auto node = finished.extract(expected);
        lock.unlock();
        out << node.mapped().first << '\n';
        account(node.mapped().second);
    }
    for (auto& t : pool) t.join();
    return stats;
}

LoadedRecords load_census_records(std::istream& in) {
    LoadedRecords loaded;
    for (std::string line; std::getline(in, line);) {
        if (line.empty()) continue;
        auto j = nlohmann::ordered_json::parse(line);
        if (j.contains("error")) {
            ++loaded.error_records;
            continue;
        }
        loaded.records.push_back(census_from_json(j));
    }
    return loaded;
}

namespace {

SizeSpectrum single_class(std::uint64_t size) {
    SizeSpectrum s;
    s.entries = {{size, 1}};
    return s;
}

std::vector<Skeleton> with_copies(std::initializer_list<std::pair<Skeleton, int>> parts) {
    std::vector<Skeleton> out;
    for (const auto& [g, copies] : parts)
        for (int i = 0; i < copies; ++i) out.push_back(g);
    return out;
}

}  // namespace

std::vector<KnownCollisionRow> known_collision_rows() {
    const Skeleton k1 = make_empty(1);
    const Skeleton k2 = make_complete(2);
    const Skeleton k3 = make_complete(3);
    const Skeleton k4 = make_complete(4);
    const Skeleton k5 = make_complete(5);
    const Skeleton k6 = make_complete(6);
    const Skeleton p3 = make_path(3);  // spectrum {1:1, 3:1}

    std::vector<KnownCollisionRow> rows;
    rows.push_back({"K4+6K1", "K3+2K2+3K1", with_copies({{k4, 1}, {k1, 6}}),
                    with_copies({{k3, 1}, {k2, 2}, {k1, 3}}), single_class(24)});
    rows.push_back({"K4+K2+4K1", "K3+3K2+K1", with_copies({{k4, 1}, {k2, 1}, {k1, 4}}),
                    with_copies({{k3, 1}, {k2, 3}, {k1, 1}}), single_class(48)});
    rows.push_back({"K4+K3+3K1", "2K3+2K2", with_copies({{k4, 1}, {k3, 1}, {k1, 3}}),
                    with_copies({{k3, 2}, {k2, 2}}), single_class(144)});
    rows.push_back({"K6+4K1", "K5+K3+2K1", with_copies({{k6, 1}, {k1, 4}}),
                    with_copies({{k5, 1}, {k3, 1}, {k1, 2}}), single_class(720)});
    rows.push_back({"K6+K2+2K1", "K5+K3+K2", with_copies({{k6, 1}, {k2, 1}, {k1, 2}}),
                    with_copies({{k5, 1}, {k3, 1}, {k2, 1}}), single_class(1440)});
    rows.push_back({"K6+2K2", "K5+K4+K1", with_copies({{k6, 1}, {k2, 2}}),
                    with_copies({{k5, 1}, {k4, 1}, {k1, 1}}), single_class(2880)});
    SizeSpectrum row7;
    row7.entries = {{24, 1}, {72, 1}};
    rows.push_back({"K4+P3+3K1", "K3+P3+2K2", with_copies({{k4, 1}, {p3, 1}, {k1, 3}}),
                    with_copies({{k3, 1}, {p3, 1}, {k2, 2}}), row7});
    return rows;
}

std::vector<RowCheck> verify_known_collisions() {
    std::vector<RowCheck> checks;
    for (const auto& row : known_collision_rows()) {
        RowCheck check{row.name_a, row.name_b, true, ""};
        const SizeSpectrum direct_a = census(disjoint_union(row.parts_a)).spectrum;
        const SizeSpectrum direct_b = census(disjoint_union(row.parts_b)).spectrum;

        auto product_of = [](const std::vector<Skeleton>& parts) {
            SizeSpectrum acc = single_class(1);
            for (const auto& part : parts) acc = spectrum_product(acc, census(part).spectrum);
            return acc;
        };
        const SizeSpectrum prod_a = product_of(row.parts_a);
        const SizeSpectrum prod_b = product_of(row.parts_b);

        auto complain = [&](const std::string& what, const SizeSpectrum& got) {
            check.pass = false;
            if (!check.detail.empty()) check.detail += "; ";
            check.detail += what + " got " + spectrum_key(got);
        };
        if (!(direct_a == row.expected)) complain(row.name_a + " direct", direct_a);
        if (!(direct_b == row.expected)) complain(row.name_b + " direct", direct_b);
        if (!(prod_a == row.expected)) complain(row.name_a + " product", prod_a);
        if (!(prod_b == row.expected)) complain(row.name_b + " product", prod_b);
        checks.push_back(std::move(check));
    }
    return checks;
}

SizeProfile aggregate_size_profile(const std::vector<CensusRecord>& records) {
    std::map<std::pair<int, int>, std::uint64_t> cells;
    SizeProfile profile;
    for (const auto& r : records)
        for (auto [k, s] : r.spectrum.entries) {
            const int bucket = 63 - std::countl_zero(k);
            cells[{r.structure.edge_count, bucket}] += s;
            profile.total_mecs += s;
        }
    for (auto [key, mecs] : cells) profile.cells.push_back({key.first, key.second, mecs});
    return profile;
}

void write_size_profile_csv(std::ostream& out, const SizeProfile& profile) {
    out << "# log2_size_bucket = floor(log2(MEC class size)); proportion is over all MECs in "
           "the input record set\n";
    out << "edges,log2_size_bucket,proportion\n";
    char buffer[64];
    for (const auto& cell : profile.cells) {
        const double proportion =
            profile.total_mecs ? static_cast<double>(cell.mecs) / profile.total_mecs : 0.0;
        std::snprintf(buffer, sizeof buffer, "%.12g", proportion);
        out << cell.edges << ',' << cell.log2_bucket << ',' << buffer << '\n';
    }
}

Totals compute_totals(const std::vector<CensusRecord>& records) {
    Totals t;
    for (const auto& r : records) {
        const std::uint64_t mecs = r.polynomial.total();
        t.total_mecs += mecs;
        t.max_mecs_per_skeleton = std::max(t.max_mecs_per_skeleton, mecs);
        t.max_immoralities = std::max(t.max_immoralities, r.polynomial.degree());
    }
    return t;
}

}  // namespace mec
