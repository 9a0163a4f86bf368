#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mec/census.hpp"

namespace mec {

/// Canonical spectrum key "k1:s1,k2:s2,..." with k ascending: two records
/// have equal size spectra iff their keys are byte-identical.
std::string spectrum_key(const SizeSpectrum& s);

struct CollisionGroup {
    std::string key;
    std::vector<std::string> graph6;
};

struct CollisionReport {
    std::vector<CollisionGroup> groups;  // only key classes with >= 2 members
    bool empty() const { return groups.empty(); }
};

CollisionReport find_collisions(const std::vector<CensusRecord>& records);

nlohmann::ordered_json collision_report_to_json(const CollisionReport& report);

// --- batch census over graph6 line streams ----------------------------------

struct StreamOptions {
    int workers = 1;
    std::uint64_t budget = kDefaultOrientationBudget;
    bool with_mecs = false;
};

struct StreamStats {
    std::uint64_t records = 0;
    std::uint64_t parse_errors = 0;
    std::uint64_t budget_errors = 0;

    bool clean() const { return parse_errors == 0 && budget_errors == 0; }
};

/// One JSONL line out per input line, in input order regardless of worker
/// count, each record byte-identical to a single-threaded census. A line
/// that fails to parse or blows the budget becomes an error record
/// {"graph6":..., "error":...} and the stream continues.
StreamStats run_census_stream(std::istream& in, std::ostream& out,
                              const StreamOptions& options = {});

/// Load census records back from a JSONL stream (error records are counted,
/// not loaded).
struct LoadedRecords {
    std::vector<CensusRecord> records;
    std::uint64_t error_records = 0;
};
LoadedRecords load_census_records(std::istream& in);

// --- the seven known 10-node spectrum collisions -----------------------------

struct KnownCollisionRow {
    std::string name_a, name_b;
    std::vector<Skeleton> parts_a, parts_b;
    SizeSpectrum expected;
};

/// The built-in regression set: seven pairs of (disconnected) 10-node graphs
/// whose size spectra coincide, with their expected class sizes.
std::vector<KnownCollisionRow> known_collision_rows();

struct RowCheck {
    std::string name_a, name_b;
    bool pass = false;
    std::string detail;
};

/// Census both sides of every row directly, compare with each other and the
/// stated spectrum, and recheck via component spectrum products.
std::vector<RowCheck> verify_known_collisions();

// --- aggregate (edges x log2 class size) profile -----------------------------

struct SizeProfileCell {
    int edges = 0;
    int log2_bucket = 0;  // floor(log2(class size))
    std::uint64_t mecs = 0;
};

struct SizeProfile {
    std::vector<SizeProfileCell> cells;  // sorted by (edges, bucket)
    std::uint64_t total_mecs = 0;
};

SizeProfile aggregate_size_profile(const std::vector<CensusRecord>& records);

/// CSV with header "edges,log2_size_bucket,proportion"; proportions are over
/// all MECs in the record set and sum to 1 across the table.
void write_size_profile_csv(std::ostream& out, const SizeProfile& profile);

struct Totals {
    std::uint64_t total_mecs = 0;
    std::uint64_t max_mecs_per_skeleton = 0;
    int max_immoralities = 0;
};

Totals compute_totals(const std::vector<CensusRecord>& records);

}  // namespace mec
