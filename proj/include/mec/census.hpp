#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "mec/graph.hpp"
#include "mec/orientations.hpp"
#include "mec/structure.hpp"

#include "json.hpp"

namespace mec {

/// One possible immorality position: x -> z <- y with x < y, x~z, y~z, x!~y.
struct ImmoralitySlot {
    int x, z, y;
    bool operator==(const ImmoralitySlot&) const = default;
};

/// The skeleton's induced 3-paths in a fixed order (lexicographic on
/// (z, x, y)), one fingerprint bit per slot. Width equals the induced-3-path
/// count, so fingerprints are as narrow as possible and injective by
/// construction: no hashing is involved in class identity.
struct ImmoralityIndex {
    Skeleton skeleton;
    std::vector<ImmoralitySlot> slots;

    int width() const { return static_cast<int>(slots.size()); }
    int words() const { return (width() + 63) / 64; }
};

ImmoralityIndex build_immorality_index(const Skeleton& g);

/// Bit i set iff slot i is an immorality of the DAG. Equal fingerprints on a
/// shared skeleton characterize Markov equivalence (Verma-Pearl).
struct MecFingerprint {
    std::vector<std::uint64_t> bits;

    bool test(int i) const { return (bits[i >> 6] >> (i & 63)) & 1ull; }
    int popcount() const {
        int c = 0;
        for (auto w : bits) c += std::popcount(w);
        return c;
    }
    std::string to_bit_string(int width) const;

    bool operator==(const MecFingerprint&) const = default;
    auto operator<=>(const MecFingerprint&) const = default;
};

MecFingerprint fingerprint_of(const Dag& d, const ImmoralityIndex& idx);

/// Immoralities of d counted directly from parent sets (no index): the
/// number of nonadjacent pairs inside each parent set.
int immorality_count(const Dag& d);

struct MecRecord {
    MecFingerprint fingerprint;
    std::uint64_t class_size = 0;
    int immorality_count = 0;  // popcount of the fingerprint
    Dag representative;        // first DAG of the class in enumeration order
};

/// M(G;x) = sum over k of m_k x^k, where m_k counts MECs with k immoralities.
/// coeffs[k] = m_k; the degree is the immorality number m(G).
struct ImmoralityPolynomial {
    std::vector<std::uint64_t> coeffs{1};

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    std::uint64_t total() const {  // M(G;1) = M(G)
        return std::accumulate(coeffs.begin(), coeffs.end(), std::uint64_t{0});
    }
    bool operator==(const ImmoralityPolynomial&) const = default;
};

/// s_k = number of MECs of size k, as sorted (k, s_k) entries with k >= 1.
/// S(G;x) = sum s_k / k^x; the formal s_0 term is always zero.
struct SizeSpectrum {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> entries;

    std::uint64_t num_classes() const {  // S(G;0) = M(G)
        std::uint64_t t = 0;
        for (auto [k, s] : entries) t += s;
        return t;
    }
    std::uint64_t num_dags() const {
        std::uint64_t t = 0;
        for (auto [k, s] : entries) t += k * s;
        return t;
    }
    bool operator==(const SizeSpectrum&) const = default;
};

struct CensusRecord {
    std::string graph6;
    StructureSummary structure;
    std::vector<MecRecord> mecs;  // sorted by fingerprint
    ImmoralityPolynomial polynomial;
    SizeSpectrum spectrum;
};

/// Enumerate every DAG on g, group by immorality fingerprint, and assemble
/// the full record. Throws BudgetExceeded rather than returning a truncated
/// record.
CensusRecord census(const Skeleton& g, std::uint64_t budget = kDefaultOrientationBudget);

/// Exact rational arithmetic for polynomial evaluation.
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational of(long long n, long long d = 1);
    Rational operator+(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    bool operator==(const Rational&) const = default;
};

Rational evaluate_polynomial(const ImmoralityPolynomial& p, const Rational& x);

/// S(G;x) as a double; the only floating-point surface in the library.
double evaluate_spectrum(const SizeSpectrum& s, double x);

/// m(G): the polynomial degree == max immorality count over classes.
int immorality_number(const CensusRecord& r);

/// Representative of a class attaining m(G); deterministic. Among attaining
/// classes it returns one inducing the fewest star centers, which is what
/// the vertex-cover reduction needs (attaining classes are not all alike:
/// on the spider with hub 0 and legs 4-1, 5-2, 6-3, three collider middles
/// and a full-sink hub both attain m = 3, with center sets of size 3 and 4).
const Dag& max_immorality_dag(const CensusRecord& r);

/// Dirichlet-style product: class sizes multiply, counts convolve. Realizes
/// multiplicativity over disjoint unions.
SizeSpectrum spectrum_product(const SizeSpectrum& a, const SizeSpectrum& b);

/// Ordinary coefficient convolution.
ImmoralityPolynomial polynomial_product(const ImmoralityPolynomial& a,
                                        const ImmoralityPolynomial& b);

// --- JSON wire format (field names are fixed) -------------------------------

nlohmann::ordered_json census_to_json(const CensusRecord& r, bool with_mecs = false);
std::string census_to_json_line(const CensusRecord& r, bool with_mecs = false);

/// Rebuild a record from its JSON line. The structure block is recomputed
/// from the embedded graph6 string; the per-class list (and with it the
/// representative DAGs) is not reconstructed.
CensusRecord census_from_json(const nlohmann::ordered_json& j);

}  // namespace mec
