#include "mec/census.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "mec/graph6.hpp"

namespace mec {

ImmoralityIndex build_immorality_index(const Skeleton& g) {
    ImmoralityIndex idx{g, {}};
    const int n = g.node_count();
    for (int z = 0; z < n; ++z) {
        std::uint32_t xs = g.neighbors(z);
        while (xs) {
            const int x = lowest_bit(xs);
            xs &= xs - 1;
            std::uint32_t ys = xs & ~g.neighbors(x);  // y > x, y ~ z, y !~ x
            while (ys) {
                const int y = lowest_bit(ys);
                ys &= ys - 1;
                idx.slots.push_back({x, z, y});
            }
        }
    }
    return idx;
}

std::string MecFingerprint::to_bit_string(int width) const {
    std::string s(width, '0');
    for (int i = 0; i < width; ++i)
        if (test(i)) s[i] = '1';
    return s;
}

MecFingerprint fingerprint_of(const Dag& d, const ImmoralityIndex& idx) {
    if (d.skeleton != idx.skeleton)
        throw std::invalid_argument("fingerprint_of: DAG skeleton differs from index skeleton");
    MecFingerprint fp;
    fp.bits.assign(idx.words(), 0);
    for (int i = 0; i < idx.width(); ++i) {
        const auto& s = idx.slots[i];
        const std::uint32_t pair = (1u << s.x) | (1u << s.y);
        if ((d.parents[s.z] & pair) == pair) fp.bits[i >> 6] |= 1ull << (i & 63);
    }
    return fp;
}

int immorality_count(const Dag& d) {
    const int n = d.skeleton.node_count();
    int total = 0;
    for (int v = 0; v < n; ++v) {
        std::uint32_t rest = d.parents[v];
        while (rest) {
            const int x = lowest_bit(rest);
            rest &= rest - 1;
            total += popcount32(rest & ~d.skeleton.neighbors(x));
        }
    }
    return total;
}

namespace {

struct BitsHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (auto w : v) {
            h ^= w;
            h *= 0x100000001b3ull;
            h ^= h >> 33;
        }
        return static_cast<std::size_t>(h);
    }
};

struct ClassAccum {
    std::uint64_t count = 0;
    ParentArray first_parents{};
};

}  // namespace

CensusRecord census(const Skeleton& g, std::uint64_t budget) {
    CensusRecord rec;
    rec.graph6 = encode_graph6(g);
    rec.structure = structure_summary(g);

    const ImmoralityIndex idx = build_immorality_index(g);
    const int width = idx.width();
    const int words = idx.words();

    // Hot loop: slot tests against precomputed (z, pair-mask) tables.
    std::vector<int> slot_z(width);
    std::vector<std::uint32_t> slot_pair(width);
    for (int i = 0; i < width; ++i) {
        slot_z[i] = idx.slots[i].z;
        slot_pair[i] = (1u << idx.slots[i].x) | (1u << idx.slots[i].y);
    }

    std::vector<std::uint64_t> scratch(words, 0);
    std::unordered_map<std::vector<std::uint64_t>, ClassAccum, BitsHash> groups;

    for_each_acyclic_orientation(g, budget, [&](const Dag& d) {
        std::fill(scratch.begin(), scratch.end(), 0);
        for (int i = 0; i < width; ++i) {
            const std::uint32_t pair = slot_pair[i];
            if ((d.parents[slot_z[i]] & pair) == pair) scratch[i >> 6] |= 1ull << (i & 63);
        }
        auto [it, fresh] = groups.try_emplace(scratch);
        if (fresh) it->second.first_parents = d.parents;
        ++it->second.count;
    });

    rec.mecs.reserve(groups.size());
    for (auto& [bits, accum] : groups) {
        MecRecord m;
        m.fingerprint.bits = bits;
        m.class_size = accum.count;
        m.immorality_count = m.fingerprint.popcount();
        m.representative = Dag{g, accum.first_parents};
        rec.mecs.push_back(std::move(m));
    }
    std::sort(rec.mecs.begin(), rec.mecs.end(),
              [](const MecRecord& a, const MecRecord& b) { return a.fingerprint < b.fingerprint; });

    int max_imm = 0;
    for (const auto& m : rec.mecs) max_imm = std::max(max_imm, m.immorality_count);
    rec.polynomial.coeffs.assign(max_imm + 1, 0);
    std::map<std::uint64_t, std::uint64_t> by_size;
    for (const auto& m : rec.mecs) {
        rec.polynomial.coeffs[m.immorality_count] += 1;
        by_size[m.class_size] += 1;
    }
    rec.spectrum.entries.assign(by_size.begin(), by_size.end());
    return rec;
}

Rational Rational::of(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const long long g = std::gcd(n < 0 ? -n : n, d);
    return Rational{g ? n / g : n, g ? d / g : d};
}

Rational Rational::operator+(const Rational& o) const {
    return Rational::of(num * o.den + o.num * den, den * o.den);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational::of(num * o.num, den * o.den);
}

Rational evaluate_polynomial(const ImmoralityPolynomial& p, const Rational& x) {
    Rational acc{0, 1};
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it)
        acc = acc * x + Rational::of(static_cast<long long>(*it));
    return acc;
}

double evaluate_spectrum(const SizeSpectrum& s, double x) {
    double acc = 0.0;
    for (auto [k, count] : s.entries)
        acc += static_cast<double>(count) / std::pow(static_cast<double>(k), x);
    return acc;
}

int immorality_number(const CensusRecord& r) { return r.polynomial.degree(); }

const Dag& max_immorality_dag(const CensusRecord& r) {
    // Among the classes attaining the degree, prefer the one whose
    // representative induces the fewest star centers (ties in fingerprint
    // order). Attaining classes can differ here, and the vertex-cover
    // reduction needs one whose induced decomposition is minimum.
    const int target = r.polynomial.degree();
    const MecRecord* best = nullptr;
    int best_centers = kMaxNodes + 1;
    for (const auto& m : r.mecs) {
        if (m.immorality_count != target) continue;
        int centers = 0;
        for (int v = 0; v < m.representative.skeleton.node_count(); ++v)
            if (m.representative.parents[v]) ++centers;
        if (centers < best_centers) {
            best_centers = centers;
            best = &m;
        }
    }
    if (!best) throw std::logic_error("record has no class list (parsed without mec_list?)");
    return best->representative;
}

SizeSpectrum spectrum_product(const SizeSpectrum& a, const SizeSpectrum& b) {
    std::map<std::uint64_t, std::uint64_t> by_size;
    for (auto [ka, sa] : a.entries)
        for (auto [kb, sb] : b.entries) by_size[ka * kb] += sa * sb;
    SizeSpectrum out;
    out.entries.assign(by_size.begin(), by_size.end());
    return out;
}

ImmoralityPolynomial polynomial_product(const ImmoralityPolynomial& a,
                                        const ImmoralityPolynomial& b) {
    ImmoralityPolynomial out;
    out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    return out;
}

nlohmann::ordered_json census_to_json(const CensusRecord& r, bool with_mecs) {
    nlohmann::ordered_json j;
    j["graph6"] = r.graph6;
    j["n"] = static_cast<int>(r.structure.degree_sequence.size());
    j["edges"] = r.structure.edge_count;
    j["degree_sequence"] = r.structure.degree_sequence;
    j["triangles"] = r.structure.triangle_count;
    j["induced_3paths"] = r.structure.induced_3path_count;
    j["num_mecs"] = r.polynomial.total();
    j["immorality_number"] = r.polynomial.degree();
    j["m_coeffs"] = r.polynomial.coeffs;
    auto spectrum = nlohmann::ordered_json::array();
    for (auto [k, s] : r.spectrum.entries) spectrum.push_back({k, s});
    j["spectrum"] = std::move(spectrum);
    if (with_mecs) {
        const int width = static_cast<int>(r.structure.induced_3path_count);
        auto list = nlohmann::ordered_json::array();
        for (const auto& m : r.mecs)
            list.push_back({{"fingerprint", m.fingerprint.to_bit_string(width)},
                            {"immoralities", m.immorality_count},
                            {"size", m.class_size}});
        j["mec_list"] = std::move(list);
    }
    return j;
}

std::string census_to_json_line(const CensusRecord& r, bool with_mecs) {
    return census_to_json(r, with_mecs).dump();
}

CensusRecord census_from_json(const nlohmann::ordered_json& j) {
    CensusRecord r;
    r.graph6 = j.at("graph6").get<std::string>();
    r.structure = structure_summary(parse_graph6(r.graph6));
    r.polynomial.coeffs = j.at("m_coeffs").get<std::vector<std::uint64_t>>();
    r.spectrum.entries.clear();
    for (const auto& e : j.at("spectrum"))
        r.spectrum.entries.emplace_back(e.at(0).get<std::uint64_t>(),
                                        e.at(1).get<std::uint64_t>());
    return r;
}

}  // namespace mec
