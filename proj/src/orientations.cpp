#include "mec/orientations.hpp"

namespace mec {

std::vector<Dag> enumerate_acyclic_orientations(const Skeleton& g, std::uint64_t budget) {
    std::vector<Dag> out;
    for_each_acyclic_orientation(g, budget, [&](const Dag& d) { out.push_back(d); });
    return out;
}

std::vector<Dag> brute_force_orientations(const Skeleton& g) {
    std::vector<Dag> out;
    for_each_orientation_brute_force(g, [&](const Dag& d) { out.push_back(d); });
    return out;
}

}  // namespace mec
