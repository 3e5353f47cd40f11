#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "segdraw/graph_model.hpp"

namespace segdraw {

/// SplitMix64. state += 0x9E3779B97F4A7C15; z = state;
/// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9; z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31).
/// below(k) = high 64 bits of next() * k.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    std::uint64_t below(std::uint64_t k);

private:
    std::uint64_t state_;
};

enum class Family { RandomTree, Path, Star, Caterpillar, Spider, StackedTriangulation, Prism, Wheel };

struct GenSpec {
    Family family = Family::RandomTree;
    int n = 0;
    std::uint64_t seed = 0;
};

Family parse_family(const std::string& name);
std::string family_name(Family f);
bool is_tree_family(Family f);

/// Trees come rooted at vertex 0; children are stored in increasing id order.
TreeFile gen_tree(const GenSpec& spec);
RootedOrderedTree gen_rooted_tree(const GenSpec& spec);

/// Starts from K4 with outer face (0,1,2) and stacks vertex i into a uniformly chosen inner face.
PlaneGraph gen_stacked_triangulation(const GenSpec& spec);
/// Two concentric cycles of n/2 vertices joined by spokes; n even, n >= 6.
PlaneGraph gen_prism(int n);
/// Hub 0 with rim 1..n-1; n >= 4.
PlaneGraph gen_wheel(int n);

/// Plane graph from ccw neighbour lists; edges numbered by (smaller endpoint, rotation order).
PlaneGraph from_neighbor_rotation(const std::vector<std::vector<int>>& nbr, std::vector<int> outer = {});

/// Any family, serialized in the graph file format.
std::string generate_text(const GenSpec& spec);

}  // namespace segdraw
