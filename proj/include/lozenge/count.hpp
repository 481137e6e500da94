// Weighted lozenge tiling counts: exhaustive frontier DP and the
// Gessel-Viennot lattice path determinant.
#pragma once

#include "lozenge/exact.hpp"
#include "lozenge/index_list.hpp"
#include "lozenge/lattice.hpp"
#include "lozenge/regions.hpp"

#include <optional>
#include <vector>

namespace lozenge {

// Sum over all tilings of the product of lozenge weights. The empty region gives 1.
ExactRational count_oracle(const Region& r);

// Some tiling, or nothing if r has none. Lozenges in canonical order.
std::optional<std::vector<LozengePos>> first_tiling(const Region& r);

// True iff the lozenges tile r exactly.
bool is_tiling(const Region& r, const std::vector<LozengePos>& tiling);

enum class PathSide { Southwest, Northwest };
std::string side_name(PathSide s);

// A segment is a unit lattice edge, named by the cell on its west side.
// SOUTHWEST: the "\" edge between UP(row,col) and DOWN(row,col+1); paths
// step east and northeast, endpoints ordered bottom to top.
// NORTHWEST: the "/" edge between DOWN(row,col) and UP(row,col+1); paths
// step east and southeast, endpoints ordered top to bottom.
struct Segment {
    int row = 0;
    int col = 0;
    bool operator==(const Segment&) const = default;
};

struct PathEndpoints {
    PathSide side = PathSide::Southwest;
    std::vector<Segment> starts;
    std::vector<Segment> ends;
    std::size_t size() const { return starts.size(); }
};

PathEndpoints path_endpoints(const Region& r, PathSide side);

// a_ij = weighted count of paths from starts[i] to ends[j]. Throws if the
// two endpoint lists differ in length.
RationalMatrix gv_matrix(const Region& r, const PathEndpoints& ends);

// det of the GV matrix of r, which must equal the family constructor output.
ExactRational count_gv(const Region& r, const IndexList& l, const IndexList& q, int x,
                       RFamily f, PathSide side);
// Convenience: builds the region itself.
ExactRational count_gv(const IndexList& l, const IndexList& q, int x, RFamily f, PathSide side);

}  // namespace lozenge
