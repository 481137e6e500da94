// Triangular lattice regions: cells, lozenge positions, weights and the
// structural operations used by every region family.
//
// Coordinates: `row` is the horizontal strip (increasing upward). `col` is
// twice the x coordinate of the cell's centroid, measured in half unit
// lengths, so neighbouring cells in a row differ by one. A cell points up
// iff col - row is odd.
#pragma once

#include "lozenge/exact.hpp"

#include <array>
#include <compare>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lozenge {

enum class Orientation { Up, Down };

inline Orientation orientation_at(int row, int col)
{
    return ((col - row) % 2 != 0) ? Orientation::Up : Orientation::Down;
}

struct TriCell {
    int row = 0;
    int col = 0;
    Orientation orient = Orientation::Down;

    TriCell() = default;
    TriCell(int r, int c) : row(r), col(c), orient(orientation_at(r, c)) {}

    bool up() const { return orient == Orientation::Up; }

    bool operator==(const TriCell& o) const { return row == o.row && col == o.col; }
    std::strong_ordering operator<=>(const TriCell& o) const
    {
        if (auto c = row <=> o.row; c != 0)
            return c;
        return col <=> o.col;
    }
};

// The three edge-adjacent cells: left, right, and the one across the
// horizontal edge (below for UP, above for DOWN).
std::array<TriCell, 3> neighbours(const TriCell& c);
bool adjacent(const TriCell& a, const TriCell& b);

struct LozengePos {
    TriCell first;
    TriCell second;

    LozengePos() = default;
    // Canonical order; throws std::invalid_argument unless adjacent.
    LozengePos(const TriCell& a, const TriCell& b);

    bool operator==(const LozengePos&) const = default;
    std::strong_ordering operator<=>(const LozengePos& o) const
    {
        if (auto c = first <=> o.first; c != 0)
            return c;
        return second <=> o.second;
    }
};

class Region {
public:
    Region() = default;
    // Duplicates are merged. Half-weighted positions must lie inside.
    explicit Region(std::vector<TriCell> cells, std::vector<LozengePos> half = {});

    const std::vector<TriCell>& cells() const { return cells_; }
    const std::vector<LozengePos>& half_weighted() const { return half_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }

    bool contains(const TriCell& c) const;
    bool is_half(const LozengePos& p) const;
    // Weight of the lozenge on p: 1/2 or 1.
    ExactRational weight(const LozengePos& p) const;

    int min_row() const;
    int max_row() const;
    int min_col() const;
    int max_col() const;

    bool operator==(const Region&) const = default;

private:
    std::vector<TriCell> cells_;
    std::vector<LozengePos> half_;
};

// #UP - #DOWN.
long balance(const Region& r);

struct ForcedResult {
    Region region;
    ExactRational factor = 1;
    bool untileable = false;
};

// Removes forced lozenges to a fixpoint, scanning cells in lexicographic order.
ForcedResult eliminate_forced(const Region& r);

// Valid lattice translations need dcol == drow (mod 2); throws otherwise.
Region translate(const Region& r, int drow, int dcol);
Region rotate180(const Region& r);
// Reflection in the vertical line through col = axis.
Region reflect(const Region& r, int axis);

bool congruent(const Region& a, const Region& b);

// Column of the vertical symmetry axis, if any. The empty region has none.
std::optional<int> symmetry_axis(const Region& r);

struct CutResult {
    Region plus;
    Region minus;
    int width = 0;
};

struct CutError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Splits r along its symmetry axis. Throws CutError if r has no vertical
// axis or the axis crosses an odd number of cells. The empty region gives
// two empty pieces of width 0.
CutResult symmetry_axis_cut(const Region& r);

struct VertebraLabels {
    std::vector<int> below;
    std::vector<int> above;
};

// Vertebrae are read off the strips spanned by r. Labels count outward
// from the line between rows reference_row - 1 and reference_row.
VertebraLabels vertebra_labels(const Region& r, int reference_row);
// Same, with an explicit axis column (used for regions without symmetry).
VertebraLabels vertebra_labels(const Region& r, int reference_row, int axis);

// Boundary walks. Points use (x2, h): doubled x and row-line height.
enum class Step { E, W, NE, NW, SE, SW };

struct LatticePoint {
    int x2 = 0;
    int h = 0;
    bool operator==(const LatticePoint&) const = default;
};

class BoundaryWalk {
public:
    explicit BoundaryWalk(LatticePoint start) : points_{start} {}

    void step(Step s, int times = 1);
    // Moves horizontally (E or W) until x2 == target; throws if unreachable.
    void move_to_x2(int target);

    const LatticePoint& current() const { return points_.back(); }
    const std::vector<LatticePoint>& points() const { return points_; }
    const std::vector<Step>& steps() const { return steps_; }
    int count(Step s) const;
    bool closed() const { return points_.size() > 1 && points_.front() == points_.back(); }

private:
    std::vector<LatticePoint> points_;
    std::vector<Step> steps_;
};

// Cells whose centroids lie inside the closed polygon (even-odd rule).
std::vector<TriCell> rasterize(const std::vector<LatticePoint>& polygon);

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what);
    int line;
};

// TRIREGION text format.
std::string write_triregion(const Region& r);
Region read_triregion(std::istream& in);
Region read_triregion(const std::string& text);

}  // namespace lozenge
