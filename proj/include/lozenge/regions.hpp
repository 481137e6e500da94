// Constructors for the region families: hexagons with windows along the
// symmetry axis, and the path-defined regions R_{l,q}(x), Rbar_{l,q}(x).
#pragma once

#include "lozenge/exact.hpp"
#include "lozenge/index_list.hpp"
#include "lozenge/lattice.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lozenge {

struct RegionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct HexParams {
    int a = 1;
    int b = 1;
    int k = 0;
    int axis() const { return a + k; }
    int strips() const { return 2 * b + k; }
    std::string str() const;
};

enum class WindowKind { Delta, Nabla };

// A Delta window of size s and base row r covers rows r..r+s-1; a Nabla
// window with base (top edge) on row line r covers rows r-s..r-1.
struct WindowSpec {
    WindowKind kind = WindowKind::Delta;
    int size = 1;
    int base_row = 0;

    int min_row() const { return kind == WindowKind::Delta ? base_row : base_row - size; }
    int max_row() const { return kind == WindowKind::Delta ? base_row + size - 1 : base_row - 1; }

    // "D:2@5" / "N:1@8".
    static WindowSpec parse(const std::string& text);
    std::string str() const;
    bool operator==(const WindowSpec&) const = default;
};

Region hexagon(const HexParams& p);
// Hexagon with sides a, b, c, a, b, c; its tilings are the plane partitions in an a x b x c box.
Region box_hexagon(int a, int b, int c);
BoundaryWalk hexagon_boundary(const HexParams& p);
// The cells of a window placed on the axis of H(a,b,k).
Region window_region(const HexParams& p, const WindowSpec& w);

enum class HexFamily { H, Hlq, HbarLq };
std::string family_name(HexFamily f);

struct WindowedHexagon {
    HexParams params;
    std::vector<WindowSpec> windows;
    HexFamily family = HexFamily::H;
    IndexList l;
    IndexList q;
    int reference_row = 0;
    // Hexagon minus the windows, before forced lozenges are removed.
    Region with_windows;
    // After forced-lozenge elimination, with its weight factor.
    Region region;
    ExactRational factor = 1;
    bool untileable = false;

    // m for H_l, m + n otherwise.
    int exponent() const { return l.size() + q.size(); }
    std::string str() const;
};

// Empty optional when the placement is valid, else the reason.
std::optional<std::string> check_windows(const HexParams& p, const std::vector<WindowSpec>& ws);

// Throws RegionError on any invalid placement.
WindowedHexagon windowed_hexagon(const HexParams& p, const std::vector<WindowSpec>& ws);

// Reason string when a window meets the top or bottom side of the hexagon
// in a way the product formula does not survive: an apex on that side, or
// the odd window's base lying on it. Empty optional otherwise.
std::optional<std::string> boundary_contact(const HexParams& p, const std::vector<WindowSpec>& ws);

// Every valid placement with at most max_windows windows (sorted top to bottom).
std::vector<std::vector<WindowSpec>> enumerate_window_sets(const HexParams& p, int max_windows);

enum class RFamily { R, RBar };
std::string family_name(RFamily f);

// Smallest admissible x. For R with l empty this is q_n - n - 1 (possibly -1).
int r_min_x(const IndexList& l, const IndexList& q, RFamily f);

struct RBoundary {
    BoundaryWalk walk{LatticePoint{0, 0}};
    std::vector<LozengePos> bumps;  // half-weight positions of the selected P_u bumps
};

// The closed boundary of R_{l,q}(x) or Rbar_{l,q}(x). Throws RegionError
// below the minimum x or when both lists are empty.
RBoundary r_boundary(const IndexList& l, const IndexList& q, int x, RFamily f);

// R_{empty,empty}(x) and Rbar_{empty,empty}(x) are the empty region for every x.
Region r_family_region(const IndexList& l, const IndexList& q, int x, RFamily f);
Region r_region(const IndexList& l, const IndexList& q, int x);
Region r_bar_region(const IndexList& l, const IndexList& q, int x);

}  // namespace lozenge
