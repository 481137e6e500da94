#include "lozenge/regions.hpp"

#include <algorithm>
#include <sstream>

namespace lozenge {

std::string HexParams::str() const
{
    return "H(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(k) + ")";
}

WindowSpec WindowSpec::parse(const std::string& text)
{
    WindowSpec w;
    char kind = 0, colon = 0, at = 0;
    std::istringstream ss(text);
    if (!(ss >> kind >> colon >> w.size >> at >> w.base_row) || colon != ':' || at != '@' ||
        (kind != 'D' && kind != 'N'))
        throw RegionError("bad window spec '" + text + "', expected D:size@row or N:size@row");
    std::string rest;
    if (ss >> rest)
        throw RegionError("bad window spec '" + text + "'");
    if (w.size < 1)
        throw RegionError("window size must be positive in '" + text + "'");
    w.kind = kind == 'D' ? WindowKind::Delta : WindowKind::Nabla;
    return w;
}

std::string WindowSpec::str() const
{
    return std::string(kind == WindowKind::Delta ? "D" : "N") + ":" + std::to_string(size) + "@" +
           std::to_string(base_row);
}

BoundaryWalk hexagon_boundary(const HexParams& p)
{
    if (p.a < 1 || p.b < 1 || p.k < 0)
        throw RegionError("hexagon needs a, b >= 1 and k >= 0");
    BoundaryWalk w({0, 0});
    w.step(Step::E, p.a + p.k);
    w.step(Step::NE, p.b);
    w.step(Step::NW, p.b + p.k);
    w.step(Step::W, p.a);
    w.step(Step::SW, p.b + p.k);
    w.step(Step::SE, p.b);
    return w;
}

Region hexagon(const HexParams& p)
{
    auto w = hexagon_boundary(p);
    auto pts = w.points();
    pts.pop_back();
    return Region(rasterize(pts));
}

Region box_hexagon(int a, int b, int c)
{
    if (a < 0 || b < 0 || c < 0)
        throw RegionError("box sides must be nonnegative");
    BoundaryWalk w({0, 0});
    w.step(Step::E, a);
    w.step(Step::NE, b);
    w.step(Step::NW, c);
    w.step(Step::W, a);
    w.step(Step::SW, b);
    w.step(Step::SE, c);
    auto pts = w.points();
    pts.pop_back();
    return Region(rasterize(pts));
}

Region window_region(const HexParams& p, const WindowSpec& w)
{
    const int A = p.axis(), s = w.size, r = w.base_row;
    if (((A - s - r) % 2 + 2) % 2 != 0)
        throw RegionError("window " + w.str() + " is not on the lattice of " + p.str());
    std::vector<LatticePoint> tri;
    if (w.kind == WindowKind::Delta)
        tri = {{A - s, r}, {A + s, r}, {A, r + s}};
    else
        tri = {{A - s, r}, {A, r - s}, {A + s, r}};
    return Region(rasterize(tri));
}

std::string family_name(HexFamily f)
{
    switch (f) {
    case HexFamily::H: return "H_l";
    case HexFamily::Hlq: return "H_lq";
    case HexFamily::HbarLq: return "Hbar_lq";
    }
    return "?";
}

std::string WindowedHexagon::str() const
{
    std::string s = family_name(family) + "[" + std::to_string(params.a) + "," +
                    std::to_string(params.b) + "," + std::to_string(params.k) + "]";
    for (const auto& w : windows)
        s += " " + w.str();
    s += " l=" + l.str();
    if (family != HexFamily::H)
        s += " q=" + q.str();
    return s;
}

namespace {

bool subset(const Region& small, const Region& big)
{
    return std::includes(big.cells().begin(), big.cells().end(), small.cells().begin(),
                         small.cells().end());
}

bool disjoint(const Region& x, const Region& y)
{
    auto i = x.cells().begin();
    auto j = y.cells().begin();
    while (i != x.cells().end() && j != y.cells().end()) {
        if (*i == *j)
            return false;
        if (*i < *j)
            ++i;
        else
            ++j;
    }
    return true;
}

// Rules that only depend on kinds, sizes and rows.
std::optional<std::string> check_shape(const HexParams& p, const std::vector<WindowSpec>& ws)
{
    int delta = 0, nabla = 0;
    const WindowSpec* odd = nullptr;
    for (const auto& w : ws) {
        if (w.size < 1)
            return "window " + w.str() + " has nonpositive size";
        (w.kind == WindowKind::Delta ? delta : nabla) += w.size;
        if (w.size % 2 == 1) {
            if (odd)
                return std::string("more than one odd window");
            odd = &w;
        }
    }
    if (p.k % 2 == 0) {
        if (odd)
            return "k is even but window " + odd->str() + " is odd";
        if (nabla)
            return std::string("k is even but a Nabla window is present");
        if (delta != p.k)
            return "Delta windows have total size " + std::to_string(delta) + ", need " +
                   std::to_string(p.k);
        return std::nullopt;
    }
    if (!odd)
        return std::string("k is odd but no odd window is present");
    if (delta != nabla + p.k)
        return "Delta total " + std::to_string(delta) + " must equal Nabla total " +
               std::to_string(nabla) + " plus k";
    for (const auto& w : ws) {
        if (&w == odd)
            continue;
        if (w.kind == WindowKind::Delta && w.min_row() <= odd->max_row())
            return "even Delta window " + w.str() + " is not above the odd window";
        if (w.kind == WindowKind::Nabla && w.max_row() >= odd->min_row())
            return "even Nabla window " + w.str() + " is not below the odd window";
    }
    return std::nullopt;
}

std::optional<std::string> check_cells(const Region& hex, const std::vector<Region>& wins,
                                       const std::vector<WindowSpec>& ws)
{
    for (std::size_t i = 0; i < wins.size(); ++i) {
        if (!subset(wins[i], hex))
            return "window " + ws[i].str() + " is not inside the hexagon";
        for (std::size_t j = 0; j < i; ++j)
            if (!disjoint(wins[i], wins[j]))
                return "windows " + ws[j].str() + " and " + ws[i].str() + " overlap";
    }
    return std::nullopt;
}

std::vector<WindowSpec> top_to_bottom(std::vector<WindowSpec> ws)
{
    std::sort(ws.begin(), ws.end(), [](const WindowSpec& x, const WindowSpec& y) {
        return x.max_row() > y.max_row();
    });
    return ws;
}

}  // namespace

std::optional<std::string> check_windows(const HexParams& p, const std::vector<WindowSpec>& ws)
{
    if (p.a < 1 || p.b < 1 || p.k < 0)
        return std::string("hexagon needs a, b >= 1 and k >= 0");
    if (auto e = check_shape(p, ws))
        return e;
    std::vector<Region> wins;
    for (const auto& w : ws) {
        try {
            wins.push_back(window_region(p, w));
        } catch (const RegionError& e) {
            return std::string(e.what());
        }
    }
    return check_cells(hexagon(p), wins, ws);
}

std::optional<std::string> boundary_contact(const HexParams& p, const std::vector<WindowSpec>& ws)
{
    for (const auto& w : ws) {
        if (w.kind == WindowKind::Delta && w.base_row + w.size == p.strips())
            return "apex of " + w.str() + " on the top side";
        if (w.kind == WindowKind::Nabla && w.base_row - w.size == 0)
            return "apex of " + w.str() + " on the base";
        if (w.size % 2 == 1 && (w.base_row == 0 || w.base_row == p.strips()))
            return "odd window " + w.str() + " based on the boundary";
    }
    return std::nullopt;
}

WindowedHexagon windowed_hexagon(const HexParams& p, const std::vector<WindowSpec>& ws)
{
    if (auto e = check_windows(p, ws))
        throw RegionError(p.str() + ": " + *e);
    WindowedHexagon out;
    out.params = p;
    out.windows = top_to_bottom(ws);

    std::vector<TriCell> cells;
    Region hex = hexagon(p);
    std::vector<Region> wins;
    for (const auto& w : ws)
        wins.push_back(window_region(p, w));
    for (const auto& c : hex.cells()) {
        bool removed = false;
        for (const auto& w : wins)
            removed = removed || w.contains(c);
        if (!removed)
            cells.push_back(c);
    }
    out.with_windows = Region(std::move(cells));

    const WindowSpec* odd = nullptr;
    for (const auto& w : ws)
        if (w.size % 2 == 1)
            odd = &w;
    if (!odd) {
        out.family = HexFamily::H;
        out.reference_row = 0;
        out.l = IndexList(vertebra_labels(out.with_windows, 0, p.axis()).above);
    } else {
        out.family = odd->kind == WindowKind::Delta ? HexFamily::Hlq : HexFamily::HbarLq;
        out.reference_row = odd->base_row;
        auto lab = vertebra_labels(out.with_windows, odd->base_row, p.axis());
        out.l = IndexList(lab.below);
        out.q = IndexList(lab.above);
    }

    auto forced = eliminate_forced(out.with_windows);
    out.region = forced.region;
    out.factor = forced.factor;
    out.untileable = forced.untileable;
    return out;
}

std::vector<std::vector<WindowSpec>> enumerate_window_sets(const HexParams& p, int max_windows)
{
    const Region hex = hexagon(p);
    const int A = p.axis();
    // Candidates in top-to-bottom order of their highest row.
    std::vector<WindowSpec> cand;
    for (int kind = 0; kind < 2; ++kind)
        for (int s = 1; s <= p.strips(); ++s)
            for (int r = 0; r <= p.strips(); ++r) {
                if (((A - s - r) % 2 + 2) % 2 != 0)
                    continue;
                WindowSpec w{kind == 0 ? WindowKind::Delta : WindowKind::Nabla, s, r};
                if (w.min_row() < 0 || w.max_row() >= p.strips())
                    continue;
                if (!subset(window_region(p, w), hex))
                    continue;
                cand.push_back(w);
            }
    std::stable_sort(cand.begin(), cand.end(), [](const WindowSpec& x, const WindowSpec& y) {
        return x.max_row() > y.max_row();
    });

    // Windows on the axis are disjoint iff their row ranges are.
    std::vector<std::vector<WindowSpec>> out;
    std::vector<WindowSpec> pick;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (!check_shape(p, pick))
            out.push_back(pick);
        if (static_cast<int>(pick.size()) == max_windows)
            return;
        bool odd_seen = false;
        int delta = 0;
        for (const auto& w : pick) {
            odd_seen = odd_seen || w.size % 2 == 1;
            if (w.kind == WindowKind::Delta)
                delta += w.size;
        }
        for (std::size_t i = from; i < cand.size(); ++i) {
            const WindowSpec& w = cand[i];
            if (!pick.empty() && w.max_row() >= pick.back().min_row())
                continue;
            // Top to bottom: even Delta windows, then the odd one, then even Nabla windows.
            if (p.k % 2 == 0) {
                if (w.kind != WindowKind::Delta || w.size % 2 == 1 || delta + w.size > p.k)
                    continue;
            } else if (w.size % 2 == 1) {
                if (odd_seen)
                    continue;
            } else if ((w.kind == WindowKind::Delta) == odd_seen) {
                continue;
            }
            pick.push_back(cand[i]);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::string family_name(RFamily f) { return f == RFamily::R ? "R" : "Rbar"; }

int r_min_x(const IndexList& l, const IndexList& q, RFamily f)
{
    const int m = l.size(), n = q.size(), lm = l.last(), qn = q.last();
    if (f == RFamily::RBar)
        return std::max(0, qn - lm - n + m);
    if (l.empty())
        return qn - n - 1;
    return std::max(0, qn - lm - n + m - 1);
}

RBoundary r_boundary(const IndexList& l, const IndexList& q, int x, RFamily f)
{
    const int m = l.size(), n = q.size(), lm = l.last(), qn = q.last();
    if (m == 0 && n == 0)
        throw RegionError("R and Rbar with both lists empty have no boundary");
    if (x < r_min_x(l, q, f))
        throw RegionError(family_name(f) + "_{" + l.str() + "," + q.str() + "}(" +
                          std::to_string(x) + "): x is below its minimum " +
                          std::to_string(r_min_x(l, q, f)));
    const bool bar = f == RFamily::RBar;
    // Height of the horizontal through O (or through the point one step southwest of it).
    const int hy = bar ? -1 : 0;
    RBoundary out;
    const int lstart = m ? -1 - (hy + 2 * l.at(1) - 1) : 0;

    // Path Q from A down to B, traversing P_u's bumps in reverse.
    if (n) {
        out.walk = BoundaryWalk({0, 2 * qn});
        for (int i = n; i >= 1; --i) {
            out.walk.step(Step::SE);
            out.walk.step(Step::SW);
            out.bumps.emplace_back(TriCell(2 * q.at(i) - 2, 0), TriCell(2 * q.at(i) - 1, 0));
            if (i > 1) {
                int d = 2 * q.at(i) - 2 - 2 * q.at(i - 1);
                out.walk.step(Step::SW, d);
                out.walk.step(Step::E, d / 2);
            }
        }
        out.walk.step(Step::SW, 2 * q.at(1) - 2 - hy);
    } else {
        out.walk = BoundaryWalk({lstart, hy});
    }
    const LatticePoint A = out.walk.points().front();

    int sw_side = n;
    if (m) {
        out.walk.move_to_x2(lstart);
        out.walk.step(Step::SE, hy + 2 * l.at(1) - 1);
        for (int i = 1; i <= m; ++i) {
            out.walk.step(Step::SE);
            out.walk.step(Step::SW);
            if (i < m) {
                int d = 2 * (l.at(i + 1) - l.at(i)) - 2;
                out.walk.move_to_x2(-1 - d);
                out.walk.step(Step::SE, d);
            }
        }
        out.walk.step(Step::W, x);
        sw_side = 2 * lm - m + n + (bar ? 0 : 1);
    } else {
        int target = bar ? -1 - 2 * x : -2 * (x + 1);
        if (target > out.walk.current().x2)
            throw RegionError("x too small to close the boundary");
        out.walk.move_to_x2(target);
    }
    out.walk.step(Step::NW, sw_side);
    out.walk.step(Step::NE, A.h - out.walk.current().h);
    out.walk.move_to_x2(A.x2);
    if (!out.walk.closed())
        throw RegionError("boundary walk did not close");
    return out;
}

Region r_family_region(const IndexList& l, const IndexList& q, int x, RFamily f)
{
    if (l.empty() && q.empty())
        return Region();
    RBoundary b = r_boundary(l, q, x, f);
    auto pts = b.walk.points();
    pts.pop_back();
    Region shape(rasterize(pts));
    std::vector<LozengePos> half;
    for (const auto& h : b.bumps)
        if (shape.contains(h.first) && shape.contains(h.second))
            half.push_back(h);
    return Region(shape.cells(), half);
}

Region r_region(const IndexList& l, const IndexList& q, int x)
{
    return r_family_region(l, q, x, RFamily::R);
}

Region r_bar_region(const IndexList& l, const IndexList& q, int x)
{
    return r_family_region(l, q, x, RFamily::RBar);
}

}  // namespace lozenge
