#include "lozenge/lattice.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <sstream>

namespace lozenge {

std::array<TriCell, 3> neighbours(const TriCell& c)
{
    TriCell across = c.up() ? TriCell(c.row - 1, c.col) : TriCell(c.row + 1, c.col);
    return {TriCell(c.row, c.col - 1), TriCell(c.row, c.col + 1), across};
}

bool adjacent(const TriCell& a, const TriCell& b)
{
    for (const auto& n : neighbours(a))
        if (n == b)
            return true;
    return false;
}

LozengePos::LozengePos(const TriCell& a, const TriCell& b)
{
    if (!adjacent(a, b))
        throw std::invalid_argument("lozenge cells are not adjacent");
    first = std::min(a, b);
    second = std::max(a, b);
}

Region::Region(std::vector<TriCell> cells, std::vector<LozengePos> half)
    : cells_(std::move(cells)), half_(std::move(half))
{
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    std::sort(half_.begin(), half_.end());
    half_.erase(std::unique(half_.begin(), half_.end()), half_.end());
    for (const auto& h : half_)
        if (!contains(h.first) || !contains(h.second))
            throw std::invalid_argument("half-weighted position outside the region");
}

bool Region::contains(const TriCell& c) const
{
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

bool Region::is_half(const LozengePos& p) const
{
    return std::binary_search(half_.begin(), half_.end(), p);
}

ExactRational Region::weight(const LozengePos& p) const
{
    return is_half(p) ? make_rational(1, 2) : ExactRational(1);
}

int Region::min_row() const { return cells_.empty() ? 0 : cells_.front().row; }
int Region::max_row() const { return cells_.empty() ? 0 : cells_.back().row; }

int Region::min_col() const
{
    int m = 0;
    for (std::size_t i = 0; i < cells_.size(); ++i)
        if (i == 0 || cells_[i].col < m)
            m = cells_[i].col;
    return m;
}

int Region::max_col() const
{
    int m = 0;
    for (std::size_t i = 0; i < cells_.size(); ++i)
        if (i == 0 || cells_[i].col > m)
            m = cells_[i].col;
    return m;
}

long balance(const Region& r)
{
    long b = 0;
    for (const auto& c : r.cells())
        b += c.up() ? 1 : -1;
    return b;
}

ForcedResult eliminate_forced(const Region& r)
{
    std::set<TriCell> cells(r.cells().begin(), r.cells().end());
    std::set<LozengePos> half(r.half_weighted().begin(), r.half_weighted().end());
    ForcedResult res;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = cells.begin(); it != cells.end();) {
            TriCell c = *it;
            int count = 0;
            TriCell partner;
            for (const auto& n : neighbours(c))
                if (cells.count(n)) {
                    ++count;
                    partner = n;
                }
            if (count == 0) {
                res.untileable = true;
                res.region = Region(std::vector<TriCell>(cells.begin(), cells.end()),
                                    std::vector<LozengePos>(half.begin(), half.end()));
                res.factor = 0;
                return res;
            }
            if (count > 1) {
                ++it;
                continue;
            }
            LozengePos p(c, partner);
            if (half.erase(p))
                res.factor /= 2;
            it = cells.erase(it);
            if (it != cells.end() && *it == partner)
                it = cells.erase(it);
            else
                cells.erase(partner);
            changed = true;
        }
    }
    std::vector<LozengePos> kept;
    for (const auto& h : half)
        if (cells.count(h.first) && cells.count(h.second))
            kept.push_back(h);
    res.region = Region(std::vector<TriCell>(cells.begin(), cells.end()), kept);
    return res;
}

namespace {

template <class F>
Region map_region(const Region& r, F f)
{
    std::vector<TriCell> cells;
    cells.reserve(r.size());
    for (const auto& c : r.cells())
        cells.push_back(f(c));
    std::vector<LozengePos> half;
    for (const auto& h : r.half_weighted())
        half.emplace_back(f(h.first), f(h.second));
    return Region(std::move(cells), std::move(half));
}

int mod2(int v) { return ((v % 2) + 2) % 2; }

// Translate so the first cell lands on row 0, col 0 or 1.
Region normalize(const Region& r)
{
    if (r.empty())
        return r;
    const TriCell& c0 = r.cells().front();
    int drow = -c0.row;
    int dcol = -c0.col + mod2(c0.col - c0.row);
    return translate(r, drow, dcol);
}

}  // namespace

Region translate(const Region& r, int drow, int dcol)
{
    if (mod2(dcol - drow) != 0)
        throw std::invalid_argument("translation does not preserve the lattice");
    return map_region(r, [&](const TriCell& c) { return TriCell(c.row + drow, c.col + dcol); });
}

Region rotate180(const Region& r)
{
    return map_region(r, [](const TriCell& c) { return TriCell(-1 - c.row, -c.col); });
}

Region reflect(const Region& r, int axis)
{
    return map_region(r, [&](const TriCell& c) { return TriCell(c.row, 2 * axis - c.col); });
}

bool congruent(const Region& a, const Region& b)
{
    if (a.size() != b.size() || a.half_weighted().size() != b.half_weighted().size())
        return false;
    Region nb = normalize(b);
    return normalize(a) == nb || normalize(rotate180(a)) == nb;
}

std::optional<int> symmetry_axis(const Region& r)
{
    if (r.empty())
        return std::nullopt;
    int s = r.min_col() + r.max_col();
    if (s % 2 != 0)
        return std::nullopt;
    int axis = s / 2;
    if (reflect(r, axis) != r)
        return std::nullopt;
    return axis;
}

CutResult symmetry_axis_cut(const Region& r)
{
    CutResult res;
    if (r.empty())
        return res;
    auto ax = symmetry_axis(r);
    if (!ax)
        throw CutError("region has no vertical symmetry axis");
    const int A = *ax;

    // Side of each axis cell: true when it goes to the plus piece.
    std::map<int, bool> axis_plus;
    bool plus_side = true, seen = false;
    int gap = 0;
    for (int j = r.max_row(); j >= r.min_row(); --j) {
        if (r.contains(TriCell(j, A))) {
            if (seen && gap % 2 == 1)
                plus_side = !plus_side;
            gap = 0;
            seen = true;
            axis_plus[j] = plus_side;
        } else if (seen) {
            ++gap;
        }
    }
    if (axis_plus.size() % 2 != 0)
        throw CutError("symmetry axis crosses an odd number of cells");
    res.width = static_cast<int>(axis_plus.size() / 2);

    std::vector<TriCell> pc, mc;
    for (const auto& c : r.cells()) {
        bool to_plus = c.col < A || (c.col == A && axis_plus.at(c.row));
        (to_plus ? pc : mc).push_back(c);
    }
    Region pr(pc), mr(mc);
    std::vector<LozengePos> ph, mh;
    for (const auto& h : r.half_weighted()) {
        if (pr.contains(h.first) && pr.contains(h.second))
            ph.push_back(h);
        else if (mr.contains(h.first) && mr.contains(h.second))
            mh.push_back(h);
    }
    // Vertical lozenges lying on the axis are halved.
    for (const auto& [j, side] : axis_plus) {
        TriCell c(j, A);
        auto nx = axis_plus.find(j + 1);
        if (c.up() || nx == axis_plus.end() || nx->second != side)
            continue;
        (side ? ph : mh).emplace_back(c, TriCell(j + 1, A));
    }
    res.plus = Region(std::move(pc), std::move(ph));
    res.minus = Region(std::move(mc), std::move(mh));
    return res;
}

VertebraLabels vertebra_labels(const Region& r, int reference_row)
{
    if (r.empty())
        return {};
    auto ax = symmetry_axis(r);
    if (!ax)
        throw CutError("region has no vertical symmetry axis");
    return vertebra_labels(r, reference_row, *ax);
}

VertebraLabels vertebra_labels(const Region& r, int reference_row, int axis)
{
    VertebraLabels out;
    if (r.empty())
        return out;
    const int bot = r.min_row(), top = r.max_row();
    auto up = [&](int j) { return TriCell(j, axis).up(); };

    // Each vertebra as its lowest and highest strip.
    std::vector<std::pair<int, int>> verts;
    int j = bot;
    if (up(bot))
        verts.emplace_back(bot, bot), j = bot + 1;
    for (; j <= top; j += 2)
        verts.emplace_back(j, std::min(j + 1, top));

    std::vector<std::pair<int, int>> below, above;
    for (const auto& v : verts) {
        if (v.second < reference_row)
            below.push_back(v);
        else if (v.first >= reference_row)
            above.push_back(v);
    }
    std::reverse(below.begin(), below.end());
    if (reference_row == bot && up(bot) && !above.empty() && above.front().first == bot)
        above.erase(above.begin());

    auto present = [&](const std::pair<int, int>& v) {
        for (int s = v.first; s <= v.second; ++s)
            if (!r.contains(TriCell(s, axis)))
                return false;
        return true;
    };
    for (std::size_t i = 0; i < below.size(); ++i)
        if (present(below[i]))
            out.below.push_back(static_cast<int>(i + 1));
    for (std::size_t i = 0; i < above.size(); ++i)
        if (present(above[i]))
            out.above.push_back(static_cast<int>(i + 1));
    return out;
}

void BoundaryWalk::step(Step s, int times)
{
    if (times < 0)
        throw std::invalid_argument("negative step count in boundary walk");
    static const int dx[] = {2, -2, 1, -1, 1, -1};
    static const int dh[] = {0, 0, 1, 1, -1, -1};
    int i = static_cast<int>(s);
    for (int t = 0; t < times; ++t) {
        LatticePoint p = points_.back();
        points_.push_back({p.x2 + dx[i], p.h + dh[i]});
        steps_.push_back(s);
    }
}

void BoundaryWalk::move_to_x2(int target)
{
    int d = target - current().x2;
    if (d % 2 != 0)
        throw std::invalid_argument("horizontal move to an odd offset");
    step(d >= 0 ? Step::E : Step::W, (d >= 0 ? d : -d) / 2);
}

int BoundaryWalk::count(Step s) const
{
    return static_cast<int>(std::count(steps_.begin(), steps_.end(), s));
}

std::vector<TriCell> rasterize(const std::vector<LatticePoint>& polygon)
{
    std::vector<TriCell> cells;
    if (polygon.size() < 3)
        return cells;
    int hmin = polygon[0].h, hmax = hmin, xmin = polygon[0].x2, xmax = xmin;
    for (const auto& p : polygon) {
        hmin = std::min(hmin, p.h), hmax = std::max(hmax, p.h);
        xmin = std::min(xmin, p.x2), xmax = std::max(xmax, p.x2);
    }
    const std::size_t n = polygon.size();
    for (int j = hmin; j < hmax; ++j) {
        for (int c = xmin; c <= xmax; ++c) {
            TriCell cell(j, c);
            // Centroid height, times 3.
            const long y3 = 3L * j + (cell.up() ? 1 : 2);
            int crossings = 0;
            for (std::size_t e = 0; e < n; ++e) {
                const LatticePoint& p = polygon[e];
                const LatticePoint& q = polygon[(e + 1) % n];
                if (p.h == q.h)
                    continue;
                if (!(3L * std::min(p.h, q.h) < y3 && y3 < 3L * std::max(p.h, q.h)))
                    continue;
                // Is the edge's x at height y to the right of the centroid?
                long num = 3L * p.x2 * (q.h - p.h) + long(q.x2 - p.x2) * (y3 - 3L * p.h);
                long den = 3L * (q.h - p.h);
                if (den > 0 ? num > long(c) * den : num < long(c) * den)
                    ++crossings;
            }
            if (crossings % 2 == 1)
                cells.push_back(cell);
        }
    }
    return cells;
}

ParseError::ParseError(int l, const std::string& what)
    : std::runtime_error("line " + std::to_string(l) + ": " + what), line(l)
{
}

namespace {

char orient_char(const TriCell& c) { return c.up() ? 'U' : 'D'; }

TriCell parse_cell(std::istringstream& ss, int line)
{
    int row, col;
    std::string o;
    if (!(ss >> row >> col >> o))
        throw ParseError(line, "expected <row> <col> <U|D>");
    if (o != "U" && o != "D")
        throw ParseError(line, "orientation must be U or D, got '" + o + "'");
    TriCell c(row, col);
    if ((o == "U") != c.up())
        throw ParseError(line, "orientation " + o + " does not match cell parity");
    return c;
}

}  // namespace

std::string write_triregion(const Region& r)
{
    std::ostringstream os;
    os << "TRIREGION 1\n";
    for (const auto& c : r.cells())
        os << "C " << c.row << ' ' << c.col << ' ' << orient_char(c) << '\n';
    for (const auto& h : r.half_weighted())
        os << "H " << h.first.row << ' ' << h.first.col << ' ' << orient_char(h.first) << ' '
           << h.second.row << ' ' << h.second.col << ' ' << orient_char(h.second) << '\n';
    return os.str();
}

Region read_triregion(std::istream& in)
{
    std::string text;
    int line = 0;
    std::vector<TriCell> cells;
    std::vector<std::pair<LozengePos, int>> half;
    bool header = false;
    while (std::getline(in, text)) {
        ++line;
        if (!text.empty() && text.back() == '\r')
            text.pop_back();
        if (!header) {
            if (text != "TRIREGION 1")
                throw ParseError(line, "expected header 'TRIREGION 1'");
            header = true;
            continue;
        }
        if (text.empty())
            continue;
        std::istringstream ss(text);
        std::string tag;
        ss >> tag;
        if (tag == "C") {
            cells.push_back(parse_cell(ss, line));
        } else if (tag == "H") {
            TriCell a = parse_cell(ss, line);
            TriCell b = parse_cell(ss, line);
            if (!adjacent(a, b))
                throw ParseError(line, "half-weighted cells are not adjacent");
            half.emplace_back(LozengePos(a, b), line);
        } else {
            throw ParseError(line, "unknown record '" + tag + "'");
        }
        std::string extra;
        if (ss >> extra)
            throw ParseError(line, "trailing data '" + extra + "'");
    }
    if (!header)
        throw ParseError(1, "expected header 'TRIREGION 1'");
    Region base(cells);
    std::vector<LozengePos> hp;
    for (const auto& [p, l] : half) {
        if (!base.contains(p.first) || !base.contains(p.second))
            throw ParseError(l, "half-weighted position outside the region");
        hp.push_back(p);
    }
    return Region(std::move(cells), std::move(hp));
}

Region read_triregion(const std::string& text)
{
    std::istringstream in(text);
    return read_triregion(in);
}

}  // namespace lozenge
