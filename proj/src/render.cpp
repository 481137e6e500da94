#include "lozenge/render.hpp"

#include "lozenge/count.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lozenge {

namespace {

constexpr double kSide = 20.0;
constexpr double kMargin = 10.0;
const double kHeight = kSide * std::sqrt(3.0) / 2.0;

struct Frame {
    int min_x2 = 0;
    int max_h = 0;
    double x(int x2) const { return kMargin + (x2 - min_x2) * kSide / 2.0; }
    double y(double h) const { return kMargin + (max_h - h) * kHeight; }
};

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

// Corners in (x2, h), counterclockwise from the lower left.
std::array<LatticePoint, 3> corners(const TriCell& c)
{
    if (c.up())
        return {LatticePoint{c.col - 1, c.row}, LatticePoint{c.col + 1, c.row},
                LatticePoint{c.col, c.row + 1}};
    return {LatticePoint{c.col, c.row}, LatticePoint{c.col + 1, c.row + 1},
            LatticePoint{c.col - 1, c.row + 1}};
}

double centroid_h(const TriCell& c) { return c.row + (c.up() ? 1.0 / 3.0 : 2.0 / 3.0); }

std::string points(const Frame& fr, const std::vector<LatticePoint>& pts)
{
    std::string s;
    for (const auto& p : pts) {
        if (!s.empty())
            s += ' ';
        s += fmt(fr.x(p.x2)) + "," + fmt(fr.y(p.h));
    }
    return s;
}

std::vector<LatticePoint> lozenge_outline(const LozengePos& p)
{
    auto a = corners(p.first), b = corners(p.second);
    auto in = [](const std::array<LatticePoint, 3>& t, const LatticePoint& q) {
        return t[0] == q || t[1] == q || t[2] == q;
    };
    LatticePoint ua{}, ub{};
    std::vector<LatticePoint> shared;
    for (const auto& q : a) {
        if (in(b, q))
            shared.push_back(q);
        else
            ua = q;
    }
    for (const auto& q : b)
        if (!in(a, q))
            ub = q;
    return {ua, shared[0], ub, shared[1]};
}

}  // namespace

RenderFormat parse_render_format(const std::string& name)
{
    if (name == "ascii")
        return RenderFormat::Ascii;
    if (name == "svg")
        return RenderFormat::Svg;
    if (name == "triregion")
        return RenderFormat::Triregion;
    throw std::invalid_argument("unknown format '" + name + "' (expected ascii, svg or triregion)");
}

std::string render_ascii(const Region& r)
{
    std::ostringstream os;
    if (r.empty()) {
        os << "# region cells=0 halves=0\n";
        return os.str();
    }
    os << "# region cells=" << r.size() << " halves=" << r.half_weighted().size() << " rows="
       << r.min_row() << ".." << r.max_row() << " cols=" << r.min_col() << ".." << r.max_col()
       << "\n";
    std::set<TriCell> halved;
    for (const auto& h : r.half_weighted()) {
        halved.insert(h.first);
        halved.insert(h.second);
    }
    for (int row = r.max_row(); row >= r.min_row(); --row) {
        std::string line;
        for (int col = r.min_col(); col <= r.max_col(); ++col) {
            TriCell c(row, col);
            char ch = '.';
            if (r.contains(c))
                ch = halved.count(c) ? (c.up() ? 'a' : 'v') : (c.up() ? 'A' : 'V');
            line += ch;
        }
        os << line << "\n";
    }
    return os.str();
}

std::string render_svg(const Region& r, const std::optional<std::vector<LozengePos>>& tiling)
{
    Frame fr;
    double width = 2 * kMargin, height = 2 * kMargin;
    if (!r.empty()) {
        fr.min_x2 = r.min_col() - 1;
        fr.max_h = r.max_row() + 1;
        width += (r.max_col() + 1 - fr.min_x2) * kSide / 2.0;
        height += (fr.max_h - r.min_row()) * kHeight;
    }
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width)
       << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height)
       << "\">\n";
    os << "<g fill=\"none\" stroke=\"#999999\" stroke-width=\"0.5\">\n";
    for (const auto& c : r.cells()) {
        auto t = corners(c);
        os << "<polygon points=\"" << points(fr, {t[0], t[1], t[2]}) << "\"/>\n";
    }
    os << "</g>\n";
    if (!r.half_weighted().empty()) {
        os << "<g fill=\"#bbbbbb\" stroke=\"none\">\n";
        for (const auto& h : r.half_weighted()) {
            const double cx = (fr.x(h.first.col) + fr.x(h.second.col)) / 2.0;
            const double cy = (fr.y(centroid_h(h.first)) + fr.y(centroid_h(h.second))) / 2.0;
            const bool vertical = h.first.col == h.second.col;
            const double rx = vertical ? kSide * 0.2 : kSide * 0.35;
            const double ry = vertical ? kSide * 0.35 : kSide * 0.2;
            os << "<ellipse cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" rx=\"" << fmt(rx)
               << "\" ry=\"" << fmt(ry) << "\"/>\n";
        }
        os << "</g>\n";
    }
    if (tiling) {
        os << "<g fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\">\n";
        for (const auto& p : *tiling)
            os << "<polygon points=\"" << points(fr, lozenge_outline(p)) << "\"/>\n";
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string render(const Region& r, RenderFormat f, const std::optional<std::vector<LozengePos>>& tiling)
{
    if (tiling && !is_tiling(r, *tiling))
        throw std::invalid_argument("the lozenges given do not tile the region");
    switch (f) {
    case RenderFormat::Ascii:
        return render_ascii(r);
    case RenderFormat::Svg:
        return render_svg(r, tiling);
    case RenderFormat::Triregion:
        return write_triregion(r);
    }
    return {};
}

}  // namespace lozenge
