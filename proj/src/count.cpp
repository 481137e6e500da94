#include "lozenge/count.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <unordered_map>

namespace lozenge {

namespace {

// Fixed-width bitset used as a frontier key.
template <int W>
struct Mask {
    std::array<std::uint64_t, W> w{};

    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1U; }
    void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void shift_down()
    {
        for (int i = 0; i < W; ++i) {
            w[i] >>= 1;
            if (i + 1 < W)
                w[i] |= (w[i + 1] & 1U) << 63;
        }
    }
    bool zero() const
    {
        for (auto x : w)
            if (x)
                return false;
        return true;
    }
    bool operator==(const Mask&) const = default;
};

template <int W>
struct MaskHash {
    std::size_t operator()(const Mask<W>& m) const
    {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto x : m.w)
            h = (h ^ x) * 0xff51afd7ed558ccdULL, h ^= h >> 32;
        return static_cast<std::size_t>(h);
    }
};

struct Forward {
    int offset;
    unsigned weight;  // 1 or 2, see count_oracle
};

template <int W>
BigInt frontier_count(const std::vector<std::vector<Forward>>& fwd)
{
    using Key = Mask<W>;
    std::unordered_map<Key, BigInt, MaskHash<W>> cur, next;
    cur.emplace(Key{}, BigInt(1));
    for (std::size_t p = 0; p < fwd.size(); ++p) {
        next.clear();
        next.reserve(cur.size() * 2);
        for (auto& [key, val] : cur) {
            if (key.test(0)) {
                Key k = key;
                k.shift_down();
                next[k] += val;
                continue;
            }
            for (const auto& f : fwd[p]) {
                if (key.test(f.offset))
                    continue;
                Key k = key;
                k.set(f.offset);
                k.shift_down();
                if (f.weight == 1)
                    next[k] += val;
                else
                    next[k] += val * f.weight;
            }
        }
        std::swap(cur, next);
        if (cur.empty())
            return 0;
    }
    auto it = cur.find(Key{});
    return it == cur.end() ? BigInt(0) : it->second;
}

}  // namespace

ExactRational count_oracle(const Region& r)
{
    if (r.empty())
        return 1;
    if (balance(r) != 0)
        return 0;
    const auto& cells = r.cells();
    auto index_of = [&](const TriCell& c) -> long {
        auto it = std::lower_bound(cells.begin(), cells.end(), c);
        return (it != cells.end() && *it == c) ? it - cells.begin() : -1;
    };
    // With half weights present every lozenge carries 2 or 1, and the total
    // is divided by 2^(lozenges per tiling) at the end.
    const bool halves = !r.half_weighted().empty();
    std::vector<std::vector<Forward>> fwd(cells.size());
    int width = 1;
    for (std::size_t p = 0; p < cells.size(); ++p) {
        const TriCell& c = cells[p];
        TriCell right(c.row, c.col + 1);
        std::vector<TriCell> partners{right};
        if (!c.up())
            partners.emplace_back(c.row + 1, c.col);
        for (const auto& d : partners) {
            long q = index_of(d);
            if (q < 0)
                continue;
            unsigned w = halves ? (r.is_half(LozengePos(c, d)) ? 1U : 2U) : 1U;
            fwd[p].push_back({static_cast<int>(q - static_cast<long>(p)), w});
            width = std::max(width, static_cast<int>(q - static_cast<long>(p)) + 1);
        }
    }
    BigInt total;
    if (width <= 64)
        total = frontier_count<1>(fwd);
    else if (width <= 128)
        total = frontier_count<2>(fwd);
    else if (width <= 256)
        total = frontier_count<4>(fwd);
    else if (width <= 512)
        total = frontier_count<8>(fwd);
    else if (width <= 1024)
        total = frontier_count<16>(fwd);
    else
        throw DomainError("region too wide for the frontier counter");
    ExactRational res(total);
    if (halves)
        res *= pow2(-static_cast<long>(cells.size() / 2));
    return res;
}

std::optional<std::vector<LozengePos>> first_tiling(const Region& r)
{
    if (balance(r) != 0)
        return std::nullopt;
    const auto& cells = r.cells();
    std::vector<char> covered(cells.size(), 0);
    auto index_of = [&](const TriCell& c) -> long {
        auto it = std::lower_bound(cells.begin(), cells.end(), c);
        return (it != cells.end() && *it == c) ? it - cells.begin() : -1;
    };
    std::vector<LozengePos> out;
    std::function<bool(std::size_t)> rec = [&](std::size_t p) -> bool {
        while (p < cells.size() && covered[p])
            ++p;
        if (p == cells.size())
            return true;
        const TriCell& c = cells[p];
        std::vector<TriCell> partners{TriCell(c.row, c.col + 1)};
        if (!c.up())
            partners.emplace_back(c.row + 1, c.col);
        for (const auto& d : partners) {
            long q = index_of(d);
            if (q < 0 || covered[q])
                continue;
            covered[p] = covered[q] = 1;
            out.emplace_back(c, d);
            if (rec(p + 1))
                return true;
            out.pop_back();
            covered[p] = covered[q] = 0;
        }
        return false;
    };
    if (!rec(0))
        return std::nullopt;
    std::sort(out.begin(), out.end());
    return out;
}

bool is_tiling(const Region& r, const std::vector<LozengePos>& tiling)
{
    std::vector<TriCell> used;
    for (const auto& p : tiling) {
        if (!r.contains(p.first) || !r.contains(p.second))
            return false;
        used.push_back(p.first);
        used.push_back(p.second);
    }
    std::sort(used.begin(), used.end());
    return used == r.cells();
}

std::string side_name(PathSide s) { return s == PathSide::Southwest ? "southwest" : "northwest"; }

namespace {

struct SegLess {
    PathSide side;
    bool operator()(const Segment& a, const Segment& b) const
    {
        if (a.row != b.row)
            return side == PathSide::Southwest ? a.row < b.row : a.row > b.row;
        return a.col < b.col;
    }
};

// West and east cells of a segment.
std::pair<TriCell, TriCell> seg_cells(const Segment& s) { return {TriCell(s.row, s.col), TriCell(s.row, s.col + 1)}; }

}  // namespace

PathEndpoints path_endpoints(const Region& r, PathSide side)
{
    PathEndpoints pe;
    pe.side = side;
    // Segment orientation: for SOUTHWEST the west cell is UP, for NORTHWEST it is DOWN.
    const bool west_up = side == PathSide::Southwest;
    for (const auto& c : r.cells()) {
        // c as the east cell of a segment
        if (c.up() == west_up)
            continue;
        Segment s{c.row, c.col - 1};
        if (!r.contains(TriCell(s.row, s.col)))
            pe.starts.push_back(s);
    }
    for (const auto& c : r.cells()) {
        // c as the west cell
        if (c.up() != west_up)
            continue;
        Segment s{c.row, c.col};
        if (!r.contains(TriCell(s.row, s.col + 1)))
            pe.ends.push_back(s);
    }
    SegLess less{side};
    std::sort(pe.starts.begin(), pe.starts.end(), less);
    std::sort(pe.ends.begin(), pe.ends.end(), less);
    return pe;
}

RationalMatrix gv_matrix(const Region& r, const PathEndpoints& pe)
{
    if (pe.starts.size() != pe.ends.size())
        throw DomainError("unequal numbers of start and end segments (" +
                          std::to_string(pe.starts.size()) + " vs " +
                          std::to_string(pe.ends.size()) + ")");
    const std::size_t n = pe.starts.size();
    const bool sw = pe.side == PathSide::Southwest;
    SegLess less{pe.side};
    RationalMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        std::map<Segment, ExactRational, SegLess> dp(less);
        dp[pe.starts[i]] = 1;
        for (auto it = dp.begin(); it != dp.end(); ++it) {
            const Segment s = it->first;
            const TriCell east = seg_cells(s).second;
            if (!r.contains(east))
                continue;
            // East step and the diagonal step (NE for southwest, SE for northwest).
            TriCell e2(s.row, s.col + 2);
            Segment se{s.row, s.col + 2};
            TriCell d2 = sw ? TriCell(s.row + 1, s.col + 1) : TriCell(s.row - 1, s.col + 1);
            Segment sd{d2.row, d2.col};
            for (const auto& [cell, next] : {std::pair{e2, se}, std::pair{d2, sd}}) {
                if (!r.contains(cell))
                    continue;
                dp[next] += it->second * r.weight(LozengePos(east, cell));
            }
        }
        for (std::size_t j = 0; j < n; ++j) {
            auto f = dp.find(pe.ends[j]);
            if (f != dp.end())
                a.at(i, j) = f->second;
        }
    }
    return a;
}

ExactRational count_gv(const Region& r, const IndexList& l, const IndexList& q, int x, RFamily f,
                       PathSide side)
{
    if (r != r_family_region(l, q, x, f))
        throw DomainError("region does not match " + family_name(f) + "_{" + l.str() + "," +
                          q.str() + "}(" + std::to_string(x) + ")");
    if (r.empty())
        return 1;
    auto pe = path_endpoints(r, side);
    return determinant(gv_matrix(r, pe));
}

ExactRational count_gv(const IndexList& l, const IndexList& q, int x, RFamily f, PathSide side)
{
    return count_gv(r_family_region(l, q, x, f), l, q, x, f, side);
}

}  // namespace lozenge
