// Independent reference implementations used only by the tests.
#pragma once

#include "lozenge/exact.hpp"
#include "lozenge/lattice.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace testing_support {

using lozenge::ExactRational;

// Laplace expansion along the first row.
inline ExactRational cofactor_det(const std::vector<std::vector<ExactRational>>& a)
{
    const std::size_t n = a.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return a[0][0];
    ExactRational sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<ExactRational>> sub;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<ExactRational> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j)
                    row.push_back(a[i][c]);
            sub.push_back(row);
        }
        const ExactRational term = a[0][j] * cofactor_det(sub);
        sum += (j % 2 == 0) ? term : ExactRational(-term);
    }
    return sum;
}

inline lozenge::RationalMatrix to_matrix(const std::vector<std::vector<ExactRational>>& a)
{
    lozenge::RationalMatrix m(a.size(), a.empty() ? 0 : a[0].size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            m.at(i, j) = a[i][j];
    return m;
}

// Plain backtracking: the lowest remaining cell must pair with a neighbour.
inline ExactRational naive_tiling_count(const lozenge::Region& r)
{
    std::set<lozenge::TriCell> left(r.cells().begin(), r.cells().end());
    std::function<ExactRational()> go = [&]() -> ExactRational {
        if (left.empty())
            return 1;
        const lozenge::TriCell c = *left.begin();
        left.erase(left.begin());
        ExactRational total = 0;
        for (const auto& nb : lozenge::neighbours(c)) {
            auto it = left.find(nb);
            if (it == left.end())
                continue;
            left.erase(it);
            total += r.weight(lozenge::LozengePos(c, nb)) * go();
            left.insert(nb);
        }
        left.insert(c);
        return total;
    };
    return go();
}

// Plane partitions fitting in an a x b x c box, by direct enumeration.
inline long count_plane_partitions(int a, int b, int c)
{
    std::vector<int> h(static_cast<std::size_t>(a * b), 0);
    std::function<long(int)> go = [&](int pos) -> long {
        if (pos == a * b)
            return 1;
        const int i = pos / b, j = pos % b;
        int cap = c;
        if (i > 0)
            cap = std::min(cap, h[(i - 1) * b + j]);
        if (j > 0)
            cap = std::min(cap, h[i * b + j - 1]);
        long total = 0;
        for (int v = 0; v <= cap; ++v) {
            h[i * b + j] = v;
            total += go(pos + 1);
        }
        return total;
    };
    return go(0);
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace testing_support
