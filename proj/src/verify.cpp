#include "lozenge/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

namespace lozenge {

namespace {

using Clock = std::chrono::steady_clock;
using Values = std::vector<std::pair<std::string, ExactRational>>;

ExactRational half() { return make_rational(1, 2); }

ExactRational sign(long e) { return (e % 2 == 0) ? 1 : -1; }

ExactRational delta(int a, int b) { return a == b ? 1 : 0; }

// Oracle counts of the R families are shared across checks.
using RKey = std::tuple<int, std::vector<int>, std::vector<int>, int>;
std::mutex cache_mutex;
std::map<RKey, ExactRational> cache;

ExactRational M(RFamily f, const IndexList& l, const IndexList& q, int x)
{
    RKey key{static_cast<int>(f), l.entries(), q.entries(), x};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        if (auto it = cache.find(key); it != cache.end())
            return it->second;
    }
    ExactRational v = count_oracle(r_family_region(l, q, x, f));
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(key, v);
    return v;
}

CountReport timed(std::string instance, Clock::time_point start, Values values)
{
    CountReport r = make_report(std::move(instance), std::move(values));
    r.elapsed = Clock::now() - start;
    return r;
}

CountReport pair_report(std::string instance, Clock::time_point start, ExactRational lhs,
                        ExactRational rhs)
{
    return timed(std::move(instance), start, {{"lhs", std::move(lhs)}, {"rhs", std::move(rhs)}});
}

std::string lq(const IndexList& l, const IndexList& q)
{
    return "l=" + l.str() + ",q=" + q.str();
}

std::string bar_name(RFamily f) { return f == RFamily::R ? "R" : "Rbar"; }

// Right-hand side of the last-row expansion, with the count function left open
// so the same code serves tiling counts and polynomials.
using Eval = std::function<ExactRational(RFamily, const IndexList&, const IndexList&,
                                         const ExactRational&)>;

ExactRational expansion_rhs(RFamily f, const IndexList& l, const IndexList& q,
                            const ExactRational& x, const Eval& ev)
{
    const int m = l.size(), n = q.size();
    ExactRational s = 0;
    if (f == RFamily::R) {
        if (m <= n) {
            for (int k = 1; k <= n; ++k)
                s += sign(n - k) * coeff_C(k, l, q, x) * ev(f, l, q.omit(k), x);
            if (m == n)
                s += sign(n) * ev(RFamily::RBar, l, q, x);
        } else {
            for (int k = 1; k < m; ++k)
                s += sign(m - k) * coeff_D(k, l, q, x) * ev(f, l.omit(k), q, x - 1);
            s += coeff_D(m, l, q, x) * ev(f, l.omit(m), q, x + l.at(m) - l.at(m - 1) - 1);
        }
    } else {
        if (m < n) {
            for (int k = 1; k <= n; ++k)
                s += sign(n - k) * coeff_barC(k, l, q, x) * ev(f, l, q.omit(k), x);
        } else {
            for (int k = 1; k < m; ++k)
                s += sign(m - k) * coeff_barD(k, l, q, x) * ev(f, l.omit(k), q, x - 1);
            s += coeff_barD(m, l, q, x) * ev(f, l.omit(m), q, x + l.at(m) - l.at(m - 1) - 1);
            if (m == n)
                s += sign(m) * ev(RFamily::R, l, q, x - 1);
        }
    }
    return s;
}

std::string expansion_name(RFamily f, int m, int n)
{
    if (f == RFamily::R)
        return m <= n ? "expand_q" : "expand_l";
    return m < n ? "expand_q" : "expand_l";
}

bool expansion_defined(RFamily f, int m, int n)
{
    // Rbar with both lists empty has no D_m term to expand on.
    return !(f == RFamily::RBar && m == 0 && n == 0);
}

ExactRational count_eval(RFamily f, const IndexList& l, const IndexList& q, const ExactRational& x)
{
    if (x.get_den() != 1)
        throw DomainError("tiling counts need an integer argument");
    return M(f, l, q, static_cast<int>(x.get_num().get_si()));
}

ExactRational poly_eval(RFamily f, const IndexList& l, const IndexList& q, const ExactRational& x)
{
    return p_family(l, q, x, f);
}

ExactRational F(const IndexList& l, const IndexList& q, const ExactRational& x)
{
    return bar_p_poly(l, q, x) / bar_c_const(l, q);
}

}  // namespace

std::string CountReport::line() const
{
    std::ostringstream os;
    os << "RESULT " << instance;
    for (const auto& [k, v] : values)
        os << ' ' << k << '=' << to_string(v);
    os << " match=" << (match ? "true" : "false");
    return os.str();
}

CountReport make_report(std::string instance, Values values)
{
    CountReport r;
    r.instance = std::move(instance);
    r.values = std::move(values);
    r.match = std::all_of(r.values.begin(), r.values.end(),
                          [&](const auto& p) { return p.second == r.values.front().second; });
    return r;
}

std::string r_instance(RFamily f, const IndexList& l, const IndexList& q, long x)
{
    return bar_name(f) + "[" + lq(l, q) + ",x=" + std::to_string(x) + "]";
}

ExactRational theorem_rhs(const WindowedHexagon& h)
{
    const int a = h.params.a, k = h.params.k;
    const IndexList& l = h.l;
    const IndexList& q = h.q;
    const IndexList none;
    if (h.family == HexFamily::H) {
        if (l.empty())
            throw DomainError(h.str() + ": no axis labels");
        if (a % 2 == 0) {
            ExactRational first = p_poly(none, l, make_rational(a + k - 2, 2));
            if (l.at(1) == 1)
                return first * bar_p_poly(l.decrement(), none, make_rational(a, 2));
            return first * p_poly(l.decrement(), none, make_rational(a, 2));
        }
        return p_poly(none, l.omit(l.size()), make_rational(a + k - 1, 2)) *
               bar_p_poly(l, none, make_rational(a - 1, 2));
    }
    const bool delta_family = h.family == HexFamily::Hlq;
    auto big = [&](const IndexList& u, const IndexList& v, const ExactRational& x) {
        return delta_family ? bar_p_poly(u, v, x) : p_poly(u, v, x);
    };
    auto small = [&](const IndexList& u, const IndexList& v, const ExactRational& x) {
        return delta_family ? p_poly(u, v, x) : bar_p_poly(u, v, x);
    };
    const IndexList l_cut = l.empty() ? l : l.omit(l.size());
    const IndexList q_cut = q.empty() ? q : q.omit(q.size());
    if (a % 2 == 0)
        return big(l, q, make_rational(a + k - 1, 2)) * small(q, l_cut, make_rational(a, 2));
    return big(l, q_cut, make_rational(a + k, 2)) * small(q, l, make_rational(a - 1, 2));
}

ExactRational theorem_lhs(const WindowedHexagon& h)
{
    if (h.untileable)
        return 0;
    return count_oracle(h.region) * h.factor * pow2(-h.exponent());
}

CountReport verify_theorem_1_1(const HexParams& p, const std::vector<WindowSpec>& windows)
{
    const auto start = Clock::now();
    WindowedHexagon h = windowed_hexagon(p, windows);
    std::string name = h.str();
    name.erase(std::remove(name.begin(), name.end(), ' '), name.end());
    return timed("theorem[" + name + "]", start,
                 {{"oracle", theorem_lhs(h)}, {"formula", theorem_rhs(h)}});
}

CountReport verify_prop_2_1(const IndexList& l, const IndexList& q, int x, RFamily f)
{
    const auto start = Clock::now();
    if (x < r_min_x(l, q, f))
        throw DomainError(r_instance(f, l, q, x) + ": x below its minimum");
    Region r = r_family_region(l, q, x, f);
    return timed("prop[" + r_instance(f, l, q, x) + "]", start,
                 {{"oracle", M(f, l, q, x)},
                  {"gv_sw", count_gv(r, l, q, x, f, PathSide::Southwest)},
                  {"gv_nw", count_gv(r, l, q, x, f, PathSide::Northwest)},
                  {"formula", p_family(l, q, x, f)}});
}

std::vector<CountReport> verify_prop_2_1(const IndexList& l, const IndexList& q, int x)
{
    std::vector<CountReport> out;
    for (RFamily f : {RFamily::R, RFamily::RBar})
        if (x >= r_min_x(l, q, f))
            out.push_back(verify_prop_2_1(l, q, x, f));
    if (out.empty())
        throw DomainError(lq(l, q) + ": x=" + std::to_string(x) + " is below both minima");
    return out;
}

std::vector<CountReport> verify_count_recurrences(const IndexList& l, const IndexList& q, int x)
{
    std::vector<CountReport> out;
    const int m = l.size(), n = q.size();
    for (RFamily f : {RFamily::R, RFamily::RBar}) {
        if (x <= r_min_x(l, q, f) || !expansion_defined(f, m, n))
            continue;
        const auto start = Clock::now();
        ExactRational rhs = expansion_rhs(f, l, q, x, count_eval);
        out.push_back(pair_report("recurrence." + expansion_name(f, m, n) + "[" +
                                      r_instance(f, l, q, x) + "]",
                                  start, M(f, l, q, x), rhs));
    }
    if (out.empty())
        throw DomainError(lq(l, q) + ": x=" + std::to_string(x) +
                          " is not above the minimum, no expansion applies");
    return out;
}

std::vector<CountReport> verify_boundary_lemmas(const IndexList& l, const IndexList& q)
{
    std::vector<CountReport> out;
    const int m = l.size(), n = q.size(), lm = l.last(), qn = q.last();
    const int drop = m ? lm - l.at(m - 1) - 1 : 0;
    if (m && lm - m + 1 >= qn - n) {
        const auto start = Clock::now();
        out.push_back(pair_report("boundary.at_zero[" + r_instance(RFamily::R, l, q, 0) + "]", start,
                                  M(RFamily::R, l, q, 0), M(RFamily::R, l.omit(m), q, drop)));
    }
    if (n && (m == 0 || lm - m + 1 <= qn - n)) {
        const auto start = Clock::now();
        const int x0 = qn - lm - n + m - 1;
        out.push_back(pair_report("boundary.half[" + r_instance(RFamily::R, l, q, x0) + "]", start,
                                  M(RFamily::R, l, q, x0),
                                  half() * M(RFamily::R, l, q.omit(n), x0)));
    }
    if (m && lm - m >= qn - n) {
        const auto start = Clock::now();
        out.push_back(pair_report("boundary.at_zero[" + r_instance(RFamily::RBar, l, q, 0) + "]",
                                  start, M(RFamily::RBar, l, q, 0),
                                  M(RFamily::RBar, l.omit(m), q, drop)));
    }
    if (n && lm - m <= qn - n) {
        const auto start = Clock::now();
        const int x0 = qn - lm - n + m;
        out.push_back(pair_report("boundary.half[" + r_instance(RFamily::RBar, l, q, x0) + "]",
                                  start, M(RFamily::RBar, l, q, x0),
                                  half() * M(RFamily::RBar, l, q.omit(n), x0)));
    }
    if (out.empty())
        throw DomainError(lq(l, q) + ": no boundary identity applies");
    return out;
}

std::vector<CountReport> verify_poly_recurrences(const IndexList& l, const IndexList& q)
{
    std::vector<CountReport> out;
    const int m = l.size(), n = q.size(), lm = l.last(), qn = q.last();
    const int x0 = lm + qn + m + n + 3;
    for (RFamily f : {RFamily::R, RFamily::RBar}) {
        if (!expansion_defined(f, m, n))
            continue;
        // Coefficients have degree at most 2 * max entry + m + n + 1.
        const int deg = std::max(p_degree(l, q), bar_p_degree(l, q)) + 2 * std::max(lm, qn) + m + n + 1;
        const auto start = Clock::now();
        Values v;
        bool ok = true;
        ExactRational first_l, first_r;
        for (int t = 0; t <= deg; ++t) {
            const ExactRational x = x0 + t;
            ExactRational lhs = p_family(l, q, x, f);
            ExactRational rhs = expansion_rhs(f, l, q, x, poly_eval);
            if (t == 0) {
                first_l = lhs;
                first_r = rhs;
            }
            if (lhs != rhs && ok) {
                ok = false;
                first_l = lhs;
                first_r = rhs;
            }
        }
        std::string fam = f == RFamily::R ? "P" : "Pbar";
        auto rep = pair_report("poly." + expansion_name(f, m, n) + "[" + fam + "," + lq(l, q) +
                                   ",points=" + std::to_string(deg + 1) + "]",
                               start, first_l, first_r);
        out.push_back(rep);
    }
    const IndexList none;
    if (n) {
        auto start = Clock::now();
        ExactRational x1(qn - lm - n + m - 1);
        out.push_back(pair_report("poly.half[P," + lq(l, q) + ",x=" + to_string(x1) + "]", start,
                                  p_poly(l, q, x1), half() * p_poly(l, q.omit(n), x1)));
        start = Clock::now();
        ExactRational x2 = x1 + 1;
        out.push_back(pair_report("poly.half[Pbar," + lq(l, q) + ",x=" + to_string(x2) + "]", start,
                                  bar_p_poly(l, q, x2), half() * bar_p_poly(l, q.omit(n), x2)));
    }
    if (m) {
        const ExactRational x1(lm - l.at(m - 1) - 1);
        auto start = Clock::now();
        out.push_back(pair_report("poly.at_zero[P," + lq(l, q) + "]", start, p_poly(l, q, 0),
                                  p_poly(l.omit(m), q, x1)));
        start = Clock::now();
        out.push_back(pair_report("poly.at_zero[Pbar," + lq(l, q) + "]", start, bar_p_poly(l, q, 0),
                                  bar_p_poly(l.omit(m), q, x1)));
    }
    return out;
}

std::vector<CountReport> verify_increment_relations(const IndexList& l, const IndexList& q,
                                                    ListSel which, int k, int x)
{
    std::vector<CountReport> out;
    const int m = l.size(), n = q.size(), lm = l.last();
    const ExactRational X(x);
    auto start = Clock::now();
    if (which == ListSel::L) {
        IndexList li = l.increment(k);
        const int lk = l.at(k);
        if (k < m) {
            out.push_back(pair_report("increment.l[" + lq(l, q) + ",k=" + std::to_string(k) +
                                          ",x=" + std::to_string(x) + "]",
                                      start, F(li, q, X),
                                      F(l, q, X) * (X - lk + lm) * (X + lk + lm - m + n + 1)));
        } else {
            out.push_back(pair_report("increment.l[" + lq(l, q) + ",k=" + std::to_string(k) +
                                          ",x=" + std::to_string(x) + "]",
                                      start, F(li, q, X - 1),
                                      F(l, q, X) * X * (X + 2 * lm - m + n + 1)));
        }
    } else {
        IndexList qi = q.increment(k);
        const int qk = q.at(k);
        out.push_back(pair_report("increment.q[" + lq(l, q) + ",k=" + std::to_string(k) + ",x=" +
                                      std::to_string(x) + "]",
                                  start, F(l, qi, X),
                                  F(l, q, X) * (X + qk + lm + 1) * (X - qk + lm - m + n)));
    }
    if (m) {
        start = Clock::now();
        ExactRational r = pow2(m - n - 1) / ExactRational(factorial(2 * lm - 1));
        for (int i = 1; i < m; ++i)
            r *= lm - l.at(i);
        for (int i = 1; i <= n; ++i)
            r /= lm + q.at(i);
        out.push_back(pair_report("cbar_ratio.l[" + lq(l, q) + "]", start, bar_c_const(l, q),
                                  bar_c_const(l.omit(m), q) * r));
    }
    if (n) {
        start = Clock::now();
        const int qn = q.last();
        ExactRational r = pow2(n - m - 1) / ExactRational(factorial(2 * qn));
        for (int i = 1; i < n; ++i)
            r *= qn - q.at(i);
        for (int i = 1; i <= m; ++i)
            r /= qn + l.at(i);
        out.push_back(pair_report("cbar_ratio.q[" + lq(l, q) + "]", start, bar_c_const(l, q),
                                  bar_c_const(l, q.omit(n)) * r));
    }
    return out;
}

CountReport verify_factorization(const Region& r)
{
    const auto start = Clock::now();
    CutResult cut = symmetry_axis_cut(r);
    return timed("factorization[cells=" + std::to_string(r.size()) +
                     ",width=" + std::to_string(cut.width) + "]",
                 start,
                 {{"whole", count_oracle(r)},
                  {"pieces", pow2(cut.width) * count_oracle(cut.plus) * count_oracle(cut.minus)}});
}

std::vector<CountReport> verify_b_ratios(int m, int n, const ExactRational& x)
{
    std::vector<CountReport> out;
    const std::string at = "m=" + std::to_string(m) + ",n=" + std::to_string(n) + ",x=" + to_string(x);
    auto start = Clock::now();
    if (n >= 1) {
        // Denominators are moved to the left to avoid poles.
        ExactRational lhs = b_poly(m, n, x), rhs = b_poly(m, n - 1, x) * pow2(-(m + n)) *
                                                   shifted_factorial(2 * x + m + n + 2, m + n);
        for (int i = 0; i < m; ++i) {
            lhs *= x + m + n - i + half();
            rhs *= x + m + n - i + 1;
        }
        out.push_back(pair_report("bratio.B_n[" + at + "]", start, lhs, rhs));

        start = Clock::now();
        lhs = bar_b_poly(m, n, x);
        rhs = bar_b_poly(m, n - 1, x) * pow2(-(m + n)) * (x + m + n) *
              shifted_factorial(2 * x + m + n + 1, m + n);
        for (int i = 0; i < m; ++i) {
            lhs *= x + m + n - i - half();
            rhs *= x + m + n - i - 1;
        }
        out.push_back(pair_report("bratio.Bbar_n[" + at + "]", start, lhs, rhs));
    }
    if (m >= 1) {
        start = Clock::now();
        ExactRational lhs = b_poly(m, n, x);
        ExactRational rhs = b_poly(m - 1, n, x) * pow2(-(m + n - 1)) * (x + m + n) * (x + m + n + 1) *
                            shifted_factorial(2 * x + m + n + 2, m + n - 1);
        for (int i = 0; i < n; ++i) {
            lhs *= x + m + i + half();
            rhs *= x + m + i;
        }
        out.push_back(pair_report("bratio.B_m[" + at + "]", start, lhs, rhs));

        start = Clock::now();
        lhs = bar_b_poly(m, n, x);
        rhs = bar_b_poly(m - 1, n, x) * pow2(-(m + n)) * shifted_factorial(2 * x + m + n + 1, m + n);
        for (int i = 0; i < n; ++i) {
            lhs *= x + m + i + half();
            rhs *= x + m + i + 1;
        }
        out.push_back(pair_report("bratio.Bbar_m[" + at + "]", start, lhs, rhs));
    }
    if (m == n && n >= 1) {
        start = Clock::now();
        out.push_back(pair_report("bratio.Bbar_B[" + at + "]", start, bar_b_poly(n, n, x),
                                  b_poly(n, n - 1, x) * shifted_factorial(x + 1, 2 * n)));
        start = Clock::now();
        out.push_back(pair_report("bratio.B_Bbar[" + at + "]", start,
                                  b_poly(n, n, x - 1) * (x + n),
                                  bar_b_poly(n - 1, n, x) * shifted_factorial(x, 2 * n + 1)));
    }
    return out;
}

std::vector<CountReport> verify_calibration(int m, int n, int x)
{
    std::vector<CountReport> out;
    const IndexList l = IndexList::staircase(m), q = IndexList::staircase(n);
    if (x >= r_min_x(l, q, RFamily::R)) {
        const auto start = Clock::now();
        out.push_back(pair_report("calibration[" + r_instance(RFamily::R, l, q, x) + "]", start,
                                  M(RFamily::R, l, q, x), c_const(l, q) * b_poly(m, n, x)));
    }
    if (x >= r_min_x(l, q, RFamily::RBar)) {
        const auto start = Clock::now();
        out.push_back(pair_report("calibration[" + r_instance(RFamily::RBar, l, q, x) + "]", start,
                                  M(RFamily::RBar, l, q, x),
                                  bar_c_const(l, q) * bar_b_poly(m, n, x)));
    }
    return out;
}

CountReport verify_cut_pieces(const WindowedHexagon& h, const NamedR& first, const NamedR& second)
{
    const auto start = Clock::now();
    CutResult cut = symmetry_axis_cut(h.with_windows);
    auto reduce = [](const Region& r) { return eliminate_forced(r).region; };
    Region p = reduce(cut.plus), n = reduce(cut.minus);
    Region a = reduce(r_family_region(first.l, first.q, first.x, first.family));
    Region b = reduce(r_family_region(second.l, second.q, second.x, second.family));
    const bool ok = (congruent(p, a) && congruent(n, b)) || (congruent(p, b) && congruent(n, a));
    std::string name = h.str();
    name.erase(std::remove(name.begin(), name.end(), ' '), name.end());
    return timed("cut[" + name + "->" + r_instance(first.family, first.l, first.q, first.x) + "+" +
                     r_instance(second.family, second.l, second.q, second.x) + "]",
                 start, {{"expected", 1}, {"congruent", ok ? 1 : 0}});
}

namespace {

std::vector<CountReport> last_row(const IndexList& l, const IndexList& q, int x, RFamily f,
                                  bool adjusted)
{
    std::vector<CountReport> out;
    const int m = l.size(), n = q.size();
    if (x < r_min_x(l, q, f) || (m == 0 && n == 0))
        return out;
    const ExactRational X(x);
    const bool sw = f == RFamily::R ? m <= n : m < n;
    const PathSide side = sw ? PathSide::Southwest : PathSide::Northwest;
    Region r = r_family_region(l, q, x, f);
    RationalMatrix a = gv_matrix(r, path_endpoints(r, side));
    const int N = static_cast<int>(a.rows());
    // k-th coefficient sits in column N - (n or m) + k; j is 1-based.
    const int offset = N - (sw ? n : m);
    auto expected = [&](int j) -> ExactRational {
        const int k = j - offset;
        if (k >= 1) {
            if (sw)
                return f == RFamily::R ? coeff_C(k, l, q, X) : coeff_barC(k, l, q, X);
            return f == RFamily::R ? coeff_D(k, l, q, X) : coeff_barD(k, l, q, X);
        }
        if (k == 0 && (f == RFamily::R) == sw)
            return delta(m, n);
        return 0;
    };
    const std::string tag = adjusted ? "last_row_adjusted[" : "last_row[";
    for (int j = 1; j <= N; ++j) {
        const auto start = Clock::now();
        ExactRational gv = a.at(N - 1, j - 1);
        if (adjusted && j > offset)
            gv += beyond_boundary_weight(j - offset, l, q, f);
        out.push_back(timed(tag + r_instance(f, l, q, x) + ",side=" + side_name(side) +
                                ",j=" + std::to_string(j) + "/" + std::to_string(N) + "]",
                            start, {{"gv", gv}, {"formula", expected(j)}}));
    }
    return out;
}

}  // namespace

ExactRational beyond_boundary_weight(int k, const IndexList& l, const IndexList& q, RFamily f)
{
    const int m = l.size();
    if (m != q.size() || m == 0)
        return 0;
    // Paths from the last start that pass s and leave the region before the bump.
    if (f == RFamily::R) {
        const int qk = q.at(k), top = l.at(1) + qk - 1;
        if (top < 0)
            return 0;
        return ExactRational(binomial(top, 2 * qk)) + half() * ExactRational(binomial(top, 2 * qk - 1));
    }
    const int top = q.at(1) + l.at(k) - 1;
    if (top < 0)
        return 0;
    return ExactRational(binomial(top, 2 * l.at(k)));
}

std::vector<CountReport> verify_last_row(const IndexList& l, const IndexList& q, int x, RFamily f)
{
    return last_row(l, q, x, f, false);
}

std::vector<CountReport> verify_last_row(const IndexList& l, const IndexList& q, int x)
{
    auto out = verify_last_row(l, q, x, RFamily::R);
    for (auto& r : verify_last_row(l, q, x, RFamily::RBar))
        out.push_back(std::move(r));
    return out;
}

std::vector<CountReport> verify_last_row_adjusted(const IndexList& l, const IndexList& q, int x,
                                                  RFamily f)
{
    return last_row(l, q, x, f, true);
}

std::vector<RInstance> r_sweep(int max_entry, int max_len, int xspan)
{
    std::vector<RInstance> out;
    const auto lists = all_lists(max_entry, max_len);
    for (const auto& l : lists)
        for (const auto& q : lists)
            for (RFamily f : {RFamily::R, RFamily::RBar}) {
                const int lo = r_min_x(l, q, f);
                for (int x = lo; x <= lo + xspan; ++x)
                    out.push_back({f, l, q, x});
            }
    return out;
}

namespace {

struct Walker {
    using Key = std::tuple<int, std::vector<int>, std::vector<int>, int>;
    std::map<Key, bool> memo;
    std::string failure;

    static std::pair<int, int> measure(RFamily f, const IndexList& l, const IndexList& q, int x)
    {
        return {l.last() + q.size() + x, f == RFamily::R ? 1 : 0};
    }

    bool reach(RFamily f, const IndexList& l, const IndexList& q, int x)
    {
        if (l.empty() && q.empty())
            return true;
        Key key{static_cast<int>(f), l.entries(), q.entries(), x};
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        memo[key] = false;  // guards against cycles
        const auto mine = measure(f, l, q, x);
        std::vector<RInstance> next;
        const int m = l.size(), n = q.size(), lm = l.last(), qn = q.last();
        if (x < r_min_x(l, q, f)) {
            failure = r_instance(f, l, q, x) + " below minimum";
            return false;
        }
        if (x > r_min_x(l, q, f)) {
            if (f == RFamily::R && m <= n) {
                for (int k = 1; k <= n; ++k)
                    next.push_back({f, l, q.omit(k), x});
                if (m == n)
                    next.push_back({RFamily::RBar, l, q, x});
            } else if (f == RFamily::RBar && m < n) {
                for (int k = 1; k <= n; ++k)
                    next.push_back({f, l, q.omit(k), x});
            } else {
                for (int k = 1; k < m; ++k)
                    next.push_back({f, l.omit(k), q, x - 1});
                next.push_back({f, l.omit(m), q, x + lm - l.at(m - 1) - 1});
                if (f == RFamily::RBar && m == n)
                    next.push_back({RFamily::R, l, q, x - 1});
            }
        } else if (f == RFamily::R) {
            if (m && lm - m + 1 >= qn - n)
                next.push_back({f, l.omit(m), q, lm - l.at(m - 1) - 1});
            else if (n)
                next.push_back({f, l, q.omit(n), x});
        } else {
            if (m && lm - m >= qn - n)
                next.push_back({f, l.omit(m), q, lm - l.at(m - 1) - 1});
            else if (n)
                next.push_back({f, l, q.omit(n), x});
        }
        if (next.empty()) {
            failure = r_instance(f, l, q, x) + ": no rule applies";
            return false;
        }
        for (const auto& t : next) {
            if (measure(t.family, t.l, t.q, t.x) >= mine) {
                failure = r_instance(f, l, q, x) + " -> " + r_instance(t.family, t.l, t.q, t.x) +
                          " does not decrease";
                return false;
            }
            if (!reach(t.family, t.l, t.q, t.x))
                return false;
        }
        memo[key] = true;
        return true;
    }
};

}  // namespace

CountReport verify_reachability(const std::vector<RInstance>& instances)
{
    const auto start = Clock::now();
    Walker w;
    long reached = 0;
    for (const auto& i : instances)
        reached += w.reach(i.family, i.l, i.q, i.x) ? 1 : 0;
    std::string name = "reachability[instances=" + std::to_string(instances.size()) + "]";
    if (!w.failure.empty()) {
        std::string f = w.failure;
        std::replace(f.begin(), f.end(), ' ', '_');
        name += "[first_failure=" + f + "]";
    }
    return timed(name, start,
                 {{"instances", ExactRational(static_cast<long>(instances.size()))},
                  {"reached", ExactRational(reached)}});
}

std::vector<std::pair<HexParams, std::vector<WindowSpec>>> theorem_sweep(int max_ab, int max_k,
                                                                         int max_windows)
{
    std::vector<std::pair<HexParams, std::vector<WindowSpec>>> out;
    for (int a = 1; a <= max_ab; ++a)
        for (int b = 1; b <= max_ab; ++b)
            for (int k = 0; k <= max_k; ++k) {
                HexParams p{a, b, k};
                for (auto& ws : enumerate_window_sets(p, max_windows))
                    out.emplace_back(p, std::move(ws));
            }
    return out;
}

std::vector<CountReport> parallel_reports(std::size_t count,
                                          const std::function<std::vector<CountReport>(std::size_t)>& f)
{
    std::vector<std::vector<CountReport>> slots(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                slots[i] = f(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                       static_cast<unsigned>(count)));
    if (n <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n; ++t)
            pool.emplace_back(work);
        for (auto& t : pool)
            t.join();
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    std::vector<CountReport> out;
    for (auto& s : slots)
        for (auto& r : s)
            out.push_back(std::move(r));
    return out;
}

}  // namespace lozenge
