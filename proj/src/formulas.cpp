#include "lozenge/formulas.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace lozenge {

int PartitionShape::size() const
{
    int s = 0;
    for (int p : parts)
        s += p;
    return s;
}

std::vector<std::pair<int, int>> PartitionShape::cells() const
{
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < static_cast<int>(parts.size()); ++i)
        for (int j = 0; j < parts[i]; ++j)
            out.emplace_back(i, j);
    return out;
}

PartitionShape partition_of(const IndexList& list)
{
    PartitionShape p;
    const int m = list.size();
    p.rows = m;
    for (int i = m; i >= 1; --i)
        if (list.at(i) - i > 0)
            p.parts.push_back(list.at(i) - i);
    return p;
}

int middle_exponent(int index, int count) { return std::min(index, count + 1 - index); }

namespace {

// prod_{t=lo}^{hi} (x + t + shift)^{middle exponent}
ExactRational middle_line(int lo, int hi, const ExactRational& shift, const ExactRational& x)
{
    ExactRational r = 1;
    const int count = hi - lo + 1;
    for (int t = lo; t <= hi; ++t) {
        ExactRational base = x + t + shift;
        int e = middle_exponent(t - lo + 1, count);
        for (int i = 0; i < e; ++i)
            r *= base;
    }
    return r;
}

int pyramid_sum(int count) { return count <= 0 ? 0 : (count + 1) * (count + 1) / 4; }

// prod_{i=1}^{rows} (x+i)_len / (x+i+1/2)_len, or nothing at a pole.
std::optional<ExactRational> half_ratio(int rows, int len, const ExactRational& x)
{
    ExactRational num = 1, den = 1;
    const ExactRational half(1, 2);
    for (int i = 1; i <= rows; ++i) {
        num *= shifted_factorial(x + i, len);
        den *= shifted_factorial(x + i + half, len);
    }
    if (den == 0)
        return std::nullopt;
    return num / den;
}

std::optional<ExactRational> b_direct(int m, int n, const ExactRational& x)
{
    auto ratio = half_ratio(n, m, x);
    if (!ratio)
        return std::nullopt;
    ExactRational r = pow2(-(long(m) * n + long(m) * (m - 1) / 2));
    r *= shifted_factorial(x + n + 1, m) * shifted_factorial(x + n + 2, m);
    r *= middle_line(2, n, 0, x) * middle_line(1, n, make_rational(1, 2), x);
    r *= *ratio;
    for (int i = 1; i <= m; ++i)
        r *= shifted_factorial(2 * x + n + i + 2, n + i - 1);
    return r;
}

std::optional<ExactRational> bar_b_direct(int m, int n, const ExactRational& x)
{
    auto ratio = half_ratio(m, n, x);
    if (!ratio)
        return std::nullopt;
    ExactRational r = pow2(-(long(m) * n + long(n) * (n + 1) / 2));
    r *= shifted_factorial(x + m + 1, n);
    r *= middle_line(1, m, 0, x) * middle_line(1, m - 1, make_rational(1, 2), x);
    r *= *ratio;
    for (int i = 1; i <= n; ++i)
        r *= shifted_factorial(2 * x + m + i + 1, m + i);
    return r;
}

// Lagrange interpolation through x = 0..deg, evaluated at x.
template <class F>
ExactRational interpolate(F f, int deg, const ExactRational& x)
{
    std::vector<ExactRational> ys;
    for (int i = 0; i <= deg; ++i)
        ys.push_back(*f(ExactRational(i)));
    ExactRational total = 0;
    for (int i = 0; i <= deg; ++i) {
        ExactRational term = ys[i];
        for (int j = 0; j <= deg; ++j)
            if (j != i)
                term *= (x - j) / ExactRational(i - j);
        total += term;
    }
    return total;
}

long pair_binom2(long r) { return r * (r - 1) / 2; }

ExactRational c_common(const IndexList& l, const IndexList& q, bool bar)
{
    const int m = l.size(), n = q.size();
    ExactRational r = pow2(pair_binom2(n - m) - m);
    for (int x : l.entries())
        r /= ExactRational(factorial(2 * x - (bar ? 1 : 0)));
    for (int x : q.entries())
        r /= ExactRational(factorial(2 * x - (bar ? 0 : 1)));
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            r *= l.at(j) - l.at(i);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            r *= q.at(j) - q.at(i);
    for (int a : l.entries())
        for (int b : q.entries())
            r /= a + b;
    return r;
}

ExactRational p_common(const IndexList& l, const IndexList& q, const ExactRational& x, bool bar)
{
    const int m = l.size(), n = q.size(), lm = l.last();
    ExactRational r = bar ? bar_c_const(l, q) * bar_b_poly(m, n, x + lm - m)
                          : c_const(l, q) * b_poly(m, n, x + lm - m);
    for (int i = 1; i <= m; ++i)
        for (int j = i; j <= l.at(i) - 1; ++j)
            r *= (x + lm - j) * (x + lm - m + n + j + (bar ? 1 : 2));
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= q.at(i) - 1; ++j)
            r *= (x + lm - m + n - j + (bar ? 0 : 1)) * (x + lm + j + 1);
    return r;
}

ExactRational p_partition_common(const IndexList& l, const IndexList& q, const ExactRational& x,
                                 bool bar)
{
    const int m = l.size(), n = q.size();
    const PartitionShape lam = partition_of(l), mu = partition_of(q);
    const ExactRational z = x + lam.largest();
    ExactRational r = bar ? bar_c_const(l, q) * bar_b_poly(m, n, z)
                          : c_const(l, q) * b_poly(m, n, z);
    // Rows are read from the list order, so the statistic is shifted content.
    for (auto [i, j] : lam.cells()) {
        int h = m + 1 + PartitionShape::content(i, j);
        r *= (z - h + m + 1) * (z + h + n + (bar ? 0 : 1));
    }
    for (auto [i, j] : mu.cells()) {
        int h = n + 1 + PartitionShape::content(i, j);
        r *= (z - h + n + (bar ? 1 : 2)) * (z + h + m);
    }
    return r;
}

void check_k(int k, int len, const char* what)
{
    if (k < 1 || k > len)
        throw std::out_of_range(std::string(what) + ": index " + std::to_string(k) +
                                " outside 1.." + std::to_string(len));
}

}  // namespace

int b_degree(int m, int n)
{
    int d = 2 * m + pyramid_sum(n - 1) + pyramid_sum(n);
    for (int i = 1; i <= m; ++i)
        d += n + i - 1;
    return d;
}

int bar_b_degree(int m, int n)
{
    int d = n + pyramid_sum(m) + pyramid_sum(m - 1);
    for (int i = 1; i <= n; ++i)
        d += m + i;
    return d;
}

ExactRational b_poly(int m, int n, const ExactRational& x)
{
    if (m < 0 || n < 0)
        throw DomainError("B with negative index");
    if (auto v = b_direct(m, n, x))
        return *v;
    return interpolate([&](const ExactRational& t) { return b_direct(m, n, t); }, b_degree(m, n), x);
}

ExactRational bar_b_poly(int m, int n, const ExactRational& x)
{
    if (m < 0 || n < 0)
        throw DomainError("Bbar with negative index");
    if (auto v = bar_b_direct(m, n, x))
        return *v;
    return interpolate([&](const ExactRational& t) { return bar_b_direct(m, n, t); },
                       bar_b_degree(m, n), x);
}

ExactRational c_const(const IndexList& l, const IndexList& q) { return c_common(l, q, false); }
ExactRational bar_c_const(const IndexList& l, const IndexList& q) { return c_common(l, q, true); }

ExactRational p_poly(const IndexList& l, const IndexList& q, const ExactRational& x)
{
    return p_common(l, q, x, false);
}

ExactRational bar_p_poly(const IndexList& l, const IndexList& q, const ExactRational& x)
{
    return p_common(l, q, x, true);
}

ExactRational p_family(const IndexList& l, const IndexList& q, const ExactRational& x, RFamily f)
{
    return p_common(l, q, x, f == RFamily::RBar);
}

ExactRational p_poly_partition_form(const IndexList& l, const IndexList& q, const ExactRational& x)
{
    return p_partition_common(l, q, x, false);
}

ExactRational bar_p_poly_partition_form(const IndexList& l, const IndexList& q,
                                        const ExactRational& x)
{
    return p_partition_common(l, q, x, true);
}

int p_degree(const IndexList& l, const IndexList& q)
{
    return b_degree(l.size(), q.size()) + 2 * (partition_of(l).size() + partition_of(q).size());
}

int bar_p_degree(const IndexList& l, const IndexList& q)
{
    return bar_b_degree(l.size(), q.size()) + 2 * (partition_of(l).size() + partition_of(q).size());
}

BigInt macmahon(long a, long b, long c)
{
    if (a < 0 || b < 0 || c < 0)
        throw DomainError("box sides must be nonnegative");
    if (a > b)
        std::swap(a, b);
    if (a == 0)
        return 1;
    BigInt num = 1, den = 1;
    for (long t = 1; t <= a + b - 1; ++t) {
        long e = std::min({t, a, a + b - t});
        BigInt pn, pd;
        mpz_ui_pow_ui(pn.get_mpz_t(), static_cast<unsigned long>(c + t), static_cast<unsigned long>(e));
        mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(t), static_cast<unsigned long>(e));
        num *= pn;
        den *= pd;
    }
    return num / den;
}

BigInt macmahon_triple_product(long a, long b, long c)
{
    if (a < 0 || b < 0 || c < 0)
        throw DomainError("box sides must be nonnegative");
    ExactRational r = 1;
    for (long i = 1; i <= a; ++i)
        for (long j = 1; j <= b; ++j)
            for (long k = 1; k <= c; ++k)
                r *= make_rational(i + j + k - 1, i + j + k - 2);
    r.canonicalize();
    return r.get_num();
}

ExactRational coeff_C(int k, const IndexList& l, const IndexList& q, const ExactRational& x)
{
    const int m = l.size(), n = q.size();
    check_k(k, n, "C_k");
    const ExactRational top = x + l.last() + q.at(k);
    return binomial_poly(top, 2 * q.at(k) + m - n) +
           make_rational(1, 2) * binomial_poly(top, 2 * q.at(k) + m - n - 1);
}

ExactRational coeff_C_product(int k, const IndexList& l, const IndexList& q, const ExactRational& x)
{
    const int m = l.size(), n = q.size();
    check_k(k, n, "C_k");
    const int lm = l.last(), qk = q.at(k);
    const int len = 2 * qk + m - n - 1;
    if (len < -1)
        throw DomainError("product form of C_k needs 2q_k+m-n >= 0");
    ExactRational a = x + lm - qk - m + n + 2;
    // (a)_{-1} = 1/(a-1)
    ExactRational sf = len >= 0 ? shifted_factorial(a, len) : 1 / (a - 1);
    return (2 * x + 2 * lm - m + n + 2) * sf / (2 * ExactRational(factorial(len + 1)));
}

ExactRational coeff_D(int k, const IndexList& l, const IndexList& q, const ExactRational& x)
{
    const int m = l.size(), n = q.size();
    check_k(k, m, "D_k");
    return binomial_poly(x + l.last() + l.at(k) - m + n + 1, 2 * l.at(k) - m + n + 1);
}

ExactRational coeff_barC(int k, const IndexList& l, const IndexList& q, const ExactRational& x)
{
    const int m = l.size(), n = q.size();
    check_k(k, n, "Cbar_k");
    const ExactRational top = x + l.last() + q.at(k);
    return binomial_poly(top, 2 * q.at(k) + m - n + 1) +
           make_rational(1, 2) * binomial_poly(top, 2 * q.at(k) + m - n);
}

ExactRational coeff_barD(int k, const IndexList& l, const IndexList& q, const ExactRational& x)
{
    const int m = l.size(), n = q.size();
    check_k(k, m, "Dbar_k");
    return binomial_poly(x + l.last() + l.at(k) - m + n, 2 * l.at(k) - m + n);
}

}  // namespace lozenge
