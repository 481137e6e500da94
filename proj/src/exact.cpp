#include "lozenge/exact.hpp"

#include <utility>

namespace lozenge {

std::string to_string(const ExactRational& r) { return r.get_str(); }

ExactRational parse_rational(const std::string& s)
{
    ExactRational r;
    if (s.empty() || r.set_str(s, 10) != 0)
        throw DomainError("not a rational number: '" + s + "'");
    if (r.get_den() == 0)
        throw DomainError("zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

ExactRational make_rational(long p, long q)
{
    if (q == 0)
        throw DomainError("zero denominator");
    ExactRational r(p, q);
    r.canonicalize();
    return r;
}

ExactRational shifted_factorial(const ExactRational& a, long k)
{
    ExactRational r = 1;
    for (long i = 0; i < k; ++i)
        r *= a + i;
    return r;
}

BigInt binomial(long n, long k)
{
    if (n < 0)
        throw DomainError("binomial with negative upper index " + std::to_string(n));
    if (k < 0 || k > n)
        return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

ExactRational binomial_poly(const ExactRational& x, long k)
{
    if (k < 0)
        return 0;
    ExactRational r = 1;
    for (long i = 0; i < k; ++i)
        r *= x - i;
    r /= ExactRational(factorial(k));
    return r;
}

BigInt factorial(long n)
{
    if (n < 0)
        throw DomainError("factorial of negative number");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

ExactRational pow2(long e)
{
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0)
        return ExactRational(p);
    ExactRational r(BigInt(1), p);
    return r;
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::minor(std::size_t i, std::size_t j) const
{
    if (i >= rows_ || j >= cols_)
        throw ShapeError("minor index out of range");
    RationalMatrix m(rows_ - 1, cols_ - 1);
    for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
        if (r == i)
            continue;
        for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
            if (c == j)
                continue;
            m.at(rr, cc++) = at(r, c);
        }
        ++rr;
    }
    return m;
}

ExactRational determinant(const RationalMatrix& m)
{
    if (m.rows() != m.cols())
        throw ShapeError("determinant of a " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;

    // Scale each row to integers; remember the scale.
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    BigInt scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt l = 1;
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m.at(i, j).get_num() * (l / m.at(i, j).get_den());
        scale *= l;
    }

    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    ExactRational d(a[n - 1][n - 1] * sign, scale);
    d.canonicalize();
    return d;
}

}  // namespace lozenge
