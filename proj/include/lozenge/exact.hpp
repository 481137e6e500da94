// Exact integer and rational arithmetic on top of GMP.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace lozenge {

using BigInt = mpz_class;
// Always canonical: lowest terms, positive denominator, zero is 0/1.
using ExactRational = mpq_class;

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// "p/q", or "n" when the denominator is 1.
std::string to_string(const ExactRational& r);
ExactRational parse_rational(const std::string& s);

ExactRational make_rational(long p, long q = 1);

// a(a+1)...(a+k-1); 1 when k == 0.
ExactRational shifted_factorial(const ExactRational& a, long k);

// 0 when k < 0 or k > n. Throws DomainError for n < 0.
BigInt binomial(long n, long k);

// Generalized binomial x(x-1)...(x-k+1)/k!, as a polynomial in x. 0 for k < 0.
ExactRational binomial_poly(const ExactRational& x, long k);

BigInt factorial(long n);

// 2^e for any integer e.
ExactRational pow2(long e);

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    ExactRational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const ExactRational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    static RationalMatrix identity(std::size_t n);

    // Drop row i and column j.
    RationalMatrix minor(std::size_t i, std::size_t j) const;

    bool operator==(const RationalMatrix& o) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<ExactRational> data_;
};

// Fraction-free (Bareiss) elimination after clearing row denominators.
// The 0x0 matrix has determinant 1. Throws ShapeError when not square.
ExactRational determinant(const RationalMatrix& m);

}  // namespace lozenge
