// Closed forms: the polynomials B, Bbar, P, Pbar, the constants c, cbar,
// MacMahon's box formula and the recurrence coefficients.
#pragma once

#include "lozenge/exact.hpp"
#include "lozenge/index_list.hpp"
#include "lozenge/regions.hpp"

#include <utility>
#include <vector>

namespace lozenge {

// Parts l_m - m, ..., l_1 - 1 with zero parts dropped.
struct PartitionShape {
    std::vector<int> parts;
    // Number of list entries the shape came from (rows before dropping zeros).
    int rows = 0;

    int largest() const { return parts.empty() ? 0 : parts.front(); }
    int size() const;
    // (i, j), 0 <= i < parts.size(), 0 <= j < parts[i].
    std::vector<std::pair<int, int>> cells() const;
    static int h(int i, int j) { return i + j; }
    static int content(int i, int j) { return j - i; }
};

PartitionShape partition_of(const IndexList& list);

// Middle-line exponents: bases lo..hi carry min(t, L+1-t), L = hi-lo+1.
int middle_exponent(int index, int count);

ExactRational b_poly(int m, int n, const ExactRational& x);
ExactRational bar_b_poly(int m, int n, const ExactRational& x);
int b_degree(int m, int n);
int bar_b_degree(int m, int n);

ExactRational c_const(const IndexList& l, const IndexList& q);
ExactRational bar_c_const(const IndexList& l, const IndexList& q);

// Via the rewritten product forms.
ExactRational p_poly(const IndexList& l, const IndexList& q, const ExactRational& x);
ExactRational bar_p_poly(const IndexList& l, const IndexList& q, const ExactRational& x);
ExactRational p_family(const IndexList& l, const IndexList& q, const ExactRational& x, RFamily f);

// Via the partition form P(x - lambda_1) = c B(x) prod over cells.
ExactRational p_poly_partition_form(const IndexList& l, const IndexList& q, const ExactRational& x);
ExactRational bar_p_poly_partition_form(const IndexList& l, const IndexList& q,
                                        const ExactRational& x);

int p_degree(const IndexList& l, const IndexList& q);
int bar_p_degree(const IndexList& l, const IndexList& q);

// Number of plane partitions in an a x b x c box (any order of arguments).
BigInt macmahon(long a, long b, long c);
// MacMahon's triple product, for cross-checking.
BigInt macmahon_triple_product(long a, long b, long c);

// Coefficients of the last-row expansions. k is 1-based; throws
// std::out_of_range outside 1..n (C, Cbar) or 1..m (D, Dbar).
ExactRational coeff_C(int k, const IndexList& l, const IndexList& q, const ExactRational& x);
ExactRational coeff_C_product(int k, const IndexList& l, const IndexList& q, const ExactRational& x);
ExactRational coeff_D(int k, const IndexList& l, const IndexList& q, const ExactRational& x);
ExactRational coeff_barC(int k, const IndexList& l, const IndexList& q, const ExactRational& x);
ExactRational coeff_barD(int k, const IndexList& l, const IndexList& q, const ExactRational& x);

}  // namespace lozenge
