// Executable checks of the counting identities. Every check yields
// CountReport records; `match` is true iff all values agree.
#pragma once

#include "lozenge/count.hpp"
#include "lozenge/exact.hpp"
#include "lozenge/formulas.hpp"
#include "lozenge/index_list.hpp"
#include "lozenge/lattice.hpp"
#include "lozenge/regions.hpp"

#include <chrono>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace lozenge {

struct CountReport {
    std::string instance;
    std::vector<std::pair<std::string, ExactRational>> values;
    bool match = true;
    std::chrono::duration<double> elapsed{0};

    // "RESULT <instance> <method>=<value> ... match=<true|false>"
    std::string line() const;
};

CountReport make_report(std::string instance,
                        std::vector<std::pair<std::string, ExactRational>> values);

// "R[l=(2,4),q=(1),x=3]"
std::string r_instance(RFamily f, const IndexList& l, const IndexList& q, long x);

// Right-hand side of the product formula for a windowed hexagon.
ExactRational theorem_rhs(const WindowedHexagon& h);
// 2^{-exponent} M(region), counted by the oracle.
ExactRational theorem_lhs(const WindowedHexagon& h);

CountReport verify_theorem_1_1(const HexParams& p, const std::vector<WindowSpec>& windows);

// One report per family for which x is admissible; throws if neither is.
std::vector<CountReport> verify_prop_2_1(const IndexList& l, const IndexList& q, int x);
CountReport verify_prop_2_1(const IndexList& l, const IndexList& q, int x, RFamily f);

// Last-row expansions of the determinant. One report per family whose
// recurrence applies; throws DomainError if x is minimal for both.
std::vector<CountReport> verify_count_recurrences(const IndexList& l, const IndexList& q, int x);

// Forced-lozenge identities at the minimal x. Throws if none applies.
std::vector<CountReport> verify_boundary_lemmas(const IndexList& l, const IndexList& q);

// Polynomial recurrences at degree+1 sample points, and the four
// specializations at the minimal arguments.
std::vector<CountReport> verify_poly_recurrences(const IndexList& l, const IndexList& q);

enum class ListSel { L, Q };

// F = Pbar / cbar under incrementing entry k of l or q, and the cbar
// ratios. Throws if the increment breaks strict increase.
std::vector<CountReport> verify_increment_relations(const IndexList& l, const IndexList& q,
                                                    ListSel which, int k, int x);

CountReport verify_factorization(const Region& r);

// Ratio identities among B and Bbar at one point (those defined for m, n).
std::vector<CountReport> verify_b_ratios(int m, int n, const ExactRational& x);

// c_{[m],[n]} B_{m,n}(x) against the oracle count, and the barred analogue.
std::vector<CountReport> verify_calibration(int m, int n, int x);

// Congruence of the cut pieces (after forced elimination) with two named regions.
struct NamedR {
    RFamily family;
    IndexList l;
    IndexList q;
    int x;
};
CountReport verify_cut_pieces(const WindowedHexagon& h, const NamedR& first, const NamedR& second);

// Last-row entries of the GV matrix against the coefficient formulas, on
// the southwest side when the q list drives the expansion, else northwest.
std::vector<CountReport> verify_last_row(const IndexList& l, const IndexList& q, int x, RFamily f);
std::vector<CountReport> verify_last_row(const IndexList& l, const IndexList& q, int x);

// For m == n the straight path from the last start reaches an ending segment s
// on the right boundary in its own row. The coefficient formulas also count
// the continuations of that path beyond s, which leave the region. This is
// the weight of those continuations to the k-th selected bump (0 for m != n).
ExactRational beyond_boundary_weight(int k, const IndexList& l, const IndexList& q, RFamily f);

// Same entries, with beyond_boundary_weight added back to the GV side.
std::vector<CountReport> verify_last_row_adjusted(const IndexList& l, const IndexList& q, int x,
                                                  RFamily f);

struct RInstance {
    RFamily family;
    IndexList l;
    IndexList q;
    int x;
};

// entries <= max_entry, lengths <= max_len, x from the minimum to minimum + xspan.
std::vector<RInstance> r_sweep(int max_entry, int max_len, int xspan);

// Every instance reduces to the empty lists through the recurrences and
// boundary identities, each step lowering (l_m + n + x, family).
CountReport verify_reachability(const std::vector<RInstance>& instances);

// Windowed hexagons with a, b <= max_ab, k <= max_k, at most max_windows windows.
std::vector<std::pair<HexParams, std::vector<WindowSpec>>> theorem_sweep(int max_ab, int max_k,
                                                                         int max_windows);

// Runs f over the items on all hardware threads; results keep input order.
std::vector<CountReport> parallel_reports(std::size_t count,
                                          const std::function<std::vector<CountReport>(std::size_t)>& f);

}  // namespace lozenge
