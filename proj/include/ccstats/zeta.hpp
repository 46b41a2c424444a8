#pragma once

#include "ccstats/bigint.hpp"
#include "ccstats/field.hpp"

#include <vector>

namespace ccstats {

/// Evaluation request for the restricted square-free sums: exponent t >= 2
/// (the series has a pole at t = 1), excluded points, and the truncation
/// degree for partial sums.
struct ZetaQuery {
    int t = 2;
    std::vector<Elem> excluded;
    int truncation = 0;

    ZetaQuery(const Field& field, int t, std::vector<Elem> excluded, int truncation);
};

/// Zeta function of the affine line over F_q at integer s >= 2:
/// sum over monic F of q^{-s deg F} = 1/(1 - q^{1-s}).
BigRat zeta_closed(const Field& field, int s);

/// Closed form of sum over monic square-free g with g(x_i) != 0 of
/// q^{-t deg g}: (1/(1+q^{-t}))^r (q^{-1} + q^{-t} + (1-q^{-1})/(1-q^{1-t})).
BigRat restricted_sqfree_closed(const Field& field, const ZetaQuery& query);

/// Exact counts a_d of monic square-free degree-d polynomials nonvanishing on
/// r fixed distinct points, for d = 0..max_d. Computed by the integer
/// recurrence a_d = S(d) - sum_{j=1..r} C(r,j) a_{d-j}, obtained by grouping
/// square-free g by the subset of the excluded points where g vanishes
/// (vanishing on a j-subset T factors g uniquely as prod_{x in T}(X-x) times
/// a square-free poly of degree d-j avoiding all r points). The counts depend
/// only on r, not on which points are excluded.
std::vector<BigInt> restricted_sqfree_counts(const Field& field, std::size_t r, int max_d);

/// Partial sum of the restricted series up to the truncation degree; monotone
/// nondecreasing in the truncation.
BigRat restricted_sqfree_partial(const Field& field, const ZetaQuery& query);

/// Exact B with |closed - partial(D)| <= B: the geometric tail with the sharp
/// coefficient a_d <= (1 - q^{-1}) q^d valid for d >= 2, plus the d = 1 term
/// bound when D = 0.
BigRat tail_bound(const Field& field, int t, int D);

}  // namespace ccstats
