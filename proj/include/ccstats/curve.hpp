#pragma once

#include "ccstats/field.hpp"
#include "ccstats/poly.hpp"

#include <vector>

namespace ccstats {

/// The affine curve y^m = f(x), counted fiberwise over x in F_q. Points are
/// counted on the affine model as given; no normalization.
struct CurveSpec {
    const PowerClassifier* classifier;
    Poly f;

    CurveSpec(const Poly& poly, const PowerClassifier& cls);
    int m() const { return static_cast<int>(classifier->m()); }
    const Field& field() const { return f.field(); }
};

/// Fiber cardinality over x: 1 when f(x) = 0, sigma when f(x) is a nonzero
/// m-th power, 0 otherwise.
int fiber_size(const CurveSpec& curve, Elem x);

/// Number of affine F_q-points, summed fiberwise.
long long count_points(const CurveSpec& curve);

/// Counts of base points by fiber size; k0 + k1 + ksigma = q. When sigma = 1
/// the value classes of size 1 coincide and are reported merged into k1 (so
/// k0 = ksigma = 0).
struct FiberProfile {
    int k0 = 0;
    int k1 = 0;
    int ksigma = 0;
};

FiberProfile fiber_profile(const CurveSpec& curve);

struct BranchContribution {
    int multiplicity;  // j: the part f_j of the decomposition
    int part_degree;   // deg f_j
    int contribution;  // deg f_j * (m - gcd(j, m))
};

/// Genus of the smooth projective model, solved from
///   2g - 2 + m = -gcd(m, deg f) + sum_j deg(f_j) (m - gcd(j, m)).
/// The formula is evaluated verbatim even when the hypotheses fail, but the
/// report carries the flags so the number is never misread. An odd or
/// negative 2g means f is outside the smooth-model regime and throws.
struct GenusReport {
    long long genus = 0;
    bool coprime_characteristic = false;  // gcd(m, q) = 1
    bool residue_condition = false;       // q = 1 mod m
    bool valid_hypotheses = false;        // both of the above
    int poly_degree = 0;
    int infinity_term = 0;  // gcd(m, deg f)
    std::vector<BranchContribution> branch_data;
};

GenusReport genus(const PowerFreeDecomposition& decomp, int m, const Field& field);

/// The weight (m - gcd(1,m), ..., m - gcd(n-1,m)) under which the weighted
/// degree tracks 2g - 2 + m + gcd(m, deg f) exactly.
Weight genus_weight(int m, int n);

}  // namespace ccstats
