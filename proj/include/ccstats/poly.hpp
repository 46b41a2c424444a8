#pragma once

#include "ccstats/field.hpp"

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ccstats {

class Poly;

struct PolyDivMod;

/// Dense univariate polynomial over a Field. Coefficients ascending, trailing
/// zeros trimmed; the zero polynomial has an empty coefficient vector and the
/// sentinel degree kZeroDegree (standing in for degree minus infinity).
class Poly {
public:
    static constexpr int kZeroDegree = -1;

    explicit Poly(const Field& field) : field_(&field) {}
    Poly(const Field& field, std::vector<Elem> coeffs);

    static Poly zero(const Field& f) { return Poly(f); }
    static Poly one(const Field& f) { return Poly(f, {1}); }
    static Poly constant(const Field& f, Elem c) { return Poly(f, {c}); }
    static Poly x(const Field& f) { return Poly(f, {0, 1}); }

    const Field& field() const { return *field_; }
    const std::vector<Elem>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    Elem leading() const;  // throws on the zero polynomial
    Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

    Elem eval(Elem x) const;  // Horner
    Poly derivative() const;
    Poly monic() const;  // scaled by the inverse of the leading coefficient
    Poly scaled(Elem c) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Total order: by degree, then by coefficients from the highest down.
    friend bool operator<(const Poly& a, const Poly& b);

    PolyDivMod divmod(const Poly& divisor) const;
    /// Exact division; throws if the remainder is nonzero.
    Poly divide_exact(const Poly& divisor) const;

    /// Comma-separated ascending coefficients, "1,0,1" for x^2+1; "0" for the
    /// zero polynomial.
    std::string to_text() const;
    static Poly from_text(const Field& field, const std::string& text);

private:
    void trim();
    void check_same_field(const Poly& other) const;

    const Field* field_;
    std::vector<Elem> coeffs_;
};

struct PolyDivMod {
    Poly quotient;
    Poly remainder;
};

/// Monic gcd by Euclid's algorithm; gcd(f, 0) = monic(f). Both inputs zero is
/// an error.
Poly poly_gcd(const Poly& a, const Poly& b);

bool is_squarefree(const Poly& f);

/// f = unit * prod_i part^multiplicity with the parts monic, square-free and
/// pairwise coprime; multiplicities strictly increasing.
struct SquarefreePart {
    Poly part;
    int multiplicity;
};

/// Yun's square-free decomposition adapted to characteristic p: whenever a
/// derivative vanishes identically the p-th-root step f(x) = h(x^p) -> h is
/// applied recursively (see von zur Gathen & Gerhard, ch. 14). f nonzero.
std::vector<SquarefreePart> squarefree_decompose(const Poly& f);

/// The unique f = unit * f_1 f_2^2 ... f_{n-1}^{n-1} with monic square-free
/// pairwise-coprime parts, for f without n-th-power factors.
struct PowerFreeDecomposition {
    Elem unit;
    int bound;                // n
    std::vector<Poly> parts;  // f_1 .. f_{n-1}

    const Field& field() const { return parts.front().field(); }
    Poly reassemble() const;
    /// Degree of the reassembled polynomial (without forming the product).
    int product_degree() const;
};

/// Carried by powerfree_decompose when some factor reaches multiplicity n.
struct NotPowerFree {
    Poly factor;
    int multiplicity;
};

using PowerFreeOutcome = std::variant<PowerFreeDecomposition, NotPowerFree>;

/// Decomposes nonzero f against the bound n >= 2. A NotPowerFree outcome is a
/// value, not an error: enumeration filters branch on it in hot loops.
PowerFreeOutcome powerfree_decompose(const Poly& f, int n);

bool is_powerfree(const Poly& f, int n);

/// Weight vector (c_1, ..., c_{n-1}) for the weighted degree. Entries must be
/// nonnegative; family enumeration additionally requires them positive.
class Weight {
public:
    explicit Weight(std::vector<int> entries);

    /// The weight (1, 2, ..., n-1) under which the weighted degree is the
    /// ordinary degree.
    static Weight plain(int n);

    std::size_t size() const { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<int>& entries() const { return entries_; }
    bool all_positive() const;

    friend bool operator==(const Weight& a, const Weight& b) {
        return a.entries_ == b.entries_;
    }

private:
    std::vector<int> entries_;
};

/// c_1 deg(f_1) + ... + c_{n-1} deg(f_{n-1}); trivial parts contribute zero.
/// The weight length must match the decomposition bound.
long long weighted_degree(const PowerFreeDecomposition& decomp, const Weight& weight);

}  // namespace ccstats
