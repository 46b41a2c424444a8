#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ccstats {

/// A field element is its integer encoding in [0, q): the base-p digits are
/// the coordinates of the representative in the modulus basis, constant term
/// least significant. This keeps elements order-stable and serialization
/// compact.
using Elem = std::uint32_t;

/// GF(p^e) with all arithmetic precomputed into tables at construction.
/// Immutable afterwards and safely shareable across threads.
///
/// For e > 1 the modulus is the lexicographically smallest monic irreducible
/// of degree e over F_p, comparing coefficients from the constant term
/// upward, so the same (p, e) always names the same field.
class Field {
public:
    static Field make(std::uint32_t p, std::uint32_t e);

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint32_t q() const { return q_; }

    /// Ascending coefficients over F_p, size e+1, monic. Empty for e == 1.
    const std::vector<Elem>& modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
    Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
    Elem inv(Elem a) const;  // throws on a == 0
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, unsigned long long k) const;
    /// Frobenius inverse a -> a^{1/p} (a bijection on F_q).
    Elem pth_root(Elem a) const { return pow(a, pth_root_exp_); }

    bool same_field(const Field& other) const {
        return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
    }

    /// Base-p digits of the encoding, length e, constant term first.
    std::vector<Elem> digits(Elem a) const;

private:
    Field() = default;

    std::uint32_t p_ = 0, e_ = 0, q_ = 0;
    unsigned long long pth_root_exp_ = 1;  // p^{e-1}
    std::vector<Elem> modulus_;
    std::vector<Elem> add_, mul_, neg_, inv_;
};

/// Checked element wrapper for API boundaries; arithmetic verifies that both
/// operands come from the same field. Hot loops use the Field methods on raw
/// encodings instead.
class FieldElement {
public:
    FieldElement(const Field& field, Elem value);

    Elem value() const { return value_; }
    const Field& field() const { return *field_; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b);

private:
    const Field* field_;
    Elem value_;
};

/// Membership structure of the m-th powers inside the unit group: sigma =
/// gcd(m, q-1) and the table of F_q^{x,m}, computed by direct exponentiation
/// over all units. Immutable and shareable.
class PowerClassifier {
public:
    PowerClassifier(const Field& field, std::uint32_t m);

    const Field& field() const { return *field_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t sigma() const { return sigma_; }
    std::uint32_t power_count() const { return power_count_; }  // (q-1)/sigma

    /// True iff a is a nonzero m-th power.
    bool is_mth_power(Elem a) const { return table_[a] != 0; }

private:
    const Field* field_;
    std::uint32_t m_, sigma_, power_count_;
    std::vector<char> table_;
};

bool is_prime(std::uint32_t n);

}  // namespace ccstats
