#include "ccstats/field.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ccstats {

namespace {

// Small helpers on F_p coefficient vectors (ascending degree, trailing zeros
// trimmed). Only used while constructing a Field; the main Poly class lives
// on top of a finished Field.

using PVec = std::vector<Elem>;

void trim(PVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

PVec pmul(const PVec& a, const PVec& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PVec out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    trim(out);
    return out;
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    // p is prime and a != 0
    std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        const std::int64_t qq = r / new_r;
        std::swap(t -= qq * new_t, new_t);
        std::swap(r -= qq * new_r, new_r);
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

PVec pmod(PVec a, const PVec& b, std::uint32_t p) {
    const std::size_t db = b.size() - 1;
    const std::uint32_t lead_inv = inv_mod_p(b.back(), p);
    trim(a);
    while (a.size() > db) {
        const std::uint64_t scale = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            std::uint64_t sub = scale * b[i] % p;
            a[shift + i] = static_cast<Elem>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

bool irreducible_mod_p(const PVec& f, std::uint32_t p) {
    // Trial division by every monic polynomial of degree <= deg(f)/2.
    const std::size_t half = (f.size() - 1) / 2;
    for (std::size_t d = 1; d <= half; ++d) {
        PVec g(d + 1, 0);
        g[d] = 1;
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < d; ++i) total *= p;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::uint64_t v = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<Elem>(v % p);
                v /= p;
            }
            if (pmod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<Elem> Field::digits(Elem a) const {
    std::vector<Elem> out(e_);
    for (std::uint32_t i = 0; i < e_; ++i) {
        out[i] = a % p_;
        a /= p_;
    }
    return out;
}

Field Field::make(std::uint32_t p, std::uint32_t e) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (e < 1) throw std::invalid_argument("field extension degree must be >= 1");

    Field f;
    f.p_ = p;
    f.e_ = e;
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > (1u << 20))
            throw std::invalid_argument("field too large for table-based arithmetic");
    }
    f.q_ = static_cast<std::uint32_t>(q);
    f.pth_root_exp_ = 1;
    for (std::uint32_t i = 0; i + 1 < e; ++i) f.pth_root_exp_ *= p;

    if (e > 1) {
        // Lexicographically smallest monic irreducible of degree e, comparing
        // (c_0, c_1, ..., c_{e-1}) with the constant term most significant.
        PVec cand(e + 1, 0);
        cand[e] = 1;
        bool found = false;
        std::uint64_t total = q;  // p^e candidates
        for (std::uint64_t idx = 0; idx < total && !found; ++idx) {
            std::uint64_t v = idx;
            for (std::uint32_t i = 0; i < e; ++i) {
                cand[e - 1 - i] = static_cast<Elem>(v % p);
                v /= p;
            }
            if (irreducible_mod_p(cand, p)) found = true;
        }
        if (!found) throw std::logic_error("no irreducible modulus found");
        f.modulus_ = cand;
    }

    const std::uint32_t Q = f.q_;
    f.add_.resize(static_cast<std::size_t>(Q) * Q);
    f.mul_.resize(static_cast<std::size_t>(Q) * Q);
    f.neg_.resize(Q);
    f.inv_.assign(Q, 0);

    auto encode = [&](const PVec& v) {
        Elem out = 0;
        for (std::size_t i = v.size(); i-- > 0;) out = out * p + v[i];
        return out;
    };

    for (Elem a = 0; a < Q; ++a) {
        const auto da = f.digits(a);
        // negation, digitwise
        PVec nv(e);
        for (std::uint32_t i = 0; i < e; ++i) nv[i] = (p - da[i]) % p;
        f.neg_[a] = encode(nv);
        for (Elem b = 0; b < Q; ++b) {
            const auto db = f.digits(b);
            PVec sum(e);
            for (std::uint32_t i = 0; i < e; ++i) sum[i] = (da[i] + db[i]) % p;
            f.add_[static_cast<std::size_t>(a) * Q + b] = encode(sum);

            PVec va(da), vb(db);
            trim(va);
            trim(vb);
            PVec prod = pmul(va, vb, p);
            if (e > 1 && !prod.empty()) prod = pmod(std::move(prod), f.modulus_, p);
            f.mul_[static_cast<std::size_t>(a) * Q + b] = encode(prod);
        }
    }

    // Inverses by extended Euclid on representatives. Exact and independent
    // of the unit-group order.
    for (Elem a = 1; a < Q; ++a) {
        if (e == 1) {
            f.inv_[a] = inv_mod_p(a, p);
            continue;
        }
        PVec r0 = f.modulus_, r1 = f.digits(a);
        trim(r1);
        PVec s0 = {}, s1 = {1};  // s tracks the Bezout coefficient of a
        while (!r1.empty() && r1.size() > 1) {
            // r0 = qq * r1 + r2 with explicit long division
            PVec qq(r0.size() - r1.size() + 1, 0);
            PVec rem = r0;
            const std::uint32_t lead_inv = inv_mod_p(r1.back(), p);
            while (rem.size() >= r1.size() && !rem.empty()) {
                const std::uint64_t scale =
                    static_cast<std::uint64_t>(rem.back()) * lead_inv % p;
                const std::size_t shift = rem.size() - r1.size();
                qq[shift] = static_cast<Elem>(scale);
                for (std::size_t i = 0; i < r1.size(); ++i) {
                    std::uint64_t sub = scale * r1[i] % p;
                    rem[shift + i] = static_cast<Elem>((rem[shift + i] + p - sub) % p);
                }
                trim(rem);
            }
            trim(qq);
            PVec s2 = s0;  // s2 = s0 - qq * s1
            PVec qs = pmul(qq, s1, p);
            if (s2.size() < qs.size()) s2.resize(qs.size(), 0);
            for (std::size_t i = 0; i < qs.size(); ++i)
                s2[i] = static_cast<Elem>((s2[i] + p - qs[i]) % p);
            trim(s2);
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // r1 is a nonzero constant c; inverse = s1 / c reduced mod modulus
        const std::uint32_t c_inv = inv_mod_p(r1.empty() ? r0[0] : r1[0], p);
        PVec& bez = r1.empty() ? s0 : s1;
        for (auto& x : bez) x = static_cast<Elem>(static_cast<std::uint64_t>(x) * c_inv % p);
        PVec red = pmod(bez, f.modulus_, p);
        f.inv_[a] = encode(red);
    }

    return f;
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::domain_error("division by zero in field");
    return inv_[a];
}

Elem Field::pow(Elem a, unsigned long long k) const {
    Elem result = 1;
    Elem base = a;
    while (k > 0) {
        if (k & 1) result = mul(result, base);
        base = mul(base, base);
        k >>= 1;
    }
    return result;
}

FieldElement::FieldElement(const Field& field, Elem value) : field_(&field), value_(value) {
    if (value >= field.q()) throw std::invalid_argument("element encoding out of range");
}

namespace {
const Field& common_field(const FieldElement& a, const FieldElement& b) {
    if (!a.field().same_field(b.field()))
        throw std::invalid_argument("field mismatch between operands");
    return a.field();
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    const Field& f = common_field(a, b);
    return FieldElement(f, f.add(a.value(), b.value()));
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    const Field& f = common_field(a, b);
    return FieldElement(f, f.sub(a.value(), b.value()));
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    const Field& f = common_field(a, b);
    return FieldElement(f, f.mul(a.value(), b.value()));
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    const Field& f = common_field(a, b);
    return FieldElement(f, f.div(a.value(), b.value()));
}
bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field().same_field(b.field()) && a.value() == b.value();
}
bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

PowerClassifier::PowerClassifier(const Field& field, std::uint32_t m)
    : field_(&field), m_(m) {
    if (m < 2) throw std::invalid_argument("cover exponent m must be >= 2");
    const std::uint32_t q = field.q();
    sigma_ = std::gcd<std::uint64_t>(m, q - 1);
    table_.assign(q, 0);
    for (Elem y = 1; y < q; ++y) table_[field.pow(y, m)] = 1;
    power_count_ = 0;
    for (Elem a = 1; a < q; ++a) power_count_ += table_[a];
}

}  // namespace ccstats
