#include "ccstats/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ccstats {

Poly::Poly(const Field& field, std::vector<Elem> coeffs)
    : field_(&field), coeffs_(std::move(coeffs)) {
    for (Elem c : coeffs_)
        if (c >= field.q()) throw std::invalid_argument("coefficient out of range");
    trim();
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Poly::check_same_field(const Poly& other) const {
    if (!field_->same_field(other.field()))
        throw std::invalid_argument("field mismatch between polynomials");
}

Elem Poly::leading() const {
    if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Elem Poly::eval(Elem x) const {
    const Field& f = *field_;
    Elem acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = f.add(f.mul(acc, x), coeffs_[i]);
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly(*field_);
    const Field& f = *field_;
    std::vector<Elem> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        const Elem factor = static_cast<Elem>(i % f.p());
        // i * c computed inside the prime field times the element
        Elem scaled = 0;
        for (Elem k = 0; k < factor; ++k) scaled = f.add(scaled, coeffs_[i]);
        out[i - 1] = scaled;
    }
    Poly d(*field_);
    d.coeffs_ = std::move(out);
    d.trim();
    return d;
}

Poly Poly::scaled(Elem c) const {
    const Field& f = *field_;
    Poly out(*field_);
    out.coeffs_.resize(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = f.mul(coeffs_[i], c);
    out.trim();
    return out;
}

Poly Poly::monic() const {
    if (is_zero()) throw std::domain_error("cannot normalize the zero polynomial");
    if (is_monic()) return *this;
    return scaled(field_->inv(leading()));
}

Poly operator+(const Poly& a, const Poly& b) {
    a.check_same_field(b);
    const Field& f = a.field();
    Poly out(f);
    out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
        out.coeffs_[i] = f.add(a.coeff(i), b.coeff(i));
    out.trim();
    return out;
}

Poly operator-(const Poly& a, const Poly& b) {
    a.check_same_field(b);
    const Field& f = a.field();
    Poly out(f);
    out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
        out.coeffs_[i] = f.sub(a.coeff(i), b.coeff(i));
    out.trim();
    return out;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_same_field(b);
    const Field& f = a.field();
    if (a.is_zero() || b.is_zero()) return Poly(f);
    Poly out(f);
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out.coeffs_[i + j] = f.add(out.coeffs_[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
    out.trim();
    return out;
}

bool operator==(const Poly& a, const Poly& b) {
    return a.field().same_field(b.field()) && a.coeffs_ == b.coeffs_;
}

bool operator<(const Poly& a, const Poly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
    for (std::size_t i = a.coeffs_.size(); i-- > 0;)
        if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
    return false;
}

PolyDivMod Poly::divmod(const Poly& divisor) const {
    check_same_field(divisor);
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    const Field& f = *field_;
    Poly rem = *this;
    Poly quot(f);
    const int dd = divisor.degree();
    if (degree() >= dd) quot.coeffs_.assign(degree() - dd + 1, 0);
    const Elem lead_inv = f.inv(divisor.leading());
    while (!rem.is_zero() && rem.degree() >= dd) {
        const Elem scale = f.mul(rem.leading(), lead_inv);
        const std::size_t shift = rem.coeffs_.size() - 1 - dd;
        quot.coeffs_[shift] = scale;
        for (int i = 0; i <= dd; ++i)
            rem.coeffs_[shift + i] =
                f.sub(rem.coeffs_[shift + i], f.mul(scale, divisor.coeffs_[i]));
        rem.trim();
    }
    quot.trim();
    return {std::move(quot), std::move(rem)};
}

Poly Poly::divide_exact(const Poly& divisor) const {
    auto dm = divmod(divisor);
    if (!dm.remainder.is_zero()) throw std::domain_error("inexact polynomial division");
    return std::move(dm.quotient);
}

std::string Poly::to_text() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out << ',';
        out << coeffs_[i];
    }
    return out.str();
}

Poly Poly::from_text(const Field& field, const std::string& text) {
    std::vector<Elem> coeffs;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty coefficient in polynomial text");
        const unsigned long v = std::stoul(tok);
        if (v >= field.q()) throw std::invalid_argument("coefficient out of range");
        coeffs.push_back(static_cast<Elem>(v));
    }
    return Poly(field, std::move(coeffs));
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (!a.field().same_field(b.field()))
        throw std::invalid_argument("field mismatch between polynomials");
    if (a.is_zero() && b.is_zero())
        throw std::domain_error("gcd of two zero polynomials is undefined");
    Poly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Poly r2 = r0.divmod(r1).remainder;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return r0.monic();
}

bool is_squarefree(const Poly& f) {
    if (f.is_zero()) return false;
    if (f.degree() == 0) return true;
    const Poly d = f.derivative();
    if (d.is_zero()) return false;  // f = h(x^p) has every root repeated
    return poly_gcd(f, d).is_one();
}

namespace {

/// f with identically-zero derivative is h(x^p) composed with the Frobenius;
/// recover h by taking p-th roots of the surviving coefficients.
Poly pth_root_poly(const Poly& f) {
    const Field& fld = f.field();
    const std::uint32_t p = fld.p();
    std::vector<Elem> out(f.degree() / p + 1, 0);
    for (int i = 0; i <= f.degree(); ++i) {
        const Elem c = f.coeff(i);
        if (c == 0) continue;
        if (i % static_cast<int>(p) != 0)
            throw std::logic_error("derivative-zero polynomial with stray term");
        out[i / p] = fld.pth_root(c);
    }
    return Poly(fld, std::move(out));
}

void squarefree_into(const Poly& f, int mult_scale, std::map<int, Poly>& out) {
    const Field& fld = f.field();
    if (f.degree() <= 0) return;
    Poly d = f.derivative();
    if (d.is_zero()) {
        squarefree_into(pth_root_poly(f), mult_scale * static_cast<int>(fld.p()), out);
        return;
    }
    Poly cof = poly_gcd(f, d);        // factors of multiplicity > 1, reduced
    Poly w = f.divide_exact(cof);     // product of factors whose multiplicity is prime to p
    int i = 1;
    while (!w.is_one()) {
        Poly y = poly_gcd(w, cof);
        Poly z = w.divide_exact(y);
        if (z.degree() > 0) out.emplace(mult_scale * i, z.monic());
        w = std::move(y);
        cof = cof.divide_exact(w);
        ++i;
    }
    // what is left of the cofactor has all multiplicities divisible by p
    if (!cof.is_one())
        squarefree_into(pth_root_poly(cof), mult_scale * static_cast<int>(fld.p()), out);
}

}  // namespace

std::vector<SquarefreePart> squarefree_decompose(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("cannot decompose the zero polynomial");
    std::map<int, Poly> table;
    squarefree_into(f.monic(), 1, table);
    std::vector<SquarefreePart> out;
    out.reserve(table.size());
    for (auto& [mult, part] : table) out.push_back({std::move(part), mult});
    return out;
}

Poly PowerFreeDecomposition::reassemble() const {
    const Field& fld = field();
    Poly acc = Poly::constant(fld, unit);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t k = 0; k <= i; ++k) acc = acc * parts[i];
    return acc;
}

int PowerFreeDecomposition::product_degree() const {
    int d = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        d += static_cast<int>(i + 1) * std::max(parts[i].degree(), 0);
    return d;
}

PowerFreeOutcome powerfree_decompose(const Poly& f, int n) {
    if (f.is_zero()) throw std::domain_error("cannot decompose the zero polynomial");
    if (n < 2) throw std::invalid_argument("power-free bound must be >= 2");
    const Field& fld = f.field();
    PowerFreeDecomposition decomp;
    decomp.unit = f.is_zero() ? 0 : f.leading();
    decomp.bound = n;
    decomp.parts.assign(n - 1, Poly::one(fld));
    for (auto& sq : squarefree_decompose(f)) {
        if (sq.multiplicity >= n) return NotPowerFree{std::move(sq.part), sq.multiplicity};
        decomp.parts[sq.multiplicity - 1] = std::move(sq.part);
    }
    return decomp;
}

bool is_powerfree(const Poly& f, int n) {
    return std::holds_alternative<PowerFreeDecomposition>(powerfree_decompose(f, n));
}

Weight::Weight(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int c : entries_)
        if (c < 0) throw std::invalid_argument("weight entries must be nonnegative");
}

Weight Weight::plain(int n) {
    std::vector<int> e(n - 1);
    for (int i = 0; i < n - 1; ++i) e[i] = i + 1;
    return Weight(std::move(e));
}

bool Weight::all_positive() const {
    return std::all_of(entries_.begin(), entries_.end(), [](int c) { return c >= 1; });
}

long long weighted_degree(const PowerFreeDecomposition& decomp, const Weight& weight) {
    if (weight.size() != decomp.parts.size())
        throw std::invalid_argument("weight length does not match decomposition bound");
    long long total = 0;
    for (std::size_t i = 0; i < weight.size(); ++i)
        total += static_cast<long long>(weight[i]) * std::max(decomp.parts[i].degree(), 0);
    return total;
}

}  // namespace ccstats
