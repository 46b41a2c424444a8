#include "ccstats/family.hpp"

#include "ccstats/errors.hpp"
#include "ccstats/parallel.hpp"
#include "ccstats/rng.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ccstats {

FamilySpec::FamilySpec(const Field& field, int n, Weight weight, int degree, bool monic)
    : field_(&field), n_(n), weight_(std::move(weight)), degree_(degree), monic_(monic) {
    if (n < 2) throw std::invalid_argument("power-free bound n must be >= 2");
    if (weight_.size() != static_cast<std::size_t>(n - 1))
        throw std::invalid_argument("weight length must be n-1");
    if (!weight_.all_positive())
        throw std::invalid_argument("family weights must be positive");
    if (degree < 0) throw std::invalid_argument("weighted degree must be >= 0");
}

bool FamilySpec::is_member(const Poly& f) const {
    if (f.is_zero()) return false;
    if (monic_ && !f.is_monic()) return false;
    const auto outcome = powerfree_decompose(f, n_);
    const auto* decomp = std::get_if<PowerFreeDecomposition>(&outcome);
    if (!decomp) return false;
    return weighted_degree(*decomp, weight_) == degree_;
}

std::optional<int> FamilySpec::quartic_weight_N() const {
    if (n_ != 4) return std::nullopt;
    const int N = weight_[1];
    if (weight_[0] == 1 && N >= 2 && weight_[2] == N + 1) return N;
    return std::nullopt;
}

bool FamilySpec::plain_degree_weight() const {
    for (std::size_t i = 0; i < weight_.size(); ++i)
        if (weight_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

std::vector<DegreeProfile> list_profiles(const FamilySpec& spec) {
    std::vector<DegreeProfile> out;
    std::vector<int> degs(spec.weight().size(), 0);
    const auto& w = spec.weight();
    // lexicographic: d_1 outermost, ascending
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
        if (i + 1 == degs.size()) {
            if (remaining % w[i] == 0) {
                degs[i] = remaining / w[i];
                out.push_back({degs});
            }
            return;
        }
        for (int di = 0; di * w[i] <= remaining; ++di) {
            degs[i] = di;
            rec(i + 1, remaining - di * w[i]);
        }
    };
    if (!degs.empty()) rec(0, spec.degree());
    return out;
}

void SquarefreeCache::ensure(int max_degree) {
    const Field& f = *field_;
    for (int d = static_cast<int>(by_degree_.size()); d <= max_degree; ++d) {
        std::vector<Poly> list;
        if (d == 0) {
            list.push_back(Poly::one(f));
        } else {
            // lexicographic by serialized coefficients: c_0 most significant
            std::vector<Elem> coeffs(d + 1, 0);
            coeffs[d] = 1;
            std::vector<Elem> digit(d, 0);
            bool done = false;
            while (!done) {
                for (int i = 0; i < d; ++i) coeffs[i] = digit[i];
                Poly cand(f, coeffs);
                if (is_squarefree(cand)) list.push_back(std::move(cand));
                // increment the lex odometer: last digit fastest
                int pos = d - 1;
                while (pos >= 0) {
                    if (++digit[pos] < f.q()) break;
                    digit[pos] = 0;
                    --pos;
                }
                done = pos < 0;
            }
        }
        by_degree_.push_back(std::move(list));
    }
}

const std::vector<Poly>& SquarefreeCache::degree(int d) const {
    if (d < 0 || d >= static_cast<int>(by_degree_.size()))
        throw std::logic_error("square-free cache queried beyond the built range");
    return by_degree_[d];
}

Elem FamilyMember::eval(Elem x) const {
    const Field& f = *field_;
    Elem acc = unit_;
    for (std::size_t i = 0; i < parts_->size(); ++i) {
        const Elem v = (*parts_)[i]->eval(x);
        for (std::size_t k = 0; k <= i; ++k) acc = f.mul(acc, v);
    }
    return acc;
}

Poly FamilyMember::product() const {
    Poly acc = Poly::constant(*field_, unit_);
    for (std::size_t i = 0; i < parts_->size(); ++i)
        for (std::size_t k = 0; k <= i; ++k) acc = acc * *(*parts_)[i];
    return acc;
}

PowerFreeDecomposition FamilyMember::decomposition() const {
    PowerFreeDecomposition d;
    d.unit = unit_;
    d.bound = static_cast<int>(parts_->size()) + 1;
    d.parts.reserve(parts_->size());
    for (const Poly* p : *parts_) d.parts.push_back(*p);
    return d;
}

namespace {

void check_guardrails(const FamilySpec& spec, const Guardrails& limits) {
    if (spec.field().q() > limits.max_q)
        throw UnsupportedError("enumeration guardrail exceeded: q > " +
                               std::to_string(limits.max_q) + " (raise the limits to override)");
    if (spec.degree() > limits.max_d)
        throw UnsupportedError("enumeration guardrail exceeded: d > " +
                               std::to_string(limits.max_d) + " (raise the limits to override)");
}

int max_part_degree(const FamilySpec& spec) {
    int m = 0;
    for (const auto& prof : list_profiles(spec))
        for (int d : prof.degs) m = std::max(m, d);
    return m;
}

}  // namespace

void for_each_in_profile(const FamilySpec& spec, const SquarefreeCache& cache,
                         const DegreeProfile& profile, const MemberVisitor& visit) {
    const Field& fld = spec.field();
    const std::size_t parts = profile.degs.size();
    std::vector<const Poly*> tuple(parts, nullptr);

    auto emit = [&] {
        if (spec.monic()) {
            visit(FamilyMember(fld, 1, tuple));
        } else {
            for (Elem unit = 1; unit < fld.q(); ++unit)
                visit(FamilyMember(fld, unit, tuple));
        }
    };

    // Highest-multiplicity part outermost; the degree-profile entries for the
    // heavy parts are small, so coprimality pruning cuts early.
    std::function<void(std::size_t)> rec = [&](std::size_t level) {
        if (level == parts) {
            emit();
            return;
        }
        const std::size_t idx = parts - 1 - level;
        for (const Poly& cand : cache.degree(profile.degs[idx])) {
            if (cand.degree() > 0) {
                bool coprime = true;
                for (std::size_t j = idx + 1; j < parts; ++j) {
                    if (tuple[j]->degree() > 0 && !poly_gcd(cand, *tuple[j]).is_one()) {
                        coprime = false;
                        break;
                    }
                }
                if (!coprime) continue;
            }
            tuple[idx] = &cand;
            rec(level + 1);
        }
        tuple[idx] = nullptr;
    };
    rec(0);
}

void for_each_member(const FamilySpec& spec, const SquarefreeCache& cache,
                     const MemberVisitor& visit, const Guardrails& limits) {
    check_guardrails(spec, limits);
    for (const auto& prof : list_profiles(spec)) for_each_in_profile(spec, cache, prof, visit);
}

BigInt count_squarefree(const Field& field, int d) {
    return count_powerfree(field, d, 2);
}

BigInt count_powerfree(const Field& field, int d, int n) {
    if (d < 0) throw std::invalid_argument("degree must be >= 0");
    if (n < 2) throw std::invalid_argument("power-free bound must be >= 2");
    const BigInt q = field.q();
    if (d <= n - 1) return int_pow(q, d);
    return int_pow(q, d) - int_pow(q, d - (n - 1));
}

BigInt count_family(const FamilySpec& spec, const Guardrails& limits) {
    const BigInt units = spec.monic() ? 1 : spec.field().q() - 1;
    if (const auto N = spec.quartic_weight_N()) {
        BigInt total = 0;
        for (int e = 0; *N * e <= spec.degree(); ++e)
            total += count_squarefree(spec.field(), spec.degree() - *N * e) *
                     count_squarefree(spec.field(), e);
        return units * total;
    }
    // No proven closed form for other weights: count the monic family by
    // enumeration.
    check_guardrails(spec, limits);
    FamilySpec monic_spec(spec.field(), spec.n(), spec.weight(), spec.degree(), true);
    SquarefreeCache cache(spec.field());
    cache.ensure(max_part_degree(monic_spec));
    BigInt count = 0;
    for_each_member(monic_spec, cache, [&](const FamilyMember&) { ++count; }, limits);
    return units * count;
}

std::vector<Poly> enumerate_family(const FamilySpec& spec, const Guardrails& limits) {
    check_guardrails(spec, limits);
    SquarefreeCache cache(spec.field());
    cache.ensure(max_part_degree(spec));
    std::vector<Poly> out;
    for_each_member(spec, cache, [&](const FamilyMember& m) { out.push_back(m.product()); },
                    limits);
    return out;
}

ValueConstraint::ValueConstraint(const Field& field, std::vector<Elem> pts,
                                 std::vector<Elem> vals)
    : points(std::move(pts)), values(std::move(vals)) {
    if (points.size() != values.size())
        throw std::invalid_argument("constraint points and values differ in length");
    if (points.size() > field.q())
        throw std::invalid_argument("more constraint points than field elements");
    std::set<Elem> seen;
    for (Elem x : points) {
        if (x >= field.q()) throw std::invalid_argument("constraint point out of range");
        if (!seen.insert(x).second)
            throw std::invalid_argument("constraint points must be distinct");
    }
    for (Elem a : values) {
        if (a == 0) throw std::invalid_argument("constraint values must be units");
        if (a >= field.q()) throw std::invalid_argument("constraint value out of range");
    }
}

BigInt count_constrained(const FamilySpec& spec, const ValueConstraint& vc, int jobs,
                         const Guardrails& limits) {
    check_guardrails(spec, limits);
    SquarefreeCache cache(spec.field());
    cache.ensure(max_part_degree(spec));
    const auto profiles = list_profiles(spec);
    auto per_stratum = [&](std::size_t i) {
        BigInt count = 0;
        for_each_in_profile(spec, cache, profiles[i], [&](const FamilyMember& m) {
            for (std::size_t k = 0; k < vc.size(); ++k)
                if (m.eval(vc.points[k]) != vc.values[k]) return;
            ++count;
        });
        return count;
    };
    BigInt total = 0;
    for (auto& c : parallel_indexed_map<BigInt>(profiles.size(), jobs, per_stratum)) total += c;
    return total;
}

namespace {

void require_squarefree(const Poly& f, const char* what) {
    if (!is_squarefree(f)) throw std::invalid_argument(std::string(what) + " is not square-free");
}

void require_coprime(const Poly& a, const Poly& b) {
    if (!poly_gcd(a, b).is_one())
        throw std::invalid_argument("inputs are not pairwise coprime");
}

}  // namespace

std::pair<Poly, Poly> key_bijection(const Poly& f1, const Poly& f2, const Poly& f3) {
    for (const Poly* f : {&f1, &f2, &f3}) {
        if (f->is_zero() || !f->is_monic())
            throw std::invalid_argument("bijection inputs must be monic");
        require_squarefree(*f, "bijection input");
    }
    require_coprime(f1, f2);
    require_coprime(f1, f3);
    require_coprime(f2, f3);
    return {f1 * f3, f2 * f3};
}

std::array<Poly, 3> key_bijection_inverse(const Poly& t1, const Poly& t2) {
    for (const Poly* t : {&t1, &t2}) {
        if (t->is_zero() || !t->is_monic())
            throw std::invalid_argument("bijection inputs must be monic");
        require_squarefree(*t, "bijection input");
    }
    const Poly f3 = poly_gcd(t1, t2);
    return {t1.divide_exact(f3), t2.divide_exact(f3), f3};
}

BigRat predicted_constrained_count(const FamilySpec& spec, std::size_t r,
                                   PredictionTheorem theorem) {
    const long long q = spec.field().q();
    const int d = spec.degree();
    switch (theorem) {
        case PredictionTheorem::kPowerFreePlainDegree: {
            if (!spec.plain_degree_weight())
                throw UnsupportedError(
                    "plain-degree prediction requires the weight (1, 2, ..., n-1)");
            const int n = spec.n();
            BigRat main = BigRat(int_pow(BigInt(q), d)) /
                          int_pow(BigInt(q), static_cast<unsigned>(r));
            main *= 1 - inv_pow(q, n - 1);
            const BigRat local = 1 - inv_pow(q, n);
            for (std::size_t i = 0; i < r; ++i) main /= local;
            if (!spec.monic()) main *= q - 1;
            return main;
        }
        case PredictionTheorem::kQuarticWeight: {
            const auto N = spec.quartic_weight_N();
            if (!N)
                throw UnsupportedError(
                    "quartic-weight prediction requires n = 4 and weight (1, N, N+1), N >= 2");
            if (d < *N)
                throw UnsupportedError("quartic-weight prediction requires d >= N");
            const BigRat qinv = inv_pow(q, 1);
            const BigRat bracket =
                qinv + inv_pow(q, *N) + (1 - qinv) / (1 - BigRat(q) * inv_pow(q, *N));
            const BigRat psi =
                BigRat(q - 1) * (1 + qinv + inv_pow(q, *N) + inv_pow(q, *N + 1));
            BigRat main = BigRat(int_pow(BigInt(q), d)) * (1 - qinv) * bracket;
            for (std::size_t i = 0; i < r; ++i) main /= psi;
            if (!spec.monic()) main *= q - 1;
            return main;
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

/// Uniform monic polynomial of the given degree.
Poly random_monic(const Field& fld, int degree, SplitMix64& rng) {
    std::vector<Elem> coeffs(degree + 1, 0);
    coeffs[degree] = 1;
    for (int i = 0; i < degree; ++i)
        coeffs[i] = static_cast<Elem>(rng.uniform_below(fld.q()));
    return Poly(fld, std::move(coeffs));
}

Poly random_squarefree(const Field& fld, int degree, SplitMix64& rng) {
    while (true) {
        Poly cand = random_monic(fld, degree, rng);
        if (is_squarefree(cand)) return cand;
    }
}

}  // namespace

std::vector<Poly> sample_family(const FamilySpec& spec, const SampleConfig& cfg,
                                const Guardrails& limits) {
    if (cfg.count <= 0) throw std::invalid_argument("sample count must be positive");
    if (cfg.count > limits.max_samples)
        throw UnsupportedError("sample guardrail exceeded (raise the limits to override)");
    check_guardrails(spec, limits);
    const Field& fld = spec.field();
    const int d = spec.degree();

    const auto N = spec.quartic_weight_N();
    const bool plain = spec.plain_degree_weight();
    if (!plain && !N)
        throw UnsupportedError("sampling supports only the plain-degree weight or (1, N, N+1)");

    // Stratum weights for the quartic mode: the pair construction makes the
    // member count of stratum e exactly S(d - N e) S(e). Both supported modes
    // are nonempty for every d >= 0, but keep the declared error anyway.
    std::vector<BigInt> cumulative;
    BigInt total_weight = 0;
    if (N) {
        for (int e = 0; *N * e <= d; ++e) {
            total_weight +=
                count_squarefree(fld, d - *N * e) * count_squarefree(fld, e);
            cumulative.push_back(total_weight);
        }
        if (total_weight == 0) throw UnsupportedError("family is empty");
    }

    auto draw = [&](std::size_t index) {
        SplitMix64 rng = rng_stream(cfg.seed, index);
        Poly member = Poly::one(fld);
        if (plain) {
            const int n = spec.n();
            while (true) {
                Poly cand = random_monic(fld, d, rng);
                if (is_powerfree(cand, n)) {
                    member = std::move(cand);
                    break;
                }
            }
        } else {
            const BigInt u = rng.uniform_bigint_below(total_weight);
            std::size_t e = 0;
            while (cumulative[e] <= u) ++e;
            const Poly t2 = random_squarefree(fld, static_cast<int>(e), rng);
            const Poly t1 = random_squarefree(fld, d - *N * static_cast<int>(e), rng);
            member = t1 * t2 * t2;
        }
        if (!spec.monic()) {
            const Elem unit = static_cast<Elem>(1 + rng.uniform_below(fld.q() - 1));
            member = member.scaled(unit);
        }
        return member;
    };

    auto polys = parallel_indexed_map<Poly>(
        static_cast<std::size_t>(cfg.count), cfg.jobs,
        [&](std::size_t i) { return draw(i); });
    return polys;
}

std::array<long long, 7> tilde_expand(const std::array<long long, 3>& exponents,
                                      const std::array<Poly, 7>& components) {
    // subsets in the order {1},{2},{3},{12},{13},{23},{123} encoded as bitmasks
    static constexpr std::array<unsigned, 7> kSubsets = {0b001, 0b010, 0b100, 0b011,
                                                         0b101, 0b110, 0b111};
    for (long long e : exponents)
        if (e < 0) throw std::invalid_argument("exponents must be nonnegative");
    const Field& fld = components[0].field();
    for (std::size_t i = 0; i < 7; ++i) {
        if (components[i].is_zero() || !components[i].is_monic())
            throw std::invalid_argument("components must be monic");
        require_squarefree(components[i], "component");
        for (std::size_t j = i + 1; j < 7; ++j)
            if (components[i].degree() > 0 && components[j].degree() > 0)
                require_coprime(components[i], components[j]);
    }

    auto power = [&](const Poly& base, long long e) {
        Poly acc = Poly::one(fld);
        for (long long k = 0; k < e; ++k) acc = acc * base;
        return acc;
    };

    std::array<long long, 7> rhs_exponents{};
    Poly lhs = Poly::one(fld);
    for (int i = 0; i < 3; ++i) {
        Poly tilde = Poly::one(fld);
        for (std::size_t s = 0; s < 7; ++s)
            if (kSubsets[s] & (1u << i)) tilde = tilde * components[s];
        lhs = lhs * power(tilde, exponents[i]);
    }
    Poly rhs = Poly::one(fld);
    for (std::size_t s = 0; s < 7; ++s) {
        long long e = 0;
        for (int i = 0; i < 3; ++i)
            if (kSubsets[s] & (1u << i)) e += exponents[i];
        rhs_exponents[s] = e;
        rhs = rhs * power(components[s], e);
    }
    if (lhs != rhs) throw std::logic_error("subset expansion identity violated");
    return rhs_exponents;
}

}  // namespace ccstats
