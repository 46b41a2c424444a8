#include "ccstats/zeta.hpp"

#include "ccstats/family.hpp"

#include <set>
#include <stdexcept>

namespace ccstats {

ZetaQuery::ZetaQuery(const Field& field, int t_, std::vector<Elem> excluded_, int truncation_)
    : t(t_), excluded(std::move(excluded_)), truncation(truncation_) {
    if (t < 2) throw std::invalid_argument("t must be >= 2 (the series has a pole at t = 1)");
    if (truncation < 0) throw std::invalid_argument("truncation degree must be >= 0");
    if (excluded.size() > field.q())
        throw std::invalid_argument("more excluded points than field elements");
    std::set<Elem> seen;
    for (Elem x : excluded) {
        if (x >= field.q()) throw std::invalid_argument("excluded point out of range");
        if (!seen.insert(x).second)
            throw std::invalid_argument("excluded points must be distinct");
    }
}

BigRat zeta_closed(const Field& field, int s) {
    if (s < 2) throw std::invalid_argument("zeta evaluation requires s >= 2");
    const long long q = field.q();
    return 1 / (1 - BigRat(q) * inv_pow(q, s));
}

BigRat restricted_sqfree_closed(const Field& field, const ZetaQuery& query) {
    const long long q = field.q();
    const int t = query.t;
    const BigRat qinv = inv_pow(q, 1);
    const BigRat bulk = qinv + inv_pow(q, t) + (1 - qinv) / (1 - BigRat(q) * inv_pow(q, t));
    BigRat local = 1 / (1 + inv_pow(q, t));
    BigRat factor = 1;
    for (std::size_t i = 0; i < query.excluded.size(); ++i) factor *= local;
    return factor * bulk;
}

std::vector<BigInt> restricted_sqfree_counts(const Field& field, std::size_t r, int max_d) {
    if (max_d < 0) throw std::invalid_argument("max degree must be >= 0");
    std::vector<BigInt> binom(r + 1, 1);
    for (std::size_t j = 1; j <= r; ++j)
        binom[j] = binom[j - 1] * BigInt(r - j + 1) / BigInt(j);
    std::vector<BigInt> a;
    a.reserve(max_d + 1);
    for (int d = 0; d <= max_d; ++d) {
        BigInt value = count_squarefree(field, d);
        for (std::size_t j = 1; j <= r && static_cast<int>(j) <= d; ++j)
            value -= binom[j] * a[d - j];
        a.push_back(std::move(value));
    }
    return a;
}

BigRat restricted_sqfree_partial(const Field& field, const ZetaQuery& query) {
    const long long q = field.q();
    const auto counts = restricted_sqfree_counts(field, query.excluded.size(), query.truncation);
    BigRat sum = 0;
    for (int d = 0; d <= query.truncation; ++d)
        sum += BigRat(counts[d]) * inv_pow(q, static_cast<unsigned>(query.t) * d);
    return sum;
}

BigRat tail_bound(const Field& field, int t, int D) {
    if (t < 2) throw std::invalid_argument("t must be >= 2");
    if (D < 0) throw std::invalid_argument("truncation degree must be >= 0");
    const long long q = field.q();
    const BigRat ratio = BigRat(q) * inv_pow(q, t);  // q^{1-t} < 1
    // sum_{d > D} a_d q^{-td} with a_d <= (1 - q^{-1}) q^d for d >= 2
    auto geometric_from = [&](int first) {
        BigRat head = 1;
        for (int i = 0; i < first; ++i) head *= ratio;
        return (1 - inv_pow(q, 1)) * head / (1 - ratio);
    };
    if (D >= 1) return geometric_from(D + 1);
    // the d = 1 term only satisfies a_1 <= q
    return BigRat(q) * inv_pow(q, t) + geometric_from(2);
}

}  // namespace ccstats
