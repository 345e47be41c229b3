#include "kntw/theorems.hpp"

#include <algorithm>

#include "kntw/errors.hpp"
#include "kntw/separators.hpp"

namespace kntw {

BigInt kneser_threshold(int k, int t) {
    return BigInt(2) * (k - t) * (t + 1) * binomial(k, t) + k + t + 1;
}

BigInt kneser_t1_threshold(int k) { return BigInt(4) * k * k - 3 * k + 2; }

int johnson_complement_threshold(int k) { return std::max(k + 4, 2 * k); }

BigInt balance_threshold(int k, int t, const Rational& p) {
    check_separator_ratio(p);
    return ceil(Rational((k - t) * (k + 1)) / (1 - p) + 2 * t);
}

FormulaVerdict tw_formula_gkneser(const ParamTriple& p) {
    FormulaVerdict v;
    v.predicted_tw = binomial(p.n, p.k) - binomial(p.n - p.t, p.k - p.t) - 1;
    BigInt threshold;
    if (p.t >= 2) {
        threshold = kneser_threshold(p.k, p.t);
        v.threshold_used = "n >= 2(k-t)(t+1)C(k,t)+k+t+1 = " + threshold.str();
    } else {
        threshold = kneser_t1_threshold(p.k);
        v.threshold_used = "n >= 4k^2-3k+2 = " + threshold.str();
    }
    v.applicable = BigInt(p.n) >= threshold;
    v.regime = "C(n,k)-C(n-t,k-t)-1";
    return v;
}

FormulaVerdict tw_formula_johnson_complement(int n, int k) {
    if (k < 2) throw InvalidInput("Johnson complement formula needs k >= 2");
    if (n < k + 2)
        throw InvalidInput("complement of J(" + std::to_string(n) + "," + std::to_string(k) +
                           ") has no edges when n < k+2");
    FormulaVerdict v;
    v.applicable = true;
    v.threshold_used = "n >= k+2, k >= 2";
    // special cases first, then the two general rows
    if (k == 2 && n == 4) {
        v.predicted_tw = 1;
        v.regime = "k=2,n=4";
    } else if (k == 3 && n == 6) {
        v.predicted_tw = 14;
        v.regime = "k=3,n=6";
    } else if (n == 5 && (k == 3 || k == 2)) {
        v.predicted_tw = 4;
        v.regime = "n=5,k in {2,3}";
    } else if ((k >= 4 && n >= 2 * k) || ((k == 2 || k == 3) && n >= k + 4)) {
        v.predicted_tw = binomial(n, k) - n + k - 2;
        v.regime = "C(n,k)-n+k-2";
    } else {
        // k >= 4 and n < 2k: reduce through the isomorphism with k -> n-k
        v.predicted_tw = binomial(n, k) - k - 2;
        v.regime = "C(n,k)-k-2";
    }
    return v;
}

bool star_concentration_inequality(const ParamTriple& p) {
    if (p.n < 2 * p.t + 1) throw InvalidInput("need n >= 2t+1");
    BigInt whole = binomial(p.n - p.t, p.k - p.t);
    BigInt missing = whole - binomial(p.n - 2 * p.t - 1, p.k - p.t);
    return whole > 2 * binomial(p.k, p.t) * missing;
}

bool separator_balance_inequality(const ParamTriple& p, const Rational& prob) {
    check_separator_ratio(prob);
    const auto [n, k, t] = p;
    BigInt rhs = 0;
    for (int a = 0; a <= t - 2; ++a) rhs += binomial(n - 2 * t - 1, n - k - t + a);
    rhs *= k + 1;
    rhs += BigInt(t) * (k + 1) * binomial(n - 2 * t - 1, n - k - 1);
    // cleared of the denominator of prob
    BigInt num = boost::multiprecision::numerator(prob);
    BigInt den = boost::multiprecision::denominator(prob);
    return (den - num) * binomial(n - t, k - t) >= den * rhs;
}

BigInt dominance_slack(const ParamTriple& p) {
    BigInt sum = 0;
    for (int i = p.t; i <= p.k; ++i) sum += binomial(p.k, i) * binomial(p.n - p.k, p.k - i);
    return sum - binomial(p.n - p.t, p.k - p.t) - 1;
}

bool upper_bound_dominance(const ParamTriple& p) { return dominance_slack(p) >= 0; }

}  // namespace kntw
