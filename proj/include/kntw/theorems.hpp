#pragma once

// Closed-form treewidth values for K(n,k,t) and the Johnson complement, their
// applicability thresholds, and the integer inequalities the lower-bound
// argument depends on. Everything here is exact; no floating point.

#include <string>

#include "kntw/arith.hpp"
#include "kntw/graph.hpp"

namespace kntw {

struct FormulaVerdict {
    BigInt predicted_tw;
    /// False when the parameters sit outside the hypothesis; predicted_tw is
    /// still reported.
    bool applicable = false;
    std::string threshold_used;
    std::string regime;
};

/// 2(k-t)(t+1)C(k,t) + k + t + 1.
BigInt kneser_threshold(int k, int t);
/// 4k^2 - 3k + 2, the threshold used when t = 1.
BigInt kneser_t1_threshold(int k);
/// max{k + 4, 2k}: where the Johnson-complement lower bound starts.
int johnson_complement_threshold(int k);
/// ceil((k-t)(k+1)/(1-p) + 2t).
BigInt balance_threshold(int k, int t, const Rational& p);

/// tw(K(n,k,t)) = C(n,k) - C(n-t,k-t) - 1 for n past the threshold.
FormulaVerdict tw_formula_gkneser(const ParamTriple& p);

/// Piecewise treewidth of the Johnson complement. Requires k >= 2 and
/// n >= k + 2 (below that the graph has no edges); InvalidInput otherwise.
FormulaVerdict tw_formula_johnson_complement(int n, int k);

/// C(n-t,k-t) > 2 C(k,t) (C(n-t,k-t) - C(n-2t-1,k-t)). Requires n >= 2t + 1.
bool star_concentration_inequality(const ParamTriple& p);

/// (1-prob) C(n-t,k-t) >= (k+1) sum_{a=0}^{t-2} C(n-2t-1, n-k-t+a)
///                        + t(k+1) C(n-2t-1, n-k-1).
/// Requires 2/3 <= prob < 1.
bool separator_balance_inequality(const ParamTriple& p, const Rational& prob);

/// |V| - Δ - α - 1 >= 0 for K(n,k,t), with α = C(n-t,k-t); i.e.
/// sum_{i=t}^{k} C(k,i) C(n-k,k-i) - C(n-t,k-t) - 1 >= 0.
bool upper_bound_dominance(const ParamTriple& p);

/// The quantity tested by upper_bound_dominance.
BigInt dominance_slack(const ParamTriple& p);

}  // namespace kntw
