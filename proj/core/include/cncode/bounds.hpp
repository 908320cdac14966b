#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cncode/metric.hpp"
#include "cncode/rational.hpp"
#include "cncode/word.hpp"

namespace cncode {

/// Crossover probabilities of the asymmetric binary channel:
/// p = P(sent 1, received 0), q = P(sent 0, received 1).
/// Valid range: 0 < p <= q < 1/2.
struct ChannelParams {
    double p;
    double q;
};

/// The metric parameter matched to the channel,
/// r = ln(p/(1-q)) / ln(q/(1-p)). Equals 1 exactly when p = q and grows
/// as the channel becomes more asymmetric. This is the only inexact
/// computation in the library.
double channel_r(const ChannelParams& ch);

enum class BoundKind { singleton, hamming, plotkin };

/// Outcome of one bound evaluated at given (n, K, delta, r). rhs is the
/// exact right-hand side; meets is equality of K with the bound (only
/// meaningful when applicable); slack = rhs - K.
struct BoundStatus {
    BoundKind kind;
    bool applicable = true;
    Ratio rhs;
    bool meets = false;
    Ratio slack;
};

/// K <= 2^(n - c + 1) with c = ceil(2*delta/(r+1)).
BoundStatus singleton_check(long n, const BigInt& K, const Ratio& delta, const Ratio& r);

/// K * sum_{i<=T} C(n,i) <= 2^n with T the largest integer strictly below
/// delta/(r+1). The strict form drops T by one exactly at integer
/// arguments, which is where the packing radius argument degrades.
BoundStatus hamming_check(long n, const BigInt& K, const Ratio& delta, const Ratio& r);

/// K <= floor(2d / (2d - n)) with d = ceil(2*delta/(r+1)); applicable only
/// when 2d > n.
BoundStatus plotkin_check(long n, const BigInt& K, const Ratio& delta, const Ratio& r);

/// One bound's optimality classification: the direct check at (delta_r, r)
/// against the classical route at (d_H, r = 1) plus the threshold condition
/// relating them. `agrees` records that both routes produced the same
/// verdict. They provably coincide for the singleton and packing bounds;
/// the floored plotkin right-hand side admits rare accidental equalities
/// (two-word repetition codes of odd length at select r), which this flag
/// surfaces instead of hiding.
struct BoundOptimality {
    BoundStatus at_delta;         // bound checked at (delta_r, r)
    BoundStatus at_hamming;       // bound checked at (d_H, 1)
    Ratio threshold;              // delta_r must strictly exceed this
    bool threshold_holds = false;
    bool reaches_via_hamming = false; // at_hamming.meets && threshold_holds (&& parity for hamming)
    bool agrees = false;              // at_delta.meets == reaches_via_hamming
    /// Least r at which the threshold can hold given delta_r's own ceiling;
    /// absent when the threshold is vacuous (d_H = 1, or t = 0).
    std::optional<Ratio> r_threshold;
};

/// Whole-code optimality report for one r.
struct OptimalityReport {
    std::size_t n = 0;
    BigInt K;
    std::uint32_t d_H = 0;
    long t = 0; // (d_H - 1) / 2, rounded down
    bool d_H_odd = false;
    Ratio r;
    Ratio delta;
    BoundOptimality singleton;
    BoundOptimality hamming;
    BoundOptimality plotkin;
};

OptimalityReport classify_optimality(const Code& code, const Ratio& r,
                                     std::uint64_t pair_budget = default_pair_budget);

/// Serialises the report to the documented JSON shape (stable key order).
std::string to_json(const OptimalityReport& report);

} // namespace cncode
