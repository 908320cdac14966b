#pragma once

#include <cstdint>
#include <vector>

#include "cncode/rational.hpp"
#include "cncode/word.hpp"

namespace cncode {

/// Default cap on the number of ordered codeword pairs a whole-code scan
/// may enumerate before refusing.
inline constexpr std::uint64_t default_pair_budget = 1'000'000'000;

/// delta_r(y, x) = r * d10 + d01 for a single ordered pair; requires r >= 1.
/// r = 1 recovers the Hamming distance.
Ratio delta_r(const Word& y, const Word& x, const Ratio& r);

/// The Pareto envelope of directed disagreement counts over all ordered
/// pairs of distinct codewords: the componentwise-minimal (d10, d01) pairs,
/// sorted by d10 ascending (hence d01 strictly descending). Minimising
/// r*d10 + d01 over the envelope gives the code's minimum discrepancy for
/// every r without revisiting the K(K-1) pairs.
struct DiscrepancyProfile {
    std::vector<DiscrepancyPair> pairs;

    /// min over the envelope of r*d10 + d01; requires r >= 1.
    Ratio evaluate(const Ratio& r) const;
};

DiscrepancyProfile profile(const Code& code, std::uint64_t pair_budget = default_pair_budget);

/// Minimum discrepancy of a code together with the ordered pair attaining
/// it. Ties resolve to the lexicographically smallest (from, to) index
/// pair, so the witness is deterministic.
struct MinDiscrepancy {
    Ratio value;
    std::size_t from = 0; // index of y
    std::size_t to = 0;   // index of x
};

MinDiscrepancy min_discrepancy(const Code& code, const Ratio& r,
                               std::uint64_t pair_budget = default_pair_budget);

/// Minimum Hamming distance over unordered pairs.
std::uint32_t min_hamming(const Code& code, std::uint64_t pair_budget = default_pair_budget);

} // namespace cncode
