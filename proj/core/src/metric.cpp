#include "cncode/metric.hpp"

#include <bit>
#include <limits>

namespace cncode {

namespace {

void require_r(const Ratio& r) {
    if (r < Ratio(1))
        throw ParameterError("metric parameter r must be >= 1, got " + r.str());
}

void require_pairs(const Code& code, std::uint64_t budget) {
    if (code.size() < 2)
        throw DegenerateCodeError("need at least 2 codewords, have " +
                                  std::to_string(code.size()));
    std::uint64_t k = code.size();
    if (k > 1 && k - 1 > budget / k)
        throw ResourceError("pair enumeration needs " + std::to_string(k) + "*" +
                            std::to_string(k - 1) + " ordered pairs, budget is " +
                            std::to_string(budget));
}

// Both directed counts of one unordered pair in a single limb pass.
inline DiscrepancyPair both_counts(const Word& y, const Word& x) {
    DiscrepancyPair out;
    const auto& ly = y.limbs();
    const auto& lx = x.limbs();
    for (std::size_t i = 0; i < ly.size(); ++i) {
        out.d10 += static_cast<std::uint32_t>(std::popcount(ly[i] & ~lx[i]));
        out.d01 += static_cast<std::uint32_t>(std::popcount(~ly[i] & lx[i]));
    }
    return out;
}

} // namespace

Ratio delta_r(const Word& y, const Word& x, const Ratio& r) {
    require_r(r);
    DiscrepancyPair p = discrepancy_pair(y, x);
    return r * Ratio(long(p.d10)) + Ratio(long(p.d01));
}

Ratio DiscrepancyProfile::evaluate(const Ratio& r) const {
    require_r(r);
    if (pairs.empty())
        throw DegenerateCodeError("empty discrepancy profile");
    bool have = false;
    Ratio best;
    for (const DiscrepancyPair& p : pairs) {
        Ratio v = r * Ratio(long(p.d10)) + Ratio(long(p.d01));
        if (!have || v < best) {
            best = v;
            have = true;
        }
    }
    return best;
}

DiscrepancyProfile profile(const Code& code, std::uint64_t pair_budget) {
    require_pairs(code, pair_budget);
    const std::size_t n = code.length();
    // best[a] = least d01 seen among ordered pairs with d10 == a.
    constexpr std::uint32_t none = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> best(n + 1, none);
    for (std::size_t i = 0; i < code.size(); ++i) {
        for (std::size_t j = i + 1; j < code.size(); ++j) {
            DiscrepancyPair p = both_counts(code.word(i), code.word(j));
            if (p.d01 < best[p.d10]) best[p.d10] = p.d01;
            if (p.d10 < best[p.d01]) best[p.d01] = p.d10; // reversed pair
        }
    }
    DiscrepancyProfile out;
    std::uint32_t lowest = none;
    for (std::size_t a = 0; a <= n; ++a) {
        if (best[a] >= lowest) continue;
        out.pairs.push_back({static_cast<std::uint32_t>(a), best[a]});
        lowest = best[a];
    }
    return out;
}

MinDiscrepancy min_discrepancy(const Code& code, const Ratio& r, std::uint64_t pair_budget) {
    require_r(r);
    require_pairs(code, pair_budget);

    // With r = a/b the pair value is (a*d10 + b*d01)/b; comparing numerators
    // in 64-bit integers is safe while a, b < 2^40 and d* <= 2^20.
    const BigInt rn = r.num(), rd = r.den();
    const bool fast = rn.fits_slong_p() && rd.fits_slong_p() &&
                      rn.get_si() < (long(1) << 40) && rd.get_si() < (long(1) << 40);

    MinDiscrepancy out;
    bool have = false;
    auto consider = [&](std::size_t i, std::size_t j, const Ratio& v) {
        if (!have || v < out.value ||
            (v == out.value && (i < out.from || (i == out.from && j < out.to)))) {
            out.value = v;
            out.from = i;
            out.to = j;
            have = true;
        }
    };

    if (fast) {
        const std::int64_t a = rn.get_si(), b = rd.get_si();
        std::int64_t best_num = std::numeric_limits<std::int64_t>::max();
        for (std::size_t i = 0; i < code.size(); ++i) {
            for (std::size_t j = i + 1; j < code.size(); ++j) {
                DiscrepancyPair p = both_counts(code.word(i), code.word(j));
                std::int64_t fwd = a * p.d10 + b * p.d01;
                std::int64_t rev = a * p.d01 + b * p.d10;
                if (fwd <= best_num) {
                    consider(i, j, Ratio(BigInt(long(fwd)), BigInt(long(b))));
                    best_num = fwd;
                }
                if (rev <= best_num) {
                    consider(j, i, Ratio(BigInt(long(rev)), BigInt(long(b))));
                    best_num = rev;
                }
            }
        }
    } else {
        for (std::size_t i = 0; i < code.size(); ++i) {
            for (std::size_t j = i + 1; j < code.size(); ++j) {
                DiscrepancyPair p = both_counts(code.word(i), code.word(j));
                consider(i, j, r * Ratio(long(p.d10)) + Ratio(long(p.d01)));
                consider(j, i, r * Ratio(long(p.d01)) + Ratio(long(p.d10)));
            }
        }
    }
    return out;
}

std::uint32_t min_hamming(const Code& code, std::uint64_t pair_budget) {
    require_pairs(code, pair_budget);
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    for (std::size_t i = 0; i < code.size(); ++i)
        for (std::size_t j = i + 1; j < code.size(); ++j)
            best = std::min(best, hamming_distance(code.word(i), code.word(j)));
    return best;
}

} // namespace cncode
