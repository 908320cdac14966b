#include "cncode/bounds.hpp"

#include <cmath>

#include <json.hpp>

namespace cncode {

namespace {

void require_bound_args(long n, const BigInt& K, const Ratio& delta, const Ratio& r) {
    if (n < 1)
        throw ParameterError("block length must be >= 1, got " + std::to_string(n));
    if (K < 2)
        throw ParameterError("bound checks need K >= 2");
    if (delta <= Ratio(0))
        throw ParameterError("minimum discrepancy must be positive, got " + delta.str());
    if (r < Ratio(1))
        throw ParameterError("metric parameter r must be >= 1, got " + r.str());
}

// c = ceil(2*delta / (r+1)), the least Hamming distance forcing delta at r.
BigInt forced_distance(const Ratio& delta, const Ratio& r) {
    return ((Ratio(2) * delta) / (r + Ratio(1))).ceil();
}

long checked_exponent(const BigInt& e) {
    // 2^e as an exact ratio stays affordable well beyond any real code
    // length; far outside that the input is nonsense, not a bound question.
    if (!e.fits_slong_p() || e > (long(1) << 21) || e < -(long(1) << 21))
        throw ResourceError("bound exponent " + e.get_str() + " out of supported range");
    return e.get_si();
}

} // namespace

double channel_r(const ChannelParams& ch) {
    if (ch.p == 0.0)
        throw ParameterError("p = 0 gives infinite r; only finite r is supported");
    if (!(ch.p > 0.0) || !(ch.q > 0.0) || !(ch.q < 0.5) || !(ch.p <= ch.q))
        throw ParameterError("channel probabilities must satisfy 0 < p <= q < 1/2");
    if (ch.p == ch.q) return 1.0;
    return std::log(ch.p / (1.0 - ch.q)) / std::log(ch.q / (1.0 - ch.p));
}

BoundStatus singleton_check(long n, const BigInt& K, const Ratio& delta, const Ratio& r) {
    require_bound_args(n, K, delta, r);
    BigInt c = forced_distance(delta, r);
    BoundStatus out;
    out.kind = BoundKind::singleton;
    out.rhs = pow2_ratio(checked_exponent(BigInt(n) - c + 1));
    out.meets = Ratio(K) == out.rhs;
    out.slack = out.rhs - Ratio(K);
    return out;
}

BoundStatus hamming_check(long n, const BigInt& K, const Ratio& delta, const Ratio& r) {
    require_bound_args(n, K, delta, r);
    BigInt T = (delta / (r + Ratio(1))).strict_floor();
    if (T < 0) T = 0;
    if (T > n) T = n;
    BigInt volume = 0;
    for (unsigned long i = 0; i <= T.get_ui(); ++i)
        volume += binomial(static_cast<unsigned long>(n), i);
    BoundStatus out;
    out.kind = BoundKind::hamming;
    out.rhs = Ratio(pow2_int(static_cast<unsigned long>(n)), volume);
    out.meets = Ratio(K) == out.rhs;
    out.slack = out.rhs - Ratio(K);
    return out;
}

BoundStatus plotkin_check(long n, const BigInt& K, const Ratio& delta, const Ratio& r) {
    require_bound_args(n, K, delta, r);
    BigInt d = forced_distance(delta, r);
    BoundStatus out;
    out.kind = BoundKind::plotkin;
    out.applicable = 2 * d > n;
    if (!out.applicable) {
        out.rhs = Ratio(0);
        out.meets = false;
        out.slack = Ratio(0);
        return out;
    }
    out.rhs = Ratio(Ratio(2 * d, 2 * d - n).floor());
    out.meets = Ratio(K) == out.rhs;
    out.slack = out.rhs - Ratio(K);
    return out;
}

namespace {

BoundOptimality classify_one(BoundKind kind, long n, const BigInt& K, const Ratio& delta,
                             const Ratio& r, std::uint32_t d_H, long t, bool d_H_odd) {
    auto check = [&](const Ratio& dlt, const Ratio& rr) {
        switch (kind) {
            case BoundKind::singleton: return singleton_check(n, K, dlt, rr);
            case BoundKind::hamming: return hamming_check(n, K, dlt, rr);
            default: return plotkin_check(n, K, dlt, rr);
        }
    };
    BoundOptimality out;
    out.at_delta = check(delta, r);
    out.at_hamming = check(Ratio(long(d_H)), Ratio(1));
    if (kind == BoundKind::hamming) {
        out.threshold = Ratio(t) * (r + Ratio(1));
        out.threshold_holds = delta > out.threshold;
        out.reaches_via_hamming = out.at_hamming.meets && d_H_odd && out.threshold_holds;
        if (t >= 1) out.r_threshold = Ratio(BigInt(t + 1), BigInt(t));
    } else {
        out.threshold = (r + Ratio(1)) / Ratio(2) * Ratio(long(d_H) - 1);
        out.threshold_holds = delta > out.threshold;
        out.reaches_via_hamming = out.at_hamming.meets && out.threshold_holds;
        if (d_H >= 2)
            out.r_threshold = Ratio(BigInt(long(d_H) + 1), BigInt(long(d_H) - 1));
    }
    out.agrees = out.at_delta.meets == out.reaches_via_hamming;
    return out;
}

} // namespace

OptimalityReport classify_optimality(const Code& code, const Ratio& r,
                                     std::uint64_t pair_budget) {
    if (r < Ratio(1))
        throw ParameterError("metric parameter r must be >= 1, got " + r.str());
    DiscrepancyProfile prof = profile(code, pair_budget);

    OptimalityReport rep;
    rep.n = code.length();
    rep.K = BigInt(static_cast<unsigned long>(code.size()));
    rep.r = r;
    rep.delta = prof.evaluate(r);
    // delta_1 is the Hamming minimum distance: d10 + d01 counts every
    // disagreeing position once.
    rep.d_H = static_cast<std::uint32_t>(prof.evaluate(Ratio(1)).num().get_ui());
    rep.t = (long(rep.d_H) - 1) / 2;
    rep.d_H_odd = rep.d_H % 2 == 1;

    long n = static_cast<long>(rep.n);
    rep.singleton = classify_one(BoundKind::singleton, n, rep.K, rep.delta, r, rep.d_H, rep.t,
                                 rep.d_H_odd);
    rep.hamming =
        classify_one(BoundKind::hamming, n, rep.K, rep.delta, r, rep.d_H, rep.t, rep.d_H_odd);
    rep.plotkin =
        classify_one(BoundKind::plotkin, n, rep.K, rep.delta, r, rep.d_H, rep.t, rep.d_H_odd);
    return rep;
}

namespace {

nlohmann::json status_json(const BoundStatus& s) {
    nlohmann::json j;
    j["applicable"] = s.applicable;
    j["rhs"] = s.applicable ? nlohmann::json(s.rhs.str()) : nlohmann::json(nullptr);
    j["meets"] = s.meets;
    j["slack"] = s.applicable ? nlohmann::json(s.slack.str()) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json optimality_json(const BoundOptimality& o) {
    nlohmann::json j;
    j["meets_at_delta_r"] = o.at_delta.meets;
    j["meets_for_d_H"] = o.at_hamming.meets;
    j["threshold"] = o.threshold.str();
    j["threshold_holds"] = o.threshold_holds;
    j["reaches_via_threshold"] = o.reaches_via_hamming;
    j["agrees"] = o.agrees;
    j["r_threshold"] =
        o.r_threshold ? nlohmann::json(o.r_threshold->str()) : nlohmann::json(nullptr);
    return j;
}

} // namespace

std::string to_json(const OptimalityReport& rep) {
    nlohmann::json j;
    j["n"] = rep.n;
    j["K"] = rep.K.get_ui();
    j["d_H"] = rep.d_H;
    j["r"] = rep.r.str();
    j["delta_r"] = rep.delta.str();
    j["bounds"]["singleton"] = status_json(rep.singleton.at_delta);
    j["bounds"]["hamming"] = status_json(rep.hamming.at_delta);
    j["bounds"]["plotkin"] = status_json(rep.plotkin.at_delta);
    j["theorem24"]["t"] = rep.t;
    j["theorem24"]["d_H_odd"] = rep.d_H_odd;
    j["theorem24"]["singleton"] = optimality_json(rep.singleton);
    j["theorem24"]["hamming"] = optimality_json(rep.hamming);
    j["theorem24"]["plotkin"] = optimality_json(rep.plotkin);
    return j.dump(2) + "\n";
}

} // namespace cncode
