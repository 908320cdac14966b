#include "cncode/constructions.hpp"

#include <algorithm>
#include <bit>

#include <json.hpp>

#include "cncode/gf2.hpp"

namespace cncode {

HadamardMatrix sylvester_hadamard(int t) {
    if (t < 1 || t > 16)
        throw ParameterError("Hadamard exponent must be in 1..16, got " + std::to_string(t));
    const std::size_t order = std::size_t(1) << t;
    HadamardMatrix H;
    H.order = order;
    H.rows.reserve(order);
    for (std::size_t i = 0; i < order; ++i) {
        Word row(order);
        for (std::size_t j = 0; j < order; ++j)
            if (std::popcount(i & j) & 1) row.set_bit(j, true);
        H.rows.push_back(std::move(row));
    }
    return H;
}

Code hadamard_code(const HadamardMatrix& H) {
    if (H.order < 2 || H.rows.size() != H.order)
        throw ParameterError("malformed Hadamard matrix");
    for (std::size_t i = 0; i < H.order; ++i)
        if (H.entry(i, 0) != 1)
            throw ParameterError("first column not normalized to +1");
    std::vector<Word> words;
    words.reserve(H.order);
    for (std::size_t i = 0; i < H.order; ++i) {
        Word w(H.order - 1);
        for (std::size_t j = 1; j < H.order; ++j)
            if (H.rows[i].bit(j)) w.set_bit(j - 1, true);
        words.push_back(std::move(w));
    }
    return Code(std::move(words));
}

std::string to_string(Trust t) {
    return t == Trust::verified_formula ? "verified-formula" : "claim-under-test";
}

Code puncture_first(const Code& code, int alpha) {
    if (alpha != 0 && alpha != 1)
        throw ParameterError("puncture value must be 0 or 1");
    if (code.length() < 2)
        throw DimensionError("cannot puncture a code of length 1");
    std::vector<Word> kept;
    for (const Word& w : code.words()) {
        if (w.bit(0) != (alpha == 1)) continue;
        Word shorter(code.length() - 1);
        for (std::size_t i = 1; i < code.length(); ++i)
            if (w.bit(i)) shorter.set_bit(i - 1, true);
        kept.push_back(std::move(shorter));
    }
    if (kept.empty())
        throw DegenerateCodeError("no codeword starts with " + std::to_string(alpha));
    return Code(std::move(kept));
}

namespace {

constexpr int construction_var_cap = 16;

void require_construction_m(int m, int cap) {
    if (m > cap)
        throw ResourceError("m = " + std::to_string(m) + " exceeds the construction cap of " +
                            std::to_string(cap));
}

BentStatus require_bent(const BooleanFunction& f) {
    BentStatus bs = is_bent(f);
    if (!bs.bent)
        throw ParameterError("input function on " + std::to_string(f.vars()) +
                             " variables is not bent");
    return bs;
}

} // namespace

std::pair<Code, PredictedParams> construction_a(const BooleanFunction& f) {
    require_bent(f);
    const int m = f.vars();
    require_construction_m(m, construction_var_cap);
    const int k = m / 2;

    std::vector<BooleanFunction> S;
    S.reserve(std::size_t(2) << m);
    const std::size_t points = std::size_t(1) << m;
    for (std::size_t a = 0; a < points; ++a) {
        std::vector<std::uint8_t> shifted(points);
        for (std::size_t x = 0; x < points; ++x)
            shifted[x] = f.table()[x ^ a];
        std::vector<std::uint8_t> complemented(points);
        for (std::size_t x = 0; x < points; ++x)
            complemented[x] = shifted[x] ^ 1;
        S.emplace_back(m, std::move(shifted));
        S.emplace_back(m, std::move(complemented));
    }
    Code code = code_from_functions(EvaluationSet::full(m), S);

    PredictedParams pred;
    pred.n = points;
    pred.K = pow2_int(static_cast<unsigned long>(m + 1));
    pred.formula.alpha = Ratio(pow2_ratio(m - 2) + pow2_ratio(k - 1));
    pred.formula.beta = Ratio(pow2_ratio(m - 2) - pow2_ratio(k - 1));
    pred.d_H_claim = long(1) << (m - 1);
    pred.source = "construction-a";
    pred.trust = Trust::verified_formula;
    return {std::move(code), std::move(pred)};
}

std::pair<Code, PredictedParams> construction_b(const BooleanFunction& f) {
    BentStatus bs = require_bent(f);
    const int m = f.vars();
    if (m < 4)
        throw ParameterError("need m >= 4, got " + std::to_string(m));
    require_construction_m(m, construction_var_cap);
    const int k = m / 2;

    EvaluationSet D = support(f);
    std::vector<BooleanFunction> S;
    S.reserve((std::size_t(2) << m) - 1);
    const std::size_t points = std::size_t(1) << m;
    for (std::size_t a = 0; a < points; ++a) {
        for (int b = 0; b < 2; ++b) {
            if (a == 0 && b == 0) continue;
            std::vector<std::uint8_t> table(points);
            for (std::size_t x = 0; x < points; ++x)
                table[x] = (std::popcount(a & x) & 1) ^ b;
            S.emplace_back(m, std::move(table));
        }
    }
    Code code = code_from_functions(D, S);

    const long n = static_cast<long>(D.size());
    const long half_k = long(1) << (k - 1); // 2^(k-1)
    const long stated = (long(1) << (m - 1)) - (long(1) << k);
    const long proof_variant = (long(1) << (m - 1)) + (long(1) << k);

    PredictedParams pred;
    pred.n = D.size();
    pred.K = pow2_int(static_cast<unsigned long>(m + 1)) - 1;
    pred.formula.alpha = Ratio(BigInt((n - half_k) + stated), BigInt(4));
    pred.formula.beta = Ratio(BigInt((n - half_k) - stated), BigInt(4));
    pred.alt_formula =
        LinearForm{Ratio(BigInt((n - half_k) + proof_variant), BigInt(4)),
                   Ratio(BigInt((n - half_k) - proof_variant), BigInt(4))};
    pred.d_H_claim = (n - half_k) / 2;
    pred.source = "construction-b";
    pred.trust = Trust::claim_under_test;
    (void)bs;
    return {std::move(code), std::move(pred)};
}

std::pair<Code, PredictedParams> construction_c(int m) {
    if (m < 4 || m % 2 != 0)
        throw ParameterError("need even m >= 4, got " + std::to_string(m));
    require_construction_m(m, 10);
    const int k = m / 2;
    const std::size_t points = std::size_t(1) << m;
    const std::uint32_t half = std::uint32_t(1) << (m - 1);

    FieldCtx ctx(m - 1);

    std::vector<Word> quad_words;
    quad_words.reserve(half);
    for (std::uint32_t u = 0; u < half; ++u) {
        BooleanFunction fu = kerdock_function(ctx, u, m);
        Word w(points);
        for (std::size_t x = 0; x < points; ++x)
            if (fu.value(static_cast<std::uint32_t>(x))) w.set_bit(x, true);
        quad_words.push_back(std::move(w));
    }

    Word top_half(points);
    for (std::size_t x = half; x < points; ++x)
        top_half.set_bit(x, true);

    std::vector<Word> words;
    words.reserve(std::size_t(2) * points * half);
    for (std::uint32_t u = 0; u < half; ++u) {
        for (std::uint32_t a = 0; a < half; ++a) {
            Word lin(points);
            for (std::uint32_t x = 0; x < half; ++x) {
                if (ctx.trace(ctx.mul(a, x))) {
                    lin.set_bit(x, true);
                    lin.set_bit(x + half, true);
                }
            }
            words.push_back(quad_words[u] ^ lin);
            words.push_back(quad_words[u] ^ lin ^ top_half);
        }
    }

    if (!words.front().all_zero())
        throw std::logic_error("zero word missing from the full function family");
    words.erase(words.begin());
    for (const Word& w : words)
        if (w.all_zero())
            throw ParameterError("duplicate zero word in construction output");
    Code code = Code(std::move(words));

    PredictedParams pred;
    pred.n = points;
    pred.K = pow2_int(static_cast<unsigned long>(2 * m - 1)) - 1;
    pred.formula.alpha = Ratio(pow2_ratio(m - 2) + pow2_ratio(k - 2));
    pred.formula.beta = Ratio(pow2_ratio(m - 2) - Ratio(3) * pow2_ratio(k - 2));
    pred.lower_bound = true;
    pred.d_H_claim = (long(1) << (m - 1)) - (long(1) << k);
    pred.source = "construction-c";
    pred.trust = Trust::claim_under_test;
    return {std::move(code), std::move(pred)};
}

bool is_xor_closed(const std::vector<Word>& words) {
    if (words.empty()) return true;
    std::vector<Word> sorted = words;
    std::sort(sorted.begin(), sorted.end());
    auto contains = [&](const Word& w) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), w);
        return it != sorted.end() && *it == w;
    };
    if (!contains(Word(words[0].length()))) return false; // w ^ w
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            if (!contains(words[i] ^ words[j])) return false;
    return true;
}

namespace {

enum class Kind { hadamard, a, b, c };

Kind resolve_id(const std::string& id) {
    if (id == "hadamard") return Kind::hadamard;
    if (id == "construction-a" || id == "bent-translate") return Kind::a;
    if (id == "construction-b" || id == "bent-support") return Kind::b;
    if (id == "construction-c" || id == "kerdock") return Kind::c;
    throw ParameterError("unknown construction '" + id + "'");
}

std::string canonical_id(Kind kind) {
    switch (kind) {
        case Kind::hadamard: return "hadamard";
        case Kind::a: return "construction-a";
        case Kind::b: return "construction-b";
        default: return "construction-c";
    }
}

std::string default_bent_anf(int m, int epsilon) {
    if (m < 2 || m % 2 != 0)
        throw ParameterError("default bent input needs even m >= 2, got " + std::to_string(m));
    std::string anf;
    for (int i = 1; i <= m; i += 2) {
        if (!anf.empty()) anf += "+";
        anf += "x" + std::to_string(i) + "*x" + std::to_string(i + 1);
    }
    if (epsilon == +1) anf += "+1";
    return anf;
}

} // namespace

BuiltConstruction build_construction(const ConstructionRequest& req) {
    Kind kind = resolve_id(req.id);
    if ((kind == Kind::hadamard || kind == Kind::c) && req.anf)
        throw ParameterError("--anf applies only to the bent-input constructions");
    if (kind == Kind::hadamard) {
        Code code = hadamard_code(sylvester_hadamard(req.m));
        PredictedParams pred;
        pred.n = code.length();
        pred.K = BigInt(static_cast<unsigned long>(code.size()));
        pred.formula.alpha = pow2_ratio(req.m - 1);
        pred.formula.beta = Ratio(0);
        pred.d_H_claim = long(1) << (req.m - 1);
        pred.source = "hadamard";
        pred.trust = Trust::verified_formula;
        return {canonical_id(kind), req.m,      std::move(code),
                std::move(pred),    std::nullopt, std::nullopt};
    }
    if (kind == Kind::c) {
        auto [code, pred] = construction_c(req.m);
        std::uint32_t modulus = FieldCtx(req.m - 1).modulus();
        return {canonical_id(kind), req.m, std::move(code), std::move(pred), modulus,
                std::nullopt};
    }
    if (req.epsilon != -1 && req.epsilon != +1)
        throw ParameterError("epsilon must be -1 or +1");
    BooleanFunction f = req.anf ? BooleanFunction::parse_anf(*req.anf, req.m)
                                : BooleanFunction::parse_anf(default_bent_anf(req.m, req.epsilon),
                                                             req.m);
    BentStatus bs = require_bent(f);
    auto [code, pred] = kind == Kind::a ? construction_a(f) : construction_b(f);
    return {canonical_id(kind), req.m, std::move(code), std::move(pred), std::nullopt,
            bs.epsilon};
}

VerificationReport verify_construction(const ConstructionRequest& req,
                                       const std::vector<Ratio>& rs,
                                       std::uint64_t pair_budget) {
    for (const Ratio& r : rs)
        if (r < Ratio(1))
            throw ParameterError("metric parameter r must be >= 1, got " + r.str());

    BuiltConstruction built = build_construction(req);
    DiscrepancyProfile prof = profile(built.code, pair_budget);

    VerificationReport rep;
    rep.id = built.id;
    rep.m = req.m;
    rep.modulus = built.modulus;
    rep.epsilon = built.epsilon;
    rep.n = built.code.length();
    rep.K_expected = built.predicted.K;
    rep.K_actual = built.code.size();
    rep.K_matches = BigInt(static_cast<unsigned long>(rep.K_actual)) == rep.K_expected;
    rep.d_H = static_cast<std::uint32_t>(prof.evaluate(Ratio(1)).num().get_ui());
    rep.d_H_claim = built.predicted.d_H_claim;
    rep.d_H_matches = long(rep.d_H) == rep.d_H_claim;
    rep.predicted = built.predicted;

    if (built.id == "hadamard") {
        rep.xor_closed = is_xor_closed(built.code.words());
    } else if (built.id == "construction-c") {
        std::vector<Word> full = built.code.words();
        full.push_back(Word(built.code.length()));
        rep.xor_closed = is_xor_closed(full);
    }

    for (const Ratio& r : rs) {
        RCheck check;
        check.r = r;
        check.brute = prof.evaluate(r);
        check.predicted = built.predicted.formula.at(r);
        check.match = built.predicted.lower_bound ? check.brute >= check.predicted
                                                  : check.brute == check.predicted;
        if (built.predicted.alt_formula) {
            check.alt_predicted = built.predicted.alt_formula->at(r);
            check.alt_match = check.brute == *check.alt_predicted;
        }
        rep.checks.push_back(std::move(check));
    }
    return rep;
}

namespace {

std::string modulus_hex(std::uint32_t mask) {
    static const char* alphabet = "0123456789abcdef";
    std::string hex;
    for (std::uint32_t v = mask; v; v >>= 4)
        hex.insert(hex.begin(), alphabet[v & 0xf]);
    return "0x" + (hex.empty() ? "0" : hex);
}

nlohmann::json predicted_json(const PredictedParams& pred) {
    nlohmann::json j;
    j["alpha"] = pred.formula.alpha.str();
    j["beta"] = pred.formula.beta.str();
    j["kind"] = pred.lower_bound ? "lower_bound" : "exact";
    j["trust"] = to_string(pred.trust);
    return j;
}

nlohmann::json common_json(const std::string& id, int m,
                           const std::optional<std::uint32_t>& modulus,
                           const std::optional<int>& epsilon, std::size_t n,
                           const BigInt& K, const PredictedParams& pred) {
    nlohmann::json j;
    j["construction"] = id;
    j["m"] = m;
    j["modulus"] = modulus ? nlohmann::json(modulus_hex(*modulus)) : nlohmann::json(nullptr);
    j["epsilon"] = epsilon ? nlohmann::json(*epsilon) : nlohmann::json(nullptr);
    j["n"] = n;
    j["K"] = K.get_ui();
    j["predicted"] = predicted_json(pred);
    j["alt_predicted"] = nlohmann::json(nullptr);
    if (pred.alt_formula) {
        j["alt_predicted"] = {{"alpha", pred.alt_formula->alpha.str()},
                              {"beta", pred.alt_formula->beta.str()}};
    }
    return j;
}

} // namespace

std::string metadata_json(const BuiltConstruction& built) {
    nlohmann::json j = common_json(built.id, built.m, built.modulus, built.epsilon,
                                   built.code.length(),
                                   BigInt(static_cast<unsigned long>(built.code.size())),
                                   built.predicted);
    j["verified"] = nlohmann::json::object();
    return j.dump(2) + "\n";
}

std::string to_json(const VerificationReport& rep) {
    nlohmann::json j = common_json(rep.id, rep.m, rep.modulus, rep.epsilon, rep.n,
                                   BigInt(static_cast<unsigned long>(rep.K_actual)),
                                   rep.predicted);
    j["K_expected"] = rep.K_expected.get_ui();
    j["K_matches"] = rep.K_matches;
    j["d_H"] = rep.d_H;
    j["d_H_claim"] = rep.d_H_claim;
    j["d_H_matches"] = rep.d_H_matches;
    j["xor_closed"] = rep.xor_closed ? nlohmann::json(*rep.xor_closed) : nlohmann::json(nullptr);
    nlohmann::json verified = nlohmann::json::object();
    for (const RCheck& check : rep.checks) {
        nlohmann::json entry;
        entry["brute"] = check.brute.str();
        entry["predicted"] = check.predicted.str();
        entry["match"] = check.match;
        entry["alt_predicted"] =
            check.alt_predicted ? nlohmann::json(check.alt_predicted->str())
                                : nlohmann::json(nullptr);
        entry["alt_match"] =
            check.alt_match ? nlohmann::json(*check.alt_match) : nlohmann::json(nullptr);
        verified[check.r.str()] = entry;
    }
    j["verified"] = verified;
    return j.dump(2) + "\n";
}

} // namespace cncode
