#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cncode/boolean_function.hpp"
#include "cncode/metric.hpp"
#include "cncode/rational.hpp"
#include "cncode/word.hpp"

namespace cncode {

/// A Hadamard matrix of order 2^t, entries +-1, stored as the binary
/// matrix c with h_ij = (-1)^(c_ij).
struct HadamardMatrix {
    std::size_t order = 0;
    std::vector<Word> rows; // row i, bit j = c_ij

    int entry(std::size_t i, std::size_t j) const { return rows[i].bit(j) ? -1 : 1; }
};

/// Tensor power of [[1,1],[1,-1]]; first row and column all +1.
HadamardMatrix sylvester_hadamard(int t);

/// Drops the all-+1 first column and reads the remaining +-1 rows as bits:
/// an (order-1, order) code with minimum distance order/2.
Code hadamard_code(const HadamardMatrix& H);

/// delta_r prediction as the linear form alpha + beta * r.
struct LinearForm {
    Ratio alpha;
    Ratio beta;

    Ratio at(const Ratio& r) const { return alpha + beta * r; }
};

/// Whether a prediction is a proven consequence of the construction or a
/// claim the report merely tests against brute force.
enum class Trust { verified_formula, claim_under_test };

std::string to_string(Trust t);

/// Parameters a construction promises before any brute-force check runs.
/// When lower_bound is set the formula bounds delta_r from below instead
/// of predicting it exactly. alt_formula carries a second printed
/// candidate where the source states two (construction-b).
struct PredictedParams {
    std::size_t n = 0;
    BigInt K;
    LinearForm formula;
    bool lower_bound = false;
    std::optional<LinearForm> alt_formula;
    long d_H_claim = 0;
    std::string source; // construction id the prediction comes from
    Trust trust = Trust::claim_under_test;
};

/// Keeps the words whose first coordinate equals alpha, dropping that
/// coordinate. Errors when nothing survives.
Code puncture_first(const Code& code, int alpha);

/// Bent translates: all f(x + a) + b over the full domain.
/// (2^m, 2^(m+1)) code, delta_r = (r+1) 2^(m-2) - (r-1) 2^(m/2-1).
std::pair<Code, PredictedParams> construction_a(const BooleanFunction& f);

/// All nonzero affine functions a.x + b restricted to the support of a
/// bent f. (|D_f|, 2^(m+1) - 1) code; the two printed delta_r candidates
/// are recorded for testing, neither is trusted.
std::pair<Code, PredictedParams> construction_b(const BooleanFunction& f);

/// Kerdock-type functions plus all affine parts, zero word removed:
/// (2^m, 2^(2m-1) - 1) code with a lower-bound prediction
/// delta_r >= (r+1) 2^(m-2) - (3r-1) 2^(m/2-2).
std::pair<Code, PredictedParams> construction_c(int m);

/// True when the word set is closed under XOR (contains pairwise sums;
/// a closed set containing the zero word is a linear code).
bool is_xor_closed(const std::vector<Word>& words);

/// What to build: canonical ids "hadamard", "construction-a",
/// "construction-b", "construction-c" (aliases "bent-translate",
/// "bent-support", "kerdock" accepted). m is the Hadamard exponent t for
/// "hadamard". Constructions a/b take their bent input from anf when
/// given, otherwise the inner-product form on m variables, complemented
/// when epsilon = +1.
struct ConstructionRequest {
    std::string id;
    int m = 0;
    std::optional<std::string> anf;
    int epsilon = -1;
};

struct BuiltConstruction {
    std::string id; // canonical
    int m = 0;      // t for hadamard
    Code code;
    PredictedParams predicted;
    std::optional<std::uint32_t> modulus; // construction-c: field modulus mask
    std::optional<int> epsilon;           // a/b: sign of the bent input
};

BuiltConstruction build_construction(const ConstructionRequest& req);

/// One r's comparison of brute force against the prediction. For exact
/// predictions match means equality; for lower bounds it means the bound
/// holds. alt_* mirror the second candidate when present.
struct RCheck {
    Ratio r;
    Ratio brute;
    Ratio predicted;
    bool match = false;
    std::optional<Ratio> alt_predicted;
    std::optional<bool> alt_match;
};

/// Brute force is authoritative here: mismatches are reported, never
/// raised as errors.
struct VerificationReport {
    std::string id;
    int m = 0;
    std::optional<std::uint32_t> modulus;
    std::optional<int> epsilon;
    std::size_t n = 0;
    BigInt K_expected;
    std::size_t K_actual = 0;
    bool K_matches = false;
    std::uint32_t d_H = 0;
    long d_H_claim = 0;
    bool d_H_matches = false;
    PredictedParams predicted;
    /// Closure of the structural word set under XOR, where the source
    /// claims linearity: the code itself for hadamard, the full set with
    /// the zero word restored for construction-c. Absent elsewhere.
    std::optional<bool> xor_closed;
    std::vector<RCheck> checks;
};

VerificationReport verify_construction(const ConstructionRequest& req,
                                       const std::vector<Ratio>& rs,
                                       std::uint64_t pair_budget = default_pair_budget);

/// Construction metadata JSON (construct subcommand): predicted block with
/// empty "verified". Stable key order, trailing newline.
std::string metadata_json(const BuiltConstruction& built);

/// Full verification report JSON: metadata plus checks and per-r results.
std::string to_json(const VerificationReport& report);

} // namespace cncode
