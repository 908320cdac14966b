#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cncode/rational.hpp"
#include "cncode/word.hpp"

namespace cncode {

/// A boolean function on m variables as a truth table of 2^m values.
/// Index convention, shared by every module: the input x = (x_1, ..., x_m)
/// is the integer with x_1 in the least significant bit.
class BooleanFunction {
public:
    static constexpr int max_vars = 24;

    BooleanFunction(int m, std::vector<std::uint8_t> table);

    /// Parses an algebraic normal form: '+'-separated products of factors,
    /// each factor a variable x1..xm or a constant 0/1. Whitespace is
    /// ignored. Reduction is over F_2 (x*x = x, f+f = 0).
    static BooleanFunction parse_anf(std::string_view text, int m);

    /// Parses "m=<int>;tt=<hex>", the 2^m table bits as one hex number,
    /// most significant digit first (table index 2^m - 1 is the top bit).
    static BooleanFunction parse_table_hex(std::string_view text);
    std::string table_hex() const;

    int vars() const noexcept { return m_; }
    std::size_t domain_size() const noexcept { return table_.size(); }
    bool value(std::uint32_t x) const { return table_[x] != 0; }
    const std::vector<std::uint8_t>& table() const noexcept { return table_; }

    /// Pointwise sum over F_2.
    friend BooleanFunction operator+(const BooleanFunction& f, const BooleanFunction& g);
    friend bool operator==(const BooleanFunction& a, const BooleanFunction& b) {
        return a.m_ == b.m_ && a.table_ == b.table_;
    }

private:
    int m_;
    std::vector<std::uint8_t> table_;
};

/// Unnormalized Walsh coefficients W_f(y) = sum_x (-1)^(f(x) + x.y).
struct WalshSpectrum {
    int m = 0;
    std::vector<std::int32_t> values;

    std::int32_t operator[](std::size_t y) const { return values[y]; }
};

/// Fast transform, in-place butterfly, O(m 2^m).
WalshSpectrum walsh(const BooleanFunction& f);

/// Bent means m even and |W_f(y)| = 2^(m/2) everywhere. For bent f the
/// sign epsilon is read off W_f(0) = -epsilon * 2^(m/2).
struct BentStatus {
    bool bent = false;
    int epsilon = 0; // +1 or -1 when bent, 0 otherwise
};

BentStatus is_bent(const BooleanFunction& f);

/// An ordered list of distinct evaluation points in F_2^m. Serves as the
/// coordinate domain when functions are turned into codewords.
struct EvaluationSet {
    int m = 0;
    std::vector<std::uint32_t> points;

    EvaluationSet() = default;
    EvaluationSet(int m, std::vector<std::uint32_t> points);

    /// All 2^m points in integer order.
    static EvaluationSet full(int m);

    std::size_t size() const noexcept { return points.size(); }
};

/// The support D_f = { x : f(x) = 1 }, points in ascending order. For bent
/// f its size is 2^(m-1) + epsilon * 2^(m/2 - 1).
EvaluationSet support(const BooleanFunction& f);

/// sum_x (-1)^(f(x+a) + f(x)); 2^m at a = 0, and 0 for every a != 0
/// exactly when f is bent.
std::int64_t autocorrelation(const BooleanFunction& f, std::uint32_t a);

/// Evaluates each function on V, one codeword per function in list order.
/// Two functions agreeing everywhere on V cannot both become codewords;
/// that raises a collision error naming the pair.
Code code_from_functions(const EvaluationSet& V, const std::vector<BooleanFunction>& S);

/// The discrepancy of the ordered codeword pair (c_f, c_g) computed from
/// character sums over V instead of from the words:
///   (r+1)/4 * (n - sum_V (-1)^(f+g)) + (r-1)/4 * (sum_V (-1)^g - sum_V (-1)^f).
Ratio delta_via_sums(const BooleanFunction& f, const BooleanFunction& g,
                     const EvaluationSet& V, const Ratio& r);

/// Minimum of delta_via_sums over ordered pairs restricted to
/// sum_V (-1)^g <= sum_V (-1)^f; equals the unrestricted minimum
/// discrepancy of code_from_functions(V, S).
Ratio restricted_min_discrepancy(const EvaluationSet& V, const std::vector<BooleanFunction>& S,
                                 const Ratio& r);

} // namespace cncode
