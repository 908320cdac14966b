#pragma once

#include <cstdint>
#include <vector>

#include "cncode/boolean_function.hpp"
#include "cncode/errors.hpp"

namespace cncode {

/// GF(2^d) in polynomial basis: elements are integers in [0, 2^d) whose
/// bits are coefficients, arithmetic is carry-less multiplication reduced
/// by an irreducible modulus. The default modulus is the smallest
/// irreducible of degree d (as a mask integer), so outputs built on a
/// default field are reproducible.
class FieldCtx {
public:
    /// Smallest irreducible modulus of degree d; 2 <= d <= 16.
    explicit FieldCtx(int degree);
    /// Custom modulus: degree-d bit mask, verified irreducible.
    FieldCtx(int degree, std::uint32_t modulus);

    int degree() const noexcept { return d_; }
    std::uint32_t modulus() const noexcept { return modulus_; }
    std::uint32_t order_minus_one() const noexcept { return (std::uint32_t(1) << d_) - 1; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    /// Tr(a) = sum of a^(2^lambda) for lambda = 0..d-1, landing in {0,1}.
    int trace(std::uint32_t a) const;

    static bool is_irreducible(std::uint32_t mask);
    static std::uint32_t smallest_irreducible(int degree);

private:
    void require_element(std::uint32_t a) const;

    int d_;
    std::uint32_t modulus_;
};

/// The Kerdock-type quadratic on F_2^(m-1) x F_2, evaluated through a
/// degree-(m-1) field: f_u(x, x_m) = Tr(sum_j (ux)^(2^j+1)) + x_m Tr(ux)
/// with j running over 1..m/2-1. Indexing of the result follows the shared
/// truth-table convention with x the low m-1 bits and x_m the top bit.
/// f_0 is the zero function; sums of two distinct members are bent.
BooleanFunction kerdock_function(const FieldCtx& ctx, std::uint32_t u, int m);

/// [f_u : u in field order], 2^(m-1) functions on the default field of
/// degree m-1.
std::vector<BooleanFunction> kerdock_set(int m);

} // namespace cncode
