#include "cncode/gf2.hpp"

#include <bit>

namespace cncode {

namespace {

int poly_degree(std::uint32_t mask) {
    return mask == 0 ? -1 : 31 - std::countl_zero(mask);
}

// Remainder of polynomial division over F_2.
std::uint32_t poly_mod(std::uint32_t a, std::uint32_t q) {
    int dq = poly_degree(q);
    for (int da = poly_degree(a); da >= dq; da = poly_degree(a))
        a ^= q << (da - dq);
    return a;
}

} // namespace

bool FieldCtx::is_irreducible(std::uint32_t mask) {
    int d = poly_degree(mask);
    if (d < 1) return false;
    if (d == 1) return true;
    if ((mask & 1) == 0) return false; // divisible by x
    for (std::uint32_t q = 2; poly_degree(q) <= d / 2; ++q)
        if (poly_mod(mask, q) == 0) return false;
    return true;
}

std::uint32_t FieldCtx::smallest_irreducible(int degree) {
    for (std::uint32_t mask = (std::uint32_t(1) << degree) | 1;
         mask < (std::uint32_t(1) << (degree + 1)); mask += 2)
        if (is_irreducible(mask)) return mask;
    throw ParameterError("no irreducible of degree " + std::to_string(degree));
}

FieldCtx::FieldCtx(int degree) : d_(degree) {
    if (degree < 2 || degree > 16)
        throw ParameterError("field degree must be in 2..16, got " + std::to_string(degree));
    modulus_ = smallest_irreducible(degree);
}

FieldCtx::FieldCtx(int degree, std::uint32_t modulus) : d_(degree), modulus_(modulus) {
    if (degree < 2 || degree > 16)
        throw ParameterError("field degree must be in 2..16, got " + std::to_string(degree));
    if (poly_degree(modulus) != degree)
        throw ParameterError("modulus degree " + std::to_string(poly_degree(modulus)) +
                             " does not match field degree " + std::to_string(degree));
    if (!is_irreducible(modulus))
        throw ParameterError("modulus mask " + std::to_string(modulus) + " is reducible");
}

void FieldCtx::require_element(std::uint32_t a) const {
    if (a >> d_)
        throw DimensionError("value " + std::to_string(a) + " is not an element of GF(2^" +
                             std::to_string(d_) + ")");
}

std::uint32_t FieldCtx::add(std::uint32_t a, std::uint32_t b) const {
    require_element(a);
    require_element(b);
    return a ^ b;
}

std::uint32_t FieldCtx::mul(std::uint32_t a, std::uint32_t b) const {
    require_element(a);
    require_element(b);
    std::uint32_t acc = 0;
    while (b) {
        if (b & 1) acc ^= a;
        b >>= 1;
        a <<= 1;
        if (a >> d_) a ^= modulus_;
    }
    return acc;
}

std::uint32_t FieldCtx::pow(std::uint32_t a, std::uint64_t e) const {
    require_element(a);
    std::uint32_t acc = 1, base = a;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

int FieldCtx::trace(std::uint32_t a) const {
    require_element(a);
    std::uint32_t acc = a, cur = a;
    for (int lambda = 1; lambda < d_; ++lambda) {
        cur = mul(cur, cur);
        acc ^= cur;
    }
    return static_cast<int>(acc & 1);
}

BooleanFunction kerdock_function(const FieldCtx& ctx, std::uint32_t u, int m) {
    if (m < 4 || m % 2 != 0)
        throw ParameterError("need even m >= 4, got " + std::to_string(m));
    if (ctx.degree() != m - 1)
        throw DimensionError("field degree " + std::to_string(ctx.degree()) +
                             " does not match m - 1 = " + std::to_string(m - 1));
    if (u >> (m - 1))
        throw DimensionError("u outside GF(2^" + std::to_string(m - 1) + ")");

    const int k = m / 2;
    const std::uint32_t half = std::uint32_t(1) << (m - 1);
    std::vector<std::uint8_t> table(std::size_t(1) << m, 0);
    for (std::uint32_t x = 0; x < half; ++x) {
        std::uint32_t ux = ctx.mul(u, x);
        std::uint32_t quad = 0;
        for (int j = 1; j < k; ++j)
            quad ^= ctx.pow(ux, (std::uint64_t(1) << j) + 1);
        int base = ctx.trace(quad);
        int lin = ctx.trace(ux);
        table[x] = static_cast<std::uint8_t>(base);
        table[x + half] = static_cast<std::uint8_t>(base ^ lin);
    }
    return BooleanFunction(m, std::move(table));
}

std::vector<BooleanFunction> kerdock_set(int m) {
    if (m < 4 || m % 2 != 0)
        throw ParameterError("need even m >= 4, got " + std::to_string(m));
    FieldCtx ctx(m - 1);
    std::vector<BooleanFunction> out;
    out.reserve(std::size_t(1) << (m - 1));
    for (std::uint32_t u = 0; u < (std::uint32_t(1) << (m - 1)); ++u)
        out.push_back(kerdock_function(ctx, u, m));
    return out;
}

} // namespace cncode
