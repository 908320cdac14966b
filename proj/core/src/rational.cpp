#include "cncode/rational.hpp"

#include <cctype>

namespace cncode {

Ratio::Ratio(const BigInt& num, const BigInt& den) {
    if (den == 0)
        throw ParameterError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

namespace {

bool valid_integer_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Ratio Ratio::parse(std::string_view text) {
    std::string_view num = text, den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!valid_integer_token(den))
            throw ParameterError("invalid rational '" + std::string(text) + "'");
    }
    if (!valid_integer_token(num))
        throw ParameterError("invalid rational '" + std::string(text) + "'");
    BigInt n(std::string(num), 10);
    BigInt d = den.empty() ? BigInt(1) : BigInt(std::string(den), 10);
    return Ratio(n, d);
}

BigInt Ratio::floor() const {
    BigInt out;
    mpz_fdiv_q(out.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
    return out;
}

BigInt Ratio::strict_floor() const {
    if (is_integer()) return BigInt(q_.get_num() - 1);
    return floor();
}

BigInt Ratio::ceil() const {
    BigInt out;
    mpz_cdiv_q(out.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
    return out;
}

std::string Ratio::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Ratio operator/(const Ratio& a, const Ratio& b) {
    if (b.q_ == 0)
        throw ParameterError("division by zero");
    return Ratio(mpq_class(a.q_ / b.q_));
}

Ratio pow2_ratio(long e) {
    if (e >= 0) return Ratio(pow2_int(static_cast<unsigned long>(e)));
    return Ratio(BigInt(1), pow2_int(static_cast<unsigned long>(-e)));
}

BigInt pow2_int(unsigned long e) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
    return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

} // namespace cncode
