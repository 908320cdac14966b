#include "cncode/boolean_function.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace cncode {

BooleanFunction::BooleanFunction(int m, std::vector<std::uint8_t> table)
    : m_(m), table_(std::move(table)) {
    if (m < 1)
        throw ParameterError("need at least one variable");
    if (m > max_vars)
        throw ResourceError("m = " + std::to_string(m) + " exceeds the table cap of " +
                            std::to_string(max_vars) + " variables");
    if (table_.size() != (std::size_t(1) << m))
        throw DimensionError("truth table has " + std::to_string(table_.size()) +
                             " entries, expected " + std::to_string(std::size_t(1) << m));
    for (std::uint8_t v : table_)
        if (v > 1)
            throw ParameterError("truth table entries must be 0 or 1");
}

namespace {

// One ANF term: the variable set as a bit mask, or the constant one/zero.
struct Term {
    std::uint32_t mask = 0;
    bool zero = false;
};

} // namespace

BooleanFunction BooleanFunction::parse_anf(std::string_view text, int m) {
    if (m < 1 || m > max_vars)
        throw ParameterError("variable count out of range");

    std::vector<Term> terms;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };

    bool expect_term = true;
    while (true) {
        skip_ws();
        if (i == text.size()) {
            if (expect_term)
                throw SyntaxError(terms.empty() ? "empty expression" : "dangling '+'", i);
            break;
        }
        if (!expect_term) {
            if (text[i] != '+')
                throw SyntaxError(std::string("expected '+', found '") + text[i] + "'", i);
            ++i;
            expect_term = true;
            continue;
        }

        Term term;
        bool expect_factor = true;
        while (expect_factor) {
            skip_ws();
            if (i == text.size())
                throw SyntaxError("dangling '*'", i);
            char c = text[i];
            if (c == '0') {
                term.zero = true;
                ++i;
            } else if (c == '1') {
                ++i;
            } else if (c == 'x' || c == 'X') {
                std::size_t start = i++;
                std::size_t digits = i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                if (i == digits)
                    throw SyntaxError("variable needs an index", start);
                unsigned idx = 0;
                auto [p, ec] = std::from_chars(text.data() + digits, text.data() + i, idx);
                if (ec != std::errc() || idx < 1 || int(idx) > m)
                    throw SyntaxError("variable index out of range 1.." + std::to_string(m),
                                      start);
                term.mask |= std::uint32_t(1) << (idx - 1);
            } else {
                throw SyntaxError(std::string("unexpected character '") + c + "'", i);
            }
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                expect_factor = true;
            } else {
                expect_factor = false;
            }
        }
        terms.push_back(term);
        expect_term = false;
    }

    std::vector<std::uint8_t> table(std::size_t(1) << m, 0);
    for (const Term& t : terms) {
        if (t.zero) continue;
        for (std::size_t x = 0; x < table.size(); ++x)
            table[x] ^= (x & t.mask) == t.mask;
    }
    return BooleanFunction(m, std::move(table));
}

BooleanFunction BooleanFunction::parse_table_hex(std::string_view text) {
    constexpr std::string_view m_key = "m=", tt_key = ";tt=";
    if (text.substr(0, m_key.size()) != m_key)
        throw SyntaxError("expected 'm='", 0);
    std::size_t semi = text.find(tt_key);
    if (semi == std::string_view::npos)
        throw SyntaxError("expected ';tt='", text.size());
    int m = 0;
    std::string_view m_text = text.substr(m_key.size(), semi - m_key.size());
    auto [p, ec] = std::from_chars(m_text.data(), m_text.data() + m_text.size(), m);
    if (ec != std::errc() || p != m_text.data() + m_text.size())
        throw SyntaxError("invalid variable count '" + std::string(m_text) + "'", m_key.size());
    if (m < 1 || m > max_vars)
        throw ParameterError("variable count out of range");

    std::string_view hex = text.substr(semi + tt_key.size());
    std::size_t entries = std::size_t(1) << m;
    std::size_t want = std::max<std::size_t>(1, entries / 4);
    if (hex.size() != want)
        throw SyntaxError("expected " + std::to_string(want) + " hex digits, found " +
                          std::to_string(hex.size()), semi + tt_key.size());

    std::vector<std::uint8_t> table(entries, 0);
    for (std::size_t pos = 0; pos < hex.size(); ++pos) {
        char c = hex[hex.size() - 1 - pos]; // least significant digit last
        int nibble;
        if (c >= '0' && c <= '9') nibble = c - '0';
        else if (c >= 'a' && c <= 'f') nibble = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') nibble = c - 'A' + 10;
        else
            throw SyntaxError(std::string("invalid hex digit '") + c + "'",
                              semi + tt_key.size() + hex.size() - 1 - pos);
        for (int b = 0; b < 4; ++b) {
            std::size_t idx = pos * 4 + b;
            if (idx < entries)
                table[idx] = (nibble >> b) & 1;
            else if ((nibble >> b) & 1)
                throw SyntaxError("hex value wider than 2^m bits", semi + tt_key.size());
        }
    }
    return BooleanFunction(m, std::move(table));
}

std::string BooleanFunction::table_hex() const {
    std::size_t entries = table_.size();
    std::size_t digits = std::max<std::size_t>(1, entries / 4);
    std::string hex(digits, '0');
    static const char* alphabet = "0123456789abcdef";
    for (std::size_t pos = 0; pos < digits; ++pos) {
        int nibble = 0;
        for (int b = 0; b < 4; ++b) {
            std::size_t idx = pos * 4 + b;
            if (idx < entries && table_[idx]) nibble |= 1 << b;
        }
        hex[digits - 1 - pos] = alphabet[nibble];
    }
    return "m=" + std::to_string(m_) + ";tt=" + hex;
}

BooleanFunction operator+(const BooleanFunction& f, const BooleanFunction& g) {
    if (f.m_ != g.m_)
        throw DimensionError("adding functions on different variable counts");
    std::vector<std::uint8_t> table(f.table_.size());
    for (std::size_t x = 0; x < table.size(); ++x)
        table[x] = f.table_[x] ^ g.table_[x];
    return BooleanFunction(f.m_, std::move(table));
}

WalshSpectrum walsh(const BooleanFunction& f) {
    const std::size_t n = f.domain_size();
    WalshSpectrum spec;
    spec.m = f.vars();
    spec.values.resize(n);
    for (std::size_t x = 0; x < n; ++x)
        spec.values[x] = f.value(static_cast<std::uint32_t>(x)) ? -1 : 1;
    for (std::size_t h = 1; h < n; h <<= 1) {
        for (std::size_t block = 0; block < n; block += h << 1) {
            for (std::size_t j = block; j < block + h; ++j) {
                std::int32_t u = spec.values[j];
                std::int32_t v = spec.values[j + h];
                spec.values[j] = u + v;
                spec.values[j + h] = u - v;
            }
        }
    }
    return spec;
}

BentStatus is_bent(const BooleanFunction& f) {
    if (f.vars() % 2 != 0) return {};
    WalshSpectrum spec = walsh(f);
    const std::int32_t target = std::int32_t(1) << (f.vars() / 2);
    for (std::int32_t w : spec.values)
        if (w != target && w != -target) return {};
    return {true, spec.values[0] == target ? -1 : +1};
}

EvaluationSet::EvaluationSet(int m, std::vector<std::uint32_t> pts)
    : m(m), points(std::move(pts)) {
    if (m < 1 || m > BooleanFunction::max_vars)
        throw ParameterError("variable count out of range");
    const std::uint32_t limit = std::uint32_t(1) << m;
    for (std::uint32_t p : points)
        if (p >= limit)
            throw ParameterError("evaluation point " + std::to_string(p) +
                                 " outside F_2^" + std::to_string(m));
    std::vector<std::uint32_t> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ParameterError("evaluation points must be distinct");
}

EvaluationSet EvaluationSet::full(int m) {
    EvaluationSet out;
    out.m = m;
    if (m < 1 || m > BooleanFunction::max_vars)
        throw ParameterError("variable count out of range");
    out.points.resize(std::size_t(1) << m);
    std::iota(out.points.begin(), out.points.end(), 0);
    return out;
}

EvaluationSet support(const BooleanFunction& f) {
    EvaluationSet out;
    out.m = f.vars();
    for (std::size_t x = 0; x < f.domain_size(); ++x)
        if (f.value(static_cast<std::uint32_t>(x)))
            out.points.push_back(static_cast<std::uint32_t>(x));
    return out;
}

std::int64_t autocorrelation(const BooleanFunction& f, std::uint32_t a) {
    if (a >= f.domain_size())
        throw ParameterError("shift outside F_2^" + std::to_string(f.vars()));
    std::int64_t sum = 0;
    for (std::size_t x = 0; x < f.domain_size(); ++x) {
        bool same = f.value(static_cast<std::uint32_t>(x)) ==
                    f.value(static_cast<std::uint32_t>(x) ^ a);
        sum += same ? 1 : -1;
    }
    return sum;
}

namespace {

void require_domain(const EvaluationSet& V) {
    if (V.size() < 2)
        throw DegenerateCodeError("evaluation set needs at least 2 points to host a code");
}

Word evaluate_on(const BooleanFunction& f, const EvaluationSet& V) {
    Word w(V.size());
    for (std::size_t j = 0; j < V.points.size(); ++j)
        if (f.value(V.points[j])) w.set_bit(j, true);
    return w;
}

} // namespace

Code code_from_functions(const EvaluationSet& V, const std::vector<BooleanFunction>& S) {
    require_domain(V);
    if (S.size() < 2)
        throw ParameterError("need at least 2 functions, have " + std::to_string(S.size()));
    for (const BooleanFunction& f : S)
        if (f.vars() != V.m)
            throw DimensionError("function on " + std::to_string(f.vars()) +
                                 " variables evaluated on F_2^" + std::to_string(V.m));

    std::vector<Word> words;
    words.reserve(S.size());
    for (const BooleanFunction& f : S)
        words.push_back(evaluate_on(f, V));

    std::vector<std::size_t> order(words.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return words[a] < words[b]; });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (words[order[i - 1]] == words[order[i]]) {
            std::size_t a = std::min(order[i - 1], order[i]);
            std::size_t b = std::max(order[i - 1], order[i]);
            throw CollisionError("functions " + std::to_string(a) + " and " + std::to_string(b) +
                                 " agree on every point of the evaluation set");
        }
    }
    return Code(std::move(words));
}

namespace {

// sum over V of (-1)^f
std::int64_t character_sum(const BooleanFunction& f, const EvaluationSet& V) {
    std::int64_t s = 0;
    for (std::uint32_t p : V.points)
        s += f.value(p) ? -1 : 1;
    return s;
}

std::int64_t character_sum_xor(const BooleanFunction& f, const BooleanFunction& g,
                               const EvaluationSet& V) {
    std::int64_t s = 0;
    for (std::uint32_t p : V.points)
        s += (f.value(p) == g.value(p)) ? 1 : -1;
    return s;
}

} // namespace

Ratio delta_via_sums(const BooleanFunction& f, const BooleanFunction& g,
                     const EvaluationSet& V, const Ratio& r) {
    if (r < Ratio(1))
        throw ParameterError("metric parameter r must be >= 1, got " + r.str());
    if (f.vars() != V.m || g.vars() != V.m)
        throw DimensionError("function/evaluation-set variable mismatch");
    require_domain(V);
    const std::int64_t n = static_cast<std::int64_t>(V.size());
    const std::int64_t s_fg = character_sum_xor(f, g, V);
    if (s_fg == n)
        throw CollisionError("functions agree on every point of the evaluation set");
    const std::int64_t s_f = character_sum(f, V);
    const std::int64_t s_g = character_sum(g, V);
    Ratio quarter(BigInt(1), BigInt(4));
    return (r + Ratio(1)) * quarter * Ratio(BigInt(long(n - s_fg))) +
           (r - Ratio(1)) * quarter * Ratio(BigInt(long(s_g - s_f)));
}

Ratio restricted_min_discrepancy(const EvaluationSet& V, const std::vector<BooleanFunction>& S,
                                 const Ratio& r) {
    code_from_functions(V, S); // full validation, including collisions
    if (r < Ratio(1))
        throw ParameterError("metric parameter r must be >= 1, got " + r.str());

    std::vector<std::int64_t> sums(S.size());
    for (std::size_t i = 0; i < S.size(); ++i)
        sums[i] = character_sum(S[i], V);

    bool have = false;
    Ratio best;
    for (std::size_t i = 0; i < S.size(); ++i) {
        for (std::size_t j = 0; j < S.size(); ++j) {
            if (i == j || sums[j] > sums[i]) continue;
            Ratio v = delta_via_sums(S[i], S[j], V, r);
            if (!have || v < best) {
                best = v;
                have = true;
            }
        }
    }
    return best;
}

} // namespace cncode
