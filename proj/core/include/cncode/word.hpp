#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cncode/errors.hpp"

namespace cncode {

/// A fixed-length binary word packed into 64-bit limbs, bit i of the word
/// stored at limb i/64, bit i%64. Unused tail bits are always zero; the
/// distance kernels rely on that.
class Word {
public:
    static constexpr std::size_t max_length = std::size_t(1) << 20;

    explicit Word(std::size_t n);

    /// Parses a string over {0,1}; anything else is a syntax error.
    static Word from_string(std::string_view bits);

    std::size_t length() const noexcept { return n_; }
    bool bit(std::size_t i) const { return (limbs_[i >> 6] >> (i & 63)) & 1u; }
    void set_bit(std::size_t i, bool v);

    const std::vector<std::uint64_t>& limbs() const noexcept { return limbs_; }

    bool all_zero() const noexcept;
    std::string to_string() const;

    friend bool operator==(const Word& a, const Word& b) {
        return a.n_ == b.n_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
    /// Lexicographic on (length, bits from position 0).
    friend bool operator<(const Word& a, const Word& b);

    friend Word operator^(const Word& a, const Word& b);

private:
    std::size_t n_;
    std::vector<std::uint64_t> limbs_;
};

/// Directed disagreement counts between two equal-length words:
/// d10 counts positions where y has 1 and x has 0, d01 the reverse.
struct DiscrepancyPair {
    std::uint32_t d10 = 0;
    std::uint32_t d01 = 0;

    friend bool operator==(const DiscrepancyPair&, const DiscrepancyPair&) = default;
};

DiscrepancyPair discrepancy_pair(const Word& y, const Word& x);
std::uint32_t hamming_distance(const Word& a, const Word& b);

/// A block code: K distinct words of common length n. Words are immutable
/// once the code is built.
class Code {
public:
    /// Throws DimensionError on ragged input, ParameterError on duplicates,
    /// DegenerateCodeError when words is empty.
    explicit Code(std::vector<Word> words);

    std::size_t length() const noexcept { return n_; }
    std::size_t size() const noexcept { return words_.size(); }
    const Word& word(std::size_t i) const { return words_[i]; }
    const std::vector<Word>& words() const noexcept { return words_; }

private:
    std::size_t n_;
    std::vector<Word> words_;
};

/// Reads the plain text code format: '#' starts a comment that runs to end
/// of line, every non-blank remaining line is one codeword over {0,1}.
Code read_code(std::istream& in);
Code read_code_file(const std::string& path);

/// Writes one codeword per line, no comments.
void write_code(std::ostream& out, const Code& code);
void write_code_file(const std::string& path, const Code& code);

} // namespace cncode
