#include "cncode/word.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <numeric>
#include <sstream>

namespace cncode {

Word::Word(std::size_t n) : n_(n) {
    if (n == 0)
        throw DimensionError("word length must be positive");
    if (n > max_length)
        throw DimensionError("word length " + std::to_string(n) + " exceeds maximum " +
                             std::to_string(max_length));
    limbs_.assign((n + 63) / 64, 0);
}

Word Word::from_string(std::string_view bits) {
    if (bits.empty())
        throw SyntaxError("empty codeword", 0);
    Word w(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            w.limbs_[i >> 6] |= std::uint64_t(1) << (i & 63);
        else if (bits[i] != '0')
            throw SyntaxError(std::string("invalid character '") + bits[i] + "' in codeword", i);
    }
    return w;
}

void Word::set_bit(std::size_t i, bool v) {
    if (i >= n_)
        throw DimensionError("bit index out of range");
    std::uint64_t mask = std::uint64_t(1) << (i & 63);
    if (v)
        limbs_[i >> 6] |= mask;
    else
        limbs_[i >> 6] &= ~mask;
}

bool Word::all_zero() const noexcept {
    for (std::uint64_t l : limbs_)
        if (l) return false;
    return true;
}

std::string Word::to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if (bit(i)) s[i] = '1';
    return s;
}

bool operator<(const Word& a, const Word& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        if (a.limbs_[i] == b.limbs_[i]) continue;
        // First differing bit decides; limbs store bit 0 in the LSB.
        std::uint64_t diff = a.limbs_[i] ^ b.limbs_[i];
        std::uint64_t low = diff & (~diff + 1);
        return (a.limbs_[i] & low) == 0;
    }
    return false;
}

Word operator^(const Word& a, const Word& b) {
    if (a.n_ != b.n_)
        throw DimensionError("length mismatch in word xor");
    Word out(a.n_);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i)
        out.limbs_[i] = a.limbs_[i] ^ b.limbs_[i];
    return out;
}

DiscrepancyPair discrepancy_pair(const Word& y, const Word& x) {
    if (y.length() != x.length())
        throw DimensionError("length mismatch: " + std::to_string(y.length()) + " vs " +
                             std::to_string(x.length()));
    DiscrepancyPair out;
    const auto& ly = y.limbs();
    const auto& lx = x.limbs();
    for (std::size_t i = 0; i < ly.size(); ++i) {
        out.d10 += static_cast<std::uint32_t>(std::popcount(ly[i] & ~lx[i]));
        out.d01 += static_cast<std::uint32_t>(std::popcount(~ly[i] & lx[i]));
    }
    return out;
}

std::uint32_t hamming_distance(const Word& a, const Word& b) {
    if (a.length() != b.length())
        throw DimensionError("length mismatch: " + std::to_string(a.length()) + " vs " +
                             std::to_string(b.length()));
    std::uint32_t d = 0;
    const auto& la = a.limbs();
    const auto& lb = b.limbs();
    for (std::size_t i = 0; i < la.size(); ++i)
        d += static_cast<std::uint32_t>(std::popcount(la[i] ^ lb[i]));
    return d;
}

Code::Code(std::vector<Word> words) : words_(std::move(words)) {
    if (words_.empty())
        throw DegenerateCodeError("code with no codewords");
    n_ = words_[0].length();
    for (const Word& w : words_)
        if (w.length() != n_)
            throw DimensionError("codewords of mixed lengths " + std::to_string(n_) + " and " +
                                 std::to_string(w.length()));
    std::vector<std::size_t> order(words_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return words_[a] < words_[b]; });
    for (std::size_t i = 1; i < order.size(); ++i)
        if (words_[order[i - 1]] == words_[order[i]])
            throw ParameterError("duplicate codeword at indices " +
                                 std::to_string(std::min(order[i - 1], order[i])) + " and " +
                                 std::to_string(std::max(order[i - 1], order[i])));
}

Code read_code(std::istream& in) {
    std::vector<Word> words;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
            line.pop_back();
        std::size_t start = 0;
        while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start])))
            ++start;
        if (start == line.size()) continue;
        words.push_back(Word::from_string(std::string_view(line).substr(start)));
    }
    return Code(std::move(words));
}

Code read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParameterError("cannot open '" + path + "'");
    return read_code(in);
}

void write_code(std::ostream& out, const Code& code) {
    for (const Word& w : code.words())
        out << w.to_string() << '\n';
}

void write_code_file(const std::string& path, const Code& code) {
    std::ofstream out(path);
    if (!out)
        throw ParameterError("cannot open '" + path + "' for writing");
    write_code(out, code);
}

} // namespace cncode
