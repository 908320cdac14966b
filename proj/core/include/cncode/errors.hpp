#pragma once

#include <stdexcept>
#include <string>

namespace cncode {

/// Mismatched dimensions: word lengths, variable counts, field degrees.
class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Out-of-domain parameter: r < 1, invalid channel probabilities, bad modulus, ...
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// Operation needs a code with at least two codewords (or a nonempty one).
class DegenerateCodeError : public std::domain_error {
public:
    explicit DegenerateCodeError(const std::string& what) : std::domain_error(what) {}
};

/// Two functions collapse to the same codeword on the evaluation set.
class CollisionError : public std::domain_error {
public:
    explicit CollisionError(const std::string& what) : std::domain_error(what) {}
};

/// Work or memory estimate exceeds the configured budget.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input; carries a 0-based character position.
class SyntaxError : public std::invalid_argument {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace cncode
