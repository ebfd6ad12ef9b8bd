#pragma once

#include <stdexcept>
#include <string>

namespace pftau {

/// Pfaffian or Hafnian requested for an odd-dimensional matrix.
class OddDimensionError : public std::invalid_argument {
public:
    explicit OddDimensionError(const std::string& what)
        : std::invalid_argument(what) {}
};

/// A Pochhammer factor (or a ratio built from one) vanished where a division
/// was required, e.g. a nonpositive-integer parameter hitting a term of a
/// hypergeometric series.
class PoleError : public std::domain_error {
public:
    explicit PoleError(const std::string& what)
        : std::domain_error(what) {}
};

/// Malformed textual input (partition lists, time vectors, rationals).
class ParseError : public std::invalid_argument {
public:
    explicit ParseError(const std::string& what)
        : std::invalid_argument(what) {}
};

} // namespace pftau
