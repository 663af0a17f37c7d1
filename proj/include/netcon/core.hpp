// Basic shared types: error hierarchy, exact rational weights, state ids.
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace netcon {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad CLI flags / unknown protocol names. Maps to exit code 2.
class UsageError : public Error {
public:
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line(line) {}
    int line;
};

using StateId = std::uint16_t;

// Exact rational in lowest terms; denominators stay small (rule weights).
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    constexpr Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw Error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    static Rational one() { return Rational{1, 1}; }

    Rational operator+(const Rational& o) const {
        return Rational{num * o.den + o.num * den, den * o.den};
    }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace netcon
