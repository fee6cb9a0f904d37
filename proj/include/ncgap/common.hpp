#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

namespace ncgap {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Json = nlohmann::ordered_json;

// Thrown when a computation would exceed a documented size cap. The CLI maps
// this to its own exit code so callers can distinguish guards from failures.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Rationals serialize as {"num":..., "den":...}; values that do not fit in a
// 64-bit integer are emitted as decimal strings.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// Exact conversion (every finite double is a dyadic rational).
Rational rational_from_double(double x);

// Parses "3", "-5/8" or "0.125" exactly.
Rational parse_rational(const std::string& text);

double to_double(const Rational& r);
std::string rational_str(const Rational& r);

}  // namespace ncgap
