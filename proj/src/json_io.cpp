#include "ncgap/common.hpp"

#include <cctype>
#include <cmath>
#include <limits>

namespace ncgap {

namespace {

Json bigint_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max()) {
        return Json(v.convert_to<std::int64_t>());
    }
    return Json(v.str());
}

BigInt bigint_from_json(const Json& j) {
    if (j.is_string()) return BigInt(j.get<std::string>());
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
    throw std::invalid_argument("expected integer or decimal string");
}

}  // namespace

Json rational_to_json(const Rational& r) {
    Json j;
    j["num"] = bigint_to_json(numerator(r));
    j["den"] = bigint_to_json(denominator(r));
    return j;
}

Rational rational_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw std::invalid_argument("rational json must have num and den");
    return Rational(bigint_from_json(j["num"]), bigint_from_json(j["den"]));
}

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    const double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
    const std::int64_t scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
    exp -= 53;
    Rational r(scaled);
    if (exp >= 0) {
        r *= Rational(BigInt(1) << exp);
    } else {
        r /= Rational(BigInt(1) << (-exp));
    }
    return r;
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    }
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        const std::size_t frac_digits = text.size() - dot - 1;
        if (frac_digits == 0) return Rational(BigInt(text.substr(0, dot)));
        BigInt den = 1;
        for (std::size_t i = 0; i < frac_digits; ++i) den *= 10;
        return Rational(BigInt(digits), den);
    }
    return Rational(BigInt(text));
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string rational_str(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace ncgap
