#ifndef BRAUERLAB_RATIONAL_HPP
#define BRAUERLAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace brauerlab {

// Exact arbitrary-precision rationals. cpp_rational keeps the canonical
// reduced form (coprime numerator/denominator, denominator > 0), which is
// the invariant every equality test in this project relies on. No floating
// point anywhere in the core.
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& r) { return r.str(); }

// Accepts "p", "-p", "p/q" with optional leading sign on p.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("bad rational literal '" + text + "': " + e.what());
    }
}

inline long long to_long_checked(const Integer& v) {
    if (v > (std::numeric_limits<long long>::max)() || v < (std::numeric_limits<long long>::min)())
        throw std::overflow_error("integer too large for long long");
    return static_cast<long long>(v);
}

} // namespace brauerlab

#endif
