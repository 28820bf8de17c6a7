#include "eh/rational.hpp"

namespace eh {

std::string to_fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_fraction(std::string_view text) {
    auto bad = [&] {
        return ParameterError("bad fraction '" + std::string(text) + "', expected p/q or integer");
    };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(BigInt(std::string(text)));
        BigInt p{std::string(text.substr(0, slash))};
        BigInt q{std::string(text.substr(slash + 1))};
        if (q == 0) throw ParameterError("zero denominator in '" + std::string(text) + "'");
        return Rational(p, q);
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

}  // namespace eh
