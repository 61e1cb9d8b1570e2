#include "vecdil/rational.hpp"

namespace vecdil {

Rational parse_rational(const std::string& text) {
    try {
        auto slash = text.find('/');
        if (slash == std::string::npos)
            return Rational(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den <= 0)
            fail(errc::parse_error, "parse_rational: denominator must be positive");
        return Rational(num) / Rational(den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail(errc::parse_error, "parse_rational: malformed fraction '" + text + "'");
    }
}

} // namespace vecdil
