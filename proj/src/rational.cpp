#include "bjsp/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace bjsp {

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("not a rational: " + text);
    }
}

std::string rational_to_string(const Rational& r) {
    std::ostringstream out;
    out << numerator(r);
    if (denominator(r) != 1) out << "/" << denominator(r);
    return out.str();
}

std::string rational_to_decimal(const Rational& r) {
    BigInt num = numerator(r);
    BigInt den = denominator(r);
    bool negative = num < 0;
    if (negative) num = -num;

    // scale the denominator to a power of ten when it is of the form 2^a 5^b
    BigInt d = den;
    int twos = 0, fives = 0;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    std::string digits;
    int shift;
    if (d == 1) {
        shift = std::max(twos, fives);
        BigInt scaled = num;
        for (int i = twos; i < shift; ++i) scaled *= 2;
        for (int i = fives; i < shift; ++i) scaled *= 5;
        digits = scaled.str();
    } else {
        shift = 17;
        BigInt scaled = num;
        for (int i = 0; i < shift; ++i) scaled *= 10;
        // round half away from zero
        digits = BigInt((2 * scaled + den) / (2 * den)).str();
    }

    if (static_cast<int>(digits.size()) <= shift)
        digits.insert(0, shift + 1 - digits.size(), '0');
    std::string out = digits.substr(0, digits.size() - shift);
    if (shift > 0) {
        std::string frac = digits.substr(digits.size() - shift);
        while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
        if (!(frac == "0")) out += "." + frac;
    }
    if (negative && out != "0") out.insert(out.begin(), '-');
    return out;
}

}  // namespace bjsp
