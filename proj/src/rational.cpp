#include "isix/rational.hpp"

namespace isix {

std::string fraction_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

std::string decimal_string(const Rational& r, int digits) {
    BigInt num = numerator(r);
    BigInt den = denominator(r);
    std::string out;
    if (num < 0) {
        out += "-";
        num = -num;
    }
    BigInt whole = num / den;
    BigInt rem = num % den;
    out += whole.str();
    if (rem == 0) return out;
    std::string frac;
    for (int k = 0; k < digits && rem != 0; ++k) {
        rem *= 10;
        frac += static_cast<char>('0' + static_cast<int>(rem / den));
        rem %= den;
    }
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
    return out;
}

}  // namespace isix
