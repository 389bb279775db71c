#include "polyvar/rational.hpp"

#include <cctype>

namespace polyvar {

Rational Rational::from_string(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw ParseError("empty rational literal");
    auto slash = t.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(t));
        Int num(t.substr(0, slash));
        Int den(t.substr(slash + 1));
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal: " + s);
    }
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    mpz_class pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), v_.get_num().get_mpz_t(), k);
    mpz_pow_ui(pd.get_mpz_t(), v_.get_den().get_mpz_t(), k);
    Rational r(pn, pd);
    return invert ? r.inv() : r;
}

std::string Rational::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace polyvar
