#include "pdcost/rational.hpp"

#include <stdexcept>

namespace pdcost {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    mpq_class v;
    if (v.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational '" + text + "' (expected p or p/q)");
    if (v.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    v.canonicalize();
    return Rational(v);
}

std::string Rational::str() const { return v_.get_str(); }

Rational operator/(const Rational& a, const Rational& b) {
    if (b == Rational(0)) throw std::invalid_argument("division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

}  // namespace pdcost
