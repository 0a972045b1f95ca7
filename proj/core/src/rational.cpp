#include "magcat/rational.hpp"

#include <cctype>

#include "magcat/errors.hpp"

namespace magcat {

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Rational r(s);
            r.canonicalize();
            return r;
        }
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (num.empty() || den.empty())
            throw ParseError("malformed rational '" + text + "'");
        Integer n(num), d(den);
        if (d == 0) throw ParseError("zero denominator in '" + text + "'");
        Rational r(n, d);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational '" + text + "'");
    }
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Integer floor_div(const Rational& a, const Rational& b) {
    if (b <= 0) throw UsageError("floor_div requires a positive divisor");
    Integer num = a.get_num() * b.get_den();
    Integer den = a.get_den() * b.get_num();
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

}  // namespace magcat
