#include "milrec/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace milrec {

namespace {

bool valid_integer_token(std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!valid_integer_token(num, /*allow_sign=*/true) || !valid_integer_token(den, /*allow_sign=*/false)) {
        throw std::invalid_argument("bad rational literal: \"" + std::string(text) + "\"");
    }
    mpq_class q{mpz_class(std::string(num)), mpz_class(std::string(den))};
    if (q.get_den() == 0) {
        throw std::invalid_argument("bad rational literal: \"" + std::string(text) + "\" (zero denominator)");
    }
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::str() const {
    return v_.get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(unsigned e) const {
    Rational acc(1);
    Rational base = *this;
    while (e > 0) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_;
}

}  // namespace milrec
