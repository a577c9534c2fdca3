#include "kblocked/rational.hpp"

#include <cctype>
#include <functional>
#include <stdexcept>

namespace kblocked {

namespace {

bool valid_integer_text(std::string_view s)
{
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s)
{
    if (!valid_integer_text(s))
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return mpz_class(digits, 10);
}

} // namespace

Rational::Rational(long numerator, long denominator)
    : Rational(mpz_class(numerator), mpz_class(denominator))
{
}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator)
{
    if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value)
{
    if (value_.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text), mpz_class(1));
    mpz_class num = parse_integer(text.substr(0, slash));
    auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw std::invalid_argument("signed denominator in '" + std::string(text) + "'");
    return Rational(num, parse_integer(den_text));
}

std::string Rational::to_string() const
{
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o)
{
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.value_ == 0) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::operator-() const
{
    Rational r;
    r.value_ = -value_;
    return r;
}

std::size_t Rational::hash() const
{
    // mpq arithmetic keeps values canonical, so hashing the limbs is structural.
    auto mix = [](std::size_t seed, const mpz_class& z) {
        const mpz_srcptr p = z.get_mpz_t();
        std::size_t h = std::hash<int>{}(p->_mp_size);
        int n = p->_mp_size < 0 ? -p->_mp_size : p->_mp_size;
        for (int i = 0; i < n; ++i)
            h ^= std::hash<mp_limb_t>{}(p->_mp_d[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return seed ^ (h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
    };
    return mix(mix(0, value_.get_num()), value_.get_den());
}

} // namespace kblocked
