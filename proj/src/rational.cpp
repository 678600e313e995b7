#include "pcmax/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace pcmax {

Rational::Rational(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  // cpp_rational rejects negative denominators.
  value_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty rational component");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("bad rational: " + std::string(text));
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw std::invalid_argument("bad rational: " + std::string(text));
      }
    }
    return Int(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text), Int(1));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational::Int Rational::numerator() const {
  return boost::multiprecision::numerator(value_);
}

Rational::Int Rational::denominator() const {
  return boost::multiprecision::denominator(value_);
}

double Rational::to_double() const { return value_.convert_to<double>(); }

std::string Rational::to_string() const {
  Int den = denominator();
  if (den == 1) return numerator().str();
  return numerator().str() + "/" + den.str();
}

Rational Rational::floor() const {
  Int num = numerator();
  Int den = denominator();
  Int q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return Rational(q, Int(1));
}

Rational Rational::ceil() const { return -(-*this).floor(); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  return Rational(denominator(), numerator());
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace pcmax
