#include "relcore/rational.hpp"

#include <cctype>
#include <ostream>

#include "relcore/errors.hpp"

namespace relcore {

Rational::Rational(long long num, long long den) {
  if (den == 0) throw argument_error("rational with zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rational::Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

Rational Rational::operator/(const Rational& o) const {
  if (o.value_ == 0) throw argument_error("division of rational by zero");
  return Rational(mpq_class(value_ / o.value_));
}

Rational Rational::parse(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw parse_error("empty numeric literal");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    mpz_class n, d;
    if (num.empty() || den.empty() || n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0 || d == 0)
      throw parse_error("invalid fraction literal: " + text);
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
  }

  bool negative = false;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') {
    negative = s[i] == '-';
    ++i;
  }
  std::string int_part, frac_part;
  bool seen_dot = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '.') {
      if (seen_dot) throw parse_error("invalid numeric literal: " + text);
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      (seen_dot ? frac_part : int_part).push_back(c);
    } else {
      throw parse_error("invalid numeric literal: " + text);
    }
  }
  if (int_part.empty() && frac_part.empty()) throw parse_error("invalid numeric literal: " + text);

  mpz_class num(int_part.empty() ? std::string("0") : int_part);
  mpz_class den(1);
  for (char c : frac_part) {
    num *= 10;
    num += c - '0';
    den *= 10;
  }
  if (negative) num = -num;
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(q);
}

std::string Rational::to_string() const {
  return value_.get_str();
}

std::string Rational::to_fraction_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

Rational make_ratio(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw argument_error("ratio with zero denominator");
  mpz_class n, d;
  mpz_import(n.get_mpz_t(), 1, -1, sizeof(num), 0, 0, &num);
  mpz_import(d.get_mpz_t(), 1, -1, sizeof(den), 0, 0, &den);
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(q);
}

}  // namespace relcore
