#include "odla/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace odla {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

std::string_view strip_sign(std::string_view s, bool& negative) {
  negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  return s;
}

}  // namespace

Scalar make_scalar(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  Scalar x(numerator, denominator);
  x.canonicalize();
  return x;
}

Scalar parse_rational(std::string_view text) {
  bool negative = false;
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Scalar x(negative ? mpz_class(-n) : n, d);
  x.canonicalize();
  return x;
}

Scalar parse_scalar(std::string_view text) {
  auto dot = text.find('.');
  if (dot == std::string_view::npos) {
    bool negative = false;
    std::string_view body = strip_sign(text, negative);
    Scalar x = parse_rational(body);
    return negative ? Scalar(-x) : x;
  }
  bool negative = false;
  std::string_view body = strip_sign(text, negative);
  dot = body.find('.');
  std::string_view whole = body.substr(0, dot);
  std::string_view frac = body.substr(dot + 1);
  if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
      (!frac.empty() && !all_digits(frac))) {
    throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
  }
  mpz_class den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  std::string digits = std::string(whole.empty() ? "0" : whole) + std::string(frac);
  Scalar x(mpz_class(digits, 10), den);
  x.canonicalize();
  return negative ? Scalar(-x) : x;
}

std::string to_string(const Scalar& x) { return x.get_str(10); }

}  // namespace odla
