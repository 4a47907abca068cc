#include "vitali/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace vitali {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer pow10(long e) {
  Integer r = 1;
  for (long i = 0; i < e; ++i) r *= 10;
  return r;
}

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("not an exact scalar: '" + std::string(text) + "'");
}

}  // namespace

Scalar make_scalar(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Scalar(Integer(num), Integer(den));
}

Scalar parse_scalar(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad(text);

  bool negative = false;
  std::string_view body = s;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Scalar value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    Integer q{std::string(den)};
    if (q == 0) bad(text);
    value = Scalar(Integer(std::string(num)), q);
  } else {
    long exponent = 0;
    if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
      auto exp_text = body.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) bad(text);
      exponent = std::stol(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
      body = body.substr(0, e);
    }
    std::string_view int_part = body;
    std::string_view frac_part;
    if (auto dot = body.find('.'); dot != std::string_view::npos) {
      int_part = body.substr(0, dot);
      frac_part = body.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) bad(text);
    if (!int_part.empty() && !all_digits(int_part)) bad(text);
    if (!frac_part.empty() && !all_digits(frac_part)) bad(text);
    std::string digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
    Integer mantissa(digits);
    value = exponent >= 0 ? Scalar(mantissa * pow10(exponent))
                          : Scalar(mantissa, pow10(-exponent));
  }
  return negative ? Scalar(-value) : value;
}

std::string to_string(const Scalar& x) {
  auto num = boost::multiprecision::numerator(x);
  auto den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal(const Scalar& x, int digits) {
  if (digits < 0) digits = 0;
  Integer num = boost::multiprecision::numerator(x);
  Integer den = boost::multiprecision::denominator(x);
  bool negative = num < 0;
  if (negative) num = -num;
  Integer scale = pow10(digits);
  Integer scaled = (num * scale * 2 + den) / (den * 2);
  std::string s = scaled.str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits))
      s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (negative && scaled != 0) s.insert(0, "-");
  return s;
}

Scalar pow_int(const Scalar& x, long e) {
  if (e < 0) {
    if (x == 0) throw std::invalid_argument("pow_int: zero to a negative power");
    return pow_int(Scalar(1) / x, -e);
  }
  Scalar result = 1;
  Scalar base = x;
  auto n = static_cast<unsigned long>(e);
  while (n != 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n != 0) base *= base;
  }
  return result;
}

double to_double(const Scalar& x) { return x.convert_to<double>(); }

}  // namespace vitali
