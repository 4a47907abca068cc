#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace vitali {

/// Exact rational. Expression templates are off so `auto` behaves like a value.
using Scalar = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                             boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

Scalar make_scalar(std::int64_t num, std::int64_t den = 1);

/// Parses "p/q", an integer, or a finite decimal ("-1.25", "3e-2") into an
/// exact rational. Throws std::invalid_argument on anything else.
Scalar parse_scalar(std::string_view text);

/// Canonical "p/q" (or "p" when q == 1).
std::string to_string(const Scalar& x);

/// Decimal rendering with `digits` digits after the point (rounded half away
/// from zero).
std::string to_decimal(const Scalar& x, int digits = 12);

/// x^e for any integer e; x must be nonzero when e < 0.
Scalar pow_int(const Scalar& x, long e);

double to_double(const Scalar& x);

}  // namespace vitali
