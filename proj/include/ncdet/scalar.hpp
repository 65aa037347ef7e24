#pragma once

// Base field backends. Every algorithm in the library is a template over a
// field type F for which scalar_traits<F> is specialized:
//   Rational  exact arbitrary-precision rationals (GMP), the default
//   Float64   binary floating point, tolerant comparisons

#include <gmpxx.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <concepts>
#include <string>
#include <string_view>

#include "ncdet/error.hpp"

namespace ncdet {

using Rational = mpq_class;
using Float64 = double;

template <class F>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr std::string_view name = "rational";
  static constexpr bool exact = true;

  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_int(long v) { return Rational(v); }

  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static bool equal(const Rational& x, const Rational& y) { return x == y; }
  static int sign(const Rational& x) { return sgn(x); }
  static Rational abs(const Rational& x) { return ::abs(x); }

  /// Accepts "p" or "p/q" with an optional leading minus; q must be nonzero.
  static Rational parse(std::string_view text) {
    std::string s(text);
    if (s.empty())
      throw parse_error("empty rational");
    std::size_t pos = (s[0] == '-') ? 1 : 0;
    bool seen_slash = false;
    std::size_t digits = 0;
    for (std::size_t k = pos; k < s.size(); ++k) {
      char c = s[k];
      if (c == '/' && !seen_slash && digits > 0) {
        seen_slash = true;
        digits = 0;
      } else if (c >= '0' && c <= '9') {
        ++digits;
      } else {
        throw parse_error("malformed rational '" + s + "'");
      }
    }
    if (digits == 0)
      throw parse_error("malformed rational '" + s + "'");
    Rational r;
    if (r.set_str(s, 10) != 0)
      throw parse_error("malformed rational '" + s + "'");
    if (sgn(r.get_den()) == 0)
      throw parse_error("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
  }

  /// Lowest terms, "p" when the denominator is one.
  static std::string format(const Rational& x) { return x.get_str(10); }
};

template <>
struct scalar_traits<Float64> {
  static constexpr std::string_view name = "float64";
  static constexpr bool exact = false;
  static constexpr double tolerance = 1e-9;

  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double from_int(long v) { return static_cast<double>(v); }

  static bool is_zero(double x) { return std::abs(x) <= tolerance; }
  /// |x - y| <= 1e-9 * (1 + max(|x|, |y|))
  static bool equal(double x, double y) {
    return std::abs(x - y) <= tolerance * (1.0 + std::max(std::abs(x), std::abs(y)));
  }
  static int sign(double x) { return is_zero(x) ? 0 : (x < 0 ? -1 : 1); }
  static double abs(double x) { return std::abs(x); }

  /// Decimal or "p/q" notation.
  static double parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
      double num = parse_plain(text.substr(0, slash));
      double den = parse_plain(text.substr(slash + 1));
      if (den == 0.0)
        throw parse_error("zero denominator in '" + std::string(text) + "'");
      return num / den;
    }
    return parse_plain(text);
  }

  /// Shortest representation that round-trips.
  static std::string format(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
  }

private:
  static double parse_plain(std::string_view text) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (text.empty() || ec != std::errc() || ptr != last || !std::isfinite(v))
      throw parse_error("malformed float '" + std::string(text) + "'");
    return v;
  }
};

template <class F>
concept Field = requires { scalar_traits<F>::exact; };

} // namespace ncdet
