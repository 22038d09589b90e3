#include "clusternet/rational.hpp"

#include <cctype>

#include "clusternet/errors.hpp"

namespace cnet {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_literal(std::string_view text) {
  throw StructuralError("invalid rational literal '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view body = trim(text);
  std::string_view s = body;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational value;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_literal(body);
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) bad_literal(body);
    value = Rational(n, d);
  } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto whole = s.substr(0, dot);
    const auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      bad_literal(body);
    }
    mpz_class n(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, frac.size());
    value = Rational(n, d);
  } else {
    if (!all_digits(s)) bad_literal(body);
    value = Rational(mpz_class(std::string(s), 10));
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_str(10);
}

}  // namespace cnet
