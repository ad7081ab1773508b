#include "angleset/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace angleset {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

Rational parse_decimal(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }

  long exponent = 0;
  if (auto epos = rest.find_first_of("eE"); epos != std::string_view::npos) {
    std::string expstr(rest.substr(epos + 1));
    rest = rest.substr(0, epos);
    if (expstr.empty()) throw std::invalid_argument("empty exponent in decimal: '" + std::string(text) + "'");
    std::string digits = expstr;
    if (digits.front() == '+' || digits.front() == '-') digits.erase(0, 1);
    if (!all_digits(digits)) throw std::invalid_argument("bad exponent in decimal: '" + std::string(text) + "'");
    exponent = std::strtol(expstr.c_str(), nullptr, 10);
  }

  std::string int_part, frac_part;
  if (auto dot = rest.find('.'); dot != std::string_view::npos) {
    int_part.assign(rest.substr(0, dot));
    frac_part.assign(rest.substr(dot + 1));
  } else {
    int_part.assign(rest);
  }
  if (int_part.empty() && frac_part.empty())
    throw std::invalid_argument("no digits in decimal: '" + std::string(text) + "'");
  if (!int_part.empty() && !all_digits(int_part))
    throw std::invalid_argument("bad digits in decimal: '" + std::string(text) + "'");
  if (!frac_part.empty() && !all_digits(frac_part))
    throw std::invalid_argument("bad digits in decimal: '" + std::string(text) + "'");

  BigInt mantissa(int_part.empty() ? "0" : int_part);
  for (char ch : frac_part) {
    mantissa *= 10;
    mantissa += ch - '0';
  }
  if (negative) mantissa = -mantissa;

  long shift = exponent - static_cast<long>(frac_part.size());
  Rational q(mantissa);
  BigInt pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  if (shift >= 0)
    q *= Rational(pow10);
  else
    q /= Rational(pow10);
  q.canonicalize();
  return q;
}

bool has_finite_decimal(const Rational& q_in) {
  Rational q = q_in;
  q.canonicalize();
  BigInt den = q.get_den();
  for (unsigned base : {2u, 5u}) {
    while (mpz_divisible_ui_p(den.get_mpz_t(), base)) mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), base);
  }
  return den == 1;
}

std::string format_decimal_exact(const Rational& q_in) {
  Rational q = q_in;
  q.canonicalize();
  if (!has_finite_decimal(q)) throw std::domain_error("rational " + format_fraction(q) + " has no finite decimal form");
  BigInt num = q.get_num(), den = q.get_den();
  // Scale the denominator up to a power of ten.
  unsigned long twos = 0, fives = 0;
  BigInt d = den;
  while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) { mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 2); ++twos; }
  while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) { mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 5); ++fives; }
  unsigned long digits = twos > fives ? twos : fives;
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  BigInt scaled = num * (scale / den);  // exact: den | 10^digits

  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string body = scaled.get_str();
  std::string out = negative ? "-" : "";
  if (digits == 0) return out + body;
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  body.insert(body.size() - digits, ".");
  return out + body;
}

std::string format_fraction(const Rational& q_in) {
  Rational q = q_in;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_double(double x) {
  Rational q;
  mpq_set_d(q.get_mpq_t(), x);
  q.canonicalize();
  return q;
}

std::int64_t ceil_to_int64(const Rational& q) {
  BigInt result;
  mpz_cdiv_q(result.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  if (!result.fits_slong_p()) throw std::overflow_error("ceiling does not fit int64");
  return result.get_si();
}

std::int64_t round_half_away_to_int64(const Rational& q) {
  // floor(q + 1/2) for q >= 0, symmetric for q < 0.
  Rational shifted;
  if (q >= 0)
    shifted = q + Rational(1, 2);
  else
    shifted = q - Rational(1, 2);
  BigInt result;
  if (q >= 0)
    mpz_fdiv_q(result.get_mpz_t(), shifted.get_num().get_mpz_t(), shifted.get_den().get_mpz_t());
  else
    mpz_cdiv_q(result.get_mpz_t(), shifted.get_num().get_mpz_t(), shifted.get_den().get_mpz_t());
  if (!result.fits_slong_p()) throw std::overflow_error("rounding does not fit int64");
  return result.get_si();
}

}  // namespace angleset
