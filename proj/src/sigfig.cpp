#include "tradebloc/sigfig.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace tradebloc {

namespace {

BigInt pow10(int power) {
  BigInt out(1);
  for (int i = 0; i < power; ++i) out *= 10;
  return out;
}

// floor(log10(num/den)) for positive num/den.
int decimal_exponent(const BigInt& num, const BigInt& den) {
  int e = static_cast<int>(num.str().size()) - static_cast<int>(den.str().size());
  auto at_least = [&](int p) {  // num/den >= 10^p
    return p >= 0 ? num >= den * pow10(p) : num * pow10(-p) >= den;
  };
  while (at_least(e + 1)) ++e;
  while (!at_least(e)) --e;
  return e;
}

std::string trim_zeros(std::string digits) {
  size_t last = digits.find_last_not_of('0');
  digits.erase(last == std::string::npos ? 0 : last + 1);
  return digits;
}

std::string render(const std::string& digits, int exponent, int sigfigs) {
  const int k = static_cast<int>(digits.size());
  if (exponent >= -4 && exponent < sigfigs) {
    if (exponent >= k - 1) {
      return digits + std::string(static_cast<size_t>(exponent - k + 1), '0');
    }
    if (exponent >= 0) {
      std::string frac = trim_zeros(digits.substr(static_cast<size_t>(exponent) + 1));
      std::string out = digits.substr(0, static_cast<size_t>(exponent) + 1);
      if (!frac.empty()) out += "." + frac;
      return out;
    }
    std::string frac = trim_zeros(std::string(static_cast<size_t>(-exponent - 1), '0') + digits);
    return "0." + frac;
  }
  std::string mantissa = trim_zeros(digits.substr(1));
  std::string out(1, digits[0]);
  if (!mantissa.empty()) out += "." + mantissa;
  int abs_exp = exponent < 0 ? -exponent : exponent;
  std::string exp_digits = std::to_string(abs_exp);
  if (exp_digits.size() < 2) exp_digits.insert(0, "0");
  return out + "e" + (exponent < 0 ? "-" : "+") + exp_digits;
}

}  // namespace

std::string format_sigfigs(const Rational& value, int sigfigs) {
  if (sigfigs < 1) sigfigs = 1;
  if (value == 0) return "0";
  if (value < 0) return "-" + format_sigfigs(Rational(-value), sigfigs);

  BigInt num = boost::multiprecision::numerator(value);
  BigInt den = boost::multiprecision::denominator(value);
  int exponent = decimal_exponent(num, den);

  // Round value / 10^(exponent - sigfigs + 1) to an integer, ties to even.
  int shift = sigfigs - 1 - exponent;
  if (shift >= 0) {
    num *= pow10(shift);
  } else {
    den *= pow10(-shift);
  }
  BigInt quotient = num / den;
  BigInt remainder = num % den;
  BigInt twice = remainder * 2;
  if (twice > den || (twice == den && (quotient % 2) != 0)) ++quotient;
  if (quotient == pow10(sigfigs)) {
    quotient = pow10(sigfigs - 1);
    ++exponent;
  }
  return render(quotient.str(), exponent, sigfigs);
}

std::string format_sigfigs(double value, int sigfigs) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  // Doubles convert to rationals exactly, so both backends share one rounding path.
  return format_sigfigs(Rational(value), sigfigs);
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  size_t slash = text.find('/');
  if (slash != std::string::npos) {
    Rational num = parse_rational(text.substr(0, slash));
    Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return num / den;
  }
  size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  BigInt mantissa(0);
  int frac_digits = 0;
  bool seen_digit = false;
  bool seen_dot = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa = mantissa * 10 + (c - '0');
      if (seen_dot) ++frac_digits;
      seen_digit = true;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if ((c == 'e' || c == 'E') && seen_digit) {
      break;
    } else {
      throw std::invalid_argument("bad number '" + text + "'");
    }
  }
  int exponent = 0;
  if (pos < text.size()) {  // exponent part
    std::string tail = text.substr(pos + 1);
    if (tail.empty()) throw std::invalid_argument("bad number '" + text + "'");
    size_t k = 0;
    bool exp_neg = false;
    if (tail[k] == '+' || tail[k] == '-') {
      exp_neg = tail[k] == '-';
      ++k;
    }
    if (k == tail.size()) throw std::invalid_argument("bad number '" + text + "'");
    for (; k < tail.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(tail[k]))) {
        throw std::invalid_argument("bad number '" + text + "'");
      }
      exponent = exponent * 10 + (tail[k] - '0');
      if (exponent > 1000) throw std::invalid_argument("exponent too large in '" + text + "'");
    }
    if (exp_neg) exponent = -exponent;
  }
  if (!seen_digit) throw std::invalid_argument("bad number '" + text + "'");
  Rational out(mantissa, pow10(frac_digits));
  int net = exponent;
  if (net > 0) out *= Rational(pow10(net));
  if (net < 0) out /= Rational(pow10(-net));
  return negative ? Rational(-out) : out;
}

}  // namespace tradebloc
