#include "alloclab/fraction.hpp"

#include <cctype>
#include <utility>

namespace alloclab {

namespace {

constexpr int kMaxDecimalDigits = 18;

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Fraction::Fraction(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("fraction denominator must be nonzero");
  // Keep the stored denominator positive regardless of input signs.
  if (den < 0) {
    v_ = BigRat(-num, -den);
  } else {
    v_ = BigRat(num, den);
  }
}

Fraction operator/(const Fraction& a, const Fraction& b) {
  if (b.is_zero()) throw DomainError("division by zero fraction");
  return Fraction(a.v_ / b.v_);
}

Fraction& Fraction::operator/=(const Fraction& o) {
  if (o.is_zero()) throw DomainError("division by zero fraction");
  v_ /= o.v_;
  return *this;
}

Fraction Fraction::parse(const std::string& text) {
  std::string s = text;
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = (s[0] == '-');
    s = s.substr(1);
  }
  if (s.empty()) throw DomainError("cannot parse fraction from '" + text + "'");

  auto slash = s.find('/');
  auto dot = s.find('.');
  Fraction out;
  if (slash != std::string::npos) {
    std::string a = s.substr(0, slash);
    std::string b = s.substr(slash + 1);
    if (!all_digits(a) || !all_digits(b)) {
      throw DomainError("cannot parse fraction from '" + text + "'");
    }
    BigInt num(a), den(b);
    if (den == 0) throw DomainError("fraction denominator must be nonzero in '" + text + "'");
    out = Fraction(num, den);
  } else if (dot != std::string::npos) {
    std::string ipart = s.substr(0, dot);
    std::string fpart = s.substr(dot + 1);
    if (ipart.empty()) ipart = "0";
    if (fpart.empty()) fpart = "0";
    if (!all_digits(ipart) || !all_digits(fpart)) {
      throw DomainError("cannot parse fraction from '" + text + "'");
    }
    if (fpart.size() > kMaxDecimalDigits) {
      throw DomainError("decimal literal '" + text + "' has more than 18 fractional digits");
    }
    BigInt num = BigInt(ipart) * ipow(10, static_cast<std::int64_t>(fpart.size())) + BigInt(fpart);
    out = Fraction(num, ipow(10, static_cast<std::int64_t>(fpart.size())));
  } else {
    if (!all_digits(s)) throw DomainError("cannot parse fraction from '" + text + "'");
    out = Fraction(BigInt(s), 1);
  }
  return neg ? -out : out;
}

BigInt Fraction::floor() const {
  BigInt q = num() / den();
  if (num() < 0 && q * den() != num()) --q;
  return q;
}

BigInt Fraction::ceil() const {
  BigInt q = num() / den();
  if (num() > 0 && q * den() != num()) ++q;
  return q;
}

Fraction Fraction::pow(std::int64_t e) const {
  if (e == 0) return Fraction(1);
  if (e < 0) {
    if (is_zero()) throw DomainError("zero cannot be raised to a negative power");
    return Fraction(ipow(den(), -e), ipow(num(), -e));
  }
  return Fraction(ipow(num(), e), ipow(den(), e));
}

std::string Fraction::str() const {
  if (is_integer()) return num().str();
  return num().str() + "/" + den().str();
}

std::string Fraction::decimal(int places) const {
  if (places < 0) throw DomainError("decimal places must be nonnegative");
  BigInt a = boost::multiprecision::abs(num());
  BigInt b = den();
  BigInt scaled = a * ipow(10, places);
  BigInt q = scaled / b;
  BigInt rem = scaled - q * b;
  if (2 * rem >= b) ++q;  // ties away from zero
  std::string digits = q.str();
  std::string out;
  if (places == 0) {
    out = digits;
  } else {
    if (static_cast<int>(digits.size()) <= places) {
      digits.insert(0, places + 1 - digits.size(), '0');
    }
    out = digits.substr(0, digits.size() - places) + "." +
          digits.substr(digits.size() - places);
  }
  if (sign() < 0 && q != 0) out = "-" + out;
  return out;
}

std::string Fraction::decimal_sig(int digits) const {
  if (digits < 1) throw DomainError("significant digits must be positive");
  if (is_zero()) return "0";
  BigInt a = boost::multiprecision::abs(num());
  BigInt b = den();

  // e10 = floor(log10(a/b)): the unique e with 10^e <= a/b < 10^(e+1).
  std::int64_t e10 = static_cast<std::int64_t>(a.str().size()) -
                     static_cast<std::int64_t>(b.str().size());
  auto cmp_pow = [&](std::int64_t e) {
    // sign of a/b - 10^e
    BigInt lhs = a, rhs = b;
    if (e >= 0) rhs *= ipow(10, e); else lhs *= ipow(10, -e);
    return lhs.compare(rhs);
  };
  while (cmp_pow(e10) < 0) --e10;
  while (cmp_pow(e10 + 1) >= 0) ++e10;

  // Round a/b * 10^(digits-1-e10) to a `digits`-digit integer.
  std::int64_t shift = digits - 1 - e10;
  BigInt lhs = a, rhs = b;
  if (shift >= 0) lhs *= ipow(10, shift); else rhs *= ipow(10, -shift);
  BigInt q = lhs / rhs;
  BigInt rem = lhs - q * rhs;
  if (2 * rem >= rhs) ++q;
  std::string ds = q.str();
  if (static_cast<int>(ds.size()) > digits) {  // rounding carried: 999.. -> 1000..
    ++e10;
    ds = ds.substr(0, digits);
  }

  std::string out;
  if (e10 >= 0 && e10 < digits) {
    out = ds.substr(0, e10 + 1);
    std::string frac = ds.substr(e10 + 1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
  } else if (e10 < 0 && e10 >= -6) {
    std::string frac(-e10 - 1, '0');
    frac += ds;
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    out = "0." + frac;
  } else {
    out = ds.substr(0, 1);
    std::string frac = ds.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
    out += "e" + std::to_string(e10);
  }
  if (sign() < 0) out = "-" + out;
  return out;
}

BigInt binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

BigInt ipow(const BigInt& base, std::int64_t e) {
  if (e < 0) throw DomainError("ipow exponent must be nonnegative");
  BigInt r = 1, b = base;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

}  // namespace alloclab
