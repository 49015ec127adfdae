#include "fairalloc/arith.hpp"

#include <cctype>

#include "fairalloc/errors.hpp"

namespace fairalloc {

BigInt ipow(const BigInt& base, unsigned long exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    exp >>= 1;
    if (exp > 0) b *= b;
  }
  return result;
}

long long ceil_log2(const BigInt& x) {
  if (x < 1) throw ValidationError("ceil_log2 requires a positive argument");
  if (x == 1) return 0;
  // msb(x-1) is the index of the highest set bit of x-1, so 2^(msb+1) is the
  // first power of two >= x.
  return static_cast<long long>(boost::multiprecision::msb(BigInt(x - 1))) + 1;
}

std::string to_decimal(const BigInt& x) { return x.str(); }

std::string to_decimal(const Rational& r) {
  BigInt den = boost::multiprecision::denominator(r);
  BigInt num = boost::multiprecision::numerator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_literal(text)) {
      throw ValidationError("not a rational literal: \"" + text + "\" (expected p or p/q)");
    }
    return Rational(BigInt(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.empty() || den[0] == '-') {
    throw ValidationError("not a rational literal: \"" + text + "\" (expected p or p/q, q > 0)");
  }
  BigInt d(den);
  if (d == 0) throw ValidationError("rational literal has zero denominator: \"" + text + "\"");
  return Rational(BigInt(num), d);
}

}  // namespace fairalloc
