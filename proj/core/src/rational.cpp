#include <sl2branch/rational.hpp>

#include <sl2branch/errors.hpp>

namespace sl2branch {

Int to_int(const Rational& r) {
  if (!is_integer(r)) {
    throw invariant_violation("expected an integer, got " + rat_to_string(r));
  }
  return numerator(r);
}

std::string rat_to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/" + denominator(r).str();
  }
  return s;
}

Rational rat_from_string(const std::string& s) {
  auto first = s.find_first_not_of(" \t");
  auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) {
    throw usage_error("empty rational literal");
  }
  std::string body = s.substr(first, last - first + 1);
  try {
    auto slash = body.find('/');
    if (slash == std::string::npos) {
      return Rational(Int(body));
    }
    Int num(body.substr(0, slash));
    Int den(body.substr(slash + 1));
    if (den == 0) {
      throw usage_error("zero denominator in '" + s + "'");
    }
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw usage_error("cannot parse rational '" + s + "': " + e.what());
  }
}

Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int result = 1;
  for (long i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

}  // namespace sl2branch
