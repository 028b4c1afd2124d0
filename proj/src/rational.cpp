#include "webcalc/rational.hpp"

namespace webcalc {

std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto digits = [](const std::string& t) {
    if (t.empty()) return false;
    size_t start = t[0] == '-' || t[0] == '+' ? 1 : 0;
    if (start == t.size()) return false;
    for (size_t k = start; k < t.size(); ++k)
      if (!isdigit(static_cast<unsigned char>(t[k]))) return false;
    return true;
  };
  if (!digits(num) || !digits(den))
    throw std::invalid_argument("malformed rational literal: " + s);
  Int p(num), q(den);
  if (q == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  return rat(p, q);
}

Int factorial(long n) {
  Int r = 1;
  for (long k = 2; k <= n; ++k) r *= k;
  return r;
}

Int binom(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Int gbinom(const Int& n, long k) {
  if (k < 0) return 0;
  Int num = 1;
  for (long t = 0; t < k; ++t) num *= (n - t);
  // The falling factorial of length k is divisible by k!.
  Int r = num / factorial(k);
  return r;
}

}  // namespace webcalc
