#include "wlpole/rational.hpp"

#include <cctype>

#include "wlpole/common.hpp"

namespace wlpole {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(const std::string& s) {
  auto is_int = [](const std::string& t) {
    size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
    throw InputError("malformed rational: '" + s + "'");
  mpz_class n(num), d(den);
  if (d == 0) throw InputError("zero denominator: '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

int Sampler::uniform_int(int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  return d(eng_);
}

Rational Sampler::positive(int range) {
  Rational q(uniform_int(1, range), uniform_int(1, range));
  q.canonicalize();
  return q;
}

Rational Sampler::nonzero(int range) {
  Rational q = positive(range);
  return uniform_int(0, 1) ? q : Rational(-q);
}

}  // namespace wlpole
