#pragma once

#include <cstdint>
#include <random>
#include <string>

#include <gmpxx.h>

namespace wlpole {

using Rational = mpq_class;

std::string to_string(const Rational& q);
// Accepts "a", "a/b" and "-a/b". Throws InputError otherwise.
Rational parse_rational(const std::string& s);

// Seeded source of small rationals for generic evaluation.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : eng_(seed) {}

  // p/q with 1 <= p, q <= range.
  Rational positive(int range = 1000);
  Rational nonzero(int range = 1000);
  int uniform_int(int lo, int hi);
  std::uint64_t next() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace wlpole
