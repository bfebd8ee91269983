#pragma once

#include <array>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "wlpole/polynomial.hpp"

namespace wlpole {

// Irreducible factor shapes that occur in maximal minors of these matrices: a single
// variable, or x[a,i] x[b,j] - x[a,j] x[b,i] with a < b and i < j.
struct Factor {
  enum class Kind : int { Variable = 1, Minor2 = 2 };

  Kind kind = Kind::Variable;
  VarId var{};
  std::array<int, 2> rows{};
  std::array<int, 2> cols{};

  static Factor variable(VarId v);
  static Factor minor2(int a, int b, int i, int j);

  int degree() const { return kind == Kind::Variable ? 1 : 2; }
  Polynomial polynomial() const;
  std::string to_string() const;

  auto operator<=>(const Factor&) const = default;
};

struct Factorization {
  std::vector<std::pair<Factor, int>> parts;
  // Leftover after all structured factors are divided out. Constant when structured.
  Polynomial residual;
  bool structured = false;
};

Factorization structured_factorize(const Polynomial& f);
Polynomial recompose(const Factorization& fz);

}  // namespace wlpole
