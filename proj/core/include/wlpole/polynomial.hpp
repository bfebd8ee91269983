#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wlpole/rational.hpp"

namespace wlpole {

// Variable x[row, col]. Column 0 is the gauge column. Rows below zero are auxiliary
// parameters and print as t[col].
struct VarId {
  int row = 0;
  int col = 0;
  auto operator<=>(const VarId&) const = default;
};

std::string to_string(const VarId& v);
inline VarId aux(int id) { return VarId{-1, id}; }

using Assignment = std::map<VarId, Rational>;

// Power product. Ordered lexicographically with x[1,1] > x[1,2] > ... > x[2,1] > ...
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(VarId v, int e = 1);

  const std::vector<std::pair<VarId, int>>& powers() const { return powers_; }
  bool is_one() const { return powers_.empty(); }
  int degree() const;
  int exponent(VarId v) const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Requires divides(other) on the right operand.
  Monomial operator/(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<std::pair<VarId, int>> powers_;
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(const Rational& c);
  static Polynomial variable(VarId v) { return term(Monomial(v), 1); }
  static Polynomial term(const Monomial& m, const Rational& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant() const;
  int total_degree() const;
  std::set<VarId> variables() const;
  // Largest monomial under the lex order. Requires a nonzero polynomial.
  const std::pair<const Monomial, Rational>& leading() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial derivative(VarId v) const;
  // Throws InputError when a variable is missing from the assignment.
  Rational evaluate(const Assignment& a) const;
  // Variables without an entry are left alone.
  Polynomial substitute(const std::map<VarId, Polynomial>& s) const;
  // Quotient when d divides *this exactly.
  std::optional<Polynomial> divide_exact(const Polynomial& d) const;

  // "c * x[r,c]^e * ..." joined by " + ", leading term first; "0" when empty.
  std::string to_string() const;
  static Polynomial parse(const std::string& text);

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

// det of the Jacobian d(old)/d(new) for a substitution old -> polynomial in new variables.
// Rows follow the map order, columns the sorted set of new variables.
Polynomial jacobian_det(const std::map<VarId, Polynomial>& subst);

}  // namespace wlpole
