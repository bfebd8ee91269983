#include "wlpole/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <regex>

#include "wlpole/common.hpp"
#include "wlpole/matrix.hpp"

namespace wlpole {

std::string to_string(const VarId& v) {
  if (v.row < 0) return "t[" + std::to_string(v.col) + "]";
  return "x[" + std::to_string(v.row) + "," + std::to_string(v.col) + "]";
}

Monomial::Monomial(VarId v, int e) {
  if (e > 0) powers_.emplace_back(v, e);
}

int Monomial::degree() const {
  int d = 0;
  for (auto& [_, e] : powers_) d += e;
  return d;
}

int Monomial::exponent(VarId v) const {
  for (auto& [u, e] : powers_)
    if (u == v) return e;
  return 0;
}

bool Monomial::divides(const Monomial& other) const {
  for (auto& [v, e] : powers_)
    if (other.exponent(v) < e) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  size_t i = 0, j = 0;
  while (i < powers_.size() || j < o.powers_.size()) {
    if (j == o.powers_.size() || (i < powers_.size() && powers_[i].first < o.powers_[j].first)) {
      r.powers_.push_back(powers_[i++]);
    } else if (i == powers_.size() || o.powers_[j].first < powers_[i].first) {
      r.powers_.push_back(o.powers_[j++]);
    } else {
      r.powers_.emplace_back(powers_[i].first, powers_[i].second + o.powers_[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (auto& [v, e] : powers_) {
    int d = e - o.exponent(v);
    if (d < 0) throw StructuralError("monomial division is not exact");
    if (d > 0) r.powers_.emplace_back(v, d);
  }
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  size_t i = 0;
  for (; i < a.powers_.size() && i < b.powers_.size(); ++i) {
    const auto& [va, ea] = a.powers_[i];
    const auto& [vb, eb] = b.powers_[i];
    // The smaller variable id is the more significant one.
    if (va != vb) return va < vb ? std::strong_ordering::greater : std::strong_ordering::less;
    if (ea != eb) return ea <=> eb;
  }
  if (a.powers_.size() == b.powers_.size()) return std::strong_ordering::equal;
  return i < a.powers_.size() ? std::strong_ordering::greater : std::strong_ordering::less;
}

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial(), c);
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p;
  p.add_term(m, c);
  return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (auto& [m, _] : terms_) d = std::max(d, m.degree());
  return d;
}

std::set<VarId> Polynomial::variables() const {
  std::set<VarId> vs;
  for (auto& [m, _] : terms_)
    for (auto& [v, e] : m.powers()) vs.insert(v);
  return vs;
}

const std::pair<const Monomial, Rational>& Polynomial::leading() const {
  if (terms_.empty()) throw StructuralError("leading term of zero polynomial");
  return *terms_.rbegin();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (auto& [ma, ca] : a.terms_)
    for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [_, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::derivative(VarId v) const {
  Polynomial r;
  for (auto& [m, c] : terms_) {
    int e = m.exponent(v);
    if (e == 0) continue;
    r.add_term(m / Monomial(v), c * e);
  }
  return r;
}

Rational Polynomial::evaluate(const Assignment& a) const {
  Rational total = 0;
  for (auto& [m, c] : terms_) {
    Rational t = c;
    for (auto& [v, e] : m.powers()) {
      auto it = a.find(v);
      if (it == a.end()) throw InputError("no value for " + wlpole::to_string(v));
      for (int i = 0; i < e; ++i) t *= it->second;
    }
    total += t;
  }
  return total;
}

Polynomial Polynomial::substitute(const std::map<VarId, Polynomial>& s) const {
  Polynomial r;
  for (auto& [m, c] : terms_) {
    Polynomial t(c);
    Monomial rest;
    for (auto& [v, e] : m.powers()) {
      auto it = s.find(v);
      if (it == s.end()) {
        rest = rest * Monomial(v, e);
        continue;
      }
      for (int i = 0; i < e; ++i) t *= it->second;
    }
    r += t * Polynomial::term(rest, 1);
  }
  return r;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& d) const {
  if (d.is_zero()) throw InputError("division by zero polynomial");
  const auto& [lm, lc] = d.leading();
  Polynomial q, rem = *this;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading();
    if (!lm.divides(rm)) return std::nullopt;
    Polynomial t = Polynomial::term(rm / lm, rc / lc);
    q += t;
    rem -= t * d;
  }
  return q;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += it->second.get_str();
    for (auto& [v, e] : it->first.powers()) {
      out += " * " + wlpole::to_string(v);
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

Polynomial Polynomial::parse(const std::string& text) {
  static const std::regex factor_re(R"(^\s*(?:([xt])\[(-?\d+)(?:,(-?\d+))?\](?:\^(\d+))?|([+-]?\d+(?:/\d+)?))\s*$)");
  Polynomial out;
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t\n");
    auto e = s.find_last_not_of(" \t\n");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  std::string t = trim(text);
  if (t.empty()) throw InputError("empty polynomial text");
  if (t == "0") return out;
  size_t pos = 0;
  while (pos <= t.size()) {
    size_t next = t.find(" + ", pos);
    std::string term_text = t.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    Rational c = 1;
    Monomial m;
    size_t fpos = 0;
    while (fpos <= term_text.size()) {
      size_t star = term_text.find('*', fpos);
      std::string f = term_text.substr(fpos, star == std::string::npos ? std::string::npos : star - fpos);
      std::smatch mt;
      if (!std::regex_match(f, mt, factor_re)) throw InputError("malformed polynomial factor: '" + trim(f) + "'");
      if (mt[5].matched) {
        c *= parse_rational(mt[5].str());
      } else {
        VarId v;
        if (mt[1].str() == "t") {
          if (mt[3].matched) throw InputError("t[...] takes one index");
          v = aux(std::stoi(mt[2].str()));
        } else {
          if (!mt[3].matched) throw InputError("x[...] takes two indices");
          v = VarId{std::stoi(mt[2].str()), std::stoi(mt[3].str())};
        }
        int e = mt[4].matched ? std::stoi(mt[4].str()) : 1;
        m = m * Monomial(v, e);
      }
      if (star == std::string::npos) break;
      fpos = star + 1;
    }
    out.add_term(m, c);
    if (next == std::string::npos) break;
    pos = next + 3;
  }
  return out;
}

Polynomial jacobian_det(const std::map<VarId, Polynomial>& subst) {
  std::set<VarId> fresh;
  for (auto& [_, p] : subst) {
    auto vs = p.variables();
    fresh.insert(vs.begin(), vs.end());
  }
  if (fresh.size() != subst.size())
    throw InputError("substitution is not square: " + std::to_string(subst.size()) + " images in " +
                     std::to_string(fresh.size()) + " variables");
  std::vector<std::vector<Polynomial>> jac;
  for (auto& [_, p] : subst) {
    std::vector<Polynomial> row;
    for (const VarId& v : fresh) row.push_back(p.derivative(v));
    jac.push_back(std::move(row));
  }
  return determinant(jac);
}

}  // namespace wlpole
