#include "wlpole/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace wlpole {

QMatrix QMatrix::select_columns(const std::vector<int>& cols) const {
  QMatrix r(rows_, static_cast<int>(cols.size()));
  for (int i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols.size(); ++j) r.at(i, static_cast<int>(j)) = at(i, cols[j]);
  return r;
}

QMatrix QMatrix::stack(const QMatrix& below) const {
  if (below.cols_ != cols_) throw InputError("stack: column mismatch");
  QMatrix r(rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), r.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), r.data_.begin() + static_cast<long>(data_.size()));
  return r;
}

namespace {

struct IntMatrix {
  std::vector<std::vector<mpz_class>> a;
  mpz_class scale = 1;  // product of the row multipliers
};

IntMatrix clear_denominators(const QMatrix& m) {
  IntMatrix out;
  out.a.assign(m.rows(), std::vector<mpz_class>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (int j = 0; j < m.cols(); ++j) l = lcm(l, m.at(i, j).get_den());
    for (int j = 0; j < m.cols(); ++j) out.a[i][j] = m.at(i, j).get_num() * (l / m.at(i, j).get_den());
    out.scale *= l;
  }
  return out;
}

// Row echelon form in place. Returns the rank; sign tracks row swaps.
int bareiss(std::vector<std::vector<mpz_class>>& a, int& sign) {
  const int r = static_cast<int>(a.size());
  const int c = r ? static_cast<int>(a[0].size()) : 0;
  int rk = 0;
  mpz_class prev = 1;
  sign = 1;
  for (int col = 0; col < c && rk < r; ++col) {
    int p = rk;
    while (p < r && a[p][col] == 0) ++p;
    if (p == r) continue;
    if (p != rk) {
      std::swap(a[p], a[rk]);
      sign = -sign;
    }
    for (int i = rk + 1; i < r; ++i) {
      for (int j = col + 1; j < c; ++j) {
        mpz_class v = a[rk][col] * a[i][j] - a[i][col] * a[rk][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = v;
      }
      a[i][col] = 0;
    }
    prev = a[rk][col];
    ++rk;
  }
  return rk;
}

}  // namespace

int rank(const QMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  auto im = clear_denominators(m);
  int sign = 1;
  return bareiss(im.a, sign);
}

Rational determinant(const QMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  auto im = clear_denominators(m);
  int sign = 1;
  const int n = m.rows();
  if (bareiss(im.a, sign) < n) return 0;
  Rational d(im.a[n - 1][n - 1] * sign, im.scale);
  d.canonicalize();
  return d;
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
  const size_t n = m.size();
  if (n == 0) return Polynomial(1);
  for (auto& row : m)
    if (row.size() != n) throw InputError("determinant of a non-square matrix");
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  size_t best = 0, best_zeros = 0;
  for (size_t i = 0; i < n; ++i) {
    size_t z = static_cast<size_t>(std::count_if(m[i].begin(), m[i].end(), [](const Polynomial& p) { return p.is_zero(); }));
    if (z > best_zeros || i == 0) {
      best = i;
      best_zeros = z;
    }
  }
  Polynomial total;
  for (size_t j = 0; j < n; ++j) {
    if (m[best][j].is_zero()) continue;
    std::vector<std::vector<Polynomial>> sub;
    for (size_t i = 0; i < n; ++i) {
      if (i == best) continue;
      std::vector<Polynomial> row;
      for (size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      sub.push_back(std::move(row));
    }
    Polynomial t = m[best][j] * determinant(sub);
    if ((best + j) % 2) total -= t;
    else total += t;
  }
  return total;
}

Polynomial PolyMatrix::minor(const std::vector<int>& rs, ColumnSet cols) const {
  auto cs = elements(cols);
  if (cs.size() != rs.size()) throw InputError("minor: row and column counts differ");
  std::vector<std::vector<Polynomial>> sub;
  for (int r : rs) {
    std::vector<Polynomial> row;
    for (int c : cs) {
      if (c > n) throw InputError("minor: column out of range");
      row.push_back(entries.at(r).at(c));
    }
    sub.push_back(std::move(row));
  }
  return determinant(sub);
}

Polynomial PolyMatrix::maximal_minor(ColumnSet cols) const {
  std::vector<int> rs(rows());
  std::iota(rs.begin(), rs.end(), 0);
  return minor(rs, cols);
}

QMatrix PolyMatrix::evaluate(const Assignment& a) const {
  QMatrix q(rows(), n + 1);
  for (int i = 0; i < rows(); ++i)
    for (int c = 0; c <= n; ++c) q.at(i, c) = entries[i][c].evaluate(a);
  return q;
}

std::vector<VarId> PolyMatrix::variables() const {
  std::set<VarId> vs;
  for (auto& row : entries)
    for (auto& p : row) {
      auto v = p.variables();
      vs.insert(v.begin(), v.end());
    }
  return {vs.begin(), vs.end()};
}

SymbolicMatrix::SymbolicMatrix(int n, std::vector<ColumnSet> supports, bool gauge, std::vector<int> labels)
    : n_(n), supports_(std::move(supports)), gauge_(gauge), labels_(std::move(labels)) {
  if (n < 1 || n > kMaxColumns) throw InputError("n out of range");
  if (labels_.empty()) {
    labels_.resize(supports_.size());
    std::iota(labels_.begin(), labels_.end(), 1);
  }
  if (labels_.size() != supports_.size()) throw InputError("one label per row required");
  for (auto s : supports_)
    if (s & ~full_set(n)) throw InputError("support outside [1," + std::to_string(n) + "]");
}

int SymbolicMatrix::row_of_label(int label) const {
  for (int i = 0; i < rows(); ++i)
    if (labels_[i] == label) return i;
  return -1;
}

Polynomial SymbolicMatrix::entry(int i, int c) const {
  if (c == 0) return gauge_ ? Polynomial::variable({labels_.at(i), 0}) : Polynomial();
  return has(supports_.at(i), c) ? Polynomial::variable({labels_[i], c}) : Polynomial();
}

std::vector<VarId> SymbolicMatrix::variables() const {
  std::vector<VarId> out;
  for (int i = 0; i < rows(); ++i) {
    if (gauge_) out.push_back({labels_[i], 0});
    for (int c : elements(supports_[i])) out.push_back({labels_[i], c});
  }
  std::sort(out.begin(), out.end());
  return out;
}

PolyMatrix SymbolicMatrix::poly() const {
  PolyMatrix m;
  m.n = n_;
  for (int i = 0; i < rows(); ++i) {
    std::vector<Polynomial> row;
    for (int c = 0; c <= n_; ++c) row.push_back(entry(i, c));
    m.entries.push_back(std::move(row));
  }
  return m;
}

Polynomial SymbolicMatrix::minor(const std::vector<int>& rs, ColumnSet cols) const {
  return poly().minor(rs, cols);
}

Polynomial SymbolicMatrix::maximal_minor(ColumnSet cols) const { return poly().maximal_minor(cols); }

QMatrix SymbolicMatrix::evaluate(const Assignment& a) const { return poly().evaluate(a); }

SymbolicMatrix matrix_from_sets(int n, const std::vector<ColumnSet>& sets, bool gauge) {
  if (sets.empty()) throw InputError("empty set system");
  return SymbolicMatrix(n, sets, gauge);
}

Assignment random_assignment(const std::vector<VarId>& vars, Sampler& s) {
  Assignment a;
  for (const auto& v : vars) a[v] = s.positive();
  return a;
}

}  // namespace wlpole
