#pragma once

#include <vector>

#include "wlpole/common.hpp"
#include "wlpole/polynomial.hpp"

namespace wlpole {

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  QMatrix select_columns(const std::vector<int>& cols) const;
  QMatrix stack(const QMatrix& below) const;
  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

// Fraction-free Bareiss elimination after clearing denominators row by row.
int rank(const QMatrix& m);
Rational determinant(const QMatrix& m);

// Laplace expansion along the sparsest row.
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m);

// Polynomial matrix on columns 0..n. Column 0 is the gauge column and may be all zero.
struct PolyMatrix {
  int n = 0;
  std::vector<std::vector<Polynomial>> entries;

  int rows() const { return static_cast<int>(entries.size()); }
  Polynomial minor(const std::vector<int>& rows, ColumnSet cols) const;
  Polynomial maximal_minor(ColumnSet cols) const;
  QMatrix evaluate(const Assignment& a) const;
  std::vector<VarId> variables() const;
};

// The matrix with a generic variable x[label, c] at each support position.
class SymbolicMatrix {
 public:
  // labels default to 1..rows. When gauge is set column 0 is filled in every row.
  SymbolicMatrix(int n, std::vector<ColumnSet> supports, bool gauge = false,
                 std::vector<int> labels = {});

  int n() const { return n_; }
  int rows() const { return static_cast<int>(supports_.size()); }
  bool gauge() const { return gauge_; }
  ColumnSet support(int i) const { return supports_.at(i); }
  const std::vector<ColumnSet>& supports() const { return supports_; }
  int label(int i) const { return labels_.at(i); }
  int row_of_label(int label) const;

  Polynomial entry(int i, int c) const;
  std::vector<VarId> variables() const;
  PolyMatrix poly() const;
  Polynomial minor(const std::vector<int>& rows, ColumnSet cols) const;
  Polynomial maximal_minor(ColumnSet cols) const;
  QMatrix evaluate(const Assignment& a) const;

 private:
  int n_;
  std::vector<ColumnSet> supports_;
  bool gauge_;
  std::vector<int> labels_;
};

// Throws InputError on an empty family or a set outside [n].
SymbolicMatrix matrix_from_sets(int n, const std::vector<ColumnSet>& sets, bool gauge = false);

// Random nonzero values for every variable of the matrix.
Assignment random_assignment(const std::vector<VarId>& vars, Sampler& s);

}  // namespace wlpole
