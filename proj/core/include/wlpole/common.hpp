#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wlpole {

// Bit c of a ColumnSet stands for column c. Bit 0 is reserved for the gauge column.
using ColumnSet = std::uint64_t;
inline constexpr int kMaxColumns = 63;

constexpr ColumnSet bit(int c) { return ColumnSet{1} << c; }
constexpr bool has(ColumnSet s, int c) { return ((s >> c) & 1U) != 0; }
inline int card(ColumnSet s) { return std::popcount(s); }

// Columns 1..n.
constexpr ColumnSet full_set(int n) { return ((ColumnSet{1} << n) - 1) << 1; }

// Reduce v to the range 1..n.
constexpr int cyc(int v, int n) { return ((v - 1) % n + n) % n + 1; }

std::vector<int> elements(ColumnSet s);
ColumnSet make_set(const std::vector<int>& cols);
std::string set_string(ColumnSet s);

// Bad user input: malformed propagators, empty systems, out of range columns.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation was called on an object without the structure it needs.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wlpole
