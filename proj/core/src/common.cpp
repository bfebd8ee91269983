#include "wlpole/common.hpp"

namespace wlpole {

std::vector<int> elements(ColumnSet s) {
  std::vector<int> out;
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

ColumnSet make_set(const std::vector<int>& cols) {
  ColumnSet s = 0;
  for (int c : cols) {
    if (c < 0 || c > kMaxColumns) throw InputError("column out of range: " + std::to_string(c));
    s |= bit(c);
  }
  return s;
}

std::string set_string(ColumnSet s) {
  std::string out = "{";
  bool first = true;
  for (int c : elements(s)) {
    if (!first) out += ",";
    out += std::to_string(c);
    first = false;
  }
  return out + "}";
}

}  // namespace wlpole
