#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ptol {

// Dense square boolean matrix. Comparison is row-major lexicographic, which
// makes matrices usable as deterministic sort keys.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  explicit BoolMatrix(int n, bool value = false)
      : n_(n), cells_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                      value ? 1 : 0) {}

  int size() const { return n_; }

  bool get(int i, int j) const { return cells_[index(i, j)] != 0; }
  void set(int i, int j, bool value) { cells_[index(i, j)] = value ? 1 : 0; }

  // Number of true cells.
  int count() const {
    int total = 0;
    for (char c : cells_) total += c;
    return total;
  }

  bool is_subset_of(const BoolMatrix& other) const {
    if (n_ != other.n_) return false;
    for (std::size_t k = 0; k < cells_.size(); ++k) {
      if (cells_[k] && !other.cells_[k]) return false;
    }
    return true;
  }

  static BoolMatrix intersection(const BoolMatrix& a, const BoolMatrix& b) {
    BoolMatrix out(a.n_);
    for (std::size_t k = 0; k < a.cells_.size(); ++k) {
      out.cells_[k] = a.cells_[k] && b.cells_[k] ? 1 : 0;
    }
    return out;
  }

  // Row-major '0'/'1' rendering, also used as a canonical sort key.
  std::string bits() const {
    std::string out;
    out.reserve(cells_.size());
    for (char c : cells_) out.push_back(c ? '1' : '0');
    return out;
  }

  friend bool operator==(const BoolMatrix& a, const BoolMatrix& b) {
    return a.n_ == b.n_ && a.cells_ == b.cells_;
  }
  friend bool operator<(const BoolMatrix& a, const BoolMatrix& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.cells_ < b.cells_;
  }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<char> cells_;
};

}  // namespace ptol
