#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ovg {

// Dense GF(2) vector, bit-packed into 64-bit words.
class Gf2Vector {
 public:
  Gf2Vector() = default;
  explicit Gf2Vector(int n) : n_(n), w_(static_cast<size_t>((n + 63) / 64), 0) {}

  int size() const { return n_; }

  bool get(int i) const { return (w_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u; }

  void set(int i, bool b) {
    uint64_t mask = uint64_t{1} << (i & 63);
    if (b)
      w_[static_cast<size_t>(i) >> 6] |= mask;
    else
      w_[static_cast<size_t>(i) >> 6] &= ~mask;
  }

  void flip(int i) { w_[static_cast<size_t>(i) >> 6] ^= uint64_t{1} << (i & 63); }

  Gf2Vector& operator^=(const Gf2Vector& o) {
    if (o.n_ != n_) throw std::invalid_argument("Gf2Vector: size mismatch");
    for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
  }

  friend Gf2Vector operator^(Gf2Vector a, const Gf2Vector& b) {
    a ^= b;
    return a;
  }

  bool any() const {
    for (uint64_t w : w_)
      if (w) return true;
    return false;
  }

  bool zero() const { return !any(); }

  int popcount() const {
    int c = 0;
    for (uint64_t w : w_) c += __builtin_popcountll(w);
    return c;
  }

  // Index of the lowest set bit, or -1.
  int lowest() const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return static_cast<int>(k) * 64 + __builtin_ctzll(w_[k]);
    return -1;
  }

  std::vector<int> ones() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
      if (get(i)) out.push_back(i);
    return out;
  }

  static Gf2Vector from_ones(int n, const std::vector<int>& idx) {
    Gf2Vector v(n);
    for (int i : idx) v.set(i, true);
    return v;
  }

  bool operator==(const Gf2Vector& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Gf2Vector& o) const { return !(*this == o); }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

// Rectangular matrix over GF(2), stored as rows.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(int rows, int cols) : cols_(cols), rows_(static_cast<size_t>(rows), Gf2Vector(cols)) {}

  int num_rows() const { return static_cast<int>(rows_.size()); }
  int num_cols() const { return cols_; }

  Gf2Vector& row(int i) { return rows_[static_cast<size_t>(i)]; }
  const Gf2Vector& row(int i) const { return rows_[static_cast<size_t>(i)]; }

  void append_row(Gf2Vector v) {
    if (v.size() != cols_) {
      if (rows_.empty() && cols_ == 0)
        cols_ = v.size();
      else
        throw std::invalid_argument("Gf2Matrix: column count mismatch");
    }
    rows_.push_back(std::move(v));
  }

  bool get(int i, int j) const { return rows_[static_cast<size_t>(i)].get(j); }
  void set(int i, int j, bool b) { rows_[static_cast<size_t>(i)].set(j, b); }

  int rank() const;

 private:
  int cols_ = 0;
  std::vector<Gf2Vector> rows_;
};

// Incremental row-echelon basis; supports rank queries and span membership.
class Gf2Solver {
 public:
  // Returns true if v was independent of the current basis (rank grew).
  bool add(Gf2Vector v) {
    reduce(v);
    if (v.zero()) return false;
    int p = v.lowest();
    basis_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  bool in_span(Gf2Vector v) const {
    reduce(v);
    return v.zero();
  }

  int rank() const { return static_cast<int>(basis_.size()); }

 private:
  void reduce(Gf2Vector& v) const {
    for (size_t k = 0; k < basis_.size(); ++k)
      if (v.get(pivots_[k])) v ^= basis_[k];
  }

  std::vector<Gf2Vector> basis_;
  std::vector<int> pivots_;
};

inline int Gf2Matrix::rank() const {
  Gf2Solver s;
  for (int i = 0; i < num_rows(); ++i) s.add(row(i));
  return s.rank();
}

}  // namespace ovg
