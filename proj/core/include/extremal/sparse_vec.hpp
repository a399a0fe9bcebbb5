#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "extremal/index_set.hpp"
#include "extremal/rational.hpp"

namespace extremal {

// Finitely supported sequence indexed from 1. Used both for vectors and for
// functionals expressed in the biorthogonal coordinates. No stored
// coordinate is ever zero.
class SparseVec {
 public:
  using Storage = std::map<int, Rational>;

  SparseVec() = default;

  static SparseVec unit(int index, const Rational& value = 1);
  // Indicator of [first, last] scaled by value.
  static SparseVec interval(int first, int last, const Rational& value = 1);
  // dense[0] is coordinate 1.
  static SparseVec from_dense(std::span<const Rational> dense);

  // Absent coordinates read as zero. Throws std::invalid_argument for index < 1.
  Rational get(int index) const;
  // Setting zero erases the coordinate.
  void set(int index, const Rational& value);

  bool is_zero() const { return coords_.empty(); }
  std::size_t support_size() const { return coords_.size(); }
  // Largest index with a nonzero coordinate, 0 for the zero vector.
  int max_index() const { return coords_.empty() ? 0 : coords_.rbegin()->first; }
  int min_index() const { return coords_.empty() ? 0 : coords_.begin()->first; }
  IndexSet support() const;

  // Coordinates 1..dim; throws if the support does not fit.
  std::vector<Rational> to_dense(int dim) const;

  const Storage& coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  SparseVec& operator+=(const SparseVec& other);
  SparseVec& operator-=(const SparseVec& other);
  SparseVec& operator*=(const Rational& scalar);

  friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }
  friend SparseVec operator-(SparseVec a) { return a *= -1; }
  friend SparseVec operator*(const Rational& s, SparseVec a) { return a *= s; }
  friend SparseVec operator*(SparseVec a, const Rational& s) { return a *= s; }

  friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.coords_ == b.coords_; }
  // Total order on the canonical (index, value) lists; used for sorting and sets.
  friend bool operator<(const SparseVec& a, const SparseVec& b) { return a.coords_ < b.coords_; }

  // Compact debugging form like "e3 - 1/2 e4".
  std::string to_string() const;

 private:
  Storage coords_;
};

}  // namespace extremal
