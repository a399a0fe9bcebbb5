#include "extremal/sparse_vec.hpp"

#include <stdexcept>

namespace extremal {

namespace {

void check_index(int index) {
  if (index < 1) throw std::invalid_argument("coordinate index must be >= 1, got " + std::to_string(index));
}

}  // namespace

SparseVec SparseVec::unit(int index, const Rational& value) {
  SparseVec v;
  v.set(index, value);
  return v;
}

SparseVec SparseVec::interval(int first, int last, const Rational& value) {
  if (first > last) throw std::invalid_argument("empty interval");
  SparseVec v;
  for (int i = first; i <= last; ++i) v.set(i, value);
  return v;
}

SparseVec SparseVec::from_dense(std::span<const Rational> dense) {
  SparseVec v;
  for (std::size_t i = 0; i < dense.size(); ++i) v.set(static_cast<int>(i) + 1, dense[i]);
  return v;
}

Rational SparseVec::get(int index) const {
  check_index(index);
  auto it = coords_.find(index);
  return it == coords_.end() ? Rational(0) : it->second;
}

void SparseVec::set(int index, const Rational& value) {
  check_index(index);
  Rational v = value;
  v.canonicalize();
  if (v == 0) {
    coords_.erase(index);
  } else {
    coords_[index] = std::move(v);
  }
}

IndexSet SparseVec::support() const {
  std::vector<int> idx;
  idx.reserve(coords_.size());
  for (const auto& [i, _] : coords_) idx.push_back(i);
  return IndexSet(std::move(idx));
}

std::vector<Rational> SparseVec::to_dense(int dim) const {
  if (max_index() > dim) {
    throw std::invalid_argument("support reaches index " + std::to_string(max_index()) + " beyond dimension " +
                                std::to_string(dim));
  }
  std::vector<Rational> out(static_cast<std::size_t>(dim));
  for (const auto& [i, v] : coords_) out[static_cast<std::size_t>(i - 1)] = v;
  return out;
}

SparseVec& SparseVec::operator+=(const SparseVec& other) {
  for (const auto& [i, v] : other.coords_) set(i, get(i) + v);
  return *this;
}

SparseVec& SparseVec::operator-=(const SparseVec& other) {
  for (const auto& [i, v] : other.coords_) set(i, get(i) - v);
  return *this;
}

SparseVec& SparseVec::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coords_.clear();
    return *this;
  }
  for (auto& [_, v] : coords_) v *= scalar;
  return *this;
}

std::string SparseVec::to_string() const {
  if (coords_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [i, v] : coords_) {
    Rational mag = abs(v);
    if (first) {
      if (v < 0) out += "-";
    } else {
      out += v < 0 ? " - " : " + ";
    }
    if (mag != 1) out += extremal::to_string(mag) + " ";
    out += "e" + std::to_string(i);
    first = false;
  }
  return out;
}

}  // namespace extremal
