#include "extremal/index_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace extremal {

IndexSet::IndexSet(std::initializer_list<int> elems) : IndexSet(std::vector<int>(elems)) {}

IndexSet::IndexSet(std::vector<int> elems) : elems_(std::move(elems)) {
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (elems_[i] < 1) {
      throw std::invalid_argument("index set entries must be >= 1, got " + std::to_string(elems_[i]));
    }
    if (i > 0 && elems_[i] <= elems_[i - 1]) {
      throw std::invalid_argument("index set must be strictly increasing: " + to_string());
    }
  }
}

int IndexSet::min() const {
  if (elems_.empty()) throw std::invalid_argument("min of empty index set");
  return elems_.front();
}

int IndexSet::max() const {
  if (elems_.empty()) throw std::invalid_argument("max of empty index set");
  return elems_.back();
}

bool IndexSet::contains(int index) const { return std::binary_search(elems_.begin(), elems_.end(), index); }

std::string IndexSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(elems_[i]);
  }
  out += "}";
  return out;
}

}  // namespace extremal
