#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace extremal {

// Strictly increasing finite list of positive (1-based) indices.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<int> elems);
  // Throws std::invalid_argument unless elems is strictly increasing with
  // every entry >= 1.
  explicit IndexSet(std::vector<int> elems);

  std::span<const int> elems() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  int operator[](std::size_t i) const { return elems_[i]; }

  // Both throw std::invalid_argument on an empty set.
  int min() const;
  int max() const;

  bool contains(int index) const;

  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  // Lexicographic on the element lists.
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;
  friend bool operator==(const IndexSet&, const IndexSet&) = default;

  std::string to_string() const;

 private:
  std::vector<int> elems_;
};

}  // namespace extremal
