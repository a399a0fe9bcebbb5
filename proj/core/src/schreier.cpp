#include "extremal/schreier.hpp"

#include <stdexcept>

namespace extremal::schreier {

namespace {

void require_nonempty(const IndexSet& a) {
  if (a.empty()) throw std::invalid_argument("permissibility is undefined for the empty set");
}

// Depth-first extension in increasing order. Emitting a list before its
// extensions yields lexicographic order.
void extend(std::vector<int>& current, int bound, std::size_t cap,
            const std::function<void(std::span<const int>)>& visit) {
  if (current.size() >= 2) visit(current);
  if (current.size() == cap) return;
  for (int next = current.back() + 1; next <= bound; ++next) {
    current.push_back(next);
    extend(current, bound, cap, visit);
    current.pop_back();
  }
}

}  // namespace

bool is_permissible(const IndexSet& a) {
  require_nonempty(a);
  const auto n = static_cast<long>(a.size());
  return n >= 2 && n <= static_cast<long>(a.min()) + 1;
}

bool is_permissible_maximal(const IndexSet& a) {
  return is_permissible(a) && static_cast<long>(a.size()) == static_cast<long>(a.min()) + 1;
}

bool embeds_in_permissible(const IndexSet& a) {
  require_nonempty(a);
  return a.size() == 1 || is_permissible(a);
}

void for_each_permissible(int bound, const std::function<void(std::span<const int>)>& visit) {
  if (bound < 2) throw std::invalid_argument("enumeration bound must be >= 2, got " + std::to_string(bound));
  std::vector<int> current;
  for (int first = 1; first <= bound; ++first) {
    current.assign(1, first);
    extend(current, bound, static_cast<std::size_t>(first) + 1, visit);
  }
}

std::vector<IndexSet> enumerate_permissible(int bound, bool maximal_only) {
  std::vector<IndexSet> out;
  for_each_permissible(bound, [&](std::span<const int> elems) {
    if (maximal_only && elems.size() != static_cast<std::size_t>(elems.front()) + 1) return;
    out.emplace_back(std::vector<int>(elems.begin(), elems.end()));
  });
  return out;
}

}  // namespace extremal::schreier
