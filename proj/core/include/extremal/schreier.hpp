#pragma once

#include <functional>
#include <span>
#include <vector>

#include "extremal/index_set.hpp"

// Combinatorics of permissible sets: finite A with 2 <= |A| <= min(A) + 1.
// The maximal ones (|A| = min(A) + 1) are the sets the dual ball
// classification keeps referring back to.
namespace extremal::schreier {

// Both throw std::invalid_argument for an empty set.
bool is_permissible(const IndexSet& a);
bool is_permissible_maximal(const IndexSet& a);

// True when a is a singleton or permissible, i.e. a nonempty subset of some
// permissible set.
bool embeds_in_permissible(const IndexSet& a);

// All permissible (or permissible-maximal) subsets of [1, bound] in
// lexicographic order on their element lists. Throws for bound < 2.
std::vector<IndexSet> enumerate_permissible(int bound, bool maximal_only);

// Visits the same sets as enumerate_permissible(bound, false), in the same
// order, without materializing them. The callback sees the elements of the
// current set; the span is only valid during the call.
void for_each_permissible(int bound, const std::function<void(std::span<const int>)>& visit);

}  // namespace extremal::schreier
