#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace cnet {

/// Set of point indices. Indices follow the (lexicographic) label order of
/// the owning matrix.
using MemberSet = boost::dynamic_bitset<>;

std::vector<std::size_t> members_of(const MemberSet& set);
MemberSet make_member_set(std::size_t universe, const std::vector<std::size_t>& members);

/// Strict inclusion.
inline bool strictly_contains(const MemberSet& outer, const MemberSet& inner) {
  return inner.is_proper_subset_of(outer);
}

/// Canonical order: by cardinality, then lexicographically by sorted member list.
struct CanonicalOrder {
  bool operator()(const MemberSet& a, const MemberSet& b) const;
};

/// Member names concatenated ("AB"); joined by ',' when any label is longer
/// than one character.
std::string member_names(const MemberSet& set, const std::vector<std::string>& labels);

}  // namespace cnet
