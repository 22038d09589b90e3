#include "clusternet/member_set.hpp"

#include <algorithm>

namespace cnet {

std::vector<std::size_t> members_of(const MemberSet& set) {
  std::vector<std::size_t> out;
  out.reserve(set.count());
  for (auto i = set.find_first(); i != MemberSet::npos; i = set.find_next(i)) out.push_back(i);
  return out;
}

MemberSet make_member_set(std::size_t universe, const std::vector<std::size_t>& members) {
  MemberSet set(universe);
  for (auto m : members) set.set(m);
  return set;
}

bool CanonicalOrder::operator()(const MemberSet& a, const MemberSet& b) const {
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca < cb;
  auto i = a.find_first();
  auto j = b.find_first();
  while (i != MemberSet::npos && j != MemberSet::npos) {
    if (i != j) return i < j;
    i = a.find_next(i);
    j = b.find_next(j);
  }
  return false;
}

std::string member_names(const MemberSet& set, const std::vector<std::string>& labels) {
  const bool short_labels =
      std::all_of(labels.begin(), labels.end(), [](const std::string& l) { return l.size() == 1; });
  std::string out;
  for (auto i = set.find_first(); i != MemberSet::npos; i = set.find_next(i)) {
    if (!short_labels && !out.empty()) out += ',';
    out += labels[i];
  }
  return out;
}

}  // namespace cnet
