#pragma once

#include <string>

#include "clusternet/dendrogram.hpp"
#include "clusternet/member_set.hpp"
#include "clusternet/metric.hpp"
#include "oracles.hpp"

namespace fixture {

// Points on a line or a 3-4-5 rectangle, so every distance is an integer.
inline cnet::DistanceMatrix fig1() { return oracle::euclidean({{"A", {0, 0}}, {"B", {2, 0}}, {"C", {5, 0}}}); }
inline cnet::DistanceMatrix fig2() { return oracle::euclidean({{"A", {0, 0}}, {"B", {5, 0}}, {"C", {8, 0}}}); }
inline cnet::DistanceMatrix fig4() {
  return oracle::euclidean({{"A", {0, 0}}, {"B", {3, 0}}, {"C", {0, 4}}, {"D", {3, 4}}});
}
inline cnet::DistanceMatrix fig5() {
  return oracle::euclidean({{"A", {0, 0}}, {"B", {4, 0}}, {"C", {0, 3}}, {"D", {4, 3}}});
}

inline std::string path(const std::string& name) { return std::string(CLUSTERNET_FIXTURES) + "/" + name; }

/// Member set from a string of one-letter labels, e.g. "AB".
inline cnet::MemberSet set(const cnet::DistanceMatrix& d, const std::string& letters) {
  cnet::MemberSet s(d.size());
  for (char c : letters) s.set(d.index_of(std::string(1, c)));
  return s;
}

}  // namespace fixture
