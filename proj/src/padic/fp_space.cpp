#include "clusternet/padic/fp_space.hpp"

#include <algorithm>
#include <set>

#include "clusternet/errors.hpp"

namespace cnet::padic {
namespace {

int mod(long x, int p) {
  x %= p;
  return static_cast<int>(x < 0 ? x + p : x);
}

int inverse_mod(int a, int p) {
  for (int b = 1; b < p; ++b) {
    if (a * b % p == 1) return b;
  }
  throw PreconditionError("no inverse mod p");
}

std::size_t leading(const std::vector<int>& v) {
  std::size_t i = 0;
  while (i < v.size() && v[i] == 0) ++i;
  return i;
}

// Every vector of F_p^d, lexicographic.
std::vector<std::vector<int>> all_vectors(int p, std::size_t dim) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(dim, 0);
  while (true) {
    out.push_back(v);
    std::size_t i = dim;
    while (i > 0) {
      --i;
      if (++v[i] < p) break;
      v[i] = 0;
      if (i == 0) return out;
    }
    if (dim == 0) return out;
  }
}

}  // namespace

FpSubspace::FpSubspace(int p, std::size_t dim) : p_(p), dim_(dim) {}

FpSubspace FpSubspace::span(int p, std::size_t dim, const std::vector<std::vector<int>>& vectors) {
  FpSubspace s(p, dim);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

void FpSubspace::insert(std::vector<int> v) {
  if (v.size() != dim_) throw PreconditionError("vector of the wrong dimension");
  for (auto& x : v) x = mod(x, p_);
  for (const auto& r : rows_) {
    const std::size_t c = leading(r);
    if (v[c] == 0) continue;
    const int f = v[c];
    for (std::size_t i = 0; i < dim_; ++i) v[i] = mod(v[i] - static_cast<long>(f) * r[i], p_);
  }
  const std::size_t c = leading(v);
  if (c == dim_) return;
  const int inv = inverse_mod(v[c], p_);
  for (auto& x : v) x = x * inv % p_;
  for (auto& r : rows_) {
    const int f = r[c];
    if (f == 0) continue;
    for (std::size_t i = 0; i < dim_; ++i) r[i] = mod(r[i] - static_cast<long>(f) * v[i], p_);
  }
  rows_.push_back(std::move(v));
  std::sort(rows_.begin(), rows_.end(),
            [](const auto& a, const auto& b) { return leading(a) < leading(b); });
}

bool FpSubspace::contains(const std::vector<int>& v) const {
  FpSubspace s = *this;
  s.insert(v);
  return s.dimension() == dimension();
}

bool FpSubspace::is_subset_of(const FpSubspace& other) const {
  return std::all_of(rows_.begin(), rows_.end(), [&](const auto& r) { return other.contains(r); });
}

FpSubspace FpSubspace::with(const std::vector<int>& v) const {
  FpSubspace s = *this;
  s.insert(v);
  return s;
}

bool operator<(const FpSubspace& a, const FpSubspace& b) {
  if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
  return a.rows_ < b.rows_;
}

std::vector<FpSubspace> all_subspaces(int p, std::size_t dim) {
  const auto vectors = all_vectors(p, dim);
  std::set<FpSubspace> seen{FpSubspace(p, dim)};
  std::vector<FpSubspace> frontier{FpSubspace(p, dim)};
  while (!frontier.empty()) {
    std::vector<FpSubspace> next;
    for (const auto& s : frontier) {
      for (const auto& v : vectors) {
        if (s.contains(v)) continue;
        auto t = s.with(v);
        if (seen.insert(t).second) next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<FpSubspace>> complete_flags(int p, std::size_t dim) {
  const auto subspaces = all_subspaces(p, dim);
  std::vector<std::vector<const FpSubspace*>> by_dim(dim + 1);
  for (const auto& s : subspaces) by_dim[s.dimension()].push_back(&s);

  std::vector<std::vector<FpSubspace>> flags;
  std::vector<FpSubspace> current{*by_dim[0].front()};
  auto extend = [&](auto&& self) -> void {
    if (current.size() == dim + 1) {
      flags.push_back(current);
      return;
    }
    for (const FpSubspace* s : by_dim[current.size()]) {
      if (!current.back().is_subset_of(*s)) continue;
      current.push_back(*s);
      self(self);
      current.pop_back();
    }
  };
  extend(extend);
  return flags;
}

std::size_t flag_count(int p, std::size_t dim) {
  std::size_t total = 1;
  std::size_t pi = 1;
  for (std::size_t i = 1; i <= dim; ++i) {
    pi *= static_cast<std::size_t>(p);
    total *= (pi - 1) / static_cast<std::size_t>(p - 1);
  }
  return total;
}

}  // namespace cnet::padic
