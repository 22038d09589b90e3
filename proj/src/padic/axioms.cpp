#include "clusternet/padic/axioms.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <exception>
#include <limits>

#include "clusternet/errors.hpp"

namespace cnet::padic {
namespace {

struct Window {
  std::size_t d;
  Int side;  // p^w
  std::size_t points;

  std::vector<Int> decode(std::size_t index, Int base) const {
    std::vector<Int> x(d);
    for (std::size_t i = 0; i < d; ++i) {
      x[i] = static_cast<Int>(index % static_cast<std::size_t>(base));
      index /= static_cast<std::size_t>(base);
    }
    return x;
  }
};

Window make_window(const NormSpec& n, int window) {
  if (window < 1) throw PreconditionError("window must be at least 1");
  if (window >= n.context().precision()) {
    throw PrecisionError("window " + std::to_string(window) + " needs precision above " +
                         std::to_string(window));
  }
  Window w{n.dimension(), 1, 1};
  for (int i = 0; i < window; ++i) w.side *= n.context().prime();
  for (std::size_t i = 0; i < w.d; ++i) w.points *= static_cast<std::size_t>(w.side);
  return w;
}

std::vector<Int> scaled(const std::vector<Int>& x, Int c) {
  auto out = x;
  for (auto& v : out) v *= c;
  return out;
}

// Nondegeneracy and homogeneity; these touch each point once.
void check_pointwise(const NormSpec& n, const Window& w, AxiomReport& report) {
  const Int p = n.context().prime();
  for (std::size_t idx = 0; idx < w.points; ++idx) {
    const auto x = w.decode(idx, w.side);
    const Rational nx = norm_eval(n, x);
    const bool zero = idx == 0;
    if (zero != (nx == 0)) {
      report.nondegenerate = false;
      if (!report.witness) report.witness = AxiomWitness{"nondegeneracy", x, {}};
    }
    if (zero) continue;
    const bool ok = norm_eval(n, scaled(x, p)) == nx / p && norm_eval(n, scaled(x, -1)) == nx &&
                    norm_eval(n, scaled(x, 1 + p)) == nx;
    if (!ok) {
      report.linear = false;
      if (!report.witness) report.witness = AxiomWitness{"linearity", x, {}};
    }
  }
}

}  // namespace

AxiomReport check_norm_axioms(const NormSpec& n, int window) {
  const Window w = make_window(n, window);
  AxiomReport report;
  report.window = window;
  report.points = w.points;
  report.pairs = w.points * (w.points + 1) / 2;
  check_pointwise(n, w, report);

  // Index sums of window points never carry in base 2p^w - 1.
  const Int base = 2 * w.side - 1;
  std::size_t table_size = 1;
  for (std::size_t i = 0; i < w.d; ++i) table_size *= static_cast<std::size_t>(base);

  // N depends on a point only through its profile, so each distinct profile
  // is valued once and the table stores its rank among all values.
  const int k = n.context().precision();
  const std::uint64_t radix = static_cast<std::uint64_t>(k) + 1;
  std::vector<std::uint64_t> keys(table_size);
#pragma omp parallel for schedule(static)
  for (std::size_t t = 0; t < table_size; ++t) {
    const auto x = w.decode(t, base);
    const auto profile = norm_profile(n, PadicVector::from_integers(n.context(), x));
    std::uint64_t key = 0;
    if (!profile.rows.empty()) {
      key = static_cast<std::uint64_t>(profile.shift) + 1;
      for (int v : profile.rows) key = key * radix + static_cast<std::uint64_t>(v);
    }
    keys[t] = key;
  }
  std::vector<std::uint64_t> distinct_keys = keys;
  std::sort(distinct_keys.begin(), distinct_keys.end());
  distinct_keys.erase(std::unique(distinct_keys.begin(), distinct_keys.end()), distinct_keys.end());

  std::vector<Rational> key_value(distinct_keys.size());
  for (std::size_t i = 0; i < distinct_keys.size(); ++i) {
    std::uint64_t key = distinct_keys[i];
    if (key == 0) continue;
    NormProfile profile;
    profile.rows.resize(w.d);
    for (std::size_t r = w.d; r-- > 0;) {
      profile.rows[r] = static_cast<int>(key % radix);
      key /= radix;
    }
    profile.shift = static_cast<int>(key) - 1;
    key_value[i] = norm_value(n, profile);
  }
  std::vector<Rational> distinct = key_value;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() > 255) throw InvariantError("more norm values than the rank table holds");
  std::vector<std::uint8_t> key_rank(distinct_keys.size());
  for (std::size_t i = 0; i < distinct_keys.size(); ++i) {
    key_rank[i] = static_cast<std::uint8_t>(
        std::lower_bound(distinct.begin(), distinct.end(), key_value[i]) - distinct.begin());
  }
  std::vector<std::uint8_t> rank(table_size);
  for (std::size_t t = 0; t < table_size; ++t) {
    rank[t] = key_rank[static_cast<std::size_t>(
        std::lower_bound(distinct_keys.begin(), distinct_keys.end(), keys[t]) - distinct_keys.begin())];
  }

  std::vector<std::uint32_t> table_index(w.points);
  for (std::size_t idx = 0; idx < w.points; ++idx) {
    std::size_t rest = idx, mult = 1, t = 0;
    for (std::size_t i = 0; i < w.d; ++i) {
      t += (rest % static_cast<std::size_t>(w.side)) * mult;
      rest /= static_cast<std::size_t>(w.side);
      mult *= static_cast<std::size_t>(base);
    }
    table_index[idx] = static_cast<std::uint32_t>(t);
  }

  const long long npts = static_cast<long long>(w.points);
  long long first_bad = std::numeric_limits<long long>::max();
  const std::uint8_t* rk = rank.data();
  const std::uint32_t* ti = table_index.data();
#pragma omp parallel for schedule(dynamic, 16) reduction(min : first_bad)
  for (long long x = 0; x < npts; ++x) {
    const std::uint8_t* shifted = rk + ti[x];
    const std::uint8_t rx = rk[ti[x]];
    unsigned bad = 0;
    for (long long y = x; y < npts; ++y) {
      const std::uint8_t ry = rk[ti[y]];
      bad |= static_cast<unsigned>(shifted[ti[y]] > std::max(rx, ry));
    }
    if (bad == 0) continue;
    for (long long y = x; y < npts; ++y) {
      if (shifted[ti[y]] > std::max(rx, rk[ti[y]])) {
        first_bad = std::min(first_bad, x * npts + y);
        break;
      }
    }
  }
  if (first_bad != std::numeric_limits<long long>::max()) {
    report.strong_triangle = false;
    if (!report.witness) {
      report.witness = AxiomWitness{"strong triangle",
                                    w.decode(static_cast<std::size_t>(first_bad / npts), w.side),
                                    w.decode(static_cast<std::size_t>(first_bad % npts), w.side)};
    }
  }
  return report;
}

AxiomReport check_norm_axioms_serial(const NormSpec& n, int window) {
  const Window w = make_window(n, window);
  AxiomReport report;
  report.window = window;
  report.points = w.points;
  report.pairs = w.points * (w.points + 1) / 2;
  check_pointwise(n, w, report);

  std::vector<std::vector<Int>> pts(w.points);
  std::vector<Rational> norms(w.points);
  for (std::size_t i = 0; i < w.points; ++i) {
    pts[i] = w.decode(i, w.side);
    norms[i] = norm_eval(n, pts[i]);
  }
  for (std::size_t x = 0; x < w.points; ++x) {
    for (std::size_t y = x; y < w.points; ++y) {
      std::vector<Int> s(w.d);
      for (std::size_t i = 0; i < w.d; ++i) s[i] = pts[x][i] + pts[y][i];
      if (norm_eval(n, s) > std::max(norms[x], norms[y])) {
        report.strong_triangle = false;
        if (!report.witness) report.witness = AxiomWitness{"strong triangle", pts[x], pts[y]};
        return report;
      }
    }
  }
  return report;
}

}  // namespace cnet::padic
