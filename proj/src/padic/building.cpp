#include "clusternet/padic/building.hpp"

#include <omp.h>

#include "clusternet/errors.hpp"

namespace cnet::padic {
namespace {

std::vector<Int> combine_columns(const SquareMatrix& c, const std::vector<int>& x) {
  std::vector<Int> v(c.n, 0);
  for (std::size_t j = 0; j < c.n; ++j) {
    if (x[j] == 0) continue;
    for (std::size_t i = 0; i < c.n; ++i) v[i] += c(i, j) * x[j];
  }
  return v;
}

bool lattice_contains(const Lattice& l, const std::vector<Int>& column, int shift) {
  return l.contains(PadicVector::from_integers(l.context(), column).scaled(shift));
}

int exact_valuation(mpz_class x, Int p, mpz_class* unit = nullptr) {
  const mpz_class pz(static_cast<long>(p));
  int v = 0;
  while (x % pz == 0) {
    x /= pz;
    ++v;
  }
  if (unit) *unit = x;
  return v;
}

Int gaussian_binomial(Int p, std::size_t n, std::size_t k) {
  Int num = 1, den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    Int a = 1, b = 1;
    for (std::size_t e = 0; e < n - i; ++e) a *= p;
    for (std::size_t e = 0; e < i + 1; ++e) b *= p;
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

}  // namespace

Lattice sandwich_lattice(const Lattice& top, const FpSubspace& w) {
  const Context& ctx = top.context();
  if (w.ambient_dimension() != top.dimension() || w.prime() != ctx.prime()) {
    throw PreconditionError("subspace does not live in L/pL");
  }
  std::vector<std::vector<Int>> gens;
  for (auto col : top.hermite_columns()) {
    for (auto& x : col) x *= ctx.prime();
    gens.push_back(std::move(col));
  }
  for (const auto& b : w.basis()) gens.push_back(combine_columns(top.hermite(), b));
  return Lattice::from_generators(ctx, top.dimension(), gens, top.shift(), top.containment() + 1);
}

std::vector<Lattice> lattices_between(const Lattice& top) {
  std::vector<Lattice> out;
  for (const auto& w : all_subspaces(static_cast<int>(top.context().prime()), top.dimension())) {
    out.push_back(sandwich_lattice(top, w));
  }
  return out;
}

bool is_adjacent(const Lattice& a, const Lattice& b) {
  const Lattice ka = a.lattice_class().representative();
  const Lattice kb = b.lattice_class().representative();
  if (ka == kb) return false;
  const Lattice bottom = ka.dilated(1);
  for (int t = 0; t <= 1; ++t) {
    const Lattice c = kb.dilated(t);
    if (bottom.is_subset_of(c) && c.is_subset_of(ka)) return true;
  }
  return false;
}

std::vector<LatticeChain> maximal_chains(const Lattice& top) {
  std::vector<LatticeChain> out;
  for (const auto& flag : complete_flags(static_cast<int>(top.context().prime()), top.dimension())) {
    LatticeChain chain;
    for (const auto& w : flag) chain.lattices.push_back(sandwich_lattice(top, w));
    out.push_back(std::move(chain));
  }
  return out;
}

std::vector<std::vector<Int>> basis_columns_from_chain(const LatticeChain& chain) {
  if (chain.lattices.empty() || chain.lattices.size() != chain.top().dimension() + 1) {
    throw PreconditionError("chain is not maximal: expected " +
                            std::to_string(chain.lattices.empty() ? 0 : chain.top().dimension() + 1) +
                            " lattices, got " + std::to_string(chain.lattices.size()));
  }
  chain.validate();
  const Lattice& top = chain.top();
  const std::size_t d = top.dimension();
  const int p = static_cast<int>(top.context().prime());

  std::vector<std::vector<Int>> out;
  for (std::size_t j = 1; j <= d; ++j) {
    std::vector<int> x(d, 0);
    bool found = false;
    while (!found) {
      std::size_t i = d;
      while (i > 0) {
        --i;
        if (++x[i] < p) break;
        x[i] = 0;
        if (i == 0) throw InvariantError("no basis vector separates L_" + std::to_string(j));
      }
      auto v = combine_columns(top.hermite(), x);
      if (lattice_contains(chain.lattices[j], v, top.shift()) &&
          !lattice_contains(chain.lattices[j - 1], v, top.shift())) {
        out.push_back(std::move(v));
        found = true;
      }
    }
  }
  return out;
}

std::vector<PadicVector> basis_from_chain(const LatticeChain& chain) {
  std::vector<PadicVector> out;
  for (const auto& col : basis_columns_from_chain(chain)) {
    out.push_back(PadicVector::from_integers(chain.top().context(), col).scaled(chain.top().shift()));
  }
  return out;
}

DecompositionCheck check_basis_decomposition(const LatticeChain& chain,
                                             const std::vector<std::vector<Int>>& columns) {
  DecompositionCheck check;
  const Lattice& top = chain.top();
  const Context& ctx = top.context();
  const std::size_t d = top.dimension();
  const int shift = top.shift();
  if (columns.size() != d || chain.lattices.size() != d + 1) {
    throw PreconditionError("basis and chain sizes do not match the dimension");
  }

  for (std::size_t j = 1; j <= d; ++j) {
    const auto& f = columns[j - 1];
    if (!lattice_contains(chain.lattices[j], f, shift) ||
        lattice_contains(chain.lattices[j - 1], f, shift)) {
      check.memberships = false;
      check.failures.push_back("f_" + std::to_string(j) + " not in L_" + std::to_string(j) +
                               " \\ L_" + std::to_string(j - 1));
    }
  }

  const mpz_class det = det_exact(SquareMatrix::from_columns(columns));
  int sum_a = 0;
  for (int a : top.exponents()) sum_a += a;
  check.expected_valuation = static_cast<int>(d) * shift + sum_a;
  if (det == 0) {
    check.det_valuation = -1;
    check.failures.push_back("basis is singular");
    check.decomposition = false;
    return check;
  }
  const int delta = exact_valuation(det, ctx.prime());
  check.det_valuation = static_cast<int>(d) * shift + delta;

  for (std::size_t j = 0; j <= d; ++j) {
    std::vector<std::vector<Int>> gens;
    for (std::size_t i = 0; i < d; ++i) {
      auto g = columns[i];
      if (i >= j) {
        for (auto& x : g) x *= ctx.prime();
      }
      gens.push_back(std::move(g));
    }
    try {
      const Lattice m = Lattice::from_generators(ctx, d, gens, shift, delta + 1);
      const Lattice& l = chain.lattices[j];
      if (!l.is_subset_of(m) || !m.is_subset_of(l)) {
        check.decomposition = false;
        check.failures.push_back("L_" + std::to_string(j) + " differs from its basis decomposition");
      }
    } catch (const PrecisionError& e) {
      check.decomposition = false;
      check.failures.push_back(e.what());
    }
  }
  return check;
}

NormSpec norm_from_chain(const LatticeChain& chain, const std::vector<Rational>& q) {
  const auto columns = basis_columns_from_chain(chain);
  const Lattice& top = chain.top();
  const Context& ctx = top.context();
  if (q.size() != top.dimension()) {
    throw PreconditionError("expected " + std::to_string(top.dimension()) + " weights, got " +
                            std::to_string(q.size()));
  }
  for (std::size_t i = 1; i < q.size(); ++i) {
    if (!(q[i - 1] < q[i])) throw PreconditionError("weights must be strictly increasing");
  }
  const SquareMatrix f = SquareMatrix::from_columns(columns);
  mpz_class unit;
  const int delta = exact_valuation(det_exact(f), ctx.prime(), &unit);
  unit %= mpz_class(static_cast<long>(ctx.modulus()));
  const Int uinv = ctx.inverse(ctx.reduce(unit.get_si()));
  SquareMatrix frame = adjugate_mod(ctx, f);
  for (auto& x : frame.a) x = ctx.mul(x, uinv);
  return NormSpec(ctx, std::move(frame), q, top.shift() + delta);
}

std::size_t subspace_count(int p, std::size_t d) {
  Int total = 0;
  for (std::size_t k = 0; k <= d; ++k) total += gaussian_binomial(p, d, k);
  return static_cast<std::size_t>(total);
}

CorrespondenceReport verify_correspondence(Int p, std::size_t d, const std::vector<Rational>& q,
                                           int precision, std::optional<int> axioms_window) {
  const Context ctx(p, precision);
  if (d == 0) throw PreconditionError("dimension must be at least 1");
  const NormSpec identity = NormSpec::diagonal(ctx, q);
  if (identity.dimension() != d) throw PreconditionError("q must have d entries");
  if (axioms_window) {
    if (*axioms_window < 1) throw PreconditionError("window must be at least 1");
    if (*axioms_window >= precision) {
      throw PrecisionError("window " + std::to_string(*axioms_window) + " needs precision above " +
                           std::to_string(*axioms_window));
    }
  }

  CorrespondenceReport report;
  report.p = p;
  report.d = d;
  report.q = q;
  report.precision = precision;
  report.generic = identity.generic();
  report.axioms_window = axioms_window;
  if (report.generic && !identity.increasing()) {
    throw PreconditionError("distinct weights must be listed in increasing order");
  }

  const Lattice top = Lattice::standard(ctx, d);
  report.strictly_between = lattices_between(top).size() - 2;
  report.expected_strictly_between = subspace_count(static_cast<int>(p), d) - 2;
  const auto chains = maximal_chains(top);
  report.chain_count = chains.size();
  report.flag_count = flag_count(static_cast<int>(p), d);
  report.identity_chain_length = intermediary_balls(identity, top).lattices.size();
  const bool counts_ok = report.chain_count == report.flag_count &&
                         report.strictly_between == report.expected_strictly_between;

  if (!report.generic) {
    report.passed = counts_ok && report.identity_chain_length < d + 1;
    return report;
  }

  report.chains.resize(chains.size());
  const long long n = static_cast<long long>(chains.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long c = 0; c < n; ++c) {
    ChainCheck& check = report.chains[static_cast<std::size_t>(c)];
    check.index = static_cast<std::size_t>(c);
    check.chain = chains[check.index];
    try {
      check.basis = basis_columns_from_chain(check.chain);
      check.decomposition = check_basis_decomposition(check.chain, check.basis);
      const NormSpec norm = norm_from_chain(check.chain, q);
      check.recovered = intermediary_balls(norm, top);
      check.round_trip = *check.recovered == check.chain;
      if (axioms_window) check.axioms = check_norm_axioms(norm, *axioms_window);
    } catch (const std::exception& e) {
      check.error = e.what();
    }
  }

  bool all_ok = true;
  for (const auto& check : report.chains) {
    if (check.round_trip) ++report.round_trips_passed;
    all_ok = all_ok && check.passed();
  }
  for (std::size_t a = 0; a < report.chains.size(); ++a) {
    for (std::size_t b = a + 1; b < report.chains.size(); ++b) {
      const auto& ra = report.chains[a].recovered;
      const auto& rb = report.chains[b].recovered;
      if (ra && rb && *ra == *rb) {
        report.distinct_ball_chains = false;
        report.collisions.emplace_back(a, b);
      }
    }
  }
  report.passed = counts_ok && all_ok && report.distinct_ball_chains;
  return report;
}

}  // namespace cnet::padic
