#include "qturan/conditions.hpp"

#include <functional>

#include "qturan/errors.hpp"
#include "qturan/qcore.hpp"

namespace qturan {

namespace {

// Checks u_i/v_i <= u_{i+1}/v_{i+1} for i < n as u_i v_{i+1} <= u_{i+1} v_i.
// u = e_{big-i}, v = e_{small-i}.
bool ratio_chain(const std::vector<Scalar>& e_big, const std::vector<Scalar>& e_small) {
  const std::size_t big = e_big.size() - 1;
  const std::size_t small = e_small.size() - 1;
  for (std::size_t i = 0; i < small; ++i) {
    const Scalar lhs = e_big[big - i] * e_small[small - i - 1];
    const Scalar rhs = e_big[big - i - 1] * e_small[small - i];
    if (lhs > rhs) return false;
  }
  return true;
}

void require_nonneg(const ParamVector& v, const char* name) {
  for (const Scalar& x : v) {
    if (x.sign() < 0) throw DomainError(std::string(name) + " must have nonnegative entries");
  }
}

bool all_positive(const ParamVector& v) {
  for (const Scalar& x : v) {
    if (x.sign() <= 0) return false;
  }
  return true;
}

// Calls visit(indices) for every size-k subset of {0..n-1} in lexicographic
// order until visit returns true.
bool any_subset(std::size_t n, std::size_t k,
                const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (visit(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

ParamVector pick(const ParamVector& v, const std::vector<std::size_t>& idx) {
  std::vector<Scalar> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(v[i]);
  return ParamVector(std::move(out));
}

}  // namespace

CDVectors derive_cd(const ParamVector& a, const ParamVector& b, const QBase& q) {
  require_nonneg(a, "a");
  require_nonneg(b, "b");
  auto transform = [&](const ParamVector& v) {
    std::vector<Scalar> out;
    out.reserve(v.size());
    for (const Scalar& x : v) out.push_back(q.pow(-x) - q.one());
    return ParamVector(std::move(out), true);
  };
  return {transform(a), transform(b)};
}

bool increasing_chain_holds(const ParamVector& c, const ParamVector& d) {
  if (c.size() < d.size()) throw DimensionError("increasing chain needs t >= s");
  require_nonneg(c, "c");
  require_nonneg(d, "d");
  return ratio_chain(elementary_symmetric(c), elementary_symmetric(d));
}

bool decreasing_chain_holds(const ParamVector& c, const ParamVector& d) {
  if (c.size() > d.size()) throw DimensionError("decreasing chain needs t <= s");
  require_nonneg(c, "c");
  require_nonneg(d, "d");
  return ratio_chain(elementary_symmetric(d), elementary_symmetric(c));
}

bool chain_condition_a(const ParamVector& c, const ParamVector& d) {
  if (c.size() < d.size() || c.size() > d.size() + 1) {
    throw DimensionError("condition (a) needs s <= t <= s+1, got t=" + std::to_string(c.size()) +
                         ", s=" + std::to_string(d.size()));
  }
  return increasing_chain_holds(c, d);
}

bool chain_condition_b(const ParamVector& c, const ParamVector& d) {
  if (c.size() > d.size()) {
    throw DimensionError("condition (b) needs t <= s, got t=" + std::to_string(c.size()) +
                         ", s=" + std::to_string(d.size()));
  }
  return decreasing_chain_holds(c, d);
}

ChainVerdict majorization_sufficiency(const ParamVector& c, const ParamVector& d) {
  ChainVerdict out;
  const std::size_t t = c.size();
  const std::size_t s = d.size();
  const bool positive = all_positive(c) && all_positive(d);

  bool inc_chain = false;
  bool dec_chain = false;
  if (t >= s) inc_chain = increasing_chain_holds(c, d);
  if (t <= s) dec_chain = decreasing_chain_holds(c, d);
  out.applies_case_a = inc_chain && t <= s + 1;
  out.applies_case_b = dec_chain;

  if (!positive) return out;
  if (t >= s) {
    any_subset(t, s, [&](const std::vector<std::size_t>& idx) {
      if (!weak_supermajorizes(d, pick(c, idx))) return false;
      out.via_majorization = true;
      out.witness_subvector = idx;
      if (!inc_chain) out.implication_holds = false;
      return true;
    });
  }
  if (t <= s && !out.via_majorization) {
    any_subset(s, t, [&](const std::vector<std::size_t>& idx) {
      if (!weak_supermajorizes(c, pick(d, idx))) return false;
      out.via_majorization = true;
      out.witness_subvector = idx;
      if (!dec_chain) out.implication_holds = false;
      return true;
    });
  }
  return out;
}

std::string to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::Increasing: return "increasing";
    case Monotonicity::Decreasing: return "decreasing";
    case Monotonicity::Constant: return "constant";
    case Monotonicity::NonMonotone: return "non-monotone";
  }
  return "?";
}

RtsProbe rts_monotonicity_probe(const ParamVector& c, const ParamVector& d,
                                const std::vector<Scalar>& grid) {
  if (grid.size() < 2) throw DomainError("monotonicity probe needs at least two grid points");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i].sign() <= 0) throw DomainError("probe grid must be positive");
    if (i > 0 && !(grid[i - 1] < grid[i])) throw DomainError("probe grid must be strictly increasing");
  }
  std::vector<Scalar> values;
  values.reserve(grid.size());
  for (const Scalar& y : grid) {
    Scalar num = y.like(1);
    Scalar den = y.like(1);
    for (const Scalar& ck : c) num *= ck.in_mode(y.mode()) + y;
    for (const Scalar& dk : d) den *= dk.in_mode(y.mode()) + y;
    values.push_back(num / den);
  }

  const Scalar tol = default_tolerance(grid.front().mode());
  bool up = false;
  bool down = false;
  for (std::size_t i = 1; i < values.size(); ++i) {
    const Scalar diff = values[i] - values[i - 1];
    const Scalar slack = tol * max(abs(values[i]), abs(values[i - 1]));
    if (diff > slack) up = true;
    if (-diff > slack) down = true;
  }
  RtsProbe out;
  if (up && down) {
    out.observed = Monotonicity::NonMonotone;
  } else if (up) {
    out.observed = Monotonicity::Increasing;
  } else if (down) {
    out.observed = Monotonicity::Decreasing;
  } else {
    out.observed = Monotonicity::Constant;
  }

  const bool inc = c.size() >= d.size() && increasing_chain_holds(c, d);
  const bool dec = c.size() <= d.size() && decreasing_chain_holds(c, d);
  if (inc && dec) {
    out.predicted = Monotonicity::Constant;
  } else if (inc) {
    out.predicted = Monotonicity::Increasing;
  } else if (dec) {
    out.predicted = Monotonicity::Decreasing;
  }
  if (out.predicted) {
    out.consistent = out.observed == *out.predicted || out.observed == Monotonicity::Constant;
  }
  return out;
}

TheoremCase theorem_case(const ParamVector& a, const ParamVector& b, const QBase& q) {
  TheoremCase out{false, false, derive_cd(a, b, q)};
  const std::size_t t = a.size();
  const std::size_t s = b.size();
  if (s <= t && t <= s + 1) out.case_a = chain_condition_a(out.cd.c, out.cd.d);
  if (t <= s) out.case_b = chain_condition_b(out.cd.c, out.cd.d);
  return out;
}

}  // namespace qturan
