#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qturan/qbase.hpp"
#include "qturan/scalar.hpp"

namespace qturan {

struct CDVectors {
  ParamVector c;  // q^(-a_k) - 1
  ParamVector d;  // q^(-b_k) - 1
};

/// c_k = q^(-a_k) - 1, d_k = q^(-b_k) - 1; exact on the half grid.
CDVectors derive_cd(const ParamVector& a, const ParamVector& b, const QBase& q);

/// For t >= s: e_t(c)/e_s(d) <= e_{t-1}(c)/e_{s-1}(d) <= ... <= e_{t-s}(c),
/// compared by cross-multiplication so vanishing e_k are handled exactly.
bool increasing_chain_holds(const ParamVector& c, const ParamVector& d);
/// For t <= s: e_s(d)/e_t(c) <= e_{s-1}(d)/e_{t-1}(c) <= ... <= e_{s-t}(d).
bool decreasing_chain_holds(const ParamVector& c, const ParamVector& d);

/// The increasing chain, restricted to s <= t <= s+1 (DimensionError otherwise).
bool chain_condition_a(const ParamVector& c, const ParamVector& d);
/// The decreasing chain, restricted to t <= s (DimensionError otherwise).
bool chain_condition_b(const ParamVector& c, const ParamVector& d);

struct ChainVerdict {
  bool applies_case_a = false;
  bool applies_case_b = false;
  bool via_majorization = false;
  /// Indices of the majorization witness: into c when it supports the
  /// increasing chain, into d when it supports the decreasing one.
  std::optional<std::vector<std::size_t>> witness_subvector;
  /// The witness direction implies its chain; false would be a counterexample.
  bool implication_holds = true;
};

/// Exhaustive search for a size-min(t,s) subvector witnessing
/// d <=_W c' (t >= s) or c <=_W d' (t <= s), together with an independent
/// evaluation of the chain conditions.
ChainVerdict majorization_sufficiency(const ParamVector& c, const ParamVector& d);

enum class Monotonicity { Increasing, Decreasing, Constant, NonMonotone };
std::string to_string(Monotonicity m);

struct RtsProbe {
  Monotonicity observed = Monotonicity::NonMonotone;
  /// Direction implied by a chain condition that holds, if any.
  std::optional<Monotonicity> predicted;
  bool consistent = true;
};

/// R(y) = prod(c_k + y)/prod(d_k + y) on a strictly increasing positive
/// grid. Exact grids compare exactly; Float grids ignore reversals within
/// the working tolerance.
RtsProbe rts_monotonicity_probe(const ParamVector& c, const ParamVector& d,
                                const std::vector<Scalar>& grid);

/// Which case of the sign theorem applies to (a, b): the chain condition that
/// holds together with its dimension hypothesis.
struct TheoremCase {
  bool case_a = false;  // s <= t <= s+1 with the increasing chain: Delta_g <= 0
  bool case_b = false;  // t <= s with the decreasing chain: Delta_g >= 0
  CDVectors cd;
};
TheoremCase theorem_case(const ParamVector& a, const ParamVector& b, const QBase& q);

}  // namespace qturan
