#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "contraction/cocycle.hpp"

namespace contraction {

/// A map A x A -> A under test; need not be a cocycle.
using CocycleFn = std::function<Series(const Series&, const Series&)>;

CocycleFn as_function(const CocycleSpec& spec);

/// A replayable failure: inputs and both sides in the series grammar.
struct Witness {
  std::vector<std::string> inputs;
  std::string lhs;
  std::string rhs;
};

struct CheckReport {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<Witness> witnesses;  // at most kMaxWitnesses are kept

  static constexpr std::size_t kMaxWitnesses = 8;

  bool passed() const noexcept { return failed == 0; }
  void record_failure(Witness w);
  void merge(const CheckReport& other);
};

struct Triple {
  Series x, y, z;
};
struct Pair {
  Series x, y;
};

/// omega(y,z) - omega(x+y,z) + omega(x,y+z) - omega(x,y) = 0 at shared
/// precision.
CheckReport check_cocycle_identity(const CocycleFn& omega,
                                   const std::vector<Triple>& triples);
CheckReport check_cocycle_identity(const CocycleSpec& spec,
                                   const std::vector<Triple>& triples);

/// t^k omega(x, y) = omega(t^k x, t^k y) for every k in [k_lo, k_hi].
CheckReport check_equivariance(const CocycleFn& omega,
                               const std::vector<Pair>& pairs, int k_lo,
                               int k_hi);
CheckReport check_equivariance(const CocycleSpec& spec,
                               const std::vector<Pair>& pairs, int k_lo,
                               int k_hi);

/// Additivity in each slot on the given triples:
/// omega(x+y, z) = omega(x,z) + omega(y,z) and omega(z, x+y) likewise.
CheckReport check_biadditivity(const CocycleFn& omega,
                               const std::vector<Triple>& triples);

}  // namespace contraction
