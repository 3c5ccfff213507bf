#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "contraction/cocycle.hpp"
#include "contraction/rational_poly.hpp"
#include "contraction/series.hpp"

// Reference computations that share no code path with the library routines
// they are compared against.
namespace contraction::oracle {

/// |lambda| for the eigenvalues of the companion matrix of f.
std::vector<double> root_moduli(const RationalPoly& f);

/// Whether every root has modulus below 1, or nullopt when some modulus lies
/// within `margin` of 1.
std::optional<bool> roots_inside_unit_circle(const RationalPoly& f,
                                             double margin);

/// C^d = 0 mod p for the companion matrix C of X^d + sum a_i X^i with
/// integer a_i.
bool companion_nilpotent_mod(const std::vector<std::int64_t>& lower,
                             std::int64_t p);

/// sum_i x_i y_{i+n} t^i over the supports of exact x, y.
Series omega_direct(int n, const Series& x, const Series& y);

/// sum_n s_n x_{d-n} y_{d+n} t^d over the supports of exact x, y, for a
/// bit sequence that vanishes beyond its window.
Series eta_direct(const BitSeq& s, const Series& x, const Series& y);

/// Smallest j >= 1 with j x = 0, found by repeated addition.
std::int64_t additive_order(const Series& x);

}  // namespace contraction::oracle
