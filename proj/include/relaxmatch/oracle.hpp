#pragma once

#include "relaxmatch/graph.hpp"

namespace relaxmatch {

struct OracleOptions {
  int limit = 10;  // refuse exhaustive work above this order
};

// All Pi with dis_{A->A}(Pi) <= rho, by backtracking with partial-distortion
// pruning. For rho = 0 the result is the symmetry (automorphism) group.
PermutationSet enumerate_symmetries(const Graph& a, double rho, const OracleOptions& opts = {});

// All Pi with dis_{A->B}(Pi) <= rho. Empty certifies non-(rho-)isomorphism at
// oracle scale.
PermutationSet enumerate_isomorphisms(const Graph& a, const Graph& b, double rho,
                                      const OracleOptions& opts = {});

// Global minimizer of distortion over all n! permutations; ties resolved to the
// lexicographically smallest map.
std::pair<Permutation, double> brute_force_min_distortion(const Graph& a, const Graph& b,
                                                          const OracleOptions& opts = {});

}  // namespace relaxmatch
