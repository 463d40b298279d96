// Copyright (c) 2026 The trishell authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "trishell/complex.hpp"

namespace trishell {

enum class StandardKind {
  simplex_boundary_4,  // boundary of the 4-simplex: 5 tetrahedra on 5 vertices
  cycle_join,          // join of a p-cycle and a q-cycle: p*q tetrahedra
  cross_polytope_3,    // boundary of the 3-dimensional cross-polytope: 16 tetrahedra
};

/// Desk-scale triangulated 3-spheres with decimal vertex labels.
/// cycle_join(p, q) has facets {i, i+1 mod p, p+j, p+(j+1 mod q)}.
/// Throws BadParameter (cycle_join needs p, q >= 3).
SimplicialComplex generate_standard(StandardKind kind, int p = 0, int q = 0);

const char* to_string(StandardKind kind);

}  // namespace trishell
