#pragma once

// Independent dimension oracle for spaces of equivariant maps
// Hom_G(V^m, V^n), G one of O_d, Sp_d, GL_d. Computed as the null
// space of the Lie algebra action on flattened hom entries, with the
// diagonal subgroup handled by restricting to weight-balanced entries
// (for the orthogonal group, to entries fixed by all coordinate sign
// flips). No diagram machinery is involved anywhere in this path.

#include <vector>

#include "brauerkit/linalg.hpp"

namespace brauerkit {

enum class GroupKind { orthogonal, symplectic, general_linear };

// Rejects d > 4 or m+n > 8.
int invariant_dimension(GroupKind g, int d, int m, int n);

// Full basis of the defining Lie algebra as d x d matrices, diagonal
// part included. Symplectic requires even d.
std::vector<Mat> lie_basis(GroupKind g, int d);

// diag(-1, 1, ..., 1), the extra component generator of O_d.
Mat orthogonal_reflection(int d);

// Action of a one-strand operator X on the k-th tensor power by the
// Leibniz rule: sum over positions of I (x) ... X ... (x) I.
Mat rep_on_power(const Mat& x, int k);

// Action of a group element g on the k-th tensor power: g (x) ... (x) g.
Mat group_on_power(const Mat& g, int k);

}  // namespace brauerkit
