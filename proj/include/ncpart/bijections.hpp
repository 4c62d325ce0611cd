#pragma once

#include "ncpart/structures.hpp"

namespace ncpart {

// Up steps of a Dyck path are labeled 1..n in order of appearance. Every
// maximal run of down steps is one block; its elements are the labels of the
// up steps matched by the downs in the run.
NCPartition dyck_to_partition(const DyckPath& path);
DyckPath partition_to_dyck(const NCPartition& partition);

// Depth-first walk: U descends to a new child, D returns to the parent.
// Vertex i (1..n) is created by up step i, so the edge into vertex i carries
// label i.
PlanarTree dyck_to_planar_tree(const DyckPath& path);
DyckPath planar_tree_to_dyck(const PlanarTree& tree);

/// Blocks read off the tree: for each leaf, the labels of the edges walked on
/// the way back until the walk turns into an unexplored branch or reaches the
/// root.
NCPartition planar_tree_blocks(const PlanarTree& tree);

/// Recursive map at the first return to zero. `U S D` gives a new root whose
/// right subtree is the tree of S and whose left edge carries the label of
/// the leading up step. `S1 S2` (S2 primitive) glues the root of the tree of
/// S1 onto the leaf left of the root of the tree of S2.
BinaryTree dyck_to_binary_tree(const DyckPath& path);
DyckPath binary_tree_to_dyck(const BinaryTree& tree);

/// For every leaf at the end of a right edge, walk back over right edges
/// only; the left-edge labels of the vertices passed form a block. Throws
/// ValidationError if an internal vertex on such a path is unlabeled.
NCPartition binary_tree_blocks(const BinaryTree& tree);

/// Doubling: x splits into 2x-1 and 2x. Singleton {x} becomes (2x-1, 2x);
/// block x1 < ... < xk becomes the outer pair (2x1-1, 2xk) plus inner pairs
/// (2xi, 2x(i+1)-1).
NCPairing double_partition(const NCPartition& partition);

/// Inverse of double_partition. Throws ValidationError when the pairing is
/// not in the image of the doubling map.
NCPartition undouble(const NCPairing& pairing);

/// Opening points become up steps, closing points down steps.
DyckPath pairing_to_dyck(const NCPairing& pairing);
/// Matches every up step with its down step.
NCPairing dyck_to_pairing(const DyckPath& path);

}  // namespace ncpart
