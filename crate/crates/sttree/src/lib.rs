/*!
Dynamic forests based on *search trees on trees* (STTs).

This crate maintains collections of edge-weighted trees (*dynamic forests*) under edge
insertions and deletions, and answers path-weight queries. Nodes are fixed at construction
time; only edges change. Edge weights come from an arbitrary commutative monoid (see
[MonoidWeight]), so a single implementation covers connectivity queries, path sums, and
path maxima.

The main implementations represent each tree as a 2-cut search tree on the underlying tree,
stored compactly via three pointers per node (see [twocut::basic::SttForest]). All
restructuring goes through a single O(1) rotation primitive; everything on top of it is
generic over a [twocut::NodeToRootStrategy] that decides *which* rotations to perform.
Four strategies are provided:

* [twocut::mtrtt::MoveToRoot] -- rotate the target up whenever possible,
* [twocut::splaytt::GreedySplay] -- splay steps at the target, its parent, or grandparent,
* [twocut::splaytt::TwoPassSplay] -- remove rotation-blocking nodes first, then splay,
* [twocut::splaytt::LocalTwoPassSplay] -- both passes interleaved.

The three splay-based strategies give amortized O(log n) time per forest operation.

For comparison and verification, the crate also contains an amortized link-cut tree
implementation ([link_cut]), a linear-time forest that stores plain rootings ([onecut]),
an adjacency-list forest used as a correctness oracle ([naive]), rooted-forest support
(root queries, lowest common ancestors, re-rooting; see [rooted] and [twocut::rooted]),
and an incremental minimum-spanning-forest application ([msf]).

# Example

```
use sttree::{DynamicForest, NodeIdx, I64SumWeight};
use sttree::twocut::splaytt::StableGreedySplayForest;

let mut f: StableGreedySplayForest<sttree::twocut::node_data::GroupPathData<I64SumWeight>> =
	StableGreedySplayForest::new( 4 );
let n: Vec<NodeIdx> = (0..4).map( NodeIdx::new ).collect();

f.link( n[0], n[1], I64SumWeight::from( 5 ) );
f.link( n[1], n[2], I64SumWeight::from( 7 ) );
assert_eq!( f.compute_path_weight( n[0], n[2] ), Some( I64SumWeight::from( 12 ) ) );
assert_eq!( f.compute_path_weight( n[0], n[3] ), None );
```
*/

#![warn(missing_docs)]

use std::fmt::{Debug, Display, Formatter};

pub mod link_cut;
pub mod msf;
pub mod naive;
pub mod onecut;
pub mod rng;
pub mod rooted;
pub mod twocut;
pub mod weight;

pub use weight::{Dist, EdgeId, EmptyWeight, GroupWeight, MaxEdgeWeight, MonoidWeight, SumWeight};

/// Signed path sums, the usual group-weight instantiation.
pub type I64SumWeight = SumWeight<i64>;

/// Floating-point path sums.
pub type F64SumWeight = SumWeight<f64>;

/// Path maxima over natural numbers, remembering a maximum-weight edge.
pub type U64MaxEdgeWeight = MaxEdgeWeight<u64>;


/// A node in a dynamic forest.
///
/// Nodes are dense indices in `[0, n)`, fixed for the lifetime of the forest.
#[derive(Copy, Clone, Debug, Eq, Hash, Ord, PartialEq, PartialOrd)]
pub struct NodeIdx {
	raw_idx : usize
}

impl NodeIdx {
	/// Convert `usize` into `NodeIdx`. Does not check bounds.
	#[inline]
	pub fn new( idx : usize ) -> NodeIdx {
		NodeIdx { raw_idx : idx }
	}

	/// The underlying index.
	#[inline]
	pub fn index( &self ) -> usize {
		self.raw_idx
	}
}

impl Display for NodeIdx {
	fn fmt( &self, f : &mut Formatter<'_> ) -> std::fmt::Result {
		write!( f, "{}", self.raw_idx )
	}
}


/// An edge-weighted dynamic forest.
///
/// All implementations in this crate share this interface. Note that even queries take
/// `&mut self`: the self-adjusting implementations restructure on every operation.
pub trait DynamicForest {
	/// The edge weight type.
	type TWeight : MonoidWeight;

	/// Creates a forest with `num_nodes` nodes and no edges.
	fn new( num_nodes : usize ) -> Self;

	/// Adds an edge between `u` and `v` with the given weight.
	///
	/// `u` and `v` must be in different trees. Violating this is checked in debug builds
	/// and leaves the forest in an unspecified state in release builds.
	fn link( &mut self, u : NodeIdx, v : NodeIdx, weight : Self::TWeight );

	/// Removes the edge between `u` and `v`.
	///
	/// The edge must exist (checked in debug builds only).
	fn cut( &mut self, u : NodeIdx, v : NodeIdx );

	/// Returns the total weight of the path between `u` and `v`, or `None` if `u` and `v`
	/// are in different trees. `compute_path_weight( u, u )` is the empty path, i.e.
	/// [MonoidWeight::identity].
	fn compute_path_weight( &mut self, u : NodeIdx, v : NodeIdx ) -> Option<Self::TWeight>;

	/// Number of nodes in the forest.
	fn num_nodes( &self ) -> usize;

	/// Total number of primitive restructuring steps performed so far (rotations for the
	/// search-tree-based implementations, re-rooting steps for [onecut::OneCutForest],
	/// zero for the naive forest).
	fn num_rotations( &self ) -> u64 {
		0
	}
}
