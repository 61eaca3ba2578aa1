//! Per-node satellite data, updated through rotation callbacks.
//!
//! The search forest calls [NodeData::before_rotation] exactly once per rotation, strictly
//! before any structure pointer changes, with a [RotationContext] describing the
//! pre-rotation situation. Attaching and detaching likewise notify the data type. Data
//! updates may read and write satellite data of any node, but never change the tree
//! structure itself.
//!
//! Two weight-carrying data types are provided. [GroupPathData] stores, per node, the
//! distance `pdist` to its search-tree parent and requires subtraction. [MonoidPathData]
//! works for arbitrary commutative monoids by additionally storing `adist`, the distance
//! to the boundary vertex that is *not* the parent (infinite for 1-cut nodes). All update
//! rules are O(1) per rotation.

use crate::{Dist, EmptyWeight, GroupWeight, MonoidWeight, NodeIdx};
use crate::twocut::basic::SttForest;

/// The pre-rotation situation passed to [NodeData::before_rotation].
///
/// All fields describe the forest strictly before any pointer updates of the rotation
/// at `v`.
#[derive(Clone, Debug)]
pub struct RotationContext {
	/// The node being rotated up.
	pub v : NodeIdx,
	/// Its parent.
	pub p : NodeIdx,
	/// Its grandparent, if any.
	pub g : Option<NodeIdx>,
	/// The direct separator child of `v`, if any; it becomes a child of `p`.
	pub dsep_child : Option<NodeIdx>,
	/// Whether `v` was the direct separator child of `p`.
	pub v_was_direct_separator : bool,
	/// Whether `p` was a separator.
	pub p_was_separator : bool
}

/// Satellite data attached to every node of a search forest.
pub trait NodeData : Clone + Sized {
	/// The edge weight type this data maintains.
	type TWeight : MonoidWeight;

	/// Data for a fresh singleton node.
	fn new( v : NodeIdx ) -> Self;

	/// Called once per rotation, before any pointer changes.
	fn before_rotation( f : &mut SttForest<Self>, ctx : &RotationContext );

	/// Called after the root `u` was attached below another root, adding an edge of the
	/// given weight.
	fn after_attached( f : &mut SttForest<Self>, u : NodeIdx, weight : Self::TWeight );

	/// Called before the child-of-root `u` is detached from its parent.
	fn before_detached( f : &mut SttForest<Self>, u : NodeIdx );
}

/// Data types that know the path weight from a node to its search-tree parent; required
/// by the path-weight queries.
pub trait PathWeightNodeData : NodeData {
	/// The weight of the underlying path between the node and its search-tree parent.
	/// The node must have a parent.
	fn parent_path_weight( &self ) -> Self::TWeight;
}

/// Read access to the distance annotations, for validators.
pub trait PathDataRead : NodeData {
	/// Distance to the parent ([Dist::Infinite] on roots).
	fn pdist( &self ) -> Dist<Self::TWeight>;

	/// Distance to the non-parent boundary vertex, or `None` if this data type does not
	/// track it.
	fn adist( &self ) -> Option<Dist<Self::TWeight>>;
}


/// No satellite data; path queries become connectivity queries.
#[derive(Clone, Debug)]
pub struct EmptyNodeData;

impl NodeData for EmptyNodeData {
	type TWeight = EmptyWeight;

	fn new( _ : NodeIdx ) -> Self {
		EmptyNodeData
	}

	fn before_rotation( _ : &mut SttForest<Self>, _ : &RotationContext ) {}

	fn after_attached( _ : &mut SttForest<Self>, _ : NodeIdx, _ : EmptyWeight ) {}

	fn before_detached( _ : &mut SttForest<Self>, _ : NodeIdx ) {}
}

impl PathWeightNodeData for EmptyNodeData {
	fn parent_path_weight( &self ) -> EmptyWeight {
		EmptyWeight
	}
}

impl PathDataRead for EmptyNodeData {
	fn pdist( &self ) -> Dist<EmptyWeight> {
		Dist::Finite( EmptyWeight )
	}

	fn adist( &self ) -> Option<Dist<EmptyWeight>> {
		None
	}
}


/// Distance annotation for group weights: only `pdist` is needed, since distances can be
/// recomputed by subtraction.
#[derive(Clone, Debug)]
pub struct GroupPathData<TWeight : GroupWeight> {
	pub(crate) pdist : Dist<TWeight>
}

impl<TWeight : GroupWeight> NodeData for GroupPathData<TWeight> {
	type TWeight = TWeight;

	fn new( _ : NodeIdx ) -> Self {
		GroupPathData { pdist : Dist::Infinite }
	}

	fn before_rotation( f : &mut SttForest<Self>, ctx : &RotationContext ) {
		let v_pdist = f.data( ctx.v ).pdist;
		let p_pdist = f.data( ctx.p ).pdist;

		// The moved child sits between v and p.
		if let Some( c ) = ctx.dsep_child {
			let c_pdist = f.data( c ).pdist;
			f.data_mut( c ).pdist = v_pdist - c_pdist;
		}

		f.data_mut( ctx.p ).pdist = v_pdist;

		// New distance of v to its new parent g: between p and g it is the difference,
		// beyond p it is the sum. If p was the root, the sum absorbs infinity.
		f.data_mut( ctx.v ).pdist = if ctx.v_was_direct_separator {
			p_pdist - v_pdist
		}
		else {
			v_pdist + p_pdist
		};
	}

	fn after_attached( f : &mut SttForest<Self>, u : NodeIdx, weight : TWeight ) {
		f.data_mut( u ).pdist = Dist::Finite( weight );
	}

	fn before_detached( f : &mut SttForest<Self>, u : NodeIdx ) {
		f.data_mut( u ).pdist = Dist::Infinite;
	}
}

impl<TWeight : GroupWeight> PathWeightNodeData for GroupPathData<TWeight> {
	fn parent_path_weight( &self ) -> TWeight {
		self.pdist.expect_finite()
	}
}

impl<TWeight : GroupWeight> PathDataRead for GroupPathData<TWeight> {
	fn pdist( &self ) -> Dist<TWeight> {
		self.pdist
	}

	fn adist( &self ) -> Option<Dist<TWeight>> {
		None
	}
}


/// Distance annotations for arbitrary commutative monoid weights.
///
/// `pdist` is the distance to the parent; `adist` the distance to the second boundary
/// vertex, infinite for roots and 1-cut nodes. Together they store the distance from a
/// node to every vertex of its boundary.
#[derive(Clone, Debug)]
pub struct MonoidPathData<TWeight : MonoidWeight> {
	pub(crate) pdist : Dist<TWeight>,
	pub(crate) adist : Dist<TWeight>
}

impl<TWeight : MonoidWeight> NodeData for MonoidPathData<TWeight> {
	type TWeight = TWeight;

	fn new( _ : NodeIdx ) -> Self {
		MonoidPathData { pdist : Dist::Infinite, adist : Dist::Infinite }
	}

	fn before_rotation( f : &mut SttForest<Self>, ctx : &RotationContext ) {
		// The moved child exchanges parent and grandparent, which are exactly its two
		// boundary vertices.
		if let Some( c ) = ctx.dsep_child {
			let c_data = f.data_mut( c );
			std::mem::swap( &mut c_data.pdist, &mut c_data.adist );
		}

		let v_pdist = f.data( ctx.v ).pdist;
		let v_adist = f.data( ctx.v ).adist;
		let p_pdist = f.data( ctx.p ).pdist;
		let p_adist = f.data( ctx.p ).adist;

		f.data_mut( ctx.p ).pdist = v_pdist;

		if ctx.v_was_direct_separator {
			// v sits between p and g. Its new parent distance is the old distance to g;
			// its second boundary vertex becomes the one p saw besides g (if any), at
			// distance d(v, p) + d(p, a). p keeps its second boundary vertex.
			let v_mut = f.data_mut( ctx.v );
			v_mut.pdist = v_adist;
			v_mut.adist = v_pdist + p_adist;
		}
		else {
			// p sits between v and g (or is the root, in which case everything absorbs
			// to infinity). p becomes the direct separator child of v with second
			// boundary vertex g; v keeps its second boundary vertex, if any.
			f.data_mut( ctx.v ).pdist = v_pdist + p_pdist;
			f.data_mut( ctx.p ).adist = p_pdist;
		}
	}

	fn after_attached( f : &mut SttForest<Self>, u : NodeIdx, weight : TWeight ) {
		let u_mut = f.data_mut( u );
		u_mut.pdist = Dist::Finite( weight );
		u_mut.adist = Dist::Infinite;
	}

	fn before_detached( f : &mut SttForest<Self>, u : NodeIdx ) {
		let u_mut = f.data_mut( u );
		u_mut.pdist = Dist::Infinite;
		u_mut.adist = Dist::Infinite;
	}
}

impl<TWeight : MonoidWeight> PathWeightNodeData for MonoidPathData<TWeight> {
	fn parent_path_weight( &self ) -> TWeight {
		self.pdist.expect_finite()
	}
}

impl<TWeight : MonoidWeight> PathDataRead for MonoidPathData<TWeight> {
	fn pdist( &self ) -> Dist<TWeight> {
		self.pdist
	}

	fn adist( &self ) -> Option<Dist<TWeight>> {
		Some( self.adist )
	}
}

#[cfg(test)]
mod tests {
	use super::*;
	use crate::{I64SumWeight, MaxEdgeWeight, EdgeId};
	use crate::twocut::basic::SttForest;

	fn w( x : i64 ) -> Dist<I64SumWeight> {
		Dist::Finite( crate::SumWeight( x ) )
	}

	/// Underlying path 0-1 with weight 5 and 1-2 with weight 7; search tree chain
	/// 0 -> 1 -> 2.
	fn chain3_group() -> SttForest<GroupPathData<I64SumWeight>> {
		let mut f : SttForest<GroupPathData<I64SumWeight>> = SttForest::from_structure(
			&[None, Some( 0 ), Some( 1 )], &[( 0, 1 ), ( 1, 2 )] );
		f.data_mut( NodeIdx::new( 1 ) ).pdist = w( 5 );
		f.data_mut( NodeIdx::new( 2 ) ).pdist = w( 7 );
		f
	}

	#[test]
	fn group_rotate_at_child_of_root() {
		let mut f = chain3_group();
		f.rotate( NodeIdx::new( 1 ) );
		// 1 becomes the root, 0 its child at distance 5; 2 keeps distance 7.
		assert_eq!( f.data( NodeIdx::new( 1 ) ).pdist, Dist::Infinite );
		assert_eq!( f.data( NodeIdx::new( 0 ) ).pdist, w( 5 ) );
		assert_eq!( f.data( NodeIdx::new( 2 ) ).pdist, w( 7 ) );
	}

	#[test]
	fn group_rotate_child_of_root_with_dsep_child() {
		// Underlying path 0-1-2 (weights 5, 7); search tree root 0, child 2, child 1, so
		// pdist(2) = d(2, 0) = 12 and pdist(1) = d(1, 2) = 7.
		let mut f : SttForest<GroupPathData<I64SumWeight>> = SttForest::from_structure(
			&[None, Some( 2 ), Some( 0 )],
			&[( 0, 1 ), ( 1, 2 )] );
		f.data_mut( NodeIdx::new( 2 ) ).pdist = w( 12 );
		f.data_mut( NodeIdx::new( 1 ) ).pdist = w( 7 );
		f.rotate( NodeIdx::new( 2 ) );
		// 2 is root now; 0 hangs at distance 12.
		assert_eq!( f.data( NodeIdx::new( 0 ) ).pdist, w( 12 ) );
		assert_eq!( f.data( NodeIdx::new( 2 ) ).pdist, Dist::Infinite );
		// 1 was the direct separator child of 2 and moved below 0, at distance
		// d(1, 0) = 12 - 7 = 5.
		assert_eq!( f.data( NodeIdx::new( 1 ) ).pdist, w( 5 ) );
	}

	#[test]
	fn group_rotate_direct_separator_subtracts() {
		// Underlying path 0-2-1 (a-c-b), weights d(0,2)=5, d(2,1)=7; search tree
		// 0 -> 1 -> 2 where 2 is the direct separator child of 1.
		let mut f : SttForest<GroupPathData<I64SumWeight>> = SttForest::from_structure(
			&[None, Some( 0 ), Some( 1 )],
			&[( 0, 2 ), ( 2, 1 )] );
		f.data_mut( NodeIdx::new( 1 ) ).pdist = w( 12 ); // d(1, 0)
		f.data_mut( NodeIdx::new( 2 ) ).pdist = w( 7 ); // d(2, 1)
		f.rotate( NodeIdx::new( 2 ) );
		// pdist'(2) = d(2, 0) = 12 - 7 = 5.
		assert_eq!( f.data( NodeIdx::new( 2 ) ).pdist, w( 5 ) );
		assert_eq!( f.data( NodeIdx::new( 1 ) ).pdist, w( 7 ) );
	}

	/// Underlying path a-p-v-g = 0-1-2-3 with weights 5, 7, 11; search tree
	/// 0 -> 3 -> 1 -> 2 (1 direct separator child of 3, 2 direct separator child of 1).
	fn fig_path4_monoid() -> SttForest<MonoidPathData<I64SumWeight>> {
		let mut f : SttForest<MonoidPathData<I64SumWeight>> = SttForest::from_structure(
			&[None, Some( 3 ), Some( 1 ), Some( 0 )],
			&[( 0, 1 ), ( 1, 2 ), ( 2, 3 )] );
		let set = |f : &mut SttForest<MonoidPathData<I64SumWeight>>, v : usize, pd, ad| {
			let d = f.data_mut( NodeIdx::new( v ) );
			d.pdist = pd;
			d.adist = ad;
		};
		set( &mut f, 3, w( 5 + 7 + 11 ), Dist::Infinite ); // d(3, 0)
		set( &mut f, 1, w( 7 + 11 ), w( 5 ) ); // d(1, 3), d(1, 0)
		set( &mut f, 2, w( 7 ), w( 11 ) ); // d(2, 1), d(2, 3)
		f
	}

	#[test]
	fn monoid_rotate_direct_separator_with_separator_parent() {
		let mut f = fig_path4_monoid();
		f.rotate( NodeIdx::new( 2 ) );
		// v = 2: new parent 3 at distance 11, second boundary vertex 0 at 7 + 5.
		assert_eq!( f.data( NodeIdx::new( 2 ) ).pdist, w( 11 ) );
		assert_eq!( f.data( NodeIdx::new( 2 ) ).adist, w( 12 ) );
		// p = 1: new parent 2 at distance 7, second boundary vertex still 0 at 5.
		assert_eq!( f.data( NodeIdx::new( 1 ) ).pdist, w( 7 ) );
		assert_eq!( f.data( NodeIdx::new( 1 ) ).adist, w( 5 ) );
	}

	#[test]
	fn monoid_rotate_swaps_moved_child() {
		let mut f = fig_path4_monoid();
		// Rotate at 1 (direct separator child of 3, with direct separator child 2):
		// 2 moves to 3 and swaps its annotations.
		f.rotate( NodeIdx::new( 1 ) );
		assert_eq!( f.data( NodeIdx::new( 2 ) ).pdist, w( 11 ) );
		assert_eq!( f.data( NodeIdx::new( 2 ) ).adist, w( 7 ) );
		// 1 took over the subtree of 3: parent 0 at distance 5 (its old adist); both
		// former boundary vertices are now inside its subtree, so it is 1-cut.
		assert_eq!( f.data( NodeIdx::new( 1 ) ).pdist, w( 5 ) );
		assert_eq!( f.data( NodeIdx::new( 1 ) ).adist, Dist::Infinite );
		// 3: parent 1 at its old distance.
		assert_eq!( f.data( NodeIdx::new( 3 ) ).pdist, w( 7 + 11 ) );
	}

	#[test]
	fn monoid_rotate_to_root_clears() {
		let mut f = fig_path4_monoid();
		f.rotate( NodeIdx::new( 3 ) );
		assert_eq!( f.data( NodeIdx::new( 3 ) ).pdist, Dist::Infinite );
		assert_eq!( f.data( NodeIdx::new( 3 ) ).adist, Dist::Infinite );
		assert_eq!( f.data( NodeIdx::new( 0 ) ).pdist, w( 23 ) );
		assert_eq!( f.data( NodeIdx::new( 0 ) ).adist, Dist::Infinite );
	}

	#[test]
	fn attach_detach_set_annotations() {
		let mut f : SttForest<MonoidPathData<MaxEdgeWeight<u64>>> = SttForest::new( 2 );
		let u = NodeIdx::new( 0 );
		f.attach( u, NodeIdx::new( 1 ), MaxEdgeWeight::new( 9, EdgeId( 4 ) ) );
		assert_eq!( f.data( u ).pdist, Dist::Finite( MaxEdgeWeight::new( 9, EdgeId( 4 ) ) ) );
		assert_eq!( f.data( u ).adist, Dist::Infinite );
		f.detach( u );
		assert_eq!( f.data( u ).pdist, Dist::Infinite );
	}
}
