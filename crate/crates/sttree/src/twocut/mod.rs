//! Dynamic forests built from 2-cut search trees on trees.
//!
//! [basic::SttForest] maintains the search forest itself; this module adds the dynamic
//! forest operations on top of a pluggable [NodeToRootStrategy]. Linking and cutting are
//! little more than two strategy calls plus one pointer update:
//!
//! * `link( u, v, w )`: bring `u` and then `v` to the root of their trees, then make `u`
//!   a child of `v`. (The second call matters for the amortized analysis, not for
//!   correctness.)
//! * `cut( u, v )`: bring `u` and then `v` to the root; a *stable* strategy then
//!   guarantees that `u` ends up as a 1-cut child of `v`, so detaching `u` removes
//!   exactly the edge `{u, v}`.
//!
//! A strategy is stable if, after `node_to_root( v )`, the previous root sits at depth
//! at most six with only 1-cut nodes on its root path. All four strategies in this crate
//! are stable, and [StableDynamicForest] exploits that. [ExtendedDynamicForest] instead
//! uses the strategy's `node_below_root` and works without stability.

use std::marker::PhantomData;

use crate::{DynamicForest, MonoidWeight, NodeIdx};

pub mod basic;
pub mod checked;
pub mod mtrtt;
pub mod node_data;
pub mod rooted;
pub mod splaytt;

use basic::SttForest;
use node_data::{NodeData, PathWeightNodeData};

/// A way of bringing a node to the root (or directly below the root) of its search tree
/// using rotations.
pub trait NodeToRootStrategy {
	/// Makes `v` the root of its search tree.
	fn node_to_root<TData : NodeData>( f : &mut SttForest<TData>, v : NodeIdx );

	/// Makes `v` a child of the root of its search tree. `v` must not be a root.
	fn node_below_root<TData : NodeData>( f : &mut SttForest<TData>, v : NodeIdx );
}

/// Read access to the search forest inside a driver; used by the instrumented wrapper
/// and by tests.
pub trait SttAccess {
	/// The node data type of the wrapped search forest.
	type TData : NodeData;

	/// The wrapped search forest.
	fn stt( &self ) -> &SttForest<Self::TData>;
}

/// Debug guard against runaway strategy loops: no single strategy call may perform more
/// than `4n` rotations.
pub(crate) struct RotationBudget {
	start : u64,
	limit : u64
}

impl RotationBudget {
	pub(crate) fn new<TData : NodeData>( f : &SttForest<TData> ) -> Self {
		RotationBudget {
			start : f.num_rotations(),
			limit : 4 * f.num_nodes().max( 1 ) as u64
		}
	}

	#[inline]
	pub(crate) fn check<TData : NodeData>( &self, f : &SttForest<TData> ) {
		debug_assert!( f.num_rotations().wrapping_sub( self.start ) <= self.limit,
			"strategy exceeded its rotation budget" );
	}
}

/// The final step of `node_below_root`, for a node `v` at depth exactly two: a child of
/// the root is never a separator, so the single rotation at `v` is always allowed and
/// makes `v` a child of the (unchanged) root.
pub(crate) fn rotate_below_root_step<TData : NodeData>( f : &mut SttForest<TData>, v : NodeIdx, p : NodeIdx ) {
	debug_assert!( f.get_parent( p ).is_some_and( |g| f.get_parent( g ).is_none() ) );
	debug_assert!( f.can_rotate_hint( v, p ) );
	f.rotate( v );
}

/// Checks the stability contract: `prev_root` has depth at most six and all nodes on its
/// root path are 1-cut.
pub fn check_stability<TData : NodeData>( f : &SttForest<TData>, prev_root : NodeIdx ) -> Result<(), String> {
	let mut x = prev_root;
	let mut depth = 0;
	loop {
		if f.is_separator( x ) {
			return Err( format!( "node {x} on the previous root's root path is a separator" ) );
		}
		match f.get_parent( x ) {
			Some( p ) => {
				x = p;
				depth += 1;
				if depth > 6 {
					return Err( format!( "previous root {prev_root} has depth > 6" ) );
				}
			}
			None => return Ok( () )
		}
	}
}


/// Dynamic forest driver for stable strategies. Only `node_to_root` is used.
#[derive(Clone)]
pub struct StableDynamicForest<TStrategy : NodeToRootStrategy, TData : NodeData> {
	forest : SttForest<TData>,
	stability_checks : u64,
	_strategy : PhantomData<TStrategy>
}

impl<TStrategy : NodeToRootStrategy, TData : NodeData> SttAccess for StableDynamicForest<TStrategy, TData> {
	type TData = TData;

	fn stt( &self ) -> &SttForest<TData> {
		&self.forest
	}
}

impl<TStrategy : NodeToRootStrategy, TData : NodeData> StableDynamicForest<TStrategy, TData> {
	/// Number of stability checks performed (only counted in debug builds).
	pub fn stability_checks( &self ) -> u64 {
		self.stability_checks
	}

	fn node_to_root_checked( &mut self, x : NodeIdx ) {
		#[cfg(debug_assertions)]
		let prev_root = self.forest.root_of( x );
		TStrategy::node_to_root( &mut self.forest, x );
		#[cfg(debug_assertions)]
		{
			debug_assert!( self.forest.get_parent( x ).is_none() );
			if let Err( e ) = check_stability( &self.forest, prev_root ) {
				panic!( "stability violated after node_to_root: {e}" );
			}
			self.stability_checks += 1;
		}
	}
}

impl<TStrategy : NodeToRootStrategy, TData : PathWeightNodeData> DynamicForest
	for StableDynamicForest<TStrategy, TData>
{
	type TWeight = TData::TWeight;

	fn new( num_nodes : usize ) -> Self {
		StableDynamicForest {
			forest : SttForest::new( num_nodes ),
			stability_checks : 0,
			_strategy : PhantomData
		}
	}

	fn link( &mut self, u : NodeIdx, v : NodeIdx, weight : TData::TWeight ) {
		debug_assert!( u != v, "link: cannot add a loop" );
		self.node_to_root_checked( u );
		self.node_to_root_checked( v );
		// If u and v were connected, the second call would have demoted u.
		debug_assert!( self.forest.get_parent( u ).is_none(), "link: {u} and {v} are already connected" );
		self.forest.attach( u, v, weight );
	}

	fn cut( &mut self, u : NodeIdx, v : NodeIdx ) {
		debug_assert!( u != v );
		self.node_to_root_checked( u );
		self.node_to_root_checked( v );
		// Stability puts u directly below v, and the absence of a direct separator child
		// certifies that {u, v} is an underlying edge.
		debug_assert!( self.forest.get_parent( u ) == Some( v ), "cut: no edge between {u} and {v}" );
		debug_assert!( self.forest.get_dsep_child( u ).is_none(), "cut: no edge between {u} and {v}" );
		self.forest.detach( u );
	}

	fn compute_path_weight( &mut self, u : NodeIdx, v : NodeIdx ) -> Option<TData::TWeight> {
		if u == v {
			return Some( TData::TWeight::identity() );
		}
		self.node_to_root_checked( u );
		self.node_to_root_checked( v );
		// u was the root of its tree before the second call, so either it still is (and
		// the trees are distinct), or stability bounds its depth and keeps its root path
		// 1-cut, making the path weight the plain sum of parent distances.
		let mut total = TData::TWeight::identity();
		let mut x = u;
		let mut hops = 0;
		loop {
			if x == v {
				return Some( total );
			}
			match self.forest.get_parent( x ) {
				Some( p ) => {
					total = total + self.forest.data( x ).parent_path_weight();
					x = p;
					hops += 1;
					debug_assert!( hops <= 6, "stable strategy left the previous root at depth > 6" );
				}
				None => return None
			}
		}
	}

	fn num_nodes( &self ) -> usize {
		self.forest.num_nodes()
	}

	fn num_rotations( &self ) -> u64 {
		self.forest.num_rotations()
	}
}


/// Dynamic forest driver using both `node_to_root` and `node_below_root`; does not
/// assume stability.
#[derive(Clone)]
pub struct ExtendedDynamicForest<TStrategy : NodeToRootStrategy, TData : NodeData> {
	forest : SttForest<TData>,
	_strategy : PhantomData<TStrategy>
}

impl<TStrategy : NodeToRootStrategy, TData : NodeData> SttAccess for ExtendedDynamicForest<TStrategy, TData> {
	type TData = TData;

	fn stt( &self ) -> &SttForest<TData> {
		&self.forest
	}
}

impl<TStrategy : NodeToRootStrategy, TData : PathWeightNodeData> DynamicForest
	for ExtendedDynamicForest<TStrategy, TData>
{
	type TWeight = TData::TWeight;

	fn new( num_nodes : usize ) -> Self {
		ExtendedDynamicForest {
			forest : SttForest::new( num_nodes ),
			_strategy : PhantomData
		}
	}

	fn link( &mut self, u : NodeIdx, v : NodeIdx, weight : TData::TWeight ) {
		debug_assert!( u != v, "link: cannot add a loop" );
		TStrategy::node_to_root( &mut self.forest, u );
		TStrategy::node_to_root( &mut self.forest, v );
		debug_assert!( self.forest.get_parent( u ).is_none(), "link: {u} and {v} are already connected" );
		self.forest.attach( u, v, weight );
	}

	fn cut( &mut self, u : NodeIdx, v : NodeIdx ) {
		debug_assert!( u != v );
		TStrategy::node_to_root( &mut self.forest, v );
		debug_assert!( self.forest.get_parent( u ).is_some(), "cut: no edge between {u} and {v}" );
		TStrategy::node_below_root( &mut self.forest, u );
		debug_assert!( self.forest.get_parent( u ) == Some( v ), "cut: no edge between {u} and {v}" );
		debug_assert!( self.forest.get_dsep_child( u ).is_none(), "cut: no edge between {u} and {v}" );
		self.forest.detach( u );
	}

	fn compute_path_weight( &mut self, u : NodeIdx, v : NodeIdx ) -> Option<TData::TWeight> {
		if u == v {
			return Some( TData::TWeight::identity() );
		}
		TStrategy::node_to_root( &mut self.forest, v );
		if self.forest.get_parent( u ).is_none() {
			// u is the root of a different tree.
			return None;
		}
		TStrategy::node_below_root( &mut self.forest, u );
		if self.forest.get_parent( u ) == Some( v ) {
			// pdist(u) is exactly the weight of the underlying u-v path.
			Some( self.forest.data( u ).parent_path_weight() )
		}
		else {
			None
		}
	}

	fn num_nodes( &self ) -> usize {
		self.forest.num_nodes()
	}

	fn num_rotations( &self ) -> u64 {
		self.forest.num_rotations()
	}
}
