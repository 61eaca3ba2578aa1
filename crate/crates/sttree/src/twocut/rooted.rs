//! Rooted dynamic forests on top of 2-cut search trees.
//!
//! A search tree root has no separator children, so nothing in the plain representation
//! says where the *underlying* root of a tree is. We therefore store, per node `v`, a
//! designator `droot( v )` naming the underlying root of `v`'s tree whenever that root
//! lies in `v`'s search subtree (and nothing otherwise). Exactly the nodes on the search
//! root path of the underlying root carry the designator, and a rotation only ever has
//! to touch the designators of the two nodes involved.

use std::marker::PhantomData;

use crate::{EmptyWeight, NodeIdx};
use crate::rooted::RootedDynamicForest;
use crate::twocut::NodeToRootStrategy;
use crate::twocut::basic::SttForest;
use crate::twocut::node_data::{NodeData, RotationContext};

/// Node data for rooted forests: the underlying-root designator. No edge weights.
#[derive(Clone, Debug)]
pub struct RootedData {
	pub(crate) droot : Option<NodeIdx>
}

impl NodeData for RootedData {
	type TWeight = EmptyWeight;

	fn new( v : NodeIdx ) -> Self {
		// A singleton is its own underlying root.
		RootedData { droot : Some( v ) }
	}

	fn before_rotation( f : &mut SttForest<Self>, ctx : &RotationContext ) {
		let v_droot = f.data( ctx.v ).droot;
		let p_droot = f.data( ctx.p ).droot;

		// v takes over p's subtree, so it simply inherits p's designator.
		f.data_mut( ctx.v ).droot = p_droot;

		// p keeps the root designator iff the root stays among its descendants: either
		// it was in a subtree of a child other than v, or in the subtree of the direct
		// separator child of v, which moves over to p.
		let p_keeps = if p_droot.is_none() {
			false
		}
		else if v_droot.is_none() {
			true
		}
		else {
			ctx.dsep_child.is_some_and( |c| f.data( c ).droot.is_some() )
		};
		if !p_keeps {
			f.data_mut( ctx.p ).droot = None;
		}
	}

	fn after_attached( f : &mut SttForest<Self>, u : NodeIdx, _ : EmptyWeight ) {
		// Attaching is only used by link, whose argument must be the underlying root of
		// its tree; it stops being one.
		f.data_mut( u ).droot = None;
	}

	fn before_detached( _ : &mut SttForest<Self>, _ : NodeIdx ) {}
}

/// A rooted dynamic forest over 2-cut search trees, generic over the restructuring
/// strategy. Uses both `node_to_root` and `node_below_root`.
#[derive(Clone)]
pub struct RootedSttForest<TStrategy : NodeToRootStrategy> {
	forest : SttForest<RootedData>,
	_strategy : PhantomData<TStrategy>
}

impl<TStrategy : NodeToRootStrategy> RootedSttForest<TStrategy> {
	/// The underlying search forest.
	pub fn stt( &self ) -> &SttForest<RootedData> {
		&self.forest
	}

	/// Starting from the direct separator child of `r` (a child of the search root),
	/// follows indirect separator children as far as possible. This walks along the
	/// underlying path from `r` towards the search root `v`, ending exactly at the
	/// neighbor of `v` on that path. If `r` has no direct separator child, `r` itself is
	/// that neighbor.
	fn underlying_neighbor_of_root( &self, r : NodeIdx ) -> NodeIdx {
		let mut x = match self.forest.get_dsep_child( r ) {
			Some( c ) => c,
			None => return r
		};
		while let Some( y ) = self.forest.get_isep_child( x ) {
			x = y;
		}
		x
	}
}

impl<TStrategy : NodeToRootStrategy> RootedDynamicForest for RootedSttForest<TStrategy> {
	fn new( num_nodes : usize ) -> Self {
		RootedSttForest { forest : SttForest::new( num_nodes ), _strategy : PhantomData }
	}

	fn num_nodes( &self ) -> usize {
		self.forest.num_nodes()
	}

	fn link( &mut self, u : NodeIdx, v : NodeIdx ) {
		debug_assert!( u != v );
		TStrategy::node_to_root( &mut self.forest, u );
		debug_assert!( self.forest.data( u ).droot == Some( u ), "link: {u} is not the root of its tree" );
		TStrategy::node_to_root( &mut self.forest, v );
		debug_assert!( self.forest.get_parent( u ).is_none(), "link: {u} and {v} are already connected" );
		// after_attached clears droot( u ).
		self.forest.attach( u, v, EmptyWeight );
	}

	fn cut( &mut self, v : NodeIdx ) {
		TStrategy::node_to_root( &mut self.forest, v );
		let r = self.forest.data( v ).droot.expect( "droot of a search root must be set" );
		debug_assert!( r != v, "cut: {v} is the root of its tree" );
		// Bring the underlying root directly below v, find the underlying parent u of v
		// by walking separator designators, and detach v's side from it.
		TStrategy::node_below_root( &mut self.forest, r );
		let u = self.underlying_neighbor_of_root( r );
		TStrategy::node_below_root( &mut self.forest, u );
		debug_assert!( self.forest.get_parent( u ) == Some( v ) );
		self.forest.detach( u );
		// v's side is now rooted at v itself; u's side keeps the old root, and its
		// designators are still in place.
		self.forest.data_mut( v ).droot = Some( v );
	}

	fn find_root( &mut self, v : NodeIdx ) -> NodeIdx {
		TStrategy::node_to_root( &mut self.forest, v );
		self.forest.data( v ).droot.expect( "droot of a search root must be set" )
	}

	fn lca( &mut self, u : NodeIdx, v : NodeIdx ) -> Option<NodeIdx> {
		if u == v {
			return Some( u );
		}
		TStrategy::node_to_root( &mut self.forest, v );
		if self.forest.get_parent( u ).is_none() {
			return None; // u is the root of some other tree
		}
		TStrategy::node_below_root( &mut self.forest, u );
		if self.forest.get_parent( u ) != Some( v ) {
			return None;
		}
		// The subtree of u is the component of u in the tree minus v. If the underlying
		// root is outside it, every path from u's side to the root passes v.
		if self.forest.data( u ).droot.is_none() {
			return Some( v );
		}
		// The nodes strictly between u and v (if any) form the subtree of u's direct
		// separator child. If the root is not among them (or there are none), the root
		// path meets the u-v path at u itself.
		let mut x = match self.forest.get_dsep_child( u ) {
			Some( x ) if self.forest.data( x ).droot.is_some() => x,
			_ => return Some( u )
		};
		// Descend towards the root: of the (at most two) separator children of x, at
		// most one subtree can contain the underlying root; the lowest common ancestor
		// is the node where no such subtree remains.
		let mut steps = 0;
		loop {
			steps += 1;
			debug_assert!( steps <= self.forest.num_nodes(), "lca descent did not terminate" );
			let d = self.forest.get_dsep_child( x );
			let i = self.forest.get_isep_child( x );
			if let Some( d ) = d {
				if self.forest.data( d ).droot.is_some() {
					x = d;
					continue;
				}
			}
			if let Some( i ) = i {
				if self.forest.data( i ).droot.is_some() {
					x = i;
					continue;
				}
			}
			break;
		}
		// Pay for the descent.
		TStrategy::node_to_root( &mut self.forest, x );
		Some( x )
	}

	fn evert( &mut self, v : NodeIdx ) {
		TStrategy::node_to_root( &mut self.forest, v );
		let r = self.forest.data( v ).droot.expect( "droot of a search root must be set" );
		if r == v {
			return;
		}
		// Exactly the nodes on r's root path carry a designator; clear them all, then
		// declare v the root. Bringing r up afterwards pays for the walk.
		let mut x = r;
		loop {
			self.forest.data_mut( x ).droot = None;
			match self.forest.get_parent( x ) {
				Some( p ) => x = p,
				None => break
			}
		}
		self.forest.data_mut( v ).droot = Some( v );
		TStrategy::node_to_root( &mut self.forest, r );
	}

	fn num_rotations( &self ) -> u64 {
		self.forest.num_rotations()
	}
}

/// Rooted move-to-root forest.
pub type RootedMoveToRootForest = RootedSttForest<crate::twocut::mtrtt::MoveToRoot>;
/// Rooted greedy splay forest.
pub type RootedGreedySplayForest = RootedSttForest<crate::twocut::splaytt::GreedySplay>;
/// Rooted two-pass splay forest.
pub type RootedTwoPassSplayForest = RootedSttForest<crate::twocut::splaytt::TwoPassSplay>;
/// Rooted local two-pass splay forest.
pub type RootedLocalTwoPassSplayForest = RootedSttForest<crate::twocut::splaytt::LocalTwoPassSplay>;
