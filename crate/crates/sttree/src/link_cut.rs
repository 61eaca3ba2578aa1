//! Self-adjusting link-cut trees, for comparison with the search-tree forests.
//!
//! Each underlying tree is decomposed into vertex-disjoint *preferred paths*. Every path
//! is stored in a splay tree whose in-order runs from the end closest to the underlying
//! root (left) to the deepest end (right). The splay-tree root of a path carries a
//! *path-parent* pointer to the underlying parent of the path's leftmost node; such
//! edges are *dashed*, edges within a splay tree are *solid*. Exposing a node splays it
//! within its path, splices the paths between it and the underlying root into one, and
//! splays once more.
//!
//! Re-rooting (needed to link arbitrary endpoints in unrooted forests) lazily reverses
//! paths via a per-node reverse bit. When `IMPL_EVERT` is false, all reverse-bit
//! handling compiles away; this is the variant used for rooted forests without evert.
//!
//! Edge weights are annotated like in the search-tree forests: every node stores the
//! path weight to its parent (solid or dashed), and monoid weights additionally store
//! the weight to the nearest ancestor on the other side. Both are distances along the
//! underlying tree and hence unaffected by path reversal, so only rotations update them;
//! splices and splits leave them untouched.

use crate::{Dist, DynamicForest, GroupWeight, MonoidWeight, NodeIdx, EmptyWeight};
use crate::rooted::RootedDynamicForest;

/// Satellite data of link-cut tree nodes, updated on rotations and edge changes.
pub trait LctNodeData<const IMPL_EVERT : bool> : Clone + Sized {
	/// The edge weight type this data maintains.
	type TWeight : MonoidWeight;

	/// Data for a fresh singleton node.
	fn new() -> Self;

	/// Called before rotating `v` with its solid parent; reverse bits of the grandparent,
	/// parent, and `v` have been pushed.
	fn before_rotation( f : &mut LinkCutForest<Self, IMPL_EVERT>, v : NodeIdx );

	/// Called after the tree root `u` was attached below `v` with the given edge weight.
	fn after_attached( f : &mut LinkCutForest<Self, IMPL_EVERT>, u : NodeIdx, weight : Self::TWeight );

	/// Called before `u` is detached from its parent.
	fn before_detached( f : &mut LinkCutForest<Self, IMPL_EVERT>, u : NodeIdx );

	/// Path weight to the parent; the node must have one.
	fn parent_path_weight( &self ) -> Self::TWeight;
}

#[derive(Clone)]
struct Node<TData> {
	parent : Option<NodeIdx>,
	left : Option<NodeIdx>,
	right : Option<NodeIdx>,
	reversed : bool,
	data : TData
}

/// A forest of link-cut trees.
#[derive(Clone)]
pub struct LinkCutForest<TData : LctNodeData<IMPL_EVERT>, const IMPL_EVERT : bool> {
	nodes : Vec<Node<TData>>,
	rotations : u64
}

impl<TData : LctNodeData<IMPL_EVERT>, const IMPL_EVERT : bool> LinkCutForest<TData, IMPL_EVERT> {
	fn node( &self, v : NodeIdx ) -> &Node<TData> {
		&self.nodes[v.index()]
	}

	fn node_mut( &mut self, v : NodeIdx ) -> &mut Node<TData> {
		&mut self.nodes[v.index()]
	}

	fn data( &self, v : NodeIdx ) -> &TData {
		&self.node( v ).data
	}

	fn data_mut( &mut self, v : NodeIdx ) -> &mut TData {
		&mut self.node_mut( v ).data
	}

	/// Whether the edge to the parent is solid. Holds regardless of reverse bits, since
	/// pushing only swaps the two child slots.
	fn is_solid_child_hint( &self, v : NodeIdx, p : NodeIdx ) -> bool {
		self.node( p ).left == Some( v ) || self.node( p ).right == Some( v )
	}

	/// Lazily reverses the solid subtree of `v`.
	fn reverse( &mut self, v : NodeIdx ) {
		debug_assert!( IMPL_EVERT );
		self.node_mut( v ).reversed = !self.node( v ).reversed;
	}

	/// Clears the reverse bit of `v` by pushing it to the solid children.
	fn push_reverse( &mut self, v : NodeIdx ) {
		if !IMPL_EVERT {
			return;
		}
		if self.node( v ).reversed {
			let v_mut = self.node_mut( v );
			v_mut.reversed = false;
			( v_mut.left, v_mut.right ) = ( v_mut.right, v_mut.left );
			if let Some( l ) = self.node( v ).left {
				self.reverse( l );
			}
			if let Some( r ) = self.node( v ).right {
				self.reverse( r );
			}
		}
	}

	/// Rotates `v` with its solid parent. Pushes the relevant reverse bits first, then
	/// lets the node data update itself, then restructures.
	fn rotate( &mut self, v : NodeIdx ) {
		let p = self.node( v ).parent.expect( "rotate: v has no parent" );
		debug_assert!( self.is_solid_child_hint( v, p ), "rotate: v is not a solid child" );
		if let Some( g ) = self.node( p ).parent {
			self.push_reverse( g );
		}
		self.push_reverse( p );
		self.push_reverse( v );

		TData::before_rotation( self, v );

		let g = self.node( p ).parent;
		self.node_mut( v ).parent = g;
		if let Some( g ) = g {
			// Only replace a solid slot; a dashed parent has no child pointer to fix.
			if self.node( g ).left == Some( p ) {
				self.node_mut( g ).left = Some( v );
			}
			else if self.node( g ).right == Some( p ) {
				self.node_mut( g ).right = Some( v );
			}
		}
		if self.node( p ).left == Some( v ) {
			let c = self.node( v ).right;
			self.node_mut( p ).left = c;
			if let Some( c ) = c {
				self.node_mut( c ).parent = Some( p );
			}
			self.node_mut( v ).right = Some( p );
		}
		else {
			let c = self.node( v ).left;
			self.node_mut( p ).right = c;
			if let Some( c ) = c {
				self.node_mut( c ).parent = Some( p );
			}
			self.node_mut( v ).left = Some( p );
		}
		self.node_mut( p ).parent = Some( v );
		self.rotations += 1;
	}

	/// Splays `v` to the root of its solid tree; returns the path-parent afterwards, or
	/// `None` if `v`'s path contains the underlying root.
	fn splay_solid( &mut self, v : NodeIdx ) -> Option<NodeIdx> {
		loop {
			let Some( p ) = self.node( v ).parent else { return None };
			if !self.is_solid_child_hint( v, p ) {
				return Some( p );
			}
			let g_solid = self.node( p ).parent.filter( |&g| self.is_solid_child_hint( p, g ) );
			if let Some( g ) = g_solid {
				self.push_reverse( g );
				self.push_reverse( p );
				self.push_reverse( v );
				if ( self.node( g ).left == Some( p ) ) == ( self.node( p ).left == Some( v ) ) {
					self.rotate( p );
					self.rotate( v );
				}
				else {
					self.rotate( v );
					self.rotate( v );
				}
			}
			else {
				self.rotate( v );
			}
		}
	}

	/// Exposes `v`: afterwards the path from the underlying root to `v` is preferred and
	/// `v` is the root of its splay tree, with no right (deeper) solid child. Returns the
	/// last path-parent spliced through, which is the point where `v`'s root path merged
	/// into the previously exposed path.
	fn node_to_root( &mut self, v : NodeIdx ) -> Option<NodeIdx> {
		// Splay within every solid tree on the dashed chain from v to the root.
		let mut x = Some( v );
		while let Some( y ) = x {
			x = self.splay_solid( y );
		}
		// Splice the chain into a single preferred path.
		let mut last_splice = None;
		let mut x = v;
		while let Some( p ) = self.node( x ).parent {
			self.push_reverse( p );
			// The old preferred continuation of p becomes a middle child implicitly.
			self.node_mut( p ).right = Some( x );
			last_splice = Some( p );
			x = p;
		}
		// Splay v to the top and drop its own deeper continuation (it keeps its parent
		// pointer and becomes a middle child).
		self.splay_solid( v );
		self.push_reverse( v );
		self.node_mut( v ).right = None;
		debug_assert!( self.node( v ).parent.is_none() );
		last_splice
	}

	/// Makes `v` the underlying root of its tree.
	fn evert( &mut self, v : NodeIdx ) {
		debug_assert!( IMPL_EVERT, "evert requires the reverse bit" );
		self.node_to_root( v );
		self.push_reverse( v );
		if let Some( l ) = self.node( v ).left {
			// The part of the path above v now hangs below it, in reverse order.
			self.node_mut( v ).left = None;
			self.reverse( l );
		}
	}

	/// The underlying root of `v`'s tree: the leftmost node of `v`'s exposed path.
	fn find_root_internal( &mut self, v : NodeIdx ) -> NodeIdx {
		self.node_to_root( v );
		let mut r = v;
		self.push_reverse( r );
		while let Some( l ) = self.node( r ).left {
			r = l;
			self.push_reverse( r );
		}
		// Pay for the walk.
		self.splay_solid( r );
		r
	}

	/// Total number of splay rotations performed so far.
	pub fn num_rotations( &self ) -> u64 {
		self.rotations
	}

	fn new_forest( num_nodes : usize ) -> Self {
		LinkCutForest {
			nodes : (0..num_nodes).map( |_| Node {
				parent : None, left : None, right : None, reversed : false, data : TData::new()
			} ).collect(),
			rotations : 0
		}
	}
}

impl<TData : LctNodeData<true>> DynamicForest for LinkCutForest<TData, true> {
	type TWeight = TData::TWeight;

	fn new( num_nodes : usize ) -> Self {
		Self::new_forest( num_nodes )
	}

	fn link( &mut self, u : NodeIdx, v : NodeIdx, weight : TData::TWeight ) {
		debug_assert!( u != v );
		self.evert( u );
		self.node_to_root( v );
		// Had u and v been connected, exposing v would have demoted u.
		debug_assert!( self.node( u ).parent.is_none(), "link: {u} and {v} are already connected" );
		self.node_mut( u ).parent = Some( v );
		TData::after_attached( self, u, weight );
	}

	fn cut( &mut self, u : NodeIdx, v : NodeIdx ) {
		debug_assert!( u != v );
		self.evert( u );
		self.node_to_root( v );
		self.push_reverse( v );
		// With u the underlying root and {u, v} an edge, the exposed path of v is
		// exactly u-v.
		debug_assert!( self.node( v ).left == Some( u ), "cut: no edge between {u} and {v}" );
		#[cfg(debug_assertions)]
		{
			self.push_reverse( u );
			debug_assert!( self.node( u ).left.is_none() && self.node( u ).right.is_none(),
				"cut: no edge between {u} and {v}" );
		}
		TData::before_detached( self, u );
		self.node_mut( v ).left = None;
		self.node_mut( u ).parent = None;
	}

	fn compute_path_weight( &mut self, u : NodeIdx, v : NodeIdx ) -> Option<TData::TWeight> {
		if u == v {
			return Some( TData::TWeight::identity() );
		}
		self.evert( u );
		self.node_to_root( v );
		if self.node( u ).parent.is_none() {
			return None; // still a root, hence in a different tree
		}
		// u is the leftmost node of v's solid tree; summing parent distances along the
		// left spine telescopes into d(u, v).
		let mut total = TData::TWeight::identity();
		let mut x = u;
		while let Some( p ) = self.node( x ).parent {
			debug_assert!( self.is_solid_child_hint( x, p ) );
			total = total + self.data( x ).parent_path_weight();
			x = p;
		}
		debug_assert!( x == v );
		Some( total )
	}

	fn num_nodes( &self ) -> usize {
		self.nodes.len()
	}

	fn num_rotations( &self ) -> u64 {
		self.rotations
	}
}

/// Rooted link-cut forest. A separate type (rather than a second trait implementation on
/// [LinkCutForest]) so that rooted and unrooted method sets never collide.
#[derive(Clone)]
pub struct RootedLinkCut<const IMPL_EVERT : bool> {
	f : LinkCutForest<EmptyLctData, IMPL_EVERT>
}

impl<const IMPL_EVERT : bool> RootedDynamicForest for RootedLinkCut<IMPL_EVERT> {
	fn new( num_nodes : usize ) -> Self {
		RootedLinkCut { f : LinkCutForest::new_forest( num_nodes ) }
	}

	fn num_nodes( &self ) -> usize {
		self.f.nodes.len()
	}

	fn link( &mut self, u : NodeIdx, v : NodeIdx ) {
		debug_assert!( u != v );
		let f = &mut self.f;
		f.node_to_root( u );
		#[cfg(debug_assertions)]
		{
			f.push_reverse( u );
			debug_assert!( f.node( u ).left.is_none(), "link: {u} is not the root of its tree" );
		}
		f.node_to_root( v );
		debug_assert!( f.node( u ).parent.is_none(), "link: {u} and {v} are already connected" );
		f.node_mut( u ).parent = Some( v );
	}

	fn cut( &mut self, v : NodeIdx ) {
		let f = &mut self.f;
		f.node_to_root( v );
		f.push_reverse( v );
		// The left subtree holds everything above v on its root path; detaching it cuts
		// exactly the edge between v and its parent.
		let l = f.node( v ).left.expect( "cut: v is the root of its tree" );
		f.node_mut( v ).left = None;
		f.node_mut( l ).parent = None;
	}

	fn find_root( &mut self, v : NodeIdx ) -> NodeIdx {
		self.f.find_root_internal( v )
	}

	fn lca( &mut self, u : NodeIdx, v : NodeIdx ) -> Option<NodeIdx> {
		if u == v {
			return Some( u );
		}
		if self.f.find_root_internal( u ) != self.f.find_root_internal( v ) {
			return None;
		}
		self.f.node_to_root( u );
		// The point where v's root path merges into the exposed path of u is the lowest
		// common ancestor; no splice means v is an ancestor of u.
		Some( self.f.node_to_root( v ).unwrap_or( v ) )
	}

	fn evert( &mut self, v : NodeIdx ) {
		assert!( IMPL_EVERT, "this link-cut forest was built without evert support" );
		self.f.evert( v );
	}

	fn num_rotations( &self ) -> u64 {
		self.f.rotations
	}
}


/// Link-cut node data without weights.
#[derive(Clone)]
pub struct EmptyLctData;

impl<const IMPL_EVERT : bool> LctNodeData<IMPL_EVERT> for EmptyLctData {
	type TWeight = EmptyWeight;

	fn new() -> Self {
		EmptyLctData
	}

	fn before_rotation( _ : &mut LinkCutForest<Self, IMPL_EVERT>, _ : NodeIdx ) {}

	fn after_attached( _ : &mut LinkCutForest<Self, IMPL_EVERT>, _ : NodeIdx, _ : EmptyWeight ) {}

	fn before_detached( _ : &mut LinkCutForest<Self, IMPL_EVERT>, _ : NodeIdx ) {}

	fn parent_path_weight( &self ) -> EmptyWeight {
		EmptyWeight
	}
}

/// Whether `v` sits on the opposite side of its parent than the parent does of the
/// grandparent. Dashed parents (and the absence of a parent) count as right children:
/// the path continues to the left of a solid root.
fn opposite_sides<TData : LctNodeData<IMPL_EVERT>, const IMPL_EVERT : bool>(
	f : &LinkCutForest<TData, IMPL_EVERT>, v : NodeIdx, p : NodeIdx ) -> bool
{
	let v_left = f.node( p ).left == Some( v );
	let p_left = match f.node( p ).parent {
		Some( g ) => f.node( g ).left == Some( p ),
		None => false
	};
	v_left != p_left
}

/// The solid child of `v` that switches to the parent when rotating `v`: the one on the
/// parent's side.
fn inner_child<TData : LctNodeData<IMPL_EVERT>, const IMPL_EVERT : bool>(
	f : &LinkCutForest<TData, IMPL_EVERT>, v : NodeIdx, p : NodeIdx ) -> Option<NodeIdx>
{
	if f.node( p ).left == Some( v ) {
		f.node( v ).right
	}
	else {
		f.node( v ).left
	}
}

/// Link-cut node data for group weights: distance to the parent only.
#[derive(Clone)]
pub struct LctGroupData<TWeight : GroupWeight> {
	pdist : Dist<TWeight>
}

impl<TWeight : GroupWeight, const IMPL_EVERT : bool> LctNodeData<IMPL_EVERT> for LctGroupData<TWeight> {
	type TWeight = TWeight;

	fn new() -> Self {
		LctGroupData { pdist : Dist::Infinite }
	}

	fn before_rotation( f : &mut LinkCutForest<Self, IMPL_EVERT>, v : NodeIdx ) {
		let p = f.node( v ).parent.unwrap();
		let v_pdist = f.data( v ).pdist;
		let p_pdist = f.data( p ).pdist;
		if let Some( c ) = inner_child( f, v, p ) {
			let c_pdist = f.data( c ).pdist;
			f.data_mut( c ).pdist = v_pdist - c_pdist;
		}
		f.data_mut( p ).pdist = v_pdist;
		f.data_mut( v ).pdist = if opposite_sides( f, v, p ) {
			// v lies between p and its new parent on the underlying path.
			p_pdist - v_pdist
		}
		else {
			v_pdist + p_pdist
		};
	}

	fn after_attached( f : &mut LinkCutForest<Self, IMPL_EVERT>, u : NodeIdx, weight : TWeight ) {
		f.data_mut( u ).pdist = Dist::Finite( weight );
	}

	fn before_detached( f : &mut LinkCutForest<Self, IMPL_EVERT>, u : NodeIdx ) {
		f.data_mut( u ).pdist = Dist::Infinite;
	}

	fn parent_path_weight( &self ) -> TWeight {
		self.pdist.expect_finite()
	}
}

/// Link-cut node data for arbitrary commutative monoid weights: distances to the parent
/// and to the nearest ancestor on the other side (infinite if there is none).
#[derive(Clone)]
pub struct LctMonoidData<TWeight : MonoidWeight> {
	pdist : Dist<TWeight>,
	adist : Dist<TWeight>
}

impl<TWeight : MonoidWeight, const IMPL_EVERT : bool> LctNodeData<IMPL_EVERT> for LctMonoidData<TWeight> {
	type TWeight = TWeight;

	fn new() -> Self {
		LctMonoidData { pdist : Dist::Infinite, adist : Dist::Infinite }
	}

	fn before_rotation( f : &mut LinkCutForest<Self, IMPL_EVERT>, v : NodeIdx ) {
		let p = f.node( v ).parent.unwrap();
		// The inner child exchanges its two reference ancestors.
		if let Some( c ) = inner_child( f, v, p ) {
			let c_data = f.data_mut( c );
			std::mem::swap( &mut c_data.pdist, &mut c_data.adist );
		}
		let v_pdist = f.data( v ).pdist;
		let v_adist = f.data( v ).adist;
		let p_pdist = f.data( p ).pdist;
		let p_adist = f.data( p ).adist;
		f.data_mut( p ).pdist = v_pdist;
		if opposite_sides( f, v, p ) {
			// v sits between p and v's new parent; p keeps its other-side ancestor.
			let v_mut = f.data_mut( v );
			v_mut.pdist = v_adist;
			v_mut.adist = v_pdist + p_adist;
		}
		else {
			// p sits between v and v's new parent and becomes v's inner child.
			f.data_mut( v ).pdist = v_pdist + p_pdist;
			f.data_mut( p ).adist = p_pdist;
		}
	}

	fn after_attached( f : &mut LinkCutForest<Self, IMPL_EVERT>, u : NodeIdx, weight : TWeight ) {
		let u_mut = f.data_mut( u );
		u_mut.pdist = Dist::Finite( weight );
		u_mut.adist = Dist::Infinite;
	}

	fn before_detached( f : &mut LinkCutForest<Self, IMPL_EVERT>, u : NodeIdx ) {
		let u_mut = f.data_mut( u );
		u_mut.pdist = Dist::Infinite;
		u_mut.adist = Dist::Infinite;
	}

	fn parent_path_weight( &self ) -> TWeight {
		self.pdist.expect_finite()
	}
}

/// Unweighted link-cut forest for unrooted use (evert enabled).
pub type EmptyLinkCutForest = LinkCutForest<EmptyLctData, true>;
/// Link-cut forest with group edge weights.
pub type GroupLinkCutForest<TWeight> = LinkCutForest<LctGroupData<TWeight>, true>;
/// Link-cut forest with monoid edge weights.
pub type MonoidLinkCutForest<TWeight> = LinkCutForest<LctMonoidData<TWeight>, true>;
/// Rooted link-cut forest without evert; the reverse bit is compiled out.
pub type RootedLinkCutForest = RootedLinkCut<false>;
/// Rooted link-cut forest with evert support.
pub type RootedLinkCutForestWithEvert = RootedLinkCut<true>;
