//! The basic 2-cut search tree forest: storage, separator predicates, and the rotation
//! primitive.
//!
//! Each tree of the underlying forest is represented by a *search tree on a tree*: a
//! rooted tree obtained by picking a root vertex and recursing into the components of
//! its removal. A node `v` is *2-cut* if at most two vertices outside its subtree are
//! adjacent to vertices inside it (its *boundary*). We only maintain search trees in
//! which every node is 2-cut; a node with boundary size exactly two is a *separator*.
//!
//! A separator is *direct* if its boundary consists of its parent and grandparent, and
//! *indirect* otherwise. Every node has at most one direct and at most one indirect
//! separator child, so three pointers per node (`parent`, `dsep_child`, `isep_child`)
//! represent the search forest -- and, perhaps surprisingly, also uniquely determine the
//! underlying forest (see [SttForest::underlying_edges]).

use std::collections::BTreeSet;

use crate::NodeIdx;
use crate::twocut::node_data::{NodeData, RotationContext};

/// A node of the search forest: three structure pointers plus satellite data.
#[derive(Clone, Debug)]
pub struct SttNode<TData> {
	pub(crate) parent : Option<NodeIdx>,
	pub(crate) dsep_child : Option<NodeIdx>,
	pub(crate) isep_child : Option<NodeIdx>,
	pub(crate) data : TData
}

/// A forest of 2-cut search trees over a fixed node set.
///
/// This type only maintains the search forest under [rotations](SttForest::rotate),
/// [attach](SttForest::attach), and [detach](SttForest::detach); the dynamic-forest
/// operations on top of it live in the [parent module](crate::twocut).
#[derive(Clone)]
pub struct SttForest<TData : NodeData> {
	nodes : Vec<SttNode<TData>>,
	num_rotations : u64,
	num_splay_steps : u64,
	// Reusable buffer for root-path walks, to keep strategies allocation-free.
	pub(crate) scratch : Vec<NodeIdx>
}

impl<TData : NodeData> SttForest<TData> {
	/// Creates a forest of `num_nodes` singleton trees.
	pub fn new( num_nodes : usize ) -> Self {
		SttForest {
			nodes : (0..num_nodes).map( |i| SttNode {
				parent : None, dsep_child : None, isep_child : None, data : TData::new( NodeIdx::new( i ) )
			} ).collect(),
			num_rotations : 0,
			num_splay_steps : 0,
			scratch : Vec::new()
		}
	}

	/// Number of nodes.
	pub fn num_nodes( &self ) -> usize {
		self.nodes.len()
	}

	/// Iterates over all nodes.
	pub fn nodes( &self ) -> impl Iterator<Item = NodeIdx> {
		(0..self.nodes.len()).map( NodeIdx::new )
	}

	fn node( &self, v : NodeIdx ) -> &SttNode<TData> {
		&self.nodes[v.index()]
	}

	fn node_mut( &mut self, v : NodeIdx ) -> &mut SttNode<TData> {
		&mut self.nodes[v.index()]
	}

	/// The parent of `v`, or `None` if `v` is the root of its search tree.
	#[inline]
	pub fn get_parent( &self, v : NodeIdx ) -> Option<NodeIdx> {
		self.node( v ).parent
	}

	/// The direct separator child of `v`, if any.
	#[inline]
	pub fn get_dsep_child( &self, v : NodeIdx ) -> Option<NodeIdx> {
		self.node( v ).dsep_child
	}

	/// The indirect separator child of `v`, if any.
	#[inline]
	pub fn get_isep_child( &self, v : NodeIdx ) -> Option<NodeIdx> {
		self.node( v ).isep_child
	}

	/// Read access to the satellite data of `v`.
	#[inline]
	pub fn data( &self, v : NodeIdx ) -> &TData {
		&self.node( v ).data
	}

	/// Write access to the satellite data of `v`.
	#[inline]
	pub fn data_mut( &mut self, v : NodeIdx ) -> &mut TData {
		&mut self.node_mut( v ).data
	}

	/// Whether `v` is a separator, i.e. has boundary size exactly two. Decided locally:
	/// `v` is a separator iff one of its parent's separator-child pointers names it.
	#[inline]
	pub fn is_separator( &self, v : NodeIdx ) -> bool {
		match self.get_parent( v ) {
			Some( p ) => self.is_separator_hint( v, p ),
			None => false
		}
	}

	/// Like [is_separator](Self::is_separator), but with the parent `p` already known.
	#[inline]
	pub fn is_separator_hint( &self, v : NodeIdx, p : NodeIdx ) -> bool {
		debug_assert!( self.get_parent( v ) == Some( p ) );
		self.node( p ).dsep_child == Some( v ) || self.node( p ).isep_child == Some( v )
	}

	/// Whether the boundary of `v` is exactly its parent and grandparent.
	#[inline]
	pub fn is_direct_separator( &self, v : NodeIdx ) -> bool {
		match self.get_parent( v ) {
			Some( p ) => self.is_direct_separator_hint( v, p ),
			None => false
		}
	}

	/// Like [is_direct_separator](Self::is_direct_separator) with the parent known.
	#[inline]
	pub fn is_direct_separator_hint( &self, v : NodeIdx, p : NodeIdx ) -> bool {
		debug_assert!( self.get_parent( v ) == Some( p ) );
		self.node( p ).dsep_child == Some( v )
	}

	/// Whether `v` is a separator but not a direct one.
	#[inline]
	pub fn is_indirect_separator( &self, v : NodeIdx ) -> bool {
		match self.get_parent( v ) {
			Some( p ) => self.is_indirect_separator_hint( v, p ),
			None => false
		}
	}

	/// Like [is_indirect_separator](Self::is_indirect_separator) with the parent known.
	#[inline]
	pub fn is_indirect_separator_hint( &self, v : NodeIdx, p : NodeIdx ) -> bool {
		debug_assert!( self.get_parent( v ) == Some( p ) );
		self.node( p ).isep_child == Some( v )
	}

	/// Whether rotating at `v` preserves the 2-cut property. `v` must have a parent.
	///
	/// The rotation is allowed unless `v` is 1-cut while its parent is a separator.
	#[inline]
	pub fn can_rotate( &self, v : NodeIdx ) -> bool {
		let p = self.get_parent( v ).expect( "can_rotate: v is a root" );
		self.can_rotate_hint( v, p )
	}

	/// Like [can_rotate](Self::can_rotate) with the parent known.
	#[inline]
	pub fn can_rotate_hint( &self, v : NodeIdx, p : NodeIdx ) -> bool {
		self.is_separator_hint( v, p ) || !self.is_separator( p )
	}

	/// The root of the search tree containing `v`. Linear in the depth of `v`.
	pub fn root_of( &self, v : NodeIdx ) -> NodeIdx {
		let mut x = v;
		while let Some( p ) = self.get_parent( x ) {
			x = p;
		}
		x
	}

	/// The depth of `v` in its search tree (roots have depth 0).
	pub fn depth_of( &self, v : NodeIdx ) -> usize {
		let mut d = 0;
		let mut x = v;
		while let Some( p ) = self.get_parent( x ) {
			x = p;
			d += 1;
		}
		d
	}

	/// Total number of rotations performed so far.
	pub fn num_rotations( &self ) -> u64 {
		self.num_rotations
	}

	/// Total number of splay steps performed so far.
	pub fn num_splay_steps( &self ) -> u64 {
		self.num_splay_steps
	}

	pub(crate) fn count_splay_step( &mut self ) {
		self.num_splay_steps += 1;
	}

	/// Rotates `v` with its parent in O(1).
	///
	/// `v` must have a parent and [can_rotate](Self::can_rotate) must hold; both are
	/// checked in debug builds only, and violating them leaves the forest in an
	/// unspecified state otherwise. Satellite data is updated through
	/// [NodeData::before_rotation], which sees the forest strictly before any pointer
	/// changes.
	pub fn rotate( &mut self, v : NodeIdx ) {
		let p = self.get_parent( v ).expect( "rotate: v is a root" );
		debug_assert!( self.can_rotate_hint( v, p ), "rotate( {v} ) violates the 2-cut property" );

		let g = self.get_parent( p );
		let c = self.get_dsep_child( v );
		let v_was_direct_separator = self.is_direct_separator_hint( v, p );
		let v_was_indirect_separator = self.is_indirect_separator_hint( v, p );
		let p_was_separator = match g {
			Some( g ) => self.is_separator_hint( p, g ),
			None => false
		};

		TData::before_rotation( self, &RotationContext {
			v, p, g, dsep_child : c, v_was_direct_separator, p_was_separator
		} );

		// v takes over p's role as a child of g.
		if let Some( g ) = g {
			if self.node( g ).dsep_child == Some( p ) {
				self.node_mut( g ).dsep_child = Some( v );
			}
			else if self.node( g ).isep_child == Some( p ) {
				self.node_mut( g ).isep_child = Some( v );
			}
		}

		// The separator child of p other than v keeps its boundary, but becomes indirect
		// (its grandparent changes from g to v).
		let p_other_sep_child = if v_was_direct_separator {
			self.node( p ).isep_child
		}
		else if v_was_indirect_separator {
			self.node( p ).dsep_child
		}
		else {
			// v is not a separator, so p cannot have an indirect separator child.
			self.node( p ).dsep_child
		};

		// New separator children of v.
		let v_old_isep_child = self.node( v ).isep_child;
		if g.is_none() {
			// v becomes a root; roots have no separator children.
			let v_mut = self.node_mut( v );
			v_mut.dsep_child = None;
			v_mut.isep_child = None;
		}
		else if v_was_direct_separator {
			// v sits between p and g: the old indirect separator child of v (boundary
			// {v, g}) becomes direct, and p (boundary {v, a} for the old second boundary
			// vertex a of p) becomes the indirect one, if p was a separator at all.
			self.node_mut( v ).dsep_child = v_old_isep_child;
			self.node_mut( v ).isep_child = if p_was_separator { Some( p ) } else { None };
		}
		else {
			// p sits between v and g, so p becomes the direct separator child of v; an
			// existing indirect separator child of v keeps its role.
			self.node_mut( v ).dsep_child = Some( p );
		}

		// New separator children of p: c has boundary {v, p}, hence is direct.
		{
			let p_mut = self.node_mut( p );
			p_mut.dsep_child = c;
			p_mut.isep_child = p_other_sep_child;
		}

		// c exchanges parent and grandparent, so its separator children swap roles.
		if let Some( c ) = c {
			let c_mut = self.node_mut( c );
			std::mem::swap( &mut c_mut.dsep_child, &mut c_mut.isep_child );
		}

		// Parent pointers last.
		self.node_mut( v ).parent = g;
		self.node_mut( p ).parent = Some( v );
		if let Some( c ) = c {
			self.node_mut( c ).parent = Some( p );
		}

		self.num_rotations += 1;
	}

	/// Makes the root `u` a child of the root `v`, adding the edge `{u, v}` of the given
	/// weight to the underlying forest.
	pub fn attach( &mut self, u : NodeIdx, v : NodeIdx, weight : TData::TWeight ) {
		debug_assert!( self.get_parent( u ).is_none(), "attach: u must be a root" );
		debug_assert!( self.get_parent( v ).is_none(), "attach: v must be a root" );
		debug_assert!( u != v );
		self.node_mut( u ).parent = Some( v );
		TData::after_attached( self, u, weight );
	}

	/// Detaches the child `u` of a search-tree root, removing the unique underlying edge
	/// between `u`'s subtree and the rest; the callers ensure that edge is `{u, parent}`.
	pub fn detach( &mut self, u : NodeIdx ) {
		let p = self.get_parent( u ).expect( "detach: u is a root" );
		debug_assert!( self.get_parent( p ).is_none(), "detach: u must be a child of a root" );
		debug_assert!( !self.is_separator_hint( u, p ), "detach: u may not be a separator" );
		TData::before_detached( self, u );
		self.node_mut( u ).parent = None;
	}
}

// Validation and reconstruction. These are linear-time (or worse) and meant for tests
// and debugging, not for the operation hot path.
impl<TData : NodeData> SttForest<TData> {
	fn children_lists( &self ) -> Vec<Vec<NodeIdx>> {
		let mut children = vec![Vec::new(); self.num_nodes()];
		for v in self.nodes() {
			if let Some( p ) = self.get_parent( v ) {
				children[p.index()].push( v );
			}
		}
		children
	}

	/// Nodes in root-to-leaf order (every node appears after its parent).
	/// Fails if the parent pointers contain a cycle.
	fn topological_order( &self ) -> Result<Vec<NodeIdx>, String> {
		let children = self.children_lists();
		let mut order = Vec::with_capacity( self.num_nodes() );
		for v in self.nodes() {
			if self.get_parent( v ).is_none() {
				order.push( v );
			}
		}
		let mut i = 0;
		while i < order.len() {
			let v = order[i];
			order.extend( children[v.index()].iter().copied() );
			i += 1;
		}
		if order.len() == self.num_nodes() {
			Ok( order )
		}
		else {
			Err( "parent pointers contain a cycle".to_string() )
		}
	}

	/// Determines the boundary of every subtree from the three pointers alone, top-down:
	/// roots have empty boundary, non-separators see only their parent, direct separators
	/// their parent and grandparent, and an indirect separator inherits the boundary
	/// vertex of its parent that is not its grandparent.
	fn boundaries_from_pointers( &self ) -> Result<Vec<Vec<NodeIdx>>, String> {
		let mut boundaries : Vec<Vec<NodeIdx>> = vec![Vec::new(); self.num_nodes()];
		for v in self.topological_order()? {
			let Some( p ) = self.get_parent( v ) else { continue };
			if self.is_direct_separator_hint( v, p ) {
				let g = self.get_parent( p )
					.ok_or( format!( "direct separator {v} has no grandparent" ) )?;
				boundaries[v.index()] = vec![p, g];
			}
			else if self.is_indirect_separator_hint( v, p ) {
				let g = self.get_parent( p )
					.ok_or( format!( "indirect separator {v} has no grandparent" ) )?;
				let pb = &boundaries[p.index()];
				if pb.len() != 2 {
					return Err( format!( "indirect separator {v} below non-separator {p}" ) );
				}
				let a = if pb[0] == g { pb[1] } else if pb[1] == g { pb[0] } else {
					return Err( format!( "boundary of {p} does not contain its parent {g}" ) );
				};
				boundaries[v.index()] = vec![p, a];
			}
			else {
				boundaries[v.index()] = vec![p];
			}
		}
		Ok( boundaries )
	}

	/// Reconstructs the edge set of the underlying forest from the three pointers alone.
	///
	/// An ancestor `u` of `v` is adjacent to `v` exactly if `u` is in the boundary of `v`
	/// but in no boundary of a child of `v`. Runs in O(n); pairs are returned with the
	/// smaller index first.
	pub fn underlying_edges( &self ) -> BTreeSet<( usize, usize )> {
		let boundaries = self.boundaries_from_pointers()
			.expect( "underlying_edges: inconsistent search forest" );
		let children = self.children_lists();
		let mut edges = BTreeSet::new();
		for v in self.nodes() {
			'boundary: for &u in &boundaries[v.index()] {
				for &c in &children[v.index()] {
					if boundaries[c.index()].contains( &u ) {
						continue 'boundary;
					}
				}
				let ( a, b ) = ( u.index().min( v.index() ), u.index().max( v.index() ) );
				edges.insert( ( a, b ) );
			}
		}
		edges
	}

	/// The boundary of `v`'s subtree, computed by brute force from the reconstructed
	/// underlying edges. O(n); for tests.
	pub fn compute_boundary( &self, v : NodeIdx ) -> BTreeSet<NodeIdx> {
		let edges = self.underlying_edges();
		let children = self.children_lists();
		let mut in_subtree = vec![false; self.num_nodes()];
		let mut stack = vec![v];
		while let Some( x ) = stack.pop() {
			in_subtree[x.index()] = true;
			stack.extend( children[x.index()].iter().copied() );
		}
		let mut boundary = BTreeSet::new();
		for &( a, b ) in &edges {
			if in_subtree[a] != in_subtree[b] {
				boundary.insert( NodeIdx::new( if in_subtree[a] { b } else { a } ) );
			}
		}
		boundary
	}

	/// Checks that this is a valid 2-cut search forest on the given underlying forest:
	/// acyclic parent pointers, the search-tree properties (endpoints of underlying edges
	/// are ancestor-related, subtrees induce connected subgraphs), the 2-cut bound, and
	/// separator-child pointers that agree with a brute-force classification of every
	/// node. Returns the first violation found. O(n^2); for tests.
	pub fn validate( &self, expected_edges : &BTreeSet<( usize, usize )> ) -> Result<(), String> {
		let n = self.num_nodes();
		let order = self.topological_order()?;
		let children = self.children_lists();

		let mut adj : Vec<Vec<usize>> = vec![Vec::new(); n];
		for &( a, b ) in expected_edges {
			if a >= n || b >= n {
				return Err( format!( "edge ({a}, {b}) out of range" ) );
			}
			adj[a].push( b );
			adj[b].push( a );
		}

		// Ancestor relation via rank in topological order.
		let is_ancestor = |u : NodeIdx, v : NodeIdx| -> bool {
			let mut x = v;
			loop {
				if x == u {
					return true;
				}
				match self.get_parent( x ) {
					Some( p ) => x = p,
					None => return false
				}
			}
		};
		for &( a, b ) in expected_edges {
			let ( a, b ) = ( NodeIdx::new( a ), NodeIdx::new( b ) );
			if !is_ancestor( a, b ) && !is_ancestor( b, a ) {
				return Err( format!( "edge ({a}, {b}): endpoints are not ancestor-related" ) );
			}
		}

		// Subtree vertex sets, computed bottom-up.
		let mut subtree : Vec<Vec<usize>> = vec![Vec::new(); n];
		for &v in order.iter().rev() {
			let mut set = vec![v.index()];
			for &c in &children[v.index()] {
				set.extend_from_slice( &subtree[c.index()] );
			}
			subtree[v.index()] = set;
		}

		let mut in_subtree = vec![usize::MAX; n];
		for v in self.nodes() {
			let set = &subtree[v.index()];
			for &x in set {
				in_subtree[x] = v.index();
			}
			// Connectivity of the induced subgraph.
			let mut seen = vec![set[0]];
			let mut seen_set = vec![false; n];
			seen_set[set[0]] = true;
			let mut i = 0;
			while i < seen.len() {
				for &y in &adj[seen[i]] {
					if in_subtree[y] == v.index() && !seen_set[y] {
						seen_set[y] = true;
						seen.push( y );
					}
				}
				i += 1;
			}
			if seen.len() != set.len() {
				return Err( format!( "subtree of {v} induces a disconnected subgraph" ) );
			}

			// True boundary.
			let mut boundary = BTreeSet::new();
			for &x in set {
				for &y in &adj[x] {
					if in_subtree[y] != v.index() {
						boundary.insert( y );
					}
				}
			}
			if boundary.len() > 2 {
				return Err( format!( "node {v} is not 2-cut (boundary size {})", boundary.len() ) );
			}

			// Classification vs. pointers.
			let parent = self.get_parent( v );
			let grandparent = parent.and_then( |p| self.get_parent( p ) );
			let is_sep = boundary.len() == 2;
			let is_direct = is_sep && parent.is_some() && grandparent.is_some()
				&& boundary.contains( &parent.unwrap().index() )
				&& boundary.contains( &grandparent.unwrap().index() );
			if let Some( p ) = parent {
				if !boundary.contains( &p.index() ) && !boundary.is_empty() {
					return Err( format!( "boundary of {v} does not contain its parent {p}" ) );
				}
				let said_direct = self.is_direct_separator_hint( v, p );
				let said_indirect = self.is_indirect_separator_hint( v, p );
				if said_direct != is_direct {
					return Err( format!( "node {v}: dsep_child pointer of {p} disagrees (expected direct separator: {is_direct})" ) );
				}
				if said_indirect != ( is_sep && !is_direct ) {
					return Err( format!( "node {v}: isep_child pointer of {p} disagrees (expected indirect separator: {})", is_sep && !is_direct ) );
				}
			}
			else if is_sep {
				return Err( format!( "root {v} has non-empty boundary" ) );
			}
		}

		// Child pointers must actually point at children, and differ.
		for v in self.nodes() {
			for ( name, c ) in [( "dsep", self.get_dsep_child( v ) ), ( "isep", self.get_isep_child( v ) )] {
				if let Some( c ) = c {
					if self.get_parent( c ) != Some( v ) {
						return Err( format!( "{name}_child of {v} is {c}, which is not a child of {v}" ) );
					}
				}
			}
			if self.get_dsep_child( v ).is_some() && self.get_dsep_child( v ) == self.get_isep_child( v ) {
				return Err( format!( "node {v} has the same direct and indirect separator child" ) );
			}
		}

		// Finally, reconstruction must reproduce the expected edges.
		let reconstructed = self.underlying_edges();
		if &reconstructed != expected_edges {
			return Err( format!( "reconstructed edges {reconstructed:?} differ from expected {expected_edges:?}" ) );
		}
		Ok( () )
	}

	/// Builds a search forest from explicit parent pointers over a known underlying edge
	/// set, deriving the separator-child pointers by brute force. For tests and
	/// enumeration; panics if the input is not a valid 2-cut search forest.
	pub fn from_structure( parents : &[Option<usize>], edges : &[( usize, usize )] ) -> Self {
		let n = parents.len();
		let mut f = Self::new( n );
		for ( i, p ) in parents.iter().enumerate() {
			f.nodes[i].parent = p.map( NodeIdx::new );
		}

		let mut adj : Vec<Vec<usize>> = vec![Vec::new(); n];
		for &( a, b ) in edges {
			adj[a].push( b );
			adj[b].push( a );
		}
		// Subtree membership by walking ancestors (n is small here).
		let in_subtree_of = |x : usize, v : usize| -> bool {
			let mut y = NodeIdx::new( x );
			loop {
				if y.index() == v {
					return true;
				}
				match f.get_parent( y ) {
					Some( p ) => y = p,
					None => return false
				}
			}
		};
		let mut boundaries : Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
		for v in 0..n {
			for x in 0..n {
				if in_subtree_of( x, v ) {
					for &y in &adj[x] {
						if !in_subtree_of( y, v ) {
							boundaries[v].insert( y );
						}
					}
				}
			}
			assert!( boundaries[v].len() <= 2, "node {v} is not 2-cut" );
		}
		for v in 0..n {
			let Some( p ) = parents[v] else { continue };
			if boundaries[v].len() == 2 {
				let g = parents[p];
				let is_direct = g.is_some_and( |g| boundaries[v].contains( &p ) && boundaries[v].contains( &g ) );
				if is_direct {
					assert!( f.nodes[p].dsep_child.is_none(), "two direct separator children of {p}" );
					f.nodes[p].dsep_child = Some( NodeIdx::new( v ) );
				}
				else {
					assert!( f.nodes[p].isep_child.is_none(), "two indirect separator children of {p}" );
					f.nodes[p].isep_child = Some( NodeIdx::new( v ) );
				}
			}
		}
		let expected : BTreeSet<( usize, usize )> =
			edges.iter().map( |&( a, b )| ( a.min( b ), a.max( b ) ) ).collect();
		f.validate( &expected ).expect( "from_structure: invalid search forest" );
		f
	}
}

#[cfg(test)]
mod tests {
	use super::*;
	use crate::twocut::node_data::EmptyNodeData;
	use crate::EmptyWeight;

	/// Underlying star with center `s = 1` and leaves `x = 0`, `y = 2`, `z = 3`;
	/// search tree is the chain 0 -> 2 -> 1 -> 3 with 1 the direct separator child of 2.
	fn star4() -> SttForest<EmptyNodeData> {
		SttForest::from_structure(
			&[None, Some( 2 ), Some( 0 ), Some( 1 )],
			&[( 1, 0 ), ( 1, 2 ), ( 1, 3 )] )
	}

	/// Underlying path 0-1-2-3-4; search tree: root 0, child 3 (with child 4), 3's other
	/// child 2, whose child is 1. Node 1 is an indirect separator (boundary {0, 2}).
	fn path5() -> SttForest<EmptyNodeData> {
		SttForest::from_structure(
			&[None, Some( 2 ), Some( 3 ), Some( 0 ), Some( 3 )],
			&[( 0, 1 ), ( 1, 2 ), ( 2, 3 ), ( 3, 4 )] )
	}

	#[test]
	fn empty_and_singleton_forests() {
		let f : SttForest<EmptyNodeData> = SttForest::new( 0 );
		assert_eq!( f.num_nodes(), 0 );
		assert!( f.underlying_edges().is_empty() );

		let f : SttForest<EmptyNodeData> = SttForest::new( 1 );
		assert_eq!( f.get_parent( NodeIdx::new( 0 ) ), None );
		assert_eq!( f.get_dsep_child( NodeIdx::new( 0 ) ), None );
		assert!( f.underlying_edges().is_empty() );

		let f : SttForest<EmptyNodeData> = SttForest::new( 3 );
		assert!( f.underlying_edges().is_empty() );
		for v in f.nodes() {
			assert_eq!( f.compute_boundary( v ), BTreeSet::new() );
		}
	}

	#[test]
	fn star4_separator_predicates() {
		let f = star4();
		let s = NodeIdx::new( 1 );
		let x = NodeIdx::new( 0 );
		let y = NodeIdx::new( 2 );
		let z = NodeIdx::new( 3 );
		assert!( f.is_separator( s ) );
		assert!( f.is_direct_separator( s ) );
		assert!( !f.is_separator( z ) );
		assert!( !f.is_separator( x ) );
		assert!( !f.is_separator( y ) );
		assert_eq!( f.compute_boundary( s ), BTreeSet::from( [x, y] ) );
		assert_eq!( f.compute_boundary( z ), BTreeSet::from( [s] ) );
		assert_eq!( f.compute_boundary( x ), BTreeSet::new() );
	}

	#[test]
	fn path5_indirect_separator() {
		let f = path5();
		let one = NodeIdx::new( 1 );
		assert!( f.is_indirect_separator( one ) );
		assert!( !f.is_direct_separator( one ) );
		assert_eq!( f.compute_boundary( one ), BTreeSet::from( [NodeIdx::new( 0 ), NodeIdx::new( 2 )] ) );
		// 2 has boundary {0, 3} = {grandparent, parent}: direct.
		assert!( f.is_direct_separator( NodeIdx::new( 2 ) ) );
	}

	#[test]
	fn star4_can_rotate() {
		let f = star4();
		assert!( !f.can_rotate( NodeIdx::new( 3 ) ) ); // z: 1-cut below a separator
		assert!( f.can_rotate( NodeIdx::new( 1 ) ) ); // s: separator
		assert!( f.can_rotate( NodeIdx::new( 2 ) ) ); // y: child of the root
	}

	#[test]
	fn rotate_two_nodes() {
		let mut f : SttForest<EmptyNodeData> = SttForest::from_structure(
			&[None, Some( 0 )], &[( 0, 1 )] );
		f.rotate( NodeIdx::new( 1 ) );
		assert_eq!( f.get_parent( NodeIdx::new( 0 ) ), Some( NodeIdx::new( 1 ) ) );
		assert_eq!( f.get_parent( NodeIdx::new( 1 ) ), None );
		assert_eq!( f.get_dsep_child( NodeIdx::new( 1 ) ), None );
		assert_eq!( f.get_isep_child( NodeIdx::new( 1 ) ), None );
		f.validate( &BTreeSet::from( [( 0, 1 )] ) ).unwrap();
		assert_eq!( f.num_rotations(), 1 );
	}

	#[test]
	fn rotate_star4_at_separator() {
		let mut f = star4();
		let edges = f.underlying_edges();
		f.rotate( NodeIdx::new( 1 ) );
		// s becomes a child of x; y becomes a child of s; z stays below s.
		assert_eq!( f.get_parent( NodeIdx::new( 1 ) ), Some( NodeIdx::new( 0 ) ) );
		assert_eq!( f.get_parent( NodeIdx::new( 2 ) ), Some( NodeIdx::new( 1 ) ) );
		assert_eq!( f.get_parent( NodeIdx::new( 3 ) ), Some( NodeIdx::new( 1 ) ) );
		assert!( !f.is_separator( NodeIdx::new( 3 ) ) );
		assert_eq!( f.underlying_edges(), edges );
		f.validate( &edges ).unwrap();
	}

	#[test]
	fn rotate_direct_separator_with_separator_parent() {
		// Underlying path a-p-v-g (0-1-2-3); search tree 0 -> 3 -> 1 -> 2, where 1 is the
		// direct separator child of 3 and 2 the direct separator child of 1.
		let mut f : SttForest<EmptyNodeData> = SttForest::from_structure(
			&[None, Some( 3 ), Some( 1 ), Some( 0 )],
			&[( 0, 1 ), ( 1, 2 ), ( 2, 3 )] );
		let edges = f.underlying_edges();
		f.rotate( NodeIdx::new( 2 ) );
		// p = 1 ends as the indirect separator child of v = 2, with boundary {2, 0}.
		assert_eq!( f.get_isep_child( NodeIdx::new( 2 ) ), Some( NodeIdx::new( 1 ) ) );
		assert_eq!( f.compute_boundary( NodeIdx::new( 1 ) ),
			BTreeSet::from( [NodeIdx::new( 2 ), NodeIdx::new( 0 )] ) );
		f.validate( &edges ).unwrap();
	}

	#[test]
	fn rotations_preserve_edges_exhaustively() {
		// On the path-5 fixture, rotate every rotatable node and check invariants, a few
		// layers deep.
		fn recurse( f : &SttForest<EmptyNodeData>, edges : &BTreeSet<( usize, usize )>, depth : usize ) {
			f.validate( edges ).unwrap();
			if depth == 0 {
				return;
			}
			for v in f.nodes() {
				if f.get_parent( v ).is_some() && f.can_rotate( v ) {
					let mut g = f.clone();
					g.rotate( v );
					assert_eq!( &g.underlying_edges(), edges );
					recurse( &g, edges, depth - 1 );
				}
			}
		}
		let f = path5();
		let edges = f.underlying_edges();
		recurse( &f, &edges, 3 );
	}

	#[test]
	fn forbidden_rotation_matches_forced_validate() {
		// can_rotate(v) must agree with "a forced rotation keeps the forest valid".
		let fixtures = [star4(), path5()];
		for f in fixtures {
			let edges = f.underlying_edges();
			for v in f.nodes() {
				if f.get_parent( v ).is_none() {
					continue;
				}
				let mut g = f.clone();
				// Bypass the debug check by replicating rotate via a forced copy: here we
				// simply call rotate when allowed, and verify the claimed-illegal ones by
				// checking the boundary sizes directly.
				if g.can_rotate( v ) {
					g.rotate( v );
					assert!( g.validate( &edges ).is_ok(), "legal rotation at {v} produced invalid forest" );
				}
				else {
					let bv = f.compute_boundary( v ).len();
					let bp = f.compute_boundary( f.get_parent( v ).unwrap() ).len();
					assert!( bv == 1 && bp == 2, "can_rotate( {v} ) = false, but boundaries are {bv}, {bp}" );
				}
			}
		}
	}

	#[test]
	fn validate_detects_corrupted_pointer() {
		let mut f = star4();
		let edges = f.underlying_edges();
		// Manually corrupt: claim y (node 2) is an indirect separator child of the root.
		f.nodes[0].isep_child = Some( NodeIdx::new( 2 ) );
		assert!( f.validate( &edges ).is_err() );
	}

	#[test]
	#[should_panic]
	fn rotate_root_is_misuse() {
		let mut f : SttForest<EmptyNodeData> = SttForest::new( 2 );
		f.rotate( NodeIdx::new( 0 ) );
	}

	#[test]
	fn attach_detach_roundtrip() {
		let mut f : SttForest<EmptyNodeData> = SttForest::new( 2 );
		f.attach( NodeIdx::new( 0 ), NodeIdx::new( 1 ), EmptyWeight );
		assert_eq!( f.underlying_edges(), BTreeSet::from( [( 0, 1 )] ) );
		f.detach( NodeIdx::new( 0 ) );
		assert!( f.underlying_edges().is_empty() );
	}
}
