//! Rooted dynamic forests: root queries, lowest common ancestors, re-rooting.
//!
//! In a rooted forest, `link( u, v )` requires `u` to be the root of its tree and makes
//! `v` its parent; `cut( v )` removes the edge between `v` and its parent. No edge
//! weights are maintained. [SimpleRootedForest] is the obvious parent-pointer
//! implementation, linear per operation and used as the correctness oracle.

use crate::NodeIdx;

/// A collection of rooted trees under links, cuts, root queries, lowest common
/// ancestors, and re-rooting. Queries may restructure, hence `&mut self`.
pub trait RootedDynamicForest {
	/// Creates a forest of `num_nodes` singleton trees, each its own root.
	fn new( num_nodes : usize ) -> Self;

	/// Number of nodes.
	fn num_nodes( &self ) -> usize;

	/// Makes `v` the parent of `u`. `u` must be the root of its tree, and `u`, `v` must
	/// be in different trees (checked in debug builds only).
	fn link( &mut self, u : NodeIdx, v : NodeIdx );

	/// Removes the edge between `v` and its parent; `v` becomes the root of its part.
	/// `v` must not be a root (checked in debug builds only).
	fn cut( &mut self, v : NodeIdx );

	/// The root of the tree containing `v`.
	fn find_root( &mut self, v : NodeIdx ) -> NodeIdx;

	/// The lowest common ancestor of `u` and `v`, or `None` if they are in different
	/// trees.
	fn lca( &mut self, u : NodeIdx, v : NodeIdx ) -> Option<NodeIdx>;

	/// Makes `v` the root of its tree.
	fn evert( &mut self, v : NodeIdx );

	/// Total number of primitive restructuring steps performed so far.
	fn num_rotations( &self ) -> u64 {
		0
	}
}


/// Rooted forest stored as plain parent pointers; all operations walk paths explicitly.
#[derive(Clone)]
pub struct SimpleRootedForest {
	parent : Vec<Option<NodeIdx>>,
	// Scratch for lca marking, versioned to avoid clearing.
	mark : Vec<u64>,
	mark_version : u64
}

impl SimpleRootedForest {
	/// The root of `v`'s tree. Unlike [RootedDynamicForest::find_root] this takes
	/// `&self`; handy when the forest doubles as a test oracle.
	pub fn root_of_no_restructure( &self, v : NodeIdx ) -> NodeIdx {
		let mut x = v;
		while let Some( p ) = self.parent[x.index()] {
			x = p;
		}
		x
	}

	/// The parent of `v`, if any.
	pub fn get_parent( &self, v : NodeIdx ) -> Option<NodeIdx> {
		self.parent[v.index()]
	}
}

impl RootedDynamicForest for SimpleRootedForest {
	fn new( num_nodes : usize ) -> Self {
		SimpleRootedForest {
			parent : vec![None; num_nodes],
			mark : vec![0; num_nodes],
			mark_version : 0
		}
	}

	fn num_nodes( &self ) -> usize {
		self.parent.len()
	}

	fn link( &mut self, u : NodeIdx, v : NodeIdx ) {
		debug_assert!( self.parent[u.index()].is_none(), "link: {u} is not a root" );
		debug_assert!( self.root_of_no_restructure( v ) != u, "link: {u} and {v} are already connected" );
		self.parent[u.index()] = Some( v );
	}

	fn cut( &mut self, v : NodeIdx ) {
		debug_assert!( self.parent[v.index()].is_some(), "cut: {v} is a root" );
		self.parent[v.index()] = None;
	}

	fn find_root( &mut self, v : NodeIdx ) -> NodeIdx {
		self.root_of_no_restructure( v )
	}

	fn lca( &mut self, u : NodeIdx, v : NodeIdx ) -> Option<NodeIdx> {
		self.mark_version += 1;
		let version = self.mark_version;
		let mut x = u;
		loop {
			self.mark[x.index()] = version;
			match self.parent[x.index()] {
				Some( p ) => x = p,
				None => break
			}
		}
		let mut y = v;
		loop {
			if self.mark[y.index()] == version {
				return Some( y );
			}
			match self.parent[y.index()] {
				Some( p ) => y = p,
				None => return None
			}
		}
	}

	fn evert( &mut self, v : NodeIdx ) {
		let mut child = v;
		let mut above = self.parent[v.index()];
		self.parent[v.index()] = None;
		while let Some( x ) = above {
			above = self.parent[x.index()];
			self.parent[x.index()] = Some( child );
			child = x;
		}
	}
}

#[cfg(test)]
mod tests {
	use super::*;

	fn n( i : usize ) -> NodeIdx {
		NodeIdx::new( i )
	}

	#[test]
	fn basic_rooted_ops() {
		let mut f = SimpleRootedForest::new( 5 );
		f.link( n( 1 ), n( 0 ) );
		f.link( n( 2 ), n( 1 ) );
		f.link( n( 3 ), n( 1 ) );
		assert_eq!( f.find_root( n( 3 ) ), n( 0 ) );
		assert_eq!( f.lca( n( 2 ), n( 3 ) ), Some( n( 1 ) ) );
		assert_eq!( f.lca( n( 2 ), n( 4 ) ), None );
		f.evert( n( 2 ) );
		assert_eq!( f.find_root( n( 0 ) ), n( 2 ) );
		assert_eq!( f.lca( n( 0 ), n( 3 ) ), Some( n( 1 ) ) );
		f.cut( n( 1 ) );
		assert_eq!( f.find_root( n( 1 ) ), n( 1 ) );
		assert_eq!( f.find_root( n( 0 ) ), n( 1 ) );
		assert_eq!( f.find_root( n( 2 ) ), n( 2 ) );
	}
}
