//! The 1-cut forest: each tree is stored as a plain rooting (a 1-cut search tree).
//!
//! The dynamic forest operations follow the same recipe as the search-tree forests --
//! bring both endpoints to the root, then touch one pointer -- with a node-to-root that
//! repeatedly rotates the root with a child, i.e. re-roots along the path. Every
//! operation therefore costs time linear in the distance between its endpoints, one
//! restructuring step per edge flipped. Surprisingly competitive on uniformly random
//! workloads, and the natural baseline for the self-adjusting structures.

use crate::{DynamicForest, MonoidWeight, NodeIdx};

#[derive(Clone)]
struct Node<TWeight> {
	parent : Option<NodeIdx>,
	weight : TWeight // weight of the edge to the parent; meaningless on roots
}

/// Dynamic forest maintaining one rooting per tree.
#[derive(Clone)]
pub struct OneCutForest<TWeight : MonoidWeight> {
	nodes : Vec<Node<TWeight>>,
	steps : u64,
	chain : Vec<NodeIdx> // scratch for re-rooting
}

impl<TWeight : MonoidWeight> OneCutForest<TWeight> {
	/// Re-roots `v`'s tree at `v` by flipping the edges on its root path; one
	/// restructuring step per edge.
	fn node_to_root( &mut self, v : NodeIdx ) {
		let mut chain = std::mem::take( &mut self.chain );
		chain.clear();
		let mut x = v;
		while let Some( p ) = self.nodes[x.index()].parent {
			chain.push( x );
			x = p;
		}
		// Flip from the far end towards v.
		for &x in chain.iter().rev() {
			let p = self.nodes[x.index()].parent.unwrap();
			let w = self.nodes[x.index()].weight;
			self.nodes[p.index()].parent = Some( x );
			self.nodes[p.index()].weight = w;
			self.steps += 1;
		}
		self.nodes[v.index()].parent = None;
		self.chain = chain;
	}
}

impl<TWeight : MonoidWeight> DynamicForest for OneCutForest<TWeight> {
	type TWeight = TWeight;

	fn new( num_nodes : usize ) -> Self {
		OneCutForest {
			nodes : (0..num_nodes).map( |_| Node { parent : None, weight : TWeight::identity() } ).collect(),
			steps : 0,
			chain : Vec::new()
		}
	}

	fn link( &mut self, u : NodeIdx, v : NodeIdx, weight : TWeight ) {
		debug_assert!( u != v );
		self.node_to_root( u );
		self.node_to_root( v );
		debug_assert!( self.nodes[u.index()].parent.is_none(), "link: {u} and {v} are already connected" );
		self.nodes[u.index()].parent = Some( v );
		self.nodes[u.index()].weight = weight;
	}

	fn cut( &mut self, u : NodeIdx, v : NodeIdx ) {
		self.node_to_root( u );
		self.node_to_root( v );
		// With {u, v} an edge and v the root, u hangs directly below v.
		debug_assert!( self.nodes[u.index()].parent == Some( v ), "cut: no edge between {u} and {v}" );
		self.nodes[u.index()].parent = None;
	}

	fn compute_path_weight( &mut self, u : NodeIdx, v : NodeIdx ) -> Option<TWeight> {
		if u == v {
			return Some( TWeight::identity() );
		}
		self.node_to_root( u );
		self.node_to_root( v );
		// In a rooting, the root path of u is exactly the underlying u-v path.
		let mut total = TWeight::identity();
		let mut x = u;
		loop {
			match self.nodes[x.index()].parent {
				Some( p ) => {
					total = total + self.nodes[x.index()].weight;
					x = p;
				}
				None => return if x == v { Some( total ) } else { None }
			}
		}
	}

	fn num_nodes( &self ) -> usize {
		self.nodes.len()
	}

	fn num_rotations( &self ) -> u64 {
		self.steps
	}
}

#[cfg(test)]
mod tests {
	use super::*;
	use crate::I64SumWeight;

	fn n( i : usize ) -> NodeIdx {
		NodeIdx::new( i )
	}

	#[test]
	fn reroot_counts_depth() {
		let mut f : OneCutForest<I64SumWeight> = OneCutForest::new( 6 );
		for i in 1..6 {
			f.link( n( i ), n( i - 1 ), I64SumWeight::from( 1 ) );
		}
		// The last link re-rooted the path at 4, leaving 0 at depth 4.
		let before = f.num_rotations();
		f.node_to_root( n( 0 ) );
		assert_eq!( f.num_rotations() - before, 4 );
		let before = f.num_rotations();
		f.node_to_root( n( 0 ) );
		assert_eq!( f.num_rotations() - before, 0 );
	}

	#[test]
	fn path_weights() {
		let mut f : OneCutForest<I64SumWeight> = OneCutForest::new( 4 );
		f.link( n( 0 ), n( 1 ), I64SumWeight::from( 5 ) );
		f.link( n( 1 ), n( 2 ), I64SumWeight::from( 7 ) );
		assert_eq!( f.compute_path_weight( n( 0 ), n( 2 ) ), Some( I64SumWeight::from( 12 ) ) );
		assert_eq!( f.compute_path_weight( n( 0 ), n( 3 ) ), None );
		f.cut( n( 0 ), n( 1 ) );
		assert_eq!( f.compute_path_weight( n( 0 ), n( 2 ) ), None );
	}
}
