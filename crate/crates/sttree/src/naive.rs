//! Adjacency-list dynamic forest: trivially correct and linear per query.
//!
//! This is the ground-truth implementation the others are verified against, and doubles
//! as the slow baseline in benchmarks.

use crate::{DynamicForest, MonoidWeight, NodeIdx};

/// A forest stored as weighted adjacency lists; path queries run a breadth-first search.
#[derive(Clone)]
pub struct NaiveForest<TWeight : MonoidWeight> {
	adj : Vec<Vec<( NodeIdx, TWeight )>>,
	// BFS scratch: predecessor-side accumulated weight, versioned visit marks, queue.
	dist : Vec<TWeight>,
	visited : Vec<u64>,
	version : u64,
	queue : Vec<NodeIdx>
}

impl<TWeight : MonoidWeight> NaiveForest<TWeight> {
	/// The weight of the unique `u`-`v` path, or `None` if disconnected. Does not
	/// restructure anything; only the scratch buffers are touched.
	pub fn oracle_path_weight( &mut self, u : NodeIdx, v : NodeIdx ) -> Option<TWeight> {
		if u == v {
			return Some( TWeight::identity() );
		}
		self.version += 1;
		self.queue.clear();
		self.queue.push( u );
		self.visited[u.index()] = self.version;
		self.dist[u.index()] = TWeight::identity();
		let mut head = 0;
		while head < self.queue.len() {
			let x = self.queue[head];
			head += 1;
			for &( y, w ) in &self.adj[x.index()] {
				if self.visited[y.index()] != self.version {
					self.visited[y.index()] = self.version;
					self.dist[y.index()] = self.dist[x.index()] + w;
					if y == v {
						return Some( self.dist[y.index()] );
					}
					self.queue.push( y );
				}
			}
		}
		None
	}

	/// All current edges, smaller index first.
	pub fn edges( &self ) -> Vec<( usize, usize )> {
		let mut out = Vec::new();
		for v in 0..self.adj.len() {
			for &( u, _ ) in &self.adj[v] {
				if v < u.index() {
					out.push( ( v, u.index() ) );
				}
			}
		}
		out
	}
}

impl<TWeight : MonoidWeight> DynamicForest for NaiveForest<TWeight> {
	type TWeight = TWeight;

	fn new( num_nodes : usize ) -> Self {
		NaiveForest {
			adj : vec![Vec::new(); num_nodes],
			dist : vec![TWeight::identity(); num_nodes],
			visited : vec![0; num_nodes],
			version : 0,
			queue : Vec::new()
		}
	}

	fn link( &mut self, u : NodeIdx, v : NodeIdx, weight : TWeight ) {
		debug_assert!( u != v );
		debug_assert!( self.oracle_path_weight( u, v ).is_none(), "link: {u} and {v} are already connected" );
		self.adj[u.index()].push( ( v, weight ) );
		self.adj[v.index()].push( ( u, weight ) );
	}

	fn cut( &mut self, u : NodeIdx, v : NodeIdx ) {
		let remove = |list : &mut Vec<( NodeIdx, TWeight )>, target : NodeIdx| {
			let pos = list.iter().position( |&( x, _ )| x == target )
				.expect( "cut: no such edge" );
			list.swap_remove( pos );
		};
		remove( &mut self.adj[u.index()], v );
		remove( &mut self.adj[v.index()], u );
	}

	fn compute_path_weight( &mut self, u : NodeIdx, v : NodeIdx ) -> Option<TWeight> {
		self.oracle_path_weight( u, v )
	}

	fn num_nodes( &self ) -> usize {
		self.adj.len()
	}
}

#[cfg(test)]
mod tests {
	use super::*;
	use crate::I64SumWeight;

	#[test]
	fn three_path() {
		let mut f : NaiveForest<I64SumWeight> = NaiveForest::new( 3 );
		f.link( NodeIdx::new( 0 ), NodeIdx::new( 1 ), I64SumWeight::from( 5 ) );
		f.link( NodeIdx::new( 1 ), NodeIdx::new( 2 ), I64SumWeight::from( 7 ) );
		assert_eq!( f.compute_path_weight( NodeIdx::new( 0 ), NodeIdx::new( 2 ) ),
			Some( I64SumWeight::from( 12 ) ) );
		f.cut( NodeIdx::new( 0 ), NodeIdx::new( 1 ) );
		assert_eq!( f.compute_path_weight( NodeIdx::new( 0 ), NodeIdx::new( 2 ) ), None );
		assert_eq!( f.compute_path_weight( NodeIdx::new( 1 ), NodeIdx::new( 2 ) ),
			Some( I64SumWeight::from( 7 ) ) );
	}
}
