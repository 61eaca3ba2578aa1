//! Seed-deterministic workload scripts.
//!
//! Scripts are generated once against a shadow forest (so every operation is legal by
//! construction) and then replayed on each implementation under test. Identical
//! parameters and seed always produce the identical script; all randomness comes from
//! the pinned [SplitMix64] generator.

use sttree::NodeIdx;
use sttree::rng::SplitMix64;
use sttree::rooted::{RootedDynamicForest, SimpleRootedForest};

/// One operation of an unrooted workload. Link weights are plain numbers; the runner
/// maps them into the weight type of the implementation under test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Query {
	/// Add an edge.
	Link( NodeIdx, NodeIdx, u64 ),
	/// Remove an edge.
	Cut( NodeIdx, NodeIdx ),
	/// Query the path weight between two nodes.
	PathWeight( NodeIdx, NodeIdx )
}

/// An unrooted workload.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QueryScript {
	/// Number of nodes.
	pub num_nodes : usize,
	/// The operations, in order.
	pub queries : Vec<Query>
}

/// One operation of a rooted workload.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootedQuery {
	/// Attach a tree root below another node.
	Link( NodeIdx, NodeIdx ),
	/// Detach a non-root node from its parent.
	Cut( NodeIdx ),
	/// Query the lowest common ancestor.
	Lca( NodeIdx, NodeIdx ),
	/// Re-root the tree at the given node.
	Evert( NodeIdx )
}

/// A rooted workload.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedScript {
	/// Number of nodes.
	pub num_nodes : usize,
	/// The operations, in order.
	pub queries : Vec<RootedQuery>,
	/// Whether the script contains evert operations.
	pub with_evert : bool
}

/// Shadow forest for the unrooted generators: plain adjacency lists with breadth-first
/// path searches.
struct ShadowForest {
	adj : Vec<Vec<usize>>,
	pred : Vec<usize>,
	visited : Vec<u64>,
	version : u64,
	queue : Vec<usize>
}

impl ShadowForest {
	fn new( num_nodes : usize ) -> Self {
		ShadowForest {
			adj : vec![Vec::new(); num_nodes],
			pred : vec![usize::MAX; num_nodes],
			visited : vec![0; num_nodes],
			version : 0,
			queue : Vec::new()
		}
	}

	fn link( &mut self, u : usize, v : usize ) {
		self.adj[u].push( v );
		self.adj[v].push( u );
	}

	fn cut( &mut self, u : usize, v : usize ) {
		let pos = self.adj[u].iter().position( |&x| x == v ).unwrap();
		self.adj[u].swap_remove( pos );
		let pos = self.adj[v].iter().position( |&x| x == u ).unwrap();
		self.adj[v].swap_remove( pos );
	}

	/// The vertices of the u-v path (u first), or `None` if disconnected.
	fn path( &mut self, u : usize, v : usize ) -> Option<Vec<usize>> {
		self.version += 1;
		self.queue.clear();
		self.queue.push( u );
		self.visited[u] = self.version;
		let mut head = 0;
		let mut found = u == v;
		while head < self.queue.len() && !found {
			let x = self.queue[head];
			head += 1;
			for &y in &self.adj[x] {
				if self.visited[y] != self.version {
					self.visited[y] = self.version;
					self.pred[y] = x;
					if y == v {
						found = true;
						break;
					}
					self.queue.push( y );
				}
			}
		}
		if !found {
			return None;
		}
		let mut path = vec![v];
		let mut x = v;
		while x != u {
			x = self.pred[x];
			path.push( x );
		}
		path.reverse();
		Some( path )
	}
}

/// Uniformly random connectivity workload: per query, draw a uniform pair; link if
/// disconnected, otherwise query the path weight with probability `p_path` and cut a
/// uniformly random edge of the connecting path otherwise.
pub fn gen_urc( num_nodes : usize, num_queries : usize, p_path : f64, seed : u64 ) -> QueryScript {
	assert!( num_nodes >= 2 );
	assert!( ( 0.0..=1.0 ).contains( &p_path ) );
	let mut rng = SplitMix64::new( seed );
	let mut shadow = ShadowForest::new( num_nodes );
	let mut queries = Vec::with_capacity( num_queries );
	for _ in 0..num_queries {
		let ( u, v ) = rng.next_distinct_pair( num_nodes );
		match shadow.path( u, v ) {
			None => {
				let w = rng.next_below( 1000 );
				shadow.link( u, v );
				queries.push( Query::Link( NodeIdx::new( u ), NodeIdx::new( v ), w ) );
			}
			Some( path ) => {
				if rng.next_f64() < p_path {
					queries.push( Query::PathWeight( NodeIdx::new( u ), NodeIdx::new( v ) ) );
				}
				else {
					let i = rng.next_index( path.len() - 1 );
					let ( a, b ) = ( path[i], path[i + 1] );
					shadow.cut( a, b );
					queries.push( Query::Cut( NodeIdx::new( a ), NodeIdx::new( b ) ) );
				}
			}
		}
	}
	QueryScript { num_nodes, queries }
}

/// Builds a path and then queries the weight from every node, in order, to the far end.
/// The fixed access pattern is the worst case for the linear-time structures.
pub fn gen_degenerate( num_nodes : usize ) -> QueryScript {
	gen_noisy_degenerate( num_nodes, 0.0, 0 )
}

/// The degenerate path workload with the query index perturbed by normal noise of the
/// given standard deviation; zero noise recovers [gen_degenerate] exactly.
pub fn gen_noisy_degenerate( num_nodes : usize, sigma : f64, seed : u64 ) -> QueryScript {
	assert!( num_nodes >= 2 );
	assert!( sigma >= 0.0 );
	let mut rng = SplitMix64::new( seed );
	let mut queries = Vec::with_capacity( 2 * num_nodes - 1 );
	for i in 0..num_nodes - 1 {
		queries.push( Query::Link( NodeIdx::new( i ), NodeIdx::new( i + 1 ), 1 ) );
	}
	let last = num_nodes - 1;
	for i in 0..num_nodes {
		let offset = rng.next_normal( sigma ).floor() as i64;
		let j = ( i as i64 + offset ).clamp( 0, last as i64 ) as usize;
		queries.push( Query::PathWeight( NodeIdx::new( j ), NodeIdx::new( last ) ) );
	}
	QueryScript { num_nodes, queries }
}

/// Rooted workload around lowest common ancestors. Per query: with probability
/// `m / (2 (n-1))`, where `m` is the current number of non-root nodes, cut a uniform
/// non-root node (replaced by an evert of a uniform node half of the time in the evert
/// variant); otherwise draw a uniform pair and link the tree root of the first endpoint
/// below the second if the trees differ, else query their lowest common ancestor.
pub fn gen_lca( num_nodes : usize, num_queries : usize, with_evert : bool, seed : u64 ) -> RootedScript {
	assert!( num_nodes >= 2 );
	let mut rng = SplitMix64::new( seed );
	let mut shadow = SimpleRootedForest::new( num_nodes );
	// Non-root nodes, with positions for O(1) uniform sampling and removal.
	let mut non_roots : Vec<usize> = Vec::new();
	let mut pos : Vec<usize> = vec![usize::MAX; num_nodes];
	let make_non_root = |x : usize, non_roots : &mut Vec<usize>, pos : &mut Vec<usize>| {
		debug_assert!( pos[x] == usize::MAX );
		pos[x] = non_roots.len();
		non_roots.push( x );
	};
	let make_root = |x : usize, non_roots : &mut Vec<usize>, pos : &mut Vec<usize>| {
		let i = pos[x];
		debug_assert!( i != usize::MAX );
		let last = *non_roots.last().unwrap();
		non_roots.swap_remove( i );
		if last != x {
			pos[last] = i;
		}
		pos[x] = usize::MAX;
	};

	let mut queries = Vec::with_capacity( num_queries );
	for _ in 0..num_queries {
		let m = non_roots.len();
		let cut_event = rng.next_f64() < 0.5 * m as f64 / ( num_nodes - 1 ) as f64;
		if cut_event {
			if with_evert && rng.next_below( 2 ) == 0 {
				let x = rng.next_index( num_nodes );
				let old_root = shadow.root_of_no_restructure( NodeIdx::new( x ) ).index();
				if old_root != x {
					make_root( x, &mut non_roots, &mut pos );
					make_non_root( old_root, &mut non_roots, &mut pos );
				}
				shadow.evert( NodeIdx::new( x ) );
				queries.push( RootedQuery::Evert( NodeIdx::new( x ) ) );
			}
			else {
				let x = non_roots[rng.next_index( m )];
				shadow.cut( NodeIdx::new( x ) );
				make_root( x, &mut non_roots, &mut pos );
				queries.push( RootedQuery::Cut( NodeIdx::new( x ) ) );
			}
		}
		else {
			let ( u, v ) = rng.next_distinct_pair( num_nodes );
			let ru = shadow.root_of_no_restructure( NodeIdx::new( u ) );
			if ru == shadow.root_of_no_restructure( NodeIdx::new( v ) ) {
				queries.push( RootedQuery::Lca( NodeIdx::new( u ), NodeIdx::new( v ) ) );
			}
			else {
				shadow.link( ru, NodeIdx::new( v ) );
				make_non_root( ru.index(), &mut non_roots, &mut pos );
				queries.push( RootedQuery::Link( ru, NodeIdx::new( v ) ) );
			}
		}
	}
	RootedScript { num_nodes, queries, with_evert }
}

#[cfg(test)]
mod tests {
	use super::*;

	#[test]
	fn urc_deterministic() {
		let a = gen_urc( 100, 2000, 0.5, 42 );
		let b = gen_urc( 100, 2000, 0.5, 42 );
		assert_eq!( a, b );
		let c = gen_urc( 100, 2000, 0.5, 43 );
		assert_ne!( a, c );
	}

	#[test]
	fn urc_two_nodes_starts_with_link() {
		let s = gen_urc( 2, 1, 0.5, 7 );
		assert!( matches!( s.queries[0], Query::Link( .. ) ) );
	}

	#[test]
	fn degenerate_layout() {
		let s = gen_degenerate( 4 );
		assert_eq!( s.queries.len(), 3 + 4 );
		// Three links building the path, then queries (0,3), (1,3), (2,3), (3,3).
		for i in 0..4 {
			assert_eq!( s.queries[3 + i],
				Query::PathWeight( NodeIdx::new( i ), NodeIdx::new( 3 ) ) );
		}
	}

	#[test]
	fn noisy_degenerate_zero_sigma_is_degenerate() {
		assert_eq!( gen_noisy_degenerate( 50, 0.0, 123 ), gen_degenerate( 50 ) );
	}

	#[test]
	fn noisy_degenerate_stays_in_range() {
		let s = gen_noisy_degenerate( 100, 30.0, 5 );
		for q in &s.queries[99..] {
			match q {
				Query::PathWeight( j, l ) => {
					assert!( j.index() < 100 );
					assert_eq!( l.index(), 99 );
				}
				_ => panic!( "expected only path queries after the build phase" )
			}
		}
	}

	#[test]
	fn lca_scripts_are_legal_and_deterministic() {
		let a = gen_lca( 200, 2000, true, 9 );
		let b = gen_lca( 200, 2000, true, 9 );
		assert_eq!( a, b );
		// Replay against a fresh shadow; every operation must be legal.
		let mut f = SimpleRootedForest::new( a.num_nodes );
		for q in &a.queries {
			match *q {
				RootedQuery::Link( u, v ) => {
					assert!( f.get_parent( u ).is_none() );
					assert!( f.root_of_no_restructure( v ) != u );
					f.link( u, v );
				}
				RootedQuery::Cut( v ) => {
					assert!( f.get_parent( v ).is_some() );
					f.cut( v );
				}
				RootedQuery::Lca( u, v ) => {
					assert!( f.lca( u, v ).is_some() );
				}
				RootedQuery::Evert( v ) => f.evert( v )
			}
		}
	}
}
