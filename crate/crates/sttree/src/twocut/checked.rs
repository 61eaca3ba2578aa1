//! Instrumented dynamic forest for tests: runs every structural and annotation check
//! after every single operation.
//!
//! The wrapper keeps a shadow adjacency list of the underlying forest, updated on link
//! and cut. After each operation it validates the search forest against the shadow
//! (search-tree properties, 2-cut bound, separator pointers), checks that the edge set
//! reconstructed from the three pointers equals the shadow exactly, and compares every
//! distance annotation with a brute-force distance computed on the shadow. Queries are
//! additionally checked against a shadow path computation. Panics on the first
//! violation. Strictly test infrastructure: quadratic per operation.

use std::collections::BTreeSet;

use crate::{Dist, DynamicForest, MonoidWeight, NodeIdx};
use crate::twocut::SttAccess;
use crate::twocut::node_data::{NodeData, PathDataRead};

/// A dynamic forest that cross-checks itself after every operation.
pub struct CheckedForest<TForest>
where
	TForest : SttAccess,
	TForest : DynamicForest<TWeight = <<TForest as SttAccess>::TData as NodeData>::TWeight>,
	<TForest as SttAccess>::TData : PathDataRead
{
	inner : TForest,
	adj : Vec<Vec<( NodeIdx, <TForest as DynamicForest>::TWeight )>>,
	checks : u64
}

impl<TForest> CheckedForest<TForest>
where
	TForest : SttAccess,
	TForest : DynamicForest<TWeight = <<TForest as SttAccess>::TData as NodeData>::TWeight>,
	<TForest as SttAccess>::TData : PathDataRead
{
	/// Number of full after-operation check passes performed.
	pub fn num_checks( &self ) -> u64 {
		self.checks
	}

	/// The wrapped forest.
	pub fn inner( &self ) -> &TForest {
		&self.inner
	}

	fn shadow_edges( &self ) -> BTreeSet<( usize, usize )> {
		let mut edges = BTreeSet::new();
		for v in 0..self.adj.len() {
			for &( u, _ ) in &self.adj[v] {
				edges.insert( ( v.min( u.index() ), v.max( u.index() ) ) );
			}
		}
		edges
	}

	/// Distance from `u` to every node in its shadow tree; `None` elsewhere.
	fn shadow_distances( &self, u : NodeIdx ) -> Vec<Option<TForest::TWeight>> {
		let n = self.adj.len();
		let mut dist : Vec<Option<TForest::TWeight>> = vec![None; n];
		dist[u.index()] = Some( TForest::TWeight::identity() );
		let mut queue = vec![u];
		let mut head = 0;
		while head < queue.len() {
			let x = queue[head];
			head += 1;
			for &( y, w ) in &self.adj[x.index()] {
				if dist[y.index()].is_none() {
					dist[y.index()] = Some( dist[x.index()].unwrap() + w );
					queue.push( y );
				}
			}
		}
		dist
	}

	fn check_all( &mut self ) {
		self.checks += 1;
		let stt = self.inner.stt();
		let edges = self.shadow_edges();

		// Structure: search-tree properties, 2-cut, separator pointers, and the pointer
		// reconstruction of the underlying edges.
		if let Err( e ) = stt.validate( &edges ) {
			panic!( "instrumented check failed: {e}" );
		}

		// Subtree membership, for boundary computation.
		let n = stt.num_nodes();
		let mut children : Vec<Vec<NodeIdx>> = vec![Vec::new(); n];
		for v in stt.nodes() {
			if let Some( p ) = stt.get_parent( v ) {
				children[p.index()].push( v );
			}
		}

		for v in stt.nodes() {
			let dist = self.shadow_distances( v );

			// pdist must be the true distance to the search parent.
			let expected_pdist = match stt.get_parent( v ) {
				Some( p ) => Dist::Finite( dist[p.index()]
					.expect( "parent must be in the same shadow tree" ) ),
				None => Dist::Infinite
			};
			let data = stt.data( v );
			assert!( data.pdist() == expected_pdist,
				"pdist of {v} is {:?}, expected {:?}", data.pdist(), expected_pdist );

			// adist, where tracked, must be the distance to the non-parent boundary
			// vertex, and infinite on 1-cut nodes and roots.
			if let Some( adist ) = data.adist() {
				let mut in_subtree = vec![false; n];
				let mut stack = vec![v];
				while let Some( x ) = stack.pop() {
					in_subtree[x.index()] = true;
					stack.extend( children[x.index()].iter().copied() );
				}
				let mut boundary = BTreeSet::new();
				for x in 0..n {
					if in_subtree[x] {
						for &( y, _ ) in &self.adj[x] {
							if !in_subtree[y.index()] {
								boundary.insert( y );
							}
						}
					}
				}
				let parent = stt.get_parent( v );
				let other : Vec<NodeIdx> =
					boundary.iter().copied().filter( |&b| Some( b ) != parent ).collect();
				let expected_adist = match other[..] {
					[b] => Dist::Finite( dist[b.index()]
						.expect( "boundary vertex must be in the same shadow tree" ) ),
					[] => Dist::Infinite,
					_ => panic!( "node {v} has more than one non-parent boundary vertex" )
				};
				assert!( adist == expected_adist,
					"adist of {v} is {adist:?}, expected {expected_adist:?}" );
			}
		}
	}
}

impl<TForest> DynamicForest for CheckedForest<TForest>
where
	TForest : SttAccess,
	TForest : DynamicForest<TWeight = <<TForest as SttAccess>::TData as NodeData>::TWeight>,
	<TForest as SttAccess>::TData : PathDataRead
{
	type TWeight = <TForest as DynamicForest>::TWeight;

	fn new( num_nodes : usize ) -> Self {
		CheckedForest {
			inner : TForest::new( num_nodes ),
			adj : vec![Vec::new(); num_nodes],
			checks : 0
		}
	}

	fn link( &mut self, u : NodeIdx, v : NodeIdx, weight : Self::TWeight ) {
		self.inner.link( u, v, weight );
		self.adj[u.index()].push( ( v, weight ) );
		self.adj[v.index()].push( ( u, weight ) );
		self.check_all();
	}

	fn cut( &mut self, u : NodeIdx, v : NodeIdx ) {
		self.inner.cut( u, v );
		for ( a, b ) in [( u, v ), ( v, u )] {
			let pos = self.adj[a.index()].iter().position( |&( x, _ )| x == b )
				.expect( "cut: edge missing in the shadow graph" );
			self.adj[a.index()].swap_remove( pos );
		}
		self.check_all();
	}

	fn compute_path_weight( &mut self, u : NodeIdx, v : NodeIdx ) -> Option<Self::TWeight> {
		let result = self.inner.compute_path_weight( u, v );
		let expected = self.shadow_distances( u )[v.index()];
		assert!( result == expected,
			"path weight {u}-{v}: got {result:?}, expected {expected:?}" );
		self.check_all();
		result
	}

	fn num_nodes( &self ) -> usize {
		self.inner.num_nodes()
	}

	fn num_rotations( &self ) -> u64 {
		self.inner.num_rotations()
	}
}
