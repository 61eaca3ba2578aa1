//! Incremental minimum spanning forests on top of a dynamic forest.
//!
//! Edges arrive one by one (optionally with later weight decreases); the current
//! minimum spanning forest is maintained by the classic replacement rule: if the new
//! edge closes a cycle, evict the heaviest edge on the path between its endpoints, but
//! only if it is strictly heavier. Path maxima and their witnesses come straight from
//! the dynamic forest by running it with [MaxEdgeWeight] weights.
//!
//! An offline Kruskal implementation serves as ground truth, and a small reader turns
//! collaboration records (`author_a author_b year` lines, sorted by year) into an edge
//! stream: the first collaboration of a pair inserts an edge, every further one
//! decreases its weight. Weights are inverted (`W_MAX - count`) so that more
//! collaborations mean lighter edges.

use std::collections::HashMap;
use std::io::BufRead;

use crate::{DynamicForest, EdgeId, MaxEdgeWeight, NodeIdx};
use crate::rng::SplitMix64;

/// Weight base for the collaboration encoding; far above any realistic count.
pub const W_MAX : u64 = 1 << 32;

/// One event of an incremental MSF input stream.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeEvent {
	/// A new edge appears. The pair may repeat (multigraph); only the lightest parallel
	/// edge can ever be in the MSF.
	Insert {
		/// First endpoint.
		u : usize,
		/// Second endpoint.
		v : usize,
		/// Edge weight.
		weight : u64
	},
	/// The weight of a previously inserted edge drops to a strictly smaller value.
	Decrease {
		/// First endpoint.
		u : usize,
		/// Second endpoint.
		v : usize,
		/// The new, strictly smaller weight.
		weight : u64
	}
}

impl EdgeEvent {
	/// Endpoints and weight, regardless of kind.
	pub fn parts( &self ) -> ( usize, usize, u64 ) {
		match *self {
			EdgeEvent::Insert { u, v, weight } | EdgeEvent::Decrease { u, v, weight } => ( u, v, weight )
		}
	}
}

fn key( u : NodeIdx, v : NodeIdx ) -> ( usize, usize ) {
	( u.index().min( v.index() ), u.index().max( v.index() ) )
}

/// Incremental MSF state over some dynamic forest implementation.
pub struct IncrementalMsf<TForest : DynamicForest<TWeight = MaxEdgeWeight<u64>>> {
	forest : TForest,
	// Every edge ever linked into the forest, indexed by its EdgeId witness.
	edge_store : Vec<( NodeIdx, NodeIdx, u64 )>,
	// Current MSF edges by normalized endpoint pair.
	in_msf : HashMap<( usize, usize ), ( u64, EdgeId )>,
	// Best (smallest) weight ever seen per pair; for decrease-events only.
	best_seen : HashMap<( usize, usize ), u64>,
	total : u64
}

impl<TForest : DynamicForest<TWeight = MaxEdgeWeight<u64>>> IncrementalMsf<TForest> {
	/// An empty MSF over `num_nodes` nodes.
	pub fn new( num_nodes : usize ) -> Self {
		IncrementalMsf {
			forest : TForest::new( num_nodes ),
			edge_store : Vec::new(),
			in_msf : HashMap::new(),
			best_seen : HashMap::new(),
			total : 0
		}
	}

	fn add_edge( &mut self, u : NodeIdx, v : NodeIdx, weight : u64 ) {
		let id = EdgeId( self.edge_store.len() );
		self.edge_store.push( ( u, v, weight ) );
		self.forest.link( u, v, MaxEdgeWeight::new( weight, id ) );
		self.in_msf.insert( key( u, v ), ( weight, id ) );
		self.total += weight;
	}

	/// Handles an inserted edge: take it if it connects two trees or is strictly lighter
	/// than the heaviest edge on the path between its endpoints.
	pub fn insert( &mut self, u : NodeIdx, v : NodeIdx, weight : u64 ) {
		debug_assert!( u != v );
		let best = self.best_seen.entry( key( u, v ) ).or_insert( u64::MAX );
		*best = ( *best ).min( weight );
		match self.forest.compute_path_weight( u, v ) {
			None => self.add_edge( u, v, weight ),
			Some( max_edge ) => {
				if max_edge.weight > weight {
					let id = max_edge.witness.expect( "path maximum must carry a witness" );
					let ( a, b, w ) = self.edge_store[id.0];
					self.forest.cut( a, b );
					self.in_msf.remove( &key( a, b ) );
					self.total -= w;
					self.add_edge( u, v, weight );
				}
				// Equal weight: keep the incumbent.
			}
		}
	}

	/// Handles a weight decrease: evict the pair's old edge from the MSF if present,
	/// then re-insert with the new weight.
	pub fn decrease( &mut self, u : NodeIdx, v : NodeIdx, weight : u64 ) {
		let k = key( u, v );
		debug_assert!( self.best_seen.get( &k ).is_some_and( |&b| weight < b ),
			"decrease: pair was never inserted with a larger weight" );
		if let Some( &( w, _ ) ) = self.in_msf.get( &k ) {
			self.forest.cut( u, v );
			self.in_msf.remove( &k );
			self.total -= w;
		}
		self.insert( u, v, weight );
	}

	/// Applies one event.
	pub fn apply( &mut self, event : EdgeEvent ) {
		match event {
			EdgeEvent::Insert { u, v, weight } =>
				self.insert( NodeIdx::new( u ), NodeIdx::new( v ), weight ),
			EdgeEvent::Decrease { u, v, weight } =>
				self.decrease( NodeIdx::new( u ), NodeIdx::new( v ), weight )
		}
	}

	/// Total weight of the current MSF.
	pub fn total_weight( &self ) -> u64 {
		self.total
	}

	/// Number of edges in the current MSF.
	pub fn num_edges( &self ) -> usize {
		self.in_msf.len()
	}

	/// The current MSF edges with their weights.
	pub fn edges( &self ) -> impl Iterator<Item = ( usize, usize, u64 )> + '_ {
		self.in_msf.iter().map( |( &( a, b ), &( w, _ ) )| ( a, b, w ) )
	}

	/// The wrapped forest (for rotation counts).
	pub fn forest( &self ) -> &TForest {
		&self.forest
	}
}

/// Plain union-find with path halving and union by size.
struct UnionFind {
	parent : Vec<usize>,
	size : Vec<usize>
}

impl UnionFind {
	fn new( n : usize ) -> Self {
		UnionFind { parent : (0..n).collect(), size : vec![1; n] }
	}

	fn find( &mut self, mut x : usize ) -> usize {
		while self.parent[x] != x {
			self.parent[x] = self.parent[self.parent[x]];
			x = self.parent[x];
		}
		x
	}

	fn union( &mut self, a : usize, b : usize ) -> bool {
		let ( mut a, mut b ) = ( self.find( a ), self.find( b ) );
		if a == b {
			return false;
		}
		if self.size[a] < self.size[b] {
			std::mem::swap( &mut a, &mut b );
		}
		self.parent[b] = a;
		self.size[a] += self.size[b];
		true
	}
}

/// Offline Kruskal: sort by weight, scan with union-find. Ties are broken by input
/// position, which makes the chosen edge set deterministic. Returns the total weight and
/// the number of chosen edges.
pub fn kruskal( num_nodes : usize, edges : &[( usize, usize, u64 )] ) -> ( u64, usize ) {
	let mut order : Vec<usize> = (0..edges.len()).collect();
	order.sort_by_key( |&i| ( edges[i].2, i ) );
	let mut uf = UnionFind::new( num_nodes );
	let mut total = 0;
	let mut count = 0;
	for i in order {
		let ( u, v, w ) = edges[i];
		if u != v && uf.union( u, v ) {
			total += w;
			count += 1;
		}
	}
	( total, count )
}

/// A full replay of an event stream against [kruskal]: the current best weight per pair
/// defines the offline input.
pub fn kruskal_of_events( num_nodes : usize, events : &[EdgeEvent] ) -> ( u64, usize ) {
	let mut best : HashMap<( usize, usize ), u64> = HashMap::new();
	for e in events {
		let ( u, v, w ) = e.parts();
		let k = ( u.min( v ), u.max( v ) );
		let entry = best.entry( k ).or_insert( w );
		*entry = ( *entry ).min( w );
	}
	let edges : Vec<( usize, usize, u64 )> = {
		let mut v : Vec<_> = best.into_iter().map( |( ( a, b ), w )| ( a, b, w ) ).collect();
		v.sort(); // deterministic input order
		v
	};
	kruskal( num_nodes, &edges )
}


/// An incremental MSF input: number of nodes plus the event stream.
#[derive(Clone, Debug)]
pub struct MsfInput {
	/// Number of nodes.
	pub num_nodes : usize,
	/// The events, in order.
	pub events : Vec<EdgeEvent>
}

/// Errors while reading a collaboration file.
#[derive(Debug, PartialEq, Eq)]
pub enum CollabError {
	/// A row that does not consist of two names and a year, or names a self-loop.
	Malformed {
		/// 1-based line number.
		line : usize
	},
	/// Rows must be sorted by year.
	UnsortedYear {
		/// 1-based line number.
		line : usize
	},
	/// Underlying read error.
	Io( String )
}

impl std::fmt::Display for CollabError {
	fn fmt( &self, f : &mut std::fmt::Formatter<'_> ) -> std::fmt::Result {
		match self {
			CollabError::Malformed { line } => write!( f, "malformed row in line {line}" ),
			CollabError::UnsortedYear { line } => write!( f, "rows not sorted by year (line {line})" ),
			CollabError::Io( e ) => write!( f, "read error: {e}" )
		}
	}
}

impl std::error::Error for CollabError {}

/// Reads whitespace-separated `author_a author_b year` rows (sorted by year) and turns
/// them into an MSF event stream. The first collaboration of a pair inserts an edge of
/// weight `W_MAX - 1`; the k-th drops it to `W_MAX - k`.
pub fn ingest_collab( reader : impl BufRead ) -> Result<MsfInput, CollabError> {
	let mut ids : HashMap<String, usize> = HashMap::new();
	let mut counts : HashMap<( usize, usize ), u64> = HashMap::new();
	let mut events = Vec::new();
	let mut prev_year = i64::MIN;
	for ( line_no, line ) in reader.lines().enumerate() {
		let line = line.map_err( |e| CollabError::Io( e.to_string() ) )?;
		let line_no = line_no + 1;
		if line.trim().is_empty() {
			continue;
		}
		let mut fields = line.split_whitespace();
		let ( a, b, year ) = match ( fields.next(), fields.next(), fields.next(), fields.next() ) {
			( Some( a ), Some( b ), Some( y ), None ) => {
				let year : i64 = y.parse().map_err( |_| CollabError::Malformed { line : line_no } )?;
				( a, b, year )
			}
			_ => return Err( CollabError::Malformed { line : line_no } )
		};
		if a == b {
			return Err( CollabError::Malformed { line : line_no } );
		}
		if year < prev_year {
			return Err( CollabError::UnsortedYear { line : line_no } );
		}
		prev_year = year;
		let next_id = ids.len();
		let ia = *ids.entry( a.to_string() ).or_insert( next_id );
		let next_id = ids.len();
		let ib = *ids.entry( b.to_string() ).or_insert( next_id );
		let k = ( ia.min( ib ), ia.max( ib ) );
		let count = counts.entry( k ).or_insert( 0 );
		*count += 1;
		let weight = W_MAX - *count;
		events.push( if *count == 1 {
			EdgeEvent::Insert { u : ia, v : ib, weight }
		}
		else {
			EdgeEvent::Decrease { u : ia, v : ib, weight }
		} );
	}
	Ok( MsfInput { num_nodes : ids.len(), events } )
}

/// A synthetic collaboration-like input for tests: random pairs with repetitions, years
/// non-decreasing. Runs through the same encoding as [ingest_collab].
pub fn synthetic_collab( num_nodes : usize, num_rows : usize, seed : u64 ) -> MsfInput {
	debug_assert!( num_nodes >= 2 );
	let mut rng = SplitMix64::new( seed );
	let mut rows = String::new();
	let mut year = 1990;
	for _ in 0..num_rows {
		let ( a, b ) = rng.next_distinct_pair( num_nodes );
		year += ( rng.next_below( 3 ) == 0 ) as i64;
		rows.push_str( &format!( "a{a} a{b} {year}\n" ) );
	}
	ingest_collab( rows.as_bytes() ).expect( "synthetic input must parse" )
}

/// A plain random insert-only stream with the given number of edges; weights are uniform
/// below 2^20.
pub fn random_insertions( num_nodes : usize, num_edges : usize, seed : u64 ) -> MsfInput {
	debug_assert!( num_nodes >= 2 );
	let mut rng = SplitMix64::new( seed );
	let events = (0..num_edges).map( |_| {
		let ( u, v ) = rng.next_distinct_pair( num_nodes );
		EdgeEvent::Insert { u, v, weight : rng.next_below( 1 << 20 ) }
	} ).collect();
	MsfInput { num_nodes, events }
}

/// Replays a whole input on the given forest implementation and returns the final state.
pub fn replay<TForest : DynamicForest<TWeight = MaxEdgeWeight<u64>>>(
	input : &MsfInput ) -> IncrementalMsf<TForest>
{
	let mut msf = IncrementalMsf::new( input.num_nodes );
	for &e in &input.events {
		msf.apply( e );
	}
	msf
}

#[cfg(test)]
mod tests {
	use super::*;
	use crate::twocut::node_data::MonoidPathData;
	use crate::twocut::splaytt::StableGreedySplayForest;
	use crate::U64MaxEdgeWeight;

	type MsfForest = StableGreedySplayForest<MonoidPathData<U64MaxEdgeWeight>>;

	#[test]
	fn triangle_replacement() {
		let mut msf : IncrementalMsf<MsfForest> = IncrementalMsf::new( 3 );
		msf.insert( NodeIdx::new( 0 ), NodeIdx::new( 1 ), 1 );
		msf.insert( NodeIdx::new( 1 ), NodeIdx::new( 2 ), 2 );
		msf.insert( NodeIdx::new( 0 ), NodeIdx::new( 2 ), 3 );
		assert_eq!( msf.total_weight(), 3 );
		assert_eq!( msf.num_edges(), 2 );
		// A lighter parallel edge replaces the heaviest path edge.
		msf.insert( NodeIdx::new( 0 ), NodeIdx::new( 2 ), 1 );
		assert_eq!( msf.total_weight(), 2 );
	}

	#[test]
	fn kruskal_triangle() {
		assert_eq!( kruskal( 3, &[( 0, 1, 1 ), ( 1, 2, 2 ), ( 0, 2, 3 )] ), ( 3, 2 ) );
		assert_eq!( kruskal( 3, &[] ), ( 0, 0 ) );
	}

	#[test]
	fn random_stream_matches_kruskal() {
		for seed in 0..5 {
			let input = random_insertions( 64, 256, seed );
			let msf = replay::<MsfForest>( &input );
			let all : Vec<_> = input.events.iter().map( |e| e.parts() ).collect();
			let ( expected_total, expected_count ) = kruskal( input.num_nodes, &all );
			assert_eq!( msf.total_weight(), expected_total, "seed {seed}" );
			assert_eq!( msf.num_edges(), expected_count, "seed {seed}" );
		}
	}

	#[test]
	fn prefix_totals_match_kruskal() {
		// After any prefix of events, the maintained total equals offline Kruskal on the
		// best weight seen per pair.
		let input = synthetic_collab( 40, 300, 7 );
		let mut msf : IncrementalMsf<MsfForest> = IncrementalMsf::new( input.num_nodes );
		for ( i, &e ) in input.events.iter().enumerate() {
			msf.apply( e );
			if i % 37 == 0 || i + 1 == input.events.len() {
				let ( expected, _ ) = kruskal_of_events( input.num_nodes, &input.events[..=i] );
				assert_eq!( msf.total_weight(), expected, "prefix {i}" );
			}
		}
	}

	/// Edges of the `u`-`v` path in the given adjacency lists, or `None` if disconnected.
	fn bfs_path( adj : &[Vec<( usize, u64 )>], u : usize, v : usize ) -> Option<Vec<( usize, usize, u64 )>> {
		let mut pred : Vec<Option<( usize, u64 )>> = vec![None; adj.len()];
		pred[u] = Some( ( u, 0 ) );
		let mut queue = vec![u];
		let mut head = 0;
		while head < queue.len() {
			let x = queue[head];
			head += 1;
			for &( y, w ) in &adj[x] {
				if pred[y].is_none() {
					pred[y] = Some( ( x, w ) );
					queue.push( y );
				}
			}
		}
		pred[v]?;
		let mut path = Vec::new();
		let mut x = v;
		while x != u {
			let ( p, w ) = pred[x].unwrap();
			path.push( ( p.min( x ), p.max( x ), w ) );
			x = p;
		}
		Some( path )
	}

	#[test]
	fn replacement_cuts_a_heaviest_path_edge() {
		// Whenever an insertion evicts an edge, that edge must lie on the path between
		// the new endpoints and carry its maximum weight; checked on a shadow copy of
		// the current MSF.
		let input = random_insertions( 32, 300, 99 );
		let mut msf : IncrementalMsf<MsfForest> = IncrementalMsf::new( input.num_nodes );
		let mut adj : Vec<Vec<( usize, u64 )>> = vec![Vec::new(); input.num_nodes];
		for &e in &input.events {
			let ( u, v, w ) = e.parts();
			let before : std::collections::BTreeMap<( usize, usize ), u64> =
				msf.edges().map( |( a, b, ew )| ( ( a, b ), ew ) ).collect();
			let path = bfs_path( &adj, u, v );
			msf.insert( NodeIdx::new( u ), NodeIdx::new( v ), w );
			let after : std::collections::BTreeMap<( usize, usize ), u64> =
				msf.edges().map( |( a, b, ew )| ( ( a, b ), ew ) ).collect();
			let evicted : Vec<_> = before.iter()
				.filter( |( k, _ )| !after.contains_key( k ) ).collect();
			assert!( evicted.len() <= 1 );
			if let Some( &( &( a, b ), &ew ) ) = evicted.first() {
				let path = path.expect( "eviction implies the endpoints were connected" );
				let max_weight = path.iter().map( |&( _, _, pw )| pw ).max().unwrap();
				assert_eq!( ew, max_weight, "evicted edge must carry the path maximum" );
				assert!( path.iter().any( |&( x, y, _ )| ( x, y ) == ( a, b ) ),
					"evicted edge must lie on the path" );
				assert!( max_weight > w );
			}
			// Mirror the new state.
			for list in &mut adj {
				list.clear();
			}
			for ( &( a, b ), &ew ) in &after {
				adj[a].push( ( b, ew ) );
				adj[b].push( ( a, ew ) );
			}
		}
	}

	#[test]
	fn collab_roundtrip() {
		let rows = "alice bob 2000\nalice bob 2001\nbob carol 2001\n";
		let input = ingest_collab( rows.as_bytes() ).unwrap();
		assert_eq!( input.num_nodes, 3 );
		assert_eq!( input.events, vec![
			EdgeEvent::Insert { u : 0, v : 1, weight : W_MAX - 1 },
			EdgeEvent::Decrease { u : 0, v : 1, weight : W_MAX - 2 },
			EdgeEvent::Insert { u : 1, v : 2, weight : W_MAX - 1 },
		] );
	}

	#[test]
	fn collab_rejects_bad_rows() {
		assert_eq!( ingest_collab( "alice bob\n".as_bytes() ).unwrap_err(),
			CollabError::Malformed { line : 1 } );
		assert_eq!( ingest_collab( "alice bob 2001\nbob carol 2000\n".as_bytes() ).unwrap_err(),
			CollabError::UnsortedYear { line : 2 } );
		assert_eq!( ingest_collab( "alice alice 2001\n".as_bytes() ).unwrap_err(),
			CollabError::Malformed { line : 1 } );
		assert_eq!( ingest_collab( "alice bob twothousand\n".as_bytes() ).unwrap_err(),
			CollabError::Malformed { line : 1 } );
	}

	#[test]
	fn collab_replay_matches_kruskal() {
		let input = synthetic_collab( 50, 400, 3 );
		let msf = replay::<MsfForest>( &input );
		let ( expected, _ ) = kruskal_of_events( input.num_nodes, &input.events );
		assert_eq!( msf.total_weight(), expected );
	}

	#[test]
	fn decrease_pulls_edge_into_msf() {
		let mut msf : IncrementalMsf<MsfForest> = IncrementalMsf::new( 3 );
		msf.insert( NodeIdx::new( 0 ), NodeIdx::new( 1 ), 5 );
		msf.insert( NodeIdx::new( 1 ), NodeIdx::new( 2 ), 6 );
		msf.insert( NodeIdx::new( 0 ), NodeIdx::new( 2 ), 9 ); // stays out
		assert_eq!( msf.total_weight(), 11 );
		msf.decrease( NodeIdx::new( 0 ), NodeIdx::new( 2 ), 4 ); // now beats {1,2}
		assert_eq!( msf.total_weight(), 9 );
		// Decreasing an MSF edge just lowers the total.
		msf.decrease( NodeIdx::new( 0 ), NodeIdx::new( 1 ), 2 );
		assert_eq!( msf.total_weight(), 6 );
	}
}
