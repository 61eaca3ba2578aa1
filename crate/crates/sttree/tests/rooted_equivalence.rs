//! Rooted-forest equivalence: search-tree and link-cut implementations against the
//! parent-pointer oracle, on random sequences of links, cuts, root queries, lowest
//! common ancestors, and (where supported) re-rootings.

use sttree::NodeIdx;
use sttree::link_cut::{RootedLinkCutForest, RootedLinkCutForestWithEvert};
use sttree::rng::SplitMix64;
use sttree::rooted::{RootedDynamicForest, SimpleRootedForest};
use sttree::twocut::rooted::{
	RootedGreedySplayForest, RootedLocalTwoPassSplayForest, RootedMoveToRootForest,
	RootedTwoPassSplayForest
};

#[derive(Clone, Copy, Debug)]
enum Op {
	Link( usize, usize ),
	Cut( usize ),
	FindRoot( usize ),
	Lca( usize, usize ),
	Evert( usize )
}

fn random_rooted_ops( num_nodes : usize, num_ops : usize, with_evert : bool, seed : u64 ) -> Vec<Op> {
	let mut rng = SplitMix64::new( seed );
	let mut shadow = SimpleRootedForest::new( num_nodes );
	let mut ops = Vec::new();
	for _ in 0..num_ops {
		let a = NodeIdx::new( rng.next_index( num_nodes ) );
		let b = NodeIdx::new( rng.next_index( num_nodes ) );
		let kind = rng.next_below( if with_evert { 5 } else { 4 } );
		match kind {
			0 => {
				let ra = shadow.root_of_no_restructure( a );
				if shadow.root_of_no_restructure( b ) != ra {
					ops.push( Op::Link( ra.index(), b.index() ) );
					shadow.link( ra, b );
				}
			}
			1 => {
				if shadow.get_parent( a ).is_some() {
					ops.push( Op::Cut( a.index() ) );
					shadow.cut( a );
				}
			}
			2 => ops.push( Op::FindRoot( a.index() ) ),
			3 => ops.push( Op::Lca( a.index(), b.index() ) ),
			_ => {
				ops.push( Op::Evert( a.index() ) );
				shadow.evert( a );
			}
		}
	}
	ops
}

fn run_rooted<TForest : RootedDynamicForest>( num_nodes : usize, ops : &[Op] ) -> Vec<Option<usize>> {
	let mut f = TForest::new( num_nodes );
	let mut results = Vec::new();
	for &op in ops {
		match op {
			Op::Link( u, v ) => f.link( NodeIdx::new( u ), NodeIdx::new( v ) ),
			Op::Cut( v ) => f.cut( NodeIdx::new( v ) ),
			Op::FindRoot( v ) => results.push( Some( f.find_root( NodeIdx::new( v ) ).index() ) ),
			Op::Lca( u, v ) =>
				results.push( f.lca( NodeIdx::new( u ), NodeIdx::new( v ) ).map( |x| x.index() ) ),
			Op::Evert( v ) => f.evert( NodeIdx::new( v ) )
		}
	}
	results
}

fn check_rooted_impls( num_nodes : usize, ops : &[Op], with_evert : bool, context : &str ) {
	let expected = run_rooted::<SimpleRootedForest>( num_nodes, ops );
	macro_rules! check {
		( $name:literal, $forest:ty ) => {
			let got = run_rooted::<$forest>( num_nodes, ops );
			assert_eq!( got, expected, "{} disagrees with the oracle ({context})", $name );
		};
	}
	check!( "rooted greedy", RootedGreedySplayForest );
	check!( "rooted two-pass", RootedTwoPassSplayForest );
	check!( "rooted local two-pass", RootedLocalTwoPassSplayForest );
	check!( "rooted move-to-root", RootedMoveToRootForest );
	check!( "rooted link-cut (evert)", RootedLinkCutForestWithEvert );
	if !with_evert {
		check!( "rooted link-cut", RootedLinkCutForest );
	}
}

#[test]
fn randomized_rooted_equivalence() {
	for seed in 0..4 {
		let ops = random_rooted_ops( 96, 2500, false, seed );
		check_rooted_impls( 96, &ops, false, &format!( "seed {seed}" ) );
	}
}

#[test]
fn randomized_rooted_equivalence_with_evert() {
	for seed in 0..4 {
		let ops = random_rooted_ops( 96, 2500, true, 50 + seed );
		check_rooted_impls( 96, &ops, true, &format!( "evert seed {seed}" ) );
	}
}
