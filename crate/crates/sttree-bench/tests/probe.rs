//! Temporary measurement probe; numbers feed acceptance thresholds.

use sttree_bench::run::{execute_unrooted, WeightMode};
use sttree_bench::script::{gen_lca, gen_urc, gen_degenerate, RootedQuery};

#[test]
#[ignore]
fn probe_lca_mix() {
	for ( with_evert, seed ) in [( false, 0u64 ), ( false, 1 ), ( true, 0 ), ( true, 1 )] {
		let n = 10_000;
		let s = gen_lca( n, 10 * n, with_evert, seed );
		let mut link = 0;
		let mut cut = 0;
		let mut lca = 0;
		let mut evert = 0;
		for q in &s.queries {
			match q {
				RootedQuery::Link( .. ) => link += 1,
				RootedQuery::Cut( .. ) => cut += 1,
				RootedQuery::Lca( .. ) => lca += 1,
				RootedQuery::Evert( .. ) => evert += 1
			}
		}
		let total = s.queries.len() as f64 / 100.0;
		println!( "evert={with_evert} seed={seed}: link {:.2}% cut {:.2}% lca {:.2}% evert {:.2}%",
			link as f64 / total, cut as f64 / total, lca as f64 / total, evert as f64 / total );
	}
}

#[test]
#[ignore]
fn probe_rotation_growth() {
	for name in ["greedy_splay", "stable_greedy_splay", "two_pass_splay", "stable_two_pass_splay",
		"l2p_splay", "stable_l2p_splay", "mtr", "stable_mtr"] {
		let mut line = format!( "{name}:" );
		for n in [1000usize, 2000, 4000, 8000] {
			let m = 20 * n;
			let script = gen_urc( n, m, 0.5, 77 );
			let ( _, rotations, _ ) = execute_unrooted( name, WeightMode::Unit, &script ).unwrap();
			let per_op = rotations as f64 / m as f64;
			let normalized = per_op / ( n as f64 ).log2();
			line.push_str( &format!( "  n={n}: {per_op:.3} rot/op, /log2n = {normalized:.4}" ) );
		}
		println!( "{line}" );
	}
}

#[test]
#[ignore]
fn probe_degenerate_ratios() {
	let n = 10_000;
	let script = gen_degenerate( n );
	let mut results = Vec::new();
	for name in ["greedy_splay", "stable_greedy_splay", "two_pass_splay", "stable_two_pass_splay",
		"l2p_splay", "stable_l2p_splay", "mtr", "stable_mtr", "one_cut"] {
		let ( _, rotations, t ) = execute_unrooted( name, WeightMode::Unit, &script ).unwrap();
		println!( "{name}: {rotations} rotations, {:?}", t );
		results.push( ( name, rotations ) );
	}
}

#[test]
#[ignore]
fn probe_per_query_rotations() {
	use sttree::{DynamicForest, NodeIdx, EmptyWeight};
	use sttree::twocut::node_data::EmptyNodeData;
	use sttree::twocut::splaytt::StableGreedySplayForest;

	let n = 1000;
	let mut f : StableGreedySplayForest<EmptyNodeData> = StableGreedySplayForest::new( n );
	for i in 0..n - 1 {
		f.link( NodeIdx::new( i ), NodeIdx::new( i + 1 ), EmptyWeight );
	}
	let mut last = f.num_rotations();
	let mut counts = Vec::new();
	for i in 0..n {
		f.compute_path_weight( NodeIdx::new( i ), NodeIdx::new( n - 1 ) );
		let now = f.num_rotations();
		counts.push( now - last );
		last = now;
	}
	println!( "first 30 queries: {:?}", &counts[..30] );
	println!( "queries 100..130: {:?}", &counts[100..130] );
	println!( "total: {}", counts.iter().sum::<u64>() );
}

#[test]
#[ignore]
fn probe_pure_sequential_splay() {
	use sttree::NodeIdx;
	use sttree::twocut::NodeToRootStrategy;
	use sttree::twocut::basic::SttForest;
	use sttree::twocut::node_data::EmptyNodeData;
	use sttree::twocut::splaytt::GreedySplay;

	let n = 1000;
	let parents : Vec<Option<usize>> = (0..n).map( |i| if i + 1 < n { Some( i + 1 ) } else { None } ).collect();
	let edges : Vec<( usize, usize )> = (0..n - 1).map( |i| ( i, i + 1 ) ).collect();
	let mut f : SttForest<EmptyNodeData> = SttForest::from_structure( &parents, &edges );
	let mut last = 0;
	let mut counts = Vec::new();
	for i in 0..n {
		GreedySplay::node_to_root( &mut f, NodeIdx::new( i ) );
		let now = f.num_rotations();
		counts.push( now - last );
		last = now;
	}
	println!( "pure sequential first 30: {:?}", &counts[..30] );
	println!( "pure sequential total: {}", counts.iter().sum::<u64>() );
}
