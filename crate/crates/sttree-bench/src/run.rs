//! Executing scripts on the implementation catalog: result checksums, timing, and the
//! oracle cross-check.
//!
//! Every query result is folded into a single checksum; two implementations executed on
//! the same script must produce identical checksums, with the adjacency-list forest
//! defining the ground truth. Timing covers the query loop only (construction and script
//! generation are excluded), one warm-up run is discarded, and the reported value is the
//! median over the remaining repeats.

use std::time::{Duration, Instant};

use sttree::{DynamicForest, EmptyWeight, I64SumWeight, MonoidWeight, NodeIdx, SumWeight,
	U64MaxEdgeWeight};
use sttree::link_cut::{EmptyLinkCutForest, GroupLinkCutForest, MonoidLinkCutForest,
	RootedLinkCutForest, RootedLinkCutForestWithEvert};
use sttree::msf::{IncrementalMsf, kruskal_of_events, MsfInput};
use sttree::naive::NaiveForest;
use sttree::onecut::OneCutForest;
use sttree::rooted::{RootedDynamicForest, SimpleRootedForest};
use sttree::twocut::mtrtt::{MoveToRootForest, StableMoveToRootForest};
use sttree::twocut::node_data::{EmptyNodeData, GroupPathData, MonoidPathData};
use sttree::twocut::rooted::{RootedGreedySplayForest, RootedLocalTwoPassSplayForest,
	RootedMoveToRootForest, RootedTwoPassSplayForest};
use sttree::twocut::splaytt::{GreedySplayForest, LocalTwoPassSplayForest,
	StableGreedySplayForest, StableLocalTwoPassSplayForest, StableTwoPassSplayForest,
	TwoPassSplayForest};

use crate::script::{Query, QueryScript, RootedQuery, RootedScript};

/// All unrooted implementations, in the order they are reported.
pub const UNROOTED_IMPLS : &[&str] = &[
	"greedy_splay", "stable_greedy_splay",
	"two_pass_splay", "stable_two_pass_splay",
	"l2p_splay", "stable_l2p_splay",
	"mtr", "stable_mtr",
	"link_cut", "one_cut", "naive"
];

/// All rooted implementations.
pub const ROOTED_IMPLS : &[&str] = &[
	"greedy_splay", "two_pass_splay", "l2p_splay", "mtr", "link_cut", "simple"
];

/// Implementations runnable in the incremental MSF experiment; `kruskal` is the offline
/// comparator.
pub const MSF_IMPLS : &[&str] = &[
	"greedy_splay", "stable_greedy_splay",
	"two_pass_splay", "stable_two_pass_splay",
	"l2p_splay", "stable_l2p_splay",
	"mtr", "stable_mtr",
	"link_cut", "one_cut", "kruskal"
];

/// How link weights of a script are interpreted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightMode {
	/// No weights; path queries answer connectivity only.
	Unit,
	/// Signed sums, maintained with the subtraction-based annotations.
	GroupSum,
	/// Signed sums, maintained with the monoid annotations (no subtraction).
	MonoidSum
}

impl WeightMode {
	/// Parses a mode name.
	pub fn parse( s : &str ) -> Option<WeightMode> {
		match s {
			"unit" => Some( WeightMode::Unit ),
			"group" => Some( WeightMode::GroupSum ),
			"monoid" => Some( WeightMode::MonoidSum ),
			_ => None
		}
	}
}

/// Script weights mapped into an implementation's weight type, and back into checksum
/// contributions.
pub trait ScriptWeight : MonoidWeight {
	/// The weight for a script link operation.
	fn from_script( w : u64 ) -> Self;

	/// A stable encoding of a query result for checksumming.
	fn checksum_value( &self ) -> u64;
}

impl ScriptWeight for EmptyWeight {
	fn from_script( _ : u64 ) -> Self {
		EmptyWeight
	}

	fn checksum_value( &self ) -> u64 {
		1
	}
}

impl ScriptWeight for I64SumWeight {
	fn from_script( w : u64 ) -> Self {
		SumWeight( w as i64 )
	}

	fn checksum_value( &self ) -> u64 {
		self.0 as u64
	}
}

/// Initial checksum value (FNV-1a offset basis).
pub const CHECKSUM_SEED : u64 = 0xCBF2_9CE4_8422_2325;

/// Folds one value into a checksum (FNV-1a step).
#[inline]
pub fn fold_checksum( acc : u64, value : u64 ) -> u64 {
	( acc ^ value ).wrapping_mul( 0x0000_0100_0000_01B3 )
}

fn fold_path_result<TWeight : ScriptWeight>( acc : u64, result : Option<TWeight> ) -> u64 {
	match result {
		Some( w ) => fold_checksum( fold_checksum( acc, 1 ), w.checksum_value() ),
		None => fold_checksum( acc, 0 )
	}
}

/// Replays an unrooted script; returns the result checksum, the number of restructuring
/// steps, and the time spent in the query loop.
pub fn execute_unrooted_on<TForest>( script : &QueryScript ) -> ( u64, u64, Duration )
where
	TForest : DynamicForest,
	TForest::TWeight : ScriptWeight
{
	let mut f = TForest::new( script.num_nodes );
	let start = Instant::now();
	let mut checksum = CHECKSUM_SEED;
	for q in &script.queries {
		match *q {
			Query::Link( u, v, w ) => f.link( u, v, TForest::TWeight::from_script( w ) ),
			Query::Cut( u, v ) => f.cut( u, v ),
			Query::PathWeight( u, v ) =>
				checksum = fold_path_result( checksum, f.compute_path_weight( u, v ) )
		}
	}
	( checksum, f.num_rotations(), start.elapsed() )
}

/// Replays a rooted script, folding every query answer (and a final root sweep over all
/// nodes) into the checksum.
pub fn execute_rooted_on<TForest : RootedDynamicForest>( script : &RootedScript ) -> ( u64, u64, Duration ) {
	let mut f = TForest::new( script.num_nodes );
	let start = Instant::now();
	let mut checksum = CHECKSUM_SEED;
	for q in &script.queries {
		match *q {
			RootedQuery::Link( u, v ) => f.link( u, v ),
			RootedQuery::Cut( v ) => f.cut( v ),
			RootedQuery::Lca( u, v ) => {
				let r = f.lca( u, v );
				checksum = fold_checksum( checksum, r.map_or( 0, |x| x.index() as u64 + 1 ) );
			}
			RootedQuery::Evert( v ) => f.evert( v )
		}
	}
	for v in 0..script.num_nodes {
		let r = f.find_root( NodeIdx::new( v ) );
		checksum = fold_checksum( checksum, r.index() as u64 + 1 );
	}
	( checksum, f.num_rotations(), start.elapsed() )
}

/// Executes an unrooted script on the named implementation.
pub fn execute_unrooted( impl_name : &str, mode : WeightMode, script : &QueryScript )
	-> Result<( u64, u64, Duration ), String>
{
	macro_rules! dispatch {
		( $data:ty, $lct:ty, $plain:ty ) => {
			match impl_name {
				"greedy_splay" => Ok( execute_unrooted_on::<GreedySplayForest<$data>>( script ) ),
				"stable_greedy_splay" => Ok( execute_unrooted_on::<StableGreedySplayForest<$data>>( script ) ),
				"two_pass_splay" => Ok( execute_unrooted_on::<TwoPassSplayForest<$data>>( script ) ),
				"stable_two_pass_splay" => Ok( execute_unrooted_on::<StableTwoPassSplayForest<$data>>( script ) ),
				"l2p_splay" => Ok( execute_unrooted_on::<LocalTwoPassSplayForest<$data>>( script ) ),
				"stable_l2p_splay" => Ok( execute_unrooted_on::<StableLocalTwoPassSplayForest<$data>>( script ) ),
				"mtr" => Ok( execute_unrooted_on::<MoveToRootForest<$data>>( script ) ),
				"stable_mtr" => Ok( execute_unrooted_on::<StableMoveToRootForest<$data>>( script ) ),
				"link_cut" => Ok( execute_unrooted_on::<$lct>( script ) ),
				"one_cut" => Ok( execute_unrooted_on::<OneCutForest<$plain>>( script ) ),
				"naive" => Ok( execute_unrooted_on::<NaiveForest<$plain>>( script ) ),
				_ => Err( format!( "unknown implementation: {impl_name}" ) )
			}
		};
	}
	match mode {
		WeightMode::Unit =>
			dispatch!( EmptyNodeData, EmptyLinkCutForest, EmptyWeight ),
		WeightMode::GroupSum =>
			dispatch!( GroupPathData<I64SumWeight>, GroupLinkCutForest<I64SumWeight>, I64SumWeight ),
		WeightMode::MonoidSum =>
			dispatch!( MonoidPathData<I64SumWeight>, MonoidLinkCutForest<I64SumWeight>, I64SumWeight )
	}
}

/// Executes a rooted script on the named implementation. The link-cut variant matches
/// the script: the reverse bit is only enabled when the script everts.
pub fn execute_rooted( impl_name : &str, script : &RootedScript )
	-> Result<( u64, u64, Duration ), String>
{
	match impl_name {
		"greedy_splay" => Ok( execute_rooted_on::<RootedGreedySplayForest>( script ) ),
		"two_pass_splay" => Ok( execute_rooted_on::<RootedTwoPassSplayForest>( script ) ),
		"l2p_splay" => Ok( execute_rooted_on::<RootedLocalTwoPassSplayForest>( script ) ),
		"mtr" => Ok( execute_rooted_on::<RootedMoveToRootForest>( script ) ),
		"link_cut" => Ok( if script.with_evert {
			execute_rooted_on::<RootedLinkCutForestWithEvert>( script )
		}
		else {
			execute_rooted_on::<RootedLinkCutForest>( script )
		} ),
		"simple" => Ok( execute_rooted_on::<SimpleRootedForest>( script ) ),
		_ => Err( format!( "unknown implementation: {impl_name}" ) )
	}
}

/// One benchmark result row.
#[derive(Clone, Debug)]
pub struct RunReport {
	/// Implementation name.
	pub impl_name : String,
	/// Workload identifier.
	pub workload : String,
	/// Number of nodes.
	pub n : usize,
	/// Number of operations.
	pub m : usize,
	/// Median microseconds per query over the timed repeats.
	pub us_per_query : f64,
	/// Restructuring steps of the last repeat.
	pub rotations : u64,
	/// Result checksum (identical across implementations on the same script).
	pub checksum : u64
}

impl RunReport {
	/// The TSV header matching [RunReport::tsv_row].
	pub fn tsv_header() -> &'static str {
		"impl\tworkload\tn\tm\tus_per_query\trotations\tchecksum"
	}

	/// One TSV row.
	pub fn tsv_row( &self ) -> String {
		format!( "{}\t{}\t{}\t{}\t{:.4}\t{}\t{:016x}",
			self.impl_name, self.workload, self.n, self.m,
			self.us_per_query, self.rotations, self.checksum )
	}
}

fn median_us_per_query( mut times : Vec<Duration>, num_queries : usize ) -> f64 {
	times.sort();
	let mid = times[times.len() / 2];
	mid.as_secs_f64() * 1e6 / num_queries.max( 1 ) as f64
}

/// Runs an unrooted script `repeats` times (plus one discarded warm-up) and reports the
/// median time per query.
pub fn run_unrooted( impl_name : &str, mode : WeightMode, script : &QueryScript,
	repeats : usize, workload : &str ) -> Result<RunReport, String>
{
	let ( checksum, _, _ ) = execute_unrooted( impl_name, mode, script )?; // warm-up
	let mut times = Vec::with_capacity( repeats );
	let mut rotations = 0;
	for _ in 0..repeats.max( 1 ) {
		let ( c, r, t ) = execute_unrooted( impl_name, mode, script )?;
		debug_assert!( c == checksum );
		rotations = r;
		times.push( t );
	}
	Ok( RunReport {
		impl_name : impl_name.to_string(),
		workload : workload.to_string(),
		n : script.num_nodes,
		m : script.queries.len(),
		us_per_query : median_us_per_query( times, script.queries.len() ),
		rotations,
		checksum
	} )
}

/// Rooted counterpart of [run_unrooted].
pub fn run_rooted( impl_name : &str, script : &RootedScript,
	repeats : usize, workload : &str ) -> Result<RunReport, String>
{
	let ( checksum, _, _ ) = execute_rooted( impl_name, script )?; // warm-up
	let mut times = Vec::with_capacity( repeats );
	let mut rotations = 0;
	for _ in 0..repeats.max( 1 ) {
		let ( c, r, t ) = execute_rooted( impl_name, script )?;
		debug_assert!( c == checksum );
		rotations = r;
		times.push( t );
	}
	Ok( RunReport {
		impl_name : impl_name.to_string(),
		workload : workload.to_string(),
		n : script.num_nodes,
		m : script.queries.len(),
		us_per_query : median_us_per_query( times, script.queries.len() ),
		rotations,
		checksum
	} )
}

/// Cross-checks one uniformly random connectivity script: every implementation must
/// reproduce the adjacency-list oracle's checksum, under all three weight modes.
pub fn verify_urc( num_nodes : usize, num_queries : usize, seed : u64, p_path : f64 )
	-> Result<(), String>
{
	let script = crate::script::gen_urc( num_nodes, num_queries, p_path, seed );
	for mode in [WeightMode::GroupSum, WeightMode::MonoidSum, WeightMode::Unit] {
		let ( oracle, _, _ ) = execute_unrooted( "naive", mode, &script )?;
		for &name in UNROOTED_IMPLS {
			let ( checksum, _, _ ) = execute_unrooted( name, mode, &script )?;
			if checksum != oracle {
				return Err( format!(
					"{name} ({mode:?}) produced checksum {checksum:016x}, oracle has {oracle:016x} (n={num_nodes}, m={num_queries}, seed={seed})" ) );
			}
		}
	}
	Ok( () )
}


/// One MSF benchmark row.
#[derive(Clone, Debug)]
pub struct MsfReport {
	/// Implementation name.
	pub impl_name : String,
	/// Number of nodes.
	pub n : usize,
	/// Number of events.
	pub m : usize,
	/// Microseconds per event.
	pub us_per_edge : f64,
	/// Final MSF weight.
	pub total_weight : u64
}

impl MsfReport {
	/// The TSV header matching [MsfReport::tsv_row].
	pub fn tsv_header() -> &'static str {
		"impl\tn\tm\tus_per_edge\ttotal_weight"
	}

	/// One TSV row.
	pub fn tsv_row( &self ) -> String {
		format!( "{}\t{}\t{}\t{:.4}\t{}",
			self.impl_name, self.n, self.m, self.us_per_edge, self.total_weight )
	}
}

fn run_msf_on<TForest : DynamicForest<TWeight = U64MaxEdgeWeight>>( input : &MsfInput )
	-> ( u64, Duration )
{
	let mut msf = IncrementalMsf::<TForest>::new( input.num_nodes );
	let start = Instant::now();
	for &e in &input.events {
		msf.apply( e );
	}
	( msf.total_weight(), start.elapsed() )
}

/// Runs the incremental MSF experiment on the named implementation.
pub fn run_msf( impl_name : &str, input : &MsfInput ) -> Result<MsfReport, String> {
	type MsfData = MonoidPathData<U64MaxEdgeWeight>;
	let ( total_weight, elapsed ) = match impl_name {
		"greedy_splay" => run_msf_on::<GreedySplayForest<MsfData>>( input ),
		"stable_greedy_splay" => run_msf_on::<StableGreedySplayForest<MsfData>>( input ),
		"two_pass_splay" => run_msf_on::<TwoPassSplayForest<MsfData>>( input ),
		"stable_two_pass_splay" => run_msf_on::<StableTwoPassSplayForest<MsfData>>( input ),
		"l2p_splay" => run_msf_on::<LocalTwoPassSplayForest<MsfData>>( input ),
		"stable_l2p_splay" => run_msf_on::<StableLocalTwoPassSplayForest<MsfData>>( input ),
		"mtr" => run_msf_on::<MoveToRootForest<MsfData>>( input ),
		"stable_mtr" => run_msf_on::<StableMoveToRootForest<MsfData>>( input ),
		"link_cut" => run_msf_on::<MonoidLinkCutForest<U64MaxEdgeWeight>>( input ),
		"one_cut" => run_msf_on::<OneCutForest<U64MaxEdgeWeight>>( input ),
		"kruskal" => {
			let start = Instant::now();
			let ( total, _ ) = kruskal_of_events( input.num_nodes, &input.events );
			( total, start.elapsed() )
		}
		_ => return Err( format!( "unknown implementation: {impl_name}" ) )
	};
	Ok( MsfReport {
		impl_name : impl_name.to_string(),
		n : input.num_nodes,
		m : input.events.len(),
		us_per_edge : elapsed.as_secs_f64() * 1e6 / input.events.len().max( 1 ) as f64,
		total_weight
	} )
}
