//! Command-line benchmark harness for the dynamic forest implementations.

use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use sttree_bench::run::{self, MsfReport, RunReport, WeightMode, MSF_IMPLS, ROOTED_IMPLS,
	UNROOTED_IMPLS};
use sttree_bench::script;

#[derive(Parser)]
#[command(name = "sttree-bench", about = "Benchmarks and verification for dynamic forest implementations", version)]
struct Cli {
	#[command(subcommand)]
	command : Command
}

#[derive(Subcommand)]
enum Command {
	/// Run a workload on one or all implementations and emit a TSV table.
	Bench {
		/// Workload: urc | degenerate | noisy_degenerate | lca
		workload : String,
		/// Implementation name, or "all".
		#[arg(long = "impl", default_value = "all")]
		implementation : String,
		/// Number of nodes.
		#[arg(long)]
		n : usize,
		/// Number of queries (defaults: 20n for urc, 10n for lca; ignored for the
		/// degenerate workloads).
		#[arg(long)]
		m : Option<usize>,
		/// Generator seed.
		#[arg(long, default_value_t = 0)]
		seed : u64,
		/// Probability of a path query instead of a cut (urc only).
		#[arg(long = "p-path", default_value_t = 0.5)]
		p_path : f64,
		/// Standard deviation of the query noise (noisy_degenerate only).
		#[arg(long, default_value_t = 0.0)]
		sigma : f64,
		/// Replace half of the cuts by everts (lca only).
		#[arg(long)]
		evert : bool,
		/// Timed repetitions per implementation (one extra warm-up run is discarded).
		#[arg(long, default_value_t = 10)]
		repeats : usize,
		/// Edge weight handling: unit | group | monoid (unrooted workloads only).
		#[arg(long, default_value = "unit")]
		weights : String,
		/// Write the table to a file instead of stdout.
		#[arg(long)]
		out : Option<PathBuf>
	},
	/// Run the incremental minimum-spanning-forest experiment.
	Msf {
		/// Collaboration file (`author_a author_b year` rows, sorted by year).
		#[arg(long, conflicts_with = "random")]
		input : Option<PathBuf>,
		/// Generate a random insertion stream instead of reading a file.
		#[arg(long)]
		random : bool,
		/// Number of nodes (random stream only).
		#[arg(long, default_value_t = 10_000)]
		n : usize,
		/// Number of edges (random stream only; default 8n).
		#[arg(long)]
		m : Option<usize>,
		/// Generator seed (random stream only).
		#[arg(long, default_value_t = 0)]
		seed : u64,
		/// Implementation name, or "all".
		#[arg(long = "impl", default_value = "all")]
		implementation : String,
		/// Write the table to a file instead of stdout.
		#[arg(long)]
		out : Option<PathBuf>
	},
	/// Cross-check all implementations against the adjacency-list oracle on random
	/// connectivity scripts; exits nonzero on any mismatch.
	Verify {
		/// Number of nodes.
		#[arg(long, default_value_t = 128)]
		n : usize,
		/// Number of queries per script.
		#[arg(long, default_value_t = 5000)]
		m : usize,
		/// First seed.
		#[arg(long, default_value_t = 0)]
		seed : u64,
		/// Number of consecutive seeds to check.
		#[arg(long, default_value_t = 1)]
		seeds : u64,
		/// Probability of a path query instead of a cut.
		#[arg(long = "p-path", default_value_t = 0.5)]
		p_path : f64
	}
}

fn open_out( path : &Option<PathBuf> ) -> io::Result<Box<dyn Write>> {
	Ok( match path {
		Some( p ) => Box::new( File::create( p )? ),
		None => Box::new( io::stdout() )
	} )
}

fn selected<'a>( implementation : &'a str, all : &'a [&'a str] ) -> Vec<&'a str> {
	if implementation == "all" {
		all.to_vec()
	}
	else {
		vec![implementation]
	}
}

fn bench( workload : &str, implementation : &str, n : usize, m : Option<usize>, seed : u64,
	p_path : f64, sigma : f64, evert : bool, repeats : usize, weights : &str,
	out : &Option<PathBuf> ) -> Result<(), String>
{
	let mode = WeightMode::parse( weights )
		.ok_or( format!( "unknown weight mode: {weights}" ) )?;
	let mut out = open_out( out ).map_err( |e| e.to_string() )?;
	let emit = |out : &mut Box<dyn Write>, r : &RunReport| {
		writeln!( out, "{}", r.tsv_row() ).map_err( |e| e.to_string() )
	};
	writeln!( out, "{}", RunReport::tsv_header() ).map_err( |e| e.to_string() )?;
	match workload {
		"urc" | "degenerate" | "noisy_degenerate" => {
			let script = match workload {
				"urc" => script::gen_urc( n, m.unwrap_or( 20 * n ), p_path, seed ),
				"degenerate" => script::gen_degenerate( n ),
				_ => script::gen_noisy_degenerate( n, sigma, seed )
			};
			for name in selected( implementation, UNROOTED_IMPLS ) {
				let report = run::run_unrooted( name, mode, &script, repeats, workload )?;
				emit( &mut out, &report )?;
			}
		}
		"lca" => {
			let script = script::gen_lca( n, m.unwrap_or( 10 * n ), evert, seed );
			let label = if evert { "lca_evert" } else { "lca" };
			for name in selected( implementation, ROOTED_IMPLS ) {
				let report = run::run_rooted( name, &script, repeats, label )?;
				emit( &mut out, &report )?;
			}
		}
		_ => return Err( format!( "unknown workload: {workload}" ) )
	}
	Ok( () )
}

fn msf( input : &Option<PathBuf>, random : bool, n : usize, m : Option<usize>, seed : u64,
	implementation : &str, out : &Option<PathBuf> ) -> Result<(), String>
{
	let input = match ( input, random ) {
		( Some( path ), _ ) => {
			let file = File::open( path ).map_err( |e| e.to_string() )?;
			sttree::msf::ingest_collab( BufReader::new( file ) ).map_err( |e| e.to_string() )?
		}
		( None, true ) => sttree::msf::random_insertions( n, m.unwrap_or( 8 * n ), seed ),
		( None, false ) => return Err( "msf needs either --input or --random".to_string() )
	};
	let mut out = open_out( out ).map_err( |e| e.to_string() )?;
	writeln!( out, "{}", MsfReport::tsv_header() ).map_err( |e| e.to_string() )?;
	for name in selected( implementation, MSF_IMPLS ) {
		let report = run::run_msf( name, &input )?;
		writeln!( out, "{}", report.tsv_row() ).map_err( |e| e.to_string() )?;
	}
	Ok( () )
}

fn verify( n : usize, m : usize, seed : u64, seeds : u64, p_path : f64 ) -> Result<(), String> {
	for s in seed..seed + seeds.max( 1 ) {
		run::verify_urc( n, m, s, p_path )?;
		println!( "seed {s}: all implementations match the oracle" );
	}
	Ok( () )
}

fn main() -> ExitCode {
	let cli = Cli::parse();
	let result = match &cli.command {
		Command::Bench { workload, implementation, n, m, seed, p_path, sigma, evert, repeats, weights, out } =>
			bench( workload, implementation, *n, *m, *seed, *p_path, *sigma, *evert, *repeats, weights, out ),
		Command::Msf { input, random, n, m, seed, implementation, out } =>
			msf( input, *random, *n, *m, *seed, implementation, out ),
		Command::Verify { n, m, seed, seeds, p_path } =>
			verify( *n, *m, *seed, *seeds, *p_path )
	};
	match result {
		Ok( () ) => ExitCode::SUCCESS,
		Err( e ) => {
			eprintln!( "error: {e}" );
			ExitCode::FAILURE
		}
	}
}
