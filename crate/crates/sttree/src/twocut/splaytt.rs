//! Splay-based node-to-root strategies.
//!
//! The splay step carries over from binary search trees: a node, its parent, and its
//! grandparent always lie on a common underlying path, so ZIG-ZIG and ZIG-ZAG steps make
//! sense. Unlike in the BST case, a step is not always allowed; [can_splay_step] gives
//! the exact condition. The three strategies differ in how they avoid illegal steps:
//!
//! * [GreedySplay] tries the step at the node, then at its parent, then at its
//!   grandparent; one of the three is always allowed.
//! * [TwoPassSplay] first splays the *branching nodes* (separators directly above 1-cut
//!   nodes, the one configuration that blocks rotations) off the root path, after which
//!   plain splaying goes through unhindered.
//! * [LocalTwoPassSplay] interleaves both passes, handling the nearest branching node
//!   whenever the step at the target is blocked.
//!
//! All three take amortized O(log n) rotations per call.

use crate::NodeIdx;
use crate::twocut::{NodeToRootStrategy, RotationBudget, rotate_below_root_step,
	ExtendedDynamicForest, StableDynamicForest};
use crate::twocut::basic::SttForest;
use crate::twocut::node_data::NodeData;

/// Whether a splay step at `v` preserves the 2-cut property. `v` must have a parent.
///
/// True iff `v` is a child of the root, or the grandparent is not a separator, or both
/// `v` and its parent are separators.
pub fn can_splay_step<TData : NodeData>( f : &SttForest<TData>, v : NodeIdx ) -> bool {
	let p = f.get_parent( v ).expect( "can_splay_step: v is a root" );
	can_splay_step_hint( f, v, p )
}

/// Like [can_splay_step] with the parent already known.
pub fn can_splay_step_hint<TData : NodeData>( f : &SttForest<TData>, v : NodeIdx, p : NodeIdx ) -> bool {
	match f.get_parent( p ) {
		None => true,
		Some( g ) => !f.is_separator( g )
			|| ( f.is_separator_hint( v, p ) && f.is_separator_hint( p, g ) )
	}
}

/// One splay step at `v`: a single rotation if `v`'s parent is the root (ZIG), two
/// rotations at `v` if `v` lies between its parent and grandparent on the underlying
/// path -- i.e. iff `v` is a *direct* separator (ZIG-ZAG) -- and otherwise a rotation at
/// the parent followed by one at `v` (ZIG-ZIG). Requires [can_splay_step].
///
/// An indirect separator has its parent and grandparent on the same side, so it takes
/// the ZIG-ZIG branch; treating it like a ZIG-ZAG would still be legal, but loses the
/// path-halving that the amortized bound rests on.
pub fn splay_step<TData : NodeData>( f : &mut SttForest<TData>, v : NodeIdx ) {
	let p = f.get_parent( v ).expect( "splay_step: v is a root" );
	debug_assert!( can_splay_step_hint( f, v, p ), "illegal splay step at {v}" );
	if f.get_parent( p ).is_none() {
		f.rotate( v );
	}
	else if f.is_direct_separator_hint( v, p ) {
		f.rotate( v );
		f.rotate( v );
	}
	else {
		f.rotate( p );
		f.rotate( v );
	}
	f.count_splay_step();
}

/// Splays `x` upward until `y` is its parent. `y` must be a proper ancestor of `x`.
pub fn splay_to<TData : NodeData>( f : &mut SttForest<TData>, x : NodeIdx, y : NodeIdx ) {
	#[cfg(debug_assertions)]
	{
		let mut z = x;
		loop {
			match f.get_parent( z ) {
				Some( p ) if p == y => break,
				Some( p ) => z = p,
				None => panic!( "splay_to: {y} is not a proper ancestor of {x}" )
			}
		}
	}
	let budget = RotationBudget::new( f );
	loop {
		budget.check( f );
		let p = f.get_parent( x ).unwrap();
		if p == y {
			return;
		}
		let g = f.get_parent( p ).unwrap();
		if g == y {
			// One final rotation makes x a child of y.
			f.rotate( x );
			return;
		}
		splay_step( f, x );
	}
}


/// Splay steps at the node, its parent, or its grandparent, whichever is allowed first.
#[derive(Clone)]
pub struct GreedySplay;

impl NodeToRootStrategy for GreedySplay {
	fn node_to_root<TData : NodeData>( f : &mut SttForest<TData>, v : NodeIdx ) {
		let budget = RotationBudget::new( f );
		while let Some( p ) = f.get_parent( v ) {
			budget.check( f );
			if let Some( g ) = f.get_parent( p ) {
				if can_splay_step_hint( f, v, p ) {
					splay_step( f, v );
				}
				else if can_splay_step_hint( f, p, g ) {
					splay_step( f, p );
				}
				else {
					// If the steps at v and p are both blocked, the one at g is not.
					debug_assert!( can_splay_step( f, g ) );
					splay_step( f, g );
				}
			}
			else {
				f.rotate( v );
			}
		}
	}

	fn node_below_root<TData : NodeData>( f : &mut SttForest<TData>, v : NodeIdx ) {
		debug_assert!( f.get_parent( v ).is_some(), "node_below_root: v is a root" );
		let budget = RotationBudget::new( f );
		loop {
			budget.check( f );
			let p = f.get_parent( v ).unwrap();
			let Some( g ) = f.get_parent( p ) else { return };
			if f.get_parent( g ).is_none() {
				rotate_below_root_step( f, v, p );
			}
			else if can_splay_step_hint( f, v, p ) {
				splay_step( f, v );
			}
			else if can_splay_step_hint( f, p, g ) {
				splay_step( f, p );
			}
			else {
				splay_step( f, g );
			}
		}
	}
}

/// Two-pass splaying: the first pass splays every branching node on the target's root
/// path out of the way, the second pass splays the target itself. After the first pass,
/// every rotation performed by the second one is legal.
#[derive(Clone)]
pub struct TwoPassSplay;

impl TwoPassSplay {
	/// Splays all branching nodes on the root path of `v` to the top, bottom-up. A
	/// *branching node* is the parent of a 1-cut node on the path that is itself a
	/// separator; these are exactly the nodes blocking rotations on the path.
	///
	/// If `crown_last` is set, the topmost branching node becomes the new search root;
	/// otherwise it stops directly below the root (a child of the root is never a
	/// separator, so it blocks nothing anymore either way). The latter keeps the root in
	/// place, as `node_below_root` requires.
	fn first_pass<TData : NodeData>( f : &mut SttForest<TData>, v : NodeIdx, crown_last : bool ) {
		let mut branching = std::mem::take( &mut f.scratch );
		branching.clear();
		let mut x = v;
		while let Some( p ) = f.get_parent( x ) {
			if !f.is_separator_hint( x, p ) && f.is_separator( p ) {
				branching.push( p );
			}
			x = p;
		}
		if let Some( &first ) = branching.first() {
			splay_to( f, v, first );
			for i in 0..branching.len() - 1 {
				splay_to( f, branching[i], branching[i + 1] );
			}
			let last = *branching.last().unwrap();
			let budget = RotationBudget::new( f );
			loop {
				budget.check( f );
				let Some( p ) = f.get_parent( last ) else { break };
				if crown_last {
					splay_step( f, last );
				}
				else {
					let Some( g ) = f.get_parent( p ) else { break };
					if f.get_parent( g ).is_none() {
						rotate_below_root_step( f, last, p );
					}
					else {
						splay_step( f, last );
					}
				}
			}
		}
		f.scratch = branching;
	}
}

impl NodeToRootStrategy for TwoPassSplay {
	fn node_to_root<TData : NodeData>( f : &mut SttForest<TData>, v : NodeIdx ) {
		Self::first_pass( f, v, true );
		let budget = RotationBudget::new( f );
		while f.get_parent( v ).is_some() {
			budget.check( f );
			splay_step( f, v );
		}
	}

	fn node_below_root<TData : NodeData>( f : &mut SttForest<TData>, v : NodeIdx ) {
		debug_assert!( f.get_parent( v ).is_some(), "node_below_root: v is a root" );
		Self::first_pass( f, v, false );
		let budget = RotationBudget::new( f );
		loop {
			budget.check( f );
			let p = f.get_parent( v ).unwrap();
			let Some( g ) = f.get_parent( p ) else { return };
			if f.get_parent( g ).is_none() {
				rotate_below_root_step( f, v, p );
			}
			else {
				splay_step( f, v );
			}
		}
	}
}

/// Two-pass splaying with both passes interleaved: prefer the step at the target; when
/// it is blocked, handle the branching node responsible (the parent or the grandparent).
#[derive(Clone)]
pub struct LocalTwoPassSplay;

impl LocalTwoPassSplay {
	/// One step of the interleaved strategy, for a target `v` with parent `p` and
	/// grandparent `g`. With `keep_root` set, a splay step that would make `g` the new
	/// search root is demoted to a single rotation at `g`, which is always legal since
	/// `g` is a separator in that branch.
	fn step<TData : NodeData>( f : &mut SttForest<TData>, v : NodeIdx, p : NodeIdx, g : NodeIdx, keep_root : bool ) {
		if can_splay_step_hint( f, v, p ) {
			splay_step( f, v );
		}
		else if f.is_separator_hint( p, g ) {
			// g is a separator (otherwise the step at v would be legal), hence v is
			// 1-cut and p is a branching node; with p and g both separators, the step
			// at p is always legal. Being a separator, g is not a child of the root, so
			// this step cannot replace the root either.
			debug_assert!( can_splay_step_hint( f, p, g ) );
			splay_step( f, p );
		}
		else {
			// g is the branching node; move it up by a splay step if possible, by a
			// single (always legal) rotation otherwise. A splay step at depth two would
			// make g the new root, so it is also demoted when the root must stay.
			let h = f.get_parent( g ).expect( "a separator cannot be the search root" );
			let g_at_depth_two = f.get_parent( h ).is_some_and( |hh| f.get_parent( hh ).is_none() );
			if keep_root && g_at_depth_two {
				f.rotate( g );
			}
			else if can_splay_step_hint( f, g, h ) {
				splay_step( f, g );
			}
			else {
				f.rotate( g );
			}
		}
	}
}

impl NodeToRootStrategy for LocalTwoPassSplay {
	fn node_to_root<TData : NodeData>( f : &mut SttForest<TData>, v : NodeIdx ) {
		let budget = RotationBudget::new( f );
		while let Some( p ) = f.get_parent( v ) {
			budget.check( f );
			if let Some( g ) = f.get_parent( p ) {
				Self::step( f, v, p, g, false );
			}
			else {
				f.rotate( v );
			}
		}
	}

	fn node_below_root<TData : NodeData>( f : &mut SttForest<TData>, v : NodeIdx ) {
		debug_assert!( f.get_parent( v ).is_some(), "node_below_root: v is a root" );
		let budget = RotationBudget::new( f );
		loop {
			budget.check( f );
			let p = f.get_parent( v ).unwrap();
			let Some( g ) = f.get_parent( p ) else { return };
			if f.get_parent( g ).is_none() {
				rotate_below_root_step( f, v, p );
			}
			else {
				Self::step( f, v, p, g, true );
			}
		}
	}
}

/// Greedy splay dynamic forest, stable driver.
pub type StableGreedySplayForest<TData> = StableDynamicForest<GreedySplay, TData>;
/// Greedy splay dynamic forest, `node_below_root`-based driver.
pub type GreedySplayForest<TData> = ExtendedDynamicForest<GreedySplay, TData>;
/// Two-pass splay dynamic forest, stable driver.
pub type StableTwoPassSplayForest<TData> = StableDynamicForest<TwoPassSplay, TData>;
/// Two-pass splay dynamic forest, `node_below_root`-based driver.
pub type TwoPassSplayForest<TData> = ExtendedDynamicForest<TwoPassSplay, TData>;
/// Local two-pass splay dynamic forest, stable driver.
pub type StableLocalTwoPassSplayForest<TData> = StableDynamicForest<LocalTwoPassSplay, TData>;
/// Local two-pass splay dynamic forest, `node_below_root`-based driver.
pub type LocalTwoPassSplayForest<TData> = ExtendedDynamicForest<LocalTwoPassSplay, TData>;

#[cfg(test)]
mod tests {
	use super::*;
	use crate::twocut::node_data::EmptyNodeData;

	fn chain( n : usize ) -> SttForest<EmptyNodeData> {
		let parents : Vec<Option<usize>> = (0..n).map( |i| if i == 0 { None } else { Some( i - 1 ) } ).collect();
		let edges : Vec<( usize, usize )> = (0..n - 1).map( |i| ( i, i + 1 ) ).collect();
		SttForest::from_structure( &parents, &edges )
	}

	#[test]
	fn can_splay_step_cases() {
		let f = chain( 3 );
		// 1 is a child of the root.
		assert!( can_splay_step( &f, NodeIdx::new( 1 ) ) );
		// 2's grandparent is the root, hence not a separator.
		assert!( can_splay_step( &f, NodeIdx::new( 2 ) ) );
	}

	#[test]
	fn can_splay_step_blocked() {
		// Star of three leaves around center 3, plus a pendant 4 at leaf 2:
		// edges {3,0},{3,1},{3,2},{2,4}. Search tree: 0 -> 2 -> 3 -> 1, with 4 below 2.
		// Boundaries: T_2 = {2,3,1,4}: {0}; T_3 = {3,1}: {0,2}... build and test around
		// a deep separator: g = 2? Use predicates directly instead.
		let f : SttForest<EmptyNodeData> = SttForest::from_structure(
			&[None, Some( 3 ), Some( 0 ), Some( 2 ), Some( 2 )],
			&[( 3, 0 ), ( 3, 1 ), ( 3, 2 ), ( 2, 4 )] );
		// T_3 = {3, 1} has boundary {0, 2}: 3 is the direct separator child of 2.
		assert!( f.is_direct_separator( NodeIdx::new( 3 ) ) );
		// 1 is 1-cut, parent 3 is a separator, grandparent 2 is not (child of root).
		assert!( can_splay_step( &f, NodeIdx::new( 1 ) ) );
		// 4: parent 2 is not a separator; grandparent 0 is the root.
		assert!( can_splay_step( &f, NodeIdx::new( 4 ) ) );
	}

	#[test]
	fn zig_zig_on_chain() {
		let mut f = chain( 3 );
		splay_step( &mut f, NodeIdx::new( 2 ) );
		// ZIG-ZIG: rotate(1), rotate(2); 2 becomes the root.
		assert_eq!( f.get_parent( NodeIdx::new( 2 ) ), None );
		assert_eq!( f.num_rotations(), 2 );
		f.validate( &(0..2).map( |i| ( i, i + 1 ) ).collect() ).unwrap();
	}

	#[test]
	fn zig_on_child_of_root() {
		let mut f = chain( 2 );
		splay_step( &mut f, NodeIdx::new( 1 ) );
		assert_eq!( f.get_parent( NodeIdx::new( 1 ) ), None );
		assert_eq!( f.num_rotations(), 1 );
	}

	#[test]
	fn splay_to_stops_below_target() {
		let mut f = chain( 10 );
		splay_to( &mut f, NodeIdx::new( 9 ), NodeIdx::new( 0 ) );
		assert_eq!( f.get_parent( NodeIdx::new( 9 ) ), Some( NodeIdx::new( 0 ) ) );
		f.validate( &(0..9).map( |i| ( i, i + 1 ) ).collect() ).unwrap();
	}

	#[test]
	fn splay_to_parent_is_noop() {
		let mut f = chain( 4 );
		splay_to( &mut f, NodeIdx::new( 3 ), NodeIdx::new( 2 ) );
		assert_eq!( f.num_rotations(), 0 );
	}

	#[test]
	fn splay_to_grandparent_single_rotation() {
		let mut f = chain( 4 );
		splay_to( &mut f, NodeIdx::new( 3 ), NodeIdx::new( 1 ) );
		assert_eq!( f.num_rotations(), 1 );
		assert_eq!( f.get_parent( NodeIdx::new( 3 ) ), Some( NodeIdx::new( 1 ) ) );
	}

	#[test]
	fn strategies_reach_root_on_star_fixture() {
		let star = || -> SttForest<EmptyNodeData> {
			SttForest::from_structure(
				&[None, Some( 2 ), Some( 0 ), Some( 1 )],
				&[( 1, 0 ), ( 1, 2 ), ( 1, 3 )] )
		};
		let edges = star().underlying_edges();
		for strategy in 0..3 {
			for target in 0..4 {
				let mut f = star();
				let v = NodeIdx::new( target );
				match strategy {
					0 => GreedySplay::node_to_root( &mut f, v ),
					1 => TwoPassSplay::node_to_root( &mut f, v ),
					_ => LocalTwoPassSplay::node_to_root( &mut f, v )
				}
				assert_eq!( f.get_parent( v ), None );
				f.validate( &edges ).unwrap();
			}
		}
	}

	#[test]
	fn two_pass_detects_branching_node() {
		// In the star fixture, bringing the blocked leaf 3 up requires handling the
		// branching node 1 first.
		let mut f : SttForest<EmptyNodeData> = SttForest::from_structure(
			&[None, Some( 2 ), Some( 0 ), Some( 1 )],
			&[( 1, 0 ), ( 1, 2 ), ( 1, 3 )] );
		let edges = f.underlying_edges();
		TwoPassSplay::node_to_root( &mut f, NodeIdx::new( 3 ) );
		assert_eq!( f.get_parent( NodeIdx::new( 3 ) ), None );
		f.validate( &edges ).unwrap();
	}

	#[test]
	fn below_root_variants_land_below_root() {
		for strategy in 0..3 {
			let mut f = chain( 12 );
			let v = NodeIdx::new( 11 );
			match strategy {
				0 => GreedySplay::node_below_root( &mut f, v ),
				1 => TwoPassSplay::node_below_root( &mut f, v ),
				_ => LocalTwoPassSplay::node_below_root( &mut f, v )
			}
			let p = f.get_parent( v ).unwrap();
			assert_eq!( f.get_parent( p ), None );
			f.validate( &(0..11).map( |i| ( i, i + 1 ) ).collect() ).unwrap();
		}
	}
}
