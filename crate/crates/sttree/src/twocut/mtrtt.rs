//! The move-to-root strategy: rotate the target up whenever the 2-cut property allows
//! it, and rotate its parent out of the way otherwise.
//!
//! On underlying paths every rotation is allowed, and this degenerates to the classical
//! move-to-root heuristic for binary search trees: linear in the worst case, but hard to
//! beat on uniformly random inputs.

use crate::NodeIdx;
use crate::twocut::{NodeToRootStrategy, RotationBudget,
	ExtendedDynamicForest, StableDynamicForest};
use crate::twocut::basic::SttForest;
use crate::twocut::node_data::NodeData;

/// Move-to-root, adapted to 2-cut search trees.
#[derive(Clone)]
pub struct MoveToRoot;

impl NodeToRootStrategy for MoveToRoot {
	fn node_to_root<TData : NodeData>( f : &mut SttForest<TData>, v : NodeIdx ) {
		let budget = RotationBudget::new( f );
		while let Some( p ) = f.get_parent( v ) {
			budget.check( f );
			if f.can_rotate_hint( v, p ) {
				f.rotate( v );
			}
			else {
				// v is 1-cut below a separator; rotating the separator is always allowed
				// and brings v closer to the root.
				f.rotate( p );
			}
		}
	}

	fn node_below_root<TData : NodeData>( f : &mut SttForest<TData>, v : NodeIdx ) {
		debug_assert!( f.get_parent( v ).is_some(), "node_below_root: v is a root" );
		let budget = RotationBudget::new( f );
		loop {
			budget.check( f );
			let p = f.get_parent( v ).unwrap();
			if f.get_parent( p ).is_none() {
				return;
			}
			if f.can_rotate_hint( v, p ) {
				f.rotate( v );
			}
			else {
				f.rotate( p );
			}
		}
	}
}

/// Move-to-root dynamic forest, stable driver.
pub type StableMoveToRootForest<TData> = StableDynamicForest<MoveToRoot, TData>;

/// Move-to-root dynamic forest, `node_below_root`-based driver.
pub type MoveToRootForest<TData> = ExtendedDynamicForest<MoveToRoot, TData>;
