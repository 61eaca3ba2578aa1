//! Edge weight types.
//!
//! Weights form a commutative monoid ([MonoidWeight]); the forest implementations only
//! ever combine weights, so path maxima work as well as path sums. Weights that also
//! support subtraction ([GroupWeight]) allow a leaner per-node representation in the
//! search-tree forests.

use std::fmt::Debug;
use std::ops;

use num_traits::Zero;

use crate::NodeIdx;

/// Edge weights forming a commutative monoid.
///
/// `+` must be associative and commutative, with [MonoidWeight::identity] as neutral
/// element. This is checked by randomized tests, not by the type system.
pub trait MonoidWeight : Copy + PartialEq + Debug + ops::Add<Self, Output = Self> {
	/// The neutral element.
	fn identity() -> Self;
}

/// Edge weights forming a commutative group, i.e. monoid weights with subtraction.
pub trait GroupWeight : MonoidWeight + ops::Sub<Self, Output = Self> {
	/// The inverse element: `w + w.inverse() == identity()`.
	fn inverse( self ) -> Self {
		Self::identity() - self
	}
}


/// The trivial weight. Path queries degenerate to connectivity queries.
#[derive(Copy, Clone, Debug, Eq, PartialEq)]
pub struct EmptyWeight;

impl ops::Add for EmptyWeight {
	type Output = EmptyWeight;

	fn add( self, _ : EmptyWeight ) -> EmptyWeight {
		EmptyWeight
	}
}

impl ops::Sub for EmptyWeight {
	type Output = EmptyWeight;

	fn sub( self, _ : EmptyWeight ) -> EmptyWeight {
		EmptyWeight
	}
}

impl MonoidWeight for EmptyWeight {
	fn identity() -> Self {
		EmptyWeight
	}
}

impl GroupWeight for EmptyWeight {}


/// Additive weights over any numeric scalar (integers, floats).
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SumWeight<T>( pub T );

impl<T> From<T> for SumWeight<T> {
	fn from( value : T ) -> Self {
		SumWeight( value )
	}
}

impl<T : ops::Add<T, Output = T>> ops::Add for SumWeight<T> {
	type Output = SumWeight<T>;

	fn add( self, rhs : SumWeight<T> ) -> SumWeight<T> {
		SumWeight( self.0 + rhs.0 )
	}
}

impl<T : ops::Sub<T, Output = T>> ops::Sub for SumWeight<T> {
	type Output = SumWeight<T>;

	fn sub( self, rhs : SumWeight<T> ) -> SumWeight<T> {
		SumWeight( self.0 - rhs.0 )
	}
}

impl<T : Copy + PartialEq + Debug + Zero> MonoidWeight for SumWeight<T> {
	fn identity() -> Self {
		SumWeight( T::zero() )
	}
}

impl<T : Copy + PartialEq + Debug + Zero + ops::Sub<T, Output = T>> GroupWeight for SumWeight<T> {}


/// Identifies an edge for [MaxEdgeWeight] witnesses. The meaning of the id is up to the
/// caller; the incremental MSF uses indices into its own edge store.
#[derive(Copy, Clone, Debug, Eq, Hash, PartialEq)]
pub struct EdgeId( pub usize );

/// Maximum weight over non-negative scalars, extended with a witness edge achieving it.
///
/// Combining keeps the operand with the larger weight. On ties, the left operand wins,
/// except that a missing witness never shadows a present one (so the identity stays
/// neutral on weight-zero edges). Ties between two distinct witnessed edges are thus
/// resolved left-to-right; the witness is *a* maximum-weight edge, not a canonical one.
#[derive(Copy, Clone, Debug, Eq, PartialEq)]
pub struct MaxEdgeWeight<T> {
	/// The (maximum) edge weight.
	pub weight : T,
	/// An edge with this weight, if any edge contributed.
	pub witness : Option<EdgeId>
}

impl<T> MaxEdgeWeight<T> {
	/// A single edge of the given weight.
	pub fn new( weight : T, witness : EdgeId ) -> Self {
		MaxEdgeWeight { weight, witness : Some( witness ) }
	}
}

impl<T : PartialOrd> ops::Add for MaxEdgeWeight<T> {
	type Output = MaxEdgeWeight<T>;

	fn add( self, rhs : MaxEdgeWeight<T> ) -> MaxEdgeWeight<T> {
		if rhs.weight > self.weight {
			rhs
		}
		else if self.weight > rhs.weight || self.witness.is_some() {
			self
		}
		else {
			rhs
		}
	}
}

impl<T : Copy + PartialEq + PartialOrd + Debug + Zero> MonoidWeight for MaxEdgeWeight<T> {
	fn identity() -> Self {
		MaxEdgeWeight { weight : T::zero(), witness : None }
	}
}


/// A weight or infinity.
///
/// Several node annotations are distances that may be undefined ("infinite"), e.g. the
/// distance of a root to its non-existent parent. Since monoids have no reserved top
/// element, absence is explicit. Addition and subtraction absorb [Dist::Infinite].
#[derive(Copy, Clone, Debug, Eq, PartialEq)]
pub enum Dist<TWeight> {
	/// A finite distance.
	Finite( TWeight ),
	/// No path / no such node.
	Infinite
}

impl<TWeight : MonoidWeight> Dist<TWeight> {
	/// The finite value, if any.
	pub fn finite( self ) -> Option<TWeight> {
		match self {
			Dist::Finite( w ) => Some( w ),
			Dist::Infinite => None
		}
	}

	/// The finite value; must not be [Dist::Infinite].
	pub fn expect_finite( self ) -> TWeight {
		match self {
			Dist::Finite( w ) => w,
			Dist::Infinite => panic!( "expected a finite distance" )
		}
	}

	/// Whether this is a finite distance.
	pub fn is_finite( self ) -> bool {
		matches!( self, Dist::Finite( _ ) )
	}
}

impl<TWeight : MonoidWeight> ops::Add for Dist<TWeight> {
	type Output = Dist<TWeight>;

	fn add( self, rhs : Dist<TWeight> ) -> Dist<TWeight> {
		match ( self, rhs ) {
			( Dist::Finite( a ), Dist::Finite( b ) ) => Dist::Finite( a + b ),
			_ => Dist::Infinite
		}
	}
}

impl<TWeight : GroupWeight> ops::Sub for Dist<TWeight> {
	type Output = Dist<TWeight>;

	fn sub( self, rhs : Dist<TWeight> ) -> Dist<TWeight> {
		match ( self, rhs ) {
			( Dist::Finite( a ), Dist::Finite( b ) ) => Dist::Finite( a - b ),
			( Dist::Infinite, _ ) => Dist::Infinite,
			( Dist::Finite( _ ), Dist::Infinite ) => {
				debug_assert!( false, "subtracting an infinite distance from a finite one" );
				Dist::Infinite
			}
		}
	}
}

impl<TWeight> From<TWeight> for Dist<TWeight> {
	fn from( w : TWeight ) -> Self {
		Dist::Finite( w )
	}
}


// Allows a NodeIdx to stand in for an edge id in tests.
impl From<NodeIdx> for EdgeId {
	fn from( v : NodeIdx ) -> Self {
		EdgeId( v.index() )
	}
}

#[cfg(test)]
mod tests {
	use super::*;
	use crate::rng::SplitMix64;

	fn check_monoid_laws<W : MonoidWeight>( triples : impl Iterator<Item = ( W, W, W )> ) {
		for ( a, b, c ) in triples {
			assert_eq!( ( a + b ) + c, a + ( b + c ) );
			assert_eq!( a + W::identity(), a );
			assert_eq!( W::identity() + a, a );
		}
	}

	#[test]
	fn sum_weight_laws() {
		let mut rng = SplitMix64::new( 12 );
		let mut gen = || SumWeight( rng.next_u64() as i64 % 10_000 );
		let triples : Vec<_> = (0..1000).map( |_| ( gen(), gen(), gen() ) ).collect();
		check_monoid_laws( triples.iter().copied() );
		for ( a, b, _ ) in triples {
			assert_eq!( a + b, b + a );
			assert_eq!( a + a.inverse(), SumWeight::identity() );
			assert_eq!( ( a + b ) - b, a );
		}
	}

	#[test]
	fn max_edge_weight_laws() {
		let mut rng = SplitMix64::new( 34 );
		let mut gen = || {
			let w = rng.next_u64() % 50;
			if rng.next_u64() % 4 == 0 {
				MaxEdgeWeight { weight : w, witness : None }
			}
			else {
				MaxEdgeWeight::new( w, EdgeId( rng.next_u64() as usize % 100 ) )
			}
		};
		let triples : Vec<_> = (0..1000).map( |_| ( gen(), gen(), gen() ) ).collect();
		check_monoid_laws( triples.iter().copied() );
		// Commutative on the weight; the witness may differ on ties, but must be one of
		// the combined witnesses.
		for ( a, b, _ ) in triples {
			let ab = a + b;
			let ba = b + a;
			assert_eq!( ab.weight, ba.weight );
			for r in [ab, ba] {
				assert!( r.witness == a.witness || r.witness == b.witness );
				if r.witness.is_none() {
					assert!( a.witness.is_none() || a.weight < r.weight );
					assert!( b.witness.is_none() || b.weight < r.weight );
				}
			}
		}
	}

	#[test]
	fn max_edge_identity_keeps_witness() {
		let e = MaxEdgeWeight::new( 0u64, EdgeId( 7 ) );
		assert_eq!( MaxEdgeWeight::identity() + e, e );
		assert_eq!( e + MaxEdgeWeight::identity(), e );
	}

	#[test]
	fn dist_absorbs_infinity() {
		let inf : Dist<SumWeight<i64>> = Dist::Infinite;
		let five = Dist::Finite( SumWeight( 5 ) );
		assert_eq!( five + inf, Dist::Infinite );
		assert_eq!( inf + five, Dist::Infinite );
		assert_eq!( inf - five, Dist::Infinite );
		assert_eq!( five + five, Dist::Finite( SumWeight( 10 ) ) );
		assert_eq!( five - five, Dist::Finite( SumWeight( 0 ) ) );
	}
}
