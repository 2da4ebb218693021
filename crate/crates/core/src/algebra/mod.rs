//! Exact algebra: Laurent polynomials with integer coefficients, dense
//! matrices over exact rings, congruence signatures and Smith normal forms.
//!
//! Everything here is generic over an integer scalar (`i64`, `i128` or
//! [`num_bigint::BigInt`]); no floating point is used anywhere.

mod laurent;
mod matrix;
mod signature;
mod snf;

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

pub use laurent::{LaurentPoly, ParseLaurentError};
pub use matrix::{det_laurent, Matrix, SymMatrix};
pub use signature::{inertia, inertia_int, signature_exact, Inertia};
pub use snf::{fp_abelian_invariants, smith_normal_form, AbelianInvariants, SmithForm};

/// Integer scalar the exact algebra is generic over.
pub trait Int:
    Clone + Debug + Display + Ord + Hash + Integer + Signed + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("scalar cannot hold i64 value")
    }
}

impl<T> Int for T where
    T: Clone + Debug + Display + Ord + Hash + Integer + Signed + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

/// Rational numbers over the integer scalar `T`.
pub type Rational<T> = Ratio<T>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("value is not integral at the requested point")]
    NotIntegral,
}

/// Commutative ring with exact division, the minimum needed for
/// fraction-free (Bareiss) elimination.
pub trait ExactRing: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / rhs`, or `None` when the quotient does not exist in the ring.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;
}

impl<T: Int> ExactRing for T {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self.clone() + rhs.clone()
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.clone() - rhs.clone()
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.clone() * rhs.clone()
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if num_traits::Zero::is_zero(rhs) {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        num_traits::Zero::is_zero(&r).then_some(q)
    }
}

impl<T: Int> ExactRing for LaurentPoly<T> {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        LaurentPoly::div_exact(self, rhs)
    }
}
