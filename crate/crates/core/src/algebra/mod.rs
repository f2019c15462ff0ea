//! Exact scalars and the two polynomial algebras the engine is built on.

mod circ;
mod gcomplex;
mod param;

pub use circ::{circ_reduce, residue, CircPoly, Laurent};
pub use gcomplex::GComplex;
pub use param::{param_is_zero, ParamPoly};

use num_traits::Zero;

/// Minimal commutative-ring surface shared by coefficient types.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn is_ring_zero(&self) -> bool;
    fn add_assign_ref(&mut self, rhs: &Self);
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

impl Ring for GComplex {
    fn ring_zero() -> Self {
        <GComplex as Zero>::zero()
    }
    fn ring_one() -> Self {
        <GComplex as num_traits::One>::one()
    }
    fn is_ring_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

/// Binomial coefficient `C(n, k)` as an exact integer; zero when `k > n`.
pub fn binomial(n: u32, k: u32) -> num_bigint::BigInt {
    use num_bigint::BigInt;
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1u32);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
