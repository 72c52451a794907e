//! Exact integer primitives: binomials, floor roots, digit lengths.
//!
//! Everything here is arbitrary-precision and floating-point free. An
//! off-by-one floor root silently corrupts every shell computation built on
//! top of it, so `iroot` is pure integer bisection with the defining
//! inequality as its contract.

use crate::error::Error;
use num_traits::{One, Zero};
use std::cmp::Ordering;

/// Non-negative integer of arbitrary magnitude: the universal code and
/// coordinate type.
pub type Nat = num_bigint::BigUint;

/// Binomial coefficient C(n, k), with C(n, k) = 0 whenever k > n.
pub fn binomial(n: &Nat, k: &Nat) -> Nat {
    if k > n {
        return Nat::zero();
    }
    let nk = n - k;
    let reps = k.min(&nk);
    let big = n - reps;
    // acc = C(big + i, i) after step i, so every division is exact.
    let mut acc = Nat::one();
    let mut i = Nat::one();
    while &i <= reps {
        acc = acc * (&big + &i) / &i;
        i += 1u32;
    }
    acc
}

/// Floor of the d-th root: the unique m with m^d <= z < (m+1)^d.
pub fn iroot(z: &Nat, d: u32) -> Result<Nat, Error> {
    if d == 0 {
        return Err(Error::DegreeZero);
    }
    if d == 1 || z <= &Nat::one() {
        return Ok(z.clone());
    }
    // Monotone bisection over [0, z]; magnitude-independent and exact.
    let mut lo = Nat::zero();
    let mut hi = z.clone();
    while lo < hi {
        let mid: Nat = (&lo + &hi + 1u32) >> 1;
        match mid.pow(d).cmp(z) {
            Ordering::Equal => return Ok(mid),
            Ordering::Less => lo = mid,
            Ordering::Greater => hi = mid - 1u32,
        }
    }
    Ok(lo)
}

/// Number of base-`base` digits of x, i.e. the least L with x < base^L.
///
/// Equals ceil(log_base(x + 1)), computed by exact division; zero has zero
/// digits.
pub fn digit_length(x: &Nat, base: u64) -> Result<u64, Error> {
    if base < 2 {
        return Err(Error::BaseTooSmall(base));
    }
    let base = Nat::from(base);
    let mut rest = x.clone();
    let mut len = 0u64;
    while !rest.is_zero() {
        rest /= &base;
        len += 1;
    }
    Ok(len)
}
