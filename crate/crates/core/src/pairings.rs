//! Two-dimensional pairing functions and their exact inverses.
//!
//! Five bijections live here:
//!
//! * `cantor_positive` — p(x,y) = (x² + 2xy + y² − x − 3y + 2)/2, a bijection
//!   on positive integers;
//! * `cantor` — c(x,y) = (x² + 2xy + y² + 3x + y)/2 on ℕ², with
//!   c(x,y) = p(x+1, y+1) − 1;
//! * `cantor_swapped` — c̄(x,y) = c(y,x);
//! * `rosenberg_strong` — r₂(x,y) = m² + m + x − y with m = max(x,y), which
//!   fills square shells instead of diagonals;
//! * `dyadic` — q(x,y) = 2^y(2x + 1) − 1, whose inverse reads the binary
//!   representation of z + 1.
//!
//! The halving in the Cantor forms is always exact; debug builds verify
//! evenness before dividing.

use crate::error::Error;
use crate::natmath::{self, Nat};
use num_traits::One;

/// The five pairing functions, as a value for dispatch.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairingKind {
    /// p(x,y) on positive integers.
    CantorPositive,
    /// c(x,y) on ℕ².
    Cantor,
    /// c̄(x,y) = c(y,x).
    CantorSwapped,
    /// r₂(x,y), square shells.
    RosenbergStrong,
    /// q(x,y) = 2^y(2x+1) − 1.
    Dyadic,
}

impl PairingKind {
    /// All five pairings, in definition order.
    pub const ALL: [PairingKind; 5] = [
        PairingKind::CantorPositive,
        PairingKind::Cantor,
        PairingKind::CantorSwapped,
        PairingKind::RosenbergStrong,
        PairingKind::Dyadic,
    ];

    /// The selector name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            PairingKind::CantorPositive => "cantor-positive",
            PairingKind::Cantor => "cantor",
            PairingKind::CantorSwapped => "cantor-swapped",
            PairingKind::RosenbergStrong => "rs",
            PairingKind::Dyadic => "dyadic",
        }
    }

    pub fn encode(self, x: &Nat, y: &Nat) -> Result<Nat, Error> {
        match self {
            PairingKind::CantorPositive => cantor_positive(x, y),
            PairingKind::Cantor => Ok(cantor(x, y)),
            PairingKind::CantorSwapped => Ok(cantor_swapped(x, y)),
            PairingKind::RosenbergStrong => Ok(rosenberg_strong(x, y)),
            PairingKind::Dyadic => Ok(dyadic(x, y)),
        }
    }

    pub fn decode(self, z: &Nat) -> Result<(Nat, Nat), Error> {
        match self {
            PairingKind::CantorPositive => cantor_positive_inverse(z),
            PairingKind::Cantor => Ok(cantor_inverse(z)),
            PairingKind::CantorSwapped => Ok(cantor_swapped_inverse(z)),
            PairingKind::RosenbergStrong => Ok(rosenberg_strong_inverse(z)),
            PairingKind::Dyadic => Ok(dyadic_inverse(z)),
        }
    }

    /// Whether the function is a quadratic-polynomial bijection of ℕ².
    ///
    /// By the Fueter–Pólya theorem, c and c̄ are the only such bijections;
    /// p is also a quadratic polynomial but pairs positive integers, not ℕ².
    /// Recorded structurally rather than detected by search.
    pub fn is_quadratic_polynomial(self) -> bool {
        matches!(self, PairingKind::Cantor | PairingKind::CantorSwapped)
    }

    /// Whether max(x,y) ≤ encode(x,y) for every pair — the property that
    /// makes the recursive enumerations of [`crate::enums`] terminate.
    ///
    /// True for the four bijections of ℕ² (each has diagonal, cubic, or
    /// dyadic shells); false for p, which is not defined on all of ℕ².
    pub fn is_max_dominating(self) -> bool {
        !matches!(self, PairingKind::CantorPositive)
    }
}

/// Exact halving; the quadratic forms above are even by construction.
fn half_exact(v: Nat) -> Nat {
    debug_assert!(!v.bit(0), "halving an odd value");
    v >> 1
}

/// Cantor pair on positive integers: p(x,y) = (x² + 2xy + y² − x − 3y + 2)/2.
///
/// Rejects zero coordinates; this variant is kept distinct from `cantor`
/// rather than silently shifting its arguments.
pub fn cantor_positive(x: &Nat, y: &Nat) -> Result<Nat, Error> {
    if x.is_one() && y.is_one() {
        return Ok(Nat::one());
    }
    let one = Nat::one();
    if x < &one || y < &one {
        return Err(Error::PositiveDomain);
    }
    let s = x + y;
    // (x+y)² + 2 ≥ x + 3y holds for all positive x, y, so the subtraction
    // stays in ℕ.
    Ok(half_exact(&s * &s + 2u32 - x - (y * 3u32)))
}

/// Inverse of `cantor_positive`; rejects z = 0.
pub fn cantor_positive_inverse(z: &Nat) -> Result<(Nat, Nat), Error> {
    if z < &Nat::one() {
        return Err(Error::PositiveDomain);
    }
    let (x, y) = cantor_inverse(&(z - 1u32));
    Ok((x + 1u32, y + 1u32))
}

/// Cantor pair on ℕ: c(x,y) = (x² + 2xy + y² + 3x + y)/2.
pub fn cantor(x: &Nat, y: &Nat) -> Nat {
    let s = x + y;
    half_exact(&s * &s + x * 3u32 + y)
}

/// Cantor pair with the arguments exchanged: c̄(x,y) = c(y,x).
pub fn cantor_swapped(x: &Nat, y: &Nat) -> Nat {
    cantor(y, x)
}

/// Inverse of `cantor`: with w = ⌊(−1 + √(1+8z))/2⌋, returns
/// (z − w(w+1)/2, w(w+3)/2 − z). The components sum to w.
pub fn cantor_inverse(z: &Nat) -> (Nat, Nat) {
    let s = natmath::iroot(&(z * 8u32 + 1u32), 2).expect("degree 2");
    let w = (s - 1u32) >> 1;
    let x = z - half_exact(&w * (&w + 1u32));
    let y = half_exact(&w * (&w + 3u32)) - z;
    (x, y)
}

/// Inverse of `cantor_swapped`.
pub fn cantor_swapped_inverse(z: &Nat) -> (Nat, Nat) {
    let (x, y) = cantor_inverse(z);
    (y, x)
}

/// Square-shell pairing: r₂(x,y) = m² + m + x − y with m = max(x,y).
pub fn rosenberg_strong(x: &Nat, y: &Nat) -> Nat {
    let m = x.max(y);
    m * m + m + x - y
}

/// Inverse of `rosenberg_strong`: with m = ⌊√z⌋, returns (z − m², m) when
/// z − m² < m, else (m, m² + 2m − z).
pub fn rosenberg_strong_inverse(z: &Nat) -> (Nat, Nat) {
    let m = natmath::iroot(z, 2).expect("degree 2");
    let t = z - &m * &m;
    if t < m {
        (t, m)
    } else {
        let y = &m * &m + &m * 2u32 - z;
        (m, y)
    }
}

/// Dyadic pairing: q(x,y) = 2^y(2x + 1) − 1.
pub fn dyadic(x: &Nat, y: &Nat) -> Nat {
    let shift = u64::try_from(y).expect("shift exceeds addressable memory");
    ((x * 2u32 + 1u32) << shift) - 1u32
}

/// Inverse of `dyadic`: y counts the trailing zero bits of z + 1, and
/// x = ((z+1) >> y − 1)/2.
///
/// `trailing_zeros` is the fast path; its agreement with the defining
/// repeated-division-by-2 loop is pinned by a test.
pub fn dyadic_inverse(z: &Nat) -> (Nat, Nat) {
    let v = z + 1u32;
    let y = v.trailing_zeros().expect("z + 1 > 0");
    let x = half_exact((v >> y) - 1u32);
    (x, Nat::from(y))
}

/// Shell number of the dyadic pairing: y + 1 + digit_length(x, 2), which is
/// the bit count of q(x,y) + 1.
pub fn dyadic_shell(x: &Nat, y: &Nat) -> Nat {
    y + 1u32 + Nat::from(natmath::digit_length(x, 2).expect("base 2"))
}
