//! d-dimensional tupling bijections ℕ^d ↔ ℕ.
//!
//! Three families generalize the two-dimensional pairings:
//!
//! * `rs_encode`/`rs_decode` — the Rosenberg–Strong family r_d, defined by
//!   r₁(x₁) = x₁ and
//!   r_d(x₁,…,x_d) = r_{d−1}(x₁,…,x_{d−1}) + m^d + (m−x_d)((m+1)^{d−1} − m^{d−1})
//!   with m the maximum coordinate; it fills cubic shells and agrees with
//!   the two-dimensional r₂.
//! * `skolem_encode`/`skolem_decode` — Skolem's family
//!   s_d(x₁,…,x_d) = Σᵢ C(x₁+⋯+xᵢ+i−1, i), inverted through the
//!   combinatorial number system (the d-canonical representation).
//! * `chowla_encode`/`chowla_decode` — Chowla's degree-d polynomial family;
//!   s- and χ- families coincide for d ≤ 2 but not beyond, and not under
//!   any permutation of arguments.
//!
//! Any pairing can also be composed into a tupling by left-folding
//! ([`fold_tupling`]), and any tupling's arguments can be permuted
//! ([`permute_tupling`]). [`morales_arredondo_bound`] evaluates the
//! counting recursion that bounds how many degree-d polynomial d-tupling
//! functions are known.
//!
//! [`TuplingFunction`] packages encode, decode, and the function's standard
//! shell numbering behind one immutable, shareable value.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::natmath::{self, Nat};
use crate::pairings::PairingKind;
use crate::shells::ShellNumbering;

fn check_dim(d: usize) -> Result<(), Error> {
    if d == 0 {
        return Err(Error::DimensionZero);
    }
    u32::try_from(d).map_err(|_| Error::Overflow("dimension"))?;
    Ok(())
}

fn check_point(p: &[Nat], d: usize) -> Result<(), Error> {
    check_dim(d)?;
    if p.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: p.len(),
        });
    }
    Ok(())
}

/// Rosenberg–Strong code of a d-tuple.
pub fn rs_encode(p: &[Nat], d: usize) -> Result<Nat, Error> {
    check_point(p, d)?;
    Ok(rs_encode_inner(p))
}

fn rs_encode_inner(p: &[Nat]) -> Nat {
    // z = x₁ + Σ_{k=2..d} (mₖ^k + (mₖ − xₖ)((mₖ+1)^{k−1} − mₖ^{k−1}))
    // with mₖ = max(x₁..xₖ); iterative so large dimensions stay cheap.
    let mut acc = p[0].clone();
    let mut m = p[0].clone();
    for (k, xk) in p.iter().enumerate().skip(1) {
        let k = k as u32 + 1;
        if *xk > m {
            m = xk.clone();
        }
        let gap = (&m + 1u32).pow(k - 1) - m.pow(k - 1);
        acc += m.pow(k) + (&m - xk) * gap;
    }
    acc
}

/// Inverse of `rs_encode`: with m = ⌊z^(1/d)⌋, the last coordinate is
/// x_d = m − ⌊max(0, z − m^d − m^{d−1}) / ((m+1)^{d−1} − m^{d−1})⌋ and the
/// rest recurses on z − m^d − (m−x_d)((m+1)^{d−1} − m^{d−1}).
pub fn rs_decode(z: &Nat, d: usize) -> Result<Vec<Nat>, Error> {
    check_dim(d)?;
    Ok(rs_decode_inner(z, d))
}

fn rs_decode_inner(z: &Nat, d: usize) -> Vec<Nat> {
    let mut out = Vec::with_capacity(d);
    let mut z = z.clone();
    for k in (2..=d as u32).rev() {
        let m = natmath::iroot(&z, k).expect("degree validated");
        let mk = m.pow(k);
        let low = m.pow(k - 1);
        let gap = (&m + 1u32).pow(k - 1) - &low;
        let threshold = &mk + &low;
        let drop = if z > threshold {
            (&z - &mk - &low) / &gap
        } else {
            Nat::zero()
        };
        // 0 ≤ x_k ≤ m: the quotient never exceeds m.
        debug_assert!(drop <= m);
        z = &z - &mk - &drop * &gap;
        out.push(&m - &drop);
    }
    out.push(z);
    out.reverse();
    out
}

/// Skolem code of a d-tuple: Σᵢ C(x₁+⋯+xᵢ+i−1, i). Coincides with the
/// Cantor pair at d = 2.
pub fn skolem_encode(p: &[Nat], d: usize) -> Result<Nat, Error> {
    check_point(p, d)?;
    Ok(skolem_encode_inner(p))
}

fn skolem_encode_inner(p: &[Nat]) -> Nat {
    let mut acc = Nat::zero();
    let mut prefix = Nat::zero();
    for (i, x) in p.iter().enumerate() {
        prefix += x;
        // C(x₁+⋯+x_{i+1} + i, i+1)
        acc += natmath::binomial(&(&prefix + i), &Nat::from(i as u64 + 1));
    }
    acc
}

/// Inverse of `skolem_encode` via the d-canonical representation: greedily
/// find c_d > c_{d−1} > ⋯ > c_1 ≥ 0 with z = Σ C(cᵢ, i) (each cᵢ the
/// largest value allowed by the remainder and by c_{i+1} − 1), then read
/// off x₁ = c₁ and xᵢ = cᵢ − c_{i−1} − 1.
pub fn skolem_decode(z: &Nat, d: usize) -> Result<Vec<Nat>, Error> {
    check_dim(d)?;
    Ok(skolem_decode_inner(z, d))
}

fn skolem_decode_inner(z: &Nat, d: usize) -> Vec<Nat> {
    let mut rem = z.clone();
    let mut cs: Vec<Nat> = Vec::with_capacity(d);
    for i in (1..=d).rev() {
        let cap = cs.last().map(|prev| prev - 1u32);
        let (c, used) = largest_binomial_arg(&rem, i, cap.as_ref());
        rem -= used;
        cs.push(c);
    }
    debug_assert!(rem.is_zero(), "canonical representation consumes the code");
    cs.reverse();
    let mut out = Vec::with_capacity(d);
    out.push(cs[0].clone());
    for i in 1..d {
        out.push(&cs[i] - &cs[i - 1] - 1u32);
    }
    out
}

/// Largest c (at most `cap`, when given) with C(c, i) ≤ rem, together with
/// that binomial. Starts at c = i − 1 where the binomial is zero, so a
/// result always exists; the greedy choice keeps the representation
/// strictly decreasing.
fn largest_binomial_arg(rem: &Nat, i: usize, cap: Option<&Nat>) -> (Nat, Nat) {
    let floor = Nat::from(i as u64 - 1);
    let mut c = Nat::from(i as u64);
    if rem.is_zero() || cap.is_some_and(|cap| *cap < c) {
        return (floor, Nat::zero());
    }
    let mut val = Nat::one(); // C(i, i)
    loop {
        if cap.is_some_and(|cap| c >= *cap) {
            break;
        }
        let next_c = &c + 1u32;
        // C(c+1, i) = C(c, i) · (c+1) / (c+1−i), an exact division.
        let next_val = &val * &next_c / (&next_c - Nat::from(i as u64));
        if next_val > *rem {
            break;
        }
        c = next_c;
        val = next_val;
    }
    (c, val)
}

/// Chowla code of a d-tuple:
/// C(x₁+⋯+x_d+d, d) − 1 − Σ_{i=1}^{d−1} C(x_{i+1}+⋯+x_d+d−i−1, d−i).
pub fn chowla_encode(p: &[Nat], d: usize) -> Result<Nat, Error> {
    check_point(p, d)?;
    Ok(chowla_encode_inner(p))
}

fn chowla_encode_inner(p: &[Nat]) -> Nat {
    let d = p.len();
    let sum: Nat = p.iter().sum();
    let total = natmath::binomial(&(&sum + Nat::from(d as u64)), &Nat::from(d as u64));
    let mut subtracted = Nat::one();
    let mut suffix = sum;
    for i in 1..d {
        suffix -= &p[i - 1];
        let k = (d - i) as u64;
        subtracted += natmath::binomial(&(&suffix + Nat::from(k - 1)), &Nat::from(k));
    }
    total - subtracted
}

/// Inverse of `chowla_encode` by shell search: locate the diagonal shell w
/// with C(w+d−1, d) ≤ z < C(w+d, d), then try every point with coordinate
/// sum w. No closed-form inverse is known to us; a future direct inverse
/// must agree with this search.
pub fn chowla_decode(z: &Nat, d: usize) -> Result<Vec<Nat>, Error> {
    check_dim(d)?;
    chowla_decode_inner(z, d)
}

fn chowla_decode_inner(z: &Nat, d: usize) -> Result<Vec<Nat>, Error> {
    if d == 1 {
        return Ok(vec![z.clone()]);
    }
    // Walk the shell bounds upward: after the loop,
    // C(w+d−1, d) ≤ z < C(w+d, d).
    let mut w: u64 = 0;
    let mut upper = Nat::one(); // C(w+d, d) at w = 0
    while upper <= *z {
        w = w
            .checked_add(1)
            .ok_or(Error::Overflow("diagonal shell number"))?;
        upper = upper * Nat::from(w + d as u64) / Nat::from(w);
    }
    let mut point = Vec::with_capacity(d);
    if search_shell(z, w, d, &mut point) {
        Ok(point)
    } else {
        Err(Error::InverseSearchFailed { code: z.clone() })
    }
}

/// Depth-first search over all points with coordinate sum `rem` spread over
/// `left` further coordinates; fills `acc` with the preimage of `z` if one
/// exists in the shell.
fn search_shell(z: &Nat, rem: u64, left: usize, acc: &mut Vec<Nat>) -> bool {
    if left == 1 {
        acc.push(Nat::from(rem));
        if chowla_encode_inner(acc) == *z {
            return true;
        }
        acc.pop();
        return false;
    }
    for v in 0..=rem {
        acc.push(Nat::from(v));
        if search_shell(z, rem - v, left - 1, acc) {
            return true;
        }
        acc.pop();
    }
    false
}

/// Left-fold of a pairing into a d-tupling: with d = 3,
/// g(x₁,x₂,x₃) = f(f(x₁,x₂), x₃); d = 1 is the identity.
///
/// The pairing must be a bijection of ℕ², which excludes `CantorPositive`.
pub fn fold_tupling(f: PairingKind, d: usize) -> Result<TuplingFunction, Error> {
    check_dim(d)?;
    if f == PairingKind::CantorPositive {
        return Err(Error::PositiveDomain);
    }
    Ok(TuplingFunction {
        dim: d,
        kind: Kind::Fold(f),
    })
}

/// Reorder the arguments of a tupling: the wrapped function reads its i-th
/// argument from position `perm[i]` of the caller's point. Positions are
/// zero-based; `perm` must be a permutation of 0..d.
pub fn permute_tupling(f: TuplingFunction, perm: &[usize]) -> Result<TuplingFunction, Error> {
    let d = f.dim();
    let mut seen = vec![false; d];
    let valid = perm.len() == d && perm.iter().all(|&i| i < d && !std::mem::replace(&mut seen[i], true));
    if !valid {
        return Err(Error::InvalidPermutation(perm.to_vec()));
    }
    Ok(TuplingFunction {
        dim: d,
        kind: Kind::Permuted(Box::new(f), perm.to_vec()),
    })
}

/// The counting recursion a(1) = 1, a(d) = Σ_{i | d, i ≠ 1} (i−1)!·a(d/i);
/// returns d!·a(d), a lower bound on the number of known degree-d
/// polynomial d-tupling functions.
pub fn morales_arredondo_bound(d: u64) -> Result<Nat, Error> {
    if d == 0 {
        return Err(Error::DimensionZero);
    }
    fn factorial(n: u64) -> Nat {
        (1..=n).map(Nat::from).product()
    }
    fn a(d: u64) -> Nat {
        if d == 1 {
            return Nat::one();
        }
        (2..=d)
            .filter(|i| d.is_multiple_of(*i))
            .map(|i| factorial(i - 1) * a(d / i))
            .sum()
    }
    Ok(factorial(d) * a(d))
}

/// A bijection ℕ^d ↔ ℕ as a value: a name, a dimension, encode/decode, and
/// optionally the standard shell numbering the function fills.
#[derive(Clone)]
pub struct TuplingFunction {
    dim: usize,
    kind: Kind,
}

#[derive(Clone)]
enum Kind {
    /// One of the five pairings, at dimension 2.
    Pairing(PairingKind),
    RosenbergStrong,
    Skolem,
    Chowla,
    Fold(PairingKind),
    Permuted(Box<TuplingFunction>, Vec<usize>),
    Custom(Arc<CustomTupling>),
}

type EncodeFn = Box<dyn Fn(&[Nat]) -> Result<Nat, Error> + Send + Sync>;
type DecodeFn = Box<dyn Fn(&Nat) -> Result<Vec<Nat>, Error> + Send + Sync>;

struct CustomTupling {
    name: String,
    encode: EncodeFn,
    decode: DecodeFn,
    standard_shell: Option<ShellNumbering>,
}

/// The Cantor pair as a 2-tupling.
pub fn cantor() -> TuplingFunction {
    TuplingFunction::from_pairing(PairingKind::Cantor)
}

/// The swapped Cantor pair as a 2-tupling.
pub fn cantor_swapped() -> TuplingFunction {
    TuplingFunction::from_pairing(PairingKind::CantorSwapped)
}

/// The positive-integer Cantor pair as a 2-tupling (coordinates ≥ 1).
pub fn cantor_positive() -> TuplingFunction {
    TuplingFunction::from_pairing(PairingKind::CantorPositive)
}

/// The dyadic pairing as a 2-tupling.
pub fn dyadic() -> TuplingFunction {
    TuplingFunction::from_pairing(PairingKind::Dyadic)
}

/// The Rosenberg–Strong d-tupling.
pub fn rosenberg_strong(d: usize) -> Result<TuplingFunction, Error> {
    check_dim(d)?;
    Ok(TuplingFunction {
        dim: d,
        kind: Kind::RosenbergStrong,
    })
}

/// The Skolem d-tupling.
pub fn skolem(d: usize) -> Result<TuplingFunction, Error> {
    check_dim(d)?;
    Ok(TuplingFunction {
        dim: d,
        kind: Kind::Skolem,
    })
}

/// The Chowla d-tupling.
pub fn chowla(d: usize) -> Result<TuplingFunction, Error> {
    check_dim(d)?;
    Ok(TuplingFunction {
        dim: d,
        kind: Kind::Chowla,
    })
}

impl TuplingFunction {
    /// Wrap a pairing as a 2-dimensional tupling.
    pub fn from_pairing(kind: PairingKind) -> Self {
        TuplingFunction {
            dim: 2,
            kind: Kind::Pairing(kind),
        }
    }

    /// A user-supplied tupling, subject to the same checks and usable with
    /// the same verification gates as the built-ins. `standard_shell`, when
    /// given, is the shell numbering the function claims to fill.
    pub fn custom(
        name: impl Into<String>,
        dim: usize,
        encode: impl Fn(&[Nat]) -> Result<Nat, Error> + Send + Sync + 'static,
        decode: impl Fn(&Nat) -> Result<Vec<Nat>, Error> + Send + Sync + 'static,
        standard_shell: Option<ShellNumbering>,
    ) -> Result<Self, Error> {
        check_dim(dim)?;
        Ok(TuplingFunction {
            dim,
            kind: Kind::Custom(Arc::new(CustomTupling {
                name: name.into(),
                encode: Box::new(encode),
                decode: Box::new(decode),
                standard_shell,
            })),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Selector-style name: `cantor`, `rs`, `skolem`, `fold-cantor`, ….
    pub fn name(&self) -> String {
        match &self.kind {
            Kind::Pairing(pk) => pk.name().to_string(),
            Kind::RosenbergStrong => "rs".to_string(),
            Kind::Skolem => "skolem".to_string(),
            Kind::Chowla => "chowla".to_string(),
            Kind::Fold(pk) => format!("fold-{}", pk.name()),
            Kind::Permuted(inner, perm) => format!("permute-{}-{perm:?}", inner.name()),
            Kind::Custom(c) => c.name.clone(),
        }
    }

    pub fn encode(&self, p: &[Nat]) -> Result<Nat, Error> {
        if p.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: p.len(),
            });
        }
        match &self.kind {
            Kind::Pairing(pk) => pk.encode(&p[0], &p[1]),
            Kind::RosenbergStrong => Ok(rs_encode_inner(p)),
            Kind::Skolem => Ok(skolem_encode_inner(p)),
            Kind::Chowla => Ok(chowla_encode_inner(p)),
            Kind::Fold(pk) => {
                let mut acc = p[0].clone();
                for x in &p[1..] {
                    acc = pk.encode(&acc, x)?;
                }
                Ok(acc)
            }
            Kind::Permuted(inner, perm) => {
                let q: Vec<Nat> = perm.iter().map(|&i| p[i].clone()).collect();
                inner.encode(&q)
            }
            Kind::Custom(c) => (c.encode)(p),
        }
    }

    pub fn decode(&self, z: &Nat) -> Result<Vec<Nat>, Error> {
        match &self.kind {
            Kind::Pairing(pk) => pk.decode(z).map(|(x, y)| vec![x, y]),
            Kind::RosenbergStrong => Ok(rs_decode_inner(z, self.dim)),
            Kind::Skolem => Ok(skolem_decode_inner(z, self.dim)),
            Kind::Chowla => chowla_decode_inner(z, self.dim),
            Kind::Fold(pk) => {
                let mut tail = Vec::with_capacity(self.dim);
                let mut acc = z.clone();
                for _ in 1..self.dim {
                    let (u, v) = pk.decode(&acc)?;
                    tail.push(v);
                    acc = u;
                }
                tail.push(acc);
                tail.reverse();
                Ok(tail)
            }
            Kind::Permuted(inner, perm) => {
                let v = inner.decode(z)?;
                let mut out = vec![Nat::zero(); self.dim];
                for (i, value) in v.into_iter().enumerate() {
                    out[perm[i]] = value;
                }
                Ok(out)
            }
            Kind::Custom(c) => (c.decode)(z),
        }
    }

    /// The shell numbering this function fills consecutively, when it has
    /// one: diagonal for the Cantor/Skolem/Chowla family, cubic for the
    /// Rosenberg–Strong family, the dyadic numbering for q. Folds have
    /// none; permutations inherit a numbering that is symmetric in its
    /// arguments (diagonal and cubic are, the dyadic one is not).
    pub fn standard_shell(&self) -> Option<ShellNumbering> {
        match &self.kind {
            Kind::Pairing(PairingKind::Cantor | PairingKind::CantorSwapped) => {
                Some(ShellNumbering::diagonal(2))
            }
            Kind::Pairing(PairingKind::RosenbergStrong) => Some(ShellNumbering::cubic(2)),
            Kind::Pairing(PairingKind::Dyadic) => Some(ShellNumbering::dyadic()),
            Kind::Pairing(PairingKind::CantorPositive) => None,
            Kind::RosenbergStrong => Some(ShellNumbering::cubic(self.dim)),
            Kind::Skolem | Kind::Chowla => Some(ShellNumbering::diagonal(self.dim)),
            Kind::Fold(_) => None,
            Kind::Permuted(inner, _) => inner.standard_shell().filter(|s| s.is_symmetric()),
            Kind::Custom(c) => c.standard_shell.clone(),
        }
    }
}

impl fmt::Debug for TuplingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TuplingFunction")
            .field("name", &self.name())
            .field("dim", &self.dim)
            .finish()
    }
}
