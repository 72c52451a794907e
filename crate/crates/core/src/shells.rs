//! Shell numberings and the executable checks built on them.
//!
//! A shell numbering for a tupling f is a map σ: ℕ^d → ℕ with
//! σ(x) < σ(y) ⇒ f(x) < f(y): it partitions ℕ^d into "shells" that f fills
//! one after another. Equivalently (on any decoded prefix), the sequence
//! σ(f⁻¹(0)), σ(f⁻¹(1)), … is non-decreasing — that is the form
//! [`check_shell_numbering_prefix`] tests. A numbering also pins each code
//! between cumulative shell sizes, |U_σ^{<n}| ≤ f(x) < |U_σ^{<n+1}| with
//! n = σ(x), which [`check_shell_inequality`] tests pointwise.
//!
//! The standard numberings are diagonal (coordinate sum; Cantor, Skolem,
//! Chowla), cubic (coordinate maximum; Rosenberg–Strong), and the dyadic
//! numbering y + 1 + digit_length(x, 2) of q. Constant maps are also valid
//! numberings, with infinitely large shells; [`Count`] keeps that case
//! honest.
//!
//! Two more predicates round out the toolkit: [`is_max_dominating_prefix`]
//! (max(x) ≤ f(x), the property the recursive enumerations in
//! [`crate::enums`] rely on) and [`check_digit_bound`] (codes of
//! cubic-shell tuplings stay within n·d digits when every coordinate has at
//! most n digits).

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::natmath::{self, Nat};
use crate::pairings;
use crate::tuplings::TuplingFunction;

/// A possibly infinite number of grid points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Count {
    Finite(Nat),
    Infinite,
}

/// Outcome of a check: pass, or fail with the first counterexample found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Counterexample),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

/// The first point at which a check failed, with enough context to replay
/// the failure by hand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    /// The offending point.
    pub point: Vec<Nat>,
    /// Its code under the function being checked.
    pub code: Nat,
    /// For order violations and mismatches: the point/code compared against.
    pub prior: Option<(Vec<Nat>, Nat)>,
    /// Human-readable statement of the violated bound.
    pub detail: String,
}

/// Tag identifying the flavor of a [`ShellNumbering`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShellKind {
    Diagonal,
    Cubic,
    Dyadic,
    Constant,
    Custom,
}

/// A total map σ: ℕ^d → ℕ, with the shell-size bookkeeping the checks need.
#[derive(Clone)]
pub struct ShellNumbering {
    dim: usize,
    repr: Repr,
}

#[derive(Clone)]
enum Repr {
    Diagonal,
    Cubic,
    Dyadic,
    Constant(Nat),
    Custom(Arc<CustomShell>),
}

type SigmaFn = Box<dyn Fn(&[Nat]) -> Nat + Send + Sync>;

/// Closed-form count of the points with shell index strictly below a level.
pub type CountFn = Box<dyn Fn(&Nat) -> Count + Send + Sync>;

struct CustomShell {
    sigma: SigmaFn,
    count_below: Option<CountFn>,
    /// Bounding box for counting by enumeration (inclusive per-axis maxima);
    /// the caller asserts every point with σ below any queried level lies
    /// inside it.
    enum_box: Option<Vec<u64>>,
}

impl ShellNumbering {
    /// σ(x) = x₁ + ⋯ + x_d, with |U^{<n}| = C(n+d−1, d).
    ///
    /// Panics if `dim` is zero.
    pub fn diagonal(dim: usize) -> Self {
        assert!(dim >= 1, "shell numberings need at least one dimension");
        ShellNumbering {
            dim,
            repr: Repr::Diagonal,
        }
    }

    /// σ(x) = max(x₁,…,x_d), with |U^{<n}| = n^d.
    ///
    /// Panics if `dim` is zero.
    pub fn cubic(dim: usize) -> Self {
        assert!(dim >= 1, "shell numberings need at least one dimension");
        ShellNumbering {
            dim,
            repr: Repr::Cubic,
        }
    }

    /// σ(x,y) = y + 1 + digit_length(x, 2), the shell numbering of the
    /// dyadic pairing; |U^{<n}| = 2^{n−1} − 1 for n ≥ 1.
    pub fn dyadic() -> Self {
        ShellNumbering {
            dim: 2,
            repr: Repr::Dyadic,
        }
    }

    /// σ(x) = k for every point: a single shell holding all of ℕ^d.
    ///
    /// Panics if `dim` is zero.
    pub fn constant(dim: usize, k: Nat) -> Self {
        assert!(dim >= 1, "shell numberings need at least one dimension");
        ShellNumbering {
            dim,
            repr: Repr::Constant(k),
        }
    }

    /// A user-supplied numbering. Counting needs either a closed-form
    /// `count_below` or an `enum_box` to enumerate within; with neither,
    /// [`Self::count_below`] reports [`Error::CountUnavailable`] rather
    /// than risking an unbounded search.
    ///
    /// Panics if `dim` is zero.
    pub fn custom(
        dim: usize,
        sigma: impl Fn(&[Nat]) -> Nat + Send + Sync + 'static,
        count_below: Option<CountFn>,
        enum_box: Option<Vec<u64>>,
    ) -> Self {
        assert!(dim >= 1, "shell numberings need at least one dimension");
        ShellNumbering {
            dim,
            repr: Repr::Custom(Arc::new(CustomShell {
                sigma: Box::new(sigma),
                count_below,
                enum_box,
            })),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> ShellKind {
        match &self.repr {
            Repr::Diagonal => ShellKind::Diagonal,
            Repr::Cubic => ShellKind::Cubic,
            Repr::Dyadic => ShellKind::Dyadic,
            Repr::Constant(_) => ShellKind::Constant,
            Repr::Custom(_) => ShellKind::Custom,
        }
    }

    /// Whether σ is invariant under permuting its arguments (true for the
    /// diagonal, cubic, and constant numberings; not assumed for the dyadic
    /// or custom ones).
    pub fn is_symmetric(&self) -> bool {
        matches!(self.repr, Repr::Diagonal | Repr::Cubic | Repr::Constant(_))
    }

    /// The shell number of a point.
    pub fn sigma(&self, p: &[Nat]) -> Result<Nat, Error> {
        if p.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: p.len(),
            });
        }
        Ok(match &self.repr {
            Repr::Diagonal => p.iter().sum(),
            Repr::Cubic => p.iter().max().expect("dim >= 1").clone(),
            Repr::Dyadic => pairings::dyadic_shell(&p[0], &p[1]),
            Repr::Constant(k) => k.clone(),
            Repr::Custom(c) => (c.sigma)(p),
        })
    }

    /// |U_σ^{<n}|: how many points have shell number below n.
    pub fn count_below(&self, n: &Nat) -> Result<Count, Error> {
        let d = self.dim as u64;
        Ok(match &self.repr {
            Repr::Diagonal => Count::Finite(natmath::binomial(&(n + (d - 1)), &Nat::from(d))),
            Repr::Cubic => Count::Finite(n.pow(self.dim as u32)),
            Repr::Dyadic => {
                if n.is_zero() {
                    Count::Finite(Nat::zero())
                } else {
                    let shift = u64::try_from(&(n - 1u32))
                        .map_err(|_| Error::Overflow("dyadic shell count"))?;
                    Count::Finite((Nat::one() << shift) - 1u32)
                }
            }
            // A constant numbering has one shell holding everything: levels
            // up to k exclude it (count 0), levels beyond include all of ℕ^d.
            Repr::Constant(k) => {
                if n <= k {
                    Count::Finite(Nat::zero())
                } else {
                    Count::Infinite
                }
            }
            Repr::Custom(c) => {
                if let Some(count) = &c.count_below {
                    count(n)
                } else if let Some(bounds) = &c.enum_box {
                    let mut total = Nat::zero();
                    let mut point = Vec::with_capacity(self.dim);
                    count_in_box(&c.sigma, bounds, n, &mut point, &mut total);
                    Count::Finite(total)
                } else {
                    return Err(Error::CountUnavailable);
                }
            }
        })
    }
}

fn count_in_box(
    sigma: &(dyn Fn(&[Nat]) -> Nat + Send + Sync),
    bounds: &[u64],
    n: &Nat,
    point: &mut Vec<Nat>,
    total: &mut Nat,
) {
    match bounds {
        [] => {
            if sigma(point) < *n {
                *total += 1u32;
            }
        }
        [first, rest @ ..] => {
            for v in 0..=*first {
                point.push(Nat::from(v));
                count_in_box(sigma, rest, n, point, total);
                point.pop();
            }
        }
    }
}

/// Prefix form of the shell-numbering property: σ(f⁻¹(0)), σ(f⁻¹(1)), …,
/// σ(f⁻¹(N−1)) must be non-decreasing. On failure, the counterexample
/// carries the first adjacent pair that decreases.
pub fn check_shell_numbering_prefix(
    f: &TuplingFunction,
    sigma: &ShellNumbering,
    n: u64,
) -> Result<Verdict, Error> {
    let mut prev: Option<(Vec<Nat>, Nat, Nat)> = None;
    for code in 0..n {
        let code = Nat::from(code);
        let point = f.decode(&code)?;
        let shell = sigma.sigma(&point)?;
        if let Some((prev_point, prev_code, prev_shell)) = prev {
            if shell < prev_shell {
                return Ok(Verdict::Fail(Counterexample {
                    detail: format!(
                        "shell number drops from {prev_shell} to {shell} between codes {prev_code} and {code}"
                    ),
                    point,
                    code,
                    prior: Some((prev_point, prev_code)),
                }));
            }
        }
        prev = Some((point, code, shell));
    }
    Ok(Verdict::Pass)
}

/// Counting check at chosen points: |U_σ^{<n}| ≤ f(x) < |U_σ^{<n+1}| with
/// n = σ(x). An infinite lower count fails the point; an infinite upper
/// count is vacuously satisfied.
pub fn check_shell_inequality(
    f: &TuplingFunction,
    sigma: &ShellNumbering,
    points: &[Vec<Nat>],
) -> Result<Verdict, Error> {
    for p in points {
        let code = f.encode(p)?;
        let shell = sigma.sigma(p)?;
        match sigma.count_below(&shell)? {
            Count::Finite(lower) => {
                if code < lower {
                    return Ok(Verdict::Fail(Counterexample {
                        point: p.clone(),
                        code,
                        prior: None,
                        detail: format!("code is below the {lower} points of earlier shells"),
                    }));
                }
            }
            Count::Infinite => {
                return Ok(Verdict::Fail(Counterexample {
                    point: p.clone(),
                    code,
                    prior: None,
                    detail: "infinitely many points occupy earlier shells".to_string(),
                }));
            }
        }
        if let Count::Finite(upper) = sigma.count_below(&(&shell + 1u32))? {
            if code >= upper {
                return Ok(Verdict::Fail(Counterexample {
                    point: p.clone(),
                    code,
                    prior: None,
                    detail: format!("code reaches past the {upper} points of its shell and before"),
                }));
            }
        }
    }
    Ok(Verdict::Pass)
}

/// Whether max(f⁻¹(z)) ≤ z for every z < N.
pub fn is_max_dominating_prefix(f: &TuplingFunction, n: u64) -> Result<Verdict, Error> {
    for code in 0..n {
        let code = Nat::from(code);
        let point = f.decode(&code)?;
        let max = point.iter().max().expect("dim >= 1");
        if *max > code {
            let detail = format!("decoded coordinate {max} exceeds the code {code}");
            return Ok(Verdict::Fail(Counterexample {
                point: point.clone(),
                code,
                prior: None,
                detail,
            }));
        }
    }
    Ok(Verdict::Pass)
}

/// Digit-length bound for cubic-shell tuplings: if every coordinate of a
/// point fits in n base-`base` digits, the code must fit in n·d digits.
///
/// The grid of all such points is scanned exhaustively when it has at most
/// 2¹⁶ points; beyond that, each axis is sampled at its boundary values
/// {0, 1, B/2, B−2, B−1} with B = base^n. Points are visited in colex order
/// (first coordinate fastest), so the counterexample for a failing function
/// is the first one in that order.
pub fn check_digit_bound(
    f: &TuplingFunction,
    base: u64,
    n: u64,
    d: usize,
) -> Result<Verdict, Error> {
    if base < 2 {
        return Err(Error::BaseTooSmall(base));
    }
    if f.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: f.dim(),
            got: d,
        });
    }
    let n_exp = u32::try_from(n).map_err(|_| Error::Overflow("digit count"))?;
    let d_exp = u32::try_from(d).map_err(|_| Error::Overflow("dimension"))?;
    let bound = n
        .checked_mul(d as u64)
        .ok_or(Error::Overflow("digit bound"))?;
    let b = Nat::from(base).pow(n_exp);
    let axis: Vec<Nat> = if b.pow(d_exp) <= Nat::from(1u32 << 16) {
        let limit = u64::try_from(&b).expect("grid already known to be small");
        (0..limit).map(Nat::from).collect()
    } else {
        let mut samples = vec![Nat::zero(), Nat::one(), &b >> 1, &b - 2u32, &b - 1u32];
        samples.sort();
        samples.dedup();
        samples
    };
    let mut idx = vec![0usize; d];
    loop {
        let point: Vec<Nat> = idx.iter().map(|&i| axis[i].clone()).collect();
        let code = f.encode(&point)?;
        let digits = natmath::digit_length(&code, base)?;
        if digits > bound {
            return Ok(Verdict::Fail(Counterexample {
                point,
                code,
                prior: None,
                detail: format!("code has {digits} base-{base} digits, exceeding the bound {bound}"),
            }));
        }
        let mut pos = 0;
        loop {
            if pos == d {
                return Ok(Verdict::Pass);
            }
            idx[pos] += 1;
            if idx[pos] < axis.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}
