//! Deliberately naive cross-checks for the closed-form machinery.
//!
//! [`build_table`] evaluates a tupling on every point of a bounding box and
//! sorts the results by code. That exhaustive table is an independent
//! witness: duplicate codes falsify injectivity on the spot, a contiguous
//! run of codes 0..=K certifies surjectivity on that prefix, and
//! [`table_inverse`] is a ground-truth decoder that [`crosscheck`] compares
//! against the closed-form inverse, code by code.
//!
//! For a max-dominating function, any preimage of a code z ≤ box_max lies
//! inside the box with coordinates ≤ box_max, so the table's sound prefix K
//! is at least box_max — which is what makes the witness trustworthy rather
//! than merely optimistic.
//!
//! The module ships in the library (not only in tests) so the `verify`
//! command can run the same gates, including over user-supplied tuplings.

use crate::error::Error;
use crate::natmath::Nat;
use crate::shells::{Counterexample, Verdict};
use crate::tuplings::TuplingFunction;

/// Keep exhaustive tables at desk scale; boxes are chosen well below this.
const MAX_TABLE_ENTRIES: u64 = 10_000_000;

/// An exhaustive (point, code) table over a bounding box, sorted by code.
#[derive(Clone, Debug)]
pub struct CodeTable {
    dim: usize,
    /// (code, point), strictly increasing in code.
    entries: Vec<(Nat, Vec<Nat>)>,
    /// Largest K such that every code in 0..=K appears; `None` when even 0
    /// is absent.
    sound_prefix: Option<u64>,
}

impl CodeTable {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest K with codes 0..=K all present (the certified-surjective
    /// prefix), or `None` if code 0 is missing.
    pub fn sound_prefix(&self) -> Option<u64> {
        self.sound_prefix
    }

    /// The (code, point) pairs in increasing code order.
    pub fn entries(&self) -> &[(Nat, Vec<Nat>)] {
        &self.entries
    }

    /// Ground-truth decode by table lookup.
    pub fn inverse(&self, z: &Nat) -> Result<&[Nat], Error> {
        self.entries
            .binary_search_by(|(code, _)| code.cmp(z))
            .map(|i| self.entries[i].1.as_slice())
            .map_err(|_| Error::CodeNotInTable { code: z.clone() })
    }
}

/// Exhaustive table over the cube of points with all coordinates ≤ box_max.
pub fn build_table(f: &TuplingFunction, box_max: u64) -> Result<CodeTable, Error> {
    build_table_box(f, &vec![box_max; f.dim()])
}

/// Exhaustive table over a rectangular box (inclusive per-axis maxima).
pub fn build_table_box(f: &TuplingFunction, bounds: &[u64]) -> Result<CodeTable, Error> {
    if bounds.len() != f.dim() {
        return Err(Error::DimensionMismatch {
            expected: f.dim(),
            got: bounds.len(),
        });
    }
    let mut total: u64 = 1;
    for &bound in bounds {
        total = bound
            .checked_add(1)
            .and_then(|axis| total.checked_mul(axis))
            .filter(|&t| t <= MAX_TABLE_ENTRIES)
            .ok_or(Error::Overflow("oracle table size"))?;
    }
    let mut entries: Vec<(Nat, Vec<Nat>)> = Vec::with_capacity(total as usize);
    let mut point: Vec<u64> = vec![0; bounds.len()];
    'grid: loop {
        let p: Vec<Nat> = point.iter().copied().map(Nat::from).collect();
        let code = f.encode(&p)?;
        entries.push((code, p));
        let mut pos = 0;
        loop {
            if pos == bounds.len() {
                break 'grid;
            }
            if point[pos] < bounds[pos] {
                point[pos] += 1;
                break;
            }
            point[pos] = 0;
            pos += 1;
        }
    }
    // Stable sort: ties (if any) stay in scan order for the error report.
    entries.sort_by(|a, b| a.0.cmp(&b.0));
    for pair in entries.windows(2) {
        if pair[0].0 == pair[1].0 {
            return Err(Error::BijectivityViolation {
                code: pair[0].0.clone(),
                first: pair[0].1.clone(),
                second: pair[1].1.clone(),
            });
        }
    }
    let mut sound_prefix = None;
    for (i, (code, _)) in entries.iter().enumerate() {
        if *code == Nat::from(i as u64) {
            sound_prefix = Some(i as u64);
        } else {
            break;
        }
    }
    Ok(CodeTable {
        dim: f.dim(),
        entries,
        sound_prefix,
    })
}

/// Ground-truth decode by table lookup; errors on a code outside the table.
pub fn table_inverse<'t>(table: &'t CodeTable, z: &Nat) -> Result<&'t [Nat], Error> {
    table.inverse(z)
}

/// Compare the closed-form decode against the exhaustive table for every
/// code z ≤ prefix, and require encode to invert each decode. The prefix
/// must not exceed the table's certified-surjective prefix.
pub fn crosscheck(f: &TuplingFunction, box_max: u64, prefix: u64) -> Result<Verdict, Error> {
    crosscheck_box(f, &vec![box_max; f.dim()], prefix)
}

/// [`crosscheck`] over a rectangular box.
pub fn crosscheck_box(
    f: &TuplingFunction,
    bounds: &[u64],
    prefix: u64,
) -> Result<Verdict, Error> {
    let table = build_table_box(f, bounds)?;
    match table.sound_prefix() {
        Some(k) if prefix <= k => {}
        sound => return Err(Error::UnsoundPrefix { prefix, sound }),
    }
    for z in 0..=prefix {
        let z = Nat::from(z);
        let expected = table.inverse(&z)?;
        let decoded = f.decode(&z)?;
        if decoded != expected {
            return Ok(Verdict::Fail(Counterexample {
                point: decoded,
                code: z.clone(),
                prior: Some((expected.to_vec(), z)),
                detail: "decode disagrees with the exhaustive table".to_string(),
            }));
        }
        let round = f.encode(&decoded)?;
        if round != z {
            return Ok(Verdict::Fail(Counterexample {
                detail: format!("encode(decode({z})) = {round}"),
                point: decoded,
                code: z,
                prior: None,
            }));
        }
    }
    Ok(Verdict::Pass)
}
