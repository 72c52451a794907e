//! The property suite behind `natcode verify`.
//!
//! Every check scales with a single `limit` parameter (a code/rank prefix
//! length), so `limit = 0` is vacuous and larger limits buy more assurance
//! for more time. The suite is deterministic: same limit, same reports in
//! the same order.

use std::collections::HashSet;

use num_traits::Zero;

use crate::enums::{self, TreeEnumeration, TuplingFamily};
use crate::error::Error;
use crate::natmath::{self, Nat};
use crate::oracle;
use crate::pairings::{self, PairingKind};
use crate::shells::{self, Counterexample, Verdict};
use crate::tuplings::{self, TuplingFunction};

/// One line of `verify` output.
#[derive(Clone, Debug)]
pub struct PropertyReport {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// The gate a single tupling has to clear: decode the whole code prefix,
/// re-encode each point, keep its standard shell numbering (when it has
/// one) non-decreasing, and agree with an exhaustive oracle table built
/// over the bounding box of everything the prefix decoded to.
pub fn verify_tupling(f: &TuplingFunction, limit: u64) -> Result<Verdict, Error> {
    let mut bounds: Vec<u64> = vec![0; f.dim()];
    for z in 0..limit {
        let z = Nat::from(z);
        let point = f.decode(&z)?;
        let round = f.encode(&point)?;
        if round != z {
            return Ok(Verdict::Fail(Counterexample {
                detail: format!("encode(decode({z})) = {round}"),
                point,
                code: z,
                prior: None,
            }));
        }
        for (bound, coord) in bounds.iter_mut().zip(&point) {
            let coord = u64::try_from(coord).map_err(|_| Error::Overflow("oracle box"))?;
            *bound = (*bound).max(coord);
        }
    }
    if let Some(sigma) = f.standard_shell() {
        let verdict = shells::check_shell_numbering_prefix(f, &sigma, limit)?;
        if !verdict.is_pass() {
            return Ok(verdict);
        }
    }
    if limit > 0 {
        let verdict = oracle::crosscheck_box(f, &bounds, limit - 1)?;
        if !verdict.is_pass() {
            return Ok(verdict);
        }
    }
    Ok(Verdict::Pass)
}

/// Run everything; one report per property, deterministic order.
pub fn run_suite(limit: u64) -> Vec<PropertyReport> {
    let mut out = Vec::new();
    let builtins = builtin_suite();
    for f in &builtins {
        out.push(report(
            format!("bijection: {}", label(f)),
            verify_tupling(f, limit),
        ));
    }
    for f in &builtins {
        out.push(report(
            format!("max-dominating: {}", label(f)),
            shells::is_max_dominating_prefix(f, limit),
        ));
    }
    for f in &builtins {
        if let Some(sigma) = f.standard_shell() {
            let points = cube(grid_side(f.dim(), limit), f.dim());
            out.push(report(
                format!("shell counting: {}", label(f)),
                shells::check_shell_inequality(f, &sigma, &points),
            ));
        }
    }
    if limit > 0 {
        let r2 = tuplings::rosenberg_strong(2).expect("dimension is positive");
        let r3 = tuplings::rosenberg_strong(3).expect("dimension is positive");
        out.push(report(
            "digit bound: rs/2 base 2".to_string(),
            shells::check_digit_bound(&r2, 2, 2, 2),
        ));
        out.push(report(
            "digit bound: rs/3 base 2".to_string(),
            shells::check_digit_bound(&r3, 2, 1, 3),
        ));
        out.push(report(
            "digit bound: rs/2 base 10".to_string(),
            shells::check_digit_bound(&r2, 10, 1, 2),
        ));
    }
    for kind in TREE_PAIRINGS {
        out.push(report(
            format!("tree rank/unrank: {}", kind.name()),
            tree_round_trip(kind, limit),
        ));
    }
    out.push(report(
        "tree heights non-decreasing: rs".to_string(),
        rs_heights_monotone(limit),
    ));
    out.push(report(
        "defoliation stays injective".to_string(),
        defoliation_distinct(limit),
    ));
    for kind in [PairingKind::Cantor, PairingKind::RosenbergStrong] {
        out.push(report(
            format!("sequence xi round-trip: {}", kind.name()),
            xi_round_trip(kind, limit),
        ));
    }
    for family in [TuplingFamily::RosenbergStrong, TuplingFamily::FoldCantor] {
        out.push(report(
            format!("sequence zeta round-trip: {}", family.name()),
            zeta_round_trip(family, limit),
        ));
    }
    out.push(report(
        "integer root inverts powers".to_string(),
        iroot_sweep(limit),
    ));
    out.push(report(
        "degree-2 agreement: skolem/chowla/cantor".to_string(),
        degree_two_agreement(limit),
    ));
    if limit > 0 {
        out.push(report("sequence tupling bounds".to_string(), morales_bounds()));
    }
    out
}

const TREE_PAIRINGS: [PairingKind; 4] = [
    PairingKind::Cantor,
    PairingKind::CantorSwapped,
    PairingKind::RosenbergStrong,
    PairingKind::Dyadic,
];

fn builtin_suite() -> Vec<TuplingFunction> {
    let dim = |f: Result<TuplingFunction, Error>| f.expect("dimension is positive");
    vec![
        tuplings::cantor(),
        tuplings::cantor_swapped(),
        dim(tuplings::rosenberg_strong(2)),
        tuplings::dyadic(),
        dim(tuplings::rosenberg_strong(3)),
        dim(tuplings::rosenberg_strong(4)),
        dim(tuplings::skolem(3)),
        dim(tuplings::skolem(4)),
        dim(tuplings::chowla(3)),
        dim(tuplings::fold_tupling(PairingKind::Cantor, 3)),
    ]
}

fn label(f: &TuplingFunction) -> String {
    format!("{}/{}", f.name(), f.dim())
}

fn report(name: String, outcome: Result<Verdict, Error>) -> PropertyReport {
    let (passed, detail) = match outcome {
        Ok(Verdict::Pass) => (true, "ok".to_string()),
        Ok(Verdict::Fail(ce)) => (false, format!("code {}: {}", ce.code, ce.detail)),
        Err(e) => (false, e.to_string()),
    };
    PropertyReport {
        name,
        passed,
        detail,
    }
}

fn fail(code: Nat, detail: String) -> Result<Verdict, Error> {
    Ok(Verdict::Fail(Counterexample {
        point: Vec::new(),
        code,
        prior: None,
        detail,
    }))
}

/// Side length for the shell-counting grids, shrunk with dimension to keep
/// the point count desk-scale, and capped by the limit so 0 stays vacuous.
fn grid_side(dim: usize, limit: u64) -> u64 {
    let side = match dim {
        0..=2 => 20,
        3 => 8,
        _ => 5,
    };
    side.min(limit)
}

fn cube(side: u64, dim: usize) -> Vec<Vec<Nat>> {
    let mut out = Vec::new();
    if side == 0 {
        return out;
    }
    let mut point = vec![0u64; dim];
    'grid: loop {
        out.push(point.iter().copied().map(Nat::from).collect());
        let mut pos = 0;
        loop {
            if pos == dim {
                break 'grid;
            }
            point[pos] += 1;
            if point[pos] < side {
                break;
            }
            point[pos] = 0;
            pos += 1;
        }
    }
    out
}

fn tree_round_trip(kind: PairingKind, limit: u64) -> Result<Verdict, Error> {
    let trees = TreeEnumeration::new(kind)?;
    for n in 0..limit {
        let n = Nat::from(n);
        let tree = trees.unrank(&n)?;
        let back = trees.rank(&tree);
        if back != n {
            return fail(n, format!("tree {tree} ranks back to {back}"));
        }
    }
    Ok(Verdict::Pass)
}

fn rs_heights_monotone(limit: u64) -> Result<Verdict, Error> {
    let trees = TreeEnumeration::new(PairingKind::RosenbergStrong)?;
    let mut prev = Nat::zero();
    for n in 0..limit {
        let n = Nat::from(n);
        let height = enums::tree_height(trees.unrank(&n)?.as_ref());
        if height < prev {
            return fail(n, format!("height drops from {prev} to {height}"));
        }
        prev = height;
    }
    Ok(Verdict::Pass)
}

fn defoliation_distinct(limit: u64) -> Result<Verdict, Error> {
    let mut seen = HashSet::new();
    for n in 0..limit {
        let n = Nat::from(n);
        let tree = enums::all_trees_unrank(&n, PairingKind::RosenbergStrong)?;
        if !seen.insert(tree) {
            return fail(n, "defoliated tree repeats an earlier rank".to_string());
        }
    }
    Ok(Verdict::Pass)
}

fn xi_round_trip(kind: PairingKind, limit: u64) -> Result<Verdict, Error> {
    for n in 0..limit {
        let n = Nat::from(n);
        let seq = enums::seq_unrank_xi(&n, kind)?;
        let back = enums::seq_rank_xi(&seq, kind)?;
        if back != n {
            return fail(n, format!("sequence of length {} ranks back to {back}", seq.len()));
        }
    }
    Ok(Verdict::Pass)
}

fn zeta_round_trip(family: TuplingFamily, limit: u64) -> Result<Verdict, Error> {
    let kind = PairingKind::RosenbergStrong;
    for n in 0..limit {
        let n = Nat::from(n);
        let seq = enums::seq_unrank_zeta(&n, kind, family)?;
        let back = enums::seq_rank_zeta(&seq, kind, family)?;
        if back != n {
            return fail(n, format!("sequence of length {} ranks back to {back}", seq.len()));
        }
    }
    Ok(Verdict::Pass)
}

fn iroot_sweep(limit: u64) -> Result<Verdict, Error> {
    for z in 0..limit.min(2_000) {
        let z = Nat::from(z);
        for d in 1..=5u32 {
            let root = natmath::iroot(&z, d)?;
            if root.pow(d) > z || (&root + 1u32).pow(d) <= z {
                return fail(z.clone(), format!("iroot(·, {d}) = {root}"));
            }
        }
    }
    Ok(Verdict::Pass)
}

fn degree_two_agreement(limit: u64) -> Result<Verdict, Error> {
    let s2 = tuplings::skolem(2)?;
    let chi2 = tuplings::chowla(2)?;
    let side = limit.min(40);
    for x in 0..side {
        for y in 0..side {
            let (x, y) = (Nat::from(x), Nat::from(y));
            let expected = pairings::cantor(&x, &y);
            let point = [x, y];
            if s2.encode(&point)? != expected || chi2.encode(&point)? != expected {
                return fail(expected, format!("disagreement at {point:?}"));
            }
        }
    }
    Ok(Verdict::Pass)
}

fn morales_bounds() -> Result<Verdict, Error> {
    for (d, expected) in [(1u64, 1u64), (2, 2), (3, 12), (4, 168)] {
        let got = tuplings::morales_arredondo_bound(d)?;
        if got != Nat::from(expected) {
            return fail(got, format!("bound for d = {d} should be {expected}"));
        }
    }
    Ok(Verdict::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_at_a_modest_limit() {
        for report in run_suite(300) {
            assert!(report.passed, "{}: {}", report.name, report.detail);
        }
    }

    #[test]
    fn limit_zero_is_vacuous() {
        let reports = run_suite(0);
        assert!(!reports.is_empty());
        for report in reports {
            assert!(report.passed, "{}: {}", report.name, report.detail);
        }
    }

    #[test]
    fn report_order_is_stable_across_limits() {
        let at = |limit| {
            run_suite(limit)
                .into_iter()
                .map(|r| r.name)
                .collect::<Vec<_>>()
        };
        // Limit 0 drops the constant-scale checks but keeps the rest in order.
        let small = at(0);
        let large = at(7);
        let mut large_iter = large.iter();
        for name in &small {
            assert!(large_iter.any(|n| n == name), "{name} missing or reordered");
        }
    }

    #[test]
    fn shifted_encode_fails_the_gate() {
        let shifted = TuplingFunction::custom(
            "shifted-square-shell",
            2,
            |p| Ok(tuplings::rs_encode(p, 2)? + 1u32),
            |z| tuplings::rs_decode(z, 2),
            None,
        )
        .unwrap();
        let verdict = verify_tupling(&shifted, 50).unwrap();
        assert!(!verdict.is_pass());
    }

    #[test]
    fn false_shell_claim_fails_the_gate() {
        let claims_cubic = TuplingFunction::custom(
            "triangle-with-square-shells",
            2,
            |p| Ok(pairings::cantor(&p[0], &p[1])),
            |z| {
                let (x, y) = pairings::cantor_inverse(z);
                Ok(vec![x, y])
            },
            Some(crate::shells::ShellNumbering::cubic(2)),
        )
        .unwrap();
        let verdict = verify_tupling(&claims_cubic, 50).unwrap();
        assert!(!verdict.is_pass());
    }
}
