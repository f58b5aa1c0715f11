//! Admissibility verification for the boundary-level highest weights.
//!
//! For each support `S` the affine highest weight is
//! `λ_S = k·Λ_0 + μ_S` with `k = -(l+1)/2`, realised here as an
//! [`AffineWeight`] with level `k`, finite part `μ_S`, and no `δ` shift.
//! Admissibility demands two things of the positive real roots
//! `α + mδ`:
//!
//! 1. **No violations.** `⟨λ_S + ρ̂, (α+mδ)^∨⟩` is never a nonpositive
//!    integer.  The pairing grows linearly in `m` with slope
//!    `k + h^∨ = (l+1)/2 > 0`, so for every finite `α` there is a largest
//!    `m` that could possibly violate; checking up to a cutoff at least
//!    that large is exhaustive.  [`check_admissible`] records the cutoff
//!    actually required so the caller can see the scan was complete.
//! 2. **Full rank.** The coroots of the integer-paired roots (those with
//!    `⟨λ_S, (α+mδ)^∨⟩ ∈ Z`) must span a lattice of rank `l+1` in
//!    coordinates `(α_1^∨, ..., α_l^∨, c)`.
//!
//! For the distinguished weight `λ_∅` (zero finite part), [`pi_check`]
//! additionally computes the minimal elements of the integer-paired
//! positive system — expected to be the simple coroots together with
//! `(2δ-θ)^∨` — and confirms each pairs to `1` against `λ_∅ + ρ̂`.

use alloc::vec::Vec;

use num_traits::{ToPrimitive, Zero};

use crate::affine_lie::{
    affine_pairing, enumerate_positive_real_roots, rho_hat, AffineWeight, RealRoot,
};
use crate::boundary_level;
use crate::check_rank;
use crate::classification::{mu_S, SupportSet};
use crate::error::Error;
use crate::linalg::{dense_row, RowSpace};
use crate::rational::{is_nonpositive_integer, Rat};
use crate::root_system::{all_roots, highest_root, pairing, RootIndex};

/// The affine highest weight attached to a support:
/// level `-(l+1)/2`, finite part `μ_S`, no `δ` shift.
#[allow(non_snake_case)]
pub fn lambda_S(l: usize, s: &SupportSet) -> Result<AffineWeight, Error> {
    if s.rank() != l {
        return Err(Error::RankMismatch { a: s.rank(), b: l });
    }
    Ok(AffineWeight::new(boundary_level(l), mu_S(l, s)?, Rat::zero()))
}

/// Everything [`check_admissible`] verified for one support.
#[derive(Clone, Debug)]
pub struct AdmissibilityReport {
    pub l: usize,
    pub support: SupportSet,
    /// Scan cutoff: all positive real roots with `m <= max_m` were checked.
    pub max_m: i64,
    /// Roots whose shifted pairing is a nonpositive integer (expected none).
    pub violations: Vec<RealRoot>,
    /// Number of scanned roots with integral unshifted pairing.
    pub integer_paired_count: usize,
    /// Rank of the span of the integer-paired coroots (expected `l+1`).
    pub integer_paired_rank: usize,
    /// Growth rate of every shifted pairing in `m`: `(l+1)/2`.
    pub slope: Rat,
    /// Largest `m` any finite root could still pair nonpositively at;
    /// `-1` when no root can.  The scan is exhaustive iff this does not
    /// exceed `max_m`.
    pub required_m: i64,
    pub certificate_covers_cutoff: bool,
    pub verdict: bool,
}

/// Scans all positive real roots up to `max_m` for one support and checks
/// both admissibility conditions, plus the completeness certificate.
pub fn check_admissible(
    l: usize,
    s: &SupportSet,
    max_m: i64,
) -> Result<AdmissibilityReport, Error> {
    check_rank(l)?;
    let lambda = lambda_S(l, s)?;
    let shifted = lambda.add(&rho_hat(l)?)?;
    let slope = shifted.level().clone();

    let mut violations = Vec::new();
    let mut integer_paired_count = 0usize;
    let mut span: RowSpace<usize> = RowSpace::new();
    for r in enumerate_positive_real_roots(l, max_m)? {
        let shifted_pairing = affine_pairing(&shifted, &r);
        if is_nonpositive_integer(&shifted_pairing) {
            violations.push(r);
        }
        if affine_pairing(&lambda, &r).is_integer() {
            integer_paired_count += 1;
            span.insert(dense_row(&r.coroot_coords(l)?));
        }
    }

    // The shifted pairing at `α + mδ` is `⟨λ̄+ρ̄, α^∨⟩ + m·slope`; with
    // positive slope it can only be nonpositive for
    // `m <= floor(-base/slope)`.  Take the worst case over all finite α.
    let mut required_m: i64 = -1;
    for alpha in all_roots(l)? {
        let base = pairing(shifted.finite(), alpha);
        let need = (-base / &slope).floor().to_integer().to_i64().unwrap_or(i64::MAX);
        required_m = required_m.max(need);
    }
    let certificate_covers_cutoff = required_m <= max_m;

    let verdict = violations.is_empty()
        && span.rank() == l + 1
        && certificate_covers_cutoff;

    Ok(AdmissibilityReport {
        l,
        support: s.clone(),
        max_m,
        violations,
        integer_paired_count,
        integer_paired_rank: span.rank(),
        slope,
        required_m,
        certificate_covers_cutoff,
        verdict,
    })
}

/// Runs [`check_admissible`] over all `2^l` supports in bitmask order.
pub fn check_all_supports(l: usize, max_m: i64) -> Result<Vec<AdmissibilityReport>, Error> {
    crate::classification::enumerate_supports(l)?
        .iter()
        .map(|s| check_admissible(l, s, max_m))
        .collect()
}

/// Witness coroots certifying that `λ_S` pairs integrally against a
/// full-rank family, with their unshifted pairings:
///
/// - `(δ - α_i)^∨` for each `i` in the support,
/// - the interval coroot `α_{i_j}^∨ + ... + α_{i_{j+1}}^∨` for consecutive
///   support elements (their half-odd parts cancel),
/// - `α_i^∨` for each `i` outside the support.
pub fn witness_coroots(l: usize, s: &SupportSet) -> Result<Vec<(RealRoot, Rat)>, Error> {
    let lambda = lambda_S(l, s)?;
    let mut out = Vec::new();
    for &i in s.elements() {
        let alpha = RootIndex::new(l, i + 1, i)?;
        let r = RealRoot::new(l, alpha, 1)?;
        let p = affine_pairing(&lambda, &r);
        out.push((r, p));
    }
    let els = s.elements();
    for t in 1..els.len() {
        let alpha = RootIndex::new(l, els[t - 1], els[t] + 1)?;
        let r = RealRoot::new(l, alpha, 0)?;
        let p = affine_pairing(&lambda, &r);
        out.push((r, p));
    }
    for i in 1..=l {
        if !s.contains(i) {
            let alpha = RootIndex::new(l, i, i + 1)?;
            let r = RealRoot::new(l, alpha, 0)?;
            let p = affine_pairing(&lambda, &r);
            out.push((r, p));
        }
    }
    Ok(out)
}

/// Integer coordinates of `α^∨` over the simple coroots: `±1` on the
/// interval of the root.
fn finite_coroot_vec(l: usize, alpha: RootIndex) -> Vec<i64> {
    let (lo, hi, sign) = if alpha.is_positive() {
        (alpha.i, alpha.j, 1)
    } else {
        (alpha.j, alpha.i, -1)
    };
    (1..=l)
        .map(|p| if lo <= p && p < hi { sign } else { 0 })
        .collect()
}

/// Parts available to a decomposition: coroots of integer-paired positive
/// real roots with even `m >= 2`, `-θ^∨ + 2c` first so the common
/// decomposition is found immediately.
fn decomposition_parts(l: usize, max_m: i64) -> Result<Vec<(i64, Vec<i64>)>, Error> {
    let theta = highest_root(l)?;
    let mut parts = Vec::new();
    let mut m = 2;
    while m <= max_m {
        parts.push((m, finite_coroot_vec(l, theta.negated())));
        for alpha in all_roots(l)? {
            if alpha != theta.negated() {
                parts.push((m, finite_coroot_vec(l, alpha)));
            }
        }
        m += 2;
    }
    Ok(parts)
}

/// Depth-first search for a decomposition of `(v, m)` into at least two
/// integer-paired coroots.  Parts with `m = 0` are handled implicitly: any
/// coordinatewise-nonnegative remainder is a sum of simple coroots, each of
/// which is integer-paired.  Parts are chosen in non-decreasing index order
/// so multisets are enumerated once.
fn decomposable_from(
    v: &[i64],
    m: i64,
    parts_used: usize,
    parts: &[(i64, Vec<i64>)],
    start: usize,
) -> bool {
    if m == 0 {
        if v.iter().any(|&c| c < 0) {
            return false;
        }
        let simple_parts: i64 = v.iter().sum();
        return parts_used as i64 + simple_parts >= 2;
    }
    // Every remaining part raises a coordinate by at most 1 and costs at
    // least 2 from `m`, so deeply negative coordinates are unreachable.
    if v.iter().any(|&c| c < -(m / 2)) {
        return false;
    }
    for t in start..parts.len() {
        let (n, w) = &parts[t];
        if *n > m {
            continue;
        }
        let rest: Vec<i64> = v.iter().zip(w).map(|(a, b)| a - b).collect();
        if decomposable_from(&rest, m - n, parts_used + 1, parts, t) {
            return true;
        }
    }
    false
}

/// Whether an integer-paired positive real root is a sum of two or more
/// integer-paired positive real coroots (for `λ_∅`, whose integer-paired
/// set is exactly the even-`m` layer).
fn is_decomposable(l: usize, r: &RealRoot, parts: &[(i64, Vec<i64>)]) -> bool {
    let v = finite_coroot_vec(l, r.alpha);
    if r.m == 0 {
        // Positive finite coroots decompose into simples iff height >= 2.
        return v.iter().sum::<i64>() >= 2;
    }
    decomposable_from(&v, r.m, 0, parts, 0)
}

/// Outcome of the minimal-system check for `λ_∅`.
#[derive(Clone, Debug)]
pub struct PiCheckReport {
    pub l: usize,
    pub max_m: i64,
    /// Integer-paired positive real roots up to the cutoff (the even-`m`
    /// layers), in scan order.
    pub integer_paired: Vec<RealRoot>,
    /// Its minimal elements, sorted.
    pub minimal: Vec<RealRoot>,
    /// The expected minimal system: `α_1, ..., α_l` and `2δ - θ`, sorted.
    pub expected: Vec<RealRoot>,
    pub matches: bool,
    /// `⟨λ_∅ + ρ̂, ·^∨⟩` on each minimal element, expected to be `1`.
    pub shifted_pairings: Vec<(RealRoot, Rat)>,
    pub all_shifted_pairings_one: bool,
}

/// Computes the minimal elements of the integer-paired positive system of
/// `λ_∅` up to `max_m` and compares with the expected simple system.
pub fn pi_check(l: usize, max_m: i64) -> Result<PiCheckReport, Error> {
    check_rank(l)?;
    let s = SupportSet::empty(l)?;
    let lambda = lambda_S(l, &s)?;
    let shifted = lambda.add(&rho_hat(l)?)?;

    let mut integer_paired = Vec::new();
    for r in enumerate_positive_real_roots(l, max_m)? {
        if affine_pairing(&lambda, &r).is_integer() {
            integer_paired.push(r);
        }
    }

    let parts = decomposition_parts(l, max_m)?;
    let mut minimal: Vec<RealRoot> = integer_paired
        .iter()
        .filter(|r| !is_decomposable(l, r, &parts))
        .copied()
        .collect();
    minimal.sort();

    let theta = highest_root(l)?;
    let mut expected = Vec::with_capacity(l + 1);
    for p in 1..=l {
        expected.push(RealRoot::new(l, RootIndex::new(l, p, p + 1)?, 0)?);
    }
    if max_m >= 2 {
        expected.push(RealRoot::new(l, theta.negated(), 2)?);
    }
    expected.sort();

    let matches = minimal == expected;
    let shifted_pairings: Vec<(RealRoot, Rat)> = minimal
        .iter()
        .map(|r| (*r, affine_pairing(&shifted, r)))
        .collect();
    let one = crate::rational::rat(1);
    let all_one = shifted_pairings.iter().all(|(_, p)| *p == one);

    Ok(PiCheckReport {
        l,
        max_m,
        integer_paired,
        minimal,
        expected,
        matches,
        shifted_pairings,
        all_shifted_pairings_one: all_one,
    })
}
