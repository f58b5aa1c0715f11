//! Classification of the simultaneous zeros of the zero-weight polynomials.
//!
//! Each polynomial factors as `p_i = h_i · (linear form)`, so a common zero
//! is indexed by its support `S ⊆ {1, ..., l}`: the set of `i` with
//! `h_i ≠ 0`.  For every one of the `2^l` supports the induced linear
//! system has a unique solution `μ_S`, whose fundamental coordinates on the
//! support are half-odd integers (hence nonzero), and off the support are
//! zero.  [`solve_system`] recovers all of them from the polynomials alone
//! by exact elimination, [`mu_S`] produces the closed form, and
//! [`verify_classification`] checks that the two agree, that the solutions
//! are pairwise distinct, and that the zero weight is the unique dominant
//! integral one.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::check_rank;
use crate::enveloping::CartanPolynomial;
use crate::error::Error;
use crate::rational::{perfect_sqrt, rat, ratio, sign_pow, Rat};
use crate::root_system::Weight;

/// A subset of `{1, ..., l}`, stored sorted.  Enumeration order is by
/// bitmask (bit `p-1` set iff `p` is in the set), which makes reports
/// deterministic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SupportSet {
    l: usize,
    elements: Vec<usize>,
}

impl SupportSet {
    pub fn new(l: usize, mut elements: Vec<usize>) -> Result<Self, Error> {
        check_rank(l)?;
        elements.sort_unstable();
        for (t, &p) in elements.iter().enumerate() {
            if p == 0 || p > l {
                return Err(Error::BadSupport { element: p, l });
            }
            if t > 0 && elements[t - 1] == p {
                return Err(Error::BadSupport { element: p, l });
            }
        }
        Ok(SupportSet { l, elements })
    }

    pub fn empty(l: usize) -> Result<Self, Error> {
        SupportSet::new(l, Vec::new())
    }

    pub fn from_bitmask(l: usize, mask: u64) -> Result<Self, Error> {
        check_rank(l)?;
        if l < 64 && mask >= (1u64 << l) {
            return Err(Error::BadSupport { element: mask as usize, l });
        }
        let elements = (1..=l).filter(|p| mask & (1 << (p - 1)) != 0).collect();
        SupportSet::new(l, elements)
    }

    pub fn bitmask(&self) -> u64 {
        self.elements.iter().map(|p| 1u64 << (p - 1)).sum()
    }

    pub fn rank(&self) -> usize {
        self.l
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, p: usize) -> bool {
        self.elements.binary_search(&p).is_ok()
    }
}

impl core::fmt::Display for SupportSet {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{{")?;
        for (t, p) in self.elements.iter().enumerate() {
            if t > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// All `2^l` supports in bitmask order.
pub fn enumerate_supports(l: usize) -> Result<Vec<SupportSet>, Error> {
    check_rank(l)?;
    if l >= 63 {
        return Err(Error::BadRank { l });
    }
    (0..(1u64 << l)).map(|m| SupportSet::from_bitmask(l, m)).collect()
}

/// The closed-form solution attached to a support `S = {i_1 < ... < i_k}`:
/// the weight `Σ_j c_j ω_{i_j}` with
/// `c_j = Σ_{s>j} (-1)^{s-j} i_s + Σ_{s<j} (-1)^{j-s+1} i_s
///        + (-1)^{k-j+1} (l+1)/2`.
#[allow(non_snake_case)]
pub fn mu_S(l: usize, s: &SupportSet) -> Result<Weight, Error> {
    if s.rank() != l {
        return Err(Error::RankMismatch { a: s.rank(), b: l });
    }
    let els = s.elements();
    let k = els.len();
    let mut coords = alloc::vec![Rat::zero(); l];
    for (jz, &ij) in els.iter().enumerate() {
        let j = jz + 1;
        let mut c = Rat::zero();
        for (sz, &is) in els.iter().enumerate() {
            let sp = sz + 1;
            if sp > j {
                c += rat(is as i64) * sign_pow((sp - j) as u64);
            } else if sp < j {
                c += rat(is as i64) * sign_pow((j - sp + 1) as u64);
            }
        }
        c += ratio(l as i64 + 1, 2) * sign_pow((k - j + 1) as u64);
        coords[ij - 1] = c;
    }
    Weight::from_coords(l, coords)
}

/// Exact rational roots of a univariate polynomial of degree at most two,
/// given by coefficients `[c_0, c_1, c_2]` (low degree first; missing
/// entries are zero).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UnivariateRoots {
    /// The zero polynomial: every rational is a root.
    AllRationals,
    /// Sorted list of the rational roots (irrational roots are omitted).
    Roots(Vec<Rat>),
}

pub fn univariate_roots(coeffs: &[Rat]) -> Result<UnivariateRoots, Error> {
    let degree = coeffs.iter().rposition(|c| !c.is_zero());
    match degree {
        None => Ok(UnivariateRoots::AllRationals),
        Some(0) => Ok(UnivariateRoots::Roots(Vec::new())),
        Some(1) => {
            let root = -&coeffs[0] / &coeffs[1];
            Ok(UnivariateRoots::Roots(alloc::vec![root]))
        }
        Some(2) => {
            let (c0, c1, c2) = (&coeffs[0], &coeffs[1], &coeffs[2]);
            let disc = c1 * c1 - rat(4) * c0 * c2;
            if disc.is_negative() {
                return Ok(UnivariateRoots::Roots(Vec::new()));
            }
            // A rational square root exists iff numerator and denominator of
            // the reduced discriminant are both perfect squares.
            let sqrt_n = perfect_sqrt(disc.numer());
            let sqrt_d = perfect_sqrt(disc.denom());
            let (sn, sd) = match (sqrt_n, sqrt_d) {
                (Some(a), Some(b)) => (a, b),
                _ => return Ok(UnivariateRoots::Roots(Vec::new())),
            };
            let root_disc = Rat::new(sn, sd);
            let two_c2 = rat(2) * c2;
            let r1 = (-c1 - &root_disc) / &two_c2;
            let r2 = (-c1 + &root_disc) / &two_c2;
            let mut roots = alloc::vec![r1, r2];
            roots.sort();
            roots.dedup();
            Ok(UnivariateRoots::Roots(roots))
        }
        Some(d) => Err(Error::DegreeTooHigh { degree: d }),
    }
}

/// Output of [`solve_system`]: one solution per support (bitmask order) and
/// any structural anomalies encountered.  For the intended input the
/// anomaly list is empty and there are exactly `2^l` solutions.
#[derive(Clone, Debug)]
pub struct SolveOutcome {
    pub solutions: Vec<(SupportSet, Weight)>,
    pub anomalies: Vec<String>,
}

/// Substitutes `h_j := 0` for every `j` outside the support.
fn restrict_to_support(p: &CartanPolynomial, s: &SupportSet) -> Result<CartanPolynomial, Error> {
    let l = p.rank();
    let mut out = CartanPolynomial::zero(l)?;
    'term: for (exps, c) in p.terms() {
        for j in 1..=l {
            if exps[j - 1] > 0 && !s.contains(j) {
                continue 'term;
            }
        }
        out = out.add(&CartanPolynomial::monomial(l, exps.clone(), c.clone())?)?;
    }
    Ok(out)
}

/// Divides by the single variable `h_i`; `None` if some monomial lacks it.
fn divide_by_variable(p: &CartanPolynomial, i: usize) -> Result<Option<CartanPolynomial>, Error> {
    let l = p.rank();
    let mut out = CartanPolynomial::zero(l)?;
    for (exps, c) in p.terms() {
        if exps[i - 1] == 0 {
            return Ok(None);
        }
        let mut e = exps.clone();
        e[i - 1] -= 1;
        out = out.add(&CartanPolynomial::monomial(l, e, c.clone())?)?;
    }
    Ok(Some(out))
}

/// Reads an affine-linear form over the support variables as
/// `(coefficients, constant)`; `None` if any monomial is nonlinear or
/// touches an off-support variable.
fn as_linear_form(
    p: &CartanPolynomial,
    s: &SupportSet,
) -> Option<(Vec<Rat>, Rat)> {
    let l = p.rank();
    let k = s.len();
    let mut coeffs = alloc::vec![Rat::zero(); k];
    let mut constant = Rat::zero();
    for (exps, c) in p.terms() {
        let total: u32 = exps.iter().sum();
        if total == 0 {
            constant = c.clone();
            continue;
        }
        if total > 1 {
            return None;
        }
        let var = (1..=l).find(|j| exps[j - 1] == 1).expect("degree-one term");
        match s.elements().iter().position(|&e| e == var) {
            Some(pos) => coeffs[pos] = c.clone(),
            None => return None,
        }
    }
    Some((coeffs, constant))
}

/// Exact Gaussian elimination for a square system `A·x = b`; `None` if the
/// matrix is singular.
fn solve_linear(mut a: Vec<Vec<Rat>>, mut b: Vec<Rat>) -> Option<Vec<Rat>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for v in a[col].iter_mut() {
            *v *= &inv;
        }
        b[col] *= &inv;
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for c2 in 0..n {
                let d = &factor * &a[col][c2];
                a[r][c2] -= d;
            }
            let d = &factor * &b[col];
            b[r] -= d;
        }
    }
    Some(b)
}

/// Finds, for every support `S`, the unique common zero of the given
/// polynomials whose support is exactly `S`.
///
/// For each support the off-support variables are set to zero; each
/// restricted `p_i` with `i` in the support is divided by `h_i` (valid
/// because the support demands `h_i ≠ 0`), and the resulting square linear
/// system is solved by exact elimination.  Candidates are verified against
/// every input polynomial, and for singleton supports additionally against
/// an independent quadratic root finder.  Structural surprises are reported
/// as anomalies rather than silently dropped.
pub fn solve_system(l: usize, polys: &[CartanPolynomial]) -> Result<SolveOutcome, Error> {
    check_rank(l)?;
    if polys.len() != l {
        return Err(Error::BadWeightLength { got: polys.len(), l });
    }
    for p in polys {
        if p.rank() != l {
            return Err(Error::RankMismatch { a: p.rank(), b: l });
        }
    }
    let mut solutions = Vec::new();
    let mut anomalies = Vec::new();

    for s in enumerate_supports(l)? {
        let mut restricted = Vec::with_capacity(l);
        for p in polys {
            restricted.push(restrict_to_support(p, &s)?);
        }
        // Off-support polynomials must vanish identically once their own
        // variable is zeroed.
        let mut ok = true;
        for i in 1..=l {
            if !s.contains(i) && !restricted[i - 1].is_zero() {
                anomalies.push(format!(
                    "support {s}: p_{i} does not vanish off its own variable"
                ));
                ok = false;
            }
        }
        if !ok {
            continue;
        }

        let k = s.len();
        let candidate = if k == 0 {
            Weight::zero(l)?
        } else {
            // Peel the h_i factor and assemble the linear system.
            let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(k);
            let mut rhs: Vec<Rat> = Vec::with_capacity(k);
            let mut broken = false;
            for &i in s.elements() {
                let peeled = match divide_by_variable(&restricted[i - 1], i)? {
                    Some(q) => q,
                    None => {
                        anomalies.push(format!(
                            "support {s}: p_{i} is not divisible by h_{i}"
                        ));
                        broken = true;
                        break;
                    }
                };
                match as_linear_form(&peeled, &s) {
                    Some((coeffs, constant)) => {
                        rows.push(coeffs);
                        rhs.push(-constant);
                    }
                    None => {
                        anomalies.push(format!(
                            "support {s}: p_{i}/h_{i} is not linear over the support"
                        ));
                        broken = true;
                        break;
                    }
                }
            }
            if broken {
                continue;
            }
            let values = match solve_linear(rows, rhs) {
                Some(v) => v,
                None => {
                    anomalies.push(format!("support {s}: degenerate linear system"));
                    continue;
                }
            };
            if values.iter().any(|v| v.is_zero()) {
                anomalies.push(format!(
                    "support {s}: solution leaves the support (zero coordinate)"
                ));
                continue;
            }
            let mut coords = alloc::vec![Rat::zero(); l];
            for (pos, &i) in s.elements().iter().enumerate() {
                coords[i - 1] = values[pos].clone();
            }
            Weight::from_coords(l, coords)?
        };

        // Verify against every input polynomial.
        for (i, p) in polys.iter().enumerate() {
            let value = p.evaluate(&candidate)?;
            if !value.is_zero() {
                anomalies.push(format!(
                    "support {s}: candidate fails p_{} (value {})",
                    i + 1,
                    crate::rational::render(&value)
                ));
            }
        }

        // Independent quadratic cross-check for singleton supports.
        if k == 1 {
            let i = s.elements()[0];
            let mut coeffs = alloc::vec![Rat::zero(); 3];
            let mut fits = true;
            for (exps, c) in restricted[i - 1].terms() {
                let e = exps[i - 1] as usize;
                if e >= 3 || exps.iter().sum::<u32>() != exps[i - 1] {
                    fits = false;
                    break;
                }
                coeffs[e] = c.clone();
            }
            if fits {
                match univariate_roots(&coeffs)? {
                    UnivariateRoots::Roots(roots) => {
                        let hv = candidate.coords()[i - 1].clone();
                        let expected = {
                            let mut r = alloc::vec![Rat::zero(), hv];
                            r.sort();
                            r
                        };
                        if roots != expected {
                            anomalies.push(format!(
                                "support {s}: quadratic root set disagrees with elimination"
                            ));
                        }
                    }
                    UnivariateRoots::AllRationals => {
                        anomalies.push(format!("support {s}: p_{i} restricted to its line is zero"));
                    }
                }
            } else {
                anomalies.push(format!("support {s}: restriction of p_{i} is not quadratic"));
            }
        }

        solutions.push((s, candidate));
    }

    Ok(SolveOutcome { solutions, anomalies })
}

/// Full cross-check of the classification for rank `l`.
#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub l: usize,
    /// Solutions from [`solve_system`] on the adjoint-derived polynomials,
    /// in support-bitmask order.
    pub solutions: Vec<(SupportSet, Weight)>,
    /// Whether every solution equals the closed form for its support.
    pub matches_closed_form: bool,
    /// Whether the `2^l` solutions are pairwise distinct.
    pub all_distinct: bool,
    /// Supports whose solution is dominant integral (expected: exactly the
    /// empty support, giving the zero weight).
    pub dominant_integral: Vec<SupportSet>,
    pub anomalies: Vec<String>,
}

impl ClassificationReport {
    /// True when the computed classification has exactly the expected shape.
    pub fn verdict(&self) -> bool {
        self.anomalies.is_empty()
            && self.solutions.len() == (1usize << self.l)
            && self.matches_closed_form
            && self.all_distinct
            && self.dominant_integral.len() == 1
            && self.dominant_integral[0].is_empty()
    }
}

/// Runs the whole classification pipeline: adjoint-derived polynomials,
/// exact solve per support, comparison with the closed forms, distinctness,
/// and the dominant-integral scan.
pub fn verify_classification(l: usize) -> Result<ClassificationReport, Error> {
    let polys = crate::enveloping::polynomials_P0(l)?;
    let outcome = solve_system(l, &polys)?;
    let mut matches = outcome.solutions.len() == (1usize << l);
    let mut seen: BTreeSet<Vec<Rat>> = BTreeSet::new();
    let mut all_distinct = true;
    let mut dominant = Vec::new();
    for (s, w) in &outcome.solutions {
        if *w != mu_S(l, s)? {
            matches = false;
        }
        if !seen.insert(w.coords().to_vec()) {
            all_distinct = false;
        }
        if w.is_dominant_integral() {
            dominant.push(s.clone());
        }
    }
    Ok(ClassificationReport {
        l,
        solutions: outcome.solutions,
        matches_closed_form: matches,
        all_distinct,
        dominant_integral: dominant,
        anomalies: outcome.anomalies,
    })
}
