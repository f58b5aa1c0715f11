//! The vacuum (generalized Verma) module `N(k, 0)` over the affinization.
//!
//! `N(k, 0)` is induced from the trivial module of `sl(l+1) ⊕ C·c ⊕ ĝ_+`,
//! with `c` acting by the level `k`.  A PBW basis is given by monomials
//!
//! `x_{b_1}(d_1) x_{b_2}(d_2) ... x_{b_r}(d_r) · 1`,   all `d_t <= -1`,
//!
//! where the `x_b` run over the ordered basis of [`crate::finite_lie`] and
//! the factor list is kept in canonical non-increasing order by the pair
//! `(degree, basis label)` — e.g. every `(-1)`-factor precedes every
//! `(-2)`-factor, and factors of equal degree are ordered by `E > H > F`
//! and then by root.  Two negative-degree loop elements commute up to a
//! negative-degree bracket term (the cocycle never fires between them), so
//! canonicalisation only inserts lower-order corrections and the
//! straightening terminates; equality of canonical forms is exact equality
//! in the module.
//!
//! Applying `x(n)` with `n >= 0` commutes the factor rightward until it hits
//! the vacuum, which it annihilates (`n > 0`), or acts trivially on (`n = 0`,
//! since the inducing module is trivial); the cocycle fires whenever two
//! degrees cancel, contributing `n (x, y) k`.
//!
//! The module contains the explicit singular vector of conformal degree 2 at
//! the boundary level `k = -(l+1)/2`:
//!
//! `v = Σ_{i=1}^{l} (l-2i+1)/(l+1) · h_i(-1) e_θ(-1) 1`
//! `  - Σ_{i=1}^{l-1} e_{ε_1-ε_{i+1}}(-1) e_{ε_{i+1}-ε_{l+1}}(-1) 1`
//! `  - (l-1)/2 · e_θ(-2) 1`
//!
//! which [`is_singular`] verifies by applying `e_j(0)` (`j = 1..l`) and
//! `f_θ(1)` and demanding exact zero.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::boundary_level;
use crate::check_rank;
use crate::error::Error;
use crate::finite_lie::{bracket, decompose, invariant_form, Generator, LieElement};
use crate::rational::{rat, ratio, Rat};
use crate::root_system::{highest_root, RootIndex, Weight};
use crate::affine_lie::AffineElement;

/// One PBW factor: a basis label at a strictly negative degree.  The tuple
/// order `(degree, label)` is the canonical factor order.
pub type Factor = (i64, Generator);

/// A canonical PBW monomial: factors in non-increasing `(degree, label)`
/// order, all degrees `<= -1`.  The empty monomial is the vacuum.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PbwMonomial(Vec<Factor>);

impl PbwMonomial {
    pub fn vacuum() -> Self {
        PbwMonomial(Vec::new())
    }

    pub fn factors(&self) -> &[Factor] {
        &self.0
    }

    pub fn is_vacuum(&self) -> bool {
        self.0.is_empty()
    }

    /// Total conformal degree: the sum of `-d` over the factors.
    pub fn conformal_degree(&self) -> i64 {
        self.0.iter().map(|(d, _)| -d).sum()
    }

    /// Sum of the factor weights.
    pub fn weight(&self, l: usize) -> Result<Weight, Error> {
        let mut w = Weight::zero(l)?;
        for (_, g) in &self.0 {
            w = w.add(&g.weight(l)?)?;
        }
        Ok(w)
    }

    fn is_canonical(&self) -> bool {
        self.0.iter().all(|(d, _)| *d <= -1)
            && self.0.windows(2).all(|w| w[0] >= w[1])
    }
}

impl core::fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (t, (d, g)) in self.0.iter().enumerate() {
            if t > 0 {
                write!(f, " ")?;
            }
            write!(f, "{g}({d})")?;
        }
        Ok(())
    }
}

/// An element of `N(k, 0)`: an exact rational linear combination of
/// canonical PBW monomials.  Stored coefficients are never zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleVector {
    l: usize,
    level: Rat,
    terms: BTreeMap<PbwMonomial, Rat>,
}

impl ModuleVector {
    /// The zero vector of `N(level, 0)`.
    pub fn zero(l: usize, level: Rat) -> Result<Self, Error> {
        check_rank(l)?;
        Ok(ModuleVector { l, level, terms: BTreeMap::new() })
    }

    /// The vacuum vector `1`.
    pub fn vacuum(l: usize, level: Rat) -> Result<Self, Error> {
        let mut v = ModuleVector::zero(l, level)?;
        v.terms.insert(PbwMonomial::vacuum(), rat(1));
        Ok(v)
    }

    pub fn rank(&self) -> usize {
        self.l
    }

    pub fn level(&self) -> &Rat {
        &self.level
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &PbwMonomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    fn add_term(&mut self, m: PbwMonomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        debug_assert!(m.is_canonical(), "non-canonical monomial inserted");
        let slot = self.terms.entry(m.clone()).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &ModuleVector) -> Result<ModuleVector, Error> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &ModuleVector) -> Result<ModuleVector, Error> {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, c: &Rat) -> ModuleVector {
        if c.is_zero() {
            return ModuleVector {
                l: self.l,
                level: self.level.clone(),
                terms: BTreeMap::new(),
            };
        }
        ModuleVector {
            l: self.l,
            level: self.level.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    fn compatible(&self, other: &ModuleVector) -> Result<(), Error> {
        if self.l != other.l {
            return Err(Error::RankMismatch { a: self.l, b: other.l });
        }
        if self.level != other.level {
            return Err(Error::MixedWeight);
        }
        Ok(())
    }

    /// The common conformal degree of all terms, if homogeneous
    /// (`None` for the zero vector or mixed degrees).
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut it = self.terms.keys().map(PbwMonomial::conformal_degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// The common `h`-weight of all terms, if homogeneous.
    pub fn homogeneous_weight(&self) -> Result<Option<Weight>, Error> {
        let mut acc: Option<Weight> = None;
        for m in self.terms.keys() {
            let w = m.weight(self.l)?;
            match &acc {
                None => acc = Some(w),
                Some(prev) if *prev == w => {}
                Some(_) => return Ok(None),
            }
        }
        Ok(acc)
    }
}

impl core::fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (t, (m, c)) in self.terms.iter().enumerate() {
            if t > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*{}", crate::rational::render(c), m)?;
        }
        Ok(())
    }
}

fn bracket_decompose(l: usize, a: Generator, b: Generator) -> Result<Vec<(Generator, Rat)>, Error> {
    decompose(&bracket(&a.element(l)?, &b.element(l)?)?)
}

fn apply_to_monomial(
    l: usize,
    level: &Rat,
    g: Generator,
    n: i64,
    mono: &PbwMonomial,
    out: &mut ModuleVector,
    coeff: &Rat,
) -> Result<(), Error> {
    if coeff.is_zero() {
        return Ok(());
    }
    match mono.factors().first() {
        None => {
            // On the vacuum: negative degrees create a factor; degree zero
            // acts through the trivial module; positive degrees annihilate.
            if n <= -1 {
                out.add_term(PbwMonomial(alloc::vec![(n, g)]), coeff.clone());
            }
            Ok(())
        }
        Some(&(d1, x1)) => {
            if n <= -1 && (n, g) >= (d1, x1) {
                // Canonical position reached: prepend.
                let mut factors = Vec::with_capacity(mono.factors().len() + 1);
                factors.push((n, g));
                factors.extend_from_slice(mono.factors());
                out.add_term(PbwMonomial(factors), coeff.clone());
                return Ok(());
            }
            let rest = PbwMonomial(mono.factors()[1..].to_vec());
            // g(n)·x1(d1)·rest = x1(d1)·(g(n)·rest) + [g, x1](n+d1)·rest
            //                    + n δ_{n+d1,0} (g, x1) k · rest.
            let mut inner = ModuleVector::zero(l, level.clone())?;
            apply_to_monomial(l, level, g, n, &rest, &mut inner, coeff)?;
            for (m, c) in &inner.terms {
                apply_to_monomial(l, level, x1, d1, m, out, c)?;
            }
            for (z, cz) in bracket_decompose(l, g, x1)? {
                apply_to_monomial(l, level, z, n + d1, &rest, out, &(cz * coeff))?;
            }
            if n + d1 == 0 {
                let pairing = invariant_form(&g.element(l)?, &x1.element(l)?)?;
                let c0 = rat(n) * pairing * level * coeff;
                out.add_term(rest, c0);
            }
            Ok(())
        }
    }
}

/// Applies the loop generator `g(n)` to `v` (any degree `n`).
pub fn apply_gen(g: Generator, n: i64, v: &ModuleVector) -> Result<ModuleVector, Error> {
    let mut out = ModuleVector::zero(v.l, v.level.clone())?;
    for (m, c) in &v.terms {
        apply_to_monomial(v.l, &v.level, g, n, m, &mut out, c)?;
    }
    Ok(out)
}

/// Applies the loop element `x(n)` for an arbitrary `x ∈ sl(l+1)`.
pub fn act_loop(x: &LieElement, n: i64, v: &ModuleVector) -> Result<ModuleVector, Error> {
    if x.rank() != v.l {
        return Err(Error::RankMismatch { a: x.rank(), b: v.l });
    }
    let mut out = ModuleVector::zero(v.l, v.level.clone())?;
    for (g, c) in decompose(x)? {
        out = out.add(&apply_gen(g, n, v)?.scale(&c))?;
    }
    Ok(out)
}

/// Action of a general element of the affinization; the central element acts
/// by the level.
pub fn act(a: &AffineElement, v: &ModuleVector) -> Result<ModuleVector, Error> {
    if a.rank() != v.l {
        return Err(Error::RankMismatch { a: a.rank(), b: v.l });
    }
    let mut out = v.scale(&(a.central_coefficient() * &v.level));
    for (n, x) in a.loop_terms() {
        out = out.add(&act_loop(x, *n, v)?)?;
    }
    Ok(out)
}

/// The conformal-degree-2 singular vector of `N(-(l+1)/2, 0)`.
pub fn singular_vector(l: usize) -> Result<ModuleVector, Error> {
    check_rank(l)?;
    let level = boundary_level(l);
    let vac = ModuleVector::vacuum(l, level.clone())?;
    let theta = highest_root(l)?;
    let e_theta = Generator::E(theta);
    let li = l as i64;

    let mut v = ModuleVector::zero(l, level)?;
    for i in 1..=l {
        let coeff = ratio(li - 2 * i as i64 + 1, li + 1);
        let term = apply_gen(Generator::H(i), -1, &apply_gen(e_theta, -1, &vac)?)?;
        v = v.add(&term.scale(&coeff))?;
    }
    for i in 1..=(l - 1) {
        let a = Generator::E(RootIndex { i: 1, j: i + 1 });
        let b = Generator::E(RootIndex { i: i + 1, j: l + 1 });
        let term = apply_gen(a, -1, &apply_gen(b, -1, &vac)?)?;
        v = v.sub(&term)?;
    }
    let tail = apply_gen(e_theta, -2, &vac)?;
    v = v.sub(&tail.scale(&ratio(li - 1, 2)))?;
    Ok(v)
}

/// Applies every annihilation operator of the singularity test — `e_j(0)`
/// for `j = 1..l` and `f_θ(1)` — and returns each labelled result together
/// with the overall verdict (`true` when every result is exactly zero).
pub fn is_singular(v: &ModuleVector) -> Result<(bool, Vec<(String, ModuleVector)>), Error> {
    let l = v.l;
    let mut checks = Vec::new();
    for j in 1..=l {
        let op = Generator::E(RootIndex { i: j, j: j + 1 });
        checks.push((format!("e_{j}(0)"), apply_gen(op, 0, v)?));
    }
    let ftheta = Generator::F(highest_root(l)?);
    checks.push((String::from("f_theta(1)"), apply_gen(ftheta, 1, v)?));
    let ok = checks.iter().all(|(_, r)| r.is_zero());
    Ok((ok, checks))
}
