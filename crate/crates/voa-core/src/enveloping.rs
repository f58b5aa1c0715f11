//! The universal enveloping algebra `U(sl(l+1))` in PBW normal order,
//! and the Zhu-algebra side of the pipeline.
//!
//! PBW words list basis labels in strictly increasing order of the global
//! basis ([`Generator`]: lowering < Cartan < raising, roots lexicographic)
//! with positive exponents; products are straightened with `x·y = y·x + [x,y]`
//! until every word is normal ordered.  Canonical forms are compared
//! exactly, so equality in `U(sl(l+1))` is decidable.
//!
//! On top of the algebra this module provides:
//!
//! - [`zhu_F`]: the degree-preserving map from the vacuum module to
//!   `U(sl(l+1))` sending `x_1(-n_1-1)...x_m(-n_m-1)·1` to
//!   `(-1)^{n_1+...+n_m} x_m ... x_1` (note the reversal), which realises
//!   the image of a vector in the Zhu algebra of the vacuum vertex algebra.
//! - [`v_prime`]: the image of the conformal-degree-2 singular vector,
//!   `Σ_i (l-2i+1)/(l+1)·h_i e_θ - Σ_i e_{ε_{i+1}-ε_{l+1}} e_{ε_1-ε_{i+1}}
//!   + (l-1)/2·e_θ`.
//! - [`generate_R`]: the closure of `v_prime` under the adjoint action,
//!   an exact-rank computation expected to stabilise at dimension
//!   `(l+1)^2 - 1` with an `l`-dimensional zero-weight subspace.
//! - [`project_to_polynomial`]: evaluation of a weight-zero element against
//!   a highest-weight vector, as a polynomial in `h_1, ..., h_l`.
//! - [`polynomials_P0`]: the `l` zero-weight polynomials `p_i` obtained by
//!   applying the lowering chains `(f_i f_{i-1} ... f_1 f_{i+1} ... f_l)`
//!   to `v_prime` (rightmost factor acting first), cross-checked against
//!   their closed form
//!   `p_i = h_i·(Σ_{j<i} -2j/(l+1) h_j + (l-2i+1)/(l+1) h_i
//!          + Σ_{j>i} (2l-2j+2)/(l+1) h_j + (l+1)/2 - i)`.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::check_rank;
use crate::error::Error;
use crate::finite_lie::{bracket, decompose, Generator, LieElement};
use crate::linalg::RowSpace;
use crate::rational::{rat, ratio, sign_pow, Rat};
use crate::root_system::{highest_root, RootIndex, Weight};
use crate::verma::ModuleVector;

/// A normal-ordered PBW word: basis labels strictly increasing, exponents
/// positive.  The empty word is the identity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UeaWord(Vec<(Generator, u32)>);

impl UeaWord {
    pub fn one() -> Self {
        UeaWord(Vec::new())
    }

    pub fn single(g: Generator) -> Self {
        UeaWord(alloc::vec![(g, 1)])
    }

    pub fn factors(&self) -> &[(Generator, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Total number of generator letters, counting exponents.
    pub fn length(&self) -> u64 {
        self.0.iter().map(|(_, e)| *e as u64).sum()
    }

    /// The `ad(h)`-weight of the word.
    pub fn weight(&self, l: usize) -> Result<Weight, Error> {
        let mut w = Weight::zero(l)?;
        for (g, e) in &self.0 {
            w = w.add(&g.weight(l)?.scale(&rat(*e as i64)))?;
        }
        Ok(w)
    }

    pub fn has_raising_factor(&self) -> bool {
        self.0.iter().any(|(g, _)| matches!(g, Generator::E(_)))
    }

    pub fn has_lowering_factor(&self) -> bool {
        self.0.iter().any(|(g, _)| matches!(g, Generator::F(_)))
    }

    fn is_canonical(&self) -> bool {
        self.0.iter().all(|(_, e)| *e >= 1)
            && self.0.windows(2).all(|w| w[0].0 < w[1].0)
    }
}

impl core::fmt::Display for UeaWord {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (t, (g, e)) in self.0.iter().enumerate() {
            if t > 0 {
                write!(f, " ")?;
            }
            if *e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

/// An element of `U(sl(l+1))`: exact rational combination of normal-ordered
/// words.  Stored coefficients are never zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UeaElement {
    l: usize,
    terms: BTreeMap<UeaWord, Rat>,
}

impl UeaElement {
    pub fn zero(l: usize) -> Result<Self, Error> {
        check_rank(l)?;
        Ok(UeaElement { l, terms: BTreeMap::new() })
    }

    /// The identity element `1`.
    pub fn one(l: usize) -> Result<Self, Error> {
        let mut x = UeaElement::zero(l)?;
        x.terms.insert(UeaWord::one(), rat(1));
        Ok(x)
    }

    /// A single basis generator as an element.
    pub fn from_generator(l: usize, g: Generator) -> Result<Self, Error> {
        let mut x = UeaElement::zero(l)?;
        x.terms.insert(UeaWord::single(g), rat(1));
        Ok(x)
    }

    /// Embeds a Lie algebra element as a degree-one element.
    pub fn from_lie(x: &LieElement) -> Result<Self, Error> {
        let l = x.rank();
        let mut out = UeaElement::zero(l)?;
        for (g, c) in decompose(x)? {
            out.add_term(UeaWord::single(g), c);
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        self.l
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&UeaWord, &Rat)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &UeaWord) -> Rat {
        self.terms.get(w).cloned().unwrap_or_else(Rat::zero)
    }

    /// Sparse view for row reduction.
    pub fn as_row(&self) -> BTreeMap<UeaWord, Rat> {
        self.terms.clone()
    }

    fn add_term(&mut self, w: UeaWord, c: Rat) {
        if c.is_zero() {
            return;
        }
        debug_assert!(w.is_canonical(), "non-canonical word inserted");
        let slot = self.terms.entry(w.clone()).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &UeaElement) -> Result<UeaElement, Error> {
        if self.l != other.l {
            return Err(Error::RankMismatch { a: self.l, b: other.l });
        }
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &UeaElement) -> Result<UeaElement, Error> {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, c: &Rat) -> UeaElement {
        if c.is_zero() {
            return UeaElement { l: self.l, terms: BTreeMap::new() };
        }
        UeaElement {
            l: self.l,
            terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect(),
        }
    }

    /// The common `ad(h)`-weight of all words, if homogeneous.
    pub fn homogeneous_weight(&self) -> Result<Option<Weight>, Error> {
        let mut acc: Option<Weight> = None;
        for w in self.terms.keys() {
            let wt = w.weight(self.l)?;
            match &acc {
                None => acc = Some(wt),
                Some(prev) if *prev == wt => {}
                Some(_) => return Ok(None),
            }
        }
        Ok(acc)
    }
}

impl core::fmt::Display for UeaElement {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (t, (w, c)) in self.terms.iter().enumerate() {
            if t > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*{}", crate::rational::render(c), w)?;
        }
        Ok(())
    }
}

fn bracket_decompose(l: usize, a: Generator, b: Generator) -> Result<Vec<(Generator, Rat)>, Error> {
    decompose(&bracket(&a.element(l)?, &b.element(l)?)?)
}

/// `word · g`, straightened: if the trailing factor exceeds `g`, rewrite
/// `W x^e g = (W x^{e-1} g) x + W x^{e-1} [x, g]` and recurse.
fn word_times_gen(l: usize, word: &UeaWord, g: Generator) -> Result<UeaElement, Error> {
    match word.0.last().copied() {
        None => UeaElement::from_generator(l, g),
        Some((x, e)) => {
            if x < g {
                let mut w = word.clone();
                w.0.push((g, 1));
                let mut out = UeaElement::zero(l)?;
                out.add_term(w, rat(1));
                Ok(out)
            } else if x == g {
                let mut w = word.clone();
                w.0.last_mut().expect("non-empty").1 = e + 1;
                let mut out = UeaElement::zero(l)?;
                out.add_term(w, rat(1));
                Ok(out)
            } else {
                let mut shorter = word.clone();
                if e > 1 {
                    shorter.0.last_mut().expect("non-empty").1 = e - 1;
                } else {
                    shorter.0.pop();
                }
                let moved = word_times_gen(l, &shorter, g)?;
                let mut out = elem_times_gen(&moved, x)?;
                for (z, cz) in bracket_decompose(l, x, g)? {
                    let corr = word_times_gen(l, &shorter, z)?;
                    out = out.add(&corr.scale(&cz))?;
                }
                Ok(out)
            }
        }
    }
}

fn elem_times_gen(a: &UeaElement, g: Generator) -> Result<UeaElement, Error> {
    let mut out = UeaElement::zero(a.l)?;
    for (w, c) in &a.terms {
        let piece = word_times_gen(a.l, w, g)?;
        out = out.add(&piece.scale(c))?;
    }
    Ok(out)
}

/// The normal-ordered product `a · b`.
pub fn mul(a: &UeaElement, b: &UeaElement) -> Result<UeaElement, Error> {
    if a.l != b.l {
        return Err(Error::RankMismatch { a: a.l, b: b.l });
    }
    let mut out = UeaElement::zero(a.l)?;
    for (wb, cb) in &b.terms {
        let mut acc = a.scale(cb);
        for (g, e) in wb.factors() {
            for _ in 0..*e {
                acc = elem_times_gen(&acc, *g)?;
            }
        }
        out = out.add(&acc)?;
    }
    Ok(out)
}

/// Normal-orders an arbitrary product of basis generators, left to right.
pub fn normalize(l: usize, gens: &[Generator]) -> Result<UeaElement, Error> {
    let mut acc = UeaElement::one(l)?;
    for g in gens {
        acc = elem_times_gen(&acc, *g)?;
    }
    Ok(acc)
}

/// The adjoint action of a basis generator: `g·f - f·g`.
pub fn adjoint_gen(g: Generator, f: &UeaElement) -> Result<UeaElement, Error> {
    let ge = UeaElement::from_generator(f.l, g)?;
    mul(&ge, f)?.sub(&mul(f, &ge)?)
}

/// The adjoint action of any Lie algebra element: `x·f - f·x`.
pub fn adjoint(x: &LieElement, f: &UeaElement) -> Result<UeaElement, Error> {
    let xe = UeaElement::from_lie(x)?;
    mul(&xe, f)?.sub(&mul(f, &xe)?)
}

/// The Zhu-algebra image of a vacuum-module vector:
/// `x_1(-n_1-1) ... x_m(-n_m-1)·1  ↦  (-1)^{n_1+...+n_m} · x_m ... x_1`,
/// extended linearly over the canonical PBW form.
#[allow(non_snake_case)]
pub fn zhu_F(v: &ModuleVector) -> Result<UeaElement, Error> {
    let l = v.rank();
    let mut out = UeaElement::zero(l)?;
    for (mono, c) in v.terms() {
        let mut sign_exp: u64 = 0;
        let mut gens: Vec<Generator> = Vec::with_capacity(mono.factors().len());
        for (d, g) in mono.factors().iter().rev() {
            debug_assert!(*d <= -1);
            sign_exp += (-d - 1) as u64;
            gens.push(*g);
        }
        let word = normalize(l, &gens)?;
        out = out.add(&word.scale(&(sign_pow(sign_exp) * c)))?;
    }
    Ok(out)
}

/// The Zhu-algebra image of the singular vector, in closed form:
/// `Σ_{i=1}^{l} (l-2i+1)/(l+1) · h_i e_θ
///  - Σ_{i=1}^{l-1} e_{ε_{i+1}-ε_{l+1}} e_{ε_1-ε_{i+1}}
///  + (l-1)/2 · e_θ`.
pub fn v_prime(l: usize) -> Result<UeaElement, Error> {
    check_rank(l)?;
    let li = l as i64;
    let theta = Generator::E(highest_root(l)?);
    let mut out = UeaElement::zero(l)?;
    for i in 1..=l {
        let coeff = ratio(li - 2 * i as i64 + 1, li + 1);
        let term = normalize(l, &[Generator::H(i), theta])?;
        out = out.add(&term.scale(&coeff))?;
    }
    for i in 1..=(l - 1) {
        let a = Generator::E(RootIndex { i: i + 1, j: l + 1 });
        let b = Generator::E(RootIndex { i: 1, j: i + 1 });
        let term = normalize(l, &[a, b])?;
        out = out.sub(&term)?;
    }
    let tail = UeaElement::from_generator(l, theta)?.scale(&ratio(li - 1, 2));
    out.add(&tail)
}

/// The adjoint closure of `v_prime`: a weight-graded basis of the
/// `U(sl(l+1))`-submodule generated by the singular-vector image.
#[derive(Clone, Debug)]
pub struct AdjointModule {
    l: usize,
    basis: Vec<(Weight, UeaElement)>,
}

impl AdjointModule {
    pub fn rank(&self) -> usize {
        self.l
    }

    /// Dimension of the whole module.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Basis elements with their `ad(h)`-weights.
    pub fn basis(&self) -> &[(Weight, UeaElement)] {
        &self.basis
    }

    /// The zero-weight basis elements.
    pub fn zero_weight_basis(&self) -> Vec<&UeaElement> {
        self.basis
            .iter()
            .filter(|(w, _)| w.is_zero())
            .map(|(_, x)| x)
            .collect()
    }

    /// Dimension of the zero-weight subspace.
    pub fn dim_zero_weight(&self) -> usize {
        self.zero_weight_basis().len()
    }
}

/// Closes `{v_prime}` under the adjoint action of the `2l` Chevalley
/// generators, tracking exact linear independence.  Breadth-first and fully
/// deterministic.  Errors if the closure exceeds `dim sl(l+1) + 16`, which
/// would signal a bracket or sign defect upstream.
#[allow(non_snake_case)]
pub fn generate_R(l: usize) -> Result<AdjointModule, Error> {
    check_rank(l)?;
    let dim_g = (l + 1) * (l + 1) - 1;
    let bound = dim_g + 16;
    let vp = v_prime(l)?;
    let theta_weight = Weight::from_root(l, highest_root(l)?)?;

    let mut gens: Vec<Generator> = Vec::with_capacity(2 * l);
    for p in 1..=l {
        gens.push(Generator::E(RootIndex { i: p, j: p + 1 }));
        gens.push(Generator::F(RootIndex { i: p, j: p + 1 }));
    }

    let mut space: RowSpace<UeaWord> = RowSpace::new();
    let mut basis: Vec<(Weight, UeaElement)> = Vec::new();
    let mut queue: VecDeque<usize> = VecDeque::new();

    space.insert(vp.as_row());
    basis.push((theta_weight, vp));
    queue.push_back(0);

    while let Some(idx) = queue.pop_front() {
        let (weight, element) = basis[idx].clone();
        for g in &gens {
            let img = adjoint_gen(*g, &element)?;
            if img.is_zero() {
                continue;
            }
            if space.insert(img.as_row()) {
                let w = weight.add(&g.weight(l)?)?;
                basis.push((w, img));
                queue.push_back(basis.len() - 1);
                if basis.len() > bound {
                    return Err(Error::ClosureExceeded { dim: basis.len(), bound });
                }
            }
        }
    }
    Ok(AdjointModule { l, basis })
}

/// A polynomial in the Cartan generators `h_1, ..., h_l` with exact rational
/// coefficients, keyed by exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanPolynomial {
    l: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl CartanPolynomial {
    pub fn zero(l: usize) -> Result<Self, Error> {
        check_rank(l)?;
        Ok(CartanPolynomial { l, terms: BTreeMap::new() })
    }

    pub fn constant(l: usize, c: Rat) -> Result<Self, Error> {
        let mut p = CartanPolynomial::zero(l)?;
        p.add_term(alloc::vec![0; l], c);
        Ok(p)
    }

    /// The variable `h_p`.
    pub fn variable(l: usize, p: usize) -> Result<Self, Error> {
        if p == 0 || p > l {
            return Err(Error::BadWeightIndex { p, l });
        }
        let mut out = CartanPolynomial::zero(l)?;
        let mut exps = alloc::vec![0u32; l];
        exps[p - 1] = 1;
        out.add_term(exps, rat(1));
        Ok(out)
    }

    /// A single monomial `c · h_1^{e_1} ... h_l^{e_l}`.
    pub fn monomial(l: usize, exps: Vec<u32>, c: Rat) -> Result<Self, Error> {
        if exps.len() != l {
            return Err(Error::BadWeightLength { got: exps.len(), l });
        }
        let mut out = CartanPolynomial::zero(l)?;
        out.add_term(exps, c);
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        self.l
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    /// Total degree (0 for the zero polynomial).
    pub fn degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    pub fn as_row(&self) -> BTreeMap<Vec<u32>, Rat> {
        self.terms.clone()
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps.clone()).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn add(&self, other: &CartanPolynomial) -> Result<CartanPolynomial, Error> {
        if self.l != other.l {
            return Err(Error::RankMismatch { a: self.l, b: other.l });
        }
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &CartanPolynomial) -> Result<CartanPolynomial, Error> {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, c: &Rat) -> CartanPolynomial {
        if c.is_zero() {
            return CartanPolynomial { l: self.l, terms: BTreeMap::new() };
        }
        CartanPolynomial {
            l: self.l,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &CartanPolynomial) -> Result<CartanPolynomial, Error> {
        if self.l != other.l {
            return Err(Error::RankMismatch { a: self.l, b: other.l });
        }
        let mut out = CartanPolynomial::zero(self.l)?;
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        Ok(out)
    }

    /// Evaluates at a weight: `h_p` takes the value `⟨μ, α_p^∨⟩`, the `p`-th
    /// fundamental coordinate.
    pub fn evaluate(&self, mu: &Weight) -> Result<Rat, Error> {
        if mu.rank() != self.l {
            return Err(Error::RankMismatch { a: mu.rank(), b: self.l });
        }
        let mut acc = Rat::zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (p, e) in exps.iter().enumerate() {
                for _ in 0..*e {
                    term *= &mu.coords()[p];
                }
            }
            acc += term;
        }
        Ok(acc)
    }
}

impl core::fmt::Display for CartanPolynomial {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (t, (exps, c)) in self.terms.iter().enumerate() {
            if t > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}", crate::rational::render(c))?;
            for (p, e) in exps.iter().enumerate() {
                if *e == 0 {
                    continue;
                }
                if *e == 1 {
                    write!(f, "*h{}", p + 1)?;
                } else {
                    write!(f, "*h{}^{}", p + 1, e)?;
                }
            }
        }
        Ok(())
    }
}

/// Evaluates a weight-zero element of `U(sl(l+1))` on a highest-weight
/// vector with generic Cartan eigenvalues.
///
/// Every PBW word must have `ad(h)`-weight zero.  Words containing a raising
/// factor annihilate a highest-weight vector (they act first in normal
/// order) and are discarded; by weight counting no surviving word can
/// contain a lowering factor, and one doing so is reported as a
/// normal-ordering defect.  The remaining pure-Cartan words give a
/// polynomial in `h_1, ..., h_l`.
pub fn project_to_polynomial(r: &UeaElement) -> Result<CartanPolynomial, Error> {
    let l = r.l;
    let mut out = CartanPolynomial::zero(l)?;
    for (word, c) in &r.terms {
        if !word.weight(l)?.is_zero() {
            return Err(Error::NonzeroWeight);
        }
        if word.has_raising_factor() {
            continue;
        }
        if word.has_lowering_factor() {
            return Err(Error::NormalOrderDefect { word: format!("{word}") });
        }
        let mut exps = alloc::vec![0u32; l];
        for (g, e) in word.factors() {
            match g {
                Generator::H(p) => exps[p - 1] += e,
                _ => unreachable!("only Cartan factors remain"),
            }
        }
        out.add_term(exps, c.clone());
    }
    Ok(out)
}

/// The closed form of the `i`-th zero-weight polynomial:
/// `p_i = h_i · (Σ_{j<i} -2j/(l+1)·h_j + (l-2i+1)/(l+1)·h_i
///        + Σ_{j>i} (2l-2j+2)/(l+1)·h_j + (l+1)/2 - i)`.
pub fn closed_form_p(l: usize, i: usize) -> Result<CartanPolynomial, Error> {
    check_rank(l)?;
    if i == 0 || i > l {
        return Err(Error::BadWeightIndex { p: i, l });
    }
    let li = l as i64;
    let ii = i as i64;
    let mut inner = CartanPolynomial::constant(l, ratio(li + 1, 2) - rat(ii))?;
    for j in 1..=l {
        let ji = j as i64;
        let coeff = if j < i {
            ratio(-2 * ji, li + 1)
        } else if j == i {
            ratio(li - 2 * ii + 1, li + 1)
        } else {
            ratio(2 * li - 2 * ji + 2, li + 1)
        };
        inner = inner.add(&CartanPolynomial::variable(l, j)?.scale(&coeff))?;
    }
    CartanPolynomial::variable(l, i)?.mul(&inner)
}

/// The lowering chain for the `i`-th polynomial, in written order
/// `f_i, f_{i-1}, ..., f_1, f_{i+1}, ..., f_l` (the rightmost acts first).
pub fn lowering_chain(l: usize, i: usize) -> Result<Vec<usize>, Error> {
    check_rank(l)?;
    if i == 0 || i > l {
        return Err(Error::BadWeightIndex { p: i, l });
    }
    let mut chain: Vec<usize> = (1..=i).rev().collect();
    chain.extend((i + 1)..=l);
    Ok(chain)
}

/// Applies a composition of adjoint operators given in written order
/// (rightmost acts first).
pub fn apply_adjoint_chain(
    chain: &[Generator],
    f: &UeaElement,
) -> Result<UeaElement, Error> {
    let mut acc = f.clone();
    for g in chain.iter().rev() {
        acc = adjoint_gen(*g, &acc)?;
    }
    Ok(acc)
}

/// Computes the `l` zero-weight polynomials
/// `p_i = (-1)^i · ⟨(f_i f_{i-1} ... f_1 f_{i+1} ... f_l) ·_ad v_prime⟩`
/// (projected to the Cartan part) and verifies each against its closed form;
/// a mismatch is an error.
#[allow(non_snake_case)]
pub fn polynomials_P0(l: usize) -> Result<Vec<CartanPolynomial>, Error> {
    let vp = v_prime(l)?;
    let mut out = Vec::with_capacity(l);
    for i in 1..=l {
        let chain: Vec<Generator> = lowering_chain(l, i)?
            .into_iter()
            .map(|t| Generator::F(RootIndex { i: t, j: t + 1 }))
            .collect();
        let r = apply_adjoint_chain(&chain, &vp)?.scale(&sign_pow(i as u64));
        let p = project_to_polynomial(&r)?;
        let closed = closed_form_p(l, i)?;
        if p != closed {
            return Err(Error::ClosedFormMismatch { i });
        }
        out.push(p);
    }
    Ok(out)
}

/// The exact span of a list of polynomials, as a row space over exponent
/// vectors.
pub fn polynomial_span(polys: &[CartanPolynomial]) -> RowSpace<Vec<u32>> {
    let mut space = RowSpace::new();
    for p in polys {
        space.insert(p.as_row());
    }
    space
}

/// Verifies that `{p_i}` and the Cartan projections of a zero-weight basis
/// of the adjoint closure span exactly the same space.
pub fn spans_match(
    polys: &[CartanPolynomial],
    module: &AdjointModule,
) -> Result<bool, Error> {
    let p_span = polynomial_span(polys);
    let mut projections = Vec::new();
    for r in module.zero_weight_basis() {
        projections.push(project_to_polynomial(r)?);
    }
    let r_span = polynomial_span(&projections);
    if p_span.rank() != r_span.rank() {
        return Ok(false);
    }
    let mutual = polys.iter().all(|p| r_span.contains(p.as_row()))
        && projections.iter().all(|p| p_span.contains(p.as_row()));
    Ok(mutual)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary_level;
    use crate::finite_lie::{all_generators, chevalley_h, coroot, root_vector_e, root_vector_f};
    use crate::verma::singular_vector;

    fn gen_e(i: usize, j: usize) -> Generator {
        Generator::E(RootIndex { i, j })
    }

    fn gen_f(i: usize, j: usize) -> Generator {
        Generator::F(RootIndex { i, j })
    }

    #[test]
    fn straightening_swaps_with_bracket() {
        let l = 2;
        // e_1 f_1 = f_1 e_1 + h_1.
        let prod = normalize(l, &[gen_e(1, 2), gen_f(1, 2)]).unwrap();
        let mut expect = UeaElement::zero(l).unwrap();
        expect.add_term(
            UeaWord(alloc::vec![(gen_f(1, 2), 1), (gen_e(1, 2), 1)]),
            rat(1),
        );
        expect.add_term(UeaWord::single(Generator::H(1)), rat(1));
        assert_eq!(prod, expect);
        // Already ordered words pass through unchanged.
        let ordered = normalize(l, &[Generator::H(1), Generator::H(2)]).unwrap();
        assert_eq!(ordered.term_count(), 1);
        let (w, c) = ordered.terms().next().unwrap();
        assert_eq!(w.factors(), &[(Generator::H(1), 1), (Generator::H(2), 1)]);
        assert_eq!(*c, rat(1));
    }

    #[test]
    fn theta_commutator_expands_coroot() {
        let l = 4;
        let th = highest_root(l).unwrap();
        // e_θ f_θ = f_θ e_θ + h_θ = f_θ e_θ + h_1 + ... + h_l.
        let prod = normalize(l, &[Generator::E(th), Generator::F(th)]).unwrap();
        let mut expect = UeaElement::zero(l).unwrap();
        expect.add_term(
            UeaWord(alloc::vec![(Generator::F(th), 1), (Generator::E(th), 1)]),
            rat(1),
        );
        for p in 1..=l {
            expect.add_term(UeaWord::single(Generator::H(p)), rat(1));
        }
        assert_eq!(prod, expect);
    }

    #[test]
    fn powers_collapse_into_exponents() {
        let l = 2;
        let sq = normalize(l, &[gen_f(1, 2), gen_f(1, 2), gen_f(1, 2)]).unwrap();
        assert_eq!(sq.term_count(), 1);
        let (w, _) = sq.terms().next().unwrap();
        assert_eq!(w.factors(), &[(gen_f(1, 2), 3)]);
        assert_eq!(w.length(), 3);
    }

    #[test]
    fn product_is_associative_on_samples() {
        let l = 2;
        let a = normalize(l, &[gen_e(1, 3), Generator::H(1)]).unwrap();
        let b = normalize(l, &[gen_f(1, 2), gen_e(2, 3)]).unwrap();
        let c = normalize(l, &[Generator::H(2), gen_f(1, 3)]).unwrap();
        let ab_c = mul(&mul(&a, &b).unwrap(), &c).unwrap();
        let a_bc = mul(&a, &mul(&b, &c).unwrap()).unwrap();
        assert_eq!(ab_c, a_bc);
    }

    #[test]
    fn renormalizing_canonical_forms_is_identity() {
        let l = 2;
        let x = v_prime(l).unwrap();
        let one = UeaElement::one(l).unwrap();
        assert_eq!(mul(&x, &one).unwrap(), x);
        assert_eq!(mul(&one, &x).unwrap(), x);
    }

    #[test]
    fn adjoint_basics() {
        let l = 2;
        let e1 = UeaElement::from_generator(l, gen_e(1, 2)).unwrap();
        let adj = adjoint_gen(Generator::H(1), &e1).unwrap();
        assert_eq!(adj, e1.scale(&rat(2)));
        // Adjoint of anything on the identity is zero.
        let one = UeaElement::one(l).unwrap();
        assert!(adjoint_gen(Generator::H(1), &one).unwrap().is_zero());
        assert!(adjoint_gen(gen_f(1, 3), &one).unwrap().is_zero());
    }

    #[test]
    fn adjoint_matches_lie_bracket_on_degree_one() {
        let l = 2;
        for a in all_generators(l).unwrap() {
            for b in all_generators(l).unwrap() {
                let be = UeaElement::from_generator(l, b).unwrap();
                let adj = adjoint_gen(a, &be).unwrap();
                let br = bracket(&a.element(l).unwrap(), &b.element(l).unwrap()).unwrap();
                assert_eq!(adj, UeaElement::from_lie(&br).unwrap());
            }
        }
    }

    #[test]
    fn zhu_map_on_simple_vectors() {
        let l = 2;
        let k = boundary_level(l);
        let vac = ModuleVector::vacuum(l, k.clone()).unwrap();
        // 1 ↦ 1.
        assert_eq!(zhu_F(&vac).unwrap(), UeaElement::one(l).unwrap());
        // x(-1)·1 ↦ x.
        let x = crate::verma::apply_gen(gen_e(1, 3), -1, &vac).unwrap();
        assert_eq!(
            zhu_F(&x).unwrap(),
            UeaElement::from_generator(l, gen_e(1, 3)).unwrap()
        );
        // x(-2)·1 ↦ -x.
        let y = crate::verma::apply_gen(gen_e(1, 3), -2, &vac).unwrap();
        assert_eq!(
            zhu_F(&y).unwrap(),
            UeaElement::from_generator(l, gen_e(1, 3)).unwrap().scale(&rat(-1))
        );
        // h_1(-1) e_θ(-1)·1 ↦ e_θ h_1 normal-ordered = h_1 e_θ - e_θ.
        let z = crate::verma::apply_gen(
            Generator::H(1),
            -1,
            &crate::verma::apply_gen(gen_e(1, 3), -1, &vac).unwrap(),
        )
        .unwrap();
        let expect = normalize(l, &[Generator::H(1), gen_e(1, 3)])
            .unwrap()
            .sub(&UeaElement::from_generator(l, gen_e(1, 3)).unwrap())
            .unwrap();
        assert_eq!(zhu_F(&z).unwrap(), expect);
    }

    #[test]
    fn v_prime_rank_two_canonical_form() {
        // 1/3 h1 e(1,3) - 1/3 h2 e(1,3) - e(1,2) e(2,3) - 1/2 e(1,3).
        let vp = v_prime(2).unwrap();
        assert_eq!(vp.term_count(), 4);
        let mut expect = UeaElement::zero(2).unwrap();
        expect.add_term(
            UeaWord(alloc::vec![(Generator::H(1), 1), (gen_e(1, 3), 1)]),
            ratio(1, 3),
        );
        expect.add_term(
            UeaWord(alloc::vec![(Generator::H(2), 1), (gen_e(1, 3), 1)]),
            ratio(-1, 3),
        );
        expect.add_term(
            UeaWord(alloc::vec![(gen_e(1, 2), 1), (gen_e(2, 3), 1)]),
            rat(-1),
        );
        expect.add_term(UeaWord::single(gen_e(1, 3)), ratio(-1, 2));
        assert_eq!(vp, expect);
    }

    #[test]
    fn zhu_image_of_singular_vector_equals_v_prime() {
        for l in [2usize, 4] {
            let v = singular_vector(l).unwrap();
            let image = zhu_F(&v).unwrap();
            assert_eq!(image, v_prime(l).unwrap());
        }
    }

    #[test]
    fn v_prime_is_a_highest_weight_vector_of_weight_theta() {
        for l in [2usize, 4] {
            let vp = v_prime(l).unwrap();
            let w = vp.homogeneous_weight().unwrap().unwrap();
            assert_eq!(w, Weight::from_root(l, highest_root(l).unwrap()).unwrap());
            for p in 1..=l {
                assert!(adjoint_gen(gen_e(p, p + 1), &vp).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn adjoint_closure_dimensions_rank_two() {
        let m = generate_R(2).unwrap();
        assert_eq!(m.dim(), 8);
        assert_eq!(m.dim_zero_weight(), 2);
    }

    #[test]
    fn adjoint_chain_relations_from_the_closed_form_proof() {
        // Five bracket identities used to derive the closed form of p_i.
        // The chains act rightmost-first; targets are stated over the
        // nested-bracket basis vectors.
        for l in [2usize, 4, 6] {
            let lie_chain = |indices: &[usize], start: &LieElement| -> LieElement {
                let mut acc = start.clone();
                for t in indices.iter().rev() {
                    acc = bracket(&crate::finite_lie::chevalley_f(l, *t).unwrap(), &acc).unwrap();
                }
                acc
            };
            let theta = highest_root(l).unwrap();
            let e = |i: usize, j: usize| root_vector_e(l, RootIndex { i, j }).unwrap();
            let f = |i: usize, j: usize| root_vector_f(l, RootIndex { i, j }).unwrap();
            let sgn = |n: usize| if n % 2 == 0 { rat(1) } else { rat(-1) };

            for i in 1..=l {
                // (f_i ... f_1 f_{i+1} ... f_l) e_θ = (-1)^i h_i.
                let chain = lowering_chain(l, i).unwrap();
                let got = lie_chain(&chain, &root_vector_e(l, theta).unwrap());
                let expect = chevalley_h(l, i).unwrap().scale(&sgn(i));
                assert_eq!(got, expect, "chain relation 1 failed at l={l}, i={i}");

                for j in 1..i {
                    // (f_i ... f_1) e_{ε_1-ε_{j+1}} = (-1)^i f_{ε_{j+1}-ε_{i+1}}.
                    let chain: Vec<usize> = (1..=i).rev().collect();
                    let got = lie_chain(&chain, &e(1, j + 1));
                    assert_eq!(
                        got,
                        f(j + 1, i + 1).scale(&sgn(i)),
                        "chain relation 2 failed at l={l}, i={i}, j={j}"
                    );
                    // (f_{i+1} ... f_l) e_{ε_{j+1}-ε_{l+1}} = e_{ε_{j+1}-ε_{i+1}}.
                    let chain: Vec<usize> = ((i + 1)..=l).collect();
                    let got = lie_chain(&chain, &e(j + 1, l + 1));
                    assert_eq!(
                        got,
                        e(j + 1, i + 1),
                        "chain relation 3 failed at l={l}, i={i}, j={j}"
                    );
                }
                for j in 1..i.saturating_sub(1) {
                    // (f_{i-1} ... f_1) e_{ε_1-ε_{j+1}} = (-1)^{i-1} f_{ε_{j+1}-ε_i}.
                    let chain: Vec<usize> = (1..i).rev().collect();
                    let got = lie_chain(&chain, &e(1, j + 1));
                    assert_eq!(
                        got,
                        f(j + 1, i).scale(&sgn(i - 1)),
                        "chain relation 4 failed at l={l}, i={i}, j={j}"
                    );
                    // (f_i f_{i+1} ... f_l) e_{ε_{j+1}-ε_{l+1}} = e_{ε_{j+1}-ε_i}.
                    let chain: Vec<usize> = (i..=l).collect();
                    let got = lie_chain(&chain, &e(j + 1, l + 1));
                    assert_eq!(
                        got,
                        e(j + 1, i),
                        "chain relation 5 failed at l={l}, i={i}, j={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn projection_discards_raising_words() {
        let l = 2;
        // h_1 h_2 + e_1 f_1 projects to h_1 h_2 + h_1.
        let a = normalize(l, &[Generator::H(1), Generator::H(2)]).unwrap();
        let b = normalize(l, &[gen_e(1, 2), gen_f(1, 2)]).unwrap();
        let p = project_to_polynomial(&a.add(&b).unwrap()).unwrap();
        let h1 = CartanPolynomial::variable(l, 1).unwrap();
        let h2 = CartanPolynomial::variable(l, 2).unwrap();
        let expect = h1.mul(&h2).unwrap().add(&h1).unwrap();
        assert_eq!(p, expect);
    }

    #[test]
    fn projection_rejects_nonzero_weight() {
        let l = 2;
        let e1 = UeaElement::from_generator(l, gen_e(1, 2)).unwrap();
        assert_eq!(project_to_polynomial(&e1), Err(Error::NonzeroWeight));
    }

    #[test]
    fn closed_forms_at_rank_two() {
        let l = 2;
        let h1 = CartanPolynomial::variable(l, 1).unwrap();
        let h2 = CartanPolynomial::variable(l, 2).unwrap();
        // p_1 = h_1 (1/3 h_1 + 2/3 h_2 + 1/2).
        let inner1 = h1
            .scale(&ratio(1, 3))
            .add(&h2.scale(&ratio(2, 3)))
            .unwrap()
            .add(&CartanPolynomial::constant(l, ratio(1, 2)).unwrap())
            .unwrap();
        assert_eq!(closed_form_p(l, 1).unwrap(), h1.mul(&inner1).unwrap());
        // p_2 = h_2 (-2/3 h_1 - 1/3 h_2 - 1/2).
        let inner2 = h1
            .scale(&ratio(-2, 3))
            .add(&h2.scale(&ratio(-1, 3)))
            .unwrap()
            .add(&CartanPolynomial::constant(l, ratio(-1, 2)).unwrap())
            .unwrap();
        assert_eq!(closed_form_p(l, 2).unwrap(), h2.mul(&inner2).unwrap());
    }

    #[test]
    fn polynomials_match_closed_forms_rank_two() {
        let ps = polynomials_P0(2).unwrap();
        assert_eq!(ps.len(), 2);
        assert_eq!(ps[0], closed_form_p(2, 1).unwrap());
        assert_eq!(ps[1], closed_form_p(2, 2).unwrap());
        // The span has dimension l.
        assert_eq!(polynomial_span(&ps).rank(), 2);
    }

    #[test]
    fn zero_weight_span_matches_polynomials_rank_two() {
        let ps = polynomials_P0(2).unwrap();
        let m = generate_R(2).unwrap();
        assert!(spans_match(&ps, &m).unwrap());
    }

    #[test]
    fn polynomial_evaluation() {
        let l = 2;
        let p = closed_form_p(l, 1).unwrap();
        // At μ = (-3/2, 0): p_1 = -3/2 · (1/3·(-3/2) + 0 + 1/2) = 0.
        let mu = Weight::from_coords(l, alloc::vec![ratio(-3, 2), rat(0)]).unwrap();
        assert_eq!(p.evaluate(&mu).unwrap(), rat(0));
        // At ρ̄ = (1, 1): p_1 = 1·(1/3 + 2/3 + 1/2) = 3/2.
        let rho = crate::root_system::weyl_vector(l).unwrap();
        assert_eq!(p.evaluate(&rho).unwrap(), ratio(3, 2));
    }

    #[test]
    fn scaling_does_not_change_zero_sets() {
        let l = 2;
        let p = closed_form_p(l, 1).unwrap();
        let q = p.scale(&ratio(-7, 3));
        let mu = Weight::from_coords(l, alloc::vec![ratio(-3, 2), rat(0)]).unwrap();
        assert!(p.evaluate(&mu).unwrap().is_zero());
        assert!(q.evaluate(&mu).unwrap().is_zero());
    }

    #[test]
    fn from_lie_embeds_decomposition() {
        let l = 2;
        let h = coroot(l, highest_root(l).unwrap()).unwrap();
        let el = UeaElement::from_lie(&h).unwrap();
        let expect = UeaElement::from_generator(l, Generator::H(1))
            .unwrap()
            .add(&UeaElement::from_generator(l, Generator::H(2)).unwrap())
            .unwrap();
        assert_eq!(el, expect);
        let f = root_vector_f(l, highest_root(l).unwrap()).unwrap();
        let el2 = UeaElement::from_lie(&f).unwrap();
        assert_eq!(
            el2,
            UeaElement::from_generator(l, gen_f(1, 3)).unwrap()
        );
    }
}
