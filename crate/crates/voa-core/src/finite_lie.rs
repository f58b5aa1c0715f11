//! The simple Lie algebra `sl(l+1)` over the rationals.
//!
//! Elements are sparse traceless `(l+1) x (l+1)` matrices with exact rational
//! entries.  The Chevalley generators are `e_p = E_{p,p+1}`,
//! `f_p = E_{p+1,p}`, `h_p = E_{pp} - E_{p+1,p+1}`.  Root vectors for
//! non-simple roots are *defined* by nested brackets of the Chevalley
//! generators:
//!
//! - `e_{ε_i-ε_j} = [e_{j-1}, [e_{j-2}, [..., [e_{i+1}, e_i]...]]]`
//! - `f_{ε_i-ε_j} = [f_i, [f_{i+1}, [..., [f_{j-2}, f_{j-1}]...]]]`
//!
//! for `i < j`.  Each such vector is a single matrix unit up to sign, and the
//! sign produced by the nested bracket is the one every other module of this
//! crate inherits (it alternates: the vector equals `(-1)^{j-i-1} E_{ij}`,
//! which the tests pin down).  The invariant bilinear form is the trace form
//! `(x, y) = tr(xy)`, normalised so that `(θ, θ) = 2`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::check_rank;
use crate::error::Error;
use crate::rational::{rat, Rat};
use crate::root_system::{positive_roots, RootIndex, Weight};

/// A traceless `(l+1) x (l+1)` matrix with exact rational entries.
///
/// Entries are stored sparsely (absent = zero); stored entries are never
/// zero.  Row/column indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieElement {
    l: usize,
    entries: BTreeMap<(usize, usize), Rat>,
}

impl LieElement {
    /// The zero element of `sl(l+1)`.
    pub fn zero(l: usize) -> Result<Self, Error> {
        check_rank(l)?;
        Ok(LieElement { l, entries: BTreeMap::new() })
    }

    /// Builds an element from explicit entries; the trace must vanish.
    pub fn from_entries(
        l: usize,
        entries: impl IntoIterator<Item = ((usize, usize), Rat)>,
    ) -> Result<Self, Error> {
        let mut x = LieElement::zero(l)?;
        for ((i, j), c) in entries {
            if i == 0 || j == 0 || i > l + 1 || j > l + 1 {
                return Err(Error::BadRootIndex { i, j, l });
            }
            x.add_entry(i, j, &c);
        }
        let trace: Rat = (1..=l + 1)
            .map(|i| x.entry(i, i))
            .fold(Rat::zero(), |a, b| a + b);
        if !trace.is_zero() {
            return Err(Error::MixedWeight);
        }
        Ok(x)
    }

    pub(crate) fn matrix_unit(l: usize, i: usize, j: usize) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert((i, j), rat(1));
        LieElement { l, entries }
    }

    pub fn rank(&self) -> usize {
        self.l
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// The entry at (1-based) position `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> Rat {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(Rat::zero)
    }

    /// Sparse view of the non-zero entries.
    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Rat)> {
        self.entries.iter()
    }

    fn add_entry(&mut self, i: usize, j: usize, c: &Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.entries.entry((i, j)).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.entries.remove(&(i, j));
        }
    }

    pub fn add(&self, other: &LieElement) -> Result<LieElement, Error> {
        if self.l != other.l {
            return Err(Error::RankMismatch { a: self.l, b: other.l });
        }
        let mut out = self.clone();
        for ((i, j), c) in &other.entries {
            out.add_entry(*i, *j, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &LieElement) -> Result<LieElement, Error> {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, c: &Rat) -> LieElement {
        if c.is_zero() {
            return LieElement { l: self.l, entries: BTreeMap::new() };
        }
        LieElement {
            l: self.l,
            entries: self.entries.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }
}

impl core::fmt::Display for LieElement {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        for (t, ((i, j), c)) in self.entries.iter().enumerate() {
            if t > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*E[{},{}]", crate::rational::render(c), i, j)?;
        }
        Ok(())
    }
}

/// The Chevalley raising generator `e_p = E_{p,p+1}`.
pub fn chevalley_e(l: usize, p: usize) -> Result<LieElement, Error> {
    check_rank(l)?;
    if p == 0 || p > l {
        return Err(Error::BadWeightIndex { p, l });
    }
    Ok(LieElement::matrix_unit(l, p, p + 1))
}

/// The Chevalley lowering generator `f_p = E_{p+1,p}`.
pub fn chevalley_f(l: usize, p: usize) -> Result<LieElement, Error> {
    check_rank(l)?;
    if p == 0 || p > l {
        return Err(Error::BadWeightIndex { p, l });
    }
    Ok(LieElement::matrix_unit(l, p + 1, p))
}

/// The Chevalley Cartan generator `h_p = E_{pp} - E_{p+1,p+1}`.
pub fn chevalley_h(l: usize, p: usize) -> Result<LieElement, Error> {
    check_rank(l)?;
    if p == 0 || p > l {
        return Err(Error::BadWeightIndex { p, l });
    }
    let mut x = LieElement::matrix_unit(l, p, p);
    x.add_entry(p + 1, p + 1, &rat(-1));
    Ok(x)
}

/// The matrix commutator `[x, y] = xy - yx`.
pub fn bracket(x: &LieElement, y: &LieElement) -> Result<LieElement, Error> {
    if x.l != y.l {
        return Err(Error::RankMismatch { a: x.l, b: y.l });
    }
    let mut out = LieElement { l: x.l, entries: BTreeMap::new() };
    for ((a, b), xc) in &x.entries {
        for ((c, d), yc) in &y.entries {
            if b == c {
                out.add_entry(*a, *d, &(xc * yc));
            }
            if d == a {
                out.add_entry(*c, *b, &-(xc * yc));
            }
        }
    }
    Ok(out)
}

/// The root vector `e_{ε_i-ε_j}` (`i < j`) defined by the nested bracket
/// `[e_{j-1}, [e_{j-2}, [..., [e_{i+1}, e_i]...]]]`.
pub fn root_vector_e(l: usize, alpha: RootIndex) -> Result<LieElement, Error> {
    let alpha = RootIndex::new(l, alpha.i, alpha.j)?;
    if !alpha.is_positive() {
        return Err(Error::BadRootIndex { i: alpha.i, j: alpha.j, l });
    }
    let mut v = chevalley_e(l, alpha.i)?;
    for t in (alpha.i + 1)..alpha.j {
        v = bracket(&chevalley_e(l, t)?, &v)?;
    }
    Ok(v)
}

/// The root vector `f_{ε_i-ε_j}` (`i < j`) defined by the nested bracket
/// `[f_i, [f_{i+1}, [..., [f_{j-2}, f_{j-1}]...]]]`.
pub fn root_vector_f(l: usize, alpha: RootIndex) -> Result<LieElement, Error> {
    let alpha = RootIndex::new(l, alpha.i, alpha.j)?;
    if !alpha.is_positive() {
        return Err(Error::BadRootIndex { i: alpha.i, j: alpha.j, l });
    }
    let mut v = chevalley_f(l, alpha.j - 1)?;
    for t in (alpha.i..alpha.j - 1).rev() {
        v = bracket(&chevalley_f(l, t)?, &v)?;
    }
    Ok(v)
}

/// The root vector attached to any root: `e_α` for `α` positive, `f_{-α}`
/// for `α` negative.
pub fn root_vector(l: usize, alpha: RootIndex) -> Result<LieElement, Error> {
    if alpha.is_positive() {
        root_vector_e(l, alpha)
    } else {
        root_vector_f(l, alpha.negated())
    }
}

/// The coroot `h_α = [e_α, f_α]` (negated for negative `α`).
pub fn coroot(l: usize, alpha: RootIndex) -> Result<LieElement, Error> {
    if alpha.is_positive() {
        bracket(&root_vector_e(l, alpha)?, &root_vector_f(l, alpha)?)
    } else {
        Ok(coroot(l, alpha.negated())?.scale(&rat(-1)))
    }
}

/// The invariant trace form `(x, y) = tr(xy)`; satisfies `(θ, θ) = 2`.
pub fn invariant_form(x: &LieElement, y: &LieElement) -> Result<Rat, Error> {
    if x.l != y.l {
        return Err(Error::RankMismatch { a: x.l, b: y.l });
    }
    let mut acc = Rat::zero();
    for ((a, b), xc) in &x.entries {
        if let Some(yc) = y.entries.get(&(*b, *a)) {
            acc += xc * yc;
        }
    }
    Ok(acc)
}

/// The `ad(h)`-weight of `x`, if `x` lies in a single weight space.
///
/// Diagonal elements have weight zero; an element supported on a single
/// off-diagonal position `(i, j)` has weight `ε_i - ε_j`.  Anything else is
/// rejected as mixed.  The zero element reports weight zero.
pub fn weight_of(x: &LieElement) -> Result<Weight, Error> {
    let mut off: Option<(usize, usize)> = None;
    let mut has_diag = false;
    for ((i, j), _) in &x.entries {
        if i == j {
            has_diag = true;
        } else {
            match off {
                None => off = Some((*i, *j)),
                Some(p) if p == (*i, *j) => {}
                Some(_) => return Err(Error::MixedWeight),
            }
        }
    }
    match (has_diag, off) {
        (_, None) => Weight::zero(x.l),
        (false, Some((i, j))) => Weight::from_root(x.l, RootIndex { i, j }),
        (true, Some(_)) => Err(Error::MixedWeight),
    }
}

/// Ordered basis labels for `sl(l+1)`: all lowering vectors first, then the
/// Cartan generators, then the raising vectors.
///
/// `F(α)` and `E(α)` carry a *positive* root `α` and denote the
/// nested-bracket vectors `f_α` and `e_α`; `H(p)` denotes `h_p`.  The derived
/// order (`F < H < E`, roots lexicographic) is the global PBW order used by
/// the enveloping-algebra module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    F(RootIndex),
    H(usize),
    E(RootIndex),
}

impl Generator {
    /// The matrix realising this basis label.
    pub fn element(&self, l: usize) -> Result<LieElement, Error> {
        match self {
            Generator::F(r) => root_vector_f(l, *r),
            Generator::H(p) => chevalley_h(l, *p),
            Generator::E(r) => root_vector_e(l, *r),
        }
    }

    /// The `ad(h)`-weight of the basis vector, in fundamental coordinates.
    pub fn weight(&self, l: usize) -> Result<Weight, Error> {
        match self {
            Generator::F(r) => Weight::from_root(l, r.negated()),
            Generator::H(_) => Weight::zero(l),
            Generator::E(r) => Weight::from_root(l, *r),
        }
    }
}

impl core::fmt::Display for Generator {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Generator::F(r) => write!(f, "f({},{})", r.i, r.j),
            Generator::H(p) => write!(f, "h{p}"),
            Generator::E(r) => write!(f, "e({},{})", r.i, r.j),
        }
    }
}

/// The full ordered basis of `sl(l+1)`: `l(l+1)/2` lowering vectors,
/// `l` Cartan generators, `l(l+1)/2` raising vectors.
pub fn all_generators(l: usize) -> Result<Vec<Generator>, Error> {
    let pos = positive_roots(l)?;
    let mut out: Vec<Generator> = pos.iter().map(|r| Generator::F(*r)).collect();
    out.extend((1..=l).map(Generator::H));
    out.extend(pos.iter().map(|r| Generator::E(*r)));
    Ok(out)
}

/// Expands `x` over the ordered basis: `x = Σ c_g · g`.
///
/// Off-diagonal entries divide by the recorded sign of the corresponding
/// nested-bracket root vector; the diagonal part expands over the `h_p` by
/// prefix sums.  Returns pairs in basis order with non-zero coefficients.
pub fn decompose(x: &LieElement) -> Result<Vec<(Generator, Rat)>, Error> {
    let l = x.l;
    let mut out: Vec<(Generator, Rat)> = Vec::new();
    let mut diag = Rat::zero();
    let mut prefix: Vec<Rat> = Vec::with_capacity(l);
    for p in 1..=l {
        diag += x.entry(p, p);
        prefix.push(diag.clone());
    }
    debug_assert!(
        (diag + x.entry(l + 1, l + 1)).is_zero(),
        "trace must vanish on sl(l+1)"
    );
    for ((i, j), c) in &x.entries {
        if i == j {
            continue;
        }
        let (gen, pos) = if i < j {
            (Generator::E(RootIndex { i: *i, j: *j }), RootIndex { i: *i, j: *j })
        } else {
            (Generator::F(RootIndex { i: *j, j: *i }), RootIndex { i: *j, j: *i })
        };
        let vector = match gen {
            Generator::E(r) => root_vector_e(l, r)?,
            Generator::F(r) => root_vector_f(l, r)?,
            Generator::H(_) => unreachable!(),
        };
        // The nested-bracket vector is a single unit: read off its sign.
        let sign = if i < j {
            vector.entry(pos.i, pos.j)
        } else {
            vector.entry(pos.j, pos.i)
        };
        debug_assert!(!sign.is_zero());
        out.push((gen, c / sign));
    }
    for p in 1..=l {
        if !prefix[p - 1].is_zero() {
            out.push((Generator::H(p), prefix[p - 1].clone()));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// Rebuilds an element from basis coefficients (inverse of [`decompose`]).
pub fn compose(l: usize, terms: &[(Generator, Rat)]) -> Result<LieElement, Error> {
    let mut acc = LieElement::zero(l)?;
    for (g, c) in terms {
        acc = acc.add(&g.element(l)?.scale(c))?;
    }
    Ok(acc)
}
