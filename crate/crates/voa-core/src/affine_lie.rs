//! The affinization `ĝ = sl(l+1) ⊗ C[t, t^{-1}] ⊕ C·c`.
//!
//! Elements are finite sums of loop terms `x(n) = x ⊗ t^n` plus a multiple of
//! the central element `c`, with the bracket
//!
//! `[x(m), y(n)] = [x, y](m+n) + m δ_{m+n,0} (x, y) c`
//!
//! where `(·,·)` is the trace form normalised by `(θ, θ) = 2`.  The module
//! also provides affine weights `Λ = level·Λ_0 + finite + delta·δ`, positive
//! real roots `α + mδ`, and the pairing of affine weights with real coroots
//! `(α + mδ)^∨ = α^∨ + m·c` (all roots of `A_l^{(1)}` are long, so no
//! rescaling occurs): `⟨Λ, (α+mδ)^∨⟩ = ⟨finite(Λ), α^∨⟩ + m·level(Λ)`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::check_rank;
use crate::error::Error;
use crate::finite_lie::{invariant_form, LieElement};
use crate::rational::{rat, Rat};
use crate::root_system::{all_roots, pairing, positive_roots, weyl_vector, RootIndex, Weight};

/// An element of the affinization: loop terms indexed by degree, plus a
/// central coefficient.  Loop coefficients are never zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineElement {
    l: usize,
    loops: BTreeMap<i64, LieElement>,
    central: Rat,
}

impl AffineElement {
    pub fn zero(l: usize) -> Result<Self, Error> {
        check_rank(l)?;
        Ok(AffineElement { l, loops: BTreeMap::new(), central: Rat::zero() })
    }

    /// The loop element `x(n) = x ⊗ t^n`.
    pub fn from_loop(x: &LieElement, n: i64) -> Result<Self, Error> {
        let mut out = AffineElement::zero(x.rank())?;
        out.add_loop(n, x);
        Ok(out)
    }

    /// The central element scaled by `coeff`.
    pub fn central(l: usize, coeff: Rat) -> Result<Self, Error> {
        let mut out = AffineElement::zero(l)?;
        out.central = coeff;
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        self.l
    }

    pub fn is_zero(&self) -> bool {
        self.loops.is_empty() && self.central.is_zero()
    }

    /// Central coefficient.
    pub fn central_coefficient(&self) -> &Rat {
        &self.central
    }

    /// Loop terms `(degree, coefficient)` in increasing degree order.
    pub fn loop_terms(&self) -> impl Iterator<Item = (&i64, &LieElement)> {
        self.loops.iter()
    }

    /// The loop coefficient at degree `n` (zero if absent).
    pub fn loop_at(&self, n: i64) -> LieElement {
        self.loops
            .get(&n)
            .cloned()
            .unwrap_or_else(|| LieElement::zero(self.l).expect("rank validated"))
    }

    fn add_loop(&mut self, n: i64, x: &LieElement) {
        if x.is_zero() {
            return;
        }
        match self.loops.remove(&n) {
            None => {
                self.loops.insert(n, x.clone());
            }
            Some(prev) => {
                let sum = prev.add(x).expect("ranks match");
                if !sum.is_zero() {
                    self.loops.insert(n, sum);
                }
            }
        }
    }

    pub fn add(&self, other: &AffineElement) -> Result<AffineElement, Error> {
        if self.l != other.l {
            return Err(Error::RankMismatch { a: self.l, b: other.l });
        }
        let mut out = self.clone();
        for (n, x) in &other.loops {
            out.add_loop(*n, x);
        }
        out.central += &other.central;
        Ok(out)
    }

    pub fn sub(&self, other: &AffineElement) -> Result<AffineElement, Error> {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, c: &Rat) -> AffineElement {
        if c.is_zero() {
            return AffineElement {
                l: self.l,
                loops: BTreeMap::new(),
                central: Rat::zero(),
            };
        }
        AffineElement {
            l: self.l,
            loops: self.loops.iter().map(|(n, x)| (*n, x.scale(c))).collect(),
            central: &self.central * c,
        }
    }
}

impl core::fmt::Display for AffineElement {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (n, x) in &self.loops {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({x})({n})")?;
            first = false;
        }
        if !self.central.is_zero() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{}*c", crate::rational::render(&self.central))?;
        }
        Ok(())
    }
}

/// The affine bracket
/// `[x(m), y(n)] = [x, y](m+n) + m δ_{m+n,0} (x, y) c`, extended bilinearly;
/// the central element brackets to zero with everything.
pub fn affine_bracket(a: &AffineElement, b: &AffineElement) -> Result<AffineElement, Error> {
    if a.l != b.l {
        return Err(Error::RankMismatch { a: a.l, b: b.l });
    }
    let mut out = AffineElement::zero(a.l)?;
    for (m, x) in &a.loops {
        for (n, y) in &b.loops {
            let fin = crate::finite_lie::bracket(x, y)?;
            out.add_loop(m + n, &fin);
            if m + n == 0 {
                out.central += rat(*m) * invariant_form(x, y)?;
            }
        }
    }
    Ok(out)
}

/// An affine weight `Λ = level·Λ_0 + finite + delta·δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineWeight {
    level: Rat,
    finite: Weight,
    delta: Rat,
}

impl AffineWeight {
    pub fn new(level: Rat, finite: Weight, delta: Rat) -> Self {
        AffineWeight { level, finite, delta }
    }

    pub fn level(&self) -> &Rat {
        &self.level
    }

    pub fn finite(&self) -> &Weight {
        &self.finite
    }

    pub fn delta_coefficient(&self) -> &Rat {
        &self.delta
    }

    pub fn rank(&self) -> usize {
        self.finite.rank()
    }

    pub fn add(&self, other: &AffineWeight) -> Result<AffineWeight, Error> {
        Ok(AffineWeight {
            level: &self.level + &other.level,
            finite: self.finite.add(&other.finite)?,
            delta: &self.delta + &other.delta,
        })
    }

    pub fn sub(&self, other: &AffineWeight) -> Result<AffineWeight, Error> {
        Ok(AffineWeight {
            level: &self.level - &other.level,
            finite: self.finite.sub(&other.finite)?,
            delta: &self.delta - &other.delta,
        })
    }

    pub fn scale(&self, c: &Rat) -> AffineWeight {
        AffineWeight {
            level: &self.level * c,
            finite: self.finite.scale(c),
            delta: &self.delta * c,
        }
    }
}

impl core::fmt::Display for AffineWeight {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "{}*L0 + {} + {}*d",
            crate::rational::render(&self.level),
            self.finite,
            crate::rational::render(&self.delta)
        )
    }
}

/// The affine Weyl vector `ρ̂`: level `h^∨ = l+1`, finite part `ρ̄`,
/// delta coefficient 0.
pub fn rho_hat(l: usize) -> Result<AffineWeight, Error> {
    Ok(AffineWeight {
        level: rat(l as i64 + 1),
        finite: weyl_vector(l)?,
        delta: Rat::zero(),
    })
}

/// A real root `α + mδ` of the affinization (`m >= 0`; positive iff `m > 0`
/// or `α` is positive).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RealRoot {
    pub alpha: RootIndex,
    pub m: i64,
}

impl RealRoot {
    pub fn new(l: usize, alpha: RootIndex, m: i64) -> Result<Self, Error> {
        let alpha = RootIndex::new(l, alpha.i, alpha.j)?;
        if m < 0 || (m == 0 && !alpha.is_positive()) {
            return Err(Error::BadRootIndex { i: alpha.i, j: alpha.j, l });
        }
        Ok(RealRoot { alpha, m })
    }

    /// This root as an affine weight (level 0, finite part the root,
    /// delta coefficient `m`).
    pub fn as_affine_weight(&self, l: usize) -> Result<AffineWeight, Error> {
        Ok(AffineWeight {
            level: Rat::zero(),
            finite: Weight::from_root(l, self.alpha)?,
            delta: rat(self.m),
        })
    }

    /// Coordinates of the coroot `α^∨ + m·c` over
    /// `(α_1^∨, ..., α_l^∨, c)`: integers, length `l+1`.
    pub fn coroot_coords(&self, l: usize) -> Result<Vec<Rat>, Error> {
        check_rank(l)?;
        let mut coords = Vec::with_capacity(l + 1);
        let (lo, hi, sign) = if self.alpha.is_positive() {
            (self.alpha.i, self.alpha.j, rat(1))
        } else {
            (self.alpha.j, self.alpha.i, rat(-1))
        };
        for p in 1..=l {
            if lo <= p && p < hi {
                coords.push(sign.clone());
            } else {
                coords.push(Rat::zero());
            }
        }
        coords.push(rat(self.m));
        Ok(coords)
    }
}

impl core::fmt::Display for RealRoot {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.m == 0 {
            write!(f, "{}", self.alpha)
        } else {
            write!(f, "{}+{}d", self.alpha, self.m)
        }
    }
}

/// Pairing of an affine weight with the coroot of the real root `α + mδ`:
/// `⟨Λ, α^∨ + m·c⟩ = ⟨finite(Λ), α^∨⟩ + m · level(Λ)`.
/// The delta coefficient of `Λ` does not contribute.
pub fn affine_pairing(lambda: &AffineWeight, r: &RealRoot) -> Rat {
    pairing(&lambda.finite, r.alpha) + rat(r.m) * &lambda.level
}

/// All positive real roots `α + mδ` with `0 <= m <= max_m`, ordered by `m`
/// and then by root: for `m = 0` the positive `α` only; for `m >= 1` all
/// `α ∈ Δ`.
pub fn enumerate_positive_real_roots(l: usize, max_m: i64) -> Result<Vec<RealRoot>, Error> {
    check_rank(l)?;
    let mut out = Vec::new();
    for alpha in positive_roots(l)? {
        out.push(RealRoot { alpha, m: 0 });
    }
    for m in 1..=max_m.max(0) {
        for alpha in all_roots(l)? {
            out.push(RealRoot { alpha, m });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary_level;
    use crate::finite_lie::{chevalley_e, chevalley_h, coroot, root_vector_e, root_vector_f};
    use crate::rational::ratio;
    use crate::root_system::highest_root;

    fn theta_loops(l: usize) -> (LieElement, LieElement, LieElement) {
        let th = highest_root(l).unwrap();
        (
            root_vector_e(l, th).unwrap(),
            root_vector_f(l, th).unwrap(),
            coroot(l, th).unwrap(),
        )
    }

    #[test]
    fn cocycle_fires_only_at_degree_sum_zero() {
        let l = 2;
        let (etheta, ftheta, htheta) = theta_loops(l);
        // [e_θ(1), f_θ(-1)] = h_θ(0) + (e_θ, f_θ) c = h_θ(0) + c.
        let a = AffineElement::from_loop(&etheta, 1).unwrap();
        let b = AffineElement::from_loop(&ftheta, -1).unwrap();
        let br = affine_bracket(&a, &b).unwrap();
        assert_eq!(br.loop_at(0), htheta);
        assert_eq!(*br.central_coefficient(), rat(1));
        // [e_θ(1), f_θ(-2)] = h_θ(-1), no central term.
        let b2 = AffineElement::from_loop(&ftheta, -2).unwrap();
        let br2 = affine_bracket(&a, &b2).unwrap();
        assert_eq!(br2.loop_at(-1), htheta);
        assert_eq!(*br2.central_coefficient(), rat(0));
    }

    #[test]
    fn cocycle_antisymmetry() {
        let l = 2;
        let (etheta, ftheta, _) = theta_loops(l);
        for m in [-3i64, -1, 1, 2] {
            let a = AffineElement::from_loop(&etheta, m).unwrap();
            let b = AffineElement::from_loop(&ftheta, -m).unwrap();
            let ab = affine_bracket(&a, &b).unwrap();
            let ba = affine_bracket(&b, &a).unwrap();
            assert_eq!(
                ab.central_coefficient().clone(),
                -ba.central_coefficient().clone()
            );
            assert!(ab.add(&ba).unwrap().is_zero());
        }
    }

    #[test]
    fn central_element_is_central() {
        let l = 2;
        let c = AffineElement::central(l, rat(5)).unwrap();
        let x = AffineElement::from_loop(&chevalley_e(l, 1).unwrap(), 3).unwrap();
        assert!(affine_bracket(&c, &x).unwrap().is_zero());
        assert!(affine_bracket(&x, &c).unwrap().is_zero());
    }

    #[test]
    fn loop_bracket_carries_finite_bracket() {
        let l = 2;
        let h1 = AffineElement::from_loop(&chevalley_h(l, 1).unwrap(), 0).unwrap();
        let e1 = AffineElement::from_loop(&chevalley_e(l, 1).unwrap(), 5).unwrap();
        let br = affine_bracket(&h1, &e1).unwrap();
        assert_eq!(br, e1.scale(&rat(2)));
    }

    #[test]
    fn affine_jacobi_on_samples() {
        let l = 2;
        let (etheta, ftheta, htheta) = theta_loops(l);
        let xs = [
            AffineElement::from_loop(&etheta, 1).unwrap(),
            AffineElement::from_loop(&ftheta, -1).unwrap(),
            AffineElement::from_loop(&htheta, 0).unwrap(),
            AffineElement::from_loop(&chevalley_e(l, 1).unwrap(), -2).unwrap(),
            AffineElement::central(l, ratio(1, 2)).unwrap(),
        ];
        for x in &xs {
            for y in &xs {
                for z in &xs {
                    let lhs = affine_bracket(x, &affine_bracket(y, z).unwrap()).unwrap();
                    let rhs = affine_bracket(&affine_bracket(x, y).unwrap(), z)
                        .unwrap()
                        .add(&affine_bracket(y, &affine_bracket(x, z).unwrap()).unwrap())
                        .unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn shifted_pairings_at_boundary_level() {
        for l in [2usize, 4, 6] {
            let lam = AffineWeight::new(
                boundary_level(l),
                Weight::zero(l).unwrap(),
                Rat::zero(),
            );
            let shifted = lam.add(&rho_hat(l).unwrap()).unwrap();
            // Level of λ + ρ̂ is (l+1)/2.
            assert_eq!(*shifted.level(), ratio(l as i64 + 1, 2));
            // ⟨λ+ρ̂, α_i^∨⟩ = 1.
            for p in 1..=l {
                let r = RealRoot::new(l, RootIndex { i: p, j: p + 1 }, 0).unwrap();
                assert_eq!(affine_pairing(&shifted, &r), rat(1));
            }
            // α_0 = δ - θ: ⟨λ+ρ̂, α_0^∨⟩ = -(l-1)/2.
            let th = highest_root(l).unwrap();
            let a0 = RealRoot::new(l, th.negated(), 1).unwrap();
            assert_eq!(affine_pairing(&shifted, &a0), ratio(-(l as i64 - 1), 2));
            // 2δ - θ: pairing 1.
            let r2 = RealRoot::new(l, th.negated(), 2).unwrap();
            assert_eq!(affine_pairing(&shifted, &r2), rat(1));
        }
    }

    #[test]
    fn pairing_of_two_delta_minus_theta_decomposes() {
        // (2δ-θ)^∨ = 2c - θ^∨ = 2α_0^∨ + θ^∨-part bookkeeping:
        // ⟨Λ, (2δ-θ)^∨⟩ = 2·level - ⟨finite, θ^∨⟩ for every Λ.
        let l = 4;
        let mu = Weight::from_coords(
            l,
            alloc::vec![ratio(1, 3), rat(-1), ratio(7, 2), rat(0)],
        )
        .unwrap();
        let lam = AffineWeight::new(ratio(-5, 2), mu.clone(), rat(3));
        let th = highest_root(l).unwrap();
        let r2 = RealRoot::new(l, th.negated(), 2).unwrap();
        let expect = rat(2) * lam.level().clone() - pairing(&mu, th);
        assert_eq!(affine_pairing(&lam, &r2), expect);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_positive_real_roots(2, 0).unwrap().len(), 3);
        assert_eq!(enumerate_positive_real_roots(2, 1).unwrap().len(), 9);
        assert_eq!(enumerate_positive_real_roots(2, 2).unwrap().len(), 15);
        // l(l+1)/2 + max_m * l(l+1) in general.
        assert_eq!(enumerate_positive_real_roots(4, 3).unwrap().len(), 10 + 3 * 20);
    }

    #[test]
    fn real_root_validation_and_coords() {
        let l = 2;
        let th = highest_root(l).unwrap();
        assert!(RealRoot::new(l, th.negated(), 0).is_err());
        assert!(RealRoot::new(l, th, -1).is_err());
        let r = RealRoot::new(l, th.negated(), 2).unwrap();
        assert_eq!(r.coroot_coords(l).unwrap(), alloc::vec![rat(-1), rat(-1), rat(2)]);
        let s = RealRoot::new(l, RootIndex { i: 2, j: 3 }, 0).unwrap();
        assert_eq!(s.coroot_coords(l).unwrap(), alloc::vec![rat(0), rat(1), rat(0)]);
    }

    #[test]
    fn delta_coefficient_does_not_affect_pairings() {
        let l = 2;
        let base = AffineWeight::new(ratio(-3, 2), weyl_vector(l).unwrap(), rat(0));
        let shifted = AffineWeight::new(ratio(-3, 2), weyl_vector(l).unwrap(), rat(-2));
        for r in enumerate_positive_real_roots(l, 3).unwrap() {
            assert_eq!(affine_pairing(&base, &r), affine_pairing(&shifted, &r));
        }
    }
}
