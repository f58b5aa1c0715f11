//! The finite root system of type `A_l` and its weight lattice.
//!
//! Roots are differences `ε_i - ε_j` of coordinate functionals on diagonal
//! matrices, encoded by the index pair `(i, j)` with `1 <= i, j <= l+1`,
//! `i != j`; the root is positive exactly when `i < j`.  Weights are stored in
//! fundamental-weight coordinates: the vector of pairings with the simple
//! coroots `α_1^∨, ..., α_l^∨`.  All coordinates are exact rationals.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::Error;
use crate::rational::{rat, Rat};
use crate::check_rank;

/// The root `ε_i - ε_j` of `A_l` (`i != j`); positive iff `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootIndex {
    pub i: usize,
    pub j: usize,
}

impl RootIndex {
    /// Builds `ε_i - ε_j`, validating the index range for rank `l`.
    pub fn new(l: usize, i: usize, j: usize) -> Result<Self, Error> {
        check_rank(l)?;
        if i == 0 || j == 0 || i > l + 1 || j > l + 1 || i == j {
            return Err(Error::BadRootIndex { i, j, l });
        }
        Ok(RootIndex { i, j })
    }

    /// True when the root is positive (`i < j`).
    pub fn is_positive(&self) -> bool {
        self.i < self.j
    }

    /// The negated root `ε_j - ε_i`.
    pub fn negated(&self) -> RootIndex {
        RootIndex { i: self.j, j: self.i }
    }

    /// Height with sign: `j - i` counts the simple roots in the expansion.
    pub fn height(&self) -> i64 {
        self.j as i64 - self.i as i64
    }
}

impl core::fmt::Display for RootIndex {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "e{}-e{}", self.i, self.j)
    }
}

/// The simple roots `α_p = ε_p - ε_{p+1}`, `p = 1..l`.
pub fn simple_roots(l: usize) -> Result<Vec<RootIndex>, Error> {
    check_rank(l)?;
    Ok((1..=l).map(|p| RootIndex { i: p, j: p + 1 }).collect())
}

/// The highest root `θ = ε_1 - ε_{l+1}`.
pub fn highest_root(l: usize) -> Result<RootIndex, Error> {
    check_rank(l)?;
    Ok(RootIndex { i: 1, j: l + 1 })
}

/// All positive roots `ε_i - ε_j`, `i < j`, ordered lexicographically.
pub fn positive_roots(l: usize) -> Result<Vec<RootIndex>, Error> {
    check_rank(l)?;
    let mut out = Vec::new();
    for i in 1..=l {
        for j in (i + 1)..=(l + 1) {
            out.push(RootIndex { i, j });
        }
    }
    Ok(out)
}

/// All roots, positive then negative, each block lexicographic.
pub fn all_roots(l: usize) -> Result<Vec<RootIndex>, Error> {
    let mut out = positive_roots(l)?;
    let neg: Vec<RootIndex> = out.iter().map(RootIndex::negated).collect();
    out.extend(neg);
    Ok(out)
}

/// A weight of `A_l` in fundamental-weight coordinates.
///
/// `coords[p-1]` is the pairing with the simple coroot `α_p^∨`; a weight is
/// dominant integral exactly when every coordinate is a non-negative integer.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    l: usize,
    coords: Vec<Rat>,
}

impl Weight {
    /// The zero weight of rank `l`.
    pub fn zero(l: usize) -> Result<Self, Error> {
        check_rank(l)?;
        Ok(Weight { l, coords: vec![Rat::zero(); l] })
    }

    /// Builds a weight from its `l` fundamental coordinates.
    pub fn from_coords(l: usize, coords: Vec<Rat>) -> Result<Self, Error> {
        check_rank(l)?;
        if coords.len() != l {
            return Err(Error::BadWeightLength { got: coords.len(), l });
        }
        Ok(Weight { l, coords })
    }

    /// The fundamental weight `ω_p` (`1 <= p <= l`).
    pub fn fundamental(l: usize, p: usize) -> Result<Self, Error> {
        let mut w = Weight::zero(l)?;
        if p == 0 || p > l {
            return Err(Error::BadWeightIndex { p, l });
        }
        w.coords[p - 1] = rat(1);
        Ok(w)
    }

    /// The root `α` as a weight: fundamental coordinates
    /// `⟨ε_i - ε_j, α_p^∨⟩ = δ_{p,i} - δ_{p+1,i} - δ_{p,j} + δ_{p+1,j}`.
    pub fn from_root(l: usize, alpha: RootIndex) -> Result<Self, Error> {
        let mut w = Weight::zero(l)?;
        let term = |p: usize, idx: usize| -> i64 {
            let mut v = 0;
            if p == idx {
                v += 1;
            }
            if p + 1 == idx {
                v -= 1;
            }
            v
        };
        for p in 1..=l {
            let c = term(p, alpha.i) - term(p, alpha.j);
            w.coords[p - 1] = rat(c);
        }
        Ok(w)
    }

    /// Rank of the ambient root system.
    pub fn rank(&self) -> usize {
        self.l
    }

    /// Fundamental coordinates, length `l`.
    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rat::is_zero)
    }

    /// True when every fundamental coordinate is a non-negative integer.
    pub fn is_dominant_integral(&self) -> bool {
        self.coords
            .iter()
            .all(|c| c.is_integer() && !(c < &Rat::zero()))
    }

    pub fn add(&self, other: &Weight) -> Result<Weight, Error> {
        if self.l != other.l {
            return Err(Error::RankMismatch { a: self.l, b: other.l });
        }
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Weight { l: self.l, coords })
    }

    pub fn sub(&self, other: &Weight) -> Result<Weight, Error> {
        if self.l != other.l {
            return Err(Error::RankMismatch { a: self.l, b: other.l });
        }
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Weight { l: self.l, coords })
    }

    pub fn scale(&self, c: &Rat) -> Weight {
        Weight {
            l: self.l,
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }
}

impl core::fmt::Display for Weight {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "(")?;
        for (t, c) in self.coords.iter().enumerate() {
            if t > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", crate::rational::render(c))?;
        }
        write!(f, ")")
    }
}

/// The pairing `⟨μ, α^∨⟩` of a weight with the coroot of `α = ε_i - ε_j`.
///
/// For a positive root (`i < j`) this is the sum of the fundamental
/// coordinates `i ..= j-1`; for `i > j` it is the negative of the pairing
/// with the opposite root.
pub fn pairing(mu: &Weight, alpha: RootIndex) -> Rat {
    if alpha.i > alpha.j {
        return -pairing(mu, alpha.negated());
    }
    let mut acc = Rat::zero();
    for p in alpha.i..alpha.j {
        acc += &mu.coords[p - 1];
    }
    acc
}

/// The finite Weyl vector `ρ̄` (all fundamental coordinates equal to 1).
pub fn weyl_vector(l: usize) -> Result<Weight, Error> {
    check_rank(l)?;
    Ok(Weight { l, coords: vec![rat(1); l] })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn simple_roots_and_theta() {
        let s = simple_roots(2).unwrap();
        assert_eq!(s, vec![RootIndex { i: 1, j: 2 }, RootIndex { i: 2, j: 3 }]);
        assert_eq!(highest_root(2).unwrap(), RootIndex { i: 1, j: 3 });

        let s4 = simple_roots(4).unwrap();
        assert_eq!(s4.len(), 4);
        assert_eq!(s4[3], RootIndex { i: 4, j: 5 });
    }

    #[test]
    fn rejects_bad_ranks_and_indices() {
        assert!(simple_roots(3).is_err());
        assert!(simple_roots(0).is_err());
        assert!(RootIndex::new(2, 1, 1).is_err());
        assert!(RootIndex::new(2, 0, 2).is_err());
        assert!(RootIndex::new(2, 1, 4).is_err());
        assert!(RootIndex::new(2, 2, 3).is_ok());
        assert!(Weight::from_coords(2, vec![rat(1)]).is_err());
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(positive_roots(2).unwrap().len(), 3);
        assert_eq!(positive_roots(4).unwrap().len(), 10);
        assert_eq!(all_roots(2).unwrap().len(), 6);
    }

    #[test]
    fn weyl_vector_pairings() {
        // ⟨ρ̄, (ε_i - ε_j)^∨⟩ = j - i for i < j.
        for l in [2usize, 4, 6] {
            let rho = weyl_vector(l).unwrap();
            for alpha in positive_roots(l).unwrap() {
                assert_eq!(pairing(&rho, alpha), rat(alpha.height()));
            }
            let theta = highest_root(l).unwrap();
            assert_eq!(pairing(&rho, theta), rat(l as i64));
        }
    }

    #[test]
    fn pairing_is_coordinate_on_simple_roots() {
        let mu = Weight::from_coords(4, vec![ratio(1, 2), rat(-3), rat(0), ratio(7, 3)]).unwrap();
        for (p, alpha) in simple_roots(4).unwrap().into_iter().enumerate() {
            assert_eq!(pairing(&mu, alpha), mu.coords()[p]);
        }
    }

    #[test]
    fn pairing_additivity_and_negation() {
        let mu = Weight::from_coords(4, vec![ratio(1, 2), rat(-3), rat(0), ratio(7, 3)]).unwrap();
        let a = RootIndex { i: 1, j: 3 };
        let b = RootIndex { i: 3, j: 5 };
        let c = RootIndex { i: 1, j: 5 };
        assert_eq!(pairing(&mu, a) + pairing(&mu, b), pairing(&mu, c));
        assert_eq!(pairing(&mu, c.negated()), -pairing(&mu, c));
    }

    #[test]
    fn boundary_weight_pairing() {
        // μ = -3/2 ω_1 at l = 2 pairs to -3/2 with θ^∨.
        let mu = Weight::fundamental(2, 1).unwrap().scale(&ratio(-3, 2));
        assert_eq!(pairing(&mu, highest_root(2).unwrap()), ratio(-3, 2));
        assert_eq!(pairing(&Weight::zero(2).unwrap(), highest_root(2).unwrap()), rat(0));
    }

    #[test]
    fn dominance() {
        assert!(Weight::zero(2).unwrap().is_dominant_integral());
        assert!(weyl_vector(2).unwrap().is_dominant_integral());
        let mu = Weight::fundamental(2, 1).unwrap().scale(&ratio(-3, 2));
        assert!(!mu.is_dominant_integral());
        let half = Weight::fundamental(2, 1).unwrap().scale(&ratio(1, 2));
        assert!(!half.is_dominant_integral());
    }

    #[test]
    fn roots_in_fundamental_coordinates() {
        // α_1 at l = 2 has coordinates (2, -1); θ has (1, 1).
        let a1 = Weight::from_root(2, RootIndex { i: 1, j: 2 }).unwrap();
        assert_eq!(a1.coords(), &[rat(2), rat(-1)]);
        let th = Weight::from_root(2, RootIndex { i: 1, j: 3 }).unwrap();
        assert_eq!(th.coords(), &[rat(1), rat(1)]);
        // Negated roots negate coordinates.
        let neg = Weight::from_root(2, RootIndex { i: 3, j: 1 }).unwrap();
        assert_eq!(th.add(&neg).unwrap(), Weight::zero(2).unwrap());
    }

    #[test]
    fn weight_arithmetic() {
        let a = Weight::fundamental(2, 1).unwrap();
        let b = Weight::fundamental(2, 2).unwrap();
        let s = a.add(&b).unwrap();
        assert_eq!(s, weyl_vector(2).unwrap());
        assert_eq!(s.sub(&b).unwrap(), a);
        assert_eq!(s.scale(&rat(0)), Weight::zero(2).unwrap());
        let other = Weight::zero(4).unwrap();
        assert!(a.add(&other).is_err());
    }
}
