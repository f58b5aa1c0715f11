//! Error type shared by all modules of the crate.

use alloc::string::String;

/// Errors reported by the exact-computation pipeline.
///
/// Rank and index validation errors signal misuse of the API; the
/// `*Defect` variants signal that an internal cross-check failed and the
/// computed data contradicts itself (these are never expected to occur).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// The rank `l` is not an even integer `>= 2`.
    BadRank { l: usize },
    /// `(i, j)` does not encode a root `ε_i - ε_j` of `A_l`.
    BadRootIndex { i: usize, j: usize, l: usize },
    /// A weight was given the wrong number of fundamental coordinates.
    BadWeightLength { got: usize, l: usize },
    /// Fundamental-weight index out of range.
    BadWeightIndex { p: usize, l: usize },
    /// Two objects of different ranks were combined.
    RankMismatch { a: usize, b: usize },
    /// A support set contains an index outside `1..=l` or a duplicate.
    BadSupport { element: usize, l: usize },
    /// The element does not lie in a single `ad(h)`-weight space.
    MixedWeight,
    /// A Cartan projection was requested for an element whose terms do not
    /// all have `h`-weight zero.
    NonzeroWeight,
    /// After discarding raising-operator words from a weight-zero element, a
    /// word with a lowering factor survived: a normal-ordering defect.
    NormalOrderDefect { word: String },
    /// The adjoint closure exceeded its stabilisation bound.
    ClosureExceeded { dim: usize, bound: usize },
    /// An adjoint-chain polynomial disagrees with its closed form.
    ClosedFormMismatch { i: usize },
    /// A univariate polynomial equation of degree > 2 was encountered where
    /// degree <= 2 was guaranteed.
    DegreeTooHigh { degree: usize },
}

impl core::fmt::Display for Error {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Error::BadRank { l } => {
                write!(f, "rank l = {l} is not supported: l must be even and >= 2")
            }
            Error::BadRootIndex { i, j, l } => {
                write!(f, "({i}, {j}) is not a root index for A_{l}")
            }
            Error::BadWeightLength { got, l } => {
                write!(f, "weight has {got} coordinates, expected {l}")
            }
            Error::BadWeightIndex { p, l } => {
                write!(f, "fundamental weight index {p} out of range 1..={l}")
            }
            Error::RankMismatch { a, b } => {
                write!(f, "rank mismatch: {a} vs {b}")
            }
            Error::BadSupport { element, l } => {
                write!(f, "support element {element} invalid for rank {l}")
            }
            Error::MixedWeight => {
                write!(f, "element does not lie in a single weight space")
            }
            Error::NonzeroWeight => {
                write!(f, "Cartan projection requires every term to have h-weight zero")
            }
            Error::NormalOrderDefect { word } => {
                write!(f, "normal-ordering defect: lowering word `{word}` survived projection")
            }
            Error::ClosureExceeded { dim, bound } => {
                write!(f, "adjoint closure grew to dimension {dim}, exceeding bound {bound}")
            }
            Error::ClosedFormMismatch { i } => {
                write!(f, "zero-weight polynomial {i} disagrees with its closed form")
            }
            Error::DegreeTooHigh { degree } => {
                write!(f, "univariate equation has degree {degree} > 2")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_messages() {
        let e = Error::BadRank { l: 3 };
        assert!(alloc::format!("{e}").contains("even"));
        let e = Error::RankMismatch { a: 2, b: 4 };
        assert_eq!(alloc::format!("{e}"), "rank mismatch: 2 vs 4");
    }
}
