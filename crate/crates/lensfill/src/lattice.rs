//! Negative-definite lattices: the standard diagonal lattice `-Z^N` with
//! `<e_i, e_j> = -delta_ij`, and the linear chain lattice of a lens space,
//! whose Gram matrix has `-a_i` on the diagonal and `1` on the off-diagonals.

use crate::arith::{hj_expand, ArithError, ContinuedFraction, LensSpace};
use crate::intlin::IntMatrix;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("pairing requires equal lengths, got {0} and {1}")]
    LengthMismatch(usize, usize),
}

/// A vector in the diagonal lattice `-Z^N`, coordinates in the basis
/// `e_1..e_N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagVector {
    coords: Vec<BigInt>,
}

impl DiagVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        DiagVector { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        DiagVector {
            coords: coords.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// `<x, x> = -sum x_i^2`, always non-positive.
    pub fn square(&self) -> BigInt {
        -self.coords.iter().map(|x| x * x).sum::<BigInt>()
    }

    /// Sorted absolute values of the coordinates, ascending, zeros included.
    pub fn sorted_abs(&self) -> Vec<BigInt> {
        let mut v: Vec<BigInt> = self.coords.iter().map(Signed::abs).collect();
        v.sort();
        v
    }
}

impl fmt::Display for DiagVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// `<x, y> = -sum x_i y_i`, the standard negative-definite pairing.
pub fn pairing(x: &DiagVector, y: &DiagVector) -> Result<BigInt, LatticeError> {
    if x.len() != y.len() {
        return Err(LatticeError::LengthMismatch(x.len(), y.len()));
    }
    Ok(-x.coords.iter().zip(&y.coords).map(|(a, b)| a * b).sum::<BigInt>())
}

/// The intersection lattice of the linear plumbing on a lens space's
/// continued fraction: weights `[a_1,...,a_l]`, Gram matrix `l x l` with
/// diagonal `-a_i` and super/sub-diagonal `1`. Negative definite, and
/// `|det| = p` when `[a_1,...,a_l] = p/q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainLattice {
    weights: Vec<BigInt>,
    gram: IntMatrix,
}

impl ChainLattice {
    pub fn from_weights(weights: Vec<BigInt>) -> Result<Self, LatticeError> {
        let cf = ContinuedFraction::new(weights)?;
        Ok(Self::from_fraction(&cf))
    }

    pub fn from_weights_u64(weights: &[u64]) -> Result<Self, LatticeError> {
        let cf = ContinuedFraction::from_u64(weights)?;
        Ok(Self::from_fraction(&cf))
    }

    pub fn from_fraction(cf: &ContinuedFraction) -> Self {
        let weights: Vec<BigInt> = cf.entries().to_vec();
        let l = weights.len();
        let mut gram = IntMatrix::zero(l, l);
        for (i, a) in weights.iter().enumerate() {
            gram.set(i, i, -a.clone());
            if i + 1 < l {
                gram.set(i, i + 1, BigInt::one());
                gram.set(i + 1, i, BigInt::one());
            }
        }
        ChainLattice { weights, gram }
    }

    pub fn weights(&self) -> &[BigInt] {
        &self.weights
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    /// Number of chain vertices (the rank of the lattice).
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// The Gram entry for vertices `i`, `j`: `-a_i`, `1`, or `0`.
    pub fn gram_entry(&self, i: usize, j: usize) -> BigInt {
        if i == j {
            -self.weights[i].clone()
        } else if i.abs_diff(j) == 1 {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    }

    /// `|det|` of the Gram matrix via the continuant recurrence
    /// `k_i = a_i k_{i-1} - k_{i-2}`; equals the numerator `p` of the
    /// evaluated fraction.
    pub fn det_abs(&self) -> BigInt {
        let mut prev = BigInt::zero();
        let mut cur = BigInt::one();
        for a in &self.weights {
            let next = a * &cur - &prev;
            prev = std::mem::replace(&mut cur, next);
        }
        cur
    }

    /// Leading principal minors alternate in sign, which is exactly
    /// negative definiteness for a symmetric matrix. The continuant
    /// recurrence computes `(-1)^k * (k-th minor)`, so the test is that
    /// every continuant is positive.
    pub fn is_negative_definite(&self) -> bool {
        let mut prev = BigInt::zero();
        let mut cur = BigInt::one();
        for a in &self.weights {
            let next = a * &cur - &prev;
            if next <= BigInt::zero() {
                return false;
            }
            prev = std::mem::replace(&mut cur, next);
        }
        true
    }
}

/// Builds the chain lattice of `L(p,q)` from the Hirzebruch–Jung expansion
/// of `p/q`.
pub fn chain_lattice(l: &LensSpace) -> ChainLattice {
    let cf = hj_expand(l.p(), l.q()).expect("lens space invariants imply a valid expansion");
    ChainLattice::from_fraction(&cf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intlin::{determinant, smith_normal_form};
    use num_integer::Integer;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn chain_lattice_examples() {
        let l = chain_lattice(&LensSpace::from_u64(4, 3).unwrap());
        assert_eq!(l.weights(), &[big(2), big(2), big(2)]);
        assert_eq!(l.det_abs(), big(4));

        let l = chain_lattice(&LensSpace::from_u64(59, 37).unwrap());
        assert_eq!(l.weights(), &[big(2), big(3), big(2), big(8)]);

        let l = chain_lattice(&LensSpace::from_u64(65, 14).unwrap());
        assert_eq!(l.weights(), &[big(5), big(3), big(5)]);
    }

    #[test]
    fn pairing_examples() {
        let a = DiagVector::from_i64(&[1, -1, 0]);
        let b = DiagVector::from_i64(&[0, 1, -1]);
        assert_eq!(pairing(&a, &a).unwrap(), big(-2));
        assert_eq!(pairing(&a, &b).unwrap(), big(1));

        // -e_1 + 2 e_16 has square -5
        let mut coords = vec![0i64; 16];
        coords[0] = -1;
        coords[15] = 2;
        let w = DiagVector::from_i64(&coords);
        assert_eq!(w.square(), big(-5));
        assert_eq!(pairing(&w, &w).unwrap(), big(-5));

        let short = DiagVector::from_i64(&[1]);
        assert!(pairing(&a, &short).is_err());
    }

    #[test]
    fn det_matches_numerator_and_snf() {
        for p in 2u64..=200 {
            for q in 1..p {
                if !big(p as i64).gcd(&big(q as i64)).is_one() {
                    continue;
                }
                let lens = LensSpace::from_u64(p, q).unwrap();
                let chain = chain_lattice(&lens);
                assert_eq!(chain.det_abs(), big(p as i64), "p={p} q={q}");
                assert!(chain.is_negative_definite());
            }
        }
        // cross-check the recurrence against Bareiss and SNF on a few cases
        for (p, q) in [(896u64, 769u64), (65, 14), (59, 37), (1999, 1000)] {
            let chain = chain_lattice(&LensSpace::from_u64(p, q).unwrap());
            assert_eq!(determinant(chain.gram()).unwrap().abs(), big(p as i64));
            let prod: BigInt = smith_normal_form(chain.gram())
                .invariant_factors()
                .iter()
                .product();
            assert_eq!(prod, big(p as i64));
        }
    }

    #[test]
    fn gram_entries() {
        let chain = ChainLattice::from_weights_u64(&[2, 3, 2, 8]).unwrap();
        assert_eq!(chain.gram_entry(1, 1), big(-3));
        assert_eq!(chain.gram_entry(1, 2), big(1));
        assert_eq!(chain.gram_entry(0, 3), big(0));
        assert_eq!(chain.gram(), &IntMatrix::from_i64(4, 4, &[
            -2, 1, 0, 0,
            1, -3, 1, 0,
            0, 1, -2, 1,
            0, 0, 1, -8,
        ]).unwrap());
    }
}
