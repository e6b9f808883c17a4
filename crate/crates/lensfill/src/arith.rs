//! Exact integer and rational arithmetic: lens-space parameters,
//! Hirzebruch–Jung continued fractions, modular inverses, quadratic
//! residues, sums of two squares, and the D-square singularity test.
//!
//! Everything here is arbitrary precision; the parameters of the
//! interesting families grow quartically, so no operation assumes a
//! machine word is enough.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("lens space requires p > q > 0, got p = {p}, q = {q}")]
    InvalidLensParams { p: BigInt, q: BigInt },
    #[error("lens space requires gcd(p, q) = 1, got gcd({p}, {q}) = {g}")]
    NotCoprime { p: BigInt, q: BigInt, g: BigInt },
    #[error("continued fraction entries must all be >= 2, got {0}")]
    EntryTooSmall(BigInt),
    #[error("continued fraction must have at least one entry")]
    EmptyFraction,
    #[error("{a} has no inverse modulo {n} (gcd = {g})")]
    NoInverse { a: BigInt, n: BigInt, g: BigInt },
    #[error("modulus must be positive, got {0}")]
    NonPositiveModulus(BigInt),
    #[error("singularity type requires n > a > 0 coprime, got n = {n}, a = {a}")]
    InvalidSingularityType { n: BigInt, a: BigInt },
}

/// The lens space `L(p,q)`, the 3-manifold obtained from `S^3` by
/// `-p/q`-surgery along the unknot. Requires `p > q > 0` coprime, so
/// `p >= 2`; `S^3` itself is rejected everywhere.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LensSpace {
    p: BigInt,
    q: BigInt,
}

impl LensSpace {
    pub fn new(p: BigInt, q: BigInt) -> Result<Self, ArithError> {
        if p <= q || q <= BigInt::zero() {
            return Err(ArithError::InvalidLensParams { p, q });
        }
        let g = p.gcd(&q);
        if !g.is_one() {
            return Err(ArithError::NotCoprime { p, q, g });
        }
        Ok(LensSpace { p, q })
    }

    pub fn from_u64(p: u64, q: u64) -> Result<Self, ArithError> {
        Self::new(BigInt::from(p), BigInt::from(q))
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    /// The orientation reversal `-L(p,q) = L(p, p-q)`.
    pub fn reversed(&self) -> LensSpace {
        LensSpace {
            p: self.p.clone(),
            q: &self.p - &self.q,
        }
    }

    /// The homeomorphic model `L(p, q')` with `q q' = 1 (mod p)`.
    pub fn inverse_model(&self) -> LensSpace {
        let q_inv = mod_inverse(&self.q, &self.p).expect("q is coprime to p");
        LensSpace {
            p: self.p.clone(),
            q: q_inv,
        }
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

/// A Hirzebruch–Jung continued fraction `[a_1,...,a_l]`, all entries >= 2.
///
/// `[a_1,...,a_l] = a_1 - 1/(a_2 - 1/(... - 1/a_l))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    entries: Vec<BigInt>,
}

impl ContinuedFraction {
    pub fn new(entries: Vec<BigInt>) -> Result<Self, ArithError> {
        if entries.is_empty() {
            return Err(ArithError::EmptyFraction);
        }
        let two = BigInt::from(2);
        for a in &entries {
            if *a < two {
                return Err(ArithError::EntryTooSmall(a.clone()));
            }
        }
        Ok(ContinuedFraction { entries })
    }

    pub fn from_u64(entries: &[u64]) -> Result<Self, ArithError> {
        Self::new(entries.iter().map(|&a| BigInt::from(a)).collect())
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Evaluates to the fraction `p/q` in lowest terms; see [`hj_evaluate`].
    pub fn evaluate(&self) -> (BigInt, BigInt) {
        hj_evaluate(self)
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, a) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

/// Expands `p/q` into its Hirzebruch–Jung continued fraction by the greedy
/// recursion `a_i = ceil(p_i/q_i)`. Requires `p > q >= 1` coprime and
/// `p >= 2`.
pub fn hj_expand(p: &BigInt, q: &BigInt) -> Result<ContinuedFraction, ArithError> {
    if p <= q || q <= &BigInt::zero() || *p < BigInt::from(2) {
        return Err(ArithError::InvalidLensParams {
            p: p.clone(),
            q: q.clone(),
        });
    }
    let g = p.gcd(q);
    if !g.is_one() {
        return Err(ArithError::NotCoprime {
            p: p.clone(),
            q: q.clone(),
            g,
        });
    }
    let mut entries = Vec::new();
    let mut p = p.clone();
    let mut q = q.clone();
    while !q.is_zero() {
        // ceil(p/q) for positive p, q
        let a = (&p + &q - BigInt::one()).div_floor(&q);
        let next = &a * &q - &p;
        entries.push(a);
        p = std::mem::replace(&mut q, next);
    }
    Ok(ContinuedFraction { entries })
}

/// Evaluates `[a_1,...,a_l]` from the right; the result is automatically in
/// lowest terms and satisfies `p > q >= 1`.
pub fn hj_evaluate(cf: &ContinuedFraction) -> (BigInt, BigInt) {
    let mut num = BigInt::one();
    let mut den = BigInt::zero();
    for a in cf.entries.iter().rev() {
        let new_num = a * &num - &den;
        den = std::mem::replace(&mut num, new_num);
    }
    (num, den)
}

/// The unique `a'` with `a a' = 1 (mod n)` and `0 < a' < n`.
pub fn mod_inverse(a: &BigInt, n: &BigInt) -> Result<BigInt, ArithError> {
    if n <= &BigInt::zero() {
        return Err(ArithError::NonPositiveModulus(n.clone()));
    }
    let e = a.extended_gcd(n);
    if !e.gcd.is_one() {
        return Err(ArithError::NoInverse {
            a: a.clone(),
            n: n.clone(),
            g: e.gcd,
        });
    }
    Ok(e.x.mod_floor(n))
}

/// Whether `x` is a quadratic residue modulo `p >= 1`, by exhaustive search
/// over `y in [0, p)`. Zero counts as a residue.
pub fn is_quadratic_residue(x: &BigInt, p: &BigInt) -> Result<bool, ArithError> {
    if p <= &BigInt::zero() {
        return Err(ArithError::NonPositiveModulus(p.clone()));
    }
    let target = x.mod_floor(p);
    let mut y = BigInt::zero();
    while &y < p {
        if (&y * &y).mod_floor(p) == target {
            return Ok(true);
        }
        y += 1;
    }
    Ok(false)
}

/// Some `(a, b)` with `a^2 + b^2 = n` and `a <= b`, or `None`.
pub fn sum_of_two_squares(n: &BigInt) -> Option<(BigInt, BigInt)> {
    if n < &BigInt::zero() {
        return None;
    }
    let mut a = BigInt::zero();
    loop {
        let a2 = &a * &a;
        let rest = n - &a2;
        if rest < a2 {
            return None;
        }
        let b = rest.sqrt();
        if &b * &b == rest {
            return Some((a, b));
        }
        a += 1;
    }
}

/// Whether `n` is a perfect square (including zero).
pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// The data of a cyclic quotient singularity of type `(n, a)`:
/// `n/a = [b_1,...,b_m]`, the modular inverse `a'`, and the value
/// `D = n * (9 - 3m + sum(b_i) - 2 + (a + a' + 2)/n)` whose squareness is a
/// necessary condition for a rational homology projective plane with this
/// unique singularity to exist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularityData {
    n: BigInt,
    a: BigInt,
    a_prime: BigInt,
    expansion: Vec<BigInt>,
    d_value: BigRational,
}

impl SingularityData {
    pub fn new(n: BigInt, a: BigInt) -> Result<Self, ArithError> {
        if n <= a || a <= BigInt::zero() {
            return Err(ArithError::InvalidSingularityType { n, a });
        }
        let cf = hj_expand(&n, &a)?;
        let a_prime = mod_inverse(&a, &n)?;
        let m = BigInt::from(cf.len());
        let sum: BigInt = cf.entries().iter().sum();
        let whole = BigInt::from(7) - BigInt::from(3) * &m + &sum;
        let d_value = BigRational::from(&n * whole + &a + &a_prime + BigInt::from(2));
        Ok(SingularityData {
            n,
            a,
            a_prime,
            expansion: cf.entries,
            d_value,
        })
    }

    pub fn for_lens_space(l: &LensSpace) -> Result<Self, ArithError> {
        Self::new(l.p().clone(), l.p() - l.q())
    }

    pub fn n(&self) -> &BigInt {
        &self.n
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn a_prime(&self) -> &BigInt {
        &self.a_prime
    }

    pub fn expansion(&self) -> &[BigInt] {
        &self.expansion
    }

    pub fn d_value(&self) -> &BigRational {
        &self.d_value
    }
}

/// Computes `D` exactly and reports whether it is a non-negative integer
/// perfect square (zero included). `D` is assembled from a term divided by
/// `n`, so integrality is checked, not assumed.
pub fn d_square_obstruction(data: &SingularityData) -> (BigRational, bool) {
    let d = data.d_value.clone();
    let passes = d.is_integer() && is_perfect_square(d.numer());
    (d, passes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn expand(p: u64, q: u64) -> Vec<u64> {
        hj_expand(&big(p as i64), &big(q as i64))
            .unwrap()
            .entries()
            .iter()
            .map(|a| u64::try_from(a).unwrap())
            .collect()
    }

    #[test]
    fn hj_expand_known_values() {
        assert_eq!(expand(17, 15), vec![2, 2, 2, 2, 2, 2, 2, 3]);
        assert_eq!(expand(8, 1), vec![8]);
        assert_eq!(expand(59, 37), vec![2, 3, 2, 8]);
    }

    #[test]
    fn hj_expand_rejects_bad_input() {
        assert!(hj_expand(&big(3), &big(3)).is_err());
        assert!(hj_expand(&big(3), &big(4)).is_err());
        assert!(hj_expand(&big(4), &big(0)).is_err());
        assert!(hj_expand(&big(4), &big(2)).is_err());
        // S^3 = L(1, ...) is rejected
        assert!(hj_expand(&big(1), &big(1)).is_err());
    }

    #[test]
    fn hj_evaluate_known_values() {
        let cases: &[(&[u64], (i64, i64))] = &[
            (&[5, 3, 5], (65, 14)),
            (&[8], (8, 1)),
            (&[2, 2, 2], (4, 3)),
        ];
        for (entries, (p, q)) in cases {
            let cf = ContinuedFraction::from_u64(entries).unwrap();
            assert_eq!(hj_evaluate(&cf), (big(*p), big(*q)));
        }
        assert!(ContinuedFraction::from_u64(&[2, 1, 2]).is_err());
        assert!(ContinuedFraction::from_u64(&[]).is_err());
    }

    #[test]
    fn hj_round_trip_small() {
        for p in 2u64..=400 {
            for q in 1..p {
                if big(p as i64).gcd(&big(q as i64)).is_one() {
                    let cf = hj_expand(&big(p as i64), &big(q as i64)).unwrap();
                    assert_eq!(hj_evaluate(&cf), (big(p as i64), big(q as i64)));
                }
            }
        }
    }

    #[test]
    fn all_twos_chain() {
        for k in 1u64..=40 {
            let entries: Vec<u64> = std::iter::repeat(2).take(k as usize).collect();
            assert_eq!(expand(k + 1, k), entries);
        }
    }

    #[test]
    fn riemenschneider_duality() {
        // sum(a) - l(p,q) = sum(b) - l(p,p-q) = l(p,q) + l(p,p-q) - 1
        for p in 3u64..=150 {
            for q in 1..p {
                if !big(p as i64).gcd(&big(q as i64)).is_one() || q == p - q {
                    continue;
                }
                if p - q == 0 {
                    continue;
                }
                let a = expand(p, q);
                let b = expand(p, p - q);
                let (la, lb) = (a.len() as u64, b.len() as u64);
                let sa: u64 = a.iter().sum();
                let sb: u64 = b.iter().sum();
                assert_eq!(sa - la, sb - lb, "p={p} q={q}");
                assert_eq!(sa - la, la + lb - 1, "p={p} q={q}");
            }
        }
    }

    #[test]
    fn mod_inverse_known_values() {
        assert_eq!(mod_inverse(&big(2), &big(17)).unwrap(), big(9));
        for n in 2..20 {
            assert_eq!(mod_inverse(&big(1), &big(n)).unwrap(), big(1));
        }
        assert_eq!(mod_inverse(&big(14), &big(65)).unwrap(), big(14));
        assert!(mod_inverse(&big(6), &big(9)).is_err());
    }

    #[test]
    fn mod_inverse_is_involutive() {
        for n in 2i64..=60 {
            for a in 1..n {
                if big(a).gcd(&big(n)).is_one() {
                    let inv = mod_inverse(&big(a), &big(n)).unwrap();
                    assert_eq!(mod_inverse(&inv, &big(n)).unwrap(), big(a));
                }
            }
        }
    }

    #[test]
    fn quadratic_residues() {
        assert!(!is_quadratic_residue(&big(-1), &big(4)).unwrap());
        assert!(is_quadratic_residue(&big(-2), &big(17)).unwrap());
        for p in 1i64..=30 {
            assert!(is_quadratic_residue(&big(0), &big(p)).unwrap());
        }
        assert!(is_quadratic_residue(&big(-1), &big(0)).is_err());
    }

    #[test]
    fn two_squares() {
        assert_eq!(sum_of_two_squares(&big(10)), Some((big(1), big(3))));
        assert_eq!(sum_of_two_squares(&big(7)), None);
        assert_eq!(sum_of_two_squares(&big(14)), None);
        assert_eq!(sum_of_two_squares(&big(4)), Some((big(0), big(2))));
        // returned pairs always satisfy a <= b and a^2+b^2 = n
        for n in 1i64..200 {
            if let Some((a, b)) = sum_of_two_squares(&big(n)) {
                assert!(a <= b);
                assert_eq!(&a * &a + &b * &b, big(n));
            }
        }
    }

    #[test]
    fn d_square_tange_small_cases() {
        // type (p_1, p_1 - q_1) = (59, 22)
        let data = SingularityData::new(big(59), big(22)).unwrap();
        assert_eq!(data.expansion(), &[3, 4, 2, 2, 2, 2, 2, 2].map(big));
        assert_eq!(data.a_prime(), &big(51));
        let (d, passes) = d_square_obstruction(&data);
        assert_eq!(d, BigRational::from(big(193)));
        assert!(!passes);

        // type (p_2, p_2 - q_2) = (185, 71): 529 = 23^2
        let data = SingularityData::new(big(185), big(71)).unwrap();
        let (d, passes) = d_square_obstruction(&data);
        assert_eq!(d, BigRational::from(big(529)));
        assert!(passes);
    }

    #[test]
    fn d_square_degenerate_cases() {
        // (10, 9): D = 0, a square by convention
        let data = SingularityData::new(big(10), big(9)).unwrap();
        let (d, passes) = d_square_obstruction(&data);
        assert!(d.is_zero());
        assert!(passes);

        // (11, 10): D = -11 < 0, never a square
        let data = SingularityData::new(big(11), big(10)).unwrap();
        let (d, passes) = d_square_obstruction(&data);
        assert_eq!(d, BigRational::from(big(-11)));
        assert!(!passes);
    }

    #[test]
    fn d_square_tange_closed_form() {
        for l in 1u64..=100 {
            let l_big = big(l as i64);
            let p = big(35) * &l_big * &l_big + big(21) * &l_big + big(3);
            let q = big(21) * &l_big * &l_big + big(14) * &l_big + big(2);
            let data = SingularityData::new(p.clone(), &p - &q).unwrap();
            let expect = big(84) * &l_big * &l_big + big(84) * &l_big + big(25);
            assert_eq!(data.d_value(), &BigRational::from(expect));
        }
    }

    #[test]
    fn lens_space_models() {
        let l = LensSpace::from_u64(59, 37).unwrap();
        assert_eq!(l.reversed(), LensSpace::from_u64(59, 22).unwrap());
        assert_eq!(l.inverse_model(), LensSpace::from_u64(59, 8).unwrap());
        assert!(LensSpace::from_u64(1, 1).is_err());
        assert!(LensSpace::from_u64(6, 3).is_err());
    }
}
