//! Exact integer linear algebra over arbitrary-precision integers:
//! Smith normal form with transforms, saturated integer kernels,
//! cokernel structure, and fraction-free determinants.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinAlgError {
    #[error("entry length {got} does not match {rows} x {cols}")]
    ShapeMismatch { rows: usize, cols: usize, got: usize },
    #[error("index ({r},{c}) out of bounds for {rows} x {cols} matrix")]
    OutOfBounds { r: usize, c: usize, rows: usize, cols: usize },
    #[error("determinant requires a square matrix, got {rows} x {cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// A dense integer matrix, row-major, arbitrary precision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self, LinAlgError> {
        if data.len() != rows * cols {
            return Err(LinAlgError::ShapeMismatch {
                rows,
                cols,
                got: data.len(),
            });
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn from_i64(rows: usize, cols: usize, data: &[i64]) -> Result<Self, LinAlgError> {
        Self::from_entries(rows, cols, data.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// Builds a matrix whose rows are the given vectors (all the same length).
    pub fn from_rows(rows: &[Vec<BigInt>]) -> Result<Self, LinAlgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        for row in rows {
            if row.len() != c {
                return Err(LinAlgError::DimensionMismatch(format!(
                    "row of length {} in a {c}-column matrix",
                    row.len()
                )));
            }
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data: rows.iter().flatten().cloned().collect(),
        })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vec<BigInt>]) -> Result<Self, LinAlgError> {
        Ok(Self::from_rows(cols)?.transpose())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, LinAlgError> {
        if self.cols != other.rows {
            return Err(LinAlgError::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let add = a * other.get(k, c);
                    let idx = r * other.cols + c;
                    out.data[idx] += add;
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>, LinAlgError> {
        if v.len() != self.cols {
            return Err(LinAlgError::DimensionMismatch(format!(
                "vector of length {} with {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row a += k * row b
    fn add_row(&mut self, a: usize, b: usize, k: &BigInt) {
        for c in 0..self.cols {
            let add = k * self.get(b, c);
            self.data[a * self.cols + c] += add;
        }
    }

    /// col a += k * col b
    fn add_col(&mut self, a: usize, b: usize, k: &BigInt) {
        for r in 0..self.rows {
            let add = k * self.get(r, b);
            self.data[r * self.cols + a] += add;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self.get(r, c).clone();
            self.data[r * self.cols + c] = v;
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// A finitely generated abelian group `Z^free_rank + Z/d_1 + ... + Z/d_k`
/// with `d_1 | d_2 | ... | d_k` and every `d_i >= 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// The result of a Smith normal form computation: `u * m * v = s` with
/// `u`, `v` unimodular and `s` diagonal with a divisibility chain.
#[derive(Debug, Clone)]
pub struct SmithNormalForm {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl SmithNormalForm {
    /// The non-zero diagonal entries `d_1 | d_2 | ...`, all positive.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.s.rows().min(self.s.cols());
        (0..n)
            .map(|i| self.s.get(i, i).clone())
            .take_while(|d| !d.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Computes the Smith normal form of `m`. Pivots are chosen with minimal
/// absolute value to limit coefficient growth.
pub fn smith_normal_form(m: &IntMatrix) -> SmithNormalForm {
    let mut s = m.clone();
    let mut u = IntMatrix::identity(m.rows());
    let mut v = IntMatrix::identity(m.cols());
    let n = m.rows().min(m.cols());

    for t in 0..n {
        if !settle_pivot(&mut s, &mut u, &mut v, t) {
            break;
        }
        if s.get(t, t).is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithNormalForm { u, s, v }
}

/// Brings a pivot to `(t,t)`, clears its row and column, and restores the
/// divisibility chain on the trailing block. Returns false when the block
/// is already zero. Each divisibility fix strictly shrinks the pivot, so
/// the outer loop terminates.
fn settle_pivot(s: &mut IntMatrix, u: &mut IntMatrix, v: &mut IntMatrix, t: usize) -> bool {
    let mut rounds = 0u32;
    loop {
        rounds += 1;
        if rounds > 200 {
            panic!("settle_pivot stuck at t={t}:\n{s}");
        }
        let Some((pr, pc)) = min_nonzero(s, t) else {
            return false;
        };
        s.swap_rows(t, pr);
        u.swap_rows(t, pr);
        s.swap_cols(t, pc);
        v.swap_cols(t, pc);

        let mut passes = 0u32;
        loop {
            passes += 1;
            if passes > 500 {
                panic!("elimination stuck at t={t}, pivot={}:\n{s}", s.get(t, t));
            }
            let mut dirty = false;
            for r in t + 1..s.rows() {
                if s.get(r, t).is_zero() {
                    continue;
                }
                let k = -s.get(r, t).div_floor(s.get(t, t));
                s.add_row(r, t, &k);
                u.add_row(r, t, &k);
                if !s.get(r, t).is_zero() {
                    // remainder is smaller than the pivot; promote it
                    s.swap_rows(t, r);
                    u.swap_rows(t, r);
                    dirty = true;
                }
            }
            for c in t + 1..s.cols() {
                if s.get(t, c).is_zero() {
                    continue;
                }
                let k = -s.get(t, c).div_floor(s.get(t, t));
                s.add_col(c, t, &k);
                v.add_col(c, t, &k);
                if !s.get(t, c).is_zero() {
                    s.swap_cols(t, c);
                    v.swap_cols(t, c);
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
        }

        let mut clean = true;
        'scan: for r in t + 1..s.rows() {
            for c in t + 1..s.cols() {
                if !s.get(r, c).mod_floor(s.get(t, t)).is_zero() {
                    // fold the offending row into row t and redo this pivot
                    s.add_row(t, r, &BigInt::one());
                    u.add_row(t, r, &BigInt::one());
                    clean = false;
                    break 'scan;
                }
            }
        }
        if clean {
            return true;
        }
    }
}

fn min_nonzero(s: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for r in t..s.rows() {
        for c in t..s.cols() {
            let x = s.get(r, c);
            if x.is_zero() {
                continue;
            }
            match best {
                Some((br, bc)) => {
                    if x.abs() < s.get(br, bc).abs() {
                        best = Some((r, c));
                    }
                }
                None => best = Some((r, c)),
            }
        }
    }
    best
}

/// The structure of `Z^rows / column-span(m)`.
pub fn cokernel(m: &IntMatrix) -> AbelianGroup {
    let snf = smith_normal_form(m);
    let factors = snf.invariant_factors();
    let free_rank = m.rows() - factors.len();
    let torsion: Vec<BigInt> = factors.into_iter().filter(|d| !d.is_one()).collect();
    AbelianGroup { free_rank, torsion }
}

/// A basis of the saturated integer kernel `{x : m x = 0}`, Hermite-reduced,
/// each vector primitive with positive first nonzero coordinate.
pub fn integer_kernel(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(m);
    let rank = snf.rank();
    // kernel basis = columns of V beyond the rank
    let basis: Vec<Vec<BigInt>> = (rank..m.cols()).map(|c| snf.v.col(c)).collect();
    hermite_reduce(basis)
}

/// Row-style Hermite reduction of a full-rank list of integer vectors:
/// echelon over Z with positive pivots and entries above each pivot reduced
/// into `[0, pivot)`. Unimodular row operations only, so the span and
/// saturation are preserved.
fn hermite_reduce(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    if rows.is_empty() {
        return rows;
    }
    let cols = rows[0].len();
    let n = rows.len();
    let mut pivot_row = 0;
    for c in 0..cols {
        if pivot_row >= n {
            break;
        }
        // gcd-eliminate column c among rows pivot_row..
        loop {
            let mut idx: Option<usize> = None;
            for r in pivot_row..n {
                if rows[r][c].is_zero() {
                    continue;
                }
                match idx {
                    Some(i) => {
                        if rows[r][c].abs() < rows[i][c].abs() {
                            idx = Some(r);
                        }
                    }
                    None => idx = Some(r),
                }
            }
            let Some(i) = idx else { break };
            rows.swap(pivot_row, i);
            let mut dirty = false;
            for r in pivot_row + 1..n {
                if rows[r][c].is_zero() {
                    continue;
                }
                let k = rows[r][c].div_floor(&rows[pivot_row][c]);
                for j in 0..cols {
                    let sub = &k * &rows[pivot_row][j];
                    rows[r][j] -= sub;
                }
                if !rows[r][c].is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
        }
        if rows[pivot_row][c].is_zero() {
            continue;
        }
        if rows[pivot_row][c].is_negative() {
            for j in 0..cols {
                rows[pivot_row][j] = -rows[pivot_row][j].clone();
            }
        }
        // reduce entries above the pivot into [0, pivot)
        for r in 0..pivot_row {
            let k = rows[r][c].div_floor(&rows[pivot_row][c]);
            if k.is_zero() {
                continue;
            }
            for j in 0..cols {
                let sub = &k * &rows[pivot_row][j];
                rows[r][j] -= sub;
            }
        }
        pivot_row += 1;
    }
    rows.truncate(pivot_row);
    rows
}

/// Fraction-free (Bareiss) determinant; exact for any square integer matrix.
pub fn determinant(m: &IntMatrix) -> Result<BigInt, LinAlgError> {
    if m.rows() != m.cols() {
        return Err(LinAlgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a.get(k, k).is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a.get(r, k).is_zero()) else {
                return Ok(BigInt::zero());
            };
            a.swap_rows(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a.get(k, k) * a.get(i, j) - a.get(i, k) * a.get(k, j);
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero());
                a.set(i, j, q);
            }
            a.set(i, k, BigInt::zero());
        }
        prev = a.get(k, k).clone();
    }
    Ok(sign * a.get(n - 1, n - 1).clone())
}
