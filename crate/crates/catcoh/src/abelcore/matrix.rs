//! Dense matrices over the integers with exact arbitrary-precision
//! arithmetic, Smith normal form, and Diophantine solving.
//!
//! Everything downstream (homology, cocycle lifting, obstruction tests)
//! reduces to the three primitives here: `smith_normal_form`,
//! `solve_linear` and `kernel_basis`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{EngineError, Result};

/// Row-major integer matrix. Entries are arbitrary precision; intermediate
/// Smith normal form entries can grow far beyond machine words.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<BigInt>,
}

impl std::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut m = IntMatrix::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, e) in row.iter().enumerate() {
                m[(i, j)] = BigInt::from(*e);
            }
        }
        m
    }

    pub fn from_big_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut m = IntMatrix::zeros(r, c);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, e) in row.into_iter().enumerate() {
                m[(i, j)] = e;
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        (0..self.cols).map(|j| self[(i, j)].clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let prod = a * b;
                        out[(i, j)] += prod;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        let mut out = vec![BigInt::zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if !a.is_zero() && !v[j].is_zero() {
                    out[i] += a * &v[j];
                }
            }
        }
        out
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] += &other[(i, j)];
            }
        }
        out
    }

    pub fn neg(&self) -> IntMatrix {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e = -(&*e);
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> IntMatrix {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e = &*e * c;
        }
        out
    }

    /// Horizontal concatenation [self | other].
    pub fn hconcat(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows, "hconcat row mismatch");
        let mut out = IntMatrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                out[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    /// Vertical concatenation [self; other].
    pub fn vconcat(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.cols, "vconcat col mismatch");
        let mut out = IntMatrix::zeros(self.rows + other.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..self.cols {
                out[(self.rows + i, j)] = other[(i, j)].clone();
            }
        }
        out
    }

    pub fn submatrix_cols(&self, cols: &[usize]) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                out[(i, jj)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn from_cols(cols: Vec<Vec<BigInt>>, rows: usize) -> IntMatrix {
        let mut out = IntMatrix::zeros(rows, cols.len());
        for (j, col) in cols.into_iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, e) in col.into_iter().enumerate() {
                out[(i, j)] = e;
            }
        }
        out
    }
}

/// Smith normal form of `m`, together with the unimodular transforms and
/// their inverses: `u * m * v = d` with `d` diagonal, `d_1 | d_2 | ...`,
/// `u * u_inv = I`, `v * v_inv = I`.
#[derive(Clone, Debug)]
pub struct Snf {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl Snf {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        let n = self.d.rows.min(self.d.cols);
        (0..n).take_while(|&i| !self.d[(i, i)].is_zero()).count()
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.d.rows.min(self.d.cols);
        (0..n).map(|i| self.d[(i, i)].clone()).collect()
    }
}

struct SnfWork {
    d: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl SnfWork {
    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.d.cols {
            let x = self.d[(a, j)].clone();
            self.d[(a, j)] = self.d[(b, j)].clone();
            self.d[(b, j)] = x;
        }
        for j in 0..self.u.cols {
            let x = self.u[(a, j)].clone();
            self.u[(a, j)] = self.u[(b, j)].clone();
            self.u[(b, j)] = x;
        }
        // u_inv picks up the inverse op on columns
        for i in 0..self.u_inv.rows {
            let x = self.u_inv[(i, a)].clone();
            self.u_inv[(i, a)] = self.u_inv[(i, b)].clone();
            self.u_inv[(i, b)] = x;
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.d.rows {
            let x = self.d[(i, a)].clone();
            self.d[(i, a)] = self.d[(i, b)].clone();
            self.d[(i, b)] = x;
        }
        for i in 0..self.v.rows {
            let x = self.v[(i, a)].clone();
            self.v[(i, a)] = self.v[(i, b)].clone();
            self.v[(i, b)] = x;
        }
        for j in 0..self.v_inv.cols {
            let x = self.v_inv[(a, j)].clone();
            self.v_inv[(a, j)] = self.v_inv[(b, j)].clone();
            self.v_inv[(b, j)] = x;
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.d.cols {
            let x = -self.d[(a, j)].clone();
            self.d[(a, j)] = x;
        }
        for j in 0..self.u.cols {
            let x = -self.u[(a, j)].clone();
            self.u[(a, j)] = x;
        }
        for i in 0..self.u_inv.rows {
            let x = -self.u_inv[(i, a)].clone();
            self.u_inv[(i, a)] = x;
        }
    }

    /// row_a -= q * row_b on d and u; u_inv gets col_b += q * col_a.
    fn row_sub(&mut self, a: usize, b: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.d.cols {
            let t = q * &self.d[(b, j)];
            self.d[(a, j)] -= t;
        }
        for j in 0..self.u.cols {
            let t = q * &self.u[(b, j)];
            self.u[(a, j)] -= t;
        }
        for i in 0..self.u_inv.rows {
            let t = q * &self.u_inv[(i, a)];
            self.u_inv[(i, b)] += t;
        }
    }

    /// col_a -= q * col_b on d and v; v_inv gets row_b += q * row_a.
    fn col_sub(&mut self, a: usize, b: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.d.rows {
            let t = q * &self.d[(i, b)];
            self.d[(i, a)] -= t;
        }
        for i in 0..self.v.rows {
            let t = q * &self.v[(i, b)];
            self.v[(i, a)] -= t;
        }
        for j in 0..self.v_inv.cols {
            let t = q * &self.v_inv[(a, j)];
            self.v_inv[(b, j)] += t;
        }
    }

    /// row_a += row_b.
    fn row_add(&mut self, a: usize, b: usize) {
        let minus_one = -BigInt::one();
        self.row_sub(a, b, &minus_one);
    }
}

/// Deterministic Smith normal form: minimal-absolute-value pivot with
/// row/column gcd reduction. Total on all matrices including empty ones.
pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let rows = m.rows;
    let cols = m.cols;
    let mut w = SnfWork {
        d: m.clone(),
        u: IntMatrix::identity(rows),
        u_inv: IntMatrix::identity(rows),
        v: IntMatrix::identity(cols),
        v_inv: IntMatrix::identity(cols),
    };
    let n = rows.min(cols);
    for k in 0..n {
        'stage: loop {
            // Minimal |entry| > 0 in the trailing submatrix, row-major scan.
            let mut pivot: Option<(usize, usize)> = None;
            for i in k..rows {
                for j in k..cols {
                    if !w.d[(i, j)].is_zero() {
                        let better = match pivot {
                            None => true,
                            Some((pi, pj)) => w.d[(i, j)].abs() < w.d[(pi, pj)].abs(),
                        };
                        if better {
                            pivot = Some((i, j));
                        }
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                break 'stage; // trailing block is zero
            };
            w.swap_rows(k, pi);
            w.swap_cols(k, pj);
            if w.d[(k, k)].is_negative() {
                w.negate_row(k);
            }
            // Clear the pivot column and row by division with remainder.
            let mut dirty = false;
            for i in (k + 1)..rows {
                if !w.d[(i, k)].is_zero() {
                    let q = &w.d[(i, k)] / &w.d[(k, k)];
                    w.row_sub(i, k, &q);
                    if !w.d[(i, k)].is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in (k + 1)..cols {
                if !w.d[(k, j)].is_zero() {
                    let q = &w.d[(k, j)] / &w.d[(k, k)];
                    w.col_sub(j, k, &q);
                    if !w.d[(k, j)].is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue 'stage;
            }
            // Divisibility: pivot must divide the rest of the block.
            let piv = w.d[(k, k)].clone();
            let mut fixed = true;
            'divcheck: for i in (k + 1)..rows {
                for j in (k + 1)..cols {
                    if !(&w.d[(i, j)] % &piv).is_zero() {
                        w.row_add(k, i);
                        fixed = false;
                        break 'divcheck;
                    }
                }
            }
            if fixed {
                break 'stage;
            }
        }
    }
    Snf { d: w.d, u: w.u, v: w.v, u_inv: w.u_inv, v_inv: w.v_inv }
}

/// Exact solution of `m * x = b` over the integers, if one exists.
///
/// Existence is decided by the divisibility test on the Smith diagonal;
/// a `None` is a proof that no integer solution exists.
pub fn solve_linear(m: &IntMatrix, b: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    if b.len() != m.rows {
        return Err(EngineError::dimension(format!(
            "solve_linear: rhs has length {}, matrix has {} rows",
            b.len(),
            m.rows
        )));
    }
    Ok(solve_with_snf(&smith_normal_form(m), b))
}

/// Same as `solve_linear` but reusing a precomputed decomposition.
pub fn solve_with_snf(snf: &Snf, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let ub = snf.u.mul_vec(b);
    let n = snf.d.rows.min(snf.d.cols);
    let mut y = vec![BigInt::zero(); snf.d.cols];
    for i in 0..snf.d.rows {
        if i < n && !snf.d[(i, i)].is_zero() {
            let (q, r) = num_integer::div_rem(ub[i].clone(), snf.d[(i, i)].clone());
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !ub[i].is_zero() {
            return None;
        }
    }
    Some(snf.v.mul_vec(&y))
}

/// Basis (as columns) of the integer kernel of `m`.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(m);
    let n = m.rows.min(m.cols);
    let free: Vec<usize> = (0..m.cols)
        .filter(|&j| j >= n || snf.d[(j, j)].is_zero())
        .collect();
    snf.v.submatrix_cols(&free)
}

/// A basis (as columns) for the lattice spanned by the columns of `a`.
pub fn lattice_basis(a: &IntMatrix) -> IntMatrix {
    if a.cols == 0 {
        return IntMatrix::zeros(a.rows, 0);
    }
    let snf = smith_normal_form(a);
    let r = snf.rank();
    // im(a) = u_inv * im(d); basis vectors are d_i * (u_inv column i).
    let mut cols = Vec::with_capacity(r);
    for i in 0..r {
        let di = &snf.d[(i, i)];
        let col: Vec<BigInt> = (0..a.rows).map(|row| &snf.u_inv[(row, i)] * di).collect();
        cols.push(col);
    }
    IntMatrix::from_cols(cols, a.rows)
}

/// Basis of the lattice `{ x : m x ∈ colspan(l) }`.
pub fn preimage_lattice(m: &IntMatrix, l: &IntMatrix) -> IntMatrix {
    assert_eq!(m.rows, l.rows, "preimage_lattice row mismatch");
    let stacked = m.hconcat(&l.neg());
    let ker = kernel_basis(&stacked);
    // x-parts of the kernel span the preimage lattice.
    let mut xpart = IntMatrix::zeros(m.cols, ker.cols);
    for i in 0..m.cols {
        for j in 0..ker.cols {
            xpart[(i, j)] = ker[(i, j)].clone();
        }
    }
    lattice_basis(&xpart)
}

/// Does colspan(l) contain x? Membership decided exactly.
pub fn lattice_contains_vec(l: &IntMatrix, x: &[BigInt]) -> bool {
    matches!(solve_linear(l, x), Ok(Some(_)))
}

/// Solve `m x ≡ b (mod colspan(l))`, returning the x-part.
pub fn solve_modulo(m: &IntMatrix, b: &[BigInt], l: &IntMatrix) -> Option<Vec<BigInt>> {
    assert_eq!(m.rows, l.rows, "solve_modulo row mismatch");
    let stacked = m.hconcat(l);
    let sol = solve_linear(&stacked, b).ok()??;
    Some(sol[0..m.cols].to_vec())
}

pub fn vec_add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_neg(a: &[BigInt]) -> Vec<BigInt> {
    a.iter().map(|x| -x).collect()
}

pub fn vec_is_zero(a: &[BigInt]) -> bool {
    a.iter().all(|x| x.is_zero())
}

pub fn vec_zero(n: usize) -> Vec<BigInt> {
    vec![BigInt::zero(); n]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn det(m: &IntMatrix) -> BigInt {
        // Cofactor expansion; only used on the small unimodular factors in tests.
        assert_eq!(m.rows, m.cols);
        if m.rows == 0 {
            return BigInt::one();
        }
        if m.rows == 1 {
            return m[(0, 0)].clone();
        }
        let mut acc = BigInt::zero();
        for j in 0..m.cols {
            if m[(0, j)].is_zero() {
                continue;
            }
            let mut sub = IntMatrix::zeros(m.rows - 1, m.cols - 1);
            for i in 1..m.rows {
                let mut jj = 0;
                for k in 0..m.cols {
                    if k == j {
                        continue;
                    }
                    sub[(i - 1, jj)] = m[(i, k)].clone();
                    jj += 1;
                }
            }
            let term = &m[(0, j)] * det(&sub);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn snf_identity() {
        let m = IntMatrix::identity(2);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.d, IntMatrix::identity(2));
        assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.d);
    }

    #[test]
    fn snf_2468() {
        // Oracle: gcd of all entries is 2, so d1 = 2; d1*d2 = |det| = |16-24| = 8.
        let m = IntMatrix::from_rows(vec![vec![2, 4], vec![6, 8]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.d[(0, 0)], BigInt::from(2));
        assert_eq!(snf.d[(1, 1)], BigInt::from(4));
        assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.d);
        assert_eq!(det(&snf.u).abs(), BigInt::one());
        assert_eq!(det(&snf.v).abs(), BigInt::one());
    }

    #[test]
    fn snf_zero() {
        let m = IntMatrix::from_rows(vec![vec![0]]);
        let snf = smith_normal_form(&m);
        assert!(snf.d[(0, 0)].is_zero());
    }

    #[test]
    fn snf_empty_shapes() {
        for (r, c) in [(0, 0), (0, 3), (3, 0)] {
            let m = IntMatrix::zeros(r, c);
            let snf = smith_normal_form(&m);
            assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.d);
        }
    }

    #[test]
    fn snf_inverse_tracking() {
        let m = IntMatrix::from_rows(vec![vec![6, 4, 1], vec![3, 2, 0], vec![7, 7, 7]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.u.mul(&snf.u_inv), IntMatrix::identity(3));
        assert_eq!(snf.v.mul(&snf.v_inv), IntMatrix::identity(3));
        assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.d);
    }

    #[test]
    fn solve_simple() {
        let m = IntMatrix::from_rows(vec![vec![2]]);
        let x = solve_linear(&m, &[BigInt::from(4)]).unwrap().unwrap();
        assert_eq!(x, vec![BigInt::from(2)]);
        assert!(solve_linear(&m, &[BigInt::from(3)]).unwrap().is_none());
    }

    #[test]
    fn solve_gcd_row() {
        // Oracle: extended gcd of 2 and 3 solves 2a+3b = 1.
        let m = IntMatrix::from_rows(vec![vec![2, 3]]);
        let x = solve_linear(&m, &[BigInt::one()]).unwrap().unwrap();
        let check = m.mul_vec(&x);
        assert_eq!(check, vec![BigInt::one()]);
    }

    #[test]
    fn kernel_of_projection() {
        let m = IntMatrix::from_rows(vec![vec![1, 0, 0], vec![0, 1, 0]]);
        let k = kernel_basis(&m);
        assert_eq!(k.cols, 1);
        assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn preimage_lattice_mod2() {
        // {x : 1*x ∈ 2Z} = 2Z.
        let m = IntMatrix::from_rows(vec![vec![1]]);
        let l = IntMatrix::from_rows(vec![vec![2]]);
        let p = preimage_lattice(&m, &l);
        assert_eq!(p.cols, 1);
        assert_eq!(p[(0, 0)].abs(), BigInt::from(2));
    }
}
