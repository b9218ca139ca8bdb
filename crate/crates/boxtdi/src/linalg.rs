//! Exact linear algebra: fraction-free determinants, rank, solving,
//! kernel bases, Hermite normal form, and lattice membership.
//!
//! Determinants and ranks run Bareiss fraction-free elimination on an
//! integer lift of the input (each row scaled by its denominator lcm),
//! which keeps intermediate values at the size of minors instead of
//! letting fractions compound. A machine-width `i128` path handles small
//! integer matrices; it falls back to `BigInt` on any overflow risk.

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::{RatMatrix, RatVector};
use crate::rat::{lcm_big, Rational};
use crate::{Error, Result};

/// Exact determinant of a square rational matrix.
pub fn det(m: &RatMatrix) -> Result<Rational> {
    if m.rows() != m.cols() {
        return Err(Error::NonSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(Rational::one());
    }
    let (lift, scale) = integer_row_lift(m);
    if let Some(small) = to_i128_entries(&lift) {
        if let Some(d) = det_bareiss_i128(small, n) {
            return Ok(Rational::new(BigInt::from(d), scale));
        }
    }
    let d = det_bareiss_big(lift, n);
    Ok(Rational::new(d, scale))
}

/// Rank over the rationals.
pub fn rank(m: &RatMatrix) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        return 0;
    }
    let (lift, _) = integer_row_lift(m);
    rank_bareiss_big(lift, m.rows(), m.cols())
}

/// Per-row integer lift: each row is multiplied by the lcm of its
/// denominators. Returns the integer entries and the product of the row
/// scales (so `det = det_lift / scale` for square input).
fn integer_row_lift(m: &RatMatrix) -> (Vec<BigInt>, BigInt) {
    let mut entries = Vec::with_capacity(m.rows() * m.cols());
    let mut scale = BigInt::one();
    for r in 0..m.rows() {
        let mut l = BigInt::one();
        for c in 0..m.cols() {
            l = lcm_big(&l, m.at(r, c).denom());
        }
        for c in 0..m.cols() {
            let e = m.at(r, c);
            entries.push(e.numer() * (&l / e.denom()));
        }
        scale *= l;
    }
    (entries, scale)
}

fn to_i128_entries(entries: &[BigInt]) -> Option<Vec<i128>> {
    use num_traits::ToPrimitive;
    let mut max_abs: i128 = 0;
    let mut out = Vec::with_capacity(entries.len());
    for e in entries {
        let v = e.to_i128()?;
        out.push(v);
        max_abs = max_abs.max(v.saturating_abs());
    }
    // Hadamard-style guard: stay far from i128 range for Bareiss products.
    if max_abs > 1 << 20 {
        return None;
    }
    Some(out)
}

/// Bareiss elimination over `i128`; `None` on overflow.
pub(crate) fn det_bareiss_i128(mut m: Vec<i128>, n: usize) -> Option<i128> {
    let idx = |r: usize, c: usize| r * n + c;
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n.saturating_sub(1) {
        if m[idx(k, k)] == 0 {
            // a fully zero pivot column means a zero determinant
            let pivot = match (k + 1..n).find(|&r| m[idx(r, k)] != 0) {
                Some(p) => p,
                None => return Some(0),
            };
            for c in 0..n {
                m.swap(idx(k, c), idx(pivot, c));
            }
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[idx(i, j)]
                    .checked_mul(m[idx(k, k)])?
                    .checked_sub(m[idx(i, k)].checked_mul(m[idx(k, j)])?)?;
                m[idx(i, j)] = t / prev;
            }
            m[idx(i, k)] = 0;
        }
        prev = m[idx(k, k)];
    }
    Some(sign * m[idx(n - 1, n - 1)])
}

fn find_pivot_big(m: &[BigInt], n_cols: usize, k: usize, col: usize, rows: usize) -> Option<usize> {
    (k..rows).find(|&r| !m[r * n_cols + col].is_zero())
}

fn det_bareiss_big(mut m: Vec<BigInt>, n: usize) -> BigInt {
    let idx = |r: usize, c: usize| r * n + c;
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if m[idx(k, k)].is_zero() {
            match find_pivot_big(&m, n, k + 1, k, n) {
                Some(p) => {
                    for c in 0..n {
                        m.swap(idx(k, c), idx(p, c));
                    }
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[idx(i, j)] * &m[idx(k, k)] - &m[idx(i, k)] * &m[idx(k, j)];
                m[idx(i, j)] = t / &prev;
            }
            m[idx(i, k)] = BigInt::zero();
        }
        prev = m[idx(k, k)].clone();
    }
    sign * m[idx(n - 1, n - 1)].clone()
}

fn rank_bareiss_big(mut m: Vec<BigInt>, rows: usize, cols: usize) -> usize {
    let idx = |r: usize, c: usize| r * cols + c;
    let mut r = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if r == rows {
            break;
        }
        let pivot = match find_pivot_big(&m, cols, r, c, rows) {
            Some(p) => p,
            None => continue,
        };
        if pivot != r {
            for j in 0..cols {
                m.swap(idx(r, j), idx(pivot, j));
            }
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let t = &m[idx(i, j)] * &m[idx(r, c)] - &m[idx(i, c)] * &m[idx(r, j)];
                m[idx(i, j)] = t / &prev;
            }
            m[idx(i, c)] = BigInt::zero();
        }
        prev = m[idx(r, c)].clone();
        r += 1;
    }
    r
}

/// Reduced row echelon form. Returns the reduced matrix and the pivot
/// column indices.
pub fn rref(m: &RatMatrix) -> (RatMatrix, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let pivot = (r..rows).find(|&i| !a.at(i, c).is_zero());
        let pivot = match pivot {
            Some(p) => p,
            None => continue,
        };
        if pivot != r {
            for j in 0..cols {
                let tmp = a.at(r, j).clone();
                *a.at_mut(r, j) = a.at(pivot, j).clone();
                *a.at_mut(pivot, j) = tmp;
            }
        }
        let inv = a.at(r, c).clone();
        for j in 0..cols {
            *a.at_mut(r, j) = a.at(r, j) / &inv;
        }
        for i in 0..rows {
            if i != r && !a.at(i, c).is_zero() {
                let f = a.at(i, c).clone();
                for j in 0..cols {
                    *a.at_mut(i, j) = a.at(i, j) - &f * a.at(r, j);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// A consistent linear system's solution: one particular solution plus a
/// column basis of the kernel.
#[derive(Debug, Clone)]
pub struct LinearSolution {
    pub particular: RatVector,
    /// `n x k` matrix whose columns span `{x : Ax = 0}`.
    pub kernel_basis: RatMatrix,
}

/// Solves `Ax = b` exactly. `Ok(None)` when inconsistent.
pub fn solve(a: &RatMatrix, b: &RatVector) -> Result<Option<LinearSolution>> {
    if a.rows() != b.len() {
        return Err(Error::DimensionMismatch(format!(
            "solve: {} rows vs rhs length {}",
            a.rows(),
            b.len()
        )));
    }
    let n = a.cols();
    let aug = a.hstack(&RatMatrix::from_rows(b.iter().map(|x| vec![x.clone()]).collect::<Vec<_>>()));
    let aug = if b.is_empty() && a.rows() == 0 {
        RatMatrix::empty(n + 1)
    } else {
        aug
    };
    let (red, pivots) = rref(&aug);
    if pivots.contains(&n) {
        return Ok(None);
    }
    let mut particular = vec![Rational::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = red.at(r, n).clone();
    }
    Ok(Some(LinearSolution {
        particular,
        kernel_basis: kernel_from_rref(&red, &pivots, n),
    }))
}

/// Column basis of `{x : Ax = 0}`.
pub fn kernel_basis(a: &RatMatrix) -> RatMatrix {
    let (red, pivots) = rref(a);
    kernel_from_rref(&red, &pivots, a.cols())
}

fn kernel_from_rref(red: &RatMatrix, pivots: &[usize], n: usize) -> RatMatrix {
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut basis = RatMatrix::zero(n, free.len());
    for (k, &fc) in free.iter().enumerate() {
        *basis.at_mut(fc, k) = Rational::one();
        for (r, &pc) in pivots.iter().enumerate() {
            *basis.at_mut(pc, k) = -red.at(r, fc).clone();
        }
    }
    basis
}

/// Column-style Hermite normal form of an integer matrix.
///
/// For an `m x n` input `A` there is a unimodular `U` with
/// `A * U = [H | 0]`, where column `j` of the staircase `H` has its first
/// nonzero entry (positive) in row `pivots[j]`, the pivot rows strictly
/// increase, and in each pivot row the entries of earlier columns are
/// reduced into `[0, pivot)`. This canonical form makes lattice equality
/// a structural comparison.
#[derive(Debug, Clone)]
pub struct HermiteForm {
    /// `m x k` staircase, `k` = rank.
    pub h: RatMatrix,
    /// `n x n` unimodular transform with `A * U = [H | 0]`.
    pub u: RatMatrix,
    /// Pivot row of each staircase column.
    pub pivots: Vec<usize>,
}

pub fn hnf(a: &RatMatrix) -> Result<HermiteForm> {
    let ints = a.to_bigint_entries()?;
    let (m, n) = (a.rows(), a.cols());
    let mut w: Vec<Vec<BigInt>> = (0..n).map(|c| (0..m).map(|r| ints[r * n + c].clone()).collect()).collect();
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|c| (0..n).map(|r| if r == c { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for i in 0..m {
        if r == n {
            break;
        }
        // euclidean sweep on row i over columns r..n
        loop {
            let mut best: Option<usize> = None;
            for j in r..n {
                if !w[j][i].is_zero() {
                    best = match best {
                        None => Some(j),
                        Some(b) if w[j][i].abs() < w[b][i].abs() => Some(j),
                        Some(b) => Some(b),
                    };
                }
            }
            let b = match best {
                None => break,
                Some(b) => b,
            };
            w.swap(r, b);
            u.swap(r, b);
            let mut again = false;
            for j in r + 1..n {
                if w[j][i].is_zero() {
                    continue;
                }
                let q = div_round(&w[j][i], &w[r][i]);
                if !q.is_zero() {
                    col_submul(&mut w, &mut u, j, r, &q);
                }
                if !w[j][i].is_zero() {
                    again = true;
                }
            }
            if !again {
                break;
            }
        }
        if w[r][i].is_zero() {
            continue;
        }
        if w[r][i].is_negative() {
            col_negate(&mut w, &mut u, r);
        }
        // canonicalize earlier columns in this pivot row
        let pivot_val = w[r][i].clone();
        for j in 0..r {
            let q = w[j][i].div_floor(&pivot_val);
            if !q.is_zero() {
                col_submul(&mut w, &mut u, j, r, &q);
            }
        }
        pivots.push(i);
        r += 1;
    }
    let rank = r;
    let h = RatMatrix::new(
        m,
        rank,
        (0..m)
            .flat_map(|row| (0..rank).map(move |c| (row, c)))
            .map(|(row, c)| Rational::from_integer(w[c][row].clone()))
            .collect(),
    );
    let u_mat = RatMatrix::new(
        n,
        n,
        (0..n)
            .flat_map(|row| (0..n).map(move |c| (row, c)))
            .map(|(row, c)| Rational::from_integer(u[c][row].clone()))
            .collect(),
    );
    Ok(HermiteForm { h, u: u_mat, pivots })
}

fn col_submul(w: &mut [Vec<BigInt>], u: &mut [Vec<BigInt>], target: usize, source: usize, q: &BigInt) {
    // split_at_mut dance to take two disjoint columns
    let (t, s) = if target < source {
        let (a, b) = w.split_at_mut(source);
        (&mut a[target], &b[0])
    } else {
        let (a, b) = w.split_at_mut(target);
        (&mut b[0], &a[source])
    };
    for (tv, sv) in t.iter_mut().zip(s.iter()) {
        *tv -= q * sv;
    }
    let (t, s) = if target < source {
        let (a, b) = u.split_at_mut(source);
        (&mut a[target], &b[0])
    } else {
        let (a, b) = u.split_at_mut(target);
        (&mut b[0], &a[source])
    };
    for (tv, sv) in t.iter_mut().zip(s.iter()) {
        *tv -= q * sv;
    }
}

fn col_negate(w: &mut [Vec<BigInt>], u: &mut [Vec<BigInt>], col: usize) {
    for v in w[col].iter_mut() {
        *v = -v.clone();
    }
    for v in u[col].iter_mut() {
        *v = -v.clone();
    }
}

/// Rounded division keeps euclidean sweeps short.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_mod_floor(b);
    if &r * 2 >= b.abs() {
        q + 1
    } else {
        q
    }
}

/// The integer kernel lattice of an integer matrix: columns generate
/// `{x in Z^n : Ax = 0}`.
pub fn integer_kernel(a: &RatMatrix) -> Result<RatMatrix> {
    let form = hnf(a)?;
    let rank = form.pivots.len();
    let idx: Vec<usize> = (rank..a.cols()).collect();
    Ok(form.u.select_cols(&idx))
}

/// Expresses `b` over the staircase basis of `lattice(columns of A)` with
/// rational coordinates; `None` when `b` is outside the column span.
/// Rational inputs are lifted by the lcm of the denominators of `a` only,
/// then `b`'s residual denominators are carried into the coordinates.
pub fn lattice_coordinates(a: &RatMatrix, b: &RatVector) -> Result<Option<RatVector>> {
    if a.rows() != b.len() {
        return Err(Error::DimensionMismatch(format!(
            "lattice_coordinates: {} rows vs rhs length {}",
            a.rows(),
            b.len()
        )));
    }
    let alpha = a.denominator_lcm();
    let alpha_rat = Rational::from_integer(alpha);
    let scaled_a = a.scale(&alpha_rat);
    let scaled_b: RatVector = b.iter().map(|x| x * &alpha_rat).collect();
    let form = hnf(&scaled_a)?;
    let mut residue = scaled_b;
    let mut coords = Vec::with_capacity(form.pivots.len());
    for (j, &p) in form.pivots.iter().enumerate() {
        // rows above the pivot must already be cleared
        let blocked = residue[..p].iter().any(|x| !x.is_zero());
        if blocked {
            return Ok(None);
        }
        let c = &residue[p] / form.h.at(p, j);
        for row in p..residue.len() {
            let delta = &c * form.h.at(row, j);
            residue[row] = &residue[row] - delta;
        }
        coords.push(c);
    }
    if residue.iter().any(|x| !x.is_zero()) {
        return Ok(None);
    }
    Ok(Some(coords))
}

/// Is `b` an integer combination of the columns of `A`?
pub fn lattice_member(a: &RatMatrix, b: &RatVector) -> Result<bool> {
    Ok(match lattice_coordinates(a, b)? {
        None => false,
        Some(coords) => coords.iter().all(|c| c.is_integer()),
    })
}

/// Do the columns of `A` and `B` generate the same lattice?
pub fn lattice_equal(a: &RatMatrix, b: &RatMatrix) -> Result<bool> {
    if a.rows() != b.rows() {
        return Err(Error::DimensionMismatch(format!(
            "lattice_equal: {} rows vs {} rows",
            a.rows(),
            b.rows()
        )));
    }
    let alpha = lcm_big(&a.denominator_lcm(), &b.denominator_lcm());
    let alpha_rat = Rational::from_integer(alpha);
    let fa = hnf(&a.scale(&alpha_rat))?;
    let fb = hnf(&b.scale(&alpha_rat))?;
    Ok(fa.pivots == fb.pivots && fa.h == fb.h)
}

/// All maximal (r x r) column subsets of a full-row-rank matrix with
/// their exact determinants, in lexicographic column order.
pub fn maximal_minors(a: &RatMatrix) -> Result<impl Iterator<Item = (Vec<usize>, Rational)> + '_> {
    let r = a.rows();
    let found = rank(a);
    if found != r {
        return Err(Error::RankDeficient { expected: r, found });
    }
    Ok((0..a.cols()).combinations(r).map(move |cols| {
        let d = det(&a.select_cols(&cols)).expect("square by construction");
        (cols, d)
    }))
}

/// Greedy lexicographically-first row basis: indices (into `candidates`)
/// of rows forming a basis of the row space of `m.select_rows(candidates)`.
pub fn lex_row_basis(m: &RatMatrix, candidates: &[usize]) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut current_rank = 0;
    for &i in candidates {
        let mut trial = chosen.clone();
        trial.push(i);
        let r = rank(&m.select_rows(&trial));
        if r > current_rank {
            chosen = trial;
            current_rank = r;
        }
    }
    chosen
}
