//! Dense exact matrices and vectors over the rationals.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rat::{denominator_lcm, lcm_big, Rational};
use crate::{Error, Result};

/// A column vector, stored as its entries.
pub type RatVector = Vec<Rational>;

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl std::fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(crate::rat::rational_to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> RatMatrix {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        RatMatrix { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> RatMatrix {
        RatMatrix::new(rows, cols, vec![Rational::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> RatMatrix {
        let mut m = RatMatrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<RatVector>) -> RatMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        for row in &rows {
            assert_eq!(row.len(), c, "ragged rows");
        }
        RatMatrix::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Row-count-zero matrix with a definite column count.
    pub fn empty(cols: usize) -> RatMatrix {
        RatMatrix::new(0, cols, Vec::new())
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| crate::rat::rat_int(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Rational {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> RatVector {
        self.row(r).to_vec()
    }

    pub fn col_vec(&self, c: usize) -> RatVector {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut out = RatMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *out.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> RatMatrix {
        RatMatrix::from_rows_with_cols(idx.iter().map(|&i| self.row_vec(i)).collect(), self.cols)
    }

    pub fn select_cols(&self, idx: &[usize]) -> RatMatrix {
        let mut out = RatMatrix::zero(self.rows, idx.len());
        for r in 0..self.rows {
            for (k, &c) in idx.iter().enumerate() {
                *out.at_mut(r, k) = self.at(r, c).clone();
            }
        }
        out
    }

    fn from_rows_with_cols(rows: Vec<RatVector>, cols: usize) -> RatMatrix {
        let r = rows.len();
        RatMatrix::new(r, cols, rows.into_iter().flatten().collect())
    }

    pub fn vstack(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.cols);
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        RatMatrix::new(self.rows + other.rows, self.cols, entries)
    }

    pub fn hstack(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.rows, other.rows);
        let mut rows = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut row = self.row_vec(r);
            row.extend(other.row(r).iter().cloned());
            rows.push(row);
        }
        RatMatrix::from_rows_with_cols(rows, self.cols + other.cols)
    }

    pub fn mat_vec(&self, v: &[Rational]) -> Result<RatVector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "mat_vec: {}x{} with vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows).map(|r| dot(self.row(r), v)).collect())
    }

    pub fn mat_mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "mat_mul: {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = RatMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = Rational::zero();
                for k in 0..self.cols {
                    acc += self.at(r, k) * other.at(k, c);
                }
                *out.at_mut(r, c) = acc;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Rational) -> RatMatrix {
        RatMatrix::new(self.rows, self.cols, self.entries.iter().map(|e| e * k).collect())
    }

    pub fn is_integer(&self) -> bool {
        self.entries.iter().all(|e| e.is_integer())
    }

    pub fn denominator_lcm(&self) -> BigInt {
        denominator_lcm(self.entries.iter())
    }

    /// Entries as `BigInt`, failing when any entry is fractional.
    pub fn to_bigint_entries(&self) -> Result<Vec<BigInt>> {
        if !self.is_integer() {
            return Err(Error::NonIntegerMatrix);
        }
        Ok(self.entries.iter().map(|e| e.numer().clone()).collect())
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

pub fn vec_add(a: &[Rational], b: &[Rational]) -> RatVector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Rational], b: &[Rational]) -> RatVector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Rational], k: &Rational) -> RatVector {
    a.iter().map(|x| x * k).collect()
}

pub fn vec_is_integer(a: &[Rational]) -> bool {
    a.iter().all(|x| x.is_integer())
}

pub fn vec_is_zero(a: &[Rational]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// Scales a rational vector to its primitive integer form: multiplies by
/// the denominator lcm and divides by the gcd of the results. Zero maps
/// to zero. The orientation (sign) is preserved.
pub fn primitive_integer_vector(v: &[Rational]) -> Vec<BigInt> {
    let l = denominator_lcm(v.iter());
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rational::from_integer(l.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = if g.is_zero() { x.abs() } else { lcm_gcd(&g, x) };
    }
    if g.is_zero() || g.is_one() {
        return ints;
    }
    ints.iter().map(|x| x / &g).collect()
}

fn lcm_gcd(g: &BigInt, x: &BigInt) -> BigInt {
    num_integer::Integer::gcd(g, x)
}

/// Least common multiple of denominators across a matrix and a vector.
pub fn joint_denominator_lcm(m: &RatMatrix, v: &[Rational]) -> BigInt {
    lcm_big(&m.denominator_lcm(), &denominator_lcm(v.iter()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn basic_shape_ops() {
        let m = RatMatrix::from_i64_rows(&[&[1, 2, 3], &[4, 5, 6]]);
        assert_eq!(m.rows(), 2);
        assert_eq!(m.cols(), 3);
        assert_eq!(m.transpose().at(2, 1), &rat_int(6));
        let s = m.select_cols(&[0, 2]);
        assert_eq!(s.row_vec(1), vec![rat_int(4), rat_int(6)]);
        let v = m.mat_vec(&[rat_int(1), rat_int(0), rat_int(-1)]).unwrap();
        assert_eq!(v, vec![rat_int(-2), rat_int(-2)]);
    }

    #[test]
    fn primitive_scaling() {
        let v = vec![rat(1, 2), rat(-3, 4), rat_int(0)];
        assert_eq!(
            primitive_integer_vector(&v),
            vec![BigInt::from(2), BigInt::from(-3), BigInt::from(0)]
        );
        let w = vec![rat_int(4), rat_int(-6)];
        assert_eq!(primitive_integer_vector(&w), vec![BigInt::from(2), BigInt::from(-3)]);
    }

    #[test]
    fn mat_mul_identity() {
        let m = RatMatrix::from_i64_rows(&[&[1, 2], &[3, 4]]);
        let i = RatMatrix::identity(2);
        assert_eq!(m.mat_mul(&i).unwrap(), m);
    }
}
