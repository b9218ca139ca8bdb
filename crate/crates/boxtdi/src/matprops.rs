//! Recognizers for unimodular, equimodular, totally unimodular, and
//! totally equimodular matrices, each with positive or negative
//! witnesses.
//!
//! A full-row-rank rational `r x n` matrix is equimodular when its
//! nonzero `r x r` minors all share one absolute value. Six equivalent
//! criteria decide it; all are implemented and cross-checked:
//!
//! 1. exhaustive comparison of the maximal minors;
//! 2. `lattice(D) = lattice(A)` for every nonsingular maximal `D`;
//! 3. `D^-1 A` integer for every such `D`;
//! 4. `D^-1 A` with entries in `{0, +-1}` for every such `D`;
//! 5. `D^-1 A` totally unimodular for every such `D`;
//! 6. `D^-1 A` totally unimodular for the first nonsingular `D`.
//!
//! Route 6 is the default (one inversion plus one TU test). Refutations
//! are always reported through route 1 so that the returned witness is a
//! pair of maximal minors with different nonzero absolute values.
//!
//! Total unimodularity is checked exhaustively over square submatrices
//! in ascending size with early exit; the cost is exponential, which is
//! fine at desk scale.

use itertools::Itertools;
use num_traits::{One, Signed, Zero};

use crate::linalg::{det, lattice_equal, maximal_minors, rank, rref};
use crate::matrix::RatMatrix;
use crate::rat::Rational;
use crate::{Error, Result};

/// Which equimodularity criterion to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquimodularRoute {
    ExhaustiveDets,
    LatticeEquality,
    InverseIntegral,
    InverseZeroPmOne,
    InverseTu,
    FirstInverseTu,
}

impl EquimodularRoute {
    pub const DEFAULT: EquimodularRoute = EquimodularRoute::FirstInverseTu;

    pub const ALL: [EquimodularRoute; 6] = [
        EquimodularRoute::ExhaustiveDets,
        EquimodularRoute::LatticeEquality,
        EquimodularRoute::InverseIntegral,
        EquimodularRoute::InverseZeroPmOne,
        EquimodularRoute::InverseTu,
        EquimodularRoute::FirstInverseTu,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            EquimodularRoute::ExhaustiveDets => "exhaustive-dets",
            EquimodularRoute::LatticeEquality => "lattice-equality",
            EquimodularRoute::InverseIntegral => "inverse-integral",
            EquimodularRoute::InverseZeroPmOne => "inverse-zero-pm-one",
            EquimodularRoute::InverseTu => "inverse-tu",
            EquimodularRoute::FirstInverseTu => "first-inverse-tu",
        }
    }
}

/// One maximal minor: the column subset and its determinant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorWitness {
    pub cols: Vec<usize>,
    pub det: Rational,
}

#[derive(Debug, Clone)]
pub struct EquimodularVerdict {
    pub is_equimodular: bool,
    /// The shared absolute value of the nonzero maximal minors, when
    /// equimodular. One for a zero-row matrix.
    pub common_abs_det: Option<Rational>,
    /// Two maximal minors with differing nonzero absolute values, when
    /// not equimodular: the lexicographically first nonsingular column
    /// set, then the lexicographically first one disagreeing with it.
    pub refutation: Option<(MinorWitness, MinorWitness)>,
    pub route: EquimodularRoute,
}

/// Is the matrix unimodular: integer, full row rank, and every nonzero
/// maximal minor equal to +-1?
pub fn is_unimodular(a: &RatMatrix) -> Result<bool> {
    if !a.is_integer() {
        return Err(Error::NonIntegerMatrix);
    }
    if a.rows() == 0 {
        return Ok(true);
    }
    for (_, d) in maximal_minors(a)? {
        if !d.is_zero() && !d.numer().abs().is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_equimodular(a: &RatMatrix, route: EquimodularRoute) -> Result<EquimodularVerdict> {
    let r = a.rows();
    if r == 0 {
        return Ok(EquimodularVerdict {
            is_equimodular: true,
            common_abs_det: Some(Rational::one()),
            refutation: None,
            route,
        });
    }
    let found = rank(a);
    if found != r {
        return Err(Error::RankDeficient { expected: r, found });
    }
    let holds = match route {
        EquimodularRoute::ExhaustiveDets => route_exhaustive(a)?.is_none(),
        EquimodularRoute::LatticeEquality => route_lattice(a)?,
        EquimodularRoute::InverseIntegral => route_inverse(a, |m| m.is_integer())?,
        EquimodularRoute::InverseZeroPmOne => route_inverse(a, entries_zero_pm_one)?,
        EquimodularRoute::InverseTu => route_inverse(a, |m| is_totally_unimodular(m).is_tu)?,
        EquimodularRoute::FirstInverseTu => {
            let (_, d) = first_nonsingular(a)?;
            is_totally_unimodular(&d).is_tu
        }
    };
    if holds {
        let (_, d) = first_nonsingular_raw(a)?;
        Ok(EquimodularVerdict {
            is_equimodular: true,
            common_abs_det: Some(d.abs()),
            refutation: None,
            route,
        })
    } else {
        let refutation = route_exhaustive(a)?.expect("nonequimodular matrix must refute via minors");
        Ok(EquimodularVerdict {
            is_equimodular: false,
            common_abs_det: None,
            refutation: Some(refutation),
            route,
        })
    }
}

/// Route 1: scan maximal minors; `None` when all nonzero share one
/// absolute value, otherwise the witness pair.
fn route_exhaustive(a: &RatMatrix) -> Result<Option<(MinorWitness, MinorWitness)>> {
    let mut first: Option<MinorWitness> = None;
    for (cols, d) in maximal_minors(a)? {
        if d.is_zero() {
            continue;
        }
        match &first {
            None => first = Some(MinorWitness { cols, det: d }),
            Some(f) => {
                if f.det.abs() != d.abs() {
                    return Ok(Some((f.clone(), MinorWitness { cols, det: d })));
                }
            }
        }
    }
    Ok(None)
}

fn route_lattice(a: &RatMatrix) -> Result<bool> {
    let r = a.rows();
    for cols in (0..a.cols()).combinations(r) {
        let d = a.select_cols(&cols);
        if det(&d)?.is_zero() {
            continue;
        }
        if !lattice_equal(&d, a)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn route_inverse(a: &RatMatrix, pred: impl Fn(&RatMatrix) -> bool) -> Result<bool> {
    let r = a.rows();
    for cols in (0..a.cols()).combinations(r) {
        let d = a.select_cols(&cols);
        if det(&d)?.is_zero() {
            continue;
        }
        if !pred(&inverse_times(&d, a)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// First nonsingular maximal submatrix in lexicographic column order,
/// returned as `D^-1 A`.
fn first_nonsingular(a: &RatMatrix) -> Result<(Vec<usize>, RatMatrix)> {
    let (cols, _) = first_nonsingular_raw(a)?;
    let d = a.select_cols(&cols);
    Ok((cols, inverse_times(&d, a)?))
}

fn first_nonsingular_raw(a: &RatMatrix) -> Result<(Vec<usize>, Rational)> {
    for (cols, d) in maximal_minors(a)? {
        if !d.is_zero() {
            return Ok((cols, d));
        }
    }
    unreachable!("full row rank matrix has a nonsingular maximal submatrix")
}

/// `D^-1 * A` via row reduction of `[D | A]`.
fn inverse_times(d: &RatMatrix, a: &RatMatrix) -> Result<RatMatrix> {
    let aug = d.hstack(a);
    let (red, pivots) = rref(&aug);
    debug_assert_eq!(pivots, (0..d.cols()).collect::<Vec<_>>());
    let cols: Vec<usize> = (d.cols()..aug.cols()).collect();
    Ok(red.select_cols(&cols))
}

fn entries_zero_pm_one(m: &RatMatrix) -> bool {
    m.entries().iter().all(|e| e.is_zero() || e.abs().is_one())
}

/// A square submatrix witnessing a TU violation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubmatrixWitness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub det: Rational,
}

#[derive(Debug, Clone)]
pub struct TuVerdict {
    pub is_tu: bool,
    pub violation: Option<SubmatrixWitness>,
}

/// Exhaustive total unimodularity test: all square submatrices, in
/// ascending size, pruned by early exit on the first violation. A
/// non-`{0,+-1}` entry refutes immediately with a 1x1 witness.
pub fn is_totally_unimodular(a: &RatMatrix) -> TuVerdict {
    for r in 0..a.rows() {
        for c in 0..a.cols() {
            let e = a.at(r, c);
            if !e.is_zero() && !e.abs().is_one() {
                return TuVerdict {
                    is_tu: false,
                    violation: Some(SubmatrixWitness {
                        rows: vec![r],
                        cols: vec![c],
                        det: e.clone(),
                    }),
                };
            }
        }
    }
    // entries are {0,+-1}: i128 Bareiss on submatrices is exact
    let ints: Vec<i128> = a
        .entries()
        .iter()
        .map(|e| {
            use num_traits::ToPrimitive;
            e.numer().to_i128().expect("entries are 0 or +-1")
        })
        .collect();
    let max_size = a.rows().min(a.cols());
    for size in 2..=max_size {
        for rows in (0..a.rows()).combinations(size) {
            for cols in (0..a.cols()).combinations(size) {
                let mut sub: Vec<i128> = Vec::with_capacity(size * size);
                for &r in &rows {
                    for &c in &cols {
                        sub.push(ints[r * a.cols() + c]);
                    }
                }
                let d = crate::linalg::det_bareiss_i128(sub, size)
                    .expect("sign-matrix minors fit in i128 at desk scale");
                if d.abs() > 1 {
                    return TuVerdict {
                        is_tu: false,
                        violation: Some(SubmatrixWitness {
                            rows,
                            cols,
                            det: Rational::from_integer(d.into()),
                        }),
                    };
                }
            }
        }
    }
    TuVerdict { is_tu: true, violation: None }
}

#[derive(Debug, Clone)]
pub struct TotalEquimodularVerdict {
    pub is_totally_equimodular: bool,
    /// First offending linearly independent row subset (ordered by size,
    /// then lexicographically) with its equimodularity refutation.
    pub offending_rows: Option<(Vec<usize>, EquimodularVerdict)>,
}

/// Every linearly independent row subset must form an equimodular
/// matrix. Exhaustive over row subsets; exponential by design.
pub fn is_totally_equimodular(a: &RatMatrix) -> TotalEquimodularVerdict {
    for size in 1..=a.rows() {
        for rows in (0..a.rows()).combinations(size) {
            let sub = a.select_rows(&rows);
            if rank(&sub) != size {
                continue;
            }
            let verdict = is_equimodular(&sub, EquimodularRoute::DEFAULT)
                .expect("independent subset is full row rank");
            if !verdict.is_equimodular {
                let refuted = is_equimodular(&sub, EquimodularRoute::ExhaustiveDets)
                    .expect("independent subset is full row rank");
                return TotalEquimodularVerdict {
                    is_totally_equimodular: false,
                    offending_rows: Some((rows, refuted)),
                };
            }
        }
    }
    TotalEquimodularVerdict { is_totally_equimodular: true, offending_rows: None }
}

/// Equimodularity in the extended sense for matrices that need not have
/// full row rank: every maximal linearly independent row subset must be
/// equimodular.
pub fn is_equimodular_general(a: &RatMatrix) -> Result<EquimodularVerdict> {
    let r = rank(a);
    if r == a.rows() {
        return is_equimodular(a, EquimodularRoute::DEFAULT);
    }
    for rows in (0..a.rows()).combinations(r) {
        let sub = a.select_rows(&rows);
        if rank(&sub) != r {
            continue;
        }
        let verdict = is_equimodular(&sub, EquimodularRoute::DEFAULT)?;
        if !verdict.is_equimodular {
            return is_equimodular(&sub, EquimodularRoute::ExhaustiveDets);
        }
    }
    Ok(EquimodularVerdict {
        is_equimodular: true,
        common_abs_det: None,
        refutation: None,
        route: EquimodularRoute::DEFAULT,
    })
}
