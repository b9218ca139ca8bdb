//! Decision procedures over exact polyhedra: box-integrality by bounded
//! brute force, box-TDIness via face-defining-matrix equimodularity,
//! full box-integrality, cone box-integrality and polarity transfer,
//! Cook's box property, dilation profiles, and fractional-vertex
//! witness extraction.
//!
//! The two pillars deliberately stay independent of each other:
//!
//! - [`is_box_integer`] decides box-integrality geometrically. A point
//!   is a vertex of `P` intersected with an integer box exactly when it
//!   is the unique solution of a face's affine hull plus integer
//!   coordinate fixings, so it suffices to sweep, for every face `F`
//!   and every coordinate subset completing `aff(F)` to a nonsingular
//!   system, the integer fixings within the face's bounding box. For
//!   bounded polyhedra the sweep is complete and the verdict exact; for
//!   unbounded ones the fixings range over a finite window and only
//!   "false" is exact.
//! - [`is_box_tdi`] decides the same property in its principal form
//!   algebraically: every face must have an equimodular face-defining
//!   matrix. This route is exact for all polyhedra.
//!
//! The acceptance suite plays these two against each other.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use itertools::Itertools;

use crate::linalg::{hnf, integer_kernel, rank, rref};
use crate::matprops::{is_equimodular, is_totally_unimodular, EquimodularRoute, MinorWitness};
use crate::matrix::{dot, vec_add, vec_is_integer, vec_is_zero, RatMatrix, RatVector};
use crate::polyhedra::{
    box_intersect, dilate, face_lattice, h_to_v, lin_space_basis, polar, Face, FaceLattice,
    HPolyhedron, VPolyhedron,
};
use crate::rat::{ceil_int, denominator_lcm, floor_int, lcm_big, rat_int, Bound, IntBox, Rational};
use crate::{Error, Result};

pub use crate::polyhedra::pm_lift;

/// Default window radius for brute-force sweeps on unbounded polyhedra.
pub const DEFAULT_WINDOW_RADIUS: i64 = 4;
/// Default sample count for the sampled box-property predicate.
pub const DEFAULT_BOX_PROPERTY_SAMPLES: usize = 64;

const PLAIN_SCAN_LIMIT: u64 = 1 << 18;
const LATTICE_CLASS_LIMIT: u64 = 4096;
const INTEGER_POINT_NODE_BUDGET: usize = 20_000;
const WITNESS_DILATION_STEPS: u64 = 64;

/// A fractional vertex of `kP` intersected with an integer box.
#[derive(Debug, Clone)]
pub struct FractionalVertex {
    /// Dilation factor; one when the witness lives on `P` itself.
    pub k: BigInt,
    pub bounds: IntBox,
    pub vertex: RatVector,
}

#[derive(Debug, Clone)]
pub struct BoxIntegerVerdict {
    pub is_box_integer: bool,
    /// True when a "true" verdict only covers the finite search window
    /// (the input was unbounded). "False" verdicts are always exact.
    pub window_limited: bool,
    pub witness: Option<FractionalVertex>,
}

/// Box-integrality by complete sweep (bounded input) or windowed sweep
/// (unbounded input). An optional box clamps the coordinate fixings.
pub fn is_box_integer(p: &HPolyhedron, window: Option<&IntBox>) -> Result<BoxIntegerVerdict> {
    is_box_integer_with_radius(p, window, DEFAULT_WINDOW_RADIUS)
}

pub fn is_box_integer_with_radius(
    p: &HPolyhedron,
    window: Option<&IntBox>,
    radius: i64,
) -> Result<BoxIntegerVerdict> {
    let lattice = face_lattice(p)?;
    let n = p.dim();
    // a user-supplied window restricts the sweep, so a "true" under it
    // is only as good as the window even for bounded input
    let exact = lattice.vrep.is_bounded() && window.is_none();
    let radius_big = BigInt::from(radius);

    for face in &lattice.faces {
        if face.fdm.rows() == 0 {
            continue; // fixing every coordinate reproduces the fixing
        }
        if face.dim == 0 {
            let v = &lattice.vrep.vertices[face.vertex_ids[0]];
            if !vec_is_integer(v) {
                return Ok(BoxIntegerVerdict {
                    is_box_integer: false,
                    window_limited: false,
                    witness: Some(FractionalVertex {
                        k: BigInt::one(),
                        bounds: IntBox::free(n),
                        vertex: v.clone(),
                    }),
                });
            }
            continue;
        }
        let face_v = face_generators(&lattice, face);
        let ranges = coordinate_ranges(&face_v, window, &radius_big);
        for subset in (0..n).combinations(face.dim) {
            if let Some(witness) = sweep_face_subset(p, face, &subset, &ranges)? {
                return Ok(BoxIntegerVerdict {
                    is_box_integer: false,
                    window_limited: false,
                    witness: Some(witness),
                });
            }
        }
    }
    Ok(BoxIntegerVerdict { is_box_integer: true, window_limited: !exact, witness: None })
}

/// V-form view of a single face.
fn face_generators(lattice: &FaceLattice, face: &Face) -> VPolyhedron {
    VPolyhedron {
        dim: lattice.vrep.dim,
        vertices: face.vertex_ids.iter().map(|&k| lattice.vrep.vertices[k].clone()).collect(),
        rays: face.ray_ids.iter().map(|&k| lattice.vrep.rays[k].clone()).collect(),
        lineality: lattice.vrep.lineality.clone(),
    }
}

/// Per-coordinate integer ranges over the face, window-clamped.
fn coordinate_ranges(
    face_v: &VPolyhedron,
    window: Option<&IntBox>,
    radius: &BigInt,
) -> Vec<(BigInt, BigInt)> {
    (0..face_v.dim)
        .map(|i| {
            let (lo, hi) = crate::polyhedra::integer_bounding_range(face_v, i, Some(radius));
            let mut lo = lo.expect("radius given");
            let mut hi = hi.expect("radius given");
            if let Some(w) = window {
                if let Bound::Finite(l) = &w.lower[i] {
                    lo = lo.max(l.clone());
                }
                if let Bound::Finite(u) = &w.upper[i] {
                    hi = hi.min(u.clone());
                }
            }
            (lo, hi)
        })
        .collect()
}

/// Sweeps the integer fixings of `subset` over a face. Returns the
/// lexicographically first violation, if any.
fn sweep_face_subset(
    p: &HPolyhedron,
    face: &Face,
    subset: &[usize],
    ranges: &[(BigInt, BigInt)],
) -> Result<Option<FractionalVertex>> {
    let n = p.dim();
    // S = [fdm; unit rows of subset] must be nonsingular
    let mut unit_rows: Vec<RatVector> = Vec::with_capacity(subset.len());
    for &i in subset {
        let mut row = vec![Rational::zero(); n];
        row[i] = Rational::one();
        unit_rows.push(row);
    }
    let s = face.fdm.vstack(&RatMatrix::from_rows(unit_rows));
    if rank(&s) != n {
        return Ok(None);
    }
    let sub_ranges: Vec<(BigInt, BigInt)> = subset.iter().map(|&i| ranges[i].clone()).collect();
    if sub_ranges.iter().any(|(lo, hi)| lo > hi) {
        return Ok(None);
    }

    // solve S * [c0 | T] = [rhs, 0; 0, I]
    let f = subset.len();
    let mut aug_cols = RatMatrix::zero(n, 1 + f);
    for (r, v) in face.fdm_rhs.iter().enumerate() {
        *aug_cols.at_mut(r, 0) = v.clone();
    }
    for j in 0..f {
        *aug_cols.at_mut(face.fdm.rows() + j, 1 + j) = Rational::one();
    }
    let (red, pivots) = rref(&s.hstack(&aug_cols));
    debug_assert_eq!(pivots, (0..n).collect::<Vec<_>>());
    let c0: RatVector = (0..n).map(|r| red.at(r, n).clone()).collect();
    let t_mat = red.select_cols(&(n + 1..n + 1 + f).collect::<Vec<_>>());

    if vec_is_integer(&c0) && t_mat.is_integer() {
        return Ok(None); // every integer fixing lands on an integer point
    }

    let count = sub_ranges
        .iter()
        .map(|(lo, hi)| (hi - lo + 1u32).max(BigInt::zero()))
        .product::<BigInt>();
    let witness_point = if count <= BigInt::from(PLAIN_SCAN_LIMIT) {
        plain_scan(p, &c0, &t_mat, &sub_ranges)
    } else {
        lattice_scan(p, &c0, &t_mat, &sub_ranges)?
    };
    Ok(witness_point.map(|(fixing, vertex)| {
        let mut bounds = IntBox::free(n);
        for (j, &i) in subset.iter().enumerate() {
            bounds.fix(i, fixing[j].clone());
        }
        FractionalVertex { k: BigInt::one(), bounds, vertex }
    }))
}

/// Lexicographic odometer over the integer fixings.
fn plain_scan(
    p: &HPolyhedron,
    c0: &RatVector,
    t_mat: &RatMatrix,
    ranges: &[(BigInt, BigInt)],
) -> Option<(Vec<BigInt>, RatVector)> {
    let f = ranges.len();
    let mut current: Vec<BigInt> = ranges.iter().map(|(lo, _)| lo.clone()).collect();
    loop {
        let v = point_at(c0, t_mat, &current);
        if !vec_is_integer(&v) && p.contains(&v) {
            return Some((current, v));
        }
        // advance the odometer, last coordinate fastest
        let mut pos = f;
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            current[pos] += 1;
            if current[pos] <= ranges[pos].1 {
                break;
            }
            current[pos] = ranges[pos].0.clone();
        }
    }
}

fn point_at(c0: &RatVector, t_mat: &RatMatrix, fixing: &[BigInt]) -> RatVector {
    let mut v = c0.clone();
    for (j, q) in fixing.iter().enumerate() {
        if q.is_zero() {
            continue;
        }
        let qr = Rational::from_integer(q.clone());
        for (r, slot) in v.iter_mut().enumerate() {
            let t = t_mat.at(r, j);
            if !t.is_zero() {
                *slot = &*slot + t * &qr;
            }
        }
    }
    v
}

/// Residue-class search for fixings with fractional image, used when the
/// plain sweep would be too wide. The fixings mapping to integer points
/// form a union of cosets of `L = {q : T q integer}`, so fractionality
/// is constant per coset: try one representative per coset and, for each
/// fractional one, decide whether the fixing polytope meets it.
fn lattice_scan(
    p: &HPolyhedron,
    c0: &RatVector,
    t_mat: &RatMatrix,
    ranges: &[(BigInt, BigInt)],
) -> Result<Option<(Vec<BigInt>, RatVector)>> {
    let f = ranges.len();
    let n = c0.len();
    let delta = t_mat.denominator_lcm();
    let delta_rat = Rational::from_integer(delta.clone());
    // L = projection of the integer kernel of [N | delta I] onto the
    // first f coordinates, in staircase basis form
    let n_mat = t_mat.scale(&delta_rat);
    let combined = n_mat.hstack(&RatMatrix::identity(n).scale(&delta_rat));
    let kernel = integer_kernel(&combined)?;
    let proj = kernel.select_rows(&(0..f).collect::<Vec<_>>());
    let form = hnf(&proj)?;
    let basis = form.h;
    if basis.cols() != f {
        return Err(Error::SearchBudgetExceeded("degenerate fixing lattice".into()));
    }
    let diag: Vec<BigInt> =
        (0..f).map(|j| basis.at(form.pivots[j], j).numer().clone()).collect();
    let index: BigInt = diag.iter().product();
    if index > BigInt::from(LATTICE_CLASS_LIMIT) {
        return Err(Error::SearchBudgetExceeded(format!(
            "fixing lattice has {index} residue classes"
        )));
    }

    // polytope of admissible fixings: A*(c0 + T q) <= b plus range rows
    let mut rows: Vec<(RatVector, Rational)> = Vec::new();
    let a_t = p.a.mat_mul(t_mat)?;
    let a_c0 = p.a.mat_vec(c0)?;
    for i in 0..p.rows() {
        rows.push((a_t.row_vec(i), &p.b[i] - &a_c0[i]));
    }
    for (j, (lo, hi)) in ranges.iter().enumerate() {
        let mut row = vec![Rational::zero(); f];
        row[j] = Rational::one();
        rows.push((row.clone(), Rational::from_integer(hi.clone())));
        let mut neg = vec![Rational::zero(); f];
        neg[j] = -Rational::one();
        rows.push((neg, -Rational::from_integer(lo.clone())));
    }

    // residue representatives in lexicographic order
    let mut rep = vec![BigInt::zero(); f];
    loop {
        let image = point_at(c0, t_mat, &rep);
        if !vec_is_integer(&image) {
            // fractional coset: substitute q = rep + basis * y
            let mut sub_rows: Vec<(RatVector, Rational)> = Vec::new();
            for (coeffs, rhs) in &rows {
                let mut new_coeffs = vec![Rational::zero(); f];
                let mut offset = Rational::zero();
                for (j, c) in coeffs.iter().enumerate() {
                    offset += c * Rational::from_integer(rep[j].clone());
                    for (y, slot) in new_coeffs.iter_mut().enumerate() {
                        *slot = &*slot + c * basis.at(j, y);
                    }
                }
                sub_rows.push((new_coeffs, rhs - offset));
            }
            let mut budget = INTEGER_POINT_NODE_BUDGET;
            if let Some(y) = first_integer_point(&sub_rows, f, &mut budget)? {
                let mut q = rep.clone();
                for (j, slot) in q.iter_mut().enumerate() {
                    for (c, yv) in y.iter().enumerate() {
                        *slot += basis.at(j, c).numer() * yv;
                    }
                }
                let v = point_at(c0, t_mat, &q);
                debug_assert!(!vec_is_integer(&v));
                debug_assert!(p.contains(&v));
                return Ok(Some((q, v)));
            }
        }
        // next representative below the staircase diagonal
        let mut pos = f;
        loop {
            if pos == 0 {
                return Ok(None);
            }
            pos -= 1;
            rep[pos] += 1;
            if rep[pos] < diag[pos] {
                break;
            }
            rep[pos] = BigInt::zero();
        }
    }
}

/// First integer point of `{y : coeffs.y <= rhs}` (assumed bounded), by
/// recursive coordinate slicing, lexicographically smallest first.
fn first_integer_point(
    rows: &[(RatVector, Rational)],
    dim: usize,
    budget: &mut usize,
) -> Result<Option<Vec<BigInt>>> {
    if *budget == 0 {
        return Err(Error::SearchBudgetExceeded("integer point search".into()));
    }
    *budget -= 1;
    if dim == 0 {
        let feasible = rows.iter().all(|(_, rhs)| !rhs.is_negative());
        return Ok(if feasible { Some(Vec::new()) } else { None });
    }
    let h = HPolyhedron::new(
        RatMatrix::from_rows(rows.iter().map(|(c, _)| c.clone()).collect()),
        rows.iter().map(|(_, r)| r.clone()).collect(),
    );
    let v = h_to_v(&h);
    if v.is_empty() {
        return Ok(None);
    }
    if !v.is_bounded() {
        return Err(Error::SearchBudgetExceeded("unbounded fixing polytope".into()));
    }
    let (lo, hi) = crate::polyhedra::integer_bounding_range(&v, 0, None);
    let (lo, hi) = (lo.expect("bounded"), hi.expect("bounded"));
    let mut y0 = lo;
    while y0 <= hi {
        let y0_rat = Rational::from_integer(y0.clone());
        let sliced: Vec<(RatVector, Rational)> = rows
            .iter()
            .map(|(c, rhs)| (c[1..].to_vec(), rhs - &c[0] * &y0_rat))
            .collect();
        if let Some(mut rest) = first_integer_point(&sliced, dim - 1, budget)? {
            let mut out = vec![y0];
            out.append(&mut rest);
            return Ok(Some(out));
        }
        y0 += 1;
    }
    Ok(None)
}

/// Per-face acceptance witness: the totally unimodular normalization of
/// the face-defining matrix.
#[derive(Debug, Clone)]
pub struct FaceTuWitness {
    pub face: Face,
    pub tu_fdm: RatMatrix,
    pub tu_rhs: RatVector,
}

/// Refutation: a face whose face-defining matrix has two maximal minors
/// of different nonzero absolute values.
#[derive(Debug, Clone)]
pub struct FaceRefutation {
    pub face: Face,
    pub first: MinorWitness,
    pub second: MinorWitness,
}

#[derive(Debug, Clone)]
pub struct BoxTdiCertificate {
    pub is_box_tdi: bool,
    pub face_witnesses: Vec<FaceTuWitness>,
    pub refutation: Option<FaceRefutation>,
}

/// Is `P` box-TDI (equivalently, principally box-integer)? Every face
/// must carry an equimodular face-defining matrix. Per face the cheaper
/// of two equivalent tests runs: equimodularity of the face-defining
/// matrix, or transpose-equimodularity of a lineality-space basis.
pub fn is_box_tdi(p: &HPolyhedron) -> Result<BoxTdiCertificate> {
    is_box_tdi_opts(p, false)
}

/// The same decision under its other name.
pub fn is_principally_box_integer(p: &HPolyhedron) -> Result<BoxTdiCertificate> {
    is_box_tdi(p)
}

/// `cross_check` additionally runs both per-face tests plus an explicit
/// TU verification of every returned witness, erroring on any mismatch.
pub fn is_box_tdi_opts(p: &HPolyhedron, cross_check: bool) -> Result<BoxTdiCertificate> {
    let lattice = face_lattice(p)?;
    let n = p.dim();
    let mut witnesses = Vec::new();
    for face in &lattice.faces {
        let k = face.fdm.rows();
        let em = if k == 0 {
            true
        } else if cross_check {
            let primal = is_equimodular(&face.fdm, EquimodularRoute::DEFAULT)?.is_equimodular;
            let basis = lin_space_basis(p, face);
            // a point face has an empty lineality basis and a
            // nonsingular square face-defining matrix: trivially fine
            let dual = basis.cols() == 0
                || is_equimodular(&basis.transpose(), EquimodularRoute::DEFAULT)?.is_equimodular;
            if primal != dual {
                return Err(Error::WitnessValidationFailed(format!(
                    "face {:?}: primal equimodularity {primal} vs lineality-basis {dual}",
                    face.tight_rows
                )));
            }
            primal
        } else if k <= n - k {
            is_equimodular(&face.fdm, EquimodularRoute::DEFAULT)?.is_equimodular
        } else {
            let basis = lin_space_basis(p, face);
            is_equimodular(&basis.transpose(), EquimodularRoute::DEFAULT)?.is_equimodular
        };
        if !em {
            let refuted = is_equimodular(&face.fdm, EquimodularRoute::ExhaustiveDets)?;
            let (first, second) = refuted
                .refutation
                .ok_or_else(|| Error::WitnessValidationFailed("refutation missing".into()))?;
            return Ok(BoxTdiCertificate {
                is_box_tdi: false,
                face_witnesses: Vec::new(),
                refutation: Some(FaceRefutation { face: face.clone(), first, second }),
            });
        }
        let (tu_fdm, tu_rhs) = tu_normalization(&face.fdm, &face.fdm_rhs)?;
        if cross_check && !is_totally_unimodular(&tu_fdm).is_tu {
            return Err(Error::WitnessValidationFailed(format!(
                "face {:?}: normalized face-defining matrix is not TU",
                face.tight_rows
            )));
        }
        witnesses.push(FaceTuWitness { face: face.clone(), tu_fdm, tu_rhs });
    }
    Ok(BoxTdiCertificate { is_box_tdi: true, face_witnesses: witnesses, refutation: None })
}

/// `D^-1 [M | d]` for the first nonsingular maximal submatrix `D` of an
/// equimodular `M`; the result is totally unimodular and defines the
/// same affine hull.
fn tu_normalization(m: &RatMatrix, rhs: &RatVector) -> Result<(RatMatrix, RatVector)> {
    let k = m.rows();
    if k == 0 {
        return Ok((m.clone(), rhs.clone()));
    }
    let cols = crate::linalg::maximal_minors(m)?
        .find(|(_, d)| !d.is_zero())
        .map(|(cols, _)| cols)
        .expect("full row rank");
    let d = m.select_cols(&cols);
    let rhs_col = RatMatrix::from_rows(rhs.iter().map(|x| vec![x.clone()]).collect::<Vec<_>>());
    let aug = d.hstack(m).hstack(&rhs_col);
    let (red, _) = rref(&aug);
    let norm = red.select_cols(&(k..k + m.cols()).collect::<Vec<_>>());
    let norm_rhs: RatVector = (0..k).map(|r| red.at(r, k + m.cols()).clone()).collect();
    Ok((norm, norm_rhs))
}

#[derive(Debug, Clone)]
pub struct FullyBoxIntegerVerdict {
    pub is_fully_box_integer: bool,
    pub box_tdi: BoxTdiCertificate,
    pub is_integer: bool,
}

/// `P` is fully box-integer iff it is principally box-integer and
/// integer.
pub fn is_fully_box_integer(p: &HPolyhedron) -> Result<FullyBoxIntegerVerdict> {
    let box_tdi = is_box_tdi(p)?;
    let integer = crate::polyhedra::is_integer(p)?;
    Ok(FullyBoxIntegerVerdict {
        is_fully_box_integer: box_tdi.is_box_tdi && integer,
        box_tdi,
        is_integer: integer,
    })
}

/// A failing face of a cone: some linearly independent generator subset
/// spanning the face is not transpose-equimodular.
#[derive(Debug, Clone)]
pub struct ConeFailure {
    pub tight_rows: Vec<usize>,
    pub generators: Vec<RatVector>,
    pub first: MinorWitness,
    pub second: MinorWitness,
}

#[derive(Debug, Clone)]
pub struct ConeBoxVerdict {
    pub is_box_integer: bool,
    pub failure: Option<ConeFailure>,
}

/// Exact box-integrality for cones `{x : Ax <= 0}` by the generator-side
/// criterion: for every face, every linearly independent generator
/// subset spanning it must form (transposed) an equimodular matrix.
pub fn cone_box_integer(c: &HPolyhedron) -> Result<ConeBoxVerdict> {
    if !c.is_cone() {
        return Err(Error::NonZeroRhs);
    }
    let lattice = face_lattice(c)?;
    for face in &lattice.faces {
        if face.dim == 0 {
            continue; // the apex spans nothing
        }
        let mut gens: Vec<RatVector> =
            face.ray_ids.iter().map(|&k| lattice.vrep.rays[k].clone()).collect();
        gens.extend(lattice.vrep.lineality.iter().cloned());
        for subset in (0..gens.len()).combinations(face.dim) {
            let rows: Vec<RatVector> = subset.iter().map(|&i| gens[i].clone()).collect();
            let m = RatMatrix::from_rows(rows.clone());
            if rank(&m) != face.dim {
                continue;
            }
            let verdict = is_equimodular(&m, EquimodularRoute::DEFAULT)?;
            if !verdict.is_equimodular {
                let refuted = is_equimodular(&m, EquimodularRoute::ExhaustiveDets)?;
                let (first, second) = refuted.refutation.expect("nonequimodular refutes");
                return Ok(ConeBoxVerdict {
                    is_box_integer: false,
                    failure: Some(ConeFailure {
                        tight_rows: face.tight_rows.clone(),
                        generators: rows,
                        first,
                        second,
                    }),
                });
            }
        }
    }
    Ok(ConeBoxVerdict { is_box_integer: true, failure: None })
}

#[derive(Debug, Clone)]
pub struct ConePolarityReport {
    pub cone: ConeBoxVerdict,
    pub polar: ConeBoxVerdict,
    pub agree: bool,
}

/// Box-integrality transfers between a cone and its polar; the report
/// carries both verdicts and their (always expected) agreement.
pub fn cone_polarity_check(c: &HPolyhedron) -> Result<ConePolarityReport> {
    let cone = cone_box_integer(c)?;
    let polar_cone = polar(c)?;
    let polar_verdict = cone_box_integer(&polar_cone)?;
    let agree = cone.is_box_integer == polar_verdict.is_box_integer;
    Ok(ConePolarityReport { cone, polar: polar_verdict, agree })
}

#[derive(Debug, Clone)]
pub struct BoxPropertyVerdict {
    pub has_box_property: bool,
    /// True when a "true" verdict is only as good as the sampled points.
    pub sample_limited: bool,
    /// A cone point whose surrounding unit box contains no integer cone
    /// point, when refuted.
    pub witness: Option<RatVector>,
}

/// Cook's box property, sampled: every tested cone point must have an
/// integer cone point within its unit box. Candidates combine a
/// targeted construction from the cone's affine hull (complete for
/// failures explained by the hull), fractions of small integer
/// generator combinations, and seeded random combinations. "False" is
/// exact, "true" is sample-limited.
pub fn cone_box_property(
    c: &HPolyhedron,
    samples: usize,
    radius: i64,
) -> Result<BoxPropertyVerdict> {
    if !c.is_cone() {
        return Err(Error::NonZeroRhs);
    }
    let vrep = h_to_v(c);
    let n = c.dim();

    // targeted candidate from a nonequimodular affine hull
    if let Some(candidate) = hull_based_candidate(c, &vrep)? {
        if unit_box_integer_point(c, &candidate).is_none() {
            return Ok(BoxPropertyVerdict {
                has_box_property: false,
                sample_limited: false,
                witness: Some(candidate),
            });
        }
        return Err(Error::WitnessValidationFailed(
            "hull-based candidate unexpectedly had an integer neighbor".into(),
        ));
    }

    let mut dirs: Vec<RatVector> = vrep.rays.clone();
    for l in &vrep.lineality {
        dirs.push(l.clone());
        dirs.push(crate::matrix::vec_scale(l, &rat_int(-1)));
    }
    if dirs.is_empty() {
        return Ok(BoxPropertyVerdict {
            has_box_property: true,
            sample_limited: false,
            witness: None,
        });
    }

    let mut candidates: Vec<RatVector> = Vec::new();
    // fractions of small integer combinations
    let combo_dirs = dirs.len().min(6);
    let mut coeffs = vec![0u32; combo_dirs];
    loop {
        if coeffs.iter().any(|&cf| cf > 0) {
            let mut z = vec![Rational::zero(); n];
            for (j, &cf) in coeffs.iter().enumerate() {
                if cf > 0 {
                    z = vec_add(&z, &crate::matrix::vec_scale(&dirs[j], &rat_int(cf as i64)));
                }
            }
            for den in 2i64..=4 {
                candidates.push(z.iter().map(|x| x / rat_int(den)).collect());
            }
        }
        let mut pos = combo_dirs;
        let mut done = true;
        while pos > 0 {
            pos -= 1;
            coeffs[pos] += 1;
            if coeffs[pos] <= 2 {
                done = false;
                break;
            }
            coeffs[pos] = 0;
        }
        if done {
            break;
        }
    }
    // seeded random combinations
    let mut rng = ChaCha8Rng::seed_from_u64(0xb0c5);
    for _ in 0..samples {
        let mut z = vec![Rational::zero(); n];
        for d in &dirs {
            let num = rng.gen_range(0..=radius.max(1));
            let den = rng.gen_range(1..=4);
            if num > 0 {
                z = vec_add(&z, &crate::matrix::vec_scale(d, &crate::rat::rat(num, den)));
            }
        }
        candidates.push(z);
    }

    let radius_rat = rat_int(radius.max(1));
    for cand in candidates {
        if vec_is_integer(&cand) || !c.contains(&cand) {
            continue;
        }
        if cand.iter().any(|x| x.abs() > radius_rat) {
            continue;
        }
        if unit_box_integer_point(c, &cand).is_none() {
            return Ok(BoxPropertyVerdict {
                has_box_property: false,
                sample_limited: false,
                witness: Some(cand),
            });
        }
    }
    Ok(BoxPropertyVerdict { has_box_property: true, sample_limited: true, witness: None })
}

/// When the cone's affine hull has a nonequimodular defining matrix,
/// translate one of its fractional singleton points into the cone by an
/// integer vector; the unit box around the result cannot contain an
/// integer cone point.
fn hull_based_candidate(c: &HPolyhedron, vrep: &VPolyhedron) -> Result<Option<RatVector>> {
    let implicit = crate::polyhedra::implicit_equality_rows(c, vrep);
    if implicit.is_empty() {
        return Ok(None);
    }
    let basis_rows = crate::linalg::lex_row_basis(&c.a, &implicit);
    let m = c.a.select_rows(&basis_rows);
    if m.rows() == 0 || is_equimodular(&m, EquimodularRoute::DEFAULT)?.is_equimodular {
        return Ok(None);
    }
    let xbar = fractional_kernel_point(&m)?;
    // integer direction into the cone: sum of the primitive integer rays
    let mut w = vec![Rational::zero(); c.dim()];
    for r in &vrep.rays {
        w = vec_add(&w, r);
    }
    let mut shift = BigInt::one();
    for _ in 0..WITNESS_DILATION_STEPS {
        let candidate = vec_add(
            &xbar,
            &crate::matrix::vec_scale(&w, &Rational::from_integer(shift.clone())),
        );
        if c.contains(&candidate) {
            return Ok(Some(candidate));
        }
        shift *= 2;
    }
    Err(Error::SearchBudgetExceeded("hull-based candidate translation".into()))
}

/// A fractional point of `{x : Mx = 0}` with integer entries outside a
/// column basis: solve `M x = 0`, `x_j = -1`, zero elsewhere, for the
/// first basis/column pair making the solution fractional.
fn fractional_kernel_point(m: &RatMatrix) -> Result<RatVector> {
    let k = m.rows();
    let n = m.cols();
    for cols in (0..n).combinations(k) {
        let d = m.select_cols(&cols);
        if crate::linalg::det(&d)?.is_zero() {
            continue;
        }
        for j in 0..n {
            if cols.contains(&j) {
                continue;
            }
            let target = m.col_vec(j);
            let sol = crate::linalg::solve(&d, &target)?.expect("nonsingular");
            if vec_is_integer(&sol.particular) {
                continue;
            }
            let mut x = vec![Rational::zero(); n];
            for (slot, &col) in cols.iter().enumerate() {
                x[col] = sol.particular[slot].clone();
            }
            x[j] = -Rational::one();
            debug_assert!(vec_is_zero(&m.mat_vec(&x)?));
            return Ok(x);
        }
    }
    Err(Error::WitnessValidationFailed(
        "nonequimodular matrix without fractional kernel point".into(),
    ))
}

/// An integer point of the cone within the unit box `[floor c, ceil c]`,
/// if one exists.
fn unit_box_integer_point(c: &HPolyhedron, point: &[Rational]) -> Option<Vec<BigInt>> {
    let choices: Vec<Vec<BigInt>> = point
        .iter()
        .map(|x| {
            let f = floor_int(x);
            let cl = ceil_int(x);
            if f == cl {
                vec![f]
            } else {
                vec![f, cl]
            }
        })
        .collect();
    let mut idx = vec![0usize; point.len()];
    loop {
        let z: Vec<BigInt> = idx.iter().zip(&choices).map(|(&i, ch)| ch[i].clone()).collect();
        let zr: RatVector = z.iter().map(|v| Rational::from_integer(v.clone())).collect();
        if c.contains(&zr) {
            return Some(z);
        }
        let mut pos = point.len();
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Observed dilation behavior.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Trichotomy {
    /// Every integer dilation is box-integer.
    PrincipallyBoxInteger,
    /// No dilation is box-integer.
    NoBoxIntegerDilation,
    /// Box-integer exactly for the first `q` multiples of `d`.
    Cutoff { q: u32, observed_only: bool },
}

#[derive(Debug, Clone)]
pub struct DilationProfile {
    /// Least dilation making the polyhedron integer.
    pub d: BigInt,
    /// `(k, box-integer?)` for `k = d, 2d, ..., k_max * d`.
    pub checks: Vec<(BigInt, bool)>,
    pub trichotomy: Trichotomy,
    pub box_tdi: bool,
    /// No `true` after the first `false` (must always hold).
    pub monotone_ok: bool,
    pub window_limited: bool,
}

/// Classifies the dilation behavior of `P` over `k = d, 2d, ..., kmax*d`.
pub fn dilation_profile(p: &HPolyhedron, k_max: u32) -> Result<DilationProfile> {
    let d = crate::polyhedra::minimal_integer_dilation(p)?;
    let mut checks = Vec::new();
    let mut window_limited = false;
    for j in 1..=k_max.max(1) {
        let k = &d * BigInt::from(j);
        let dilated = dilate(p, &Rational::from_integer(k.clone()))?;
        let verdict = is_box_integer(&dilated, None)?;
        window_limited |= verdict.window_limited;
        checks.push((k, verdict.is_box_integer));
    }
    let mut monotone_ok = true;
    let mut seen_false = false;
    for (_, ok) in &checks {
        if *ok && seen_false {
            monotone_ok = false;
        }
        seen_false |= !ok;
    }
    let box_tdi = is_box_tdi(p)?.is_box_tdi;
    let all_true = checks.iter().all(|(_, ok)| *ok);
    let any_true = checks.iter().any(|(_, ok)| *ok);
    let trichotomy = if box_tdi {
        Trichotomy::PrincipallyBoxInteger
    } else if !any_true {
        Trichotomy::NoBoxIntegerDilation
    } else {
        let q = checks.iter().take_while(|(_, ok)| *ok).count() as u32;
        Trichotomy::Cutoff { q, observed_only: all_true }
    };
    Ok(DilationProfile { d, checks, trichotomy, box_tdi, monotone_ok, window_limited })
}

/// Turns a box-TDI refutation into a concrete fractional vertex: a
/// dilation `kP` that is integer, and an integer box whose intersection
/// with `kP` has the returned fractional point as a vertex. The witness
/// re-validates itself through an independent vertex enumeration.
pub fn extract_fractional_witness(
    p: &HPolyhedron,
    refutation: &FaceRefutation,
) -> Result<FractionalVertex> {
    let face = &refutation.face;
    let m = &face.fdm;
    let n = p.dim();

    // fractional kernel direction with integer entries off the basis;
    // the coordinates to pin are exactly the integer ones
    let xbar = fractional_kernel_point(m)?;
    let pinned: Vec<usize> = (0..n).filter(|&j| xbar[j].is_integer()).collect();

    // rational relative-interior point of the face
    let lattice = face_lattice(p)?;
    let face_again = lattice
        .faces
        .iter()
        .find(|f| f.tight_rows == face.tight_rows)
        .ok_or_else(|| Error::WitnessValidationFailed("refuting face not found".into()))?;
    let fv = face_generators(&lattice, face_again);
    let count = Rational::from_integer(BigInt::from(fv.vertices.len()));
    let mut x0 = vec![Rational::zero(); n];
    for v in &fv.vertices {
        x0 = vec_add(&x0, v);
    }
    x0 = x0.iter().map(|x| x / &count).collect();
    for r in &fv.rays {
        x0 = vec_add(&x0, r);
    }

    let d = crate::polyhedra::minimal_integer_dilation(p)?;
    let k0 = lcm_big(&d, &denominator_lcm(x0.iter()));
    let mut step = BigInt::one();
    for _ in 0..WITNESS_DILATION_STEPS {
        let k = &k0 * &step;
        let k_rat = Rational::from_integer(k.clone());
        let z: RatVector = (0..n).map(|i| &x0[i] * &k_rat + &xbar[i]).collect();
        let inside = (0..p.rows()).all(|i| dot(p.a.row(i), &z) <= &p.b[i] * &k_rat);
        if inside {
            let mut bounds = IntBox::free(n);
            for &j in &pinned {
                if !z[j].is_integer() {
                    return Err(Error::WitnessValidationFailed(
                        "pinned coordinate not integer".into(),
                    ));
                }
                bounds.fix(j, z[j].to_integer());
            }
            // self-validation through an independent vertex enumeration
            let dilated = dilate(p, &k_rat)?;
            let boxed = box_intersect(&dilated, &bounds)?;
            let vrep = h_to_v(&boxed);
            if !vrep.vertices.contains(&z) || vec_is_integer(&z) {
                return Err(Error::WitnessValidationFailed(format!(
                    "constructed point is not a fractional vertex at k = {k}"
                )));
            }
            return Ok(FractionalVertex { k, bounds, vertex: z });
        }
        step *= 2;
    }
    Err(Error::SearchBudgetExceeded(format!(
        "no dilation within {WITNESS_DILATION_STEPS} doublings of {k0} admits the witness"
    )))
}
