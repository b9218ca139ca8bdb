//! Exact polyhedra in inequality and generator form, conversions between
//! the two, faces with face-defining matrices, cones, polarity, and the
//! dilation/translation/dominant toolbox.

mod dd;
mod faces;

pub use faces::{
    affine_hulls_equal, enumerate_faces, face_lattice, face_witness_points,
    find_face_by_affine_hull, implicit_equality_rows, Face, FaceLattice,
};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::linalg::{kernel_basis, lattice_coordinates, lattice_member, rref};
use crate::matrix::{dot, primitive_integer_vector, vec_is_zero, RatMatrix, RatVector};
use crate::rat::{denominator_lcm, lcm_big, Bound, IntBox, Rational};
use crate::{Error, Result};

/// `{x : Ax <= b}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HPolyhedron {
    pub a: RatMatrix,
    pub b: RatVector,
}

impl HPolyhedron {
    pub fn new(a: RatMatrix, b: RatVector) -> HPolyhedron {
        assert_eq!(a.rows(), b.len(), "row count must match rhs length");
        HPolyhedron { a, b }
    }

    /// Ambient dimension.
    pub fn dim(&self) -> usize {
        self.a.cols()
    }

    pub fn rows(&self) -> usize {
        self.a.rows()
    }

    /// The whole space as an H-polyhedron.
    pub fn whole_space(n: usize) -> HPolyhedron {
        HPolyhedron::new(RatMatrix::empty(n), Vec::new())
    }

    /// A canonical infeasible system `0.x <= -1`.
    pub fn canonical_empty(n: usize) -> HPolyhedron {
        HPolyhedron::new(RatMatrix::zero(1, n), vec![-Rational::one()])
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        (0..self.rows()).all(|i| dot(self.a.row(i), x) <= self.b[i])
    }

    /// Is `d` in the recession cone `{x : Ax <= 0}`?
    pub fn contains_direction(&self, d: &[Rational]) -> bool {
        (0..self.rows()).all(|i| !dot(self.a.row(i), d).is_positive())
    }

    pub fn is_cone(&self) -> bool {
        self.b.iter().all(|x| x.is_zero())
    }

    pub fn is_empty(&self) -> bool {
        h_to_v(self).is_empty()
    }
}

/// Generator form: `conv(vertices) + cone(rays) + span(lineality)`.
///
/// Canonicalized by [`h_to_v`]: rays and lineality are primitive integer
/// vectors, vertices and rays are reduced modulo the lineality space,
/// everything is sorted. A polyhedron is empty iff `vertices` is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VPolyhedron {
    pub dim: usize,
    pub vertices: Vec<RatVector>,
    pub rays: Vec<RatVector>,
    pub lineality: Vec<RatVector>,
}

impl VPolyhedron {
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn polytope(dim: usize, vertices: Vec<RatVector>) -> VPolyhedron {
        VPolyhedron { dim, vertices, rays: Vec::new(), lineality: Vec::new() }
    }

    pub fn cone(dim: usize, rays: Vec<RatVector>) -> VPolyhedron {
        VPolyhedron {
            dim,
            vertices: vec![vec![Rational::zero(); dim]],
            rays,
            lineality: Vec::new(),
        }
    }

    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }
}

/// Exact conversion from inequality form to generator form.
///
/// Works on the homogenization `{(x, t) : Ax - tb <= 0, -t <= 0}`:
/// generators with `t > 0` scale to vertices (one per minimal face),
/// generators with `t = 0` are recession rays, and the homogenized
/// lineality (always `t = 0`) is the lineality of `P`.
pub fn h_to_v(p: &HPolyhedron) -> VPolyhedron {
    let n = p.dim();
    let mut rows: Vec<RatVector> = Vec::with_capacity(p.rows() + 1);
    for i in 0..p.rows() {
        let mut row = p.a.row_vec(i);
        row.push(-p.b[i].clone());
        rows.push(row);
    }
    let mut t_row = vec![Rational::zero(); n];
    t_row.push(-Rational::one());
    rows.push(t_row);

    let gens = dd::cone_generators(&rows);

    let mut lineality: Vec<RatVector> = gens
        .lineality
        .iter()
        .map(|v| dd::bigints_to_rationals(&v[..n]))
        .collect();
    lineality = canonical_lineality_basis(lineality, n);

    let mut vertices: Vec<RatVector> = Vec::new();
    let mut rays: Vec<RatVector> = Vec::new();
    for g in &gens.rays {
        let t = &g[n];
        if t.is_zero() {
            let r = dd::bigints_to_rationals(&g[..n]);
            let r = reduce_modulo_span(&r, &lineality);
            if !vec_is_zero(&r) {
                let prim = primitive_integer_vector(&r);
                rays.push(dd::bigints_to_rationals(&prim));
            }
        } else {
            let tq = Rational::from_integer(t.clone());
            let v: RatVector = g[..n].iter().map(|x| Rational::from_integer(x.clone()) / &tq).collect();
            vertices.push(reduce_modulo_span(&v, &lineality));
        }
    }
    vertices.sort();
    vertices.dedup();
    rays.sort();
    rays.dedup();
    VPolyhedron { dim: n, vertices, rays, lineality }
}

/// Exact conversion from generator form to inequality form, by polarity:
/// the homogenized generators are the constraint rows of the polar cone,
/// whose generators in turn are the facets of the input.
pub fn v_to_h(q: &VPolyhedron) -> HPolyhedron {
    let n = q.dim;
    if q.is_empty() {
        return HPolyhedron::canonical_empty(n);
    }
    let mut gen_rows: Vec<RatVector> = Vec::new();
    for v in &q.vertices {
        let mut g = v.clone();
        g.push(Rational::one());
        gen_rows.push(g);
    }
    for r in &q.rays {
        let mut g = r.clone();
        g.push(Rational::zero());
        gen_rows.push(g);
    }
    for l in &q.lineality {
        for sign in [1i64, -1] {
            let mut g = crate::matrix::vec_scale(l, &crate::rat::rat_int(sign));
            g.push(Rational::zero());
            gen_rows.push(g);
        }
    }
    let polar_gens = dd::cone_generators(&gen_rows);

    let mut ineq_rows: Vec<Vec<BigInt>> = polar_gens.rays;
    for l in polar_gens.lineality {
        let neg: Vec<BigInt> = l.iter().map(|x| -x.clone()).collect();
        ineq_rows.push(l);
        ineq_rows.push(neg);
    }

    let mut a_rows: Vec<RatVector> = Vec::new();
    let mut b: RatVector = Vec::new();
    let mut seen: Vec<Vec<BigInt>> = Vec::new();
    ineq_rows.sort();
    for row in ineq_rows {
        let coeffs = &row[..n];
        let rhs = -Rational::from_integer(row[n].clone());
        if coeffs.iter().all(|x| x.is_zero()) {
            // 0.x <= rhs with rhs >= 0 is trivial; rhs < 0 cannot arise
            // from a nonempty generator set
            debug_assert!(!rhs.is_negative());
            continue;
        }
        if seen.contains(&row) {
            continue;
        }
        seen.push(row.clone());
        a_rows.push(dd::bigints_to_rationals(coeffs));
        b.push(rhs);
    }
    if a_rows.is_empty() {
        return HPolyhedron::whole_space(n);
    }
    HPolyhedron::new(RatMatrix::from_rows(a_rows), b)
}

/// Reduced, sorted, primitive-integer basis of the span of `vecs`.
fn canonical_lineality_basis(vecs: Vec<RatVector>, n: usize) -> Vec<RatVector> {
    if vecs.is_empty() {
        return vecs;
    }
    let m = RatMatrix::from_rows(vecs);
    let (red, pivots) = rref(&m);
    let mut out: Vec<RatVector> = Vec::new();
    for r in 0..pivots.len() {
        let row = red.row_vec(r);
        let prim = primitive_integer_vector(&row);
        out.push(dd::bigints_to_rationals(&prim));
    }
    out.sort();
    let _ = n;
    out
}

/// Subtracts from `v` its projection onto the span of `basis` (exact
/// Gram-style elimination), yielding the canonical coset representative.
fn reduce_modulo_span(v: &[Rational], basis: &[RatVector]) -> RatVector {
    if basis.is_empty() {
        return v.to_vec();
    }
    // orthogonalize the basis on the fly (desk scale)
    let mut ortho: Vec<RatVector> = Vec::new();
    for b in basis {
        let mut w = b.clone();
        for o in &ortho {
            let num = dot(&w, o);
            let den = dot(o, o);
            let f = num / den;
            w = crate::matrix::vec_sub(&w, &crate::matrix::vec_scale(o, &f));
        }
        if !vec_is_zero(&w) {
            ortho.push(w);
        }
    }
    let mut out = v.to_vec();
    for o in &ortho {
        let f = dot(&out, o) / dot(o, o);
        out = crate::matrix::vec_sub(&out, &crate::matrix::vec_scale(o, &f));
    }
    out
}

/// Mutual-inclusion test of point sets described by two H-polyhedra.
pub fn same_point_set(p: &HPolyhedron, q: &HPolyhedron) -> bool {
    v_included(&h_to_v(p), q) && v_included(&h_to_v(q), p)
}

/// Every generator of `v` satisfies `q`: vertices as points, rays as
/// recession directions, lineality in both directions.
pub fn v_included(v: &VPolyhedron, q: &HPolyhedron) -> bool {
    if v.is_empty() {
        return true;
    }
    v.vertices.iter().all(|x| q.contains(x))
        && v.rays.iter().all(|r| q.contains_direction(r))
        && v.lineality.iter().all(|l| {
            q.contains_direction(l)
                && q.contains_direction(&crate::matrix::vec_scale(l, &crate::rat::rat_int(-1)))
        })
}

/// `{x : A_F x <= b_F}` over the face's tight rows.
pub fn tangent_cone(p: &HPolyhedron, face: &Face) -> HPolyhedron {
    HPolyhedron::new(
        p.a.select_rows(&face.tight_rows),
        face.tight_rows.iter().map(|&i| p.b[i].clone()).collect(),
    )
}

/// The cone generated by the tight rows (columns of `A_F` transposed),
/// in raw generator form.
pub fn normal_cone(p: &HPolyhedron, face: &Face) -> VPolyhedron {
    VPolyhedron::cone(
        p.dim(),
        face.tight_rows.iter().map(|&i| p.a.row_vec(i)).collect(),
    )
}

/// Column basis of `lin(F) = {x : A_F x = 0}`.
pub fn lin_space_basis(p: &HPolyhedron, face: &Face) -> RatMatrix {
    let basis = kernel_basis(&p.a.select_rows(&face.tight_rows));
    // primitive integer columns, for reproducible output
    let mut cols: Vec<RatVector> = (0..basis.cols())
        .map(|c| dd::bigints_to_rationals(&primitive_integer_vector(&basis.col_vec(c))))
        .collect();
    cols.sort();
    if cols.is_empty() {
        return RatMatrix::zero(p.dim(), 0);
    }
    RatMatrix::from_rows(cols).transpose()
}

/// Polar of the cone `{x : Ax <= 0}`: the cone generated by the rows of
/// `A`, returned in inequality form.
pub fn polar(c: &HPolyhedron) -> Result<HPolyhedron> {
    if !c.is_cone() {
        return Err(Error::NonZeroRhs);
    }
    let rows: Vec<RatVector> = (0..c.rows()).map(|i| c.a.row_vec(i)).collect();
    Ok(v_to_h(&VPolyhedron::cone(c.dim(), rows)))
}

/// `kP = {x : Ax <= k b}` for rational `k > 0`.
pub fn dilate(p: &HPolyhedron, k: &Rational) -> Result<HPolyhedron> {
    if !k.is_positive() {
        return Err(Error::NonPositiveDilation);
    }
    Ok(HPolyhedron::new(p.a.clone(), p.b.iter().map(|x| x * k).collect()))
}

/// `P + t = {x : Ax <= b + At}`.
pub fn translate(p: &HPolyhedron, t: &[Rational]) -> Result<HPolyhedron> {
    let at = p.a.mat_vec(t)?;
    Ok(HPolyhedron::new(p.a.clone(), crate::matrix::vec_add(&p.b, &at)))
}

/// `dom(P) = P + R^n_+`, via appending the unit rays in generator form.
pub fn dominant(p: &HPolyhedron) -> HPolyhedron {
    let mut v = h_to_v(p);
    if v.is_empty() {
        return HPolyhedron::canonical_empty(p.dim());
    }
    for i in 0..p.dim() {
        let mut e = vec![Rational::zero(); p.dim()];
        e[i] = Rational::one();
        v.rays.push(e);
    }
    v_to_h(&v)
}

/// `P intersect {l <= x <= u}`, appending rows only for finite bounds.
pub fn box_intersect(p: &HPolyhedron, bx: &IntBox) -> Result<HPolyhedron> {
    let n = p.dim();
    assert_eq!(bx.dim(), n, "box dimension must match");
    for i in 0..n {
        if let (Bound::Finite(l), Bound::Finite(u)) = (&bx.lower[i], &bx.upper[i]) {
            if l > u {
                return Err(Error::CrossedBounds { index: i });
            }
        }
    }
    let mut rows: Vec<RatVector> = (0..p.rows()).map(|i| p.a.row_vec(i)).collect();
    let mut b = p.b.clone();
    for i in 0..n {
        if let Bound::Finite(u) = &bx.upper[i] {
            let mut row = vec![Rational::zero(); n];
            row[i] = Rational::one();
            rows.push(row);
            b.push(Rational::from_integer(u.clone()));
        }
        if let Bound::Finite(l) = &bx.lower[i] {
            let mut row = vec![Rational::zero(); n];
            row[i] = -Rational::one();
            rows.push(row);
            b.push(Rational::from_integer(-l.clone()));
        }
    }
    Ok(HPolyhedron::new(RatMatrix::from_rows(rows), b))
}

/// Tight rows of `P` at a point.
pub fn tight_rows_at(p: &HPolyhedron, x: &[Rational]) -> Vec<usize> {
    (0..p.rows()).filter(|&i| dot(p.a.row(i), x) == p.b[i]).collect()
}

/// Is every minimal face's affine hull integer-solvable? Each vertex
/// generator of the V-form represents one minimal face, whose affine
/// hull is the tight-row system at that generator; an integer point
/// exists there iff the right-hand side is an integer combination of
/// the tight columns.
pub fn is_integer(p: &HPolyhedron) -> Result<bool> {
    let v = h_to_v(p);
    if v.is_empty() {
        return Err(Error::EmptyPolyhedron);
    }
    for x in &v.vertices {
        if crate::matrix::vec_is_integer(x) {
            continue;
        }
        let tight = tight_rows_at(p, x);
        let a_f = p.a.select_rows(&tight);
        let b_f: RatVector = tight.iter().map(|&i| p.b[i].clone()).collect();
        if !lattice_member(&a_f, &b_f)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The least positive integer `d` such that `kP` is integer exactly when
/// `d` divides `k`: per minimal face, the least dilation making the
/// tight system integer-solvable (read off the denominators of the
/// staircase coordinates of the right-hand side), combined by lcm.
pub fn minimal_integer_dilation(p: &HPolyhedron) -> Result<BigInt> {
    let v = h_to_v(p);
    if v.is_empty() {
        return Err(Error::EmptyPolyhedron);
    }
    let mut d = BigInt::one();
    for x in &v.vertices {
        let tight = tight_rows_at(p, x);
        let a_f = p.a.select_rows(&tight);
        let b_f: RatVector = tight.iter().map(|&i| p.b[i].clone()).collect();
        let coords = lattice_coordinates(&a_f, &b_f)?
            .expect("tight system is consistent on a nonempty face");
        let face_d = denominator_lcm(coords.iter());
        d = lcm_big(&d, &face_d);
    }
    Ok(d)
}

/// `P_+- = {(y, z) >= 0 : A(y - z) <= b}` in dimension `2n`.
pub fn pm_lift(p: &HPolyhedron) -> HPolyhedron {
    let n = p.dim();
    let m = p.rows();
    let mut rows: Vec<RatVector> = Vec::with_capacity(m + 2 * n);
    let mut b = Vec::with_capacity(m + 2 * n);
    for i in 0..m {
        let mut row = p.a.row_vec(i);
        row.extend(p.a.row(i).iter().map(|x| -x.clone()));
        rows.push(row);
        b.push(p.b[i].clone());
    }
    for i in 0..2 * n {
        let mut row = vec![Rational::zero(); 2 * n];
        row[i] = -Rational::one();
        rows.push(row);
        b.push(Rational::zero());
    }
    HPolyhedron::new(RatMatrix::from_rows(rows), b)
}

/// Integer bounding box of the vertex hull, widened by `radius` in every
/// coordinate direction left unbounded by a ray or lineality vector.
/// `None` marks a genuinely unbounded side only when `radius` is `None`.
pub fn integer_bounding_range(
    v: &VPolyhedron,
    coord: usize,
    radius: Option<&BigInt>,
) -> (Option<BigInt>, Option<BigInt>) {
    let mut lo: Option<BigInt> = None;
    let mut hi: Option<BigInt> = None;
    for x in &v.vertices {
        let c = crate::rat::ceil_int(&x[coord]);
        let f = crate::rat::floor_int(&x[coord]);
        lo = Some(match lo {
            None => f.clone().min(c.clone()),
            Some(cur) => cur.min(f.clone()),
        });
        hi = Some(match hi {
            None => c.max(f),
            Some(cur) => cur.max(c),
        });
    }
    let unbounded_below = v.rays.iter().any(|r| r[coord].is_negative())
        || v.lineality.iter().any(|l| !l[coord].is_zero());
    let unbounded_above = v.rays.iter().any(|r| r[coord].is_positive())
        || v.lineality.iter().any(|l| !l[coord].is_zero());
    if unbounded_below {
        lo = match (lo, radius) {
            (Some(cur), Some(r)) => Some(cur - r),
            _ => None,
        };
    }
    if unbounded_above {
        hi = match (hi, radius) {
            (Some(cur), Some(r)) => Some(cur + r),
            _ => None,
        };
    }
    (lo, hi)
}
