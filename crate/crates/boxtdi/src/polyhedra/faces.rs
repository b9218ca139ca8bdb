//! Face enumeration from the generator/row incidence structure.
//!
//! Each nonempty face of `P = {x : Ax <= b}` is identified with the set
//! of generators (vertices and rays of the V-form) lying on it. Those
//! sets are exactly the intersections of the per-row tight-generator
//! sets that still contain a vertex generator, so the face lattice is
//! the closure of the row incidences under intersection. For every face
//! the maximal tight row set, the dimension, and a face-defining matrix
//! (the lexicographically first row basis of the tight rows) are
//! recorded. Exponential in the worst case; intended for desk scale.

use std::collections::HashSet;

use num_traits::Zero;

use crate::linalg::{lex_row_basis, rank, solve};
use crate::matrix::{dot, vec_is_zero, RatMatrix, RatVector};
use crate::{Error, Result};

use super::{h_to_v, HPolyhedron, VPolyhedron};

/// A nonempty face of an H-polyhedron.
#[derive(Debug, Clone)]
pub struct Face {
    /// Maximal set of rows tight on the whole face, ascending.
    pub tight_rows: Vec<usize>,
    pub dim: usize,
    /// Face-defining matrix: full-row-rank row basis of the tight rows,
    /// with `aff(F) = {x : fdm x = fdm_rhs}` and `fdm.rows = n - dim`.
    pub fdm: RatMatrix,
    pub fdm_rhs: RatVector,
    /// Indices into the V-form's vertex and ray lists.
    pub vertex_ids: Vec<usize>,
    pub ray_ids: Vec<usize>,
}

/// The full face list of a polyhedron together with the V-form the
/// incidence was computed against.
#[derive(Debug, Clone)]
pub struct FaceLattice {
    pub vrep: VPolyhedron,
    /// All nonempty faces, sorted by (dim, tight_rows).
    pub faces: Vec<Face>,
}

impl FaceLattice {
    /// Dimension of the lineality space; minimal faces have this dim.
    pub fn lineality_dim(&self) -> usize {
        self.vrep.lineality.len()
    }

    pub fn minimal_faces(&self) -> impl Iterator<Item = &Face> {
        let d = self.lineality_dim();
        self.faces.iter().filter(move |f| f.dim == d)
    }
}

pub fn face_lattice(p: &HPolyhedron) -> Result<FaceLattice> {
    let vrep = h_to_v(p);
    if vrep.is_empty() {
        return Err(Error::EmptyPolyhedron);
    }
    let nv = vrep.vertices.len();
    let nr = vrep.rays.len();
    let gens = nv + nr;
    assert!(gens <= 128, "face enumeration limited to 128 generators");
    let full: u128 = if gens == 128 { !0 } else { (1u128 << gens) - 1 };
    let vertex_mask: u128 = if nv == 128 { !0 } else { (1u128 << nv) - 1 };

    // tight generators per row
    let mut tight: Vec<u128> = Vec::with_capacity(p.rows());
    for i in 0..p.rows() {
        let mut bits: u128 = 0;
        for (k, v) in vrep.vertices.iter().enumerate() {
            if dot(p.a.row(i), v) == p.b[i] {
                bits |= 1 << k;
            }
        }
        for (k, r) in vrep.rays.iter().enumerate() {
            if dot(p.a.row(i), r).is_zero() {
                bits |= 1 << (nv + k);
            }
        }
        tight.push(bits);
    }

    // closure under intersection, keeping only sets with a vertex
    let mut seen: HashSet<u128> = HashSet::new();
    let mut queue: Vec<u128> = vec![full];
    seen.insert(full);
    while let Some(s) = queue.pop() {
        for t in &tight {
            let u = s & t;
            if u & vertex_mask == 0 {
                continue;
            }
            if seen.insert(u) {
                queue.push(u);
            }
        }
    }

    let n = p.dim();
    let mut faces: Vec<Face> = Vec::with_capacity(seen.len());
    for s in seen {
        let rows: Vec<usize> = (0..p.rows()).filter(|&i| tight[i] & s == s).collect();
        let sub = p.a.select_rows(&rows);
        let dim = n - rank(&sub);
        let basis = lex_row_basis(&p.a, &rows);
        let fdm = p.a.select_rows(&basis);
        let fdm_rhs: RatVector = basis.iter().map(|&i| p.b[i].clone()).collect();
        debug_assert_eq!(fdm.rows(), n - dim);
        faces.push(Face {
            tight_rows: rows,
            dim,
            fdm,
            fdm_rhs,
            vertex_ids: (0..nv).filter(|&k| s & (1 << k) != 0).collect(),
            ray_ids: (0..nr).filter(|&k| s & (1 << (nv + k)) != 0).collect(),
        });
    }
    faces.sort_by(|a, b| (a.dim, &a.tight_rows).cmp(&(b.dim, &b.tight_rows)));
    Ok(FaceLattice { vrep, faces })
}

/// All nonempty faces of `p`, sorted by (dim, tight rows).
pub fn enumerate_faces(p: &HPolyhedron) -> Result<Vec<Face>> {
    Ok(face_lattice(p)?.faces)
}

/// Finds the face whose affine hull equals `{x : m x = d}`, if any.
pub fn find_face_by_affine_hull<'a>(
    lattice: &'a FaceLattice,
    m: &RatMatrix,
    d: &RatVector,
) -> Option<&'a Face> {
    lattice.faces.iter().find(|f| affine_hulls_equal(&f.fdm, &f.fdm_rhs, m, d))
}

/// Do `{x : a x = a_rhs}` and `{x : b x = b_rhs}` coincide? Checked by
/// solving one system and substituting into the other, both ways.
pub fn affine_hulls_equal(a: &RatMatrix, a_rhs: &RatVector, b: &RatMatrix, b_rhs: &RatVector) -> bool {
    system_contains(a, a_rhs, b, b_rhs) && system_contains(b, b_rhs, a, a_rhs)
}

/// Every solution of `ax = a_rhs` satisfies `bx = b_rhs`.
fn system_contains(a: &RatMatrix, a_rhs: &RatVector, b: &RatMatrix, b_rhs: &RatVector) -> bool {
    match solve(a, a_rhs) {
        Err(_) | Ok(None) => false,
        Ok(Some(sol)) => {
            let image = match b.mat_vec(&sol.particular) {
                Ok(v) => v,
                Err(_) => return false,
            };
            if &image != b_rhs {
                return false;
            }
            (0..sol.kernel_basis.cols()).all(|c| {
                let col = sol.kernel_basis.col_vec(c);
                b.mat_vec(&col).map(|v| vec_is_zero(&v)).unwrap_or(false)
            })
        }
    }
}

/// `dim + 1` affinely independent points of the face, assembled from its
/// generators (vertices, plus rays and lineality offsets from the first
/// vertex). Used to validate face-defining matrices by the counting
/// identity `#points + fdm.rows = n + 1`.
pub fn face_witness_points(lattice: &FaceLattice, face: &Face) -> Vec<RatVector> {
    let v0 = lattice.vrep.vertices[face.vertex_ids[0]].clone();
    let mut candidates: Vec<RatVector> = face
        .vertex_ids
        .iter()
        .map(|&k| lattice.vrep.vertices[k].clone())
        .collect();
    for &k in &face.ray_ids {
        candidates.push(crate::matrix::vec_add(&v0, &lattice.vrep.rays[k]));
    }
    for l in &lattice.vrep.lineality {
        candidates.push(crate::matrix::vec_add(&v0, l));
    }
    // greedy affine-independence filter
    let mut chosen: Vec<RatVector> = vec![v0.clone()];
    let mut dirs: Vec<RatVector> = Vec::new();
    for c in candidates {
        if chosen.len() == face.dim + 1 {
            break;
        }
        if c == v0 {
            continue;
        }
        let mut trial = dirs.clone();
        trial.push(crate::matrix::vec_sub(&c, &v0));
        let m = RatMatrix::from_rows(trial.clone());
        if rank(&m) == trial.len() {
            dirs = trial;
            chosen.push(c);
        }
    }
    chosen
}

/// Rows of `p` tight on every generator (implicit equalities).
pub fn implicit_equality_rows(p: &HPolyhedron, vrep: &VPolyhedron) -> Vec<usize> {
    (0..p.rows())
        .filter(|&i| {
            vrep.vertices.iter().all(|v| dot(p.a.row(i), v) == p.b[i])
                && vrep.rays.iter().all(|r| dot(p.a.row(i), r).is_zero())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::RatMatrix;
    use crate::rat::{rat_int, Rational};
    use itertools::Itertools;
    use num_traits::One;

    fn segment() -> HPolyhedron {
        HPolyhedron::new(
            RatMatrix::from_i64_rows(&[&[1], &[-1]]),
            vec![rat_int(1), rat_int(0)],
        )
    }

    #[test]
    fn segment_has_three_faces() {
        let faces = enumerate_faces(&segment()).unwrap();
        assert_eq!(faces.len(), 3);
        assert_eq!(faces[0].dim, 0);
        assert_eq!(faces[1].dim, 0);
        assert_eq!(faces[2].dim, 1);
        assert_eq!(faces[2].tight_rows, Vec::<usize>::new());
        assert_eq!(faces[2].fdm.rows(), 0);
    }

    #[test]
    fn empty_input_rejected() {
        assert!(matches!(
            enumerate_faces(&HPolyhedron::canonical_empty(2)),
            Err(crate::Error::EmptyPolyhedron)
        ));
    }

    #[test]
    fn counting_identity_on_unit_square() {
        let p = HPolyhedron::new(
            RatMatrix::from_i64_rows(&[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]]),
            vec![rat_int(1), rat_int(1), rat_int(0), rat_int(0)],
        );
        let lattice = face_lattice(&p).unwrap();
        assert_eq!(lattice.faces.len(), 9); // 4 vertices, 4 edges, the square
        for f in &lattice.faces {
            assert_eq!(f.fdm.rows() + f.dim, 2);
            let pts = face_witness_points(&lattice, f);
            assert_eq!(pts.len(), f.dim + 1);
            for x in &pts {
                assert_eq!(f.fdm.mat_vec(x).unwrap(), f.fdm_rhs);
                assert!(p.contains(x));
            }
        }
        // vertex fdm is a row basis of two axis rows
        let vertex = &lattice.faces[0];
        assert_eq!(vertex.dim, 0);
        assert_eq!(vertex.fdm.rows(), 2);
    }

    // brute-force face enumeration over all tight-row subsets
    fn faces_by_bruteforce(p: &HPolyhedron) -> Vec<Vec<usize>> {
        let mut found: Vec<Vec<usize>> = Vec::new();
        for k in 0..=p.rows() {
            for subset in (0..p.rows()).combinations(k) {
                // impose equality on subset, check nonemptiness
                let mut rows: Vec<RatVector> = (0..p.rows()).map(|i| p.a.row_vec(i)).collect();
                let mut b = p.b.clone();
                for &i in &subset {
                    rows.push(crate::matrix::vec_scale(&p.a.row_vec(i), &-Rational::one()));
                    b.push(-p.b[i].clone());
                }
                let sys = HPolyhedron::new(RatMatrix::from_rows(rows), b);
                let v = h_to_v(&sys);
                if v.is_empty() {
                    continue;
                }
                // maximal tight set of the resulting face
                let mut maximal: Vec<usize> = Vec::new();
                for i in 0..p.rows() {
                    let all_tight = v.vertices.iter().all(|x| dot(p.a.row(i), x) == p.b[i])
                        && v.rays.iter().all(|r| dot(p.a.row(i), r).is_zero());
                    if all_tight {
                        maximal.push(i);
                    }
                }
                if !found.contains(&maximal) {
                    found.push(maximal);
                }
            }
        }
        found.sort();
        found
    }

    #[test]
    fn matches_bruteforce_on_random_polyhedra() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let mut checked = 0;
        while checked < 12 {
            let m = rng.gen_range(2..=5);
            let a = RatMatrix::from_rows(
                (0..m)
                    .map(|_| (0..3).map(|_| rat_int(rng.gen_range(-2..=2))).collect())
                    .collect(),
            );
            let b: RatVector = (0..m).map(|_| rat_int(rng.gen_range(-1..=2))).collect();
            let p = HPolyhedron::new(a, b);
            if h_to_v(&p).is_empty() {
                continue;
            }
            checked += 1;
            let mut ours: Vec<Vec<usize>> = enumerate_faces(&p)
                .unwrap()
                .into_iter()
                .map(|f| f.tight_rows)
                .collect();
            ours.sort();
            assert_eq!(ours, faces_by_bruteforce(&p));
        }
    }

    #[test]
    fn affine_hull_matching() {
        let p = segment();
        let lattice = face_lattice(&p).unwrap();
        let m = RatMatrix::from_i64_rows(&[&[2]]);
        let d = vec![rat_int(2)];
        // {2x = 2} = {x = 1}: the right endpoint
        let f = find_face_by_affine_hull(&lattice, &m, &d).unwrap();
        assert_eq!(f.dim, 0);
        assert!(f.tight_rows.contains(&0));
        assert!(find_face_by_affine_hull(&lattice, &m, &vec![rat_int(5)]).is_none());
    }
}
