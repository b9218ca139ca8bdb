//! Structured instance families: clutters with covering polyhedra and
//! minor operations, graphs with stable set polytopes and vertex
//! unfolding, circuit and conservative-function cones, series-parallel
//! recognition, and a catalog of named examples.

use std::collections::{BTreeSet, HashSet};

use num_traits::{One, Zero};

use crate::matrix::{RatMatrix, RatVector};
use crate::polyhedra::{v_to_h, HPolyhedron, VPolyhedron};
use crate::rat::{rat_int, Rational};
use crate::{Error, Result};

/// An antichain of subsets of `{0, .., ground-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clutter {
    pub ground: usize,
    pub members: Vec<BTreeSet<usize>>,
}

impl Clutter {
    /// Validates the antichain property and element range; members are
    /// stored sorted and deduplicated.
    pub fn new(ground: usize, members: Vec<BTreeSet<usize>>) -> Result<Clutter> {
        for m in &members {
            for &e in m {
                if e >= ground {
                    return Err(Error::InvalidElement { element: e, bound: ground });
                }
            }
        }
        let mut members: Vec<BTreeSet<usize>> = members;
        members.sort();
        members.dedup();
        for (i, a) in members.iter().enumerate() {
            for (j, b) in members.iter().enumerate() {
                if i != j && a.is_subset(b) {
                    return Err(Error::ClutterContainment { inner: i, outer: j });
                }
            }
        }
        Ok(Clutter { ground, members })
    }

    pub fn from_slices(ground: usize, members: &[&[usize]]) -> Result<Clutter> {
        Clutter::new(ground, members.iter().map(|m| m.iter().copied().collect()).collect())
    }

    /// 0/1 incidence matrix, one row per member.
    pub fn incidence_matrix(&self) -> RatMatrix {
        let mut m = RatMatrix::zero(self.members.len(), self.ground);
        for (r, member) in self.members.iter().enumerate() {
            for &e in member {
                *m.at_mut(r, e) = Rational::one();
            }
        }
        m
    }

    /// Keeps the members avoiding `e`; the ground element disappears.
    pub fn delete(&self, e: usize) -> Result<Clutter> {
        self.check_element(e)?;
        let members = self
            .members
            .iter()
            .filter(|m| !m.contains(&e))
            .map(|m| m.iter().map(|&x| relabel(x, e)).collect())
            .collect();
        Clutter::new(self.ground - 1, members)
    }

    /// Removes `e` from every member, then keeps the inclusionwise
    /// minimal results.
    pub fn contract(&self, e: usize) -> Result<Clutter> {
        self.check_element(e)?;
        let stripped: Vec<BTreeSet<usize>> = self
            .members
            .iter()
            .map(|m| m.iter().filter(|&&x| x != e).map(|&x| relabel(x, e)).collect())
            .collect();
        let minimal: Vec<BTreeSet<usize>> = stripped
            .iter()
            .filter(|m| !stripped.iter().any(|other| other != *m && other.is_subset(m)))
            .cloned()
            .collect();
        Clutter::new(self.ground - 1, minimal)
    }

    fn check_element(&self, e: usize) -> Result<()> {
        if e >= self.ground {
            return Err(Error::InvalidElement { element: e, bound: self.ground });
        }
        Ok(())
    }

    /// Canonical form under ground-set relabeling: the lexicographically
    /// least member list over all permutations. Factorial cost; ground
    /// sets stay below ~8 here.
    fn canonical_form(&self) -> Vec<Vec<usize>> {
        let mut best: Option<Vec<Vec<usize>>> = None;
        let mut perm: Vec<usize> = (0..self.ground).collect();
        permute(&mut perm, 0, &mut |p| {
            let mut relabeled: Vec<Vec<usize>> = self
                .members
                .iter()
                .map(|m| {
                    let mut v: Vec<usize> = m.iter().map(|&x| p[x]).collect();
                    v.sort_unstable();
                    v
                })
                .collect();
            relabeled.sort();
            if best.as_ref().is_none_or(|b| &relabeled < b) {
                best = Some(relabeled);
            }
        });
        best.unwrap_or_default()
    }

    /// Does some delete/contract sequence of `self` equal `target` up to
    /// relabeling? Breadth-first over minors, memoized on canonical
    /// forms.
    pub fn has_minor(&self, target: &Clutter) -> bool {
        if self.ground < target.ground {
            return false;
        }
        let goal = target.canonical_form();
        let mut seen: HashSet<Vec<Vec<usize>>> = HashSet::new();
        let mut queue: Vec<Clutter> = vec![self.clone()];
        while let Some(c) = queue.pop() {
            let canon = c.canonical_form();
            if c.ground == target.ground && canon == goal {
                return true;
            }
            if c.ground <= target.ground || !seen.insert(canon) {
                continue;
            }
            for e in 0..c.ground {
                if let Ok(d) = c.delete(e) {
                    queue.push(d);
                }
                if let Ok(d) = c.contract(e) {
                    queue.push(d);
                }
            }
        }
        false
    }

    /// Binary clutter check: the symmetric difference of any three
    /// members contains a member.
    pub fn is_binary(&self) -> bool {
        let k = self.members.len();
        for a in 0..k {
            for b in a..k {
                for c in b..k {
                    let mut parity = vec![0u8; self.ground];
                    for set in [&self.members[a], &self.members[b], &self.members[c]] {
                        for &e in set {
                            parity[e] ^= 1;
                        }
                    }
                    let diff: BTreeSet<usize> =
                        (0..self.ground).filter(|&e| parity[e] == 1).collect();
                    if !self.members.iter().any(|m| m.is_subset(&diff)) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn relabel(x: usize, removed: usize) -> usize {
    if x > removed {
        x - 1
    } else {
        x
    }
}

fn permute(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

/// `{x : A_C x >= 1, x >= 0}` in the crate's `<=` normal form.
pub fn covering_polyhedron(c: &Clutter) -> HPolyhedron {
    let inc = c.incidence_matrix();
    let mut rows: Vec<RatVector> = Vec::new();
    let mut b: RatVector = Vec::new();
    for r in 0..inc.rows() {
        rows.push(inc.row(r).iter().map(|x| -x.clone()).collect());
        b.push(-Rational::one());
    }
    for e in 0..c.ground {
        let mut row = vec![Rational::zero(); c.ground];
        row[e] = -Rational::one();
        rows.push(row);
        b.push(Rational::zero());
    }
    HPolyhedron::new(RatMatrix::from_rows(rows), b)
}

// The complete graph on four vertices, edges ordered so that the
// triangle incidence matrix comes out in its standard shape:
// e1=(0,1), e2=(0,3), e3=(0,2), e4=(1,3), e5=(1,2), e6=(2,3).
const K4_EDGES: [(usize, usize); 6] = [(0, 1), (0, 3), (0, 2), (1, 3), (1, 2), (2, 3)];

fn k4_triangles_as_edge_sets() -> Vec<BTreeSet<usize>> {
    let triangles = [[0, 1, 3], [0, 1, 2], [0, 2, 3], [1, 2, 3]];
    triangles
        .iter()
        .map(|t| {
            K4_EDGES
                .iter()
                .enumerate()
                .filter(|(_, (u, v))| t.contains(u) && t.contains(v))
                .map(|(i, _)| i)
                .collect()
        })
        .collect()
}

fn k4_perfect_matchings_as_edge_sets() -> Vec<BTreeSet<usize>> {
    let mut out = Vec::new();
    for i in 0..6 {
        for j in i + 1..6 {
            let (a, b) = K4_EDGES[i];
            let (c, d) = K4_EDGES[j];
            let mut verts = BTreeSet::new();
            verts.extend([a, b, c, d]);
            if verts.len() == 4 {
                out.push([i, j].into_iter().collect());
            }
        }
    }
    out
}

/// The clutter of triangles of the complete graph on four vertices, on
/// its six edges.
pub fn q6() -> Clutter {
    Clutter::new(6, k4_triangles_as_edge_sets()).expect("triangles form a clutter")
}

/// Seven elements: each triangle and each perfect matching of the
/// four-vertex complete graph, augmented by one extra element.
pub fn q7() -> Clutter {
    let mut members = k4_triangles_as_edge_sets();
    members.extend(k4_perfect_matchings_as_edge_sets());
    let augmented: Vec<BTreeSet<usize>> = members
        .into_iter()
        .map(|mut m| {
            m.insert(6);
            m
        })
        .collect();
    Clutter::new(7, augmented).expect("augmented members form a clutter")
}

/// Simple undirected graph on `{0, .., n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Graph> {
        let mut normalized: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidElement { element: u.max(v), bound: n });
            }
            if u == v {
                return Err(Error::UnfoldPrecondition { u, v, reason: "loops not allowed" });
            }
            let e = (u.min(v), u.max(v));
            if !normalized.contains(&e) {
                normalized.push(e);
            }
        }
        normalized.sort();
        Ok(Graph { n, edges: normalized })
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn neighbors(&self, v: usize) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for &(a, b) in &self.edges {
            if a == v {
                out.insert(b);
            }
            if b == v {
                out.insert(a);
            }
        }
        out
    }

    /// All maximal cliques via pivoting Bron-Kerbosch, sorted.
    pub fn maximal_cliques(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        let all: BTreeSet<usize> = (0..self.n).collect();
        self.bron_kerbosch(BTreeSet::new(), all, BTreeSet::new(), &mut out);
        out.sort();
        out
    }

    fn bron_kerbosch(
        &self,
        r: BTreeSet<usize>,
        mut p: BTreeSet<usize>,
        mut x: BTreeSet<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.is_empty() && x.is_empty() {
            out.push(r.iter().copied().collect());
            return;
        }
        let pivot = p.union(&x).max_by_key(|&&v| {
            let nb = self.neighbors(v);
            p.intersection(&nb).count()
        });
        let candidates: Vec<usize> = match pivot {
            Some(&u) => {
                let nb = self.neighbors(u);
                p.iter().copied().filter(|v| !nb.contains(v)).collect()
            }
            None => p.iter().copied().collect(),
        };
        for v in candidates {
            let nb = self.neighbors(v);
            let mut r2 = r.clone();
            r2.insert(v);
            self.bron_kerbosch(
                r2,
                p.intersection(&nb).copied().collect(),
                x.intersection(&nb).copied().collect(),
                out,
            );
            p.remove(&v);
            x.insert(v);
        }
    }

    /// All circuits (edge sets of simple cycles), as sorted edge-index
    /// sets, by exhaustive filtering of edge subsets: a circuit induces
    /// a connected subgraph in which every vertex has degree two.
    pub fn circuits(&self) -> Vec<BTreeSet<usize>> {
        let m = self.edges.len();
        assert!(m <= 20, "circuit enumeration is exponential in edges");
        let mut out = Vec::new();
        for mask in 1u32..(1 << m) {
            let subset: Vec<usize> = (0..m).filter(|&i| mask & (1 << i) != 0).collect();
            let mut degree = vec![0usize; self.n];
            for &i in &subset {
                let (u, v) = self.edges[i];
                degree[u] += 1;
                degree[v] += 1;
            }
            let touched: Vec<usize> = (0..self.n).filter(|&v| degree[v] > 0).collect();
            if touched.iter().any(|&v| degree[v] != 2) {
                continue;
            }
            // connectivity over touched vertices
            let mut seen = vec![false; self.n];
            let mut stack = vec![touched[0]];
            seen[touched[0]] = true;
            while let Some(v) = stack.pop() {
                for &i in &subset {
                    let (a, b) = self.edges[i];
                    for (x, y) in [(a, b), (b, a)] {
                        if x == v && !seen[y] {
                            seen[y] = true;
                            stack.push(y);
                        }
                    }
                }
            }
            if touched.iter().all(|&v| seen[v]) {
                out.push(subset.into_iter().collect());
            }
        }
        out.sort();
        out
    }

    /// Inclusionwise minimal nonempty cuts, as sorted edge-index sets,
    /// from all vertex bipartitions.
    pub fn bonds(&self) -> Vec<BTreeSet<usize>> {
        assert!(self.n <= 20, "bond enumeration is exponential in vertices");
        let mut cuts: Vec<BTreeSet<usize>> = Vec::new();
        for mask in 1u32..(1 << (self.n - 1)) {
            let side: Vec<bool> = (0..self.n).map(|v| mask & (1 << v) != 0).collect();
            let cut: BTreeSet<usize> = self
                .edges
                .iter()
                .enumerate()
                .filter(|(_, (u, v))| side[*u] != side[*v])
                .map(|(i, _)| i)
                .collect();
            if !cut.is_empty() && !cuts.contains(&cut) {
                cuts.push(cut);
            }
        }
        let minimal: Vec<BTreeSet<usize>> = cuts
            .iter()
            .filter(|c| !cuts.iter().any(|other| other != *c && other.is_subset(c)))
            .cloned()
            .collect();
        let mut out = minimal;
        out.sort();
        out
    }
}

/// Clique-inequality description of the stable set polytope:
/// `x(C) <= 1` per clique plus nonnegativity. When `cliques` is omitted
/// the maximal cliques are enumerated. The description matches the
/// stable set polytope only for perfect graphs; that is the caller's
/// responsibility.
pub fn stable_set_polytope(g: &Graph, cliques: Option<&[Vec<usize>]>) -> HPolyhedron {
    let owned;
    let cliques: &[Vec<usize>] = match cliques {
        Some(c) => c,
        None => {
            owned = g.maximal_cliques();
            &owned
        }
    };
    let mut rows: Vec<RatVector> = Vec::new();
    let mut b: RatVector = Vec::new();
    for clique in cliques {
        let mut row = vec![Rational::zero(); g.n];
        for &v in clique {
            row[v] = Rational::one();
        }
        rows.push(row);
        b.push(Rational::one());
    }
    for v in 0..g.n {
        let mut row = vec![Rational::zero(); g.n];
        row[v] = -Rational::one();
        rows.push(row);
        b.push(Rational::zero());
    }
    HPolyhedron::new(RatMatrix::from_rows(rows), b)
}

/// Unfolds vertex `v`: `v` is removed; new vertices `x` adjacent to `X`,
/// `y` adjacent to `Y`, and `z` adjacent to exactly `{x, y}` are
/// appended (in that order). Requires `X union Y = N(v)` and no edge
/// between `X - Y` and `Y - X`.
pub fn unfold_vertex(
    g: &Graph,
    v: usize,
    x_set: &BTreeSet<usize>,
    y_set: &BTreeSet<usize>,
) -> Result<Graph> {
    if v >= g.n {
        return Err(Error::InvalidElement { element: v, bound: g.n });
    }
    let nv = g.neighbors(v);
    let union: BTreeSet<usize> = x_set.union(y_set).copied().collect();
    if union != nv {
        return Err(Error::UnfoldPrecondition {
            u: v,
            v: *union.symmetric_difference(&nv).next().unwrap_or(&v),
            reason: "X union Y must equal the neighborhood of v",
        });
    }
    for &a in x_set.difference(y_set) {
        for &b in y_set.difference(x_set) {
            if g.has_edge(a, b) {
                return Err(Error::UnfoldPrecondition {
                    u: a,
                    v: b,
                    reason: "edge between X - Y and Y - X",
                });
            }
        }
    }
    // old vertices keep their index shifted down past v
    let map = |w: usize| if w > v { w - 1 } else { w };
    let n_new = g.n + 2; // -1 for v, +3 for x, y, z
    let (x_id, y_id, z_id) = (g.n - 1, g.n, g.n + 1);
    let mut edges: Vec<(usize, usize)> = g
        .edges
        .iter()
        .filter(|(a, b)| *a != v && *b != v)
        .map(|&(a, b)| (map(a), map(b)))
        .collect();
    for &a in x_set {
        edges.push((map(a), x_id));
    }
    for &b in y_set {
        edges.push((map(b), y_id));
    }
    edges.push((x_id, z_id));
    edges.push((y_id, z_id));
    Graph::new(n_new, edges)
}

/// The cone generated by the circuit incidence vectors, in both forms:
/// generators, and the cut-based inequality description
/// `{x >= 0, x(D - e) >= x_e for all bonds D and e in D}`.
pub fn circuit_cone(g: &Graph) -> (VPolyhedron, HPolyhedron) {
    let m = g.edges.len();
    let gens: Vec<RatVector> = g
        .circuits()
        .iter()
        .map(|c| (0..m).map(|i| if c.contains(&i) { Rational::one() } else { Rational::zero() }).collect())
        .collect();
    let vform = VPolyhedron::cone(m, gens);

    let mut rows: Vec<RatVector> = Vec::new();
    let mut b: RatVector = Vec::new();
    for e in 0..m {
        let mut row = vec![Rational::zero(); m];
        row[e] = -Rational::one();
        rows.push(row);
        b.push(Rational::zero());
    }
    for bond in g.bonds() {
        for &e in &bond {
            // x(D - e) >= x_e  <=>  x_e - x(D - e) <= 0
            let mut row = vec![Rational::zero(); m];
            for &f in &bond {
                row[f] = if f == e { Rational::one() } else { -Rational::one() };
            }
            rows.push(row);
            b.push(Rational::zero());
        }
    }
    (vform, HPolyhedron::new(RatMatrix::from_rows(rows), b))
}

/// `{x : x(C) >= 0 for all circuits C}`.
pub fn conservative_cone(g: &Graph) -> HPolyhedron {
    let m = g.edges.len();
    let circuits = g.circuits();
    let mut rows: Vec<RatVector> = Vec::new();
    let b: RatVector = vec![Rational::zero(); circuits.len()];
    for c in &circuits {
        rows.push(
            (0..m)
                .map(|i| if c.contains(&i) { -Rational::one() } else { Rational::zero() })
                .collect(),
        );
    }
    HPolyhedron::new(RatMatrix::from_rows(rows), b)
}

/// Series-parallel recognition by exhaustive reduction on the
/// multigraph: repeatedly drop loops, merge parallel edges, delete
/// degree-one vertices, and suppress degree-two vertices; a graph is
/// series-parallel iff every component reduces to a single vertex or a
/// single edge.
pub fn is_series_parallel(g: &Graph) -> bool {
    // adjacency as a multiset of edges
    let mut edges: Vec<(usize, usize)> = g.edges.clone();
    let mut alive: Vec<bool> = vec![true; g.n];
    loop {
        // drop loops
        edges.retain(|&(u, v)| u != v);
        // merge parallel edges
        let mut dedup: Vec<(usize, usize)> = Vec::new();
        for &(u, v) in &edges {
            let e = (u.min(v), u.max(v));
            if !dedup.contains(&e) {
                dedup.push(e);
            }
        }
        edges = dedup;
        let degree = |edges: &[(usize, usize)], v: usize| {
            edges.iter().filter(|&&(a, b)| a == v || b == v).count()
        };
        // remove isolated and degree-one vertices
        if let Some(v) = (0..g.n).find(|&v| alive[v] && degree(&edges, v) == 1) {
            edges.retain(|&(a, b)| a != v && b != v);
            alive[v] = false;
            continue;
        }
        if let Some(v) = (0..g.n).find(|&v| alive[v] && degree(&edges, v) == 0) {
            alive[v] = false;
            continue;
        }
        // suppress a degree-two vertex
        if let Some(v) = (0..g.n).find(|&v| alive[v] && degree(&edges, v) == 2) {
            let incident: Vec<(usize, usize)> =
                edges.iter().copied().filter(|&(a, b)| a == v || b == v).collect();
            edges.retain(|&(a, b)| a != v && b != v);
            let other = |(a, b): (usize, usize)| if a == v { b } else { a };
            let (p, q) = (other(incident[0]), other(incident[1]));
            alive[v] = false;
            if p != q {
                edges.push((p.min(q), p.max(q)));
            }
            continue;
        }
        break;
    }
    edges.is_empty()
}

/// Named instances used across the test suites and the CLI generator.
pub mod named {
    use super::*;

    /// The five-vertex 0/1 polytope whose second dilation stops being
    /// box-integer, as a vertex list.
    pub fn p5_vertices() -> VPolyhedron {
        VPolyhedron::polytope(
            5,
            vec![
                vec![rat_int(0); 5],
                vec![rat_int(1), rat_int(1), rat_int(0), rat_int(0), rat_int(0)],
                vec![rat_int(1), rat_int(0), rat_int(1), rat_int(0), rat_int(0)],
                vec![rat_int(1), rat_int(0), rat_int(0), rat_int(1), rat_int(0)],
                vec![rat_int(1), rat_int(1), rat_int(1), rat_int(1), rat_int(1)],
            ],
        )
    }

    pub fn p5() -> HPolyhedron {
        v_to_h(&p5_vertices())
    }

    /// conv((2,-1), (-2,-1), (0,1)): fully box-integer.
    pub fn triangle_fully_box_integer() -> HPolyhedron {
        v_to_h(&VPolyhedron::polytope(
            2,
            vec![
                vec![rat_int(2), rat_int(-1)],
                vec![rat_int(-2), rat_int(-1)],
                vec![rat_int(0), rat_int(1)],
            ],
        ))
    }

    /// conv((1,1), (-1,1), (0,-1)): integer but not box-integer.
    pub fn triangle_not_box_integer() -> HPolyhedron {
        v_to_h(&VPolyhedron::polytope(
            2,
            vec![
                vec![rat_int(1), rat_int(1)],
                vec![rat_int(-1), rat_int(1)],
                vec![rat_int(0), rat_int(-1)],
            ],
        ))
    }

    /// The tetrahedron conv(0, (1,1,0), (1,0,1), (0,1,1)) in its
    /// four-row inequality description: fully box-integer without the
    /// integer decomposition property.
    pub fn idp_simplex() -> HPolyhedron {
        HPolyhedron::new(
            RatMatrix::from_i64_rows(&[&[1, -1, -1], &[-1, 1, -1], &[-1, -1, 1], &[1, 1, 1]]),
            vec![rat_int(0), rat_int(0), rat_int(0), rat_int(2)],
        )
    }

    /// The three-sun: an inner triangle b, c, v with pendant triangle
    /// tips a (on bc), d (on bv), e (on cv). Vertex order a,b,c,d,e,v.
    pub fn s3() -> Graph {
        Graph::new(
            6,
            vec![
                (0, 1), // a-b
                (0, 2), // a-c
                (1, 2), // b-c
                (1, 3), // b-d
                (1, 5), // b-v
                (3, 5), // d-v
                (2, 5), // c-v
                (2, 4), // c-e
                (4, 5), // e-v
            ],
        )
        .expect("fixed edge list")
    }

    pub const S3_A: usize = 0;
    pub const S3_B: usize = 1;
    pub const S3_C: usize = 2;
    pub const S3_D: usize = 3;
    pub const S3_E: usize = 4;
    pub const S3_V: usize = 5;

    /// Unfolding of `v` in the three-sun with `X = {b, c, e}` and
    /// `Y = {b, c, d}`; vertices a,b,c,d,e then x,y,z.
    pub fn s3_unfolded() -> Graph {
        unfold_vertex(
            &s3(),
            S3_V,
            &[S3_B, S3_C, S3_E].into_iter().collect(),
            &[S3_B, S3_C, S3_D].into_iter().collect(),
        )
        .expect("valid unfolding")
    }

    /// The variant unfolding with `X = {c, e}` and `Y = {b, c, d}`.
    pub fn s3_unfolded_alt() -> Graph {
        unfold_vertex(
            &s3(),
            S3_V,
            &[S3_C, S3_E].into_iter().collect(),
            &[S3_B, S3_C, S3_D].into_iter().collect(),
        )
        .expect("valid unfolding")
    }

    /// The unfolded graph with the degree-two tip `z` removed.
    pub fn s3_unfolded_minus_z() -> Graph {
        let g = s3_unfolded();
        let z = g.n - 1;
        let edges = g.edges.iter().copied().filter(|&(a, b)| a != z && b != z).collect();
        Graph::new(g.n - 1, edges).expect("subgraph")
    }

    pub fn k4() -> Graph {
        Graph::new(4, super::K4_EDGES.to_vec()).expect("fixed edge list")
    }

    pub fn k4_minus_edge() -> Graph {
        let mut edges = super::K4_EDGES.to_vec();
        edges.pop();
        Graph::new(4, edges).expect("fixed edge list")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::{is_box_tdi, is_fully_box_integer};
    use crate::linalg::rank;
    use crate::polyhedra::{
        face_lattice, find_face_by_affine_hull, h_to_v, polar, same_point_set, v_included,
    };
    use crate::rat::rat;

    #[test]
    fn q6_incidence_matches_reference_matrix() {
        let expected = RatMatrix::from_i64_rows(&[
            &[1, 1, 0, 1, 0, 0],
            &[1, 0, 1, 0, 1, 0],
            &[0, 1, 1, 0, 0, 1],
            &[0, 0, 0, 1, 1, 1],
        ]);
        assert_eq!(q6().incidence_matrix(), expected);
        assert_eq!(rank(&q6().incidence_matrix()), 4);
    }

    #[test]
    fn q7_member_structure() {
        let c = q7();
        assert_eq!(c.ground, 7);
        assert_eq!(c.members.len(), 7);
        let mut sizes: Vec<usize> = c.members.iter().map(|m| m.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![3, 3, 3, 4, 4, 4, 4]);
        assert!(c.members.iter().all(|m| m.contains(&6)));
    }

    #[test]
    fn covering_polyhedron_shapes() {
        let singleton = Clutter::from_slices(1, &[&[0]]).unwrap();
        let p = covering_polyhedron(&singleton);
        assert_eq!(p.dim(), 1);
        let v = h_to_v(&p);
        assert_eq!(v.vertices, vec![vec![rat_int(1)]]);
        assert_eq!(v.rays.len(), 1);

        let pq6 = covering_polyhedron(&q6());
        assert_eq!(pq6.rows(), 10);
        assert_eq!(pq6.dim(), 6);
        // vertices are exactly the seven minimal covers: the three
        // perfect-matching pairs and the four triangles themselves
        let v = h_to_v(&pq6);
        assert!(crate::polyhedra::is_integer(&pq6).unwrap());
        assert_eq!(v.vertices.len(), 7);
        for x in &v.vertices {
            assert!(crate::matrix::vec_is_integer(x));
        }
        assert!(v.vertices.contains(&vec![
            rat_int(1),
            rat_int(0),
            rat_int(0),
            rat_int(0),
            rat_int(0),
            rat_int(1)
        ]));
    }

    #[test]
    fn delete_contract_commute_on_disjoint_elements() {
        let c = q6();
        // delete 5 then contract 0, vs contract 0 then delete 4 (the
        // element formerly known as 5)
        let a = c.delete(5).unwrap().contract(0).unwrap();
        let b = c.contract(0).unwrap().delete(4).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn clutter_invariant_after_contract() {
        let c = q7();
        for e in 0..c.ground {
            let contracted = c.contract(e).unwrap();
            // Clutter::new already enforces the antichain property;
            // reconstruct to double-check
            assert!(Clutter::new(contracted.ground, contracted.members.clone()).is_ok());
        }
    }

    #[test]
    fn minor_relation_facts() {
        assert!(q6().has_minor(&q6()));
        // contracting the augmenting element leaves matchings alongside
        // the triangles, so the triangle clutter is not reachable
        let contracted = q7().contract(6).unwrap();
        assert_eq!(contracted.members.len(), 7);
        assert!(!q7().has_minor(&q6()));
        // deleting the augmenting element wipes every member
        assert_eq!(q7().delete(6).unwrap().members.len(), 0);
    }

    #[test]
    fn binary_clutter_checks() {
        assert!(q6().is_binary());
        assert!(Clutter::from_slices(2, &[&[0]]).unwrap().is_binary());
        // {{0},{1}}: sym-diff of ({0},{0},{1}) is {1}, of ({0},{1},{1})
        // is {0}, of ({0},{1},?) never empty; all contain members
        assert!(Clutter::from_slices(2, &[&[0], &[1]]).unwrap().is_binary());
        // {{0,1},{1,2},{0,2}} is not binary: the three members have
        // empty symmetric difference
        let tri = Clutter::from_slices(3, &[&[0, 1], &[1, 2], &[0, 2]]).unwrap();
        assert!(!tri.is_binary());
    }

    #[test]
    fn s3_shape_and_cliques() {
        let g = named::s3();
        assert_eq!(g.n, 6);
        assert_eq!(g.edges.len(), 9);
        let cliques = g.maximal_cliques();
        // inner triangle bcv plus the three outer triangles
        assert_eq!(cliques.len(), 4);
        assert!(cliques.contains(&vec![named::S3_B, named::S3_C, named::S3_V]));
        assert!(cliques.contains(&vec![named::S3_A, named::S3_B, named::S3_C]));
    }

    #[test]
    fn triangle_stable_set_polytope() {
        let g = Graph::new(3, vec![(0, 1), (0, 2), (1, 2)]).unwrap();
        let p = stable_set_polytope(&g, None);
        assert_eq!(p.rows(), 1 + 3);
        let v = h_to_v(&p);
        assert_eq!(v.vertices.len(), 4); // empty set and three singletons
    }

    #[test]
    fn s3_face_carries_reference_matrix() {
        // column order (b, c, v, a, d, e) turns the outer-triangle rows
        // into the standard 3x6 matrix; in our vertex order a..e,v the
        // same face is defined by the rows of the three outer cliques
        let g = named::s3();
        let p = stable_set_polytope(&g, None);
        let lattice = face_lattice(&p).unwrap();
        let mut m = RatMatrix::zero(3, 6);
        for (r, clique) in [
            [named::S3_A, named::S3_B, named::S3_C],
            [named::S3_B, named::S3_D, named::S3_V],
            [named::S3_C, named::S3_E, named::S3_V],
        ]
        .iter()
        .enumerate()
        {
            for &v in clique {
                *m.at_mut(r, v) = Rational::one();
            }
        }
        let d = vec![Rational::one(); 3];
        let face = find_face_by_affine_hull(&lattice, &m, &d).expect("face exists");
        assert_eq!(face.dim, 3);
        // the four reference stable sets lie on it
        for stable in [
            vec![named::S3_A, named::S3_V],
            vec![named::S3_B, named::S3_E],
            vec![named::S3_C, named::S3_D],
            vec![named::S3_A, named::S3_D, named::S3_E],
        ] {
            let x: RatVector = (0..6)
                .map(|i| if stable.contains(&i) { Rational::one() } else { Rational::zero() })
                .collect();
            assert!(p.contains(&x));
            assert_eq!(m.mat_vec(&x).unwrap(), d);
        }
    }

    #[test]
    fn bipartite_stable_set_polytope_is_box_tdi() {
        let path = Graph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let p = stable_set_polytope(&path, None);
        assert!(is_box_tdi(&p).unwrap().is_box_tdi);
    }

    #[test]
    fn unfolding_shapes() {
        let g = named::s3();
        let unfolded = named::s3_unfolded();
        assert_eq!(unfolded.n, 8);
        // |E'| = |E| - deg(v) + |X| + |Y| + 2
        assert_eq!(unfolded.edges.len(), 9 - 4 + 3 + 3 + 2);
        // X = Y = N(v) is always valid
        let nv = g.neighbors(named::S3_V);
        assert!(unfold_vertex(&g, named::S3_V, &nv, &nv).is_ok());
        // an edge inside (X - Y) x (Y - X) is rejected with the pair:
        // X - Y = {b, c}, Y - X = {d, e} and b-d is an edge
        let bad = unfold_vertex(
            &g,
            named::S3_V,
            &[named::S3_B, named::S3_C].into_iter().collect(),
            &[named::S3_D, named::S3_E].into_iter().collect(),
        );
        match bad {
            Err(Error::UnfoldPrecondition { u, v, .. }) => {
                assert_eq!((u.min(v), u.max(v)), (named::S3_B, named::S3_D));
            }
            other => panic!("expected precondition failure, got {other:?}"),
        }
        let alt = named::s3_unfolded_alt();
        assert_eq!(alt.n, 8);
        let minus_z = named::s3_unfolded_minus_z();
        assert_eq!(minus_z.n, 7);
    }

    #[test]
    fn circuit_cone_of_triangle_is_a_ray() {
        let c3 = Graph::new(3, vec![(0, 1), (0, 2), (1, 2)]).unwrap();
        let (vform, hform) = circuit_cone(&c3);
        assert_eq!(vform.rays.len(), 1);
        assert_eq!(vform.rays[0], vec![rat_int(1); 3]);
        assert!(same_point_set(&v_to_h(&vform), &hform));
    }

    #[test]
    fn circuit_cone_forms_agree_on_small_graphs() {
        for g in [
            named::k4(),
            named::k4_minus_edge(),
            Graph::new(4, vec![(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap(),
            Graph::new(5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)]).unwrap(),
        ] {
            let (vform, hform) = circuit_cone(&g);
            assert!(same_point_set(&v_to_h(&vform), &hform), "mismatch on {g:?}");
            assert!(v_included(&vform, &hform));
        }
    }

    #[test]
    fn conservative_cone_is_negated_polar_of_circuit_cone() {
        for g in [named::k4(), named::k4_minus_edge()] {
            let (vform, _) = circuit_cone(&g);
            let circuit_h = v_to_h(&vform);
            let pol = polar(&circuit_h).unwrap();
            // negate the polar: {x : -x in polar}
            let neg = HPolyhedron::new(pol.a.scale(&rat_int(-1)), pol.b.clone());
            let cons = conservative_cone(&g);
            assert!(same_point_set(&neg, &cons), "mismatch on {g:?}");
        }
    }

    #[test]
    fn conservative_cone_k4_face_points() {
        let cons = conservative_cone(&named::k4());
        // the three triangles through vertex 0 give the reference rows
        let m = RatMatrix::from_i64_rows(&[
            &[1, 1, 0, 1, 0, 0],
            &[1, 0, 1, 0, 1, 0],
            &[0, 1, 1, 0, 0, 1],
        ]);
        let zero = vec![Rational::zero(); 3];
        let lattice = face_lattice(&cons).unwrap();
        let face = find_face_by_affine_hull(&lattice, &m, &zero).expect("face exists");
        assert_eq!(face.dim, 3);
        for point in [
            vec![rat_int(0); 6],
            vec![rat_int(-1), rat_int(0), rat_int(0), rat_int(1), rat_int(1), rat_int(0)],
            vec![rat_int(0), rat_int(-1), rat_int(0), rat_int(1), rat_int(0), rat_int(1)],
            vec![rat_int(0), rat_int(0), rat_int(-1), rat_int(0), rat_int(1), rat_int(1)],
        ] {
            assert!(cons.contains(&point));
            assert!(crate::matrix::vec_is_zero(&m.mat_vec(&point).unwrap()));
        }
    }

    // brute-force K4-minor detection: four disjoint connected pieces,
    // pairwise joined by an edge
    fn has_k4_minor(g: &Graph) -> bool {
        let assignments = 5u32.pow(g.n as u32);
        'outer: for code in 0..assignments {
            let mut label = vec![0usize; g.n];
            let mut c = code;
            for slot in label.iter_mut() {
                *slot = (c % 5) as usize;
                c /= 5;
            }
            for class in 1..=4 {
                let members: Vec<usize> = (0..g.n).filter(|&v| label[v] == class).collect();
                if members.is_empty() {
                    continue 'outer;
                }
                // connectivity of the class
                let mut seen = vec![false; g.n];
                seen[members[0]] = true;
                let mut stack = vec![members[0]];
                while let Some(v) = stack.pop() {
                    for &(a, b) in &g.edges {
                        for (x, y) in [(a, b), (b, a)] {
                            if x == v && label[y] == class && !seen[y] {
                                seen[y] = true;
                                stack.push(y);
                            }
                        }
                    }
                }
                if members.iter().any(|&v| !seen[v]) {
                    continue 'outer;
                }
            }
            for c1 in 1..=4 {
                for c2 in c1 + 1..=4 {
                    let joined = g
                        .edges
                        .iter()
                        .any(|&(a, b)| {
                            (label[a] == c1 && label[b] == c2)
                                || (label[a] == c2 && label[b] == c1)
                        });
                    if !joined {
                        continue 'outer;
                    }
                }
            }
            return true;
        }
        false
    }

    #[test]
    fn series_parallel_examples() {
        assert!(!is_series_parallel(&named::k4()));
        assert!(is_series_parallel(&named::k4_minus_edge()));
        let tree = Graph::new(5, vec![(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert!(is_series_parallel(&tree));
        let cycle = Graph::new(5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert!(is_series_parallel(&cycle));
    }

    #[test]
    fn series_parallel_matches_minor_oracle_on_small_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for _ in 0..60 {
            let n = rng.gen_range(3..=5);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.55) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, edges).unwrap();
            assert_eq!(is_series_parallel(&g), !has_k4_minor(&g), "mismatch on {g:?}");
        }
        assert!(has_k4_minor(&named::k4()));
    }

    #[test]
    fn named_instance_data() {
        assert_eq!(named::p5_vertices().vertices.len(), 5);
        let simplex = named::idp_simplex();
        assert_eq!(simplex.rows(), 4);
        assert_eq!(simplex.b, vec![rat_int(0), rat_int(0), rat_int(0), rat_int(2)]);
        assert_eq!(named::s3().n, 6);
    }

    #[test]
    fn covering_minor_monotonicity_of_box_tdi() {
        // minors preserve full box-integrality of covering polyhedra:
        // whenever the original verdict is positive, so is every
        // single-step minor's
        let c = Clutter::from_slices(3, &[&[0, 1], &[1, 2]]).unwrap();
        let base = is_fully_box_integer(&covering_polyhedron(&c)).unwrap();
        if base.is_fully_box_integer {
            for e in 0..c.ground {
                for minor in [c.delete(e).unwrap(), c.contract(e).unwrap()] {
                    if minor.members.is_empty() {
                        continue;
                    }
                    let v = is_fully_box_integer(&covering_polyhedron(&minor)).unwrap();
                    assert!(v.is_fully_box_integer, "minor lost the property: {minor:?}");
                }
            }
        }
        // and the Q6 covering polyhedron itself is refuted
        assert!(!is_box_tdi(&covering_polyhedron(&q6())).unwrap().is_box_tdi);
    }

    #[test]
    fn unfolding_preserves_refutation() {
        let base = stable_set_polytope(&named::s3(), None);
        assert!(!is_box_tdi(&base).unwrap().is_box_tdi);
        let unfolded = stable_set_polytope(&named::s3_unfolded(), None);
        assert!(!is_box_tdi(&unfolded).unwrap().is_box_tdi);
        // the variant unfolding is refuted as well
        let alt = stable_set_polytope(&named::s3_unfolded_alt(), None);
        assert!(!is_box_tdi(&alt).unwrap().is_box_tdi);
    }

    #[test]
    fn k4_circuit_and_conservative_cones_both_refuted() {
        let (vform, hform) = circuit_cone(&named::k4());
        let _ = vform;
        let circuit = crate::certify::cone_box_integer(&hform).unwrap();
        assert!(!circuit.is_box_integer);
        let cons = crate::certify::cone_box_integer(&conservative_cone(&named::k4())).unwrap();
        assert!(!cons.is_box_integer);
        let report = crate::certify::cone_polarity_check(&hform).unwrap();
        assert!(report.agree);
        assert!(!report.cone.is_box_integer && !report.polar.is_box_integer);

        // a single triangle's circuit cone is box-integer
        let c3 = Graph::new(3, vec![(0, 1), (0, 2), (1, 2)]).unwrap();
        let (_, h3) = circuit_cone(&c3);
        assert!(crate::certify::cone_box_integer(&h3).unwrap().is_box_integer);
    }

    #[test]
    fn q6_intersection_solution_scales() {
        // sanity: the fractional point (1/2,...,1/2) lies in the Q6
        // covering polyhedron but is not a vertex
        let p = covering_polyhedron(&q6());
        let half = vec![rat(1, 2); 6];
        assert!(p.contains(&half));
        let v = h_to_v(&p);
        assert!(!v.vertices.contains(&half));
    }
}
