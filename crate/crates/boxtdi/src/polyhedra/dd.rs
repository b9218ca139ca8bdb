//! Incremental double description for cones `{x : Rx <= 0}`, over exact
//! integers.
//!
//! The cone starts as all of space (lineality basis = identity, no rays)
//! and constraints are added one at a time. Adding row `a`:
//!
//! - If some lineality vector `w` has `a.w != 0`, `w` (signed so that
//!   `a.w < 0`) leaves the lineality part and becomes a ray; every other
//!   lineality vector and every ray is combined with `w` to land on
//!   `{a.x = 0}`. The constraint is then satisfied by construction.
//! - Otherwise the classic double-description step runs on the rays:
//!   keep the non-violating rays, and for every adjacent pair (one
//!   strictly satisfying, one violating) emit the nonnegative
//!   combination lying on the hyperplane. Adjacency uses the standard
//!   combinatorial test on zero sets: a pair is adjacent when no third
//!   ray's zero set contains the intersection of theirs.
//!
//! Rays and lineality vectors are kept as primitive integer vectors;
//! input rows are scaled to primitive integer form up front, so all the
//! arithmetic stays in `BigInt`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::RatVector;
use crate::rat::Rational;

#[derive(Debug, Clone)]
pub(crate) struct ConeGenerators {
    pub rays: Vec<Vec<BigInt>>,
    pub lineality: Vec<Vec<BigInt>>,
}

#[derive(Clone)]
struct Ray {
    v: Vec<BigInt>,
    /// Indices of processed constraints this ray satisfies with equality.
    zero_set: u128,
}

fn dot_big(a: &[BigInt], b: &[BigInt]) -> BigInt {
    let mut acc = BigInt::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let mut g = BigInt::zero();
    for x in &v {
        g = g.gcd(x);
    }
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
    v
}

/// `|sw| * r + sr * w`, the combination of ray `r` (coefficient
/// positive) with the consumed lineality vector `w` where `sw = a.w < 0`,
/// landing on `{a.x = 0}`.
fn combine_onto_hyperplane(r: &[BigInt], sr: &BigInt, w: &[BigInt], sw: &BigInt) -> Vec<BigInt> {
    let c = sw.abs();
    primitive(
        r.iter()
            .zip(w)
            .map(|(rv, wv)| &c * rv + sr * wv)
            .collect(),
    )
}

/// Generators of `{x : row.x <= 0 for all rows}`. Rows are rational;
/// at most 128 of them (zero-set bookkeeping uses a u128 bitset).
pub(crate) fn cone_generators(rows: &[RatVector]) -> ConeGenerators {
    assert!(rows.len() <= 128, "double description limited to 128 rows");
    let dim = rows.first().map_or(0, |r| r.len());
    let int_rows: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| crate::matrix::primitive_integer_vector(r))
        .collect();

    let mut lineality: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| if i == j { BigInt::from(1) } else { BigInt::zero() })
                .collect()
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (k, a) in int_rows.iter().enumerate() {
        let bit = 1u128 << k;
        if a.iter().all(|x| x.is_zero()) {
            for r in rays.iter_mut() {
                r.zero_set |= bit;
            }
            continue;
        }
        let lin_hit = lineality
            .iter()
            .position(|v| !dot_big(a, v).is_zero());
        if let Some(pos) = lin_hit {
            let mut w = lineality.swap_remove(pos);
            let mut sw = dot_big(a, &w);
            if sw.is_positive() {
                for x in w.iter_mut() {
                    *x = -x.clone();
                }
                sw = -sw;
            }
            for v in lineality.iter_mut() {
                let sv = dot_big(a, v);
                if !sv.is_zero() {
                    *v = combine_onto_hyperplane(v, &sv, &w, &sw);
                }
            }
            for r in rays.iter_mut() {
                let sr = dot_big(a, &r.v);
                if !sr.is_zero() {
                    r.v = combine_onto_hyperplane(&r.v, &sr, &w, &sw);
                }
                r.zero_set |= bit;
            }
            // w itself satisfies a.w < 0 strictly; all previous
            // constraints hold with equality on lineality vectors.
            let prev_mask = bit - 1;
            rays.push(Ray { v: primitive(w), zero_set: prev_mask });
            continue;
        }

        // pointed step
        let signs: Vec<BigInt> = rays.iter().map(|r| dot_big(a, &r.v)).collect();
        let any_out = signs.iter().any(|s| s.is_positive());
        if !any_out {
            for (r, s) in rays.iter_mut().zip(&signs) {
                if s.is_zero() {
                    r.zero_set |= bit;
                }
            }
            continue;
        }
        let mut next: Vec<Ray> = Vec::new();
        for (r, s) in rays.iter().zip(&signs) {
            if s.is_negative() {
                next.push(r.clone());
            } else if s.is_zero() {
                let mut kept = r.clone();
                kept.zero_set |= bit;
                next.push(kept);
            }
        }
        for (i, ri) in rays.iter().enumerate() {
            if !signs[i].is_negative() {
                continue;
            }
            for (j, rj) in rays.iter().enumerate() {
                if !signs[j].is_positive() {
                    continue;
                }
                let common = ri.zero_set & rj.zero_set;
                let adjacent = !rays.iter().enumerate().any(|(t, rt)| {
                    t != i && t != j && (rt.zero_set & common) == common
                });
                if !adjacent {
                    continue;
                }
                // s_j * r_i - s_i * r_j with both coefficients positive
                let v = primitive(
                    ri.v
                        .iter()
                        .zip(&rj.v)
                        .map(|(x, y)| &signs[j] * x - &signs[i] * y)
                        .collect(),
                );
                next.push(Ray { v, zero_set: common | bit });
            }
        }
        // dedup (possible in degenerate configurations)
        let mut seen: Vec<Vec<BigInt>> = Vec::new();
        rays = next
            .into_iter()
            .filter(|r| {
                if seen.contains(&r.v) {
                    false
                } else {
                    seen.push(r.v.clone());
                    true
                }
            })
            .collect();
    }

    ConeGenerators {
        rays: rays.into_iter().map(|r| r.v).collect(),
        lineality,
    }
}

pub(crate) fn bigints_to_rationals(v: &[BigInt]) -> RatVector {
    v.iter().map(|x| Rational::from_integer(x.clone())).collect()
}
