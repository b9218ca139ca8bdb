//! Exact rational scalars plus the extended integers used for box bounds.
//!
//! Every number in this crate is a [`Rational`]: an arbitrary-precision
//! fraction kept in canonical form (coprime numerator/denominator,
//! positive denominator). Zero is `0/1`. Canonicalization is maintained
//! by `num-rational` after every operation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

/// Shorthand rational from machine integers.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

/// Renders `p/q` with the denominator omitted when it is one.
pub fn rational_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` tokens. Returns `None` on malformed input or a
/// zero denominator.
pub fn parse_rational(token: &str) -> Option<Rational> {
    match token.split_once('/') {
        None => token.parse::<BigInt>().ok().map(Rational::from_integer),
        Some((p, q)) => {
            let p: BigInt = p.parse().ok()?;
            let q: BigInt = q.parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
    }
}

pub fn lcm_big(a: &BigInt, b: &BigInt) -> BigInt {
    if a.is_zero() || b.is_zero() {
        BigInt::zero()
    } else {
        a.lcm(b)
    }
}

/// Least common multiple of the denominators of `values`; one for an
/// empty slice.
pub fn denominator_lcm<'a, I: IntoIterator<Item = &'a Rational>>(values: I) -> BigInt {
    let mut l = BigInt::one();
    for v in values {
        l = lcm_big(&l, v.denom());
    }
    l
}

pub fn floor_int(r: &Rational) -> BigInt {
    r.floor().to_integer()
}

pub fn ceil_int(r: &Rational) -> BigInt {
    r.ceil().to_integer()
}

/// Extended gcd: returns `(g, s, t)` with `g = s*a + t*b` and `g >= 0`.
pub fn xgcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = &old_r / &r;
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// One coordinate of an integer box bound: an integer or an infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(BigInt),
    PosInf,
}

impl Bound {
    pub fn finite(n: i64) -> Bound {
        Bound::Finite(BigInt::from(n))
    }

    pub fn as_finite(&self) -> Option<&BigInt> {
        match self {
            Bound::Finite(n) => Some(n),
            _ => None,
        }
    }

    pub fn to_display(&self) -> String {
        match self {
            Bound::NegInf => "-inf".to_string(),
            Bound::PosInf => "+inf".to_string(),
            Bound::Finite(n) => n.to_string(),
        }
    }
}

/// An integer box `{l <= x <= u}` with per-coordinate extended bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntBox {
    pub lower: Vec<Bound>,
    pub upper: Vec<Bound>,
}

impl IntBox {
    /// The all-free box in dimension `n`.
    pub fn free(n: usize) -> IntBox {
        IntBox {
            lower: vec![Bound::NegInf; n],
            upper: vec![Bound::PosInf; n],
        }
    }

    /// The cube `[-radius, radius]^n`.
    pub fn cube(n: usize, radius: i64) -> IntBox {
        IntBox {
            lower: vec![Bound::finite(-radius); n],
            upper: vec![Bound::finite(radius); n],
        }
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    /// Fixes coordinate `i` to the integer `v` (both bounds).
    pub fn fix(&mut self, i: usize, v: BigInt) {
        self.lower[i] = Bound::Finite(v.clone());
        self.upper[i] = Bound::Finite(v);
    }
}
