//! Exact arithmetic in GF(p) and GF(p²).
//!
//! A [`Field`] is a small `Copy` handle: the characteristic and, for the
//! quadratic extension, the monic modulus `t² + c1·t + c0`. Elements carry
//! their field handle so the usual operator traits can be implemented on them.
//! Elements of GF(p²) are stored as `a + b·t` with `a, b ∈ [0, p)`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::FieldError;

/// Monic quadratic `t² + c1·t + c0` over GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadraticModulus {
    pub c0: u64,
    pub c1: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Field {
    p: u64,
    modulus: Option<QuadraticModulus>,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// Builds GF(p), or GF(p²) when a modulus is supplied.
    pub fn new(p: u64, modulus: Option<QuadraticModulus>) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        // Primes used here are tiny; keep products inside u64.
        if p >= 1 << 31 {
            return Err(FieldError::CharacteristicTooLarge(p));
        }
        let modulus = match modulus {
            None => None,
            Some(m) => {
                let m = QuadraticModulus {
                    c0: m.c0 % p,
                    c1: m.c1 % p,
                };
                // A quadratic is irreducible iff it has no root.
                if (0..p).any(|x| (x * x + m.c1 * x + m.c0).is_multiple_of(p)) {
                    return Err(FieldError::ReducibleModulus {
                        p,
                        c0: m.c0,
                        c1: m.c1,
                    });
                }
                Some(m)
            }
        };
        Ok(Self { p, modulus })
    }

    pub fn prime(p: u64) -> Result<Self, FieldError> {
        Self::new(p, None)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn extension_degree(&self) -> u32 {
        if self.modulus.is_some() {
            2
        } else {
            1
        }
    }

    pub fn modulus(&self) -> Option<QuadraticModulus> {
        self.modulus
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.extension_degree())
    }

    pub fn zero(&self) -> Fe {
        Fe {
            field: *self,
            a: 0,
            b: 0,
        }
    }

    pub fn one(&self) -> Fe {
        self.int(1)
    }

    /// Image of an integer under `Z → GF(p)`.
    pub fn int(&self, n: i64) -> Fe {
        let p = self.p as i64;
        Fe {
            field: *self,
            a: n.rem_euclid(p) as u64,
            b: 0,
        }
    }

    /// `a + b·t`; only meaningful as `b ≠ 0` over GF(p²).
    pub fn element(&self, a: u64, b: u64) -> Result<Fe, FieldError> {
        if !b.is_multiple_of(self.p) && self.modulus.is_none() {
            return Err(FieldError::NotInField);
        }
        Ok(Fe {
            field: *self,
            a: a % self.p,
            b: b % self.p,
        })
    }

    /// The generator `t` of GF(p²) over GF(p).
    pub fn gen(&self) -> Option<Fe> {
        self.modulus.map(|_| Fe {
            field: *self,
            a: 0,
            b: 1,
        })
    }

    /// All elements, in the order `0, 1, …, p−1, t, 1+t, …`.
    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        let field = *self;
        let p = self.p;
        let bs = if self.modulus.is_some() { p } else { 1 };
        (0..bs).flat_map(move |b| (0..p).map(move |a| Fe { field, a, b }))
    }

    /// Nonzero elements in the same order as [`Field::elements`], starting at 1.
    pub fn nonzero_elements(&self) -> impl Iterator<Item = Fe> {
        self.elements().filter(|x| !x.is_zero())
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Fe {
        let a = rng.gen_range(0..self.p);
        let b = if self.modulus.is_some() {
            rng.gen_range(0..self.p)
        } else {
            0
        };
        Fe {
            field: *self,
            a,
            b,
        }
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Fe {
        loop {
            let x = self.random(rng);
            if !x.is_zero() {
                return x;
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.modulus {
            None => write!(f, "GF({})", self.p),
            Some(m) => write!(f, "GF({}^2) = GF({})[t]/(t^2+{}t+{})", self.p, self.p, m.c1, m.c0),
        }
    }
}

/// A field element in canonical form.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fe {
    field: Field,
    a: u64,
    b: u64,
}

impl Fe {
    pub fn field(&self) -> Field {
        self.field
    }

    /// Coordinates `(a, b)` of `a + b·t`.
    pub fn coords(&self) -> (u64, u64) {
        (self.a, self.b)
    }

    /// The residue, when the element lies in the prime field.
    pub fn as_prime(&self) -> Option<u64> {
        (self.b == 0).then_some(self.a)
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn is_one(&self) -> bool {
        self.a == 1 && self.b == 0
    }

    pub fn pow(self, mut n: u64) -> Fe {
        let mut base = self;
        let mut acc = self.field.one();
        while n > 0 {
            if n & 1 == 1 {
                acc *= base;
            }
            base *= base;
            n >>= 1;
        }
        acc
    }

    /// `x ↦ x^p`.
    pub fn frobenius(self) -> Fe {
        self.pow(self.field.p)
    }

    pub fn inv(self) -> Result<Fe, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        // x^(q-2) = x^(-1) in a field of order q.
        Ok(self.pow(self.field.order() - 2))
    }

    pub fn div(self, rhs: Fe) -> Result<Fe, FieldError> {
        Ok(self * rhs.inv()?)
    }

    #[inline]
    fn check(&self, rhs: &Fe) {
        debug_assert_eq!(self.field, rhs.field, "mixed fields");
    }
}

impl fmt::Debug for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "t"),
            (0, b) => write!(f, "{b}t"),
            (a, 1) => write!(f, "{a}+t"),
            (a, b) => write!(f, "{a}+{b}t"),
        }
    }
}

impl Add for Fe {
    type Output = Fe;
    #[inline]
    fn add(self, rhs: Fe) -> Fe {
        self.check(&rhs);
        let p = self.field.p;
        Fe {
            field: self.field,
            a: (self.a + rhs.a) % p,
            b: (self.b + rhs.b) % p,
        }
    }
}

impl Neg for Fe {
    type Output = Fe;
    #[inline]
    fn neg(self) -> Fe {
        let p = self.field.p;
        Fe {
            field: self.field,
            a: (p - self.a) % p,
            b: (p - self.b) % p,
        }
    }
}

impl Sub for Fe {
    type Output = Fe;
    #[inline]
    fn sub(self, rhs: Fe) -> Fe {
        self + (-rhs)
    }
}

impl Mul for Fe {
    type Output = Fe;
    #[inline]
    fn mul(self, rhs: Fe) -> Fe {
        self.check(&rhs);
        let p = self.field.p;
        match self.field.modulus {
            None => Fe {
                field: self.field,
                a: self.a * rhs.a % p,
                b: 0,
            },
            Some(m) => {
                // (a + bt)(c + dt) = ac + (ad + bc)t + bd·t², with t² = −c1·t − c0.
                let ac = self.a * rhs.a % p;
                let mid = (self.a * rhs.b + self.b * rhs.a) % p;
                let bd = self.b * rhs.b % p;
                let a = (ac + (p - m.c0) * bd) % p;
                let b = (mid + (p - m.c1) * bd) % p;
                Fe {
                    field: self.field,
                    a,
                    b,
                }
            }
        }
    }
}

impl AddAssign for Fe {
    fn add_assign(&mut self, rhs: Fe) {
        *self = *self + rhs;
    }
}

impl SubAssign for Fe {
    fn sub_assign(&mut self, rhs: Fe) {
        *self = *self - rhs;
    }
}

impl MulAssign for Fe {
    fn mul_assign(&mut self, rhs: Fe) {
        *self = *self * rhs;
    }
}

/// The fraction `n/d` with the smallest `|n| + d` that equals `x`, for `x` in
/// the prime field. Ties prefer a positive numerator, then a smaller
/// denominator. Used for printing coefficients such as `1/2`.
pub fn small_fraction(x: Fe) -> Option<(i64, u64)> {
    let p = x.field().characteristic();
    let x = x.as_prime()?;
    if x == 0 {
        return Some((0, 1));
    }
    let mut best: Option<(u64, bool, u64, i64)> = None;
    for d in 1..p {
        let n = x * d % p;
        for num in [n as i64, n as i64 - p as i64] {
            let key = (num.unsigned_abs() + d, num < 0, d, num);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
    }
    best.map(|(_, _, d, n)| (n, d))
}

/// Parses `a`, `bt`, `a+bt` (also `t`, `a+t`) as an element of `field`.
pub fn parse_element(field: &Field, s: &str) -> Result<Fe, FieldError> {
    let s = s.trim();
    let bad = || FieldError::Parse(s.to_string());
    let parse_int = |x: &str| -> Result<i64, FieldError> { x.trim().parse::<i64>().map_err(|_| bad()) };
    let (a_part, t_part) = match s.find('t') {
        None => (Some(s), None),
        Some(_) => {
            let body = s.strip_suffix('t').ok_or_else(bad)?;
            match body.rfind('+') {
                Some(idx) if idx > 0 => (Some(&body[..idx]), Some(&body[idx + 1..])),
                _ => (None, Some(body)),
            }
        }
    };
    let a = match a_part {
        Some(x) => parse_int(x)?,
        None => 0,
    };
    let b = match t_part {
        None => 0,
        Some("") | Some("+") => 1,
        Some("-") => -1,
        Some(x) => parse_int(x)?,
    };
    let p = field.characteristic() as i64;
    field.element(a.rem_euclid(p) as u64, b.rem_euclid(p) as u64)
}
