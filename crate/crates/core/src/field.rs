//! Exact scalar arithmetic over the rationals, prime fields `F_p` and
//! extension fields `F_{p^k}`.
//!
//! Every scalar is stored in a canonical form (reduced fraction, residue in
//! `0..p`, or reduced polynomial residue), so equality of scalars is plain
//! structural equality. No floating point is involved anywhere.

use std::fmt;
use std::sync::Arc;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::FieldError;

/// Supported envelope: construction outside it warns but proceeds.
const ENVELOPE_MAX_CHAR: u64 = 13;
const ENVELOPE_MAX_DEGREE: usize = 4;

#[derive(Debug, PartialEq, Eq)]
struct FieldRepr {
    /// 0 means the rationals.
    characteristic: u64,
    /// 1 for prime fields and the rationals.
    degree: usize,
    /// Monic modulus polynomial, little-endian coefficients, length
    /// `degree + 1`; empty when `degree == 1`.
    modulus: Vec<u64>,
}

/// A handle to an exact coefficient field. Cheap to clone and share.
#[derive(Clone)]
pub struct Field(Arc<FieldRepr>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.characteristic == 0 {
            write!(f, "Q")
        } else if self.0.degree == 1 {
            write!(f, "F_{}", self.0.characteristic)
        } else {
            write!(f, "F_{}^{}", self.0.characteristic, self.0.degree)
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// Dense little-endian polynomial arithmetic over F_p, used for extension
// field residues and the irreducibility check.
mod poly {
    pub fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(&mut out);
        out
    }

    /// Remainder of `a` modulo the monic polynomial `m`.
    pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut r: Vec<u64> = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        while r.len() > dm {
            let lead = *r.last().unwrap();
            let shift = r.len() - 1 - dm;
            for (i, &c) in m.iter().enumerate() {
                let idx = i + shift;
                r[idx] = (r[idx] + (p - 1) * lead % p * c) % p;
            }
            trim(&mut r);
        }
        r
    }

    /// Extended gcd over F_p[x]: returns (g, s) with s*a ≡ g (mod m),
    /// g monic gcd of a and m.
    pub fn half_ext_gcd(a: &[u64], m: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
        let inv_mod_p = |x: u64| -> u64 {
            // p is small and prime; exhaustive search is fine.
            (1..p).find(|&y| (x * y) % p == 1).expect("nonzero residue")
        };
        let mut r0: Vec<u64> = m.to_vec();
        let mut r1: Vec<u64> = a.to_vec();
        trim(&mut r0);
        trim(&mut r1);
        let mut s0: Vec<u64> = Vec::new();
        let mut s1: Vec<u64> = vec![1];
        while !r1.is_empty() {
            // divide r0 by r1
            let mut rem = r0.clone();
            let mut quo: Vec<u64> = vec![0; rem.len().saturating_sub(r1.len()) + 1];
            let lead_inv = inv_mod_p(*r1.last().unwrap());
            while rem.len() >= r1.len() && !rem.is_empty() {
                let c = (*rem.last().unwrap() * lead_inv) % p;
                let shift = rem.len() - r1.len();
                quo[shift] = c;
                for (i, &mc) in r1.iter().enumerate() {
                    rem[i + shift] = (rem[i + shift] + (p - c) % p * mc) % p;
                }
                trim(&mut rem);
            }
            trim(&mut quo);
            let s2_sub = mul(&quo, &s1, p);
            let mut s2 = s0.clone();
            if s2.len() < s2_sub.len() {
                s2.resize(s2_sub.len(), 0);
            }
            for (i, &c) in s2_sub.iter().enumerate() {
                s2[i] = (s2[i] + p - c) % p;
            }
            trim(&mut s2);
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = s2;
        }
        // normalize gcd monic
        if let Some(&lead) = r0.last() {
            let li = inv_mod_p(lead);
            for c in r0.iter_mut() {
                *c = (*c * li) % p;
            }
            for c in s0.iter_mut() {
                *c = (*c * li) % p;
            }
        }
        (r0, s0)
    }

    /// Exhaustive trial division by all monic polynomials of degree up to
    /// deg/2. Feasible for the desk-scale degrees used here.
    pub fn is_irreducible(m: &[u64], p: u64) -> bool {
        let deg = m.len() - 1;
        if deg == 0 {
            return false;
        }
        if deg == 1 {
            return true;
        }
        for d in 1..=deg / 2 {
            // iterate monic polynomials of degree d: d free coefficients
            let count = p.pow(d as u32);
            for code in 0..count {
                let mut cand = Vec::with_capacity(d + 1);
                let mut c = code;
                for _ in 0..d {
                    cand.push(c % p);
                    c /= p;
                }
                cand.push(1);
                if rem(m, &cand, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

impl Field {
    pub fn rationals() -> Field {
        Field(Arc::new(FieldRepr {
            characteristic: 0,
            degree: 1,
            modulus: Vec::new(),
        }))
    }

    pub fn prime(p: u64) -> Result<Field, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if p > ENVELOPE_MAX_CHAR {
            log::warn!("characteristic {p} is outside the supported envelope (p <= {ENVELOPE_MAX_CHAR}); proceeding");
        }
        Ok(Field(Arc::new(FieldRepr {
            characteristic: p,
            degree: 1,
            modulus: Vec::new(),
        })))
    }

    /// Extension field of the stated degree, with the lexicographically
    /// smallest monic irreducible modulus (so the choice is reproducible).
    pub fn extension(p: u64, degree: usize) -> Result<Field, FieldError> {
        if degree == 0 {
            return Err(FieldError::BadModulus("degree must be positive".into()));
        }
        if degree == 1 {
            return Field::prime(p);
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        let count = p.pow(degree as u32);
        for code in 0..count {
            let mut m = Vec::with_capacity(degree + 1);
            let mut c = code;
            for _ in 0..degree {
                m.push(c % p);
                c /= p;
            }
            m.push(1);
            if poly::is_irreducible(&m, p) {
                return Field::with_modulus(p, m);
            }
        }
        unreachable!("an irreducible polynomial of every degree exists over F_p")
    }

    /// Field from an explicit monic modulus polynomial (little-endian
    /// coefficients over F_p). The modulus is checked for irreducibility.
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<Field, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if modulus.len() < 3 {
            return Err(FieldError::BadModulus(
                "modulus must have degree at least 2".into(),
            ));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(FieldError::BadModulus("coefficients must be reduced".into()));
        }
        if *modulus.last().unwrap() != 1 {
            return Err(FieldError::BadModulus("modulus must be monic".into()));
        }
        let degree = modulus.len() - 1;
        if !poly::is_irreducible(&modulus, p) {
            return Err(FieldError::Reducible);
        }
        if p > ENVELOPE_MAX_CHAR || degree > ENVELOPE_MAX_DEGREE {
            log::warn!(
                "field F_{p}^{degree} is outside the supported envelope (p <= {ENVELOPE_MAX_CHAR}, degree <= {ENVELOPE_MAX_DEGREE}); proceeding"
            );
        }
        Ok(Field(Arc::new(FieldRepr {
            characteristic: p,
            degree,
            modulus,
        })))
    }

    pub fn characteristic(&self) -> u64 {
        self.0.characteristic
    }

    /// The characteristic exponent: 1 in characteristic 0, p otherwise.
    pub fn characteristic_exponent(&self) -> u64 {
        if self.0.characteristic == 0 {
            1
        } else {
            self.0.characteristic
        }
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    /// Number of elements, None for the rationals.
    pub fn order(&self) -> Option<u64> {
        if self.0.characteristic == 0 {
            None
        } else {
            Some(self.0.characteristic.pow(self.0.degree as u32))
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_int(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        let value = match self.0.characteristic {
            0 => Value::Rational(BigRational::from_integer(BigInt::from(n))),
            p => {
                let r = n.rem_euclid(p as i64) as u64;
                if self.0.degree == 1 {
                    Value::Residue(r)
                } else {
                    let mut c = vec![0; self.0.degree];
                    c[0] = r;
                    Value::Poly(c)
                }
            }
        };
        Scalar {
            field: self.clone(),
            value,
        }
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Scalar {
        assert!(den != 0, "zero denominator");
        match self.0.characteristic {
            0 => Scalar {
                field: self.clone(),
                value: Value::Rational(BigRational::new(BigInt::from(num), BigInt::from(den))),
            },
            _ => {
                let d = self.from_int(den);
                let inv = d.inverse().expect("denominator is zero in this field");
                &self.from_int(num) * &inv
            }
        }
    }

    /// Finite-field element from its code in `0..order` (base-p digits are
    /// the residue polynomial coefficients). Panics on the rationals.
    pub fn from_code(&self, code: u64) -> Scalar {
        let p = self.0.characteristic;
        assert!(p != 0, "from_code is only defined for finite fields");
        assert!(code < self.order().unwrap(), "code out of range");
        let value = if self.0.degree == 1 {
            Value::Residue(code)
        } else {
            let mut c = code;
            let mut v = Vec::with_capacity(self.0.degree);
            for _ in 0..self.0.degree {
                v.push(c % p);
                c /= p;
            }
            Value::Poly(v)
        };
        Scalar {
            field: self.clone(),
            value,
        }
    }

    pub fn code(&self, s: &Scalar) -> u64 {
        assert!(s.field == *self, "scalar from a different field");
        match &s.value {
            Value::Residue(r) => *r,
            Value::Poly(c) => {
                let p = self.0.characteristic;
                c.iter().rev().fold(0, |acc, &d| acc * p + d)
            }
            Value::Rational(_) => panic!("code is only defined for finite fields"),
        }
    }

    /// All elements of a finite field, in code order.
    pub fn elements(&self) -> impl Iterator<Item = Scalar> + '_ {
        let n = self.order().expect("elements() requires a finite field");
        (0..n).map(move |c| self.from_code(c))
    }

    fn generator_value(&self) -> Option<&[u64]> {
        if self.0.degree > 1 {
            Some(&self.0.modulus)
        } else {
            None
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Value {
    Rational(BigRational),
    Residue(u64),
    Poly(Vec<u64>),
}

/// An element of a [`Field`], stored canonically so equality is structural.
#[derive(Clone, PartialEq, Eq)]
pub struct Scalar {
    field: Field,
    value: Value,
}

impl Scalar {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Rational(r) => r.is_zero(),
            Value::Residue(r) => *r == 0,
            Value::Poly(c) => c.iter().all(|&x| x == 0),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.value {
            Value::Rational(r) => r.is_one(),
            Value::Residue(r) => *r == 1,
            Value::Poly(c) => c[0] == 1 && c[1..].iter().all(|&x| x == 0),
        }
    }

    fn assert_same_field(&self, other: &Scalar) {
        assert!(
            self.field == other.field,
            "scalars from different fields: {} vs {}",
            self.field,
            other.field
        );
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.assert_same_field(other);
        let p = self.field.0.characteristic;
        let value = match (&self.value, &other.value) {
            (Value::Rational(a), Value::Rational(b)) => Value::Rational(a + b),
            (Value::Residue(a), Value::Residue(b)) => Value::Residue((a + b) % p),
            (Value::Poly(a), Value::Poly(b)) => {
                Value::Poly(a.iter().zip(b).map(|(x, y)| (x + y) % p).collect())
            }
            _ => unreachable!(),
        };
        Scalar {
            field: self.field.clone(),
            value,
        }
    }

    pub fn neg(&self) -> Scalar {
        let p = self.field.0.characteristic;
        let value = match &self.value {
            Value::Rational(a) => Value::Rational(-a),
            Value::Residue(a) => Value::Residue((p - a) % p),
            Value::Poly(a) => Value::Poly(a.iter().map(|&x| (p - x) % p).collect()),
        };
        Scalar {
            field: self.field.clone(),
            value,
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.assert_same_field(other);
        let p = self.field.0.characteristic;
        let value = match (&self.value, &other.value) {
            (Value::Rational(a), Value::Rational(b)) => Value::Rational(a * b),
            (Value::Residue(a), Value::Residue(b)) => Value::Residue((a * b) % p),
            (Value::Poly(a), Value::Poly(b)) => {
                let m = self.field.generator_value().unwrap();
                let prod = poly::mul(a, b, p);
                let mut red = poly::rem(&prod, m, p);
                red.resize(self.field.0.degree, 0);
                Value::Poly(red)
            }
            _ => unreachable!(),
        };
        Scalar {
            field: self.field.clone(),
            value,
        }
    }

    /// Multiplicative inverse; `ZeroInverse` when the element is zero.
    pub fn inverse(&self) -> Result<Scalar, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        let p = self.field.0.characteristic;
        let value = match &self.value {
            Value::Rational(a) => Value::Rational(a.recip()),
            Value::Residue(a) => {
                Value::Residue((1..p).find(|&y| (a * y) % p == 1).expect("prime modulus"))
            }
            Value::Poly(a) => {
                let m = self.field.generator_value().unwrap();
                let (g, s) = poly::half_ext_gcd(a, m, p);
                debug_assert_eq!(g, vec![1], "modulus is irreducible");
                let mut inv = s;
                inv.resize(self.field.0.degree, 0);
                Value::Poly(inv)
            }
        };
        Ok(Scalar {
            field: self.field.clone(),
            value,
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        Ok(self.mul(&other.inverse()?))
    }

    /// The underlying reduced fraction, for rational scalars only.
    pub fn rational(&self) -> Option<&BigRational> {
        match &self.value {
            Value::Rational(r) => Some(r),
            _ => None,
        }
    }

    /// Exact square-root test (`Some(r)` with `r*r == self` when the scalar
    /// is a perfect square); currently for rational scalars.
    pub fn rational_sqrt(&self) -> Option<Scalar> {
        use num::integer::Roots;
        let r = self.rational()?;
        if r.is_negative() {
            return None;
        }
        let ns = r.numer().sqrt();
        let ds = r.denom().sqrt();
        if &(&ns * &ns) == r.numer() && &(&ds * &ds) == r.denom() {
            Some(Scalar {
                field: self.field.clone(),
                value: Value::Rational(BigRational::new(ns, ds)),
            })
        } else {
            None
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Value::Residue(r) => write!(f, "{r}"),
            Value::Poly(c) => {
                let mut parts = Vec::new();
                for (i, &coef) in c.iter().enumerate().rev() {
                    if coef == 0 {
                        continue;
                    }
                    let part = match (i, coef) {
                        (0, _) => format!("{coef}"),
                        (1, 1) => "x".to_string(),
                        (1, _) => format!("{coef}x"),
                        (_, 1) => format!("x^{i}"),
                        (_, _) => format!("{coef}x^{i}"),
                    };
                    parts.push(part);
                }
                if parts.is_empty() {
                    write!(f, "0")
                } else {
                    write!(f, "{}", parts.join("+"))
                }
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar::$method(self, rhs)
            }
        }
    };
}
scalar_binop!(Add, add);
scalar_binop!(Sub, sub);
scalar_binop!(Mul, mul);

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_in_f3() {
        let f3 = Field::prime(3).unwrap();
        let two = f3.from_int(2);
        assert_eq!(two.inverse().unwrap(), two);
    }

    #[test]
    fn inverse_of_rational() {
        let q = Field::rationals();
        let a = q.from_ratio(3, 4);
        assert_eq!(a.inverse().unwrap(), q.from_ratio(4, 3));
    }

    #[test]
    fn inverse_in_f4() {
        // F_4 = F_2[x]/(x^2+x+1); the inverse of x is x+1.
        let f4 = Field::with_modulus(2, vec![1, 1, 1]).unwrap();
        let x = f4.from_code(2);
        let x1 = f4.from_code(3);
        assert_eq!(x.inverse().unwrap(), x1);
        assert!(x.mul(&x1).is_one());
        // cross-check against the exhaustive multiplication table
        for a in f4.elements() {
            if a.is_zero() {
                assert!(a.inverse().is_err());
                continue;
            }
            let mut found = None;
            for b in f4.elements() {
                if a.mul(&b).is_one() {
                    found = Some(b);
                }
            }
            assert_eq!(found.unwrap(), a.inverse().unwrap());
        }
    }

    #[test]
    fn zero_has_no_inverse() {
        let f5 = Field::prime(5).unwrap();
        assert!(matches!(
            f5.zero().inverse(),
            Err(FieldError::ZeroInverse)
        ));
    }

    #[test]
    fn extension_rejects_reducible_modulus() {
        // x^2 + 1 = (x+1)^2 over F_2
        assert!(matches!(
            Field::with_modulus(2, vec![1, 0, 1]),
            Err(FieldError::Reducible)
        ));
    }

    #[test]
    fn composite_characteristic_rejected() {
        assert!(matches!(Field::prime(6), Err(FieldError::NotPrime(6))));
    }

    #[test]
    fn f9_and_f8_arithmetic() {
        for (p, k) in [(3u64, 2usize), (2, 3)] {
            let f = Field::extension(p, k).unwrap();
            let n = f.order().unwrap();
            // every nonzero element has an inverse that multiplies to one
            for c in 1..n {
                let a = f.from_code(c);
                let inv = a.inverse().unwrap();
                assert!(a.mul(&inv).is_one(), "{a} * {inv} != 1 in {f}");
            }
            // codes round-trip
            for c in 0..n {
                assert_eq!(f.code(&f.from_code(c)), c);
            }
        }
    }
}
