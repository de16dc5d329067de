//! Exact scalars: elements of cyclotomic fields `Q(ζ_N)` and polynomials in the
//! central parameter `F`.
//!
//! A [`Cyclotomic`] stores its coefficient vector in the power basis
//! `1, ζ, ..., ζ^{φ(N)-1}` reduced modulo the `N`-th cyclotomic polynomial, so
//! equality of canonical vectors is equality of field elements. Elements whose
//! value is rational are always stored with order 1.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::ScalarError;

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn poly_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients (lowest degree first) of the `n`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<i64>> {
    assert!(n >= 1, "cyclotomic order must be positive");
    if let Some(p) = poly_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by every Φ_d with d | n, d < n.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d != 0 {
            continue;
        }
        let den = cyclotomic_polynomial(d);
        num = div_monic_exact(&num, &den);
    }
    let p = Arc::new(num);
    poly_cache().lock().unwrap().insert(n, p.clone());
    p
}

fn div_monic_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dn];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dn];
        quot[k] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[k + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Euler's totient, i.e. the degree of `Q(ζ_n)` over `Q`.
pub fn totient(n: u32) -> usize {
    cyclotomic_polynomial(n).len() - 1
}

fn trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Reduces a coefficient vector modulo `Φ_n` in place.
fn reduce_mod(mut v: Vec<Rational>, n: u32) -> Vec<Rational> {
    let phi = cyclotomic_polynomial(n);
    let deg = phi.len() - 1;
    for k in (deg..v.len()).rev() {
        if v[k].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut v[k], Rational::zero());
        for (j, &pj) in phi.iter().enumerate().take(deg) {
            if pj != 0 {
                let t = &c * rat(pj);
                v[k - deg + j] -= t;
            }
        }
    }
    v.truncate(deg.max(1));
    trim(&mut v);
    v
}

/// An exact element of `Q(ζ_N)`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    fn canonical(order: u32, coeffs: Vec<Rational>) -> Self {
        let mut coeffs = reduce_mod(coeffs, order);
        trim(&mut coeffs);
        if coeffs.len() <= 1 {
            Cyclotomic { order: 1, coeffs }
        } else {
            Cyclotomic { order, coeffs }
        }
    }

    pub fn zero() -> Self {
        Cyclotomic { order: 1, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    pub fn from_rational(q: Rational) -> Self {
        if q.is_zero() {
            Self::zero()
        } else {
            Cyclotomic { order: 1, coeffs: vec![q] }
        }
    }

    /// Builds `Σ c_k ζ_N^k` from an arbitrary-length coefficient list.
    pub fn from_coeffs(order: u32, coeffs: Vec<Rational>) -> Self {
        assert!(order >= 1);
        Self::canonical(order, coeffs)
    }

    /// `ζ_N^k` in canonical form.
    pub fn root_of_unity(k: i64, order: u32) -> Self {
        assert!(order >= 1, "root_of_unity needs N >= 1");
        let e = k.rem_euclid(order as i64) as usize;
        let mut v = vec![Rational::zero(); e + 1];
        v[e] = Rational::one();
        Self::canonical(order, v)
    }

    /// Order `N` of the field this element is stored in (1 for rationals).
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Canonical coefficients on `1, ζ_N, ζ_N^2, ...`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.order == 1 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.order == 1
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.order == 1 {
            Some(self.coeffs.first().cloned().unwrap_or_else(Rational::zero))
        } else {
            None
        }
    }

    /// Re-expresses the element in `Q(ζ_target)`; `target` must be a multiple
    /// of the current order.
    fn lifted_coeffs(&self, target: u32) -> Vec<Rational> {
        if self.order == target {
            return self.coeffs.clone();
        }
        debug_assert_eq!(target % self.order, 0);
        let step = (target / self.order) as usize;
        let mut v = vec![Rational::zero(); (self.coeffs.len().max(1) - 1) * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            v[k * step] = c.clone();
        }
        reduce_mod(v, target)
    }

    fn common_order(&self, other: &Self) -> u32 {
        self.order.lcm(&other.order)
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.order == 1 {
            return Ok(Self::from_rational(self.coeffs[0].recip()));
        }
        let modulus: Vec<Rational> = cyclotomic_polynomial(self.order).iter().map(|&c| rat(c)).collect();
        let u = poly_inverse_mod(&self.coeffs, &modulus).ok_or(ScalarError::DivisionByZero)?;
        Ok(Self::canonical(self.order, u))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Parses the textual form produced by `Display`, e.g. `1/2 - 3*z^1 + z^2`.
    /// `z` denotes `ζ_order`.
    pub fn parse(text: &str, order: u32) -> Result<Self, ScalarError> {
        let err = |msg: &str| ScalarError::Parse(format!("{msg} in `{text}`"));
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(err("empty literal"));
        }
        let mut acc = Self::zero();
        let mut rest = cleaned.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let mut sign = 1i64;
            if let Some(r) = rest.strip_prefix('+') {
                rest = r;
            } else if let Some(r) = rest.strip_prefix('-') {
                sign = -1;
                rest = r;
            } else if !first {
                return Err(err("expected `+` or `-`"));
            }
            first = false;
            let end = rest[1.min(rest.len())..]
                .find(['+', '-'])
                .map(|p| p + 1)
                .unwrap_or(rest.len());
            let term = &rest[..end];
            rest = &rest[end..];
            let (coef_txt, pow_txt) = match term.find('z') {
                Some(p) => (term[..p].trim_end_matches('*'), Some(&term[p + 1..])),
                None => (term, None),
            };
            let coef = if coef_txt.is_empty() {
                Rational::one()
            } else {
                parse_rational(coef_txt).ok_or_else(|| err("bad rational coefficient"))?
            };
            let exp = match pow_txt {
                None => 0,
                Some("") => 1,
                Some(p) => p
                    .strip_prefix('^')
                    .and_then(|e| e.parse::<i64>().ok())
                    .ok_or_else(|| err("bad exponent"))?,
            };
            if exp != 0 && order == 1 && pow_txt.is_some() {
                return Err(err("`z` used with order 1"));
            }
            let term_val = &Self::root_of_unity(exp, order.max(1)) * &Self::from_rational(coef * rat(sign));
            acc += &term_val;
        }
        Ok(acc)
    }
}

pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => text.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            if k == 0 {
                write!(f, "{}", fmt_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "z^{k}")?;
            } else {
                write!(f, "{}*z^{k}", fmt_rational(&mag))?;
            }
        }
        Ok(())
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let n = self.common_order(other);
        self.lifted_coeffs(n) == other.lifted_coeffs(n)
    }
}

impl Eq for Cyclotomic {}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for Cyclotomic {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

fn add_vecs(a: &[Rational], b: &[Rational], negate_b: bool) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let x = a.get(k).cloned().unwrap_or_else(Rational::zero);
        let y = b.get(k);
        out.push(match (y, negate_b) {
            (None, _) => x,
            (Some(y), false) => x + y,
            (Some(y), true) => x - y,
        });
    }
    out
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        let n = self.common_order(rhs);
        let v = add_vecs(&self.lifted_coeffs(n), &rhs.lifted_coeffs(n), false);
        Cyclotomic::canonical(n, v)
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        if rhs.is_zero() {
            return self.clone();
        }
        let n = self.common_order(rhs);
        let v = add_vecs(&self.lifted_coeffs(n), &rhs.lifted_coeffs(n), true);
        Cyclotomic::canonical(n, v)
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.is_zero() || rhs.is_zero() {
            return Cyclotomic::zero();
        }
        if self.order == 1 && rhs.order == 1 {
            return Cyclotomic::from_rational(&self.coeffs[0] * &rhs.coeffs[0]);
        }
        if self.order == 1 || rhs.order == 1 {
            let (q, x) = if self.order == 1 { (&self.coeffs[0], rhs) } else { (&rhs.coeffs[0], self) };
            return Cyclotomic { order: x.order, coeffs: x.coeffs.iter().map(|c| c * q).collect() };
        }
        let n = self.common_order(rhs);
        let a = self.lifted_coeffs(n);
        let b = rhs.lifted_coeffs(n);
        let mut prod = vec![Rational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        Cyclotomic::canonical(n, prod)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        if rhs.is_zero() {
            return;
        }
        if self.order == 1 && rhs.order == 1 {
            let s = self.coeffs.first().cloned().unwrap_or_else(Rational::zero) + &rhs.coeffs[0];
            *self = Cyclotomic::from_rational(s);
            return;
        }
        *self = &*self + rhs;
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Cyclotomic> for Cyclotomic {
    fn mul_assign(&mut self, rhs: &Cyclotomic) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        let mut acc = Cyclotomic::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

/// Exact quotient and remainder of univariate polynomials over `Q`.
fn poly_divrem(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = num.to_vec();
    trim(&mut rem);
    let mut den = den.to_vec();
    trim(&mut den);
    let dn = den.len() - 1;
    let lead = den[dn].clone();
    if rem.len() < den.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - dn];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dn] / &lead;
        if !c.is_zero() {
            for (j, dj) in den.iter().enumerate() {
                rem[k + j] -= &c * dj;
            }
        }
        quot[k] = c;
    }
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Inverse of `a` modulo `m` via the extended Euclidean algorithm.
fn poly_inverse_mod(a: &[Rational], m: &[Rational]) -> Option<Vec<Rational>> {
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    trim(&mut r1);
    let (mut s0, mut s1): (Vec<Rational>, Vec<Rational>) = (Vec::new(), vec![Rational::one()]);
    while !r1.is_empty() {
        let (q, r) = poly_divrem(&r0, &r1);
        let s2 = add_vecs(&s0, &poly_mul(&q, &s1), true);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    // r0 is the gcd; it must be a nonzero constant.
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].clone();
    let mut inv: Vec<Rational> = s0.into_iter().map(|x| x / &c).collect();
    trim(&mut inv);
    Some(inv)
}

/// A polynomial in the central indeterminate `F` with rational coefficients.
///
/// Every structure constant of the quotient of the free algebra by the
/// quadratic relations and `z = F` is such a polynomial of degree at most 3.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FPoly {
    coeffs: Vec<Rational>,
}

impl FPoly {
    pub fn zero() -> Self {
        FPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c · F^d`.
    pub fn monomial(c: Rational, d: usize) -> Self {
        let mut v = vec![Rational::zero(); d + 1];
        v[d] = c;
        Self::from_coeffs(v)
    }

    /// The indeterminate `F` itself.
    pub fn f() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        trim(&mut coeffs);
        FPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The constant value if the polynomial has degree 0.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        FPoly { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Horner evaluation at an exact scalar.
    pub fn eval(&self, value: &Cyclotomic) -> Cyclotomic {
        let mut acc = Cyclotomic::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * value) + &Cyclotomic::from_rational(c.clone());
        }
        acc
    }

    /// Evaluation at a rational value, staying in `Q`.
    pub fn eval_rational(&self, value: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * value + c;
        }
        acc
    }
}

/// Exact Horner evaluation of `p` at `value`.
pub fn fpoly_eval(p: &FPoly, value: &Cyclotomic) -> Cyclotomic {
    p.eval(value)
}

impl fmt::Display for FPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match d {
                0 => write!(f, "{}", fmt_rational(&mag))?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}*", fmt_rational(&mag))?;
                    }
                    if d == 1 {
                        write!(f, "F")?
                    } else {
                        write!(f, "F^{d}")?
                    }
                }
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a FPoly> for &'a FPoly {
    type Output = FPoly;
    fn add(self, rhs: &FPoly) -> FPoly {
        FPoly::from_coeffs(add_vecs(&self.coeffs, &rhs.coeffs, false))
    }
}

impl<'a> Sub<&'a FPoly> for &'a FPoly {
    type Output = FPoly;
    fn sub(self, rhs: &FPoly) -> FPoly {
        FPoly::from_coeffs(add_vecs(&self.coeffs, &rhs.coeffs, true))
    }
}

impl<'a> Mul<&'a FPoly> for &'a FPoly {
    type Output = FPoly;
    fn mul(self, rhs: &FPoly) -> FPoly {
        FPoly::from_coeffs(poly_mul(&self.coeffs, &rhs.coeffs))
    }
}

impl Neg for &FPoly {
    type Output = FPoly;
    fn neg(self) -> FPoly {
        FPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl AddAssign<&FPoly> for FPoly {
    fn add_assign(&mut self, rhs: &FPoly) {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        self.coeffs.resize(n, Rational::zero());
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        trim(&mut self.coeffs);
    }
}

impl SubAssign<&FPoly> for FPoly {
    fn sub_assign(&mut self, rhs: &FPoly) {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        self.coeffs.resize(n, Rational::zero());
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        trim(&mut self.coeffs);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(k: i64, n: u32) -> Cyclotomic {
        Cyclotomic::root_of_unity(k, n)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(totient(24), 8);
    }

    #[test]
    fn zeta4_squared_is_minus_one() {
        assert_eq!(&z(1, 4) * &z(1, 4), Cyclotomic::from_int(-1));
        assert!((&z(1, 4) * &z(1, 4)).is_rational());
    }

    #[test]
    fn multiplicative_identity() {
        let a = &z(1, 12) + &Cyclotomic::from_rational(rat_frac(3, 7));
        assert_eq!(&a * &Cyclotomic::one(), a);
    }

    #[test]
    fn zeta3_plus_square() {
        // 1 + x + x^2 ≡ 0 gives x + x^2 = -1.
        assert_eq!(&z(1, 3) + &z(2, 3), Cyclotomic::from_int(-1));
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(z(0, 7), Cyclotomic::one());
        assert_eq!(z(2, 4), Cyclotomic::from_int(-1));
        assert_eq!(z(3, 6), Cyclotomic::from_int(-1));
        assert_eq!(z(-1, 4), -z(1, 4));
        assert_eq!(z(24, 24), Cyclotomic::one());
    }

    #[test]
    fn mixed_orders_embed() {
        // ζ_6^2 = ζ_3 and ζ_12^3 = ζ_4.
        assert_eq!(z(2, 6), z(1, 3));
        assert_eq!(z(3, 12), z(1, 4));
        assert_eq!(&z(1, 4) * &z(1, 3), z(7, 12));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(Cyclotomic::one().checked_div(&Cyclotomic::zero()), Err(ScalarError::DivisionByZero)));
        let a = &z(1, 12) + &Cyclotomic::from_int(2);
        let b = a.inv().unwrap();
        assert_eq!(&a * &b, Cyclotomic::one());
    }

    #[test]
    fn display_and_parse_round_trip() {
        let a = &(&z(1, 12) * &Cyclotomic::from_int(-3)) + &Cyclotomic::from_rational(rat_frac(1, 2));
        let s = a.to_string();
        assert_eq!(s, "1/2 - 3*z^1");
        assert_eq!(Cyclotomic::parse(&s, 12).unwrap(), a);
        assert_eq!(Cyclotomic::parse("-z^2 + 4", 4).unwrap(), Cyclotomic::from_int(5));
        assert_eq!(Cyclotomic::parse("0", 1).unwrap(), Cyclotomic::zero());
        assert!(Cyclotomic::parse("1/0", 1).is_err());
        assert!(Cyclotomic::parse("", 1).is_err());
    }

    #[test]
    fn fpoly_evaluation() {
        assert_eq!(fpoly_eval(&FPoly::f(), &Cyclotomic::from_int(5)), Cyclotomic::from_int(5));
        assert_eq!(fpoly_eval(&FPoly::zero(), &z(1, 4)), Cyclotomic::zero());
        let p = &(&FPoly::f() * &FPoly::f()) - &FPoly::f();
        assert_eq!(fpoly_eval(&p, &Cyclotomic::from_int(2)), Cyclotomic::from_int(2));
        assert_eq!(p.to_string(), "-F + F^2");
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let a = Cyclotomic::from_coeffs(6, (0..9).map(|k| rat(k - 3)).collect());
        let b = Cyclotomic::from_coeffs(a.order(), a.coeffs().to_vec());
        assert_eq!(a.coeffs(), b.coeffs());
        assert_eq!(a.order(), b.order());
    }
}
