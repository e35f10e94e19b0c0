//! Prime fields and their extensions `F_{p^m}` in polynomial (coefficient) form.
//!
//! An element `b_0 + b_1 x + ... + b_{m-1} x^{m-1}` is stored packed as the
//! base-`p` integer `b_0 + b_1 p + ... + b_{m-1} p^{m-1}`. The packing is a
//! bijection with the coefficient vector, so constants of the ground field
//! keep their value when lifted into an extension.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

/// Largest field order for which log/antilog tables are built.
const TABLE_LIMIT: u64 = 1 << 20;

/// Descriptor of `F_{p^m}`: characteristic, degree and the low coefficients
/// `a_0..a_{m-1}` of the monic primitive polynomial generating it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u32,
    m: usize,
    pi: Vec<u32>,
}

impl FieldSpec {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `a_0, ..., a_{m-1}`; the leading 1 is implicit.
    pub fn pi_low(&self) -> &[u32] {
        &self.pi
    }

    /// All `m + 1` coefficients of the polynomial, low degree first, leading 1 included.
    pub fn pi_coeffs(&self) -> Vec<u32> {
        let mut c = self.pi.clone();
        c.push(1);
        c
    }

    /// `p^m`.
    pub fn order(&self) -> u64 {
        (self.p as u64).pow(self.m as u32)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {}", self.p, self.m, format_poly(&self.pi_coeffs(), "x"))
    }
}

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

struct Inner {
    spec: FieldSpec,
    q: u32,
    pow_p: Vec<u32>,
    tables: Option<Tables>,
    ground: OnceLock<Field>,
}

/// Shared arithmetic context for one finite field. Cloning is cheap.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({})", self.0.spec)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Raw arithmetic on packed values, before any tables exist.
struct Raw<'a> {
    p: u32,
    m: usize,
    pi: &'a [u32],
    pow_p: &'a [u32],
}

impl Raw<'_> {
    fn decode(&self, mut v: u32) -> Vec<u32> {
        let mut out = vec![0; self.m];
        for c in out.iter_mut() {
            *c = v % self.p;
            v /= self.p;
        }
        out
    }

    fn encode(&self, coeffs: &[u32]) -> u32 {
        coeffs
            .iter()
            .zip(self.pow_p)
            .map(|(&c, &w)| c * w)
            .sum()
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        let (da, db) = (self.decode(a), self.decode(b));
        let mut prod = vec![0u64; 2 * self.m - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // x^m = -(a_0 + ... + a_{m-1} x^{m-1})
        for k in (self.m..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (i, &a) in self.pi.iter().enumerate() {
                let idx = k - self.m + i;
                prod[idx] = (prod[idx] + c * ((p - a as u64) % p)) % p;
            }
        }
        let low: Vec<u32> = prod[..self.m].iter().map(|&c| c as u32).collect();
        self.encode(&low)
    }

    fn pow(&self, base: u32, mut e: u64) -> u32 {
        let mut acc = 1u32;
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    /// Class of `x` modulo the generating polynomial.
    fn x_class(&self) -> u32 {
        if self.m == 1 {
            (self.p - self.pi[0]) % self.p
        } else {
            self.p
        }
    }

    /// The class of `x` has multiplicative order exactly `p^m - 1`.
    fn x_is_primitive(&self) -> bool {
        let n = (self.p as u64).pow(self.m as u32) - 1;
        let x = self.x_class();
        if self.pow(x, n) != 1 {
            return false;
        }
        prime_divisors(n).into_iter().all(|r| self.pow(x, n / r) != 1)
    }
}

fn powers_of(p: u32, m: usize) -> Vec<u32> {
    let mut w = Vec::with_capacity(m);
    let mut acc = 1u32;
    for _ in 0..m {
        w.push(acc);
        acc = acc.wrapping_mul(p);
    }
    w
}

fn validate_params(p: u32, m: usize) -> Result<()> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    if m == 0 {
        return Err(Error::InvalidField("extension degree must be at least 1".into()));
    }
    match (p as u64).checked_pow(m as u32) {
        Some(q) if q <= u32::MAX as u64 => Ok(()),
        _ => Err(Error::TooLarge(format!("{p}^{m} exceeds 32-bit element packing"))),
    }
}

/// Lexicographically smallest primitive monic polynomial of degree `m`,
/// comparing `a_0` first. Returned as `a_0..a_{m-1}`.
pub fn smallest_primitive(p: u32, m: usize) -> Result<Vec<u32>> {
    validate_params(p, m)?;
    let pow_p = powers_of(p, m);
    let total = (p as u64).pow(m as u32);
    for idx in 0..total {
        // a_0 is the most significant digit of the enumeration index.
        let mut pi = vec![0u32; m];
        let mut rest = idx;
        for slot in pi.iter_mut().rev() {
            *slot = (rest % p as u64) as u32;
            rest /= p as u64;
        }
        if pi[0] == 0 {
            continue;
        }
        let raw = Raw { p, m, pi: &pi, pow_p: &pow_p };
        if raw.x_is_primitive() {
            return Ok(pi);
        }
    }
    unreachable!("every finite field has a primitive polynomial")
}

impl Field {
    /// Builds `F_{p^m}`. `pi` holds all `m + 1` coefficients low degree first
    /// (monic, so the last one is 1); `None` picks the smallest primitive polynomial.
    pub fn new(p: u32, m: usize, pi: Option<&[u32]>) -> Result<Field> {
        validate_params(p, m)?;
        let low = match pi {
            None => smallest_primitive(p, m)?,
            Some(c) => {
                if c.len() != m + 1 || c[m] != 1 {
                    return Err(Error::InvalidField(format!(
                        "generating polynomial must be monic of degree {m}"
                    )));
                }
                if c.iter().any(|&a| a >= p) {
                    return Err(Error::InvalidField(format!("coefficients must lie in [0, {p})")));
                }
                c[..m].to_vec()
            }
        };
        let pow_p = powers_of(p, m);
        let raw = Raw { p, m, pi: &low, pow_p: &pow_p };
        if let Some(given) = pi.filter(|_| !raw.x_is_primitive()) {
            return Err(Error::NotPrimitive(format_poly(given, "x")));
        }
        let q = (p as u64).pow(m as u32);
        let tables = (q <= TABLE_LIMIT).then(|| {
            let mut exp = Vec::with_capacity(q as usize - 1);
            let mut log = vec![0u32; q as usize];
            let alpha = raw.x_class();
            let mut cur = 1u32;
            for i in 0..(q - 1) as u32 {
                exp.push(cur);
                log[cur as usize] = i;
                cur = raw.mul(cur, alpha);
            }
            Tables { exp, log }
        });
        let spec = FieldSpec { p, m, pi: low };
        Ok(Field(Arc::new(Inner {
            spec,
            q: q as u32,
            pow_p,
            tables,
            ground: OnceLock::new(),
        })))
    }

    /// The prime field `F_p` with its default generating polynomial.
    pub fn prime(p: u32) -> Result<Field> {
        Field::new(p, 1, None)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0.spec
    }

    pub fn p(&self) -> u32 {
        self.0.spec.p
    }

    pub fn m(&self) -> usize {
        self.0.spec.m
    }

    /// Number of elements, `p^m`.
    pub fn order(&self) -> u32 {
        self.0.q
    }

    /// The ground field `F_p` this field extends (itself when `m = 1`).
    pub fn ground(&self) -> Field {
        if self.m() == 1 {
            return self.clone();
        }
        self.0
            .ground
            .get_or_init(|| Field::prime(self.p()).expect("characteristic already validated"))
            .clone()
    }

    /// True when `other` is the prime field of this field.
    pub fn has_ground(&self, other: &Field) -> bool {
        other.m() == 1 && other.p() == self.p()
    }

    fn raw(&self) -> Raw<'_> {
        Raw {
            p: self.0.spec.p,
            m: self.0.spec.m,
            pi: &self.0.spec.pi,
            pow_p: &self.0.pow_p,
        }
    }

    // ---- packed-value arithmetic, used by matrices and polynomials ----

    pub(crate) fn decode(&self, v: u32) -> Vec<u32> {
        self.raw().decode(v)
    }

    pub(crate) fn encode(&self, coeffs: &[u32]) -> u32 {
        self.raw().encode(coeffs)
    }

    #[inline]
    pub(crate) fn add_raw(&self, a: u32, b: u32) -> u32 {
        let p = self.0.spec.p;
        if p == 2 {
            return a ^ b;
        }
        if self.0.spec.m == 1 {
            let s = a + b;
            return if s >= p { s - p } else { s };
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        for &w in &self.0.pow_p {
            let s = (a % p + b % p) % p;
            out += s * w;
            a /= p;
            b /= p;
        }
        out
    }

    #[inline]
    pub(crate) fn neg_raw(&self, a: u32) -> u32 {
        let p = self.0.spec.p;
        if p == 2 {
            return a;
        }
        if self.0.spec.m == 1 {
            return (p - a) % p;
        }
        let mut a = a;
        let mut out = 0;
        for &w in &self.0.pow_p {
            out += ((p - a % p) % p) * w;
            a /= p;
        }
        out
    }

    #[inline]
    pub(crate) fn sub_raw(&self, a: u32, b: u32) -> u32 {
        self.add_raw(a, self.neg_raw(b))
    }

    #[inline]
    pub(crate) fn mul_raw(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        match &self.0.tables {
            Some(t) => {
                let n = self.0.q - 1;
                let s = t.log[a as usize] + t.log[b as usize];
                t.exp[(if s >= n { s - n } else { s }) as usize]
            }
            None => self.raw().mul(a, b),
        }
    }

    pub(crate) fn inv_raw(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.0.tables {
            Some(t) => {
                let n = self.0.q - 1;
                t.exp[((n - t.log[a as usize]) % n) as usize]
            }
            None => self.raw().pow(a, self.0.q as u64 - 2),
        })
    }

    pub(crate) fn pow_raw(&self, a: u32, e: u64) -> u32 {
        match &self.0.tables {
            Some(t) if a != 0 => {
                let n = (self.0.q - 1) as u64;
                let k = (t.log[a as usize] as u64 * (e % n)) % n;
                t.exp[k as usize]
            }
            _ => self.raw().pow(a, e),
        }
    }

    /// Multiplication without tables, for cross-checks.
    #[cfg(test)]
    pub(crate) fn mul_schoolbook(&self, a: u32, b: u32) -> u32 {
        self.raw().mul(a, b)
    }

    pub fn zero(&self) -> FieldElem {
        self.elem_raw(0)
    }

    pub fn one(&self) -> FieldElem {
        self.elem_raw(1)
    }

    /// The residue class of `x`, a generator of the multiplicative group.
    pub fn primitive_element(&self) -> FieldElem {
        self.elem_raw(self.raw().x_class())
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElem> {
        if coeffs.len() > self.m() {
            return Err(Error::InvalidField(format!(
                "element has {} coefficients, field degree is {}",
                coeffs.len(),
                self.m()
            )));
        }
        if coeffs.iter().any(|&c| c >= self.p()) {
            return Err(Error::InvalidField(format!(
                "coefficients must lie in [0, {})",
                self.p()
            )));
        }
        Ok(self.elem_raw(self.encode(coeffs)))
    }

    /// Element from a packed index in `[0, p^m)`; panics out of range.
    pub fn elem(&self, index: u32) -> FieldElem {
        assert!(index < self.0.q, "element index {index} out of range");
        self.elem_raw(index)
    }

    pub(crate) fn elem_raw(&self, v: u32) -> FieldElem {
        FieldElem { field: self.clone(), value: v }
    }

    /// `alpha^k` for the primitive element `alpha`.
    pub fn alpha_pow(&self, k: u64) -> FieldElem {
        self.elem_raw(self.pow_raw(self.raw().x_class(), k))
    }

    /// Embeds a ground-field residue as a constant.
    pub fn constant(&self, c: u32) -> FieldElem {
        self.elem_raw(c % self.p())
    }

    /// All elements in packed order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.0.q).map(move |v| self.elem_raw(v))
    }

    /// All nonzero elements in packed order.
    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (1..self.0.q).map(move |v| self.elem_raw(v))
    }

    pub(crate) fn discrete_log(&self, a: u32) -> Option<u64> {
        if a == 0 {
            return None;
        }
        match &self.0.tables {
            Some(t) => Some(t.log[a as usize] as u64),
            None => {
                let alpha = self.raw().x_class();
                let mut cur = 1;
                for k in 0..(self.0.q as u64 - 1) {
                    if cur == a {
                        return Some(k);
                    }
                    cur = self.mul_raw(cur, alpha);
                }
                None
            }
        }
    }
}

/// An element of `F_{p^m}` tied to its field context.
#[derive(Clone)]
pub struct FieldElem {
    field: Field,
    value: u32,
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && self.field == other.field
    }
}

impl Eq for FieldElem {}

impl FieldElem {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Packed index, `b_0 + b_1 p + ...`.
    pub fn index(&self) -> u32 {
        self.value
    }

    /// Coefficients `b_0..b_{m-1}`.
    pub fn coeffs(&self) -> Vec<u32> {
        self.field.decode(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_one(&self) -> bool {
        self.value == 1
    }

    /// True when the element lies in the prime subfield (only `b_0` may be nonzero).
    pub fn is_constant(&self) -> bool {
        self.value < self.field.p()
    }

    fn check(&self, other: &FieldElem) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn try_add(&self, other: &FieldElem) -> Result<FieldElem> {
        self.check(other)?;
        Ok(self.field.elem_raw(self.field.add_raw(self.value, other.value)))
    }

    pub fn try_sub(&self, other: &FieldElem) -> Result<FieldElem> {
        self.check(other)?;
        Ok(self.field.elem_raw(self.field.sub_raw(self.value, other.value)))
    }

    pub fn try_mul(&self, other: &FieldElem) -> Result<FieldElem> {
        self.check(other)?;
        Ok(self.field.elem_raw(self.field.mul_raw(self.value, other.value)))
    }

    pub fn try_div(&self, other: &FieldElem) -> Result<FieldElem> {
        self.check(other)?;
        let inv = self.field.inv_raw(other.value)?;
        Ok(self.field.elem_raw(self.field.mul_raw(self.value, inv)))
    }

    pub fn inv(&self) -> Result<FieldElem> {
        Ok(self.field.elem_raw(self.field.inv_raw(self.value)?))
    }

    pub fn pow(&self, e: u64) -> FieldElem {
        self.field.elem_raw(self.field.pow_raw(self.value, e))
    }

    /// `k` with `self = alpha^k`; `None` for zero.
    pub fn log(&self) -> Option<u64> {
        self.field.discrete_log(self.value)
    }

    /// Multiplicative order; `None` for zero.
    pub fn order(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let n = self.field.order() as u64 - 1;
        let mut ord = n;
        for r in prime_divisors(n) {
            while ord.is_multiple_of(r) && self.pow(ord / r).is_one() {
                ord /= r;
            }
        }
        Some(ord)
    }

    /// Re-embeds a prime-field element as a constant of `ext`.
    pub fn lift(&self, ext: &Field) -> Result<FieldElem> {
        if self.field == *ext {
            return Ok(self.clone());
        }
        if self.field.m() != 1 || !ext.has_ground(&self.field) {
            return Err(Error::FieldMismatch);
        }
        Ok(ext.elem_raw(self.value))
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(&self.coeffs(), "a"))
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                self.$checked(&rhs).expect("field arithmetic")
            }
        }
        impl<'a> $tr<&'a FieldElem> for &'a FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: &'a FieldElem) -> FieldElem {
                self.$checked(rhs).expect("field arithmetic")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);
binop!(Div, div, try_div);

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        let v = self.field.neg_raw(self.value);
        self.field.elem_raw(v)
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        self.field.elem_raw(self.field.neg_raw(self.value))
    }
}

/// Renders coefficients (low degree first) as `c0 + c1*v + ... + v^n`.
pub fn format_poly(coeffs: &[u32], var: &str) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| match (i, c) {
            (0, c) => c.to_string(),
            (1, 1) => var.to_string(),
            (1, c) => format!("{c}*{var}"),
            (i, 1) => format!("{var}^{i}"),
            (i, c) => format!("{c}*{var}^{i}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> Field {
        Field::new(2, 2, Some(&[1, 1, 1])).unwrap()
    }

    #[test]
    fn default_polynomials() {
        assert_eq!(Field::new(2, 2, None).unwrap().spec().pi_coeffs(), vec![1, 1, 1]);
        // low-degree-first comparison: (1,0,1) < (1,1,0), so x^3 + x^2 + 1 wins
        assert_eq!(Field::new(2, 3, None).unwrap().spec().pi_coeffs(), vec![1, 0, 1, 1]);
        assert_eq!(Field::new(2, 4, None).unwrap().spec().pi_coeffs(), vec![1, 0, 0, 1, 1]);
        assert_eq!(Field::new(3, 2, None).unwrap().spec().pi_coeffs(), vec![2, 1, 1]);
        // degree one: x + 1 has root -1 = 1, the generator of F_2^*
        assert_eq!(Field::new(2, 1, None).unwrap().spec().pi_coeffs(), vec![1, 1]);
        // the generator of F_5^* with smallest a_0 = -g is g = 3 (a_0 = 2)
        assert_eq!(Field::new(5, 1, None).unwrap().spec().pi_coeffs(), vec![2, 1]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(Field::new(4, 2, None).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(Field::new(2, 2, Some(&[1, 0, 1])), Err(Error::NotPrimitive(_))));
        // x^2 + 1 over F_3 is irreducible but alpha has order 4, not 8
        assert!(matches!(Field::new(3, 2, Some(&[1, 0, 1])), Err(Error::NotPrimitive(_))));
        assert!(matches!(Field::new(2, 2, Some(&[1, 1])), Err(Error::InvalidField(_))));
        assert!(Field::new(2, 0, None).is_err());
    }

    #[test]
    fn f4_examples() {
        let f = f4();
        let a = f.primitive_element();
        assert_eq!(a.coeffs(), vec![0, 1]);
        assert_eq!((&a * &a).coeffs(), vec![1, 1]);
        assert_eq!(a.inv().unwrap().coeffs(), vec![1, 1]);
        assert_eq!(f.zero().inv(), Err(Error::DivisionByZero));
        for x in f.elements() {
            assert!((&x + &(-&x)).is_zero());
        }
    }

    #[test]
    fn f2_generator_is_one() {
        let f = Field::new(2, 1, None).unwrap();
        assert_eq!(f.primitive_element().coeffs(), vec![1]);
    }

    #[test]
    fn f8_alpha_has_order_seven() {
        let f = Field::new(2, 3, Some(&[1, 1, 0, 1])).unwrap();
        let a = f.primitive_element();
        assert_eq!(a.coeffs(), vec![0, 1, 0]);
        let mut cur = f.one();
        for k in 1..=7 {
            cur = &cur * &a;
            assert_eq!(cur.is_one(), k == 7);
        }
        assert_eq!(a.order(), Some(7));
    }

    #[test]
    fn mismatched_fields_rejected() {
        let a = f4().one();
        let b = Field::new(2, 3, None).unwrap().one();
        assert_eq!(a.try_add(&b), Err(Error::FieldMismatch));
        assert_eq!(a.try_mul(&b), Err(Error::FieldMismatch));
    }

    #[test]
    fn table_and_schoolbook_agree() {
        for (p, m) in [(2, 4), (3, 3), (5, 2), (7, 2)] {
            let f = Field::new(p, m, None).unwrap();
            for a in 0..f.order() {
                for b in 0..f.order() {
                    assert_eq!(f.mul_raw(a, b), f.mul_schoolbook(a, b));
                }
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for (p, m) in [(2, 2), (2, 3), (3, 2)] {
            let f = Field::new(p, m, None).unwrap();
            let els: Vec<_> = f.elements().collect();
            for a in &els {
                if !a.is_zero() {
                    assert!((a * &a.inv().unwrap()).is_one());
                }
                for b in &els {
                    assert_eq!(a + b, b + a);
                    assert_eq!(a * b, b * a);
                    for c in &els {
                        assert_eq!(&(a + b) + c, a + &(b + c));
                        assert_eq!(&(a * b) * c, a * &(b * c));
                        assert_eq!(a * &(b + c), &(a * b) + &(a * c));
                    }
                }
            }
        }
    }

    #[test]
    fn logs_round_trip() {
        let f = Field::new(3, 2, None).unwrap();
        for k in 0..8 {
            assert_eq!(f.alpha_pow(k).log(), Some(k));
        }
        assert_eq!(f.zero().log(), None);
    }

    #[test]
    fn large_field_without_tables() {
        // 2^21 > table limit: schoolbook path
        let f = Field::new(2, 21, None).unwrap();
        let a = f.primitive_element();
        let b = a.pow(12345);
        assert!((&b * &b.inv().unwrap()).is_one());
        assert_eq!(a.pow(f.order() as u64 - 1), f.one());
    }
}
