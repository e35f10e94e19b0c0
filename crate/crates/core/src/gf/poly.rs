//! Dense univariate polynomials over a field context.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf::field::{format_poly, Field, FieldElem};

/// Polynomial with coefficients low degree first; no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<u32>,
}

impl Poly {
    /// From packed coefficient values (low degree first), normalized.
    pub fn new(field: &Field, coeffs: &[u32]) -> Result<Poly> {
        if coeffs.iter().any(|&c| c >= field.order()) {
            return Err(Error::Parse(format!(
                "coefficient out of range for field of order {}",
                field.order()
            )));
        }
        Ok(Poly::from_raw(field, coeffs.to_vec()))
    }

    pub(crate) fn from_raw(field: &Field, mut coeffs: Vec<u32>) -> Poly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { field: field.clone(), coeffs }
    }

    pub fn from_elems(field: &Field, coeffs: &[FieldElem]) -> Result<Poly> {
        let mut raw = Vec::with_capacity(coeffs.len());
        for c in coeffs {
            if c.field() != field {
                return Err(Error::FieldMismatch);
            }
            raw.push(c.index());
        }
        Ok(Poly::from_raw(field, raw))
    }

    pub fn zero(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: vec![1] }
    }

    /// `x - root`.
    pub fn linear(root: &FieldElem) -> Poly {
        let f = root.field();
        Poly::from_raw(f, vec![f.neg_raw(root.index()), 1])
    }

    /// `x^n`.
    pub fn monomial(field: &Field, n: usize) -> Poly {
        let mut c = vec![0; n + 1];
        c[n] = 1;
        Poly::from_raw(field, c)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Packed coefficients, low degree first.
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElem {
        self.field.elem_raw(self.coeffs.get(i).copied().unwrap_or(0))
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let f = &self.field;
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                f.add_raw(a, b)
            })
            .collect();
        Ok(Poly::from_raw(f, c))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        let c = self.coeffs.iter().map(|&a| self.field.neg_raw(a)).collect();
        Poly::from_raw(&self.field, c)
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.field));
        }
        let f = &self.field;
        let mut c = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = f.add_raw(c[i + j], f.mul_raw(a, b));
            }
        }
        Ok(Poly::from_raw(f, c))
    }

    pub fn scale(&self, s: &FieldElem) -> Result<Poly> {
        if s.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        let c = self.coeffs.iter().map(|&a| self.field.mul_raw(a, s.index())).collect();
        Ok(Poly::from_raw(&self.field, c))
    }

    /// Euclidean division: `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check(divisor)?;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let f = &self.field;
        let lead_inv = f.inv_raw(divisor.coeffs[dd])?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut quot = vec![0u32; rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = f.mul_raw(rem[k], lead_inv);
            if c == 0 {
                continue;
            }
            quot[k - dd] = c;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                let idx = k - dd + i;
                rem[idx] = f.sub_raw(rem[idx], f.mul_raw(c, d));
            }
        }
        rem.truncate(dd);
        Ok((Poly::from_raw(f, quot), Poly::from_raw(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Scales to a monic polynomial (zero stays zero).
    pub fn monic(&self) -> Poly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lead) => {
                let inv = self.field.inv_raw(lead).expect("nonzero leading coefficient");
                let c = self.coeffs.iter().map(|&a| self.field.mul_raw(a, inv)).collect();
                Poly::from_raw(&self.field, c)
            }
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| f.mul_raw(a, (i as u64 % f.p() as u64) as u32))
            .collect();
        Poly::from_raw(f, c)
    }

    /// True when the polynomial has no repeated root in any extension.
    pub fn is_squarefree(&self) -> bool {
        match self.gcd(&self.derivative()) {
            Ok(g) => g.degree() == Some(0),
            Err(_) => false,
        }
    }

    /// Horner evaluation at an element of the coefficient field.
    pub fn eval(&self, x: &FieldElem) -> Result<FieldElem> {
        if x.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        let f = &self.field;
        let v = self
            .coeffs
            .iter()
            .rev()
            .fold(0u32, |acc, &c| f.add_raw(f.mul_raw(acc, x.index()), c));
        Ok(f.elem_raw(v))
    }

    /// Evaluates a prime-field polynomial at an element of an extension of it.
    pub fn eval_lifted(&self, x: &FieldElem) -> Result<FieldElem> {
        self.lift(x.field())?.eval(x)
    }

    /// Re-embeds a prime-field polynomial into an extension field.
    pub fn lift(&self, ext: &Field) -> Result<Poly> {
        if &self.field == ext {
            return Ok(self.clone());
        }
        if self.field.m() != 1 || !ext.has_ground(&self.field) {
            return Err(Error::FieldMismatch);
        }
        Ok(Poly { field: ext.clone(), coeffs: self.coeffs.clone() })
    }

    /// Projects an extension-field polynomial whose coefficients are all
    /// constants back to the prime field.
    pub fn project_to_ground(&self) -> Option<Poly> {
        let p = self.field.p();
        if self.coeffs.iter().any(|&c| c >= p) {
            return None;
        }
        Some(Poly { field: self.field.ground(), coeffs: self.coeffs.clone() })
    }

    /// Lexicographic comparison of coefficient vectors, low degree first.
    pub fn cmp_lex(&self, other: &Poly) -> Ordering {
        self.coeffs.cmp(&other.coeffs)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.m() == 1 {
            return f.write_str(&format_poly(&self.coeffs, "x"));
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                let e = self.field.elem_raw(c);
                match i {
                    0 => format!("({e})"),
                    1 => format!("({e})*x"),
                    _ => format!("({e})*x^{i}"),
                }
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// All monic polynomials of degree `d` over `field`, lexicographic (low degree first).
pub fn monic_polynomials(field: &Field, d: usize) -> impl Iterator<Item = Poly> + '_ {
    let q = field.order() as u64;
    let total = q.pow(d as u32);
    (0..total).map(move |idx| {
        let mut c = vec![0u32; d + 1];
        let mut rest = idx;
        // c_0 is the most significant digit so the order is lexicographic low-first
        for slot in c[..d].iter_mut().rev() {
            *slot = (rest % q) as u32;
            rest /= q;
        }
        c[d] = 1;
        Poly::from_raw(field, c)
    })
}

/// Trial division against every monic polynomial of degree up to `deg/2`.
pub fn is_irreducible(f: &Poly) -> bool {
    let Some(n) = f.degree() else { return false };
    if n == 0 {
        return false;
    }
    for d in 1..=n / 2 {
        for g in monic_polynomials(f.field(), d) {
            if f.rem(&g).map(|r| r.is_zero()).unwrap_or(false) {
                return false;
            }
        }
    }
    true
}

/// Monic irreducible polynomials of degree `d`, lexicographic order.
pub fn enumerate_irreducible(field: &Field, d: usize) -> Vec<Poly> {
    monic_polynomials(field, d).filter(is_irreducible).collect()
}

/// Irreducible factorization by trial division. Factors are monic and ordered
/// by degree descending, then lexicographically.
pub fn factor_poly(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    let n = f.degree().ok_or_else(|| Error::Parse("cannot factor the zero polynomial".into()))?;
    let field = f.field();
    let mut rest = f.monic();
    let mut out: Vec<(Poly, usize)> = Vec::new();
    if n == 0 {
        return Ok(out);
    }
    let mut d = 1;
    while 2 * d <= rest.degree().unwrap_or(0) {
        for g in enumerate_irreducible(field, d) {
            let mut mult = 0;
            loop {
                let (q, r) = rest.div_rem(&g)?;
                if !r.is_zero() {
                    break;
                }
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                out.push((g, mult));
            }
        }
        d += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        match out.iter_mut().find(|(g, _)| *g == rest) {
            Some(entry) => entry.1 += 1,
            None => out.push((rest, 1)),
        }
    }
    out.sort_by(|(a, _), (b, _)| b.degree().cmp(&a.degree()).then_with(|| a.cmp_lex(b)));
    Ok(out)
}

/// Minimal polynomial over the prime field, as the product of `(x - beta^{p^i})`
/// over the distinct Frobenius conjugates. `minimal_polynomial(0) = x`.
pub fn minimal_polynomial(beta: &FieldElem) -> Poly {
    let field = beta.field();
    let p = field.p() as u64;
    let mut conj = vec![beta.clone()];
    loop {
        let next = conj.last().unwrap().pow(p);
        if next == *beta {
            break;
        }
        conj.push(next);
    }
    let prod = conj
        .iter()
        .fold(Poly::one(field), |acc, c| acc.mul(&Poly::linear(c)).expect("same field"));
    prod.project_to_ground()
        .expect("conjugate product has prime-field coefficients")
}

/// Degree of the minimal polynomial: the size of the Frobenius orbit.
pub fn minimal_degree(beta: &FieldElem) -> usize {
    let p = beta.field().p() as u64;
    let mut cur = beta.pow(p);
    let mut d = 1;
    while cur != *beta {
        cur = cur.pow(p);
        d += 1;
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    fn poly(f: &Field, c: &[u32]) -> Poly {
        Poly::new(f, c).unwrap()
    }

    #[test]
    fn irreducibility_examples() {
        let f = f2();
        assert!(is_irreducible(&poly(&f, &[1, 1, 1])));
        assert!(!is_irreducible(&poly(&f, &[1, 0, 1])));
        assert_eq!(enumerate_irreducible(&f, 2), vec![poly(&f, &[1, 1, 1])]);
        assert_eq!(
            enumerate_irreducible(&f, 3),
            vec![poly(&f, &[1, 0, 1, 1]), poly(&f, &[1, 1, 0, 1])]
        );
    }

    #[test]
    fn factor_examples() {
        let f = f2();
        assert_eq!(factor_poly(&poly(&f, &[1, 0, 1])).unwrap(), vec![(poly(&f, &[1, 1]), 2)]);
        assert_eq!(
            factor_poly(&poly(&f, &[1, 1, 1])).unwrap(),
            vec![(poly(&f, &[1, 1, 1]), 1)]
        );
        assert_eq!(
            factor_poly(&poly(&f, &[1, 1, 1, 1])).unwrap(),
            vec![(poly(&f, &[1, 1]), 3)]
        );
        // x^5 + x^4 + 1 = (x^2 + x + 1)(x^3 + x + 1): degree order puts the cubic first
        assert_eq!(
            factor_poly(&poly(&f, &[1, 0, 0, 0, 1, 1])).unwrap(),
            vec![(poly(&f, &[1, 1, 0, 1]), 1), (poly(&f, &[1, 1, 1]), 1)]
        );
    }

    #[test]
    fn factor_multiplies_back_exhaustive() {
        for p in [2, 3] {
            let f = Field::prime(p).unwrap();
            for d in 1..=4 {
                for g in monic_polynomials(&f, d) {
                    let factors = factor_poly(&g).unwrap();
                    let mut prod = Poly::one(&f);
                    for (h, k) in &factors {
                        assert!(is_irreducible(h) && h.is_monic());
                        for _ in 0..*k {
                            prod = prod.mul(h).unwrap();
                        }
                    }
                    assert_eq!(prod, g);
                    for w in factors.windows(2) {
                        assert!(w[0].0.degree() >= w[1].0.degree());
                    }
                }
            }
        }
    }

    #[test]
    fn minimal_polynomial_examples() {
        let f4 = Field::new(2, 2, None).unwrap();
        let g = f4.ground();
        assert_eq!(minimal_polynomial(&f4.one()), poly(&g, &[1, 1]));
        assert_eq!(minimal_polynomial(&f4.primitive_element()), poly(&g, &[1, 1, 1]));
        assert_eq!(minimal_polynomial(&f4.zero()), poly(&g, &[0, 1]));
        let f16 = Field::new(2, 4, Some(&[1, 1, 0, 0, 1])).unwrap();
        let b = f16.alpha_pow(5);
        assert_eq!(minimal_polynomial(&b), poly(&f16.ground(), &[1, 1, 1]));
    }

    /// Brute force: the lowest-degree monic prime-field polynomial vanishing at beta.
    fn brute_minpoly(beta: &FieldElem) -> Poly {
        let g = beta.field().ground();
        for d in 1..=beta.field().m() {
            for cand in monic_polynomials(&g, d) {
                if cand.eval_lifted(beta).unwrap().is_zero() {
                    return cand;
                }
            }
        }
        unreachable!()
    }

    #[test]
    fn minimal_polynomial_matches_brute_force() {
        for (p, m) in [(2, 2), (2, 3), (2, 4), (3, 2)] {
            let f = Field::new(p, m, None).unwrap();
            for b in f.elements() {
                let mp = minimal_polynomial(&b);
                assert_eq!(mp, brute_minpoly(&b), "beta = {b}");
                assert_eq!(m % mp.degree().unwrap(), 0);
                assert_eq!(minimal_degree(&b), mp.degree().unwrap());
                assert!(mp.eval_lifted(&b).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn gcd_and_squarefree() {
        let f = f2();
        assert!(!poly(&f, &[1, 0, 1]).is_squarefree());
        assert!(poly(&f, &[1, 1, 1]).is_squarefree());
        assert!(poly(&f, &[0, 1, 1]).is_squarefree());
        let a = poly(&f, &[1, 0, 0, 1]); // (x+1)(x^2+x+1)
        let b = poly(&f, &[1, 0, 1]); // (x+1)^2
        assert_eq!(a.gcd(&b).unwrap(), poly(&f, &[1, 1]));
    }

    #[test]
    fn division_identity() {
        let f = Field::prime(3).unwrap();
        let a = poly(&f, &[2, 0, 1, 1, 2]);
        let b = poly(&f, &[1, 2, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q.mul(&b).unwrap().add(&r).unwrap(), a);
        assert!(r.degree() < b.degree());
    }
}
