//! Exact multivariate polynomial arithmetic over the coefficient fields,
//! with optional Laurent variables (negative exponents allowed per flag).
//!
//! Canonical form: terms are kept in a map ordered by graded lexicographic
//! order on exponent vectors, zero coefficients are never stored, and all
//! printing walks the order descending, so equal polynomials are
//! structurally equal and print identically.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::coeff::{FieldDesc, FieldElem, Rational};
use crate::error::{KernelError, Result};

/// Descriptor of a (Laurent) polynomial ring: ordered variables, a Laurent
/// flag per variable, and the coefficient field.
#[derive(Debug, PartialEq, Eq)]
pub struct PolyRing {
    vars: Vec<String>,
    laurent: Vec<bool>,
    field: FieldDesc,
}

impl PolyRing {
    pub fn new(vars: Vec<String>, laurent: Vec<bool>, field: FieldDesc) -> Result<Arc<PolyRing>> {
        if vars.len() != laurent.len() {
            return Err(KernelError::InvalidInput(
                "one laurent flag per variable required".into(),
            ));
        }
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() {
                return Err(KernelError::InvalidInput("empty variable name".into()));
            }
            if vars[..i].contains(v) {
                return Err(KernelError::InvalidInput(format!(
                    "duplicate variable name `{v}`"
                )));
            }
        }
        Ok(Arc::new(PolyRing {
            vars,
            laurent,
            field,
        }))
    }

    /// Plain polynomial ring over Q in the given variables.
    pub fn rational(names: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(
            names.iter().map(|s| s.to_string()).collect(),
            vec![false; names.len()],
            FieldDesc::Rational,
        )
        .expect("valid ring")
    }

    /// Laurent polynomial ring over Q in the given variables.
    pub fn rational_laurent(names: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(
            names.iter().map(|s| s.to_string()).collect(),
            vec![true; names.len()],
            FieldDesc::Rational,
        )
        .expect("valid ring")
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn laurent_flags(&self) -> &[bool] {
        &self.laurent
    }

    pub fn is_laurent(&self, idx: usize) -> bool {
        self.laurent[idx]
    }

    pub fn field(&self) -> FieldDesc {
        self.field
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

/// Exponent vector, ordered by graded lexicographic order (total degree
/// first, then lexicographically on the entries).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<i64>);

impl Monomial {
    pub fn zero(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Monomial {
        Monomial(self.0.iter().map(|a| -a).collect())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// A multivariate (Laurent) polynomial in canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    ring: Arc<PolyRing>,
    terms: BTreeMap<Monomial, FieldElem>,
}

impl Poly {
    pub fn zero(ring: &Arc<PolyRing>) -> Poly {
        Poly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Poly {
        Poly::constant(ring, FieldElem::one(ring.field()))
    }

    pub fn constant(ring: &Arc<PolyRing>, value: FieldElem) -> Poly {
        assert_eq!(value.desc(), ring.field(), "coefficient field mismatch");
        let mut p = Poly::zero(ring);
        if !value.is_zero() {
            p.terms.insert(Monomial::zero(ring.nvars()), value);
        }
        p
    }

    pub fn constant_rat(ring: &Arc<PolyRing>, value: Rational) -> Poly {
        Poly::constant(ring, FieldElem::from_rational(ring.field(), value))
    }

    pub fn constant_i64(ring: &Arc<PolyRing>, value: i64) -> Poly {
        Poly::constant(ring, FieldElem::from_i64(ring.field(), value))
    }

    pub fn var(ring: &Arc<PolyRing>, idx: usize) -> Poly {
        let mut exps = vec![0; ring.nvars()];
        exps[idx] = 1;
        Poly::monomial(ring, exps, FieldElem::one(ring.field())).expect("valid monomial")
    }

    pub fn monomial(ring: &Arc<PolyRing>, exps: Vec<i64>, coeff: FieldElem) -> Result<Poly> {
        assert_eq!(exps.len(), ring.nvars());
        for (i, &e) in exps.iter().enumerate() {
            if e < 0 && !ring.is_laurent(i) {
                return Err(KernelError::NegativeExponent);
            }
        }
        let mut p = Poly::zero(ring);
        if !coeff.is_zero() {
            p.terms.insert(Monomial(exps), coeff);
        }
        Ok(p)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElem)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    /// The constant value, when the polynomial has no variable part.
    pub fn constant_value(&self) -> Option<FieldElem> {
        if self.terms.is_empty() {
            return Some(FieldElem::zero(self.ring.field()));
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_zero() {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn leading(&self) -> Option<(&Monomial, &FieldElem)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Option<&FieldElem> {
        self.leading().map(|(_, c)| c)
    }

    pub fn coeff_of(&self, m: &Monomial) -> FieldElem {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| FieldElem::zero(self.ring.field()))
    }

    fn check_ring(&self, other: &Poly) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(KernelError::RingMismatch)
        }
    }

    fn insert(&mut self, m: Monomial, c: FieldElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&c).expect("same field");
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        let mut out = Poly::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert(ma.add(mb), ca.mul(cb)?);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &FieldElem) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.mul(c).expect("same field")))
                .collect(),
        }
    }

    pub fn scale_rat(&self, r: &Rational) -> Poly {
        self.scale(&FieldElem::from_rational(self.ring.field(), r.clone()))
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut out = Poly::one(&self.ring);
        for _ in 0..k {
            out = out.mul(self).expect("same ring");
        }
        out
    }

    /// A unit of the ring: a single term whose exponents live on Laurent
    /// variables only.
    pub fn is_unit(&self) -> bool {
        if self.terms.len() != 1 {
            return false;
        }
        let (m, _) = self.terms.iter().next().unwrap();
        m.0.iter()
            .enumerate()
            .all(|(i, &e)| e == 0 || self.ring.is_laurent(i))
    }

    pub fn inverse_unit(&self) -> Result<Poly> {
        if !self.is_unit() {
            return Err(KernelError::NotInvertible(format!(
                "`{self}` is not a unit of the ring"
            )));
        }
        let (m, c) = self.terms.iter().next().unwrap();
        Poly::monomial(&self.ring, m.neg().0, c.inverse()?)
    }

    /// Split off the Laurent-variable monomial content: returns `(shifted,
    /// shift)` with `self = shifted * x^shift`, where `shifted` has minimum
    /// exponent 0 in every Laurent variable.
    pub fn laurent_shift(&self) -> (Poly, Monomial) {
        let n = self.ring.nvars();
        let mut shift = vec![0i64; n];
        if self.is_zero() {
            return (self.clone(), Monomial(shift));
        }
        for i in 0..n {
            if self.ring.is_laurent(i) {
                shift[i] = self.terms.keys().map(|m| m.0[i]).min().unwrap();
            }
        }
        let shift = Monomial(shift);
        if shift.is_zero() {
            return (self.clone(), shift);
        }
        let shifted = Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.sub(&shift), c.clone()))
                .collect(),
        };
        (shifted, shift)
    }

    pub fn mul_monomial(&self, shift: &Monomial) -> Result<Poly> {
        let mut out = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            let nm = m.add(shift);
            for (i, &e) in nm.0.iter().enumerate() {
                if e < 0 && !self.ring.is_laurent(i) {
                    return Err(KernelError::NegativeExponent);
                }
            }
            out.terms.insert(nm, c.clone());
        }
        Ok(out)
    }

    /// Exact division; fails with `InexactDivision` when the quotient does
    /// not exist in the ring.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        self.check_ring(divisor)?;
        if divisor.is_zero() {
            return Err(KernelError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Poly::zero(&self.ring));
        }
        let (num, s_num) = self.laurent_shift();
        let (den, s_den) = divisor.laurent_shift();
        let mut rem = num;
        let mut quot = Poly::zero(&self.ring);
        let (dm, dc) = {
            let (m, c) = den.leading().unwrap();
            (m.clone(), c.clone())
        };
        while let Some((rm, rc)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let qm = rm.sub(&dm);
            if qm.0.iter().any(|&e| e < 0) {
                return Err(KernelError::InexactDivision);
            }
            let qc = rc.div(&dc)?;
            let t = Poly::monomial(&self.ring, qm.0.clone(), qc).map_err(|_| {
                // negative exponent in a non-Laurent variable cannot occur
                // after the shift, but keep the guard honest
                KernelError::InexactDivision
            })?;
            quot = quot.add(&t)?;
            rem = rem.sub(&t.mul(&den)?)?;
        }
        quot.mul_monomial(&s_num.sub(&s_den))
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.div_exact(self).is_ok()
    }

    /// Simultaneous substitution of every variable by its image.
    /// Negative exponents require the image to be a unit.
    pub fn substitute(&self, images: &[Poly]) -> Result<Poly> {
        assert_eq!(images.len(), self.ring.nvars());
        let target = if images.is_empty() {
            self.ring.clone()
        } else {
            images[0].ring.clone()
        };
        let mut out = Poly::zero(&target);
        for (m, c) in &self.terms {
            let mut term = Poly::constant(&target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let base = if e < 0 {
                    images[i].inverse_unit()?
                } else {
                    images[i].clone()
                };
                term = term.mul(&base.pow(e.unsigned_abs() as u32))?;
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Re-embed into a ring whose variable list extends this ring's as a
    /// prefix (same Laurent flags and field).
    pub fn extend_ring(&self, big: &Arc<PolyRing>) -> Result<Poly> {
        let small = self.ring();
        if big.nvars() < small.nvars()
            || big.vars()[..small.nvars()] != *small.vars()
            || big.laurent_flags()[..small.nvars()] != *small.laurent_flags()
            || big.field() != small.field()
        {
            return Err(KernelError::RingMismatch);
        }
        let mut out = Poly::zero(big);
        for (m, c) in &self.terms {
            let mut exps = m.0.clone();
            exps.resize(big.nvars(), 0);
            out.terms.insert(Monomial(exps), c.clone());
        }
        Ok(out)
    }

    pub fn max_degree_in(&self, var: usize) -> i64 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    pub fn min_degree_in(&self, var: usize) -> i64 {
        self.terms.keys().map(|m| m.0[var]).min().unwrap_or(0)
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.0[var] != 0)
    }

    /// Indices of the variables that actually occur.
    pub fn active_vars(&self) -> Vec<usize> {
        (0..self.ring.nvars())
            .filter(|&i| self.involves(i))
            .collect()
    }

    /// View as a dense univariate polynomial in `var` with polynomial
    /// coefficients (exponents in `var` must be nonnegative).
    pub fn as_univariate_in(&self, var: usize) -> Vec<Poly> {
        let deg = self.max_degree_in(var);
        assert!(self.min_degree_in(var) >= 0, "normalize Laurent part first");
        let mut coeffs = vec![Poly::zero(&self.ring); (deg + 1) as usize];
        for (m, c) in &self.terms {
            let k = m.0[var] as usize;
            let mut rest = m.clone();
            rest.0[var] = 0;
            coeffs[k].insert(rest, c.clone());
        }
        coeffs
    }

    pub fn from_univariate(ring: &Arc<PolyRing>, var: usize, coeffs: &[Poly]) -> Poly {
        let x = Poly::var(ring, var);
        let mut out = Poly::zero(ring);
        let mut xp = Poly::one(ring);
        for c in coeffs {
            out = out.add(&c.mul(&xp).expect("same ring")).expect("same ring");
            xp = xp.mul(&x).expect("same ring");
        }
        out
    }

    /// Divide by the leading field coefficient, making the graded-lex
    /// leading coefficient 1.
    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) => self.scale(&c.inverse().expect("nonzero leading coefficient")),
        }
    }

    /// Scale by a field unit into a size-normalized representative: over
    /// the rationals this clears denominators and divides out the integer
    /// content, with a positive leading coefficient; over other fields it
    /// falls back to the monic form. Keeps coefficient growth under
    /// control inside gcd remainder sequences.
    pub fn unit_normalize(&self) -> Poly {
        use num_bigint::BigInt;
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let mut denom_lcm = BigInt::from(1);
        let mut numer_gcd = BigInt::from(0);
        for c in self.terms.values() {
            let FieldElem::Rational(r) = c else {
                return self.monic();
            };
            denom_lcm = denom_lcm.lcm(r.denom());
            numer_gcd = numer_gcd.gcd(r.numer());
        }
        let mut scale = Rational::new(denom_lcm, numer_gcd);
        let lead = self
            .leading_coeff()
            .and_then(|c| c.as_rational())
            .expect("rational leading coefficient");
        if (lead * &scale) < Rational::zero() {
            scale = -scale;
        }
        self.scale_rat(&scale)
    }

    /// Evaluate a polynomial with rational coefficients that involves at
    /// most one variable at a rational point.
    pub fn eval_univariate(&self, at: &Rational) -> Result<Rational> {
        let active = self.active_vars();
        if active.len() > 1 {
            return Err(KernelError::InvalidInput(
                "polynomial is not univariate".into(),
            ));
        }
        let mut acc = Rational::zero();
        if let Some(&v) = active.first() {
            let min = self.min_degree_in(v);
            if min < 0 && at.is_zero() {
                return Err(KernelError::DivisionByZero);
            }
            for (m, c) in &self.terms {
                let r = c
                    .as_rational()
                    .ok_or_else(|| KernelError::InvalidInput("rational coefficients required".into()))?;
                let e = m.0[v];
                let p = if e >= 0 {
                    num_traits::pow::pow(at.clone(), e as usize)
                } else {
                    num_traits::pow::pow(at.recip(), (-e) as usize)
                };
                acc += r * p;
            }
        } else if let Some(c) = self.constant_value() {
            acc = c
                .as_rational()
                .ok_or_else(|| KernelError::InvalidInput("rational coefficients required".into()))?;
        }
        Ok(acc)
    }
}

// ---------------------------------------------------------------------------
// gcd via content / primitive-part recursion with a primitive PRS
// ---------------------------------------------------------------------------

fn pseudo_rem(a: &Poly, b: &Poly, var: usize) -> Poly {
    let db = b.max_degree_in(var);
    let lb = Poly::from_univariate(b.ring(), var, &[b.as_univariate_in(var).pop().unwrap()]);
    let mut r = a.clone();
    while !r.is_zero() && r.max_degree_in(var) >= db {
        let dr = r.max_degree_in(var);
        let lr_coeff = r.as_univariate_in(var).pop().unwrap();
        let mut shift = vec![0i64; r.ring().nvars()];
        shift[var] = dr - db;
        let lr = Poly::from_univariate(r.ring(), var, &[lr_coeff])
            .mul_monomial(&Monomial(shift))
            .expect("nonnegative shift");
        r = r
            .mul(&lb)
            .and_then(|x| x.sub(&lr.mul(b).expect("same ring")))
            .expect("same ring");
    }
    r
}

fn content_in(p: &Poly, var: usize) -> Poly {
    let coeffs = p.as_univariate_in(var);
    let mut c = Poly::zero(p.ring());
    for coef in coeffs {
        if !coef.is_zero() {
            c = gcd_inner(&c, &coef);
        }
    }
    c
}

fn gcd_inner(p: &Poly, q: &Poly) -> Poly {
    if p.is_zero() {
        return q.monic();
    }
    if q.is_zero() {
        return p.monic();
    }
    if p.constant_value().is_some() || q.constant_value().is_some() {
        return Poly::one(p.ring());
    }
    let var = *p
        .active_vars()
        .first()
        .or(q.active_vars().first().as_ref().map(|v| &**v))
        .expect("nonconstant operand has an active variable");
    let cp = content_in(p, var);
    let cq = content_in(q, var);
    let cont = gcd_inner(&cp, &cq);
    let mut a = p.div_exact(&cp).expect("content divides").unit_normalize();
    let mut b = q.div_exact(&cq).expect("content divides").unit_normalize();
    if a.max_degree_in(var) < b.max_degree_in(var) {
        std::mem::swap(&mut a, &mut b);
    }
    let pp_gcd = loop {
        if b.max_degree_in(var) == 0 {
            // coprime in var: only the content survives
            break Poly::one(p.ring());
        }
        let r = pseudo_rem(&a, &b, var);
        if r.is_zero() {
            break b
                .div_exact(&content_in(&b, var))
                .expect("content divides")
                .unit_normalize();
        }
        a = b;
        b = r
            .div_exact(&content_in(&r, var))
            .expect("content divides")
            .unit_normalize();
    };
    cont.mul(&pp_gcd).expect("same ring").monic()
}

/// Greatest common divisor, canonicalized: Laurent monomial units are
/// stripped and the leading field coefficient is 1. `gcd(0, 0) = 0`.
pub fn poly_gcd(p: &Poly, q: &Poly) -> Result<Poly> {
    if p.ring() != q.ring() && !Arc::ptr_eq(p.ring(), q.ring()) {
        return Err(KernelError::RingMismatch);
    }
    if p.is_zero() && q.is_zero() {
        return Ok(Poly::zero(p.ring()));
    }
    let (a, _) = p.laurent_shift();
    let (b, _) = q.laurent_shift();
    Ok(gcd_inner(&a, &b))
}

// ---------------------------------------------------------------------------
// display
// ---------------------------------------------------------------------------

fn format_term(ring: &PolyRing, m: &Monomial, c: &FieldElem, first: bool, out: &mut String) {
    let vars_part = {
        let mut s = String::new();
        for (i, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('*');
            }
            s.push_str(&ring.vars[i]);
            if e != 1 {
                s.push_str(&format!("^{e}"));
            }
        }
        s
    };
    match c.as_rational() {
        Some(r) => {
            let neg = r.is_negative();
            let mag = r.abs();
            if first {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push('-');
            } else {
                out.push('+');
            }
            if vars_part.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&vars_part);
            } else {
                out.push_str(&mag.to_string());
                out.push('*');
                out.push_str(&vars_part);
            }
        }
        None => {
            let FieldElem::Cyclotomic(cy) = c else {
                unreachable!()
            };
            if !first {
                out.push('+');
            }
            if vars_part.is_empty() {
                out.push_str(&cy.poly_string());
            } else {
                out.push('(');
                out.push_str(&cy.poly_string());
                out.push_str(")*");
                out.push_str(&vars_part);
            }
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            format_term(&self.ring, m, c, first, &mut out);
            first = false;
        }
        write!(f, "{out}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat_int;

    fn ring_h() -> Arc<PolyRing> {
        PolyRing::rational(&["h"])
    }

    #[test]
    fn product_expands() {
        let r = ring_h();
        let h = Poly::var(&r, 0);
        let hm1 = h.sub(&Poly::one(&r)).unwrap();
        let p = h.mul(&hm1).unwrap();
        assert_eq!(p.to_string(), "h^2-h");
    }

    #[test]
    fn exact_division() {
        let r = ring_h();
        let h = Poly::var(&r, 0);
        let p = h.pow(2).sub(&Poly::one(&r)).unwrap();
        let q = h.sub(&Poly::one(&r)).unwrap();
        let quot = p.div_exact(&q).unwrap();
        assert_eq!(quot.to_string(), "h+1");
    }

    #[test]
    fn inexact_division_detected() {
        let r = ring_h();
        let h = Poly::var(&r, 0);
        let q = h.sub(&Poly::one(&r)).unwrap();
        assert_eq!(h.div_exact(&q), Err(KernelError::InexactDivision));
    }

    #[test]
    fn laurent_units_invert() {
        let r = PolyRing::rational_laurent(&["h"]);
        let h2 = Poly::var(&r, 0).scale_rat(&rat_int(2));
        let inv = h2.inverse_unit().unwrap();
        assert_eq!(h2.mul(&inv).unwrap(), Poly::one(&r));
        let one = Poly::one(&r);
        let p = one.add(&Poly::var(&r, 0)).unwrap();
        assert!(p.inverse_unit().is_err());
    }

    #[test]
    fn laurent_division() {
        let r = PolyRing::rational_laurent(&["h"]);
        let h = Poly::var(&r, 0);
        let one = Poly::one(&r);
        // 1 / h = h^{-1}
        let q = one.div_exact(&h).unwrap();
        assert_eq!(q, Poly::monomial(&r, vec![-1], FieldElem::one(r.field())).unwrap());
    }

    #[test]
    fn multivariate_gcd() {
        let r = PolyRing::rational(&["x", "y"]);
        let x = Poly::var(&r, 0);
        let y = Poly::var(&r, 1);
        let f = x.add(&y).unwrap();
        let a = f.pow(2).mul(&x).unwrap();
        let b = f.mul(&y).unwrap();
        let g = poly_gcd(&a, &b).unwrap();
        assert_eq!(g, f.monic());
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        let r = ring_h();
        let h = Poly::var(&r, 0);
        let a = h.clone();
        let b = h.sub(&Poly::constant_i64(&r, 2)).unwrap();
        assert_eq!(poly_gcd(&a, &b).unwrap(), Poly::one(&r));
    }

    #[test]
    fn substitution_is_shift() {
        let r = ring_h();
        let h = Poly::var(&r, 0);
        let img = h.sub(&Poly::one(&r)).unwrap();
        let p = h.pow(2);
        let q = p.substitute(&[img]).unwrap();
        assert_eq!(q.to_string(), "h^2-2*h+1");
    }

    #[test]
    fn display_order_is_graded_lex_descending() {
        let r = PolyRing::rational(&["h1", "h2"]);
        let h1 = Poly::var(&r, 0);
        let h2 = Poly::var(&r, 1);
        let p = h2
            .add(&h1.mul(&h2).unwrap())
            .unwrap()
            .add(&Poly::one(&r))
            .unwrap();
        assert_eq!(p.to_string(), "h1*h2+h2+1");
    }

    #[test]
    fn univariate_eval() {
        let r = ring_h();
        let h = Poly::var(&r, 0);
        let p = h.pow(2).sub(&Poly::constant_i64(&r, 4)).unwrap();
        assert_eq!(p.eval_univariate(&rat_int(2)).unwrap(), rat_int(0));
        assert_eq!(p.eval_univariate(&rat_int(3)).unwrap(), rat_int(5));
    }
}
