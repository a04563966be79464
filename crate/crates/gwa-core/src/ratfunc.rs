//! Rational functions `num/den` over a polynomial ring, kept in a unique
//! reduced canonical form: gcd removed, Laurent monomial units pulled into
//! the numerator, denominator monic under the graded-lex leading term.
//! Structural equality therefore decides equality of fractions.

use std::fmt;
use std::sync::Arc;

use crate::coeff::{FieldElem, Rational};
use crate::error::{KernelError, Result};
use crate::poly::{poly_gcd, Poly, PolyRing};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(KernelError::DivisionByZero);
        }
        if num.ring() != den.ring() && !Arc::ptr_eq(num.ring(), den.ring()) {
            return Err(KernelError::RingMismatch);
        }
        let mut f = RatFunc { num, den };
        f.reduce()?;
        Ok(f)
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        let one = Poly::one(p.ring());
        RatFunc { num: p, den: one }
    }

    pub fn zero(ring: &Arc<PolyRing>) -> RatFunc {
        RatFunc::from_poly(Poly::zero(ring))
    }

    pub fn one(ring: &Arc<PolyRing>) -> RatFunc {
        RatFunc::from_poly(Poly::one(ring))
    }

    fn reduce(&mut self) -> Result<()> {
        if self.num.is_zero() {
            self.den = Poly::one(self.num.ring());
            return Ok(());
        }
        let g = poly_gcd(&self.num, &self.den)?;
        if !g.is_one() {
            self.num = self.num.div_exact(&g)?;
            self.den = self.den.div_exact(&g)?;
        }
        // pull the denominator's Laurent monomial part into the numerator
        let (den, shift) = self.den.laurent_shift();
        if !shift.is_zero() {
            self.den = den;
            self.num = self.num.mul_monomial(&shift.neg())?;
        }
        // unit-normalize: monic denominator
        let lc = self
            .den
            .leading_coeff()
            .expect("nonzero denominator")
            .clone();
        if !lc.is_one() {
            let inv = lc.inverse()?;
            self.den = self.den.scale(&inv);
            self.num = self.num.scale(&inv);
        }
        Ok(())
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.num.ring()
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// Membership in the base (Laurent) polynomial ring.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        if self.is_polynomial() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// Construct from an already-reduced pair, skipping the gcd step but
    /// keeping the Laurent and leading-coefficient normalization.
    fn from_reduced(num: Poly, den: Poly) -> Result<RatFunc> {
        let mut f = RatFunc { num, den };
        if f.num.is_zero() {
            f.den = Poly::one(f.num.ring());
            return Ok(f);
        }
        let (den, shift) = f.den.laurent_shift();
        if !shift.is_zero() {
            f.den = den;
            f.num = f.num.mul_monomial(&shift.neg())?;
        }
        let lc = f.den.leading_coeff().expect("nonzero denominator").clone();
        if !lc.is_one() {
            let inv = lc.inverse()?;
            f.den = f.den.scale(&inv);
            f.num = f.num.scale(&inv);
        }
        Ok(f)
    }

    /// Addition with denominator-gcd splitting: only the shared denominator
    /// part can reappear in the sum, so one small gcd suffices.
    pub fn add(&self, other: &RatFunc) -> Result<RatFunc> {
        let g = poly_gcd(&self.den, &other.den)?;
        if g.is_one() {
            let num = self
                .num
                .mul(&other.den)?
                .add(&other.num.mul(&self.den)?)?;
            return RatFunc::from_reduced(num, self.den.mul(&other.den)?);
        }
        let d1 = self.den.div_exact(&g)?;
        let d2 = other.den.div_exact(&g)?;
        let num = self.num.mul(&d2)?.add(&other.num.mul(&d1)?)?;
        let h = poly_gcd(&num, &g)?;
        let num = num.div_exact(&h)?;
        let den = self.den.mul(&d2)?.div_exact(&h)?;
        RatFunc::from_reduced(num, den)
    }

    pub fn sub(&self, other: &RatFunc) -> Result<RatFunc> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RatFunc) -> Result<RatFunc> {
        RatFunc::new(self.num.mul(&other.num)?, self.den.mul(&other.den)?)
    }

    pub fn mul_poly(&self, p: &Poly) -> Result<RatFunc> {
        RatFunc::new(self.num.mul(p)?, self.den.clone())
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        if other.is_zero() {
            return Err(KernelError::DivisionByZero);
        }
        RatFunc::new(self.num.mul(&other.den)?, self.den.mul(&other.num)?)
    }

    pub fn inverse(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(KernelError::DivisionByZero);
        }
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &FieldElem) -> RatFunc {
        RatFunc::new(self.num.scale(c), self.den.clone()).expect("nonzero denominator")
    }

    pub fn scale_rat(&self, r: &Rational) -> RatFunc {
        RatFunc::new(self.num.scale_rat(r), self.den.clone()).expect("nonzero denominator")
    }

    pub fn pow(&self, k: i64) -> Result<RatFunc> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut out = RatFunc::one(self.ring());
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base)?;
        }
        Ok(out)
    }

    /// Substitute every variable by its image (the images must form a ring
    /// map that keeps the denominator nonzero, as automorphisms do).
    pub fn substitute(&self, images: &[Poly]) -> Result<RatFunc> {
        RatFunc::new(self.num.substitute(images)?, self.den.substitute(images)?)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let num = if self.num.num_terms() > 1 {
            format!("({})", self.num)
        } else {
            self.num.to_string()
        };
        let den_str = self.den.to_string();
        let den_atomic = self.den.num_terms() == 1
            && !den_str.contains('*')
            && !den_str.contains('^')
            && !den_str.starts_with('-');
        if den_atomic {
            write!(f, "{num}/{den_str}")
        } else {
            write!(f, "{num}/({den_str})")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat_int;

    #[test]
    fn canonical_reduction() {
        let r = PolyRing::rational(&["h"]);
        let h = Poly::var(&r, 0);
        let one = Poly::one(&r);
        // (h^2-1)/(h-1) reduces to h+1
        let f = RatFunc::new(h.pow(2).sub(&one).unwrap(), h.sub(&one).unwrap()).unwrap();
        assert!(f.is_polynomial());
        assert_eq!(f.numerator().to_string(), "h+1");
    }

    #[test]
    fn cross_multiplication_equality() {
        let r = PolyRing::rational(&["h"]);
        let h = Poly::var(&r, 0);
        let one = Poly::one(&r);
        // 2h/(2h-2) == h/(h-1) structurally
        let a = RatFunc::new(
            h.scale_rat(&rat_int(2)),
            h.scale_rat(&rat_int(2)).sub(&one.scale_rat(&rat_int(2))).unwrap(),
        )
        .unwrap();
        let b = RatFunc::new(h.clone(), h.sub(&one).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn laurent_denominators_become_units() {
        let r = PolyRing::rational_laurent(&["h"]);
        let h = Poly::var(&r, 0);
        let one = Poly::one(&r);
        let f = RatFunc::new(one, h).unwrap();
        // in a Laurent ring 1/h is the polynomial h^{-1}
        assert!(f.is_polynomial());
        assert_eq!(f.numerator().min_degree_in(0), -1);
    }

    #[test]
    fn division_by_zero() {
        let r = PolyRing::rational(&["h"]);
        let h = Poly::var(&r, 0);
        assert_eq!(
            RatFunc::new(h, Poly::zero(&r)),
            Err(KernelError::DivisionByZero)
        );
    }

    #[test]
    fn display() {
        let r = PolyRing::rational(&["h"]);
        let h = Poly::var(&r, 0);
        let one = Poly::one(&r);
        let f = RatFunc::new(h.clone(), h.add(&one).unwrap()).unwrap();
        assert_eq!(f.to_string(), "h/(h+1)");
        let g = RatFunc::new(h.add(&one).unwrap(), h.clone()).unwrap();
        assert_eq!(g.to_string(), "(h+1)/h");
    }
}
