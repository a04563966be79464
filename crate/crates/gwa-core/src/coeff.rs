//! Exact coefficient fields: arbitrary-precision rationals and the
//! cyclotomic extensions `Q(zeta_m)` represented as residues mod the m-th
//! cyclotomic polynomial.
//!
//! Every value is kept in a unique reduced canonical form so that equality
//! of field elements is structural equality. No floating point is used
//! anywhere.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{KernelError, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Which coefficient field a ring is defined over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldDesc {
    Rational,
    /// `Q(zeta_m)` for the given conductor `m >= 1`.
    Cyclotomic { conductor: u32 },
}

impl fmt::Display for FieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDesc::Rational => write!(f, "Q"),
            FieldDesc::Cyclotomic { conductor } => write!(f, "Q(zeta_{conductor})"),
        }
    }
}

pub fn euler_phi(m: u32) -> u32 {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

// ---------------------------------------------------------------------------
// dense univariate helpers over Q, used for the modulus arithmetic
// ---------------------------------------------------------------------------

fn upoly_trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn upoly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    upoly_trim(&mut out);
    out
}

/// Division with remainder in Q[x]; divisor must be nonzero.
fn upoly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut rem = a.to_vec();
    upoly_trim(&mut rem);
    let db = b.len() - 1;
    let lb = &b[db];
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    while rem.len() > db {
        let dr = rem.len() - 1;
        let c = &rem[dr] / lb;
        for i in 0..=db {
            let t = &b[i] * &c;
            rem[dr - db + i] -= t;
        }
        quot[dr - db] = c;
        upoly_trim(&mut rem);
        if rem.is_empty() {
            break;
        }
    }
    upoly_trim(&mut quot);
    (quot, rem)
}

/// The m-th cyclotomic polynomial as a dense coefficient vector
/// (ascending degree, monic, degree `phi(m)`), cached per conductor.
pub fn cyclotomic_polynomial(m: u32) -> Vec<Rational> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<Rational>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&m) {
        return hit.clone();
    }
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    let mut num = vec![Rational::zero(); m as usize + 1];
    num[0] = -Rational::one();
    num[m as usize] = Rational::one();
    for d in 1..m {
        if m % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            let (q, r) = upoly_divmod(&num, &phi_d);
            debug_assert!(r.is_empty());
            num = q;
        }
    }
    debug_assert_eq!(num.len() as u32 - 1, euler_phi(m));
    cache.lock().unwrap().insert(m, num.clone());
    num
}

// ---------------------------------------------------------------------------
// cyclotomic field elements
// ---------------------------------------------------------------------------

/// An element of `Q(zeta_m)`, stored as the unique residue mod `Phi_m` with
/// exactly `phi(m)` coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero(conductor: u32) -> Self {
        assert!(conductor >= 1);
        Cyclotomic {
            conductor,
            coeffs: vec![Rational::zero(); euler_phi(conductor) as usize],
        }
    }

    pub fn from_rational(conductor: u32, value: Rational) -> Self {
        let mut c = Cyclotomic::zero(conductor);
        c.coeffs[0] = value;
        c.reduce_constant_conductor_one();
        c
    }

    // For m = 1 the modulus is x - 1, so phi(1) = 1 and the representation
    // is already a plain rational; nothing extra to do. Kept as a hook so
    // from_rational stays total for every conductor.
    fn reduce_constant_conductor_one(&mut self) {}

    /// Reduce an arbitrary dense polynomial in `zeta_m` to the canonical
    /// residue.
    pub fn from_dense(conductor: u32, dense: Vec<Rational>) -> Self {
        let modulus = cyclotomic_polynomial(conductor);
        let (_, mut rem) = upoly_divmod(&dense, &modulus);
        let width = euler_phi(conductor) as usize;
        rem.resize(width, Rational::zero());
        Cyclotomic {
            conductor,
            coeffs: rem,
        }
    }

    /// `zeta_m^k`, with `k` arbitrary (reduced mod m).
    pub fn root_of_unity(conductor: u32, k: i64) -> Self {
        assert!(conductor >= 1);
        let k = k.rem_euclid(conductor as i64) as usize;
        let mut dense = vec![Rational::zero(); k + 1];
        dense[k] = Rational::one();
        Cyclotomic::from_dense(conductor, dense)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value when the element lies in the prime field.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.conductor != other.conductor {
            return Err(KernelError::FieldMismatch(
                format!("Q(zeta_{})", self.conductor),
                format!("Q(zeta_{})", other.conductor),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Cyclotomic {
            conductor: self.conductor,
            coeffs,
        })
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let prod = upoly_mul(&self.coeffs, &other.coeffs);
        Ok(Cyclotomic::from_dense(self.conductor, prod))
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// `Phi_m`, which is irreducible over Q.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(KernelError::DivisionByZero);
        }
        let modulus = cyclotomic_polynomial(self.conductor);
        let mut a = self.coeffs.clone();
        upoly_trim(&mut a);
        // Bezout: s*a + t*modulus = g with g a nonzero constant.
        let mut r0 = a;
        let mut r1 = modulus;
        let mut s0 = vec![Rational::one()];
        let mut s1: Vec<Rational> = Vec::new();
        while !r1.is_empty() {
            let (q, r) = upoly_divmod(&r0, &r1);
            let qs1 = upoly_mul(&q, &s1);
            let mut s = s0.clone();
            s.resize(s.len().max(qs1.len()), Rational::zero());
            for (i, c) in qs1.iter().enumerate() {
                s[i] -= c;
            }
            upoly_trim(&mut s);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        debug_assert_eq!(r0.len(), 1, "Phi_m must be irreducible over Q");
        let g = r0[0].clone();
        let inv: Vec<Rational> = s0.iter().map(|c| c / &g).collect();
        Ok(Cyclotomic::from_dense(self.conductor, inv))
    }

    /// Text form as a polynomial in `z`, highest power first.
    pub fn poly_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push('-');
            } else {
                out.push('+');
            }
            let coef_one = mag.is_one();
            if !coef_one || k == 0 {
                out.push_str(&mag.to_string());
            }
            if k > 0 {
                if !coef_one {
                    out.push('*');
                }
                out.push('z');
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// tagged field elements
// ---------------------------------------------------------------------------

/// A value in one of the supported coefficient fields. All arithmetic is
/// exact and results are canonical, so `==` decides field equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldElem {
    Rational(Rational),
    Cyclotomic(Cyclotomic),
}

impl FieldElem {
    pub fn desc(&self) -> FieldDesc {
        match self {
            FieldElem::Rational(_) => FieldDesc::Rational,
            FieldElem::Cyclotomic(c) => FieldDesc::Cyclotomic {
                conductor: c.conductor(),
            },
        }
    }

    pub fn zero(desc: FieldDesc) -> Self {
        match desc {
            FieldDesc::Rational => FieldElem::Rational(Rational::zero()),
            FieldDesc::Cyclotomic { conductor } => FieldElem::Cyclotomic(Cyclotomic::zero(conductor)),
        }
    }

    pub fn one(desc: FieldDesc) -> Self {
        Self::from_rational(desc, Rational::one())
    }

    pub fn from_rational(desc: FieldDesc, value: Rational) -> Self {
        match desc {
            FieldDesc::Rational => FieldElem::Rational(value),
            FieldDesc::Cyclotomic { conductor } => {
                FieldElem::Cyclotomic(Cyclotomic::from_rational(conductor, value))
            }
        }
    }

    pub fn from_i64(desc: FieldDesc, value: i64) -> Self {
        Self::from_rational(desc, rat_int(value))
    }

    /// `zeta_m^k` as an element of the field described by `desc`.
    /// Rationals only contain the roots with m | 2; a cyclotomic field of
    /// conductor c contains them exactly when m | c.
    pub fn root_of_unity_in(desc: FieldDesc, m: u32, k: i64) -> Result<Self> {
        assert!(m >= 1);
        match desc {
            FieldDesc::Rational => {
                let k = k.rem_euclid(m as i64) as u32;
                let ord = m / num_integer::gcd(m, k);
                match ord {
                    1 => Ok(FieldElem::Rational(Rational::one())),
                    2 => Ok(FieldElem::Rational(-Rational::one())),
                    _ => Err(KernelError::FieldLacksRoots(m)),
                }
            }
            FieldDesc::Cyclotomic { conductor } => {
                if conductor % m != 0 {
                    return Err(KernelError::FieldLacksRoots(m));
                }
                let step = (conductor / m) as i64;
                Ok(FieldElem::Cyclotomic(Cyclotomic::root_of_unity(
                    conductor,
                    k * step,
                )))
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Rational(r) => r.is_zero(),
            FieldElem::Cyclotomic(c) => c.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_one())
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            FieldElem::Rational(r) => Some(r.clone()),
            FieldElem::Cyclotomic(c) => c.as_rational(),
        }
    }

    fn mismatch(&self, other: &Self) -> KernelError {
        KernelError::FieldMismatch(self.desc().to_string(), other.desc().to_string())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => Ok(FieldElem::Rational(a + b)),
            (FieldElem::Cyclotomic(a), FieldElem::Cyclotomic(b)) => {
                Ok(FieldElem::Cyclotomic(a.add(b)?))
            }
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        match self {
            FieldElem::Rational(r) => FieldElem::Rational(-r),
            FieldElem::Cyclotomic(c) => FieldElem::Cyclotomic(c.neg()),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => Ok(FieldElem::Rational(a * b)),
            (FieldElem::Cyclotomic(a), FieldElem::Cyclotomic(b)) => {
                Ok(FieldElem::Cyclotomic(a.mul(b)?))
            }
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        match self {
            FieldElem::Rational(r) => {
                if r.is_zero() {
                    Err(KernelError::DivisionByZero)
                } else {
                    Ok(FieldElem::Rational(r.recip()))
                }
            }
            FieldElem::Cyclotomic(c) => Ok(FieldElem::Cyclotomic(c.inverse()?)),
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.inverse()?)
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut out = FieldElem::one(self.desc());
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base)?;
        }
        Ok(out)
    }

    /// Scale by a plain rational regardless of the field.
    pub fn scale_rational(&self, r: &Rational) -> Self {
        let factor = FieldElem::from_rational(self.desc(), r.clone());
        self.mul(&factor).expect("same field by construction")
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Rational(r) => write!(f, "{r}"),
            FieldElem::Cyclotomic(c) => write!(f, "{} (m={})", c.poly_string(), c.conductor()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(desc_m: u32, k: i64) -> FieldElem {
        FieldElem::Cyclotomic(Cyclotomic::root_of_unity(desc_m, k))
    }

    #[test]
    fn rational_arithmetic_reduces() {
        let a = FieldElem::Rational(rat(1, 2));
        let b = FieldElem::Rational(rat(1, 3));
        assert_eq!(a.add(&b).unwrap(), FieldElem::Rational(rat(5, 6)));
    }

    #[test]
    fn zeta4_squares_to_minus_one() {
        let z = cyc(4, 1);
        let sq = z.mul(&z).unwrap();
        assert_eq!(sq.as_rational().unwrap(), rat_int(-1));
    }

    #[test]
    fn phi3_relation() {
        // zeta_3^2 + zeta_3 + 1 = 0
        let z = cyc(3, 1);
        let z2 = cyc(3, 2);
        let one = FieldElem::one(z.desc());
        let sum = z2.add(&z).unwrap().add(&one).unwrap();
        assert!(sum.is_zero());
    }

    #[test]
    fn small_roots_of_unity() {
        assert_eq!(cyc(2, 1).as_rational().unwrap(), rat_int(-1));
        assert_eq!(cyc(4, 2).as_rational().unwrap(), rat_int(-1));
        assert_eq!(cyc(3, 3).as_rational().unwrap(), rat_int(1));
    }

    #[test]
    fn roots_have_order_dividing_m() {
        for m in 1..=12u32 {
            for k in 1..=m {
                let z = Cyclotomic::root_of_unity(m, k as i64);
                let mut acc = Cyclotomic::from_rational(m, Rational::one());
                for _ in 0..m {
                    acc = acc.mul(&z).unwrap();
                }
                assert_eq!(acc.as_rational(), Some(Rational::one()), "m={m} k={k}");
            }
        }
    }

    #[test]
    fn root_order_is_m_over_gcd() {
        // zeta_6^4 has order 3
        let z = Cyclotomic::root_of_unity(6, 4);
        let mut acc = Cyclotomic::from_rational(6, Rational::one());
        let mut order = 0;
        for i in 1..=6 {
            acc = acc.mul(&z).unwrap();
            if acc.as_rational() == Some(Rational::one()) {
                order = i;
                break;
            }
        }
        assert_eq!(order, 3);
    }

    #[test]
    fn field_mismatch_on_different_conductors() {
        let a = cyc(3, 1);
        let b = cyc(4, 1);
        assert!(matches!(a.add(&b), Err(KernelError::FieldMismatch(..))));
    }

    #[test]
    fn division_by_zero_detected() {
        let a = FieldElem::Rational(rat_int(1));
        let z = FieldElem::Rational(rat_int(0));
        assert_eq!(a.div(&z), Err(KernelError::DivisionByZero));
        let c = cyc(4, 1);
        let cz = FieldElem::zero(c.desc());
        assert_eq!(c.div(&cz), Err(KernelError::DivisionByZero));
    }

    #[test]
    fn inverse_in_cyclotomic_field() {
        // (1 + zeta_5) * (1 + zeta_5)^{-1} = 1
        let one = Cyclotomic::from_rational(5, Rational::one());
        let a = one.add(&Cyclotomic::root_of_unity(5, 1)).unwrap();
        let prod = a.mul(&a.inverse().unwrap()).unwrap();
        assert_eq!(prod.as_rational(), Some(Rational::one()));
    }

    #[test]
    fn rational_field_contains_only_second_roots() {
        assert!(FieldElem::root_of_unity_in(FieldDesc::Rational, 2, 1).is_ok());
        assert!(matches!(
            FieldElem::root_of_unity_in(FieldDesc::Rational, 3, 1),
            Err(KernelError::FieldLacksRoots(3))
        ));
        // zeta_4^2 = -1 is rational even though zeta_4 is not
        let v = FieldElem::root_of_unity_in(FieldDesc::Rational, 4, 2).unwrap();
        assert_eq!(v.as_rational().unwrap(), rat_int(-1));
    }

    #[test]
    fn roots_embed_into_larger_conductors() {
        let desc = FieldDesc::Cyclotomic { conductor: 6 };
        let z3 = FieldElem::root_of_unity_in(desc, 3, 1).unwrap();
        let z3_direct = FieldElem::root_of_unity_in(desc, 6, 2).unwrap();
        assert_eq!(z3, z3_direct);
    }

    #[test]
    fn display_forms() {
        assert_eq!(FieldElem::Rational(rat(5, 6)).to_string(), "5/6");
        let z = cyc(8, 2);
        assert_eq!(z.to_string(), "z^2 (m=8)");
    }
}
