//! Resultants of univariate views via fraction-free (Bareiss) elimination
//! on the Sylvester matrix, plus integer-root extraction for univariate
//! polynomials with rational coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::coeff::Rational;
use crate::error::{KernelError, Result};
use crate::poly::Poly;

/// Determinant of a square matrix of polynomials by Bareiss elimination;
/// every division is exact over the integral domain.
fn bareiss_det(mut m: Vec<Vec<Poly>>) -> Poly {
    let n = m.len();
    let ring = m[0][0].ring().clone();
    if n == 0 {
        return Poly::one(&ring);
    }
    let mut sign = false;
    let mut prev = Poly::one(&ring);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Poly::zero(&ring);
            };
            m.swap(k, r);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k]
                    .mul(&m[i][j])
                    .and_then(|x| x.sub(&m[i][k].mul(&m[k][j]).expect("same ring")))
                    .expect("same ring");
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = Poly::zero(&ring);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        det.neg()
    } else {
        det
    }
}

/// Resultant of `p` and `q` with respect to `var`, i.e. the determinant of
/// the Sylvester matrix of their univariate views in that variable. Zero
/// exactly when the two share a factor of positive degree in `var`.
pub fn resultant(p: &Poly, q: &Poly, var: &str) -> Result<Poly> {
    let ring = p.ring().clone();
    let Some(v) = ring.var_index(var) else {
        return Err(KernelError::VariableAbsent(var.to_string()));
    };
    if p.is_zero() || q.is_zero() {
        return Err(KernelError::ZeroPolynomial);
    }
    if p.min_degree_in(v) < 0 || q.min_degree_in(v) < 0 {
        return Err(KernelError::InvalidInput(
            "resultant requires nonnegative exponents in the chosen variable".into(),
        ));
    }
    let pc = p.as_univariate_in(v);
    let qc = q.as_univariate_in(v);
    let m = pc.len() - 1;
    let n = qc.len() - 1;
    if m == 0 && n == 0 {
        return Ok(Poly::one(&ring));
    }
    if m == 0 {
        return Ok(pc[0].pow(n as u32));
    }
    if n == 0 {
        return Ok(qc[0].pow(m as u32));
    }
    let size = m + n;
    let zero = Poly::zero(&ring);
    let mut mat = vec![vec![zero; size]; size];
    for row in 0..n {
        for (k, c) in pc.iter().rev().enumerate() {
            mat[row][row + k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in qc.iter().rev().enumerate() {
            mat[n + row][row + k] = c.clone();
        }
    }
    Ok(bareiss_det(mat))
}

/// All integer roots (without multiplicity) of a univariate polynomial with
/// rational coefficients. The zero polynomial is rejected: every integer
/// would be a root.
pub fn integer_roots(p: &Poly) -> Result<Vec<BigInt>> {
    if p.is_zero() {
        return Err(KernelError::ZeroPolynomial);
    }
    let (p, _) = p.laurent_shift();
    let active = p.active_vars();
    if active.len() > 1 {
        return Err(KernelError::InvalidInput(
            "integer_roots requires a univariate polynomial".into(),
        ));
    }
    let mut roots = Vec::new();
    let Some(&v) = active.first() else {
        return Ok(roots); // nonzero constant
    };
    let vmin = p.min_degree_in(v);
    if vmin > 0 {
        roots.push(BigInt::zero());
    }
    // integer coefficient vector of the x^vmin-stripped part
    let deg = p.max_degree_in(v) - vmin;
    let mut coeffs = vec![Rational::zero(); deg as usize + 1];
    for (m, c) in p.terms() {
        coeffs[(m.0[v] - vmin) as usize] = c
            .as_rational()
            .ok_or_else(|| KernelError::InvalidInput("rational coefficients required".into()))?;
    }
    let mut denom_lcm = BigInt::one();
    for c in &coeffs {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * Rational::from(denom_lcm.clone())).to_integer())
        .collect();
    let content = ints
        .iter()
        .fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let ints: Vec<BigInt> = ints.iter().map(|c| c / &content).collect();
    let trailing = ints[0].abs();
    debug_assert!(!trailing.is_zero());
    // Cauchy bound: any root r satisfies |r| <= 1 + max|a_i| / |lead|
    let lead = ints.last().unwrap().abs();
    let maxc = ints.iter().map(|c| c.abs()).max().unwrap();
    let bound = BigInt::one() + maxc / &lead + 1;
    let eval = |x: &BigInt| -> BigInt {
        let mut acc = BigInt::zero();
        for c in ints.iter().rev() {
            acc = acc * x + c;
        }
        acc
    };
    let mut d = BigInt::one();
    while &d * &d <= trailing {
        if (&trailing % &d).is_zero() {
            for cand in [d.clone(), &trailing / &d] {
                if cand <= bound {
                    if eval(&cand).is_zero() {
                        roots.push(cand.clone());
                    }
                    if eval(&(-&cand)).is_zero() {
                        roots.push(-cand);
                    }
                }
            }
        }
        d += 1;
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyRing;

    #[test]
    fn sylvester_two_by_two() {
        let r = PolyRing::rational(&["h", "t"]);
        let h = Poly::var(&r, 0);
        let t = Poly::var(&r, 1);
        // Res_h(h, h - t) = -t
        let res = resultant(&h, &h.sub(&t).unwrap(), "h").unwrap();
        assert_eq!(res, t.neg());
        // Res_h(h, h - 2) = -2
        let c2 = Poly::constant_i64(&r, 2);
        let res = resultant(&h, &h.sub(&c2).unwrap(), "h").unwrap();
        assert_eq!(res, Poly::constant_i64(&r, -2));
    }

    #[test]
    fn common_factor_gives_zero() {
        let r = PolyRing::rational(&["h"]);
        let h = Poly::var(&r, 0);
        let p = h.sub(&Poly::one(&r)).unwrap();
        assert!(resultant(&p, &p, "h").unwrap().is_zero());
    }

    #[test]
    fn unknown_variable_is_rejected() {
        let r = PolyRing::rational(&["h"]);
        let h = Poly::var(&r, 0);
        assert_eq!(
            resultant(&h, &h, "x"),
            Err(KernelError::VariableAbsent("x".into()))
        );
    }

    #[test]
    fn integer_roots_examples() {
        let r = PolyRing::rational(&["t"]);
        let t = Poly::var(&r, 0);
        let four = Poly::constant_i64(&r, 4);
        let roots = integer_roots(&t.pow(2).sub(&four).unwrap()).unwrap();
        assert_eq!(roots, vec![BigInt::from(-2), BigInt::from(2)]);
        let none = integer_roots(&t.pow(2).add(&Poly::one(&r)).unwrap()).unwrap();
        assert!(none.is_empty());
        let zero_root = integer_roots(&t.neg()).unwrap();
        assert_eq!(zero_root, vec![BigInt::zero()]);
        assert_eq!(
            integer_roots(&Poly::zero(&r)),
            Err(KernelError::ZeroPolynomial)
        );
    }

    #[test]
    fn rational_coefficients_are_cleared() {
        let r = PolyRing::rational(&["t"]);
        let t = Poly::var(&r, 0);
        // (t/2 - 1)(t + 3) has integer roots 2 and -3
        let f = t
            .scale_rat(&crate::coeff::rat(1, 2))
            .sub(&Poly::one(&r))
            .unwrap()
            .mul(&t.add(&Poly::constant_i64(&r, 3)).unwrap())
            .unwrap();
        let roots = integer_roots(&f).unwrap();
        assert_eq!(roots, vec![BigInt::from(-3), BigInt::from(2)]);
    }
}
