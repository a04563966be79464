//! Shared deterministic random generators for the integration suites.

#![allow(dead_code)]

use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use gwa_core::coeff::{FieldElem, Rational};
use gwa_core::gwa::{DegreeVector, GwaElement, GwaPresentation};
use gwa_core::poly::{Poly, PolyRing};
use gwa_core::ratfunc::RatFunc;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn weyl(n: usize) -> Arc<GwaPresentation> {
    if n == 1 {
        GwaPresentation::first_weyl()
    } else {
        GwaPresentation::tensor_power(&GwaPresentation::first_weyl(), n).expect("tensor power")
    }
}

/// Quantum rank-1 seed `Q[h^{±1}](h, h -> lambda h)`.
pub fn quantum_seed(lambda: i64) -> Arc<GwaPresentation> {
    let ring = PolyRing::rational_laurent(&["h"]);
    let lam = FieldElem::from_rational(ring.field(), Rational::from(num_bigint::BigInt::from(lambda)));
    let s = gwa_core::automorphism::RingAutomorphism::scaling(&ring, 0, &lam).expect("nonzero");
    GwaPresentation::new(ring.clone(), vec![Poly::var(&ring, 0)], vec![s]).expect("valid")
}

pub fn random_rational(r: &mut StdRng) -> Rational {
    let num = r.gen_range(-9i64..=9);
    let den = r.gen_range(1i64..=9);
    Rational::new(num.into(), den.into())
}

pub fn nonzero_rational(r: &mut StdRng) -> Rational {
    loop {
        let q = random_rational(r);
        if !num_traits::Zero::is_zero(&q) {
            return q;
        }
    }
}

/// A random polynomial with at most `max_terms` terms of degree at most
/// `max_deg` per variable (negative exponents drawn for Laurent variables).
pub fn random_poly(r: &mut StdRng, ring: &Arc<PolyRing>, max_deg: i64, max_terms: usize) -> Poly {
    let mut p = Poly::zero(ring);
    let terms = r.gen_range(0..=max_terms);
    for _ in 0..terms {
        let exps: Vec<i64> = (0..ring.nvars())
            .map(|i| {
                if ring.is_laurent(i) {
                    r.gen_range(-max_deg..=max_deg)
                } else {
                    r.gen_range(0..=max_deg)
                }
            })
            .collect();
        let coeff = FieldElem::from_rational(ring.field(), random_rational(r));
        if let Ok(t) = Poly::monomial(ring, exps, coeff) {
            p = p.add(&t).expect("same ring");
        }
    }
    p
}

pub fn nonzero_poly(r: &mut StdRng, ring: &Arc<PolyRing>, max_deg: i64, max_terms: usize) -> Poly {
    loop {
        let p = random_poly(r, ring, max_deg, max_terms.max(1));
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn random_ratfunc(r: &mut StdRng, ring: &Arc<PolyRing>, max_deg: i64) -> RatFunc {
    let num = random_poly(r, ring, max_deg, 3);
    let den = nonzero_poly(r, ring, max_deg, 2);
    RatFunc::new(num, den).expect("nonzero denominator")
}

pub fn random_degree(r: &mut StdRng, n: usize, box_radius: i64) -> DegreeVector {
    DegreeVector((0..n).map(|_| r.gen_range(-box_radius..=box_radius)).collect())
}

/// A random normal-form element with at most `max_supp` distinct degrees.
pub fn random_element(
    r: &mut StdRng,
    a: &Arc<GwaPresentation>,
    max_supp: usize,
    box_radius: i64,
    coeff_deg: i64,
) -> GwaElement {
    let mut x = GwaElement::zero(a);
    let k = r.gen_range(0..=max_supp);
    for _ in 0..k {
        let z = random_degree(r, a.rank(), box_radius);
        let c = random_poly(r, a.base(), coeff_deg, 3);
        if c.is_zero() {
            continue;
        }
        let t = GwaElement::monomial(a, z, c).expect("matching rank");
        x = x.add(&t).expect("same algebra");
    }
    x
}
