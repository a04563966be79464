//! Property suites for the kernel invariants: field axioms, substitution
//! round-trips, resultant/gcd agreement, canonical rational functions,
//! grading, the evaluation module law, symmetrizer invariance, the
//! W-invariant decomposition, and fixed-ring consistency.

mod common;

use std::sync::Arc;

use proptest::prelude::*;
use rand::Rng;

use common::*;
use gwa_core::automorphism::RingAutomorphism;
use gwa_core::checkers::{
    act, brute_force_simple_classical, check_simple_classical, classical_scan_bound, jw_fixed_ring,
    reynolds,
};
use gwa_core::coeff::{rat_int, Cyclotomic, FieldElem, Rational};
use gwa_core::group::enumerate_group;
use gwa_core::gwa::{DegreeVector, GwaElement};
use gwa_core::poly::{poly_gcd, Poly, PolyRing};
use gwa_core::ratfunc::RatFunc;
use gwa_core::resultant::resultant;
use gwa_core::skew::{SkewContext, SkewElement, WGroup};

// ---------------------------------------------------------------------------
// coefficient fields
// ---------------------------------------------------------------------------

fn arb_rational() -> impl Strategy<Value = FieldElem> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| FieldElem::Rational(Rational::new(n.into(), d.into())))
}

fn arb_cyclotomic() -> impl Strategy<Value = FieldElem> {
    proptest::collection::vec((-9i64..9, 1i64..9), 4).prop_map(|cs| {
        let dense: Vec<Rational> = cs
            .into_iter()
            .map(|(n, d)| Rational::new(n.into(), d.into()))
            .collect();
        FieldElem::Cyclotomic(Cyclotomic::from_dense(5, dense))
    })
}

proptest! {
    #[test]
    fn rational_field_axioms(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
        let ab_c = a.add(&b).unwrap().add(&c).unwrap();
        let a_bc = a.add(&b.add(&c).unwrap()).unwrap();
        prop_assert_eq!(&ab_c, &a_bc);
        let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
        let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inverse().unwrap()).unwrap().is_one());
        }
        prop_assert!(a.sub(&a).unwrap().is_zero());
    }

    #[test]
    fn cyclotomic_field_axioms(a in arb_cyclotomic(), b in arb_cyclotomic(), c in arb_cyclotomic()) {
        let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
        let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(&ab_c, &a_bc);
        let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
        let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inverse().unwrap()).unwrap().is_one());
        }
        prop_assert!(a.sub(&a).unwrap().is_zero());
    }
}

// ---------------------------------------------------------------------------
// polynomial ring invariants
// ---------------------------------------------------------------------------

fn random_automorphism(r: &mut rand::rngs::StdRng, ring: &Arc<PolyRing>) -> RingAutomorphism {
    let mut auto = RingAutomorphism::identity(ring);
    for _ in 0..r.gen_range(1..=3) {
        let v = r.gen_range(0..ring.nvars());
        let step = if ring.is_laurent(v) {
            let c = nonzero_rational(r);
            RingAutomorphism::scaling(ring, v, &FieldElem::from_rational(ring.field(), c)).unwrap()
        } else {
            RingAutomorphism::shift(ring, v, &random_rational(r))
        };
        auto = step.compose(&auto);
    }
    auto
}

#[test]
fn substitution_round_trips_and_is_multiplicative() {
    let rings = [
        PolyRing::rational(&["x", "y"]),
        PolyRing::rational_laurent(&["u"]),
    ];
    let mut r = rng(11);
    for ring in &rings {
        for _ in 0..60 {
            let alpha = random_automorphism(&mut r, ring);
            let p = random_poly(&mut r, ring, 4, 4);
            let q = random_poly(&mut r, ring, 3, 3);
            assert_eq!(alpha.pow(-1).apply(&alpha.apply(&p)), p);
            assert_eq!(
                alpha.apply(&p.mul(&q).unwrap()),
                alpha.apply(&p).mul(&alpha.apply(&q)).unwrap()
            );
            assert_eq!(
                alpha.apply(&p.add(&q).unwrap()),
                alpha.apply(&p).add(&alpha.apply(&q)).unwrap()
            );
        }
    }
}

#[test]
fn resultant_vanishes_exactly_on_common_factors() {
    // 200 random univariate pairs of degree <= 6, cross-checked against gcd
    let ring = PolyRing::rational(&["x"]);
    let mut r = rng(12);
    let mut zero_cases = 0;
    for _ in 0..200 {
        let p = nonzero_poly(&mut r, &ring, 3, 3);
        let q = nonzero_poly(&mut r, &ring, 3, 3);
        // sometimes force a shared factor
        let (p, q) = if r.gen_bool(0.4) {
            let f = nonzero_poly(&mut r, &ring, 2, 2);
            (p.mul(&f).unwrap(), q.mul(&f).unwrap())
        } else {
            (p, q)
        };
        if p.max_degree_in(0) > 6 || q.max_degree_in(0) > 6 {
            continue;
        }
        let res = resultant(&p, &q, "x").unwrap();
        let g = poly_gcd(&p, &q).unwrap();
        let res_zero = res.is_zero();
        let gcd_nonconstant = !g.is_one() && g.max_degree_in(0) > 0;
        assert_eq!(
            res_zero, gcd_nonconstant,
            "p={p} q={q} res={res} gcd={g}"
        );
        if res_zero {
            zero_cases += 1;
        }
    }
    assert!(zero_cases > 10, "sampler should hit degenerate pairs");
}

proptest! {
    #[test]
    fn ratfunc_cross_multiplication(
        an in -9i64..9, ad in 1i64..9,
        bn in -9i64..9, bd in 1i64..9,
        tn in -9i64..9, td in 1i64..9,
    ) {
        // a/b == (a t)/(b t) structurally, for polynomial a, b, t
        let ring = PolyRing::rational(&["x"]);
        let x = Poly::var(&ring, 0);
        let mk = |n: i64, d: i64| {
            x.scale_rat(&Rational::new(n.into(), 1.into()))
                .add(&Poly::constant_rat(&ring, Rational::new(d.into(), 1.into())))
                .unwrap()
        };
        let a = mk(an, ad);
        let b = mk(bn, bd);
        let t = mk(tn, td);
        prop_assume!(!b.is_zero() && !t.is_zero());
        let plain = RatFunc::new(a.clone(), b.clone()).unwrap();
        let scaled = RatFunc::new(a.mul(&t).unwrap(), b.mul(&t).unwrap()).unwrap();
        prop_assert_eq!(plain, scaled);
    }
}

// ---------------------------------------------------------------------------
// grading and basis freeness
// ---------------------------------------------------------------------------

#[test]
fn products_respect_the_grading() {
    let mut r = rng(13);
    for rank in 1..=3usize {
        let a = weyl(rank);
        for _ in 0..40 {
            let x = random_element(&mut r, &a, 3, 2, 2);
            let y = random_element(&mut r, &a, 3, 2, 2);
            let prod = x.mul(&y).unwrap();
            let allowed: Vec<DegreeVector> = x
                .support()
                .iter()
                .flat_map(|z| y.support().iter().map(|w| z.add(w)).collect::<Vec<_>>())
                .collect();
            for d in prod.support() {
                assert!(allowed.contains(&d), "degree {d} outside the Minkowski sum");
            }
        }
    }
}

#[test]
fn normal_forms_are_free_over_the_basis() {
    let mut r = rng(14);
    let a = weyl(2);
    for _ in 0..60 {
        let x = random_element(&mut r, &a, 4, 2, 2);
        if x.is_zero() {
            continue;
        }
        // subtracting the terms one by one hits zero exactly at the end
        let mut acc = x.clone();
        let support = x.support();
        for (k, z) in support.iter().enumerate() {
            assert!(!acc.is_zero());
            let t = GwaElement::monomial(&a, z.clone(), x.coeff_at(z)).unwrap();
            acc = acc.sub(&t).unwrap();
            if k + 1 == support.len() {
                assert!(acc.is_zero());
            }
        }
    }
}

// ---------------------------------------------------------------------------
// evaluation module law
// ---------------------------------------------------------------------------

#[test]
fn evaluation_is_a_module_action() {
    let mut r = rng(15);
    for rank in 1..=2usize {
        let a = weyl(rank);
        let ctx = SkewContext::from_presentation(&a);
        for _ in 0..40 {
            let x = random_skew(&mut r, &ctx, 3);
            let y = random_skew(&mut r, &ctx, 3);
            let l = random_ratfunc(&mut r, ctx.base(), 2);
            let lhs = x.mul(&y).unwrap().evaluate(&l).unwrap();
            let rhs = x.evaluate(&y.evaluate(&l).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

fn random_skew(
    r: &mut rand::rngs::StdRng,
    ctx: &Arc<SkewContext>,
    max_supp: usize,
) -> SkewElement {
    let mut x = SkewElement::zero(ctx);
    for _ in 0..r.gen_range(0..=max_supp) {
        let z = random_degree(r, ctx.rank(), 2);
        let c = random_ratfunc(r, ctx.base(), 2);
        if c.is_zero() {
            continue;
        }
        x = x
            .add(&SkewElement::monomial(ctx, z, c).unwrap())
            .unwrap();
    }
    x
}

// ---------------------------------------------------------------------------
// symmetrizers and the invariant decomposition
// ---------------------------------------------------------------------------

#[test]
fn symmetrizers_are_invariant_and_reconstruct() {
    let mut r = rng(16);
    for rank in 2..=3usize {
        let a = weyl(rank);
        let ctx = SkewContext::from_presentation(&a);
        let w = WGroup::symmetric(&ctx).unwrap();
        for _ in 0..25 {
            let mu = random_degree(&mut r, rank, 2);
            // average a raw coefficient over the stabilizer to make it valid
            let raw = random_ratfunc(&mut r, ctx.base(), 2);
            let stab = w.stabilizer(&mu);
            let mut avg = RatFunc::zero(ctx.base());
            for g in &stab {
                avg = avg.add(&g.auto.apply_rat(&raw)).unwrap();
            }
            let avg = avg.scale_rat(&Rational::new(1.into(), (stab.len() as i64).into()));
            if avg.is_zero() {
                continue;
            }
            let s = w.symmetrize(&avg, &mu).unwrap();
            assert!(w.is_invariant(&s).unwrap());

            // decomposition: rebuilding from orbit representatives is identity
            let mut rebuilt = SkewElement::zero(&ctx);
            let mut seen = std::collections::BTreeSet::new();
            for z in s.support() {
                let orbit = w.orbit(&z);
                let rep = orbit.iter().next().unwrap().clone();
                if seen.insert(rep.clone()) {
                    rebuilt = rebuilt
                        .add(&w.symmetrize(&s.coeff_at(&rep), &rep).unwrap())
                        .unwrap();
                }
            }
            assert_eq!(rebuilt, s);
        }
    }
}

#[test]
fn invariant_elements_decompose_into_symmetrizers() {
    // random invariant elements: Reynolds averages of random skew elements
    let mut r = rng(17);
    let a = weyl(2);
    let ctx = SkewContext::from_presentation(&a);
    let w = WGroup::symmetric(&ctx).unwrap();
    let order = Rational::new(1.into(), (w.order() as i64).into());
    for _ in 0..30 {
        let raw = random_skew(&mut r, &ctx, 3);
        let mut inv = SkewElement::zero(&ctx);
        for g in w.elements() {
            inv = inv.add(&w.conjugate(&raw, g).unwrap()).unwrap();
        }
        let inv = inv.scale(&RatFunc::one(ctx.base()).scale_rat(&order)).unwrap();
        assert!(w.is_invariant(&inv).unwrap());
        let mut rebuilt = SkewElement::zero(&ctx);
        let mut seen = std::collections::BTreeSet::new();
        for z in inv.support() {
            let rep = w.orbit(&z).iter().next().unwrap().clone();
            if seen.insert(rep.clone()) {
                rebuilt = rebuilt
                    .add(&w.symmetrize(&inv.coeff_at(&rep), &rep).unwrap())
                    .unwrap();
            }
        }
        assert_eq!(rebuilt, inv);
    }
}

// ---------------------------------------------------------------------------
// reflection-group actions and fixed rings
// ---------------------------------------------------------------------------

#[test]
fn group_action_randomized_laws() {
    let mut r = rng(18);
    let a = weyl(2);
    let g22 = enumerate_group(2, 2, 2, 1000).unwrap();
    for _ in 0..20 {
        let x = random_element(&mut r, &a, 2, 1, 2);
        let y = random_element(&mut r, &a, 2, 1, 2);
        let gi = r.gen_range(0..g22.order());
        let hi = r.gen_range(0..g22.order());
        let g = &g22.elements()[gi];
        let h = &g22.elements()[hi];
        let one_step = act(&g22, &g22.compose(g, h), &x).unwrap();
        let two_step = act(&g22, g, &act(&g22, h, &x).unwrap()).unwrap();
        assert_eq!(one_step, two_step);
        let prod = act(&g22, g, &x.mul(&y).unwrap()).unwrap();
        let factored = act(&g22, g, &x)
            .unwrap()
            .mul(&act(&g22, g, &y).unwrap())
            .unwrap();
        assert_eq!(prod, factored);
    }
}

#[test]
fn fixed_ring_survivors_have_divisible_degrees() {
    let mut r = rng(19);
    let a = weyl(1);
    for m in 2u32..=4 {
        let gm = enumerate_group(m, 1, 1, 100).unwrap();
        let (recovered, report) = jw_fixed_ring(&a, m).unwrap();
        assert!(report.verdict);
        for _ in 0..30 {
            let z = r.gen_range(-4i64..=4);
            let d = nonzero_poly(&mut r, a.base(), 2, 2);
            let x = GwaElement::monomial(&a, DegreeVector(vec![z]), d).unwrap();
            let avg = reynolds(&gm, &x).unwrap();
            if z.rem_euclid(m as i64) == 0 {
                assert_eq!(avg, x, "G_m fixes every monomial with m | z");
            } else {
                assert!(avg.is_zero(), "m={m} z={z}");
            }
        }
        // the recovered presentation is a valid GWA over the same base
        assert_eq!(recovered.base(), a.base());
    }
}

#[test]
fn classical_simplicity_matches_brute_force_on_random_inputs() {
    let ring = PolyRing::rational(&["h"]);
    let mut r = rng(20);
    let mut checked = 0;
    for _ in 0..100 {
        // build a as a product of small factors so collisions actually occur
        let mut a = Poly::one(&ring);
        for _ in 0..r.gen_range(1..=3) {
            let root = r.gen_range(-3i64..=3);
            let factor = Poly::var(&ring, 0)
                .sub(&Poly::constant_i64(&ring, root))
                .unwrap();
            a = a.mul(&factor).unwrap();
        }
        if r.gen_bool(0.3) {
            let extra = nonzero_poly(&mut r, &ring, 2, 2);
            a = a.mul(&extra).unwrap();
        }
        if a.max_degree_in(0) > 5 || a.is_zero() {
            continue;
        }
        let fast = check_simple_classical(&a).unwrap();
        let bound = classical_scan_bound(&a).unwrap();
        let slow = brute_force_simple_classical(&a, bound).unwrap();
        assert_eq!(fast.verdict, slow.verdict, "a = {a}");
        assert_eq!(fast.witnesses, slow.witnesses, "a = {a}");
        checked += 1;
    }
    assert!(checked >= 80);
    let _ = rat_int(0);
}
