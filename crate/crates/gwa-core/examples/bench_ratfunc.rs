use std::time::Instant;
use gwa_core::poly::{Poly, PolyRing};
use gwa_core::ratfunc::RatFunc;
use rand::{Rng, SeedableRng};

fn main() {
    let ring = PolyRing::rational(&["h1", "h2"]);
    let mut r = rand::rngs::StdRng::seed_from_u64(15);
    let mut rand_poly = |terms: usize, deg: i64, r: &mut rand::rngs::StdRng| {
        let mut p = Poly::zero(&ring);
        for _ in 0..terms {
            let exps = vec![r.gen_range(0..=deg), r.gen_range(0..=deg)];
            let c = gwa_core::coeff::Rational::new(r.gen_range(-9i64..=9).into(), r.gen_range(1i64..=9).into());
            p = p.add(&Poly::monomial(&ring, exps, gwa_core::coeff::FieldElem::Rational(c)).unwrap()).unwrap();
        }
        p
    };
    for trial in 0..10 {
        let n1 = rand_poly(3, 2, &mut r);
        let d1 = rand_poly(2, 2, &mut r);
        let n2 = rand_poly(3, 2, &mut r);
        let d2 = rand_poly(2, 2, &mut r);
        if d1.is_zero() || d2.is_zero() { continue; }
        let a = RatFunc::new(n1, d1).unwrap();
        let b = RatFunc::new(n2, d2).unwrap();
        let t = Instant::now();
        let c = a.mul(&b).unwrap();
        let t1 = t.elapsed();
        let t = Instant::now();
        let d = a.add(&b).unwrap();
        let t2 = t.elapsed();
        println!("trial {trial}: mul {:?} add {:?} (sizes {} {})", t1, t2, c.numerator().num_terms(), d.numerator().num_terms());
    }
}
