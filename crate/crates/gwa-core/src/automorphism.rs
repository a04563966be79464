//! Substitution automorphisms of the base ring. An automorphism carries an
//! explicit inverse, supplied by the caller and verified at construction by
//! a round-trip check; general polynomial-map inversion is not attempted.

use std::fmt;
use std::sync::Arc;

use crate::coeff::{FieldElem, Rational};
use crate::error::{KernelError, Result};
use crate::poly::{Poly, PolyRing};
use crate::ratfunc::RatFunc;

#[derive(Clone, Debug)]
pub struct RingAutomorphism {
    ring: Arc<PolyRing>,
    forward: Vec<Poly>,
    inverse: Vec<Poly>,
}

impl PartialEq for RingAutomorphism {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.forward == other.forward
    }
}

impl Eq for RingAutomorphism {}

impl RingAutomorphism {
    /// Build from forward and inverse variable images. Fails with
    /// `NotInvertible` when the two maps are not mutually inverse, or when a
    /// Laurent variable is not sent to a unit.
    pub fn new(ring: &Arc<PolyRing>, forward: Vec<Poly>, inverse: Vec<Poly>) -> Result<Self> {
        let n = ring.nvars();
        if forward.len() != n || inverse.len() != n {
            return Err(KernelError::InvalidInput(
                "one image per ring variable required".into(),
            ));
        }
        for img in forward.iter().chain(inverse.iter()) {
            if img.ring() != ring && !Arc::ptr_eq(img.ring(), ring) {
                return Err(KernelError::RingMismatch);
            }
        }
        for i in 0..n {
            if ring.is_laurent(i) && !(forward[i].is_unit() && inverse[i].is_unit()) {
                return Err(KernelError::NotInvertible(format!(
                    "image of Laurent variable `{}` must be a unit",
                    ring.vars()[i]
                )));
            }
            if forward[i].is_zero() || inverse[i].is_zero() {
                return Err(KernelError::NotInvertible(format!(
                    "variable `{}` has a zero image",
                    ring.vars()[i]
                )));
            }
        }
        let auto = RingAutomorphism {
            ring: ring.clone(),
            forward,
            inverse,
        };
        for i in 0..n {
            let v = Poly::var(ring, i);
            let round1 = auto.forward[i].substitute(&auto.inverse)?;
            let round2 = auto.inverse[i].substitute(&auto.forward)?;
            if round1 != v || round2 != v {
                return Err(KernelError::NotInvertible(format!(
                    "maps are not mutually inverse on `{}`",
                    ring.vars()[i]
                )));
            }
        }
        Ok(auto)
    }

    pub fn identity(ring: &Arc<PolyRing>) -> Self {
        let vars: Vec<Poly> = (0..ring.nvars()).map(|i| Poly::var(ring, i)).collect();
        RingAutomorphism {
            ring: ring.clone(),
            forward: vars.clone(),
            inverse: vars,
        }
    }

    /// The shift `v -> v - amount` on one variable, fixing the rest.
    pub fn shift(ring: &Arc<PolyRing>, var: usize, amount: &Rational) -> Self {
        let mut forward = Vec::new();
        let mut inverse = Vec::new();
        for i in 0..ring.nvars() {
            let v = Poly::var(ring, i);
            if i == var {
                let c = Poly::constant_rat(ring, amount.clone());
                forward.push(v.sub(&c).expect("same ring"));
                inverse.push(Poly::var(ring, i).add(&c).expect("same ring"));
            } else {
                forward.push(v.clone());
                inverse.push(v);
            }
        }
        RingAutomorphism {
            ring: ring.clone(),
            forward,
            inverse,
        }
    }

    /// The scaling `v -> c * v` on one variable (c nonzero), fixing the rest.
    pub fn scaling(ring: &Arc<PolyRing>, var: usize, c: &FieldElem) -> Result<Self> {
        if c.is_zero() {
            return Err(KernelError::NotInvertible("scaling by zero".into()));
        }
        let mut forward = Vec::new();
        let mut inverse = Vec::new();
        for i in 0..ring.nvars() {
            let v = Poly::var(ring, i);
            if i == var {
                forward.push(v.scale(c));
                inverse.push(Poly::var(ring, i).scale(&c.inverse()?));
            } else {
                forward.push(v.clone());
                inverse.push(v);
            }
        }
        Ok(RingAutomorphism {
            ring: ring.clone(),
            forward,
            inverse,
        })
    }

    /// The variable permutation sending variable `i` to variable `perm[i]`.
    pub fn permutation(ring: &Arc<PolyRing>, perm: &[usize]) -> Self {
        let forward: Vec<Poly> = perm.iter().map(|&j| Poly::var(ring, j)).collect();
        let mut inv_map = vec![0usize; perm.len()];
        for (i, &j) in perm.iter().enumerate() {
            inv_map[j] = i;
        }
        let inverse: Vec<Poly> = inv_map.iter().map(|&j| Poly::var(ring, j)).collect();
        RingAutomorphism {
            ring: ring.clone(),
            forward,
            inverse,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn forward_images(&self) -> &[Poly] {
        &self.forward
    }

    pub fn inverse_images(&self) -> &[Poly] {
        &self.inverse
    }

    pub fn is_identity(&self) -> bool {
        self.forward
            .iter()
            .enumerate()
            .all(|(i, img)| *img == Poly::var(&self.ring, i))
    }

    pub fn apply(&self, p: &Poly) -> Poly {
        p.substitute(&self.forward)
            .expect("validated automorphism images")
    }

    pub fn apply_inverse(&self, p: &Poly) -> Poly {
        p.substitute(&self.inverse)
            .expect("validated automorphism images")
    }

    pub fn apply_rat(&self, f: &RatFunc) -> RatFunc {
        f.substitute(&self.forward)
            .expect("automorphisms keep denominators nonzero")
    }

    /// `(self ∘ other)(v) = self(other(v))`; inverses compose in reverse.
    pub fn compose(&self, other: &RingAutomorphism) -> RingAutomorphism {
        let forward = other.forward.iter().map(|img| self.apply(img)).collect();
        let inverse = self
            .inverse
            .iter()
            .map(|img| other.apply_inverse(img))
            .collect();
        RingAutomorphism {
            ring: self.ring.clone(),
            forward,
            inverse,
        }
    }

    pub fn inverted(&self) -> RingAutomorphism {
        RingAutomorphism {
            ring: self.ring.clone(),
            forward: self.inverse.clone(),
            inverse: self.forward.clone(),
        }
    }

    pub fn pow(&self, k: i64) -> RingAutomorphism {
        let base = if k < 0 { self.inverted() } else { self.clone() };
        let mut out = RingAutomorphism::identity(&self.ring);
        for _ in 0..k.unsigned_abs() {
            out = base.compose(&out);
        }
        out
    }

    pub fn fixes(&self, p: &Poly) -> bool {
        self.apply(p) == *p
    }

    /// Lift to a ring extending this one by fresh variables, acting as the
    /// identity on the new variables.
    pub fn extend_ring(&self, big: &Arc<PolyRing>) -> Result<RingAutomorphism> {
        let mut forward: Vec<Poly> = self
            .forward
            .iter()
            .map(|p| p.extend_ring(big))
            .collect::<Result<_>>()?;
        let mut inverse: Vec<Poly> = self
            .inverse
            .iter()
            .map(|p| p.extend_ring(big))
            .collect::<Result<_>>()?;
        for i in self.ring.nvars()..big.nvars() {
            forward.push(Poly::var(big, i));
            inverse.push(Poly::var(big, i));
        }
        Ok(RingAutomorphism {
            ring: big.clone(),
            forward,
            inverse,
        })
    }
}

impl fmt::Display for RingAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .ring
            .vars()
            .iter()
            .zip(&self.forward)
            .map(|(v, img)| format!("{v} -> {img}"))
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{rat, rat_int};

    #[test]
    fn shift_round_trip() {
        let r = PolyRing::rational(&["h"]);
        let s = RingAutomorphism::shift(&r, 0, &rat_int(1));
        let h = Poly::var(&r, 0);
        let p = h.pow(3);
        assert_eq!(s.apply_inverse(&s.apply(&p)), p);
    }

    #[test]
    fn compose_shifts() {
        let r = PolyRing::rational(&["h"]);
        let s = RingAutomorphism::shift(&r, 0, &rat_int(1));
        let s2 = s.compose(&s);
        let h = Poly::var(&r, 0);
        assert_eq!(s2.apply(&h).to_string(), "h-2");
        assert_eq!(s.pow(-1).apply(&h).to_string(), "h+1");
    }

    #[test]
    fn scaling_inverse_cancels() {
        let r = PolyRing::rational_laurent(&["h"]);
        let two = FieldElem::from_rational(r.field(), rat_int(2));
        let s = RingAutomorphism::scaling(&r, 0, &two).unwrap();
        let t = RingAutomorphism::scaling(&r, 0, &FieldElem::from_rational(r.field(), rat(1, 2)))
            .unwrap();
        assert!(s.compose(&t).is_identity());
    }

    #[test]
    fn commuting_shifts_in_distinct_variables() {
        let r = PolyRing::rational(&["h1", "h2"]);
        let s1 = RingAutomorphism::shift(&r, 0, &rat_int(1));
        let s2 = RingAutomorphism::shift(&r, 1, &rat_int(1));
        assert_eq!(s1.compose(&s2), s2.compose(&s1));
    }

    #[test]
    fn square_map_is_rejected() {
        let r = PolyRing::rational(&["h"]);
        let h = Poly::var(&r, 0);
        let res = RingAutomorphism::new(&r, vec![h.pow(2)], vec![h]);
        assert!(matches!(res, Err(KernelError::NotInvertible(_))));
    }

    #[test]
    fn laurent_variables_need_unit_images() {
        let r = PolyRing::rational_laurent(&["h"]);
        let h = Poly::var(&r, 0);
        let one = Poly::one(&r);
        // h -> h - 1 round-trips on the variable but is not a Laurent automorphism
        let res = RingAutomorphism::new(
            &r,
            vec![h.sub(&one).unwrap()],
            vec![Poly::var(&r, 0).add(&Poly::one(&r)).unwrap()],
        );
        assert!(matches!(res, Err(KernelError::NotInvertible(_))));
    }

    #[test]
    fn apply_to_rational_function() {
        let r = PolyRing::rational_laurent(&["h"]);
        let two = FieldElem::from_rational(r.field(), rat_int(2));
        let s = RingAutomorphism::scaling(&r, 0, &two).unwrap();
        let f = RatFunc::new(Poly::one(&r), Poly::var(&r, 0)).unwrap();
        // 1/h -> 1/(2h)
        let g = s.apply_rat(&f);
        assert_eq!(g, f.scale_rat(&rat(1, 2)));
    }
}
