//! Generalized Weyl algebra presentations `D(a, sigma)` and normal-form
//! element arithmetic.
//!
//! Elements are finite sums of terms `d * X^z` with `d` in the base ring
//! and `z` an integer degree vector; `X^z` is the ordered product of
//! generator powers with `X_i^{+}` for positive and `X_i^{-}` for negative
//! entries. Multiplication rewrites with the defining relations
//! `X_i^- X_i^+ = a_i`, `X_i^+ X_i^- = sigma_i(a_i)` and the sigma-twisted
//! commutation past coefficients, so every product lands back in normal
//! form over the free left D-module basis.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::automorphism::RingAutomorphism;
use crate::coeff::rat_int;
use crate::error::{KernelError, Result};
use crate::poly::{Poly, PolyRing};

/// A degree vector in the grading group `Z^n`, ordered graded-lex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreeVector(pub Vec<i64>);

impl DegreeVector {
    pub fn zero(n: usize) -> Self {
        DegreeVector(vec![0; n])
    }

    /// `sign * e_i`.
    pub fn unit(n: usize, i: usize, sign: i64) -> Self {
        let mut v = vec![0; n];
        v[i] = sign;
        DegreeVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn add(&self, other: &DegreeVector) -> DegreeVector {
        DegreeVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &DegreeVector) -> DegreeVector {
        DegreeVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> DegreeVector {
        DegreeVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn norm_inf(&self) -> i64 {
        self.0.iter().map(|e| e.abs()).max().unwrap_or(0)
    }

    fn total(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl PartialOrd for DegreeVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DegreeVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// A validated GWA presentation: base ring, defining elements `a_i`, and
/// commuting automorphisms `sigma_i` with `sigma_i(a_j) = a_j` for `j != i`.
#[derive(Debug)]
pub struct GwaPresentation {
    base: Arc<PolyRing>,
    a: Vec<Poly>,
    sigma: Vec<RingAutomorphism>,
}

impl PartialEq for GwaPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.a == other.a && self.sigma == other.sigma
    }
}

impl Eq for GwaPresentation {}

impl GwaPresentation {
    /// Validate and freeze a presentation. Generator indices in errors are
    /// 1-based.
    pub fn new(
        base: Arc<PolyRing>,
        a: Vec<Poly>,
        sigma: Vec<RingAutomorphism>,
    ) -> Result<Arc<GwaPresentation>> {
        if a.is_empty() || a.len() != sigma.len() {
            return Err(KernelError::InvalidInput(
                "need matching nonempty lists of defining elements and automorphisms".into(),
            ));
        }
        for (i, p) in a.iter().enumerate() {
            if p.ring() != &base {
                return Err(KernelError::RingMismatch);
            }
            if p.is_zero() {
                return Err(KernelError::ZeroDefiningElement(i + 1));
            }
        }
        for s in &sigma {
            if s.ring() != &base {
                return Err(KernelError::RingMismatch);
            }
        }
        let n = a.len();
        for i in 0..n {
            for j in (i + 1)..n {
                if sigma[i].compose(&sigma[j]) != sigma[j].compose(&sigma[i]) {
                    return Err(KernelError::NonCommutingSigmas(i + 1, j + 1));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && !sigma[i].fixes(&a[j]) {
                    return Err(KernelError::SigmaMovesForeignA(i + 1, j + 1));
                }
            }
        }
        Ok(Arc::new(GwaPresentation { base, a, sigma }))
    }

    /// The first Weyl algebra as a GWA: `D = Q[h]`, `a = h`,
    /// `sigma: h -> h - 1`.
    pub fn first_weyl() -> Arc<GwaPresentation> {
        let ring = PolyRing::rational(&["h"]);
        let h = Poly::var(&ring, 0);
        let s = RingAutomorphism::shift(&ring, 0, &rat_int(1));
        GwaPresentation::new(ring, vec![h], vec![s]).expect("first Weyl algebra is valid")
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    pub fn base(&self) -> &Arc<PolyRing> {
        &self.base
    }

    pub fn defining(&self, i: usize) -> &Poly {
        &self.a[i]
    }

    pub fn defining_elements(&self) -> &[Poly] {
        &self.a
    }

    pub fn sigma(&self, i: usize) -> &RingAutomorphism {
        &self.sigma[i]
    }

    pub fn sigmas(&self) -> &[RingAutomorphism] {
        &self.sigma
    }

    /// Apply `sigma_i^e` to a base-ring element.
    pub fn sigma_power_apply(&self, i: usize, e: i64, p: &Poly) -> Poly {
        let mut out = p.clone();
        if e >= 0 {
            for _ in 0..e {
                out = self.sigma[i].apply(&out);
            }
        } else {
            for _ in 0..(-e) {
                out = self.sigma[i].apply_inverse(&out);
            }
        }
        out
    }

    /// Apply the composite `sigma_z = prod_i sigma_i^{z_i}`.
    pub fn sigma_vec_apply(&self, z: &DegreeVector, p: &Poly) -> Poly {
        let mut out = p.clone();
        for (i, &e) in z.0.iter().enumerate() {
            if e != 0 {
                out = self.sigma_power_apply(i, e, &out);
            }
        }
        out
    }

    /// The composite automorphism `sigma_z` itself.
    pub fn sigma_vec(&self, z: &DegreeVector) -> RingAutomorphism {
        let mut out = RingAutomorphism::identity(&self.base);
        for (i, &e) in z.0.iter().enumerate() {
            if e != 0 {
                out = self.sigma[i].pow(e).compose(&out);
            }
        }
        out
    }

    /// The unique `c` in the base ring with `X^z X^w = c X^{z+w}`, from the
    /// coordinatewise product formula. `c = 1` when `z` and `w` have
    /// componentwise equal signs.
    pub fn structure_coefficient(&self, z: &DegreeVector, w: &DegreeVector) -> Poly {
        assert_eq!(z.len(), self.rank());
        assert_eq!(w.len(), self.rank());
        let mut c = Poly::one(&self.base);
        for i in 0..self.rank() {
            let (zi, wi) = (z.0[i], w.0[i]);
            if zi > 0 && wi < 0 {
                let k = zi.min(-wi);
                for j in 0..k {
                    let f = self.sigma_power_apply(i, zi - j, &self.a[i]);
                    c = c.mul(&f).expect("same ring");
                }
            } else if zi < 0 && wi > 0 {
                let k = (-zi).min(wi);
                for j in 0..k {
                    let f = self.sigma_power_apply(i, zi + 1 + j, &self.a[i]);
                    c = c.mul(&f).expect("same ring");
                }
            }
        }
        c
    }

    /// The `n`-fold tensor power of a rank-1 presentation, with fresh
    /// variable copies named by suffixing the copy index; `a_i` and
    /// `sigma_i` act on the i-th copy only.
    pub fn tensor_power(seed: &Arc<GwaPresentation>, n: usize) -> Result<Arc<GwaPresentation>> {
        if seed.rank() != 1 {
            return Err(KernelError::InvalidInput(
                "tensor_power requires a rank-1 presentation".into(),
            ));
        }
        if n == 0 {
            return Err(KernelError::InvalidInput("tensor power must be >= 1".into()));
        }
        let b = seed.base.nvars();
        let mut vars = Vec::with_capacity(b * n);
        let mut laurent = Vec::with_capacity(b * n);
        for copy in 1..=n {
            for (v, &fl) in seed.base.vars().iter().zip(seed.base.laurent_flags()) {
                vars.push(format!("{v}{copy}"));
                laurent.push(fl);
            }
        }
        let big = PolyRing::new(vars, laurent, seed.base.field())?;
        let mut a = Vec::with_capacity(n);
        let mut sigma = Vec::with_capacity(n);
        for copy in 0..n {
            let off = copy * b;
            a.push(relocate(&seed.a[0], &big, off));
            let mut forward: Vec<Poly> = (0..big.nvars()).map(|i| Poly::var(&big, i)).collect();
            let mut inverse = forward.clone();
            for j in 0..b {
                forward[off + j] = relocate(&seed.sigma[0].forward_images()[j], &big, off);
                inverse[off + j] = relocate(&seed.sigma[0].inverse_images()[j], &big, off);
            }
            sigma.push(RingAutomorphism::new(&big, forward, inverse)?);
        }
        GwaPresentation::new(big, a, sigma)
    }

    /// Extend by one generator pair. `new_a` and `new_sigma` live over the
    /// extended ring (existing variables first, `added` appended); existing
    /// data is lifted unchanged, so the inclusion of the old algebra is the
    /// connecting morphism of the direct system.
    pub fn extend_rank(
        &self,
        added: &[(String, bool)],
        new_a: Poly,
        new_sigma: RingAutomorphism,
    ) -> Result<Arc<GwaPresentation>> {
        let mut vars: Vec<String> = self.base.vars().to_vec();
        let mut laurent: Vec<bool> = self.base.laurent_flags().to_vec();
        for (v, fl) in added {
            vars.push(v.clone());
            laurent.push(*fl);
        }
        let big = PolyRing::new(vars, laurent, self.base.field())?;
        if new_a.ring() != &big || new_sigma.ring() != &big {
            return Err(KernelError::RingMismatch);
        }
        let mut a: Vec<Poly> = self
            .a
            .iter()
            .map(|p| p.extend_ring(&big))
            .collect::<Result<_>>()?;
        let mut sigma: Vec<RingAutomorphism> = self
            .sigma
            .iter()
            .map(|s| s.extend_ring(&big))
            .collect::<Result<_>>()?;
        a.push(new_a);
        sigma.push(new_sigma);
        GwaPresentation::new(big, a, sigma)
    }
}

/// Re-embed a polynomial of a small ring into `big`, placing variable `j`
/// of the source at position `offset + j`.
fn relocate(p: &Poly, big: &Arc<PolyRing>, offset: usize) -> Poly {
    let small_n = p.ring().nvars();
    let mut out = Poly::zero(big);
    for (m, c) in p.terms() {
        let mut exps = vec![0i64; big.nvars()];
        for j in 0..small_n {
            exps[offset + j] = m.0[j];
        }
        out = out
            .add(&Poly::monomial(big, exps, c.clone()).expect("laurent flags match"))
            .expect("same ring");
    }
    out
}

/// A normal-form element of a GWA: a finite sum of `d_z * X^z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GwaElement {
    algebra: Arc<GwaPresentation>,
    terms: BTreeMap<DegreeVector, Poly>,
}

impl GwaElement {
    pub fn zero(algebra: &Arc<GwaPresentation>) -> GwaElement {
        GwaElement {
            algebra: algebra.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(algebra: &Arc<GwaPresentation>) -> GwaElement {
        GwaElement::from_poly(algebra, Poly::one(algebra.base()))
    }

    pub fn from_poly(algebra: &Arc<GwaPresentation>, p: Poly) -> GwaElement {
        let mut e = GwaElement::zero(algebra);
        if !p.is_zero() {
            e.terms.insert(DegreeVector::zero(algebra.rank()), p);
        }
        e
    }

    /// `X_i^+` for `sign > 0`, `X_i^-` for `sign < 0` (0-based index).
    pub fn generator(algebra: &Arc<GwaPresentation>, i: usize, sign: i64) -> Result<GwaElement> {
        if i >= algebra.rank() {
            return Err(KernelError::RankOutOfRange(i + 1, algebra.rank()));
        }
        let z = DegreeVector::unit(algebra.rank(), i, sign.signum());
        GwaElement::monomial(algebra, z, Poly::one(algebra.base()))
    }

    pub fn monomial(
        algebra: &Arc<GwaPresentation>,
        z: DegreeVector,
        coeff: Poly,
    ) -> Result<GwaElement> {
        if z.len() != algebra.rank() {
            return Err(KernelError::AlgebraMismatch);
        }
        if coeff.ring() != algebra.base() {
            return Err(KernelError::RingMismatch);
        }
        let mut e = GwaElement::zero(algebra);
        if !coeff.is_zero() {
            e.terms.insert(z, coeff);
        }
        Ok(e)
    }

    pub fn algebra(&self) -> &Arc<GwaPresentation> {
        &self.algebra
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DegreeVector, &Poly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn support(&self) -> Vec<DegreeVector> {
        self.terms.keys().cloned().collect()
    }

    pub fn coeff_at(&self, z: &DegreeVector) -> Poly {
        self.terms
            .get(z)
            .cloned()
            .unwrap_or_else(|| Poly::zero(self.algebra.base()))
    }

    fn check_algebra(&self, other: &GwaElement) -> Result<()> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra {
            Ok(())
        } else {
            Err(KernelError::AlgebraMismatch)
        }
    }

    fn insert(&mut self, z: DegreeVector, p: Poly) {
        if p.is_zero() {
            return;
        }
        match self.terms.entry(z) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(p);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&p).expect("same ring");
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &GwaElement) -> Result<GwaElement> {
        self.check_algebra(other)?;
        let mut out = self.clone();
        for (z, p) in &other.terms {
            out.insert(z.clone(), p.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &GwaElement) -> Result<GwaElement> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> GwaElement {
        GwaElement {
            algebra: self.algebra.clone(),
            terms: self
                .terms
                .iter()
                .map(|(z, p)| (z.clone(), p.neg()))
                .collect(),
        }
    }

    /// Left multiplication by a base-ring element.
    pub fn scale_poly(&self, p: &Poly) -> Result<GwaElement> {
        let mut out = GwaElement::zero(&self.algebra);
        for (z, d) in &self.terms {
            out.insert(z.clone(), p.mul(d)?);
        }
        Ok(out)
    }

    pub fn scale_rat(&self, r: &crate::coeff::Rational) -> GwaElement {
        let p = Poly::constant_rat(self.algebra.base(), r.clone());
        self.scale_poly(&p).expect("same ring")
    }

    /// Normal-form product, computed by term rewriting with the defining
    /// relations: the coefficient of the right factor is moved left through
    /// `X^z` with the sigma twist, then opposite-sign generator powers are
    /// cancelled pairwise from the inside out.
    pub fn mul(&self, other: &GwaElement) -> Result<GwaElement> {
        self.check_algebra(other)?;
        let alg = &self.algebra;
        let n = alg.rank();
        let mut out = GwaElement::zero(alg);
        for (z, d) in &self.terms {
            for (w, e) in &other.terms {
                let mut coeff = d.mul(&alg.sigma_vec_apply(z, e))?;
                let mut deg = Vec::with_capacity(n);
                for i in 0..n {
                    let mut p = z.0[i];
                    let mut q = w.0[i];
                    while p > 0 && q < 0 {
                        // innermost pair X_i^+ X_i^- under p-1 more pluses
                        coeff = coeff.mul(&alg.sigma_power_apply(i, p, alg.defining(i)))?;
                        p -= 1;
                        q += 1;
                    }
                    while p < 0 && q > 0 {
                        // innermost pair X_i^- X_i^+ under |p|-1 more minuses
                        coeff = coeff.mul(&alg.sigma_power_apply(i, p + 1, alg.defining(i)))?;
                        p += 1;
                        q -= 1;
                    }
                    deg.push(p + q);
                }
                out.insert(DegreeVector(deg), coeff);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<GwaElement> {
        let mut out = GwaElement::one(&self.algebra);
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Re-express over an extended presentation obtained from this
    /// element's algebra by `extend_rank`; degree vectors are zero-padded.
    pub fn promote(&self, target: &Arc<GwaPresentation>) -> Result<GwaElement> {
        let small = &self.algebra;
        if target.rank() < small.rank() {
            return Err(KernelError::AlgebraMismatch);
        }
        // structural prefix checks
        let sv = small.base().vars();
        let tv = target.base().vars();
        if tv[..sv.len()] != *sv
            || target.base().laurent_flags()[..sv.len()] != *small.base().laurent_flags()
            || target.base().field() != small.base().field()
        {
            return Err(KernelError::AlgebraMismatch);
        }
        for i in 0..small.rank() {
            if small.defining(i).extend_ring(target.base())? != *target.defining(i)
                || small.sigma(i).extend_ring(target.base())? != *target.sigma(i)
            {
                return Err(KernelError::AlgebraMismatch);
            }
        }
        let mut out = GwaElement::zero(target);
        for (z, p) in &self.terms {
            let mut deg = z.0.clone();
            deg.resize(target.rank(), 0);
            out.insert(DegreeVector(deg), p.extend_ring(target.base())?);
        }
        Ok(out)
    }
}

fn format_gwa_term(z: &DegreeVector, d: &Poly, out: &mut String) {
    let mut gens = String::new();
    for (i, &e) in z.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !gens.is_empty() {
            gens.push('*');
        }
        if e > 0 {
            gens.push_str(&format!("Xp{}", i + 1));
            if e != 1 {
                gens.push_str(&format!("^{e}"));
            }
        } else {
            gens.push_str(&format!("Xm{}", i + 1));
            if e != -1 {
                gens.push_str(&format!("^{}", -e));
            }
        }
    }
    let ds = d.to_string();
    let needs_parens = d.num_terms() > 1 || ds.starts_with('-');
    if gens.is_empty() {
        if needs_parens && d.num_terms() > 1 {
            out.push_str(&format!("({ds})"));
        } else {
            out.push_str(&ds);
        }
    } else if d.is_one() {
        out.push_str(&gens);
    } else if needs_parens {
        out.push_str(&format!("({ds})*{gens}"));
    } else {
        out.push_str(&format!("{ds}*{gens}"));
    }
}

impl fmt::Display for GwaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (k, (z, d)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                out.push_str(" + ");
            }
            format_gwa_term(z, d, &mut out);
        }
        write!(f, "{out}")
    }
}
