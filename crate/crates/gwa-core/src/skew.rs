//! The skew group ring `L * Z^n`: rational-function coefficients twisted by
//! the automorphism lattice, the evaluation action, W-invariance and
//! symmetrizers, the GWA embedding with its preimage, support projectors,
//! and the monoid-generation test.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::automorphism::RingAutomorphism;
use crate::error::{KernelError, Result};
use crate::gwa::{DegreeVector, GwaElement, GwaPresentation};
use crate::poly::{Poly, PolyRing};
use crate::ratfunc::RatFunc;

/// Shared context of a skew group ring: the base ring and the generator
/// automorphisms that `Z^n` acts through.
#[derive(Debug)]
pub struct SkewContext {
    base: Arc<PolyRing>,
    sigma: Vec<RingAutomorphism>,
    surjective: OnceLock<Option<Vec<i64>>>,
}

impl PartialEq for SkewContext {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.sigma == other.sigma
    }
}

impl Eq for SkewContext {}

impl SkewContext {
    pub fn new(base: Arc<PolyRing>, sigma: Vec<RingAutomorphism>) -> Result<Arc<SkewContext>> {
        if sigma.is_empty() {
            return Err(KernelError::InvalidInput(
                "skew context needs at least one automorphism".into(),
            ));
        }
        for s in &sigma {
            if s.ring() != &base {
                return Err(KernelError::RingMismatch);
            }
        }
        Ok(Arc::new(SkewContext {
            base,
            sigma,
            surjective: OnceLock::new(),
        }))
    }

    pub fn from_presentation(a: &Arc<GwaPresentation>) -> Arc<SkewContext> {
        SkewContext::new(a.base().clone(), a.sigmas().to_vec()).expect("validated presentation")
    }

    pub fn rank(&self) -> usize {
        self.sigma.len()
    }

    pub fn base(&self) -> &Arc<PolyRing> {
        &self.base
    }

    pub fn sigma(&self, i: usize) -> &RingAutomorphism {
        &self.sigma[i]
    }

    pub fn sigma_vec(&self, z: &DegreeVector) -> RingAutomorphism {
        let mut out = RingAutomorphism::identity(&self.base);
        for (i, &e) in z.0.iter().enumerate() {
            if e != 0 {
                out = self.sigma[i].pow(e).compose(&out);
            }
        }
        out
    }

    pub fn sigma_vec_apply_poly(&self, z: &DegreeVector, p: &Poly) -> Poly {
        let mut out = p.clone();
        for (i, &e) in z.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            for _ in 0..e.unsigned_abs() {
                out = if e > 0 {
                    self.sigma[i].apply(&out)
                } else {
                    self.sigma[i].apply_inverse(&out)
                };
            }
        }
        out
    }

    pub fn sigma_vec_apply(&self, z: &DegreeVector, f: &RatFunc) -> RatFunc {
        let num = self.sigma_vec_apply_poly(z, f.numerator());
        let den = self.sigma_vec_apply_poly(z, f.denominator());
        RatFunc::new(num, den).expect("automorphisms keep denominators nonzero")
    }

    /// Witness `z != 0` with `sigma_z = id` inside the box `[-2, 2]^n`, if
    /// any; cached. `None` certifies surjective type at desk scale.
    fn surjectivity_witness(&self) -> Option<Vec<i64>> {
        self.surjective
            .get_or_init(|| {
                let n = self.rank();
                let mut z = vec![-2i64; n];
                loop {
                    if z.iter().any(|&e| e != 0) {
                        let dz = DegreeVector(z.clone());
                        if self.sigma_vec(&dz).is_identity() {
                            return Some(z.clone());
                        }
                    }
                    // odometer over [-2,2]^n
                    let mut i = 0;
                    loop {
                        if i == n {
                            return None;
                        }
                        z[i] += 1;
                        if z[i] <= 2 {
                            break;
                        }
                        z[i] = -2;
                        i += 1;
                    }
                }
            })
            .clone()
    }
}

/// An element of the skew group ring: a finite sum `sum l_mu * mu` with
/// rational-function coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewElement {
    ctx: Arc<SkewContext>,
    terms: BTreeMap<DegreeVector, RatFunc>,
}

impl SkewElement {
    pub fn zero(ctx: &Arc<SkewContext>) -> SkewElement {
        SkewElement {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &Arc<SkewContext>) -> SkewElement {
        SkewElement::monomial(ctx, DegreeVector::zero(ctx.rank()), RatFunc::one(&ctx.base))
            .expect("valid term")
    }

    /// The basis element `mu`.
    pub fn basis(ctx: &Arc<SkewContext>, z: DegreeVector) -> Result<SkewElement> {
        SkewElement::monomial(ctx, z, RatFunc::one(&ctx.base))
    }

    pub fn from_ratfunc(ctx: &Arc<SkewContext>, f: RatFunc) -> Result<SkewElement> {
        SkewElement::monomial(ctx, DegreeVector::zero(ctx.rank()), f)
    }

    pub fn monomial(ctx: &Arc<SkewContext>, z: DegreeVector, coeff: RatFunc) -> Result<SkewElement> {
        if z.len() != ctx.rank() {
            return Err(KernelError::ContextMismatch);
        }
        if coeff.ring() != &ctx.base {
            return Err(KernelError::RingMismatch);
        }
        let mut e = SkewElement::zero(ctx);
        if !coeff.is_zero() {
            e.terms.insert(z, coeff);
        }
        Ok(e)
    }

    pub fn ctx(&self) -> &Arc<SkewContext> {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DegreeVector, &RatFunc)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff_at(&self, z: &DegreeVector) -> RatFunc {
        self.terms
            .get(z)
            .cloned()
            .unwrap_or_else(|| RatFunc::zero(&self.ctx.base))
    }

    /// Exactly the degree vectors carrying nonzero coefficients.
    pub fn support(&self) -> BTreeSet<DegreeVector> {
        self.terms.keys().cloned().collect()
    }

    fn check_ctx(&self, other: &SkewElement) -> Result<()> {
        if Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx {
            Ok(())
        } else {
            Err(KernelError::ContextMismatch)
        }
    }

    fn insert(&mut self, z: DegreeVector, f: RatFunc) {
        if f.is_zero() {
            return;
        }
        match self.terms.entry(z) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(f);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&f).expect("same ring");
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &SkewElement) -> Result<SkewElement> {
        self.check_ctx(other)?;
        let mut out = self.clone();
        for (z, f) in &other.terms {
            out.insert(z.clone(), f.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SkewElement) -> Result<SkewElement> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SkewElement {
        SkewElement {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(z, f)| (z.clone(), f.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, f: &RatFunc) -> Result<SkewElement> {
        let mut out = SkewElement::zero(&self.ctx);
        for (z, c) in &self.terms {
            out.insert(z.clone(), f.mul(c)?);
        }
        Ok(out)
    }

    /// Skew product: `(f mu)(g nu) = f * sigma_mu(g) * (mu + nu)`.
    pub fn mul(&self, other: &SkewElement) -> Result<SkewElement> {
        self.check_ctx(other)?;
        let mut out = SkewElement::zero(&self.ctx);
        for (z, f) in &self.terms {
            for (w, g) in &other.terms {
                let twisted = self.ctx.sigma_vec_apply(z, g);
                out.insert(z.add(w), f.mul(&twisted)?);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<SkewElement> {
        let mut out = SkewElement::one(&self.ctx);
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// The evaluation action `X(l) = sum_mu l_mu * sigma_mu(l)`.
    pub fn evaluate(&self, l: &RatFunc) -> Result<RatFunc> {
        if l.ring() != &self.ctx.base {
            return Err(KernelError::RingMismatch);
        }
        let mut acc = RatFunc::zero(&self.ctx.base);
        for (z, f) in &self.terms {
            acc = acc.add(&f.mul(&self.ctx.sigma_vec_apply(z, l))?)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for SkewElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (z, c) in self.terms.iter().rev() {
            let cs = c.to_string();
            let wrapped = if c.is_polynomial() && (c.numerator().num_terms() > 1 || cs.starts_with('-'))
            {
                format!("({cs})")
            } else if !c.is_polynomial() {
                format!("({cs})")
            } else {
                cs
            };
            parts.push(format!("{wrapped} * m{z}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

// ---------------------------------------------------------------------------
// GWA embedding and preimage
// ---------------------------------------------------------------------------

/// The coefficient `t_z` with `embed(X^z) = t_z * sigma_z`: the structure
/// coefficient clearing the negative part of `z`.
fn embed_coefficient(a: &Arc<GwaPresentation>, z: &DegreeVector) -> Poly {
    let zneg = DegreeVector(z.0.iter().map(|&e| e.min(0)).collect());
    a.structure_coefficient(&zneg, &zneg.neg())
}

/// Embed a GWA element into its skew group ring over the shared context:
/// `X_i^+ -> sigma_i`, `X_i^- -> a_i sigma_i^{-1}`, extended to normal
/// forms by `d X^z -> d t_z sigma_z`.
pub fn embed_in(ctx: &Arc<SkewContext>, x: &GwaElement) -> Result<SkewElement> {
    let a = x.algebra();
    if ctx.base != *a.base() || ctx.sigma != *a.sigmas() {
        return Err(KernelError::ContextMismatch);
    }
    if let Some(z) = ctx.surjectivity_witness() {
        return Err(KernelError::NotSurjectiveType(z));
    }
    let mut out = SkewElement::zero(ctx);
    for (z, d) in x.terms() {
        let t = embed_coefficient(a, z);
        out.insert(z.clone(), RatFunc::from_poly(d.mul(&t)?));
    }
    Ok(out)
}

pub fn embed(x: &GwaElement) -> Result<SkewElement> {
    let ctx = SkewContext::from_presentation(x.algebra());
    embed_in(&ctx, x)
}

/// Invert the embedding: succeeds exactly when every coefficient `l_mu`
/// factors as `d * t_mu` with `d` polynomial; fails with the offending
/// degree otherwise.
pub fn preimage(x: &SkewElement, a: &Arc<GwaPresentation>) -> Result<GwaElement> {
    if x.ctx.base != *a.base() || x.ctx.sigma != *a.sigmas() {
        return Err(KernelError::ContextMismatch);
    }
    let mut out = GwaElement::zero(a);
    for (z, l) in &x.terms {
        let t = embed_coefficient(a, z);
        let d = l.div(&RatFunc::from_poly(t))?;
        let Some(p) = d.as_poly() else {
            return Err(KernelError::NotInImage(z.0.clone()));
        };
        out = out.add(&GwaElement::monomial(a, z.clone(), p.clone())?)?;
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// finite symmetry groups acting by conjugation
// ---------------------------------------------------------------------------

/// One group element: an automorphism of the base ring together with the
/// integer matrix describing its conjugation action on the degree lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WGroupElement {
    pub auto: RingAutomorphism,
    pub matrix: Vec<Vec<i64>>,
}

impl WGroupElement {
    pub fn apply_vec(&self, z: &DegreeVector) -> DegreeVector {
        let n = z.len();
        let mut out = vec![0i64; n];
        for (r, row) in self.matrix.iter().enumerate() {
            out[r] = row.iter().zip(&z.0).map(|(m, e)| m * e).sum();
        }
        DegreeVector(out)
    }
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            out[i][j] = (0..n).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

fn mat_identity(n: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    m
}

/// An explicit finite group acting on the skew ring by conjugation.
#[derive(Debug)]
pub struct WGroup {
    ctx: Arc<SkewContext>,
    elements: Vec<WGroupElement>,
    identity: usize,
}

impl WGroup {
    /// Validate closure, inverses, identity, and the compatibility
    /// `w sigma_z w^{-1} = sigma_{w z}` on lattice generators.
    pub fn new(ctx: &Arc<SkewContext>, elements: Vec<WGroupElement>) -> Result<WGroup> {
        if elements.is_empty() {
            return Err(KernelError::InvalidInput("empty group".into()));
        }
        let n = ctx.rank();
        let identity = elements
            .iter()
            .position(|e| e.auto.is_identity() && e.matrix == mat_identity(n))
            .ok_or_else(|| KernelError::InvalidInput("group lacks the identity".into()))?;
        let index_of = |auto: &RingAutomorphism, mat: &Vec<Vec<i64>>| -> Option<usize> {
            elements
                .iter()
                .position(|e| e.auto == *auto && e.matrix == *mat)
        };
        for g in &elements {
            for h in &elements {
                let prod_auto = g.auto.compose(&h.auto);
                let prod_mat = mat_mul(&g.matrix, &h.matrix);
                if index_of(&prod_auto, &prod_mat).is_none() {
                    return Err(KernelError::InvalidInput(
                        "group is not closed under composition".into(),
                    ));
                }
            }
            let inv_auto = g.auto.inverted();
            let has_inverse = elements.iter().any(|e| {
                e.auto == inv_auto && mat_mul(&e.matrix, &g.matrix) == mat_identity(n)
            });
            if !has_inverse {
                return Err(KernelError::InvalidInput(
                    "group is not closed under inverses".into(),
                ));
            }
        }
        for g in &elements {
            for i in 0..n {
                let lhs = g.auto.compose(ctx.sigma(i)).compose(&g.auto.inverted());
                let img = g.apply_vec(&DegreeVector::unit(n, i, 1));
                let rhs = ctx.sigma_vec(&img);
                if lhs != rhs {
                    return Err(KernelError::InvalidInput(
                        "conjugation action is incompatible with the sigma lattice".into(),
                    ));
                }
            }
        }
        Ok(WGroup {
            ctx: ctx.clone(),
            elements,
            identity,
        })
    }

    /// The trivial group.
    pub fn trivial(ctx: &Arc<SkewContext>) -> WGroup {
        let n = ctx.rank();
        WGroup {
            ctx: ctx.clone(),
            elements: vec![WGroupElement {
                auto: RingAutomorphism::identity(ctx.base()),
                matrix: mat_identity(n),
            }],
            identity: 0,
        }
    }

    /// The symmetric group `S_n` acting on a tensorial context by
    /// simultaneously permuting the variable blocks and the lattice axes.
    pub fn symmetric(ctx: &Arc<SkewContext>) -> Result<WGroup> {
        let n = ctx.rank();
        let nv = ctx.base().nvars();
        if nv % n != 0 {
            return Err(KernelError::NonClassicalSetting);
        }
        let b = nv / n;
        let mut elements = Vec::new();
        for pi in permutations(n) {
            let mut var_map = vec![0usize; nv];
            for i in 0..n {
                for k in 0..b {
                    var_map[i * b + k] = pi[i] * b + k;
                }
            }
            let auto = RingAutomorphism::permutation(ctx.base(), &var_map);
            let mut matrix = vec![vec![0i64; n]; n];
            for (i, &j) in pi.iter().enumerate() {
                matrix[j][i] = 1;
            }
            elements.push(WGroupElement { auto, matrix });
        }
        WGroup::new(ctx, elements)
    }

    pub fn ctx(&self) -> &Arc<SkewContext> {
        &self.ctx
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WGroupElement] {
        &self.elements
    }

    pub fn identity_index(&self) -> usize {
        self.identity
    }

    /// Conjugation `w x w^{-1}`, acting coefficientwise and on support.
    pub fn conjugate(&self, x: &SkewElement, g: &WGroupElement) -> Result<SkewElement> {
        if x.ctx != self.ctx && !Arc::ptr_eq(&x.ctx, &self.ctx) {
            return Err(KernelError::ContextMismatch);
        }
        let mut out = SkewElement::zero(&self.ctx);
        for (z, f) in &x.terms {
            out.insert(g.apply_vec(z), g.auto.apply_rat(f));
        }
        Ok(out)
    }

    /// Membership in the fixed ring `L^W`.
    pub fn is_invariant(&self, x: &SkewElement) -> Result<bool> {
        for g in &self.elements {
            if self.conjugate(x, g)? != *x {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn orbit(&self, mu: &DegreeVector) -> BTreeSet<DegreeVector> {
        self.elements.iter().map(|g| g.apply_vec(mu)).collect()
    }

    pub fn stabilizer(&self, mu: &DegreeVector) -> Vec<&WGroupElement> {
        self.elements
            .iter()
            .filter(|g| g.apply_vec(mu) == *mu)
            .collect()
    }

    /// The symmetrizer `[a mu] = sum over cosets of W_mu of w(a) * (w mu)`.
    /// `a` must be fixed by the stabilizer of `mu`.
    pub fn symmetrize(&self, a: &RatFunc, mu: &DegreeVector) -> Result<SkewElement> {
        if a.ring() != self.ctx.base() {
            return Err(KernelError::RingMismatch);
        }
        if mu.len() != self.ctx.rank() {
            return Err(KernelError::ContextMismatch);
        }
        for g in self.stabilizer(mu) {
            if g.auto.apply_rat(a) != *a {
                return Err(KernelError::NotStabilizerInvariant);
            }
        }
        let mut seen: BTreeMap<DegreeVector, RatFunc> = BTreeMap::new();
        for g in &self.elements {
            let target = g.apply_vec(mu);
            seen.entry(target).or_insert_with(|| g.auto.apply_rat(a));
        }
        let mut out = SkewElement::zero(&self.ctx);
        for (z, f) in seen {
            out.insert(z, f);
        }
        Ok(out)
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    fn heap(k: usize, arr: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(arr.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, arr, out);
            if k % 2 == 0 {
                arr.swap(i, k - 1);
            } else {
                arr.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut current, &mut out);
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// support projectors
// ---------------------------------------------------------------------------

/// The right projector `f_S^r = prod_{s in S} [f (.) - (.) sigma_s^{-1}(f)]`
/// applied to `u`: on a term `l sigma_mu` each factor multiplies the
/// coefficient by `f - sigma_{mu - s}(f)`, so terms with `mu` in `S` are
/// annihilated.
pub fn f_projector(
    s: &BTreeSet<DegreeVector>,
    f: &Poly,
    u: &SkewElement,
) -> Result<SkewElement> {
    let ctx = u.ctx();
    if f.ring() != ctx.base() {
        return Err(KernelError::RingMismatch);
    }
    let mut out = SkewElement::zero(ctx);
    for (mu, l) in u.terms() {
        let mut factor = Poly::one(ctx.base());
        for sv in s {
            if sv.len() != ctx.rank() {
                return Err(KernelError::ContextMismatch);
            }
            let shifted = ctx.sigma_vec_apply_poly(&mu.sub(sv), f);
            factor = factor.mul(&f.sub(&shifted)?)?;
        }
        out.insert(mu.clone(), l.mul_poly(&factor)?);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// monoid generation
// ---------------------------------------------------------------------------

/// Does the given set of vectors generate `Z^n` as a monoid (all
/// N-combinations)? Decided by breadth-first closure inside the box
/// `[-B, B]^n` with `B = n * max ||v||_inf + 1`; by the Steinitz
/// rearrangement bound any representation of a unit vector can be reordered
/// to stay inside that box, so the bounded search is sound.
pub fn monoid_generates(vectors: &[DegreeVector], n: usize) -> bool {
    if n == 0 {
        return true;
    }
    let gens: Vec<&DegreeVector> = vectors
        .iter()
        .filter(|v| !v.is_zero() && v.len() == n)
        .collect();
    if gens.is_empty() {
        return false;
    }
    let maxn = gens.iter().map(|v| v.norm_inf()).max().unwrap();
    let b = n as i64 * maxn + 1;
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    let origin = vec![0i64; n];
    seen.insert(origin.clone());
    queue.push_back(origin);
    while let Some(p) = queue.pop_front() {
        for v in &gens {
            let q: Vec<i64> = p.iter().zip(&v.0).map(|(a, b)| a + b).collect();
            if q.iter().any(|&e| e.abs() > b) {
                continue;
            }
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    for i in 0..n {
        for sign in [1i64, -1] {
            let mut e = vec![0i64; n];
            e[i] = sign;
            if !seen.contains(&e) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat_int;

    fn weyl1() -> Arc<GwaPresentation> {
        GwaPresentation::first_weyl()
    }

    fn weyl(n: usize) -> Arc<GwaPresentation> {
        GwaPresentation::tensor_power(&weyl1(), n).unwrap()
    }

    #[test]
    fn twist_rule() {
        // (1 * e_1) (h_1 * id) = (h_1 - 1) * e_1 for the classical shift
        let a = weyl(2);
        let ctx = SkewContext::from_presentation(&a);
        let e1 = SkewElement::basis(&ctx, DegreeVector(vec![1, 0])).unwrap();
        let h1 = SkewElement::from_ratfunc(
            &ctx,
            RatFunc::from_poly(Poly::var(ctx.base(), 0)),
        )
        .unwrap();
        let prod = e1.mul(&h1).unwrap();
        let expected = SkewElement::monomial(
            &ctx,
            DegreeVector(vec![1, 0]),
            RatFunc::from_poly(
                Poly::var(ctx.base(), 0)
                    .sub(&Poly::one(ctx.base()))
                    .unwrap(),
            ),
        )
        .unwrap();
        assert_eq!(prod, expected);
    }

    #[test]
    fn rank_one_cross_terms() {
        // (h e)(h e^{-1}) = h (h-1) * id
        let a = weyl1();
        let ctx = SkewContext::from_presentation(&a);
        let h = Poly::var(ctx.base(), 0);
        let x = SkewElement::monomial(&ctx, DegreeVector(vec![1]), RatFunc::from_poly(h.clone()))
            .unwrap();
        let y = SkewElement::monomial(&ctx, DegreeVector(vec![-1]), RatFunc::from_poly(h.clone()))
            .unwrap();
        let prod = x.mul(&y).unwrap();
        let hm1 = h.sub(&Poly::one(ctx.base())).unwrap();
        let expected = SkewElement::from_ratfunc(&ctx, RatFunc::from_poly(h.mul(&hm1).unwrap()))
            .unwrap();
        assert_eq!(prod, expected);
    }

    #[test]
    fn identity_is_neutral() {
        let a = weyl(2);
        let ctx = SkewContext::from_presentation(&a);
        let x = SkewElement::monomial(
            &ctx,
            DegreeVector(vec![1, -1]),
            RatFunc::from_poly(Poly::var(ctx.base(), 1)),
        )
        .unwrap();
        let e = SkewElement::one(&ctx);
        assert_eq!(e.mul(&x).unwrap(), x);
        assert_eq!(x.mul(&e).unwrap(), x);
    }

    #[test]
    fn evaluation_action() {
        let a = weyl1();
        let ctx = SkewContext::from_presentation(&a);
        let h = Poly::var(ctx.base(), 0);
        let hf = RatFunc::from_poly(h.clone());
        // X = e_1 evaluated at h gives h - 1
        let x = SkewElement::basis(&ctx, DegreeVector(vec![1])).unwrap();
        assert_eq!(
            x.evaluate(&hf).unwrap(),
            RatFunc::from_poly(h.sub(&Poly::one(ctx.base())).unwrap())
        );
        // X = h e + e^{-1} at h -> h(h-1) + (h+1)
        let x2 = SkewElement::monomial(&ctx, DegreeVector(vec![1]), hf.clone())
            .unwrap()
            .add(&SkewElement::basis(&ctx, DegreeVector(vec![-1])).unwrap())
            .unwrap();
        let hm1 = h.sub(&Poly::one(ctx.base())).unwrap();
        let hp1 = h.add(&Poly::one(ctx.base())).unwrap();
        let expected = RatFunc::from_poly(h.mul(&hm1).unwrap().add(&hp1).unwrap());
        assert_eq!(x2.evaluate(&hf).unwrap(), expected);
        // identity acts as identity
        assert_eq!(SkewElement::one(&ctx).evaluate(&hf).unwrap(), hf);
    }

    #[test]
    fn embedding_of_generators() {
        let a = weyl1();
        let ctx = SkewContext::from_presentation(&a);
        let xp = GwaElement::generator(&a, 0, 1).unwrap();
        let xm = GwaElement::generator(&a, 0, -1).unwrap();
        let exp = embed_in(&ctx, &xp).unwrap();
        let exm = embed_in(&ctx, &xm).unwrap();
        assert_eq!(
            exp,
            SkewElement::basis(&ctx, DegreeVector(vec![1])).unwrap()
        );
        let h = Poly::var(ctx.base(), 0);
        assert_eq!(
            exm,
            SkewElement::monomial(&ctx, DegreeVector(vec![-1]), RatFunc::from_poly(h)).unwrap()
        );
        // embed(X+) embed(X-) = (h-1) * id = embed(X+ X-)
        let prod = exp.mul(&exm).unwrap();
        let direct = embed_in(&ctx, &xp.mul(&xm).unwrap()).unwrap();
        assert_eq!(prod, direct);
    }

    #[test]
    fn preimage_inverts_embedding() {
        let a = weyl1();
        let ctx = SkewContext::from_presentation(&a);
        let h = Poly::var(a.base(), 0);
        let x = GwaElement::monomial(&a, DegreeVector(vec![-2]), h.clone())
            .unwrap()
            .add(&GwaElement::generator(&a, 0, 1).unwrap())
            .unwrap();
        let back = preimage(&embed_in(&ctx, &x).unwrap(), &a).unwrap();
        assert_eq!(back, x);
        // (1/h) * id is not in the image
        let bad = SkewElement::from_ratfunc(
            &ctx,
            RatFunc::new(Poly::one(ctx.base()), h).unwrap(),
        )
        .unwrap();
        assert_eq!(
            preimage(&bad, &a),
            Err(KernelError::NotInImage(vec![0]))
        );
    }

    #[test]
    fn non_surjective_type_is_detected() {
        // identity sigma: sigma_z = id for every z
        let ring = PolyRing::rational(&["h"]);
        let ident = RingAutomorphism::identity(&ring);
        let a = GwaPresentation::new(ring.clone(), vec![Poly::var(&ring, 0)], vec![ident]).unwrap();
        let x = GwaElement::generator(&a, 0, 1).unwrap();
        assert!(matches!(
            embed(&x),
            Err(KernelError::NotSurjectiveType(_))
        ));
    }

    #[test]
    fn symmetric_group_invariance() {
        let a = weyl(2);
        let ctx = SkewContext::from_presentation(&a);
        let w = WGroup::symmetric(&ctx).unwrap();
        assert_eq!(w.order(), 2);
        let h1 = RatFunc::from_poly(Poly::var(ctx.base(), 0));
        let h2 = RatFunc::from_poly(Poly::var(ctx.base(), 1));
        let x = SkewElement::monomial(&ctx, DegreeVector(vec![1, 0]), h1.clone())
            .unwrap()
            .add(&SkewElement::monomial(&ctx, DegreeVector(vec![0, 1]), h2).unwrap())
            .unwrap();
        assert!(w.is_invariant(&x).unwrap());
        let lop = SkewElement::monomial(&ctx, DegreeVector(vec![1, 0]), h1).unwrap();
        assert!(!w.is_invariant(&lop).unwrap());
        let trivial = WGroup::trivial(&ctx);
        assert!(trivial.is_invariant(&lop).unwrap());
    }

    #[test]
    fn symmetrizer_matches_orbit_sum() {
        let a = weyl(2);
        let ctx = SkewContext::from_presentation(&a);
        let w = WGroup::symmetric(&ctx).unwrap();
        let h1 = RatFunc::from_poly(Poly::var(ctx.base(), 0));
        let s = w.symmetrize(&h1, &DegreeVector(vec![1, 0])).unwrap();
        assert_eq!(s.num_terms(), 2);
        assert!(w.is_invariant(&s).unwrap());
        // full stabilizer: single coset
        let h1h2 = RatFunc::from_poly(
            Poly::var(ctx.base(), 0)
                .mul(&Poly::var(ctx.base(), 1))
                .unwrap(),
        );
        let diag = w.symmetrize(&h1h2, &DegreeVector(vec![1, 1])).unwrap();
        assert_eq!(diag.num_terms(), 1);
        // h1 is not stabilizer-invariant for the diagonal degree
        let bad = w.symmetrize(&h1, &DegreeVector(vec![1, 1]));
        assert_eq!(bad.unwrap_err(), KernelError::NotStabilizerInvariant);
    }

    #[test]
    fn projector_annihilates_and_restricts() {
        let a2 = weyl(2);
        let ctx = SkewContext::from_presentation(&a2);
        let h1 = Poly::var(ctx.base(), 0);
        // S = {e1}: annihilates h1 * e1
        let u = SkewElement::monomial(
            &ctx,
            DegreeVector(vec![1, 0]),
            RatFunc::from_poly(h1.clone()),
        )
        .unwrap();
        let s: BTreeSet<_> = [DegreeVector(vec![1, 0])].into_iter().collect();
        assert!(f_projector(&s, &h1, &u).unwrap().is_zero());
        // S = {e2} keeps e1 from e1 + e2
        let u2 = SkewElement::basis(&ctx, DegreeVector(vec![1, 0]))
            .unwrap()
            .add(&SkewElement::basis(&ctx, DegreeVector(vec![0, 1])).unwrap())
            .unwrap();
        let s2: BTreeSet<_> = [DegreeVector(vec![0, 1])].into_iter().collect();
        let res = f_projector(&s2, &h1, &u2).unwrap();
        assert_eq!(
            res.support().into_iter().collect::<Vec<_>>(),
            vec![DegreeVector(vec![1, 0])]
        );
        // empty S is the identity operator
        let empty = BTreeSet::new();
        assert_eq!(f_projector(&empty, &h1, &u2).unwrap(), u2);
    }

    #[test]
    fn monoid_generation_examples() {
        let e1 = DegreeVector(vec![1]);
        let me1 = DegreeVector(vec![-1]);
        assert!(monoid_generates(&[e1.clone(), me1], 1));
        assert!(!monoid_generates(&[e1], 1));
        let v1 = DegreeVector(vec![1, 0]);
        let v2 = DegreeVector(vec![0, 1]);
        let v3 = DegreeVector(vec![-1, -1]);
        assert!(monoid_generates(&[v1, v2, v3], 2));
    }

    #[test]
    fn module_law_on_samples() {
        let a = weyl(2);
        let ctx = SkewContext::from_presentation(&a);
        let h1 = Poly::var(ctx.base(), 0);
        let h2 = Poly::var(ctx.base(), 1);
        let x = SkewElement::monomial(&ctx, DegreeVector(vec![1, -1]), RatFunc::from_poly(h1.clone()))
            .unwrap()
            .add(&SkewElement::one(&ctx).scale(&RatFunc::from_poly(h2.clone())).unwrap())
            .unwrap();
        let y = SkewElement::monomial(&ctx, DegreeVector(vec![0, 1]), RatFunc::from_poly(h2.clone()))
            .unwrap();
        let l = RatFunc::new(h1.clone(), h2.add(&Poly::one(ctx.base())).unwrap()).unwrap();
        let lhs = x.mul(&y).unwrap().evaluate(&l).unwrap();
        let rhs = x.evaluate(&y.evaluate(&l).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        let _ = rat_int(0);
    }
}
