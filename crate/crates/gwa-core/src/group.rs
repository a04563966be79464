//! The imprimitive complex reflection groups `G(m, p, n)`: vectors of m-th
//! roots of unity whose product is an (m/p)-th root of unity, extended by
//! coordinate permutations.

use crate::error::{KernelError, Result};

/// A permutation of `{0, .., n-1}`, stored as the image list `i -> map[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(KernelError::InvalidInput("not a permutation".into()));
            }
            seen[i] = true;
        }
        Ok(Permutation(images))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `(self . other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0usize; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    pub fn all(n: usize) -> Vec<Permutation> {
        fn rec(remaining: &mut Vec<usize>, prefix: &mut Vec<usize>, out: &mut Vec<Permutation>) {
            if remaining.is_empty() {
                out.push(Permutation(prefix.clone()));
                return;
            }
            for k in 0..remaining.len() {
                let v = remaining.remove(k);
                prefix.push(v);
                rec(remaining, prefix, out);
                prefix.pop();
                remaining.insert(k, v);
            }
        }
        let mut out = Vec::new();
        rec(&mut (0..n).collect(), &mut Vec::new(), &mut out);
        out
    }
}

/// An element of `G(m, p, n)`: root-of-unity exponents `zeta` (mod m) and a
/// coordinate permutation, composed as "permute first, then scale".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflectionGroupElement {
    pub zeta: Vec<u32>,
    pub perm: Permutation,
}

#[derive(Debug)]
pub struct ReflectionGroup {
    m: u32,
    p: u32,
    n: usize,
    elements: Vec<ReflectionGroupElement>,
}

pub const DEFAULT_GROUP_CAP: u64 = 10_000;

/// Enumerate all of `G(m, p, n)`; the order is `m^n n! / p`.
pub fn enumerate_group(m: u32, p: u32, n: usize, cap: u64) -> Result<ReflectionGroup> {
    if m == 0 || p == 0 || n == 0 {
        return Err(KernelError::InvalidInput("m, p, n must be positive".into()));
    }
    if m % p != 0 {
        return Err(KernelError::NotDivisible(p, m));
    }
    let mut order: u64 = 1;
    for _ in 0..n {
        order = order.saturating_mul(m as u64);
    }
    for k in 2..=n as u64 {
        order = order.saturating_mul(k);
    }
    order /= p as u64;
    if order > cap {
        return Err(KernelError::CapExceeded(order, cap));
    }
    let perms = Permutation::all(n);
    let mut elements = Vec::with_capacity(order as usize);
    let mut zeta = vec![0u32; n];
    loop {
        let total: u32 = zeta.iter().fold(0, |acc, &e| (acc + e) % m);
        // A(m,p,n) constraint: (prod zeta_i)^{m/p} = 1, i.e. p | sum of exponents
        if total % p == 0 {
            for perm in &perms {
                elements.push(ReflectionGroupElement {
                    zeta: zeta.clone(),
                    perm: perm.clone(),
                });
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                debug_assert_eq!(elements.len() as u64, order);
                return Ok(ReflectionGroup { m, p, n, elements });
            }
            zeta[i] += 1;
            if zeta[i] < m {
                break;
            }
            zeta[i] = 0;
            i += 1;
        }
    }
}

impl ReflectionGroup {
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[ReflectionGroupElement] {
        &self.elements
    }

    pub fn contains(&self, g: &ReflectionGroupElement) -> bool {
        self.elements.iter().any(|e| e == g)
    }

    /// Group law of the semidirect product: the scaling vector of the left
    /// factor is applied after the left factor's permutation.
    pub fn compose(
        &self,
        g: &ReflectionGroupElement,
        h: &ReflectionGroupElement,
    ) -> ReflectionGroupElement {
        let perm = g.perm.compose(&h.perm);
        let g_inv = g.perm.inverse();
        let zeta = (0..self.n)
            .map(|j| (g.zeta[j] + h.zeta[g_inv.apply(j)]) % self.m)
            .collect();
        ReflectionGroupElement { zeta, perm }
    }

    pub fn invert(&self, g: &ReflectionGroupElement) -> ReflectionGroupElement {
        let perm = g.perm.inverse();
        let zeta = (0..self.n)
            .map(|j| (self.m - g.zeta[g.perm.apply(j)] % self.m) % self.m)
            .collect();
        ReflectionGroupElement { zeta, perm }
    }

    pub fn identity(&self) -> ReflectionGroupElement {
        ReflectionGroupElement {
            zeta: vec![0; self.n],
            perm: Permutation::identity(self.n),
        }
    }
}
