//! Double description method over the integers.
//!
//! Cones are `{x : E x = 0, A x <= 0}`. The state tracks a lineality basis,
//! the extreme rays modulo lineality, and for every ray the set of processed
//! inequalities that are tight on it. Adjacency of two rays is decided
//! combinatorially: `p` and `q` span a 2-face iff no third ray is tight on
//! every inequality tight on both.
//!
//! All vectors are integral and kept primitive, so no rational arithmetic is
//! needed inside the iteration.

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::linalg::{combine, dot, is_zero, make_primitive, negated, nullspace, primitive, IntVec};

#[derive(Debug, Clone)]
pub(crate) struct DdState {
    n: usize,
    constraints: Vec<IntVec>,
    lineality: Vec<IntVec>,
    rays: Vec<IntVec>,
    tight: Vec<FixedBitSet>,
}

impl DdState {
    /// The linear subspace cut out by `equalities`.
    pub(crate) fn subspace(n: usize, equalities: &[IntVec]) -> Self {
        DdState {
            n,
            constraints: Vec::new(),
            lineality: nullspace(equalities, n),
            rays: Vec::new(),
            tight: Vec::new(),
        }
    }

    /// Resumes from a known minimal V-representation. `constraints` must be
    /// valid inequalities whose kernels contain the lineality space, and
    /// `rays` must be the extreme rays modulo lineality.
    pub(crate) fn from_generators(
        n: usize,
        constraints: Vec<IntVec>,
        rays: Vec<IntVec>,
        lineality: Vec<IntVec>,
    ) -> Self {
        let tight = rays
            .iter()
            .map(|r| {
                let mut set = FixedBitSet::with_capacity(constraints.len());
                for (i, a) in constraints.iter().enumerate() {
                    if dot(a, r).is_zero() {
                        set.insert(i);
                    }
                }
                set
            })
            .collect();
        DdState { n, constraints, lineality, rays, tight }
    }

    pub(crate) fn into_generators(self) -> (Vec<IntVec>, Vec<IntVec>) {
        (self.lineality, self.rays)
    }

    /// Sign pattern of `a` on the cone: (some generator positive, some negative).
    pub(crate) fn sign_pattern(&self, a: &[BigInt]) -> (bool, bool) {
        if self.lineality.iter().any(|l| !dot(a, l).is_zero()) {
            return (true, true);
        }
        let mut pos = false;
        let mut neg = false;
        for r in &self.rays {
            let v = dot(a, r);
            if v.is_positive() {
                pos = true;
            } else if v.is_negative() {
                neg = true;
            }
            if pos && neg {
                break;
            }
        }
        (pos, neg)
    }

    /// Intersects the cone with `{x : a . x <= 0}`.
    pub(crate) fn add_inequality(&mut self, a: IntVec) {
        debug_assert_eq!(a.len(), self.n);
        let idx = self.constraints.len();
        for t in &mut self.tight {
            t.grow(idx + 1);
        }

        if let Some(p) = self.lineality.iter().position(|l| !dot(&a, l).is_zero()) {
            let pivot = self.lineality.swap_remove(p);
            let s = dot(&a, &pivot);
            for l in &mut self.lineality {
                let t = dot(&a, l);
                if !t.is_zero() {
                    *l = primitive(combine(&s, l, &t, &pivot));
                }
            }
            let (s_abs, sign) = if s.is_positive() { (s.clone(), 1) } else { (-&s, -1) };
            for (r, tight) in self.rays.iter_mut().zip(&mut self.tight) {
                let t = dot(&a, r);
                if !t.is_zero() {
                    let t = if sign > 0 { t } else { -t };
                    *r = combine(&s_abs, r, &t, &pivot);
                    make_primitive(r);
                }
                tight.insert(idx);
            }
            let new_ray = if sign > 0 { negated(&pivot) } else { pivot };
            let mut tight = FixedBitSet::with_capacity(idx + 1);
            tight.insert_range(0..idx);
            self.rays.push(new_ray);
            self.tight.push(tight);
            self.constraints.push(a);
            return;
        }

        let values: Vec<BigInt> = self.rays.iter().map(|r| dot(&a, r)).collect();
        let plus: Vec<usize> = (0..values.len()).filter(|&i| values[i].is_positive()).collect();
        if plus.is_empty() {
            for (i, v) in values.iter().enumerate() {
                if v.is_zero() {
                    self.tight[i].insert(idx);
                }
            }
            self.constraints.push(a);
            return;
        }
        let minus: Vec<usize> = (0..values.len()).filter(|&i| values[i].is_negative()).collect();

        let mut new_rays = Vec::new();
        let mut new_tight = Vec::new();
        for &p in &plus {
            for &q in &minus {
                let mut common = self.tight[p].clone();
                common.intersect_with(&self.tight[q]);
                let blocked = self.tight.iter().enumerate().any(|(r, t)| {
                    r != p && r != q && common.is_subset(t)
                });
                if blocked {
                    continue;
                }
                // values[p] > 0 > values[q]: both coefficients positive
                let mut ray = combine(&values[p], &self.rays[q], &values[q], &self.rays[p]);
                make_primitive(&mut ray);
                debug_assert!(!is_zero(&ray));
                common.insert(idx);
                new_rays.push(ray);
                new_tight.push(common);
            }
        }

        let mut rays = Vec::with_capacity(values.len() - plus.len() + new_rays.len());
        let mut tight = Vec::with_capacity(rays.capacity());
        for (i, (r, mut t)) in std::mem::take(&mut self.rays)
            .into_iter()
            .zip(std::mem::take(&mut self.tight))
            .enumerate()
        {
            if values[i].is_positive() {
                continue;
            }
            if values[i].is_zero() {
                t.insert(idx);
            }
            rays.push(r);
            tight.push(t);
        }
        rays.extend(new_rays);
        tight.extend(new_tight);
        self.rays = rays;
        self.tight = tight;
        self.constraints.push(a);
    }
}

/// Generators of `{x : E x = 0, A x <= 0}`: a lineality basis and the
/// extreme rays modulo lineality (neither canonicalized).
pub(crate) fn double_description(
    n: usize,
    equalities: &[IntVec],
    inequalities: &[IntVec],
) -> (Vec<IntVec>, Vec<IntVec>) {
    let mut state = DdState::subspace(n, equalities);
    let mut seen = std::collections::HashSet::new();
    for a in inequalities {
        let a = primitive(a.clone());
        if is_zero(&a) || !seen.insert(a.clone()) {
            continue;
        }
        state.add_inequality(a);
    }
    state.into_generators()
}
