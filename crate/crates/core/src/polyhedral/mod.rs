//! Exact polyhedral cones through the origin.
//!
//! A [`Cone`] carries an inequality description ([`HRep`]) and a generator
//! description ([`VRep`]); whichever is missing is computed on first use by
//! the double description method and cached. Computed representations are
//! canonical:
//!
//! * lineality and equality bases are the primitive rows of the reduced row
//!   echelon form (first nonzero entry positive),
//! * rays are projected onto the orthogonal complement of the lineality
//!   space, facet normals onto the span of the cone; both primitive and
//!   sorted lexicographically.

mod chambers;
mod dd;
pub mod linalg;

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
pub use chambers::chambers;
pub(crate) use chambers::chambers_int;
use dd::double_description;
use linalg::{
    canonical_span_basis, clear_denominators, dot, is_zero, primitive, project_out, rank, IntVec,
};

/// Inequality description `{x : e . x = 0 for e in equalities, a . x <= 0 for a in inequalities}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HRep {
    pub ambient_dim: usize,
    pub equalities: Vec<IntVec>,
    pub inequalities: Vec<IntVec>,
}

/// Generator description: nonnegative combinations of `rays` plus arbitrary
/// combinations of `lineality`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VRep {
    pub ambient_dim: usize,
    pub rays: Vec<IntVec>,
    pub lineality: Vec<IntVec>,
}

/// Canonical key of a cone: two cones are equal as sets iff their keys are equal.
pub type ConeKey = VRep;

#[derive(Debug, Clone)]
enum Seed {
    H,
    V { minimal: bool },
}

#[derive(Debug, Clone)]
pub struct Cone {
    ambient_dim: usize,
    seed: Seed,
    raw_h: Option<HRep>,
    raw_v: Option<VRep>,
    h: OnceLock<HRep>,
    v: OnceLock<VRep>,
}

fn check_lengths(n: usize, vectors: &[IntVec]) -> Result<()> {
    for v in vectors {
        if v.len() != n {
            return Err(Error::LengthMismatch { expected: n, found: v.len() });
        }
    }
    Ok(())
}

fn int_vectors(rows: &[Vec<BigRational>]) -> Vec<IntVec> {
    rows.iter().map(|r| primitive(clear_denominators(r))).collect()
}

impl Cone {
    /// `{x : e . x = 0, a . x <= 0}` over integer constraint vectors.
    pub fn from_inequalities(
        ambient_dim: usize,
        equalities: Vec<IntVec>,
        inequalities: Vec<IntVec>,
    ) -> Result<Cone> {
        check_lengths(ambient_dim, &equalities)?;
        check_lengths(ambient_dim, &inequalities)?;
        Ok(Cone {
            ambient_dim,
            seed: Seed::H,
            raw_h: Some(HRep { ambient_dim, equalities, inequalities }),
            raw_v: None,
            h: OnceLock::new(),
            v: OnceLock::new(),
        })
    }

    /// Same as [`Cone::from_inequalities`] with rational constraint vectors.
    pub fn from_rational_inequalities(
        ambient_dim: usize,
        equalities: &[Vec<BigRational>],
        inequalities: &[Vec<BigRational>],
    ) -> Result<Cone> {
        Self::from_inequalities(ambient_dim, int_vectors(equalities), int_vectors(inequalities))
    }

    /// The conical hull of `rays` plus the span of `lineality`.
    pub fn from_generators(
        ambient_dim: usize,
        rays: Vec<IntVec>,
        lineality: Vec<IntVec>,
    ) -> Result<Cone> {
        check_lengths(ambient_dim, &rays)?;
        check_lengths(ambient_dim, &lineality)?;
        Ok(Self::generated(ambient_dim, rays, lineality, false))
    }

    /// Generators known to be irredundant: `rays` are the extreme rays
    /// modulo the span of `lineality`.
    pub(crate) fn from_minimal_generators(
        ambient_dim: usize,
        rays: Vec<IntVec>,
        lineality: Vec<IntVec>,
    ) -> Cone {
        Self::generated(ambient_dim, rays, lineality, true)
    }

    fn generated(ambient_dim: usize, rays: Vec<IntVec>, lineality: Vec<IntVec>, minimal: bool) -> Cone {
        Cone {
            ambient_dim,
            seed: Seed::V { minimal },
            raw_h: None,
            raw_v: Some(VRep { ambient_dim, rays, lineality }),
            h: OnceLock::new(),
            v: OnceLock::new(),
        }
    }

    /// The linear subspace `{x : e . x = 0}`.
    pub fn subspace(ambient_dim: usize, equalities: Vec<IntVec>) -> Result<Cone> {
        Self::from_inequalities(ambient_dim, equalities, Vec::new())
    }

    pub fn zero(ambient_dim: usize) -> Cone {
        Self::from_minimal_generators(ambient_dim, Vec::new(), Vec::new())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Canonical generator description.
    pub fn vrep(&self) -> &VRep {
        self.v.get_or_init(|| match self.seed {
            Seed::V { minimal: true } => {
                let raw = self.raw_v.as_ref().unwrap();
                canonical_vrep(self.ambient_dim, &raw.rays, &raw.lineality)
            }
            Seed::V { minimal: false } => {
                let h = self.hrep();
                let (lin, rays) = double_description(self.ambient_dim, &h.equalities, &h.inequalities);
                canonical_vrep(self.ambient_dim, &rays, &lin)
            }
            Seed::H => {
                let raw = self.raw_h.as_ref().unwrap();
                let (lin, rays) =
                    double_description(self.ambient_dim, &raw.equalities, &raw.inequalities);
                canonical_vrep(self.ambient_dim, &rays, &lin)
            }
        })
    }

    /// Canonical inequality description: the equalities span the orthogonal
    /// complement of the cone's span and the inequalities are its facet normals.
    pub fn hrep(&self) -> &HRep {
        self.h.get_or_init(|| {
            let (rays, lineality) = match self.seed {
                Seed::V { minimal: false } => {
                    let raw = self.raw_v.as_ref().unwrap();
                    (&raw.rays, &raw.lineality)
                }
                _ => {
                    let v = self.vrep();
                    (&v.rays, &v.lineality)
                }
            };
            // the polar cone {a : a.r <= 0, a.l = 0}
            let (lin, normals) = double_description(self.ambient_dim, lineality, rays);
            let v = canonical_vrep(self.ambient_dim, &normals, &lin);
            HRep {
                ambient_dim: self.ambient_dim,
                equalities: v.lineality,
                inequalities: v.rays,
            }
        })
    }

    /// A cone with both representations materialized.
    pub fn dual_convert(&self) -> Cone {
        let v = self.vrep().clone();
        let h = self.hrep().clone();
        Cone {
            ambient_dim: self.ambient_dim,
            seed: Seed::V { minimal: true },
            raw_h: None,
            raw_v: Some(v.clone()),
            h: OnceLock::from(h),
            v: OnceLock::from(v),
        }
    }

    pub fn canonical_form(&self) -> ConeKey {
        self.vrep().clone()
    }

    pub fn rays(&self) -> &[IntVec] {
        &self.vrep().rays
    }

    pub fn lineality(&self) -> &[IntVec] {
        &self.vrep().lineality
    }

    /// Dimension of the linear span.
    pub fn dim(&self) -> usize {
        let v = self.vrep();
        if v.rays.is_empty() {
            return v.lineality.len();
        }
        // rays are orthogonal to the lineality space
        v.lineality.len() + rank(&v.rays)
    }

    pub fn is_zero(&self) -> bool {
        let v = self.vrep();
        v.rays.is_empty() && v.lineality.is_empty()
    }

    /// `true` when the cone is a linear subspace.
    pub fn is_subspace(&self) -> bool {
        self.vrep().rays.is_empty()
    }

    /// Sum of rays and lineality generators; lies in the relative interior
    /// and is zero only for the zero cone.
    pub fn relative_interior_point(&self) -> Vec<BigRational> {
        self.relative_interior_int()
            .into_iter()
            .map(BigRational::from_integer)
            .collect()
    }

    pub(crate) fn relative_interior_int(&self) -> IntVec {
        let v = self.vrep();
        let mut p = vec![BigInt::zero(); self.ambient_dim];
        for g in v.rays.iter().chain(&v.lineality) {
            for (x, y) in p.iter_mut().zip(g) {
                *x += y;
            }
        }
        p
    }

    /// Faces of dimension `dim - 1`.
    pub fn facets(&self) -> Vec<Cone> {
        let v = self.vrep();
        self.hrep()
            .inequalities
            .iter()
            .map(|a| {
                let rays = v.rays.iter().filter(|r| dot(a, r).is_zero()).cloned().collect();
                Cone::from_minimal_generators(self.ambient_dim, rays, v.lineality.clone())
            })
            .collect()
    }

    pub(crate) fn contains_int(&self, p: &[BigInt]) -> bool {
        let h = self.hrep();
        h.equalities.iter().all(|e| dot(e, p).is_zero())
            && h.inequalities.iter().all(|a| !dot(a, p).is_positive())
    }

    pub fn contains(&self, p: &[BigRational]) -> Result<bool> {
        if p.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch(self.ambient_dim, p.len()));
        }
        Ok(self.contains_int(&clear_denominators(p)))
    }

    /// `true` iff `p` lies in the cone but in none of its proper faces.
    pub fn contains_in_relative_interior(&self, p: &[BigRational]) -> Result<bool> {
        if !self.contains(p)? {
            return Ok(false);
        }
        let p = clear_denominators(p);
        Ok(self.hrep().inequalities.iter().all(|a| dot(a, &p).is_negative()))
    }

    /// Every generator of `self` satisfies every constraint of `other`.
    pub fn is_subcone(&self, other: &Cone) -> Result<bool> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch(self.ambient_dim, other.ambient_dim));
        }
        let v = self.vrep();
        let h = other.hrep();
        let rays_ok = v.rays.iter().all(|r| other.contains_int(r));
        let lin_ok = v.lineality.iter().all(|l| {
            h.equalities.iter().all(|e| dot(e, l).is_zero())
                && h.inequalities.iter().all(|a| dot(a, l).is_zero())
        });
        Ok(rays_ok && lin_ok)
    }

    /// Exact intersection; the result is canonicalized.
    pub fn intersect(&self, other: &Cone) -> Result<Cone> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch(self.ambient_dim, other.ambient_dim));
        }
        let (a, b) = (self.hrep(), other.hrep());
        let eqs = a.equalities.iter().chain(&b.equalities).cloned().collect();
        let ineqs = a.inequalities.iter().chain(&b.inequalities).cloned().collect();
        let cone = Cone::from_inequalities(self.ambient_dim, eqs, ineqs)?;
        cone.vrep();
        Ok(cone)
    }

    /// Whether `self` is a face of `other`.
    pub fn is_face_of(&self, other: &Cone) -> Result<bool> {
        if !self.is_subcone(other)? {
            return Ok(false);
        }
        let ov = other.vrep();
        let sv = self.vrep();
        let tight: Vec<&IntVec> = other
            .hrep()
            .inequalities
            .iter()
            .filter(|a| sv.rays.iter().all(|r| dot(a, r).is_zero()))
            .collect();
        let rays = ov
            .rays
            .iter()
            .filter(|r| tight.iter().all(|a| dot(a, r).is_zero()))
            .cloned()
            .collect();
        let face = Cone::from_minimal_generators(self.ambient_dim, rays, ov.lineality.clone());
        Ok(face.canonical_form() == self.canonical_form())
    }

    /// Audits that every generator satisfies every constraint.
    pub fn is_consistent(&self) -> bool {
        let v = self.vrep();
        let h = self.hrep();
        v.rays.iter().all(|r| {
            h.equalities.iter().all(|e| dot(e, r).is_zero())
                && h.inequalities.iter().all(|a| !dot(a, r).is_positive())
        }) && v.lineality.iter().all(|l| {
            h.equalities.iter().chain(&h.inequalities).all(|a| dot(a, l).is_zero())
        })
    }
}

impl PartialEq for Cone {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.vrep() == other.vrep()
    }
}

impl Eq for Cone {}

/// Canonicalizes irredundant generators.
fn canonical_vrep(n: usize, rays: &[IntVec], lineality: &[IntVec]) -> VRep {
    let lineality = canonical_span_basis(lineality, n);
    let mut rays: Vec<IntVec> = rays
        .iter()
        .map(|r| project_out(r, &lineality))
        .filter(|r| !is_zero(r))
        .collect();
    rays.sort();
    rays.dedup();
    VRep { ambient_dim: n, rays, lineality }
}
