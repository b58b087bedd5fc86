//! The GIT fan on `Sigma(d)`, GIT equivalence of stability parameters and
//! the geometric-phase criterion.
//!
//! Construction:
//!
//! 1. cut `Sigma(d)` by the hyperplanes spanned by codimension-one walls,
//! 2. merge adjacent cells whose common facet lies on no codimension-one
//!    wall, and check that every merged class is convex,
//! 3. close the maximal cones under faces. Faces are identified by their
//!    sets of global ray indices, which is exact because every cone of a fan
//!    shares the fan's lineality space and is pointed modulo it.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};
use crate::polyhedral::chambers_int;
use crate::polyhedral::linalg::{dot, is_zero, normalize_sign, primitive, rank, IntVec};
use crate::polyhedral::Cone;
use crate::quiver::{DimVector, StabParam};
use crate::schofield::Session;

/// One cone of a [`Fan`].
#[derive(Debug, Clone)]
pub struct FanCone {
    pub dim: usize,
    /// Indices into [`Fan::rays`], ascending.
    pub ray_indices: Vec<usize>,
    pub cone: Cone,
}

#[derive(Debug, Clone)]
struct Maximal {
    cone_index: usize,
    /// Facet normals with the rays tight on them.
    facets: Vec<(IntVec, Vec<usize>)>,
}

/// A polyhedral fan all of whose cones share one lineality space.
#[derive(Debug, Clone)]
pub struct Fan {
    ambient_dim: usize,
    rays: Vec<IntVec>,
    lineality: Vec<IntVec>,
    cones: Vec<FanCone>,
    maximal: Vec<Maximal>,
    index: HashMap<Vec<usize>, usize>,
}

impl Fan {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Primitive rays modulo the lineality space, sorted.
    pub fn rays(&self) -> &[IntVec] {
        &self.rays
    }

    pub fn lineality(&self) -> &[IntVec] {
        &self.lineality
    }

    /// All cones, ordered by dimension and then by ray indices.
    pub fn cones(&self) -> &[FanCone] {
        &self.cones
    }

    pub fn maximal_cones(&self) -> impl Iterator<Item = &FanCone> {
        self.maximal.iter().map(|m| &self.cones[m.cone_index])
    }

    /// Number of cones of each dimension, starting at the minimal cone.
    pub fn f_vector(&self) -> Vec<usize> {
        fan_f_vector(self)
    }

    /// Index into [`Fan::cones`] of the cone containing `theta` in its
    /// relative interior.
    pub fn locate(&self, theta: &StabParam) -> Result<usize> {
        if theta.len() != self.ambient_dim {
            return Err(Error::WrongStabilityDimension {
                expected: self.ambient_dim,
                found: theta.len(),
            });
        }
        let p = theta.to_integer_direction();
        for m in &self.maximal {
            let c = &self.cones[m.cone_index];
            if !c.cone.contains_int(&p) {
                continue;
            }
            let mut face = c.ray_indices.clone();
            for (a, tight) in &m.facets {
                if dot(a, &p).is_zero() {
                    face = intersect_sorted(&face, tight);
                }
            }
            return self
                .index
                .get(&face)
                .copied()
                .ok_or_else(|| Error::Internal("face of a maximal cone missing from the fan".into()));
        }
        Err(Error::NotInSupport)
    }
}

/// Cone counts by dimension, lowest first; the first entry counts the
/// minimal cone (the common lineality space) and is always 1.
pub fn fan_f_vector(fan: &Fan) -> Vec<usize> {
    let low = fan.lineality.len();
    let high = fan.cones.iter().map(|c| c.dim).max().unwrap_or(low);
    let mut f = vec![0; high - low + 1];
    for c in &fan.cones {
        f[c.dim - low] += 1;
    }
    f
}

fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn sum(vectors: &[&IntVec], lineality: &[IntVec], n: usize) -> IntVec {
    let mut p = vec![BigInt::zero(); n];
    for g in vectors.iter().copied().chain(lineality) {
        for (x, y) in p.iter_mut().zip(g) {
            *x += y;
        }
    }
    p
}

/// Closed subinterval of `[0, 1]` on which `p + t (q - p)` lies in `cone`,
/// or `None` when empty.
fn segment_interval(
    cone: &Cone,
    p: &[BigInt],
    q: &[BigInt],
) -> Option<(BigRational, BigRational)> {
    let dir: IntVec = q.iter().zip(p).map(|(a, b)| a - b).collect();
    let mut lo = BigRational::zero();
    let mut hi = BigRational::one();
    let h = cone.hrep();
    let rows = h.equalities.iter().map(|a| (a, true)).chain(h.inequalities.iter().map(|a| (a, false)));
    for (a, equality) in rows {
        let alpha = dot(a, p);
        let beta = dot(a, &dir);
        if beta.is_zero() {
            if alpha.is_positive() || (equality && !alpha.is_zero()) {
                return None;
            }
            continue;
        }
        let root = BigRational::new(-alpha, beta.clone());
        if equality || beta.is_positive() {
            hi = hi.min(root.clone());
        }
        if equality || beta.is_negative() {
            lo = lo.max(root);
        }
        if lo > hi {
            return None;
        }
    }
    Some((lo, hi))
}

/// Integer points `p`, `q` with `p : q` the same as `theta : eta`.
fn common_scale(theta: &StabParam, eta: &StabParam) -> (IntVec, IntVec) {
    use num_integer::Integer;
    let lcm = theta
        .coords()
        .iter()
        .chain(eta.coords())
        .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let scale = |s: &StabParam| -> IntVec {
        s.coords().iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
    };
    (scale(theta), scale(eta))
}

impl Session {
    fn check_theta(&self, d: &DimVector, theta: &StabParam) -> Result<()> {
        if theta.len() != d.len() {
            return Err(Error::WrongStabilityDimension { expected: d.len(), found: theta.len() });
        }
        Ok(())
    }

    /// The GIT fan of `d`, supported on `Sigma(d)`.
    pub fn git_fan(&self, d: &DimVector) -> Result<Fan> {
        self.check_nonzero(d)?;
        let n = d.len();
        let sigma = self.semistable(d);
        let walls = self.all_walls(d)?;
        let codim_one: Vec<&Cone> = match sigma.dim() {
            0 => Vec::new(),
            k => walls.of_dim(k - 1).map(|(_, w)| w).collect(),
        };

        let generators: Vec<&IntVec> = sigma.rays().iter().chain(sigma.lineality()).collect();
        let mut normals: Vec<IntVec> = Vec::new();
        for w in &codim_one {
            let a = w
                .hrep()
                .equalities
                .iter()
                .find(|a| generators.iter().any(|g| !dot(a, g).is_zero()))
                .ok_or_else(|| Error::Internal("codimension-one wall spans Sigma".into()))?;
            let mut a = primitive(a.clone());
            normalize_sign(&mut a);
            if !normals.contains(&a) {
                normals.push(a);
            }
        }
        let cells = chambers_int(&sigma, &normals);
        let maximal = merge_cells(n, &cells, &codim_one)?;
        build_fan(n, maximal)
    }

    /// Whether `theta` and `eta` in `Sigma(d)` are GIT-equivalent: no wall
    /// meets the segment between them in a proper nonempty subsegment.
    pub fn git_equivalent(&self, d: &DimVector, theta: &StabParam, eta: &StabParam) -> Result<bool> {
        self.check_nonzero(d)?;
        self.check_theta(d, theta)?;
        self.check_theta(d, eta)?;
        let sigma = self.semistable(d);
        let (p, q) = common_scale(theta, eta);
        if !sigma.contains_int(&p) {
            return Err(Error::NotSemistable("theta"));
        }
        if !sigma.contains_int(&q) {
            return Err(Error::NotSemistable("eta"));
        }
        let walls = self.all_walls(d)?;
        for (_, w) in walls.iter() {
            if let Some((lo, hi)) = segment_interval(w, &p, &q) {
                if !(lo.is_zero() && hi.is_one()) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `Sigma(d)` spans `C(d)` and no wall does.
    pub fn has_geometric_phase(&self, d: &DimVector) -> Result<bool> {
        self.check_nonzero(d)?;
        let top = d.len() - 1;
        if self.semistable(d).dim() != top {
            return Ok(false);
        }
        let walls = self.all_walls(d)?;
        let spanning = walls.iter().any(|(_, w)| w.dim() >= top);
        Ok(!spanning)
    }
}

/// Merges cells across facets that lie on no codimension-one wall and
/// returns the convex hulls of the merged classes.
fn merge_cells(n: usize, cells: &[Cone], walls: &[&Cone]) -> Result<Vec<Cone>> {
    // facet key: the sorted rays tight on it (cells share one lineality)
    let mut facet_cells: BTreeMap<Vec<IntVec>, Vec<usize>> = BTreeMap::new();
    for (i, c) in cells.iter().enumerate() {
        for a in &c.hrep().inequalities {
            let tight: Vec<IntVec> = c.rays().iter().filter(|r| dot(a, r).is_zero()).cloned().collect();
            facet_cells.entry(tight).or_default().push(i);
        }
    }
    let lineality = cells.first().map(|c| c.lineality().to_vec()).unwrap_or_default();
    let mut classes = UnionFind::<usize>::new(cells.len());
    for (rays, owners) in &facet_cells {
        if owners.len() != 2 {
            continue;
        }
        let refs: Vec<&IntVec> = rays.iter().collect();
        let p = sum(&refs, &lineality, n);
        if !walls.iter().any(|w| w.contains_int(&p)) {
            classes.union(owners[0], owners[1]);
        }
    }

    let labels = classes.into_labeling();
    let mut members: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, l) in labels.iter().enumerate() {
        members.entry(*l).or_default().push(i);
    }
    let mut out = Vec::with_capacity(members.len());
    for group in members.values() {
        if group.len() == 1 {
            out.push(cells[group[0]].clone());
            continue;
        }
        let rays: Vec<IntVec> = group.iter().flat_map(|&i| cells[i].rays().to_vec()).collect();
        let hull = Cone::from_generators(n, rays, lineality.clone())?;
        if hull.dim() != cells[group[0]].dim() {
            return Err(Error::Internal("merged GIT class changed dimension".into()));
        }
        // a connected union of cells is convex iff none of its boundary
        // facets meets the relative interior of its hull
        for (rays, owners) in &facet_cells {
            let inside = owners.iter().filter(|o| group.contains(o)).count();
            if inside != 1 {
                continue;
            }
            let refs: Vec<&IntVec> = rays.iter().collect();
            let p = sum(&refs, &lineality, n);
            if hull.hrep().inequalities.iter().all(|a| dot(a, &p).is_negative()) {
                return Err(Error::Internal("merged GIT class is not convex".into()));
            }
        }
        out.push(hull);
    }
    Ok(out)
}

fn build_fan(n: usize, maximal_cones: Vec<Cone>) -> Result<Fan> {
    let lineality = maximal_cones.first().map(|c| c.lineality().to_vec()).unwrap_or_default();
    if maximal_cones.iter().any(|c| c.lineality() != lineality.as_slice()) {
        return Err(Error::Internal("maximal cones with different lineality".into()));
    }
    let rays: Vec<IntVec> = maximal_cones
        .iter()
        .flat_map(|c| c.rays().iter().cloned())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let ray_index: HashMap<&IntVec, usize> = rays.iter().enumerate().map(|(i, r)| (r, i)).collect();

    let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut maximal_raw = Vec::with_capacity(maximal_cones.len());
    for c in &maximal_cones {
        let own: Vec<usize> = {
            let mut v: Vec<usize> = c.rays().iter().map(|r| ray_index[r]).collect();
            v.sort_unstable();
            v
        };
        let facets: Vec<(IntVec, Vec<usize>)> = c
            .hrep()
            .inequalities
            .iter()
            .map(|a| {
                let tight = own.iter().copied().filter(|&i| dot(a, &rays[i]).is_zero()).collect();
                (a.clone(), tight)
            })
            .collect();
        let mut stack = vec![own.clone()];
        let mut seen = BTreeSet::from([own.clone()]);
        while let Some(face) = stack.pop() {
            for (_, tight) in &facets {
                let g = intersect_sorted(&face, tight);
                if g.len() < face.len() && seen.insert(g.clone()) {
                    stack.push(g);
                }
            }
        }
        faces.extend(seen);
        maximal_raw.push((own, facets));
    }

    let mut cones: Vec<FanCone> = faces
        .into_iter()
        .map(|ray_indices| {
            let gens: Vec<IntVec> = ray_indices.iter().map(|&i| rays[i].clone()).collect();
            let dim = lineality.len() + rank(&gens);
            let cone = Cone::from_minimal_generators(n, gens, lineality.clone());
            FanCone { dim, ray_indices, cone }
        })
        .collect();
    cones.sort_by(|a, b| (a.dim, &a.ray_indices).cmp(&(b.dim, &b.ray_indices)));
    let index: HashMap<Vec<usize>, usize> =
        cones.iter().enumerate().map(|(i, c)| (c.ray_indices.clone(), i)).collect();
    let mut maximal: Vec<Maximal> = maximal_raw
        .into_iter()
        .map(|(own, facets)| Maximal { cone_index: index[&own], facets })
        .collect();
    maximal.sort_by_key(|m| m.cone_index);
    debug_assert!(cones.iter().all(|c| !c.ray_indices.iter().any(|&i| is_zero(&rays[i]))));
    Ok(Fan { ambient_dim: n, rays, lineality, cones, maximal, index })
}
