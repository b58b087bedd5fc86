//! Semistable cones `Sigma(d)`, hyperplanes `H_e`, walls `W_e` and the
//! strictly semistable locus.
//!
//! All cones live in the full ambient space `R^n`. Coordinates at vertices
//! where `e` vanishes are constrained only by what the generic subdimension
//! vectors of `e` impose, so `Sigma(e)` is typically not pointed.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::polyhedral::linalg::{primitive, IntVec};
use crate::polyhedral::Cone;
use crate::quiver::{BoxIter, DimVector, StabParam};
use crate::schofield::Session;

/// Walls of one dimension vector keyed by the lexicographically smaller of
/// `e` and `d - e`.
#[derive(Debug, Clone)]
pub struct WallTable {
    d: DimVector,
    ambient_dim: usize,
    entries: BTreeMap<DimVector, Cone>,
}

impl WallTable {
    pub fn dimension_vector(&self) -> &DimVector {
        &self.d
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Representative key of `e`: the lex-smaller of `e` and `d - e`.
    pub fn key(&self, e: &DimVector) -> DimVector {
        let other = self.d.minus(e);
        if other < *e {
            other
        } else {
            e.clone()
        }
    }

    /// The wall of `e` or of `d - e`.
    pub fn get(&self, e: &DimVector) -> Option<&Cone> {
        if !e.is_proper_nonzero_sub_of(&self.d) {
            return None;
        }
        self.entries.get(&self.key(e))
    }

    /// Entries in lexicographic key order.
    pub fn iter(&self) -> impl Iterator<Item = (&DimVector, &Cone)> {
        self.entries.iter()
    }

    /// Entries whose wall has dimension exactly `dim`.
    pub fn of_dim(&self, dim: usize) -> impl Iterator<Item = (&DimVector, &Cone)> {
        self.entries.iter().filter(move |(_, c)| c.dim() == dim)
    }
}

/// Drops coordinate `vertex` and makes the result primitive.
///
/// On `C(d)` with `d_vertex > 0` this is a linear isomorphism onto `R^{n-1}`,
/// so rays map to rays.
pub fn project_along(v: &[BigInt], vertex: usize) -> IntVec {
    let rest = v
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != vertex)
        .map(|(_, x)| x.clone())
        .collect();
    primitive(rest)
}

impl Session {
    fn check_proper(&self, d: &DimVector, e: &DimVector) -> Result<()> {
        self.check_nonzero(d)?;
        self.check(e)?;
        if !e.is_proper_nonzero_sub_of(d) {
            return Err(Error::NotProperSubdimension { e: e.to_vec(), d: d.to_vec() });
        }
        Ok(())
    }

    /// `C(d) = {theta : theta . d = 0}`.
    pub fn stability_space(&self, d: &DimVector) -> Result<Cone> {
        self.check_nonzero(d)?;
        Cone::subspace(d.len(), vec![d.to_bigint()])
    }

    /// `Sigma(d)`, cut out of `C(d)` by `theta . e <= 0` for every generic
    /// subdimension vector `e` of `d`.
    pub fn sst_cone(&self, d: &DimVector) -> Result<Cone> {
        self.check_nonzero(d)?;
        Ok(self.semistable(d).as_ref().clone())
    }

    pub(crate) fn semistable(&self, d: &DimVector) -> Arc<Cone> {
        if let Some(c) = self.semistable.read().unwrap().get(d) {
            return c.clone();
        }
        let inequalities = self
            .generic_set(d)
            .vectors
            .iter()
            .filter(|e| !e.is_zero() && *e != d)
            .map(DimVector::to_bigint)
            .collect();
        let cone = Cone::from_inequalities(d.len(), vec![d.to_bigint()], inequalities)
            .expect("lengths are checked by the session");
        cone.vrep();
        let cone = Arc::new(cone);
        self.semistable.write().unwrap().entry(d.clone()).or_insert(cone).clone()
    }

    /// `H_e = {theta : theta . d = 0, theta . e = 0}`.
    pub fn hyperplane(&self, d: &DimVector, e: &DimVector) -> Result<Cone> {
        self.check_nonzero(d)?;
        self.check_nonzero(e)?;
        Cone::subspace(d.len(), vec![d.to_bigint(), e.to_bigint()])
    }

    /// `W_e = Sigma(e) ∩ Sigma(d - e)`.
    pub fn wall(&self, d: &DimVector, e: &DimVector) -> Result<Cone> {
        self.check_proper(d, e)?;
        Ok(self.wall_unchecked(d, e))
    }

    fn wall_unchecked(&self, d: &DimVector, e: &DimVector) -> Cone {
        self.semistable(e)
            .intersect(&self.semistable(&d.minus(e)))
            .expect("both cones live in R^n")
    }

    /// Every wall of `d`, one per unordered pair `{e, d - e}`.
    pub fn all_walls(&self, d: &DimVector) -> Result<WallTable> {
        self.all_walls_with_progress(d, |_, _| {})
    }

    /// As [`Session::all_walls`], reporting `(done, total)` after each
    /// subdimension vector of the box `0 <= e <= d`.
    pub fn all_walls_with_progress(
        &self,
        d: &DimVector,
        mut progress: impl FnMut(usize, usize),
    ) -> Result<WallTable> {
        self.check_nonzero(d)?;
        let total: usize = d.iter().map(|&x| x as usize + 1).product();
        let mut entries = BTreeMap::new();
        for (done, e) in BoxIter::new(d).enumerate() {
            if e.is_proper_nonzero_sub_of(d) && e <= d.minus(&e) {
                let w = self.wall_unchecked(d, &e);
                entries.insert(e, w);
            }
            progress(done + 1, total);
        }
        Ok(WallTable { d: d.clone(), ambient_dim: d.len(), entries })
    }

    /// Codimension-one walls that meet the relative interior of `Sigma(d)`,
    /// i.e. those that separate chambers rather than bound the support.
    pub fn interior_walls(&self, d: &DimVector) -> Result<Vec<(DimVector, Cone)>> {
        let table = self.all_walls(d)?;
        let sigma = self.semistable(d);
        let Some(target) = sigma.dim().checked_sub(1) else {
            return Ok(Vec::new());
        };
        let mut out = Vec::new();
        for (e, w) in table.of_dim(target) {
            if sigma.contains_in_relative_interior(&w.relative_interior_point())? {
                out.push((e.clone(), w.clone()));
            }
        }
        Ok(out)
    }

    /// The walls `W_{ke}`, `k >= 1`, `ke` proper, that have codimension one
    /// in `Sigma(d)`.
    pub fn wall_bar(&self, d: &DimVector, e: &DimVector) -> Result<Vec<Cone>> {
        self.check_nonzero(d)?;
        self.check_nonzero(e)?;
        if !e.is_indivisible() {
            return Err(Error::Divisible(e.to_vec()));
        }
        let target = self.semistable(d).dim();
        let mut out = Vec::new();
        for k in 1.. {
            let ke = e.scaled(k);
            if !ke.is_sub_of(d) {
                break;
            }
            if ke == *d {
                continue;
            }
            let w = self.wall_unchecked(d, &ke);
            if w.dim() + 1 == target {
                out.push(w);
            }
        }
        Ok(out)
    }

    /// Whether some representation of dimension `d` is strictly
    /// `theta`-semistable, i.e. `theta` lies on a wall.
    pub fn has_strictly_semistables(&self, d: &DimVector, theta: &StabParam) -> Result<bool> {
        self.check_nonzero(d)?;
        if theta.len() != d.len() {
            return Err(Error::WrongStabilityDimension { expected: d.len(), found: theta.len() });
        }
        if !num_traits::Zero::is_zero(&theta.pair(d)?) {
            return Err(Error::NotInStabilitySpace);
        }
        let p = theta.to_integer_direction();
        let walls = self.all_walls(d)?;
        let hit = walls.iter().any(|(_, w)| w.contains_int(&p));
        Ok(hit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedral::linalg::from_i64;
    use crate::quiver::Quiver;

    fn dv(x: &[i64]) -> DimVector {
        DimVector::new(x.to_vec()).unwrap()
    }

    fn line(v: &[i64]) -> Cone {
        Cone::from_generators(v.len(), vec![], vec![from_i64(v)]).unwrap()
    }

    fn ray_cone(rays: &[&[i64]]) -> Cone {
        Cone::from_generators(rays[0].len(), rays.iter().map(|r| from_i64(r)).collect(), vec![])
            .unwrap()
    }

    fn ex1() -> Session {
        Session::new(Quiver::new(3, &[(0, 1, 1), (1, 0, 1), (1, 2, 1), (2, 1, 1)]).unwrap())
    }

    fn cycle() -> Session {
        Session::new(
            Quiver::new(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 2, 1), (0, 3, 1)]).unwrap(),
        )
    }

    #[test]
    fn stability_space_examples() {
        let s = Session::new(Quiver::new(2, &[(0, 1, 3)]).unwrap());
        assert_eq!(s.stability_space(&dv(&[1, 1])).unwrap(), line(&[1, -1]));
        let c = ex1().stability_space(&dv(&[1, 1, 1])).unwrap();
        assert_eq!(c.dim(), 2);
        let basis = Cone::from_generators(3, vec![], vec![from_i64(&[1, -1, 0]), from_i64(&[0, -1, 1])])
            .unwrap();
        assert_eq!(c, basis);
        assert_eq!(s.stability_space(&dv(&[0, 0])).unwrap_err(), Error::ZeroDimensionVector);
    }

    #[test]
    fn sst_cone_examples() {
        let s = ex1();
        let d = dv(&[1, 1, 1]);
        assert_eq!(s.sst_cone(&d).unwrap(), s.stability_space(&d).unwrap());
        let k = Session::new(Quiver::new(2, &[(0, 1, 3)]).unwrap());
        assert_eq!(k.sst_cone(&dv(&[1, 1])).unwrap(), ray_cone(&[&[1, -1]]));
    }

    #[test]
    fn hyperplane_examples() {
        let s = ex1();
        let d = dv(&[1, 1, 1]);
        assert_eq!(s.hyperplane(&d, &dv(&[1, 1, 0])).unwrap(), line(&[1, -1, 0]));
        assert_eq!(s.hyperplane(&d, &dv(&[1, 0, 1])).unwrap(), line(&[1, 0, -1]));
        let k = Session::new(Quiver::new(2, &[(0, 1, 3)]).unwrap());
        let d = dv(&[2, 2]);
        assert_eq!(k.hyperplane(&d, &dv(&[1, 1])).unwrap(), k.stability_space(&d).unwrap());
    }

    #[test]
    fn wall_examples() {
        let s = ex1();
        let d = dv(&[1, 1, 1]);
        assert!(s.wall(&d, &dv(&[1, 0, 1])).unwrap().is_zero());
        assert_eq!(s.wall(&d, &dv(&[1, 1, 0])).unwrap(), line(&[1, -1, 0]));
        assert_eq!(s.wall(&d, &dv(&[0, 1, 1])).unwrap(), line(&[0, 1, -1]));
        let a = Session::new(Quiver::arrowless(2).unwrap());
        assert!(a.wall(&dv(&[1, 1]), &dv(&[1, 0])).unwrap().is_zero());
        assert!(matches!(s.wall(&d, &d), Err(Error::NotProperSubdimension { .. })));
        assert!(matches!(s.wall(&d, &dv(&[0, 0, 0])), Err(Error::NotProperSubdimension { .. })));
    }

    #[test]
    fn all_walls_examples() {
        let s = ex1();
        let t = s.all_walls(&dv(&[1, 1, 1])).unwrap();
        let dims: Vec<(Vec<i64>, usize)> = t.iter().map(|(e, c)| (e.to_vec(), c.dim())).collect();
        assert_eq!(
            dims,
            vec![(vec![0, 0, 1], 1), (vec![0, 1, 0], 0), (vec![0, 1, 1], 1)]
        );
        // keys are representatives: (1,1,0) is stored under (0,0,1)
        assert_eq!(t.get(&dv(&[1, 1, 0])).unwrap().dim(), 1);
        assert_eq!(t.get(&dv(&[1, 0, 1])).unwrap().dim(), 0);
    }

    #[test]
    fn cycle_walls() {
        let s = cycle();
        let d = dv(&[1, 1, 1, 1]);
        let (r1, r2, r3, r4, r5): (&[i64], &[i64], &[i64], &[i64], &[i64]) = (
            &[1, -1, 0, 0],
            &[1, 0, 0, -1],
            &[0, 0, 1, -1],
            &[1, 0, -1, 0],
            &[0, 1, -1, 0],
        );
        assert_eq!(s.sst_cone(&d).unwrap(), ray_cone(&[r1, r3, r5]));
        let t = s.all_walls(&d).unwrap();
        let sigma = s.sst_cone(&d).unwrap();
        let boundary = sigma.facets();
        let interior: Vec<(Vec<i64>, Cone)> = t
            .of_dim(2)
            .filter(|(_, w)| !boundary.iter().any(|f| w.is_subcone(f).unwrap()))
            .map(|(e, w)| (e.to_vec(), w.clone()))
            .collect();
        // W_(0,1,0) = cone(r3, r4) passes through r2 = r3 + r4
        assert_eq!(
            interior,
            vec![
                (vec![0, 0, 1, 0], ray_cone(&[r1, r2])),
                (vec![0, 1, 0, 0], ray_cone(&[r3, r4])),
                (vec![0, 1, 1, 0], ray_cone(&[r2, r5])),
            ]
        );
        // the remaining 2-dimensional walls are exactly the facets of Sigma
        let mut outer: Vec<_> = t
            .of_dim(2)
            .filter(|(e, _)| !interior.iter().any(|(k, _)| k.as_slice() == e.coords()))
            .map(|(_, w)| w.canonical_form())
            .collect();
        outer.sort();
        let mut facets: Vec<_> = boundary.iter().map(Cone::canonical_form).collect();
        facets.sort();
        assert_eq!(outer, facets);
    }

    #[test]
    fn wall_bar_examples() {
        let s = ex1();
        let d = dv(&[1, 1, 1]);
        assert_eq!(s.wall_bar(&d, &dv(&[1, 1, 0])).unwrap(), vec![line(&[1, -1, 0])]);
        assert!(s.wall_bar(&d, &dv(&[1, 0, 1])).unwrap().is_empty());
        let f = Session::new(Quiver::new(3, &[(0, 1, 3), (1, 2, 1)]).unwrap());
        assert!(f.wall_bar(&dv(&[2, 4, 2]), &dv(&[1, 2, 1])).unwrap().is_empty());
        assert_eq!(
            f.wall_bar(&dv(&[2, 4, 2]), &dv(&[2, 2, 2])).unwrap_err(),
            Error::Divisible(vec![2, 2, 2])
        );
    }

    #[test]
    fn strictly_semistable_examples() {
        let s = ex1();
        let d = dv(&[1, 1, 1]);
        let yes = |t: &[i64]| s.has_strictly_semistables(&d, &StabParam::from_integers(t)).unwrap();
        assert!(yes(&[1, -1, 0]));
        assert!(!yes(&[1, 0, -1]));
        assert!(!yes(&[2, -1, -1]));
        assert_eq!(
            s.has_strictly_semistables(&d, &StabParam::from_integers(&[1, 0, 0])),
            Err(Error::NotInStabilitySpace)
        );
    }

    #[test]
    fn projection_drops_a_coordinate() {
        assert_eq!(project_along(&from_i64(&[5, -2, -4]), 0), from_i64(&[-1, -2]));
        assert_eq!(project_along(&from_i64(&[0, 0, 3]), 2), from_i64(&[0, 0]));
    }
}
