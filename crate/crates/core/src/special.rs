//! Special subdimension vectors: dimension vectors of subrepresentations of
//! stable representations that are not generic.

use num_traits::Signed;

use crate::error::Result;
use crate::polyhedral::linalg::dot;
use crate::polyhedral::Cone;
use crate::quiver::{subdim_vectors, DimVector};
use crate::schofield::Session;

impl Session {
    /// Defining vectors of `C_e`: every nonzero `e' -> e` and `f' + e` for
    /// every proper `f' -> d - e`. With `stable`, also every proper nonzero
    /// `g -> d`, which must be strictly negative wherever a stable
    /// representation of dimension `d` exists.
    fn c_e_constraints(&self, d: &DimVector, e: &DimVector, stable: bool) -> Vec<DimVector> {
        let rest = d.minus(e);
        let mut out: Vec<DimVector> = self
            .generic_set(e)
            .vectors
            .iter()
            .filter(|f| !f.is_zero())
            .cloned()
            .collect();
        out.extend(
            self.generic_set(&rest)
                .vectors
                .iter()
                .filter(|f| **f != rest)
                .map(|f| f.plus(e)),
        );
        if stable {
            out.extend(
                self.generic_set(d)
                    .vectors
                    .iter()
                    .filter(|g| g.is_proper_nonzero_sub_of(d))
                    .cloned(),
            );
        }
        out.sort();
        out.dedup();
        out
    }

    /// `C_e = {theta in C(d) : theta . v <= 0}` over the defining vectors `v`.
    pub fn cone_c_e(&self, d: &DimVector, e: &DimVector) -> Result<Cone> {
        self.check_nonzero(d)?;
        self.check(e)?;
        if !e.is_proper_nonzero_sub_of(d) {
            return Err(crate::Error::NotProperSubdimension { e: e.to_vec(), d: d.to_vec() });
        }
        Ok(self.constrained(d, &self.c_e_constraints(d, e, false)))
    }

    fn constrained(&self, d: &DimVector, vectors: &[DimVector]) -> Cone {
        let inequalities = vectors.iter().map(DimVector::to_bigint).collect();
        Cone::from_inequalities(d.len(), vec![d.to_bigint()], inequalities)
            .expect("lengths are checked by the session")
    }

    /// Special subdimension vectors of `d` in graded lexicographic order;
    /// empty unless `d` is a Schur root.
    ///
    /// `e` is special when it is not generic and `C_e ∩ Sigma(d)` lies in
    /// none of its defining hyperplanes, so that every defining vector can be
    /// made strictly negative at once. Intersecting with `Sigma(d)` rules out
    /// extensions that always split off a summand: for the acyclic quiver
    /// `1 -> 2 -> 3 -> 4`, `1 -> 3`, `1 -> 4` with `d = (1,1,1,1)`, the cone
    /// `C_(1,0,1,0)` alone is full-dimensional although every representation
    /// with a subrepresentation of dimension `(1,0,1,0)` has the simple at
    /// vertex 4 as a direct summand.
    pub fn special_subdims(&self, d: &DimVector) -> Result<Vec<DimVector>> {
        if !self.is_schur_root(d)? {
            return Ok(Vec::new());
        }
        let generic = self.generic_set(d);
        let mut out = Vec::new();
        for e in subdim_vectors(d, true, true) {
            if generic.contains(&e) {
                continue;
            }
            let vectors = self.c_e_constraints(d, &e, true);
            let cone = self.constrained(d, &vectors);
            // lineality pairs to zero with every defining vector
            let rays = cone.rays();
            let special = vectors.iter().all(|v| {
                let v = v.to_bigint();
                rays.iter().any(|r| dot(r, &v).is_negative())
            });
            if special {
                out.push(e);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;

    fn dv(x: &[i64]) -> DimVector {
        DimVector::new(x.to_vec()).unwrap()
    }

    fn ex1() -> Session {
        Session::new(Quiver::new(3, &[(0, 1, 1), (1, 0, 1), (1, 2, 1), (2, 1, 1)]).unwrap())
    }

    fn cycle() -> Session {
        Session::new(
            Quiver::new(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 2, 1), (0, 3, 1)]).unwrap(),
        )
    }

    fn sorted(mut v: Vec<DimVector>) -> Vec<DimVector> {
        v.sort_by(DimVector::grlex_cmp);
        v
    }

    #[test]
    fn cycle_special_vectors() {
        let got = cycle().special_subdims(&dv(&[1, 1, 1, 1])).unwrap();
        let expected = sorted(
            [
                [0, 1, 0, 0],
                [0, 0, 1, 0],
                [0, 1, 1, 0],
                [1, 0, 0, 1],
                [0, 1, 0, 1],
                [1, 1, 0, 1],
                [1, 0, 1, 1],
            ]
            .iter()
            .map(|v| dv(v))
            .collect(),
        );
        assert_eq!(got, expected);
        assert!(got.contains(&dv(&[0, 1, 0, 1])));
        assert!(!got.contains(&dv(&[1, 0, 1, 0])));
    }

    #[test]
    fn ex1_every_vector_is_special() {
        let d = dv(&[1, 1, 1]);
        assert_eq!(ex1().special_subdims(&d).unwrap(), subdim_vectors(&d, true, true));
    }

    #[test]
    fn non_schur_has_none() {
        let s = Session::new(Quiver::arrowless(2).unwrap());
        assert!(s.special_subdims(&dv(&[1, 1])).unwrap().is_empty());
    }

    #[test]
    fn c_e_examples() {
        let s = cycle();
        let d = dv(&[1, 1, 1, 1]);
        let c = s.cone_c_e(&d, &dv(&[0, 1, 0, 1])).unwrap();
        assert!(c.dim() <= 3);
        assert!(c.is_subcone(&s.stability_space(&d).unwrap()).unwrap());
        let s = ex1();
        let d = dv(&[1, 1, 1]);
        let e = dv(&[1, 1, 0]);
        assert!(s.c_e_constraints(&d, &e, false).contains(&e));
        assert!(s.cone_c_e(&d, &d).is_err());
    }

    #[test]
    fn special_and_generic_are_disjoint() {
        let s = cycle();
        let d = dv(&[1, 1, 1, 1]);
        let g = s.generic_subdims(&d).unwrap();
        assert!(s.special_subdims(&d).unwrap().iter().all(|e| !g.contains(e)));
    }

    fn wall_hyperplanes_have_special_normals(s: &Session, d: &DimVector) {
        let special = s.special_subdims(d).unwrap();
        for (_, w) in s.interior_walls(d).unwrap() {
            assert!(special
                .iter()
                .any(|e| w.is_subcone(&s.hyperplane(d, e).unwrap()).unwrap()));
        }
    }

    #[test]
    fn wall_system_is_orthogonal_to_special_vectors() {
        wall_hyperplanes_have_special_normals(&cycle(), &dv(&[1, 1, 1, 1]));
        wall_hyperplanes_have_special_normals(&ex1(), &dv(&[1, 1, 1]));
    }

    #[test]
    fn special_normal_need_not_be_a_wall_hyperplane() {
        let s = cycle();
        let d = dv(&[1, 1, 1, 1]);
        let h = s.hyperplane(&d, &dv(&[0, 1, 0, 1])).unwrap();
        let walls = s.all_walls(&d).unwrap();
        assert!(walls.of_dim(2).all(|(_, w)| !w.is_subcone(&h).unwrap()));
        let s = ex1();
        let d = dv(&[1, 1, 1]);
        let h = s.hyperplane(&d, &dv(&[1, 0, 1])).unwrap();
        assert!(s.all_walls(&d).unwrap().of_dim(1).all(|(_, w)| !w.is_subcone(&h).unwrap()));
    }
}
