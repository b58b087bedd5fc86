#![allow(dead_code)]

pub mod props;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use quiver_walls::polyhedral::linalg::{from_i64, IntVec};
use quiver_walls::{project_along, Cone, DimVector, Quiver, Session};

pub fn dv(x: &[i64]) -> DimVector {
    DimVector::new(x.to_vec()).unwrap()
}

pub fn iv(x: &[i64]) -> IntVec {
    from_i64(x)
}

/// Builds a session from 1-based `(source, target, multiplicity)` triples.
pub fn session(n: usize, arrows: &[(usize, usize, u64)]) -> Session {
    let zero_based: Vec<_> = arrows.iter().map(|&(s, t, m)| (s - 1, t - 1, m)).collect();
    Session::new(Quiver::new(n, &zero_based).unwrap())
}

pub fn ex1() -> Session {
    session(3, &[(1, 2, 1), (2, 1, 1), (2, 3, 1), (3, 2, 1)])
}

pub fn cycle() -> Session {
    session(4, &[(1, 2, 1), (2, 3, 1), (3, 4, 1), (1, 3, 1), (1, 4, 1)])
}

pub fn flag() -> Session {
    session(3, &[(1, 2, 3), (2, 3, 1)])
}

pub fn non_flag() -> Session {
    session(3, &[(1, 2, 2), (1, 3, 3)])
}

pub fn segre() -> Session {
    let arrows: Vec<_> = (1..=6).map(|i| (i, 7, 1)).collect();
    session(7, &arrows)
}

/// The mutation sequence: arrows `1 -> 2`, `2 -> 3`, `3 -> 1` with the given
/// multiplicities, and the dimension vector.
pub fn mutation(step: usize) -> (Session, DimVector) {
    let (m12, m23, m31, d) = [
        (3, 3, 3, [1, 1, 1]),
        (3, 3, 6, [1, 2, 1]),
        (6, 3, 15, [1, 5, 2]),
        (15, 3, 39, [1, 13, 5]),
    ][step];
    (session(3, &[(1, 2, m12), (2, 3, m23), (3, 1, m31)]), dv(&d))
}

pub fn ray_cone(rays: &[&[i64]]) -> Cone {
    Cone::from_generators(rays[0].len(), rays.iter().map(|r| iv(r)).collect(), vec![]).unwrap()
}

/// Rays of the nonzero walls that have codimension one in `C(d)`, after
/// dropping coordinate `vertex`.
pub fn projected_wall_rays(s: &Session, d: &DimVector, vertex: usize) -> BTreeSet<IntVec> {
    let top = d.len() - 1;
    s.all_walls(d)
        .unwrap()
        .of_dim(top - 1)
        .flat_map(|(_, w)| {
            let v = w.vrep();
            v.rays
                .iter()
                .cloned()
                .chain(v.lineality.iter().flat_map(|l| [l.clone(), l.iter().map(|x| -x).collect()]))
                .collect::<Vec<IntVec>>()
        })
        .map(|r: Vec<BigInt>| project_along(&r, vertex))
        .collect()
}

pub fn ray_set(rays: &[&[i64]]) -> BTreeSet<IntVec> {
    rays.iter().map(|r| iv(r)).collect()
}
