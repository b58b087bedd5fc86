//! Cross-module properties checked on random small instances. Each check
//! returns a description of the first counterexample.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;
use quiver_walls::polyhedral::linalg::IntVec;
use quiver_walls::{Cone, DimVector, Quiver, Session, StabParam};
use rand::Rng;

pub type Check = Result<(), String>;

/// Random instance: at most 4 vertices, multiplicities at most 3 (loops
/// allowed), dimension vector entries at most 3 and not all zero.
pub fn random_instance(rng: &mut impl Rng) -> (Quiver, DimVector) {
    let n = rng.gen_range(1..=4);
    let density = rng.gen_range(0.2..0.7);
    let matrix = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| if rng.gen_bool(density) { rng.gen_range(1..=3) } else { 0 })
                .collect()
        })
        .collect();
    let mut d: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
    if d.iter().all(|&x| x == 0) {
        d[rng.gen_range(0..n)] = 1;
    }
    (Quiver::from_matrix(matrix).unwrap(), DimVector::new(d).unwrap())
}

fn box_vectors(d: &DimVector) -> Vec<DimVector> {
    quiver_walls::subdim_vectors(d, false, false)
}

/// Generic subdimension vectors by the quotient form of the recursion:
/// `e -> d` iff `<e, q> >= 0` for every generic quotient `q` of `d - e`,
/// where `q` is a generic quotient of `x` iff `x - q -> x`.
pub struct QuotientOracle<'a> {
    quiver: &'a Quiver,
    memo: HashMap<DimVector, Vec<DimVector>>,
}

impl<'a> QuotientOracle<'a> {
    pub fn new(quiver: &'a Quiver) -> Self {
        QuotientOracle { quiver, memo: HashMap::new() }
    }

    pub fn generic(&mut self, d: &DimVector) -> Vec<DimVector> {
        if let Some(g) = self.memo.get(d) {
            return g.clone();
        }
        let mut out = Vec::new();
        for e in box_vectors(d) {
            if self.ext(&e, &d.minus(&e)) == 0 {
                out.push(e);
            }
        }
        self.memo.insert(d.clone(), out.clone());
        out
    }

    /// `ext(a, b) = max over generic quotients q of b of -<a, q>`.
    pub fn ext(&mut self, a: &DimVector, b: &DimVector) -> i64 {
        if a.is_zero() || b.is_zero() {
            return 0;
        }
        let subs = self.generic(b);
        subs.iter()
            .map(|s| -self.quiver.euler_form(a, &b.minus(s)).unwrap())
            .max()
            .unwrap()
    }
}

pub fn saturation(s: &Session, d: &DimVector) -> Check {
    let sigma = s.sst_cone(d).unwrap();
    for k in [2, 3] {
        if s.sst_cone(&d.scaled(k)).unwrap() != sigma {
            return Err(format!("Sigma({d}) != Sigma({})", d.scaled(k)));
        }
    }
    Ok(())
}

pub fn wall_symmetry(s: &Session, d: &DimVector) -> Check {
    for e in quiver_walls::subdim_vectors(d, true, true) {
        if s.wall(d, &e).unwrap() != s.wall(d, &d.minus(&e)).unwrap() {
            return Err(format!("W_{e} != W_{}", d.minus(&e)));
        }
    }
    Ok(())
}

pub fn wall_is_hyperplane_section(s: &Session, d: &DimVector) -> Check {
    let sigma = s.sst_cone(d).unwrap();
    for e in s.generic_subdims(d).unwrap() {
        if !e.is_proper_nonzero_sub_of(d) {
            continue;
        }
        let w = s.wall(d, &e).unwrap();
        let h = s.hyperplane(d, &e).unwrap();
        if w != h.intersect(&sigma).unwrap() {
            return Err(format!("W_{e} != H_{e} ∩ Sigma({d})"));
        }
        if !w.is_subcone(&h).unwrap() {
            return Err(format!("W_{e} not in H_{e}"));
        }
    }
    Ok(())
}

pub fn generic_iff_ext_vanishes(s: &Session, d: &DimVector) -> Check {
    let mut oracle = QuotientOracle::new(s.quiver());
    for e in box_vectors(d) {
        let rest = d.minus(&e);
        let lib = s.is_generic_subdim(&e, d).unwrap();
        let ext_lib = s.ext_generic(&e, &rest).unwrap();
        let ext_oracle = oracle.ext(&e, &rest);
        if lib != (ext_oracle == 0) || ext_lib != ext_oracle {
            return Err(format!(
                "e = {e}, d = {d}: generic {lib}, ext {ext_lib}, quotient-side ext {ext_oracle}"
            ));
        }
    }
    Ok(())
}

pub fn ext_linearity(s: &Session, d: &DimVector, e: &DimVector) -> Check {
    let base = s.ext_generic(d, e).unwrap();
    for k in [2, 3] {
        let a = s.ext_generic(d, &e.scaled(k)).unwrap();
        let b = s.ext_generic(&d.scaled(k), e).unwrap();
        if a != k * base || b != k * base {
            return Err(format!("ext({d},{e}) = {base}, k = {k}: {a}, {b}"));
        }
    }
    Ok(())
}

pub fn phase_iff_schur(s: &Session, d: &DimVector) -> Check {
    let phase = s.has_geometric_phase(d).unwrap();
    let schur = s.is_schur_root(d).unwrap() && d.is_indivisible();
    if phase != schur {
        return Err(format!("d = {d}: phase {phase}, Schur and indivisible {schur}"));
    }
    Ok(())
}

fn interior_int(c: &Cone) -> IntVec {
    let mut p = vec![BigInt::zero(); c.ambient_dim()];
    for g in c.rays().iter().chain(c.lineality()) {
        for (x, y) in p.iter_mut().zip(g) {
            *x += y;
        }
    }
    p
}

fn stab(v: &[BigInt]) -> StabParam {
    StabParam(v.iter().cloned().map(num_rational::BigRational::from_integer).collect())
}

pub fn fan_axioms(s: &Session, d: &DimVector) -> Check {
    let fan = s.git_fan(d).unwrap();
    let sigma = s.sst_cone(d).unwrap();
    let maximal: Vec<&Cone> = fan.maximal_cones().map(|c| &c.cone).collect();
    for (i, a) in maximal.iter().enumerate() {
        if !a.is_subcone(&sigma).unwrap() {
            return Err(format!("maximal cone {i} not in Sigma"));
        }
        if a.dim() != sigma.dim() {
            return Err(format!("maximal cone {i} has dim {} != {}", a.dim(), sigma.dim()));
        }
        for b in &maximal[i + 1..] {
            let ab = a.intersect(b).unwrap();
            if !ab.is_face_of(a).unwrap() || !ab.is_face_of(b).unwrap() {
                return Err("intersection of maximal cones is not a common face".into());
            }
        }
    }
    let negated: Vec<IntVec> = sigma.lineality().iter().map(|l| l.iter().map(|x| -x).collect()).collect();
    let generators = sigma.rays().iter().chain(sigma.lineality()).chain(&negated);
    for g in generators {
        if !maximal.iter().any(|m| m.contains(&stab(g).0).unwrap()) {
            return Err("generator of Sigma outside the fan".into());
        }
    }
    // facets of maximal cones are covered by codimension-one walls and
    // every codimension-one wall is a union of such facets
    if sigma.dim() > 0 {
        let walls = s.all_walls(d).unwrap();
        let codim_one: Vec<&Cone> = walls.of_dim(sigma.dim() - 1).map(|(_, w)| w).collect();
        for c in fan.cones().iter().filter(|c| c.dim + 1 == sigma.dim()) {
            let p = interior_int(&c.cone);
            let on_wall = codim_one.iter().any(|w| w.contains(&stab(&p).0).unwrap());
            let on_boundary = !sigma.contains_in_relative_interior(&stab(&p).0).unwrap();
            if !on_wall && !on_boundary {
                return Err("facet of the fan on no wall".into());
            }
            if !on_wall && on_boundary {
                return Err("external facet of Sigma on no wall".into());
            }
        }
        for w in &codim_one {
            let p = stab(&interior_int(w));
            let idx = fan.locate(&p).map_err(|e| e.to_string())?;
            if fan.cones()[idx].dim >= sigma.dim() {
                return Err("codimension-one wall meets a maximal cone interior".into());
            }
        }
    }
    Ok(())
}

pub fn equivalence_matches_fan(s: &Session, d: &DimVector, rng: &mut impl Rng) -> Check {
    let fan = s.git_fan(d).unwrap();
    let cones = fan.cones();
    let mut points: Vec<(usize, IntVec)> = Vec::new();
    for _ in 0..6 {
        let i = rng.gen_range(0..cones.len());
        let c = &cones[i].cone;
        let p = interior_int(c);
        points.push((i, p.clone()));
        // another relative interior point of the same cone
        let mut q: IntVec = p.iter().map(|x| x * 2).collect();
        if let Some(r) = c.rays().first() {
            for (x, y) in q.iter_mut().zip(r) {
                *x += y;
            }
        }
        points.push((i, q));
    }
    for (i, p) in &points {
        let located = fan.locate(&stab(p)).map_err(|e| e.to_string())?;
        if located != *i {
            return Err(format!("relative interior point of cone {i} located in cone {located}"));
        }
    }
    for (i, p) in &points {
        for (j, q) in &points {
            let eq = s.git_equivalent(d, &stab(p), &stab(q)).unwrap();
            if eq != (i == j) {
                return Err(format!("cones {i}, {j}: git_equivalent = {eq}"));
            }
        }
    }
    Ok(())
}

/// All property checks on one instance, labelled as in the acceptance list.
pub fn all_checks(q: Quiver, d: &DimVector, rng: &mut impl Rng) -> Vec<(char, Check)> {
    let s = Session::new(q);
    let e = DimVector::new((0..d.len()).map(|_| rng.gen_range(0..=3)).collect()).unwrap();
    vec![
        ('a', saturation(&s, d)),
        ('b', wall_symmetry(&s, d)),
        ('c', wall_is_hyperplane_section(&s, d)),
        ('d', generic_iff_ext_vanishes(&s, d)),
        ('e', ext_linearity(&s, d, &e)),
        ('f', phase_iff_schur(&s, d)),
        ('g', fan_axioms(&s, d)),
        ('h', equivalence_matches_fan(&s, d, rng)),
    ]
}
