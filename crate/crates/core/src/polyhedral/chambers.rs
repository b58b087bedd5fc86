use num_rational::BigRational;

use super::dd::DdState;
use super::linalg::{clear_denominators, is_zero, negated, primitive, IntVec};
use super::Cone;

/// Closed full-dimensional cells cut out of `support` by `hyperplanes`
/// (given by normal vectors), sorted by canonical form.
///
/// Cells are refined one hyperplane at a time; a cell is split only when the
/// normal takes both signs on its generators, so the work is proportional to
/// the number of cells rather than to `2^hyperplanes`.
pub fn chambers(support: &Cone, hyperplanes: &[Vec<BigRational>]) -> Vec<Cone> {
    let normals: Vec<IntVec> = hyperplanes
        .iter()
        .map(|h| primitive(clear_denominators(h)))
        .collect();
    chambers_int(support, &normals)
}

pub(crate) fn chambers_int(support: &Cone, normals: &[IntVec]) -> Vec<Cone> {
    let n = support.ambient_dim();
    let mut splitter = ChamberSplitter::new(support);
    for normal in normals {
        if !is_zero(normal) {
            splitter.split(normal);
        }
    }
    let mut out: Vec<Cone> = splitter
        .cells
        .into_iter()
        .map(|cell| {
            let (lineality, rays) = cell.into_generators();
            Cone::from_minimal_generators(n, rays, lineality)
        })
        .collect();
    out.sort_by_cached_key(Cone::canonical_form);
    out
}

struct ChamberSplitter {
    cells: Vec<DdState>,
}

impl ChamberSplitter {
    fn new(support: &Cone) -> Self {
        let h = support.hrep();
        let v = support.vrep();
        let start = DdState::from_generators(
            support.ambient_dim(),
            h.inequalities.clone(),
            v.rays.clone(),
            v.lineality.clone(),
        );
        ChamberSplitter { cells: vec![start] }
    }

    fn split(&mut self, normal: &IntVec) {
        let mut next = Vec::with_capacity(self.cells.len());
        for cell in std::mem::take(&mut self.cells) {
            let (pos, neg) = cell.sign_pattern(normal);
            if pos && neg {
                let mut below = cell.clone();
                below.add_inequality(normal.clone());
                let mut above = cell;
                above.add_inequality(negated(normal));
                next.push(below);
                next.push(above);
            } else {
                next.push(cell);
            }
        }
        self.cells = next;
    }
}
