//! Generic subdimension vectors, generic ext and Schur roots.
//!
//! `e` is a generic subdimension vector of `d` (written `e -> d`) iff
//! `<f, d - e> >= 0` for every generic subdimension vector `f` of `e`, with
//! `0 -> d` and `d -> d` always. The recursion is evaluated bottom-up over
//! the box `0 <= e <= d` and memoized per [`Session`].

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::polyhedral::Cone;
use crate::quiver::{BoxIndex, BoxIter, DimVector, Quiver};

/// Generic subdimension vectors of one dimension vector, in graded
/// lexicographic order, with their Euler rows `f^T (I - A)`.
#[derive(Debug)]
pub(crate) struct GenericSet {
    pub(crate) vectors: Vec<DimVector>,
    rows: Vec<i64>,
}

impl GenericSet {
    fn new(quiver: &Quiver, mut vectors: Vec<DimVector>) -> Self {
        vectors.sort_by(DimVector::grlex_cmp);
        let rows = vectors.iter().flat_map(|f| quiver.euler_row(f)).collect();
        GenericSet { vectors, rows }
    }

    /// `min_f <f, x>` over the set is nonnegative.
    fn all_nonnegative(&self, n: usize, x: &[i64]) -> bool {
        self.rows
            .chunks_exact(n)
            .all(|row| row.iter().zip(x).map(|(a, b)| a * b).sum::<i64>() >= 0)
    }

    /// `max_f -<f, x>`.
    fn max_negated(&self, n: usize, x: &[i64]) -> i64 {
        self.rows
            .chunks_exact(n)
            .map(|row| -row.iter().zip(x).map(|(a, b)| a * b).sum::<i64>())
            .max()
            .expect("the zero vector is always generic")
    }

    pub(crate) fn contains(&self, e: &DimVector) -> bool {
        self.vectors.binary_search_by(|f| f.grlex_cmp(e)).is_ok()
    }
}

/// A quiver together with the memo tables shared by every computation on it.
///
/// All methods take `&self`; the tables are behind read-write locks, so a
/// session can be shared between threads.
#[derive(Debug)]
pub struct Session {
    quiver: Quiver,
    generic: RwLock<HashMap<DimVector, Arc<GenericSet>>>,
    pub(crate) semistable: RwLock<HashMap<DimVector, Arc<Cone>>>,
}

impl Session {
    pub fn new(quiver: Quiver) -> Self {
        Session {
            quiver,
            generic: RwLock::new(HashMap::new()),
            semistable: RwLock::new(HashMap::new()),
        }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub(crate) fn check(&self, d: &DimVector) -> Result<()> {
        if d.len() != self.vertex_count() {
            return Err(Error::LengthMismatch { expected: self.vertex_count(), found: d.len() });
        }
        Ok(())
    }

    pub(crate) fn check_nonzero(&self, d: &DimVector) -> Result<()> {
        self.check(d)?;
        if d.is_zero() {
            return Err(Error::ZeroDimensionVector);
        }
        Ok(())
    }

    fn cached(&self, d: &DimVector) -> Option<Arc<GenericSet>> {
        self.generic.read().unwrap().get(d).cloned()
    }

    pub(crate) fn generic_set(&self, d: &DimVector) -> Arc<GenericSet> {
        if let Some(set) = self.cached(d) {
            return set;
        }
        let index = BoxIndex::new(d);
        // mixed-radix order is a linear extension of the componentwise order
        let mut table: Vec<Arc<GenericSet>> = Vec::with_capacity(index.size());
        let mut fresh = Vec::new();
        for e in BoxIter::new(d) {
            let set = match self.cached(&e) {
                Some(set) => set,
                None => {
                    let members = self.recurse(&e, &index, &table);
                    let set = Arc::new(GenericSet::new(&self.quiver, members));
                    fresh.push((e.clone(), set.clone()));
                    set
                }
            };
            table.push(set);
        }
        let top = table.pop().expect("box is never empty");
        self.generic.write().unwrap().extend(fresh);
        top
    }

    /// Members of the generic set of `e`, given the sets of every `f < e`
    /// in `table` (indexed by `index`).
    fn recurse(&self, e: &DimVector, index: &BoxIndex, table: &[Arc<GenericSet>]) -> Vec<DimVector> {
        let n = e.len();
        let mut f = vec![0i64; n];
        let mut quotient = vec![0i64; n];
        let mut members = vec![DimVector::zero(n)];
        loop {
            // odometer step inside the box 0 <= f <= e, last coordinate fastest
            let mut i = n;
            loop {
                if i == 0 {
                    return members;
                }
                i -= 1;
                if f[i] < e[i] {
                    f[i] += 1;
                    break;
                }
                f[i] = 0;
            }
            if f.as_slice() == e.coords() {
                members.push(e.clone());
                continue;
            }
            for ((q, &a), &b) in quotient.iter_mut().zip(e.iter()).zip(&f) {
                *q = a - b;
            }
            if table[index.index(&f)].all_nonnegative(n, &quotient) {
                members.push(DimVector::from_unchecked(f.clone()));
            }
        }
    }

    /// All generic subdimension vectors of `d` in graded lexicographic order.
    pub fn generic_subdims(&self, d: &DimVector) -> Result<Vec<DimVector>> {
        self.check(d)?;
        Ok(self.generic_set(d).vectors.clone())
    }

    /// Whether `e -> d`.
    pub fn is_generic_subdim(&self, e: &DimVector, d: &DimVector) -> Result<bool> {
        self.check(d)?;
        self.check(e)?;
        if !e.is_sub_of(d) {
            return Err(Error::NotSubdimension { e: e.to_vec(), d: d.to_vec() });
        }
        Ok(self.generic_set(d).contains(e))
    }

    /// `ext(d, e) = max over d' -> d of -<d', e>`.
    pub fn ext_generic(&self, d: &DimVector, e: &DimVector) -> Result<i64> {
        self.check(d)?;
        self.check(e)?;
        Ok(self.generic_set(d).max_negated(self.vertex_count(), e))
    }

    /// `<d, e> - <e, d> < 0` for every proper nonzero `e -> d`.
    pub fn is_schur_root(&self, d: &DimVector) -> Result<bool> {
        self.check_nonzero(d)?;
        let q = &self.quiver;
        Ok(self
            .generic_set(d)
            .vectors
            .iter()
            .filter(|e| e.is_proper_nonzero_sub_of(d))
            .all(|e| q.euler_unchecked(d, e) - q.euler_unchecked(e, d) < 0))
    }
}
