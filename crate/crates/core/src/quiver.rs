//! Quivers, dimension vectors, stability parameters and the Euler form.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// A finite quiver. Parallel arrows are aggregated into a multiplicity
/// matrix; loops and oriented cycles are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    n: usize,
    // row-major, entry (i, j) = number of arrows i -> j
    arrows: Vec<u64>,
}

impl Quiver {
    /// Builds a quiver on `n` vertices from `(source, target, multiplicity)`
    /// triples with 0-based indices. Repeated pairs accumulate.
    pub fn new(n: usize, arrows: &[(usize, usize, u64)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyQuiver);
        }
        let mut matrix = vec![0u64; n * n];
        for &(s, t, m) in arrows {
            for index in [s, t] {
                if index >= n {
                    return Err(Error::VertexOutOfRange { index, vertices: n });
                }
            }
            if m == 0 {
                return Err(Error::ZeroMultiplicity);
            }
            matrix[s * n + t] += m;
        }
        Ok(Quiver { n, arrows: matrix })
    }

    /// Builds a quiver from a full `n x n` multiplicity matrix.
    pub fn from_matrix(matrix: Vec<Vec<u64>>) -> Result<Self> {
        let n = matrix.len();
        if n == 0 {
            return Err(Error::EmptyQuiver);
        }
        let mut arrows = Vec::with_capacity(n * n);
        for row in matrix {
            if row.len() != n {
                return Err(Error::LengthMismatch { expected: n, found: row.len() });
            }
            arrows.extend(row);
        }
        Ok(Quiver { n, arrows })
    }

    /// The quiver with `n` vertices and no arrows.
    pub fn arrowless(n: usize) -> Result<Self> {
        Self::new(n, &[])
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of arrows from `source` to `target`.
    pub fn arrows(&self, source: usize, target: usize) -> u64 {
        self.arrows[source * self.n + target]
    }

    pub fn matrix(&self) -> Vec<Vec<u64>> {
        self.arrows.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.n {
            return Err(Error::LengthMismatch { expected: self.n, found: len });
        }
        Ok(())
    }

    /// The Euler form `<x, y> = sum_i x_i y_i - sum_{a: i -> j} x_i y_j`.
    pub fn euler_form(&self, x: &[i64], y: &[i64]) -> Result<i64> {
        self.check_len(x.len())?;
        self.check_len(y.len())?;
        Ok(self.euler_unchecked(x, y))
    }

    pub(crate) fn euler_unchecked(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut value = 0i64;
        for i in 0..self.n {
            if x[i] == 0 {
                continue;
            }
            let row = &self.arrows[i * self.n..(i + 1) * self.n];
            let mut inner = y[i];
            for (j, &m) in row.iter().enumerate() {
                inner -= m as i64 * y[j];
            }
            value += x[i] * inner;
        }
        value
    }

    /// The row vector `x^T (I - A)`, so that `<x, y> = row . y`.
    pub(crate) fn euler_row(&self, x: &[i64]) -> Vec<i64> {
        let mut row = x.to_vec();
        for i in 0..self.n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..self.n {
                row[j] -= x[i] * self.arrows[i * self.n + j] as i64;
            }
        }
        row
    }

    /// The canonical stability parameter `theta_d(f) = <d, f> - <f, d>`.
    pub fn canonical_stability(&self, d: &DimVector) -> Result<StabParam> {
        self.check_len(d.len())?;
        if d.is_zero() {
            return Err(Error::ZeroDimensionVector);
        }
        let coords = (0..self.n)
            .map(|i| {
                let u = DimVector::unit(self.n, i);
                let value = self.euler_unchecked(d, &u) - self.euler_unchecked(&u, d);
                BigRational::from_integer(BigInt::from(value))
            })
            .collect();
        Ok(StabParam(coords))
    }
}

/// A nonnegative integer vector indexed by the vertices of a quiver.
/// Ordered lexicographically; see [`DimVector::grlex_cmp`] for the graded order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimVector(Vec<i64>);

impl DimVector {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if let Some((index, &value)) = coords.iter().enumerate().find(|(_, &v)| v < 0) {
            return Err(Error::NegativeEntry { index, value });
        }
        Ok(DimVector(coords))
    }

    pub(crate) fn from_unchecked(coords: Vec<i64>) -> Self {
        debug_assert!(coords.iter().all(|&x| x >= 0));
        DimVector(coords)
    }

    pub fn zero(n: usize) -> Self {
        DimVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        DimVector(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<i64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Componentwise `self <= other`.
    pub fn is_sub_of(&self, other: &DimVector) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self` is a nonzero subdimension vector of `other` different from it.
    pub fn is_proper_nonzero_sub_of(&self, other: &DimVector) -> bool {
        self.is_sub_of(other) && !self.is_zero() && self != other
    }

    /// `self - other`; callers guarantee `other <= self`.
    pub fn minus(&self, other: &DimVector) -> DimVector {
        DimVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn plus(&self, other: &DimVector) -> DimVector {
        DimVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scaled(&self, k: i64) -> DimVector {
        assert!(k >= 0);
        DimVector(self.0.iter().map(|a| a * k).collect())
    }

    /// gcd of the entries; 0 for the zero vector.
    pub fn gcd(&self) -> i64 {
        self.0.iter().fold(0i64, |g, &x| g.gcd(&x))
    }

    pub fn is_indivisible(&self) -> bool {
        self.gcd() == 1
    }

    /// Total degree followed by lexicographic order.
    pub fn grlex_cmp(&self, other: &DimVector) -> Ordering {
        let da: i64 = self.0.iter().sum();
        let db: i64 = other.0.iter().sum();
        da.cmp(&db).then_with(|| self.0.cmp(&other.0))
    }

    pub fn to_bigint(&self) -> Vec<BigInt> {
        self.0.iter().map(|&x| BigInt::from(x)).collect()
    }
}

impl std::ops::Deref for DimVector {
    type Target = [i64];
    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A rational stability parameter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StabParam(pub Vec<BigRational>);

impl StabParam {
    pub fn from_integers(coords: &[i64]) -> Self {
        StabParam(
            coords
                .iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect(),
        )
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// `theta(e) = theta . e`.
    pub fn pair(&self, e: &[i64]) -> Result<BigRational> {
        if self.len() != e.len() {
            return Err(Error::LengthMismatch { expected: self.len(), found: e.len() });
        }
        Ok(self
            .0
            .iter()
            .zip(e)
            .filter(|(_, &x)| x != 0)
            .fold(BigRational::zero(), |acc, (t, &x)| acc + t * BigInt::from(x)))
    }

    /// Scales by the lcm of the denominators: the primitive-direction integer
    /// vector on the same open ray (or zero).
    pub fn to_integer_direction(&self) -> Vec<BigInt> {
        let lcm = self
            .0
            .iter()
            .fold(BigInt::from(1), |l, q| l.lcm(q.denom()));
        self.0
            .iter()
            .map(|q| q.numer() * (&lcm / q.denom()))
            .collect()
    }

    pub fn is_negative_somewhere(&self) -> bool {
        self.0.iter().any(Signed::is_negative)
    }
}

/// `theta . e` as an exact rational.
pub fn pair(theta: &StabParam, e: &DimVector) -> Result<BigRational> {
    theta.pair(e)
}

/// All `e` with `0 <= e <= d` componentwise, in graded lexicographic order.
/// `proper` drops `e = d`, `nonzero` drops `e = 0`.
pub fn subdim_vectors(d: &DimVector, proper: bool, nonzero: bool) -> Vec<DimVector> {
    let mut out: Vec<DimVector> = BoxIter::new(d)
        .filter(|e| !(proper && e == d) && !(nonzero && e.is_zero()))
        .collect();
    out.sort_by(DimVector::grlex_cmp);
    out
}

/// Iterates the box `0 <= e <= d` in mixed-radix order (last coordinate
/// fastest), matching [`BoxIndex::index`].
pub(crate) struct BoxIter<'a> {
    d: &'a DimVector,
    current: Option<Vec<i64>>,
}

impl<'a> BoxIter<'a> {
    pub(crate) fn new(d: &'a DimVector) -> Self {
        BoxIter { d, current: Some(vec![0; d.len()]) }
    }
}

impl Iterator for BoxIter<'_> {
    type Item = DimVector;

    fn next(&mut self) -> Option<DimVector> {
        let cur = self.current.take()?;
        let mut next = cur.clone();
        let mut i = next.len();
        let mut advanced = false;
        while i > 0 {
            i -= 1;
            if next[i] < self.d[i] {
                next[i] += 1;
                advanced = true;
                break;
            }
            next[i] = 0;
        }
        if advanced {
            self.current = Some(next);
        }
        Some(DimVector(cur))
    }
}

/// Mixed-radix indexing of the box `0 <= e <= d`.
#[derive(Debug, Clone)]
pub(crate) struct BoxIndex {
    stride: Vec<usize>,
    size: usize,
}

impl BoxIndex {
    pub(crate) fn new(d: &DimVector) -> Self {
        let radix: Vec<usize> = d.iter().map(|&x| x as usize + 1).collect();
        let mut stride = vec![1usize; radix.len()];
        for i in (0..radix.len().saturating_sub(1)).rev() {
            stride[i] = stride[i + 1] * radix[i + 1];
        }
        let size = radix.iter().product();
        BoxIndex { stride, size }
    }

    pub(crate) fn size(&self) -> usize {
        self.size
    }

    pub(crate) fn index(&self, e: &[i64]) -> usize {
        e.iter().zip(&self.stride).map(|(&x, &s)| x as usize * s).sum()
    }
}
