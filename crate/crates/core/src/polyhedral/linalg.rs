//! Exact integer and rational linear algebra on small dense vectors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type IntVec = Vec<BigInt>;

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    let mut acc = BigInt::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

pub fn is_zero(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for x in v {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                break;
            }
        }
    }
    g
}

/// Divides out the gcd of the entries; the zero vector is returned unchanged.
pub fn make_primitive(v: &mut [BigInt]) {
    let g = content(v);
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
}

pub fn primitive(mut v: IntVec) -> IntVec {
    make_primitive(&mut v);
    v
}

pub fn negated(v: &[BigInt]) -> IntVec {
    v.iter().map(|x| -x).collect()
}

/// `a * x - b * y`
pub fn combine(a: &BigInt, x: &[BigInt], b: &BigInt, y: &[BigInt]) -> IntVec {
    x.iter().zip(y).map(|(p, q)| a * p - b * q).collect()
}

/// Multiplies by the lcm of the denominators: a positive multiple with
/// integer entries.
pub fn clear_denominators(v: &[BigRational]) -> IntVec {
    let lcm = v.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
    v.iter().map(|q| q.numer() * (&lcm / q.denom())).collect()
}

pub fn to_rational(v: &[BigInt]) -> Vec<BigRational> {
    v.iter().map(|x| BigRational::from_integer(x.clone())).collect()
}

/// Puts the first nonzero entry positive.
pub fn normalize_sign(v: &mut [BigInt]) {
    if v.iter().find(|x| !x.is_zero()).is_some_and(Signed::is_negative) {
        for x in v.iter_mut() {
            *x = -&*x;
        }
    }
}

/// Reduced row echelon form over the rationals. Returns the nonzero rows and
/// their pivot columns.
pub fn rref(rows: &[IntVec], n: usize) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let mut m: Vec<Vec<BigRational>> = rows.iter().map(|r| to_rational(r)).collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r != row && !other[col].is_zero() {
                let factor = other[col].clone();
                for (x, y) in other.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &factor * y;
                    }
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    m.truncate(row);
    (m, pivots)
}

/// Canonical integer basis of the row span: the rows of the reduced row
/// echelon form, each scaled to a primitive integer vector with a positive
/// pivot.
pub fn canonical_span_basis(rows: &[IntVec], n: usize) -> Vec<IntVec> {
    let (m, _) = rref(rows, n);
    m.iter().map(|r| primitive(clear_denominators(r))).collect()
}

/// Rank by fraction-free elimination.
pub fn rank(rows: &[IntVec]) -> usize {
    let mut m: Vec<IntVec> = rows.iter().filter(|r| !is_zero(r)).cloned().collect();
    if m.is_empty() {
        return 0;
    }
    let n = m[0].len();
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank].clone();
        for r in (rank + 1)..m.len() {
            if !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                let reduced = combine(&pivot[col], &m[r], &factor, &pivot);
                m[r] = primitive(reduced);
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Integer basis of `{x : r . x = 0 for all rows r}`.
pub fn nullspace(rows: &[IntVec], n: usize) -> Vec<IntVec> {
    let (m, pivots) = rref(rows, n);
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![BigRational::zero(); n];
        v[free] = BigRational::one();
        for (row, &p) in m.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(primitive(clear_denominators(&v)));
    }
    basis
}

/// Orthogonal projection of `v` onto the complement of `span(basis)`,
/// scaled to a primitive integer vector. `basis` must be independent.
pub fn project_out(v: &[BigInt], basis: &[IntVec]) -> IntVec {
    if basis.is_empty() {
        return primitive(v.to_vec());
    }
    let k = basis.len();
    // solve Gram * c = B v
    let mut system: Vec<Vec<BigRational>> = (0..k)
        .map(|i| {
            let mut row: Vec<BigRational> = (0..k)
                .map(|j| BigRational::from_integer(dot(&basis[i], &basis[j])))
                .collect();
            row.push(BigRational::from_integer(dot(&basis[i], v)));
            row
        })
        .collect();
    for col in 0..k {
        let p = (col..k)
            .find(|&r| !system[r][col].is_zero())
            .expect("basis must be linearly independent");
        system.swap(col, p);
        let inv = system[col][col].recip();
        for x in system[col].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = system[col].clone();
        for (r, other) in system.iter_mut().enumerate() {
            if r != col && !other[col].is_zero() {
                let factor = other[col].clone();
                for (x, y) in other.iter_mut().zip(&pivot_row) {
                    *x -= &factor * y;
                }
            }
        }
    }
    let mut projected = to_rational(v);
    for (i, b) in basis.iter().enumerate() {
        let c = &system[i][k];
        if c.is_zero() {
            continue;
        }
        for (x, y) in projected.iter_mut().zip(b) {
            *x -= c * BigRational::from_integer(y.clone());
        }
    }
    primitive(clear_denominators(&projected))
}

pub fn from_i64(v: &[i64]) -> IntVec {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(v: &[i64]) -> IntVec {
        from_i64(v)
    }

    #[test]
    fn primitive_and_content() {
        assert_eq!(primitive(iv(&[4, -6, 0])), iv(&[2, -3, 0]));
        assert_eq!(primitive(iv(&[0, 0])), iv(&[0, 0]));
        assert_eq!(content(&iv(&[0, 9, 12])), BigInt::from(3));
    }

    #[test]
    fn rank_and_nullspace() {
        assert_eq!(rank(&[iv(&[1, 2, 3]), iv(&[2, 4, 6]), iv(&[0, 1, 1])]), 2);
        assert_eq!(rank(&[]), 0);
        let ns = nullspace(&[iv(&[1, 1, 1])], 3);
        assert_eq!(ns, vec![iv(&[-1, 1, 0]), iv(&[-1, 0, 1])]);
        assert_eq!(nullspace(&[], 2), vec![iv(&[1, 0]), iv(&[0, 1])]);
    }

    #[test]
    fn canonical_basis_is_unique() {
        let a = canonical_span_basis(&[iv(&[1, -1, 0]), iv(&[0, -1, 1])], 3);
        let b = canonical_span_basis(&[iv(&[1, 0, -1]), iv(&[2, -1, -1]), iv(&[0, 3, -3])], 3);
        assert_eq!(a, b);
        assert_eq!(a, vec![iv(&[1, 0, -1]), iv(&[0, 1, -1])]);
    }

    #[test]
    fn projection() {
        assert_eq!(project_out(&iv(&[1, 1]), &[iv(&[1, -1])]), iv(&[1, 1]));
        assert_eq!(project_out(&iv(&[2, 0]), &[iv(&[1, -1])]), iv(&[1, 1]));
        assert_eq!(project_out(&iv(&[1, -1]), &[iv(&[1, -1])]), iv(&[0, 0]));
    }
}
