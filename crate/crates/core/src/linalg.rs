//! Exact rational vectors and canonical subspaces.
//!
//! Every subspace is stored in reduced row echelon form, so two subspaces of
//! the same ambient space are equal exactly when their stored rows are equal.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact scalar. `BigRational` keeps itself reduced with a positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats as `"num/den"`, dropping the denominator when it is 1.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("invalid rational literal {s:?}"));
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.trim().parse().map_err(|_| bad())?;
    let den: BigInt = den.trim().parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vector(Vec<Rational>);

impl Vector {
    pub fn new(entries: Vec<Rational>) -> Self {
        Vector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        Vector(vec![Rational::zero(); n])
    }

    /// The `i`-th standard basis vector of length `n`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = Rational::one();
        v
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        Vector(entries.iter().map(|&x| rat(x)).collect())
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

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    /// Indices of nonzero coordinates.
    pub fn nonzero_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, _)| i)
    }

    pub fn scale(&self, q: &Rational) -> Vector {
        Vector(self.0.iter().map(|x| x * q).collect())
    }

    /// `self += q * other`
    pub fn add_scaled(&mut self, q: &Rational, other: &Vector) {
        debug_assert_eq!(self.len(), other.len());
        if q.is_zero() {
            return;
        }
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            if !b.is_zero() {
                *a += q * b;
            }
        }
    }

    pub fn check_len(&self, n: usize) -> Result<()> {
        if self.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: self.len(),
            });
        }
        Ok(())
    }
}

impl Index<usize> for Vector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl IndexMut<usize> for Vector {
    fn index_mut(&mut self, i: usize) -> &mut Rational {
        &mut self.0[i]
    }
}

impl Add<&Vector> for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.len(), rhs.len(), "vector length mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Vector> for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.len(), rhs.len(), "vector length mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_rational(x))?;
        }
        write!(f, "]")
    }
}

impl FromIterator<Rational> for Vector {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        Vector(iter.into_iter().collect())
    }
}

/// A subspace of `Q^n` held in reduced row echelon form.
///
/// The zero subspace has no rows. Ordering compares dimension first, then rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    rows: Vec<Vector>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            rows: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            rows: (0..ambient_dim)
                .map(|i| Vector::unit(ambient_dim, i))
                .collect(),
        }
    }

    /// Span of the given standard basis vectors.
    pub fn coordinate(ambient_dim: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut idx: Vec<usize> = indices.into_iter().collect();
        idx.sort_unstable();
        idx.dedup();
        Subspace {
            ambient_dim,
            rows: idx
                .into_iter()
                .map(|i| Vector::unit(ambient_dim, i))
                .collect(),
        }
    }

    /// Canonical span of `rows`. All rows must have length `ambient_dim`.
    pub fn span(ambient_dim: usize, rows: impl IntoIterator<Item = Vector>) -> Result<Self> {
        let rows: Vec<Vector> = rows.into_iter().collect();
        for r in &rows {
            r.check_len(ambient_dim)?;
        }
        Ok(Subspace {
            ambient_dim,
            rows: reduce(rows, ambient_dim),
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.nonzero_indices().next().expect("rref rows are nonzero"))
            .collect()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        Subspace::span(
            self.ambient_dim,
            self.rows.iter().chain(&other.rows).cloned(),
        )
    }

    /// Intersection by the stacked-system method: reduce
    /// `[u | u]` over `U`'s basis together with `[v | 0]` over `V`'s basis;
    /// rows whose left half vanishes carry a basis of `U ∩ V` on the right.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let n = self.ambient_dim;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(n));
        }
        let mut stacked = Vec::with_capacity(self.dim() + other.dim());
        for u in &self.rows {
            stacked.push(u.iter().chain(u.iter()).cloned().collect::<Vector>());
        }
        for v in &other.rows {
            stacked.push(
                v.iter()
                    .cloned()
                    .chain(std::iter::repeat_with(Rational::zero).take(n))
                    .collect::<Vector>(),
            );
        }
        let reduced = reduce(stacked, 2 * n);
        let common = reduced
            .into_iter()
            .filter(|r| r.entries()[..n].iter().all(Zero::is_zero))
            .map(|r| Vector::new(r.entries()[n..].to_vec()));
        Subspace::span(n, common)
    }

    pub fn contains(&self, v: &Vector) -> Result<bool> {
        v.check_len(self.ambient_dim)?;
        Ok(self.residual(v).is_zero())
    }

    /// `v` minus its reduction against the basis; zero iff `v` is in the span.
    fn residual(&self, v: &Vector) -> Vector {
        let mut r = v.clone();
        for row in &self.rows {
            let p = row.nonzero_indices().next().expect("nonzero row");
            if !r[p].is_zero() {
                let c = -r[p].clone();
                r.add_scaled(&c, row);
            }
        }
        r
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        if self.dim() > other.dim() {
            return Ok(false);
        }
        Ok(self.rows.iter().all(|r| other.residual(r).is_zero()))
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.ambient_dim
            .cmp(&other.ambient_dim)
            .then(self.dim().cmp(&other.dim()))
            .then_with(|| self.rows.cmp(&other.rows))
    }
}

/// Reduced row echelon form of a matrix given as rows, dropping zero rows.
pub fn rref(rows: &[Vector]) -> Result<Subspace> {
    let n = rows.first().map_or(0, Vector::len);
    Subspace::span(n, rows.iter().cloned())
}

fn reduce(mut rows: Vec<Vector>, ncols: usize) -> Vec<Vector> {
    rows.retain(|r| !r.is_zero());
    let mut rank = 0;
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].recip();
        if !inv.is_one() {
            rows[rank] = rows[rank].scale(&inv);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let c = -row[col].clone();
                row.add_scaled(&c, &pivot_row);
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rows
}

/// Square rational matrix inverse via row reduction of `[M | I]`.
/// Returns `None` for singular input.
pub fn invert(matrix: &[Vector]) -> Result<Option<Vec<Vector>>> {
    let n = matrix.len();
    for row in matrix {
        row.check_len(n)?;
    }
    let augmented: Vec<Vector> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| row.iter().cloned().chain(Vector::unit(n, i).0).collect())
        .collect();
    let reduced = reduce(augmented, 2 * n);
    if reduced.len() < n || (0..n).any(|i| !reduced[i][i].is_one()) {
        return Ok(None);
    }
    Ok(Some(
        reduced
            .into_iter()
            .map(|r| Vector::new(r.entries()[n..].to_vec()))
            .collect(),
    ))
}

/// Row vector times matrix: `sum_i v[i] * m[i]`.
pub fn vec_mat(v: &Vector, m: &[Vector], ncols: usize) -> Vector {
    let mut out = Vector::zeros(ncols);
    for i in v.nonzero_indices() {
        out.add_scaled(&v[i], &m[i]);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vecs(rows: &[&[i64]]) -> Vec<Vector> {
        rows.iter().map(|r| Vector::from_ints(r)).collect()
    }

    fn sp(n: usize, rows: &[&[i64]]) -> Subspace {
        Subspace::span(n, vecs(rows)).unwrap()
    }

    #[test]
    fn rref_scales_to_identity() {
        let s = rref(&vecs(&[&[2, 0], &[0, 4]])).unwrap();
        assert_eq!(s.basis(), vecs(&[&[1, 0], &[0, 1]]).as_slice());
    }

    #[test]
    fn rref_drops_dependent_row() {
        let s = rref(&vecs(&[&[1, 2], &[2, 4]])).unwrap();
        assert_eq!(s.basis(), vecs(&[&[1, 2]]).as_slice());
    }

    #[test]
    fn rref_three_by_three() {
        let s = rref(&vecs(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 2]])).unwrap();
        assert_eq!(s.basis(), vecs(&[&[1, 0, 1], &[0, 1, 1]]).as_slice());
        assert_eq!(s.pivots(), vec![0, 1]);
    }

    #[test]
    fn rref_rejects_ragged_rows() {
        let err = rref(&vecs(&[&[1, 2], &[1, 2, 3]])).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn rref_idempotent() {
        let s = rref(&vecs(&[&[3, 1, 4], &[1, 5, 9], &[2, 6, 5]])).unwrap();
        assert_eq!(rref(s.basis()).unwrap(), s);
    }

    #[test]
    fn sums() {
        let e1 = sp(3, &[&[1, 0, 0]]);
        let e2 = sp(3, &[&[0, 1, 0]]);
        assert_eq!(e1.sum(&e1).unwrap(), e1);
        assert_eq!(e1.sum(&e2).unwrap(), sp(3, &[&[1, 0, 0], &[0, 1, 0]]));
        let u = sp(3, &[&[1, 1, 0]]);
        let v = sp(3, &[&[1, -1, 0]]);
        assert_eq!(u.sum(&v).unwrap(), sp(3, &[&[1, 0, 0], &[0, 1, 0]]));
        assert!(e1.sum(&Subspace::zero(2)).is_err());
    }

    #[test]
    fn intersections() {
        let u = sp(3, &[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(u.intersect(&u).unwrap(), u);
        let e1 = sp(2, &[&[1, 0]]);
        let e2 = sp(2, &[&[0, 1]]);
        assert!(e1.intersect(&e2).unwrap().is_zero());
        let v = sp(3, &[&[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(u.intersect(&v).unwrap(), sp(3, &[&[0, 1, 0]]));
        // skewed: span(x+y, z) ∩ span(x, y+z) = span(x+y+z)
        let a = sp(3, &[&[1, 1, 0], &[0, 0, 1]]);
        let b = sp(3, &[&[1, 0, 0], &[0, 1, 1]]);
        assert_eq!(a.intersect(&b).unwrap(), sp(3, &[&[1, 1, 1]]));
        assert!(u.intersect(&Subspace::zero(4)).is_err());
    }

    #[test]
    fn membership() {
        let e1 = sp(2, &[&[1, 0]]);
        assert!(e1.contains(&Vector::from_ints(&[3, 0])).unwrap());
        assert!(!e1.contains(&Vector::from_ints(&[0, 1])).unwrap());
        assert!(e1.contains(&Vector::zeros(2)).unwrap());
        assert!(Subspace::zero(2).contains(&Vector::zeros(2)).unwrap());
        let u = sp(2, &[&[1, 2], &[0, 1]]);
        assert!(u.contains(&Vector::from_ints(&[5, 1])).unwrap());
        assert!(e1.contains(&Vector::zeros(3)).is_err());
    }

    #[test]
    fn rational_literals() {
        assert_eq!(format_rational(&ratio(6, -4)), "-3/2");
        assert_eq!(format_rational(&rat(7)), "7");
        assert_eq!(parse_rational("-3/2").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rational("4/2").unwrap(), rat(2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1.5").is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let m = vecs(&[&[2, 1], &[1, 1]]);
        let inv = invert(&m).unwrap().unwrap();
        assert_eq!(inv, vecs(&[&[1, -1], &[-1, 2]]));
        assert!(invert(&vecs(&[&[1, 2], &[2, 4]])).unwrap().is_none());
    }

    #[test]
    fn zero_dimensional_ambient() {
        let z = Subspace::zero(0);
        assert_eq!(Subspace::full(0), z);
        assert_eq!(z.sum(&z).unwrap(), z);
        assert_eq!(z.intersect(&z).unwrap(), z);
    }
}
