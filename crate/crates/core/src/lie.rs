//! Lie algebras given by structure constants on a fixed basis.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{Rational, Subspace, Vector};

/// A finite-dimensional Lie algebra over the rationals.
///
/// Only brackets `[e_i, e_j]` with `i < j` are stored; the rest follow from
/// antisymmetry. Omitted pairs bracket to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    constants: BTreeMap<(usize, usize), Vector>,
}

/// One basis triple on which the Jacobi identity fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiFailure {
    pub triple: (usize, usize, usize),
    pub residual: Vector,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraReport {
    pub failures: Vec<JacobiFailure>,
}

impl AlgebraReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

impl LieAlgebra {
    /// Builds an algebra from `(i, j, [e_i, e_j])` records with `i < j`.
    /// Zero values are dropped.
    pub fn new(dim: usize, brackets: impl IntoIterator<Item = (usize, usize, Vector)>) -> Result<Self> {
        let mut constants = BTreeMap::new();
        for (k, (i, j, v)) in brackets.into_iter().enumerate() {
            if i >= j || j >= dim {
                return Err(Error::Structure(format!(
                    "record {k}: need 0 <= i < j < {dim}, got ({i}, {j})"
                )));
            }
            if v.len() != dim {
                return Err(Error::Structure(format!(
                    "record {k}: value has {} entries, expected {dim}",
                    v.len()
                )));
            }
            if constants.contains_key(&(i, j)) {
                return Err(Error::Structure(format!("record {k}: duplicate pair ({i}, {j})")));
            }
            if !v.is_zero() {
                constants.insert((i, j), v);
            }
        }
        Ok(LieAlgebra { dim, constants })
    }

    /// Convenience constructor from integer coordinates.
    pub fn from_int_table(dim: usize, brackets: &[(usize, usize, &[i64])]) -> Result<Self> {
        LieAlgebra::new(
            dim,
            brackets.iter().map(|&(i, j, v)| (i, j, Vector::from_ints(v))),
        )
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            dim,
            constants: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Nonzero structure constants `(i, j) -> [e_i, e_j]`, `i < j`, in order.
    pub fn constants(&self) -> impl Iterator<Item = (usize, usize, &Vector)> {
        self.constants.iter().map(|(&(i, j), v)| (i, j, v))
    }

    /// `[e_i, e_j]` for any `i, j`, or `None` when it vanishes.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Option<(bool, &Vector)> {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.constants.get(&(i, j)).map(|v| (false, v)),
            std::cmp::Ordering::Greater => self.constants.get(&(j, i)).map(|v| (true, v)),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn bracket(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        x.check_len(self.dim)?;
        y.check_len(self.dim)?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zeros(self.dim);
        let ys: Vec<usize> = y.nonzero_indices().collect();
        for i in x.nonzero_indices() {
            for &j in &ys {
                if let Some((negate, v)) = self.basis_bracket(i, j) {
                    let mut c: Rational = &x[i] * &y[j];
                    if negate {
                        c = -c;
                    }
                    out.add_scaled(&c, v);
                }
            }
        }
        out
    }

    /// `[U, V]`: span of brackets of basis vectors.
    pub fn bracket_sub(&self, u: &Subspace, v: &Subspace) -> Result<Subspace> {
        self.check_ambient(u)?;
        self.check_ambient(v)?;
        if u.is_zero() || v.is_zero() {
            return Ok(Subspace::zero(self.dim));
        }
        let mut products = Vec::with_capacity(u.dim() * v.dim());
        for a in u.basis() {
            for b in v.basis() {
                let p = self.bracket_unchecked(a, b);
                if !p.is_zero() {
                    products.push(p);
                }
            }
        }
        Subspace::span(self.dim, products)
    }

    fn check_ambient(&self, u: &Subspace) -> Result<()> {
        if u.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: u.ambient_dim(),
            });
        }
        Ok(())
    }

    /// `[L, U]`
    fn adjoint_image(&self, u: &Subspace) -> Result<Subspace> {
        let mut products = Vec::new();
        for b in u.basis() {
            for k in 0..self.dim {
                let p = self.bracket_unchecked(&Vector::unit(self.dim, k), b);
                if !p.is_zero() {
                    products.push(p);
                }
            }
        }
        Subspace::span(self.dim, products)
    }

    /// Smallest ideal containing `s`: iterate `I ← I + [L, I]` until the
    /// dimension stops growing. Terminates within `dim` rounds.
    pub fn ideal_closure(&self, s: &Subspace) -> Result<Subspace> {
        self.check_ambient(s)?;
        let mut current = s.clone();
        loop {
            let next = current.sum(&self.adjoint_image(&current)?)?;
            if next.dim() == current.dim() {
                return Ok(current);
            }
            current = next;
        }
    }

    pub fn is_ideal(&self, u: &Subspace) -> Result<bool> {
        self.check_ambient(u)?;
        self.adjoint_image(u)?.is_subspace_of(u)
    }

    /// Jacobi residual `[e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]`.
    pub fn jacobi_residual(&self, i: usize, j: usize, k: usize) -> Vector {
        let e = |a: usize| Vector::unit(self.dim, a);
        let term = |a: usize, b: usize, c: usize| {
            self.bracket_unchecked(&e(a), &self.bracket_unchecked(&e(b), &e(c)))
        };
        let mut r = term(i, j, k);
        r = &r + &term(j, k, i);
        &r + &term(k, i, j)
    }

    /// Checks the Jacobi identity on every basis triple `i < j < k`, which
    /// suffices by trilinearity and antisymmetry.
    pub fn validate(&self) -> AlgebraReport {
        let mut failures = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    let residual = self.jacobi_residual(i, j, k);
                    if !residual.is_zero() {
                        failures.push(JacobiFailure {
                            triple: (i, j, k),
                            residual,
                        });
                    }
                }
            }
        }
        AlgebraReport { failures }
    }

    /// Structure constants after the change of basis `f_i = sum_j p[i][j] e_j`,
    /// given `p` and its inverse.
    pub(crate) fn change_basis(&self, p: &[Vector], p_inv: &[Vector]) -> Result<LieAlgebra> {
        let n = self.dim;
        let mut records = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let br = self.bracket_unchecked(&p[i], &p[j]);
                if br.is_zero() {
                    continue;
                }
                records.push((i, j, crate::linalg::vec_mat(&br, p_inv, n)));
            }
        }
        LieAlgebra::new(n, records)
    }

    /// Block-diagonal sum; `other`'s basis follows `self`'s.
    pub(crate) fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let n = self.dim + other.dim;
        let pad = |v: &Vector, offset: usize| {
            let mut out = Vector::zeros(n);
            for k in v.nonzero_indices() {
                out[k + offset] = v[k].clone();
            }
            out
        };
        let mut constants = BTreeMap::new();
        for (i, j, v) in self.constants() {
            constants.insert((i, j), pad(v, 0));
        }
        for (i, j, v) in other.constants() {
            constants.insert((i + self.dim, j + self.dim), pad(v, self.dim));
        }
        LieAlgebra { dim: n, constants }
    }
}
