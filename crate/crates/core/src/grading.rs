//! Gradings by homogeneous basis labels.
//!
//! A grading assigns a group element to every basis vector. The component
//! `L_g` is the span of the basis vectors labelled `g`, so the support of the
//! algebra is exactly the set of labels that occur.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::group::{GroupContext, GroupElement};
use crate::lie::{AlgebraReport, LieAlgebra};
use crate::linalg::{Subspace, Vector};

/// Basis pair `(i, j)` whose bracket leaves `L_{g_i g_j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingViolation {
    pub pair: (usize, usize),
    pub expected: GroupElement,
    /// Coordinates of `[e_i, e_j]` that are nonzero outside the expected component.
    pub offending: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradingReport {
    pub violations: Vec<GradingViolation>,
}

impl GradingReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebra {
    algebra: LieAlgebra,
    ctx: GroupContext,
    labels: Vec<GroupElement>,
    components: BTreeMap<GroupElement, Vec<usize>>,
}

impl GradedAlgebra {
    /// Pairs an algebra with basis labels. Only structure is checked here
    /// (label count, conformance); see [`validate`](Self::validate) for the axioms.
    pub fn new(algebra: LieAlgebra, ctx: GroupContext, labels: Vec<GroupElement>) -> Result<Self> {
        if labels.len() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                expected: algebra.dim(),
                found: labels.len(),
            });
        }
        let mut components: BTreeMap<GroupElement, Vec<usize>> = BTreeMap::new();
        for (i, g) in labels.iter().enumerate() {
            ctx.conforms(g)?;
            components.entry(g.clone()).or_default().push(i);
        }
        Ok(GradedAlgebra {
            algebra,
            ctx,
            labels,
            components,
        })
    }

    /// Like [`new`](Self::new), then rejects algebras failing either validator.
    pub fn validated(algebra: LieAlgebra, ctx: GroupContext, labels: Vec<GroupElement>) -> Result<Self> {
        let a = GradedAlgebra::new(algebra, ctx, labels)?;
        a.validate()?;
        Ok(a)
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn ctx(&self) -> &GroupContext {
        &self.ctx
    }

    pub fn labels(&self) -> &[GroupElement] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn validate_algebra(&self) -> AlgebraReport {
        self.algebra.validate()
    }

    /// Checks `[e_i, e_j] ∈ L_{g_i g_j}` for every ordered pair `i != j`.
    pub fn validate_grading(&self) -> GradingReport {
        let n = self.dim();
        let mut violations = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let Some((_, v)) = self.algebra.basis_bracket(i, j) else {
                    continue;
                };
                let expected = self
                    .ctx
                    .mul(&self.labels[i], &self.labels[j])
                    .expect("labels conform");
                let offending: Vec<usize> = v
                    .nonzero_indices()
                    .filter(|&k| self.labels[k] != expected)
                    .collect();
                if !offending.is_empty() {
                    violations.push(GradingViolation {
                        pair: (i, j),
                        expected,
                        offending,
                    });
                }
            }
        }
        GradingReport { violations }
    }

    /// Runs both validators and converts the first failure into an error.
    pub fn validate(&self) -> Result<()> {
        let report = self.validate_algebra();
        if let Some(first) = report.failures.first() {
            return Err(Error::InvalidAlgebra {
                count: report.failures.len(),
                first: first.triple,
            });
        }
        let report = self.validate_grading();
        if let Some(first) = report.violations.first() {
            return Err(Error::InvalidGrading {
                count: report.violations.len(),
                first: first.pair,
            });
        }
        Ok(())
    }

    /// Basis indices carrying label `g`.
    pub fn component_indices(&self, g: &GroupElement) -> &[usize] {
        self.components.get(g).map_or(&[], Vec::as_slice)
    }

    /// `L_g`; the zero subspace when `g` is not a label.
    pub fn component(&self, g: &GroupElement) -> Subspace {
        Subspace::coordinate(self.dim(), self.component_indices(g).iter().copied())
    }

    /// Distinct labels in canonical order.
    pub fn support(&self) -> Vec<GroupElement> {
        self.components.keys().cloned().collect()
    }

    pub fn element_support(&self, x: &Vector) -> Result<BTreeSet<GroupElement>> {
        x.check_len(self.dim())?;
        Ok(x.nonzero_indices().map(|i| self.labels[i].clone()).collect())
    }

    /// True iff `u` is an ideal equal to the sum of its homogeneous parts.
    pub fn is_graded_ideal(&self, u: &Subspace) -> Result<bool> {
        if !self.algebra.is_ideal(u)? {
            return Ok(false);
        }
        let mut parts = Subspace::zero(self.dim());
        for g in self.components.keys() {
            parts = parts.sum(&u.intersect(&self.component(g))?)?;
        }
        Ok(parts == *u)
    }

    /// Right-nested bracket `[L_{g_1}, [L_{g_2}, [..., L_{g_n}]]]`.
    pub fn nested_bracket(&self, gs: &[GroupElement]) -> Result<Subspace> {
        let (last, rest) = gs.split_last().ok_or(Error::EmptyTuple)?;
        for g in gs {
            self.ctx.conforms(g)?;
        }
        let mut acc = self.component(last);
        for g in rest.iter().rev() {
            if acc.is_zero() {
                break;
            }
            acc = self.algebra.bracket_sub(&self.component(g), &acc)?;
        }
        Ok(acc)
    }

    pub(crate) fn with_algebra(&self, algebra: LieAlgebra) -> Result<GradedAlgebra> {
        GradedAlgebra::new(algebra, self.ctx.clone(), self.labels.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(x: i64) -> GroupElement {
        GroupElement::abelian(&[x])
    }

    fn sl2_z() -> GradedAlgebra {
        let l = LieAlgebra::from_int_table(
            3,
            &[(0, 1, &[0, 2, 0]), (0, 2, &[0, 0, -2]), (1, 2, &[1, 0, 0])],
        )
        .unwrap();
        GradedAlgebra::new(l, GroupContext::z(), vec![z(0), z(1), z(-1)]).unwrap()
    }

    fn span(rows: &[&[i64]]) -> Subspace {
        Subspace::span(3, rows.iter().map(|r| Vector::from_ints(r))).unwrap()
    }

    #[test]
    fn abelian_any_labels_valid() {
        let a = GradedAlgebra::new(
            LieAlgebra::abelian(3),
            GroupContext::Free { rank: 2 },
            ["a", "b", "ab"].iter().map(|s| GroupElement::word(s).unwrap()).collect(),
        )
        .unwrap();
        assert!(a.validate_grading().is_valid());
    }

    #[test]
    fn sl2_z_grading() {
        let a = sl2_z();
        assert!(a.validate_grading().is_valid());
        assert_eq!(a.component(&z(0)), span(&[&[1, 0, 0]]));
        assert_eq!(a.component(&z(1)), span(&[&[0, 1, 0]]));
        assert!(a.component(&z(5)).is_zero());
        assert_eq!(a.support(), vec![z(-1), z(0), z(1)]);
    }

    #[test]
    fn wrong_labels_rejected() {
        let a = sl2_z();
        let bad = GradedAlgebra::new(a.algebra().clone(), GroupContext::z(), vec![z(0), z(1), z(1)])
            .unwrap();
        let report = bad.validate_grading();
        assert!(!report.is_valid());
        // [e, f] = h must lie in L_2, but h is labelled 0
        assert_eq!(report.violations[0].pair, (1, 2));
        assert_eq!(report.violations[0].offending, vec![0]);
        assert!(matches!(bad.validate(), Err(Error::InvalidGrading { .. })));
    }

    #[test]
    fn structural_checks() {
        let a = sl2_z();
        assert!(GradedAlgebra::new(a.algebra().clone(), GroupContext::z(), vec![z(0)]).is_err());
        assert!(GradedAlgebra::new(
            a.algebra().clone(),
            GroupContext::z(),
            vec![z(0), z(1), GroupElement::abelian(&[1, 1])]
        )
        .is_err());
    }

    #[test]
    fn element_supports() {
        let a = sl2_z();
        assert!(a.element_support(&Vector::zeros(3)).unwrap().is_empty());
        let ef = a.element_support(&Vector::from_ints(&[0, 1, 1])).unwrap();
        assert_eq!(ef.into_iter().collect::<Vec<_>>(), vec![z(-1), z(1)]);
        let h = a.element_support(&Vector::from_ints(&[1, 0, 0])).unwrap();
        assert_eq!(h.into_iter().collect::<Vec<_>>(), vec![z(0)]);
        assert!(a.element_support(&Vector::zeros(2)).is_err());
    }

    #[test]
    fn graded_ideals() {
        let a = sl2_z();
        assert!(a.is_graded_ideal(&Subspace::zero(3)).unwrap());
        assert!(a.is_graded_ideal(&Subspace::full(3)).unwrap());
        assert!(!a.is_graded_ideal(&span(&[&[0, 1, 1]])).unwrap());

        let h3 = GradedAlgebra::new(
            LieAlgebra::from_int_table(3, &[(0, 1, &[0, 0, 1])]).unwrap(),
            GroupContext::FreeAbelian { rank: 2 },
            vec![
                GroupElement::abelian(&[1, 0]),
                GroupElement::abelian(&[0, 1]),
                GroupElement::abelian(&[1, 1]),
            ],
        )
        .unwrap();
        assert!(h3.is_graded_ideal(&span(&[&[0, 0, 1]])).unwrap());
        // an ideal that is not a sum of homogeneous parts
        assert!(h3.algebra().is_ideal(&span(&[&[1, 1, 0], &[0, 0, 1]])).unwrap());
        assert!(!h3.is_graded_ideal(&span(&[&[1, 1, 0], &[0, 0, 1]])).unwrap());
    }

    #[test]
    fn nested_brackets() {
        let a = sl2_z();
        assert_eq!(a.nested_bracket(&[z(1)]).unwrap(), a.component(&z(1)));
        assert_eq!(a.nested_bracket(&[z(1), z(-1)]).unwrap(), span(&[&[1, 0, 0]]));
        assert!(a.nested_bracket(&[z(1), z(1)]).unwrap().is_zero());
        assert!(a.nested_bracket(&[z(0), z(1), z(-1)]).unwrap().is_zero());
        assert_eq!(a.nested_bracket(&[z(1), z(0), z(-1)]).unwrap(), span(&[&[1, 0, 0]]));
        assert_eq!(a.nested_bracket(&[]), Err(Error::EmptyTuple));
    }
}
