//! Executable checks for abelian gradings.
//!
//! For a Lie algebra graded by a group `G`:
//!
//! * **Property (\*)**: if `[L_{g_1}, [L_{g_2}, [..., L_{g_n}]]] != 0` then all
//!   the `g_i` commute pairwise. [`check_star`] and [`star_sweep`] test it on
//!   concrete tuples and [`star_trace`] replays its inductive proof.
//! * **Orthogonality**: if `g g' != g' g` then the ideals generated by `L_g`
//!   and `L_{g'}` bracket to zero. [`check_proposition`] builds a
//!   [`Certificate`] for every noncommuting pair of the support.
//! * **Abelian support**: a graded-prime algebra (no nonzero graded ideals
//!   `I`, `J` with `[I, J] = 0`) has a support generating an abelian group.
//!   [`support_subgroup_report`] produces the contrapositive witness.
//!
//! Theorem failures on valid input are returned as [`Finding`]s instead of
//! panics so callers can report them with context.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::grading::GradedAlgebra;
use crate::group::{pairwise_commutation, GroupElement};
use crate::linalg::Subspace;

pub const DEFAULT_MAX_LEN: usize = 4;
pub const DEFAULT_TUPLE_BUDGET: u64 = 100_000;

/// Enumeration limits for tuple scans.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanConfig {
    pub max_len: usize,
    pub tuple_budget: u64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            max_len: DEFAULT_MAX_LEN,
            tuple_budget: DEFAULT_TUPLE_BUDGET,
        }
    }
}

/// A theorem violation observed on input that passed validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Finding {
    pub check: &'static str,
    pub message: String,
}

fn show_tuple(gs: &[GroupElement]) -> String {
    let parts: Vec<String> = gs.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarResult {
    pub tuple: Vec<GroupElement>,
    pub bracket_dim: usize,
    /// Positions of a noncommuting pair inside a nonzero bracket. Never
    /// present for a valid grading.
    pub violating_pair: Option<(usize, usize)>,
}

fn first_noncommuting(a: &GradedAlgebra, gs: &[GroupElement]) -> Result<Option<(usize, usize)>> {
    for i in 0..gs.len() {
        for j in i + 1..gs.len() {
            if !a.ctx().commute(&gs[i], &gs[j])? {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

pub fn check_star(a: &GradedAlgebra, gs: &[GroupElement]) -> Result<StarResult> {
    let bracket = a.nested_bracket(gs)?;
    let violating_pair = if bracket.is_zero() {
        None
    } else {
        first_noncommuting(a, gs)?
    };
    Ok(StarResult {
        tuple: gs.to_vec(),
        bracket_dim: bracket.dim(),
        violating_pair,
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StarSweep {
    /// Tuples with a nonzero nested bracket, in canonical order.
    pub results: Vec<StarResult>,
    pub tuples_examined: u64,
    pub truncated: bool,
    pub warning: Option<String>,
}

impl StarSweep {
    pub fn violations(&self) -> impl Iterator<Item = &StarResult> {
        self.results.iter().filter(|r| r.violating_pair.is_some())
    }
}

/// Number of tuples of lengths `lengths` over an alphabet of size `s`, saturating.
fn tuple_count(s: u64, lengths: std::ops::RangeInclusive<usize>) -> u64 {
    lengths.fold(0u64, |acc, n| acc.saturating_add(s.saturating_pow(n as u32)))
}

/// Decodes a mixed-radix index into support positions, most significant first.
fn decode(mut idx: usize, base: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = idx % base;
        idx /= base;
    }
    out
}

/// Evaluates [`check_star`] on every tuple over the support of length
/// `2..=max_len`, ordered by length and then lexicographically.
///
/// Nested brackets of length `n` reuse the suffix brackets of length `n - 1`.
/// At most `tuple_budget` tuples are examined; the sweep is marked truncated
/// when that limit cuts enumeration short.
pub fn star_sweep(a: &GradedAlgebra, config: ScanConfig) -> Result<StarSweep> {
    let support = a.support();
    let s = support.len();
    let mut sweep = StarSweep::default();
    if config.max_len < 2 || s == 0 {
        return Ok(sweep);
    }
    let total = tuple_count(s as u64, 2..=config.max_len);
    if total > config.tuple_budget {
        sweep.warning = Some(format!(
            "{total} tuples over a support of size {s} exceed the budget of {}; scanning the first {}",
            config.tuple_budget, config.tuple_budget
        ));
    }
    let commutes = commutation_table(a, &support)?;
    let components: Vec<Subspace> = support.iter().map(|g| a.component(g)).collect();
    let mut previous = components.clone();
    'lengths: for n in 2..=config.max_len {
        let count = s.pow(n as u32 - 1);
        let mut current = Vec::with_capacity(count * s);
        for (head, component) in components.iter().enumerate() {
            for (rest, suffix) in previous.iter().enumerate() {
                if sweep.tuples_examined >= config.tuple_budget {
                    sweep.truncated = true;
                    break 'lengths;
                }
                sweep.tuples_examined += 1;
                let bracket = if suffix.is_zero() {
                    Subspace::zero(a.dim())
                } else {
                    a.algebra().bracket_sub(component, suffix)?
                };
                if !bracket.is_zero() {
                    let mut positions = vec![head];
                    positions.extend(decode(rest, s, n - 1));
                    let violating_pair = (0..n)
                        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                        .find(|&(i, j)| !commutes[positions[i]][positions[j]]);
                    sweep.results.push(StarResult {
                        tuple: positions.iter().map(|&p| support[p].clone()).collect(),
                        bracket_dim: bracket.dim(),
                        violating_pair,
                    });
                }
                current.push(bracket);
            }
        }
        previous = current;
    }
    Ok(sweep)
}

fn commutation_table(a: &GradedAlgebra, elems: &[GroupElement]) -> Result<Vec<Vec<bool>>> {
    elems
        .iter()
        .map(|g| elems.iter().map(|h| a.ctx().commute(g, h)).collect())
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceKind {
    /// `0 != [L_x, L_y] ⊆ L_{xy} ∩ L_{yx}` forces `xy = yx`.
    Base,
    /// `[[L_{g1}, L_{g2}], [...]] != 0`.
    BranchA,
    /// `[L_{g2}, [L_{g1}, [...]]] != 0`.
    BranchB,
    /// Neither Jacobi branch is nonzero although the parent bracket is.
    Inconsistent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub depth: usize,
    pub tuple: Vec<GroupElement>,
    pub kind: TraceKind,
    pub text: String,
    /// Commutations concluded at this step, each checked in the group.
    pub conclusions: Vec<(GroupElement, GroupElement)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarTrace {
    pub tuple: Vec<GroupElement>,
    pub bracket_dim: usize,
    pub steps: Vec<TraceStep>,
    /// Position pairs `(i, j)`, `i < j`, proved to commute.
    pub pairs: Vec<(usize, usize)>,
    pub findings: Vec<Finding>,
}

impl StarTrace {
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "trace of {}: nested bracket of dimension {}",
            show_tuple(&self.tuple),
            self.bracket_dim
        );
        for step in &self.steps {
            let indent = "  ".repeat(step.depth + 1);
            let _ = writeln!(out, "{indent}{}", step.text);
            for (x, y) in &step.conclusions {
                let _ = writeln!(out, "{indent}  => {x} and {y} commute");
            }
        }
        let pairs: Vec<String> = self
            .pairs
            .iter()
            .map(|(i, j)| format!("g{}g{}=g{}g{}", i + 1, j + 1, j + 1, i + 1))
            .collect();
        let _ = writeln!(out, "pairwise commutations: {}", pairs.join(", "));
        for f in &self.findings {
            let _ = writeln!(out, "FINDING [{}]: {}", f.check, f.message);
        }
        out
    }
}

struct Tracer<'a> {
    a: &'a GradedAlgebra,
    steps: Vec<TraceStep>,
    findings: Vec<Finding>,
}

impl Tracer<'_> {
    fn conclude(&mut self, x: &GroupElement, y: &GroupElement) -> Result<(GroupElement, GroupElement)> {
        if !self.a.ctx().commute(x, y)? {
            self.findings.push(Finding {
                check: "star-trace",
                message: format!("derived that {x} and {y} commute, but they do not"),
            });
        }
        Ok((x.clone(), y.clone()))
    }

    fn base(&mut self, depth: usize, x: &GroupElement, y: &GroupElement, why: &str) -> Result<()> {
        let ctx = self.a.ctx();
        let text = format!(
            "base case {}: {why}0 != [L_{x}, L_{y}] lies in L_{} ∩ L_{}, so g1g2=g2g1",
            show_tuple(&[x.clone(), y.clone()]),
            ctx.mul(x, y)?,
            ctx.mul(y, x)?,
        );
        let c = self.conclude(x, y)?;
        self.steps.push(TraceStep {
            depth,
            tuple: vec![x.clone(), y.clone()],
            kind: TraceKind::Base,
            text,
            conclusions: vec![c],
        });
        Ok(())
    }

    /// Replays the induction on a tuple whose nested bracket is nonzero and
    /// returns the position pairs it proves to commute.
    fn derive(&mut self, gs: &[GroupElement], depth: usize) -> Result<Vec<(usize, usize)>> {
        let n = gs.len();
        if n == 2 {
            self.base(depth, &gs[0], &gs[1], "")?;
            return Ok(vec![(0, 1)]);
        }
        let a = self.a;
        let lie = a.algebra();
        let header = self.steps.len();
        self.steps.push(TraceStep {
            depth,
            tuple: gs.to_vec(),
            kind: TraceKind::Inconsistent,
            text: String::new(),
            conclusions: Vec::new(),
        });

        // (1): the tail tuple has a nonzero bracket, so its labels commute.
        let tail_pairs = self.derive(&gs[1..], depth + 1)?;
        let mut pairs: Vec<(usize, usize)> = tail_pairs.iter().map(|&(i, j)| (i + 1, j + 1)).collect();

        let l1 = a.component(&gs[0]);
        let l2 = a.component(&gs[1]);
        let z = a.nested_bracket(&gs[2..])?;
        let head = lie.bracket_sub(&l1, &l2)?;
        let branch_a = lie.bracket_sub(&head, &z)?;
        let ctx = a.ctx();
        let rest = show_tuple(&gs[2..]);

        if !branch_a.is_zero() {
            self.steps[header].kind = TraceKind::BranchA;
            self.steps[header].text = format!(
                "level n={n} {}: hypothesis (1) on the tail; Jacobi branch a) 0 != [[L_{}, L_{}], {rest}]",
                show_tuple(gs),
                gs[0],
                gs[1]
            );
            self.base(depth + 1, &gs[0], &gs[1], "[L_g1, L_g2] != 0; ")?;
            let g12 = ctx.mul(&gs[0], &gs[1])?;
            let mut reduced = vec![g12.clone()];
            reduced.extend_from_slice(&gs[2..]);
            if a.nested_bracket(&reduced)?.is_zero() {
                self.findings.push(Finding {
                    check: "star-trace",
                    message: format!(
                        "{} vanishes although it contains the nonzero branch a) bracket",
                        show_tuple(&reduced)
                    ),
                });
            } else {
                self.derive(&reduced, depth + 1)?;
            }
            let mut concl = Vec::new();
            for g in &gs[2..] {
                concl.push(self.conclude(&gs[0], g)?);
            }
            self.steps.push(TraceStep {
                depth: depth + 1,
                tuple: gs.to_vec(),
                kind: TraceKind::BranchA,
                text: format!(
                    "{g12} and {} commute with every g_k, k>=3; multiplying by {}^-1 on the right gives g1g_k=g_kg1",
                    gs[1], gs[1]
                ),
                conclusions: concl,
            });
        } else {
            let inner = lie.bracket_sub(&l1, &z)?;
            let branch_b = lie.bracket_sub(&l2, &inner)?;
            if branch_b.is_zero() {
                self.steps[header].text = format!(
                    "level n={n} {}: neither Jacobi branch is nonzero",
                    show_tuple(gs)
                );
                self.findings.push(Finding {
                    check: "star-trace",
                    message: format!(
                        "both Jacobi branches of {} vanish while the bracket does not",
                        show_tuple(gs)
                    ),
                });
                return Ok(pairs);
            }
            self.steps[header].kind = TraceKind::BranchB;
            self.steps[header].text = format!(
                "level n={n} {}: hypothesis (1) on the tail; Jacobi branch b) [L_{}, [L_{}, {rest}]] != 0",
                show_tuple(gs),
                gs[1],
                gs[0]
            );
            let h = ctx.product(&gs[2..])?;
            self.steps.push(TraceStep {
                depth: depth + 1,
                tuple: gs.to_vec(),
                kind: TraceKind::BranchB,
                text: format!("take h = g3...gn = {h}"),
                conclusions: Vec::new(),
            });
            self.base(depth + 1, &gs[0], &h, "[L_g1, L_h] contains [L_g1, tail] != 0; ")?;
            let g1h = ctx.mul(&gs[0], &h)?;
            self.base(depth + 1, &gs[1], &g1h, "[L_g2, L_g1h] contains branch b) != 0; ")?;
            let mut skip = vec![gs[0].clone()];
            skip.extend_from_slice(&gs[2..]);
            self.derive(&skip, depth + 1)?;
            let c = self.conclude(&gs[0], &gs[1])?;
            self.steps.push(TraceStep {
                depth: depth + 1,
                tuple: gs.to_vec(),
                kind: TraceKind::BranchB,
                text: format!(
                    "g2(g1h) = (g1h)g2 = g1g2h by (1), hence {}{}={}{}",
                    gs[0], gs[1], gs[1], gs[0]
                ),
                conclusions: vec![c],
            });
        }
        pairs.push((0, 1));
        pairs.extend((2..n).map(|k| (0, k)));
        pairs.sort_unstable();
        Ok(pairs)
    }
}

/// Replays the inductive proof of property (\*) on `gs`, choosing branch a)
/// whenever `[[L_{g1}, L_{g2}], ...]` is nonzero and branch b) otherwise.
pub fn star_trace(a: &GradedAlgebra, gs: &[GroupElement]) -> Result<StarTrace> {
    let bracket = a.nested_bracket(gs)?;
    if bracket.is_zero() {
        return Err(Error::ZeroBracket(show_tuple(gs)));
    }
    let mut tracer = Tracer {
        a,
        steps: Vec::new(),
        findings: Vec::new(),
    };
    let pairs = if gs.len() == 1 {
        Vec::new()
    } else {
        tracer.derive(gs, 0)?
    };
    Ok(StarTrace {
        tuple: gs.to_vec(),
        bracket_dim: bracket.dim(),
        steps: tracer.steps,
        pairs,
        findings: tracer.findings,
    })
}

/// What generated one of a certificate's ideals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealSource {
    /// The ideal generated by a basis vector.
    Basis(usize),
    /// The ideal generated by a homogeneous component.
    Component(GroupElement),
}

/// A witness that an algebra is not graded-prime: two nonzero graded ideals
/// with zero bracket.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    /// The noncommuting pair, for certificates of the orthogonality theorem.
    pub pair: Option<(GroupElement, GroupElement)>,
    pub sources: (IdealSource, IdealSource),
    pub ideal_i: Subspace,
    pub ideal_j: Subspace,
    pub ideals_nonzero: bool,
    pub bracket_zero: bool,
    pub ideals_graded: bool,
}

/// Independent recomputation of a certificate's claims.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateCheck {
    pub ideals_nonzero: bool,
    pub bracket_zero: bool,
    pub ideals_graded: bool,
    /// The pair does not commute (vacuously true without a pair).
    pub pair_noncommuting: bool,
    /// Each ideal contains the subspace it claims to be generated by.
    pub sources_contained: bool,
    /// The flags stored in the certificate agree with the recomputation.
    pub flags_consistent: bool,
}

impl CertificateCheck {
    pub fn is_valid(&self) -> bool {
        self.ideals_nonzero
            && self.bracket_zero
            && self.ideals_graded
            && self.pair_noncommuting
            && self.sources_contained
            && self.flags_consistent
    }

    pub fn failures(&self) -> Vec<&'static str> {
        [
            (self.ideals_nonzero, "an ideal is zero"),
            (self.bracket_zero, "the ideals do not bracket to zero"),
            (self.ideals_graded, "an ideal is not a graded ideal"),
            (self.pair_noncommuting, "the pair commutes"),
            (self.sources_contained, "an ideal misses its generating subspace"),
            (self.flags_consistent, "recorded flags disagree with recomputation"),
        ]
        .into_iter()
        .filter(|(ok, _)| !ok)
        .map(|(_, why)| why)
        .collect()
    }
}

fn source_subspace(a: &GradedAlgebra, src: &IdealSource) -> Result<Subspace> {
    match src {
        IdealSource::Basis(i) if *i < a.dim() => Ok(Subspace::coordinate(a.dim(), [*i])),
        IdealSource::Basis(i) => Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: *i + 1,
        }),
        IdealSource::Component(g) => {
            a.ctx().conforms(g)?;
            Ok(a.component(g))
        }
    }
}

fn brackets_vanish(a: &GradedAlgebra, u: &Subspace, v: &Subspace) -> Result<bool> {
    for x in u.basis() {
        for y in v.basis() {
            if !a.algebra().bracket(x, y)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

impl Certificate {
    /// Computes the flags for the given ideals.
    pub fn new(
        a: &GradedAlgebra,
        pair: Option<(GroupElement, GroupElement)>,
        sources: (IdealSource, IdealSource),
        ideal_i: Subspace,
        ideal_j: Subspace,
    ) -> Result<Certificate> {
        Ok(Certificate {
            ideals_nonzero: !ideal_i.is_zero() && !ideal_j.is_zero(),
            bracket_zero: brackets_vanish(a, &ideal_i, &ideal_j)?,
            ideals_graded: a.is_graded_ideal(&ideal_i)? && a.is_graded_ideal(&ideal_j)?,
            pair,
            sources,
            ideal_i,
            ideal_j,
        })
    }

    /// Validity from the stored flags alone.
    pub fn claims_valid(&self) -> bool {
        self.ideals_nonzero && self.bracket_zero && self.ideals_graded
    }

    /// Re-verifies every claim against `a` from scratch.
    pub fn verify(&self, a: &GradedAlgebra) -> Result<CertificateCheck> {
        let n = a.dim();
        for ideal in [&self.ideal_i, &self.ideal_j] {
            if ideal.ambient_dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: ideal.ambient_dim(),
                });
            }
        }
        let fresh = Certificate::new(
            a,
            self.pair.clone(),
            self.sources.clone(),
            self.ideal_i.clone(),
            self.ideal_j.clone(),
        )?;
        let pair_noncommuting = match &self.pair {
            Some((g, h)) => !a.ctx().commute(g, h)?,
            None => true,
        };
        let sources_contained = source_subspace(a, &self.sources.0)?.is_subspace_of(&self.ideal_i)?
            && source_subspace(a, &self.sources.1)?.is_subspace_of(&self.ideal_j)?;
        Ok(CertificateCheck {
            ideals_nonzero: fresh.ideals_nonzero,
            bracket_zero: fresh.bracket_zero,
            ideals_graded: fresh.ideals_graded,
            pair_noncommuting,
            sources_contained,
            flags_consistent: fresh.ideals_nonzero == self.ideals_nonzero
                && fresh.bracket_zero == self.bracket_zero
                && fresh.ideals_graded == self.ideals_graded,
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PropositionCheck {
    pub certificates: Vec<Certificate>,
    pub findings: Vec<Finding>,
}

fn pair_certificate(a: &GradedAlgebra, g: &GroupElement, h: &GroupElement) -> Result<Certificate> {
    let lie = a.algebra();
    Certificate::new(
        a,
        Some((g.clone(), h.clone())),
        (IdealSource::Component(g.clone()), IdealSource::Component(h.clone())),
        lie.ideal_closure(&a.component(g))?,
        lie.ideal_closure(&a.component(h))?,
    )
}

/// Builds a certificate for every noncommuting pair of the support, in
/// canonical order. Invalid certificates become findings.
pub fn check_proposition(a: &GradedAlgebra) -> Result<PropositionCheck> {
    a.validate()?;
    let support = a.support();
    let mut out = PropositionCheck::default();
    for (i, g) in support.iter().enumerate() {
        for h in &support[i + 1..] {
            if a.ctx().commute(g, h)? {
                continue;
            }
            let cert = pair_certificate(a, g, h)?;
            if !cert.claims_valid() {
                out.findings.push(Finding {
                    check: "proposition",
                    message: format!(
                        "certificate for noncommuting pair ({g}, {h}) is invalid: nonzero={} bracket_zero={} graded={}",
                        cert.ideals_nonzero, cert.bracket_zero, cert.ideals_graded
                    ),
                });
            }
            out.certificates.push(cert);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosingReport {
    pub pair: (GroupElement, GroupElement),
    pub max_len: usize,
    pub tuples_checked: u64,
    /// Middle tuples `(g_1, ..., g_n)` with a nonzero bracket.
    pub violations: Vec<Vec<GroupElement>>,
    pub truncated: bool,
}

/// Checks `[L_{g'}, [L_{g_1}, [..., [L_{g_n}, L_g]]]] = 0` for every middle
/// tuple over the support with `0 <= n <= max_len`.
pub fn final_identity_check(
    a: &GradedAlgebra,
    g: &GroupElement,
    g_prime: &GroupElement,
    max_len: usize,
    tuple_budget: u64,
) -> Result<ClosingReport> {
    let ctx = a.ctx();
    if ctx.commute(g, g_prime)? {
        return Err(Error::CommutingPair(g.to_string(), g_prime.to_string()));
    }
    let support = a.support();
    for x in [g, g_prime] {
        if !support.contains(x) {
            return Err(Error::NotInSupport(x.to_string()));
        }
    }
    let s = support.len();
    let lie = a.algebra();
    let components: Vec<Subspace> = support.iter().map(|x| a.component(x)).collect();
    let outer = a.component(g_prime);
    let mut report = ClosingReport {
        pair: (g.clone(), g_prime.clone()),
        max_len,
        tuples_checked: 0,
        violations: Vec::new(),
        truncated: false,
    };
    // inner[k] = [L_{g_1}, [..., [L_{g_n}, L_g]]] for the k-th tuple of length n
    let mut inner = vec![a.component(g)];
    'lengths: for n in 0..=max_len {
        if n > 0 {
            let mut next = Vec::with_capacity(inner.len() * s);
            for comp in &components {
                for suffix in &inner {
                    next.push(lie.bracket_sub(comp, suffix)?);
                }
            }
            inner = next;
        }
        for (k, suffix) in inner.iter().enumerate() {
            if report.tuples_checked >= tuple_budget {
                report.truncated = true;
                break 'lengths;
            }
            report.tuples_checked += 1;
            if !lie.bracket_sub(&outer, suffix)?.is_zero() {
                report
                    .violations
                    .push(decode(k, s, n).into_iter().map(|p| support[p].clone()).collect());
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportReport {
    pub abelian: bool,
    pub violation: Option<(GroupElement, GroupElement)>,
    /// Orthogonal graded ideals for the violating pair: proof that the algebra
    /// is not graded-prime.
    pub certificate: Option<Certificate>,
}

pub fn support_subgroup_report(a: &GradedAlgebra) -> Result<SupportReport> {
    let report = pairwise_commutation(a.ctx(), &a.support())?;
    let certificate = match &report.first_violation {
        Some((g, h)) => Some(pair_certificate(a, g, h)?),
        None => None,
    };
    Ok(SupportReport {
        abelian: report.all_commute,
        violation: report.first_violation,
        certificate,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeScanVerdict {
    NotGradedPrime(Certificate),
    /// The finite candidate family holds no orthogonal pair. This does not
    /// establish graded-primeness.
    NoWitnessFound { candidates_examined: usize },
}

/// Searches ideals generated by single basis vectors and by homogeneous
/// components for a nonzero orthogonal graded pair (`I = J` allowed).
///
/// Distinct candidates are scanned in subspace order (dimension first), so
/// the smallest witness is reported.
pub fn prime_scan(a: &GradedAlgebra) -> Result<PrimeScanVerdict> {
    let lie = a.algebra();
    let mut candidates: Vec<(Subspace, IdealSource)> = Vec::new();
    let mut push = |ideal: Subspace, src: IdealSource| {
        if !candidates.iter().any(|(c, _)| *c == ideal) {
            candidates.push((ideal, src));
        }
    };
    for i in 0..a.dim() {
        push(lie.ideal_closure(&Subspace::coordinate(a.dim(), [i]))?, IdealSource::Basis(i));
    }
    for g in a.support() {
        push(lie.ideal_closure(&a.component(&g))?, IdealSource::Component(g));
    }
    candidates.sort_by(|x, y| x.0.cmp(&y.0));
    for (k, (u, su)) in candidates.iter().enumerate() {
        if u.is_zero() || !a.is_graded_ideal(u)? {
            continue;
        }
        for (v, sv) in &candidates[k..] {
            if v.is_zero() || !brackets_vanish(a, u, v)? || !a.is_graded_ideal(v)? {
                continue;
            }
            let cert = Certificate::new(a, None, (su.clone(), sv.clone()), u.clone(), v.clone())?;
            return Ok(PrimeScanVerdict::NotGradedPrime(cert));
        }
    }
    Ok(PrimeScanVerdict::NoWitnessFound {
        candidates_examined: candidates.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;
    use crate::linalg::Vector;

    fn z(x: i64) -> GroupElement {
        GroupElement::abelian(&[x])
    }

    fn t(x: &[usize]) -> GroupElement {
        GroupElement::cycles(3, &[x]).unwrap()
    }

    #[test]
    fn star_on_sl2_tuples() {
        let a = constructions::sl2_z();
        let r = check_star(&a, &[z(1), z(0), z(-1)]).unwrap();
        assert_eq!((r.bracket_dim, r.violating_pair), (1, None));
        assert_eq!(check_star(&a, &[z(0), z(1), z(-1)]).unwrap().bracket_dim, 0);
    }

    #[test]
    fn sweep_counts_and_budget() {
        let a = constructions::sl2_z();
        let sweep = star_sweep(&a, ScanConfig::default()).unwrap();
        assert_eq!(sweep.tuples_examined, 9 + 27 + 81);
        assert!(!sweep.truncated && sweep.warning.is_none());
        assert_eq!(sweep.violations().count(), 0);
        assert!(sweep.results.iter().any(|r| r.tuple.len() == 3));

        let cut = star_sweep(&a, ScanConfig { max_len: 4, tuple_budget: 20 }).unwrap();
        assert!(cut.truncated && cut.warning.is_some());
        assert_eq!(cut.tuples_examined, 20);

        let short = star_sweep(&a, ScanConfig { max_len: 1, tuple_budget: 10 }).unwrap();
        assert_eq!(short, StarSweep::default());
    }

    #[test]
    fn trace_branch_a() {
        let a = constructions::sl2_z();
        let trace = star_trace(&a, &[z(1), z(0), z(-1)]).unwrap();
        assert!(trace.findings.is_empty());
        assert_eq!(trace.steps[0].kind, TraceKind::BranchA);
        assert_eq!(trace.steps.iter().map(|s| s.depth).max(), Some(1));
        assert_eq!(trace.pairs, vec![(0, 1), (0, 2), (1, 2)]);
        let text = trace.render();
        assert!(text.contains("pairwise commutations: g1g2=g2g1, g1g3=g3g1, g2g3=g3g2"), "{text}");
    }

    #[test]
    fn trace_branch_b() {
        // [[e, f], h] = 0, so the trace must take [f, [e, h]] = 2h
        let a = constructions::sl2_z();
        let trace = star_trace(&a, &[z(1), z(-1), z(0)]).unwrap();
        assert!(trace.findings.is_empty());
        assert_eq!(trace.steps[0].kind, TraceKind::BranchB);
        assert_eq!(trace.pairs, vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn trace_base_case_pauli() {
        let a = constructions::sl2_pauli();
        let s = a.support();
        let trace = star_trace(&a, &s[..2]).unwrap();
        assert_eq!(trace.steps.len(), 1);
        assert_eq!(trace.steps[0].kind, TraceKind::Base);
        assert!(trace.steps[0].text.contains("g1g2=g2g1"));
        assert!(matches!(
            star_trace(&constructions::sl2_z(), &[z(1), z(1)]),
            Err(Error::ZeroBracket(_))
        ));
    }

    #[test]
    fn s3_witness_certificate() {
        let a = constructions::s3_witness();
        let check = check_proposition(&a).unwrap();
        assert!(check.findings.is_empty());
        assert_eq!(check.certificates.len(), 1);
        let cert = &check.certificates[0];
        assert_eq!(cert.pair, Some((t(&[1, 2]), t(&[1, 3]))));
        assert!(cert.claims_valid());
        assert!(cert.verify(&a).unwrap().is_valid());

        let mut tampered = cert.clone();
        let rows = tampered.ideal_i.basis()[1..].to_vec();
        tampered.ideal_i = Subspace::span(a.dim(), rows).unwrap();
        let verdict = tampered.verify(&a).unwrap();
        assert!(!verdict.is_valid());
        assert!(!verdict.failures().is_empty());

        let mut commuting = cert.clone();
        commuting.pair = Some((t(&[1, 2]), t(&[1, 2])));
        assert!(!commuting.verify(&a).unwrap().pair_noncommuting);

        let wrong = constructions::sl2_z();
        assert!(matches!(cert.verify(&wrong), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn closing_identity_counts() {
        let a = constructions::s3_witness();
        let r = final_identity_check(&a, &t(&[1, 2]), &t(&[1, 3]), 2, 1000).unwrap();
        assert_eq!(r.tuples_checked, 13);
        assert!(r.violations.is_empty() && !r.truncated);
        let cut = final_identity_check(&a, &t(&[1, 2]), &t(&[1, 3]), 2, 5).unwrap();
        assert!(cut.truncated);
        assert_eq!(cut.tuples_checked, 5);
        assert!(matches!(
            final_identity_check(&a, &t(&[1, 2]), &t(&[1, 2]), 2, 10),
            Err(Error::CommutingPair(..))
        ));
        assert!(matches!(
            final_identity_check(&a, &t(&[1, 2]), &t(&[2, 3]), 2, 10),
            Err(Error::NotInSupport(_))
        ));
    }

    #[test]
    fn support_reports() {
        for a in [constructions::sl2_z(), constructions::sl2_pauli(), constructions::heisenberg()] {
            let r = support_subgroup_report(&a).unwrap();
            assert!(r.abelian && r.violation.is_none() && r.certificate.is_none());
        }
        let r = support_subgroup_report(&constructions::free_witness()).unwrap();
        assert!(!r.abelian);
        assert!(r.certificate.unwrap().claims_valid());
    }

    #[test]
    fn prime_scans() {
        let h = constructions::heisenberg();
        let PrimeScanVerdict::NotGradedPrime(cert) = prime_scan(&h).unwrap() else {
            panic!("heisenberg has an orthogonal pair");
        };
        let center = Subspace::span(3, [Vector::from_ints(&[0, 0, 1])]).unwrap();
        assert_eq!((&cert.ideal_i, &cert.ideal_j), (&center, &center));
        assert!(cert.verify(&h).unwrap().is_valid());

        assert_eq!(
            prime_scan(&constructions::sl2_z()).unwrap(),
            PrimeScanVerdict::NoWitnessFound { candidates_examined: 1 }
        );
        assert_eq!(
            prime_scan(&constructions::zero_algebra(crate::GroupContext::z())).unwrap(),
            PrimeScanVerdict::NoWitnessFound { candidates_examined: 0 }
        );
    }
}
