//! Hand-checked graded algebras and constructions that preserve validity:
//! direct sums along group homomorphisms, homogeneous changes of basis, and a
//! seeded random generator built from those two.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::grading::GradedAlgebra;
use crate::group::{GroupContext, GroupElement};
use crate::lie::LieAlgebra;
use crate::linalg::{invert, rat, Vector};

/// A map of group elements, applied to basis labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    source: GroupContext,
    target: GroupContext,
    images: BTreeMap<GroupElement, GroupElement>,
}

impl Embedding {
    pub fn new(
        source: GroupContext,
        target: GroupContext,
        pairs: impl IntoIterator<Item = (GroupElement, GroupElement)>,
    ) -> Result<Embedding> {
        let mut images = BTreeMap::new();
        for (g, x) in pairs {
            source.conforms(&g)?;
            target.conforms(&x)?;
            images.insert(g, x);
        }
        Ok(Embedding {
            source,
            target,
            images,
        })
    }

    /// The map sending the `k`-th standard generator of `source` to
    /// `generator_images[k]`, evaluated on `domain`.
    pub fn from_generators(
        source: GroupContext,
        target: GroupContext,
        generator_images: &[GroupElement],
        domain: &[GroupElement],
    ) -> Result<Embedding> {
        let gens = source.generators();
        if gens.len() != generator_images.len() {
            return Err(Error::DimensionMismatch {
                expected: gens.len(),
                found: generator_images.len(),
            });
        }
        let mut pairs = Vec::with_capacity(domain.len());
        for g in domain {
            let mut image = target.identity();
            for (k, e) in source.word_in_generators(g)? {
                image = target.mul(&image, &target.pow(&generator_images[k], e)?)?;
            }
            pairs.push((g.clone(), image));
        }
        Embedding::new(source, target, pairs)
    }

    pub fn identity(ctx: &GroupContext, domain: &[GroupElement]) -> Result<Embedding> {
        Embedding::new(
            ctx.clone(),
            ctx.clone(),
            domain.iter().map(|g| (g.clone(), g.clone())),
        )
    }

    pub fn source(&self) -> &GroupContext {
        &self.source
    }

    pub fn target(&self) -> &GroupContext {
        &self.target
    }

    pub fn apply(&self, g: &GroupElement) -> Result<GroupElement> {
        self.images
            .get(g)
            .cloned()
            .ok_or_else(|| Error::Unmapped(g.to_string()))
    }

    /// Checks `image(g·h) = image(g)·image(h)` for all `g, h` among `labels`
    /// whose product is also among them.
    pub fn check_homomorphism(&self, labels: &[GroupElement]) -> Result<()> {
        let mut distinct = labels.to_vec();
        distinct.sort();
        distinct.dedup();
        for g in &distinct {
            self.apply(g)?;
        }
        for g in &distinct {
            for h in &distinct {
                let gh = self.source.mul(g, h)?;
                if distinct.binary_search(&gh).is_err() {
                    continue;
                }
                let lhs = self.apply(&gh)?;
                let rhs = self.target.mul(&self.apply(g)?, &self.apply(h)?)?;
                if lhs != rhs {
                    return Err(Error::NotHomomorphism(g.to_string(), h.to_string()));
                }
            }
        }
        Ok(())
    }
}

/// `A ⊕ B` with labels pushed into `target`; brackets across the summands vanish.
pub fn direct_sum(
    a: &GradedAlgebra,
    b: &GradedAlgebra,
    emb_a: &Embedding,
    emb_b: &Embedding,
    target: &GroupContext,
) -> Result<GradedAlgebra> {
    for (alg, emb) in [(a, emb_a), (b, emb_b)] {
        if emb.source() != alg.ctx() || emb.target() != target {
            return Err(Error::Conformance {
                element: format!("embedding {} -> {}", emb.source(), emb.target()),
                context: format!("{} -> {target}", alg.ctx()),
            });
        }
        emb.check_homomorphism(alg.labels())?;
    }
    let labels = a
        .labels()
        .iter()
        .map(|g| emb_a.apply(g))
        .chain(b.labels().iter().map(|g| emb_b.apply(g)))
        .collect::<Result<Vec<_>>>()?;
    let sum = GradedAlgebra::new(a.algebra().direct_sum(b.algebra()), target.clone(), labels)?;
    sum.validate()?;
    Ok(sum)
}

fn z(x: i64) -> GroupElement {
    GroupElement::abelian(&[x])
}

fn perm(cycles: &[&[usize]], n: usize) -> GroupElement {
    GroupElement::cycles(n, cycles).expect("valid cycle literal")
}

/// sl(2) on the basis `h, e, f`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_int_table(3, &[(0, 1, &[0, 2, 0]), (0, 2, &[0, 0, -2]), (1, 2, &[1, 0, 0])])
        .expect("sl2 constants")
}

/// sl(2) graded by Z: `h → 0, e → 1, f → -1`.
pub fn sl2_z() -> GradedAlgebra {
    GradedAlgebra::new(sl2(), GroupContext::z(), vec![z(0), z(1), z(-1)]).expect("sl2 grading")
}

/// sl(2) graded by Z/2 (as S2): `h` even, `e, f` odd.
pub fn sl2_z2() -> GradedAlgebra {
    let t = perm(&[&[1, 2]], 2);
    GradedAlgebra::new(sl2(), GroupContext::z2(), vec![perm(&[], 2), t.clone(), t])
        .expect("sl2 Z2 grading")
}

/// The Klein four-group as `S2 × S2`.
pub fn klein() -> GroupContext {
    GroupContext::Product(vec![GroupContext::z2(), GroupContext::z2()])
}

fn klein_element(x: bool, y: bool) -> GroupElement {
    let bit = |b: bool| if b { perm(&[&[1, 2]], 2) } else { perm(&[], 2) };
    GroupElement::Product(vec![bit(x), bit(y)])
}

/// sl(2) with the Pauli grading by Z/2 × Z/2. Basis `a = diag(1,-1)`,
/// `b = antidiag(1,1)`, `c = antidiag(1,-1)` (rows `[0,1],[-1,0]`).
pub fn sl2_pauli() -> GradedAlgebra {
    let l = LieAlgebra::from_int_table(
        3,
        &[(0, 1, &[0, 0, 2]), (0, 2, &[0, 2, 0]), (1, 2, &[-2, 0, 0])],
    )
    .expect("pauli constants");
    GradedAlgebra::new(
        l,
        klein(),
        vec![
            klein_element(true, false),
            klein_element(false, true),
            klein_element(true, true),
        ],
    )
    .expect("pauli grading")
}

/// The Heisenberg algebra `[x, y] = z`, graded by Z².
pub fn heisenberg() -> GradedAlgebra {
    GradedAlgebra::new(
        LieAlgebra::from_int_table(3, &[(0, 1, &[0, 0, 1])]).expect("heisenberg constants"),
        GroupContext::FreeAbelian { rank: 2 },
        vec![
            GroupElement::abelian(&[1, 0]),
            GroupElement::abelian(&[0, 1]),
            GroupElement::abelian(&[1, 1]),
        ],
    )
    .expect("heisenberg grading")
}

/// The two-dimensional nonabelian algebra `[x, y] = y`, graded by Z with
/// `x → 0, y → 1`.
pub fn affine_line() -> GradedAlgebra {
    GradedAlgebra::new(
        LieAlgebra::from_int_table(2, &[(0, 1, &[0, 1])]).expect("affine constants"),
        GroupContext::z(),
        vec![z(0), z(1)],
    )
    .expect("affine grading")
}

/// One-dimensional abelian algebra in degree 1 of Z.
pub fn line() -> GradedAlgebra {
    GradedAlgebra::new(LieAlgebra::abelian(1), GroupContext::z(), vec![z(1)]).expect("line")
}

pub fn zero_algebra(ctx: GroupContext) -> GradedAlgebra {
    GradedAlgebra::new(LieAlgebra::abelian(0), ctx, Vec::new()).expect("zero algebra")
}

/// Two copies of Z/2-graded sl(2) placed in S3 along `(1 2)` and `(1 3)`.
/// The support `{id, (1 2), (1 3)}` contains a noncommuting pair.
pub fn s3_witness() -> GradedAlgebra {
    let s3 = GroupContext::Permutation { degree: 3 };
    let block = sl2_z2();
    let along = |image: GroupElement| {
        Embedding::from_generators(GroupContext::z2(), s3.clone(), &[image], block.labels())
            .expect("Z2 embedding")
    };
    direct_sum(
        &block,
        &block,
        &along(perm(&[&[1, 2]], 3)),
        &along(perm(&[&[1, 3]], 3)),
        &s3,
    )
    .expect("s3 witness")
}

/// Two copies of the affine line with degree 1 sent to the free generators
/// `a` and `b`: support `{1, a, b}`.
pub fn free_witness() -> GradedAlgebra {
    let f2 = GroupContext::Free { rank: 2 };
    let block = affine_line();
    let along = |w: &str| {
        Embedding::from_generators(
            GroupContext::z(),
            f2.clone(),
            &[GroupElement::word(w).expect("word")],
            block.labels(),
        )
        .expect("Z embedding")
    };
    direct_sum(&block, &block, &along("a"), &along("b"), &f2).expect("free witness")
}

/// Commutator algebra of the group ring of a finite group: basis indexed by
/// the elements (breadth-first order), `[σ, τ] = στ - τσ`, with each basis
/// vector labelled by its own element. The labels form a grading only when
/// the group is abelian.
pub fn group_ring_commutator_negative(
    ctx: &GroupContext,
) -> Result<(LieAlgebra, Vec<GroupElement>)> {
    let elems = ctx.elements()?;
    let n = elems.len();
    let index: BTreeMap<&GroupElement, usize> = elems.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let mut records = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let st = ctx.mul(&elems[i], &elems[j])?;
            let ts = ctx.mul(&elems[j], &elems[i])?;
            if st == ts {
                continue;
            }
            let mut v = Vector::zeros(n);
            v[index[&st]] = rat(1);
            v[index[&ts]] = rat(-1);
            records.push((i, j, v));
        }
    }
    Ok((LieAlgebra::new(n, records)?, elems))
}

/// Applies the change of basis `f_i = sum_j p[i][j] e_j`. `p` must be
/// invertible and mix only basis vectors with equal labels.
pub fn apply_basis_change(a: &GradedAlgebra, p: &[Vector]) -> Result<GradedAlgebra> {
    let n = a.dim();
    if p.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: p.len(),
        });
    }
    for (i, row) in p.iter().enumerate() {
        row.check_len(n)?;
        if row.nonzero_indices().any(|j| a.labels()[j] != a.labels()[i]) {
            return Err(Error::Structure(format!(
                "basis change row {i} mixes components"
            )));
        }
    }
    let p_inv = invert(p)?.ok_or_else(|| Error::Structure("singular basis change".into()))?;
    a.with_algebra(a.algebra().change_basis(p, &p_inv)?)
}

/// A random invertible change of basis inside each homogeneous component.
/// Entries are drawn from `-2..=2`; singular blocks are redrawn.
pub fn basis_shuffle(a: &GradedAlgebra, seed: u64) -> Result<GradedAlgebra> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = a.dim();
    let mut p: Vec<Vector> = (0..n).map(|i| Vector::unit(n, i)).collect();
    for g in a.support() {
        let idx = a.component_indices(&g).to_vec();
        let m = idx.len();
        let block = loop {
            let rows: Vec<Vector> = (0..m)
                .map(|_| (0..m).map(|_| rat(rng.gen_range(-2..=2))).collect())
                .collect();
            if invert(&rows)?.is_some() {
                break rows;
            }
        };
        for (r, &i) in idx.iter().enumerate() {
            let mut row = Vector::zeros(n);
            for (c, &j) in idx.iter().enumerate() {
                row[j] = block[r][c].clone();
            }
            p[i] = row;
        }
    }
    apply_basis_change(a, &p)
}

/// Parameters for [`random_graded`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RandomParams {
    /// Upper bound on the number of zoo blocks summed.
    pub blocks: usize,
    pub backend: GroupContext,
    pub max_dim: usize,
    pub max_support: usize,
}

pub const MAX_BLOCKS: usize = 16;
pub const MAX_RANDOM_DIM: usize = 48;

impl Default for RandomParams {
    fn default() -> Self {
        RandomParams {
            blocks: 4,
            backend: GroupContext::Permutation { degree: 3 },
            max_dim: 24,
            max_support: 8,
        }
    }
}

/// Parses a backend name: `sN` (symmetric group), `fN` (free group of rank
/// N), `z` or `zN` (free abelian), and products joined by `x`, e.g. `s3xz`.
pub fn parse_backend(name: &str) -> Result<GroupContext> {
    let parts: Vec<&str> = name.split('x').collect();
    if parts.len() > 1 {
        return Ok(GroupContext::Product(
            parts.into_iter().map(parse_backend).collect::<Result<_>>()?,
        ));
    }
    let bad = || Error::Parse(format!("unknown backend {name:?}"));
    let (kind, rest) = name.split_at(name.len().min(1));
    let size = if rest.is_empty() && kind == "z" {
        1
    } else {
        rest.parse::<usize>().map_err(|_| bad())?
    };
    match kind {
        "s" if (1..=6).contains(&size) => Ok(GroupContext::Permutation { degree: size }),
        "f" if (1..=crate::group::MAX_FREE_RANK).contains(&size) => Ok(GroupContext::Free { rank: size }),
        "z" if size >= 1 => Ok(GroupContext::FreeAbelian { rank: size }),
        _ => Err(bad()),
    }
}

fn random_word(ctx: &GroupContext, rank: usize, rng: &mut ChaCha8Rng) -> GroupElement {
    let len = rng.gen_range(1..=3);
    let s: String = (0..len)
        .map(|_| {
            let c = (b'a' + rng.gen_range(0..rank) as u8) as char;
            if rng.gen_bool(0.5) {
                c.to_ascii_uppercase()
            } else {
                c
            }
        })
        .collect();
    let w = GroupElement::word(&s).expect("ascii word");
    if w == ctx.identity() {
        random_word(ctx, rank, rng)
    } else {
        w
    }
}

fn random_element(ctx: &GroupContext, rng: &mut ChaCha8Rng) -> Result<GroupElement> {
    Ok(match ctx {
        GroupContext::Free { rank: 0 } | GroupContext::FreeAbelian { rank: 0 } => ctx.identity(),
        GroupContext::Free { rank } => random_word(ctx, *rank, rng),
        GroupContext::FreeAbelian { rank } => {
            GroupElement::FreeAbelian((0..*rank).map(|_| rng.gen_range(-2..=2)).collect())
        }
        GroupContext::Permutation { .. } => ctx.elements()?.choose(rng).expect("nonempty").clone(),
        GroupContext::Product(cs) => GroupElement::Product(
            cs.iter()
                .map(|c| random_element(c, rng))
                .collect::<Result<_>>()?,
        ),
    })
}

/// Two commuting elements.
fn random_commuting_pair(
    ctx: &GroupContext,
    rng: &mut ChaCha8Rng,
) -> Result<(GroupElement, GroupElement)> {
    Ok(match ctx {
        GroupContext::Free { .. } => {
            let w = random_element(ctx, rng)?;
            (ctx.pow(&w, rng.gen_range(-2..=2))?, ctx.pow(&w, rng.gen_range(-2..=2))?)
        }
        GroupContext::FreeAbelian { .. } => (random_element(ctx, rng)?, random_element(ctx, rng)?),
        GroupContext::Permutation { .. } => {
            let elems = ctx.elements()?;
            let x = elems.choose(rng).expect("nonempty").clone();
            let centralizer: Vec<&GroupElement> = elems
                .iter()
                .filter(|y| ctx.commute(&x, y).unwrap_or(false))
                .collect();
            let y = (*centralizer.choose(rng).expect("contains x")).clone();
            (x, y)
        }
        GroupContext::Product(cs) => {
            let (xs, ys) = cs
                .iter()
                .map(|c| random_commuting_pair(c, rng))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .unzip();
            (GroupElement::Product(xs), GroupElement::Product(ys))
        }
    })
}

/// Two commuting elements of order dividing 2.
fn random_involution_pair(
    ctx: &GroupContext,
    rng: &mut ChaCha8Rng,
) -> Result<(GroupElement, GroupElement)> {
    Ok(match ctx {
        GroupContext::Free { .. } | GroupContext::FreeAbelian { .. } => (ctx.identity(), ctx.identity()),
        GroupContext::Permutation { .. } => {
            let id = ctx.identity();
            let invols: Vec<GroupElement> = ctx
                .elements()?
                .into_iter()
                .filter(|g| ctx.mul(g, g).map(|sq| sq == id).unwrap_or(false))
                .collect();
            let x = invols.choose(rng).expect("identity").clone();
            let partners: Vec<&GroupElement> = invols
                .iter()
                .filter(|y| ctx.commute(&x, y).unwrap_or(false))
                .collect();
            let y = (*partners.choose(rng).expect("contains x")).clone();
            (x, y)
        }
        GroupContext::Product(cs) => {
            let (xs, ys) = cs
                .iter()
                .map(|c| random_involution_pair(c, rng))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .unzip();
            (GroupElement::Product(xs), GroupElement::Product(ys))
        }
    })
}

/// Builds a random homomorphic image of one zoo block in `target`.
fn random_block(target: &GroupContext, max_dim: usize, rng: &mut ChaCha8Rng) -> Result<Option<GradedAlgebra>> {
    // dimensions of block kinds 0..6: sl2 (three gradings), heisenberg, affine line, line
    const BLOCK_DIMS: [usize; 6] = [3, 3, 3, 3, 2, 1];
    let choices: Vec<u8> = (0..6u8).filter(|&k| BLOCK_DIMS[k as usize] <= max_dim).collect();
    let Some(&kind) = choices.choose(rng) else {
        return Ok(None);
    };
    let (block, images) = match kind {
        0 => (sl2_z(), vec![random_element(target, rng)?]),
        1 => (sl2_z2(), vec![random_involution_pair(target, rng)?.0]),
        2 => {
            let (x, y) = random_involution_pair(target, rng)?;
            (sl2_pauli(), vec![x, y])
        }
        3 => {
            let (x, y) = random_commuting_pair(target, rng)?;
            (heisenberg(), vec![x, y])
        }
        4 => (affine_line(), vec![random_element(target, rng)?]),
        _ => (line(), vec![random_element(target, rng)?]),
    };
    let emb = Embedding::from_generators(block.ctx().clone(), target.clone(), &images, block.labels())?;
    let empty = zero_algebra(target.clone());
    let ident = Embedding::identity(target, &[])?;
    Ok(Some(direct_sum(&empty, &block, &ident, &emb, target)?))
}

/// A direct sum of randomly chosen zoo blocks, each pushed into `backend`
/// along a random homomorphism, followed by [`basis_shuffle`]. The result is
/// a pure function of `seed` and `params`.
pub fn random_graded(seed: u64, params: &RandomParams) -> Result<GradedAlgebra> {
    if params.blocks == 0 || params.blocks > MAX_BLOCKS {
        return Err(Error::Budget(format!("blocks must be in 1..={MAX_BLOCKS}")));
    }
    if params.max_dim == 0 || params.max_dim > MAX_RANDOM_DIM {
        return Err(Error::Budget(format!("max_dim must be in 1..={MAX_RANDOM_DIM}")));
    }
    if params.max_support == 0 {
        return Err(Error::Budget("max_support must be positive".into()));
    }
    let target = &params.backend;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let wanted = rng.gen_range(1..=params.blocks);
    let mut acc = zero_algebra(target.clone());
    for _ in 0..wanted {
        for _attempt in 0..8 {
            let Some(block) = random_block(target, params.max_dim - acc.dim(), &mut rng)? else {
                break;
            };
            let mut labels = acc.support();
            labels.extend(block.support());
            labels.sort();
            labels.dedup();
            if labels.len() > params.max_support {
                continue;
            }
            let keep = Embedding::identity(target, acc.labels())?;
            let same = Embedding::identity(target, block.labels())?;
            acc = direct_sum(&acc, &block, &keep, &same, target)?;
            break;
        }
    }
    let shuffled = basis_shuffle(&acc, rng.gen())?;
    shuffled.validate()?;
    Ok(shuffled)
}

/// Names of the shipped example documents.
pub const EXAMPLE_NAMES: [&str; 7] = [
    "sl2-z",
    "sl2-pauli",
    "heisenberg",
    "s3-witness",
    "free-witness",
    "group-ring-s3",
    "zero",
];

/// The five valid zoo algebras.
pub fn zoo() -> Vec<(&'static str, GradedAlgebra)> {
    vec![
        ("sl2-z", sl2_z()),
        ("sl2-pauli", sl2_pauli()),
        ("heisenberg", heisenberg()),
        ("s3-witness", s3_witness()),
        ("free-witness", free_witness()),
    ]
}

/// Example by name. `group-ring-s3` deliberately fails grading validation;
/// `zero` is the zero-dimensional algebra over Z.
pub fn example(name: &str) -> Result<GradedAlgebra> {
    Ok(match name {
        "sl2-z" => sl2_z(),
        "sl2-pauli" => sl2_pauli(),
        "heisenberg" => heisenberg(),
        "s3-witness" => s3_witness(),
        "free-witness" => free_witness(),
        "group-ring-s3" => {
            let ctx = GroupContext::Permutation { degree: 3 };
            let (l, labels) = group_ring_commutator_negative(&ctx)?;
            GradedAlgebra::new(l, ctx, labels)?
        }
        "zero" => zero_algebra(GroupContext::z()),
        other => return Err(Error::UnknownExample(other.to_string())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Subspace;

    #[test]
    fn zoo_is_valid() {
        for (name, a) in zoo() {
            a.validate().unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }

    #[test]
    fn s3_witness_shape() {
        let a = s3_witness();
        assert_eq!(a.dim(), 6);
        let shown: Vec<String> = a.support().iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["()", "(1 2)", "(1 3)"]);
        let first = Subspace::coordinate(6, 0..3);
        let second = Subspace::coordinate(6, 3..6);
        assert!(a.algebra().bracket_sub(&first, &second).unwrap().is_zero());
        assert!(a.is_graded_ideal(&first).unwrap());
        assert!(a.is_graded_ideal(&second).unwrap());
    }

    #[test]
    fn direct_sum_with_zero_is_relabel() {
        let s3 = GroupContext::Permutation { degree: 3 };
        let b = sl2_z2();
        let emb = Embedding::from_generators(
            GroupContext::z2(),
            s3.clone(),
            &[GroupElement::cycles(3, &[&[2, 3]]).unwrap()],
            b.labels(),
        )
        .unwrap();
        let sum = direct_sum(
            &zero_algebra(s3.clone()),
            &b,
            &Embedding::identity(&s3, &[]).unwrap(),
            &emb,
            &s3,
        )
        .unwrap();
        assert_eq!(sum.algebra(), b.algebra());
        assert_eq!(sum.labels()[1].to_string(), "(2 3)");
    }

    #[test]
    fn non_homomorphism_rejected() {
        let s3 = GroupContext::Permutation { degree: 3 };
        let b = sl2_z();
        // 1 and -1 sent to a 3-cycle and itself: image(1 + -1) != c·c
        let c = GroupElement::cycles(3, &[&[1, 2, 3]]).unwrap();
        let emb = Embedding::new(
            GroupContext::z(),
            s3.clone(),
            [(z(0), s3.identity()), (z(1), c.clone()), (z(-1), c)],
        )
        .unwrap();
        let err = direct_sum(&zero_algebra(s3.clone()), &b, &Embedding::identity(&s3, &[]).unwrap(), &emb, &s3)
            .unwrap_err();
        assert!(matches!(err, Error::NotHomomorphism(..)));
    }

    #[test]
    fn group_ring_negative() {
        let (l, labels) = group_ring_commutator_negative(&GroupContext::z2()).unwrap();
        let a = GradedAlgebra::new(l, GroupContext::z2(), labels).unwrap();
        assert!(a.validate().is_ok());

        let s3 = example("group-ring-s3").unwrap();
        assert!(s3.validate_algebra().is_valid());
        let report = s3.validate_grading();
        let (i, j) = report.violations[0].pair;
        assert_eq!(s3.labels()[i].to_string(), "(1 2)");
        assert_eq!(s3.labels()[j].to_string(), "(1 3)");
        assert!(group_ring_commutator_negative(&GroupContext::Free { rank: 1 }).is_err());
    }

    #[test]
    fn identity_basis_change_is_structural_identity() {
        let a = s3_witness();
        let p: Vec<Vector> = (0..6).map(|i| Vector::unit(6, i)).collect();
        assert_eq!(apply_basis_change(&a, &p).unwrap(), a);
    }

    #[test]
    fn mixing_components_rejected() {
        let a = sl2_z();
        let p = vec![
            Vector::from_ints(&[1, 1, 0]),
            Vector::from_ints(&[0, 1, 0]),
            Vector::from_ints(&[0, 0, 1]),
        ];
        assert!(apply_basis_change(&a, &p).is_err());
    }

    #[test]
    fn backends() {
        assert_eq!(parse_backend("s3").unwrap(), GroupContext::Permutation { degree: 3 });
        assert_eq!(parse_backend("z").unwrap(), GroupContext::z());
        assert_eq!(parse_backend("f2").unwrap(), GroupContext::Free { rank: 2 });
        assert_eq!(
            parse_backend("s3xz2").unwrap(),
            GroupContext::Product(vec![
                GroupContext::Permutation { degree: 3 },
                GroupContext::FreeAbelian { rank: 2 }
            ])
        );
        assert!(parse_backend("q3").is_err());
        assert!(parse_backend("s9").is_err());
    }

    #[test]
    fn random_budget_errors() {
        let p = RandomParams { blocks: 0, ..RandomParams::default() };
        assert!(matches!(random_graded(1, &p), Err(Error::Budget(_))));
        let p = RandomParams { max_dim: 1000, ..RandomParams::default() };
        assert!(matches!(random_graded(1, &p), Err(Error::Budget(_))));
    }

    #[test]
    fn unknown_example() {
        assert!(matches!(example("nope"), Err(Error::UnknownExample(_))));
    }
}
