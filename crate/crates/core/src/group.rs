//! Grading groups with canonical forms: free groups, free abelian groups,
//! finite permutation groups, and finite direct products of these.
//!
//! Every element is stored in a canonical form, so structural equality is
//! group equality. Permutations compose right to left: `(g·h)(x) = g(h(x))`.
//!
//! A subgroup generated by pairwise-commuting elements is abelian: every
//! generator commutes with every generator, hence with every word in them.
//! [`pairwise_commutation`] checks abelianness of a generated subgroup this way.

use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde_json::Value;

use crate::error::{Error, Result};

/// A letter of a free group: generator index (0 = `a`) and whether it is inverted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    fn inverted(self) -> Letter {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }

    fn to_char(self) -> char {
        let c = (b'a' + self.generator as u8) as char;
        if self.inverse {
            c.to_ascii_uppercase()
        } else {
            c
        }
    }
}

impl Ord for Letter {
    // a < A < b < B < ...
    fn cmp(&self, other: &Self) -> Ordering {
        (self.generator, self.inverse).cmp(&(other.generator, other.inverse))
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub const MAX_FREE_RANK: usize = 26;

/// A product of generator powers, as `(generator index, exponent)` pairs.
pub type GeneratorWord = Vec<(usize, i64)>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupContext {
    Free { rank: usize },
    FreeAbelian { rank: usize },
    Permutation { degree: usize },
    Product(Vec<GroupContext>),
}

/// A group element in canonical form.
///
/// Ordering follows the canonical serialization order: backend tag first,
/// then the payload compared lexicographically (integers numerically, free
/// letters as `a < A < b < B`, shorter prefixes first).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    Free(Vec<Letter>),
    FreeAbelian(Vec<i64>),
    /// Zero-based images: `images[x]` is the image of point `x`.
    Permutation(Vec<usize>),
    Product(Vec<GroupElement>),
}

fn reduce_word(letters: impl IntoIterator<Item = Letter>) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::new();
    for l in letters {
        match out.last() {
            Some(&last) if last == l.inverted() => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    out
}

impl GroupElement {
    /// Parses a free-group word such as `"aB"`; uppercase letters are inverses.
    pub fn word(s: &str) -> Result<GroupElement> {
        let mut letters = Vec::with_capacity(s.len());
        for c in s.chars() {
            if !c.is_ascii_alphabetic() {
                return Err(Error::Parse(format!("invalid letter {c:?} in word {s:?}")));
            }
            letters.push(Letter {
                generator: (c.to_ascii_lowercase() as u8 - b'a') as usize,
                inverse: c.is_ascii_uppercase(),
            });
        }
        Ok(GroupElement::Free(reduce_word(letters)))
    }

    pub fn abelian(v: &[i64]) -> GroupElement {
        GroupElement::FreeAbelian(v.to_vec())
    }

    /// Builds a permutation from its one-based one-line notation `[2, 1, 3]`.
    pub fn perm(images: &[usize]) -> Result<GroupElement> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::Parse(format!(
                    "{images:?} is not a permutation of 1..{n}"
                )));
            }
            seen[x - 1] = true;
            zero_based.push(x - 1);
        }
        Ok(GroupElement::Permutation(zero_based))
    }

    /// Permutation of degree `n` given by disjoint one-based cycles.
    pub fn cycles(n: usize, cycles: &[&[usize]]) -> Result<GroupElement> {
        let mut images: Vec<usize> = (1..=n).collect();
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()];
                if x == 0 || x > n || next == 0 || next > n {
                    return Err(Error::Parse(format!("cycle {cycle:?} exceeds degree {n}")));
                }
                images[x - 1] = next;
            }
        }
        GroupElement::perm(&images)
    }

    fn tag(&self) -> &'static str {
        match self {
            GroupElement::Free(_) => "free",
            GroupElement::FreeAbelian(_) => "free_abelian",
            GroupElement::Permutation(_) => "permutation",
            GroupElement::Product(_) => "product",
        }
    }

    /// The document literal: word string, integer array, one-based image
    /// array, or array of component literals.
    pub fn to_literal(&self) -> Value {
        match self {
            GroupElement::Free(w) => Value::String(w.iter().map(|l| l.to_char()).collect()),
            GroupElement::FreeAbelian(v) => Value::Array(v.iter().map(|&x| x.into()).collect()),
            GroupElement::Permutation(p) => {
                Value::Array(p.iter().map(|&x| (x as u64 + 1).into()).collect())
            }
            GroupElement::Product(cs) => Value::Array(cs.iter().map(|c| c.to_literal()).collect()),
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Free(w) if w.is_empty() => write!(f, "1"),
            GroupElement::Free(w) => {
                for l in w {
                    write!(f, "{}", l.to_char())?;
                }
                Ok(())
            }
            GroupElement::FreeAbelian(v) => {
                if v.len() == 1 {
                    return write!(f, "{}", v[0]);
                }
                write!(f, "(")?;
                for (k, x) in v.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
            GroupElement::Permutation(p) => {
                let mut seen = vec![false; p.len()];
                let mut wrote = false;
                for start in 0..p.len() {
                    if seen[start] || p[start] == start {
                        continue;
                    }
                    write!(f, "(")?;
                    let mut x = start;
                    let mut first = true;
                    while !seen[x] {
                        seen[x] = true;
                        if !first {
                            write!(f, " ")?;
                        }
                        write!(f, "{}", x + 1)?;
                        first = false;
                        x = p[x];
                    }
                    write!(f, ")")?;
                    wrote = true;
                }
                if !wrote {
                    write!(f, "()")?;
                }
                Ok(())
            }
            GroupElement::Product(cs) => {
                write!(f, "<")?;
                for (k, c) in cs.iter().enumerate() {
                    if k > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ">")
            }
        }
    }
}

/// Result of scanning a finite set for a noncommuting pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutationReport {
    pub all_commute: bool,
    pub first_violation: Option<(GroupElement, GroupElement)>,
}

impl GroupContext {
    pub fn z() -> GroupContext {
        GroupContext::FreeAbelian { rank: 1 }
    }

    /// Z/2 realized as the symmetric group of degree 2.
    pub fn z2() -> GroupContext {
        GroupContext::Permutation { degree: 2 }
    }

    pub fn is_finite(&self) -> bool {
        match self {
            GroupContext::Free { rank } | GroupContext::FreeAbelian { rank } => *rank == 0,
            GroupContext::Permutation { .. } => true,
            GroupContext::Product(cs) => cs.iter().all(GroupContext::is_finite),
        }
    }

    pub fn identity(&self) -> GroupElement {
        match self {
            GroupContext::Free { .. } => GroupElement::Free(Vec::new()),
            GroupContext::FreeAbelian { rank } => GroupElement::FreeAbelian(vec![0; *rank]),
            GroupContext::Permutation { degree } => GroupElement::Permutation((0..*degree).collect()),
            GroupContext::Product(cs) => {
                GroupElement::Product(cs.iter().map(GroupContext::identity).collect())
            }
        }
    }

    fn nonconforming(&self, g: &GroupElement) -> Error {
        Error::Conformance {
            element: format!("{g} ({})", g.tag()),
            context: self.to_string(),
        }
    }

    /// Checks that `g` is a canonical element of this group.
    pub fn conforms(&self, g: &GroupElement) -> Result<()> {
        let ok = match (self, g) {
            (GroupContext::Free { rank }, GroupElement::Free(w)) => {
                w.iter().all(|l| l.generator < *rank)
                    && w.windows(2).all(|p| p[0] != p[1].inverted())
            }
            (GroupContext::FreeAbelian { rank }, GroupElement::FreeAbelian(v)) => v.len() == *rank,
            (GroupContext::Permutation { degree }, GroupElement::Permutation(p)) => {
                let mut seen = vec![false; *degree];
                p.len() == *degree
                    && p.iter().all(|&x| x < *degree && !std::mem::replace(&mut seen[x], true))
            }
            (GroupContext::Product(cs), GroupElement::Product(es)) => {
                if cs.len() != es.len() {
                    false
                } else {
                    for (c, e) in cs.iter().zip(es) {
                        c.conforms(e)?;
                    }
                    true
                }
            }
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(self.nonconforming(g))
        }
    }

    pub fn mul(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
        self.conforms(g)?;
        self.conforms(h)?;
        Ok(self.mul_unchecked(g, h))
    }

    fn mul_unchecked(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        match (self, g, h) {
            (_, GroupElement::Free(a), GroupElement::Free(b)) => {
                GroupElement::Free(reduce_word(a.iter().chain(b).copied()))
            }
            (_, GroupElement::FreeAbelian(a), GroupElement::FreeAbelian(b)) => {
                GroupElement::FreeAbelian(a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            (_, GroupElement::Permutation(a), GroupElement::Permutation(b)) => {
                GroupElement::Permutation(b.iter().map(|&x| a[x]).collect())
            }
            (GroupContext::Product(cs), GroupElement::Product(a), GroupElement::Product(b)) => {
                GroupElement::Product(
                    cs.iter()
                        .zip(a.iter().zip(b))
                        .map(|(c, (x, y))| c.mul_unchecked(x, y))
                        .collect(),
                )
            }
            _ => unreachable!("conformance checked by caller"),
        }
    }

    pub fn inv(&self, g: &GroupElement) -> Result<GroupElement> {
        self.conforms(g)?;
        Ok(inv_unchecked(g))
    }

    pub fn commute(&self, g: &GroupElement, h: &GroupElement) -> Result<bool> {
        Ok(self.mul(g, h)? == self.mul(h, g)?)
    }

    /// Product `g_1 · g_2 · … · g_n`; the identity for an empty slice.
    pub fn product<'a>(&self, gs: impl IntoIterator<Item = &'a GroupElement>) -> Result<GroupElement> {
        let mut acc = self.identity();
        for g in gs {
            acc = self.mul(&acc, g)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, g: &GroupElement, e: i64) -> Result<GroupElement> {
        let base = if e < 0 { self.inv(g)? } else { g.clone() };
        let mut acc = self.identity();
        for _ in 0..e.unsigned_abs() {
            acc = self.mul_unchecked(&acc, &base);
        }
        Ok(acc)
    }

    /// Reads a document literal for an element of this group.
    pub fn parse_literal(&self, v: &Value) -> Result<GroupElement> {
        let bad = || Error::Parse(format!("literal {v} does not describe an element of {self}"));
        let g = match self {
            GroupContext::Free { .. } => GroupElement::word(v.as_str().ok_or_else(bad)?)?,
            GroupContext::FreeAbelian { .. } => GroupElement::FreeAbelian(
                v.as_array()
                    .ok_or_else(bad)?
                    .iter()
                    .map(|x| x.as_i64().ok_or_else(bad))
                    .collect::<Result<_>>()?,
            ),
            GroupContext::Permutation { .. } => {
                let images: Vec<usize> = v
                    .as_array()
                    .ok_or_else(bad)?
                    .iter()
                    .map(|x| x.as_u64().map(|x| x as usize).ok_or_else(bad))
                    .collect::<Result<_>>()?;
                GroupElement::perm(&images)?
            }
            GroupContext::Product(cs) => {
                let parts = v.as_array().ok_or_else(bad)?;
                if parts.len() != cs.len() {
                    return Err(bad());
                }
                GroupElement::Product(
                    cs.iter()
                        .zip(parts)
                        .map(|(c, p)| c.parse_literal(p))
                        .collect::<Result<_>>()?,
                )
            }
        };
        self.conforms(&g)?;
        Ok(g)
    }

    /// Document description of the context, e.g. `{"kind": "permutation", "degree": 3}`.
    pub fn to_description(&self) -> Value {
        match self {
            GroupContext::Free { rank } => serde_json::json!({"kind": "free", "rank": rank}),
            GroupContext::FreeAbelian { rank } => {
                serde_json::json!({"kind": "free_abelian", "rank": rank})
            }
            GroupContext::Permutation { degree } => {
                serde_json::json!({"kind": "permutation", "degree": degree})
            }
            GroupContext::Product(cs) => serde_json::json!({
                "kind": "product",
                "components": cs.iter().map(GroupContext::to_description).collect::<Vec<_>>(),
            }),
        }
    }

    pub fn from_description(v: &Value) -> Result<GroupContext> {
        let field = |name: &str| -> Result<usize> {
            v.get(name)
                .and_then(Value::as_u64)
                .map(|x| x as usize)
                .ok_or_else(|| Error::Parse(format!("group.{name}: expected a nonnegative integer")))
        };
        let kind = v
            .get("kind")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("group.kind: expected a string".into()))?;
        let ctx = match kind {
            "free" => {
                let rank = field("rank")?;
                if rank > MAX_FREE_RANK {
                    return Err(Error::Parse(format!(
                        "group.rank: free rank {rank} exceeds {MAX_FREE_RANK}"
                    )));
                }
                GroupContext::Free { rank }
            }
            "free_abelian" => GroupContext::FreeAbelian {
                rank: field("rank")?,
            },
            "permutation" => GroupContext::Permutation {
                degree: field("degree")?,
            },
            "product" => GroupContext::Product(
                v.get("components")
                    .and_then(Value::as_array)
                    .ok_or_else(|| Error::Parse("group.components: expected an array".into()))?
                    .iter()
                    .map(GroupContext::from_description)
                    .collect::<Result<_>>()?,
            ),
            other => return Err(Error::Parse(format!("group.kind: unknown kind {other:?}"))),
        };
        Ok(ctx)
    }

    /// Standard generators: free letters, unit vectors, the star
    /// transpositions `(1 k)`, and component generators of a product in order.
    pub fn generators(&self) -> Vec<GroupElement> {
        match self {
            GroupContext::Free { rank } => (0..*rank)
                .map(|g| {
                    GroupElement::Free(vec![Letter {
                        generator: g,
                        inverse: false,
                    }])
                })
                .collect(),
            GroupContext::FreeAbelian { rank } => (0..*rank)
                .map(|i| {
                    let mut v = vec![0; *rank];
                    v[i] = 1;
                    GroupElement::FreeAbelian(v)
                })
                .collect(),
            GroupContext::Permutation { degree } => (1..*degree)
                .map(|k| {
                    let mut p: Vec<usize> = (0..*degree).collect();
                    p.swap(0, k);
                    GroupElement::Permutation(p)
                })
                .collect(),
            GroupContext::Product(cs) => {
                let mut out = Vec::new();
                for (k, c) in cs.iter().enumerate() {
                    for gen in c.generators() {
                        let mut parts: Vec<GroupElement> =
                            cs.iter().map(GroupContext::identity).collect();
                        parts[k] = gen;
                        out.push(GroupElement::Product(parts));
                    }
                }
                out
            }
        }
    }

    /// All elements of a finite group, in breadth-first order over
    /// [`generators`](Self::generators) starting from the identity.
    pub fn elements(&self) -> Result<Vec<GroupElement>> {
        Ok(self.enumerate_with_words()?.into_iter().map(|(g, _)| g).collect())
    }

    fn enumerate_with_words(&self) -> Result<Vec<(GroupElement, GeneratorWord)>> {
        if !self.is_finite() {
            return Err(Error::InfiniteGroup(self.to_string()));
        }
        let gens = self.generators();
        let mut seen: HashMap<GroupElement, usize> = HashMap::new();
        let mut out = vec![(self.identity(), Vec::new())];
        seen.insert(self.identity(), 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for (gi, gen) in gens.iter().enumerate() {
                let next = self.mul_unchecked(&out[k].0, gen);
                if !seen.contains_key(&next) {
                    let mut word = out[k].1.clone();
                    word.push((gi, 1));
                    seen.insert(next.clone(), out.len());
                    queue.push_back(out.len());
                    out.push((next, word));
                }
            }
        }
        Ok(out)
    }

    /// Expresses `g` as a word `[(generator index, exponent), ...]` in
    /// [`generators`](Self::generators), read left to right.
    pub fn word_in_generators(&self, g: &GroupElement) -> Result<GeneratorWord> {
        self.conforms(g)?;
        match (self, g) {
            (GroupContext::Free { .. }, GroupElement::Free(w)) => Ok(w
                .iter()
                .map(|l| (l.generator, if l.inverse { -1 } else { 1 }))
                .collect()),
            (GroupContext::FreeAbelian { .. }, GroupElement::FreeAbelian(v)) => Ok(v
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(i, &e)| (i, e))
                .collect()),
            (GroupContext::Permutation { .. }, _) => self
                .enumerate_with_words()?
                .into_iter()
                .find(|(h, _)| h == g)
                .map(|(_, w)| w)
                .ok_or_else(|| self.nonconforming(g)),
            (GroupContext::Product(cs), GroupElement::Product(es)) => {
                let mut offset = 0;
                let mut word = Vec::new();
                for (c, e) in cs.iter().zip(es) {
                    word.extend(
                        c.word_in_generators(e)?
                            .into_iter()
                            .map(|(i, x)| (i + offset, x)),
                    );
                    offset += c.generators().len();
                }
                Ok(word)
            }
            _ => Err(self.nonconforming(g)),
        }
    }
}

fn inv_unchecked(g: &GroupElement) -> GroupElement {
    match g {
        GroupElement::Free(w) => GroupElement::Free(w.iter().rev().map(|l| l.inverted()).collect()),
        GroupElement::FreeAbelian(v) => GroupElement::FreeAbelian(v.iter().map(|x| -x).collect()),
        GroupElement::Permutation(p) => {
            let mut q = vec![0; p.len()];
            for (x, &y) in p.iter().enumerate() {
                q[y] = x;
            }
            GroupElement::Permutation(q)
        }
        GroupElement::Product(cs) => GroupElement::Product(cs.iter().map(inv_unchecked).collect()),
    }
}

impl fmt::Display for GroupContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupContext::Free { rank } => write!(f, "F{rank}"),
            GroupContext::FreeAbelian { rank: 1 } => write!(f, "Z"),
            GroupContext::FreeAbelian { rank } => write!(f, "Z^{rank}"),
            GroupContext::Permutation { degree } => write!(f, "S{degree}"),
            GroupContext::Product(cs) => {
                for (k, c) in cs.iter().enumerate() {
                    if k > 0 {
                        write!(f, " x ")?;
                    }
                    write!(f, "{c}")?;
                }
                if cs.is_empty() {
                    write!(f, "1")?;
                }
                Ok(())
            }
        }
    }
}

/// Checks whether every unordered pair of `elements` commutes. Elements are
/// deduplicated and scanned in canonical order, so the reported violation is
/// the first one in that order.
pub fn pairwise_commutation(
    ctx: &GroupContext,
    elements: &[GroupElement],
) -> Result<CommutationReport> {
    let mut sorted = elements.to_vec();
    sorted.sort();
    sorted.dedup();
    for g in &sorted {
        ctx.conforms(g)?;
    }
    for (i, g) in sorted.iter().enumerate() {
        for h in &sorted[i + 1..] {
            if !ctx.commute(g, h)? {
                return Ok(CommutationReport {
                    all_commute: false,
                    first_violation: Some((g.clone(), h.clone())),
                });
            }
        }
    }
    Ok(CommutationReport {
        all_commute: true,
        first_violation: None,
    })
}
