use graded_lie::constructions::{self, RandomParams};
use graded_lie::document::{content_hash, parse_json, to_json_string, AlgebraDocument, CertificateDocument};
use graded_lie::theorem::{self, PrimeScanVerdict, ScanConfig, TraceKind};
use graded_lie::{GradedAlgebra, GroupContext, GroupElement, LieAlgebra, Vector};

type M2 = [[i64; 2]; 2];

fn mat_mul(x: M2, y: M2) -> M2 {
    let mut out = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = (0..2).map(|k| x[i][k] * y[k][j]).sum();
        }
    }
    out
}

fn commutator(x: M2, y: M2) -> M2 {
    let (p, q) = (mat_mul(x, y), mat_mul(y, x));
    [[p[0][0] - q[0][0], p[0][1] - q[0][1]], [p[1][0] - q[1][0], p[1][1] - q[1][1]]]
}

/// Coordinates of a traceless matrix in the basis `basis` (solved by brute force).
fn coordinates(m: M2, basis: &[M2; 3]) -> Vec<i64> {
    for a in -4..=4 {
        for b in -4..=4 {
            for c in -4..=4 {
                let mut s = [[0; 2]; 2];
                for i in 0..2 {
                    for j in 0..2 {
                        s[i][j] = a * basis[0][i][j] + b * basis[1][i][j] + c * basis[2][i][j];
                    }
                }
                if s == m {
                    return vec![a, b, c];
                }
            }
        }
    }
    panic!("{m:?} is not in the span");
}

#[test]
fn pauli_constants_match_matrices() {
    let basis: [M2; 3] = [[[1, 0], [0, -1]], [[0, 1], [1, 0]], [[0, 1], [-1, 0]]];
    let mut records = Vec::new();
    for i in 0..3 {
        for j in i + 1..3 {
            let v = coordinates(commutator(basis[i], basis[j]), &basis);
            records.push((i, j, Vector::from_ints(&v)));
        }
    }
    let oracle = LieAlgebra::new(3, records).unwrap();
    let a = constructions::sl2_pauli();
    assert_eq!(a.algebra(), &oracle);
    a.validate().unwrap();
    // every ordered pair of distinct components brackets nontrivially
    let sweep = theorem::star_sweep(&a, ScanConfig { max_len: 2, tuple_budget: 100 }).unwrap();
    assert_eq!(sweep.results.len(), 6);
}

fn corpus() -> Vec<(String, GradedAlgebra)> {
    let mut out: Vec<(String, GradedAlgebra)> = constructions::zoo()
        .into_iter()
        .map(|(n, a)| (n.to_string(), a))
        .collect();
    for seed in 0..8u64 {
        let backend = ["s3", "f2", "z2", "s3xz"][seed as usize % 4];
        let params = RandomParams {
            blocks: 3,
            backend: constructions::parse_backend(backend).unwrap(),
            max_dim: 12,
            max_support: 6,
        };
        out.push((format!("random-{seed}"), constructions::random_graded(seed, &params).unwrap()));
    }
    out
}

#[test]
fn traces_agree_with_sweeps() {
    for (name, a) in corpus() {
        let sweep = theorem::star_sweep(&a, ScanConfig { max_len: 3, tuple_budget: 10_000 }).unwrap();
        assert_eq!(sweep.violations().count(), 0, "{name}");
        for r in sweep.results.iter().take(60) {
            let single = theorem::check_star(&a, &r.tuple).unwrap();
            assert_eq!(single.bracket_dim, r.bracket_dim);
            let trace = theorem::star_trace(&a, &r.tuple).unwrap();
            assert!(trace.findings.is_empty(), "{name}: {}", trace.render());
            assert!(trace.steps.iter().all(|s| s.kind != TraceKind::Inconsistent));
            let n = r.tuple.len();
            let all: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
            assert_eq!(trace.pairs, all);
        }
    }
}

#[test]
fn certificates_survive_document_round_trip() {
    for (name, a) in corpus() {
        let doc_text = AlgebraDocument::from_graded(&a, &name, "").to_json();
        let reloaded = AlgebraDocument::parse(&doc_text).unwrap().to_graded().unwrap();
        assert_eq!(reloaded, a);
        let hash = content_hash(&a);
        assert_eq!(content_hash(&reloaded), hash);
        for cert in theorem::check_proposition(&a).unwrap().certificates {
            let text = to_json_string(&CertificateDocument::from_certificate(&cert, &hash));
            let doc: CertificateDocument = parse_json(&text).unwrap();
            let back = doc.to_certificate(&reloaded).unwrap();
            assert_eq!(back, cert);
            assert!(back.verify(&reloaded).unwrap().is_valid(), "{name}");
        }
    }
}

fn verdicts(a: &GradedAlgebra) -> (bool, Vec<bool>, usize, usize, bool) {
    let support = theorem::support_subgroup_report(a).unwrap();
    let certs = theorem::check_proposition(a).unwrap().certificates;
    let sweep = theorem::star_sweep(a, ScanConfig { max_len: 3, tuple_budget: 10_000 }).unwrap();
    let scan = matches!(theorem::prime_scan(a).unwrap(), PrimeScanVerdict::NotGradedPrime(_));
    (
        support.abelian,
        certs.iter().map(|c| c.verify(a).unwrap().is_valid()).collect(),
        sweep.violations().count(),
        sweep.results.len(),
        scan,
    )
}

#[test]
fn shuffles_preserve_verdicts() {
    for (name, a) in corpus() {
        let expected = verdicts(&a);
        for seed in [1u64, 7, 42] {
            let b = constructions::basis_shuffle(&a, seed).unwrap();
            b.validate().unwrap();
            assert_eq!(b.labels(), a.labels());
            assert_eq!(verdicts(&b), expected, "{name} seed {seed}");
        }
    }
}

#[test]
fn shuffled_examples_keep_their_verdicts() {
    let sl2 = constructions::basis_shuffle(&constructions::sl2_z(), 3).unwrap();
    assert!(matches!(
        theorem::prime_scan(&sl2).unwrap(),
        PrimeScanVerdict::NoWitnessFound { .. }
    ));
    let s3 = constructions::basis_shuffle(&constructions::s3_witness(), 3).unwrap();
    let certs = theorem::check_proposition(&s3).unwrap().certificates;
    assert_eq!(certs.len(), 1);
    assert!(certs[0].verify(&s3).unwrap().is_valid());
}

#[test]
fn random_generation_is_deterministic_and_valid() {
    for backend in ["s3", "s4", "f2", "z2", "s3xz"] {
        let params = RandomParams {
            blocks: 4,
            backend: constructions::parse_backend(backend).unwrap(),
            max_dim: 24,
            max_support: 8,
        };
        for seed in 0..20u64 {
            let a = constructions::random_graded(seed, &params).unwrap();
            let b = constructions::random_graded(seed, &params).unwrap();
            assert_eq!(
                AlgebraDocument::from_graded(&a, "", "").to_json(),
                AlgebraDocument::from_graded(&b, "", "").to_json()
            );
            assert!(a.dim() <= 24 && a.support().len() <= 8, "{backend} {seed}");
            a.validate().unwrap();
        }
    }
    let too_big = RandomParams {
        blocks: 100,
        ..RandomParams::default()
    };
    assert!(constructions::random_graded(0, &too_big).is_err());
}

#[test]
fn group_ring_commutators() {
    let s3 = GroupContext::Permutation { degree: 3 };
    let (l, labels) = constructions::group_ring_commutator_negative(&s3).unwrap();
    assert!(l.validate().is_valid());
    let a = GradedAlgebra::new(l, s3, labels).unwrap();
    let report = a.validate_grading();
    let (i, j) = report.violations[0].pair;
    let t = |c: &[usize]| GroupElement::cycles(3, &[c]).unwrap();
    assert_eq!((&a.labels()[i], &a.labels()[j]), (&t(&[1, 2]), &t(&[1, 3])));

    let (l, labels) = constructions::group_ring_commutator_negative(&GroupContext::z2()).unwrap();
    let a = GradedAlgebra::new(l, GroupContext::z2(), labels).unwrap();
    a.validate().unwrap();
    assert!(constructions::group_ring_commutator_negative(&GroupContext::z()).is_err());
}

#[test]
fn closing_identity_on_witnesses() {
    for a in [constructions::s3_witness(), constructions::free_witness()] {
        for cert in theorem::check_proposition(&a).unwrap().certificates {
            let (g, h) = cert.pair.unwrap();
            let r = theorem::final_identity_check(&a, &g, &h, 2, 100_000).unwrap();
            assert_eq!(r.tuples_checked, 13);
            assert!(r.violations.is_empty());
        }
    }
}
