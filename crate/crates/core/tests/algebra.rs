use graded_lie::constructions::{self, RandomParams};
use graded_lie::linalg::{rat, ratio};
use graded_lie::{GradedAlgebra, LieAlgebra, Rational, Subspace, Vector};
use proptest::prelude::*;

fn cases(n: u32) -> ProptestConfig {
    ProptestConfig {
        cases: n,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

/// Dense table `c[i][j]` of `[e_i, e_j]`, expanded by antisymmetry.
struct Dense {
    n: usize,
    c: Vec<Vec<Vec<Rational>>>,
}

impl Dense {
    fn of(l: &LieAlgebra) -> Dense {
        let n = l.dim();
        let mut c = vec![vec![vec![rat(0); n]; n]; n];
        for (i, j, v) in l.constants() {
            for k in 0..n {
                c[i][j][k] = v[k].clone();
                c[j][i][k] = -v[k].clone();
            }
        }
        Dense { n, c }
    }

    fn bracket(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = vec![rat(0); self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                let w = &x[i] * &y[j];
                if w == rat(0) {
                    continue;
                }
                for (k, slot) in out.iter_mut().enumerate() {
                    *slot += &w * &self.c[i][j][k];
                }
            }
        }
        Vector::new(out)
    }

    fn jacobi_holds(&self) -> bool {
        let e = |i| Vector::unit(self.n, i);
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                (0..self.n).all(|k| {
                    let a = self.bracket(&e(i), &self.bracket(&e(j), &e(k)));
                    let b = self.bracket(&e(j), &self.bracket(&e(k), &e(i)));
                    let c = self.bracket(&e(k), &self.bracket(&e(i), &e(j)));
                    (&(&a + &b) + &c).is_zero()
                })
            })
        })
    }

    /// Span of all `ad_{e_i1} ... ad_{e_ik} s`, grown until stable.
    fn closure(&self, s: &Subspace) -> Subspace {
        let mut acc = s.clone();
        let mut frontier: Vec<Vector> = s.basis().to_vec();
        while let Some(v) = frontier.pop() {
            for i in 0..self.n {
                let w = self.bracket(&Vector::unit(self.n, i), &v);
                if !acc.contains(&w).unwrap() {
                    acc = acc.sum(&Subspace::span(self.n, [w.clone()]).unwrap()).unwrap();
                    frontier.push(w);
                }
            }
        }
        acc
    }
}

fn small_vector(n: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(-3i64..=3, n).prop_map(|v| Vector::from_ints(&v))
}

fn corpus() -> Vec<GradedAlgebra> {
    let mut out: Vec<GradedAlgebra> = constructions::zoo().into_iter().map(|(_, a)| a).collect();
    for (seed, backend) in ["s3", "f2", "z2", "s3xz"].iter().enumerate() {
        let params = RandomParams {
            blocks: 3,
            backend: constructions::parse_backend(backend).unwrap(),
            max_dim: 12,
            max_support: 8,
        };
        out.push(constructions::random_graded(seed as u64, &params).unwrap());
    }
    out
}

#[test]
fn sl2_perturbations_match_jacobi_oracle() {
    let base = constructions::sl2();
    let records: Vec<(usize, usize, Vector)> = base.constants().map(|(i, j, v)| (i, j, v.clone())).collect();
    let mut rejected = 0;
    for trial in 0..50usize {
        let mut recs = records.clone();
        let which = trial % 3;
        let coord = (trial / 3) % 3;
        let delta = ratio((trial as i64 % 5) - 2, 1 + (trial as i64 % 3));
        recs[which].2[coord] += delta;
        let l = LieAlgebra::new(3, recs).unwrap();
        let oracle = Dense::of(&l).jacobi_holds();
        let report = l.validate();
        assert_eq!(report.is_valid(), oracle, "trial {trial}");
        for f in &report.failures {
            let (i, j, k) = f.triple;
            assert_eq!(f.residual, l.jacobi_residual(i, j, k));
            assert!(!f.residual.is_zero());
        }
        rejected += usize::from(!oracle);
    }
    assert!(rejected > 0);
}

#[test]
fn bracket_matches_dense_oracle() {
    for a in corpus() {
        let dense = Dense::of(a.algebra());
        let n = a.dim();
        let mut runner = proptest::test_runner::TestRunner::new(cases(20));
        runner
            .run(&(small_vector(n), small_vector(n), small_vector(n), -3i64..=3), |(x, y, z, c)| {
                let l = a.algebra();
                let xy = l.bracket(&x, &y).unwrap();
                prop_assert_eq!(&xy, &dense.bracket(&x, &y));
                prop_assert_eq!(&l.bracket(&y, &x).unwrap(), &-&xy);
                let lhs = l.bracket(&(&x.scale(&rat(c)) + &z), &y).unwrap();
                let rhs = &xy.scale(&rat(c)) + &l.bracket(&z, &y).unwrap();
                prop_assert_eq!(lhs, rhs);
                Ok(())
            })
            .unwrap();
    }
}

#[test]
fn bracket_sub_is_span_of_brackets() {
    for a in corpus() {
        let n = a.dim();
        let dense = Dense::of(a.algebra());
        let support = a.support();
        for g in &support {
            for h in &support {
                let u = a.component(g);
                let v = a.component(h);
                let expected = Subspace::span(
                    n,
                    u.basis().iter().flat_map(|x| v.basis().iter().map(|y| dense.bracket(x, y))),
                )
                .unwrap();
                assert_eq!(a.algebra().bracket_sub(&u, &v).unwrap(), expected);
            }
        }
    }
}

#[test]
fn ideal_closure_correct_minimal_idempotent() {
    let corpus = corpus();
    let mut runner = proptest::test_runner::TestRunner::new(cases(200));
    let strategy = (0..corpus.len()).prop_flat_map(|k| {
        let n = corpus[k].dim();
        (Just(k), prop::collection::vec(small_vector(n), 0..=2))
    });
    runner
        .run(&strategy, |(k, rows)| {
            let a = &corpus[k];
            let n = a.dim();
            let s = Subspace::span(n, rows).unwrap();
            let l = a.algebra();
            let closure = l.ideal_closure(&s).unwrap();
            prop_assert!(s.is_subspace_of(&closure).unwrap());
            prop_assert!(l.is_ideal(&closure).unwrap());
            prop_assert_eq!(&l.ideal_closure(&closure).unwrap(), &closure);
            // the oracle span is contained in every ideal containing s
            prop_assert_eq!(&closure, &Dense::of(l).closure(&s));
            Ok(())
        })
        .unwrap();
}

#[test]
fn components_decompose_and_grading_propagates() {
    for a in corpus() {
        let n = a.dim();
        let support = a.support();
        let mut total = Subspace::zero(n);
        for g in &support {
            let c = a.component(g);
            assert!(total.intersect(&c).unwrap().is_zero());
            total = total.sum(&c).unwrap();
        }
        assert_eq!(total, Subspace::full(n));

        let ctx = a.ctx();
        let tuples: Vec<Vec<_>> = support
            .iter()
            .flat_map(|g| support.iter().map(move |h| vec![g.clone(), h.clone()]))
            .flat_map(|t| support.iter().map(move |k| [t.clone(), vec![k.clone()]].concat()))
            .collect();
        for t in tuples.iter().take(400) {
            for len in 1..=t.len() {
                let gs = &t[..len];
                let bracket = a.nested_bracket(gs).unwrap();
                let target = a.component(&ctx.product(gs).unwrap());
                assert!(bracket.is_subspace_of(&target).unwrap(), "{gs:?}");
            }
        }
    }
}

#[test]
fn graded_closures_on_zoo() {
    for (name, a) in constructions::zoo() {
        for g in a.support() {
            let closure = a.algebra().ideal_closure(&a.component(&g)).unwrap();
            assert!(a.is_graded_ideal(&closure).unwrap(), "{name} {g}");
        }
    }
}

proptest! {
    #![proptest_config(cases(200))]

    #[test]
    fn element_support_properties(x in small_vector(6), y in small_vector(6)) {
        let a = constructions::s3_witness();
        let sx = a.element_support(&x).unwrap();
        let sy = a.element_support(&y).unwrap();
        let sum = a.element_support(&(&x + &y)).unwrap();
        prop_assert!(sum.iter().all(|g| sx.contains(g) || sy.contains(g)));
        prop_assert_eq!(sx.is_empty(), x.is_zero());
        for g in &sx {
            let projected: Vector = (0..6)
                .map(|i| if a.labels()[i] == *g { x[i].clone() } else { rat(0) })
                .collect();
            prop_assert!(!projected.is_zero());
            prop_assert!(a.component(g).contains(&projected).unwrap());
        }
    }
}
