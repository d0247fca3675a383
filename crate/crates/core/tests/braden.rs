use arcalg::algebra::{log_unipotent, AlgElem, FiniteAlgebra};
use arcalg::braden::{parent_swap_check, BradenGen, BradenMap, CkTable};
use arcalg::colored_algebra::ColoredAlgebra;
use arcalg::diagram::{eta, ExtSeq, HalfIndex};
use arcalg::rational::{frac, int};

fn ext(s: &str) -> ExtSeq {
    s.parse().unwrap()
}

#[test]
fn relations_hold_for_small_n() {
    for n in 1..=3 {
        let k = ColoredAlgebra::new(n).unwrap();
        let map = BradenMap::new(&k).unwrap();
        let report = map.check_relations().unwrap();
        for (family, r) in &report.families {
            assert!(
                r.failures.is_empty(),
                "n={n} {family}: {:?}",
                &r.failures[..r.failures.len().min(5)]
            );
        }
        if n == 1 {
            assert_eq!(report.families["diamond_commutes"].instances, 0);
            assert_eq!(report.families["diamond_out_of_box_vanishes"].instances, 0);
        } else {
            assert!(report.families["diamond_commutes"].instances > 0 || n == 2);
            assert!(report.families["diamond_out_of_box_vanishes"].instances > 0);
        }
        assert!(report.families["mu_from_p"].instances > 0);
    }
}

#[test]
fn sl2_generator_images() {
    let k = ColoredAlgebra::new(1).unwrap();
    let map = BradenMap::new(&k).unwrap();
    let lambda = ext("--++");
    let inner = HalfIndex::from_twice(-1, 1).unwrap();
    assert_eq!(eta(HalfIndex::from_twice(1, 1).unwrap()), -1);
    let t = map
        .eval(&BradenGen::T {
            point: inner,
            vertex: lambda.clone(),
        })
        .unwrap();
    let e = map.eval(&BradenGen::Idempotent(lambda.clone())).unwrap();
    let x_black = k.x_alpha(0, 0, inner).unwrap();
    assert_eq!(t, &e - &x_black);
    assert_eq!(k.mul(&e, &e), e);
    let ln_t = log_unipotent(&k, &e, &t).unwrap();
    assert_eq!(ln_t, -&x_black);
    assert_eq!(k.homogeneous_degree(&ln_t), Some(2));
    let other = BradenGen::T {
        point: HalfIndex::from_twice(1, 1).unwrap(),
        vertex: lambda.clone(),
    };
    assert_eq!(k.mul(&t, &map.eval(&other).unwrap()), e);
    assert!(map.eval(&BradenGen::Idempotent(ext("-++-"))).is_err());
    assert!(map.eval(&BradenGen::P(lambda.clone(), lambda)).is_err());
}

#[test]
fn p_images_carry_a_half() {
    let k = ColoredAlgebra::new(1).unwrap();
    let map = BradenMap::new(&k).unwrap();
    let (a, b) = (ext("--++"), ext("-+-+"));
    // In the one-circle spaces X is killed by the green color, so p is the bare 1.
    let p_ab = map.eval(&BradenGen::P(a.clone(), b.clone())).unwrap();
    assert_eq!(p_ab, k.ones(0, 1));
    let mu = map.eval(&BradenGen::Mu(a.clone(), b.clone())).unwrap();
    let p_ba = map.eval(&BradenGen::P(b, a)).unwrap();
    assert_eq!(
        mu,
        &AlgElem::basis(k.k_idempotent(0)) + &k.mul(&p_ab, &p_ba)
    );
    for (_, c) in p_ab.iter() {
        assert!(*c == int(1) || *c == frac(1, 2));
    }
}

#[test]
fn c_k_coefficients() {
    let t = CkTable::new(12);
    assert_eq!(t.coeffs()[..3], [int(1), frac(-1, 4), frac(13, 96)]);
    assert!(t.convolution_holds());
}

#[test]
fn regraded_generators_are_homogeneous() {
    for n in 1..=3 {
        let k = ColoredAlgebra::new(n).unwrap();
        let map = BradenMap::new(&k).unwrap();
        let (report, gens) = map.regraded_generators().unwrap();
        assert!(report.failures.is_empty(), "n={n}: {:?}", report.failures);
        assert_eq!(report.degrees["e"], vec![Some(0)]);
        assert_eq!(report.degrees["ln_t"], vec![Some(2)]);
        assert_eq!(report.degrees["p_tilde"], vec![Some(1)]);
        assert_eq!(report.degrees["ln_mu"], vec![Some(2)]);
        if n <= 2 {
            assert_eq!(arcalg::linalg::product_closure(&k, &gens), k.dim());
        }
    }
}

#[test]
fn quiver_matches_degree_one() {
    for n in 1..=3 {
        let k = ColoredAlgebra::new(n).unwrap();
        let q = BradenMap::new(&k).unwrap().ext_quiver();
        assert!(q.consistent, "n={n}");
        let m = q.labels.len();
        for i in 0..m {
            assert_eq!(q.adjacency[i][i], 0);
            for j in 0..m {
                assert_eq!(q.adjacency[i][j], q.adjacency[j][i]);
            }
        }
        if n == 1 {
            assert_eq!(q.adjacency, vec![vec![0, 1], vec![1, 0]]);
        }
    }
}

#[test]
fn generators_span_everything() {
    for (n, dim) in [(1, 5), (2, 0), (3, 0)] {
        let k = ColoredAlgebra::new(n).unwrap();
        let map = BradenMap::new(&k).unwrap();
        let (span, total) = map.generation_check().unwrap();
        assert_eq!(span, total, "n={n}");
        if dim > 0 {
            assert_eq!(total, dim);
        }
        let degree_zero: Vec<AlgElem> = k.graded_piece(0).into_iter().map(AlgElem::basis).collect();
        let idempotents: Vec<AlgElem> = (0..k.idempotent_count())
            .map(|i| AlgElem::basis(k.k_idempotent(i)))
            .collect();
        assert_eq!(degree_zero, idempotents);
    }
}

#[test]
fn parent_swap_property() {
    for n in 1..=3 {
        let (checked, failures) = parent_swap_check(n).unwrap();
        assert!(checked > 0);
        assert!(failures.is_empty(), "n={n}: {failures:?}");
    }
}

#[test]
fn loops_are_nilpotent() {
    for n in 1..=3 {
        let k = ColoredAlgebra::new(n).unwrap();
        let map = BradenMap::new(&k).unwrap();
        let indices = map.nilpotency().unwrap();
        assert_eq!(indices.len(), map.edges().len());
        assert!(indices
            .iter()
            .all(|&(ix, iy)| ix >= 1 && iy >= 1 && ix <= 2 * n + 1));
    }
}
