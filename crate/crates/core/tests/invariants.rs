use arcalg::algebra::{AlgElem, FiniteAlgebra};
use arcalg::arc_algebra::ArcAlgebra;
use arcalg::colored_algebra::ColoredAlgebra;
use arcalg::diagram::{HalfIndex, SignSeq};
use arcalg::invariants::{
    catalan, center, center_ungraded, commutator_quotient_dim, corner_isomorphism_check, dim_table,
    generated_dim, is_central,
};
use arcalg::linalg::{coordinates, Rref};
use arcalg::rational::int;

#[test]
fn colored_centers() {
    for (n, expected) in [(1, 2), (2, 6), (3, 20)] {
        let k = ColoredAlgebra::new(n).unwrap();
        let z = center(&k);
        assert_eq!(z.dim(), expected, "n={n}");
        assert_eq!(
            z.top_degree(),
            Some((2 * n as i32, catalan(n as u64) as usize))
        );
        let mut rank = Rref::new();
        for e in &z.basis {
            assert!(is_central(&k, e));
            assert!(rank.insert(coordinates(&k, e)));
        }
        if n <= 2 {
            assert_eq!(center_ungraded(&k).len(), expected);
        }
    }
}

#[test]
fn sl2_center_basis() {
    let k = ColoredAlgebra::new(1).unwrap();
    let z = center(&k);
    assert_eq!(
        z.graded_dims
            .iter()
            .map(|(d, n)| (*d, *n))
            .collect::<Vec<_>>(),
        vec![(0, 1), (2, 1)]
    );
    assert_eq!(z.basis[0], k.unit());
    let x = k
        .x_alpha(0, 0, HalfIndex::from_twice(-1, 1).unwrap())
        .unwrap();
    let top = &z.basis[1];
    let (_, c) = top.iter().next().unwrap();
    assert_eq!(top.scale(&(int(1) / c.clone())), x);
}

#[test]
fn arc_algebra_centers_match_commutator_quotients() {
    for (m, expected) in [(1, 2), (2, 6), (3, 20)] {
        let h = ArcAlgebra::new(m).unwrap();
        let z = center(&h);
        assert_eq!(z.dim(), expected);
        assert_eq!(commutator_quotient_dim(&h), expected);
        assert_eq!(
            z.top_degree(),
            Some((2 * m as i32, catalan(m as u64) as usize))
        );
    }
    let k = ColoredAlgebra::new(2).unwrap();
    assert_eq!(commutator_quotient_dim(&k), 6);
}

#[test]
fn dimension_tables() {
    let k = ColoredAlgebra::new(1).unwrap();
    assert_eq!(dim_table(&k), vec![vec![2, 1], vec![1, 1]]);
    for n in 1..=3 {
        let k = ColoredAlgebra::new(n).unwrap();
        let t = dim_table(&k);
        for (i, row) in t.iter().enumerate() {
            for (j, d) in row.iter().enumerate() {
                assert_eq!(*d, t[j][i]);
            }
        }
        assert_eq!(t.iter().flatten().sum::<usize>(), k.dim());
        // The dominant row sees only the words +^r −^s +^s −^r.
        let dom = k.sequence_index(&SignSeq::dominant(n).unwrap()).unwrap();
        for (j, s) in k.sequences().iter().enumerate() {
            let text = s.to_string();
            let special = (0..=n).any(|r| {
                let q = n - r;
                text == format!(
                    "{}{}{}{}",
                    "+".repeat(r),
                    "-".repeat(q),
                    "+".repeat(q),
                    "-".repeat(r)
                )
            });
            assert_eq!(t[dom][j], usize::from(special), "{text}");
        }
    }
}

#[test]
fn corner_is_the_arc_algebra() {
    for n in 1..=3 {
        let k = ColoredAlgebra::new(n).unwrap();
        let report = corner_isomorphism_check(&k, n <= 2).unwrap();
        assert!(report.holds(), "n={n}: {:?}", report.mismatches);
        assert!(report.mismatches.is_empty());
        if n == 2 {
            assert_eq!(report.corner_dim, 12);
            assert_eq!(report.structure_constants_match, Some(true));
        }
        if n == 3 {
            assert_eq!(report.structure_constants_match, None);
        }
        for a in 0..k.idempotent_count() {
            if k.sequences()[a].is_cup_sequence() {
                assert_eq!(k.block(a, a).len(), 1 << n);
            }
        }
    }
}

#[test]
fn arc_algebra_generated_in_low_degree() {
    for m in 1..=3 {
        let h = ArcAlgebra::new(m).unwrap();
        assert_eq!(generated_dim(&h, 2), h.dim());
    }
    let h = ArcAlgebra::new(2).unwrap();
    assert!(generated_dim(&h, 0) < h.dim());
    let unit = h.unit();
    assert_eq!(h.mul(&unit, &unit), unit);
    assert!(AlgElem::zero().is_zero());
}
