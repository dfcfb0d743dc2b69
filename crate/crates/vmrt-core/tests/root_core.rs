#![allow(clippy::needless_range_loop)]

use std::collections::BTreeSet;

use proptest::prelude::*;
use vmrt_core::root_core::*;

fn t(f: Family, n: usize) -> CartanType {
    CartanType::new(f, n).unwrap()
}

fn all_types(max_rank: usize) -> Vec<CartanType> {
    (1..=max_rank).flat_map(CartanType::all_of_rank).collect()
}

fn set(v: &[usize]) -> BTreeSet<usize> {
    v.iter().copied().collect()
}

#[test]
fn rejects_degenerate_types() {
    assert!(CartanType::new(Family::B, 1).is_err());
    assert!(CartanType::new(Family::D, 2).is_err());
    assert!(CartanType::new(Family::E, 5).is_err());
    assert!(CartanType::new(Family::F, 3).is_err());
    assert!(CartanType::new(Family::A, 0).is_err());
}

#[test]
fn cartan_matrices_follow_bourbaki() {
    assert_eq!(cartan_matrix(t(Family::A, 1)), vec![vec![2]]);
    assert_eq!(cartan_matrix(t(Family::G, 2)), vec![vec![2, -1], vec![-3, 2]]);
    let b3 = cartan_matrix(t(Family::B, 3));
    assert_eq!(b3[1][2], -2);
    assert_eq!(b3[2][1], -1);
    for ty in all_types(9) {
        let a = cartan_matrix(ty);
        for i in 0..ty.rank() {
            assert_eq!(a[i][i], 2);
            for j in 0..ty.rank() {
                if i != j {
                    assert!((0..=3).contains(&(a[i][j] * a[j][i])));
                    assert_eq!(a[i][j] == 0, a[j][i] == 0);
                }
            }
        }
    }
}

#[test]
fn dimension_identities_up_to_rank_12() {
    for ty in all_types(12) {
        assert_eq!(lie_algebra_dimension(ty), ty.known_dimension(), "{ty}");
    }
}

#[test]
fn root_counts_and_highest_roots() {
    assert_eq!(positive_roots(t(Family::A, 2)).len(), 3);
    assert_eq!(positive_roots(t(Family::G, 2)).len(), 6);
    assert_eq!(highest_root(t(Family::G, 2)).coeffs, vec![3, 2]);
    assert_eq!(positive_roots(t(Family::E, 8)).len(), 120);
    assert_eq!(highest_root(t(Family::A, 5)).coeffs, vec![1; 5]);
    assert_eq!(highest_root(t(Family::C, 3)).coeffs, vec![2, 2, 1]);
    assert_eq!(highest_short_root(t(Family::C, 3)).coeffs, vec![1, 2, 1]);
    assert_eq!(highest_root(t(Family::F, 4)).coeffs, vec![2, 3, 4, 2]);
    assert_eq!(highest_root(t(Family::E, 8)).coeffs, vec![2, 3, 4, 6, 5, 4, 3, 2]);
    assert_eq!(highest_root(t(Family::B, 4)).coeffs, vec![1, 2, 2, 2]);
    assert_eq!(highest_short_root(t(Family::B, 4)).coeffs, vec![1, 1, 1, 1]);
    assert_eq!(highest_short_root(t(Family::E, 6)), highest_root(t(Family::E, 6)));
}

#[test]
fn roots_are_sorted_and_dominated_by_highest() {
    for ty in all_types(8) {
        let roots = positive_roots(ty);
        let top = highest_root(ty);
        assert!(roots
            .windows(2)
            .all(|w| (w[0].height(), &w[0].coeffs) < (w[1].height(), &w[1].coeffs)));
        assert!(roots.iter().all(|r| r.is_positive() && r.dominated_by(&top)));
    }
}

#[test]
fn parabolic_dimension_examples() {
    let b3 = DynkinDiagram::standard(t(Family::B, 3));
    assert_eq!(parabolic_dimension(&b3, &set(&[2])).unwrap(), 7);
    assert_eq!(parabolic_dimension(&b3, &set(&[])).unwrap(), 0);
    let g2 = DynkinDiagram::standard(t(Family::G, 2));
    assert_eq!(parabolic_dimension(&g2, &set(&[2])).unwrap(), 5);
    assert_eq!(
        parabolic_dimension(&g2, &set(&[7])),
        Err(vmrt_core::Error::NodeNotInDiagram(7))
    );
    let e8 = DynkinDiagram::standard(t(Family::E, 8));
    assert_eq!(parabolic_dimension(&e8, &set(&[8])).unwrap(), 57);
}

#[test]
fn full_flag_dimension() {
    for ty in all_types(8) {
        let d = DynkinDiagram::standard(ty);
        let all: BTreeSet<usize> = d.nodes().iter().copied().collect();
        assert_eq!(parabolic_dimension(&d, &all).unwrap(), positive_roots(ty).len());
    }
}

#[test]
fn graded_dimension_examples() {
    let a1 = DynkinDiagram::standard(t(Family::A, 1));
    let g = graded_dimensions(&a1, &set(&[1])).unwrap();
    assert_eq!(g.into_iter().collect::<Vec<_>>(), vec![(-1, 1), (0, 1), (1, 1)]);

    let g2 = DynkinDiagram::standard(t(Family::G, 2));
    let g = graded_dimensions(&g2, &set(&[2])).unwrap();
    assert_eq!(*g.keys().max().unwrap(), 2);
    assert_eq!(g[&2], 1);

    for n in 2..8 {
        let an = DynkinDiagram::standard(t(Family::A, n));
        let g = graded_dimensions(&an, &set(&[1, n])).unwrap();
        assert_eq!(*g.keys().max().unwrap(), 2);
        assert_eq!(g[&2], 1);
    }
}

/// Applies a word of simple reflections to a root.
fn reflect(a: &[Vec<i32>], word: &[usize], beta: &[i32]) -> Vec<i32> {
    let mut b = beta.to_vec();
    for &i in word.iter().rev() {
        let p: i32 = (0..a.len()).map(|k| b[k] * a[k][i]).sum();
        b[i] -= p;
    }
    b
}

/// Longest element as a reduced word, by walking rho to the antidominant chamber.
fn longest_word(a: &[Vec<i32>]) -> Vec<usize> {
    let n = a.len();
    // weight in fundamental-weight coordinates
    let mut w = vec![1i32; n];
    let mut word = Vec::new();
    while let Some(i) = (0..n).find(|&i| w[i] > 0) {
        let c = w[i];
        for j in 0..n {
            w[j] -= c * a[i][j];
        }
        word.push(i);
    }
    word
}

#[test]
fn minus_w0_matches_longest_element() {
    for ty in all_types(8) {
        let a = cartan_matrix(ty);
        let word = longest_word(&a);
        assert_eq!(word.len(), positive_roots(ty).len(), "{ty}");
        let perm = minus_w0(ty);
        for i in 0..ty.rank() {
            let img: Vec<i32> = reflect(&a, &word, &Root::simple(ty.rank(), i).coeffs)
                .iter()
                .map(|c| -c)
                .collect();
            assert_eq!(img, Root::simple(ty.rank(), perm[i] - 1).coeffs, "{ty} node {}", i + 1);
        }
    }
    assert_eq!(minus_w0(t(Family::A, 3)), vec![3, 2, 1]);
    assert_eq!(minus_w0(t(Family::E, 6)), vec![6, 2, 5, 4, 3, 1]);
    assert_eq!(minus_w0(t(Family::B, 5)), vec![1, 2, 3, 4, 5]);
}

#[test]
fn minus_w0_is_an_involutive_automorphism() {
    for ty in all_types(12) {
        let p = minus_w0(ty);
        let a = cartan_matrix(ty);
        for i in 0..ty.rank() {
            assert_eq!(p[p[i] - 1], i + 1);
            for j in 0..ty.rank() {
                assert_eq!(a[i][j], a[p[i] - 1][p[j] - 1]);
            }
        }
    }
}

#[test]
fn recognition_picks_bourbaki_labelling() {
    // B_3 drawn backwards on ids 10, 20, 30.
    let d = DynkinDiagram::from_parts([10, 20, 30], [Edge::new(10, 20, 2, Some(10)), Edge::simple(20, 30)]).unwrap();
    let c = &d.components()[0];
    assert_eq!(c.cartan_type, t(Family::B, 3));
    assert_eq!(c.nodes, vec![30, 20, 10]);
    // a double bond of two nodes is read as B_2
    let d = DynkinDiagram::from_parts([1, 2], [Edge::new(1, 2, 2, Some(1))]).unwrap();
    assert_eq!(d.components()[0].cartan_type, t(Family::B, 2));
    assert_eq!(d.components()[0].nodes, vec![2, 1]);
    // a cycle is not finite
    let cyc = DynkinDiagram::from_parts([1, 2, 3], [Edge::simple(1, 2), Edge::simple(2, 3), Edge::simple(1, 3)]);
    assert!(cyc.is_err());
}

fn arb_type() -> impl Strategy<Value = CartanType> {
    (1usize..=9, 0usize..7).prop_filter_map("valid", |(n, f)| CartanType::new(Family::ALL[f], n).ok())
}

proptest! {
    #[test]
    fn parabolic_dimension_is_monotone(ty in arb_type(), mask in 0u32..512, extra in 0usize..9) {
        let d = DynkinDiagram::standard(ty);
        let small: BTreeSet<usize> = (1..=ty.rank()).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        let mut big = small.clone();
        big.insert(extra % ty.rank() + 1);
        prop_assert!(parabolic_dimension(&d, &small).unwrap() <= parabolic_dimension(&d, &big).unwrap());
    }

    #[test]
    fn gradings_are_symmetric(ty in arb_type(), mask in 0u32..512) {
        let d = DynkinDiagram::standard(ty);
        let marked: BTreeSet<usize> = (1..=ty.rank()).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        let g = graded_dimensions(&d, &marked).unwrap();
        for (k, v) in &g {
            prop_assert_eq!(g.get(&-k), Some(v));
        }
        prop_assert_eq!(g.values().sum::<usize>(), ty.known_dimension());
    }
}
