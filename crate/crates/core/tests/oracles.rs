mod common;

use num_bigint::BigUint;
use proptest::prelude::*;
use schubert::classical::{
    ann_index, associated_sequence, coset_to_gr, dual_index, gr_dimension, GrIndex,
    IsotropicFamily, IsotropicIndex,
};
use schubert::constructions::pairing;
use schubert::exceptional::e6_poset;
use schubert::lattice::{build_cartan, CartanType};
use schubert::poset::{build_quotient_poset, QuotientPoset};
use schubert::rigidity::{classify_gr, classify_isotropic};

fn hook_length(shape: &[usize]) -> u64 {
    let cells: usize = shape.iter().sum();
    let mut num: u128 = (1..=cells as u128).product();
    let mut den: u128 = 1;
    for (r, &len) in shape.iter().enumerate() {
        for c in 0..len {
            let arm = len - c - 1;
            let leg = shape[r + 1..].iter().filter(|&&l| l > c).count();
            den *= (arm + leg + 1) as u128;
        }
    }
    num /= den;
    num as u64
}

#[test]
fn tableau_enumerator_agrees_with_hook_lengths() {
    for rows in 1..=4 {
        for cols in 1..=4 {
            for idx in GrIndex::all(rows, rows + cols).unwrap() {
                let shape = common::gr_shape(idx.lambda());
                let nonzero: Vec<usize> = shape.iter().copied().filter(|&x| x > 0).collect();
                assert_eq!(
                    common::syt_count(&shape),
                    hook_length(&nonzero),
                    "{shape:?}"
                );
            }
        }
    }
    assert_eq!(common::syt_count(&[2, 2]), 2);
    assert_eq!(common::syt_count(&[3, 2, 1]), 16);
}

#[test]
fn clause_oracle_on_worked_examples() {
    assert!(common::gr_rigid_oracle(2, 4, &[2, 3]));
    assert!(!common::gr_rigid_oracle(2, 4, &[2, 4]));
    assert!(!common::gr_rigid_oracle(3, 7, &[1, 3, 6]));
    assert!(!common::isotropic_rigid_oracle(true, 2, &[1]));
    assert!(!common::isotropic_rigid_oracle(true, 3, &[1, 2]));
    assert!(common::isotropic_rigid_oracle(false, 5, &[1, 2]));
}

#[test]
fn lagrangian_top_entry_is_flexible() {
    for n in 2..=6 {
        let idx = IsotropicIndex::new(IsotropicFamily::LG, n, vec![n]).unwrap();
        assert!(!classify_isotropic(&idx).is_rigid());
    }
}

#[test]
fn exactly_one_dual_partner_on_g25() {
    let all = GrIndex::all(2, 5).unwrap();
    for lambda in &all {
        let ones = all
            .iter()
            .filter(|nu| gr_dimension(nu) + gr_dimension(lambda) == 6)
            .filter(|nu| pairing(nu, lambda).unwrap() == 1)
            .count();
        assert_eq!(ones, 1, "{lambda}");
    }
}

/// Order-reversing bijections of the Hasse diagram, by backtracking over
/// nodes in dimension order.
fn anti_automorphisms(p: &QuotientPoset) -> Vec<Vec<usize>> {
    let n = p.len();
    let top = p.top_dim();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (p.dim(v), v));
    let covers = |u: usize, v: usize| p.hasse().covers_above(u).contains(&v);
    #[allow(clippy::too_many_arguments)]
    fn go(
        k: usize,
        order: &[usize],
        phi: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        p: &QuotientPoset,
        top: usize,
        covers: &dyn Fn(usize, usize) -> bool,
        out: &mut Vec<Vec<usize>>,
    ) {
        if k == order.len() {
            out.push(phi.iter().map(|x| x.unwrap()).collect());
            return;
        }
        let v = order[k];
        for w in 0..p.len() {
            if used[w] || p.dim(w) + p.dim(v) != top {
                continue;
            }
            let ok = order[..k].iter().all(|&u| {
                let fu = phi[u].unwrap();
                covers(u, v) == covers(w, fu)
            });
            if ok {
                phi[v] = Some(w);
                used[w] = true;
                go(k + 1, order, phi, used, p, top, covers, out);
                used[w] = false;
                phi[v] = None;
            }
        }
    }
    let mut out = Vec::new();
    go(
        0,
        &order,
        &mut vec![None; n],
        &mut vec![false; n],
        p,
        top,
        &covers,
        &mut out,
    );
    out
}

#[test]
fn cayley_plane_duality_by_brute_force() {
    let p = e6_poset().unwrap();
    let maps = anti_automorphisms(&p);
    assert!(!maps.is_empty());
    let dual: Vec<usize> = (0..p.len()).map(|v| p.poincare_dual(v).unwrap()).collect();
    assert!(maps.contains(&dual));
    let v = p.nodes_by_dim_deg(11, &BigUint::from(12u32))[0];
    for m in &maps {
        assert_eq!(p.dim_deg_label(m[v]), "5:1");
    }
}

#[test]
fn grassmannian_degrees_by_tableaux_beyond_seven() {
    let p = build_quotient_poset(&build_cartan(CartanType::A, 7).unwrap(), &[4]).unwrap();
    for v in 0..p.len() {
        let idx = coset_to_gr(&p, v).unwrap();
        let shape = common::gr_shape(idx.lambda());
        assert_eq!(
            *p.hasse().degree(v),
            BigUint::from(common::syt_count(&shape))
        );
    }
}

fn gr_index() -> impl Strategy<Value = GrIndex> {
    (2usize..=10)
        .prop_flat_map(|n| (Just(n), 1..n))
        .prop_flat_map(|(n, k)| {
            (
                Just(n),
                Just(k),
                proptest::sample::subsequence((1..=n).collect::<Vec<_>>(), k),
            )
        })
        .prop_map(|(n, k, l)| GrIndex::new(k, n, l).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn annihilator_is_an_involution(idx in gr_index()) {
        let image = ann_index(&idx);
        prop_assert_eq!(image.k(), idx.n() - idx.k());
        prop_assert_eq!(gr_dimension(&image), gr_dimension(&idx));
        prop_assert_eq!(ann_index(&image), idx);
    }

    #[test]
    fn annihilator_preserves_rigidity(idx in gr_index()) {
        prop_assert_eq!(classify_gr(&idx).status, classify_gr(&ann_index(&idx)).status);
    }

    #[test]
    fn dual_is_an_involution(idx in gr_index()) {
        let d = dual_index(&idx);
        prop_assert_eq!(gr_dimension(&d) + gr_dimension(&idx), idx.k() * (idx.n() - idx.k()));
        prop_assert_eq!(dual_index(&d), idx.clone());
        prop_assert_eq!(d.lambda().to_vec(), common::dual_formula(idx.n(), idx.lambda()));
    }

    #[test]
    fn associated_sequence_round_trip(idx in gr_index()) {
        let mu = associated_sequence(idx.lambda()).unwrap();
        prop_assert_eq!(mu.to_lambda(), idx.lambda().to_vec());
    }

    #[test]
    fn classifier_matches_oracle(idx in gr_index()) {
        prop_assert_eq!(
            classify_gr(&idx).is_rigid(),
            common::gr_rigid_oracle(idx.k(), idx.n(), idx.lambda())
        );
    }
}
