mod common;

use proptest::prelude::*;

use cauchon::permutation::{fy_minor, w_of};
use cauchon::subset::k_subsets;
use cauchon::{
    all_minors, expand_quantum_minor, minor_to_plucker, necklace_from_diagram,
    necklace_from_permutation, ore_generators, permutation_from_diagram, plucker_to_minor,
    CauchonDiagram, GaleOrder, MinorIndex, Permutation, Square, Subset,
};

fn diagram() -> impl Strategy<Value = CauchonDiagram> {
    (1usize..=6, 1usize..=6, any::<u64>()).prop_map(|(m, n, seed)| common::random_diagram(m, n, seed))
}

fn subset_triple(d: usize, k: usize) -> impl Strategy<Value = (Subset, Subset, Subset)> {
    let all = k_subsets(d, k);
    let pick = move || proptest::sample::select(all.clone());
    (pick(), pick(), pick())
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #[test]
    fn gale_order_is_a_partial_order(base in 1usize..=7, (s, t, u) in subset_triple(7, 3)) {
        let o = GaleOrder::new(7, base).unwrap();
        prop_assert!(o.leq(s, s).unwrap());
        if o.leq(s, t).unwrap() && o.leq(t, s).unwrap() {
            prop_assert_eq!(s, t);
        }
        if o.leq(s, t).unwrap() && o.leq(t, u).unwrap() {
            prop_assert!(o.leq(s, u).unwrap());
        }
    }

    #[test]
    fn subset_text_round_trip(bits in any::<u64>()) {
        let s = Subset::from_bits(bits);
        prop_assert_eq!(s.to_string().parse::<Subset>().unwrap(), s);
        let j = serde_json::to_string(&s).unwrap();
        prop_assert_eq!(serde_json::from_str::<Subset>(&j).unwrap(), s);
    }

    #[test]
    fn diagram_text_and_json_round_trip(d in diagram()) {
        prop_assert_eq!(CauchonDiagram::parse(&d.to_text()).unwrap(), d.clone());
        let j = serde_json::to_string(&d).unwrap();
        prop_assert_eq!(serde_json::from_str::<CauchonDiagram>(&j).unwrap(), d);
    }

    #[test]
    fn permutation_text_round_trip(d in diagram()) {
        let v = permutation_from_diagram(&d);
        prop_assert_eq!(v.to_string().parse::<Permutation>().unwrap(), v.clone());
        prop_assert_eq!(v.length(), d.black_count());
        prop_assert_eq!(v.compose(&v.inverse()), Permutation::identity(v.degree()));
    }

    #[test]
    fn chains_survive_truncation(d in diagram(), r in 1usize..=6, c in 1usize..=6) {
        let (m, n) = d.shape();
        let sq = Square::new(r.min(m), c.min(n));
        let cut = d.truncate(sq.row, sq.col).unwrap();
        prop_assert_eq!(cut.chain_rooted_at(sq).unwrap(), d.chain_rooted_at(sq).unwrap());
    }

    #[test]
    fn chain_and_permutation_routes_agree_on_large_shapes(d in diagram()) {
        let (m, n) = d.shape();
        let v = permutation_from_diagram(&d);
        prop_assert_eq!(necklace_from_permutation(&v, m, n).unwrap(), necklace_from_diagram(&d));
        let e = ore_generators(&d);
        for g in &e.entries {
            prop_assert_eq!(fy_minor(&v, g.k, m, n).unwrap(), g.minor);
        }
    }

    #[test]
    fn plucker_translation_is_a_bijection(m in 1usize..=5, n in 1usize..=5) {
        let mut minors = vec![MinorIndex::UNIT];
        minors.extend(all_minors(m, n));
        let total: usize = (0..=m.min(n)).map(|r| binomial(m, r) * binomial(n, r)).sum();
        prop_assert_eq!(minors.len(), total);
        prop_assert_eq!(total, binomial(m + n, m));
        let mut images: Vec<Subset> = minors
            .iter()
            .map(|mi| minor_to_plucker(m, n, mi).unwrap())
            .collect();
        for (mi, &p) in minors.iter().zip(&images) {
            prop_assert_eq!(p, common::plucker_of(m, n, mi));
            prop_assert_eq!(plucker_to_minor(m, n, p).unwrap(), *mi);
        }
        images.sort();
        images.dedup();
        prop_assert_eq!(images.len(), total);
    }

    #[test]
    fn expansion_has_mahonian_exponents(r in 1usize..=6, shift in 0usize..=2) {
        let rows: Vec<usize> = (1..=r).collect();
        let cols: Vec<usize> = (1 + shift..=r + shift).collect();
        let mi = MinorIndex::from_lists(r, r + shift, &rows, &cols).unwrap();
        let e = expand_quantum_minor(&mi).unwrap();
        let fact: usize = (1..=r).product();
        prop_assert_eq!(e.terms.len(), fact);
        // Coefficients of [1]_q [2]_q ... [r]_q.
        let mut mahonian = vec![1usize];
        for k in 1..=r {
            let mut next = vec![0; mahonian.len() + k - 1];
            for (i, &c) in mahonian.iter().enumerate() {
                for j in 0..k {
                    next[i + j] += c;
                }
            }
            mahonian = next;
        }
        let mut seen = vec![0usize; mahonian.len()];
        for t in &e.terms {
            seen[t.exponent] += 1;
        }
        prop_assert_eq!(seen, mahonian);
    }

    #[test]
    fn permutations_lie_below_the_coxeter_power(d in diagram()) {
        let (m, n) = d.shape();
        let v = permutation_from_diagram(&d);
        prop_assert!(cauchon::is_restricted(&v, m, n).unwrap());
        prop_assert!(cauchon::bruhat_leq(&v, &w_of(m, n)).unwrap());
    }
}
