mod common;

use cauchon::verify::shapes_up_to;
use cauchon::{
    all_minors, enumerate, minor_to_plucker, necklace_from_diagram, vanishes, vanishing_minor_set,
    CauchonDiagram, GaleOrder, GrassmannNecklace, NecklaceViolation, Subset,
};

#[test]
fn necklaces_match_the_path_oracle() {
    for (m, n) in shapes_up_to(6) {
        for d in enumerate(m, n).unwrap() {
            assert_eq!(
                necklace_from_diagram(&d).terms(),
                common::necklace_oracle(&d).as_slice(),
                "\n{d}"
            );
        }
    }
}

#[test]
fn vanishing_sets_match_the_path_oracle() {
    for d in enumerate(3, 3).unwrap() {
        let set = vanishing_minor_set(&d);
        for mi in all_minors(3, 3) {
            assert_eq!(set.contains(&mi), common::path_oracle_vanishes(&d, &mi), "{mi}\n{d}");
        }
    }
}

#[test]
fn gale_order_matches_definition() {
    let d = 6;
    let subsets = common::subsets(d, 3);
    for base in 1..=d {
        let order = GaleOrder::new(d, base).unwrap();
        for &s in &subsets {
            for &t in &subsets {
                assert_eq!(
                    order.leq(s, t).unwrap(),
                    common::gale_leq_oracle(d, base, s, t)
                );
            }
        }
    }
}

#[test]
fn computed_necklaces_satisfy_the_axioms() {
    for (m, n) in shapes_up_to(7) {
        for d in enumerate(m, n).unwrap() {
            let nk = necklace_from_diagram(&d);
            let rebuilt = GrassmannNecklace::new(m, n, nk.terms().to_vec(), true).unwrap();
            assert_eq!(rebuilt, nk);
            assert!(nk.is_gale_consistent());
        }
    }
}

#[test]
fn printed_seventh_term_is_rejected() {
    let err = GrassmannNecklace::parse_compact(3, 4, "123,234,346,246,256,267,238").unwrap_err();
    assert!(err.to_string().contains('8'), "{err}");
    let terms: Vec<Subset> = ["123", "234", "346", "246", "256", "267", "238"]
        .iter()
        .map(|t| Subset::parse(t, 8).unwrap())
        .collect();
    assert_eq!(
        cauchon::validate_necklace(3, 4, &terms, true),
        Err(NecklaceViolation::OutOfRange { term: 7, element: 8 })
    );
}

#[test]
fn necklace_terms_never_vanish() {
    for d in enumerate(3, 4).unwrap() {
        let nk = necklace_from_diagram(&d);
        for &t in nk.terms() {
            assert!(!vanishes(&nk, t).unwrap());
        }
    }
}

#[test]
fn extreme_vanishing_sets() {
    let minors = all_minors(2, 3);
    assert!(vanishing_minor_set(&CauchonDiagram::all_white(2, 3).unwrap()).is_empty());
    let black = vanishing_minor_set(&CauchonDiagram::all_black(2, 3).unwrap());
    assert_eq!(black.len(), minors.len());
    assert!(minors.iter().all(|mi| !mi.is_unit() && black.contains(mi)));
}

#[test]
fn vanishing_rejects_wrong_sizes() {
    let nk = necklace_from_diagram(&CauchonDiagram::all_white(2, 2).unwrap());
    assert!(vanishes(&nk, Subset::parse("1", 4).unwrap()).is_err());
    assert!(vanishes(&nk, Subset::parse("15", 5).unwrap()).is_err());
    let mi = cauchon::MinorIndex::from_lists(2, 2, &[1], &[2]).unwrap();
    assert!(!vanishes(&nk, minor_to_plucker(2, 2, &mi).unwrap()).unwrap());
}

#[test]
fn necklace_json_validates() {
    let nk = necklace_from_diagram(&CauchonDiagram::parse("++0+\n000+\n0+++").unwrap());
    let j = serde_json::to_string(&nk).unwrap();
    assert_eq!(serde_json::from_str::<GrassmannNecklace>(&j).unwrap(), nk);
    let broken = j.replace("[2,3,7]", "[2,3,6]");
    assert!(serde_json::from_str::<GrassmannNecklace>(&broken).is_err());
}
