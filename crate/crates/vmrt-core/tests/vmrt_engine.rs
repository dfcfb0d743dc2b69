use std::collections::{BTreeMap, BTreeSet};

use vmrt_core::affine::{affine_diagram, MarkedKacDiagram, SpaceKind};
use vmrt_core::atlas::{enumerate, kac_diagram, lookup, SymmetricSpaceEntry};
use vmrt_core::render_io::{parse_marked, to_canonical_text};
use vmrt_core::root_core::{CartanType, DynkinDiagram, Family};
use vmrt_core::vmrt_engine::{
    contact_grading_check, fold, fold_consistency, identify, normalize_name, vmrt, z_dimension, z_orbit_diagram,
    FoldingPair, MarkedDynkinDiagram, VmrtKind,
};
use vmrt_core::Error;

fn entry(label: &str, params: &[(&str, usize)]) -> SymmetricSpaceEntry {
    let p: BTreeMap<String, usize> = params.iter().map(|(k, v)| (k.to_string(), *v)).collect();
    lookup(label, &p).unwrap()
}

fn z_texts(e: &SymmetricSpaceEntry) -> Vec<String> {
    z_orbit_diagram(&kac_diagram(e), e.kind)
        .unwrap()
        .iter()
        .map(to_canonical_text)
        .collect()
}

fn ty(f: Family, n: usize) -> CartanType {
    CartanType::new(f, n).unwrap()
}

fn text(s: &str) -> String {
    to_canonical_text(&parse_marked(s).unwrap())
}

#[test]
fn z_diagrams_of_small_rows() {
    assert_eq!(z_texts(&entry("group-G", &[])), ["o<#x"]);
    assert_eq!(z_texts(&entry("group-B", &[("n", 3)])), ["o-x=>o"]);
    assert_eq!(z_texts(&entry("AI", &[("n", 3)])), ["x[4]"]);
    assert_eq!(z_texts(&entry("G", &[])), ["x + x[3]"]);
    assert_eq!(
        z_texts(&entry("herm-CI", &[("n", 3)])),
        [text("x[2]-o + o-x[2] ~sigma")]
    );
    assert_eq!(z_texts(&entry("herm-AI", &[])), ["empty ~sigma"]);
    assert_eq!(z_texts(&entry("herm-EIII", &[])).len(), 2);
}

#[test]
fn sigma_halves_are_swapped_by_the_pairing() {
    let z = z_orbit_diagram(
        &kac_diagram(&entry("herm-EVII", &[])),
        SpaceKind::HermitianNonexceptional,
    )
    .unwrap();
    let (a, b) = z[0].halves().unwrap();
    assert_eq!(identify(&a), "E_6/P_1");
    assert_eq!(identify(&b), "E_6/P_6");
    assert_eq!(identify(&z[0]), "E_6/P_1 ⊔ E_6/P_6");
    assert_eq!(z_dimension(&z[0]), 16);
}

#[test]
fn invalid_markings_are_rejected() {
    let d = affine_diagram(ty(Family::E, 6), 1).unwrap();
    let m = MarkedKacDiagram::new(d, [4]).unwrap();
    assert!(matches!(
        z_orbit_diagram(&m, SpaceKind::Simple),
        Err(Error::InvalidMarking(_))
    ));
    let d = affine_diagram(ty(Family::B, 3), 1).unwrap();
    let m = MarkedKacDiagram::new(d, [0, 2]).unwrap();
    assert!(z_orbit_diagram(&m, SpaceKind::HermitianNonexceptional).is_err());
}

#[test]
fn vmrt_kinds_and_dimensions() {
    let v = vmrt(&entry("group-G", &[])).unwrap();
    assert_eq!(
        (v.kind, v.dimension, v.identification.as_str()),
        (VmrtKind::LegendrianZ, 5, "G_2/P_2")
    );
    let v = vmrt(&entry("BII", &[("n", 4)])).unwrap();
    assert_eq!(
        (v.kind, v.dimension, v.identification.as_str()),
        (VmrtKind::FullProjectiveSpace, 7, "P^7")
    );
    let v = vmrt(&entry("AI", &[("n", 5)])).unwrap();
    assert_eq!(
        (v.kind, v.dimension, v.identification.as_str()),
        (VmrtKind::TypeAGPlambda, 4, "ν_2(P^4)")
    );
    let v = vmrt(&entry("EIV", &[])).unwrap();
    assert_eq!((v.dimension, v.identification.as_str()), (16, "E_6/P_1"));
    let v = vmrt(&entry("herm-DIII", &[("n", 5)])).unwrap();
    assert_eq!(v.components.len(), 2);
    assert_eq!(normalize_name(&v.identification), normalize_name("Gr(3,5) and Gr(2,5)"));
    let v = vmrt(&entry("BI", &[("n", 6), ("m", 5)])).unwrap();
    assert_eq!(v.alias.as_deref(), Some("Q_5 × Q_8"));
}

#[test]
fn group_type_dimensions_match_adjoint_varieties() {
    for (label, dim) in [
        ("group-G", 5),
        ("group-F4", 15),
        ("group-E6", 21),
        ("group-E7", 33),
        ("group-E8", 57),
    ] {
        assert_eq!(vmrt(&entry(label, &[])).unwrap().dimension, dim, "{label}");
    }
    for n in 3..=8 {
        assert_eq!(vmrt(&entry("group-B", &[("n", n)])).unwrap().dimension, 4 * n - 5);
        assert_eq!(vmrt(&entry("group-C", &[("n", n)])).unwrap().dimension, 2 * n - 1);
    }
}

#[test]
fn folds() {
    let a = MarkedDynkinDiagram::standard(ty(Family::A, 2), &[(1, Some(2))]);
    assert_eq!(to_canonical_text(&fold(&a, FoldingPair::A2A1).unwrap()), "x[4]");
    let a = MarkedDynkinDiagram::standard(ty(Family::A, 4), &[(1, Some(2))]);
    assert_eq!(
        to_canonical_text(&fold(&a, FoldingPair::A2lBl).unwrap()),
        text("x[2]=>o")
    );
    let a = MarkedDynkinDiagram::standard(ty(Family::A, 5), &[(2, None)]);
    assert_eq!(
        to_canonical_text(&fold(&a, FoldingPair::A2l1Cl).unwrap()),
        text("o-x<=o")
    );
    let d = MarkedDynkinDiagram::standard(ty(Family::D, 5), &[(4, None)]);
    assert_eq!(
        to_canonical_text(&fold(&d, FoldingPair::Dl1Bl).unwrap()),
        text("o-o-o=>x")
    );
    let e = MarkedDynkinDiagram::standard(ty(Family::E, 6), &[(1, None)]);
    assert_eq!(identify(&fold(&e, FoldingPair::E6F4).unwrap()), "F_4/P_4");
    let two = parse_marked("x-o-o + o-o-x").unwrap();
    assert_eq!(identify(&fold(&two, FoldingPair::Swap).unwrap()), "Flag(1,3;4)");
}

#[test]
fn inadmissible_folds_are_rejected() {
    let a = MarkedDynkinDiagram::standard(ty(Family::A, 3), &[(1, None)]);
    assert!(matches!(
        fold(&a, FoldingPair::A2lBl),
        Err(Error::FoldNotAdmissible { .. })
    ));
    assert!(matches!(
        fold(&a, FoldingPair::E6F4),
        Err(Error::FoldNotAdmissible { .. })
    ));
    let two = parse_marked("x-o + o-o-x").unwrap();
    assert!(fold(&two, FoldingPair::Swap).is_err());
}

#[test]
fn folding_recovers_z_in_restricted_type_a() {
    for r in 2..=10 {
        assert!(fold_consistency(&entry("group-A", &[("n", r)])).unwrap());
        assert!(fold_consistency(&entry("AII", &[("n", r + 1)])).unwrap());
    }
    for n in [3, 5, 7, 9, 11] {
        assert!(fold_consistency(&entry("AI", &[("n", n)])).unwrap());
    }
    assert!(fold_consistency(&entry("EIV", &[])).unwrap());
    assert!(matches!(
        fold_consistency(&entry("group-G", &[])),
        Err(Error::Precondition(_))
    ));
    assert!(fold_consistency(&entry("AI", &[("n", 6)])).is_err());
}

#[test]
fn contact_gradation_of_group_type() {
    for e in enumerate(8).iter().filter(|e| e.kind == SpaceKind::Group) {
        assert!(contact_grading_check(e).unwrap(), "{}", e.name());
    }
    assert!(matches!(
        contact_grading_check(&entry("EI", &[])),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn names() {
    let name = |t: CartanType, marks: &[(usize, Option<u32>)]| identify(&MarkedDynkinDiagram::standard(t, marks));
    assert_eq!(name(ty(Family::A, 5), &[(2, None)]), "Gr(2,6)");
    assert_eq!(name(ty(Family::A, 5), &[(5, Some(2))]), "ν_2(P^5)^∨");
    assert_eq!(name(ty(Family::A, 5), &[(1, None), (3, None)]), "Flag(1,3;6)");
    assert_eq!(name(ty(Family::B, 4), &[(1, None)]), "Q_7");
    assert_eq!(name(ty(Family::B, 2), &[(2, None)]), "P^3");
    assert_eq!(name(ty(Family::C, 3), &[(3, None)]), "LG(3,6)");
    assert_eq!(name(ty(Family::C, 4), &[(2, None)]), "IG(2,8)");
    assert_eq!(name(ty(Family::D, 6), &[(6, None)]), "OG(6,12)");
    assert_eq!(name(ty(Family::E, 7), &[(7, None)]), "E_7/P_7");
    assert_eq!(name(ty(Family::G, 2), &[(1, None), (2, None)]), "X(G_2;1,2)");
    assert_eq!(
        identify(&MarkedDynkinDiagram::plain(DynkinDiagram::empty(), []).unwrap()),
        "pt"
    );
    assert_eq!(normalize_name("A × B and C"), normalize_name("C and B × A"));
    assert_ne!(normalize_name("A × B"), normalize_name("A ⊔ B"));
}

#[test]
fn marked_diagram_validation() {
    let d = DynkinDiagram::standard(ty(Family::A, 3));
    assert!(matches!(
        MarkedDynkinDiagram::plain(d.clone(), [7]),
        Err(Error::NodeNotInDiagram(7))
    ));
    let ann: BTreeMap<usize, u32> = [(2, 2)].into();
    assert!(MarkedDynkinDiagram::new(d.clone(), BTreeSet::from([1]), ann, None).is_err());
    let two = parse_marked("x-o + x-o").unwrap();
    let pairs = vec![(0, 3), (1, 2)];
    assert!(MarkedDynkinDiagram::new(
        two.diagram().clone(),
        two.crossed().clone(),
        BTreeMap::new(),
        Some(pairs)
    )
    .is_err());
}
