use std::collections::{BTreeMap, BTreeSet};

use vmrt_core::affine::{validate_kac_marking, SpaceKind};
use vmrt_core::atlas::{
    enumerate, isotropy_dimension, kac_diagram, lookup, params_of, RestrictedType, SymmetricSpaceEntry, LABELS,
};
use vmrt_core::root_core::{CartanType, Family};
use vmrt_core::Error;

fn entry(label: &str, params: &[(&str, usize)]) -> SymmetricSpaceEntry {
    let p: BTreeMap<String, usize> = params.iter().map(|(k, v)| (k.to_string(), *v)).collect();
    lookup(label, &p).unwrap()
}

fn reduced(f: Family, n: usize) -> RestrictedType {
    RestrictedType::Reduced(CartanType::new(f, n).unwrap())
}

#[test]
fn every_label_has_an_instance() {
    let all = enumerate(12);
    let seen: BTreeSet<&str> = all.iter().map(|e| e.label).collect();
    assert_eq!(LABELS.len(), 35);
    for l in LABELS {
        assert!(seen.contains(l), "{l} missing from enumerate(12)");
    }
}

#[test]
fn enumeration_is_deterministic_and_bounded() {
    let a = enumerate(12);
    let b = enumerate(12);
    assert_eq!(a, b);
    let names: BTreeSet<String> = a.iter().map(|e| e.name()).collect();
    assert_eq!(names.len(), a.len());
    assert!(a.iter().all(|e| e.node_count() <= 13));
    assert!(enumerate(3).len() < enumerate(6).len());
}

#[test]
fn labels_are_case_insensitive() {
    let p: BTreeMap<String, usize> = [("n".to_string(), 6), ("m".to_string(), 2)].into();
    assert_eq!(lookup("cii", &p).unwrap().name(), "CII(m=2,n=6)");
    assert_eq!(lookup("HERM-eiii", &BTreeMap::new()).unwrap().label, "herm-EIII");
    assert_eq!(lookup("group-G2", &BTreeMap::new()).unwrap().label, "group-G");
}

#[test]
fn parameters_are_required_and_checked() {
    assert!(matches!(
        lookup("AI", &BTreeMap::new()),
        Err(Error::MissingParam { param: "n", .. })
    ));
    assert!(matches!(lookup("nope", &BTreeMap::new()), Err(Error::UnknownLabel(_))));
    let p = |n: usize| -> BTreeMap<String, usize> { [("n".to_string(), n)].into() };
    assert!(matches!(lookup("group-D", &p(3)), Err(Error::ParamOutOfRange { .. })));
    assert!(matches!(lookup("EI", &p(3)), Err(Error::ParamOutOfRange { .. })));
    let bad: BTreeMap<String, usize> = [("n".to_string(), 6), ("m".to_string(), 4)].into();
    assert!(matches!(lookup("CII", &bad), Err(Error::ParamOutOfRange { .. })));
    assert_eq!(params_of("BI"), &["n", "m"]);
}

#[test]
fn kinds_and_restricted_types() {
    assert_eq!(entry("group-G", &[]).kind, SpaceKind::Group);
    assert_eq!(entry("AI", &[("n", 5)]).restricted_type, reduced(Family::A, 4));
    assert_eq!(entry("AII", &[("n", 4)]).restricted_type, reduced(Family::A, 3));
    assert_eq!(entry("BII", &[("n", 4)]).restricted_type, reduced(Family::A, 1));
    assert_eq!(
        entry("CII", &[("n", 4), ("m", 2)]).restricted_type,
        reduced(Family::C, 2)
    );
    assert_eq!(
        entry("CII", &[("n", 5), ("m", 2)]).restricted_type,
        RestrictedType::BC(2)
    );
    assert_eq!(
        entry("herm-AIII", &[("n", 6), ("m", 3)]).kind,
        SpaceKind::HermitianNonexceptional
    );
    assert_eq!(
        entry("herm-AIII", &[("n", 7), ("m", 3)]).restricted_type,
        RestrictedType::BC(3)
    );
    assert_eq!(entry("herm-DIII", &[("n", 5)]).kind, SpaceKind::HermitianExceptional);
    assert_eq!(entry("herm-DIII", &[("n", 6)]).kind, SpaceKind::HermitianNonexceptional);
    assert_eq!(entry("FII", &[]).restricted_type, RestrictedType::BC(1));
    assert_eq!(entry("EIV", &[]).restricted_type, reduced(Family::A, 2));
    assert_eq!(entry("EIX", &[]).restricted_type, reduced(Family::F, 4));
}

#[test]
fn boundary_degree_is_two_exactly_in_type_a() {
    for e in enumerate(12) {
        assert_eq!(e.boundary_degree == 2, e.restricted_type.is_type_a(), "{}", e.name());
        assert!(e.boundary_degree == 1 || e.boundary_degree == 2);
    }
}

#[test]
fn isotropy_dimensions() {
    for n in 3..=9 {
        assert_eq!(isotropy_dimension(&entry("AI", &[("n", n)])), n * (n + 1) / 2 - 1);
        assert_eq!(isotropy_dimension(&entry("BII", &[("n", n)])), 2 * n);
        assert_eq!(isotropy_dimension(&entry("AII", &[("n", n)])), (n - 1) * (2 * n + 1));
    }
    assert_eq!(isotropy_dimension(&entry("herm-AI", &[])), 2);
    assert_eq!(isotropy_dimension(&entry("group-G", &[])), 14);
    assert_eq!(isotropy_dimension(&entry("EIV", &[])), 26);
    assert_eq!(isotropy_dimension(&entry("G", &[])), 8);
    assert_eq!(isotropy_dimension(&entry("herm-EVII", &[])), 54);
}

#[test]
fn kac_markings_are_admissible() {
    for e in enumerate(12) {
        let k = kac_diagram(&e);
        assert!(validate_kac_marking(&k, e.kind), "{}", e.name());
        let whites = k.white().len();
        assert_eq!(whites, if e.kind.is_hermitian() { 2 } else { 1 }, "{}", e.name());
    }
}

#[test]
fn source_flags() {
    assert!(entry("EIV", &[]).source_gap);
    assert!(entry("BI", &[("n", 6), ("m", 5)]).quadric_index_flag);
    assert!(!entry("CII", &[("n", 6), ("m", 2)]).quadric_index_flag);
    assert_eq!(entry("BII", &[("n", 4)]).projective_dim, Some(7));
    assert_eq!(entry("DII", &[("n", 4)]).projective_dim, Some(6));
}
