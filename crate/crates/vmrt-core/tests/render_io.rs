use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;
use vmrt_core::affine::affine_diagram;
use vmrt_core::atlas::{enumerate, kac_diagram, lookup};
use vmrt_core::graph::Edge;
use vmrt_core::render_io::{parse, parse_marked, to_ascii, to_canonical_text, to_dot, to_json, to_latex, Parsed};
use vmrt_core::root_core::{CartanType, DynkinDiagram, Family};
use vmrt_core::vmrt_engine::{identify, vmrt, z_orbit_diagram, MarkedDynkinDiagram};
use vmrt_core::Error;

fn entry(label: &str, params: &[(&str, usize)]) -> vmrt_core::atlas::SymmetricSpaceEntry {
    let p: BTreeMap<String, usize> = params.iter().map(|(k, v)| (k.to_string(), *v)).collect();
    lookup(label, &p).unwrap()
}

fn ty(f: Family, n: usize) -> CartanType {
    CartanType::new(f, n).unwrap()
}

#[test]
fn canonical_text_examples() {
    let z = |e| z_orbit_diagram(&kac_diagram(&e), e.kind).unwrap().remove(0);
    assert_eq!(to_canonical_text(&z(entry("AI", &[("n", 3)]))), "x[4]");
    assert_eq!(to_canonical_text(&z(entry("group-B", &[("n", 3)]))), "o-x=>o");
    assert_eq!(
        to_canonical_text(&z(entry("herm-CI", &[("n", 3)]))),
        "o-x[2] + o-x[2] ~sigma"
    );
    assert_eq!(
        to_canonical_text(&kac_diagram(&entry("group-A", &[("n", 2)]))),
        "O-o-o-*"
    );
    assert_eq!(
        to_canonical_text(&MarkedDynkinDiagram::plain(DynkinDiagram::empty(), []).unwrap()),
        "empty"
    );
}

#[test]
fn parse_examples() {
    let a3 = parse_marked("o-o-o").unwrap();
    assert_eq!(a3.diagram().components()[0].cartan_type, ty(Family::A, 3));
    assert!(a3.crossed().is_empty());
    let d4 = parse_marked("x-o(o)-o").unwrap();
    assert_eq!(d4.diagram().components()[0].cartan_type, ty(Family::D, 4));
    assert_eq!(identify(&d4), "Q_6");
    let herm = parse_marked("x[2]-o + o-x[2] ~sigma").unwrap();
    assert_eq!(herm.sigma_pairs().unwrap().len(), 2);
    assert_eq!(identify(&herm), "ν_2(P^2) ⊔ ν_2(P^2)^∨");
}

#[test]
fn syntax_errors_carry_offsets() {
    let offset = |s: &str| match parse(s) {
        Err(Error::Syntax { offset, .. }) => offset,
        other => panic!("{s}: {other:?}"),
    };
    assert_eq!(offset("x["), 2);
    assert_eq!(offset("o-"), 2);
    assert_eq!(offset("oo"), 1);
    assert_eq!(offset("o(o"), 3);
    assert_eq!(offset("o->o"), 3);
    assert_eq!(offset("o=o"), 2);
    assert_eq!(offset("o + "), 4);
    assert_eq!(offset("x[2"), 3);
    assert_eq!(offset(""), 0);
}

#[test]
fn invalid_diagrams_are_rejected() {
    assert!(parse("o-o-o-*").is_err());
    assert!(parse("o-o(o)(o)(o)").is_err());
    assert!(parse("o#>o-o").is_err());
    assert!(parse("x[1]").is_err());
    assert!(parse("x + o ~sigma").is_err());
    assert!(parse("x-o + x ~sigma").is_err());
    assert!(parse("O-x").is_err());
    assert!(parse("O-o").is_err());
}

#[test]
fn kac_diagrams_parse_back() {
    match parse("O-o-o-*").unwrap() {
        Parsed::Kac(k) => {
            assert_eq!(k.diagram().to_string(), "A_2^(1)");
            assert_eq!(k.white().len(), 1);
        }
        other => panic!("{other:?}"),
    }
    match parse("O####>o").unwrap() {
        Parsed::Kac(k) => assert_eq!(k.diagram().to_string(), "A_2^(2)"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn round_trip_over_the_atlas() {
    for e in enumerate(12) {
        let kac = kac_diagram(&e);
        let mut texts = vec![to_canonical_text(&kac)];
        texts.extend(z_orbit_diagram(&kac, e.kind).unwrap().iter().map(to_canonical_text));
        texts.extend(vmrt(&e).unwrap().components.iter().map(to_canonical_text));
        for t in texts {
            assert_eq!(parse(&t).unwrap().canonical_text(), t, "{}", e.name());
        }
    }
}

#[test]
fn dot_output() {
    let a2 = MarkedDynkinDiagram::standard(ty(Family::A, 2), &[]);
    let dot = to_dot(&a2);
    assert_eq!(dot.matches("[label=").count(), 3);
    assert!(dot.contains("n1 -> n2 [label=\"1\", dir=none];"));
    let g2 = MarkedDynkinDiagram::standard(ty(Family::G, 2), &[(2, None)]);
    assert!(to_dot(&g2).contains("n2 -> n1 [label=\"3\", dir=forward];"));
}

#[test]
fn ascii_draws_cycles_with_the_affine_node_on_top() {
    let art = to_ascii(&kac_diagram(&entry("group-A", &[("n", 4)])));
    let lines: Vec<&str> = art.lines().collect();
    assert_eq!(lines[0].trim().trim_matches(|c| c == '.' || c == '-'), "O");
    assert!(lines[1].contains('/') && lines[1].contains('\\'));
    assert_eq!(lines[2], "o-----o-----o-----o");
    assert!(lines[3].starts_with("labels 0:1"));
    let b3 = to_ascii(&parse_marked("o-x=>o").unwrap());
    assert_eq!(b3, "o-----x =>  o\n");
}

#[test]
fn latex_is_a_plain_picture() {
    let tex = to_latex(&kac_diagram(&entry("group-B", &[("n", 3)])));
    assert!(tex.starts_with("\\begin{picture}"));
    assert!(tex.trim_end().ends_with("\\end{picture}"));
    assert!(tex.contains("\\circle{.3}"));
    assert!(tex.contains("$>$"));
    assert!(!tex.contains("usepackage"));
}

#[test]
fn json_is_byte_stable() {
    let e = entry("herm-CI", &[("n", 3)]);
    let z = z_orbit_diagram(&kac_diagram(&e), e.kind).unwrap().remove(0);
    for json in [to_json(&z), to_json(&kac_diagram(&e))] {
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string_pretty(&v).unwrap(), json);
    }
    let v: serde_json::Value = serde_json::from_str(&to_json(&kac_diagram(&e))).unwrap();
    assert_eq!(v["kind"], "affine");
    assert_eq!(v["base"]["family"], "C");
    assert_eq!(v["twist"], 1);
    assert_eq!(v["labels"], serde_json::json!([1, 2, 2, 1]));
    let v: serde_json::Value = serde_json::from_str(&to_json(&z)).unwrap();
    assert!(v["base"].is_null());
    assert_eq!(v["sigma_pairs"].as_array().unwrap().len(), 2);
}

fn relabeled(d: &MarkedDynkinDiagram, perm: &[usize]) -> MarkedDynkinDiagram {
    let map = |v: usize| perm[v - 1] + 100;
    let edges: Vec<Edge> = d
        .diagram()
        .edges()
        .iter()
        .map(|e| Edge::new(map(e.a), map(e.b), e.mult, e.short_end.map(map)))
        .collect();
    let diagram = DynkinDiagram::from_parts(d.nodes().iter().map(|&v| map(v)), edges).unwrap();
    MarkedDynkinDiagram::new(
        diagram,
        d.crossed().iter().map(|&v| map(v)).collect(),
        d.annotations().iter().map(|(&v, &a)| (map(v), a)).collect(),
        None,
    )
    .unwrap()
}

fn marked_types() -> impl Strategy<Value = (CartanType, Vec<bool>, Vec<u32>, Vec<usize>)> {
    (1usize..=8)
        .prop_flat_map(|r| {
            let types = CartanType::all_of_rank(r);
            (0..types.len()).prop_map(move |i| types[i])
        })
        .prop_flat_map(|t| {
            let r = t.rank();
            (
                Just(t),
                prop::collection::vec(any::<bool>(), r),
                prop::collection::vec(1u32..=4, r),
                Just((0..r).collect::<Vec<usize>>()).prop_shuffle(),
            )
        })
}

proptest! {
    #[test]
    fn canonical_text_ignores_labelling((t, crossed, degrees, perm) in marked_types()) {
        let marks: Vec<(usize, Option<u32>)> = (1..=t.rank())
            .filter(|k| crossed[k - 1])
            .map(|k| (k, (degrees[k - 1] >= 2).then_some(degrees[k - 1])))
            .collect();
        let d = MarkedDynkinDiagram::standard(t, &marks);
        let text = to_canonical_text(&d);
        prop_assert_eq!(&to_canonical_text(&relabeled(&d, &perm)), &text);
        let back = parse_marked(&text).unwrap();
        prop_assert_eq!(to_canonical_text(&back), text);
        prop_assert_eq!(back.diagram().components()[0].cartan_type, DynkinDiagram::standard(t).components()[0].cartan_type);
        let c: BTreeSet<u32> = back.annotations().values().copied().collect();
        prop_assert_eq!(c, d.annotations().values().copied().collect::<BTreeSet<u32>>());
    }
}

#[test]
fn untwisted_kac_diagrams_round_trip() {
    for t in (1..=8).flat_map(CartanType::all_of_rank) {
        let d = affine_diagram(t, 1).unwrap();
        let k = vmrt_core::affine::MarkedKacDiagram::new(d, [0]).unwrap();
        let text = to_canonical_text(&k);
        assert_eq!(parse(&text).unwrap().canonical_text(), text, "{t}");
    }
}
