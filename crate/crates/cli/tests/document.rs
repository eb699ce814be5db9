mod common;

use common::*;
use proptest::prelude::*;
use rbla_cli::document::{parse, parse_bounded, serialize, Document, Operator, RepData};
use rbla_cli::CliError;
use rbla_core::fixtures::{sl2_form, sl2_lie, sl2_p};
use rbla_core::lie::BilinearForm;
use rbla_core::linalg::{Matrix, Tensor2};
use rbla_core::product::{BilinearProduct, Coproduct};
use rbla_core::scalar::{frac, int};
use rbla_core::Space;

fn input_error(text: &str) -> String {
    match parse(text) {
        Err(CliError::Input(m)) => m,
        other => panic!("expected an input error, got {other:?}"),
    }
}

#[test]
fn sl2_fixture_parses_to_the_example() {
    let doc = parse(&fixture_text("fix_sl2.json")).unwrap();
    let bracket = &doc.products["bracket"];
    let completed = (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).filter(|&(i, j)| {
        bracket.basis_product(i, j).iter().any(|c| *c != int(0))
    });
    assert_eq!(completed.count(), 6);
    assert_eq!(bracket, sl2_lie().bracket());
    assert_eq!(doc.operators["P"].matrix, sl2_p());
    assert_eq!(doc.forms["B"], sl2_form());
    assert_eq!(doc.weight, Some(int(0)));
}

#[test]
fn empty_products_give_the_zero_algebra() {
    let doc = parse(&fixture_text("empty_products.json")).unwrap();
    assert!(doc.products["bracket"].is_zero());
    assert_eq!(doc.space.as_ref().unwrap().dim(), 2);
}

#[test]
fn malformed_scalars_are_rejected_with_paths() {
    let doc = |value: &str| {
        format!(
            r#"{{"format":"rbla/1","space":{{"name":"g","basis":["a","b"]}},
               "products":{{"bracket":{{"entries":[{{"left":"a","right":"b","value":{{"a":"{value}"}}}}]}}}}}}"#
        )
    };
    for bad in ["0.5", "1e3", "1/0", "", "one", "1.", "2/3/4"] {
        let m = input_error(&doc(bad));
        assert!(m.contains("$.products.bracket.entries[0].value.a"), "{bad}: {m}");
    }
    for good in ["-3", "4/6", "+2", " 7 "] {
        assert!(parse(&doc(good)).is_ok(), "{good}");
    }
    assert_eq!(parse(&doc("4/6")).unwrap().products["bracket"].basis_product(0, 1)[0], frac(2, 3));
}

#[test]
fn structural_errors_are_rejected() {
    let head = r#""format":"rbla/1","space":{"name":"g","basis":["a","b"]}"#;
    let cases = [
        (format!(r#"{{{head},"products":{{"cross":{{"entries":[]}}}}}}"#), "unknown product name"),
        (format!(r#"{{{head},"coproducts":{{"nabla":{{}}}}}}"#), "unknown coproduct name"),
        (
            format!(
                r#"{{{head},"products":{{"bracket":{{"entries":[
                    {{"left":"a","right":"b","value":{{}}}},{{"left":"a","right":"b","value":{{}}}}]}}}}}}"#
            ),
            "duplicate entry (a, b)",
        ),
        (
            format!(
                r#"{{{head},"products":{{"bracket":{{"antisymmetrize":true,"entries":[
                    {{"left":"a","right":"b","value":{{}}}},{{"left":"b","right":"a","value":{{}}}}]}}}}}}"#
            ),
            "implied by antisymmetry",
        ),
        (format!(r#"{{{head},"operators":{{"P":{{"domain":"W","columns":{{}}}}}}}}"#), "unknown space \"W\""),
        (format!(r#"{{{head},"weight":"0.1"}}"#), "$.weight"),
        (format!(r#"{{{head},"tensors":{{"r":[{{"left":"a","right":"c","value":"1"}}]}}}}"#), "$.tensors.r[0].right"),
        (r#"{"format":"rbla/1","products":{"bracket":{"entries":[]}}}"#.to_string(), "need a \"space\""),
        (r#"{"format":"rbla/1","space":{"name":"g","basis":["a","a"]}}"#.to_string(), "$.space"),
        (format!(r#"{{{head},"colour":"red"}}"#), "unknown field"),
        ("{".to_string(), "malformed document"),
    ];
    for (text, needle) in cases {
        let m = input_error(&text);
        assert!(m.contains(needle), "{needle}: {m}");
    }
}

#[test]
fn dimension_bound_is_enforced() {
    let text = fixture_text("too_large.json");
    assert!(parse_bounded(&text, 16).is_err());
    assert!(parse_bounded(&text, 17).is_ok());
    let nested = r#"{"format":"rbla/1","family":[{"format":"rbla/1","space":{"name":"g","basis":["a","b","c"]}}]}"#;
    let m = match parse_bounded(nested, 2) {
        Err(CliError::Input(m)) => m,
        other => panic!("{other:?}"),
    };
    assert!(m.starts_with("$.family[0].space"), "{m}");
}

#[test]
fn serialized_fixture_is_canonical() {
    let doc = parse(&fixture_text("fix_sl2.json")).unwrap();
    let text = serialize(&doc);
    // full tables, no antisymmetrize shorthand, forms written out
    assert!(!text.contains("antisymmetrize"));
    assert!(!text.contains("symmetrize"));
    assert_eq!(text.matches("\"left\"").count(), 6 + 3);
    assert_eq!(parse(&text).unwrap(), doc);
}

fn small() -> impl Strategy<Value = i64> {
    -3i64..=3
}

fn scalar() -> impl Strategy<Value = rbla_core::Scalar> {
    (small(), 1i64..=4).prop_map(|(p, q)| frac(p, q))
}

fn square(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(scalar(), n * n).prop_map(move |v| Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
}

fn tensor(n: usize) -> impl Strategy<Value = Tensor2> {
    square(n).prop_map(Tensor2::from_coeffs)
}

fn documents(name: &'static str) -> impl Strategy<Value = Document> {
    (1usize..=3).prop_flat_map(move |n| {
        let space = Space::numbered(name, "e", n);
        let module = Space::numbered("V", "v", 2);
        (
            prop::collection::vec(scalar(), n * n * n),
            square(n),
            square(n),
            tensor(n),
            prop::collection::vec(tensor(n), n),
            prop::collection::vec(square(2), n),
            proptest::option::of(square(2)),
            proptest::option::of(scalar()),
        )
            .prop_map(move |(coeffs, p, b, r, cols, rho, alpha, weight)| {
                let mut doc = Document::on(space.clone());
                doc.name = Some("generated".into());
                doc.weight = weight;
                let product = BilinearProduct::from_fn(space.clone(), |i, j| coeffs[(i * n + j) * n..][..n].to_vec());
                doc.products.insert("circ".into(), product);
                doc.operators.insert("P".into(), Operator { domain: space.clone(), codomain: space.clone(), matrix: p });
                let dual = space.dual();
                let pairing = Operator { domain: space.clone(), codomain: dual, matrix: b.clone() };
                doc.operators.insert("phi".into(), pairing);
                doc.forms.insert("B".into(), BilinearForm::new(space.clone(), b).unwrap());
                doc.tensors.insert("r".into(), r);
                doc.coproducts.insert("delta".into(), Coproduct::from_columns(space.clone(), cols).unwrap());
                doc.representations.insert(
                    "rho".into(),
                    RepData { module: module.clone(), matrices: rho, right: None, alpha, beta: None },
                );
                doc
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parse_inverts_serialize(doc in documents("g")) {
        let text = serialize(&doc);
        let back = parse(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(serialize(&back), text);
    }

    #[test]
    fn nested_documents_round_trip(a in documents("g"), b in documents("h")) {
        let mut outer = a.clone();
        outer.partner = Some(Box::new(b.clone()));
        outer.family = vec![b, a];
        let back = parse(&serialize(&outer)).unwrap();
        prop_assert_eq!(back, outer);
    }
}
