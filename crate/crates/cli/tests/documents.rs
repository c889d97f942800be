use sgchain::instance::{Document, InstanceError, Resolved};
use sgchain::zoo;

#[test]
fn round_trip_every_builtin() {
    for name in zoo::NAMES {
        let doc = zoo::document(name).unwrap();
        let printed = doc.print();
        let again = Document::parse(&printed).unwrap();
        assert_eq!(again, doc, "{}", name);
        assert_eq!(again.print(), printed, "{}", name);
    }
}

#[test]
fn round_trip_preserves_meaning() {
    for name in zoo::NAMES {
        let doc = zoo::document(name).unwrap();
        let again = Document::parse(&doc.print()).unwrap();
        match (doc.resolve().unwrap(), again.resolve().unwrap()) {
            (Resolved::Finite(a), Resolved::Finite(b)) => assert_eq!(a, b),
            (Resolved::Fp(a), Resolved::Fp(b)) => assert_eq!(a.rs().rules(), b.rs().rules()),
            (Resolved::ReesZ(a), Resolved::ReesZ(b)) => assert_eq!(a, b),
            _ => panic!("{} changed kind", name),
        }
    }
}

#[test]
fn abb_aba_document_matches_library() {
    let text = "gens: a b";
    assert!(Document::parse(text).is_err());
    let doc = Document::parse("kind: presentation\ngens: a b\norder: a b\nrel: a b b = b\nrel: a b a = a a b\n").unwrap();
    match doc.resolve().unwrap() {
        Resolved::Fp(fp) => {
            let lib = sgchain_core::rewrite::FpSemigroup::abb_aba();
            assert_eq!(fp.rs().rules(), lib.rs().rules());
            assert!(fp.is_confluent());
        }
        _ => panic!(),
    }
}

#[test]
fn construction_errors() {
    // T has zero divisors, so sx = x cannot extend it associatively
    let text = "kind: construction\nop: x_extension zoo:rees9 zoo:rees9_full\n";
    assert!(matches!(Document::parse(text).unwrap().resolve(), Err(InstanceError::Semantic { .. })));
    let text = "kind: construction\nop: rees_quotient zoo:c2 e\n";
    assert!(Document::parse(text).unwrap().resolve().is_err());
    let text = "kind: construction\nop: adjoin_zero zoo:free1\n";
    assert!(Document::parse(text).unwrap().resolve().is_err());
    assert!(Document::parse("kind: construction\nop: adjoin_zero zoo:missing\n").is_err());
}

#[test]
fn rees_with_group_reference() {
    let text = "[g]\nkind: table\nlabels: e g\nrow: e g\nrow: g e\n\n[m]\nkind: rees\ngroup: g\nrows: 2\ncols: 2\np: e .\np: . e\n";
    let doc = Document::parse(text).unwrap();
    match doc.resolve().unwrap() {
        Resolved::Finite(s) => assert_eq!(s, zoo::finite("rees9").unwrap()),
        _ => panic!(),
    }
    assert_eq!(Document::parse(&doc.print()).unwrap(), doc);
}
