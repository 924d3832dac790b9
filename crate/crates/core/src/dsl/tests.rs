use proptest::prelude::*;

use super::*;
use crate::quiver::{classify, make_family, DynkinType, Family, Orientation};

fn err_at(text: &str) -> (usize, usize, String) {
    match parse_quiver_dsl(text).unwrap_err() {
        Error::Syntax {
            line,
            column,
            message,
        } => (line, column, message),
        other => panic!("expected a syntax error, got {other:?}"),
    }
}

#[test]
fn parses_a2() {
    let doc = parse_quiver_dsl("quiver A2\nvertex 1\nvertex 2\narrow a : 1 -> 2").unwrap();
    assert_eq!(doc.name, "A2");
    assert_eq!(doc.vertices.len(), 2);
    assert_eq!(doc.arrows[0].tail, "1");
    assert_eq!(doc.arrows[0].at, Location { line: 4, column: 1 });
    let q = doc.quiver().unwrap();
    assert_eq!(q.arrows()[0].tail, 1);
    assert_eq!(q.arrows()[0].head, 2);
    assert!(doc.framed().unwrap().is_none());
}

#[test]
fn parses_jordan2() {
    let doc: QuiverDoc = "quiver J2\nvertex 1\narrow a1 : 1 -> 1\narrow a2 : 1 -> 1"
        .parse()
        .unwrap();
    let q = doc.quiver().unwrap();
    assert!(q.arrows().iter().all(|a| a.is_loop()));
    assert!(!classify(&q).unwrap().is_at_most_two());
}

#[test]
fn whitespace_comments_and_framing() {
    let text = "# a framed loop\n\n  quiver   L  \nvertex v# the only vertex\narrow z:v->v\nframe f:*->v   # framing\n";
    let doc = parse_quiver_dsl(text).unwrap();
    assert_eq!(doc.vertices[0].at, Location { line: 4, column: 1 });
    let fq = doc.require_framed().unwrap();
    assert_eq!(fq.target(), 1);
    assert_eq!(fq.framing_name(), "f");
    assert_eq!(fq.full().vertices()[0].name, FRAMED_VERTEX_NAME);
    assert_eq!(
        doc.to_string(),
        "quiver L\nvertex v\narrow z : v -> v\nframe f : * -> v\n"
    );
}

#[test]
fn undeclared_vertex() {
    let (line, column, message) = err_at("quiver Q\nvertex 1\nvertex 2\narrow a : 1 -> 3");
    assert_eq!((line, column), (4, 16));
    assert_eq!(message, "undeclared vertex 3");
    let e = parse_quiver_dsl("quiver Q\nvertex 1\nframe f : * -> 9").unwrap_err();
    assert_eq!(e.to_string(), "line 3, column 16: undeclared vertex 9");
}

#[test]
fn structural_errors() {
    assert_eq!(err_at("quiver Q\nvertex 1\nvertex 1").0, 3);
    assert!(err_at("quiver Q\nvertex 1\nvertex 1")
        .2
        .contains("duplicate vertex"));
    let (line, column, msg) = err_at("quiver Q\nvertex 1\narrow a : 1 -> 1\narrow a : 1 -> 1");
    assert_eq!((line, column), (4, 7));
    assert!(msg.contains("duplicate arrow"));
    assert!(
        err_at("quiver Q\nvertex 1\nframe a : * -> 1\narrow a : 1 -> 1")
            .2
            .contains("duplicate arrow")
    );
    let (line, _, msg) = err_at("quiver Q\nvertex 1\nframe f : * -> 1\nframe g : * -> 1");
    assert_eq!(line, 4);
    assert_eq!(msg, "multiple framings");
    assert!(err_at("quiver Q\nquiver R").2.contains("duplicate"));
    assert_eq!(
        err_at("quiver  \n"),
        (1, 7, "expected a quiver name".into())
    );
    assert_eq!(err_at("quiver A B"), (1, 10, "unexpected `B`".into()));
    assert_eq!(
        parse_quiver_dsl("quiver Star[1,1]#x\nvertex 1")
            .unwrap()
            .name,
        "Star[1,1]"
    );
    assert!(err_at("vertex 1").2.contains("header"));
    assert!(err_at("").2.contains("missing"));
    assert!(err_at("# nothing\n").2.contains("missing"));
}

#[test]
fn syntax_errors_carry_locations() {
    assert_eq!(
        err_at("quiver Q\nvertex 1\narrow a 1 -> 1"),
        (3, 9, "expected `:`, found `1`".into())
    );
    assert_eq!(
        err_at("quiver Q\nvertex 1\narrow a : 1 ->"),
        (3, 15, "expected a head vertex".into())
    );
    assert_eq!(
        err_at("quiver Q\nvertex 1 2"),
        (2, 10, "unexpected `2`".into())
    );
    assert_eq!(
        err_at("quiver Q\nedge a"),
        (2, 1, "unknown declaration `edge`".into())
    );
    assert_eq!(
        err_at("quiver Q\nvertex $"),
        (2, 8, "unexpected character `$`".into())
    );
    assert_eq!(
        err_at("quiver Q\nvertex 1\nframe f : 1 -> 1"),
        (3, 11, "expected `*`, found `1`".into())
    );
}

#[test]
fn family_documents_round_trip() {
    let families = [
        Family::Ade {
            kind: DynkinType::D,
            rank: 4,
            orientation: Orientation::Alternating,
        },
        Family::AffineAde {
            kind: DynkinType::A,
            rank: 2,
            orientation: Orientation::Cyclic,
        },
        Family::Comet {
            legs: vec![1, 1],
            orientation: Orientation::TowardLower,
        },
        Family::Jordan(2),
    ];
    for fam in families {
        let q = make_family(&fam).unwrap();
        let doc = QuiverDoc::from_quiver(&q).unwrap();
        assert_eq!(parse_quiver_dsl(&doc.to_string()).unwrap(), doc);
        assert_eq!(doc.quiver().unwrap(), q);
        let fq = FramedQuiver::new(q, 1).unwrap();
        let fdoc = QuiverDoc::from_framed(&fq).unwrap();
        assert_eq!(parse_quiver_dsl(&fdoc.to_string()).unwrap(), fdoc);
        assert_eq!(
            fdoc.framed().unwrap().unwrap().full().arrows().len(),
            fq.full().arrows().len()
        );
    }
}

/// Random documents written with irregular spacing, comments and blank
/// lines.
fn arb_text() -> impl Strategy<Value = String> {
    (
        1usize..5,
        prop::collection::vec((0usize..5, 0usize..5), 0..7),
        prop::option::of(0usize..5),
        0usize..3,
    )
        .prop_map(|(nv, arrows, frame, style)| {
            let sp = [" ", "", "   "][style];
            let mut s = format!(
                "# generated\nquiver{0}Q{0}\n\n",
                if style == 1 { " " } else { sp }
            );
            for v in 0..nv {
                s += &format!("vertex v{v}{sp}# vertex\n");
            }
            for (k, (t, h)) in arrows.iter().enumerate() {
                s += &format!(
                    "arrow{0}b{k}{sp}:{sp}v{1}{sp}->{sp}v{2}\n",
                    " ",
                    t % nv,
                    h % nv
                );
            }
            if let Some(t) = frame {
                s += &format!("  frame f{sp}:{sp}*{sp}->{sp}v{}\n", t % nv);
            }
            s
        })
}

proptest! {
    #[test]
    fn serialize_parse_round_trip(text in arb_text()) {
        let doc = parse_quiver_dsl(&text).unwrap();
        let canonical = doc.to_string();
        let again = parse_quiver_dsl(&canonical).unwrap();
        prop_assert_eq!(again.to_string(), canonical.clone());
        prop_assert_eq!(parse_quiver_dsl(&again.to_string()).unwrap(), again.clone());
        prop_assert_eq!(again.quiver().unwrap(), doc.quiver().unwrap());
        prop_assert_eq!(again.framed().unwrap(), doc.framed().unwrap());
    }

    #[test]
    fn parser_never_panics(text in "[a-z0-9 :*#>\\-\n]{0,60}") {
        let _ = parse_quiver_dsl(&text);
    }
}
