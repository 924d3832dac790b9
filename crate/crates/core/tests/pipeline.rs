use filtquiv::dsl::{parse_quiver_dsl, QuiverDoc};
use filtquiv::invariants::{verify_theorem1, verify_theorem2, SpanVerdict};
use filtquiv::quiver::{classify, make_family, DynkinType, Family, FramedQuiver, Orientation};
use filtquiv::report::{run_command, Command, RunOptions};

#[test]
fn document_to_verdict() {
    let doc = parse_quiver_dsl(
        "# three vertices, one sink\nquiver A3\nvertex 1\nvertex 2\nvertex 3\narrow a : 1 -> 2\narrow b : 3 -> 2\n",
    )
    .unwrap();
    let q = doc.quiver().unwrap();
    let family = make_family(&Family::Ade {
        kind: DynkinType::A,
        rank: 3,
        orientation: Orientation::Alternating,
    })
    .unwrap();
    assert_eq!(q.arrows().len(), family.arrows().len());
    let r = verify_theorem1(&q, 2, 2).unwrap();
    assert!(r.consistent);
    assert_eq!(r.kernel.dimension(), 15);
}

#[test]
fn framed_document_matches_constructed_quiver() {
    let doc: QuiverDoc = "quiver A1\nvertex 1\nvertex 2\narrow a1 : 1 -> 2\nframe a0 : * -> 1".parse().unwrap();
    let from_doc = doc.require_framed().unwrap();
    let built = FramedQuiver::new(make_family(&Family::EquiorientedA(1)).unwrap(), 1).unwrap();
    let a = verify_theorem2(&from_doc, 2, 2, 2).unwrap();
    let b = verify_theorem2(&built, 2, 2, 2).unwrap();
    assert!(a.passed());
    assert_eq!(a.kernel, b.kernel);
    assert_eq!(a.comparison.verdict, SpanVerdict::Equal);
}

#[test]
fn comet_and_star_classify_at_most_two() {
    for legs in [vec![1, 1], vec![2, 1], vec![1, 1, 1]] {
        let comet = make_family(&Family::Comet {
            legs: legs.clone(),
            orientation: Orientation::TowardLower,
        })
        .unwrap();
        let star = make_family(&Family::Star {
            legs,
            orientation: Orientation::TowardHigher,
        })
        .unwrap();
        assert!(classify(&star).unwrap().is_at_most_two());
        let doc = QuiverDoc::from_quiver(&comet).unwrap();
        let report = run_command(
            &Command::Classify { doc },
            &RunOptions {
                timing: false,
                ..RunOptions::default()
            },
        )
        .unwrap();
        assert_eq!(report.verdict, classify(&comet).unwrap().label());
    }
}
