use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;

use super::*;
use crate::exec::Exec;

fn oracle_has_square(w: &[usize]) -> bool {
    for i in 0..w.len() {
        for k in 1..=(w.len() - i) / 2 {
            if (0..k).all(|t| w[i + t] == w[i + t + k]) {
                return true;
            }
        }
    }
    false
}

/// Every composable word of length `<= max_len`, square-free or not.
fn all_words(q: &Quiver, max_len: usize) -> Vec<PathWord> {
    let mut out: Vec<PathWord> = q
        .vertices()
        .iter()
        .map(|v| PathWord::trivial(v.id))
        .collect();
    let mut layer = out.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for p in &layer {
            for a in q.arrows().iter().filter(|a| a.tail == p.target()) {
                let mut arrows = p.arrows().to_vec();
                arrows.push(a.id);
                next.push(PathWord::new(q, p.source(), arrows).unwrap());
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn written(q: &Quiver, p: &PathWord) -> String {
    p.display(q).to_string()
}

fn pair_names(r: &PathwayReport, q: &Quiver, s: usize, t: usize) -> Vec<String> {
    r.pathways[&(s, t)].iter().map(|p| written(q, p)).collect()
}

fn jordan(k: usize) -> Quiver {
    make_family(&Family::Jordan(k)).unwrap()
}

#[test]
fn square_free_examples() {
    let q = jordan(2);
    let p = PathWord::from_written(&q, &["a2", "a2", "a1"]).unwrap();
    assert!(!is_square_free(&q, &p).unwrap());
    let p = PathWord::from_written(&q, &["a2", "a1"]).unwrap();
    assert!(is_square_free(&q, &p).unwrap());
    let p = PathWord::from_written(&q, &["a1", "a2", "a1"]).unwrap();
    assert!(is_square_free(&q, &p).unwrap());
    assert!(!oracle_has_square(p.arrows()));
}

#[test]
fn square_free_rejects_non_composable() {
    let q = Quiver::from_arrows("A2", 2, &[("a", 1, 2)]).unwrap();
    assert!(matches!(
        PathWord::from_written(&q, &["a", "a"]),
        Err(Error::NonComposablePath(_))
    ));
    let other = Quiver::from_arrows("B", 2, &[("a", 2, 1), ("b", 1, 2)]).unwrap();
    let p = PathWord::from_written(&other, &["a", "b"]).unwrap();
    assert!(matches!(
        is_square_free(&q, &p),
        Err(Error::NonComposablePath(_))
    ));
}

#[test]
fn a2_pathways() {
    let q = Quiver::from_arrows("A2", 2, &[("a", 1, 2)]).unwrap();
    let r = enumerate_pathways(&q).unwrap();
    assert_eq!(r.classification, Classification::AtMostTwo);
    assert_eq!(pair_names(&r, &q, 1, 1), ["e1"]);
    assert_eq!(pair_names(&r, &q, 2, 2), ["e2"]);
    assert_eq!(pair_names(&r, &q, 1, 2), ["a"]);
    assert!(pair_names(&r, &q, 2, 1).is_empty());
}

#[test]
fn jordan2_has_three_loops_at_the_vertex() {
    let q = jordan(2);
    let r = enumerate_pathways(&q).unwrap();
    let Classification::MoreThanTwo {
        source,
        target,
        witnesses,
    } = r.classification
    else {
        panic!("expected MoreThanTwo");
    };
    assert_eq!((source, target), (1, 1));
    let names: Vec<String> = witnesses.iter().map(|p| written(&q, p)).collect();
    assert_eq!(names, ["e1", "a1", "a2"]);
}

#[test]
fn cyclic_affine_a1_has_exactly_two_per_pair() {
    let q = Quiver::from_arrows("~A1", 2, &[("a", 1, 2), ("b", 2, 1)]).unwrap();
    let r = enumerate_pathways(&q).unwrap();
    assert!(r.classification.is_at_most_two());
    assert_eq!(pair_names(&r, &q, 1, 1), ["e1", "ba"]);
    assert_eq!(pair_names(&r, &q, 1, 2), ["a", "aba"]);
    for s in 1..=2 {
        for t in 1..=2 {
            assert_eq!(r.count(s, t), 2);
        }
    }
    let from_family = make_family(&Family::AffineAde {
        kind: DynkinType::A,
        rank: 1,
        orientation: Orientation::Cyclic,
    })
    .unwrap();
    assert!(classify(&from_family).unwrap().is_at_most_two());
}

#[test]
fn triple_arrow_quiver() {
    let q = Quiver::from_arrows("K3", 2, &[("a1", 1, 2), ("a2", 1, 2), ("a3", 1, 2)]).unwrap();
    let Classification::MoreThanTwo {
        source,
        target,
        witnesses,
    } = classify(&q).unwrap()
    else {
        panic!("expected MoreThanTwo");
    };
    assert_eq!((source, target), (1, 2));
    let names: Vec<String> = witnesses.iter().map(|p| written(&q, p)).collect();
    assert_eq!(names, ["a1", "a2", "a3"]);
}

#[test]
fn parallel_arrows_into_a_looped_vertex() {
    let q = Quiver::from_arrows("K2z", 2, &[("a1", 1, 2), ("a2", 1, 2), ("z", 2, 2)]).unwrap();
    assert!(!classify(&q).unwrap().is_at_most_two());
}

#[test]
fn d4_every_orientation() {
    for mask in 0..8u32 {
        let flips = (0..3).map(|k| mask >> k & 1 == 1).collect();
        let q = make_family(&Family::Ade {
            kind: DynkinType::D,
            rank: 4,
            orientation: Orientation::Flips(flips),
        })
        .unwrap();
        assert_eq!(q.vertices().len(), 4);
        assert!(classify(&q).unwrap().is_at_most_two(), "mask {mask}");
    }
}

#[test]
fn family_shapes() {
    let q = make_family(&Family::EquiorientedA(3)).unwrap();
    let arrows: Vec<(usize, usize)> = q.arrows().iter().map(|a| (a.tail, a.head)).collect();
    assert_eq!(arrows, [(1, 2), (2, 3), (3, 4)]);

    let star = make_family(&Family::Star {
        legs: vec![2, 2, 2],
        orientation: Orientation::TowardLower,
    })
    .unwrap();
    assert_eq!(star.vertices().len(), 7);
    assert_eq!(star.arrows().len(), 6);
    // BFS distance from the center decreases along every arrow.
    let dist = |v: usize| if v == 1 { 0 } else { (v - 2) % 2 + 1 };
    assert!(star
        .arrows()
        .iter()
        .all(|a| dist(a.head) + 1 == dist(a.tail)));

    let comet = make_family(&Family::Comet {
        legs: vec![1, 1],
        orientation: Orientation::TowardHigher,
    })
    .unwrap();
    assert_eq!(comet.vertices().len(), 3);
    assert_eq!(comet.arrows().iter().filter(|a| a.is_loop()).count(), 1);
    assert!(comet
        .arrows()
        .iter()
        .filter(|a| !a.is_loop())
        .all(|a| a.tail == 1));
    assert!(classify(&comet).unwrap().is_at_most_two());

    let e8 = make_family(&Family::Ade {
        kind: DynkinType::E,
        rank: 8,
        orientation: Orientation::Alternating,
    })
    .unwrap();
    assert_eq!((e8.vertices().len(), e8.arrows().len()), (8, 7));
    let d5 = make_family(&Family::AffineAde {
        kind: DynkinType::D,
        rank: 5,
        orientation: Orientation::TowardHigher,
    })
    .unwrap();
    assert_eq!((d5.vertices().len(), d5.arrows().len()), (6, 5));
}

#[test]
fn family_parameter_errors() {
    let bad = [
        Family::Ade {
            kind: DynkinType::A,
            rank: 0,
            orientation: Orientation::TowardHigher,
        },
        Family::Ade {
            kind: DynkinType::D,
            rank: 3,
            orientation: Orientation::TowardHigher,
        },
        Family::Ade {
            kind: DynkinType::E,
            rank: 9,
            orientation: Orientation::TowardHigher,
        },
        Family::Ade {
            kind: DynkinType::A,
            rank: 3,
            orientation: Orientation::Cyclic,
        },
        Family::Ade {
            kind: DynkinType::A,
            rank: 3,
            orientation: Orientation::Flips(vec![true]),
        },
        Family::Star {
            legs: vec![1, 0],
            orientation: Orientation::TowardHigher,
        },
        Family::Comet {
            legs: vec![],
            orientation: Orientation::TowardHigher,
        },
    ];
    for f in bad {
        assert!(
            matches!(make_family(&f), Err(Error::InvalidFamily(_))),
            "{f:?}"
        );
    }
}

fn family_corpus() -> Vec<Family> {
    let orientations = [
        Orientation::TowardHigher,
        Orientation::TowardLower,
        Orientation::Alternating,
    ];
    let mut out = Vec::new();
    for o in &orientations {
        for r in 1..=6 {
            out.push(Family::Ade {
                kind: DynkinType::A,
                rank: r,
                orientation: o.clone(),
            });
            out.push(Family::AffineAde {
                kind: DynkinType::A,
                rank: r,
                orientation: o.clone(),
            });
        }
        for r in 4..=7 {
            out.push(Family::Ade {
                kind: DynkinType::D,
                rank: r,
                orientation: o.clone(),
            });
            out.push(Family::AffineAde {
                kind: DynkinType::D,
                rank: r,
                orientation: o.clone(),
            });
        }
        for r in 6..=8 {
            out.push(Family::Ade {
                kind: DynkinType::E,
                rank: r,
                orientation: o.clone(),
            });
            out.push(Family::AffineAde {
                kind: DynkinType::E,
                rank: r,
                orientation: o.clone(),
            });
        }
        for legs in [
            vec![1, 1, 1],
            vec![2, 2, 2],
            vec![1, 3],
            vec![1, 1, 1, 1, 1],
        ] {
            out.push(Family::Star {
                legs: legs.clone(),
                orientation: o.clone(),
            });
            out.push(Family::Comet {
                legs,
                orientation: o.clone(),
            });
        }
    }
    for r in 1..=6 {
        out.push(Family::AffineAde {
            kind: DynkinType::A,
            rank: r,
            orientation: Orientation::Cyclic,
        });
    }
    out.extend((0..=5).map(Family::EquiorientedA));
    out
}

#[test]
fn families_classify_as_expected() {
    let families = family_corpus();
    let quivers: Vec<Quiver> = families.iter().map(|f| make_family(f).unwrap()).collect();
    for (f, c) in families.iter().zip(classify_many(&quivers, Exec::Parallel)) {
        assert!(c.unwrap().is_at_most_two(), "{}", f.name());
    }
    assert!(classify(&jordan(0)).unwrap().is_at_most_two());
    assert!(classify(&jordan(1)).unwrap().is_at_most_two());
    for k in 2..=4 {
        assert!(!classify(&jordan(k)).unwrap().is_at_most_two());
    }
}

#[test]
fn classify_many_matches_sequential() {
    let quivers: Vec<Quiver> = family_corpus()
        .iter()
        .map(|f| make_family(f).unwrap())
        .collect();
    assert_eq!(
        classify_many(&quivers, Exec::Sequential),
        classify_many(&quivers, Exec::Parallel)
    );
}

#[test]
fn length_cap_aborts() {
    let q = Quiver::from_arrows("~A1", 2, &[("a", 1, 2), ("b", 2, 1)]).unwrap();
    let err = enumerate_pathways_with(
        &q,
        PathwayOptions {
            max_length: Some(2),
        },
    )
    .unwrap_err();
    assert!(err.is_resource_guard());
}

#[test]
fn framing_and_connectedness() {
    let base = make_family(&Family::EquiorientedA(1)).unwrap();
    let framed = FramedQuiver::new(base.clone(), 1).unwrap();
    let full = framed.full();
    assert_eq!(full.vertices().len(), 3);
    assert_eq!(
        full.arrow(FRAMED).map(|a| (a.tail, a.head)),
        Some((FRAMED, 1))
    );
    assert!(full.is_connected());
    assert!(FramedQuiver::new(base, 7).is_err());
    let split = Quiver::from_arrows("split", 3, &[("a", 1, 2)]).unwrap();
    assert!(!split.is_connected());
    assert!(Quiver::from_arrows("bad", 2, &[("a", 1, 3)]).is_err());
    assert!(Quiver::from_arrows("dup", 2, &[("a", 1, 2), ("a", 2, 1)]).is_err());
}

fn arb_quiver() -> impl Strategy<Value = Quiver> {
    (1usize..=5).prop_flat_map(|nv| {
        prop::collection::vec((1..=nv, 1..=nv), 0..=6).prop_map(move |edges| {
            let named: Vec<(String, usize, usize)> = edges
                .iter()
                .enumerate()
                .map(|(k, &(t, h))| (format!("a{}", k + 1), t, h))
                .collect();
            let refs: Vec<(&str, usize, usize)> =
                named.iter().map(|(n, t, h)| (n.as_str(), *t, *h)).collect();
            Quiver::from_arrows("random", nv, &refs).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn bfs_terminates_and_agrees_with_brute_force(q in arb_quiver()) {
        let r = enumerate_pathways(&q).unwrap();
        for v in q.vertices() {
            prop_assert_eq!(&r.pathways[&(v.id, v.id)][0], &PathWord::trivial(v.id));
        }
        for ps in r.pathways.values() {
            let distinct: BTreeSet<&PathWord> = ps.iter().collect();
            prop_assert_eq!(distinct.len(), ps.len());
            for p in ps {
                prop_assert!(!oracle_has_square(p.arrows()));
                prop_assert!(PathWord::new(&q, p.source(), p.arrows().to_vec()).is_ok());
                for cut in 0..p.len() {
                    prop_assert!(!oracle_has_square(&p.arrows()[..cut]));
                }
            }
        }
        match &r.classification {
            Classification::AtMostTwo => {
                // A square-free word has at most 2|Q0| prefixes here.
                let bound = 2 * q.vertices().len();
                let mut expected: BTreeMap<(usize, usize), BTreeSet<PathWord>> = BTreeMap::new();
                for w in all_words(&q, bound) {
                    if !oracle_has_square(w.arrows()) {
                        expected.entry((w.source(), w.target())).or_default().insert(w);
                    }
                }
                for (pair, ps) in &r.pathways {
                    let got: BTreeSet<PathWord> = ps.iter().cloned().collect();
                    prop_assert_eq!(&got, &expected.remove(pair).unwrap_or_default());
                    prop_assert!(ps.len() <= 2);
                }
                prop_assert!(expected.is_empty());
            }
            Classification::MoreThanTwo { source, target, witnesses } => {
                let ws: BTreeSet<&PathWord> = witnesses.iter().collect();
                prop_assert_eq!(ws.len(), 3);
                for w in witnesses {
                    prop_assert_eq!((w.source(), w.target()), (*source, *target));
                    prop_assert!(is_square_free(&q, w).unwrap());
                }
                let shorter = all_words(&q, r.explored_length.saturating_sub(1))
                    .into_iter()
                    .filter(|w| !oracle_has_square(w.arrows()));
                let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
                for w in shorter {
                    *counts.entry((w.source(), w.target())).or_default() += 1;
                }
                prop_assert!(counts.values().all(|&c| c <= 2));
            }
        }
    }

    #[test]
    fn prefixes_of_square_free_words_are_square_free(
        word in prop::collection::vec(0usize..3, 0..12)
    ) {
        if !has_square(&word) {
            for cut in 0..=word.len() {
                prop_assert!(!has_square(&word[..cut]));
                prop_assert!(!has_square(&word[cut..]));
            }
        }
        prop_assert_eq!(has_square(&word), oracle_has_square(&word));
    }
}
