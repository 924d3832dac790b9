use super::*;

fn doc(text: &str) -> QuiverDoc {
    text.parse().unwrap()
}

fn quiet() -> RunOptions {
    RunOptions {
        timing: false,
        ..RunOptions::default()
    }
}

const A2: &str = "quiver A2\nvertex 1\nvertex 2\narrow a : 1 -> 2";
const J2: &str = "quiver J2\nvertex 1\narrow a1 : 1 -> 1\narrow a2 : 1 -> 1";
const FRAMED_LOOP: &str = "quiver L\nvertex 1\narrow z : 1 -> 1\nframe a0 : * -> 1";

#[test]
fn classify_jordan2() {
    let r = run_command(&Command::Classify { doc: doc(J2) }, &quiet()).unwrap();
    assert_eq!(r.verdict, "MoreThanTwo");
    assert_eq!(r.data["pair"], json!(["1", "1"]));
    assert_eq!(r.data["witnesses"], json!(["e1", "a1", "a2"]));
    assert_eq!(r.exit_code(), 0);
}

#[test]
fn pathways_lists_every_nonempty_pair() {
    let r = run_command(&Command::Pathways { doc: doc(A2) }, &quiet()).unwrap();
    assert_eq!(r.verdict, "AtMostTwo");
    let pairs = r.data["pairs"].as_array().unwrap();
    assert_eq!(pairs.len(), 3);
    assert!(pairs.contains(&json!({"source": "1", "target": "2", "count": 1, "pathways": ["a"]})));
}

#[test]
fn verify_thm1_a2() {
    let cmd = Command::VerifyThm1 {
        doc: doc(A2),
        n: 2,
        d: 3,
    };
    let r = run_command(&cmd, &quiet()).unwrap();
    assert_eq!(r.verdict, "CONSISTENT");
    assert_eq!(r.data["kernel_dimension"], 10);
    assert_eq!(r.data["span"]["verdict"], "equal");
    assert_eq!(r.exit_code(), 0);
    assert!(run_command(
        &Command::VerifyThm1 {
            doc: doc(FRAMED_LOOP),
            n: 2,
            d: 1
        },
        &quiet()
    )
    .is_err());
}

#[test]
fn verify_thm2_reports_failure_with_exit_code_one() {
    let cmd = Command::VerifyThm2 {
        doc: doc(FRAMED_LOOP),
        n: 2,
        m: 1,
        d: 2,
    };
    let r = run_command(&cmd, &quiet()).unwrap();
    assert_eq!(r.verdict, "FAIL");
    assert_eq!(r.exit_code(), 1);
    assert!(r.data["missing_invariant"].is_string());
    let j2 = Command::VerifyThm2 {
        doc: doc(&format!("{J2}\nframe f : * -> 1")),
        n: 2,
        m: 1,
        d: 1,
    };
    assert_eq!(error_exit_code(&run_command(&j2, &quiet()).unwrap_err()), 2);
}

#[test]
fn verify_example() {
    for id in EXAMPLES {
        let r = run_command(&Command::VerifyExample { id: id.to_string() }, &quiet()).unwrap();
        assert_eq!(r.verdict, "PASS");
        assert_eq!(r.data["polynomial"], r.data["expected"]);
    }
    let e = run_command(&Command::VerifyExample { id: "9.9".into() }, &quiet()).unwrap_err();
    assert_eq!(error_exit_code(&e), 2);
}

#[test]
fn invariants_and_generators() {
    let cmd = Command::Invariants {
        doc: doc(FRAMED_LOOP),
        n: 2,
        m: Some(1),
        d: 3,
    };
    assert_eq!(
        run_command(&cmd, &quiet()).unwrap().data["dims"],
        json!([1, 3, 7, 13])
    );
    let cmd = Command::Invariants {
        doc: doc(FRAMED_LOOP),
        n: 2,
        m: None,
        d: 1,
    };
    assert_eq!(
        error_exit_code(&run_command(&cmd, &quiet()).unwrap_err()),
        2
    );
    let cmd = Command::Invariants {
        doc: doc(A2),
        n: 2,
        m: Some(1),
        d: 1,
    };
    assert!(run_command(&cmd, &quiet()).is_err());
    let cmd = Command::Generators {
        doc: doc(FRAMED_LOOP),
        n: 2,
        m: 1,
        d: 1,
    };
    let r = run_command(&cmd, &quiet()).unwrap();
    assert_eq!(
        r.data["row_generators"],
        json!(["(2 | 1)@[0]", "(2 | 1)@[1,0]"])
    );
    assert_eq!(r.data["count"], 4);
}

#[test]
fn resource_guard_exit_code() {
    let opts = RunOptions {
        max_monomials: 10,
        ..quiet()
    };
    let e = run_command(
        &Command::Invariants {
            doc: doc(J2),
            n: 2,
            m: None,
            d: 3,
        },
        &opts,
    )
    .unwrap_err();
    assert_eq!(error_exit_code(&e), 3);
}

#[test]
fn reports_are_deterministic_without_timing() {
    let cmd = Command::VerifyThm1 {
        doc: doc(J2),
        n: 2,
        d: 2,
    };
    let a = run_command(&cmd, &quiet()).unwrap();
    let b = run_command(
        &cmd,
        &RunOptions {
            exec: Exec::Sequential,
            ..quiet()
        },
    )
    .unwrap();
    assert_eq!(a.to_json(), b.to_json());
    assert_eq!(a.to_text(), b.to_text());
    assert!(a.millis.is_none());
    assert!(run_command(&cmd, &RunOptions::default())
        .unwrap()
        .millis
        .is_some());
}

#[test]
fn json_schema_and_text_mirror() {
    let r = run_command(
        &Command::VerifyThm1 {
            doc: doc(A2),
            n: 2,
            d: 1,
        },
        &quiet(),
    )
    .unwrap();
    let v: Value = serde_json::from_str(&r.to_json()).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    let mut expected = [
        "schema", "command", "quiver", "n", "m", "d", "verdict", "data", "version", "millis",
    ];
    expected.sort_unstable();
    let mut keys_sorted = keys.clone();
    keys_sorted.sort_unstable();
    assert_eq!(keys_sorted, expected);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["m"], Value::Null);
    let text = r.to_text();
    assert!(text.starts_with(
        "schema: 1\ncommand: verify-thm1\nquiver: A2\nn: 2\nm: -\nd: 1\nverdict: CONSISTENT\n"
    ));
    assert!(text.contains("kernel_dims: [1,2]"));
    assert!(text.contains("span:\n  rank_a: 3\n"));
    assert!(text.ends_with("millis: -\n"));
}
