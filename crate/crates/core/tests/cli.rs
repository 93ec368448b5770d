use qcluster::cli::{self, EXIT_BOUND, EXIT_OK, EXIT_VALIDATION, EXIT_VERIFY_FAILED};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(
        std::iter::once("qcluster").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn show_prints_matrices_and_diagonal() {
    let (code, out, _) = run(&["show", "sl2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("B =\n  [ 0]\n  [-1]\n  [-1]\n"), "{out}");
    assert!(out.contains("diagonal [2]"), "{out}");
    assert!(out.contains("a -> [b], a -> [c]"), "{out}");

    let (_, out, _) = run(&["show", "gr25"]);
    assert!(out.contains("diagonal [2, 2]"), "{out}");
}

#[test]
fn show_rejects_non_skew_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.toml");
    std::fs::write(
        &path,
        "names = [\"a\", \"b\"]\nmutable = [0]\nB = [[0], [1]]\nL = [[0, 1], [1, 0]]\n",
    )
    .unwrap();
    let (code, _, err) = run(&["show", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_VALIDATION);
    assert!(err.contains("skew"), "{err}");

    std::fs::write(&path, "names = [\"a\"]\nmutable = [0]\nB = 3\nL = [[0]]\n").unwrap();
    let (code, _, err) = run(&["show", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_VALIDATION);
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn mutate_prints_relations() {
    let (code, out, _) = run(&["mutate", "sl2", "0"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("a*a' = 1 + q^(1)*b*c"), "{out}");

    let (_, out, _) = run(&["mutate", "gr25", "1"]);
    assert!(
        out.contains("D14*D14' = q^(-1)*D13*D45 + q^(1)*D15*D34"),
        "{out}"
    );

    let (_, twice, _) = run(&["--format", "machine", "mutate", "gr25", "1", "1"]);
    let (_, orig, _) = run(&["--format", "machine", "show", "gr25"]);
    let twice: serde_json::Value = serde_json::from_str(&twice).unwrap();
    let orig: serde_json::Value = serde_json::from_str(&orig).unwrap();
    assert_eq!(twice["B"], orig["B"]);
    assert_eq!(twice["L"], orig["L"]);
    assert_eq!(twice["steps"][1]["expansion"], "D14");
}

#[test]
fn mutate_rejects_frozen_positions() {
    let (code, _, err) = run(&["mutate", "sl2", "1"]);
    assert_eq!(code, EXIT_VALIDATION);
    assert!(err.contains("frozen"), "{err}");
    let (code, _, _) = run(&["mutate", "sl2", "7"]);
    assert_eq!(code, EXIT_VALIDATION);
}

#[test]
fn enumerate_summaries() {
    let (code, out, _) = run(&["enumerate", "gr25"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("5 vertices"), "{out}");
    assert!(out.contains("10 variables"), "{out}");

    let (_, out, _) = run(&["enumerate", "uqn12minus"]);
    assert!(out.starts_with("14 vertices"), "{out}");
    assert!(out.contains("13 variables: 9 mutable, 4 frozen"), "{out}");

    let (_, out, _) = run(&["--format", "machine", "enumerate", "projective(3)"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["vertices"], 1);
}

#[test]
fn bound_exceeded_has_its_own_code() {
    let (code, _, err) = run(&["enumerate", "uqn12minus", "--max", "5"]);
    assert_eq!(code, EXIT_BOUND);
    assert!(!err.is_empty());
}

#[test]
fn verify_exit_codes() {
    let (code, out, _) = run(&["verify", "sl2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("ok   a*d = 1 + q^(1)*b*c"), "{out}");
    assert!(out.contains("ok   d*a = q^(-1)*b*c + 1"), "{out}");

    let (code, out, _) = run(&["verify", "gr25"]);
    assert_eq!(code, EXIT_OK);
    // One line per directed edge, written as a product of two coordinates.
    let edges = out
        .lines()
        .filter(|l| l.starts_with("ok   D") && l[5..].split(" = ").next().unwrap().contains('*'));
    assert_eq!(edges.count(), 10, "{out}");
    assert!(!out.contains("FAIL"));

    let (code, out, _) = run(&["--format", "machine", "verify", "uqn12minus"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["vertices"], 14);

    // The catalog records an identity that does not hold as transcribed.
    let (code, out, _) = run(&["verify", "uqn2minus"]);
    assert_eq!(code, EXIT_VERIFY_FAILED);
    assert!(out.contains("adjoined relation"), "{out}");
    assert!(out.contains("residue"), "{out}");

    let (code, _, _) = run(&["verify", "n2minus"]);
    assert_eq!(code, EXIT_VALIDATION);
}

#[test]
fn dot_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.dot");
    let b = dir.path().join("b.dot");
    assert_eq!(
        run(&["enumerate", "uqn12minus", "--dot", a.to_str().unwrap()]).0,
        EXIT_OK
    );
    assert_eq!(
        run(&["export-dot", "uqn12minus", "--dot", b.to_str().unwrap()]).0,
        EXIT_OK
    );
    let (a, b) = (
        std::fs::read_to_string(a).unwrap(),
        std::fs::read_to_string(b).unwrap(),
    );
    assert_eq!(a, b);
    assert!(a.contains("shape=box"));
    assert_eq!(a.matches(" -- ").count(), 21);

    let (_, quiver, _) = run(&["export-dot", "sl2", "--quiver"]);
    assert!(quiver.starts_with("digraph"), "{quiver}");
}

#[test]
fn seed_files_round_trip_through_the_cli() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gr25.toml");
    let seed = qcluster::catalog::builtin_seed("gr25").unwrap().seed;
    std::fs::write(
        &path,
        qcluster::seedfile::SeedFile::from_seed(&seed).to_toml(),
    )
    .unwrap();
    let (code, from_file, _) = run(&["show", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(from_file, run(&["show", "gr25"]).1);
}
