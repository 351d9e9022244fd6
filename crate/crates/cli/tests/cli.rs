use std::path::PathBuf;
use std::process::{Command, Output};

fn corpus(rel: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "corpus", rel].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_graycat"))
        .args(["--format", "machine"])
        .args(args)
        .env_remove("GRAYCAT_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn value<'a>(out: &'a str, key: &str) -> Option<&'a str> {
    out.lines().find_map(|l| l.strip_prefix(key)?.strip_prefix('='))
}

#[test]
fn validate_accepts_every_corpus_file() {
    for dir in ["gray", "morphisms", "computads"] {
        let mut files: Vec<_> = std::fs::read_dir(corpus(dir)).unwrap().map(|e| e.unwrap().path()).collect();
        files.sort();
        assert!(!files.is_empty());
        for f in files {
            let o = run(&["validate", f.to_str().unwrap()]);
            assert_eq!(o.status.code(), Some(0), "{}: {}", f.display(), stdout(&o));
            assert_eq!(value(&stdout(&o), "valid"), Some("true"));
        }
    }
}

#[test]
fn classify_detects_the_diagonal_as_a_weak_equivalence() {
    let o = run(&["classify", &corpus("morphisms/D_B_Z_2.morphism")]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    assert_eq!(value(&out, "weak_equivalence"), Some("true"));
    assert_eq!(value(&out, "trivial_iff_weq_and_fibration"), Some("true"));
    assert_eq!(out.lines().last(), Some("status=ok"));
}

#[test]
fn bounds_are_echoed_before_results() {
    let o = run(&["comonad-check", &corpus("gray/terminal.gray"), "--bound-word", "3"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    let keys: Vec<&str> = out.lines().map(|l| l.split('=').next().unwrap()).collect();
    assert_eq!(&keys[..5], ["command", "bound_path", "bound_word", "budget", "maxdim"]);
    assert_eq!(value(&out, "bound_word"), Some("3"));
    assert_eq!(value(&out, "comonad_laws"), Some("true"));
}

#[test]
fn budget_comes_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_graycat"))
        .args(["--format", "machine", "kan-check", "--delta", "1"])
        .env("GRAYCAT_BUDGET", "1234")
        .output()
        .unwrap();
    assert_eq!(value(&stdout(&o), "budget"), Some("1234"));
}

#[test]
fn failed_check_exits_with_one() {
    let o = run(&["kan-check", "--delta", "2"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(1), "{out}");
    assert_eq!(value(&out, "kan"), Some("false"));
    assert!(value(&out, "unfillable").is_some());
}

#[test]
fn exhausted_budget_is_inconclusive() {
    let o = run(&["kan-check", "--delta", "3", "--budget", "1"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(2), "{out}");
    assert_eq!(out.lines().last(), Some("status=inconclusive"));
}

#[test]
fn corrupted_file_reports_its_line() {
    let text = std::fs::read_to_string(corpus("gray/B_Z_2.gray")).unwrap();
    let mut lines: Vec<&str> = text.lines().collect();
    lines[5] = "1 0 -> zero s";
    let dir = std::env::temp_dir().join(format!("graycat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.gray");
    std::fs::write(&bad, lines.join("\n")).unwrap();
    let o = run(&["validate", bad.to_str().unwrap()]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(3), "{out}");
    assert!(value(&out, "error").unwrap().starts_with("line 6:"), "{out}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn invalid_structure_is_a_failed_validation() {
    let text = std::fs::read_to_string(corpus("gray/B_Z_2.gray")).unwrap();
    let broken = text.replacen("[comp1]\n0 0 -> 0\n", "[comp1]\n0 0 -> 1\n", 1);
    assert_ne!(broken, text);
    let dir = std::env::temp_dir().join(format!("graycat-cli-inv-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("broken.gray");
    std::fs::write(&bad, broken).unwrap();
    let o = run(&["validate", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    let o = run(&["path-object", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3), "{}", stdout(&o));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn missing_file_is_an_input_error() {
    let o = run(&["nerve", "/nonexistent/graycat.gray"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn output_is_deterministic() {
    let args = ["cofibrant-replace", &corpus("gray/B_Z_2.gray"), "--bound-word", "2"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn nerve_output_round_trips_through_kan_check() {
    let dir = std::env::temp_dir().join(format!("graycat-cli-nerve-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("n.sset");
    let o = run(&["nerve", &corpus("gray/B_Z_2.gray"), "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = run(&["kan-check", out.to_str().unwrap(), "--maxdim", "3"]);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{text}");
    assert_eq!(value(&text, "method"), Some("search"));
    assert_eq!(value(&text, "simplices"), Some("1,2,4,8,16"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn adjoint_completion_finds_one_t() {
    let o = run(&["adjoint-biequiv", "complete", &corpus("gray/B_Z_2.gray"), "--f", "s", "--g", "s", "--eps", "1.e"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    assert_eq!(value(&out, "t_candidates"), Some("1"));
    assert_eq!(value(&out, "first_tetrahedron"), Some("true"));
    assert_eq!(value(&out, "second_tetrahedron"), Some("true"));
}

#[test]
fn unknown_cell_name_is_an_input_error() {
    let o = run(&["adjoint-biequiv", "complete", &corpus("gray/B_Z_2.gray"), "--f", "nope", "--g", "s", "--eps", "1.e"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn gn_beyond_the_top_dimension_is_rejected() {
    assert_eq!(run(&["gn", "1"]).status.code(), Some(0));
    assert_eq!(run(&["gn", "3"]).status.code(), Some(3));
}

#[test]
fn free_sesquicategory_factorizations_are_unique() {
    for c in ["whiskered", "triangle", "loop2"] {
        let o = run(&["free-sesqui", &corpus(&format!("computads/{c}.computad")), "--bound-path", "3"]);
        assert_eq!(o.status.code(), Some(0), "{c}: {}", stdout(&o));
    }
}

#[test]
fn bad_arguments_are_rejected_by_the_parser() {
    assert_eq!(run(&["kan-check", "--delta", "1", "--maxdim", "7"]).status.code(), Some(3));
}
