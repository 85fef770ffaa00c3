use std::process::{Command, Output};

fn quiverhom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quiverhom")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn gp_list_on_corpus() {
    let o = quiverhom(&["gp-list", "--algebra", "corpus:sec4_example"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("A·gamma"), "{}", stdout(&o));
}

#[test]
fn json_has_the_report_keys() {
    let o = quiverhom(&["co-gorenstein", "--algebra", "corpus:c3_k2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    for key in ["\"command\"", "\"algebra\"", "\"result\"", "\"certificates\"", "\"warnings\""] {
        assert!(s.contains(key), "{key} missing in {s}");
    }
}

#[test]
fn missing_file_falls_back_to_corpus() {
    let o = quiverhom(&["info", "--algebra", "examples/finito.alg"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("vertices: 3"));
}

#[test]
fn exit_codes() {
    assert_eq!(quiverhom(&["info", "--algebra", "/nonexistent/x.alg"]).status.code(), Some(1));
    assert_eq!(quiverhom(&["pd", "--algebra", "corpus:sec4_example"]).status.code(), Some(1));
    let capped = quiverhom(&["periodic-test", "--algebra", "corpus:sec3_example", "--module", "M_a(1)", "--steps", "3"]);
    assert_eq!(capped.status.code(), Some(2));
    assert!(stdout(&capped).contains("no repetition within 3 steps"));
    assert_ne!(quiverhom(&["frobnicate", "--algebra", "corpus:sec4_example"]).status.code(), Some(0));
}

#[test]
fn pd_and_syzygy_of_path_modules() {
    let o = quiverhom(&["pd", "--algebra", "corpus:a3_k2", "--module", "simple(1)"]);
    assert_eq!(stdout(&o).trim(), "pd(M[1,1]) = 2");
    let o = quiverhom(&["syzygy", "--algebra", "corpus:sec3_example", "--module", "M_a(2)"]);
    assert!(stdout(&o).contains("N_a(-1)"), "{}", stdout(&o));
}

#[test]
fn triangular_split_file() {
    let dir = std::env::temp_dir().join(format!("quiverhom-split-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("good.split");
    std::fs::write(&good, "gamma: 3\ngamma_bar: 1 2\n").unwrap();
    let bad = dir.join("bad.split");
    std::fs::write(&bad, "gamma: 1 2\ngamma_bar: 3\n").unwrap();
    let o = quiverhom(&["triangular-check", "--algebra", "corpus:finito", "--split", good.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("bound 1"), "{}", stdout(&o));
    let o = quiverhom(&["triangular-check", "--algebra", "corpus:finito", "--split", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no arrows from Γ̄ to Γ"));
    std::fs::remove_dir_all(&dir).unwrap();
}
