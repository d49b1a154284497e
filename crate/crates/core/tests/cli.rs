use std::io::Write;
use std::process::Command;

use addbasis::io::{format_placement, parse_placement, Preset};
use addbasis::{IntSet, Placement};
use proptest::prelude::*;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_addbasis"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

/// Value of `field` in a field/value table.
fn field(text: &str, name: &str) -> Option<String> {
    text.lines()
        .filter(|l| !l.starts_with('#'))
        .find_map(|l| l.strip_prefix(name)?.strip_prefix('\t').map(str::to_string))
}

#[test]
fn bound_golden() {
    let (code, out, _) = run(&["bound", "8", "17", "17"]);
    assert_eq!(code, 0);
    assert_eq!(out, "561\n");
}

#[test]
fn range_golden() {
    let (code, out, _) = run(&["range", "--set", "0,1,3,4"]);
    assert_eq!(code, 0);
    let expected = "# range set; k counts the zero element\n\
                    field\tvalue\nk\t4\nn\t8\nn_over_k2\t1/2\nn_over_k2_decimal\t0.500000\n";
    assert_eq!(out, expected);
}

#[test]
fn build_simple() {
    let (code, out, _) = run(&["build", "--preset", "simple", "--t", "3"]);
    assert_eq!(code, 0);
    let elems: Vec<&str> = out.lines().filter(|l| !l.starts_with('#')).skip(1).collect();
    assert_eq!(elems, ["0", "1", "2", "3", "6", "9"]);
}

#[test]
fn verify_kohonen_small_t() {
    let (code, out, _) = run(&["verify", "--preset", "kohonen42", "--t", "2"]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "k").as_deref(), Some("91"));
    assert_eq!(field(&out, "m").as_deref(), Some("510"));
    assert_eq!(field(&out, "c").as_deref(), Some("85/294"));
    assert_eq!(field(&out, "part_sizes").as_deref(), Some("8,17,17"));
    assert_eq!(field(&out, "verified").as_deref(), Some("true"));
    let n: u64 = field(&out, "n").unwrap().parse().unwrap();
    assert!(n >= 2039);
    let cases = out.lines().filter(|l| l.ends_with("\ttrue") && l.contains('[')).count();
    assert_eq!(cases, 10);
}

#[test]
fn verify_simple() {
    let (code, out, _) = run(&["verify", "--preset", "simple", "--t", "3"]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "k").as_deref(), Some("6"));
    assert_eq!(field(&out, "n").as_deref(), Some("12"));
}

#[test]
fn verify_placement_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "# two segments\nI: 0\nJ: 0").unwrap();
    let path = f.path().to_str().unwrap();
    let (code, out, _) = run(&["verify", "--file", path, "--t", "4"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(field(&out, "m").as_deref(), Some("1"));
}

#[test]
fn coords_of_s_segment() {
    // kohonen42 has S at location 0: {0, 11, 22, ...} for t = 10.
    let (code, out, _) = run(&["coords", "--preset", "kohonen42", "--t", "10"]);
    assert_eq!(code, 0);
    let row = out
        .lines()
        .find(|l| l.starts_with("11\t"))
        .expect("element 11 present");
    let cols: Vec<&str> = row.split('\t').collect();
    assert_eq!(&cols[1..4], ["1", "1", "S"]);
}

#[test]
fn coords_tiles() {
    let (code, out, _) = run(&["coords", "--preset", "mrose7", "--t", "10", "--tiles"]);
    assert_eq!(code, 0);
    let rows = out.lines().filter(|l| !l.starts_with('#')).count();
    assert!(rows >= 15, "header plus 14 covered squares");
}

#[test]
fn search_seven() {
    let (code, out, _) = run(&["search", "--l", "7", "--max-loc", "16", "--exhaustive"]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "best_m").as_deref(), Some("14"));
    assert_eq!(field(&out, "ratio").as_deref(), Some("2/7"));
    assert_eq!(field(&out, "complete").as_deref(), Some("true"));
}

#[test]
fn nk_small() {
    let (code, out, _) = run(&["nk", "--k", "5"]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "n").as_deref(), Some("12"));
    assert_eq!(field(&out, "witness").as_deref(), Some("0,1,3,5,6"));
}

#[test]
fn input_errors_exit_two() {
    for args in [
        &["range", "--set", "-1,0"][..],
        &["range", "--set", "1,2"],
        &["verify", "--preset", "kohonen42", "--t", "1"],
        &["nk", "--k", "12"],
        &["bound", "1", "2"],
        &["search", "--l", "9", "--max-loc", "1", "--exhaustive"],
        &["verify", "--file", "/nonexistent/placement", "--t", "3"],
    ] {
        let (code, out, err) = run(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty(), "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn bad_placement_file_names_the_line() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "I: 0\nJ: 3..1").unwrap();
    let (code, _, err) = run(&["verify", "--file", f.path().to_str().unwrap(), "--t", "3"]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn budget_exhaustion_exits_three() {
    let (code, out, _) = run(&["search", "--l", "12", "--max-loc", "48", "--exhaustive", "--budget-nodes", "100"]);
    assert_eq!(code, 3);
    assert_eq!(field(&out, "complete").as_deref(), Some("false"));
    let (code, out, _) = run(&["nk", "--k", "12", "--budget-nodes", "50"]);
    assert_eq!(code, 3);
    assert_eq!(field(&out, "exhaustive").as_deref(), Some("false"));
}

#[test]
fn outputs_are_deterministic() {
    let commands: &[&[&str]] = &[
        &["build", "--preset", "mrose7", "--t", "5"],
        &["range", "--set", "0,1,3,5,6"],
        &["verify", "--preset", "kohonen42", "--t", "3"],
        &["coords", "--preset", "klove7", "--t", "6"],
        &["coords", "--preset", "kohonen42", "--t", "4", "--tiles"],
        &["nk", "--k", "7", "--table"],
        &["bound", "3", "4", "5"],
        &["search", "--l", "8", "--max-loc", "22", "--exhaustive", "--threads", "4"],
        &["search", "--l", "10", "--max-loc", "34", "--beam", "16"],
        &["search", "--l", "10", "--max-loc", "34", "--restarts", "20", "--seed", "11", "--threads", "3"],
    ];
    for args in commands {
        let first = run(args);
        let second = run(args);
        assert_eq!(first.0, 0, "{args:?}");
        assert_eq!(first, second, "{args:?}");
    }
    // Thread count is not part of the result.
    let one = run(&["search", "--l", "8", "--max-loc", "22", "--exhaustive", "--threads", "1"]);
    let four = run(&["search", "--l", "8", "--max-loc", "22", "--exhaustive", "--threads", "4"]);
    assert_eq!(one, four);
}

#[test]
fn preset_files_round_trip() {
    for preset in [Preset::Mrose7, Preset::Klove7, Preset::Kohonen42] {
        let p = preset.placement().unwrap();
        let text = format_placement(&p);
        let back = parse_placement(&text).unwrap();
        assert_eq!(back, p, "{}", preset.name());
        assert_eq!(format_placement(&back), text);
    }
    assert_eq!(Preset::Kohonen42.placement().unwrap().part_sizes(), (8, 17, 17));
}

fn parts() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::btree_set(0u64..200, 0..12).prop_map(|s| s.into_iter().collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn placement_text_round_trips(i in parts(), j in parts(), k in parts()) {
        prop_assume!(!(i.is_empty() && j.is_empty() && k.is_empty()));
        let p = Placement::new(
            IntSet::new(i).unwrap(),
            IntSet::new(j).unwrap(),
            IntSet::new(k).unwrap(),
        )
        .unwrap();
        let text = format_placement(&p);
        let back = parse_placement(&text).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(format_placement(&back), text);
    }
}
