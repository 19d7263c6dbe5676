use wreathlab::cli::run_with;

fn run(args: &str) -> (i32, String, String) {
    let argv = std::iter::once("wreathlab").chain(args.split_whitespace());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn run_argv(args: &[&str]) -> (i32, String, String) {
    let argv = std::iter::once("wreathlab").chain(args.iter().copied());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn word_length_of_a_short_word() {
    let (code, out, _) = run_argv(&["wreath", "len", "--n", "2", "--word", "a t"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "2");
}

#[test]
fn json_output_parses() {
    let (code, out, _) = run_argv(&["--format", "json", "wreath", "len", "--n", "3", "--word", "t a t^-1"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["length"], 3);
}

#[test]
fn classify_cyclic_five() {
    let (code, out, _) = run("classify --group C5");
    assert_eq!(code, 0);
    assert!(out.contains("NotRInf"), "{out}");
    assert!(out.contains("xi=*2"), "{out}");
}

#[test]
fn classify_cyclic_four_has_rinf() {
    let (code, out, _) = run("--format json classify --group C4");
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["outcome"], "RInf", "{out}");
}

#[test]
fn cayley_isomorphism_check_passes() {
    let (code, _, _) = run("dl check-iso --m 2 --radius 3");
    assert_eq!(code, 0);
}

#[test]
fn finite_reidemeister_methods_agree() {
    let (code, out, _) = run("--format json reid finite --group C6 --phi *5 --method all");
    assert_eq!(code, 0, "{out}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["agree"], true);
    assert_eq!(v["fh"], 2);
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, err) = run("no-such-command");
    assert_eq!(code, 2);
    assert!(!err.is_empty());
}

#[test]
fn cap_errors_name_the_flag() {
    let (code, _, err) = run_argv(&["--ball-cap", "2", "wreath", "lenbfs", "--n", "2", "--word", "t t t t"]);
    assert_eq!(code, 2);
    assert!(err.contains("--ball-cap"), "{err}");
}

#[test]
fn bad_group_spec_is_an_error() {
    let (code, out, _) = run("--format json group info X9");
    assert_eq!(code, 2);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["error"].is_string());
}
