use std::path::PathBuf;
use std::process::{Command, Output};

fn thompson(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_thompson")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = thompson(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    thompson(args).status.code().unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

#[test]
fn documented_examples() {
    assert_eq!(stdout(&["nf", "x2 x0"]), "x0 x3\n");
    assert_eq!(stdout(&["member", "x0 x1", "--in", "oriented"]), "yes\n");
    assert_eq!(
        stdout(&["invariant", "x0 x2^2 x5 x6 x7^-1 x6^-1 x4^-1", "--jones"]),
        "A^8 - A^4 + 1 - A^-4 + A^-8\n"
    );
    assert_eq!(
        stdout(&["invariant", "x0 x2^2 x5 x6 x7^-1 x6^-1 x4^-1", "--jones", "--t", "--threads", "1"]),
        "t^2 - t + 1 - t^-1 + t^-2\n"
    );
}

#[test]
fn products_and_inverses() {
    assert_eq!(stdout(&["mul", "x0", "x1"]), "((.(..)).)|(.(.(..)))\n");
    assert_eq!(stdout(&["mul", "(.(..))|((..).)", "x0"]), ".|.\n");
    assert_eq!(stdout(&["inv", "x0"]), "(.(..))|((..).)\n");
    assert_eq!(stdout(&["inv", "--diagram", "((..).)|(.(..))"]), "(.(..))|((..).)\n");
}

#[test]
fn membership_witnesses() {
    assert_eq!(stdout(&["member", "x0", "--in", "oriented"]), "no\nodd cycle v1 v0 v2\n");
    assert_eq!(stdout(&["--family", "f3", "member", "y1", "--in", "oriented"]), "no\nodd cycle v1 v0 v2\n");
    assert_eq!(stdout(&["member", "x0^2 x1 x2^-1", "--in", "3color"]), "yes\n");
    assert_eq!(stdout(&["member", "x1", "--in", "3color"]), "no\ncolor conflict at region 2\n");
    assert_eq!(stdout(&["member", "x0 x1^-1", "--in", "positive"]), "no\nnegative part x1^-1\n");
    assert_eq!(stdout(&["member", "x0 x1", "--in", "rect:1:2"]), "yes\n");
    assert_eq!(stdout(&["member", "x0", "--in", "rect:2:1"]), "no\npi = (1, -1)\n");
}

#[test]
fn action_and_maps() {
    assert_eq!(stdout(&["act", "x0", "0.01"]), "0.1\n");
    assert_eq!(stdout(&["act", "x0", "1/2^2"]), "0.1\n");
    assert_eq!(stdout(&["--family", "f3", "map", "y0", "--ren"]), "x0 x1\n");
    assert_eq!(stdout(&["map", "x3", "--shift-r"]), "x4\n");
    assert_eq!(stdout(&["map", "x0", "--flip"]), "x0^-1\n");
    assert_eq!(stdout(&["map", "x0", "--iota"]), "((...)..)|(..(...))\n");
    assert_eq!(stdout(&["--family", "f4", "map", "y0", "--phi"]), "x0^2 x1 x2^-1\n");
}

#[test]
fn tait_dot_matches_fixture() {
    let path = scratch("x0x1.dot");
    let text = stdout(&["tait", "x0 x1", "--dot", path.to_str().unwrap()]);
    assert_eq!(text, "vertices=4 upper:v0v1+ lower:v0v1- upper:v0v3+ upper:v1v2+ lower:v1v2- lower:v2v3-\n");
    let got = std::fs::read_to_string(&path).unwrap();
    assert_eq!(got, include_str!("fixtures/x0x1.dot"));
}

#[test]
fn link_outputs() {
    assert_eq!(stdout(&["link", "1"]), "arcs=0 crossings=0\nloops=1\n");
    let pd = stdout(&["link", "x0 x1", "--oriented"]);
    assert!(pd.starts_with("arcs=12 crossings=6\n") && pd.ends_with("writhe=0\n"), "{pd}");
    let (pd_path, svg_path) = (scratch("x0.pd"), scratch("x0.svg"));
    let out = stdout(&["link", "x0", "--pd", pd_path.to_str().unwrap(), "--svg", svg_path.to_str().unwrap()]);
    assert_eq!(out, "");
    assert_eq!(std::fs::read_to_string(&pd_path).unwrap(), stdout(&["link", "x0"]));
    assert!(std::fs::read_to_string(&svg_path).unwrap().starts_with("<svg"));
}

#[test]
fn invariants_of_small_links() {
    assert_eq!(stdout(&["invariant", "x0", "--components"]), "1\n");
    assert_eq!(stdout(&["invariant", "x0 x1", "--components"]), "2\n");
    assert_eq!(stdout(&["invariant", "x0", "--bracket"]), "1\n");
    assert_eq!(stdout(&["invariant", "x0 x1", "--writhe"]), "0\n");
    assert_eq!(stdout(&["invariant", "x0 x1", "--jones"]), "-A^2 - A^-2\n");
}

#[test]
fn batch_input_from_file() {
    let path = scratch("words.txt");
    std::fs::write(&path, "# relations\nx2 x0\nx3 x1  # shifted\n\n1\n").unwrap();
    assert_eq!(stdout(&["nf", "--file", path.to_str().unwrap()]), "x0 x3\nx1 x4\n1\n");
    let out = thompson(&["tait", "--file", path.to_str().unwrap(), "--dot", scratch("many.dot").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["nf", "x0"]), 0);
    assert_eq!(code(&["member", "x0", "--in", "oriented"]), 0);
    assert_eq!(code(&["nf", "z0"]), 1);
    assert_eq!(code(&["nf", "--diagram", "((..).)|(..)"]), 1);
    assert_eq!(code(&["--family", "f3", "nf", "y0"]), 1);
    assert_eq!(code(&["--family", "f4", "link", "y0"]), 1);
    assert_eq!(code(&["link", "x0", "--oriented"]), 1);
    assert_eq!(code(&["member", "x0", "--in", "nowhere"]), 1);
    assert_eq!(code(&["act", "x0", "0.2"]), 1);
    assert_eq!(code(&["nf"]), 1);
    assert_eq!(code(&["frobnicate"]), 1);
    assert_eq!(code(&["invariant", "x0"]), 1);
    assert_eq!(code(&["--version"]), 0);
    let out = thompson(&["link", "x0", "--oriented"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("odd cycle"));
}

#[test]
fn output_is_deterministic() {
    let args = ["link", "x0 x2^2 x5 x6 x7^-1 x6^-1 x4^-1"];
    assert_eq!(stdout(&args), stdout(&args));
    assert!(stdout(&args).starts_with("arcs=36 crossings=18\n"));
}
