use std::path::PathBuf;
use std::process::{Command, Output};

fn corpus(file: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus").join(file).display().to_string()
}

fn pcdyn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pcdyn")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn order_and_cycle() {
    let o = pcdyn(&["order", &corpus("d4.pcp"), &corpus("d4.conjr.aut"), "--debug-invariants"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("order 2\n"));
    let o = pcdyn(&["order", &corpus("c5.pcp"), &corpus("c5.prim.aut"), "--mode", "emulate"]);
    assert!(stdout(&o).starts_with("order 4\n"));
    let o = pcdyn(&["cycle", &corpus("d4.pcp"), &corpus("d4.conjr.aut"), "--g", "[1,0,0]"]);
    assert!(stdout(&o).starts_with("cycle 2\n"));
    let o = pcdyn(&["oracle", &corpus("d4.pcp"), &corpus("d4.conjr.aut"), "--g", "[1,0,0]"]);
    assert_eq!(stdout(&o), "cycle 2\n");
    let o = pcdyn(&["oracle", &corpus("c5.pcp"), &corpus("c5.prim.aut")]);
    assert_eq!(stdout(&o), "order 4\n");
}

#[test]
fn normalize_and_preperiod() {
    let o = pcdyn(&["normalize", &corpus("c4xc2.pcp")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("weights 1 1 2"));
    assert_eq!(text.matches("img 1 =").count(), 2);
    let o = pcdyn(&["preperiod", &corpus("c8.pcp"), &corpus("c8.pow2.endo"), "--g", "[1,0,0]"]);
    assert!(stdout(&o).starts_with("preperiod 3\nperiodic_order 1\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(pcdyn(&["check", &corpus("q8.pcp")]).status.code(), Some(0));
    assert_eq!(pcdyn(&["check", "/nonexistent.pcp"]).status.code(), Some(1));
    assert_eq!(pcdyn(&["order", &corpus("d4.pcp"), &corpus("q8.pcp")]).status.code(), Some(1));
    assert_eq!(pcdyn(&["cycle", &corpus("d4.pcp"), &corpus("d4.conjr.aut"), "--g", "[2,0,0]"]).status.code(), Some(1));
    assert_eq!(pcdyn(&["check", &corpus("ut8_2.pcp")]).status.code(), Some(3));
    assert_eq!(pcdyn(&["oracle", &corpus("ut6_2.pcp"), &corpus("ut6_2.flip.aut"), "--budget", "1000"]).status.code(), Some(3));
}

#[test]
fn bench_csv() {
    let out = std::env::temp_dir().join(format!("pcdyn-bench-{}.csv", std::process::id()));
    let o = pcdyn(&[
        "bench",
        "--corpus",
        &corpus(""),
        "--groups",
        "c5,d4",
        "--algos",
        "algo1,generic,oracle",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&out).unwrap();
    std::fs::remove_file(&out).ok();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("group,instance,algorithm,result,mults,wall_ms"));
    assert_eq!(lines.count(), 3 * 5);
    assert!(text.contains("c5,prim,generic,4,"));
}
