use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use divide_core::generators::{fixture, gen_chords};
use serde_json::Value;
use tempfile::TempDir;

fn divide(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_divide")).args(args).output().expect("run divide")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/fixtures").join(name).display().to_string()
}

fn write_fixture(dir: &TempDir, name: &str) -> String {
    let path = dir.path().join(format!("{name}.json"));
    fs::write(&path, fixture(name).unwrap().to_json()).unwrap();
    path.display().to_string()
}

fn write_text(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.display().to_string()
}

fn out_path(dir: &TempDir, name: &str) -> PathBuf {
    dir.path().join(name)
}

#[test]
fn validate() {
    let dir = TempDir::new().unwrap();
    let x1 = write_fixture(&dir, "X1");
    let o = divide(&["validate", &x1]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "valid");

    let reuse = x1.replace("X1.json", "reuse.json");
    let mut doc: Value = serde_json::from_str(&fs::read_to_string(&x1).unwrap()).unwrap();
    doc["edges"][1]["b"][1] = 0.into();
    fs::write(&reuse, doc.to_string()).unwrap();
    let o = divide(&["validate", &reuse]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("slot"), "{}", stderr(&o));

    let concurrent = write_text(
        &dir,
        "concurrent.json",
        r#"{"format":"divide-chords/1","chords":[{"s":[0,1],"t":"inf"},{"s":[0,1],"t":[1,1]}]}"#,
    );
    assert_eq!(divide(&["validate", &concurrent]).status.code(), Some(1));
    assert_eq!(divide(&["validate", "/nonexistent/file.json"]).status.code(), Some(1));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(divide(&[]).status.code(), Some(2));
    assert_eq!(divide(&["report"]).status.code(), Some(2));
    assert_eq!(divide(&["gen", "--family", "spiral", "--k", "2", "-o", "x"]).status.code(), Some(2));
    assert_eq!(divide(&["corpus", "--count", "0", "--n", "2", "--seed", "1"]).status.code(), Some(2));
}

fn report_json(path: &str) -> Value {
    let o = divide(&["report", path, "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn reports() {
    let a = report_json(&data("fig2a.json"));
    assert_eq!(a["lambda"]["formula"], 2);
    assert_eq!(a["lambda"]["trace"], 2);
    assert_eq!(a["stats"]["cellular"], false);

    let b = report_json(&data("fig2b.json"));
    assert_eq!(b["lambda"]["formula"], -1);
    assert_eq!(b["stats"]["simple"], false);

    let dir = TempDir::new().unwrap();
    let lens = report_json(&write_fixture(&dir, "LENS"));
    assert_eq!(lens["lambda"]["formula"], 0);
    assert_eq!(lens["counts"]["mu"], 3);
    assert_eq!(lens["counts"]["e"], 2);
    assert_eq!(lens["counts"]["f"], 0);
    assert_eq!(lens["chi_body"], 1);
    assert_eq!(lens["char_poly"], serde_json::json!([-1, 1, -1, 1]));
    assert_eq!(lens["traces"].as_array().unwrap().len(), 12);
}

#[test]
fn report_text_and_determinism() {
    let path = data("fig1.json");
    let first = divide(&["report", &path, "--traces", "5"]);
    assert_eq!(first.status.code(), Some(0));
    let text = stdout(&first);
    assert!(text.contains("lefschetz    0"));
    assert!(text.lines().any(|l| l.contains("cellular") && l.ends_with(" no")), "{text}");
    assert_eq!(divide(&["report", &path, "--traces", "5"]).stdout, first.stdout);
    let j1 = divide(&["report", &path, "--format", "json"]).stdout;
    assert_eq!(divide(&["report", &path, "--format", "json"]).stdout, j1);
    assert_eq!(divide(&["report", &path, "--traces", "65"]).status.code(), Some(2));
}

#[test]
fn gamma_dot() {
    let dir = TempDir::new().unwrap();
    for (name, nodes) in [("X1", 1), ("LOOP", 2), ("LENS", 3)] {
        let input = write_fixture(&dir, name);
        let out = out_path(&dir, &format!("{name}.dot"));
        let o = divide(&["gamma", &input, "--dot", out.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        let dot = fs::read_to_string(&out).unwrap();
        assert!(dot.starts_with("graph gamma {"));
        let count = dot.lines().filter(|l| l.contains("shape=")).count();
        assert_eq!(count, nodes, "{name}\n{dot}");
    }
}

#[test]
fn render() {
    let dir = TempDir::new().unwrap();
    let two = write_text(
        &dir,
        "two.json",
        r#"{"format":"divide-chords/1","chords":[{"s":[-1,1],"t":[1,1]},{"s":[0,1],"t":"inf"}]}"#,
    );
    let svg = out_path(&dir, "two.svg");
    assert_eq!(divide(&["render", &two, "--svg", svg.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(fs::read_to_string(&svg).unwrap().matches("class=\"crossing\"").count(), 1);

    let set = gen_chords(5, 11).unwrap();
    let five = write_text(&dir, "five.json", &set.to_json());
    let svg = out_path(&dir, "five.svg");
    assert_eq!(divide(&["render", &five, "--svg", svg.to_str().unwrap()]).status.code(), Some(0));
    let drawn = fs::read_to_string(&svg).unwrap();
    let oracle = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).filter(|&(i, j)| set.chords()[i].interleaves(&set.chords()[j])).count();
    assert_eq!(drawn.matches("class=\"crossing\"").count(), oracle);

    let o = divide(&["render", &write_fixture(&dir, "LENS"), "--svg", svg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("no geometry available"));
}

#[test]
fn generators_write_valid_files() {
    let dir = TempDir::new().unwrap();
    let chords = out_path(&dir, "c.json");
    assert_eq!(divide(&["gen-chords", "--n", "4", "--seed", "3", "-o", chords.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(fs::read_to_string(&chords).unwrap(), gen_chords(4, 3).unwrap().to_json());
    for family in ["zigzag", "coil"] {
        let path = out_path(&dir, &format!("{family}.json"));
        let o = divide(&["gen", "--family", family, "--k", "3", "-o", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        let r = report_json(path.to_str().unwrap());
        assert_eq!(r["stats"]["delta"], 3);
    }
}

#[test]
fn corpus() {
    let seed = (0..).find(|&s| gen_chords(2, s).unwrap().interleaved_pairs() == 1).unwrap();
    let dir = TempDir::new().unwrap();
    let csv = out_path(&dir, "one.csv");
    let o = divide(&["corpus", "--count", "1", "--n", "2", "--seed", &seed.to_string(), "--csv", csv.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "seed,n,r,delta,regions,connected,cellular,simple,slalom,mu,e,f,chi_body,lambda,checks_passed,findings");
    assert_eq!(lines.len(), 2);
    assert!(lines[1].starts_with(&format!("{seed},2,2,1,0,true,true,")), "{}", lines[1]);
    assert!(stderr(&o).contains("discrepancies 0"));

    let o = divide(&["corpus", "--count", "10", "--n", "1", "--seed", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for row in text.lines().skip(1) {
        let f: Vec<&str> = row.split(',').collect();
        assert_eq!((f[3], f[7], f[13]), ("0", "false", "1"), "{row}");
    }
    assert_eq!(text.lines().count(), 11);
}

#[test]
fn traces_table() {
    let dir = TempDir::new().unwrap();
    let lp = write_fixture(&dir, "LOOP");
    let o = divide(&["traces", &lp, "--k", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "k,tr_T_k,lefschetz_k,tr_M_k\n1,1,0,0\n2,-1,2,2\n3,-2,3,0\n");
    let csv = out_path(&dir, "t.csv");
    assert_eq!(divide(&["traces", &lp, "--k", "3", "--csv", csv.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(fs::read_to_string(&csv).unwrap(), stdout(&o));
}
