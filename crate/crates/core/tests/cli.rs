use std::path::Path;
use std::process::{Command, Output};

use serde_json::{json, Value};

use fractau::algebra::{ideal_product, IdealGens, Ring};
use fractau::groebner::{buchberger, ideal_key};

const STAIRCASE: [&str; 8] = ["-p", "3", "-vars", "x,y", "-ideal", "x+y", "-ideal", "x*y"];

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fractau")).args(args).output().unwrap()
}

fn staircase(cmd: &str, rest: &[&str]) -> Output {
    let mut args = vec![cmd];
    args.extend(STAIRCASE);
    args.extend(rest);
    run(&args)
}

fn json_of(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn gens(out: &Output) -> Vec<String> {
    let v = json_of(out);
    assert_eq!(v["ring"], json!({"p": 3, "vars": ["x", "y"]}));
    v["gens"].as_array().unwrap().iter().map(|g| g.as_str().unwrap().to_string()).collect()
}

#[test]
fn root_examples() {
    let root = |h: &str| gens(&run(&["root", "-p", "3", "-vars", "x,y", h, "-e", "1"]));
    assert_eq!(root("x^3*y^2 + x^2*y^3"), ["x", "y"]);
    assert_eq!(root("x^3"), ["x"]);
    assert_eq!(root("x^3*y - x^2*y^2 + x*y^3"), ["1"]);
}

#[test]
fn tau_examples() {
    assert_eq!(gens(&staircase("tau", &["-c", "1/3,2/3"])), ["x", "y"]);
    assert_eq!(gens(&staircase("tau", &["-c", "0,0"])), ["1"]);
    assert_eq!(gens(&staircase("tau", &["-c", "1,1"])), ["x^2*y + x*y^2"]);
}

#[test]
fn printed_ideals_are_canonical() {
    let ring = Ring::new(3, &["x", "y"]).unwrap();
    for c in ["1/3,2/3", "1,1", "4/3,5/9", "2,1"] {
        let printed = gens(&staircase("tau", &["-c", c]));
        let again = buchberger(&IdealGens::parse(&printed.join(","), &ring).unwrap()).unwrap();
        let reprinted: Vec<String> = again.basis().iter().map(|g| g.to_string()).collect();
        assert_eq!(printed, reprinted, "c = {c}");
    }
}

#[test]
fn threshold_and_jumps() {
    let v = json_of(&staircase("threshold", &["-r", "1,1", "-I", "x,y", "-e", "3"]));
    assert_eq!(v["sequence"], json!(["1/3", "5/9", "17/27"]));
    assert_eq!(v["bounds"], json!(["17/27", "1"]));

    let v = json_of(&staircase("jump", &["-r", "1,1", "-k", "2", "-bound", "1"]));
    let jumps = v["jumps"].as_array().unwrap();
    assert_eq!(jumps[0]["interval"], json!(["5/9", "2/3"]));
    assert_eq!(jumps[0]["after"], "x;y");
    assert_eq!(jumps.last().unwrap()["after"], "x^2*y+x*y^2");
}

#[test]
fn fractal_check_and_staircase() {
    let out = staircase("fractal-check", &["-I", "x,y", "-e", "1", "-b", "0,2", "-box", "1,1", "-k", "3"]);
    let v = json_of(&out);
    assert_eq!(v["holds"], true);
    assert_eq!(v["samples"], v["agreements"]);

    let v = json_of(&run(&["staircase", "-depth", "1"]));
    assert_eq!(v, json!([["0.01", "0.22"], ["0.21", "0.12"]]));
}

fn raster_files(dir: &Path, bx: &str, k: &str) -> (String, String, Value) {
    let (ppm, csv, legend) = (dir.join("r.ppm"), dir.join("r.csv"), dir.join("r.json"));
    let out = staircase(
        "raster",
        &[
            "-box",
            bx,
            "-k",
            k,
            "-ppm",
            ppm.to_str().unwrap(),
            "-csv",
            csv.to_str().unwrap(),
            "-legend",
            legend.to_str().unwrap(),
        ],
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let legend: Value = serde_json::from_str(&std::fs::read_to_string(legend).unwrap()).unwrap();
    (std::fs::read_to_string(ppm).unwrap(), std::fs::read_to_string(csv).unwrap(), legend)
}

#[test]
fn raster_corners() {
    let dir = tempfile::tempdir().unwrap();
    let (ppm, csv, legend) = raster_files(dir.path(), "1,1", "0");
    assert!(ppm.starts_with("P3\n2 2\n255\n"));
    assert_eq!(csv, "i,j,ideal_key\n0,0,1\n0,1,x*y\n1,0,x+y\n1,1,x^2*y+x*y^2\n");
    let keys: Vec<&str> = legend["palette"].as_array().unwrap().iter().map(|e| e["key"].as_str().unwrap()).collect();
    assert_eq!(keys, ["1", "x*y", "x+y", "x^2*y+x*y^2"]);
}

#[test]
fn raster_five_ideals() {
    let dir = tempfile::tempdir().unwrap();
    let (ppm, csv, legend) = raster_files(dir.path(), "1,1", "4");
    assert_eq!(legend["palette"].as_array().unwrap().len(), 5);
    assert!(ppm.starts_with("P3\n82 82\n255\n"));
    assert_eq!(csv.lines().count(), 1 + 82 * 82);
}

#[test]
fn raster_skoda_periodicity() {
    // the pattern on [1,2]^2 is the [0,1]^2 pattern times (x+y) x y
    let dir = tempfile::tempdir().unwrap();
    let (_, csv, _) = raster_files(dir.path(), "2,2", "3");
    let ring = Ring::new(3, &["x", "y"]).unwrap();
    let shift = IdealGens::parse("x^2*y+x*y^2", &ring).unwrap();
    let mut grid = vec![vec![String::new(); 55]; 55];
    for line in csv.lines().skip(1) {
        let mut parts = line.splitn(3, ',');
        let i: usize = parts.next().unwrap().parse().unwrap();
        let j: usize = parts.next().unwrap().parse().unwrap();
        grid[i][j] = parts.next().unwrap().to_string();
    }
    for i in 0..=27 {
        for j in 0..=27 {
            let base = IdealGens::parse(&grid[i][j].replace(';', ","), &ring).unwrap();
            let expect = ideal_key(&ideal_product(&base, &shift)).unwrap();
            assert_eq!(grid[27 + i][27 + j], expect.as_str(), "cell ({i}, {j})");
        }
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["root", "-p", "3", "-vars", "x,y", "x^^2"]).status.code(), Some(2));
    assert_eq!(run(&["root", "-p", "4", "-vars", "x", "x"]).status.code(), Some(2));
    assert_eq!(staircase("tau", &["-c", "1/3"]).status.code(), Some(2));
    assert_eq!(staircase("tau", &["-c", "1/2,1/2", "-e-max", "1"]).status.code(), Some(3));
    assert_eq!(staircase("raster", &["-box", "1,1", "-k", "13"]).status.code(), Some(4));
}
