mod common;

use std::io::Write;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

const PREAMBLE: &str = "\
providecolor dummy rgb .6,.5,.4
definecolor dummy rgb .6,.5,.4
providecolor dummy rgb .6,.5,.4
definecolor c1 rgb .7,.6,.5
definecolor c2 rgb .7 .6 .5
colorlet c1a c1
colorlet c2a c2
";

const SERIES_DEFS: &str = "\
current blue
definecolorseries foo rgb last . -.
resetcolorseries 5 foo
";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_colorexpr"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn file(contents: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn eval_examples() {
    let out = run(&["eval", "green!50!red"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "rgb 0.500000 0.500000 0.000000 #808000\n");

    let out = run(&["eval", ".", "--current", "blue"]);
    assert_eq!(stdout(&out), "rgb 0.000000 0.000000 1.000000 #0000FF\n");

    let out = run(&["eval", "-.", "--current", "blue"]);
    assert_eq!(stdout(&out), "rgb 1.000000 1.000000 0.000000 #FFFF00\n");

    let out = run(&["eval", "red", "--model", "cmyk"]);
    assert_eq!(
        stdout(&out),
        "cmyk 0.000000 1.000000 1.000000 0.000000 #FF0000\n"
    );
}

#[test]
fn eval_exit_codes() {
    let out = run(&["eval", "red!!"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("position 5"));
    assert_eq!(run(&["eval", "nosuch"]).status.code(), Some(3));
    assert_eq!(run(&["eval", "."]).status.code(), Some(4));
    assert_eq!(run(&["eval", "rgb,0:red,1"]).status.code(), Some(4));
}

#[test]
fn eval_with_defs() {
    let defs = file(PREAMBLE);
    let path = defs.path().to_str().unwrap();
    for expr in ["c1", "c2", "c1a", "c2a", "rgb,15:red,10.5;green,9;blue,7.5"] {
        let out = run(&["eval", expr, "--defs", path]);
        assert_eq!(
            stdout(&out),
            "rgb 0.700000 0.600000 0.500000 #B39980\n",
            "{expr}"
        );
    }
}

#[test]
fn defs_errors_map_to_exit_codes() {
    let bad = file("definecolor a gray 0\nfrobnicate\n");
    let out = run(&["eval", "a", "--defs", bad.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let undefined = file("colorlet m nosuch\n");
    let out = run(&["eval", "red", "--defs", undefined.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));

    let out = run(&["eval", "red", "--defs", "/nonexistent/defs.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn convert_examples() {
    assert_eq!(
        stdout(&run(&["convert", "rgb:.4,.5,.6", "--to", "gray"])),
        "gray 0.481000 #7B7B7B\n"
    );
    assert_eq!(
        stdout(&run(&["convert", "gray:1", "--to", "rgb"])),
        "rgb 1.000000 1.000000 1.000000 #FFFFFF\n"
    );
    assert_eq!(
        stdout(&run(&["convert", "rgb:1,0,0", "--to", "cmyk"])),
        "cmyk 0.000000 1.000000 1.000000 0.000000 #FF0000\n"
    );
    assert_eq!(
        stdout(&run(&["convert", "HTML:b39980", "--to", "HTML"])),
        "HTML 0.701961 0.600000 0.501961 #B39980\n"
    );
    assert_eq!(
        run(&["convert", "rgb:1,0", "--to", "gray"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["convert", "rgb:1,0,0", "--to", "lab"]).status.code(),
        Some(2)
    );
}

#[test]
fn swatch_red_row() {
    let out = run(&["swatch", "red"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0].split_whitespace().collect::<Vec<_>>(),
        ["expr", "rgb", "cmyk", "hsb", "HTML", "gray"]
    );
    assert_eq!(
        lines[1].split_whitespace().collect::<Vec<_>>(),
        [
            "red",
            "1.000000,0.000000,0.000000",
            "0.000000,1.000000,1.000000,0.000000",
            "0.000000,1.000000,1.000000",
            "FF0000",
            "0.300000"
        ]
    );
}

#[test]
fn swatch_all_listed_rows() {
    let rows = common::swatch_rows();
    let mut args = vec!["swatch"];
    args.extend(rows.iter().map(String::as_str));
    let out = run(&args);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 39);
    assert!(!text.contains("error"));
}

#[test]
fn swatch_from_file_and_models() {
    let list = file("# colors\nred\n\n-cyan\n");
    let out = run(&[
        "swatch",
        "--file",
        list.path().to_str().unwrap(),
        "--models",
        "cmy,gray",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
    assert_eq!(v[1]["expr"], "-cyan");
    assert_eq!(v[1]["values"]["cmy"], serde_json::json!([0.0, 1.0, 1.0]));
    assert_eq!(v[1]["hex"], "FF0000");
}

#[test]
fn swatch_errors() {
    let out = run(&["swatch", "nosuch"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stdout(&out).contains("error"));
    let out = run(&["swatch", "nosuch", "blue"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn swatch_html() {
    let out = run(&["swatch", "--format", "html", "red"]);
    let text = stdout(&out);
    assert!(text.contains("<td style=\"background-color:#FF0000;width:2em\"></td>"));
}

#[test]
fn series_demos() {
    let defs = file(SERIES_DEFS);
    let path = defs.path().to_str().unwrap();
    let out = run(&[
        "series",
        "foo",
        "--defs",
        path,
        "--accesses",
        "+,+,+,+,+,+,+",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "rgb 0.000000 0.000000 1.000000 #0000FF\n\
         rgb 0.200000 0.200000 0.800000 #3333CC\n\
         rgb 0.400000 0.400000 0.600000 #666699\n\
         rgb 0.600000 0.600000 0.400000 #999966\n\
         rgb 0.800000 0.800000 0.200000 #CCCC33\n\
         rgb 1.000000 1.000000 0.000000 #FFFF00\n\
         rgb 1.000000 1.000000 0.000000 #FFFF00\n"
    );
    let out = run(&["series", "foo", "--defs", path, "--accesses", "[2] x7"]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 7);
    assert!(text
        .lines()
        .all(|l| l == "rgb 0.400000 0.400000 0.600000 #666699"));

    let out = run(&["series", "foo", "--defs", path, "--accesses", "++ x7"]);
    let lines: Vec<String> = stdout(&out).lines().map(String::from).collect();
    assert_eq!(lines[1], "rgb 0.400000 0.400000 0.600000 #666699");
    assert_eq!(lines[6], "rgb 1.000000 1.000000 0.000000 #FFFF00");
}

#[test]
fn series_without_reset() {
    let defs = file("current blue\ndefinecolorseries foo rgb last . -.\n");
    let out = run(&[
        "series",
        "foo",
        "--defs",
        defs.path().to_str().unwrap(),
        "--accesses",
        "+",
    ]);
    assert_eq!(out.status.code(), Some(4));
    let out = run(&[
        "series",
        "foo",
        "--defs",
        defs.path().to_str().unwrap(),
        "--accesses",
        "?",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn stripe_table_scenario() {
    let events = file("before 3 rowcolor blue!25\nbefore 5 hide\nbefore 7 show\ncell 9 red!12\n");
    let out = run(&[
        "stripe",
        "--rows",
        "9",
        "--start",
        "1",
        "--odd",
        "green!25",
        "--even",
        "yellow!50",
        "--command",
        "hline",
        "--events",
        events.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let colors: Vec<String> = stdout(&out)
        .lines()
        .map(|l| l.split(' ').nth(1).unwrap().to_string())
        .collect();
    assert_eq!(
        colors,
        [
            "green!25",
            "yellow!50",
            "blue!25",
            "yellow!50",
            "-",
            "-",
            "green!25",
            "yellow!50",
            "red!12"
        ]
    );
}

#[test]
fn stripe_simple_cases() {
    let out = run(&["stripe", "--rows", "4", "--odd", "a", "--even", "b"]);
    assert_eq!(stdout(&out), "1 a\n2 b\n3 a\n4 b\n");
    let out = run(&["stripe", "--rows", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "");
    let out = run(&["stripe", "--rows", "2", "--odd", "", "--even", ""]);
    assert_eq!(stdout(&out), "1 -\n2 -\n");
}

#[test]
fn stripe_malformed_events() {
    let events = file("before three hide\n");
    let out = run(&[
        "stripe",
        "--rows",
        "3",
        "--events",
        events.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["stripe", "--rows", "3", "--odd", "red!"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn named_table_override() {
    let table = file("Mine rgb 0 0.5 1\n");
    let path = table.path().to_str().unwrap();
    let out = run(&["--named", path, "eval", "Mine"]);
    assert_eq!(stdout(&out), "rgb 0.000000 0.500000 1.000000 #0080FF\n");
    assert_eq!(
        run(&["--named", path, "eval", "JungleGreen"]).status.code(),
        Some(3)
    );
    let broken = file("Mine rgb 0 0.5\n");
    let out = run(&["--named", broken.path().to_str().unwrap(), "eval", "red"]);
    assert_eq!(out.status.code(), Some(2));
}
