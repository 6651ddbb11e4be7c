//! End-to-end tests of the permdn binary: exit codes, JSON schema, the
//! closed certificate loop, and determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

use permdn_core::catalog::builtin_entry;
use permdn_core::construct;
use permdn_core::format_cycles;
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_permdn"))
}

fn write_fixture(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("permdn-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn bundled_record(name: &str, file: &str) -> PathBuf {
    let entry = builtin_entry(name).unwrap_or_else(|| panic!("{name} not bundled"));
    write_fixture(file, &entry.to_record())
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn analyze_gl23_json_report() {
    let file = bundled_record("GL(2,3)", "gl23.grp");
    let output = run(&["analyze", file.to_str().unwrap(), "--json"]);
    assert_eq!(exit_code(&output), 0);
    let report: Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    assert_eq!(report["degree"], 8);
    assert_eq!(report["order"], "48");
    assert_eq!(report["flags"]["transitive"], true);
    assert_eq!(report["flags"]["primitive"], false);
    assert_eq!(report["flags"]["quasiprimitive"]["value"], false);
    assert_eq!(report["flags"]["semiprimitive"]["value"], true);
    assert_eq!(report["d"]["status"], "exact");
    assert_eq!(report["d"]["value"], 3);
    assert!(report["certificate"].is_array());
    // Key order is part of the documented schema.
    let text = stdout_of(&output);
    let name_pos = text.find("\"name\"").unwrap();
    let degree_pos = text.find("\"degree\"").unwrap();
    let flags_pos = text.find("\"flags\"").unwrap();
    assert!(name_pos < degree_pos && degree_pos < flags_pos);
}

#[test]
fn analyze_sym5_is_primitive_with_d_five() {
    let group = construct::symmetric_group(5);
    let record = format!(
        "degree 5\nname Sym(5)\n{}\n",
        group
            .generators()
            .iter()
            .map(format_cycles)
            .collect::<Vec<_>>()
            .join("\n")
    );
    let file = write_fixture("sym5.grp", &record);
    let output = run(&["analyze", file.to_str().unwrap(), "--json"]);
    assert_eq!(exit_code(&output), 0);
    let report: Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    assert_eq!(report["flags"]["primitive"], true);
    assert_eq!(report["flags"]["quasiprimitive"]["value"], true);
    assert_eq!(report["d"]["value"], 5);
}

#[test]
fn analyze_empty_file_is_input_error() {
    let file = write_fixture("empty.grp", "");
    let output = run(&["analyze", file.to_str().unwrap()]);
    assert_eq!(exit_code(&output), 2);
}

#[test]
fn analyze_respects_flag_implication_chain() {
    for name in ["GL(2,3)", "GL(2,4)", "M11@12", "D10", "SL(2,5)"] {
        let file = bundled_record(name, &format!("chain-{}.grp", name.replace(['(', ')', ','], "_")));
        let output = run(&["analyze", file.to_str().unwrap(), "--json"]);
        let report: Value = serde_json::from_str(&stdout_of(&output)).unwrap();
        let primitive = report["flags"]["primitive"].as_bool().unwrap();
        let quasi = report["flags"]["quasiprimitive"]["value"].as_bool();
        let semi = report["flags"]["semiprimitive"]["value"].as_bool();
        if primitive {
            assert_eq!(quasi, Some(true), "{name}");
        }
        if quasi == Some(true) {
            assert_eq!(semi, Some(true), "{name}");
        }
    }
}

#[test]
fn verify_accepts_certificates_from_other_commands() {
    // Closed loop: every certificate emitted by analyze or distinguish is
    // accepted by verify.
    for name in ["GL(2,3)", "D10", "GL(2,4)", "PSL(3,2)"] {
        let file = bundled_record(name, &format!("loop-{}.grp", name.replace(['(', ')', ','], "_")));
        let output = run(&["analyze", file.to_str().unwrap(), "--json"]);
        let report: Value = serde_json::from_str(&stdout_of(&output)).unwrap();
        let cert: Vec<String> = report["certificate"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.to_string())
            .collect();
        let verify = run(&["verify", file.to_str().unwrap(), &cert.join(",")]);
        assert_eq!(exit_code(&verify), 0, "{name}: certificate rejected");
    }
}

#[test]
fn verify_rejects_with_witness() {
    let file = bundled_record("GL(2,3)", "gl23-reject.grp");
    // Any 2-coloring of GL(2,3) fails; the witness is printed.
    let output = run(&["verify", file.to_str().unwrap(), "0,1,0,1,0,1,0,1"]);
    assert_eq!(exit_code(&output), 1);
    assert!(stdout_of(&output).contains("witness ("));

    // Monochrome fails with a witness for any nontrivial group.
    let output = run(&["verify", file.to_str().unwrap(), "0,0,0,0,0,0,0,0"]);
    assert_eq!(exit_code(&output), 1);
}

#[test]
fn verify_length_mismatch_is_input_error() {
    let file = bundled_record("GL(2,3)", "gl23-len.grp");
    let output = run(&["verify", file.to_str().unwrap(), "0,1,2"]);
    assert_eq!(exit_code(&output), 2);
}

#[test]
fn distinguish_exact_values_match_the_tables() {
    for (name, expected) in [("D10", 3), ("PSL(3,2)", 4)] {
        let file = bundled_record(name, &format!("d-{}.grp", name.replace(['(', ')', ','], "_")));
        let output = run(&["distinguish", file.to_str().unwrap(), "--seed", "1"]);
        assert_eq!(exit_code(&output), 0);
        let report: Value = serde_json::from_str(&stdout_of(&output)).unwrap();
        assert_eq!(report["d"]["value"], expected, "{name}");
    }
}

#[test]
fn distinguish_wreath_on_nine_points() {
    let w = construct::wreath_imprimitive(3, 3).unwrap();
    let record = format!(
        "degree 9\nname Sym(3) wr Sym(3)\n{}\n",
        w.generators()
            .iter()
            .map(format_cycles)
            .collect::<Vec<_>>()
            .join("\n")
    );
    let file = write_fixture("wreath33.grp", &record);
    let output = run(&["distinguish", file.to_str().unwrap(), "--seed", "1"]);
    let report: Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    assert_eq!(report["d"]["value"], 4);
}

#[test]
fn distinguish_single_k_verdicts() {
    let file = bundled_record("GL(2,3)", "gl23-k.grp");
    let output = run(&[
        "distinguish",
        file.to_str().unwrap(),
        "--k",
        "2",
        "--mode",
        "exact",
    ]);
    assert_eq!(exit_code(&output), 0);
    let report: Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    assert_eq!(report["verdict"], "refuted");
    assert_eq!(report["examined"], 256);

    let output = run(&[
        "distinguish",
        file.to_str().unwrap(),
        "--k",
        "3",
        "--mode",
        "random",
        "--seed",
        "5",
    ]);
    let report: Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    assert_eq!(report["verdict"], "found");
}

#[test]
fn distinguish_budget_exhaustion_returns_bounds_and_exit_3() {
    let group = construct::symmetric_group(5);
    let record = format!(
        "degree 5\n{}\n",
        group
            .generators()
            .iter()
            .map(format_cycles)
            .collect::<Vec<_>>()
            .join("\n")
    );
    let file = write_fixture("sym5-budget.grp", &record);
    let output = run(&[
        "distinguish",
        file.to_str().unwrap(),
        "--budget",
        "1",
        "--trials",
        "1",
        "--seed",
        "3",
    ]);
    assert_eq!(exit_code(&output), 3);
    let report: Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    assert_eq!(report["d"]["status"], "bounds");
    assert!(report["d"]["lo"].as_u64().unwrap() <= report["d"]["hi"].as_u64().unwrap());
}

#[test]
fn deterministic_output_for_fixed_seed() {
    let file = bundled_record("GL(2,4)", "gl24-det.grp");
    let args = ["distinguish", file.to_str().unwrap(), "--seed", "42"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout, "identical seeds must give identical bytes");

    // analyze output is byte-identical after dropping the timing field.
    let args = ["analyze", file.to_str().unwrap(), "--json", "--seed", "42"];
    let mut a: Value = serde_json::from_str(&stdout_of(&run(&args))).unwrap();
    let mut b: Value = serde_json::from_str(&stdout_of(&run(&args))).unwrap();
    a.as_object_mut().unwrap().remove("timing_ms");
    b.as_object_mut().unwrap().remove("timing_ms");
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
}

#[test]
fn ci_mode_requires_a_seed() {
    let file = bundled_record("D10", "d10-ci.grp");
    let output = bin()
        .args(["analyze", file.to_str().unwrap()])
        .env("CI_DETERMINISTIC", "1")
        .output()
        .unwrap();
    assert_eq!(exit_code(&output), 2);
    let output = bin()
        .args(["analyze", file.to_str().unwrap(), "--seed", "7"])
        .env("CI_DETERMINISTIC", "1")
        .output()
        .unwrap();
    assert_eq!(exit_code(&output), 0);
}

#[test]
fn reduce_gl23_emits_a_reusable_quotient() {
    let file = bundled_record("GL(2,3)", "gl23-reduce.grp");
    let quotient_path = std::env::temp_dir().join("permdn-cli-tests/gl23-quotient.grp");
    let output = run(&[
        "reduce",
        file.to_str().unwrap(),
        "--quotient-out",
        quotient_path.to_str().unwrap(),
        "--seed",
        "1",
    ]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout_of(&output);
    assert!(text.contains("4 cells of size 2"));
    assert!(text.contains("kernel order:  2"));
    // The emitted record is itself a valid input.
    let check = run(&["analyze", quotient_path.to_str().unwrap(), "--json"]);
    assert_eq!(exit_code(&check), 0);
    let report: Value = serde_json::from_str(&stdout_of(&check)).unwrap();
    assert_eq!(report["degree"], 4);
    assert_eq!(report["order"], "24");
    // The lifted certificate re-verifies through the verify command.
    let cert_line = text
        .lines()
        .find(|l| l.contains("certificate"))
        .expect("a certificate line");
    let colors = cert_line.split(':').next_back().unwrap().trim();
    let verify = run(&["verify", file.to_str().unwrap(), colors]);
    assert_eq!(exit_code(&verify), 0);
}

#[test]
fn reduce_primitive_input_exits_4() {
    let file = bundled_record("D10", "d10-reduce.grp");
    let output = run(&["reduce", file.to_str().unwrap(), "--seed", "1"]);
    assert_eq!(exit_code(&output), 4);
}

#[test]
fn reduce_wreath_rows() {
    let w = construct::wreath_imprimitive(3, 3).unwrap();
    let record = format!(
        "degree 9\n{}\n",
        w.generators()
            .iter()
            .map(format_cycles)
            .collect::<Vec<_>>()
            .join("\n")
    );
    let file = write_fixture("wreath-reduce.grp", &record);
    let output = run(&["reduce", file.to_str().unwrap(), "--seed", "1"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout_of(&output);
    assert!(text.contains("3 cells of size 3"), "{text}");
}

#[test]
fn tables_on_a_small_catalog() {
    let records = ["D10", "PGL(2,5)", "GL(2,4)"]
        .iter()
        .map(|name| builtin_entry(name).unwrap().to_record())
        .collect::<Vec<_>>()
        .join("\n");
    let file = write_fixture("mini-catalog.txt", &records);
    let output = run(&[
        "tables",
        "--catalog",
        file.to_str().unwrap(),
        "--seed",
        "1",
    ]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout_of(&output);
    assert!(text.starts_with("name\tdegree\torder\texpected_D\tcomputed_D\tstatus"));
    for name in ["D10", "PGL(2,5)", "GL(2,4)"] {
        let row = text.lines().find(|l| l.starts_with(name)).unwrap();
        assert!(row.contains("exact"), "{row}");
    }

    // JSON output parses and carries the same verdicts.
    let output = run(&[
        "tables",
        "--catalog",
        file.to_str().unwrap(),
        "--seed",
        "1",
        "--out",
        "json",
    ]);
    let rows: Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 3);
}

#[test]
fn tables_flags_contradictions() {
    let mut entry = builtin_entry("D10").unwrap();
    entry.expected_d = Some(2); // wrong on purpose
    let file = write_fixture("bad-catalog.txt", &entry.to_record());
    let output = run(&[
        "tables",
        "--catalog",
        file.to_str().unwrap(),
        "--seed",
        "1",
    ]);
    assert_eq!(exit_code(&output), 1);
    assert!(stdout_of(&output).contains("MISMATCH"));
}

#[test]
fn tables_empty_catalog_prints_header_only() {
    let file = write_fixture("empty-catalog.txt", "# nothing here\n");
    let output = run(&["tables", "--catalog", file.to_str().unwrap(), "--seed", "1"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout_of(&output);
    assert_eq!(text.lines().count(), 1);
    assert!(text.starts_with("name\t"));
}

#[test]
fn corrupt_record_reports_line_number() {
    let file = write_fixture("corrupt.grp", "degree 5\n(1,2,3,4,5)\nwhat is this\n");
    let output = run(&["analyze", file.to_str().unwrap()]);
    assert_eq!(exit_code(&output), 2);
    let err = String::from_utf8_lossy(&output.stderr).into_owned();
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn partition_rendering() {
    let file = bundled_record("GL(2,3)", "gl23-part.grp");
    let output = run(&[
        "verify",
        file.to_str().unwrap(),
        "0,1,0,1,1,2,2,2",
        "--as-partition",
    ]);
    assert_eq!(exit_code(&output), 0);
    assert!(stdout_of(&output).contains("{1,3}"));
}
