use std::process::Command;

use clap::Parser;
use hbn_cli::args::Cli;
use hbn_cli::{dispatch, CliError, Report, EXIT_EMPTY, EXIT_OK};
use serde_json::{json, Value};

fn report(args: &[&str]) -> Result<Report, CliError> {
    let cli = Cli::try_parse_from(std::iter::once("hbn").chain(args.iter().copied())).expect("arguments parse");
    dispatch(&cli)
}

fn ok(args: &[&str]) -> Report {
    report(args).unwrap_or_else(|e| panic!("{args:?}: {e}"))
}

fn hbn(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_hbn")).args(args).env_remove("HBN_SEED").output().expect("binary runs")
}

fn dims(r: &Report) -> Vec<(Value, Value)> {
    r.json["strata"].as_array().unwrap().iter().map(|row| (row["f"].clone(), row["dim"].clone())).collect()
}

const TRIGONAL: [&str; 10] = ["--m", "3", "--k", "3", "--delta", "2", "--e", "-8,-4,-1", "--f", "-7,-4,0"];

#[test]
fn enumerate_trigonal_fibre() {
    let r = ok(&["enumerate", "--m", "3", "--k", "3", "--delta", "2", "--e", "-8,-4,-1"]);
    assert_eq!(r.exit, EXIT_OK);
    assert_eq!(
        dims(&r),
        vec![(json!([-7, -4, 0]), json!(0)), (json!([-7, -3, -1]), json!(1)), (json!([-6, -4, -1]), json!(1))]
    );
    for row in r.json["strata"].as_array().unwrap() {
        assert_eq!(row["dim_source"], "g - u(e) - u(f) + nu(e,f,m)");
    }
}

#[test]
fn enumerate_plane_septics() {
    let r = ok(&["enumerate", "--m", "1", "--k", "7", "--delta", "0", "--degree", "14", "--sections", "3"]);
    let mut got: Vec<(Value, Value)> =
        r.json["strata"].as_array().unwrap().iter().map(|row| (row["e"].clone(), row["plane_dim"].clone())).collect();
    got.sort_by_key(|(e, _)| e.to_string());
    let mut want = vec![
        (json!([-2, -2, -2, -1, 0, 0, 0]), json!(6)),
        (json!([-3, -2, -1, -1, 0, 0, 0]), json!(7)),
        (json!([-2, -2, -2, -1, -1, 0, 1]), json!(7)),
        (json!([-3, -2, -1, -1, -1, 0, 1]), json!(5)),
    ];
    want.sort_by_key(|(e, _)| e.to_string());
    assert_eq!(got, want);
    for row in r.json["strata"].as_array().unwrap() {
        assert_eq!(row["plane_dim"], row["dim"]);
    }
}

#[test]
fn empty_window_is_an_empty_table() {
    let r = ok(&["enumerate", "--m", "2", "--k", "2", "--delta", "0", "--window", "5,4"]);
    assert_eq!(r.exit, EXIT_OK);
    assert_eq!(r.json["count"], 0);
    let out = hbn(&["enumerate", "--m", "2", "--k", "2", "--delta", "0", "--window", "5,4", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "e,f,cond,u_e,u_f,nu,dim,dim_source\n");
}

#[test]
fn sample_trigonal_certifies() {
    let mut args = vec!["sample"];
    args.extend(TRIGONAL);
    let r = ok(&args);
    assert_eq!(r.exit, EXIT_OK);
    let cert = &r.json["certification"];
    assert_eq!(cert["smoothness"]["verdict"], "SMOOTH");
    assert_eq!(cert["h0_structure_sheaf"], 1);
    assert_eq!(cert["discriminant"]["deg_disc"], 26);
    assert_eq!(cert["cokernel"]["rank_k_minus_1"], true);
}

#[test]
fn sample_refuses_condition_two_violation() {
    let r = ok(&["sample", "--m", "1", "--k", "3", "--delta", "1", "--e", "-3,-1,0", "--f", "-3,-1,1"]);
    assert_eq!(r.exit, EXIT_EMPTY);
    assert_eq!(r.json["cond"], json!([true, false, true]));
    assert_eq!(r.json["forced_reducibility"], "BLOCK_FACTOR");
    let out = hbn(&["sample", "--m", "1", "--k", "3", "--delta", "1", "--e", "-3,-1,0", "--f", "-3,-1,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sut_sample_has_no_pure_y_term() {
    let mut args = vec!["sample", "--pattern", "SUT"];
    args.extend(TRIGONAL);
    let r = ok(&args);
    assert_eq!(r.json["curve"]["P"][0], json!([]));
    assert_eq!(r.json["pattern"], "SUT");
}

#[test]
fn dominance_trigonal() {
    let mut args = vec!["dominance"];
    args.extend(TRIGONAL);
    let r = ok(&args);
    assert_eq!(r.exit, EXIT_OK);
    let d = &r.json["differential"];
    assert_eq!(
        (d["verdict"].as_str(), d["target_dim"].as_u64(), d["source_dim"].as_u64()),
        (Some("DOMINANT"), Some(30), Some(68))
    );
    assert!(d["provenance"].as_str().unwrap().contains("sampled"));
}

#[test]
fn dominance_forced_reducible() {
    let r = ok(&["dominance", "--m", "1", "--k", "2", "--delta", "2", "--e", "-1,0", "--f", "-2,3"]);
    assert_eq!(r.exit, EXIT_EMPTY);
    let d = &r.json["differential"];
    assert_eq!(d["verdict"], "NOT_ACHIEVED");
    assert!(d["max_rank"].as_u64().unwrap() < d["target_dim"].as_u64().unwrap());
}

#[test]
fn lemma_selector_combinations() {
    let mut args = vec!["dominance", "--selector", "T_CORNER", "--lemma", "is"];
    args.extend(TRIGONAL);
    let r = ok(&args);
    assert_eq!(r.json["holds"], true);
    args[2] = "T_PRIME";
    assert!(matches!(report(&args), Err(CliError::Usage(_))));
    let r = ok(&["dominance", "--lemma", "product", "--degrees", "3,4"]);
    assert_eq!(r.json["result"]["witness_rank"], r.json["result"]["target_dim"]);
}

#[test]
fn section5_examples() {
    let r = ok(&["section5", "--abundance", "--m", "1", "--delta", "1", "--k", "4"]);
    assert_eq!(r.json["result"]["verdict"], "NOT_ABUNDANT");
    assert_eq!(r.json["result"]["witness"], json!([0, 2, 2, 4]));
    assert!(r.json["diff"].as_array().unwrap().iter().any(|row| row["e"] == json!([0, 2, 2, 4])));

    let r = ok(&["section5", "--oo", "--k", "3", "--bound", "4"]);
    let tuples = r.json["tuples"].as_array().unwrap();
    assert_eq!(tuples.len(), scrollar_bounds::oo_polytope(3, 4).len());
    for t in tuples {
        let a = t["a"].as_array().unwrap();
        assert!(a[1].as_i64() <= a[0].as_i64().map(|x| 2 * x));
    }

    let r = ok(&["section5", "--general-cover", "--k", "4", "--g", "9"]);
    assert_eq!(r.json["result"]["witness"], json!([0, 0, 4, 4]));

    assert!(matches!(report(&["section5", "--oo", "--abundance", "--k", "3"]), Err(CliError::Usage(_))));
}

#[test]
fn same_seed_same_bytes() {
    let mut args = vec!["sample", "--seed", "41"];
    args.extend(TRIGONAL);
    let a = hbn(&args);
    let b = hbn(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    args[2] = "42";
    assert_ne!(hbn(&args).stdout, a.stdout);

    let mut env_args = vec!["sample"];
    env_args.extend(TRIGONAL);
    let env = Command::new(env!("CARGO_BIN_EXE_hbn")).args(&env_args).env("HBN_SEED", "41").output().unwrap();
    assert_eq!(env.stdout, a.stdout);
}

#[test]
fn pair_file_round_trip() {
    let dir = std::env::temp_dir().join(format!("hbn-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let pair = dir.join("pair.json");
    let curve = dir.join("curve.json");
    let out = dir.join("report.json");
    let mut args = vec!["sample", "--pair-out", pair.to_str().unwrap(), "--curve-out", curve.to_str().unwrap()];
    args.extend(["--out", out.to_str().unwrap()]);
    args.extend(TRIGONAL);
    assert!(hbn(&args).status.success());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let saved: Value = serde_json::from_str(&std::fs::read_to_string(&curve).unwrap()).unwrap();
    assert_eq!(doc["curve"], saved);

    let r = ok(&["dominance", "--pair", pair.to_str().unwrap()]);
    assert_eq!(r.json["differential"]["rank"], 30);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes_for_bad_input() {
    assert_eq!(hbn(&["enumerate", "--m", "1"]).status.code(), Some(1));
    assert_eq!(hbn(&["enumerate", "--bogus"]).status.code(), Some(1));
    assert_eq!(hbn(&["--p", "10", "enumerate", "--m", "1", "--k", "2", "--delta", "0"]).status.code(), Some(1));
    assert_eq!(hbn(&["--help"]).status.code(), Some(0));
    let mismatch = ["sample", "--m", "1", "--k", "2", "--delta", "0", "--e", "-1,0", "--f", "-1,1"];
    assert!(matches!(report(&mismatch), Err(CliError::Usage(_))));
}

#[test]
fn pretty_output_is_aligned() {
    let out = hbn(&["enumerate", "--m", "3", "--k", "3", "--delta", "2", "--e", "-8,-4,-1", "--format", "pretty"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let header = text.lines().find(|l| l.starts_with("e ")).unwrap();
    assert!(header.contains("dim_source"));
    assert!(text.contains("(-7,-4,0)"));
}

#[test]
fn extreme_entries_are_usage_errors() {
    let huge = [
        "sample",
        "--m",
        "1",
        "--k",
        "2",
        "--delta",
        "0",
        "--e",
        "-9223372036854775808,0",
        "--f",
        "0,9223372036854775807",
    ];
    assert!(matches!(report(&huge), Err(CliError::Usage(_))));
    let bound = ["section5", "--general-bound", "--d", "9223372036854775807", "--e", "1", "--f", "1", "--g", "0"];
    assert!(matches!(report(&bound), Err(CliError::Usage(_))));
}
