use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/fixtures");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_poset-trace"))
        .args(args)
        .env_remove("POSET_GORENSTEIN_SEED")
        .output()
        .expect("binary runs")
}

fn ok(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json report")
}

fn fails(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    let code = out.status.code().expect("exit code");
    assert_ne!(code, 0);
    (code, serde_json::from_slice(&out.stderr).expect("json error"))
}

#[test]
fn classify_bowtie_is_nothing() {
    let r = ok(&["classify", &fixture("p_bowtie.json")]);
    assert_eq!(r["schema_version"], 1);
    let c = &r["result"];
    assert_eq!(c["gorenstein"], false);
    assert_eq!(c["punctured_gorenstein"], false);
    assert_eq!(c["nearly_gorenstein"], false);
}

#[test]
fn classify_chain_is_everything() {
    let c = ok(&["classify", &fixture("chain3.json")])["result"].clone();
    assert_eq!(c["gorenstein"], true);
    assert_eq!(c["nearly_gorenstein"], true);
    assert_eq!(c["punctured_gorenstein"], true);
}

#[test]
fn classify_components_one_rank_apart() {
    let c = ok(&["classify", &fixture("two_components.json")])["result"].clone();
    assert_eq!(c["gorenstein"], false);
    assert_eq!(c["nearly_gorenstein"], true);
    assert_eq!(c["component_ranks"], serde_json::json!([1, 2]));
}

#[test]
fn member_with_certificate() {
    let r = ok(&["member", &fixture("p_nx.json"), &fixture("xi_nx.json"), "--ring", "chain", "--certificate"]);
    let res = &r["result"];
    assert_eq!(res["member"], true);
    let cert = &res["certificate"];
    assert_eq!(cert["N"], cert["exponent"]);
    // eta + zeta = N * xi, checked by name
    let n = cert["N"].as_i64().unwrap();
    let point = &res["point"];
    for (k, v) in point["values"].as_object().unwrap() {
        let sum = cert["eta"]["values"][k].as_i64().unwrap() + cert["zeta"]["values"][k].as_i64().unwrap();
        assert_eq!(sum, n * v.as_i64().unwrap(), "{k}");
    }
}

#[test]
fn claw_indicator_has_star_witness() {
    let r = ok(&["member", &fixture("p_claw.json"), &fixture("chi_a.json"), "--ring", "chain"]);
    assert_eq!(r["result"]["member"], false);
    assert_eq!(r["result"]["witness"]["kind"], "non_pure_star");
}

#[test]
fn bowtie_constant_point_has_cycle_witness() {
    let r = ok(&["member", &fixture("p_bowtie.json"), &fixture("nu_ones.json"), "--ring", "order"]);
    assert_eq!(r["result"]["member"], false);
    assert_eq!(r["result"]["witness"]["kind"], "order_cycle");
}

#[test]
fn point_outside_cone_exits_3() {
    let (code, e) = fails(&["member", &fixture("p_bowtie.json"), &fixture("outside_cone.json"), "--ring", "chain"]);
    assert_eq!(code, 3);
    assert_eq!(e["error"], "not_in_cone");
}

#[test]
fn parse_errors_exit_2() {
    assert_eq!(fails(&["classify", &fixture("bad_cycle.json")]).0, 2);
    assert_eq!(fails(&["classify", &fixture("missing.json")]).0, 2);
    let (code, _) = fails(&["member", &fixture("p_nx.json"), &fixture("value_at_top.json"), "--ring", "order"]);
    assert_eq!(code, 2);
}

#[test]
fn redundant_cover_is_reported() {
    let r = ok(&["classify", &fixture("redundant_cover.json")]);
    assert_eq!(r["warnings"].as_array().unwrap().len(), 1);
    assert_eq!(r["result"]["gorenstein"], true);
}

#[test]
fn locus_dimensions_of_examples() {
    for (f, d) in [("p_bowtie.json", 2), ("p_claw.json", 3), ("p_ladder.json", 6)] {
        let r = ok(&["locus", &fixture(f)]);
        assert_eq!(r["result"]["order"]["dimension"], d, "{f}");
        assert_eq!(r["result"]["chain"]["dimension"], d, "{f}");
    }
}

#[test]
fn claw_order_locus_is_one_prime() {
    let r = ok(&["locus", &fixture("p_claw.json"), "--ring", "order", "--decompose"]);
    let primes = r["result"]["order"]["primes"].as_array().unwrap();
    assert_eq!(primes.iter().filter(|p| p["minimal"] == true).count(), 1);
    assert!(r["result"].get("chain").is_none());
}

#[test]
fn generate_writes_checked_poset() {
    let dir = std::env::temp_dir().join(format!("poset-trace-gen-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("g.json");
    let r = ok(&["generate", "--ring-dim", "6", "--locus-dim", "2", "-o", out.to_str().unwrap()]);
    assert_eq!(r["result"]["elements"], 5);
    assert_eq!(r["result"]["verified_locus_dimension"], 2);
    let back = ok(&["locus", out.to_str().unwrap()]);
    assert_eq!(back["result"]["order"]["dimension"], 2);
    let zero = ok(&["generate", "--ring-dim", "4", "--locus-dim", "0"]);
    assert_eq!(zero["result"]["verified_locus_dimension"], 0);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn generate_out_of_range_exits_4() {
    let (code, e) = fails(&["generate", "--ring-dim", "5", "--locus-dim", "2"]);
    assert_eq!(code, 4);
    assert_eq!(e["error"], "out_of_range");
}

#[test]
fn oracle_hilbert_equal() {
    let r = ok(&["oracle", "hilbert", &fixture("p_nx.json"), "--dmax", "3"]);
    assert_eq!(r["result"]["equal"], true);
    assert_eq!(r["result"]["order"], r["result"]["chain"]);
}

#[test]
fn oracle_lp_member_mirrors_examples() {
    let yes = ok(&["oracle", "lp-member", &fixture("p_nx.json"), &fixture("xi_nx.json"), "--ring", "chain"]);
    assert_eq!(yes["result"]["member"], true);
    let no = ok(&["oracle", "lp-member", &fixture("p_claw.json"), &fixture("chi_a.json"), "--ring", "chain"]);
    assert_eq!(no["result"]["member"], false);
    let cyc = ok(&["oracle", "lp-member", &fixture("p_bowtie.json"), &fixture("nu_ones.json"), "--ring", "order"]);
    assert_eq!(cyc["result"]["member"], false);
}

#[test]
fn oracle_search_boxes() {
    let args = |n: &'static str, w: &'static str| {
        ok(&[
            "oracle",
            "search",
            &fixture("p_nx.json"),
            &fixture("xi_nx.json"),
            "--ring",
            "chain",
            "--n-max",
            n,
            "--half-width",
            w,
        ])
    };
    assert_eq!(args("1", "0")["result"]["outcome"], "exhausted");
    let found = args("2", "2");
    assert_eq!(found["result"]["outcome"], "found");
    assert_eq!(found["result"]["certificate"]["N"], 2);
}

#[test]
fn oracle_check_is_seeded() {
    let a = run(&["oracle", "check", "--trials", "40", "--seed", "5"]);
    let b = run(&["--jobs", "1", "oracle", "check", "--trials", "40", "--seed", "5"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["oracle", "check", "--trials", "40", "--seed", "6"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn reports_are_byte_identical() {
    let args = ["locus", &fixture("p_ladder.json"), "--decompose"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn pretty_renders_a_table() {
    let out = run(&["--pretty", "classify", &fixture("p_bowtie.json")]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("result.gorenstein") && l.trim_end().ends_with("false")));
}
