use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bga(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bga"))
        .args(args)
        .output()
        .expect("spawn bga")
}

fn configs() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../configs")
}

fn config(name: &str) -> String {
    configs().join(name).to_string_lossy().into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write_config(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

const ONEMAX: &str = "seed = 5

[ga]
population_size = 20
generations = 12
survivor_fraction = 0.2

[operators]
p_m = 0.01

[landscape]
kind = \"onemax\"
length = 32
";

#[test]
fn run_writes_header_plus_one_row_per_generation() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "a.toml", ONEMAX);
    let out = dir.path().to_str().unwrap();
    let o = bga(&["run", "--config", &cfg, "--out", out]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("final best: "));
    let csv = fs::read_to_string(dir.path().join("trace.csv")).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(
        lines[0],
        "generation,best,mean,min,fixed_zero_count,diversity,evaluations"
    );
    assert_eq!(lines.len(), 1 + 12);
    assert!(lines[12].starts_with("11,") && lines[12].ends_with(",240"));
}

#[test]
fn run_is_byte_identical_across_invocations() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    for d in [&a, &b] {
        let o = bga(&[
            "run",
            "--config",
            &config("run_segmented.toml"),
            "--out",
            d.to_str().unwrap(),
        ]);
        assert!(o.status.success(), "{}", stderr(&o));
    }
    let read = |d: &Path| fs::read(d.join("run_segmented.csv")).unwrap();
    assert_eq!(read(&a), read(&b));
}

#[test]
fn seed_flag_overrides_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "a.toml", ONEMAX);
    let run = |seed: &str, sub: &str| {
        let d = dir.path().join(sub);
        let o = bga(&[
            "run",
            "--config",
            &cfg,
            "--seed",
            seed,
            "--out",
            d.to_str().unwrap(),
        ]);
        assert!(o.status.success());
        fs::read_to_string(d.join("trace.csv")).unwrap()
    };
    assert_eq!(run("5", "x"), run("5", "y"));
    assert_ne!(run("5", "x"), run("6", "z"));
}

#[test]
fn zero_survivor_fraction_is_a_validation_error() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        "bad.toml",
        &ONEMAX.replace("survivor_fraction = 0.2", "survivor_fraction = 0"),
    );
    let o = bga(&[
        "run",
        "--config",
        &cfg,
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(
        err.contains("bad.toml:6:") && err.contains("survivor_fraction"),
        "{err}"
    );
    assert!(!dir.path().join("trace.csv").exists());
}

#[test]
fn missing_landscape_key_is_named() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        "c.toml",
        &fs::read_to_string(config("compare_onemax.toml"))
            .unwrap()
            .replace("length = 100\n", ""),
    );
    let o = bga(&[
        "compare",
        "--config",
        &cfg,
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("length"), "{}", stderr(&o));
}

#[test]
fn budget_must_divide_population() {
    let dir = tempfile::tempdir().unwrap();
    let body = fs::read_to_string(config("compare_onemax.toml"))
        .unwrap()
        .replace("budget = 5000", "budget = 5050");
    let cfg = write_config(dir.path(), "c.toml", &body);
    let o = bga(&["compare", "--config", &cfg]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("c.toml:2:"), "{}", stderr(&o));
}

#[test]
fn io_failures_exit_with_two() {
    let o = bga(&["run", "--config", "/nonexistent/run.toml"]);
    assert_eq!(o.status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    fs::write(&blocker, "x").unwrap();
    let cfg = write_config(dir.path(), "a.toml", ONEMAX);
    let o = bga(&[
        "run",
        "--config",
        &cfg,
        "--out",
        blocker.join("sub").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2), "{}", stderr(&o));
}

#[test]
fn flag_errors_exit_with_one_and_help_with_zero() {
    assert_eq!(bga(&["--help"]).status.code(), Some(0));
    assert_eq!(bga(&["--version"]).status.code(), Some(0));
    assert_eq!(bga(&["nonsense"]).status.code(), Some(1));
    assert_eq!(bga(&["fig1", "--seeds", "x"]).status.code(), Some(1));
    assert_eq!(bga(&["autocorr", "--T", "10"]).status.code(), Some(1));
}

#[test]
fn fig1_with_three_seeds_writes_three_pairs() {
    let dir = tempfile::tempdir().unwrap();
    let o = bga(&[
        "fig1",
        "--seeds",
        "1,2,3",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let mut names: Vec<String> = fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    names.sort();
    assert_eq!(
        names,
        [
            "fig1_ga_seed1.csv",
            "fig1_ga_seed2.csv",
            "fig1_ga_seed3.csv",
            "fig1_random_seed1.csv",
            "fig1_random_seed2.csv",
            "fig1_random_seed3.csv"
        ]
    );
    let random = fs::read_to_string(dir.path().join("fig1_random_seed1.csv")).unwrap();
    assert_eq!(random.lines().next(), Some("bin_lower,count"));
    let total: usize = random
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().parse::<usize>().unwrap())
        .sum();
    assert_eq!(total, 5000);
}

#[test]
fn fig1_plot_flag_adds_svg() {
    let dir = tempfile::tempdir().unwrap();
    let o = bga(&[
        "fig1",
        "--seed",
        "2",
        "--plot",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let svg = fs::read_to_string(dir.path().join("fig1_seed2.svg")).unwrap();
    assert!(svg.starts_with("<svg"));
}

#[test]
fn fig2_sidecar_holds_closed_forms() {
    let dir = tempfile::tempdir().unwrap();
    let o = bga(&["fig2", "--seed", "1", "--out", dir.path().to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let side = fs::read_to_string(dir.path().join("fig2_predictions_seed1.csv")).unwrap();
    assert!(side.starts_with("quantity,n,loci,k,p_m,value\n"));
    assert!(side.contains("allele_loss_probability,100,100,,,7.88860905221"));
    assert!(side.contains("generations_to_fix_estimate,,,,0.001,100\n"));
    let traj = fs::read_to_string(dir.path().join("fig2_trajectory_seed1.csv")).unwrap();
    let lines: Vec<&str> = traj.lines().collect();
    assert_eq!(lines[0], "generation,p_m,best,mean,fixed_zero_count");
    assert_eq!(lines.len(), 1 + 50 + 500);
    let zeros_at_end: usize = lines[50].rsplit(',').next().unwrap().parse().unwrap();
    assert!(zeros_at_end <= 12, "{}", lines[50]);
    assert!(lines[51].starts_with("50,0.001,"));
}

#[test]
fn autocorr_reports_rho_and_writes_walk() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = bga(&[
        "autocorr",
        "--landscape",
        "onemax",
        "--L",
        "100",
        "--out",
        out,
    ]);
    assert!(o.status.success());
    let rho: f64 = stdout(&o)
        .trim()
        .strip_prefix("rho(1) = ")
        .unwrap()
        .parse()
        .unwrap();
    assert!((rho - 0.98).abs() <= 0.01, "{rho}");
    let walk = fs::read_to_string(dir.path().join("autocorr_walk.csv")).unwrap();
    assert_eq!(walk.lines().count(), 1 + 100_001);

    let o = bga(&[
        "autocorr",
        "--landscape",
        "random_table",
        "--L",
        "64",
        "--out",
        out,
    ]);
    let rho: f64 = stdout(&o)
        .trim()
        .strip_prefix("rho(1) = ")
        .unwrap()
        .parse()
        .unwrap();
    assert!(rho.abs() <= 0.05, "{rho}");
}

#[test]
fn compare_writes_report_and_replicates() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = bga(&[
        "compare",
        "--config",
        &config("compare_onemax.toml"),
        "--seeds",
        "1..4",
        "--out",
        out,
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("observed ordering by mean_best:"));
    let report = fs::read_to_string(dir.path().join("compare.csv")).unwrap();
    let lines: Vec<&str> = report.lines().collect();
    assert_eq!(lines[0], "method,budget,best,mean_best,replicates,seeds");
    assert_eq!(lines.len(), 4);
    assert!(lines
        .iter()
        .skip(1)
        .all(|l| l.contains(",5000,") && l.ends_with(",4,1;2;3;4")));
    let reps = fs::read_to_string(dir.path().join("compare_replicates.csv")).unwrap();
    assert_eq!(
        reps.lines().next(),
        Some("method,seed,best,initial_best,evaluations")
    );
    assert_eq!(reps.lines().count(), 1 + 3 * 4);
    assert!(reps.lines().skip(1).all(|l| l.ends_with(",5000")));
}

#[test]
fn shipped_configs_all_load() {
    for name in ["run_onemax.toml", "run_segmented.toml"] {
        let dir = tempfile::tempdir().unwrap();
        let o = bga(&[
            "run",
            "--config",
            &config(name),
            "--out",
            dir.path().to_str().unwrap(),
        ]);
        assert!(o.status.success(), "{name}: {}", stderr(&o));
    }
}
