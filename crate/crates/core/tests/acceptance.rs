//! Acceptance gate: one PASS/FAIL line per criterion, details below each line.
//! Runs without the libtest harness so the lines are always printed.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cubic_zeta::analytic::{verify_density, verify_residue_ratios};
use cubic_zeta::enumerate::EnumerationParams;
use cubic_zeta::forms::verify_discriminant_congruences;
use cubic_zeta::lattice_class::{verify_classification, verify_indices_and_duality};
use cubic_zeta::oracle::{default_oracle_box, verify_oracle};
use cubic_zeta::report::Report;
use cubic_zeta::series::{
    euler_product_check, lambda_coefficient_identity, span_rank, verify_decompositions, verify_non_relation,
    verify_relations, verify_tables, SeriesBundle,
};

const RELATIONS_MAX_N: u64 = 5000;
const RANK_MAX_N: u64 = 200;
const EXPECTED_RANK: usize = 14;
const DECOMPOSITION_BOX: i64 = 20;
const ORACLE_MAX_INDEX: u64 = 300;
const DENSITY_MAX_X: u64 = 1_000_000;
const DENSITY_WORKERS: usize = 4;

const TABLES_BUDGET: Duration = Duration::from_secs(60);
const RELATIONS_BUDGET: Duration = Duration::from_secs(600);
const ORACLE_BUDGET: Duration = Duration::from_secs(900);
const DENSITY_BUDGET: Duration = Duration::from_secs(600);

struct Gate {
    failed: usize,
}

impl Gate {
    fn record(&mut self, id: u8, title: &str, started: Instant, budget: Option<Duration>, report: Report) {
        let elapsed = started.elapsed();
        let in_time = budget.is_none_or(|b| elapsed <= b);
        let ok = report.passed() && in_time && !report.checks.is_empty();
        if !ok {
            self.failed += 1;
        }
        let limit = budget.map_or(String::new(), |b| format!(", budget {}s", b.as_secs()));
        println!(
            "{} {id:>2} {title} ({} checks, {:.1}s{limit})",
            if ok { "PASS" } else { "FAIL" },
            report.checks.len(),
            elapsed.as_secs_f64()
        );
        for line in report.to_string().lines() {
            println!("     {line}");
        }
    }

    fn record_result(&mut self, id: u8, title: &str, started: Instant, budget: Option<Duration>, r: cubic_zeta::Result<Report>) {
        match r {
            Ok(rep) => self.record(id, title, started, budget, rep),
            Err(e) => {
                let mut rep = Report::new(title);
                rep.push("error", false, e.to_string());
                self.record(id, title, started, budget, rep);
            }
        }
    }
}

fn main() -> ExitCode {
    let mut gate = Gate { failed: 0 };

    let t = Instant::now();
    let small = SeriesBundle::build(RANK_MAX_N).expect("series up to 200");
    gate.record(1, "golden tables", t, Some(TABLES_BUDGET), verify_tables(&small));

    let t = Instant::now();
    let big = SeriesBundle::build(RELATIONS_MAX_N).expect("series up to 5000");
    gate.record(2, "relations", t, Some(RELATIONS_BUDGET), verify_relations(&big, RELATIONS_MAX_N));

    let t = Instant::now();
    gate.record(3, "non-relation witness", t, None, verify_non_relation(&small));

    let t = Instant::now();
    gate.record_result(4, "decompositions", t, None, verify_decompositions(DECOMPOSITION_BOX));

    let t = Instant::now();
    gate.record_result(5, "discriminant congruences", t, None, verify_discriminant_congruences());

    let t = Instant::now();
    let mut rank = Report::new("rank");
    match span_rank(&small, RANK_MAX_N) {
        Ok(r) => rank.push("rank", r == EXPECTED_RANK, format!("{r} (expected {EXPECTED_RANK}) on n <= {RANK_MAX_N}")),
        Err(e) => rank.push("rank", false, e.to_string()),
    }
    gate.record(6, "rank", t, None, rank);

    let t = Instant::now();
    gate.record(7, "Euler products", t, None, euler_product_check(&small));

    let t = Instant::now();
    let mut lambda = Report::new("lambda");
    for i in [1u8, 7, 9] {
        lambda.extend(lambda_coefficient_identity(&big, i, RELATIONS_MAX_N));
    }
    gate.record(8, "Lambda identity", t, None, lambda);
    drop(big);

    let t = Instant::now();
    let params = EnumerationParams {
        max_index: ORACLE_MAX_INDEX,
        oracle_box: default_oracle_box(ORACLE_MAX_INDEX),
        stab_search_bound: None,
    };
    gate.record_result(9, "oracle equivalence", t, Some(ORACLE_BUDGET), verify_oracle(&params));

    let t = Instant::now();
    let classification = verify_classification().and_then(|mut r| {
        r.extend(verify_indices_and_duality()?);
        Ok(r)
    });
    gate.record_result(10, "classification", t, None, classification);

    let t = Instant::now();
    gate.record_result(11, "local densities", t, None, verify_residue_ratios());

    let t = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(DENSITY_WORKERS).build().expect("thread pool");
    let density = pool.install(|| verify_density(DENSITY_MAX_X));
    gate.record_result(12, "density", t, Some(DENSITY_BUDGET), density);

    println!("{} of 12 criteria failed", gate.failed);
    if gate.failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
