use clap::ValueEnum;
use cubic_zeta::analytic::{verify_density, verify_residue_ratios};
use cubic_zeta::enumerate::EnumerationParams;
use cubic_zeta::forms::verify_discriminant_congruences;
use cubic_zeta::lattice_class::{verify_classification, verify_indices_and_duality};
use cubic_zeta::oracle::{default_oracle_box, verify_oracle};
use cubic_zeta::qrt3::Q;
use cubic_zeta::report::Report;
use cubic_zeta::series::{
    euler_product_check, lambda_coefficient_identity, span_rank, verify_decompositions, verify_non_relation,
    verify_relations, verify_series_integrity, verify_tables, SeriesBundle,
};
use cubic_zeta::{LatticeId, Result, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Tables,
    Relations,
    NonRelation,
    Decomps,
    Congruence,
    Rank,
    Euler,
    Lambda,
    Dual,
    Indices,
    Classification,
    LocalDensities,
    Oracle,
    Density,
}

const TABLE_MAX_N: u64 = 200;
const RELATIONS_MAX_N: u64 = 5000;
const ORACLE_MAX_INDEX: u64 = 300;
const DENSITY_MAX_X: u64 = 1_000_000;
const DECOMPOSITION_BOX: i64 = 20;
const EXPECTED_RANK: usize = 14;

/// One coefficient raised by 1, for checking that the suites notice.
#[derive(Clone, Copy, Debug)]
pub struct Perturbation {
    pub lattice: LatticeId,
    pub sign: Sign,
    pub n: u64,
}

pub struct SuiteOptions {
    pub max: Option<u64>,
    pub oracle_box: Option<i64>,
    pub stab_bound: Option<i64>,
    pub perturb: Option<Perturbation>,
}

fn bundle(max_n: u64, perturb: Option<Perturbation>) -> Result<SeriesBundle> {
    let mut b = SeriesBundle::build(max_n)?;
    if let Some(p) = perturb {
        if p.n <= max_n {
            *b.get_mut(p.lattice, p.sign).coeffs.entry(p.n).or_insert_with(|| Q::from_integer(0)) += Q::from_integer(1);
        }
    }
    Ok(b)
}

fn keep(report: Report, pred: impl Fn(&str) -> bool) -> Report {
    let mut out = Report::new(report.title.clone());
    out.checks = report.checks.into_iter().filter(|c| pred(&c.name)).collect();
    out
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<Report> {
    use Suite::*;
    let all = suite == All;
    let wants = |s: Suite| all || suite == s;
    let mut rep = Report::new("");

    if wants(Tables) || wants(NonRelation) || wants(Rank) || wants(Euler) {
        let small = bundle(TABLE_MAX_N, opts.perturb)?;
        rep.extend(verify_series_integrity(&small));
        if wants(Tables) {
            rep.extend(verify_tables(&small));
        }
        if wants(NonRelation) {
            rep.extend(verify_non_relation(&small));
        }
        if wants(Rank) {
            let mut r = Report::new("rank");
            let rank = span_rank(&small, TABLE_MAX_N)?;
            r.push("rank", rank == EXPECTED_RANK, format!("rank={rank} on n <= {TABLE_MAX_N}"));
            rep.extend(r);
        }
        if wants(Euler) {
            rep.extend(euler_product_check(&small));
        }
    }
    if wants(Relations) || wants(Lambda) {
        let max_n = if all { RELATIONS_MAX_N } else { opts.max.unwrap_or(RELATIONS_MAX_N) };
        let big = bundle(max_n, opts.perturb)?;
        rep.extend(verify_series_integrity(&big));
        if wants(Relations) {
            rep.extend(verify_relations(&big, max_n));
        }
        if wants(Lambda) {
            for i in [1u8, 7, 9] {
                rep.extend(lambda_coefficient_identity(&big, i, max_n));
            }
        }
    }
    if wants(Decomps) {
        rep.extend(verify_decompositions(DECOMPOSITION_BOX)?);
    }
    if wants(Congruence) {
        rep.extend(verify_discriminant_congruences()?);
    }
    if wants(Classification) {
        rep.extend(verify_classification()?);
    }
    if wants(Indices) || wants(Dual) {
        let r = verify_indices_and_duality()?;
        let is_dual = |name: &str| name.starts_with("dual") || name.starts_with('<');
        if all {
            rep.extend(r);
        } else if suite == Dual {
            rep.extend(keep(r, is_dual));
        } else {
            rep.extend(keep(r, |n| !is_dual(n)));
        }
    }
    if wants(LocalDensities) {
        rep.extend(verify_residue_ratios()?);
    }
    if wants(Oracle) {
        let x = if all { ORACLE_MAX_INDEX } else { opts.max.unwrap_or(ORACLE_MAX_INDEX) };
        let params = EnumerationParams {
            max_index: x,
            oracle_box: opts.oracle_box.unwrap_or_else(|| default_oracle_box(x)),
            stab_search_bound: opts.stab_bound,
        };
        rep.extend(verify_oracle(&params)?);
    }
    if wants(Density) {
        let x = if all { DENSITY_MAX_X } else { opts.max.unwrap_or(DENSITY_MAX_X) };
        rep.extend(verify_density(x)?);
    }
    Ok(rep)
}
