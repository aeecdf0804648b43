//! The verification sweep: plays the closed forms, the dynamics table, and
//! brute-force enumeration against each other and reports per-check counts.
//! Output is fully deterministic so repeated runs are byte-identical.

use std::io::Write;

use num_bigint::BigUint;

use crate::catalan::{self, catalan_from_binomial_difference, catalan_from_factorials};
use crate::oracle;
use crate::triangle::{NodeCoord, TriangleTable};
use crate::Error;

pub(crate) struct Options {
    pub max_n: usize,
    pub oracle_max_n: usize,
    pub oracle_cap: usize,
    /// Perturb one term so the sweep reports a mismatch (self-test hook).
    pub inject_fault: bool,
}

struct Mismatch {
    check: &'static str,
    n: usize,
    k: usize,
    expected: BigUint,
    got: BigUint,
}

struct Report {
    name: String,
    passed: u64,
    failed: u64,
}

struct Sweep {
    reports: Vec<Report>,
    first_mismatch: Option<Mismatch>,
}

impl Sweep {
    fn new() -> Self {
        Sweep {
            reports: Vec::new(),
            first_mismatch: None,
        }
    }

    fn record(
        &mut self,
        report: &mut Report,
        check: &'static str,
        n: usize,
        k: usize,
        expected: &BigUint,
        got: &BigUint,
    ) {
        if expected == got {
            report.passed += 1;
        } else {
            report.failed += 1;
            if self.first_mismatch.is_none() {
                self.first_mismatch = Some(Mismatch {
                    check,
                    n,
                    k,
                    expected: expected.clone(),
                    got: got.clone(),
                });
            }
        }
    }
}

/// Run every check; Ok(true) means a clean sweep.
pub(crate) fn run(
    out: &mut impl Write,
    options: &Options,
) -> Result<bool, Box<dyn std::error::Error>> {
    if options.oracle_max_n > options.oracle_cap {
        return Err(Error::CapExceeded {
            requested: options.oracle_max_n,
            cap: options.oracle_cap,
        }
        .into());
    }
    let table = TriangleTable::build(2 * options.oracle_max_n)?;
    let mut sweep = Sweep::new();

    closed_form_check(&mut sweep, options)?;
    table_vs_closed_form_check(&mut sweep, &table, options);
    histogram_check(&mut sweep, &table, options)?;
    column_sum_check(&mut sweep, &table, options)?;

    for report in &sweep.reports {
        writeln!(
            out,
            "{:<58} {:>7} passed  {:>3} failed",
            report.name, report.passed, report.failed
        )?;
    }
    let failed: u64 = sweep.reports.iter().map(|r| r.failed).sum();
    match &sweep.first_mismatch {
        None => writeln!(out, "result: PASS ({} checks)", sweep.reports.len())?,
        Some(m) => {
            writeln!(out, "result: FAIL ({failed} mismatches)")?;
            writeln!(
                out,
                "first mismatch [{}]: n={}, k={}, expected={}, got={}",
                m.check, m.n, m.k, m.expected, m.got
            )?;
        }
    }
    Ok(failed == 0)
}

/// The column-term squares sum to C_n and the three Catalan formulas agree,
/// for every n up to max_n.
fn closed_form_check(sweep: &mut Sweep, options: &Options) -> Result<(), Error> {
    let mut report = Report {
        name: format!("closed-form decomposition (n <= {})", options.max_n),
        passed: 0,
        failed: 0,
    };
    for n in 0..=options.max_n {
        let expected = catalan::catalan(n)?;
        let mut decomposition = catalan::decompose(n)?;
        if options.inject_fault && n == options.max_n {
            decomposition.terms[0] += 1u32;
        }
        let sum = decomposition.sum_of_squares();
        sweep.record(&mut report, "sum of squares", n, 0, &expected, &sum);
        sweep.record(
            &mut report,
            "factorial formula",
            n,
            0,
            &expected,
            &catalan_from_factorials(n),
        );
        sweep.record(
            &mut report,
            "binomial-difference formula",
            n,
            0,
            &expected,
            &catalan_from_binomial_difference(n),
        );
    }
    sweep.reports.push(report);
    Ok(())
}

/// Every table label up to i = 2 * oracle_max_n equals the closed form
/// binom(i, k) - binom(i, k-1).
fn table_vs_closed_form_check(sweep: &mut Sweep, table: &TriangleTable, options: &Options) {
    let mut report = Report {
        name: format!("table vs closed form (i <= {})", 2 * options.oracle_max_n),
        passed: 0,
        failed: 0,
    };
    for (node, label) in table.nodes() {
        let k = (node.i - node.j) / 2;
        let expected =
            catalan::binomial(node.i, k as isize) - catalan::binomial(node.i, k as isize - 1);
        sweep.record(
            &mut report,
            "table vs closed form",
            node.i,
            k,
            &expected,
            label,
        );
    }
    sweep.reports.push(report);
}

/// The brute-force midpoint histogram equals the entrywise square of the
/// table column, for every n up to oracle_max_n.
fn histogram_check(
    sweep: &mut Sweep,
    table: &TriangleTable,
    options: &Options,
) -> Result<(), Error> {
    let mut report = Report {
        name: format!(
            "enumeration histogram vs column squares (n <= {})",
            options.oracle_max_n
        ),
        passed: 0,
        failed: 0,
    };
    for n in 0..=options.oracle_max_n {
        let histogram = oracle::midpoint_histogram_with_cap(n, options.oracle_cap)?;
        let column = table.column(n)?;
        let zero = BigUint::from(0u32);
        for (k, term) in column.iter().enumerate() {
            let j = n - 2 * k;
            let expected = term * term;
            let got = histogram.get(&j).unwrap_or(&zero);
            sweep.record(
                &mut report,
                "histogram vs column square",
                n,
                k,
                &expected,
                got,
            );
        }
    }
    sweep.reports.push(report);
    Ok(())
}

/// Summing d(x)·d̄(x) over any column of the n-triangle gives C_n.
fn column_sum_check(
    sweep: &mut Sweep,
    table: &TriangleTable,
    options: &Options,
) -> Result<(), Error> {
    let mut report = Report {
        name: format!("column-sum identity (n <= {})", options.oracle_max_n),
        passed: 0,
        failed: 0,
    };
    for n in 0..=options.oracle_max_n {
        let expected = catalan::catalan(n)?;
        for i in 0..=2 * n {
            let mut sum = BigUint::from(0u32);
            for k in 0..=i / 2 {
                let node = NodeCoord::new(i, i - 2 * k);
                sum += table.paths_through(n, node)?;
            }
            sweep.record(&mut report, "column-sum identity", n, i, &expected, &sum);
        }
    }
    sweep.reports.push(report);
    Ok(())
}
