//! Parameter grid scans over the families, with a fixed CSV schema.
//!
//! Cells are generated in lexicographic parameter order and results are
//! collected back in that order, so the output never depends on the worker
//! count.

use rayon::prelude::*;
use sgp_core::families::{
    bresinsky_generators, symmetric_generators, unbounded_generators, BresinskyParams, SymSParams,
    SymTParams, SymmetricParams, UnboundedParams,
};
use sgp_core::presentations::minimal_presentation_cardinality_budgeted;
use sgp_core::{Error, Result, SemigroupSpec};

pub const CSV_HEADER: &str = "n,e,q,d,mu,frobenius,genus,symmetric,status";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cell {
    SymS { e: u64, q: u64, d: u64 },
    SymT { e: u64, q: u64, d: u64 },
    Unbounded { n: u64, e: u64, q: u64 },
    Bresinsky { q2: u64 },
}

impl Cell {
    /// Values for the n, e, q, d columns. Family parameters missing from a
    /// family leave their column empty; the Bresinsky parameter rides in the
    /// q column.
    pub fn columns(&self) -> [Option<u64>; 4] {
        match *self {
            Cell::SymS { e, q, d } | Cell::SymT { e, q, d } => [None, Some(e), Some(q), Some(d)],
            Cell::Unbounded { n, e, q } => [Some(n), Some(e), Some(q), None],
            Cell::Bresinsky { q2 } => [None, None, Some(q2), None],
        }
    }

    pub fn label(&self) -> String {
        match *self {
            Cell::SymS { e, q, d } | Cell::SymT { e, q, d } => format!("e={e} q={q} d={d}"),
            Cell::Unbounded { n, e, q } => format!("n={n} e={e} q={q}"),
            Cell::Bresinsky { q2 } => format!("q2={q2}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowStatus {
    Ok,
    BudgetExceeded,
    Invalid,
}

impl RowStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            RowStatus::Ok => "ok",
            RowStatus::BudgetExceeded => "budget_exceeded",
            RowStatus::Invalid => "invalid",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    pub cell: Cell,
    pub mu: Option<u64>,
    pub frobenius: Option<i64>,
    pub genus: Option<u64>,
    pub symmetric: Option<bool>,
    pub status: RowStatus,
}

impl ScanRow {
    pub fn to_csv_line(&self) -> String {
        let [n, e, q, d] = self.cell.columns();
        fn opt<T: ToString>(v: Option<T>) -> String {
            v.map(|x| x.to_string()).unwrap_or_default()
        }
        format!(
            "{},{},{},{},{},{},{},{},{}",
            opt(n),
            opt(e),
            opt(q),
            opt(d),
            opt(self.mu),
            opt(self.frobenius),
            opt(self.genus),
            opt(self.symmetric),
            self.status.as_str()
        )
    }
}

/// Runs every cell on a pool of `jobs` workers. Row order equals cell order
/// regardless of scheduling. A family contract violation aborts the scan.
pub fn run_scan(cells: &[Cell], jobs: usize, budget: u64) -> Result<Vec<ScanRow>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidInput(format!("cannot build worker pool: {e}")))?;
    pool.install(|| {
        cells
            .par_iter()
            .map(|&cell| compute_cell(cell, budget))
            .collect()
    })
}

fn compute_cell(cell: Cell, budget: u64) -> Result<ScanRow> {
    let spec = match build_spec(cell) {
        Ok(spec) => spec,
        // parameter constraints unmet: a normal, reported grid outcome
        Err(Error::InvalidInput(_)) => {
            return Ok(ScanRow {
                cell,
                mu: None,
                frobenius: None,
                genus: None,
                symmetric: None,
                status: RowStatus::Invalid,
            });
        }
        Err(err) => return Err(err),
    };
    let (mu, status) = match minimal_presentation_cardinality_budgeted(&spec, budget) {
        Ok(mu) => (Some(mu), RowStatus::Ok),
        Err(Error::BudgetExceeded) => (None, RowStatus::BudgetExceeded),
        Err(err) => return Err(err),
    };
    Ok(ScanRow {
        cell,
        mu,
        frobenius: Some(spec.frobenius()),
        genus: Some(spec.genus()),
        symmetric: Some(spec.is_symmetric()),
        status,
    })
}

fn build_spec(cell: Cell) -> Result<SemigroupSpec> {
    match cell {
        Cell::SymS { e, q, d } => {
            symmetric_generators(SymmetricParams::S(SymSParams::new(e, q, d)?))
        }
        Cell::SymT { e, q, d } => {
            symmetric_generators(SymmetricParams::T(SymTParams::new(e, q, d)?))
        }
        Cell::Unbounded { n, e, q } => unbounded_generators(UnboundedParams::new(n, e, q)?),
        Cell::Bresinsky { q2 } => bresinsky_generators(BresinskyParams::new(q2)?),
    }
}

pub fn rows_to_csv(rows: &[ScanRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.to_csv_line());
        out.push('\n');
    }
    out
}
