//! Theorem-versus-oracle census over a stream of graphs.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use crate::classify::{classify_kronecker_factor_with, classify_product_with, is_3_polytope, ClassifyOptions};
use crate::graph::Graph;
use crate::iso::canonical_form;
use crate::planar::is_planar;
use crate::products::{kronecker, make_family, product, FamilySpec, ProductKind};

use super::formats::to_graph6;

pub const CSV_HEADER: &str = "id,n,m,kappa,planar,branch,accepted,oracle,agree";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CensusMode {
    /// Each input graph is `H`; the product is `H ∧ K_2`.
    KroneckerFactor,
    /// Each input graph is multiplied by the fixed factor `right`.
    Product { kind: ProductKind, right: FamilySpec },
}

impl FromStr for CensusMode {
    type Err = String;

    /// `kronecker-factor` or `product:<kind>:<family spec>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "kronecker-factor" {
            return Ok(CensusMode::KroneckerFactor);
        }
        let rest = s
            .strip_prefix("product:")
            .ok_or_else(|| format!("unknown census mode `{s}` (expected kronecker-factor or product:<kind>:<spec>)"))?;
        let (kind, spec) = rest
            .split_once(':')
            .ok_or_else(|| format!("census mode `{s}` is missing the right factor"))?;
        Ok(CensusMode::Product {
            kind: kind.parse().map_err(|e| format!("{e}"))?,
            right: spec.parse().map_err(|e| format!("{e}"))?,
        })
    }
}

impl fmt::Display for CensusMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CensusMode::KroneckerFactor => f.write_str("kronecker-factor"),
            CensusMode::Product { kind, right } => write!(f, "product:{kind}:{right}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRecord {
    /// Canonical graph6 of the input graph.
    pub id: String,
    pub n: usize,
    pub m: usize,
    pub kappa: usize,
    pub planar: bool,
    pub branch: String,
    pub accepted: bool,
    pub oracle: bool,
    pub agree: bool,
    pub micros: u128,
}

impl CensusRecord {
    pub fn csv_row(&self, timing: bool) -> String {
        let mut row = format!(
            "{},{},{},{},{},{},{},{},{}",
            self.id, self.n, self.m, self.kappa, self.planar, self.branch, self.accepted, self.oracle, self.agree
        );
        if timing {
            row.push_str(&format!(",{}", self.micros));
        }
        row
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BranchCount {
    pub accepted: usize,
    pub rejected: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub mode: CensusMode,
    pub records: Vec<CensusRecord>,
}

impl CensusReport {
    pub fn disagreements(&self) -> usize {
        self.records.iter().filter(|r| !r.agree).count()
    }

    pub fn accepted(&self) -> usize {
        self.records.iter().filter(|r| r.accepted).count()
    }

    pub fn delegated(&self) -> usize {
        self.records.iter().filter(|r| r.branch == "Delegated").count()
    }

    pub fn by_branch(&self) -> BTreeMap<String, BranchCount> {
        let mut out: BTreeMap<String, BranchCount> = BTreeMap::new();
        for r in &self.records {
            let e = out.entry(r.branch.clone()).or_default();
            if r.accepted {
                e.accepted += 1;
            } else {
                e.rejected += 1;
            }
        }
        out
    }

    pub fn to_csv(&self, timing: bool) -> String {
        let mut out = String::from(CSV_HEADER);
        if timing {
            out.push_str(",micros");
        }
        out.push('\n');
        for r in &self.records {
            out.push_str(&r.csv_row(timing));
            out.push('\n');
        }
        out
    }

    pub fn summary(&self) -> String {
        let mut out = format!(
            "mode: {}\ngraphs: {}\naccepted: {}\nrejected: {}\ndelegated: {}\ndisagreements: {}\n",
            self.mode,
            self.records.len(),
            self.accepted(),
            self.records.len() - self.accepted(),
            self.delegated(),
            self.disagreements()
        );
        for (branch, c) in self.by_branch() {
            out.push_str(&format!("branch {branch}: accepted {} rejected {}\n", c.accepted, c.rejected));
        }
        out
    }
}

fn record(h: &Graph, mode: &CensusMode, right: Option<&Graph>, opts: &ClassifyOptions) -> CensusRecord {
    let start = Instant::now();
    let (verdict, oracle) = match (mode, right) {
        (CensusMode::Product { kind, .. }, Some(j)) => {
            (classify_product_with(h, j, *kind, opts), is_3_polytope(&product(h, j, *kind)))
        }
        _ => {
            let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
            (classify_kronecker_factor_with(h, opts), is_3_polytope(&kronecker(h, &k2)))
        }
    };
    let micros = start.elapsed().as_micros();
    CensusRecord {
        id: to_graph6(&canonical_form(h).to_graph()),
        n: h.n(),
        m: h.m(),
        kappa: h.vertex_connectivity(),
        planar: is_planar(h),
        branch: verdict.branch.tag().to_string(),
        accepted: verdict.accepted,
        oracle,
        agree: verdict.accepted == oracle,
        micros,
    }
}

/// Classifies every graph in parallel; records come back in input order.
pub fn census(graphs: &[Graph], mode: &CensusMode, opts: &ClassifyOptions) -> Result<CensusReport, String> {
    let right = match mode {
        CensusMode::KroneckerFactor => None,
        CensusMode::Product { right, .. } => Some(make_family(*right).map_err(|e| e.to_string())?),
    };
    let records = graphs
        .par_iter()
        .map(|h| record(h, mode, right.as_ref(), opts))
        .collect();
    Ok(CensusReport {
        mode: mode.clone(),
        records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wheels(ns: &[usize]) -> Vec<Graph> {
        ns.iter()
            .map(|&n| make_family(FamilySpec::Wheel(n)).unwrap())
            .collect()
    }

    #[test]
    fn odd_wheels_accept_even_wheels_reject() {
        let opts = ClassifyOptions::default();
        let r = census(&wheels(&[3, 5, 7, 9]), &CensusMode::KroneckerFactor, &opts).unwrap();
        assert_eq!(r.accepted(), 4);
        assert!(r.records.iter().all(|x| x.branch == "Thm1-C3" && x.agree));
        let r = census(&wheels(&[4, 6, 8]), &CensusMode::KroneckerFactor, &opts).unwrap();
        assert_eq!(r.accepted(), 0);
        assert_eq!(r.disagreements(), 0);
        assert_eq!(r.records[0].n, 5);
    }

    #[test]
    fn csv_is_deterministic() {
        let opts = ClassifyOptions::default();
        let a = census(&wheels(&[3, 4, 5]), &CensusMode::KroneckerFactor, &opts).unwrap();
        let b = census(&wheels(&[3, 4, 5]), &CensusMode::KroneckerFactor, &opts).unwrap();
        assert_eq!(a.to_csv(false), b.to_csv(false));
        assert!(a.to_csv(false).starts_with(CSV_HEADER));
        assert!(a.to_csv(true).lines().next().unwrap().ends_with(",micros"));
        assert!(a.summary().contains("branch Thm1-C3: accepted 2 rejected 0"));
    }

    #[test]
    fn product_mode() {
        let mode: CensusMode = "product:cartesian:complete:2".parse().unwrap();
        assert_eq!(mode.to_string(), "product:cartesian:complete:2");
        let gs = vec![
            make_family(FamilySpec::Diamond).unwrap(),
            make_family(FamilySpec::Complete(4)).unwrap(),
        ];
        let r = census(&gs, &mode, &ClassifyOptions::default()).unwrap();
        assert_eq!(r.records.iter().map(|x| x.accepted).collect::<Vec<_>>(), vec![true, false]);
        assert_eq!(r.disagreements(), 0);
        assert!("product:weird:cube".parse::<CensusMode>().is_err());
        assert!("nonsense".parse::<CensusMode>().is_err());
    }
}
