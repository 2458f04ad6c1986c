//! Scan campaigns over graph streams.
//!
//! Each graph is evaluated independently (in parallel when configured); the
//! results are then merged sequentially in input order, so a report depends
//! only on its inputs and never on the worker count.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{enumerate_connected_up_to, SearchError};
use crate::dist2::{Bound, BoundCheckResult, D2Analysis, MetricsRecord, PairWitness};
use crate::distance::{Diameter, DistanceOracle};
use crate::graph::Graph;
use crate::io::graph6::{self, Graph6Error};
use crate::par::{default_workers, map_ordered};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Campaign {
    /// Look for `diam(D_2) > diam + 2` among graphs with `diam >= 3`.
    #[serde(rename = "conjecture31")]
    DiameterGap,
    /// Half-distance, lower and diameter-3 upper bounds on every graph.
    #[serde(rename = "theorem-sweep")]
    TheoremSweep,
    /// Tally of `(diam, diam(D_2))` pairs.
    #[serde(rename = "census")]
    Census,
}

#[derive(Debug, Clone, Copy)]
pub struct CampaignConfig {
    pub workers: usize,
    pub oracle: DistanceOracle,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig { workers: default_workers(), oracle: DistanceOracle::Bfs }
    }
}

/// A self-contained finding: re-verifiable from `graph6` alone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub graph6: String,
    pub metrics: MetricsRecord,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<Bound>,
    pub pairs: Vec<PairWitness>,
}

impl Certificate {
    /// Decodes the graph and recomputes everything stored here.
    pub fn reverify(&self) -> Result<bool, Graph6Error> {
        let g = graph6::parse(&self.graph6)?;
        let a = D2Analysis::new(&g, DistanceOracle::Bfs);
        if a.metrics() != self.metrics {
            return Ok(false);
        }
        let pair_ok = |p: &PairWitness| {
            let d = |x: Option<u32>| x.map_or(Diameter::Infinite, Diameter::Finite);
            p.u < g.order()
                && p.v < g.order()
                && d(a.distances().get(p.u, p.v)) == p.d
                && d(a.d2_distances().get(p.u, p.v)) == p.d2
        };
        let bound_ok = match self.bound {
            None => true,
            Some(Bound::HalfDistance) => a.check_half_bound().violations == self.pairs,
            Some(Bound::DiameterLower) => a.check_lower_bound().violations == self.pairs,
            Some(Bound::Diameter3Upper) => a.check_diam3_upper().violations == self.pairs,
        };
        Ok(bound_ok && self.pairs.iter().all(pair_ok))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumCell {
    pub diam: u32,
    pub d2_diam: u32,
    pub count: u64,
    /// Smallest witness by (order, edge count, stream position).
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusSummary {
    pub spectrum: Vec<SpectrumCell>,
    /// Cells `(2, 2)` and `(2, 3)`, listed even when empty.
    pub diam2_small_d2: Vec<SpectrumCell>,
    /// Populated cells with `diam(D_2) = ceil(diam / 2) + 1`.
    pub one_above_lower_bound: Vec<SpectrumCell>,
    /// Cell `(3, 2)`: graphs meeting the lower bound at diameter 3.
    pub diam3_d2_2: SpectrumCell,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub half_bound_violations: u64,
    pub lower_bound_violations: u64,
    pub diam3_applicable: u64,
    pub diam3_violations: u64,
    pub diam3_max_d2_diam: Option<u32>,
    pub diam3_max_witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub campaign: Campaign,
    pub max_n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diam_filter: Option<u32>,
    pub graphs_examined: u64,
    pub examined_by_order: BTreeMap<usize, u64>,
    /// Disconnected inputs (only possible for external streams).
    pub skipped_disconnected: u64,
    /// Connected graphs whose `D_2` is disconnected; excluded from diameter
    /// comparisons.
    pub d2_disconnected: u64,
    /// Graphs the campaign's inequality or tally applies to.
    pub applicable: u64,
    pub findings: Vec<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub census: Option<CensusSummary>,
}

struct Evaluation {
    metrics: MetricsRecord,
    d2_pair: Option<PairWitness>,
    checks: Option<[BoundCheckResult; 3]>,
}

fn evaluate(g: &Graph, campaign: Campaign, oracle: DistanceOracle) -> Evaluation {
    let a = D2Analysis::new(g, oracle);
    let checks = (campaign == Campaign::TheoremSweep)
        .then(|| [a.check_half_bound(), a.check_lower_bound(), a.check_diam3_upper()]);
    Evaluation { metrics: a.metrics(), d2_pair: a.d2_diametral_pair(), checks }
}

fn encode(g: &Graph) -> String {
    graph6::encode(g).expect("campaign graphs fit graph6")
}

#[derive(Default)]
struct Cell {
    count: u64,
    best: Option<((usize, usize, usize), String)>,
}

impl Cell {
    fn add(&mut self, rank: (usize, usize, usize), g: &Graph) {
        self.count += 1;
        if self.best.as_ref().is_none_or(|(r, _)| rank < *r) {
            self.best = Some((rank, encode(g)));
        }
    }

    fn report(&self, diam: u32, d2_diam: u32) -> SpectrumCell {
        SpectrumCell { diam, d2_diam, count: self.count, witness: self.best.as_ref().map(|(_, w)| w.clone()) }
    }
}

/// Runs `campaign` over an explicit graph stream. `diam_filter` restricts the
/// census to one diameter and is ignored by the other campaigns.
pub fn run_campaign(
    campaign: Campaign,
    graphs: &[Graph],
    diam_filter: Option<u32>,
    config: &CampaignConfig,
) -> ScanReport {
    let evals = map_ordered(graphs, config.workers, |g| {
        g.is_connected().then(|| evaluate(g, campaign, config.oracle))
    });

    let mut report = ScanReport {
        campaign,
        max_n: graphs.iter().map(Graph::order).max().unwrap_or(0),
        diam_filter: diam_filter.filter(|_| campaign == Campaign::Census),
        graphs_examined: 0,
        examined_by_order: BTreeMap::new(),
        skipped_disconnected: 0,
        d2_disconnected: 0,
        applicable: 0,
        findings: Vec::new(),
        sweep: None,
        census: None,
    };
    let mut sweep = SweepSummary {
        half_bound_violations: 0,
        lower_bound_violations: 0,
        diam3_applicable: 0,
        diam3_violations: 0,
        diam3_max_d2_diam: None,
        diam3_max_witness: None,
    };
    let mut diam3_best: Option<(u32, (usize, usize, usize))> = None;
    let mut cells: BTreeMap<(u32, u32), Cell> = BTreeMap::new();

    for (pos, (g, eval)) in graphs.iter().zip(evals).enumerate() {
        let Some(eval) = eval else {
            report.skipped_disconnected += 1;
            continue;
        };
        let m = eval.metrics;
        report.graphs_examined += 1;
        *report.examined_by_order.entry(g.order()).or_default() += 1;
        if !m.d2_connected {
            report.d2_disconnected += 1;
        }
        let rank = (g.order(), m.edge_count, pos);
        let (diam, d2_diam) = (m.diam.finite().expect("connected"), m.d2_diam.finite());

        match campaign {
            Campaign::DiameterGap => {
                let Some(d2_diam) = d2_diam else { continue };
                if diam < 3 {
                    continue;
                }
                report.applicable += 1;
                if d2_diam > diam + 2 {
                    report.findings.push(Certificate {
                        graph6: encode(g),
                        metrics: m,
                        bound: None,
                        pairs: eval.d2_pair.into_iter().collect(),
                    });
                }
            }
            Campaign::TheoremSweep => {
                report.applicable += 1;
                let [half, lower, upper] = eval.checks.expect("sweep evaluations carry checks");
                sweep.half_bound_violations += u64::from(!half.passed);
                sweep.lower_bound_violations += u64::from(!lower.passed);
                if upper.applicable {
                    sweep.diam3_applicable += 1;
                    sweep.diam3_violations += u64::from(!upper.passed);
                    let d2 = d2_diam.expect("applicable implies connected D_2");
                    let better = match diam3_best {
                        None => true,
                        Some((best, r)) => d2 > best || (d2 == best && rank < r),
                    };
                    if better {
                        diam3_best = Some((d2, rank));
                        sweep.diam3_max_d2_diam = Some(d2);
                        sweep.diam3_max_witness = Some(encode(g));
                    }
                }
                for check in [half, lower, upper] {
                    if !check.passed {
                        report.findings.push(Certificate {
                            graph6: encode(g),
                            metrics: m.clone(),
                            bound: Some(check.bound),
                            pairs: check.violations,
                        });
                    }
                }
            }
            Campaign::Census => {
                let Some(d2_diam) = d2_diam else { continue };
                if diam_filter.is_some_and(|f| f != diam) {
                    continue;
                }
                report.applicable += 1;
                cells.entry((diam, d2_diam)).or_default().add(rank, g);
            }
        }
    }

    match campaign {
        Campaign::TheoremSweep => report.sweep = Some(sweep),
        Campaign::Census => {
            let cell = |d: u32, d2: u32| {
                cells.get(&(d, d2)).map_or(
                    SpectrumCell { diam: d, d2_diam: d2, count: 0, witness: None },
                    |c| c.report(d, d2),
                )
            };
            report.census = Some(CensusSummary {
                spectrum: cells.iter().map(|(&(d, d2), c)| c.report(d, d2)).collect(),
                diam2_small_d2: vec![cell(2, 2), cell(2, 3)],
                one_above_lower_bound: cells
                    .iter()
                    .filter(|(&(d, d2), _)| d2 == d.div_ceil(2) + 1)
                    .map(|(&(d, d2), c)| c.report(d, d2))
                    .collect(),
                diam3_d2_2: cell(3, 2),
            });
        }
        Campaign::DiameterGap => {}
    }
    report
}

fn enumerated(max_n: usize, config: &CampaignConfig) -> Result<Vec<Graph>, SearchError> {
    Ok(enumerate_connected_up_to(max_n, config.workers)?.into_iter().flatten().collect())
}

/// Every connected graph on at most `max_n` vertices with `diam >= 3` and
/// connected `D_2` is checked for `diam(D_2) <= diam + 2`.
pub fn scan_conjecture(max_n: usize, config: &CampaignConfig) -> Result<ScanReport, SearchError> {
    Ok(run_campaign(Campaign::DiameterGap, &enumerated(max_n, config)?, None, config))
}

/// `(diam, diam(D_2))` tally over all connected graphs on at most `max_n`
/// vertices with connected `D_2`.
pub fn spectrum_census(
    max_n: usize,
    diam_filter: Option<u32>,
    config: &CampaignConfig,
) -> Result<ScanReport, SearchError> {
    Ok(run_campaign(Campaign::Census, &enumerated(max_n, config)?, diam_filter, config))
}

/// The three bound checks over all connected graphs on at most `max_n`
/// vertices.
pub fn theorem_sweep(max_n: usize, config: &CampaignConfig) -> Result<ScanReport, SearchError> {
    Ok(run_campaign(Campaign::TheoremSweep, &enumerated(max_n, config)?, None, config))
}
