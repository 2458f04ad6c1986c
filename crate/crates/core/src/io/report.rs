//! CSV and JSON report emission. Infinite diameters are written as `inf`.

use std::io::Write;

use serde::Serialize;

use crate::dist2::MetricsRecord;
use crate::search::ScanReport;

pub const METRICS_COLUMNS: [&str; 7] = ["n", "edge_count", "diam", "bipartite", "join", "d2_connected", "d2_diam"];

pub const SCHEMA_VERSION: u32 = 1;

fn metrics_row(m: &MetricsRecord) -> [String; 7] {
    [
        m.n.to_string(),
        m.edge_count.to_string(),
        m.diam.to_string(),
        m.bipartite.to_string(),
        m.has_spanning_complete_bipartite.to_string(),
        m.d2_connected.to_string(),
        m.d2_diam.to_string(),
    ]
}

/// Writes a header row followed by one row per record.
pub fn write_metrics_csv<'a, W: Write>(
    out: W,
    records: impl IntoIterator<Item = &'a MetricsRecord>,
    header: bool,
) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    if header {
        w.write_record(METRICS_COLUMNS)?;
    }
    for m in records {
        w.write_record(metrics_row(m))?;
    }
    w.flush()?;
    Ok(())
}

pub fn metrics_csv<'a>(records: impl IntoIterator<Item = &'a MetricsRecord>) -> String {
    let mut buf = Vec::new();
    write_metrics_csv(&mut buf, records, true).expect("writing to memory");
    String::from_utf8(buf).expect("csv output is utf-8")
}

/// Census spectrum as CSV: `diam,d2_diam,count,witness`.
pub fn census_csv(report: &ScanReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["diam", "d2_diam", "count", "witness"]).unwrap();
    for c in report.census.iter().flat_map(|c| &c.spectrum) {
        w.write_record([
            c.diam.to_string(),
            c.d2_diam.to_string(),
            c.count.to_string(),
            c.witness.clone().unwrap_or_default(),
        ])
        .unwrap();
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).unwrap()
}

#[derive(Serialize)]
struct ReportDocument<'a> {
    schema_version: u32,
    generator: String,
    report: &'a ScanReport,
}

/// Pretty JSON document wrapping a scan report. Contains nothing that varies
/// between runs with equal parameters.
pub fn report_json(report: &ScanReport) -> String {
    let doc = ReportDocument {
        schema_version: SCHEMA_VERSION,
        generator: format!("d2graph {}", env!("CARGO_PKG_VERSION")),
        report,
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("report serialises");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dist2::d2_metrics;
    use crate::graph::Graph;

    #[test]
    fn column_order_and_inf() {
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let c5: Vec<_> = (0..5).map(|v| (v, (v + 1) % 5)).collect();
        let c5 = Graph::new(5, &c5).unwrap();
        let csv = metrics_csv(&[d2_metrics(&p4), d2_metrics(&c5)]);
        assert_eq!(
            csv,
            "n,edge_count,diam,bipartite,join,d2_connected,d2_diam\n\
             4,3,3,true,false,false,inf\n\
             5,5,2,false,false,true,2\n"
        );
    }
}
