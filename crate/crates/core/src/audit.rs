//! Audit of the published diameter values for the named families.
//!
//! Every quantity is computed twice, once per distance oracle, and compared
//! against the claimed value.

use serde::Serialize;

use crate::dist2::D2Analysis;
use crate::distance::{Diameter, DistanceOracle};
use crate::families::{family_claims, make_family, FamilyError, FamilySpec, Quantity};
use crate::io::graph6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimCheck {
    pub family: String,
    pub quantity: Quantity,
    pub claimed: u32,
    pub bfs: Diameter,
    pub matrix_power: Diameter,
    /// graph6 plus a diametral pair, set whenever the claim fails.
    pub certificate: Option<String>,
}

impl ClaimCheck {
    pub fn oracles_agree(&self) -> bool {
        self.bfs == self.matrix_power
    }

    pub fn holds(&self) -> bool {
        self.oracles_agree() && self.bfs == Diameter::Finite(self.claimed)
    }

    pub fn status(&self) -> &'static str {
        match (self.oracles_agree(), self.holds()) {
            (false, _) => "oracle-disagreement",
            (true, true) => "ok",
            (true, false) => "mismatch",
        }
    }
}

/// Families audited by [`audit_claims`], in report order.
pub fn audited_families() -> Vec<FamilySpec> {
    let mut specs = vec![FamilySpec::Cycle { order: 5 }, FamilySpec::G3, FamilySpec::House];
    specs.extend((5..=13).map(|order| FamilySpec::ComplementPath { order }));
    specs.push(FamilySpec::C5Pendant);
    for t in 1..=3 {
        specs.extend((0..=3).map(|i| FamilySpec::GadgetChain { t, i }));
    }
    specs.push(FamilySpec::CorollaryGraph);
    specs
}

fn pair_text(u: usize, v: usize, d: Diameter, d2: Diameter) -> String {
    format!("pair=({u},{v}) d={d} d2={d2}")
}

/// Checks every recorded claim for one family.
pub fn audit_family(spec: &FamilySpec) -> Result<Vec<ClaimCheck>, FamilyError> {
    let claims = family_claims(spec)?;
    let g = make_family(spec)?;
    let bfs = D2Analysis::new(&g, DistanceOracle::Bfs);
    let mat = D2Analysis::new(&g, DistanceOracle::MatrixPower);
    let encoded = graph6::encode(&g).expect("audited families fit graph6");
    Ok(claims
        .into_iter()
        .map(|(quantity, claimed)| {
            let (b, m) = match quantity {
                Quantity::Diam => (bfs.diam(), mat.diam()),
                Quantity::D2Diam => (bfs.d2_diam(), mat.d2_diam()),
            };
            let mut check = ClaimCheck {
                family: spec.to_string(),
                quantity,
                claimed,
                bfs: b,
                matrix_power: m,
                certificate: None,
            };
            if !check.holds() {
                let witness = match quantity {
                    Quantity::Diam => bfs.distances().diametral_pair().map(|(u, v, _)| {
                        let d2 = bfs.d2_distances().get(u, v).map_or(Diameter::Infinite, Diameter::Finite);
                        pair_text(u, v, Diameter::Finite(bfs.distances().get(u, v).unwrap()), d2)
                    }),
                    Quantity::D2Diam => bfs.d2_diametral_pair().map(|p| pair_text(p.u, p.v, p.d, p.d2)),
                };
                check.certificate = Some(match witness {
                    Some(w) => format!("graph6={encoded} {w}"),
                    None => format!("graph6={encoded} disconnected"),
                });
            }
            check
        })
        .collect())
}

/// Claims for every family in [`audited_families`].
pub fn audit_claims() -> Vec<ClaimCheck> {
    audited_families()
        .iter()
        .flat_map(|spec| audit_family(spec).expect("audited families carry claims"))
        .collect()
}

pub fn audit_csv(checks: &[ClaimCheck]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["family", "quantity", "claimed", "bfs", "matrix_power", "status", "certificate"])
        .unwrap();
    for c in checks {
        w.write_record([
            c.family.clone(),
            c.quantity.to_string(),
            c.claimed.to_string(),
            c.bfs.to_string(),
            c.matrix_power.to_string(),
            c.status().to_string(),
            c.certificate.clone().unwrap_or_default(),
        ])
        .unwrap();
    }
    String::from_utf8(w.into_inner().unwrap()).unwrap()
}
