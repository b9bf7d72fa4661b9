//! The JSON certificate document.
//!
//! Every arbitrary-precision integer or rational is serialized as a decimal
//! string ("n" or "n/d"), never as a native JSON number, so downstream
//! consumers cannot silently truncate. Documents round-trip byte-identically
//! through parse → serialize: field order is fixed by the struct layout and
//! there are no maps.

use crate::arith::{Int, Rat};
use crate::brauer::{Certificate, InvariantSample, LocalInvariant};
use crate::curve::{AffinePoint, Chart, Coord};
use crate::localfields::{PadicApprox, Place};
use crate::localsolve::{LocalWitness, RealWitness, WitnessData};
use crate::search::AssumptionReport;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CertificateDocument {
    pub schema_version: String,
    pub curve: CurveDoc,
    pub mode: String,
    pub assumption: AssumptionDoc,
    pub local_solvability: Vec<PlaceSolvabilityDoc>,
    pub invariants: Vec<InvariantDoc>,
    /// "0" or "1/2"; null when the curve is not everywhere locally solvable.
    pub obstruction_sum: Option<String>,
    pub rational_search: RationalSearchDoc,
    pub jacobian: JacobianDoc,
    pub conclusion: String,
    pub citations: Vec<String>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CurveDoc {
    pub p: String,
    pub q: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct AssumptionDoc {
    pub v0: Option<String>,
    pub n_aux: String,
    pub coprime: bool,
    pub conditions: Vec<ConditionDoc>,
    pub passes: bool,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ConditionDoc {
    pub name: String,
    pub pass: bool,
    pub reason: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct PlaceSolvabilityDoc {
    /// "real" or the prime as a decimal string.
    pub place: String,
    pub solvable: bool,
    pub witness: Option<WitnessDoc>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct WitnessDoc {
    /// "good-reduction", "affine", "infinity", "real-affine",
    /// or "real-infinity-branch".
    pub kind: String,
    pub reason: String,
    pub chart: Option<String>,
    pub x: Option<CoordDoc>,
    pub y: Option<CoordDoc>,
    /// Real-place data: exact y² and the chosen sign of y.
    pub y_squared: Option<String>,
    pub y_negative: Option<bool>,
    /// The chart equation holds modulo ℓ^precision.
    pub precision: Option<u32>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CoordDoc {
    pub exact: Option<String>,
    pub padic: Option<PadicDoc>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct PadicDoc {
    pub prime: String,
    pub valuation: i64,
    pub unit: String,
    pub precision: u32,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct InvariantDoc {
    pub place: String,
    /// "0" or "1/2".
    pub value: String,
    pub constant: bool,
    pub samples: Vec<SampleDoc>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SampleDoc {
    pub witness: WitnessDoc,
    pub symbol: i8,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct RationalSearchDoc {
    pub height: String,
    pub points: Vec<PointDoc>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct PointDoc {
    pub chart: String,
    pub x: String,
    pub y: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct JacobianDoc {
    pub a: String,
    pub b: String,
    pub discriminant: String,
}

pub fn int_str(n: &Int) -> String {
    n.to_string()
}

pub fn rat_str(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rat(s: &str) -> Option<Rat> {
    match s.split_once('/') {
        None => s.parse::<Int>().ok().map(Rat::from_integer),
        Some((n, d)) => {
            let n = n.parse::<Int>().ok()?;
            let d = d.parse::<Int>().ok()?;
            if d == Int::from(0) {
                None
            } else {
                Some(Rat::new(n, d))
            }
        }
    }
}

fn place_str(place: &Place) -> String {
    place.to_string()
}

fn padic_doc(a: &PadicApprox) -> PadicDoc {
    PadicDoc {
        prime: int_str(a.prime()),
        valuation: a.valuation(),
        unit: int_str(a.unit_value()),
        precision: a.precision(),
    }
}

fn coord_doc(c: &Coord) -> CoordDoc {
    match c {
        Coord::Exact(r) => CoordDoc { exact: Some(rat_str(r)), padic: None },
        Coord::Approx(a) => CoordDoc { exact: None, padic: Some(padic_doc(a)) },
    }
}

fn chart_str(chart: Chart) -> String {
    match chart {
        Chart::A => "A".into(),
        Chart::B => "B".into(),
    }
}

fn witness_doc(w: &LocalWitness) -> WitnessDoc {
    let mut doc = WitnessDoc {
        kind: String::new(),
        reason: w.reason.to_string(),
        chart: None,
        x: None,
        y: None,
        y_squared: None,
        y_negative: None,
        precision: None,
    };
    match &w.data {
        WitnessData::GoodReductionGuarantee => doc.kind = "good-reduction".into(),
        WitnessData::Affine { point, checked_mod } => {
            doc.kind = "affine".into();
            fill_point(&mut doc, point, *checked_mod);
        }
        WitnessData::Infinity { point, checked_mod } => {
            doc.kind = "infinity".into();
            fill_point(&mut doc, point, *checked_mod);
        }
        WitnessData::Real(real) => match real {
            RealWitness::Affine { x, y_squared, y_negative } => {
                doc.kind = "real-affine".into();
                doc.chart = Some("A".into());
                doc.x = Some(CoordDoc { exact: Some(rat_str(x)), padic: None });
                doc.y_squared = Some(rat_str(y_squared));
                doc.y_negative = Some(*y_negative);
            }
            RealWitness::InfinityBranch { s_negative } => {
                doc.kind = "real-infinity-branch".into();
                doc.chart = Some("B".into());
                doc.y_negative = Some(*s_negative);
            }
        },
    }
    doc
}

fn fill_point(doc: &mut WitnessDoc, point: &AffinePoint, checked_mod: u32) {
    doc.chart = Some(chart_str(point.chart));
    doc.x = Some(coord_doc(&point.x));
    doc.y = Some(coord_doc(&point.y));
    doc.precision = Some(checked_mod);
}

fn invariant_doc(inv: &LocalInvariant) -> InvariantDoc {
    InvariantDoc {
        place: place_str(&inv.place),
        value: inv.value.as_str().to_string(),
        constant: inv.constant,
        samples: inv.samples.iter().map(sample_doc).collect(),
    }
}

fn sample_doc(s: &InvariantSample) -> SampleDoc {
    SampleDoc { witness: witness_doc(&s.witness), symbol: s.symbol as i8 }
}

fn assumption_doc(a: &AssumptionReport) -> AssumptionDoc {
    AssumptionDoc {
        v0: a.v0.as_ref().map(int_str),
        n_aux: int_str(&a.n_aux),
        coprime: a.coprime,
        conditions: a
            .conditions
            .iter()
            .map(|c| ConditionDoc {
                name: c.name.to_string(),
                pass: c.pass,
                reason: c.reason.clone(),
            })
            .collect(),
        passes: a.passes,
    }
}

fn point_doc(p: &AffinePoint) -> PointDoc {
    PointDoc {
        chart: chart_str(p.chart),
        x: rat_str(p.x.exact().expect("search points are exact")),
        y: rat_str(p.y.exact().expect("search points are exact")),
    }
}

impl CertificateDocument {
    pub fn from_certificate(cert: &Certificate) -> CertificateDocument {
        CertificateDocument {
            schema_version: SCHEMA_VERSION.into(),
            curve: CurveDoc { p: int_str(cert.curve.p()), q: int_str(cert.curve.q()) },
            mode: cert.mode.as_str().into(),
            assumption: assumption_doc(&cert.assumption),
            local_solvability: cert
                .solvability
                .results
                .iter()
                .map(|r| PlaceSolvabilityDoc {
                    place: place_str(&r.place),
                    solvable: r.solvable,
                    witness: r.witness.as_ref().map(witness_doc),
                })
                .collect(),
            invariants: cert.invariants.iter().map(invariant_doc).collect(),
            obstruction_sum: cert.obstruction.map(|v| v.as_str().to_string()),
            rational_search: RationalSearchDoc {
                height: cert.search_height.to_string(),
                points: cert.rational_points.iter().map(point_doc).collect(),
            },
            jacobian: JacobianDoc {
                a: int_str(&cert.jacobian.a),
                b: int_str(&cert.jacobian.b),
                discriminant: int_str(&cert.jacobian.discriminant),
            },
            conclusion: cert.conclusion.as_str().into(),
            citations: cert.citations.iter().map(|c| c.to_string()).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serialization cannot fail")
    }

    pub fn to_json_compact(&self) -> String {
        serde_json::to_string(self).expect("document serialization cannot fail")
    }

    pub fn parse(json: &str) -> Result<CertificateDocument, serde_json::Error> {
        serde_json::from_str(json)
    }
}
