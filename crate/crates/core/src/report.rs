//! JSON and CSV renderings used by the command-line tool.
//!
//! Objects are emitted with sorted keys and floats rounded to 12 significant
//! digits, so output is byte-stable for fixed inputs.

use serde::Serialize;
use serde_json::{json, Value};

use crate::diameter::{check_diameter_bounds, diameter_sumset, DiameterReport};
use crate::extremal::{ExtremalRecord, IntegralCandidate};
use crate::graph::CirculantGraph;
use crate::quantum::{evolution_report, EvolutionReport};
use crate::spectral::{
    bipartite_divisor_test, is_bipartite_spectral, ratio_condition_numeric_seeded, spectrum,
    Spectrum,
};

/// Significant digits kept for floats in JSON output.
pub const FLOAT_DIGITS: usize = 12;

pub fn round_float(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    let r: f64 = format!("{:.*e}", FLOAT_DIGITS - 1, x).parse().unwrap();
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Rounds every float in `v` to [`FLOAT_DIGITS`] significant digits.
pub fn normalize(v: Value) -> Value {
    match v {
        Value::Number(num) if num.is_f64() => {
            json!(round_float(num.as_f64().unwrap()))
        }
        Value::Array(xs) => Value::Array(xs.into_iter().map(normalize).collect()),
        Value::Object(map) => {
            Value::Object(map.into_iter().map(|(k, v)| (k, normalize(v))).collect())
        }
        other => other,
    }
}

pub fn to_value<T: Serialize>(x: &T) -> Value {
    normalize(serde_json::to_value(x).expect("serializable"))
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("valid json");
    s.push('\n');
    s
}

pub fn graph_json(g: &CirculantGraph) -> Value {
    json!({
        "n": g.order(),
        "symbol": g.symbol().members(),
        "divisor_set": g.integrality_decomposition().map(|d| d.members().to_vec()),
        "degree": g.degree(),
        "connected": g.is_connected(),
        "bipartite": g.is_bipartite_bfs(),
    })
}

/// Rounds, and flushes values at the level of double-precision noise to 0.
fn snap(x: f64) -> f64 {
    if x.abs() < 1e-12 {
        0.0
    } else {
        round_float(x)
    }
}

pub fn spectrum_json(s: &Spectrum) -> Value {
    let values: Vec<Value> = match s {
        Spectrum::Exact { values, .. } => values.iter().map(|&v| json!(v)).collect(),
        Spectrum::Numeric { values, .. } => values
            .iter()
            .map(|z| json!([snap(z.re), snap(z.im)]))
            .collect(),
    };
    json!({
        "n": s.order(),
        "variant": if s.is_exact() { "exact" } else { "numeric" },
        "values": values,
    })
}

/// Everything known about one circulant graph.
#[derive(Debug, Clone)]
pub struct AnalysisBundle {
    pub graph: CirculantGraph,
    pub spectrum: Spectrum,
    pub bipartite_bfs: bool,
    /// `None` when the graph is disconnected or edgeless.
    pub bipartite_spectral: Option<bool>,
    /// `None` unless the graph is integral, connected and has edges; then the
    /// inner option is the witness residue `ℓ0`, if any.
    pub bipartite_divisor: Option<Option<u64>>,
    /// Bound check, for connected integral graphs.
    pub diameter_report: Option<DiameterReport>,
    pub diameter: crate::diameter::Diameter,
    /// Heuristic rationality probe, for non-integral graphs with at least
    /// four distinct eigenvalues.
    pub ratio_condition: Option<bool>,
    pub evolution: EvolutionReport,
}

/// Options for [`analyze`].
#[derive(Debug, Clone, Copy, Default)]
pub struct AnalyzeOptions {
    /// Run a PST search with this denominator bound.
    pub pst_max_q: Option<u64>,
    pub seed: u64,
}

pub fn analyze(g: &CirculantGraph, opts: AnalyzeOptions) -> AnalysisBundle {
    let spec = spectrum(g);
    let connected = g.is_connected();
    let has_edges = g.degree() > 0;
    let decomposition = g.integrality_decomposition();
    let bipartite_spectral =
        (connected && has_edges).then(|| is_bipartite_spectral(&spec, g.degree()));
    let bipartite_divisor = match &decomposition {
        Some(d) if connected && has_edges => Some(bipartite_divisor_test(d)),
        _ => None,
    };
    let diameter_report = match &decomposition {
        Some(d) if connected => check_diameter_bounds(d).ok(),
        _ => None,
    };
    let ratio_condition = if decomposition.is_none() {
        ratio_condition_numeric_seeded(&spec, 1_000_000, opts.seed).ok()
    } else {
        None
    };
    AnalysisBundle {
        graph: g.clone(),
        bipartite_bfs: g.is_bipartite_bfs(),
        bipartite_spectral,
        bipartite_divisor,
        diameter_report,
        diameter: diameter_sumset(g),
        ratio_condition,
        evolution: evolution_report(g, opts.pst_max_q),
        spectrum: spec,
    }
}

impl AnalysisBundle {
    /// The three bipartiteness verdicts agree and the diameter bounds hold.
    pub fn is_consistent(&self) -> bool {
        let spectral_ok = self
            .bipartite_spectral
            .is_none_or(|b| b == self.bipartite_bfs);
        let divisor_ok = self
            .bipartite_divisor
            .is_none_or(|l| l.is_some() == self.bipartite_bfs);
        let bounds_ok = self
            .diameter_report
            .as_ref()
            .is_none_or(DiameterReport::bounds_hold);
        spectral_ok && divisor_ok && bounds_ok
    }

    pub fn to_json(&self) -> Value {
        let diameter = match &self.diameter_report {
            Some(r) => to_value(r),
            None => json!({
                "n": self.graph.order(),
                "D": Value::Null,
                "diameter": self.diameter,
                "t": Value::Null,
                "lower_ok": Value::Null,
                "upper_ok": Value::Null,
            }),
        };
        json!({
            "graph": graph_json(&self.graph),
            "integrality": self.evolution.divisor_set,
            "spectrum": spectrum_json(&self.spectrum),
            "bipartite": {
                "bfs": self.bipartite_bfs,
                "spectral": self.bipartite_spectral,
                "divisor_test": self.bipartite_divisor.map(|l| l.is_some()),
                "l0": self.bipartite_divisor.flatten(),
            },
            "diameter": diameter,
            "ratio_condition": self.ratio_condition,
            "evolution": to_value(&self.evolution),
            "consistent": self.is_consistent(),
        })
    }
}

pub fn enumeration_json(n: u64, candidates: &[IntegralCandidate]) -> Value {
    json!({
        "n": n,
        "graphs": candidates
            .iter()
            .map(|c| json!({ "D": c.divisors.members(), "degree": c.degree }))
            .collect::<Vec<_>>(),
    })
}

pub fn enumeration_csv(n: u64, candidates: &[IntegralCandidate]) -> String {
    let mut out = String::from("n,D,degree\n");
    for c in candidates {
        out.push_str(&format!(
            "{n},{},{}\n",
            join(c.divisors.members()),
            c.degree
        ));
    }
    out
}

fn join(xs: &[u64]) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

/// Degree table as CSV; the first line is a comment recording the cap.
pub fn table_csv(rows: &[(u64, Option<ExtremalRecord>)], cap: u64) -> String {
    let mut out = format!("# maximum order within cap={cap}\nk,N,n,D,cap\n");
    for (k, rec) in rows {
        match rec {
            Some(r) => out.push_str(&format!(
                "{k},{},{},{},{cap}\n",
                r.max_order,
                r.witness.modulus(),
                join(r.witness.members())
            )),
            None => out.push_str(&format!("{k},,,,{cap}\n")),
        }
    }
    out
}

pub fn table_json(rows: &[(u64, Option<ExtremalRecord>)], cap: u64) -> Value {
    json!({
        "cap": cap,
        "rows": rows
            .iter()
            .map(|(k, rec)| match rec {
                Some(r) => json!({
                    "k": k,
                    "N": r.max_order,
                    "n": r.witness.modulus(),
                    "D": r.witness.members(),
                    "cap": cap,
                }),
                None => json!({ "k": k, "N": Value::Null, "n": Value::Null, "D": Value::Null, "cap": cap }),
            })
            .collect::<Vec<_>>(),
    })
}
