//! File formats and text forms: the JSON function spec, the JSON circuit
//! document, and the plain-text algebraic cascade word.

use serde::{Deserialize, Serialize};

use crate::cascade::{Cascade, Cell};
use crate::lowering::{Circuit, Gate};
use crate::spectral::{signed_residue, TruthVector};
use crate::{Error, Result};

/// Input function specification: a k-valued function of n binary variables.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FunctionSpec {
    pub k: usize,
    pub n: usize,
    pub outputs: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl FunctionSpec {
    pub fn to_truth_vector(&self) -> Result<TruthVector> {
        TruthVector::new(self.k, self.n, self.outputs.clone())
    }

    pub fn from_truth_vector(f: &TruthVector, name: Option<String>) -> Self {
        Self { k: f.k(), n: f.n(), outputs: f.values().to_vec(), name }
    }
}

#[derive(Debug, Clone, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct Provenance {
    pub tool_version: String,
    pub source_spec: String,
    pub pass_log: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum GateDoc {
    Not { ctrl: usize },
    Swap { r1: usize, r2: usize },
    Cswap { ctrl: usize, r1: usize, r2: usize },
}

/// On-disk circuit form; validates against the [`Circuit`] invariants on
/// load.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CircuitDocument {
    pub k: usize,
    pub n: usize,
    pub init: Vec<usize>,
    pub output_rail: usize,
    pub gates: Vec<GateDoc>,
    pub provenance: Provenance,
}

impl CircuitDocument {
    pub fn from_circuit(circ: &Circuit, provenance: Provenance) -> Self {
        let gates = circ
            .gates()
            .iter()
            .map(|g| match *g {
                Gate::Not { ctrl } => GateDoc::Not { ctrl },
                Gate::Swap { r1, r2 } => GateDoc::Swap { r1, r2 },
                Gate::CSwap { ctrl, r1, r2 } => GateDoc::Cswap { ctrl, r1, r2 },
            })
            .collect();
        Self {
            k: circ.k(),
            n: circ.n(),
            init: circ.init().to_vec(),
            output_rail: circ.output_rail(),
            gates,
            provenance,
        }
    }

    pub fn to_circuit(&self) -> Result<Circuit> {
        let gates = self
            .gates
            .iter()
            .map(|g| match *g {
                GateDoc::Not { ctrl } => Gate::Not { ctrl },
                GateDoc::Swap { r1, r2 } => Gate::Swap { r1, r2 },
                GateDoc::Cswap { ctrl, r1, r2 } => Gate::CSwap { ctrl, r1, r2 },
            })
            .collect();
        Circuit::new(self.k, self.n, gates, self.init.clone(), self.output_rail)
    }
}

/// Unknown-field policy when loading JSON documents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FieldPolicy {
    /// Unknown fields are an error.
    Strict,
    /// Unknown fields are ignored; their paths are returned as warnings.
    #[default]
    Lenient,
}

fn check_keys(
    value: &serde_json::Value,
    known: &[&str],
    path: &str,
    warnings: &mut Vec<String>,
) -> Result<()> {
    if let serde_json::Value::Object(map) = value {
        for key in map.keys() {
            if !known.contains(&key.as_str()) {
                warnings.push(format!("unknown field `{path}{key}`"));
            }
        }
    }
    Ok(())
}

fn parse_with_policy<T: for<'de> Deserialize<'de>>(
    text: &str,
    policy: FieldPolicy,
    collect: impl Fn(&serde_json::Value, &mut Vec<String>) -> Result<()>,
) -> Result<(T, Vec<String>)> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    let mut warnings = Vec::new();
    collect(&value, &mut warnings)?;
    if policy == FieldPolicy::Strict && !warnings.is_empty() {
        return Err(Error::Format(warnings.join("; ")));
    }
    let parsed = serde_json::from_value(value).map_err(|e| Error::Format(e.to_string()))?;
    Ok((parsed, warnings))
}

pub fn load_function_spec(text: &str, policy: FieldPolicy) -> Result<(FunctionSpec, Vec<String>)> {
    parse_with_policy(text, policy, |value, warnings| {
        check_keys(value, &["k", "n", "outputs", "name"], "", warnings)
    })
}

pub fn load_circuit_document(
    text: &str,
    policy: FieldPolicy,
) -> Result<(CircuitDocument, Vec<String>)> {
    parse_with_policy(text, policy, |value, warnings| {
        check_keys(
            value,
            &["k", "n", "init", "output_rail", "gates", "provenance"],
            "",
            warnings,
        )?;
        if let Some(serde_json::Value::Array(gates)) = value.get("gates") {
            for (i, gate) in gates.iter().enumerate() {
                check_keys(gate, &["op", "ctrl", "r1", "r2"], &format!("gates[{i}]."), warnings)?;
            }
        }
        if let Some(prov) = value.get("provenance") {
            check_keys(
                prov,
                &["tool_version", "source_spec", "pass_log"],
                "provenance.",
                warnings,
            )?;
        }
        Ok(())
    })
}

pub fn to_json(value: &impl Serialize) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("serializable");
    out.push('\n');
    out
}

fn a_token(exp: usize, k: usize, signed: bool) -> String {
    let shown = if signed { signed_residue(exp, k) } else { exp as i64 };
    if (0..=9).contains(&shown) {
        format!("a^{shown}")
    } else {
        format!("a^{{{shown}}}")
    }
}

fn g_token(controls: u32) -> String {
    if controls == 0 {
        return "g".to_string();
    }
    let vars: Vec<String> = (0..32)
        .filter(|v| controls & (1 << v) != 0)
        .map(|v| format!("x{}", v + 1))
        .collect();
    format!("g^{{{}}}", vars.join("+"))
}

/// Plain-text algebraic form of a cascade word, e.g.
/// `g^{x3} a^1 g^{x2+x3} a^1 g^{x1+x2} a^1`. The empty word renders as `I`.
pub fn render_word(c: &Cascade, signed: bool) -> String {
    if c.cells().is_empty() {
        return "I".to_string();
    }
    c.cells()
        .iter()
        .map(|cell| match cell {
            Cell::A { exp } => a_token(*exp, c.k(), signed),
            Cell::G { controls } => g_token(*controls),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cascade::build_canonical;
    use crate::rewrite::optimize;
    use crate::spectral::{spectrum, TruthVector};

    fn optimized_word(k: usize, n: usize, outputs: Vec<usize>, signed: bool) -> String {
        let f = TruthVector::new(k, n, outputs).unwrap();
        let (opt, _) = optimize(&build_canonical(&spectrum(&f).unwrap()));
        render_word(&opt, signed)
    }

    #[test]
    fn golden_words() {
        assert_eq!(optimized_word(3, 1, vec![1, 2], true), "g^{x1} a^1");
        assert_eq!(optimized_word(3, 2, vec![0, 1, 1, 0], true), "a^{-1} g^{x1+x2} a^1");
        assert_eq!(
            optimized_word(3, 3, vec![0, 1, 1, 2, 1, 2, 2, 0], true),
            "g^{x3} a^1 g^{x2+x3} a^1 g^{x1+x2} a^1"
        );
    }

    #[test]
    fn unsigned_display() {
        assert_eq!(optimized_word(3, 2, vec![0, 1, 1, 0], false), "a^2 g^{x1+x2} a^1");
    }

    #[test]
    fn empty_word_renders_identity() {
        assert_eq!(optimized_word(3, 1, vec![0, 0], true), "I");
    }

    #[test]
    fn spec_round_trip() {
        let spec = FunctionSpec { k: 3, n: 2, outputs: vec![0, 1, 1, 0], name: Some("xor".into()) };
        let text = to_json(&spec);
        let (loaded, warnings) = load_function_spec(&text, FieldPolicy::Strict).unwrap();
        assert_eq!(loaded, spec);
        assert!(warnings.is_empty());
        assert_eq!(to_json(&loaded), text);
    }

    #[test]
    fn unknown_fields_policy() {
        let text = r#"{"k": 3, "n": 1, "outputs": [1, 2], "extra": true}"#;
        assert!(load_function_spec(text, FieldPolicy::Strict).is_err());
        let (spec, warnings) = load_function_spec(text, FieldPolicy::Lenient).unwrap();
        assert_eq!(spec.outputs, vec![1, 2]);
        assert_eq!(warnings, vec!["unknown field `extra`"]);
    }

    #[test]
    fn truncated_json_is_a_format_error() {
        let text = r#"{"k": 3, "n": 1, "outputs": [1"#;
        assert!(matches!(
            load_function_spec(text, FieldPolicy::Lenient),
            Err(Error::Format(_))
        ));
    }

    #[test]
    fn circuit_document_round_trip() {
        let f = TruthVector::new(3, 2, vec![0, 1, 1, 0]).unwrap();
        let (opt, _) = optimize(&build_canonical(&spectrum(&f).unwrap()));
        let circ = crate::lowering::lower(&opt);
        let doc = CircuitDocument::from_circuit(
            &circ,
            Provenance {
                tool_version: "0.1.0".into(),
                source_spec: "xor.json".into(),
                pass_log: vec!["optimize".into()],
            },
        );
        let text = to_json(&doc);
        let (loaded, _) = load_circuit_document(&text, FieldPolicy::Strict).unwrap();
        assert_eq!(loaded, doc);
        assert_eq!(to_json(&loaded), text);
        assert_eq!(loaded.to_circuit().unwrap(), circ);
    }

    #[test]
    fn circuit_document_validates_on_load() {
        let text = r#"{
            "k": 3, "n": 1, "init": [0, 0, 1], "output_rail": 0,
            "gates": [], "provenance": {"tool_version": "", "source_spec": "", "pass_log": []}
        }"#;
        let (doc, _) = load_circuit_document(text, FieldPolicy::Strict).unwrap();
        assert!(doc.to_circuit().is_err());
    }
}
