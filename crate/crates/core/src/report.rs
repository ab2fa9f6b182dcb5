//! JSON file formats and construction reports.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::code::{GrsSpec, LinearCode};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::params::EaqeccParams;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldFile {
    pub p: u32,
    pub m: u32,
    pub modulus: Vec<u32>,
}

impl FieldFile {
    pub fn of(f: &Field) -> FieldFile {
        FieldFile { p: f.characteristic(), m: f.degree(), modulus: f.modulus().to_vec() }
    }

    pub fn build(&self) -> Result<Field> {
        Field::new(self.p, self.m, Some(self.modulus.clone()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixKind {
    Generator,
    Parity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeFile {
    pub field: FieldFile,
    pub kind: MatrixKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub matrix: Vec<Vec<u32>>,
}

impl CodeFile {
    /// Canonical generator form of a code.
    pub fn of(code: &LinearCode) -> CodeFile {
        CodeFile {
            field: FieldFile::of(code.field()),
            kind: MatrixKind::Generator,
            n: Some(code.n()),
            matrix: code.generator().to_rows(),
        }
    }

    pub fn matrix(&self, field: &Field) -> Result<Matrix> {
        let cols = match (self.n, self.matrix.first()) {
            (Some(n), _) => n,
            (None, Some(r)) => r.len(),
            (None, None) => return Err(Error::Parse("empty matrix without `n`".into())),
        };
        for (i, r) in self.matrix.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Parse(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            if let Some(&x) = r.iter().find(|&&x| x >= field.order()) {
                return Err(Error::Parse(format!("row {i}: entry {x} is not a field element")));
            }
        }
        Matrix::from_rows(field, cols, &self.matrix)
    }

    pub fn build(&self) -> Result<LinearCode> {
        let field = self.field.build()?;
        let m = self.matrix(&field)?;
        match self.kind {
            MatrixKind::Generator => LinearCode::from_generator(&m),
            MatrixKind::Parity => Ok(LinearCode::from_parity(&m)),
        }
    }

    /// True when the stored matrix is the canonical RREF generator.
    pub fn is_canonical(&self) -> Result<bool> {
        let field = self.field.build()?;
        let m = self.matrix(&field)?;
        Ok(self.kind == MatrixKind::Generator && m.row_basis() == m)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrsFile {
    pub field: FieldFile,
    pub k: usize,
    pub gamma: Vec<u32>,
    pub w: Vec<u32>,
}

impl GrsFile {
    pub fn of(spec: &GrsSpec) -> GrsFile {
        GrsFile {
            field: FieldFile::of(&spec.field),
            k: spec.k,
            gamma: spec.gamma.clone(),
            w: spec.w.clone(),
        }
    }

    pub fn build(&self) -> Result<GrsSpec> {
        GrsSpec::new(&self.field.build()?, self.k, self.gamma.clone(), self.w.clone())
    }
}

/// A claimed-versus-computed comparison.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Claim {
    pub name: String,
    pub claimed: Value,
    pub computed: Value,
    #[serde(rename = "match")]
    pub matches: bool,
}

impl Claim {
    pub fn new(name: &str, claimed: impl Serialize, computed: impl Serialize) -> Claim {
        let claimed = serde_json::to_value(claimed).expect("serializable claim");
        let computed = serde_json::to_value(computed).expect("serializable claim");
        Claim { name: name.into(), matches: claimed == computed, claimed, computed }
    }

    /// Claim that `computed` lies in `[lo, hi]`.
    pub fn window(name: &str, lo: usize, hi: usize, computed: Option<usize>) -> Claim {
        Claim {
            name: name.into(),
            claimed: serde_json::json!([lo, hi]),
            computed: serde_json::to_value(computed).unwrap(),
            matches: computed.is_some_and(|d| lo <= d && d <= hi),
        }
    }
}

/// Known discrepancies between stated formulas and computed values.
pub const WHITELISTED_CLAIMS: &[&str] = &["dual_ebits_formula"];

/// Claims that are informative only.
pub const ADVISORY_CLAIMS: &[&str] = &["predicted_hull", "closed_form_hull", "rs_params_formula"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Strict,
    Audit,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "strict" => Ok(Mode::Strict),
            "audit" => Ok(Mode::Audit),
            other => Err(Error::Parse(format!("unknown mode `{other}`"))),
        }
    }
}

/// One row of a per-k hull table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HullRow {
    pub k: usize,
    pub hull: usize,
    pub hull_by_rank: usize,
    pub delta: Option<i64>,
    pub predicted_case: Option<u8>,
    pub predicted_delta: Option<i64>,
    pub eaqecc: EaqeccParams,
    pub eaqecc_dual: EaqeccParams,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConstructionReport {
    pub construction: String,
    pub params: BTreeMap<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<Value>,
    pub witnesses: BTreeMap<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output_code: Option<CodeFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eaqecc: Option<EaqeccParams>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eaqecc_dual: Option<EaqeccParams>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<HullRow>>,
    pub claims: Vec<Claim>,
}

impl ConstructionReport {
    pub fn new(construction: &str) -> ConstructionReport {
        ConstructionReport {
            construction: construction.into(),
            params: BTreeMap::new(),
            input: None,
            witnesses: BTreeMap::new(),
            output_code: None,
            eaqecc: None,
            eaqecc_dual: None,
            table: None,
            claims: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, v: impl Serialize) -> &mut Self {
        self.params.insert(key.into(), serde_json::to_value(v).unwrap());
        self
    }

    pub fn witness(&mut self, key: &str, v: impl Serialize) -> &mut Self {
        self.witnesses.insert(key.into(), serde_json::to_value(v).unwrap());
        self
    }

    pub fn claim(&mut self, c: Claim) -> &mut Self {
        self.claims.push(c);
        self
    }

    /// Claims that fail strict mode.
    pub fn blocking_mismatches(&self) -> Vec<&Claim> {
        self.claims
            .iter()
            .filter(|c| !c.matches)
            .filter(|c| !WHITELISTED_CLAIMS.contains(&c.name.as_str()))
            .filter(|c| !ADVISORY_CLAIMS.contains(&c.name.as_str()))
            .collect()
    }

    pub fn enforce(&self, mode: Mode) -> Result<()> {
        match (mode, self.blocking_mismatches().first()) {
            (Mode::Strict, Some(c)) => Err(Error::ClaimMismatch(format!(
                "{}: claimed {}, computed {}",
                c.name, c.claimed, c.computed
            ))),
            _ => Ok(()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn from_json(s: &str) -> Result<ConstructionReport> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Path of the first difference between two JSON trees, if any.
pub fn first_difference(a: &Value, b: &Value) -> Option<String> {
    fn walk(a: &Value, b: &Value, path: &mut String) -> bool {
        match (a, b) {
            (Value::Object(x), Value::Object(y)) => {
                let keys: std::collections::BTreeSet<&String> = x.keys().chain(y.keys()).collect();
                for key in keys {
                    let len = path.len();
                    if !path.is_empty() {
                        path.push('.');
                    }
                    path.push_str(key);
                    match (x.get(key), y.get(key)) {
                        (Some(u), Some(v)) => {
                            if walk(u, v, path) {
                                return true;
                            }
                        }
                        _ => return true,
                    }
                    path.truncate(len);
                }
                false
            }
            (Value::Array(x), Value::Array(y)) => {
                for (i, (u, v)) in x.iter().zip(y).enumerate() {
                    let len = path.len();
                    path.push_str(&format!("[{i}]"));
                    if walk(u, v, path) {
                        return true;
                    }
                    path.truncate(len);
                }
                if x.len() != y.len() {
                    path.push_str(&format!("[{}]", x.len().min(y.len())));
                    return true;
                }
                false
            }
            _ => a != b,
        }
    }
    let mut path = String::new();
    walk(a, b, &mut path).then_some(path)
}

/// Every path to a number or boolean leaf.
pub fn scalar_leaves(v: &Value) -> Vec<String> {
    fn walk(v: &Value, path: &str, out: &mut Vec<String>) {
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    let p = if path.is_empty() { k.clone() } else { format!("{path}.{k}") };
                    walk(x, &p, out);
                }
            }
            Value::Array(a) => {
                for (i, x) in a.iter().enumerate() {
                    walk(x, &format!("{path}[{i}]"), out);
                }
            }
            Value::Number(_) | Value::Bool(_) => out.push(path.to_string()),
            _ => {}
        }
    }
    let mut out = Vec::new();
    walk(v, "", &mut out);
    out
}

/// Mutable access to the leaf at a path produced by [`scalar_leaves`].
pub fn leaf_mut<'a>(v: &'a mut Value, path: &str) -> Option<&'a mut Value> {
    let mut cur = v;
    for seg in path.split('.') {
        let (name, rest) = match seg.find('[') {
            Some(i) => (&seg[..i], &seg[i..]),
            None => (seg, ""),
        };
        if !name.is_empty() {
            cur = cur.get_mut(name)?;
        }
        for idx in rest.split(['[', ']']).filter(|s| !s.is_empty()) {
            cur = cur.get_mut(idx.parse::<usize>().ok()?)?;
        }
    }
    Some(cur)
}

/// Changes one scalar leaf: numbers are incremented, booleans flipped.
pub fn tamper_leaf(v: &mut Value, path: &str) -> bool {
    let Some(leaf) = leaf_mut(v, path) else {
        return false;
    };
    match leaf {
        Value::Bool(b) => *b = !*b,
        Value::Number(n) => {
            *leaf = if let Some(i) = n.as_i64() {
                Value::from(i + 1)
            } else if let Some(u) = n.as_u64() {
                Value::from(u.wrapping_add(1))
            } else {
                return false;
            }
        }
        _ => return false,
    }
    true
}
