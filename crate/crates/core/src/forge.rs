//! Report-level driver: run a named construction, derive parameters from a
//! code file, summarise a code, verify a stored report, and tabulate the
//! realizable MDS GRS families at a given `q`.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::code::LinearCode;
use crate::construct::{self, grs_hull_family, grs_mds_extend, realize_candidate, grs_candidates};
use crate::error::{Error, Result};
use crate::linalg::Form;
use crate::params::eaqecc_from_hull;
use crate::report::{first_difference, Claim, CodeFile, ConstructionReport, GrsFile};

pub const CONSTRUCTIONS: &[&str] = &[
    "extend-e-multi",
    "extend-e-single",
    "extend-h-multi",
    "extend-h-single",
    "grs-mds",
    "grs-hull",
    "lcd-maximal",
    "cyclic-mds-lcd",
    "lcd-expand",
];

/// Construction parameters. Only the ones a construction reads are stored
/// in its report.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<Form>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extra_point: Option<bool>,
}

fn need<T: Copy>(v: Option<T>, name: &str) -> Result<T> {
    v.ok_or_else(|| Error::Precondition(format!("missing parameter --{name}")))
}

fn code_input(input: Option<&Value>) -> Result<LinearCode> {
    let v = input.ok_or_else(|| Error::Precondition("missing --input".into()))?;
    let file: CodeFile =
        serde_json::from_value(v.clone()).map_err(|e| Error::Parse(format!("code file: {e}")))?;
    file.build()
}

/// Runs a construction by name.
pub fn run(name: &str, p: &Params, input: Option<&Value>, budget: u64) -> Result<ConstructionReport> {
    match name {
        "derive" => derive(&code_input(input)?, p.form.unwrap_or(Form::Euclidean), budget),
        "extend-e-multi" => construct::extend_euclidean_multi(&code_input(input)?, need(p.c, "c")?, budget),
        "extend-e-single" => construct::extend_euclidean_single(&code_input(input)?, need(p.c, "c")?, budget),
        "extend-h-multi" => construct::extend_hermitian_multi(&code_input(input)?, need(p.c, "c")?, budget),
        "extend-h-single" => construct::extend_hermitian_single(&code_input(input)?, need(p.c, "c")?, budget),
        "grs-mds" => {
            let v = input.ok_or_else(|| Error::Precondition("missing --input".into()))?;
            let file: GrsFile = serde_json::from_value(v.clone())
                .map_err(|e| Error::Parse(format!("GRS file: {e}")))?;
            grs_mds_extend(&file.build()?, budget)
        }
        "grs-hull" => grs_hull_family(need(p.q, "q")?, need(p.r, "r")?, p.extra_point.unwrap_or(false), budget),
        "lcd-maximal" => construct::lcd_maximal(&code_input(input)?, budget),
        "cyclic-mds-lcd" => construct::cyclic_mds_lcd(need(p.q, "q")?, need(p.k, "k")?, budget),
        "lcd-expand" => construct::lcd_s_expand(&code_input(input)?, need(p.s, "s")?, budget),
        other => Err(Error::UnknownConstruction(other.into())),
    }
}

/// Both hull-derived EAQECCs of a code as a report.
pub fn derive(code: &LinearCode, form: Form, budget: u64) -> Result<ConstructionReport> {
    let mut rep = ConstructionReport::new("derive");
    rep.param("form", form);
    rep.input = Some(serde_json::to_value(CodeFile::of(code)).unwrap());
    construct::attach_output(&mut rep, code, form, budget)?;
    let hull = code.hull_dim(form)?;
    let by_rank = code.n() - code.k() - code.parity().gram_rank(form, None)?;
    let ea = rep.eaqecc.clone().unwrap();
    let dual = rep.eaqecc_dual.clone().unwrap();
    rep.witness("hull", hull);
    rep.claim(Claim::new("hull_by_rank", hull, by_rank))
        .claim(Claim::new("singleton", true, ea.flags.singleton != crate::params::Singleton::Violated))
        .claim(Claim::new("dual_singleton", true, dual.flags.singleton != crate::params::Singleton::Violated));
    Ok(rep)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeInfo {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d_note: Option<String>,
    pub hull_e: usize,
    pub dual_containing: bool,
    pub lcd: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hull_h: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual_containing_h: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lcd_h: Option<bool>,
}

pub fn code_info(code: &LinearCode, budget: u64) -> Result<CodeInfo> {
    let (d, d_note) = match code.min_distance(budget) {
        Ok(d) => (d, None),
        Err(Error::BudgetExceeded { lower, upper }) => {
            (None, Some(format!("budget exceeded, {lower} <= d <= {upper}")))
        }
        Err(e) => return Err(e),
    };
    let hermitian = code.field().hermitian_base().is_ok();
    let h = |f: fn(&LinearCode) -> Result<bool>| -> Result<Option<bool>> {
        if hermitian {
            f(code).map(Some)
        } else {
            Ok(None)
        }
    };
    Ok(CodeInfo {
        q: code.field().order(),
        n: code.n(),
        k: code.k(),
        d,
        d_note,
        hull_e: code.hull_dim(Form::Euclidean)?,
        dual_containing: code.is_dual_containing(Form::Euclidean)?,
        lcd: code.is_lcd(Form::Euclidean)?,
        hull_h: if hermitian { Some(code.hull_dim(Form::Hermitian)?) } else { None },
        dual_containing_h: h(|c| c.is_dual_containing(Form::Hermitian))?,
        lcd_h: h(|c| c.is_lcd(Form::Hermitian))?,
    })
}

impl fmt::Display for CodeInfo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} k={}", self.n, self.k)?;
        match self.d {
            Some(d) => write!(f, " d={d}")?,
            None => write!(f, " d=?")?,
        }
        write!(f, " hull_e={}", self.hull_e)?;
        if self.dual_containing {
            write!(f, " dual_containing=true")?;
        }
        write!(f, " lcd={}", self.lcd)?;
        if let (Some(h), Some(dc), Some(l)) = (self.hull_h, self.dual_containing_h, self.lcd_h) {
            write!(f, " hull_h={h} dual_containing_h={dc} lcd_h={l}")?;
        }
        if let Some(note) = &self.d_note {
            write!(f, " ({note})")?;
        }
        Ok(())
    }
}

fn diverged(path: String) -> Error {
    Error::VerificationFailed(path)
}

/// Recomputes a stored report from its own input and parameters.
/// Succeeds only when every stored value is reproduced.
pub fn verify(json: &str, budget: u64) -> Result<()> {
    let stored: Value = serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
    let report = ConstructionReport::from_json(json)?;

    if let Some(input) = &report.input {
        if input.get("kind").is_some() {
            let file: CodeFile = serde_json::from_value(input.clone())
                .map_err(|_| diverged("input".into()))?;
            if !file.is_canonical().map_err(|_| diverged("input.matrix".into()))? {
                return Err(diverged("input.matrix".into()));
            }
        }
    }
    if let Some(out) = &report.output_code {
        if !out.is_canonical().map_err(|_| diverged("output_code.matrix".into()))? {
            return Err(diverged("output_code.matrix".into()));
        }
        let form = report
            .params
            .get("form")
            .map(|f| serde_json::from_value::<Form>(f.clone()))
            .transpose()
            .map_err(|_| diverged("params.form".into()))?
            .unwrap_or(Form::Euclidean);
        let code = out.build().map_err(|_| diverged("output_code".into()))?;
        let (p, d) = eaqecc_from_hull(&code, form, budget)
            .map_err(|e| diverged(format!("output_code: {e}")))?;
        for (key, fresh) in [("eaqecc", p), ("eaqecc_dual", d)] {
            let old = stored.get(key).cloned().unwrap_or(Value::Null);
            let fresh = serde_json::to_value(fresh).unwrap();
            if let Some(path) = first_difference(&old, &fresh) {
                return Err(diverged(if path.is_empty() { key.into() } else { format!("{key}.{path}") }));
            }
        }
    }

    let params: Params = serde_json::from_value(Value::Object(report.params.clone().into_iter().collect()))
        .map_err(|_| diverged("params".into()))?;
    let rerun = run(&report.construction, &params, report.input.as_ref(), budget)
        .map_err(|e| diverged(format!("construction: {e}")))?;
    let fresh = serde_json::to_value(&rerun).unwrap();
    match first_difference(&stored, &fresh) {
        Some(path) => Err(diverged(path)),
        None => Ok(()),
    }
}

/// One `[[n, k, d; c]]_q` row of the MDS GRS table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub q: u32,
    pub n: usize,
    pub k: i64,
    pub d: usize,
    pub c: usize,
    pub mds: bool,
    pub maximal: bool,
    pub source_construction: String,
}

pub const CSV_HEADER: &str = "q,n,k,d,c,mds,maximal,source_construction";

impl TableRow {
    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.q, self.n, self.k, self.d, self.c, self.mds, self.maximal, self.source_construction
        )
    }
}

fn rows_of(rep: &ConstructionReport, source: &str, out: &mut Vec<TableRow>) {
    let mut push = |p: &crate::params::EaqeccParams| {
        if let (Some(d), true) = (p.d, p.k > 0) {
            out.push(TableRow {
                q: p.q,
                n: p.n,
                k: p.k,
                d,
                c: p.c,
                mds: p.is_mds(),
                maximal: p.flags.maximal,
                source_construction: source.into(),
            });
        }
    };
    if let Some(t) = &rep.table {
        for row in t {
            push(&row.eaqecc);
            push(&row.eaqecc_dual);
        }
    }
    for p in rep.eaqecc.iter().chain(&rep.eaqecc_dual) {
        push(p);
    }
}

/// A report kept by [`tabulate_mds_grs`], or the reason one was skipped.
pub enum TableSource {
    Report(String, ConstructionReport),
    Skipped(String, Error),
}

/// MDS EAQECCs from the one-ebit GRS extension of every realizable
/// dual-containing candidate and from the GRS hull families at `q`. Every
/// report is verified before its rows are kept; rows are sorted and
/// deduplicated by parameters.
pub fn tabulate_mds_grs(q: u32, budget: u64) -> Result<(Vec<TableRow>, Vec<TableSource>)> {
    let mut sources = Vec::new();
    let keep = |label: String, rep: Result<ConstructionReport>, sources: &mut Vec<TableSource>| {
        match rep.and_then(|r| verify(&r.to_json(), budget).map(|_| r)) {
            Ok(r) => sources.push(TableSource::Report(label, r)),
            Err(e) => sources.push(TableSource::Skipped(label, e)),
        }
    };
    for cand in grs_candidates(q) {
        let label = format!("grs-mds/row{}/n{}k{}", cand.row, cand.n, cand.k);
        let rep = realize_candidate(&cand).and_then(|(spec, _)| {
            let input = serde_json::to_value(GrsFile::of(&spec)).unwrap();
            run("grs-mds", &Params::default(), Some(&input), budget)
        });
        keep(label, rep, &mut sources);
    }
    for r in (1..=q as usize + 1).filter(|&r| num_integer::gcd(r, q as usize) == 1) {
        for extra in [false, true] {
            let label = format!("grs-hull/r{r}{}", if extra { "+0" } else { "" });
            let p = Params { q: Some(q), r: Some(r), extra_point: Some(extra), ..Params::default() };
            keep(label, run("grs-hull", &p, None, budget), &mut sources);
        }
    }
    let mut rows = Vec::new();
    for s in &sources {
        if let TableSource::Report(label, rep) = s {
            rows_of(rep, label, &mut rows);
        }
    }
    rows.retain(|r| r.mds);
    rows.sort_by_key(|a| (a.n, a.k, a.c, a.d));
    rows.dedup_by(|a, b| (a.n, a.k, a.d, a.c) == (b.n, b.k, b.d, b.c));
    Ok((rows, sources))
}
