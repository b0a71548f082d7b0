//! Scenario registry, orchestration of the checks and certificate emission.
//!
//! A scenario is a JSON document `{id, statement, field, vars, inputs, expected}`.
//! Running it evaluates every expected value with the library and produces a
//! [`Certificate`] whose JSON form has sorted keys.

mod pencil;
mod scenarios;

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::arith::{fmt_rat, parse_rat, NumberField};
use crate::curves::ProjPoint;
use crate::error::Error;
use crate::ideals::Budget;
use crate::poly::{parse_element, MonomialOrder, MultiPoly, PolyRing};

pub use pencil::{
    configuration_holds, falsify_pencil, long_run, member, LongRunReport, PencilConfiguration, PencilReport, PencilSample,
};

/// Failures of the harness itself, as opposed to failed checks.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("unknown scenario `{0}`")]
    UnknownScenario(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("i/o: {0}")]
    Io(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Provenance {
    #[serde(rename = "PAPER")]
    Paper,
    #[serde(rename = "TRIVIAL")]
    Trivial,
    #[serde(rename = "DERIVED")]
    Derived,
}

/// How expected and computed values are brought to a common form before comparison.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ValueKind {
    #[default]
    Exact,
    /// Rational number or list of them, as `a/b` strings or integers.
    Rational,
    /// Set of projective points.
    Points,
    /// Set of field elements; `inf` is allowed.
    Elements,
    /// Multiset of arbitrary values.
    Unordered,
    /// Plane curve equation, up to a scalar.
    Curve,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Expected {
    pub name: String,
    pub value: Value,
    pub provenance: Provenance,
    #[serde(default)]
    pub kind: ValueKind,
    /// Non-gating: a failure is recorded but does not fail the scenario.
    #[serde(default)]
    pub optional: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Scenario {
    pub id: String,
    pub statement: String,
    pub field: String,
    #[serde(default)]
    pub vars: Vec<String>,
    #[serde(default)]
    pub inputs: BTreeMap<String, Value>,
    pub expected: Vec<Expected>,
}

const EMBEDDED: [&str; 14] = [
    include_str!("../../scenarios/quartic.json"),
    include_str!("../../scenarios/triple-root-criterion.json"),
    include_str!("../../scenarios/pencil.json"),
    include_str!("../../scenarios/falsify-pencil.json"),
    include_str!("../../scenarios/p138-invariants.json"),
    include_str!("../../scenarios/adjunction-searches.json"),
    include_str!("../../scenarios/bolza-curve.json"),
    include_str!("../../scenarios/weighted-bezout-m48.json"),
    include_str!("../../scenarios/mirror24.json"),
    include_str!("../../scenarios/conics.json"),
    include_str!("../../scenarios/quotient-map-61.json"),
    include_str!("../../scenarios/orbifold-W.json"),
    include_str!("../../scenarios/sd16.json"),
    include_str!("../../scenarios/quotient-invariants-s2.json"),
];

/// The built-in scenarios, in catalogue order.
pub fn catalogue() -> Vec<Scenario> {
    EMBEDDED
        .iter()
        .map(|text| serde_json::from_str(text).expect("embedded scenario is valid JSON"))
        .collect()
}

pub fn scenario(id: &str) -> Result<Scenario, CliError> {
    catalogue().into_iter().find(|s| s.id == id).ok_or_else(|| CliError::UnknownScenario(id.into()))
}

pub fn load_scenario(path: &Path) -> Result<Scenario, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let s: Scenario = serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    if !scenarios::RUNNERS.iter().any(|(id, _)| *id == s.id) {
        return Err(CliError::UnknownScenario(s.id));
    }
    Ok(s)
}

pub fn list() -> String {
    catalogue().iter().map(|s| format!("{:<26} {}\n", s.id, s.statement)).collect()
}

pub fn describe(s: &Scenario) -> String {
    let mut out = format!("{}\n  {}\n  field {}", s.id, s.statement, s.field);
    if !s.vars.is_empty() {
        out += &format!(", variables {}", s.vars.join(", "));
    }
    out += "\n  expected:\n";
    for e in &s.expected {
        let tag = match e.provenance {
            Provenance::Paper => "PAPER",
            Provenance::Trivial => "TRIVIAL",
            Provenance::Derived => "DERIVED",
        };
        out += &format!("    {:<34} {:<8} {}", e.name, tag, e.value);
        if e.optional {
            out += "  (optional)";
        }
        if let Some(n) = &e.note {
            out += &format!("  -- {n}");
        }
        out += "\n";
    }
    out
}

pub fn parse_field(decl: &str) -> Result<Arc<NumberField>, CliError> {
    match decl.replace(' ', "").as_str() {
        "Q" => Ok(NumberField::rationals()),
        "Q(sqrt(-2))" => Ok(NumberField::sqrt_minus_two()),
        "Q(zeta8)" => Ok(NumberField::cyclotomic8()),
        other => Err(CliError::Input(format!("unsupported field `{other}`"))),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckState {
    Pass,
    Fail,
    Indeterminate,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub computed: Value,
    pub state: CheckState,
    pub pass: bool,
    pub provenance: Provenance,
    pub optional: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BudgetRecord {
    pub max_pairs: usize,
    pub max_basis: usize,
    pub max_bits: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub scenario: String,
    pub statement: String,
    pub field: String,
    pub pass: bool,
    pub checks: Vec<Check>,
    pub observations: BTreeMap<String, Value>,
    pub timings: BTreeMap<String, f64>,
    pub budgets: BudgetRecord,
    pub optional_checks_run: bool,
}

impl Certificate {
    /// Canonical JSON: keys sorted at every level.
    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("certificate serializes");
        serde_json::to_string_pretty(&v).expect("value serializes")
    }

    pub fn failing(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.optional && !c.pass)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub budget: Budget,
    /// Run the expensive optional checks instead of skipping them.
    pub optional: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { budget: Budget::default(), optional: false }
    }
}

/// Value produced by a scenario for one expected name.
#[derive(Clone, Debug)]
pub(crate) enum Outcome {
    Value(Value),
    Indeterminate(String),
    Skipped(String),
    Failed(String),
}

/// Inputs and outputs of one scenario run.
pub(crate) struct Ctx<'a> {
    pub s: &'a Scenario,
    pub field: Arc<NumberField>,
    pub budget: Budget,
    pub optional: bool,
    out: BTreeMap<String, Outcome>,
    notes: BTreeMap<String, Value>,
    timings: BTreeMap<String, f64>,
}

impl Ctx<'_> {
    /// Polynomial ring over the scenario field in the scenario variables.
    pub fn ring(&self) -> Arc<PolyRing> {
        let names: Vec<&str> = self.s.vars.iter().map(|v| v.as_str()).collect();
        PolyRing::new(&self.field, &names, MonomialOrder::Grevlex)
    }

    pub fn input(&self, name: &str) -> crate::Result<&Value> {
        self.s.inputs.get(name).ok_or_else(|| Error::Missing(format!("input `{name}`")))
    }

    pub fn input_as<T: serde::de::DeserializeOwned>(&self, name: &str) -> crate::Result<T> {
        serde_json::from_value(self.input(name)?.clone())
            .map_err(|e| Error::Missing(format!("input `{name}` has the wrong shape: {e}")))
    }

    pub fn input_str(&self, name: &str) -> crate::Result<String> {
        self.input_as(name)
    }

    pub fn poly(&self, name: &str, ring: &Arc<PolyRing>) -> crate::Result<MultiPoly> {
        ring.parse(&self.input_str(name)?)
    }

    pub fn point(&self, name: &str) -> crate::Result<ProjPoint> {
        ProjPoint::parse(&self.input_str(name)?, &self.field)
    }

    pub fn set(&mut self, name: &str, v: impl Serialize) {
        let v = serde_json::to_value(v).expect("computed values serialize");
        self.out.insert(name.into(), Outcome::Value(v));
    }

    pub fn indeterminate(&mut self, name: &str, why: impl Into<String>) {
        self.out.insert(name.into(), Outcome::Indeterminate(why.into()));
    }

    pub fn skip(&mut self, name: &str, why: impl Into<String>) {
        self.out.insert(name.into(), Outcome::Skipped(why.into()));
    }

    pub fn fail(&mut self, name: &str, why: impl Into<String>) {
        self.out.insert(name.into(), Outcome::Failed(why.into()));
    }

    /// Records a budget error as indeterminate and any other error as a failure.
    pub fn set_result<T: Serialize>(&mut self, name: &str, r: crate::Result<T>) {
        match r {
            Ok(v) => self.set(name, v),
            Err(e) if e.is_budget() => self.indeterminate(name, e.to_string()),
            Err(e) => self.fail(name, e.to_string()),
        }
    }

    pub fn note(&mut self, name: &str, v: impl Serialize) {
        self.notes.insert(name.into(), serde_json::to_value(v).expect("observations serialize"));
    }

    pub fn time(&mut self, name: &str, since: Instant) {
        self.timings.insert(format!("{name}_ms"), since.elapsed().as_secs_f64() * 1e3);
    }
}

fn is_input_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Syntax { .. } | Error::UnknownSymbol(_) | Error::UnknownVariable(_) | Error::InvalidField(_) | Error::Missing(_)
    )
}

fn canon(kind: ValueKind, v: &Value, ctx: &Ctx) -> Result<Value, String> {
    let strings = |v: &Value| -> Result<Vec<String>, String> {
        v.as_array()
            .ok_or("expected a list")?
            .iter()
            .map(|x| x.as_str().map(str::to_string).ok_or_else(|| format!("expected a string, got {x}")))
            .collect()
    };
    let rational = |x: &Value| -> Result<Value, String> {
        let text = match x {
            Value::String(s) => s.clone(),
            Value::Number(n) => n.to_string(),
            other => return Err(format!("not a rational: {other}")),
        };
        parse_rat(&text).map(|r| Value::String(fmt_rat(&r))).ok_or_else(|| format!("not a rational: {text}"))
    };
    match kind {
        ValueKind::Exact => Ok(v.clone()),
        ValueKind::Rational => match v {
            Value::Array(a) => a.iter().map(rational).collect::<Result<Vec<_>, _>>().map(Value::Array),
            x => rational(x),
        },
        ValueKind::Points => {
            let mut pts = strings(v)?
                .iter()
                .map(|s| ProjPoint::parse(s, &ctx.field).map(|p| p.to_text()).map_err(|e| e.to_string()))
                .collect::<Result<Vec<_>, _>>()?;
            pts.sort();
            Ok(Value::from(pts))
        }
        ValueKind::Elements => {
            let mut el = strings(v)?
                .iter()
                .map(|s| {
                    if s == "inf" {
                        Ok(s.clone())
                    } else {
                        parse_element(s, &ctx.field).map(|e| e.to_string()).map_err(|e| e.to_string())
                    }
                })
                .collect::<Result<Vec<_>, _>>()?;
            el.sort();
            Ok(Value::from(el))
        }
        ValueKind::Unordered => {
            let mut a = v.as_array().ok_or("expected a list")?.clone();
            a.sort_by_key(|x| x.to_string());
            Ok(Value::Array(a))
        }
        ValueKind::Curve => {
            let s = v.as_str().ok_or("expected an equation")?;
            let p = ctx.ring().parse(s).map_err(|e| e.to_string())?;
            Ok(Value::String(p.monic().to_text()))
        }
    }
}

pub fn run(s: &Scenario, opts: &RunOptions) -> Result<Certificate, CliError> {
    let runner = scenarios::RUNNERS
        .iter()
        .find(|(id, _)| *id == s.id)
        .map(|r| r.1)
        .ok_or_else(|| CliError::UnknownScenario(s.id.clone()))?;
    let field = parse_field(&s.field)?;
    let mut ctx = Ctx {
        s,
        field,
        budget: opts.budget,
        optional: opts.optional,
        out: BTreeMap::new(),
        notes: BTreeMap::new(),
        timings: BTreeMap::new(),
    };
    // expected values must be readable before anything runs
    for e in &s.expected {
        canon(e.kind, &e.value, &ctx).map_err(|m| CliError::Input(format!("expected `{}`: {m}", e.name)))?;
    }
    let start = Instant::now();
    let result = runner(&mut ctx);
    ctx.time("total", start);
    let fallback = match result {
        Ok(()) => None,
        Err(e) if is_input_error(&e) => return Err(CliError::Input(e.to_string())),
        Err(e) if e.is_budget() => Some(Outcome::Indeterminate(e.to_string())),
        Err(e) => Some(Outcome::Failed(e.to_string())),
    };

    let mut checks = Vec::new();
    for e in &s.expected {
        let outcome = ctx
            .out
            .remove(&e.name)
            .or_else(|| fallback.clone())
            .unwrap_or_else(|| Outcome::Failed("not computed".into()));
        let (computed, state, note) = match outcome {
            Outcome::Value(v) => {
                let pass = match (canon(e.kind, &e.value, &ctx), canon(e.kind, &v, &ctx)) {
                    (Ok(a), Ok(b)) => a == b,
                    _ => false,
                };
                (v, if pass { CheckState::Pass } else { CheckState::Fail }, None)
            }
            Outcome::Indeterminate(w) => (Value::Null, CheckState::Indeterminate, Some(w)),
            Outcome::Skipped(w) => (Value::Null, CheckState::Skipped, Some(w)),
            Outcome::Failed(w) => (Value::Null, CheckState::Fail, Some(w)),
        };
        let note = match (note, &e.note) {
            (Some(a), Some(b)) => Some(format!("{a}; {b}")),
            (a, b) => a.or_else(|| b.clone()),
        };
        let pass = state == CheckState::Pass || (state == CheckState::Skipped && e.optional);
        checks.push(Check {
            name: e.name.clone(),
            expected: e.value.clone(),
            computed,
            state,
            pass,
            provenance: e.provenance,
            optional: e.optional,
            note,
        });
    }
    // anything computed but not expected is kept as an observation
    for (k, v) in std::mem::take(&mut ctx.out) {
        if let Outcome::Value(v) = v {
            ctx.notes.insert(k, v);
        }
    }
    let pass = checks.iter().all(|c| c.pass || c.optional);
    Ok(Certificate {
        scenario: s.id.clone(),
        statement: s.statement.clone(),
        field: s.field.clone(),
        pass,
        checks,
        observations: ctx.notes,
        timings: ctx.timings,
        budgets: BudgetRecord {
            max_pairs: opts.budget.max_pairs,
            max_basis: opts.budget.max_basis,
            max_bits: opts.budget.max_bits,
        },
        optional_checks_run: opts.optional,
    })
}

/// Writes through a temporary file and a rename.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, contents).map_err(|e| CliError::Io(format!("{}: {e}", tmp.display())))?;
    std::fs::rename(&tmp, path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}
