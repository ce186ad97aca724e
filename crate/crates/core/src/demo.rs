//! A symptom-to-cause transformation for a medical expert system.
//!
//! A patient's complaints, graded by importance, form a soft set over a
//! universe of symptoms. Expert knowledge is a pair of lookup tables: symptom
//! to cause, and importance grade to treatment preference. The soft image of
//! the complaint set is the diagnosis.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::context::Context;
use crate::error::Result;
use crate::mapping::{ClassMapping, MapMode, ResultMode};
use crate::soft::SoftSet;

/// `(symbol, meaning)` for the symptom universe.
pub const SYMPTOMS: [(&str, &str); 8] = [
    ("b", "burning in stomach"),
    ("h", "headache"),
    ("s", "sleeplessness"),
    ("c", "semi-conscious sleep"),
    ("j", "joint pain"),
    ("p", "backbone pain"),
    ("d", "depression"),
    ("a", "anxiety"),
];

pub const IMPORTANCE: [(&str, &str); 3] = [
    ("e1", "high importance"),
    ("e2", "medium importance"),
    ("e3", "low importance"),
];

pub const CAUSES: [(&str, &str); 6] = [
    ("alpha", "acidity"),
    ("beta", "blood pressure"),
    ("gamma", "fatigue"),
    ("delta", "wrong posture"),
    ("lambda", "depression"),
    ("mu", "mood disorder"),
];

pub const POTENCY: [(&str, &str); 2] = [
    ("e1p", "infrequent high potency"),
    ("e2p", "frequent low potency"),
];

const SYMPTOM_CAUSE: [(&str, &str); 8] = [
    ("b", "alpha"),
    ("h", "beta"),
    ("s", "alpha"),
    ("c", "gamma"),
    ("j", "alpha"),
    ("p", "delta"),
    ("d", "mu"),
    ("a", "mu"),
];

// no grade is given for low importance
const GRADE_POTENCY: [(&str, &str); 2] = [("e1", "e1p"), ("e2", "e2p")];

const COMPLAINTS: [(&str, &[&str]); 3] = [
    ("e1", &["b", "h", "s"]),
    ("e2", &["c"]),
    ("e3", &["j", "p", "d", "a"]),
];

pub fn symptom_context() -> Arc<Context> {
    Arc::new(
        Context::new(SYMPTOMS.map(|(s, _)| s), IMPORTANCE.map(|(s, _)| s))
            .expect("distinct symbols"),
    )
}

pub fn cause_context() -> Arc<Context> {
    Arc::new(
        Context::new(CAUSES.map(|(s, _)| s), POTENCY.map(|(s, _)| s)).expect("distinct symbols"),
    )
}

/// The patient's complaints as a soft set over the symptom class.
pub fn complaints() -> SoftSet {
    SoftSet::new(&symptom_context(), COMPLAINTS).expect("complaints use known symbols")
}

/// The expert lookup tables. Strict mode fails because the low importance
/// grade has no potency.
pub fn knowledge(mode: MapMode) -> Result<ClassMapping> {
    ClassMapping::new(
        &symptom_context(),
        &cause_context(),
        SYMPTOM_CAUSE,
        GRADE_POTENCY,
        mode,
    )
}

/// The diagnosis: the raw soft image of [`complaints`] under [`knowledge`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnosis {
    pub complaints: SoftSet,
    pub mapping: ClassMapping,
    pub image: SoftSet,
}

pub fn medical(mode: MapMode) -> Result<Diagnosis> {
    let mapping = knowledge(mode)?;
    let complaints = complaints();
    let image = mapping.image(&complaints, ResultMode::Raw)?;
    Ok(Diagnosis {
        complaints,
        mapping,
        image,
    })
}

fn meaning<'a>(legend: &'a [(&'a str, &'a str)], symbol: &'a str) -> &'a str {
    legend
        .iter()
        .find(|(s, _)| *s == symbol)
        .map_or(symbol, |(_, m)| m)
}

/// Renders a soft set over the cause class with symbols spelled out, e.g.
/// `infrequent high potency = {acidity, blood pressure}`, one line per
/// attribute.
pub fn render_causes(image: &SoftSet) -> String {
    let mut out = String::new();
    for (attr, elems) in image.named_entries() {
        let names: Vec<&str> = elems.iter().map(|e| meaning(&CAUSES, e)).collect();
        writeln!(
            out,
            "{} = {{{}}}",
            meaning(&POTENCY, attr),
            names.join(", ")
        )
        .unwrap();
    }
    out
}

impl Diagnosis {
    pub fn render(&self) -> String {
        render_causes(&self.image)
    }
}
