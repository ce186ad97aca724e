//! Exhaustive small-model checking of the image and inverse-image laws.
//!
//! Every strict mapping between two bounded contexts is paired with every
//! argument tuple drawn from the enumerated soft class, and each law is
//! evaluated in full mode. Instances outside a law's hypotheses are counted
//! as skipped.

mod enumerate;
mod law;

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::context::Context;
use crate::error::{Error, Result};
use crate::mapping::ClassMapping;
use crate::soft::SoftSet;

pub use enumerate::{
    class_mapping_count, enumerate_class_mappings, enumerate_soft_sets, soft_set_count,
    ClassMappings, SoftSets, MAX_ENUMERATION_SIZE,
};
pub use law::{check_family_law, check_law, ArgumentClass, LawId, Relation, Verdict, Witness};

/// A violated instance and its position in enumeration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub index: u64,
    pub witness: Witness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    pub law: LawId,
    /// Number of family members for sampled n-ary checks.
    pub family_size: Option<usize>,
    pub instances: u64,
    pub skipped: u64,
    pub violations: Vec<Violation>,
}

impl LawReport {
    fn new(law: LawId, family_size: Option<usize>) -> Self {
        Self {
            law,
            family_size,
            instances: 0,
            skipped: 0,
            violations: Vec::new(),
        }
    }

    /// `L3`, or `L3(n=3)` for a family check.
    pub fn label(&self) -> String {
        match self.family_size {
            Some(n) => format!("{}(n={n})", self.law),
            None => self.law.to_string(),
        }
    }

    fn absorb(&mut self, other: LawReport) {
        self.instances += other.instances;
        self.skipped += other.skipped;
        self.violations.extend(other.violations);
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub laws: Vec<LawReport>,
}

impl Report {
    pub fn violation_count(&self) -> usize {
        self.laws.iter().map(|l| l.violations.len()).sum()
    }

    pub fn get(&self, law: LawId) -> Option<&LawReport> {
        self.laws
            .iter()
            .find(|l| l.law == law && l.family_size.is_none())
    }

    /// Adds counts and violations of `other` law by law, appending laws not
    /// yet present.
    pub fn merge(&mut self, other: Report) {
        for entry in other.laws {
            match self
                .laws
                .iter_mut()
                .find(|l| l.law == entry.law && l.family_size == entry.family_size)
            {
                Some(existing) => existing.absorb(entry),
                None => self.laws.push(entry),
            }
        }
    }
}

/// Upper bounds on `|X|`, `|Y|`, `|E|`, `|E'|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub universe: usize,
    pub target_universe: usize,
    pub attributes: usize,
    pub target_attributes: usize,
}

impl Bounds {
    pub fn uniform(n: usize) -> Self {
        Self {
            universe: n,
            target_universe: n,
            attributes: n,
            target_attributes: n,
        }
    }

    /// Every size combination within the bounds, smallest first.
    ///
    /// Ordered by largest component, then total size, then lexicographically.
    pub fn sizes(&self) -> Vec<Bounds> {
        let mut all = Vec::new();
        for x in 0..=self.universe {
            for y in 0..=self.target_universe {
                for e in 0..=self.attributes {
                    for ep in 0..=self.target_attributes {
                        all.push(Bounds {
                            universe: x,
                            target_universe: y,
                            attributes: e,
                            target_attributes: ep,
                        });
                    }
                }
            }
        }
        all.sort_by_key(|b| {
            let t = b.tuple();
            (t.0.max(t.1).max(t.2).max(t.3), t.0 + t.1 + t.2 + t.3, t)
        });
        all
    }

    fn tuple(&self) -> (usize, usize, usize, usize) {
        (
            self.universe,
            self.target_universe,
            self.attributes,
            self.target_attributes,
        )
    }

    /// Source and target contexts of exactly these sizes.
    ///
    /// Source elements are `x1, x2, ..`, source attributes `e1, e2, ..`;
    /// target elements `y1, ..` and target attributes `e1p, ..`.
    pub fn contexts(&self) -> Result<(Arc<Context>, Arc<Context>)> {
        let names = |prefix: &str, suffix: &str, n: usize| {
            (1..=n)
                .map(move |i| format!("{prefix}{i}{suffix}"))
                .collect::<Vec<_>>()
        };
        Ok((
            Arc::new(Context::new(
                names("x", "", self.universe),
                names("e", "", self.attributes),
            )?),
            Arc::new(Context::new(
                names("y", "", self.target_universe),
                names("e", "p", self.target_attributes),
            )?),
        ))
    }
}

fn argument_pool(law: LawId, source: &[SoftSet], target: &[SoftSet]) -> usize {
    match law.argument_class() {
        ArgumentClass::Source => source.len(),
        ArgumentClass::Target => target.len(),
    }
}

/// Evaluates one law on every argument tuple for a single mapping.
fn check_mapping(
    law: LawId,
    mapping: &ClassMapping,
    base_index: u64,
    source_sets: &[SoftSet],
    target_sets: &[SoftSet],
) -> Result<LawReport> {
    let pool = match law.argument_class() {
        ArgumentClass::Source => source_sets,
        ArgumentClass::Target => target_sets,
    };
    let mut report = LawReport::new(law, None);
    let mut record = |index: u64, args: &[&SoftSet]| -> Result<()> {
        match law::evaluate(law, mapping, args) {
            Ok(eval) => {
                report.instances += 1;
                if eval.verdict == Verdict::Violated {
                    let witness = Witness {
                        law,
                        mapping: mapping.clone(),
                        arguments: args.iter().map(|&a| a.clone()).collect(),
                        lhs: eval.lhs,
                        rhs: eval.rhs,
                        verdict: eval.verdict,
                    };
                    report.violations.push(Violation { index, witness });
                }
                Ok(())
            }
            Err(Error::SideConditionUnmet { .. }) => {
                report.skipped += 1;
                Ok(())
            }
            Err(e) => Err(e),
        }
    };
    match law.arity() {
        0 => record(base_index, &[])?,
        _ => {
            let n = pool.len() as u64;
            for (i, f) in pool.iter().enumerate() {
                for (j, g) in pool.iter().enumerate() {
                    record(base_index + i as u64 * n + j as u64, &[f, g])?;
                }
            }
        }
    }
    Ok(report)
}

/// Checks every law on every strict mapping `source → target` and every
/// admissible argument tuple.
///
/// Work is split across mappings; violations are reported in enumeration
/// order, so the output does not depend on scheduling.
pub fn run_exhaustive(
    source: &Arc<Context>,
    target: &Arc<Context>,
    laws: &[LawId],
) -> Result<Report> {
    let mappings: Vec<ClassMapping> = enumerate_class_mappings(source, target)?.collect();
    let source_sets: Vec<SoftSet> = enumerate_soft_sets(source)?.collect();
    let target_sets: Vec<SoftSet> = enumerate_soft_sets(target)?.collect();

    let mut report = Report::default();
    for &law in laws {
        let per_mapping =
            (argument_pool(law, &source_sets, &target_sets) as u64).pow(law.arity() as u32);
        let parts = mappings
            .par_iter()
            .enumerate()
            .map(|(m, mapping)| {
                check_mapping(
                    law,
                    mapping,
                    m as u64 * per_mapping,
                    &source_sets,
                    &target_sets,
                )
            })
            .collect::<Result<Vec<_>>>()?;
        let mut entry = LawReport::new(law, None);
        for part in parts {
            entry.absorb(part);
        }
        entry.violations.sort_by_key(|v| v.index);
        report.laws.push(entry);
    }
    Ok(report)
}

/// Runs [`run_exhaustive`] for every size combination within `bounds`,
/// skipping combinations that admit no total map, and merges the results.
pub fn sweep_exhaustive(bounds: Bounds, laws: &[LawId]) -> Result<Report> {
    let mut report = Report {
        laws: laws.iter().map(|&l| LawReport::new(l, None)).collect(),
    };
    for size in bounds.sizes() {
        let (source, target) = size.contexts()?;
        match run_exhaustive(&source, &target, laws) {
            Ok(part) => report.merge(part),
            Err(Error::EmptyTarget(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(report)
}

/// Evaluates the n-ary forms of the family laws among `laws` on `samples`
/// random (mapping, family) draws per law.
///
/// Draws come from a seeded generator, so equal arguments give equal reports.
pub fn sample_family_laws(
    source: &Arc<Context>,
    target: &Arc<Context>,
    laws: &[LawId],
    family_size: usize,
    samples: usize,
    seed: u64,
) -> Result<Report> {
    let mappings: Vec<ClassMapping> = enumerate_class_mappings(source, target)?.collect();
    let source_sets: Vec<SoftSet> = enumerate_soft_sets(source)?.collect();
    let target_sets: Vec<SoftSet> = enumerate_soft_sets(target)?.collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut report = Report::default();
    for &law in laws.iter().filter(|l| l.has_family_form()) {
        let pool = match law.argument_class() {
            ArgumentClass::Source => &source_sets,
            ArgumentClass::Target => &target_sets,
        };
        let mut entry = LawReport::new(law, Some(family_size));
        for index in 0..samples as u64 {
            let mapping = &mappings[rng.gen_range(0..mappings.len())];
            let family: Vec<SoftSet> = (0..family_size)
                .map(|_| pool[rng.gen_range(0..pool.len())].clone())
                .collect();
            match check_family_law(law, mapping, &family) {
                Ok(w) => {
                    entry.instances += 1;
                    if w.verdict == Verdict::Violated {
                        entry.violations.push(Violation { index, witness: w });
                    }
                }
                Err(Error::SideConditionUnmet { .. }) => entry.skipped += 1,
                Err(e) => return Err(e),
            }
        }
        report.laws.push(entry);
    }
    Ok(report)
}

/// First instance, in enumeration order, that violates the reversed
/// inclusion `law` over the given mappings.
pub fn search_counterexample_among<I>(
    law: LawId,
    mappings: I,
    source_sets: &[SoftSet],
) -> Result<Option<Witness>>
where
    I: IntoIterator<Item = ClassMapping>,
{
    if !law.is_refutation_target() {
        return Err(Error::NotARefutationTarget(law));
    }
    for mapping in mappings {
        let found = match law.arity() {
            0 => Some(check_law(law, &mapping, &[])?).filter(|w| w.verdict == Verdict::Violated),
            _ => source_sets
                .iter()
                .flat_map(|f| source_sets.iter().map(move |g| [f.clone(), g.clone()]))
                .map(|args| check_law(law, &mapping, &args))
                .find_map(|outcome| match outcome {
                    Ok(w) if w.verdict == Verdict::Violated => Some(Ok(w)),
                    Ok(_) | Err(Error::SideConditionUnmet { .. }) => None,
                    Err(e) => Some(Err(e)),
                })
                .transpose()?,
        };
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// First violation of `N1` or `N2` over all strict mappings
/// `source → target`, or `None` if the inclusion holds throughout.
pub fn search_counterexample(
    law: LawId,
    source: &Arc<Context>,
    target: &Arc<Context>,
) -> Result<Option<Witness>> {
    if !law.is_refutation_target() {
        return Err(Error::NotARefutationTarget(law));
    }
    let mappings = enumerate_class_mappings(source, target)?;
    let source_sets: Vec<SoftSet> = if law.arity() > 0 {
        enumerate_soft_sets(source)?.collect()
    } else {
        Vec::new()
    };
    search_counterexample_among(law, mappings, &source_sets)
}

/// Searches size combinations within `bounds`, smallest first, and returns
/// the first witness together with the sizes it was found at.
pub fn search_within(law: LawId, bounds: Bounds) -> Result<Option<(Bounds, Witness)>> {
    for size in bounds.sizes() {
        let (source, target) = size.contexts()?;
        match search_counterexample(law, &source, &target) {
            Ok(Some(w)) => return Ok(Some((size, w))),
            Ok(None) | Err(Error::EmptyTarget(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}
