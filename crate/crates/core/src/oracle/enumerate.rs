//! Brute-force enumeration of soft sets and strict class mappings over small
//! contexts.

use std::sync::Arc;

use crate::context::Context;
use crate::error::{Error, Result};
use crate::mapping::ClassMapping;
use crate::soft::SoftSet;
use crate::subset::Subset;

/// Largest universe or attribute space the enumerators accept.
pub const MAX_ENUMERATION_SIZE: usize = 4;

fn guard(what: &'static str, size: usize) -> Result<()> {
    if size > MAX_ENUMERATION_SIZE {
        return Err(Error::BoundsExceeded {
            what,
            size,
            limit: MAX_ENUMERATION_SIZE,
        });
    }
    Ok(())
}

/// `Σ_{A⊆E} (2^|X|)^|A| = (1 + 2^|X|)^|E|`.
pub fn soft_set_count(universe: usize, attributes: usize) -> u64 {
    (1 + (1u64 << universe)).pow(attributes as u32)
}

/// `|Y|^|X| · |E'|^|E|`.
pub fn class_mapping_count(source: &Context, target: &Context) -> u64 {
    (target.universe().len() as u64).pow(source.universe().len() as u32)
        * (target.attributes().len() as u64).pow(source.attributes().len() as u32)
}

/// Every soft set over `context`, each exactly once.
///
/// Domains come by increasing size, then lexicographically. Within a domain
/// the values are read as a tuple of bit masks (first attribute most
/// significant) counted upward from all-empty.
pub fn enumerate_soft_sets(context: &Arc<Context>) -> Result<SoftSets> {
    guard("universe", context.universe().len())?;
    guard("attribute space", context.attributes().len())?;
    let n = context.attributes().len();
    let mut domains = Vec::with_capacity(1 << n);
    for size in 0..=n {
        push_combinations(n, size, &mut Vec::new(), 0, &mut domains);
    }
    Ok(SoftSets {
        context: Arc::clone(context),
        masks_per_value: 1u64 << context.universe().len(),
        domains,
        domain: 0,
        digits: Vec::new(),
    })
}

fn push_combinations(
    n: usize,
    size: usize,
    prefix: &mut Vec<usize>,
    start: usize,
    out: &mut Vec<Vec<usize>>,
) {
    if prefix.len() == size {
        out.push(prefix.clone());
        return;
    }
    for i in start..n {
        prefix.push(i);
        push_combinations(n, size, prefix, i + 1, out);
        prefix.pop();
    }
}

#[derive(Debug, Clone)]
pub struct SoftSets {
    context: Arc<Context>,
    masks_per_value: u64,
    domains: Vec<Vec<usize>>,
    domain: usize,
    // one mask per attribute of the current domain
    digits: Vec<u64>,
}

impl Iterator for SoftSets {
    type Item = SoftSet;

    fn next(&mut self) -> Option<SoftSet> {
        let attrs = self.domains.get(self.domain)?;
        if self.digits.len() != attrs.len() {
            self.digits = vec![0; attrs.len()];
        }
        let mut values = vec![None; self.context.attributes().len()];
        for (&a, &mask) in attrs.iter().zip(&self.digits) {
            values[a] = Some(Subset::from_mask(mask));
        }
        let item = SoftSet::from_values(Arc::clone(&self.context), values);

        if !increment(&mut self.digits, self.masks_per_value) {
            self.domain += 1;
            self.digits.clear();
        }
        Some(item)
    }
}

/// Counts `digits` up in base `radix`, last digit fastest. Returns false on
/// wrap-around.
fn increment(digits: &mut [u64], radix: u64) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < radix {
            return true;
        }
        *d = 0;
    }
    false
}

/// Every strict mapping `(u, p)` from `source` to `target`, each exactly once.
///
/// `u` varies slowest; both tables count upward with the first source entry
/// most significant.
pub fn enumerate_class_mappings(
    source: &Arc<Context>,
    target: &Arc<Context>,
) -> Result<ClassMappings> {
    for (what, size) in [
        ("source universe", source.universe().len()),
        ("source attribute space", source.attributes().len()),
        ("target universe", target.universe().len()),
        ("target attribute space", target.attributes().len()),
    ] {
        guard(what, size)?;
    }
    if target.universe().is_empty() && !source.universe().is_empty() {
        return Err(Error::EmptyTarget("universe"));
    }
    if target.attributes().is_empty() && !source.attributes().is_empty() {
        return Err(Error::EmptyTarget("attribute space"));
    }
    Ok(ClassMappings {
        source: Arc::clone(source),
        target: Arc::clone(target),
        points: vec![0; source.universe().len()],
        attributes: vec![0; source.attributes().len()],
        done: false,
    })
}

#[derive(Debug, Clone)]
pub struct ClassMappings {
    source: Arc<Context>,
    target: Arc<Context>,
    points: Vec<u64>,
    attributes: Vec<u64>,
    done: bool,
}

impl Iterator for ClassMappings {
    type Item = ClassMapping;

    fn next(&mut self) -> Option<ClassMapping> {
        if self.done {
            return None;
        }
        let item = ClassMapping::from_indices(
            Arc::clone(&self.source),
            Arc::clone(&self.target),
            self.points.iter().map(|&y| y as usize).collect(),
            self.attributes.iter().map(|&b| b as usize).collect(),
        );
        let ys = self.target.universe().len() as u64;
        let bs = self.target.attributes().len() as u64;
        if !increment(&mut self.attributes, bs) && !increment(&mut self.points, ys) {
            self.done = true;
        }
        Some(item)
    }
}
