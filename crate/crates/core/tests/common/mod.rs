//! A deliberately naive model of soft sets and soft images over string sets,
//! written straight from the definitions and sharing no code with the
//! library's bit-set implementation.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use softclass::{ClassMapping, SoftSet};

pub type Naive = BTreeMap<String, BTreeSet<String>>;

pub fn naive(soft: &SoftSet) -> Naive {
    soft.named_entries()
        .map(|(a, es)| (a.to_owned(), es.into_iter().map(str::to_owned).collect()))
        .collect()
}

pub struct Tables {
    pub u: BTreeMap<String, String>,
    pub p: BTreeMap<String, String>,
    pub source_attributes: Vec<String>,
    pub source_universe: Vec<String>,
    pub target_attributes: Vec<String>,
}

pub fn tables(f: &ClassMapping) -> Tables {
    Tables {
        u: f.point_table().map(|(a, b)| (a.into(), b.into())).collect(),
        p: f.attribute_table()
            .map(|(a, b)| (a.into(), b.into()))
            .collect(),
        source_attributes: f.source().attributes().to_vec(),
        source_universe: f.source().universe().to_vec(),
        target_attributes: f.target().attributes().to_vec(),
    }
}

/// `B = p(A)`; `β ↦ u(⋃ {F(α) : α ∈ A, p(α) = β})`.
pub fn image_raw(t: &Tables, soft: &Naive) -> Naive {
    let mut out = Naive::new();
    for (alpha, value) in soft {
        if let Some(beta) = t.p.get(alpha) {
            let slot = out.entry(beta.clone()).or_default();
            for x in value {
                slot.insert(t.u[x].clone());
            }
        }
    }
    out
}

/// `D = p⁻¹(C)`; `α ↦ {x : u(x) ∈ G(p(α))}`.
pub fn preimage_raw(t: &Tables, soft: &Naive) -> Naive {
    let mut out = Naive::new();
    for alpha in &t.source_attributes {
        let Some(beta) = t.p.get(alpha) else { continue };
        let Some(g) = soft.get(beta) else { continue };
        let pulled = t
            .source_universe
            .iter()
            .filter(|x| g.contains(&t.u[*x]))
            .cloned()
            .collect();
        out.insert(alpha.clone(), pulled);
    }
    out
}

pub fn pad(soft: &Naive, attributes: &[String]) -> Naive {
    attributes
        .iter()
        .map(|a| (a.clone(), soft.get(a).cloned().unwrap_or_default()))
        .collect()
}

pub fn union(f: &Naive, g: &Naive) -> Naive {
    let mut out = f.clone();
    for (a, v) in g {
        out.entry(a.clone()).or_default().extend(v.iter().cloned());
    }
    out
}

/// `None` when the parameter sets are disjoint.
pub fn intersection(f: &Naive, g: &Naive) -> Option<Naive> {
    let out: Naive = f
        .iter()
        .filter_map(|(a, v)| {
            g.get(a)
                .map(|w| (a.clone(), v.intersection(w).cloned().collect()))
        })
        .collect();
    (!out.is_empty()).then_some(out)
}

pub fn is_subset(f: &Naive, g: &Naive) -> bool {
    f.iter()
        .all(|(a, v)| g.get(a).is_some_and(|w| v.is_subset(w)))
}
