//! Mappings between soft classes.
//!
//! A [`ClassMapping`] `f = (u, p)` pairs a point map `u: X → Y` with an
//! attribute map `p: E → E'`. It pushes soft sets forward ([`image`]) and
//! pulls them back ([`preimage`]).
//!
//! [`image`]: ClassMapping::image
//! [`preimage`]: ClassMapping::preimage

use std::fmt;
use std::sync::Arc;

use crate::context::Context;
use crate::error::{Error, Result};
use crate::soft::SoftSet;
use crate::subset::Subset;

/// Whether the attribute map must be total.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MapMode {
    #[default]
    Strict,
    /// Attributes outside the attribute table are unmapped.
    Partial,
}

impl MapMode {
    pub fn as_str(self) -> &'static str {
        match self {
            MapMode::Strict => "strict",
            MapMode::Partial => "partial",
        }
    }
}

/// Shape of an image or inverse image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ResultMode {
    /// Domain exactly `p(A)` for images, `p⁻¹(C)` for inverse images.
    Raw,
    /// Raw result padded with empty values to the whole attribute space.
    #[default]
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineOp {
    Union,
    Intersection,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ClassMapping {
    source: Arc<Context>,
    target: Arc<Context>,
    // element index in source -> element index in target
    points: Vec<usize>,
    // attribute index in source -> attribute index in target
    attributes: Vec<Option<usize>>,
    mode: MapMode,
}

impl ClassMapping {
    /// Validates `u` and `p` lookup tables against the two contexts.
    pub fn new<U, P, K1, V1, K2, V2>(
        source: &Arc<Context>,
        target: &Arc<Context>,
        u_table: U,
        p_table: P,
        mode: MapMode,
    ) -> Result<Self>
    where
        U: IntoIterator<Item = (K1, V1)>,
        P: IntoIterator<Item = (K2, V2)>,
        K1: AsRef<str>,
        V1: AsRef<str>,
        K2: AsRef<str>,
        V2: AsRef<str>,
    {
        let mut points = vec![None; source.universe().len()];
        for (x, y) in u_table {
            let slot = &mut points[source.lookup_element(x.as_ref())?];
            if slot.is_some() {
                return Err(Error::DuplicateName(x.as_ref().to_owned()));
            }
            *slot = Some(target.lookup_element(y.as_ref())?);
        }
        let mut attributes = vec![None; source.attributes().len()];
        for (e, e2) in p_table {
            let slot = &mut attributes[source.lookup_attribute(e.as_ref())?];
            if slot.is_some() {
                return Err(Error::DuplicateName(e.as_ref().to_owned()));
            }
            *slot = Some(target.lookup_attribute(e2.as_ref())?);
        }

        let points = points
            .into_iter()
            .enumerate()
            .map(|(i, y)| y.ok_or_else(|| Error::PartialPointMap(source.element(i).to_owned())))
            .collect::<Result<Vec<_>>>()?;
        if mode == MapMode::Strict {
            let unmapped: Vec<String> = attributes
                .iter()
                .enumerate()
                .filter(|(_, t)| t.is_none())
                .map(|(i, _)| source.attribute(i).to_owned())
                .collect();
            if !unmapped.is_empty() {
                return Err(Error::PartialAttributeMap(unmapped));
            }
        }
        Ok(Self {
            source: Arc::clone(source),
            target: Arc::clone(target),
            points,
            attributes,
            mode,
        })
    }

    /// Strict mapping from index tables; callers guarantee the ranges.
    pub(crate) fn from_indices(
        source: Arc<Context>,
        target: Arc<Context>,
        points: Vec<usize>,
        attributes: Vec<usize>,
    ) -> Self {
        debug_assert_eq!(points.len(), source.universe().len());
        debug_assert_eq!(attributes.len(), source.attributes().len());
        Self {
            source,
            target,
            points,
            attributes: attributes.into_iter().map(Some).collect(),
            mode: MapMode::Strict,
        }
    }

    pub fn source(&self) -> &Arc<Context> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Context> {
        &self.target
    }

    pub fn mode(&self) -> MapMode {
        self.mode
    }

    /// `u(x)` by index.
    pub fn point(&self, element: usize) -> usize {
        self.points[element]
    }

    /// `p(α)` by index, `None` where a partial map is undefined.
    pub fn attribute(&self, attribute: usize) -> Option<usize> {
        self.attributes[attribute]
    }

    /// The `u` table as name pairs, in source order.
    pub fn point_table(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.points
            .iter()
            .enumerate()
            .map(|(x, &y)| (self.source.element(x), self.target.element(y)))
    }

    /// The defined part of the `p` table as name pairs, in source order.
    pub fn attribute_table(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.attributes
            .iter()
            .enumerate()
            .filter_map(|(e, t)| t.map(|t| (self.source.attribute(e), self.target.attribute(t))))
    }

    /// `u(S)` for a subset of the source universe.
    pub fn push_points(&self, set: &Subset) -> Subset {
        set.iter().map(|x| self.points[x]).collect()
    }

    /// `u⁻¹(S) = {x ∈ X : u(x) ∈ S}`.
    pub fn pull_points(&self, set: &Subset) -> Subset {
        self.points
            .iter()
            .enumerate()
            .filter(|(_, &y)| set.contains(y))
            .map(|(x, _)| x)
            .collect()
    }

    /// Soft image `f(F, A)`.
    ///
    /// For `β ∈ p(A)` the value is `u` applied to the union of `F(α)` over
    /// `α ∈ p⁻¹(β) ∩ A`. In [`ResultMode::Full`] the remaining target
    /// attributes are present with empty values.
    pub fn image(&self, soft: &SoftSet, result: ResultMode) -> Result<SoftSet> {
        if **soft.context() != *self.source {
            return Err(Error::ContextMismatch);
        }
        let mut gathered: Vec<Option<Subset>> = vec![None; self.target.attributes().len()];
        for (alpha, value) in soft.iter() {
            if let Some(beta) = self.attributes[alpha] {
                gathered[beta]
                    .get_or_insert_with(Subset::empty)
                    .union_with(value);
            }
        }
        let values = gathered
            .into_iter()
            .map(|v| match (v, result) {
                (Some(v), _) => Some(self.push_points(&v)),
                (None, ResultMode::Full) => Some(Subset::empty()),
                (None, ResultMode::Raw) => None,
            })
            .collect();
        Ok(SoftSet::from_values(Arc::clone(&self.target), values))
    }

    /// Soft inverse image `f⁻¹(G, C)`.
    ///
    /// For `α ∈ p⁻¹(C)` the value is `u⁻¹(G(p(α)))`. In [`ResultMode::Full`]
    /// every other source attribute is present with an empty value.
    pub fn preimage(&self, soft: &SoftSet, result: ResultMode) -> Result<SoftSet> {
        if **soft.context() != *self.target {
            return Err(Error::ContextMismatch);
        }
        let values = self
            .attributes
            .iter()
            .map(|beta| match (beta.and_then(|b| soft.get(b)), result) {
                (Some(g), _) => Some(self.pull_points(g)),
                (None, ResultMode::Full) => Some(Subset::empty()),
                (None, ResultMode::Raw) => None,
            })
            .collect();
        Ok(SoftSet::from_values(Arc::clone(&self.source), values))
    }
}

/// Pointwise union or intersection of two soft sets over the whole attribute
/// space, reading attributes outside a domain as empty.
///
/// This is how unions and intersections of (inverse) images are formed.
pub fn combine_pointwise(left: &SoftSet, right: &SoftSet, op: CombineOp) -> Result<SoftSet> {
    if left.context() != right.context() {
        return Err(Error::ContextMismatch);
    }
    let empty = Subset::empty();
    let values = left
        .values()
        .iter()
        .zip(right.values())
        .map(|(l, r)| {
            let (l, r) = (l.as_ref().unwrap_or(&empty), r.as_ref().unwrap_or(&empty));
            Some(match op {
                CombineOp::Union => l.union(r),
                CombineOp::Intersection => l.intersection(r),
            })
        })
        .collect();
    Ok(SoftSet::from_values(Arc::clone(left.context()), values))
}

impl fmt::Debug for ClassMapping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let u: Vec<String> = self
            .point_table()
            .map(|(x, y)| format!("{x}->{y}"))
            .collect();
        let p: Vec<String> = self
            .attribute_table()
            .map(|(x, y)| format!("{x}->{y}"))
            .collect();
        write!(
            f,
            "ClassMapping {{ u: {{{}}}, p: {{{}}}, {} }}",
            u.join(","),
            p.join(","),
            self.mode.as_str()
        )
    }
}
