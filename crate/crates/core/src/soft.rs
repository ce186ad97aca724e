//! Soft sets over a soft class and their algebra: soft subset, equality,
//! union, the non-degenerate intersection, and domain padding.

use std::fmt;
use std::sync::Arc;

use crate::context::Context;
use crate::error::{Error, Result};
use crate::subset::Subset;

/// A soft set `(F, A)`: a parameter set `A` drawn from the context's
/// attributes, and for each `α ∈ A` a subset `F(α)` of the universe.
///
/// An attribute mapped to the empty set is in the domain; an attribute
/// outside `A` has no value at all. The empty domain is allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SoftSet {
    context: Arc<Context>,
    // indexed by attribute position; `None` means outside the domain
    values: Vec<Option<Subset>>,
}

impl SoftSet {
    /// Validates an attribute-to-elements assignment against `context`.
    ///
    /// The keys become the domain. Repeated elements inside one value are
    /// collapsed; a repeated key is an error.
    pub fn new<I, K, V, S>(context: &Arc<Context>, assignments: I) -> Result<Self>
    where
        I: IntoIterator<Item = (K, V)>,
        K: AsRef<str>,
        V: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut values = vec![None; context.attributes().len()];
        for (attr, elems) in assignments {
            let attr = attr.as_ref();
            let slot = &mut values[context.lookup_attribute(attr)?];
            if slot.is_some() {
                return Err(Error::DuplicateName(attr.to_owned()));
            }
            *slot = Some(context.element_set(elems)?);
        }
        Ok(Self {
            context: Arc::clone(context),
            values,
        })
    }

    /// Builds a soft set from per-attribute values already expressed as
    /// indices into `context`.
    pub(crate) fn from_values(context: Arc<Context>, values: Vec<Option<Subset>>) -> Self {
        debug_assert_eq!(values.len(), context.attributes().len());
        debug_assert!(values
            .iter()
            .flatten()
            .all(|v| v.bound() <= context.universe().len()));
        Self { context, values }
    }

    fn constant_over(context: &Arc<Context>, domain: &Subset, value: Subset) -> Self {
        let values = (0..context.attributes().len())
            .map(|i| domain.contains(i).then(|| value.clone()))
            .collect();
        Self::from_values(Arc::clone(context), values)
    }

    /// `Φ_A`: every attribute of `A` mapped to the empty set.
    pub fn null<I, S>(context: &Arc<Context>, attributes: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let domain = context.attribute_set(attributes)?;
        Ok(Self::constant_over(context, &domain, Subset::empty()))
    }

    /// `X_A`: every attribute of `A` mapped to the whole universe.
    pub fn absolute<I, S>(context: &Arc<Context>, attributes: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let domain = context.attribute_set(attributes)?;
        Ok(Self::constant_over(
            context,
            &domain,
            context.full_universe(),
        ))
    }

    /// The full null soft set `Φ̃` (domain `E`).
    pub fn full_null(context: &Arc<Context>) -> Self {
        Self::constant_over(context, &context.full_attributes(), Subset::empty())
    }

    /// The full absolute soft set `X̃` (domain `E`).
    pub fn full_absolute(context: &Arc<Context>) -> Self {
        Self::constant_over(context, &context.full_attributes(), context.full_universe())
    }

    pub fn context(&self) -> &Arc<Context> {
        &self.context
    }

    pub fn domain(&self) -> Subset {
        self.values
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.as_ref().map(|_| i))
            .collect()
    }

    pub fn domain_is_empty(&self) -> bool {
        self.values.iter().all(Option::is_none)
    }

    /// Value at an attribute index, `None` outside the domain.
    pub fn get(&self, attribute: usize) -> Option<&Subset> {
        self.values.get(attribute).and_then(Option::as_ref)
    }

    /// Value at a named attribute, `None` outside the domain or the context.
    pub fn value(&self, attribute: &str) -> Option<&Subset> {
        self.context
            .attribute_index(attribute)
            .and_then(|i| self.get(i))
    }

    /// Domain entries in attribute order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &Subset)> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.as_ref().map(|v| (i, v)))
    }

    /// Like [`iter`](Self::iter) but with names resolved.
    pub fn named_entries(&self) -> impl Iterator<Item = (&str, Vec<&str>)> + '_ {
        self.iter().map(|(i, v)| {
            (
                self.context.attribute(i),
                self.context.element_names(v).collect(),
            )
        })
    }

    pub(crate) fn values(&self) -> &[Option<Subset>] {
        &self.values
    }

    fn same_context(&self, other: &SoftSet) -> Result<()> {
        if self.context == other.context {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// `(F, A) ⊆̃ (G, B)`: `A ⊆ B` and `F(α) ⊆ G(α)` for every `α ∈ A`.
    pub fn is_soft_subset(&self, other: &SoftSet) -> Result<bool> {
        self.same_context(other)?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .all(|pair| match pair {
                (None, _) => true,
                (Some(_), None) => false,
                (Some(f), Some(g)) => f.is_subset(g),
            }))
    }

    /// Mutual soft subset, i.e. equal domains and pointwise equal values.
    pub fn soft_equal(&self, other: &SoftSet) -> Result<bool> {
        self.same_context(other)?;
        Ok(self.values == other.values)
    }

    /// Soft union over `A ∪ B`; values are joined where the domains overlap.
    pub fn union(&self, other: &SoftSet) -> Result<SoftSet> {
        self.same_context(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|pair| match pair {
                (Some(f), Some(g)) => Some(f.union(g)),
                (Some(v), None) | (None, Some(v)) => Some(v.clone()),
                (None, None) => None,
            })
            .collect();
        Ok(Self::from_values(Arc::clone(&self.context), values))
    }

    /// Soft intersection over `A ∩ B`, which must be nonempty.
    pub fn intersection(&self, other: &SoftSet) -> Result<SoftSet> {
        self.same_context(other)?;
        let values: Vec<_> = self
            .values
            .iter()
            .zip(&other.values)
            .map(|pair| match pair {
                (Some(f), Some(g)) => Some(f.intersection(g)),
                _ => None,
            })
            .collect();
        if values.iter().all(Option::is_none) {
            return Err(Error::EmptyParameterIntersection);
        }
        Ok(Self::from_values(Arc::clone(&self.context), values))
    }

    /// Pads the domain to `target` with empty values.
    pub fn extend_domain<I, S>(&self, target: I) -> Result<SoftSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let target = self.context.attribute_set(target)?;
        self.extend_to(&target)
    }

    pub fn extend_to(&self, target: &Subset) -> Result<SoftSet> {
        if target.bound() > self.values.len() {
            let first_unknown = target.iter().find(|&i| i >= self.values.len()).unwrap();
            return Err(Error::UnknownAttribute(format!("#{first_unknown}")));
        }
        if !self.domain().is_subset(target) {
            return Err(Error::NotASuperset);
        }
        let values = self
            .values
            .iter()
            .enumerate()
            .map(|(i, v)| match v {
                Some(v) => Some(v.clone()),
                None => target.contains(i).then(Subset::empty),
            })
            .collect();
        Ok(Self::from_values(Arc::clone(&self.context), values))
    }

    /// Pads the domain to the whole attribute space.
    pub fn extend_full(&self) -> SoftSet {
        let values = self
            .values
            .iter()
            .map(|v| Some(v.clone().unwrap_or_default()))
            .collect();
        Self::from_values(Arc::clone(&self.context), values)
    }
}

impl fmt::Display for SoftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, (attr, elems)) in self.named_entries().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{attr}={{{}}}", elems.join(","))?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for SoftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
