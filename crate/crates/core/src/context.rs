use std::fmt;

use crate::error::{Error, Result};
use crate::subset::Subset;

/// A soft class `(X, E)`: a finite universe of elements and a finite space of
/// attributes.
///
/// Both name lists are kept sorted, and positions in that order are the
/// indices used by [`Subset`] values throughout the crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Context {
    universe: Vec<String>,
    attributes: Vec<String>,
}

impl Context {
    pub fn new<U, A, S, T>(universe: U, attributes: A) -> Result<Self>
    where
        U: IntoIterator<Item = S>,
        A: IntoIterator<Item = T>,
        S: Into<String>,
        T: Into<String>,
    {
        Ok(Self {
            universe: sorted_distinct(universe)?,
            attributes: sorted_distinct(attributes)?,
        })
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    pub fn element_index(&self, name: &str) -> Option<usize> {
        self.universe
            .binary_search_by(|n| n.as_str().cmp(name))
            .ok()
    }

    pub fn attribute_index(&self, name: &str) -> Option<usize> {
        self.attributes
            .binary_search_by(|n| n.as_str().cmp(name))
            .ok()
    }

    pub fn element(&self, index: usize) -> &str {
        &self.universe[index]
    }

    pub fn attribute(&self, index: usize) -> &str {
        &self.attributes[index]
    }

    pub(crate) fn lookup_element(&self, name: &str) -> Result<usize> {
        self.element_index(name)
            .ok_or_else(|| Error::UnknownElement(name.to_owned()))
    }

    pub(crate) fn lookup_attribute(&self, name: &str) -> Result<usize> {
        self.attribute_index(name)
            .ok_or_else(|| Error::UnknownAttribute(name.to_owned()))
    }

    /// Resolves a list of attribute names into an index set.
    pub fn attribute_set<I, S>(&self, names: I) -> Result<Subset>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        names
            .into_iter()
            .map(|n| self.lookup_attribute(n.as_ref()))
            .collect()
    }

    pub fn element_set<I, S>(&self, names: I) -> Result<Subset>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        names
            .into_iter()
            .map(|n| self.lookup_element(n.as_ref()))
            .collect()
    }

    /// `X` as an index set.
    pub fn full_universe(&self) -> Subset {
        Subset::full(self.universe.len())
    }

    /// `E` as an index set.
    pub fn full_attributes(&self) -> Subset {
        Subset::full(self.attributes.len())
    }

    pub fn element_names<'a>(&'a self, set: &'a Subset) -> impl Iterator<Item = &'a str> + 'a {
        set.iter().map(|i| self.element(i))
    }
}

fn sorted_distinct<I, S>(names: I) -> Result<Vec<String>>
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let mut names: Vec<String> = names.into_iter().map(Into::into).collect();
    names.sort();
    if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateName(w[0].clone()));
    }
    Ok(names)
}

impl fmt::Debug for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({{{}}}, {{{}}})",
            self.universe.join(","),
            self.attributes.join(",")
        )
    }
}
