//! Canonical JSON documents for contexts, soft sets, mappings and reports.
//!
//! Canonical output is compact JSON with object keys sorted and every set
//! emitted in context order (sorted by name), so equal values always
//! serialize to identical bytes. Contexts are written inline; on input a
//! context may also be given as a name resolved through a
//! [`ContextRegistry`].
//!
//! Schemas:
//!
//! ```text
//! context  {"universe":[..],"attributes":[..]}
//! softset  {"context":CTX,"values":{attr:[elem,..],..}}
//! mapping  {"source":CTX,"target":CTX,"u":{x:y,..},"p":{e:e',..},"mode":"strict"|"partial"}
//! report   {"law":..,"instances":N,"skipped":N,"violations":[witness,..]}
//! witness  {"mapping":..,"arguments":[..],"lhs":..,"rhs":..,"verdict":"holds"|"violated"}
//! ```

use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::context::Context;
use crate::error::Error;
use crate::mapping::{ClassMapping, MapMode};
use crate::oracle::{LawReport, Report, Witness};
use crate::soft::SoftSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("schema error at {location}: {message}")]
    Schema { location: String, message: String },
    #[error("invalid value at {location}: {source}")]
    Invalid {
        location: String,
        #[source]
        source: Error,
    },
}

impl DocumentError {
    fn schema(location: impl Into<String>, message: impl Into<String>) -> Self {
        DocumentError::Schema {
            location: location.into(),
            message: message.into(),
        }
    }

    fn invalid(location: impl Into<String>, source: Error) -> Self {
        DocumentError::Invalid {
            location: location.into(),
            source,
        }
    }

    /// The underlying validation error, if any.
    pub fn validation(&self) -> Option<&Error> {
        match self {
            DocumentError::Invalid { source, .. } => Some(source),
            _ => None,
        }
    }
}

type DocResult<T> = Result<T, DocumentError>;

/// A parsed input document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Context(Arc<Context>),
    SoftSet(SoftSet),
    Mapping(ClassMapping),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DocumentKind {
    Context,
    SoftSet,
    Mapping,
    Report,
}

impl DocumentKind {
    pub fn as_str(self) -> &'static str {
        match self {
            DocumentKind::Context => "context",
            DocumentKind::SoftSet => "softset",
            DocumentKind::Mapping => "mapping",
            DocumentKind::Report => "report",
        }
    }

    fn fields(self) -> &'static [&'static str] {
        match self {
            DocumentKind::Context => &["universe", "attributes"],
            DocumentKind::SoftSet => &["context", "values"],
            DocumentKind::Mapping => &["source", "target", "u", "p", "mode"],
            DocumentKind::Report => &["law", "instances", "skipped", "violations"],
        }
    }

    /// Infers the kind of a document from its field names.
    fn detect(object: &Map<String, Value>) -> Option<Self> {
        [
            DocumentKind::Mapping,
            DocumentKind::SoftSet,
            DocumentKind::Context,
            DocumentKind::Report,
        ]
        .into_iter()
        .find(|kind| {
            let distinctive: &[&str] = match kind {
                DocumentKind::Mapping => &["u", "p", "source", "target"],
                DocumentKind::SoftSet => &["values"],
                DocumentKind::Context => &["universe", "attributes"],
                DocumentKind::Report => &["law", "violations"],
            };
            distinctive.iter().any(|f| object.contains_key(*f))
        })
    }
}

/// Named contexts that documents may refer to by string.
#[derive(Debug, Clone, Default)]
pub struct ContextRegistry {
    named: BTreeMap<String, Arc<Context>>,
}

impl ContextRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, name: impl Into<String>, context: Arc<Context>) {
        self.named.insert(name.into(), context);
    }

    pub fn get(&self, name: &str) -> Option<&Arc<Context>> {
        self.named.get(name)
    }
}

fn parse_json(bytes: &[u8]) -> DocResult<Value> {
    serde_json::from_slice(bytes).map_err(|e| DocumentError::Syntax(e.to_string()))
}

fn as_object<'a>(value: &'a Value, location: &str) -> DocResult<&'a Map<String, Value>> {
    value
        .as_object()
        .ok_or_else(|| DocumentError::schema(location, "expected an object"))
}

fn check_fields(object: &Map<String, Value>, kind: DocumentKind, location: &str) -> DocResult<()> {
    if let Some(unknown) = object.keys().find(|k| !kind.fields().contains(&k.as_str())) {
        return Err(DocumentError::schema(
            location,
            format!("unknown field `{unknown}` in {} document", kind.as_str()),
        ));
    }
    Ok(())
}

fn required<'a>(
    object: &'a Map<String, Value>,
    field: &str,
    location: &str,
) -> DocResult<&'a Value> {
    object
        .get(field)
        .ok_or_else(|| DocumentError::schema(location, format!("missing field `{field}`")))
}

fn string_list<'a>(value: &'a Value, location: &str) -> DocResult<Vec<&'a str>> {
    let items = value
        .as_array()
        .ok_or_else(|| DocumentError::schema(location, "expected an array of names"))?;
    items
        .iter()
        .enumerate()
        .map(|(i, v)| {
            v.as_str().ok_or_else(|| {
                DocumentError::schema(format!("{location}[{i}]"), "expected a string")
            })
        })
        .collect()
}

fn string_map<'a>(value: &'a Value, location: &str) -> DocResult<Vec<(&'a str, &'a str)>> {
    as_object(value, location)?
        .iter()
        .map(|(k, v)| {
            v.as_str().map(|v| (k.as_str(), v)).ok_or_else(|| {
                DocumentError::schema(format!("{location}.{k}"), "expected a string")
            })
        })
        .collect()
}

fn context_from_object(object: &Map<String, Value>, location: &str) -> DocResult<Arc<Context>> {
    check_fields(object, DocumentKind::Context, location)?;
    let universe_at = format!("{location}.universe");
    let attributes_at = format!("{location}.attributes");
    let universe = string_list(required(object, "universe", location)?, &universe_at)?;
    let attributes = string_list(required(object, "attributes", location)?, &attributes_at)?;
    // report duplicates against the list they occur in
    Context::new(universe.iter().copied(), Vec::<&str>::new())
        .map_err(|e| DocumentError::invalid(&universe_at, e))?;
    Context::new(Vec::<&str>::new(), attributes.iter().copied())
        .map_err(|e| DocumentError::invalid(&attributes_at, e))?;
    let context = Context::new(universe, attributes).expect("names checked above");
    Ok(Arc::new(context))
}

fn context_ref(
    value: &Value,
    location: &str,
    registry: &ContextRegistry,
) -> DocResult<Arc<Context>> {
    match value {
        Value::String(name) => registry.get(name).cloned().ok_or_else(|| {
            DocumentError::schema(location, format!("unknown context name `{name}`"))
        }),
        Value::Object(object) => context_from_object(object, location),
        _ => Err(DocumentError::schema(
            location,
            "expected an inline context or a context name",
        )),
    }
}

fn soft_set_from_object(
    object: &Map<String, Value>,
    location: &str,
    registry: &ContextRegistry,
) -> DocResult<SoftSet> {
    check_fields(object, DocumentKind::SoftSet, location)?;
    let context_at = format!("{location}.context");
    let values_at = format!("{location}.values");
    let context = context_ref(
        required(object, "context", location)?,
        &context_at,
        registry,
    )?;
    let values = as_object(required(object, "values", location)?, &values_at)?;

    let mut entries = Vec::with_capacity(values.len());
    for (attr, elems) in values {
        let attr_at = format!("{values_at}.{attr}");
        if context.attribute_index(attr).is_none() {
            return Err(DocumentError::invalid(
                &values_at,
                Error::UnknownAttribute(attr.clone()),
            ));
        }
        let elems = string_list(elems, &attr_at)?;
        if let Some((i, e)) = elems
            .iter()
            .enumerate()
            .find(|(_, e)| context.element_index(e).is_none())
        {
            return Err(DocumentError::invalid(
                format!("{attr_at}[{i}]"),
                Error::UnknownElement((*e).to_owned()),
            ));
        }
        entries.push((attr.as_str(), elems));
    }
    SoftSet::new(&context, entries).map_err(|e| DocumentError::invalid(&values_at, e))
}

fn mapping_from_object(
    object: &Map<String, Value>,
    location: &str,
    registry: &ContextRegistry,
) -> DocResult<ClassMapping> {
    check_fields(object, DocumentKind::Mapping, location)?;
    let source = context_ref(
        required(object, "source", location)?,
        &format!("{location}.source"),
        registry,
    )?;
    let target = context_ref(
        required(object, "target", location)?,
        &format!("{location}.target"),
        registry,
    )?;
    let u_at = format!("{location}.u");
    let p_at = format!("{location}.p");
    let u = string_map(required(object, "u", location)?, &u_at)?;
    let p = string_map(required(object, "p", location)?, &p_at)?;
    let mode = match object.get("mode") {
        None => MapMode::Strict,
        Some(Value::String(s)) if s == "strict" => MapMode::Strict,
        Some(Value::String(s)) if s == "partial" => MapMode::Partial,
        Some(_) => {
            return Err(DocumentError::schema(
                format!("{location}.mode"),
                "expected \"strict\" or \"partial\"",
            ))
        }
    };
    ClassMapping::new(&source, &target, u, p, mode).map_err(|e| {
        let at = match &e {
            Error::UnknownAttribute(_) | Error::PartialAttributeMap(_) => &p_at,
            Error::DuplicateName(n) if source.attribute_index(n).is_some() => &p_at,
            _ => &u_at,
        };
        DocumentError::invalid(at, e)
    })
}

/// Parses any input document, inferring its kind from its fields.
pub fn parse_document(bytes: &[u8], registry: &ContextRegistry) -> DocResult<Document> {
    let value = parse_json(bytes)?;
    let object = as_object(&value, "$")?;
    match DocumentKind::detect(object) {
        Some(DocumentKind::Context) => context_from_object(object, "$").map(Document::Context),
        Some(DocumentKind::SoftSet) => {
            soft_set_from_object(object, "$", registry).map(Document::SoftSet)
        }
        Some(DocumentKind::Mapping) => {
            mapping_from_object(object, "$", registry).map(Document::Mapping)
        }
        Some(DocumentKind::Report) => Err(DocumentError::schema(
            "$",
            "report documents are output only",
        )),
        None => Err(DocumentError::schema("$", "cannot tell the document kind")),
    }
}

fn expect_kind(bytes: &[u8], kind: DocumentKind) -> DocResult<Map<String, Value>> {
    let value = parse_json(bytes)?;
    let object = as_object(&value, "$")?.clone();
    match DocumentKind::detect(&object) {
        Some(k) if k != kind => Err(DocumentError::schema(
            "$",
            format!(
                "expected a {} document, found a {}",
                kind.as_str(),
                k.as_str()
            ),
        )),
        _ => Ok(object),
    }
}

pub fn parse_context(bytes: &[u8]) -> DocResult<Arc<Context>> {
    context_from_object(&expect_kind(bytes, DocumentKind::Context)?, "$")
}

pub fn parse_soft_set(bytes: &[u8], registry: &ContextRegistry) -> DocResult<SoftSet> {
    soft_set_from_object(&expect_kind(bytes, DocumentKind::SoftSet)?, "$", registry)
}

pub fn parse_mapping(bytes: &[u8], registry: &ContextRegistry) -> DocResult<ClassMapping> {
    mapping_from_object(&expect_kind(bytes, DocumentKind::Mapping)?, "$", registry)
}

/// Values with a canonical JSON form.
pub trait Canonical {
    fn to_json(&self) -> Value;

    /// Compact JSON with sorted keys.
    fn to_canonical(&self) -> String {
        // serde_json's default map is ordered by key
        serde_json::to_string(&self.to_json()).expect("JSON values always serialize")
    }
}

impl Canonical for Context {
    fn to_json(&self) -> Value {
        json!({ "universe": self.universe(), "attributes": self.attributes() })
    }
}

impl Canonical for SoftSet {
    fn to_json(&self) -> Value {
        let values: Map<String, Value> = self
            .named_entries()
            .map(|(attr, elems)| (attr.to_owned(), json!(elems)))
            .collect();
        json!({ "context": self.context().to_json(), "values": values })
    }
}

impl Canonical for ClassMapping {
    fn to_json(&self) -> Value {
        let table = |pairs: &mut dyn Iterator<Item = (&str, &str)>| -> Map<String, Value> {
            pairs.map(|(k, v)| (k.to_owned(), json!(v))).collect()
        };
        json!({
            "source": self.source().to_json(),
            "target": self.target().to_json(),
            "u": table(&mut self.point_table()),
            "p": table(&mut self.attribute_table()),
            "mode": self.mode().as_str(),
        })
    }
}

impl Canonical for Witness {
    fn to_json(&self) -> Value {
        json!({
            "mapping": self.mapping.to_json(),
            "arguments": self.arguments.iter().map(Canonical::to_json).collect::<Vec<_>>(),
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "verdict": self.verdict.as_str(),
        })
    }
}

impl Canonical for LawReport {
    fn to_json(&self) -> Value {
        json!({
            "law": self.label(),
            "instances": self.instances,
            "skipped": self.skipped,
            "violations": self.violations.iter().map(|v| v.witness.to_json()).collect::<Vec<_>>(),
        })
    }
}

/// One report document per law, as a JSON array.
impl Canonical for Report {
    fn to_json(&self) -> Value {
        Value::Array(self.laws.iter().map(Canonical::to_json).collect())
    }
}

impl Canonical for Document {
    fn to_json(&self) -> Value {
        match self {
            Document::Context(c) => c.to_json(),
            Document::SoftSet(s) => s.to_json(),
            Document::Mapping(m) => m.to_json(),
        }
    }
}
