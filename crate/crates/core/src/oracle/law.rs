//! The catalog of image and inverse-image laws, and evaluation of a single
//! law on a single instance.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::mapping::{combine_pointwise, ClassMapping, CombineOp, MapMode, ResultMode};
use crate::soft::SoftSet;

/// Identifies a law.
///
/// `L1`–`L5` concern images and `L6`–`L10` inverse images; `N1` and `N2` are
/// the reversed inclusions of `L2` and `L4`, which do not hold in general.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LawId {
    L1,
    L2,
    L3,
    L4,
    L5,
    L6,
    L7,
    L8,
    L9,
    L10,
    N1,
    N2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// `lhs` soft-equals `rhs`.
    Equality,
    /// `lhs ⊆̃ rhs`.
    Inclusion,
}

/// Which soft class a law's arguments live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArgumentClass {
    Source,
    Target,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Violated,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Violated => "violated",
        }
    }
}

impl LawId {
    pub const ALL: [LawId; 12] = [
        LawId::L1,
        LawId::L2,
        LawId::L3,
        LawId::L4,
        LawId::L5,
        LawId::L6,
        LawId::L7,
        LawId::L8,
        LawId::L9,
        LawId::L10,
        LawId::N1,
        LawId::N2,
    ];

    /// `L1`–`L10`, the laws expected to hold everywhere.
    pub const THEOREMS: [LawId; 10] = [
        LawId::L1,
        LawId::L2,
        LawId::L3,
        LawId::L4,
        LawId::L5,
        LawId::L6,
        LawId::L7,
        LawId::L8,
        LawId::L9,
        LawId::L10,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LawId::L1 => "L1",
            LawId::L2 => "L2",
            LawId::L3 => "L3",
            LawId::L4 => "L4",
            LawId::L5 => "L5",
            LawId::L6 => "L6",
            LawId::L7 => "L7",
            LawId::L8 => "L8",
            LawId::L9 => "L9",
            LawId::L10 => "L10",
            LawId::N1 => "N1",
            LawId::N2 => "N2",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            LawId::L1 => "f(Φ̃) = Φ̃",
            LawId::L2 => "f(X̃) ⊆̃ Ỹ",
            LawId::L3 => "f(F ∪̃ G) = f(F) ∪̃ f(G)",
            LawId::L4 => "f(F ∩̃ G) ⊆̃ f(F) ∩̃ f(G)",
            LawId::L5 => "F ⊆̃ G ⇒ f(F) ⊆̃ f(G)",
            LawId::L6 => "f⁻¹(Φ̃) = Φ̃",
            LawId::L7 => "f⁻¹(Ỹ) = X̃",
            LawId::L8 => "f⁻¹(F ∪̃ G) = f⁻¹(F) ∪̃ f⁻¹(G)",
            LawId::L9 => "f⁻¹(F ∩̃ G) = f⁻¹(F) ∩̃ f⁻¹(G)",
            LawId::L10 => "F ⊆̃ G ⇒ f⁻¹(F) ⊆̃ f⁻¹(G)",
            LawId::N1 => "Ỹ ⊆̃ f(X̃)",
            LawId::N2 => "f(F) ∩̃ f(G) ⊆̃ f(F ∩̃ G)",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            LawId::L1 | LawId::L2 | LawId::L6 | LawId::L7 | LawId::N1 => 0,
            _ => 2,
        }
    }

    pub fn relation(self) -> Relation {
        match self {
            LawId::L1 | LawId::L3 | LawId::L6 | LawId::L7 | LawId::L8 | LawId::L9 => {
                Relation::Equality
            }
            _ => Relation::Inclusion,
        }
    }

    pub fn argument_class(self) -> ArgumentClass {
        match self {
            LawId::L6 | LawId::L7 | LawId::L8 | LawId::L9 | LawId::L10 => ArgumentClass::Target,
            _ => ArgumentClass::Source,
        }
    }

    /// Whether the law is one of the reversed inclusions.
    pub fn is_refutation_target(self) -> bool {
        matches!(self, LawId::N1 | LawId::N2)
    }

    /// Whether the law has an n-ary form (`⋃` or `⋂` over a family).
    pub fn has_family_form(self) -> bool {
        matches!(self, LawId::L3 | LawId::L4 | LawId::L8 | LawId::L9)
    }
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LawId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        LawId::ALL
            .into_iter()
            .find(|l| l.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| format!("unknown law `{s}`"))
    }
}

/// One evaluated instance of a law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub law: LawId,
    pub mapping: ClassMapping,
    pub arguments: Vec<SoftSet>,
    pub lhs: SoftSet,
    pub rhs: SoftSet,
    pub verdict: Verdict,
}

impl Witness {
    /// Evaluates the law again on the stored instance.
    pub fn recheck(&self) -> Result<Witness> {
        if self.arguments.len() > 2 {
            check_family_law(self.law, &self.mapping, &self.arguments)
        } else {
            check_law(self.law, &self.mapping, &self.arguments)
        }
    }
}

fn require_arity(law: LawId, arguments: &[&SoftSet], expected: usize) -> Result<()> {
    if arguments.len() != expected {
        return Err(Error::ArityMismatch {
            law,
            expected,
            got: arguments.len(),
        });
    }
    Ok(())
}

fn require_class(law: LawId, mapping: &ClassMapping, arguments: &[&SoftSet]) -> Result<()> {
    let class = match law.argument_class() {
        ArgumentClass::Source => mapping.source(),
        ArgumentClass::Target => mapping.target(),
    };
    if arguments.iter().any(|a| a.context() != class) {
        return Err(Error::ContextMismatch);
    }
    Ok(())
}

fn relate(relation: Relation, lhs: &SoftSet, rhs: &SoftSet) -> Result<Verdict> {
    let holds = match relation {
        Relation::Equality => lhs.soft_equal(rhs)?,
        Relation::Inclusion => lhs.is_soft_subset(rhs)?,
    };
    Ok(if holds {
        Verdict::Holds
    } else {
        Verdict::Violated
    })
}

fn unmet(law: LawId, reason: &'static str) -> Error {
    Error::SideConditionUnmet { law, reason }
}

/// Evaluates `law` on one instance, with images and inverse images in full
/// mode.
///
/// Errors with [`Error::SideConditionUnmet`] when the instance is outside the
/// law's hypotheses: disjoint parameter sets for the intersection laws, a
/// premise `F ⊆̃ G` that fails for the monotonicity laws, or a partial
/// attribute map for `L7`.
pub fn check_law(law: LawId, mapping: &ClassMapping, arguments: &[SoftSet]) -> Result<Witness> {
    let refs: Vec<&SoftSet> = arguments.iter().collect();
    let Evaluation { lhs, rhs, verdict } = evaluate(law, mapping, &refs)?;
    Ok(Witness {
        law,
        mapping: mapping.clone(),
        arguments: arguments.to_vec(),
        lhs,
        rhs,
        verdict,
    })
}

/// Both sides of a law on one instance.
pub(crate) struct Evaluation {
    pub lhs: SoftSet,
    pub rhs: SoftSet,
    pub verdict: Verdict,
}

/// [`check_law`] without building a [`Witness`].
pub(crate) fn evaluate(
    law: LawId,
    mapping: &ClassMapping,
    arguments: &[&SoftSet],
) -> Result<Evaluation> {
    require_arity(law, arguments, law.arity())?;
    require_class(law, mapping, arguments)?;
    let full = ResultMode::Full;
    let image = |s: &SoftSet| mapping.image(s, full);
    let preimage = |s: &SoftSet| mapping.preimage(s, full);
    // image for source-class laws, inverse image for target-class laws
    let push = |s: &SoftSet| match law.argument_class() {
        ArgumentClass::Source => image(s),
        ArgumentClass::Target => preimage(s),
    };
    let (x, y) = (mapping.source(), mapping.target());

    let (lhs, rhs) = match law {
        LawId::L1 => (image(&SoftSet::full_null(x))?, SoftSet::full_null(y)),
        LawId::L2 => (
            image(&SoftSet::full_absolute(x))?,
            SoftSet::full_absolute(y),
        ),
        LawId::N1 => (
            SoftSet::full_absolute(y),
            image(&SoftSet::full_absolute(x))?,
        ),
        LawId::L6 => (preimage(&SoftSet::full_null(y))?, SoftSet::full_null(x)),
        LawId::L7 => {
            if mapping.mode() != MapMode::Strict {
                return Err(unmet(law, "attribute map is partial"));
            }
            (
                preimage(&SoftSet::full_absolute(y))?,
                SoftSet::full_absolute(x),
            )
        }
        LawId::L3 | LawId::L8 => {
            let (f, g) = (arguments[0], arguments[1]);
            (
                push(&f.union(g)?)?,
                combine_pointwise(&push(f)?, &push(g)?, CombineOp::Union)?,
            )
        }
        LawId::L4 | LawId::L9 | LawId::N2 => {
            let (f, g) = (arguments[0], arguments[1]);
            let meet = f
                .intersection(g)
                .map_err(|_| unmet(law, "parameter sets are disjoint"))?;
            let of_meet = push(&meet)?;
            let meet_of = combine_pointwise(&push(f)?, &push(g)?, CombineOp::Intersection)?;
            if law == LawId::N2 {
                (meet_of, of_meet)
            } else {
                (of_meet, meet_of)
            }
        }
        LawId::L5 | LawId::L10 => {
            let (f, g) = (arguments[0], arguments[1]);
            if !f.is_soft_subset(g)? {
                return Err(unmet(law, "premise F ⊆̃ G is false"));
            }
            (push(f)?, push(g)?)
        }
    };
    let verdict = relate(law.relation(), &lhs, &rhs)?;
    Ok(Evaluation { lhs, rhs, verdict })
}

/// Evaluates the n-ary form of `L3`, `L4`, `L8` or `L9` on a family of at
/// least one soft set.
///
/// The family intersection must have a nonempty parameter set.
pub fn check_family_law(law: LawId, mapping: &ClassMapping, family: &[SoftSet]) -> Result<Witness> {
    if !law.has_family_form() {
        return Err(Error::ArityMismatch {
            law,
            expected: law.arity(),
            got: family.len(),
        });
    }
    if family.is_empty() {
        return Err(Error::ArityMismatch {
            law,
            expected: 1,
            got: 0,
        });
    }
    require_class(law, mapping, &family.iter().collect::<Vec<_>>())?;
    let push = |s: &SoftSet| match law.argument_class() {
        ArgumentClass::Source => mapping.image(s, ResultMode::Full),
        ArgumentClass::Target => mapping.preimage(s, ResultMode::Full),
    };
    let (op, combined) = match law {
        LawId::L3 | LawId::L8 => (CombineOp::Union, fold(family, |a, b| a.union(b))?),
        _ => (
            CombineOp::Intersection,
            fold(family, |a, b| a.intersection(b))
                .map_err(|_| unmet(law, "family parameter sets have empty intersection"))?,
        ),
    };
    let lhs = push(&combined)?;
    let mut pushed = family.iter().map(push);
    let first = pushed.next().expect("nonempty family")?;
    let rhs = pushed.try_fold(first, |acc, next| combine_pointwise(&acc, &next?, op))?;
    let verdict = relate(law.relation(), &lhs, &rhs)?;
    Ok(Witness {
        law,
        mapping: mapping.clone(),
        arguments: family.to_vec(),
        lhs,
        rhs,
        verdict,
    })
}

fn fold(
    family: &[SoftSet],
    step: impl Fn(&SoftSet, &SoftSet) -> Result<SoftSet>,
) -> Result<SoftSet> {
    let (first, rest) = family.split_first().expect("nonempty family");
    rest.iter().try_fold(first.clone(), |acc, s| step(&acc, s))
}
