//! Soft constraint satisfaction problems over a c-semiring.
//!
//! A problem is a finite set of variables with finite domains plus a
//! collection of soft constraints, each assigning a preference value to every
//! tuple over its scope. The preference of a complete assignment is the
//! multiplicative combination of the values its projections pick up from
//! every constraint; optimal solutions are the assignments whose preference
//! is maximal in the induced order, which for product semirings means
//! Pareto-maximal.
//!
//! Solving is deliberately exhaustive: domains are enumerated in full, in the
//! canonical lexicographic order given by variable order and domain order.

use std::collections::BTreeMap;

use crate::semiring::{PrefValue, Semiring};
use crate::table::Shape;

/// A named variable with its finite, ordered domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    pub domain: Vec<String>,
}

impl Variable {
    pub fn new(name: impl Into<String>, domain: impl IntoIterator<Item = impl Into<String>>) -> Self {
        Variable { name: name.into(), domain: domain.into_iter().map(Into::into).collect() }
    }
}

/// A soft constraint: a total preference table over the tuples of its scope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoftConstraint {
    scope: Vec<String>,
    table: BTreeMap<Vec<String>, PrefValue>,
}

impl SoftConstraint {
    pub fn new(
        scope: impl IntoIterator<Item = impl Into<String>>,
        entries: impl IntoIterator<Item = (Vec<String>, PrefValue)>,
    ) -> Self {
        SoftConstraint {
            scope: scope.into_iter().map(Into::into).collect(),
            table: entries.into_iter().collect(),
        }
    }

    pub fn scope(&self) -> &[String] {
        &self.scope
    }

    pub fn table(&self) -> &BTreeMap<Vec<String>, PrefValue> {
        &self.table
    }

    /// The preference of one scope tuple, if present.
    pub fn value(&self, tuple: &[String]) -> Option<&PrefValue> {
        self.table.get(tuple)
    }
}

/// A complete assignment of values to variables (equally, a joint strategy:
/// players assign strategies). Entries keep the owning problem's canonical
/// order, so equal assignments compare and render identically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JointAssignment {
    entries: Vec<(String, String)>,
}

impl JointAssignment {
    pub fn new(entries: impl IntoIterator<Item = (impl Into<String>, impl Into<String>)>) -> Self {
        JointAssignment {
            entries: entries.into_iter().map(|(k, v)| (k.into(), v.into())).collect(),
        }
    }

    pub fn get(&self, name: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == name).map(|(_, v)| v.as_str())
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.entries
    }

    /// Projects the assignment onto a scope, returning the values in scope
    /// order.
    pub fn project(&self, scope: &[String]) -> Result<Vec<String>, ScspError> {
        scope
            .iter()
            .map(|name| {
                self.get(name)
                    .map(str::to_owned)
                    .ok_or_else(|| ScspError::UnknownVariable { name: name.clone() })
            })
            .collect()
    }

    /// Canonical one-line rendering: values are concatenated when every value
    /// is a single character (`bbb`), and comma-joined otherwise.
    pub fn compact(&self) -> String {
        let values: Vec<&str> = self.entries.iter().map(|(_, v)| v.as_str()).collect();
        if values.iter().all(|v| v.chars().count() == 1) {
            values.concat()
        } else {
            values.join(",")
        }
    }
}

/// Errors raised when building or querying a problem.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScspError {
    #[error("UnknownVariable: no variable named {name}")]
    UnknownVariable { name: String },
    #[error("NotClassical: the problem's semiring is {kind}, not classical")]
    NotClassical { kind: String },
    #[error("DuplicateVariable: variable {name} is declared twice")]
    DuplicateVariable { name: String },
    #[error("EmptyDomain: variable {name} has no domain values")]
    EmptyDomain { name: String },
    #[error("InvalidName: {text:?} is empty or contains a comma")]
    InvalidName { text: String },
    #[error("DuplicateDomainValue: variable {name} lists value {value} twice")]
    DuplicateDomainValue { name: String, value: String },
    #[error("EmptyScope: a constraint has an empty scope")]
    EmptyScope,
    #[error("DuplicateScopeVariable: variable {name} appears twice in one scope")]
    DuplicateScopeVariable { name: String },
    #[error("UnknownValue: {value} is not in the domain of {name}")]
    UnknownValue { name: String, value: String },
    #[error("TableNotTotal: constraint over ({scope}) must assign exactly one value to each of {expected} tuples, got {actual}")]
    TableNotTotal { scope: String, expected: usize, actual: usize },
    #[error("ArityMismatch: key ({key}) does not match scope ({scope})")]
    ArityMismatch { key: String, scope: String },
    #[error("ValueOutsideCarrier: {value} does not belong to the {kind} carrier")]
    ValueOutsideCarrier { kind: String, value: String },
    #[error("IncompleteAssignment: no value for variable {name}")]
    IncompleteAssignment { name: String },
}

/// Dense, index-based view of one constraint, precomputed at construction.
#[derive(Debug, Clone)]
struct Compiled {
    vars: Vec<usize>,
    strides: Vec<usize>,
    values: Vec<PrefValue>,
}

/// A soft constraint satisfaction problem.
#[derive(Debug, Clone)]
pub struct Scsp {
    semiring: Semiring,
    variables: Vec<Variable>,
    constraints: Vec<SoftConstraint>,
    shape: Shape,
    compiled: Vec<Compiled>,
}

impl PartialEq for Scsp {
    fn eq(&self, other: &Self) -> bool {
        self.semiring == other.semiring
            && self.variables == other.variables
            && self.constraints == other.constraints
    }
}
impl Eq for Scsp {}

impl Scsp {
    /// Validates and compiles a problem: variable names must be unique and
    /// comma-free, domains non-empty and duplicate-free, every scope must
    /// name distinct existing variables, and every table must assign exactly
    /// one in-carrier value to each scope tuple. Several constraints may
    /// share a scope.
    pub fn new(
        semiring: Semiring,
        variables: Vec<Variable>,
        constraints: Vec<SoftConstraint>,
    ) -> Result<Scsp, ScspError> {
        for v in &variables {
            if v.name.is_empty() || v.name.contains(',') {
                return Err(ScspError::InvalidName { text: v.name.clone() });
            }
            if variables.iter().filter(|w| w.name == v.name).count() > 1 {
                return Err(ScspError::DuplicateVariable { name: v.name.clone() });
            }
            if v.domain.is_empty() {
                return Err(ScspError::EmptyDomain { name: v.name.clone() });
            }
            for d in &v.domain {
                if d.is_empty() || d.contains(',') {
                    return Err(ScspError::InvalidName { text: d.clone() });
                }
                if v.domain.iter().filter(|e| *e == d).count() > 1 {
                    return Err(ScspError::DuplicateDomainValue {
                        name: v.name.clone(),
                        value: d.clone(),
                    });
                }
            }
        }
        let position = |name: &str| variables.iter().position(|v| v.name == name);
        let mut compiled = Vec::with_capacity(constraints.len());
        for c in &constraints {
            if c.scope.is_empty() {
                return Err(ScspError::EmptyScope);
            }
            let mut vars = Vec::with_capacity(c.scope.len());
            for name in &c.scope {
                if c.scope.iter().filter(|n| *n == name).count() > 1 {
                    return Err(ScspError::DuplicateScopeVariable { name: name.clone() });
                }
                vars.push(
                    position(name).ok_or_else(|| ScspError::UnknownVariable { name: name.clone() })?,
                );
            }
            let local = Shape::new(vars.iter().map(|&i| variables[i].domain.len()).collect());
            if c.table.len() != local.len() {
                return Err(ScspError::TableNotTotal {
                    scope: c.scope.join(","),
                    expected: local.len(),
                    actual: c.table.len(),
                });
            }
            let mut values = vec![semiring.zero(); local.len()];
            for (key, value) in &c.table {
                if key.len() != c.scope.len() {
                    return Err(ScspError::ArityMismatch {
                        key: key.join(","),
                        scope: c.scope.join(","),
                    });
                }
                let mut coords = Vec::with_capacity(key.len());
                for (label, &var) in key.iter().zip(&vars) {
                    let domain = &variables[var].domain;
                    let pos = domain.iter().position(|d| d == label).ok_or_else(|| {
                        ScspError::UnknownValue {
                            name: variables[var].name.clone(),
                            value: label.clone(),
                        }
                    })?;
                    coords.push(pos);
                }
                if !semiring.contains(value) {
                    return Err(ScspError::ValueOutsideCarrier {
                        kind: semiring.describe(),
                        value: value.to_string(),
                    });
                }
                values[local.flatten(&coords)] = value.clone();
            }
            compiled.push(Compiled { vars, strides: strides_of(&local), values });
        }
        let shape = Shape::new(variables.iter().map(|v| v.domain.len()).collect());
        Ok(Scsp { semiring, variables, constraints, shape, compiled })
    }

    pub fn semiring(&self) -> &Semiring {
        &self.semiring
    }

    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn constraints(&self) -> &[SoftConstraint] {
        &self.constraints
    }

    /// Number of complete assignments.
    pub fn assignment_count(&self) -> usize {
        self.shape.len()
    }

    /// All complete assignments in canonical lexicographic order.
    pub fn assignments(&self) -> impl Iterator<Item = JointAssignment> + '_ {
        self.shape.iter().map(move |coords| self.assignment_at(&coords))
    }

    fn assignment_at(&self, coords: &[usize]) -> JointAssignment {
        JointAssignment {
            entries: self
                .variables
                .iter()
                .zip(coords)
                .map(|(v, &i)| (v.name.clone(), v.domain[i].clone()))
                .collect(),
        }
    }

    fn coords_of(&self, s: &JointAssignment) -> Result<Vec<usize>, ScspError> {
        self.variables
            .iter()
            .map(|v| {
                let label = s
                    .get(&v.name)
                    .ok_or_else(|| ScspError::IncompleteAssignment { name: v.name.clone() })?;
                v.domain.iter().position(|d| d == label).ok_or_else(|| ScspError::UnknownValue {
                    name: v.name.clone(),
                    value: label.to_string(),
                })
            })
            .collect()
    }

    fn preference_at(&self, coords: &[usize]) -> PrefValue {
        let mut acc = self.semiring.one();
        for c in &self.compiled {
            let flat: usize =
                c.vars.iter().zip(&c.strides).map(|(&v, &s)| coords[v] * s).sum();
            acc = self
                .semiring
                .times(&acc, &c.values[flat])
                .expect("constraint values were validated against the carrier");
        }
        acc
    }

    /// The preference of a complete assignment: the `×`-combination over all
    /// constraints of the value picked out by the assignment's projection
    /// onto each scope. With no constraints this is the semiring's `1`.
    pub fn preference(&self, s: &JointAssignment) -> Result<PrefValue, ScspError> {
        Ok(self.preference_at(&self.coords_of(s)?))
    }

    /// Enumerates all optimal solutions with their preferences, in canonical
    /// assignment order. A solution is optimal when no assignment has a
    /// strictly greater preference in the induced order; for products this is
    /// Pareto-maximality.
    pub fn enumerate_optimal(&self) -> Vec<(JointAssignment, PrefValue)> {
        let mut frontier: Vec<(Vec<usize>, PrefValue)> = Vec::new();
        for coords in self.shape.iter() {
            let p = self.preference_at(&coords);
            let dominated = frontier
                .iter()
                .any(|(_, q)| self.semiring.lt(&p, q).expect("carrier values"));
            if dominated {
                continue;
            }
            frontier.retain(|(_, q)| !self.semiring.lt(q, &p).expect("carrier values"));
            frontier.push((coords, p));
        }
        frontier
            .into_iter()
            .map(|(coords, p)| (self.assignment_at(&coords), p))
            .collect()
    }

    /// For classical problems only: whether some assignment satisfies every
    /// constraint (preference `true`).
    pub fn is_consistent(&self) -> Result<bool, ScspError> {
        if self.semiring != Semiring::Classical {
            return Err(ScspError::NotClassical { kind: self.semiring.describe() });
        }
        let one = self.semiring.one();
        Ok(self.shape.iter().any(|coords| self.preference_at(&coords) == one))
    }
}

fn strides_of(shape: &Shape) -> Vec<usize> {
    let sizes = shape.sizes();
    let mut strides = vec![1usize; sizes.len()];
    for j in (0..sizes.len().saturating_sub(1)).rev() {
        strides[j] = strides[j + 1] * sizes[j + 1];
    }
    strides
}
