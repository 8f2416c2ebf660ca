//! JSON readers and writers for problems and games.
//!
//! Problem files look like:
//!
//! ```json
//! {
//!   "semiring": { "kind": "fuzzy" },
//!   "variables": [ { "name": "x", "domain": ["a", "b"] } ],
//!   "constraints": [ { "scope": ["x"], "table": { "a": "0.4", "b": "1" } } ]
//! }
//! ```
//!
//! and game files like:
//!
//! ```json
//! {
//!   "carrier": { "kind": "payoff" },
//!   "players": [ { "name": "p1", "strategies": ["c", "n"] } ],
//!   "neigh": { "p1": ["p2"], "p2": ["p1"] },
//!   "payoffs": { "p1": { "c,c": "3", "c,n": "4", "n,c": "0", "n,n": "1" } }
//! }
//! ```
//!
//! Product semirings are written `{ "kind": { "product": ["fuzzy", "weighted"] } }`.
//! All preference and payoff values are strings in the same syntax the values
//! print with, so serialising and re-parsing is the identity. Table keys
//! are the tuple's labels joined with commas: scope order for constraints,
//! canonical local-scope order (neighbours by player order, owner last) for
//! payoff tables, and every key must be present.
//!
//! File-shape problems (bad syntax, unknown carrier kinds, unparsable values,
//! missing or extraneous table keys) are [`ParseError`]s; everything else is
//! reported by the model constructors and passed through unchanged.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::game::{GameError, GraphicalGame, Player};
use crate::scsp::{Scsp, ScspError, SoftConstraint, Variable};
use crate::semiring::{BaseKind, PrefValue, Semiring};

/// A problem or game file that is not well formed, independent of model
/// semantics.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("ParseError: {message}")]
    Syntax { message: String },
    #[error("ParseError: unknown carrier kind {text:?}")]
    UnknownKind { text: String },
    #[error("ParseError: {value:?} is not a valid {kind} value")]
    BadValue { kind: String, value: String },
    #[error("ParseError: table over ({scope}) is missing the key {key:?}")]
    MissingTableKey { scope: String, key: String },
    #[error("ParseError: table over ({scope}) has an unexpected key {key:?}")]
    UnexpectedTableKey { scope: String, key: String },
}

/// Reading a problem can fail on the file shape or on model validation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScspReadError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Build(#[from] ScspError),
}

/// Reading a game can fail on the file shape or on model validation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GameReadError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Build(#[from] GameError),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScspFile {
    semiring: CarrierField,
    variables: Vec<VariableField>,
    constraints: Vec<ConstraintField>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CarrierField {
    kind: KindField,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum KindField {
    Base(String),
    Product { product: Vec<String> },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VariableField {
    name: String,
    domain: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConstraintField {
    scope: Vec<String>,
    table: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GameFile {
    carrier: CarrierField,
    players: Vec<PlayerField>,
    neigh: BTreeMap<String, Vec<String>>,
    payoffs: BTreeMap<String, BTreeMap<String, String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PlayerField {
    name: String,
    strategies: Vec<String>,
}

fn parse_kind(text: &str) -> Result<BaseKind, ParseError> {
    BaseKind::parse(text).ok_or_else(|| ParseError::UnknownKind { text: text.to_string() })
}

impl CarrierField {
    fn to_semiring(&self) -> Result<Semiring, ParseError> {
        match &self.kind {
            KindField::Base(name) => Ok(Semiring::from_base(parse_kind(name)?)),
            KindField::Product { product } => {
                let kinds: Result<Vec<BaseKind>, ParseError> =
                    product.iter().map(|k| parse_kind(k)).collect();
                Ok(Semiring::Product(kinds?))
            }
        }
    }

    fn of_semiring(semiring: &Semiring) -> CarrierField {
        let kind = match semiring {
            Semiring::Product(kinds) => KindField::Product {
                product: kinds.iter().map(|k| k.name().to_string()).collect(),
            },
            base => KindField::Base(
                base.base_kind().expect("non-product semirings are base kinds").name().to_string(),
            ),
        };
        CarrierField { kind }
    }
}

/// All comma-joined tuples over the given label sets, in canonical order.
fn expected_keys(columns: &[&[String]]) -> Vec<String> {
    let mut keys = vec![String::new()];
    for (i, column) in columns.iter().enumerate() {
        let mut grown = Vec::with_capacity(keys.len() * column.len());
        for prefix in &keys {
            for label in *column {
                let mut key = prefix.clone();
                if i > 0 {
                    key.push(',');
                }
                key.push_str(label);
                grown.push(key);
            }
        }
        keys = grown;
    }
    keys
}

/// Checks a raw table against the expected key set, then parses its values.
/// Returns `None` (deferring to model validation) when the expected keys
/// cannot even be computed from the declared columns.
fn check_and_parse_table(
    scope: &[String],
    columns: Option<Vec<&[String]>>,
    table: &BTreeMap<String, String>,
    semiring: &Semiring,
) -> Result<Vec<(Vec<String>, PrefValue)>, ParseError> {
    if let Some(columns) = columns {
        let expected = expected_keys(&columns);
        let expected_set: BTreeSet<&String> = expected.iter().collect();
        for key in table.keys() {
            if !expected_set.contains(key) {
                return Err(ParseError::UnexpectedTableKey {
                    scope: scope.join(","),
                    key: key.clone(),
                });
            }
        }
        for key in &expected {
            if !table.contains_key(key) {
                return Err(ParseError::MissingTableKey {
                    scope: scope.join(","),
                    key: key.clone(),
                });
            }
        }
    }
    table
        .iter()
        .map(|(key, text)| {
            let value = semiring.parse_value(text).map_err(|_| ParseError::BadValue {
                kind: semiring.describe(),
                value: text.clone(),
            })?;
            Ok((key.split(',').map(str::to_string).collect(), value))
        })
        .collect()
}

/// Parses a problem file.
pub fn scsp_from_json(text: &str) -> Result<Scsp, ScspReadError> {
    let file: ScspFile = serde_json::from_str(text)
        .map_err(|e| ParseError::Syntax { message: e.to_string() })?;
    let semiring = file.semiring.to_semiring().map_err(ScspReadError::Parse)?;
    let variables: Vec<Variable> = file
        .variables
        .iter()
        .map(|v| Variable::new(&v.name, v.domain.iter().cloned()))
        .collect();
    let domain_of = |name: &String| -> Option<&[String]> {
        variables.iter().find(|v| &v.name == name).map(|v| v.domain.as_slice())
    };
    let mut constraints = Vec::with_capacity(file.constraints.len());
    for c in &file.constraints {
        let distinct = c.scope.iter().collect::<BTreeSet<_>>().len() == c.scope.len();
        let columns: Option<Vec<&[String]>> = if distinct {
            c.scope.iter().map(domain_of).collect()
        } else {
            None
        };
        let entries = check_and_parse_table(&c.scope, columns, &c.table, &semiring)
            .map_err(ScspReadError::Parse)?;
        constraints.push(SoftConstraint::new(c.scope.iter().cloned(), entries));
    }
    Scsp::new(semiring, variables, constraints).map_err(Into::into)
}

/// Parses a game file.
pub fn game_from_json(text: &str) -> Result<GraphicalGame, GameReadError> {
    let file: GameFile = serde_json::from_str(text)
        .map_err(|e| ParseError::Syntax { message: e.to_string() })?;
    let carrier = file.carrier.to_semiring().map_err(GameReadError::Parse)?;
    let players: Vec<Player> = file
        .players
        .iter()
        .map(|p| Player::new(&p.name, p.strategies.iter().cloned()))
        .collect();
    let neigh: BTreeMap<String, BTreeSet<String>> = file
        .neigh
        .iter()
        .map(|(name, set)| (name.clone(), set.iter().cloned().collect()))
        .collect();
    let position = |name: &String| players.iter().position(|p| &p.name == name);
    let mut payoffs = BTreeMap::new();
    for (owner, table) in &file.payoffs {
        // The canonical local scope, when every referenced name resolves;
        // otherwise leave the shape check to game validation.
        let columns: Option<Vec<&[String]>> = position(owner).and_then(|i| {
            let mut scope: Vec<usize> = neigh
                .get(owner)
                .map(|set| set.iter().map(position).collect::<Option<Vec<_>>>())
                .unwrap_or_else(|| Some(Vec::new()))?;
            scope.sort_unstable();
            scope.dedup();
            scope.retain(|&j| j != i);
            scope.push(i);
            Some(scope.iter().map(|&j| players[j].strategies.as_slice()).collect())
        });
        let scope_names: Vec<String> = vec![owner.clone()];
        let entries = check_and_parse_table(&scope_names, columns, table, &carrier)
            .map_err(GameReadError::Parse)?;
        payoffs.insert(owner.clone(), entries.into_iter().collect());
    }
    GraphicalGame::new(carrier, players, neigh, payoffs).map_err(Into::into)
}

/// Serialises a problem in the canonical form that [`scsp_from_json`] reads
/// back as an equal value.
pub fn scsp_to_json(p: &Scsp) -> String {
    let file = ScspFile {
        semiring: CarrierField::of_semiring(p.semiring()),
        variables: p
            .variables()
            .iter()
            .map(|v| VariableField { name: v.name.clone(), domain: v.domain.clone() })
            .collect(),
        constraints: p
            .constraints()
            .iter()
            .map(|c| ConstraintField {
                scope: c.scope().to_vec(),
                table: c
                    .table()
                    .iter()
                    .map(|(key, value)| (key.join(","), value.to_string()))
                    .collect(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("serialization of plain data cannot fail")
}

/// Serialises a game in the canonical form that [`game_from_json`] reads
/// back as an equal value.
pub fn game_to_json(g: &GraphicalGame) -> String {
    let file = GameFile {
        carrier: CarrierField::of_semiring(g.carrier()),
        players: g
            .players()
            .iter()
            .map(|p| PlayerField { name: p.name.clone(), strategies: p.strategies.clone() })
            .collect(),
        neigh: g
            .players()
            .iter()
            .map(|p| {
                let set = g.neighbours(&p.name).expect("players exist");
                (p.name.clone(), set.iter().cloned().collect())
            })
            .collect(),
        payoffs: g
            .players()
            .iter()
            .map(|p| {
                let table = g.payoff_table(&p.name).expect("players exist");
                (
                    p.name.clone(),
                    table
                        .iter()
                        .map(|(key, value)| (key.join(","), value.to_string()))
                        .collect(),
                )
            })
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("serialization of plain data cannot fail")
}
