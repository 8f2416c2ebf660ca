//! Graphical games with payoffs from a linearly ordered carrier.
//!
//! Each player has a finite strategy set and a payoff table over the joint
//! strategies of its *neighbourhood* — the players whose choices affect it —
//! plus itself. The payoff of a full joint strategy is the table value at its
//! projection onto that local scope (the canonical extension: non-neighbours
//! are simply ignored). Payoff tables list coordinates in a canonical order:
//! the neighbours in global player order, then the owner last.
//!
//! Comparisons between payoffs use the carrier's induced order, so a weighted
//! carrier means players minimise costs while fuzzy and payoff carriers mean
//! they maximise. Equilibria and efficiency notions are enumerated
//! exhaustively, in the canonical lexicographic order of joint strategies.

use std::collections::{BTreeMap, BTreeSet};

use crate::scsp::JointAssignment;
use crate::semiring::{PrefValue, Semiring};
use crate::table::Shape;

/// A named player with its finite, ordered strategy set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Player {
    pub name: String,
    pub strategies: Vec<String>,
}

impl Player {
    pub fn new(name: impl Into<String>, strategies: impl IntoIterator<Item = impl Into<String>>) -> Self {
        Player { name: name.into(), strategies: strategies.into_iter().map(Into::into).collect() }
    }
}

/// Errors raised when building or querying a game.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GameError {
    #[error("UnknownPlayer: no player named {name}")]
    UnknownPlayer { name: String },
    #[error("TooFewPlayers: a game needs at least two players, got {count}")]
    TooFewPlayers { count: usize },
    #[error("NotLinearlyOrdered: payoff carrier {kind} is not linearly ordered")]
    NotLinearlyOrdered { kind: String },
    #[error("SelfNeighbour: player {name} lists itself as a neighbour")]
    SelfNeighbour { name: String },
    #[error("InvalidName: {text:?} is empty or contains a comma")]
    InvalidName { text: String },
    #[error("DuplicatePlayer: player {name} is declared twice")]
    DuplicatePlayer { name: String },
    #[error("EmptyStrategies: player {name} has no strategies")]
    EmptyStrategies { name: String },
    #[error("DuplicateStrategy: player {name} lists strategy {value} twice")]
    DuplicateStrategy { name: String, value: String },
    #[error("MissingPayoffs: no payoff table for player {name}")]
    MissingPayoffs { name: String },
    #[error("TableNotTotal: payoff table of {name} must assign exactly one value to each of {expected} tuples, got {actual}")]
    TableNotTotal { name: String, expected: usize, actual: usize },
    #[error("ArityMismatch: key ({key}) does not match the local scope of {name}")]
    ArityMismatch { name: String, key: String },
    #[error("UnknownStrategy: {value} is not a strategy of {name}")]
    UnknownStrategy { name: String, value: String },
    #[error("ValueOutsideCarrier: {value} does not belong to the {kind} carrier")]
    ValueOutsideCarrier { kind: String, value: String },
    #[error("IncompleteProfile: no strategy for player {name}")]
    IncompleteProfile { name: String },
}

/// Dense, index-based view of one player's payoff table.
#[derive(Debug, Clone)]
struct LocalTable {
    /// Player indices in canonical order: neighbours ascending, owner last.
    scope: Vec<usize>,
    strides: Vec<usize>,
    values: Vec<PrefValue>,
}

impl LocalTable {
    fn flat_at(&self, coords: &[usize]) -> usize {
        self.scope.iter().zip(&self.strides).map(|(&p, &s)| coords[p] * s).sum()
    }
}

/// A graphical game.
#[derive(Debug, Clone)]
pub struct GraphicalGame {
    carrier: Semiring,
    players: Vec<Player>,
    neigh: Vec<BTreeSet<String>>,
    payoffs: Vec<BTreeMap<Vec<String>, PrefValue>>,
    shape: Shape,
    local: Vec<LocalTable>,
}

impl PartialEq for GraphicalGame {
    fn eq(&self, other: &Self) -> bool {
        self.carrier == other.carrier
            && self.players == other.players
            && self.neigh == other.neigh
            && self.payoffs == other.payoffs
    }
}
impl Eq for GraphicalGame {}

impl GraphicalGame {
    /// Validates and compiles a game. The carrier must be linearly ordered,
    /// there must be at least two players, no player may neighbour itself,
    /// and every player needs a total payoff table over its local scope
    /// (neighbours in player order, then the owner) with in-carrier values.
    pub fn new(
        carrier: Semiring,
        players: Vec<Player>,
        neigh: BTreeMap<String, BTreeSet<String>>,
        payoffs: BTreeMap<String, BTreeMap<Vec<String>, PrefValue>>,
    ) -> Result<GraphicalGame, GameError> {
        if !carrier.is_linearly_ordered() {
            return Err(GameError::NotLinearlyOrdered { kind: carrier.describe() });
        }
        if players.len() < 2 {
            return Err(GameError::TooFewPlayers { count: players.len() });
        }
        for p in &players {
            if p.name.is_empty() || p.name.contains(',') {
                return Err(GameError::InvalidName { text: p.name.clone() });
            }
            if players.iter().filter(|q| q.name == p.name).count() > 1 {
                return Err(GameError::DuplicatePlayer { name: p.name.clone() });
            }
            if p.strategies.is_empty() {
                return Err(GameError::EmptyStrategies { name: p.name.clone() });
            }
            for s in &p.strategies {
                if s.is_empty() || s.contains(',') {
                    return Err(GameError::InvalidName { text: s.clone() });
                }
                if p.strategies.iter().filter(|t| *t == s).count() > 1 {
                    return Err(GameError::DuplicateStrategy {
                        name: p.name.clone(),
                        value: s.clone(),
                    });
                }
            }
        }
        let position = |name: &str| players.iter().position(|p| p.name == name);
        for name in neigh.keys().chain(payoffs.keys()) {
            if position(name).is_none() {
                return Err(GameError::UnknownPlayer { name: name.clone() });
            }
        }
        let mut neigh_sets: Vec<BTreeSet<String>> = vec![BTreeSet::new(); players.len()];
        for (name, set) in &neigh {
            let i = position(name).unwrap();
            for other in set {
                if other == name {
                    return Err(GameError::SelfNeighbour { name: name.clone() });
                }
                if position(other).is_none() {
                    return Err(GameError::UnknownPlayer { name: other.clone() });
                }
            }
            neigh_sets[i] = set.clone();
        }

        let mut tables = Vec::with_capacity(players.len());
        let mut local = Vec::with_capacity(players.len());
        for (i, player) in players.iter().enumerate() {
            let table = payoffs
                .get(&player.name)
                .ok_or_else(|| GameError::MissingPayoffs { name: player.name.clone() })?;
            let mut scope: Vec<usize> =
                neigh_sets[i].iter().map(|n| position(n).unwrap()).collect();
            scope.sort_unstable();
            scope.push(i);
            let shape =
                Shape::new(scope.iter().map(|&p| players[p].strategies.len()).collect());
            if table.len() != shape.len() {
                return Err(GameError::TableNotTotal {
                    name: player.name.clone(),
                    expected: shape.len(),
                    actual: table.len(),
                });
            }
            let mut values = vec![carrier.zero(); shape.len()];
            for (key, value) in table {
                if key.len() != scope.len() {
                    return Err(GameError::ArityMismatch {
                        name: player.name.clone(),
                        key: key.join(","),
                    });
                }
                let mut coords = Vec::with_capacity(key.len());
                for (label, &p) in key.iter().zip(&scope) {
                    let pos = players[p]
                        .strategies
                        .iter()
                        .position(|s| s == label)
                        .ok_or_else(|| GameError::UnknownStrategy {
                            name: players[p].name.clone(),
                            value: label.clone(),
                        })?;
                    coords.push(pos);
                }
                if !carrier.contains(value) {
                    return Err(GameError::ValueOutsideCarrier {
                        kind: carrier.describe(),
                        value: value.to_string(),
                    });
                }
                values[shape.flatten(&coords)] = value.clone();
            }
            let mut strides = vec![1usize; scope.len()];
            for j in (0..scope.len().saturating_sub(1)).rev() {
                strides[j] = strides[j + 1] * players[scope[j + 1]].strategies.len();
            }
            tables.push(table.clone());
            local.push(LocalTable { scope, strides, values });
        }
        let shape = Shape::new(players.iter().map(|p| p.strategies.len()).collect());
        Ok(GraphicalGame { carrier, players, neigh: neigh_sets, payoffs: tables, shape, local })
    }

    pub fn carrier(&self) -> &Semiring {
        &self.carrier
    }

    pub fn players(&self) -> &[Player] {
        &self.players
    }

    pub fn neighbours(&self, name: &str) -> Result<&BTreeSet<String>, GameError> {
        Ok(&self.neigh[self.index_of(name)?])
    }

    /// The canonical local scope of a player: its neighbours in global player
    /// order, then the player itself.
    pub fn local_scope(&self, name: &str) -> Result<Vec<String>, GameError> {
        let i = self.index_of(name)?;
        Ok(self.local[i].scope.iter().map(|&p| self.players[p].name.clone()).collect())
    }

    pub fn payoff_table(&self, name: &str) -> Result<&BTreeMap<Vec<String>, PrefValue>, GameError> {
        Ok(&self.payoffs[self.index_of(name)?])
    }

    fn index_of(&self, name: &str) -> Result<usize, GameError> {
        self.players
            .iter()
            .position(|p| p.name == name)
            .ok_or_else(|| GameError::UnknownPlayer { name: name.to_string() })
    }

    /// All joint strategies in canonical lexicographic order.
    pub fn joint_strategies(&self) -> impl Iterator<Item = JointAssignment> + '_ {
        self.shape.iter().map(move |coords| self.joint_at(&coords))
    }

    fn joint_at(&self, coords: &[usize]) -> JointAssignment {
        JointAssignment::new(
            self.players
                .iter()
                .zip(coords)
                .map(|(p, &i)| (p.name.clone(), p.strategies[i].clone())),
        )
    }

    fn coords_of(&self, s: &JointAssignment) -> Result<Vec<usize>, GameError> {
        self.players
            .iter()
            .map(|p| {
                let label = s
                    .get(&p.name)
                    .ok_or_else(|| GameError::IncompleteProfile { name: p.name.clone() })?;
                p.strategies.iter().position(|t| t == label).ok_or_else(|| {
                    GameError::UnknownStrategy { name: p.name.clone(), value: label.to_string() }
                })
            })
            .collect()
    }

    /// The payoff of one player under a joint strategy: the table value at
    /// the projection onto the player's local scope.
    pub fn payoff(&self, name: &str, s: &JointAssignment) -> Result<PrefValue, GameError> {
        let i = self.index_of(name)?;
        let coords = self.coords_of(s)?;
        Ok(self.payoff_at(i, &coords))
    }

    fn payoff_at(&self, i: usize, coords: &[usize]) -> PrefValue {
        let t = &self.local[i];
        t.values[t.flat_at(coords)].clone()
    }

    /// All players' payoffs under a joint strategy, in player order.
    pub fn payoff_vector(&self, s: &JointAssignment) -> Result<Vec<PrefValue>, GameError> {
        let coords = self.coords_of(s)?;
        Ok(self.vector_at(&coords))
    }

    fn vector_at(&self, coords: &[usize]) -> Vec<PrefValue> {
        (0..self.players.len()).map(|i| self.payoff_at(i, coords)).collect()
    }

    fn is_nash_at(&self, coords: &[usize]) -> bool {
        for (i, t) in self.local.iter().enumerate() {
            let flat = t.flat_at(coords);
            let current = &t.values[flat];
            let own = coords[i];
            let own_stride = *t.strides.last().expect("owner is always in scope");
            let base = flat - own * own_stride;
            for alt in 0..self.players[i].strategies.len() {
                if alt == own {
                    continue;
                }
                let deviated = &t.values[base + alt * own_stride];
                if !self.carrier.leq(deviated, current).expect("payoffs share the carrier") {
                    return false;
                }
            }
        }
        true
    }

    /// Whether no player can improve its own payoff by deviating alone.
    pub fn is_nash(&self, s: &JointAssignment) -> Result<bool, GameError> {
        Ok(self.is_nash_at(&self.coords_of(s)?))
    }

    /// All pure Nash equilibria in canonical order.
    pub fn enumerate_nash(&self) -> Vec<JointAssignment> {
        self.shape
            .iter()
            .filter(|coords| self.is_nash_at(coords))
            .map(|coords| self.joint_at(&coords))
            .collect()
    }

    fn vector_dominates(&self, sup: &[PrefValue], inf: &[PrefValue]) -> bool {
        sup != inf
            && sup
                .iter()
                .zip(inf)
                .all(|(a, b)| self.carrier.leq(b, a).expect("payoffs share the carrier"))
    }

    /// Whether `candidate` makes every player at least as well off as `s` and
    /// some player strictly better off.
    pub fn pareto_dominates(
        &self,
        candidate: &JointAssignment,
        s: &JointAssignment,
    ) -> Result<bool, GameError> {
        let a = self.payoff_vector(candidate)?;
        let b = self.payoff_vector(s)?;
        Ok(self.vector_dominates(&a, &b))
    }

    fn frontier(&self, pool: Vec<(Vec<usize>, Vec<PrefValue>)>) -> Vec<JointAssignment> {
        let mut frontier: Vec<(Vec<usize>, Vec<PrefValue>)> = Vec::new();
        for (coords, vector) in pool {
            if frontier.iter().any(|(_, v)| self.vector_dominates(v, &vector)) {
                continue;
            }
            frontier.retain(|(_, v)| !self.vector_dominates(&vector, v));
            frontier.push((coords, vector));
        }
        frontier.into_iter().map(|(coords, _)| self.joint_at(&coords)).collect()
    }

    /// All Pareto efficient joint strategies: those not Pareto dominated by
    /// any other joint strategy.
    pub fn enumerate_pareto(&self) -> Vec<JointAssignment> {
        let pool = self.shape.iter().map(|c| {
            let v = self.vector_at(&c);
            (c, v)
        });
        self.frontier(pool.collect())
    }

    /// All Pareto efficient Nash equilibria: Nash equilibria not Pareto
    /// dominated by any *other Nash equilibrium*.
    pub fn enumerate_pareto_nash(&self) -> Vec<JointAssignment> {
        let pool = self
            .shape
            .iter()
            .filter(|c| self.is_nash_at(c))
            .map(|c| {
                let v = self.vector_at(&c);
                (c, v)
            })
            .collect();
        self.frontier(pool)
    }

    /// Nash equilibria that are also Pareto efficient among *all* joint
    /// strategies — generally a subset of [`enumerate_pareto_nash`], and
    /// possibly empty when the two notions disagree.
    pub fn enumerate_nash_and_global_pareto(&self) -> Vec<JointAssignment> {
        let pareto: std::collections::HashSet<JointAssignment> =
            self.enumerate_pareto().into_iter().collect();
        self.enumerate_nash().into_iter().filter(|s| pareto.contains(s)).collect()
    }
}
