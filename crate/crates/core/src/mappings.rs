//! Translations between soft constraint problems and graphical games.
//!
//! Four structure-preserving constructions connect the two models:
//!
//! - [`local_map`]: variables become players; each player's payoff combines
//!   exactly the constraints its variable appears in, so the game inherits
//!   the constraint graph (neighbours = co-occurrence in some scope).
//! - [`global_map`]: like `local_map`, but every player sees every other
//!   player and is paid the *full* preference of the joint assignment.
//! - [`game_to_scsp`]: the reverse direction. Players become variables, the
//!   target semiring is the product of one linearly ordered carrier per
//!   player, and player `i` contributes one constraint over its
//!   neighbourhood whose value tuples are the product unit everywhere except
//!   coordinate `i`, which carries `f_i(payoff)` for a strictly
//!   order-preserving map `f_i`. Under the product's componentwise order the
//!   optimal solutions of the result are exactly the Pareto efficient joint
//!   strategies of the game.
//! - [`harden`]: extracts equilibrium structure as crisp constraints — a
//!   local tuple is allowed iff the owner's strategy is a best response to
//!   it. Assignments with overall preference "true" are exactly the pure
//!   Nash equilibria.
//!
//! [`merge`] combines the last two: appending the hardened constraints
//! (lifted into the product carrier) to the `game_to_scsp` output restricts
//! its optima to the Pareto efficient *equilibria*.

use std::collections::{BTreeMap, BTreeSet};

use crate::game::{GameError, GraphicalGame, Player};
use crate::scsp::{Scsp, ScspError, SoftConstraint, Variable};
use crate::semiring::{
    format_rational, BaseKind, Extended, PrefValue, Rational, Semiring,
};
use crate::table::Shape;

/// Errors raised by the translations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MappingError {
    #[error("TooFewVariables: mapping to a game needs at least two variables, got {count}")]
    TooFewVariables { count: usize },
    #[error("NotOrderPreserving: {smaller} is below {larger} in the {from_kind} order, but the map does not keep f({smaller}) strictly below f({larger}) in the {to_kind} order")]
    NotOrderPreserving { from_kind: String, to_kind: String, smaller: String, larger: String },
    #[error("CeilingTooSmall: complement ceiling {ceiling} is below the occurring payoff {payoff}")]
    CeilingTooSmall { ceiling: String, payoff: String },
    #[error("InvalidCeiling: complement ceiling {ceiling} must be a non-negative rational")]
    InvalidCeiling { ceiling: String },
    #[error("UnsupportedComplement: complementation maps fuzzy or payoff values to weighted costs; {from_kind} -> {to_kind} is not supported")]
    UnsupportedComplement { from_kind: String, to_kind: String },
    #[error("ValueOutsideCarrier: mapped value {value} does not belong to the {kind} carrier")]
    ValueOutsideCarrier { kind: String, value: String },
    #[error("CarrierMismatch: map expects {expected} payoffs, the game carries {actual}")]
    CarrierMismatch { expected: String, actual: String },
    #[error("MapCountMismatch: expected one map per player ({expected}), got {actual}")]
    MapCountMismatch { expected: usize, actual: usize },
    #[error("VariableMismatch: cannot merge problems over different variables ({left} vs {right})")]
    VariableMismatch { left: String, right: String },
    #[error("DomainMismatch: variable {variable} has different domains in the two problems")]
    DomainMismatch { variable: String },
    #[error("SemiringMismatch: cannot merge {left} with {right}")]
    SemiringMismatch { left: String, right: String },
    #[error(transparent)]
    Game(#[from] GameError),
    #[error(transparent)]
    Scsp(#[from] ScspError),
}

/// How a payoff value is turned into a preference value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MapRule {
    /// Values pass through unchanged.
    Identity,
    /// `x` becomes the weighted cost `M - x`. This inverts a larger-is-better
    /// order into the weighted smaller-is-better one, so it is strictly order
    /// preserving from the fuzzy and payoff carriers (and from them only).
    Complement(Rational),
}

/// A per-player, strictly order-preserving map from game payoffs to
/// preference values: whenever `r` is strictly below `r'` among the payoffs
/// that actually occur, `f(r)` must stay strictly below `f(r')` in the
/// target carrier's order. Strictness is what lets the translated problem's
/// optima reproduce the game's Pareto frontier exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderPreservingMap {
    source: BaseKind,
    target: BaseKind,
    rule: MapRule,
}

impl OrderPreservingMap {
    pub fn new(source: BaseKind, target: BaseKind, rule: MapRule) -> Result<Self, MappingError> {
        if let MapRule::Complement(ceiling) = &rule {
            if target != BaseKind::Weighted
                || !matches!(source, BaseKind::Fuzzy | BaseKind::Payoff)
            {
                return Err(MappingError::UnsupportedComplement {
                    from_kind: source.name().to_string(),
                    to_kind: target.name().to_string(),
                });
            }
            if ceiling < &Rational::from_integer(0.into()) {
                return Err(MappingError::InvalidCeiling {
                    ceiling: format_rational(ceiling),
                });
            }
        }
        Ok(OrderPreservingMap { source, target, rule })
    }

    /// The identity map on one carrier.
    pub fn identity(kind: BaseKind) -> Self {
        OrderPreservingMap { source: kind, target: kind, rule: MapRule::Identity }
    }

    /// Complementation of `source` values against `ceiling`, into weighted
    /// costs.
    pub fn complement(source: BaseKind, ceiling: Rational) -> Result<Self, MappingError> {
        Self::new(source, BaseKind::Weighted, MapRule::Complement(ceiling))
    }

    pub fn source(&self) -> BaseKind {
        self.source
    }

    pub fn target(&self) -> BaseKind {
        self.target
    }

    pub fn rule(&self) -> &MapRule {
        &self.rule
    }

    /// Applies the map to one value. Identity re-tags numeric values into
    /// the target carrier's representation (a fuzzy 1/2 becomes the cost
    /// 1/2, say) so that cross-carrier maps are judged on order, not on how
    /// the number happens to be wrapped.
    pub fn apply(&self, value: &PrefValue) -> Result<PrefValue, MappingError> {
        let mapped = match &self.rule {
            MapRule::Identity => match (value, self.target) {
                (PrefValue::Fuzzy(r), BaseKind::Weighted | BaseKind::Payoff) => {
                    PrefValue::Cost(Extended::Finite(r.clone()))
                }
                (PrefValue::Cost(Extended::Finite(r)), BaseKind::Fuzzy) => {
                    PrefValue::Fuzzy(r.clone())
                }
                _ => value.clone(),
            },
            MapRule::Complement(ceiling) => {
                let finite = match value {
                    PrefValue::Fuzzy(r) => Some(r),
                    PrefValue::Cost(Extended::Finite(r)) => Some(r),
                    PrefValue::Cost(Extended::Infinity) => None,
                    _ => {
                        return Err(MappingError::UnsupportedComplement {
                            from_kind: self.source.name().to_string(),
                            to_kind: self.target.name().to_string(),
                        })
                    }
                };
                match finite {
                    Some(r) if r <= ceiling => {
                        PrefValue::Cost(Extended::Finite(ceiling - r))
                    }
                    _ => {
                        return Err(MappingError::CeilingTooSmall {
                            ceiling: format_rational(ceiling),
                            payoff: value.to_string(),
                        })
                    }
                }
            }
        };
        let target = Semiring::from_base(self.target);
        if !target.contains(&mapped) {
            return Err(MappingError::ValueOutsideCarrier {
                kind: target.describe(),
                value: mapped.to_string(),
            });
        }
        Ok(mapped)
    }

    /// Checks the map on every value in `values`: each image must land in
    /// the target carrier, and every strict comparison must be preserved.
    pub fn validate_on(&self, values: &[PrefValue]) -> Result<(), MappingError> {
        let source = Semiring::from_base(self.source);
        let target = Semiring::from_base(self.target);
        let mut distinct: Vec<&PrefValue> = Vec::new();
        for v in values {
            if !source.contains(v) {
                return Err(MappingError::CarrierMismatch {
                    expected: source.describe(),
                    actual: v.to_string(),
                });
            }
            if !distinct.contains(&v) {
                distinct.push(v);
            }
        }
        let images: Vec<PrefValue> =
            distinct.iter().map(|v| self.apply(v)).collect::<Result<_, _>>()?;
        for (i, a) in distinct.iter().enumerate() {
            for (j, b) in distinct.iter().enumerate() {
                if i == j {
                    continue;
                }
                let strict = source.lt(a, b).expect("values checked against the carrier");
                if strict && !target.lt(&images[i], &images[j]).unwrap_or(false) {
                    return Err(MappingError::NotOrderPreserving {
                        from_kind: source.describe(),
                        to_kind: target.describe(),
                        smaller: a.to_string(),
                        larger: b.to_string(),
                    });
                }
            }
        }
        Ok(())
    }
}

fn variables_to_players(p: &Scsp) -> Vec<Player> {
    p.variables().iter().map(|v| Player::new(&v.name, v.domain.iter().cloned())).collect()
}

fn players_to_variables(g: &GraphicalGame) -> Vec<Variable> {
    g.players().iter().map(|p| Variable::new(&p.name, p.strategies.iter().cloned())).collect()
}

/// Neighbourhoods from scope co-occurrence: two variables are neighbours iff
/// they appear together in some constraint.
fn co_occurrence(p: &Scsp) -> BTreeMap<String, BTreeSet<String>> {
    let mut neigh: BTreeMap<String, BTreeSet<String>> =
        p.variables().iter().map(|v| (v.name.clone(), BTreeSet::new())).collect();
    for c in p.constraints() {
        for a in c.scope() {
            for b in c.scope() {
                if a != b {
                    neigh.get_mut(a).expect("scopes are validated").insert(b.clone());
                }
            }
        }
    }
    neigh
}

/// The canonical local scope of variable `i` given its neighbour set:
/// neighbours in variable order, then `i` itself.
fn scope_indices(p: &Scsp, i: usize, neigh: &BTreeSet<String>) -> Vec<usize> {
    let mut scope: Vec<usize> = p
        .variables()
        .iter()
        .enumerate()
        .filter(|(_, v)| neigh.contains(&v.name))
        .map(|(j, _)| j)
        .collect();
    scope.push(i);
    scope
}

/// Builds one payoff table over the variables `scope` (indices into `p`),
/// valuing each tuple with `value_of` applied to the scope labels.
fn table_over(
    p: &Scsp,
    scope: &[usize],
    mut value_of: impl FnMut(&[&str]) -> PrefValue,
) -> BTreeMap<Vec<String>, PrefValue> {
    let vars = p.variables();
    let shape = Shape::new(scope.iter().map(|&j| vars[j].domain.len()).collect());
    let mut table = BTreeMap::new();
    for coords in shape.iter() {
        let labels: Vec<&str> = scope
            .iter()
            .zip(&coords)
            .map(|(&j, &c)| vars[j].domain[c].as_str())
            .collect();
        table.insert(
            labels.iter().map(|l| l.to_string()).collect(),
            value_of(&labels),
        );
    }
    table
}

/// Turns a problem into a game along its constraint graph: one player per
/// variable, neighbours by scope co-occurrence, and each player paid the
/// ×-combination of exactly the constraints its variable appears in.
pub fn local_map(p: &Scsp) -> Result<GraphicalGame, MappingError> {
    if p.variables().len() < 2 {
        return Err(MappingError::TooFewVariables { count: p.variables().len() });
    }
    let semiring = p.semiring();
    let neigh = co_occurrence(p);
    let mut payoffs = BTreeMap::new();
    for (i, var) in p.variables().iter().enumerate() {
        let scope = scope_indices(p, i, &neigh[&var.name]);
        let scope_names: Vec<&str> =
            scope.iter().map(|&j| p.variables()[j].name.as_str()).collect();
        let members: Vec<&SoftConstraint> =
            p.constraints().iter().filter(|c| c.scope().contains(&var.name)).collect();
        // Positions of each member constraint's scope inside the local scope.
        let projections: Vec<Vec<usize>> = members
            .iter()
            .map(|c| {
                c.scope()
                    .iter()
                    .map(|name| {
                        scope_names
                            .iter()
                            .position(|s| s == name)
                            .expect("member scopes are inside the local scope")
                    })
                    .collect()
            })
            .collect();
        let table = table_over(p, &scope, |labels| {
            let mut acc = semiring.one();
            for (c, positions) in members.iter().zip(&projections) {
                let tuple: Vec<String> =
                    positions.iter().map(|&k| labels[k].to_string()).collect();
                let v = c.value(&tuple).expect("tables are total");
                acc = semiring.times(&acc, v).expect("values share the carrier");
            }
            acc
        });
        payoffs.insert(var.name.clone(), table);
    }
    GraphicalGame::new(semiring.clone(), variables_to_players(p), neigh, payoffs)
        .map_err(Into::into)
}

/// Turns a problem into a strategic-form game: everyone neighbours everyone,
/// and every player is paid the full preference of the joint assignment.
pub fn global_map(p: &Scsp) -> Result<GraphicalGame, MappingError> {
    if p.variables().len() < 2 {
        return Err(MappingError::TooFewVariables { count: p.variables().len() });
    }
    let all: BTreeSet<String> = p.variables().iter().map(|v| v.name.clone()).collect();
    let neigh: BTreeMap<String, BTreeSet<String>> = p
        .variables()
        .iter()
        .map(|v| {
            let mut others = all.clone();
            others.remove(&v.name);
            (v.name.clone(), others)
        })
        .collect();
    let mut payoffs = BTreeMap::new();
    for (i, var) in p.variables().iter().enumerate() {
        let scope = scope_indices(p, i, &neigh[&var.name]);
        let table = table_over(p, &scope, |labels| {
            let assignment = crate::scsp::JointAssignment::new(
                scope
                    .iter()
                    .zip(labels)
                    .map(|(&j, &l)| (p.variables()[j].name.clone(), l.to_string())),
            );
            p.preference(&assignment).expect("scope covers every variable")
        });
        payoffs.insert(var.name.clone(), table);
    }
    GraphicalGame::new(p.semiring().clone(), variables_to_players(p), neigh, payoffs)
        .map_err(Into::into)
}

/// The greatest finite payoff occurring anywhere in the game, if any.
pub fn max_finite_payoff(g: &GraphicalGame) -> Option<Rational> {
    let mut best: Option<Rational> = None;
    for player in g.players() {
        let table = g.payoff_table(&player.name).expect("players exist");
        for value in table.values() {
            let r = match value {
                PrefValue::Fuzzy(r) => r.clone(),
                PrefValue::Cost(Extended::Finite(r)) => r.clone(),
                _ => continue,
            };
            if best.as_ref().is_none_or(|b| &r > b) {
                best = Some(r);
            }
        }
    }
    best
}

/// One identity map per player, on the game's own carrier.
pub fn identity_maps(g: &GraphicalGame) -> Result<Vec<OrderPreservingMap>, MappingError> {
    let kind = g.carrier().base_kind().ok_or_else(|| MappingError::CarrierMismatch {
        expected: "a linearly ordered base carrier".to_string(),
        actual: g.carrier().describe(),
    })?;
    Ok(vec![OrderPreservingMap::identity(kind); g.players().len()])
}

/// One complement map per player. The ceiling defaults to the greatest
/// finite payoff occurring anywhere in the game.
pub fn complement_maps(
    g: &GraphicalGame,
    ceiling: Option<Rational>,
) -> Result<Vec<OrderPreservingMap>, MappingError> {
    let kind = g.carrier().base_kind().ok_or_else(|| MappingError::CarrierMismatch {
        expected: "a linearly ordered base carrier".to_string(),
        actual: g.carrier().describe(),
    })?;
    let ceiling = match ceiling {
        Some(c) => c,
        None => max_finite_payoff(g).unwrap_or_else(|| Rational::from_integer(0.into())),
    };
    let map = OrderPreservingMap::complement(kind, ceiling)?;
    Ok(vec![map; g.players().len()])
}

/// The default per-player maps: identity for carriers whose values are
/// already preferences (classical, fuzzy, weighted), and complementation
/// against the greatest finite payoff for the payoff carrier, whose
/// larger-is-better values must be inverted into costs.
pub fn default_maps(g: &GraphicalGame) -> Result<Vec<OrderPreservingMap>, MappingError> {
    match g.carrier() {
        Semiring::Payoff => complement_maps(g, None),
        _ => identity_maps(g),
    }
}

/// Translates a game into a problem over a product of one carrier per
/// player, using one strictly order-preserving map per player. Player `i`
/// contributes a constraint over its local scope whose tuples are the
/// product unit except at coordinate `i`, which carries the mapped payoff.
pub fn game_to_scsp(
    g: &GraphicalGame,
    maps: &[OrderPreservingMap],
) -> Result<Scsp, MappingError> {
    let players = g.players();
    if maps.len() != players.len() {
        return Err(MappingError::MapCountMismatch {
            expected: players.len(),
            actual: maps.len(),
        });
    }
    for (player, map) in players.iter().zip(maps) {
        if &Semiring::from_base(map.source()) != g.carrier() {
            return Err(MappingError::CarrierMismatch {
                expected: Semiring::from_base(map.source()).describe(),
                actual: g.carrier().describe(),
            });
        }
        let table = g.payoff_table(&player.name).expect("players exist");
        let values: Vec<PrefValue> = table.values().cloned().collect();
        map.validate_on(&values)?;
    }
    let kinds: Vec<BaseKind> = maps.iter().map(|m| m.target()).collect();
    let ones: Vec<PrefValue> =
        kinds.iter().map(|&k| Semiring::from_base(k).one()).collect();
    let mut constraints = Vec::with_capacity(players.len());
    for (i, player) in players.iter().enumerate() {
        let scope = g.local_scope(&player.name).expect("players exist");
        let table = g.payoff_table(&player.name).expect("players exist");
        let entries: Result<Vec<(Vec<String>, PrefValue)>, MappingError> = table
            .iter()
            .map(|(key, payoff)| {
                let mut tuple = ones.clone();
                tuple[i] = maps[i].apply(payoff)?;
                Ok((key.clone(), PrefValue::Tuple(tuple)))
            })
            .collect();
        constraints.push(SoftConstraint::new(scope, entries?));
    }
    Scsp::new(Semiring::Product(kinds), players_to_variables(g), constraints)
        .map_err(Into::into)
}

/// Extracts best-response structure as crisp constraints: one classical
/// constraint per player over its local scope, allowing a tuple iff the
/// owner's strategy is a best response to the neighbour part (no alternative
/// strategy yields a strictly greater local payoff). Assignments whose
/// overall preference is `true` are exactly the pure Nash equilibria.
pub fn harden(g: &GraphicalGame) -> Scsp {
    let carrier = g.carrier();
    let mut constraints = Vec::with_capacity(g.players().len());
    for player in g.players() {
        let scope = g.local_scope(&player.name).expect("players exist");
        let table = g.payoff_table(&player.name).expect("players exist");
        let entries: Vec<(Vec<String>, PrefValue)> = table
            .iter()
            .map(|(key, current)| {
                let best = player.strategies.iter().all(|alt| {
                    let mut alt_key = key.clone();
                    *alt_key.last_mut().expect("owner is always in scope") = alt.clone();
                    let deviated = &table[&alt_key];
                    carrier.leq(deviated, current).expect("payoffs share the carrier")
                });
                (key.clone(), PrefValue::Bool(best))
            })
            .collect();
        constraints.push(SoftConstraint::new(scope, entries));
    }
    Scsp::new(Semiring::Classical, players_to_variables(g), constraints)
        .expect("hardened tables are total classical tables")
}

/// Appends `b`'s constraints to `a`'s, over `a`'s semiring. Both problems
/// must share variables and domains. If `b` is classical and `a` is a
/// product problem, `b`'s values are lifted first: `true` becomes the
/// product unit, `false` the product zero (which annihilates, so forbidden
/// tuples are forced to the bottom of the order).
pub fn merge(a: &Scsp, b: &Scsp) -> Result<Scsp, MappingError> {
    let left: Vec<&str> = a.variables().iter().map(|v| v.name.as_str()).collect();
    let right: Vec<&str> = b.variables().iter().map(|v| v.name.as_str()).collect();
    if left != right {
        return Err(MappingError::VariableMismatch {
            left: left.join(","),
            right: right.join(","),
        });
    }
    for (va, vb) in a.variables().iter().zip(b.variables()) {
        if va.domain != vb.domain {
            return Err(MappingError::DomainMismatch { variable: va.name.clone() });
        }
    }
    let mut constraints = a.constraints().to_vec();
    if a.semiring() == b.semiring() {
        constraints.extend(b.constraints().iter().cloned());
    } else if matches!(a.semiring(), Semiring::Product(_))
        && *b.semiring() == Semiring::Classical
    {
        let one = a.semiring().one();
        let zero = a.semiring().zero();
        for c in b.constraints() {
            let entries: Vec<(Vec<String>, PrefValue)> = c
                .table()
                .iter()
                .map(|(key, value)| {
                    let lifted = match value {
                        PrefValue::Bool(true) => one.clone(),
                        _ => zero.clone(),
                    };
                    (key.clone(), lifted)
                })
                .collect();
            constraints.push(SoftConstraint::new(c.scope().iter().cloned(), entries));
        }
    } else {
        return Err(MappingError::SemiringMismatch {
            left: a.semiring().describe(),
            right: b.semiring().describe(),
        });
    }
    Scsp::new(a.semiring().clone(), a.variables().to_vec(), constraints).map_err(Into::into)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::scsp::JointAssignment;
    use proptest::prelude::*;

    fn joint(pairs: &[(&str, &str)]) -> JointAssignment {
        JointAssignment::new(pairs.iter().map(|&(k, v)| (k, v)))
    }

    fn compacts(list: &[JointAssignment]) -> Vec<String> {
        list.iter().map(|s| s.compact()).collect()
    }

    fn key(labels: &str) -> Vec<String> {
        labels.split(',').map(str::to_string).collect()
    }

    fn rat(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn local_map_builds_co_occurrence_neighbourhoods() {
        let g = local_map(&fixtures::fuzzy_chain()).unwrap();
        let set = |names: &[&str]| names.iter().map(|n| n.to_string()).collect();
        assert_eq!(*g.neighbours("x").unwrap(), set(&["y"]));
        assert_eq!(*g.neighbours("y").unwrap(), set(&["x", "z"]));
        assert_eq!(*g.neighbours("z").unwrap(), set(&["y"]));
        assert_eq!(g.local_scope("y").unwrap(), vec!["x", "z", "y"]);
    }

    #[test]
    fn local_payoffs_combine_exactly_the_member_constraints() {
        let g = local_map(&fixtures::fuzzy_chain()).unwrap();
        // y sits in both constraints, so its payoff is their minimum.
        let bba = joint(&[("x", "b"), ("y", "b"), ("z", "a")]);
        assert_eq!(g.payoff("y", &bba).unwrap(), PrefValue::fuzzy(1, 10));
        // x sits only in the first constraint and never sees z.
        let aaa = joint(&[("x", "a"), ("y", "a"), ("z", "a")]);
        let aab = joint(&[("x", "a"), ("y", "a"), ("z", "b")]);
        assert_eq!(g.payoff("x", &aaa).unwrap(), PrefValue::fuzzy(2, 5));
        assert_eq!(g.payoff("x", &aaa).unwrap(), g.payoff("x", &aab).unwrap());
    }

    #[test]
    fn local_map_of_the_fuzzy_chain_has_the_expected_equilibria() {
        let g = local_map(&fixtures::fuzzy_chain()).unwrap();
        assert_eq!(compacts(&g.enumerate_nash()), vec!["aaa", "bbb"]);
        // The unique optimum is one of them.
        let p = fixtures::fuzzy_chain();
        for (s, _) in p.enumerate_optimal() {
            assert!(g.is_nash(&s).unwrap());
        }
    }

    #[test]
    fn plateau_problem_has_optima_that_are_not_equilibria() {
        let p = fixtures::fuzzy_plateau();
        let g = local_map(&p).unwrap();
        assert_eq!(compacts(&g.enumerate_nash()), vec!["aab", "bbb"]);
        // Two of the four optima are not equilibria: fuzzy combination is
        // not strictly monotonic, so the containment genuinely fails.
        let optimal = compacts(&p.enumerate_optimal().iter().map(|(s, _)| s.clone()).collect::<Vec<_>>());
        assert_eq!(optimal, vec!["aab", "abb", "bab", "bbb"]);
        assert!(!g.is_nash(&joint(&[("x", "a"), ("y", "b"), ("z", "b")])).unwrap());
        assert!(!g.is_nash(&joint(&[("x", "b"), ("y", "a"), ("z", "b")])).unwrap());
    }

    #[test]
    fn weighted_problem_maps_to_costs_under_the_weighted_order() {
        let p = fixtures::weighted_single();
        let g = local_map(&p).unwrap();
        assert_eq!(compacts(&g.enumerate_nash()), vec!["aa", "bb"]);
        let optimal: Vec<JointAssignment> =
            p.enumerate_optimal().into_iter().map(|(s, _)| s).collect();
        assert_eq!(compacts(&optimal), vec!["bb"]);
        for s in &optimal {
            assert!(g.is_nash(s).unwrap());
        }
        // Raw payoffs are the costs themselves; complementing against 10
        // reproduces the conventional larger-is-better reading 7/0/0/9.
        let f = OrderPreservingMap::complement(BaseKind::Weighted, rat(10));
        assert!(matches!(f, Err(MappingError::UnsupportedComplement { .. })));
        let table = g.payoff_table("x").unwrap();
        let rendered: Vec<String> = table
            .values()
            .map(|v| {
                let PrefValue::Cost(Extended::Finite(r)) = v else { panic!() };
                format_rational(&(rat(10) - r))
            })
            .collect();
        assert_eq!(rendered, vec!["7", "0", "0", "9"]);
    }

    /// Optimal solutions need not be Pareto efficient in the local game,
    /// even though weighted combination is strictly monotonic: every binary
    /// constraint is counted in both endpoints' local payoffs, so switching
    /// both variables can lower both players' local totals while raising the
    /// global (singly counted) cost. Optima are still equilibria — a single
    /// deviation leaves the double counting untouched — but the frontier
    /// containment genuinely fails, and the verification suites report it.
    #[test]
    fn local_pareto_containment_genuinely_fails_for_weighted_combination() {
        let p = Scsp::new(
            Semiring::Weighted,
            vec![Variable::new("x", ["a", "b"]), Variable::new("y", ["a", "b"])],
            vec![
                SoftConstraint::new(
                    ["x"],
                    [(vec!["a".into()], PrefValue::cost(0)), (vec!["b".into()], PrefValue::cost(5))],
                ),
                SoftConstraint::new(
                    ["y"],
                    [(vec!["a".into()], PrefValue::cost(0)), (vec!["b".into()], PrefValue::cost(5))],
                ),
                SoftConstraint::new(
                    ["x", "y"],
                    [
                        (vec!["a".into(), "a".into()], PrefValue::cost(6)),
                        (vec!["a".into(), "b".into()], PrefValue::cost(10)),
                        (vec!["b".into(), "a".into()], PrefValue::cost(10)),
                        (vec!["b".into(), "b".into()], PrefValue::cost(0)),
                    ],
                ),
            ],
        )
        .unwrap();

        // Global costs: aa = 6, ab = ba = 15, bb = 10; aa is uniquely optimal.
        let optimal: Vec<(JointAssignment, PrefValue)> = p.enumerate_optimal();
        assert_eq!(compacts(&optimal.iter().map(|(s, _)| s.clone()).collect::<Vec<_>>()), vec!["aa"]);
        assert_eq!(optimal[0].1, PrefValue::cost(6));

        // Local totals: aa gives (6, 6) but bb gives (5, 5) — better for
        // both players at once, so bb dominates the optimum.
        let g = local_map(&p).unwrap();
        assert_eq!(g.payoff_vector(&optimal[0].0).unwrap(), vec![PrefValue::cost(6); 2]);
        let bb = JointAssignment::new([("x", "b"), ("y", "b")]);
        assert_eq!(g.payoff_vector(&bb).unwrap(), vec![PrefValue::cost(5); 2]);
        assert!(g.pareto_dominates(&bb, &optimal[0].0).unwrap());
        assert_eq!(compacts(&g.enumerate_pareto()), vec!["bb"]);

        // The equilibrium containment still holds on the same instance.
        let nash = g.enumerate_nash();
        assert_eq!(compacts(&nash), vec!["aa", "bb"]);
        assert!(g.is_nash(&optimal[0].0).unwrap());
    }

    #[test]
    fn local_map_rejects_degenerate_problems() {
        let single = Scsp::new(
            Semiring::Fuzzy,
            vec![Variable::new("x", ["a", "b"])],
            vec![],
        )
        .unwrap();
        assert_eq!(
            local_map(&single).unwrap_err(),
            MappingError::TooFewVariables { count: 1 }
        );

        let product = Scsp::new(
            Semiring::Product(vec![BaseKind::Fuzzy, BaseKind::Fuzzy]),
            vec![Variable::new("x", ["a"]), Variable::new("y", ["a"])],
            vec![],
        )
        .unwrap();
        assert!(matches!(
            local_map(&product).unwrap_err(),
            MappingError::Game(GameError::NotLinearlyOrdered { .. })
        ));
    }

    #[test]
    fn single_constraint_problem_maps_identically_under_both_views() {
        let p = fixtures::weighted_single();
        assert_eq!(local_map(&p).unwrap(), global_map(&p).unwrap());
    }

    #[test]
    fn global_map_broadcasts_the_full_preference() {
        let p = fixtures::fuzzy_chain();
        let g = global_map(&p).unwrap();
        let all: BTreeSet<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        for v in ["x", "y", "z"] {
            let mut others = all.clone();
            others.remove(v);
            assert_eq!(*g.neighbours(v).unwrap(), others);
        }
        let bbb = joint(&[("x", "b"), ("y", "b"), ("z", "b")]);
        for v in ["x", "y", "z"] {
            assert_eq!(g.payoff(v, &bbb).unwrap(), PrefValue::fuzzy(1, 2));
        }
        // Optima of the problem are exactly the Pareto efficient strategies.
        let optimal: Vec<JointAssignment> =
            p.enumerate_optimal().into_iter().map(|(s, _)| s).collect();
        assert_eq!(optimal, g.enumerate_pareto());
        for s in &optimal {
            assert!(g.is_nash(s).unwrap());
        }
    }

    #[test]
    fn global_map_of_a_constraint_free_problem_pays_one_everywhere() {
        let p = Scsp::new(
            Semiring::Fuzzy,
            vec![Variable::new("x", ["a", "b"]), Variable::new("y", ["a", "b"])],
            vec![],
        )
        .unwrap();
        let g = global_map(&p).unwrap();
        for s in g.joint_strategies().collect::<Vec<_>>() {
            assert_eq!(g.payoff_vector(&s).unwrap(), vec![
                PrefValue::fuzzy(1, 1),
                PrefValue::fuzzy(1, 1)
            ]);
        }
    }

    #[test]
    fn dilemma_translates_to_the_documented_product_tables() {
        let g = fixtures::prisoners_dilemma();
        let maps = complement_maps(&g, Some(rat(10))).unwrap();
        let p = game_to_scsp(&g, &maps).unwrap();
        assert_eq!(
            *p.semiring(),
            Semiring::Product(vec![BaseKind::Weighted, BaseKind::Weighted])
        );
        let tup = |a: i64, b: i64| PrefValue::tuple([PrefValue::cost(a), PrefValue::cost(b)]);
        // p1's constraint is keyed by (p2, p1); in assignment order (p1, p2)
        // the tuples read cc → ⟨7,0⟩, cn → ⟨10,0⟩, nc → ⟨6,0⟩, nn → ⟨9,0⟩.
        let c1 = &p.constraints()[0];
        assert_eq!(c1.scope(), ["p2", "p1"]);
        assert_eq!(c1.value(&key("c,c")).unwrap(), &tup(7, 0));
        assert_eq!(c1.value(&key("n,c")).unwrap(), &tup(10, 0));
        assert_eq!(c1.value(&key("c,n")).unwrap(), &tup(6, 0));
        assert_eq!(c1.value(&key("n,n")).unwrap(), &tup(9, 0));
        let c2 = &p.constraints()[1];
        assert_eq!(c2.scope(), ["p1", "p2"]);
        assert_eq!(c2.value(&key("c,n")).unwrap(), &tup(0, 6));
        assert_eq!(c2.value(&key("n,n")).unwrap(), &tup(0, 9));
        // Joint preferences multiply out to the complemented payoff vectors.
        assert_eq!(
            p.preference(&joint(&[("p1", "n"), ("p2", "n")])).unwrap(),
            tup(9, 9)
        );
        // Optima of the translation = Pareto efficient strategies of the game.
        let optimal: Vec<JointAssignment> =
            p.enumerate_optimal().into_iter().map(|(s, _)| s).collect();
        assert_eq!(optimal, g.enumerate_pareto());
        assert_eq!(compacts(&optimal), vec!["cc", "cn", "nc"]);
    }

    #[test]
    fn default_maps_complement_payoff_carriers_against_the_maximum() {
        let g = fixtures::prisoners_dilemma();
        let maps = default_maps(&g).unwrap();
        assert_eq!(maps[0].rule(), &MapRule::Complement(rat(4)));
        assert_eq!(maps[0].target(), BaseKind::Weighted);
        // Identity elsewhere.
        let mp = fixtures::matching_pennies();
        let maps = default_maps(&mp).unwrap();
        assert_eq!(maps[0].rule(), &MapRule::Identity);
        assert_eq!(maps[0].source(), BaseKind::Fuzzy);
    }

    #[test]
    fn identity_translation_keeps_raw_payoffs_in_coordinates() {
        let g = fixtures::matching_pennies();
        let p = game_to_scsp(&g, &identity_maps(&g).unwrap()).unwrap();
        let c1 = &p.constraints()[0];
        assert_eq!(
            c1.value(&key("h,h")).unwrap(),
            &PrefValue::tuple([PrefValue::fuzzy(1, 1), PrefValue::fuzzy(1, 1)])
        );
        let optimal: Vec<JointAssignment> =
            p.enumerate_optimal().into_iter().map(|(s, _)| s).collect();
        assert_eq!(optimal, g.enumerate_pareto());
        assert_eq!(optimal.len(), 4);
    }

    #[test]
    fn constant_payoff_players_contribute_unit_tuples_off_coordinate() {
        let g = fixtures::chain_of_three();
        let p = game_to_scsp(&g, &identity_maps(&g).unwrap()).unwrap();
        // p1's constraint: coordinate 0 carries payoffs, the rest are 1.
        let c1 = &p.constraints()[0];
        let PrefValue::Tuple(t) = c1.value(&key("a,a")).unwrap() else { panic!() };
        assert_eq!(t[1], PrefValue::fuzzy(1, 1));
        assert_eq!(t[2], PrefValue::fuzzy(1, 1));
        assert_eq!(t[0], PrefValue::fuzzy(2, 5));
    }

    #[test]
    fn translation_is_injective_on_payoffs() {
        let a = fixtures::matching_pennies();
        // Same players and strategies, one payoff entry nudged.
        let mut payoffs: BTreeMap<String, BTreeMap<Vec<String>, PrefValue>> = a
            .players()
            .iter()
            .map(|p| (p.name.clone(), a.payoff_table(&p.name).unwrap().clone()))
            .collect();
        payoffs.get_mut("p1").unwrap().insert(key("h,h"), PrefValue::fuzzy(1, 2));
        let b = GraphicalGame::new(
            a.carrier().clone(),
            a.players().to_vec(),
            [
                ("p1".to_string(), ["p2".to_string()].into_iter().collect()),
                ("p2".to_string(), ["p1".to_string()].into_iter().collect()),
            ]
            .into_iter()
            .collect(),
            payoffs,
        )
        .unwrap();
        let f = |g: &GraphicalGame| game_to_scsp(g, &identity_maps(g).unwrap()).unwrap();
        assert_ne!(f(&a), f(&b));
    }

    #[test]
    fn ceiling_below_a_payoff_is_rejected() {
        let g = fixtures::prisoners_dilemma();
        let maps = complement_maps(&g, Some(rat(3))).unwrap();
        let err = game_to_scsp(&g, &maps).unwrap_err();
        assert_eq!(
            err,
            MappingError::CeilingTooSmall { ceiling: "3".into(), payoff: "4".into() }
        );
        assert!(matches!(
            complement_maps(&g, Some(rat(-1))).unwrap_err(),
            MappingError::InvalidCeiling { .. }
        ));
    }

    #[test]
    fn order_reversing_maps_are_rejected_with_a_witness() {
        // Fuzzy payoffs read larger-is-better; pushing them unchanged into
        // the weighted carrier would flip every strict comparison.
        let g = fixtures::matching_pennies();
        let bad = OrderPreservingMap::new(
            BaseKind::Fuzzy,
            BaseKind::Weighted,
            MapRule::Identity,
        )
        .unwrap();
        let err = game_to_scsp(&g, &vec![bad; 2]).unwrap_err();
        assert_eq!(
            err,
            MappingError::NotOrderPreserving {
                from_kind: "fuzzy".into(),
                to_kind: "weighted".into(),
                smaller: "0".into(),
                larger: "1".into(),
            }
        );
        // Complementing weighted costs would equally reverse their order.
        assert!(matches!(
            OrderPreservingMap::complement(BaseKind::Weighted, rat(10)),
            Err(MappingError::UnsupportedComplement { .. })
        ));
        // Identity into a larger carrier with the same reading is fine.
        let up = OrderPreservingMap::new(
            BaseKind::Fuzzy,
            BaseKind::Payoff,
            MapRule::Identity,
        )
        .unwrap();
        up.validate_on(&[PrefValue::fuzzy(0, 1), PrefValue::fuzzy(1, 1)]).unwrap();
    }

    #[test]
    fn map_count_must_match_players() {
        let g = fixtures::matching_pennies();
        let one = identity_maps(&g).unwrap()[0].clone();
        assert_eq!(
            game_to_scsp(&g, &[one]).unwrap_err(),
            MappingError::MapCountMismatch { expected: 2, actual: 1 }
        );
    }

    #[test]
    fn hardening_keeps_exactly_the_best_responses() {
        let g = fixtures::prisoners_dilemma();
        let h = harden(&g);
        assert_eq!(*h.semiring(), Semiring::Classical);
        // p1's constraint over (p2, p1): defecting is the only best response.
        let c1 = &h.constraints()[0];
        assert_eq!(c1.value(&key("c,c")).unwrap(), &PrefValue::Bool(false));
        assert_eq!(c1.value(&key("c,n")).unwrap(), &PrefValue::Bool(true));
        assert_eq!(c1.value(&key("n,c")).unwrap(), &PrefValue::Bool(false));
        assert_eq!(c1.value(&key("n,n")).unwrap(), &PrefValue::Bool(true));
        // Solutions of the hardened problem = Nash equilibria of the game.
        assert_eq!(h.preference(&joint(&[("p1", "n"), ("p2", "n")])).unwrap(), PrefValue::Bool(true));
        assert_eq!(h.preference(&joint(&[("p1", "c"), ("p2", "c")])).unwrap(), PrefValue::Bool(false));
    }

    #[test]
    fn hardened_solutions_equal_the_equilibrium_set() {
        for g in [
            local_map(&fixtures::fuzzy_plateau()).unwrap(),
            local_map(&fixtures::fuzzy_chain()).unwrap(),
            fixtures::payoff_pair_7009(),
        ] {
            let h = harden(&g);
            let solutions: Vec<JointAssignment> = h
                .assignments()
                .filter(|s| h.preference(s).unwrap() == PrefValue::Bool(true))
                .collect();
            assert_eq!(solutions, g.enumerate_nash());
        }
    }

    #[test]
    fn hardening_an_indifferent_game_allows_everything() {
        let table: BTreeMap<Vec<String>, PrefValue> = [
            (key("a"), PrefValue::fuzzy(1, 2)),
            (key("b"), PrefValue::fuzzy(1, 2)),
        ]
        .into_iter()
        .collect();
        let g = GraphicalGame::new(
            Semiring::Fuzzy,
            vec![Player::new("p1", ["a", "b"]), Player::new("p2", ["a", "b"])],
            BTreeMap::new(),
            [("p1".to_string(), table.clone()), ("p2".to_string(), table)].into_iter().collect(),
        )
        .unwrap();
        let h = harden(&g);
        for c in h.constraints() {
            assert!(c.table().values().all(|v| *v == PrefValue::Bool(true)));
        }
    }

    #[test]
    fn merging_soft_and_hard_constraints_selects_efficient_equilibria() {
        let g = fixtures::prisoners_dilemma();
        let soft = game_to_scsp(&g, &complement_maps(&g, Some(rat(10))).unwrap()).unwrap();
        let hard = harden(&g);
        let merged = merge(&soft, &hard).unwrap();
        assert_eq!(merged.constraints().len(), 4);
        // Lifted hard constraint: nn stays at the unit, the rest collapse.
        let lifted = &merged.constraints()[2];
        let tup = |a: PrefValue, b: PrefValue| PrefValue::tuple([a, b]);
        assert_eq!(
            lifted.value(&key("n,n")).unwrap(),
            &tup(PrefValue::cost(0), PrefValue::cost(0))
        );
        assert_eq!(
            lifted.value(&key("c,c")).unwrap(),
            &tup(PrefValue::infinity(), PrefValue::infinity())
        );
        let optimal = merged.enumerate_optimal();
        assert_eq!(optimal.len(), 1);
        assert_eq!(optimal[0].0.compact(), "nn");
        assert_eq!(
            optimal[0].1,
            tup(PrefValue::cost(9), PrefValue::cost(9))
        );
        assert_eq!(
            vec![optimal[0].0.clone()],
            g.enumerate_pareto_nash()
        );
    }

    #[test]
    fn merge_concatenates_same_semiring_problems() {
        let p = fixtures::fuzzy_chain();
        let empty = Scsp::new(Semiring::Fuzzy, p.variables().to_vec(), vec![]).unwrap();
        let merged = merge(&p, &empty).unwrap();
        assert_eq!(merged.constraints().len(), 2);
        assert_eq!(merged, p);
        let doubled = merge(&p, &p).unwrap();
        assert_eq!(doubled.constraints().len(), 4);
    }

    #[test]
    fn merge_rejects_mismatched_inputs() {
        let p = fixtures::fuzzy_chain();
        let other = Scsp::new(
            Semiring::Fuzzy,
            vec![Variable::new("u", ["a", "b"]), Variable::new("v", ["a", "b"])],
            vec![],
        )
        .unwrap();
        assert!(matches!(
            merge(&p, &other).unwrap_err(),
            MappingError::VariableMismatch { .. }
        ));

        let narrowed = Scsp::new(
            Semiring::Fuzzy,
            vec![
                Variable::new("x", ["a"]),
                Variable::new("y", ["a", "b"]),
                Variable::new("z", ["a", "b"]),
            ],
            vec![],
        )
        .unwrap();
        assert_eq!(
            merge(&p, &narrowed).unwrap_err(),
            MappingError::DomainMismatch { variable: "x".into() }
        );

        let weighted = Scsp::new(Semiring::Weighted, p.variables().to_vec(), vec![]).unwrap();
        assert_eq!(
            merge(&p, &weighted).unwrap_err(),
            MappingError::SemiringMismatch { left: "fuzzy".into(), right: "weighted".into() }
        );
    }

    proptest! {
        /// The translated problem's optima coincide with the game's Pareto
        /// frontier, computed by the game's own dominance scan.
        #[test]
        fn translation_optima_equal_pareto_frontiers(g in fixtures::small_fuzzy_game()) {
            let p = game_to_scsp(&g, &identity_maps(&g).unwrap()).unwrap();
            let optimal: Vec<JointAssignment> =
                p.enumerate_optimal().into_iter().map(|(s, _)| s).collect();
            prop_assert_eq!(optimal, g.enumerate_pareto());
        }

        /// Merging the hard constraints restricts those optima to the Pareto
        /// efficient equilibria whenever any strategy survives the cut.
        #[test]
        fn merged_optima_equal_efficient_equilibria(g in fixtures::small_fuzzy_game()) {
            let soft = game_to_scsp(&g, &identity_maps(&g).unwrap()).unwrap();
            let merged = merge(&soft, &harden(&g)).unwrap();
            let zero = merged.semiring().zero();
            let optimal: Vec<JointAssignment> = merged
                .enumerate_optimal()
                .into_iter()
                .filter(|(_, pref)| *pref != zero)
                .map(|(s, _)| s)
                .collect();
            let nash_prefs_all_zero = g
                .enumerate_nash()
                .iter()
                .all(|s| soft.preference(s).unwrap() == zero);
            if !nash_prefs_all_zero {
                prop_assert_eq!(optimal, g.enumerate_pareto_nash());
            }
        }
    }
}
