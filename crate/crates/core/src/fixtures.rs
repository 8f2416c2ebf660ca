//! Shared hand-checked example problems and games used across test modules.
//!
//! Every optimum, equilibrium, and mapped table these produce has been worked
//! out by hand in the unit tests that consume them, so they double as golden
//! data: if construction or enumeration drifts, several independent tests
//! disagree at once.

use std::collections::{BTreeMap, BTreeSet};

use crate::game::{GraphicalGame, Player};
use crate::scsp::{Scsp, SoftConstraint, Variable};
use crate::semiring::{PrefValue, Semiring};

/// Builds a table from `"a,b" -> value` rows.
pub(crate) fn table(rows: &[(&str, PrefValue)]) -> BTreeMap<Vec<String>, PrefValue> {
    rows.iter()
        .map(|(key, value)| (key.split(',').map(str::to_string).collect(), value.clone()))
        .collect()
}

fn constraint(scope: &[&str], rows: &[(&str, PrefValue)]) -> SoftConstraint {
    SoftConstraint::new(scope.iter().copied(), table(rows))
}

fn fz(n: i64, d: i64) -> PrefValue {
    PrefValue::fuzzy(n, d)
}

fn game(
    carrier: Semiring,
    players: Vec<Player>,
    neigh: &[(&str, &[&str])],
    payoffs: Vec<(&str, BTreeMap<Vec<String>, PrefValue>)>,
) -> GraphicalGame {
    let neigh: BTreeMap<String, BTreeSet<String>> = neigh
        .iter()
        .map(|(p, ns)| (p.to_string(), ns.iter().map(|n| n.to_string()).collect()))
        .collect();
    let payoffs = payoffs.into_iter().map(|(p, t)| (p.to_string(), t)).collect();
    GraphicalGame::new(carrier, players, neigh, payoffs).expect("fixture games are well formed")
}

/// Fuzzy chain over x, y, z with a unique optimum at `bbb` (preference 1/2).
pub(crate) fn fuzzy_chain() -> Scsp {
    Scsp::new(
        Semiring::Fuzzy,
        vec![
            Variable::new("x", ["a", "b"]),
            Variable::new("y", ["a", "b"]),
            Variable::new("z", ["a", "b"]),
        ],
        vec![
            constraint(
                &["x", "y"],
                &[("a,a", fz(2, 5)), ("a,b", fz(1, 10)), ("b,a", fz(3, 10)), ("b,b", fz(1, 2))],
            ),
            constraint(
                &["y", "z"],
                &[("a,a", fz(2, 5)), ("a,b", fz(3, 10)), ("b,a", fz(1, 10)), ("b,b", fz(1, 2))],
            ),
        ],
    )
    .expect("fixture problems are well formed")
}

/// Fuzzy chain whose optimum is a plateau of four assignments at 1/5.
pub(crate) fn fuzzy_plateau() -> Scsp {
    Scsp::new(
        Semiring::Fuzzy,
        vec![
            Variable::new("x", ["a", "b"]),
            Variable::new("y", ["a", "b"]),
            Variable::new("z", ["a", "b"]),
        ],
        vec![
            constraint(
                &["x", "y"],
                &[("a,a", fz(9, 10)), ("a,b", fz(3, 5)), ("b,a", fz(3, 5)), ("b,b", fz(9, 10))],
            ),
            constraint(
                &["y", "z"],
                &[("a,a", fz(1, 10)), ("a,b", fz(1, 5)), ("b,a", fz(1, 10)), ("b,b", fz(1, 5))],
            ),
        ],
    )
    .expect("fixture problems are well formed")
}

/// A single binary weighted constraint over x, y with costs 3/10/10/1.
pub(crate) fn weighted_single() -> Scsp {
    Scsp::new(
        Semiring::Weighted,
        vec![Variable::new("x", ["a", "b"]), Variable::new("y", ["a", "b"])],
        vec![constraint(
            &["x", "y"],
            &[
                ("a,a", PrefValue::cost(3)),
                ("a,b", PrefValue::cost(10)),
                ("b,a", PrefValue::cost(10)),
                ("b,b", PrefValue::cost(1)),
            ],
        )],
    )
    .expect("fixture problems are well formed")
}

/// Two unary plus one binary weighted constraint; unique optimum `aa`, cost 6.
pub(crate) fn weighted_unary_pair() -> Scsp {
    Scsp::new(
        Semiring::Weighted,
        vec![Variable::new("x", ["a", "b"]), Variable::new("y", ["a", "b"])],
        vec![
            constraint(&["x"], &[("a", PrefValue::cost(2)), ("b", PrefValue::cost(1))]),
            constraint(&["y"], &[("a", PrefValue::cost(4)), ("b", PrefValue::cost(7))]),
            constraint(
                &["x", "y"],
                &[
                    ("a,a", PrefValue::cost(0)),
                    ("a,b", PrefValue::cost(10)),
                    ("b,a", PrefValue::cost(10)),
                    ("b,b", PrefValue::cost(0)),
                ],
            ),
        ],
    )
    .expect("fixture problems are well formed")
}

fn boolean_chain(xy_allowed: &[&str], yz_allowed: &[&str]) -> Scsp {
    let tt = |allowed: &[&str]| -> Vec<(String, PrefValue)> {
        ["a,a", "a,b", "b,a", "b,b"]
            .iter()
            .map(|t| (t.to_string(), PrefValue::Bool(allowed.contains(t))))
            .collect()
    };
    let rows = |allowed: &[&str]| -> Vec<(Vec<String>, PrefValue)> {
        tt(allowed)
            .into_iter()
            .map(|(k, v)| (k.split(',').map(str::to_string).collect(), v))
            .collect()
    };
    Scsp::new(
        Semiring::Classical,
        vec![
            Variable::new("x", ["a", "b"]),
            Variable::new("y", ["a", "b"]),
            Variable::new("z", ["a", "b"]),
        ],
        vec![
            SoftConstraint::new(["x", "y"], rows(xy_allowed)),
            SoftConstraint::new(["y", "z"], rows(yz_allowed)),
        ],
    )
    .expect("fixture problems are well formed")
}

/// Unsatisfiable boolean chain: x=y=a forced, but y=b,z=a required.
pub(crate) fn csp_unsat() -> Scsp {
    boolean_chain(&["a,a"], &["b,a"])
}

/// Satisfiable boolean chain: `aaa` is the only solution.
pub(crate) fn csp_sat() -> Scsp {
    boolean_chain(&["a,a"], &["a,a"])
}

/// The classic two-player dilemma on the payoff carrier: each player prefers
/// to defect (`n`) whatever the other does, yet mutual cooperation (`cc`)
/// dominates the unique equilibrium `nn`.
pub(crate) fn prisoners_dilemma() -> GraphicalGame {
    let own = |rows: &[(&str, i64)]| {
        table(&rows.iter().map(|&(k, v)| (k, PrefValue::cost(v))).collect::<Vec<_>>())
    };
    // Keys list the opponent first, the owner last.
    let rows = [("c,c", 3), ("c,n", 4), ("n,c", 0), ("n,n", 1)];
    game(
        Semiring::Payoff,
        vec![Player::new("p1", ["c", "n"]), Player::new("p2", ["c", "n"])],
        &[("p1", &["p2"]), ("p2", &["p1"])],
        vec![("p1", own(&rows)), ("p2", own(&rows))],
    )
}

/// Zero-sum coordination/anti-coordination game with no pure equilibrium.
pub(crate) fn matching_pennies() -> GraphicalGame {
    let rows = |win: [&str; 2]| {
        table(&[
            ("h,h", fz(win.contains(&"h,h") as i64, 1)),
            ("h,t", fz(win.contains(&"h,t") as i64, 1)),
            ("t,h", fz(win.contains(&"t,h") as i64, 1)),
            ("t,t", fz(win.contains(&"t,t") as i64, 1)),
        ])
    };
    game(
        Semiring::Fuzzy,
        vec![Player::new("p1", ["h", "t"]), Player::new("p2", ["h", "t"])],
        &[("p1", &["p2"]), ("p2", &["p1"])],
        vec![("p1", rows(["h,h", "t,t"])), ("p2", rows(["h,t", "t,h"]))],
    )
}

/// Three players on a path: p1 — p2 — p3. p1 and p3 never see each other.
pub(crate) fn chain_of_three() -> GraphicalGame {
    game(
        Semiring::Fuzzy,
        vec![
            Player::new("p1", ["a", "b"]),
            Player::new("p2", ["a", "b"]),
            Player::new("p3", ["a", "b"]),
        ],
        &[("p1", &["p2"]), ("p2", &["p1", "p3"]), ("p3", &["p2"])],
        vec![
            (
                "p1", // scope (p2, p1)
                table(&[("a,a", fz(2, 5)), ("a,b", fz(1, 10)), ("b,a", fz(3, 10)), ("b,b", fz(1, 2))]),
            ),
            (
                "p2", // scope (p1, p3, p2)
                table(&[
                    ("a,a,a", fz(1, 2)),
                    ("a,a,b", fz(1, 5)),
                    ("a,b,a", fz(3, 10)),
                    ("a,b,b", fz(7, 10)),
                    ("b,a,a", fz(1, 10)),
                    ("b,a,b", fz(4, 5)),
                    ("b,b,a", fz(3, 5)),
                    ("b,b,b", fz(9, 10)),
                ]),
            ),
            (
                "p3", // scope (p2, p3)
                table(&[("a,a", fz(2, 5)), ("a,b", fz(3, 10)), ("b,a", fz(1, 10)), ("b,b", fz(1, 2))]),
            ),
        ],
    )
}

/// Payoff-carrier pair game whose tables are the 10-complement of the
/// weighted costs 3/10/10/1: equilibria `aa` and `bb`, efficient point `bb`.
pub(crate) fn payoff_pair_7009() -> GraphicalGame {
    let rows = table(&[
        ("a,a", PrefValue::cost(7)),
        ("a,b", PrefValue::cost(0)),
        ("b,a", PrefValue::cost(0)),
        ("b,b", PrefValue::cost(9)),
    ]);
    game(
        Semiring::Payoff,
        vec![Player::new("x", ["a", "b"]), Player::new("y", ["a", "b"])],
        &[("x", &["y"]), ("y", &["x"])],
        vec![("x", rows.clone()), ("y", rows)],
    )
}

/// Proptest strategy for small random fuzzy games: 2–3 players, two
/// strategies each, arbitrary (possibly asymmetric) neighbourhoods, payoff
/// tables drawn from the tenths.
pub(crate) fn small_fuzzy_game() -> impl proptest::strategy::Strategy<Value = GraphicalGame> {
    use proptest::prelude::*;

    (2usize..=3, proptest::collection::vec(0u8..=10, 64), any::<u8>()).prop_map(
        |(n, cells, edges)| {
            let players: Vec<Player> =
                (0..n).map(|i| Player::new(format!("p{i}"), ["a", "b"])).collect();
            let mut neigh: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
            let mut bit = 0;
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        if (edges >> (bit % 8)) & 1 == 1 {
                            neigh.entry(format!("p{i}")).or_default().insert(format!("p{j}"));
                        }
                        bit += 1;
                    }
                }
            }
            let mut payoffs = BTreeMap::new();
            let mut next = cells.iter().cycle();
            for i in 0..n {
                let mut scope: Vec<usize> = neigh
                    .get(&format!("p{i}"))
                    .map(|s| {
                        s.iter()
                            .map(|q| q.trim_start_matches('p').parse::<usize>().unwrap())
                            .collect()
                    })
                    .unwrap_or_default();
                scope.sort_unstable();
                scope.push(i);
                let mut rows = BTreeMap::new();
                let mut stack = vec![Vec::new()];
                for _ in &scope {
                    let mut grown = Vec::new();
                    for prefix in stack {
                        for v in ["a", "b"] {
                            let mut t: Vec<String> = prefix.clone();
                            t.push(v.to_string());
                            grown.push(t);
                        }
                    }
                    stack = grown;
                }
                for tuple in stack {
                    rows.insert(tuple, PrefValue::fuzzy(*next.next().unwrap() as i64, 10));
                }
                payoffs.insert(format!("p{i}"), rows);
            }
            GraphicalGame::new(Semiring::Fuzzy, players, neigh, payoffs).unwrap()
        },
    )
}
