//! Python bindings for the soft-constraint / graphical-game library.
//!
//! The module mirrors the command-line surface: [`Problem`] and [`Game`]
//! wrap the two JSON formats, the module-level functions implement the
//! translations between them, and [`verify`] / [`check_semiring`] expose the
//! seeded law harness and the carrier checkers.
//!
//! Values cross the boundary as strings in the same canonical renderings the
//! CLI prints (`0.5`, `7/2`, `infinity`, `true`, `[3, 3]`), so Python-side
//! assertions can be byte-for-byte.

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use softgames::scsp::JointAssignment;
use softgames::semiring::parse_rational;
use softgames::{Family, GeneratorConfig, GraphicalGame, PrefValue, Rational, Scsp, Semiring};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_assignment(entries: &BTreeMap<String, String>) -> JointAssignment {
    JointAssignment::new(entries.iter().map(|(k, v)| (k.clone(), v.clone())))
}

/// A soft constraint satisfaction problem over a preference carrier.
#[pyclass(skip_from_py_object)]
#[derive(Clone)]
pub struct Problem {
    inner: Scsp,
}

#[pymethods]
impl Problem {
    /// Parses a problem from its JSON description.
    #[staticmethod]
    pub fn from_json(text: &str) -> PyResult<Problem> {
        Ok(Problem { inner: softgames::scsp_from_json(text).map_err(value_error)? })
    }

    /// Serialises the problem back to its JSON description.
    pub fn to_json(&self) -> String {
        softgames::scsp_to_json(&self.inner)
    }

    /// The carrier name, e.g. `fuzzy` or `product(weighted,weighted)`.
    pub fn carrier(&self) -> String {
        self.inner.semiring().describe()
    }

    /// The variables as `(name, domain)` pairs, in declaration order.
    pub fn variables(&self) -> Vec<(String, Vec<String>)> {
        self.inner
            .variables()
            .iter()
            .map(|v| (v.name.clone(), v.domain.clone()))
            .collect()
    }

    /// How many soft constraints the problem carries.
    pub fn constraint_count(&self) -> usize {
        self.inner.constraints().len()
    }

    /// For classical problems only: whether some assignment satisfies every
    /// constraint.
    pub fn is_consistent(&self) -> PyResult<bool> {
        self.inner.is_consistent().map_err(value_error)
    }

    /// The preference of one complete assignment (a `{variable: value}` dict).
    pub fn preference(&self, assignment: BTreeMap<String, String>) -> PyResult<String> {
        let s = to_assignment(&assignment);
        Ok(self.inner.preference(&s).map_err(value_error)?.to_string())
    }

    /// All optimal assignments as `(compact_assignment, preference)` pairs,
    /// in canonical (domain-index) order.
    pub fn solve(&self) -> Vec<(String, String)> {
        self.inner
            .enumerate_optimal()
            .into_iter()
            .map(|(s, pref)| (s.compact(), pref.to_string()))
            .collect()
    }

    fn __repr__(&self) -> String {
        format!(
            "Problem(carrier={}, variables={}, constraints={})",
            self.carrier(),
            self.inner.variables().len(),
            self.inner.constraints().len()
        )
    }
}

/// A graphical game: players, neighbourhoods, and local payoff tables.
#[pyclass(skip_from_py_object)]
#[derive(Clone)]
pub struct Game {
    inner: GraphicalGame,
}

fn strategy_rows(g: &GraphicalGame, rows: Vec<JointAssignment>) -> Vec<(String, String)> {
    rows.into_iter()
        .map(|s| {
            let vector = PrefValue::tuple(g.payoff_vector(&s).expect("rows are complete profiles"));
            (s.compact(), vector.to_string())
        })
        .collect()
}

#[pymethods]
impl Game {
    /// Parses a game from its JSON description.
    #[staticmethod]
    pub fn from_json(text: &str) -> PyResult<Game> {
        Ok(Game { inner: softgames::game_from_json(text).map_err(value_error)? })
    }

    /// Serialises the game back to its JSON description.
    pub fn to_json(&self) -> String {
        softgames::game_to_json(&self.inner)
    }

    /// The payoff carrier name.
    pub fn carrier(&self) -> String {
        self.inner.carrier().describe()
    }

    /// The players as `(name, strategies)` pairs, in declaration order.
    pub fn players(&self) -> Vec<(String, Vec<String>)> {
        self.inner
            .players()
            .iter()
            .map(|p| (p.name.clone(), p.strategies.clone()))
            .collect()
    }

    /// The neighbours of one player, sorted by name.
    pub fn neighbours(&self, name: &str) -> PyResult<Vec<String>> {
        Ok(self.inner.neighbours(name).map_err(value_error)?.iter().cloned().collect())
    }

    /// One player's payoff under a complete strategy profile
    /// (a `{player: strategy}` dict).
    pub fn payoff(&self, name: &str, strategies: BTreeMap<String, String>) -> PyResult<String> {
        let s = to_assignment(&strategies);
        Ok(self.inner.payoff(name, &s).map_err(value_error)?.to_string())
    }

    /// The full payoff vector of a profile, rendered like `[3, 3]`.
    pub fn payoff_vector(&self, strategies: BTreeMap<String, String>) -> PyResult<String> {
        let s = to_assignment(&strategies);
        Ok(PrefValue::tuple(self.inner.payoff_vector(&s).map_err(value_error)?).to_string())
    }

    /// Whether a profile is a pure Nash equilibrium.
    pub fn is_nash(&self, strategies: BTreeMap<String, String>) -> PyResult<bool> {
        self.inner.is_nash(&to_assignment(&strategies)).map_err(value_error)
    }

    /// All pure Nash equilibria as `(compact_profile, payoff_vector)` pairs.
    pub fn nash(&self) -> Vec<(String, String)> {
        strategy_rows(&self.inner, self.inner.enumerate_nash())
    }

    /// All Pareto efficient profiles as `(compact_profile, payoff_vector)` pairs.
    pub fn pareto(&self) -> Vec<(String, String)> {
        strategy_rows(&self.inner, self.inner.enumerate_pareto())
    }

    /// The Pareto frontier of the Nash set: equilibria not dominated by
    /// another equilibrium.
    pub fn pareto_nash(&self) -> Vec<(String, String)> {
        strategy_rows(&self.inner, self.inner.enumerate_pareto_nash())
    }

    /// Equilibria that are also Pareto efficient among all profiles.
    pub fn nash_pareto_intersect(&self) -> Vec<(String, String)> {
        strategy_rows(&self.inner, self.inner.enumerate_nash_and_global_pareto())
    }

    fn __repr__(&self) -> String {
        format!(
            "Game(carrier={}, players={})",
            self.carrier(),
            self.inner.players().len()
        )
    }
}

/// Translates a problem into the game where each variable becomes a player
/// paid by the constraints it appears in.
#[pyfunction]
pub fn local_map(problem: &Problem) -> PyResult<Game> {
    Ok(Game { inner: softgames::local_map(&problem.inner).map_err(value_error)? })
}

/// Translates a problem into the game where every player is paid the full
/// combined preference of the whole assignment.
#[pyfunction]
pub fn global_map(problem: &Problem) -> PyResult<Game> {
    Ok(Game { inner: softgames::global_map(&problem.inner).map_err(value_error)? })
}

/// Translates a game into a problem over a product carrier, one coordinate
/// per player, via strictly order-preserving maps.
///
/// `f` picks the per-player map: `"identity"` keeps payoffs as they are
/// (only for carriers whose values are already preferences), `"complement"`
/// sends payoff `v` to cost `ceiling - v`. With `f` omitted, a `ceiling`
/// implies complementation; otherwise the carrier's default map is used
/// (identity, except complementation against the greatest finite payoff for
/// the payoff carrier).
#[pyfunction]
#[pyo3(signature = (game, f=None, ceiling=None))]
pub fn inverse_map(game: &Game, f: Option<&str>, ceiling: Option<&str>) -> PyResult<Problem> {
    let g = &game.inner;
    let ceiling = match ceiling {
        None => None,
        Some(text) => Some(
            parse_rational(text)
                .ok_or_else(|| value_error(format!("`{text}` is not a rational ceiling")))?,
        ),
    };
    let maps = match f {
        Some("identity") => {
            if ceiling.is_some() {
                return Err(value_error("ceiling requires f=\"complement\""));
            }
            softgames::identity_maps(g).map_err(value_error)?
        }
        Some("complement") => softgames::complement_maps(g, ceiling).map_err(value_error)?,
        Some(other) => {
            return Err(value_error(format!(
                "`{other}` is not a map rule (identity or complement)"
            )))
        }
        None => match ceiling {
            Some(c) => softgames::complement_maps(g, Some(c)).map_err(value_error)?,
            None => softgames::default_maps(g).map_err(value_error)?,
        },
    };
    Ok(Problem { inner: softgames::game_to_scsp(g, &maps).map_err(value_error)? })
}

/// Extracts best-response structure as a classical problem whose solutions
/// are exactly the pure Nash equilibria of the game.
#[pyfunction]
pub fn harden(game: &Game) -> Problem {
    Problem { inner: softgames::harden(&game.inner) }
}

/// Concatenates two problems over the same variables and carrier.
#[pyfunction]
pub fn merge(a: &Problem, b: &Problem) -> PyResult<Problem> {
    Ok(Problem { inner: softgames::merge(&a.inner, &b.inner).map_err(value_error)? })
}

/// Generates `count` seeded instances from `family` and checks the mapping
/// laws on each (same fixed instance shape as the CLI: three variables,
/// two-value domains, density one half).
///
/// Returns `(ok, report)`; the report is the canonical text rendering, or
/// JSON when `json=True`.
#[pyfunction]
#[pyo3(signature = (family, seed=0, count=100, json=false))]
pub fn verify(family: &str, seed: u64, count: usize, json: bool) -> PyResult<(bool, String)> {
    let family = Family::parse(family).ok_or_else(|| {
        value_error(format!(
            "`{family}` is not a family (classical, fuzzy, weighted, game-fuzzy, or game-weighted)"
        ))
    })?;
    let cfg = GeneratorConfig::new(family, seed, 3, 2, Rational::new(1.into(), 2.into()))
        .map_err(value_error)?;
    let report = softgames::verify_all(&cfg, count).map_err(value_error)?;
    let text = if json { report.to_json() } else { report.to_text() };
    Ok((report.is_success(), text))
}

/// Checks the carrier axioms on a canonical sample and, for linearly ordered
/// carriers, strict monotonicity of combination.
///
/// Returns `(violations, strictly_monotonic)`; the second component is
/// `None` when the carrier's order is partial, so the question does not
/// apply.
#[pyfunction]
pub fn check_semiring(kind: &str) -> PyResult<(Vec<String>, Option<bool>)> {
    let kind = Semiring::parse_kind(kind).ok_or_else(|| {
        value_error(format!(
            "`{kind}` is not a carrier (classical, fuzzy, weighted, payoff, or product:<kind>,...)"
        ))
    })?;
    let sample = kind.canonical_sample();
    let violations = kind.check_axioms(&sample).map_err(value_error)?;
    let monotonic = if kind.is_linearly_ordered() {
        Some(kind.is_strictly_monotonic(&sample).map_err(value_error)?.strictly_monotonic)
    } else {
        None
    };
    Ok((violations.iter().map(|v| v.to_string()).collect(), monotonic))
}

/// Soft constraint problems, graphical games, and the maps between them.
#[pymodule]
fn softgames_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Problem>()?;
    m.add_class::<Game>()?;
    m.add_function(wrap_pyfunction!(local_map, m)?)?;
    m.add_function(wrap_pyfunction!(global_map, m)?)?;
    m.add_function(wrap_pyfunction!(inverse_map, m)?)?;
    m.add_function(wrap_pyfunction!(harden, m)?)?;
    m.add_function(wrap_pyfunction!(merge, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(check_semiring, m)?)?;
    m.add("GENERATOR_ID", softgames::GENERATOR_ID)?;
    Ok(())
}
