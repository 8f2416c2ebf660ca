//! Seeded random instances and the containment-law verification suites.
//!
//! The generators derive every instance from a [`GeneratorConfig`] with a
//! fixed, documented algorithm (recorded in report headers as
//! [`GENERATOR_ID`]), so any instance — including a failing one — can be
//! reproduced from its config alone:
//!
//! - The stream is ChaCha8 seeded with the 64-bit seed; instance `i` of a
//!   batch uses `seed + i` (wrapping).
//! - Variables (players) are named `x1..xk` with domains (strategy sets)
//!   that are prefixes of `a, b, c`.
//! - Problems draw, in order: for each variable a 1/2-probability coin for a
//!   unary constraint, then its table cells in canonical tuple order; then
//!   for each variable pair in lexicographic order a `density`-probability
//!   coin for a binary constraint, then its cells. Classical instances that
//!   come out all-true (or all-false) get their first cell flipped so both
//!   truth values occur whenever there is any constraint at all.
//! - Games draw all neighbour-pair coins first (the graph is symmetric),
//!   then each player's payoff cells in canonical local-scope order.
//! - Value pools: fuzzy — the eleven tenths `0, 0.1, …, 1`; weighted — the
//!   costs `0..10` plus infinity, uniformly over the twelve outcomes;
//!   classical — fair coins.
//!
//! [`verify_all`] generates a batch and checks every containment law the
//! translations promise, comparing solution sets computed by independent
//! exhaustive enumerations on the two sides of each mapping:
//!
//! - `optimal-in-local-nash`, `optimal-in-local-pareto`: optima of a problem
//!   are equilibria / Pareto efficient in its local game. Claimed only where
//!   combination is strictly monotonic, so they run on weighted instances
//!   and skip those containing infinity (adding infinity is not strictly
//!   monotonic, and the containment genuinely fails there). Note that the
//!   Pareto half is reported as stated but does not actually hold: local
//!   payoffs double-count shared constraints, so a joint change can improve
//!   every player's local total while worsening the global combination. The
//!   suite finds and reports such instances; see
//!   `local_pareto_containment_genuinely_fails_for_weighted_combination` in
//!   the mapping tests for a minimal example.
//! - `solutions-in-local-nash`: solutions of a consistent classical problem
//!   are equilibria of its local game (skips inconsistent instances).
//! - `optimal-in-global-nash`, `optimal-equals-global-pareto`: optima are
//!   equilibria of the global game and coincide with its Pareto frontier,
//!   for every linearly ordered carrier.
//! - `translation-optimal-equals-pareto`: optima of the translated product
//!   problem coincide with the game's Pareto frontier.
//! - `merged-optimal-equals-efficient-equilibria`: merging in the hardened
//!   constraints restricts those optima (above the product zero) to the
//!   Pareto efficient equilibria. Skipped when every equilibrium's soft
//!   preference is the product zero, where the correspondence cannot apply.
//!
//! Fuzzy batches additionally count instances witnessing that the local
//! containment fails without strict monotonicity (an optimum that is not an
//! equilibrium); a healthy batch finds many.

use std::collections::HashSet;

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::game::GraphicalGame;
use crate::json::{game_to_json, scsp_to_json};
use crate::mappings::{default_maps, game_to_scsp, global_map, harden, local_map, merge};
use crate::scsp::{JointAssignment, Scsp, SoftConstraint, Variable};
use crate::semiring::{format_rational, PrefValue, Rational, Semiring};

/// Identifies the exact generation algorithm; recorded in every report so
/// results stay comparable across versions.
pub const GENERATOR_ID: &str = "chacha8-seed-plus-index-v1";

/// The instance families the harness can generate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Classical,
    Fuzzy,
    Weighted,
    GameFuzzy,
    GameWeighted,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Classical => "classical",
            Family::Fuzzy => "fuzzy",
            Family::Weighted => "weighted",
            Family::GameFuzzy => "game-fuzzy",
            Family::GameWeighted => "game-weighted",
        }
    }

    pub fn parse(text: &str) -> Option<Family> {
        match text {
            "classical" => Some(Family::Classical),
            "fuzzy" => Some(Family::Fuzzy),
            "weighted" => Some(Family::Weighted),
            "game-fuzzy" => Some(Family::GameFuzzy),
            "game-weighted" => Some(Family::GameWeighted),
            _ => None,
        }
    }

    /// Whether this family generates games rather than problems.
    pub fn is_game(self) -> bool {
        matches!(self, Family::GameFuzzy | Family::GameWeighted)
    }

    fn semiring(self) -> Semiring {
        match self {
            Family::Classical => Semiring::Classical,
            Family::Fuzzy | Family::GameFuzzy => Semiring::Fuzzy,
            Family::Weighted | Family::GameWeighted => Semiring::Weighted,
        }
    }
}

/// Errors raised by the generators and suites.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HarnessError {
    #[error("InvalidConfig: {message}")]
    InvalidConfig { message: String },
}

fn invalid(message: impl Into<String>) -> HarnessError {
    HarnessError::InvalidConfig { message: message.into() }
}

/// Everything an instance is derived from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub family: Family,
    pub seed: u64,
    /// Number of variables or players, 2 to 4.
    pub num_vars: usize,
    /// Domain / strategy-set size, 2 to 3.
    pub domain_size: usize,
    /// Probability that a variable pair shares a binary constraint (that a
    /// player pair are neighbours), in (0, 1].
    pub density: Rational,
}

impl GeneratorConfig {
    pub fn new(
        family: Family,
        seed: u64,
        num_vars: usize,
        domain_size: usize,
        density: Rational,
    ) -> Result<GeneratorConfig, HarnessError> {
        let cfg = GeneratorConfig { family, seed, num_vars, domain_size, density };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        if !(2..=4).contains(&self.num_vars) {
            return Err(invalid(format!("num_vars must be 2..4, got {}", self.num_vars)));
        }
        if !(2..=3).contains(&self.domain_size) {
            return Err(invalid(format!("domain_size must be 2..3, got {}", self.domain_size)));
        }
        let zero = Rational::from_integer(0.into());
        let one = Rational::from_integer(1.into());
        if self.density <= zero || self.density > one {
            return Err(invalid(format!(
                "density must be in (0, 1], got {}",
                format_rational(&self.density)
            )));
        }
        self.density_ratio()?;
        Ok(())
    }

    fn density_ratio(&self) -> Result<(u32, u32), HarnessError> {
        let numer = self.density.numer().to_u32();
        let denom = self.density.denom().to_u32();
        match (numer, denom) {
            (Some(n), Some(d)) if d > 0 => Ok((n, d)),
            _ => Err(invalid(format!(
                "density {} is too fine-grained",
                format_rational(&self.density)
            ))),
        }
    }

    fn with_seed(&self, seed: u64) -> GeneratorConfig {
        GeneratorConfig { seed, ..self.clone() }
    }

    fn labels(&self) -> Vec<String> {
        ["a", "b", "c"][..self.domain_size].iter().map(|s| s.to_string()).collect()
    }

    fn names(&self) -> Vec<String> {
        (1..=self.num_vars).map(|i| format!("x{i}")).collect()
    }

    fn draw(&self, rng: &mut ChaCha8Rng) -> PrefValue {
        match self.family.semiring() {
            Semiring::Classical => PrefValue::Bool(rng.random_ratio(1, 2)),
            Semiring::Fuzzy => PrefValue::fuzzy(rng.random_range(0..=10), 10),
            Semiring::Weighted => match rng.random_range(0..12) {
                11 => PrefValue::infinity(),
                k => PrefValue::cost(k),
            },
            _ => unreachable!("families use base carriers"),
        }
    }
}

/// All tuples over `columns` label sets, in canonical lexicographic order.
fn tuples(columns: &[&[String]]) -> Vec<Vec<String>> {
    let mut keys = vec![Vec::new()];
    for column in columns {
        let mut grown = Vec::with_capacity(keys.len() * column.len());
        for prefix in &keys {
            for label in *column {
                let mut key = prefix.clone();
                key.push(label.clone());
                grown.push(key);
            }
        }
        keys = grown;
    }
    keys
}

/// Generates the problem determined by `cfg`. Same config, same problem.
pub fn generate_scsp(cfg: &GeneratorConfig) -> Result<Scsp, HarnessError> {
    cfg.validate()?;
    if cfg.family.is_game() {
        return Err(invalid(format!("family {} generates games", cfg.family.name())));
    }
    let (dn, dd) = cfg.density_ratio()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let labels = cfg.labels();
    let names = cfg.names();
    let variables: Vec<Variable> =
        names.iter().map(|n| Variable::new(n, labels.iter().cloned())).collect();

    let mut raw: Vec<(Vec<String>, Vec<(Vec<String>, PrefValue)>)> = Vec::new();
    for name in &names {
        if rng.random_ratio(1, 2) {
            let entries = tuples(&[&labels])
                .into_iter()
                .map(|t| {
                    let v = cfg.draw(&mut rng);
                    (t, v)
                })
                .collect();
            raw.push((vec![name.clone()], entries));
        }
    }
    for i in 0..names.len() {
        for j in i + 1..names.len() {
            if rng.random_ratio(dn, dd) {
                let entries = tuples(&[&labels, &labels])
                    .into_iter()
                    .map(|t| {
                        let v = cfg.draw(&mut rng);
                        (t, v)
                    })
                    .collect();
                raw.push((vec![names[i].clone(), names[j].clone()], entries));
            }
        }
    }

    // Classical instances should exercise both truth values when possible.
    if cfg.family == Family::Classical && !raw.is_empty() {
        let mut has = [false, false];
        for (_, entries) in &raw {
            for (_, v) in entries {
                if let PrefValue::Bool(b) = v {
                    has[*b as usize] = true;
                }
            }
        }
        if !has[0] {
            raw[0].1[0].1 = PrefValue::Bool(false);
        } else if !has[1] {
            raw[0].1[0].1 = PrefValue::Bool(true);
        }
    }

    let constraints: Vec<SoftConstraint> = raw
        .into_iter()
        .map(|(scope, entries)| SoftConstraint::new(scope, entries))
        .collect();
    Ok(Scsp::new(cfg.family.semiring(), variables, constraints)
        .expect("generated problems are well formed"))
}

/// Generates the game determined by `cfg`. Same config, same game.
pub fn generate_game(cfg: &GeneratorConfig) -> Result<GraphicalGame, HarnessError> {
    cfg.validate()?;
    if !cfg.family.is_game() {
        return Err(invalid(format!("family {} generates problems", cfg.family.name())));
    }
    let (dn, dd) = cfg.density_ratio()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let labels = cfg.labels();
    let names = cfg.names();
    let players: Vec<crate::game::Player> = names
        .iter()
        .map(|n| crate::game::Player::new(n, labels.iter().cloned()))
        .collect();

    let mut neigh: std::collections::BTreeMap<String, std::collections::BTreeSet<String>> =
        names.iter().map(|n| (n.clone(), Default::default())).collect();
    for i in 0..names.len() {
        for j in i + 1..names.len() {
            if rng.random_ratio(dn, dd) {
                neigh.get_mut(&names[i]).unwrap().insert(names[j].clone());
                neigh.get_mut(&names[j]).unwrap().insert(names[i].clone());
            }
        }
    }

    let mut payoffs = std::collections::BTreeMap::new();
    for (i, name) in names.iter().enumerate() {
        let mut scope: Vec<usize> = names
            .iter()
            .enumerate()
            .filter(|(_, n)| neigh[name].contains(*n))
            .map(|(j, _)| j)
            .collect();
        scope.push(i);
        let columns: Vec<&[String]> = scope.iter().map(|_| labels.as_slice()).collect();
        let table: std::collections::BTreeMap<Vec<String>, PrefValue> = tuples(&columns)
            .into_iter()
            .map(|t| {
                let v = cfg.draw(&mut rng);
                (t, v)
            })
            .collect();
        payoffs.insert(name.clone(), table);
    }
    Ok(GraphicalGame::new(cfg.family.semiring(), players, neigh, payoffs)
        .expect("generated games are well formed"))
}

/// Per-property tallies of one verification run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyOutcome {
    pub id: &'static str,
    pub checked: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

/// One genuine violation: the instance (in its file form), the two solution
/// sets that were compared, and the witness that separates them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub property: &'static str,
    pub instance_index: usize,
    pub seed: u64,
    pub instance: String,
    pub left_label: &'static str,
    pub left: Vec<String>,
    pub right_label: &'static str,
    pub right: Vec<String>,
    pub witness: Option<String>,
}

/// The outcome of a verification run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub generator: &'static str,
    pub family: Family,
    pub seed: u64,
    pub count: usize,
    pub num_vars: usize,
    pub domain_size: usize,
    pub density: Rational,
    pub properties: Vec<PropertyOutcome>,
    pub failures: Vec<Failure>,
    /// Fuzzy batches only: instances where an optimum is not an equilibrium
    /// of the local game — the gap that strict monotonicity would close.
    pub strictness_witnesses: usize,
}

impl VerificationReport {
    pub fn failure_count(&self) -> usize {
        self.failures.len()
    }

    pub fn is_success(&self) -> bool {
        self.failures.is_empty()
    }

    /// Line-oriented rendering.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("generator: {}\n", self.generator));
        out.push_str(&format!("family: {}\n", self.family.name()));
        out.push_str(&format!("seed: {}\n", self.seed));
        out.push_str(&format!("count: {}\n", self.count));
        out.push_str(&format!("num-vars: {}\n", self.num_vars));
        out.push_str(&format!("domain-size: {}\n", self.domain_size));
        out.push_str(&format!("density: {}\n", format_rational(&self.density)));
        for p in &self.properties {
            out.push_str(&format!(
                "property {}: checked {}, passed {}, failed {}, skipped {}\n",
                p.id, p.checked, p.passed, p.failed, p.skipped
            ));
        }
        if self.family == Family::Fuzzy {
            out.push_str(&format!(
                "local-equilibrium-gap-witnesses: {}\n",
                self.strictness_witnesses
            ));
        }
        out.push_str(&format!("failures: {}\n", self.failures.len()));
        for (i, f) in self.failures.iter().enumerate() {
            out.push_str(&format!(
                "failure {}: property {}, instance {}, seed {}\n",
                i + 1,
                f.property,
                f.instance_index,
                f.seed
            ));
            out.push_str(&format!("  {}: {}\n", f.left_label, f.left.join(", ")));
            out.push_str(&format!("  {}: {}\n", f.right_label, f.right.join(", ")));
            if let Some(w) = &f.witness {
                out.push_str(&format!("  witness: {w}\n"));
            }
            out.push_str(&format!("  instance: {}\n", compact_json(&f.instance)));
        }
        out
    }

    /// The same report as a JSON document.
    pub fn to_json(&self) -> String {
        let properties: Vec<serde_json::Value> = self
            .properties
            .iter()
            .map(|p| {
                serde_json::json!({
                    "id": p.id,
                    "checked": p.checked,
                    "passed": p.passed,
                    "failed": p.failed,
                    "skipped": p.skipped,
                })
            })
            .collect();
        let failures: Vec<serde_json::Value> = self
            .failures
            .iter()
            .map(|f| {
                let instance: serde_json::Value = serde_json::from_str(&f.instance)
                    .expect("failure instances are serialized by this crate");
                serde_json::json!({
                    "property": f.property,
                    "instance_index": f.instance_index,
                    "seed": f.seed,
                    "instance": instance,
                    f.left_label: f.left,
                    f.right_label: f.right,
                    "witness": f.witness,
                })
            })
            .collect();
        let mut report = serde_json::json!({
            "generator": self.generator,
            "family": self.family.name(),
            "seed": self.seed,
            "count": self.count,
            "num_vars": self.num_vars,
            "domain_size": self.domain_size,
            "density": format_rational(&self.density),
            "properties": properties,
            "failures": failures,
        });
        if self.family == Family::Fuzzy {
            report["local_equilibrium_gap_witnesses"] =
                serde_json::Value::from(self.strictness_witnesses);
        }
        serde_json::to_string_pretty(&report).expect("report JSON is plain data")
    }
}

fn compact_json(text: &str) -> String {
    let value: serde_json::Value =
        serde_json::from_str(text).expect("instances are serialized by this crate");
    serde_json::to_string(&value).expect("plain data")
}

/// Accumulates one property's tallies and failure records.
struct Tally {
    outcome: PropertyOutcome,
    failures: Vec<Failure>,
}

impl Tally {
    fn new(id: &'static str) -> Tally {
        Tally {
            outcome: PropertyOutcome { id, checked: 0, passed: 0, failed: 0, skipped: 0 },
            failures: Vec::new(),
        }
    }

    fn skip(&mut self) {
        self.outcome.skipped += 1;
    }

    /// Records a subset check `left ⊆ right`.
    fn subset(
        &mut self,
        ctx: &InstanceContext,
        left_label: &'static str,
        left: &[JointAssignment],
        right_label: &'static str,
        right: &[JointAssignment],
    ) {
        let set: HashSet<&JointAssignment> = right.iter().collect();
        let witness = left.iter().find(|s| !set.contains(s));
        self.record(ctx, left_label, left, right_label, right, witness);
    }

    /// Records a set-equality check `left == right`.
    fn equal(
        &mut self,
        ctx: &InstanceContext,
        left_label: &'static str,
        left: &[JointAssignment],
        right_label: &'static str,
        right: &[JointAssignment],
    ) {
        let l: HashSet<&JointAssignment> = left.iter().collect();
        let r: HashSet<&JointAssignment> = right.iter().collect();
        let witness = left
            .iter()
            .find(|s| !r.contains(s))
            .or_else(|| right.iter().find(|s| !l.contains(s)));
        self.record(ctx, left_label, left, right_label, right, witness);
    }

    fn record(
        &mut self,
        ctx: &InstanceContext,
        left_label: &'static str,
        left: &[JointAssignment],
        right_label: &'static str,
        right: &[JointAssignment],
        witness: Option<&JointAssignment>,
    ) {
        self.outcome.checked += 1;
        match witness {
            None => self.outcome.passed += 1,
            Some(w) => {
                self.outcome.failed += 1;
                self.failures.push(Failure {
                    property: self.outcome.id,
                    instance_index: ctx.index,
                    seed: ctx.seed,
                    instance: ctx.serialized.clone(),
                    left_label,
                    left: left.iter().map(|s| s.compact()).collect(),
                    right_label,
                    right: right.iter().map(|s| s.compact()).collect(),
                    witness: Some(w.compact()),
                });
            }
        }
    }
}

struct InstanceContext {
    index: usize,
    seed: u64,
    serialized: String,
}

fn assignments_of(optimal: Vec<(JointAssignment, PrefValue)>) -> Vec<JointAssignment> {
    optimal.into_iter().map(|(s, _)| s).collect()
}

fn contains_infinity(p: &Scsp) -> bool {
    p.constraints()
        .iter()
        .any(|c| c.table().values().any(|v| *v == PrefValue::infinity()))
}

/// Generates `count` instances from `cfg` (instance `i` reseeds with
/// `seed + i`) and checks every law applicable to the family. The report is
/// deterministic in `(cfg, count)`.
pub fn verify_all(cfg: &GeneratorConfig, count: usize) -> Result<VerificationReport, HarnessError> {
    cfg.validate()?;
    if count == 0 {
        return Err(invalid("count must be at least 1"));
    }

    let mut local_nash = Tally::new("optimal-in-local-nash");
    let mut local_pareto = Tally::new("optimal-in-local-pareto");
    let mut solutions_nash = Tally::new("solutions-in-local-nash");
    let mut global_nash = Tally::new("optimal-in-global-nash");
    let mut global_pareto = Tally::new("optimal-equals-global-pareto");
    let mut translation = Tally::new("translation-optimal-equals-pareto");
    let mut merged = Tally::new("merged-optimal-equals-efficient-equilibria");
    let mut strictness_witnesses = 0usize;

    for index in 0..count {
        let instance_cfg = cfg.with_seed(cfg.seed.wrapping_add(index as u64));
        if cfg.family.is_game() {
            let g = generate_game(&instance_cfg)?;
            let ctx = InstanceContext {
                index,
                seed: instance_cfg.seed,
                serialized: game_to_json(&g),
            };

            let maps = default_maps(&g).expect("generated carriers admit default maps");
            let soft = game_to_scsp(&g, &maps).expect("default maps are order preserving");
            let pareto = g.enumerate_pareto();
            let optimal = assignments_of(soft.enumerate_optimal());
            translation.equal(&ctx, "translation-optimal", &optimal, "pareto", &pareto);

            let nash = g.enumerate_nash();
            let zero = soft.semiring().zero();
            let all_zero = !nash.is_empty()
                && nash.iter().all(|s| {
                    soft.preference(s).expect("equilibria are complete assignments") == zero
                });
            if all_zero {
                merged.skip();
            } else {
                let combined = merge(&soft, &harden(&g)).expect("harden preserves shape");
                let above_zero: Vec<JointAssignment> = combined
                    .enumerate_optimal()
                    .into_iter()
                    .filter(|(_, pref)| *pref != zero)
                    .map(|(s, _)| s)
                    .collect();
                let efficient = g.enumerate_pareto_nash();
                merged.equal(
                    &ctx,
                    "merged-optimal",
                    &above_zero,
                    "pareto-nash",
                    &efficient,
                );
            }
        } else {
            let p = generate_scsp(&instance_cfg)?;
            let ctx = InstanceContext {
                index,
                seed: instance_cfg.seed,
                serialized: scsp_to_json(&p),
            };
            let optimal = assignments_of(p.enumerate_optimal());

            let global = global_map(&p).expect("generated problems map cleanly");
            global_nash.subset(&ctx, "optimal", &optimal, "nash", &global.enumerate_nash());
            global_pareto.equal(&ctx, "optimal", &optimal, "pareto", &global.enumerate_pareto());

            match cfg.family {
                Family::Weighted => {
                    if contains_infinity(&p) {
                        local_nash.skip();
                        local_pareto.skip();
                    } else {
                        let local = local_map(&p).expect("generated problems map cleanly");
                        local_nash.subset(
                            &ctx,
                            "optimal",
                            &optimal,
                            "nash",
                            &local.enumerate_nash(),
                        );
                        local_pareto.subset(
                            &ctx,
                            "optimal",
                            &optimal,
                            "pareto",
                            &local.enumerate_pareto(),
                        );
                    }
                }
                Family::Classical => {
                    if p.is_consistent().expect("classical instances") {
                        let solutions: Vec<JointAssignment> = p
                            .assignments()
                            .filter(|s| {
                                p.preference(s).expect("complete") == PrefValue::Bool(true)
                            })
                            .collect();
                        let local = local_map(&p).expect("generated problems map cleanly");
                        solutions_nash.subset(
                            &ctx,
                            "solutions",
                            &solutions,
                            "nash",
                            &local.enumerate_nash(),
                        );
                    } else {
                        solutions_nash.skip();
                    }
                }
                Family::Fuzzy => {
                    let local = local_map(&p).expect("generated problems map cleanly");
                    let nash: HashSet<JointAssignment> =
                        local.enumerate_nash().into_iter().collect();
                    if optimal.iter().any(|s| !nash.contains(s)) {
                        strictness_witnesses += 1;
                    }
                    // The translation law holds for any game, so exercise it
                    // on the local game this instance induces.
                    let maps = default_maps(&local).expect("fuzzy carriers admit default maps");
                    let soft = game_to_scsp(&local, &maps).expect("identity maps always apply");
                    translation.equal(
                        &ctx,
                        "translation-optimal",
                        &assignments_of(soft.enumerate_optimal()),
                        "pareto",
                        &local.enumerate_pareto(),
                    );
                }
                _ => unreachable!("game families are handled above"),
            }
        }
    }

    let tallies = match cfg.family {
        Family::Weighted => vec![local_nash, local_pareto, global_nash, global_pareto],
        Family::Classical => vec![solutions_nash, global_nash, global_pareto],
        Family::Fuzzy => vec![global_nash, global_pareto, translation],
        Family::GameFuzzy | Family::GameWeighted => vec![translation, merged],
    };
    let mut properties = Vec::new();
    let mut failures = Vec::new();
    for t in tallies {
        properties.push(t.outcome);
        failures.extend(t.failures);
    }
    failures.sort_by_key(|f| f.instance_index);

    Ok(VerificationReport {
        generator: GENERATOR_ID,
        family: cfg.family,
        seed: cfg.seed,
        count,
        num_vars: cfg.num_vars,
        domain_size: cfg.domain_size,
        density: cfg.density.clone(),
        properties,
        failures,
        strictness_witnesses,
    })
}
