//! Preference values and the c-semirings they live in.
//!
//! A c-semiring `⟨A, +, ×, 0, 1⟩` is a commutative semiring whose additive
//! operation is idempotent, has `0` as unit and `1` as absorbing element, and
//! whose multiplicative operation distributes over it. The additive operation
//! induces a partial order `a ≤ b iff a + b = b`, read as "b is at least as
//! preferred as a". Four linearly ordered instances are built in, plus flat
//! Cartesian products of them ordered componentwise.
//!
//! All arithmetic is exact: preferences are booleans, arbitrary-precision
//! rationals, or rationals extended with infinity. No floating point is
//! involved anywhere.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational number used for all numeric preference values.
pub type Rational = num_rational::BigRational;

/// A non-negative rational extended with a greatest element `Infinity`.
///
/// This is the value set shared by the [`Semiring::Weighted`] carrier (where
/// values are costs and *smaller* is better) and the [`Semiring::Payoff`]
/// carrier (where values are rewards and *larger* is better).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Extended {
    Finite(Rational),
    Infinity,
}

impl Extended {
    pub fn from_integer(n: i64) -> Self {
        Extended::Finite(Rational::from_integer(BigInt::from(n)))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Extended::Finite(_))
    }

    /// Natural numeric order: finite values by magnitude, `Infinity` on top.
    pub fn natural_cmp(&self, other: &Extended) -> std::cmp::Ordering {
        use Extended::*;
        match (self, other) {
            (Infinity, Infinity) => std::cmp::Ordering::Equal,
            (Infinity, Finite(_)) => std::cmp::Ordering::Greater,
            (Finite(_), Infinity) => std::cmp::Ordering::Less,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }

    /// Addition with `Infinity` absorbing.
    pub fn add(&self, other: &Extended) -> Extended {
        use Extended::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a + b),
            _ => Infinity,
        }
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(r) => f.write_str(&format_rational(r)),
            Extended::Infinity => f.write_str("inf"),
        }
    }
}

/// A single preference value.
///
/// Which variants are meaningful is determined by the semiring the value is
/// used with: `Bool` for the classical carrier, `Fuzzy` for fuzzy degrees in
/// `[0, 1]`, `Cost` for the weighted and payoff carriers, and `Tuple` for
/// product semirings. Two values are equal exactly when they are the same
/// truth value, the same rational, both infinity, or componentwise equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PrefValue {
    Bool(bool),
    Fuzzy(Rational),
    Cost(Extended),
    Tuple(Vec<PrefValue>),
}

impl PrefValue {
    /// Fuzzy degree `n/d`; panics if `d` is zero.
    pub fn fuzzy(n: i64, d: i64) -> Self {
        PrefValue::Fuzzy(Rational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// Finite cost or payoff value.
    pub fn cost(n: i64) -> Self {
        PrefValue::Cost(Extended::from_integer(n))
    }

    pub fn infinity() -> Self {
        PrefValue::Cost(Extended::Infinity)
    }

    pub fn tuple(values: impl IntoIterator<Item = PrefValue>) -> Self {
        PrefValue::Tuple(values.into_iter().collect())
    }
}

impl fmt::Display for PrefValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrefValue::Bool(b) => write!(f, "{b}"),
            PrefValue::Fuzzy(q) => f.write_str(&format_rational(q)),
            PrefValue::Cost(c) => write!(f, "{c}"),
            PrefValue::Tuple(vs) => {
                f.write_str("[")?;
                for (i, v) in vs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{v}")?;
                }
                f.write_str("]")
            }
        }
    }
}

/// Renders a rational in decimal notation when it terminates (`2/5` prints as
/// `0.4`), and as `numerator/denominator` otherwise.
pub fn format_rational(r: &Rational) -> String {
    let denom = r.denom();
    if denom.is_one() {
        return r.numer().to_string();
    }
    // A reduced fraction has a terminating decimal expansion exactly when its
    // denominator is of the form 2^a * 5^b.
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    let mut rest = denom.clone();
    let mut twos = 0u32;
    let mut fives = 0u32;
    while (&rest % &two).is_zero() {
        rest /= &two;
        twos += 1;
    }
    while (&rest % &five).is_zero() {
        rest /= &five;
        fives += 1;
    }
    if !rest.is_one() {
        return format!("{}/{}", r.numer(), r.denom());
    }
    let places = twos.max(fives);
    let scale = BigInt::from(10).pow(places);
    let scaled = (r.numer() * &scale) / denom;
    let negative = scaled.is_negative();
    let digits = scaled.magnitude().to_string();
    let digits = if digits.len() <= places as usize {
        format!("{}{}", "0".repeat(places as usize - digits.len() + 1), digits)
    } else {
        digits
    };
    let split = digits.len() - places as usize;
    let sign = if negative { "-" } else { "" };
    format!("{}{}.{}", sign, &digits[..split], &digits[split..])
}

/// Parses `"3"`, `"0.4"` (exactly 2/5), or `"2/5"` into an exact rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    if let Some((n, d)) = text.split_once('/') {
        let numer: BigInt = n.trim().parse().ok()?;
        let denom: BigInt = d.trim().parse().ok()?;
        if denom.is_zero() {
            return None;
        }
        return Some(Rational::new(numer, denom));
    }
    if let Some((int_part, frac_part)) = text.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = int_part.trim_start().starts_with('-');
        let int: BigInt = if int_part == "-" { BigInt::zero() } else { int_part.parse().ok()? };
        let scale = BigInt::from(10).pow(frac_part.len() as u32);
        let frac: BigInt = frac_part.parse().ok()?;
        let magnitude = int.magnitude() * scale.magnitude() + frac.magnitude();
        let signed = if negative { -BigInt::from(magnitude) } else { BigInt::from(magnitude) };
        return Some(Rational::new(signed, scale));
    }
    let n: BigInt = text.parse().ok()?;
    Some(Rational::from_integer(n))
}

/// The linearly ordered carrier kinds usable on their own or as product
/// components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseKind {
    /// `⟨{false, true}, ∨, ∧, false, true⟩` — crisp constraints.
    Classical,
    /// `⟨[0, 1], max, min, 0, 1⟩` — membership degrees, larger is better.
    Fuzzy,
    /// `⟨ℚ≥0 ∪ {∞}, min, +, ∞, 0⟩` — costs, smaller is better.
    Weighted,
    /// `⟨ℚ≥0 ∪ {∞}, max, min, 0, ∞⟩` — rewards in their natural order,
    /// larger is better. This carrier hosts games whose payoffs are plain
    /// numbers to be maximised, which neither the fuzzy carrier (bounded by
    /// 1) nor the weighted carrier (inverted order) can represent.
    Payoff,
}

impl BaseKind {
    pub fn name(self) -> &'static str {
        match self {
            BaseKind::Classical => "classical",
            BaseKind::Fuzzy => "fuzzy",
            BaseKind::Weighted => "weighted",
            BaseKind::Payoff => "payoff",
        }
    }

    pub fn parse(text: &str) -> Option<BaseKind> {
        match text {
            "classical" => Some(BaseKind::Classical),
            "fuzzy" => Some(BaseKind::Fuzzy),
            "weighted" => Some(BaseKind::Weighted),
            "payoff" => Some(BaseKind::Payoff),
            _ => None,
        }
    }

    fn zero(self) -> PrefValue {
        match self {
            BaseKind::Classical => PrefValue::Bool(false),
            BaseKind::Fuzzy => PrefValue::Fuzzy(Rational::zero()),
            BaseKind::Weighted => PrefValue::Cost(Extended::Infinity),
            BaseKind::Payoff => PrefValue::cost(0),
        }
    }

    fn one(self) -> PrefValue {
        match self {
            BaseKind::Classical => PrefValue::Bool(true),
            BaseKind::Fuzzy => PrefValue::Fuzzy(Rational::one()),
            BaseKind::Weighted => PrefValue::cost(0),
            BaseKind::Payoff => PrefValue::Cost(Extended::Infinity),
        }
    }

    fn contains(self, value: &PrefValue) -> bool {
        match (self, value) {
            (BaseKind::Classical, PrefValue::Bool(_)) => true,
            (BaseKind::Fuzzy, PrefValue::Fuzzy(q)) => {
                !q.is_negative() && *q <= Rational::one()
            }
            (BaseKind::Weighted | BaseKind::Payoff, PrefValue::Cost(c)) => match c {
                Extended::Finite(r) => !r.is_negative(),
                Extended::Infinity => true,
            },
            _ => false,
        }
    }

    fn plus(self, a: &PrefValue, b: &PrefValue) -> Result<PrefValue, SemiringError> {
        match (self, a, b) {
            (BaseKind::Classical, PrefValue::Bool(x), PrefValue::Bool(y)) => {
                Ok(PrefValue::Bool(*x || *y))
            }
            (BaseKind::Fuzzy, PrefValue::Fuzzy(x), PrefValue::Fuzzy(y)) => {
                Ok(PrefValue::Fuzzy(x.max(y).clone()))
            }
            (BaseKind::Weighted, PrefValue::Cost(x), PrefValue::Cost(y)) => {
                Ok(PrefValue::Cost(match x.natural_cmp(y) {
                    std::cmp::Ordering::Greater => y.clone(),
                    _ => x.clone(),
                }))
            }
            (BaseKind::Payoff, PrefValue::Cost(x), PrefValue::Cost(y)) => {
                Ok(PrefValue::Cost(match x.natural_cmp(y) {
                    std::cmp::Ordering::Less => y.clone(),
                    _ => x.clone(),
                }))
            }
            _ => Err(mismatch(self.name(), if self.contains(a) { b } else { a })),
        }
    }

    fn times(self, a: &PrefValue, b: &PrefValue) -> Result<PrefValue, SemiringError> {
        match (self, a, b) {
            (BaseKind::Classical, PrefValue::Bool(x), PrefValue::Bool(y)) => {
                Ok(PrefValue::Bool(*x && *y))
            }
            (BaseKind::Fuzzy, PrefValue::Fuzzy(x), PrefValue::Fuzzy(y)) => {
                Ok(PrefValue::Fuzzy(x.min(y).clone()))
            }
            (BaseKind::Weighted, PrefValue::Cost(x), PrefValue::Cost(y)) => {
                Ok(PrefValue::Cost(x.add(y)))
            }
            (BaseKind::Payoff, PrefValue::Cost(x), PrefValue::Cost(y)) => {
                Ok(PrefValue::Cost(match x.natural_cmp(y) {
                    std::cmp::Ordering::Greater => y.clone(),
                    _ => x.clone(),
                }))
            }
            _ => Err(mismatch(self.name(), if self.contains(a) { b } else { a })),
        }
    }

    fn canonical_sample(self) -> Vec<PrefValue> {
        match self {
            BaseKind::Classical => vec![PrefValue::Bool(false), PrefValue::Bool(true)],
            BaseKind::Fuzzy => vec![
                PrefValue::fuzzy(0, 1),
                PrefValue::fuzzy(1, 4),
                PrefValue::fuzzy(1, 2),
                PrefValue::fuzzy(3, 4),
                PrefValue::fuzzy(1, 1),
            ],
            BaseKind::Weighted | BaseKind::Payoff => vec![
                PrefValue::cost(0),
                PrefValue::cost(1),
                PrefValue::cost(2),
                PrefValue::cost(5),
                PrefValue::infinity(),
            ],
        }
    }
}

fn mismatch(kind: impl fmt::Display, value: &PrefValue) -> SemiringError {
    SemiringError::KindMismatch { kind: kind.to_string(), value: value.to_string() }
}

/// Errors raised by semiring operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SemiringError {
    #[error("KindMismatch: value {value} does not belong to the {kind} carrier")]
    KindMismatch { kind: String, value: String },
    #[error("NotLinearlyOrdered: the operation requires a linearly ordered carrier")]
    NotLinearlyOrdered,
}

/// A c-semiring descriptor. The carrier, operations, units, and induced order
/// are all determined by the kind.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Semiring {
    Classical,
    Fuzzy,
    Weighted,
    Payoff,
    /// Flat Cartesian product of linearly ordered base kinds; operations act
    /// componentwise and the induced order is the componentwise (Pareto)
    /// partial order.
    Product(Vec<BaseKind>),
}

impl Semiring {
    pub fn from_base(kind: BaseKind) -> Semiring {
        match kind {
            BaseKind::Classical => Semiring::Classical,
            BaseKind::Fuzzy => Semiring::Fuzzy,
            BaseKind::Weighted => Semiring::Weighted,
            BaseKind::Payoff => Semiring::Payoff,
        }
    }

    pub fn base_kind(&self) -> Option<BaseKind> {
        match self {
            Semiring::Classical => Some(BaseKind::Classical),
            Semiring::Fuzzy => Some(BaseKind::Fuzzy),
            Semiring::Weighted => Some(BaseKind::Weighted),
            Semiring::Payoff => Some(BaseKind::Payoff),
            Semiring::Product(_) => None,
        }
    }

    /// Parses a carrier name: one of the base kinds, or `product:<kind>,<kind>,...`.
    ///
    /// This is the inverse of [`Semiring::describe`] up to punctuation
    /// (`describe` renders products as `product(a,b)`, this accepts `product:a,b`).
    pub fn parse_kind(text: &str) -> Option<Semiring> {
        if let Some(kind) = BaseKind::parse(text) {
            return Some(Semiring::from_base(kind));
        }
        let rest = text.strip_prefix("product:")?;
        let kinds: Option<Vec<BaseKind>> = rest.split(',').map(BaseKind::parse).collect();
        match kinds {
            Some(ks) if !ks.is_empty() => Some(Semiring::Product(ks)),
            _ => None,
        }
    }

    /// The additive unit — the least element of the induced order.
    pub fn zero(&self) -> PrefValue {
        match self {
            Semiring::Product(ks) => PrefValue::Tuple(ks.iter().map(|k| k.zero()).collect()),
            _ => self.base_kind().unwrap().zero(),
        }
    }

    /// The multiplicative unit — the greatest element of the induced order.
    pub fn one(&self) -> PrefValue {
        match self {
            Semiring::Product(ks) => PrefValue::Tuple(ks.iter().map(|k| k.one()).collect()),
            _ => self.base_kind().unwrap().one(),
        }
    }

    /// Whether the value belongs to this semiring's carrier.
    pub fn contains(&self, value: &PrefValue) -> bool {
        match self {
            Semiring::Product(ks) => match value {
                PrefValue::Tuple(vs) => {
                    vs.len() == ks.len() && ks.iter().zip(vs).all(|(k, v)| k.contains(v))
                }
                _ => false,
            },
            _ => self.base_kind().unwrap().contains(value),
        }
    }

    pub fn is_linearly_ordered(&self) -> bool {
        match self {
            Semiring::Product(ks) => ks.len() <= 1,
            _ => true,
        }
    }

    /// Additive combination; selects the better of the two values.
    pub fn plus(&self, a: &PrefValue, b: &PrefValue) -> Result<PrefValue, SemiringError> {
        match self {
            Semiring::Product(ks) => {
                let (xs, ys) = self.tuple_pair(a, b)?;
                let mut out = Vec::with_capacity(ks.len());
                for ((k, x), y) in ks.iter().zip(xs).zip(ys) {
                    out.push(k.plus(x, y)?);
                }
                Ok(PrefValue::Tuple(out))
            }
            _ => self.base_kind().unwrap().plus(a, b),
        }
    }

    /// Multiplicative combination of two preferences.
    pub fn times(&self, a: &PrefValue, b: &PrefValue) -> Result<PrefValue, SemiringError> {
        match self {
            Semiring::Product(ks) => {
                let (xs, ys) = self.tuple_pair(a, b)?;
                let mut out = Vec::with_capacity(ks.len());
                for ((k, x), y) in ks.iter().zip(xs).zip(ys) {
                    out.push(k.times(x, y)?);
                }
                Ok(PrefValue::Tuple(out))
            }
            _ => self.base_kind().unwrap().times(a, b),
        }
    }

    fn tuple_pair<'v>(
        &self,
        a: &'v PrefValue,
        b: &'v PrefValue,
    ) -> Result<(&'v [PrefValue], &'v [PrefValue]), SemiringError> {
        if !self.contains(a) {
            return Err(mismatch(self.describe(), a));
        }
        if !self.contains(b) {
            return Err(mismatch(self.describe(), b));
        }
        match (a, b) {
            (PrefValue::Tuple(xs), PrefValue::Tuple(ys)) => Ok((xs, ys)),
            _ => unreachable!("contains() admits only tuples into a product"),
        }
    }

    /// The induced order: `a ≤ b` exactly when `a + b = b`.
    pub fn leq(&self, a: &PrefValue, b: &PrefValue) -> Result<bool, SemiringError> {
        Ok(self.plus(a, b)? == *b)
    }

    /// Strict induced order: `a ≤ b` and `a ≠ b`.
    pub fn lt(&self, a: &PrefValue, b: &PrefValue) -> Result<bool, SemiringError> {
        Ok(a != b && self.leq(a, b)?)
    }

    pub fn describe(&self) -> String {
        match self {
            Semiring::Product(ks) => {
                let names: Vec<&str> = ks.iter().map(|k| k.name()).collect();
                format!("product({})", names.join(","))
            }
            _ => self.base_kind().unwrap().name().to_string(),
        }
    }

    /// A small built-in sample of carrier values, used as the default input
    /// for axiom and monotonicity checks.
    pub fn canonical_sample(&self) -> Vec<PrefValue> {
        match self {
            Semiring::Product(ks) => {
                let comps: Vec<Vec<PrefValue>> = ks.iter().map(|k| k.canonical_sample()).collect();
                let full: usize = comps.iter().map(Vec::len).product();
                if full <= 32 {
                    let mut out = vec![Vec::new()];
                    for comp in &comps {
                        let mut next = Vec::with_capacity(out.len() * comp.len());
                        for prefix in &out {
                            for v in comp {
                                let mut t = prefix.clone();
                                t.push(v.clone());
                                next.push(t);
                            }
                        }
                        out = next;
                    }
                    out.into_iter().map(PrefValue::Tuple).collect()
                } else {
                    // Wide products get a compact sample: both units, a tuple
                    // of middling values, and one mixed tuple per coordinate.
                    let mid: Vec<PrefValue> =
                        comps.iter().map(|c| c[c.len() / 2].clone()).collect();
                    let mut out = vec![self.zero(), PrefValue::Tuple(mid.clone()), self.one()];
                    for (i, _) in ks.iter().enumerate() {
                        let mut t = match self.one() {
                            PrefValue::Tuple(vs) => vs,
                            _ => unreachable!(),
                        };
                        t[i] = mid[i].clone();
                        out.push(PrefValue::Tuple(t));
                    }
                    out
                }
            }
            _ => self.base_kind().unwrap().canonical_sample(),
        }
    }

    /// Parses the textual form of a carrier value: `true`/`false`, an exact
    /// decimal or `n/d` rational, `inf`, or `[v1, v2, ...]` for products.
    pub fn parse_value(&self, text: &str) -> Result<PrefValue, SemiringError> {
        let text = text.trim();
        let parsed = match self {
            Semiring::Classical => match text {
                "true" => Some(PrefValue::Bool(true)),
                "false" => Some(PrefValue::Bool(false)),
                _ => None,
            },
            Semiring::Fuzzy => parse_rational(text).map(PrefValue::Fuzzy),
            Semiring::Weighted | Semiring::Payoff => {
                if text == "inf" {
                    Some(PrefValue::infinity())
                } else {
                    parse_rational(text).map(|r| PrefValue::Cost(Extended::Finite(r)))
                }
            }
            Semiring::Product(ks) => {
                let inner = text.strip_prefix('[').and_then(|t| t.strip_suffix(']'));
                match inner {
                    Some(inner) => {
                        let parts: Vec<&str> = if inner.trim().is_empty() {
                            Vec::new()
                        } else {
                            inner.split(',').collect()
                        };
                        if parts.len() != ks.len() {
                            None
                        } else {
                            let mut vs = Vec::with_capacity(ks.len());
                            let mut ok = true;
                            for (k, part) in ks.iter().zip(parts) {
                                match Semiring::from_base(*k).parse_value(part) {
                                    Ok(v) => vs.push(v),
                                    Err(_) => {
                                        ok = false;
                                        break;
                                    }
                                }
                            }
                            if ok {
                                Some(PrefValue::Tuple(vs))
                            } else {
                                None
                            }
                        }
                    }
                    None => None,
                }
            }
        };
        match parsed {
            Some(v) if self.contains(&v) => Ok(v),
            _ => Err(SemiringError::KindMismatch {
                kind: self.describe(),
                value: text.to_string(),
            }),
        }
    }

    /// Checks every c-semiring axiom by direct evaluation on the sample and
    /// reports one witness per violated axiom. Sample values must belong to
    /// the carrier.
    pub fn check_axioms(&self, sample: &[PrefValue]) -> Result<Vec<AxiomViolation>, SemiringError> {
        for v in sample {
            if !self.contains(v) {
                return Err(mismatch(self.describe(), v));
            }
        }
        let plus = |a: &PrefValue, b: &PrefValue| self.plus(a, b).expect("sample is in-carrier");
        let times = |a: &PrefValue, b: &PrefValue| self.times(a, b).expect("sample is in-carrier");
        Ok(check_axioms_with(sample, &self.zero(), &self.one(), plus, times))
    }

    /// Decides whether `×` is strictly monotonic: for all carrier values with
    /// `a < b`, also `c × a < c × b`.
    ///
    /// The verdict is analytic per kind — only the weighted carrier qualifies,
    /// and only on its finite fragment, so the weighted scan does not use
    /// `Infinity` as the scaling element `c` (multiplying by it collapses any
    /// strict pair, as multiplying by the additive unit does in every
    /// c-semiring). The triple scan over the sample supplies a concrete
    /// counterexample for the non-monotonic kinds and guards the weighted
    /// claim as a regression check.
    pub fn is_strictly_monotonic(
        &self,
        sample: &[PrefValue],
    ) -> Result<Monotonicity, SemiringError> {
        if !self.is_linearly_ordered() {
            return Err(SemiringError::NotLinearlyOrdered);
        }
        for v in sample {
            if !self.contains(v) {
                return Err(mismatch(self.describe(), v));
            }
        }
        let skip_scaler = |c: &PrefValue| {
            *self == Semiring::Weighted && matches!(c, PrefValue::Cost(Extended::Infinity))
        };
        let mut counterexample = None;
        'scan: for a in sample {
            for b in sample {
                if !self.lt(a, b)? {
                    continue;
                }
                for c in sample {
                    if skip_scaler(c) {
                        continue;
                    }
                    let ca = self.times(c, a)?;
                    let cb = self.times(c, b)?;
                    if !self.lt(&ca, &cb)? {
                        counterexample = Some([a.clone(), b.clone(), c.clone()]);
                        break 'scan;
                    }
                }
            }
        }
        let holds = *self == Semiring::Weighted && counterexample.is_none();
        Ok(Monotonicity { strictly_monotonic: holds, counterexample })
    }
}

/// Outcome of a strict-monotonicity check. The counterexample, when present,
/// is a triple `[a, b, c]` with `a < b` but not `c × a < c × b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monotonicity {
    pub strictly_monotonic: bool,
    pub counterexample: Option<[PrefValue; 3]>,
}

/// The c-semiring axioms, named individually for violation reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    PlusCommutative,
    PlusAssociative,
    PlusIdempotent,
    PlusUnit,
    PlusAbsorbing,
    TimesCommutative,
    TimesAssociative,
    TimesUnit,
    TimesAbsorbing,
    Distributive,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::PlusCommutative => "plus-commutative",
            Axiom::PlusAssociative => "plus-associative",
            Axiom::PlusIdempotent => "plus-idempotent",
            Axiom::PlusUnit => "plus-unit",
            Axiom::PlusAbsorbing => "plus-absorbing",
            Axiom::TimesCommutative => "times-commutative",
            Axiom::TimesAssociative => "times-associative",
            Axiom::TimesUnit => "times-unit",
            Axiom::TimesAbsorbing => "times-absorbing",
            Axiom::Distributive => "distributive",
        }
    }
}

/// A violated axiom together with the sample values witnessing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub witness: Vec<PrefValue>,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.witness.iter().map(|v| v.to_string()).collect();
        write!(f, "{} violated at ({})", self.axiom.name(), parts.join(", "))
    }
}

/// Evaluates every c-semiring axiom on the sample for arbitrary `plus` and
/// `times` tables, recording the first witness of each violated axiom. This
/// is the engine behind [`Semiring::check_axioms`] and also accepts
/// deliberately broken operation tables, which is how the checker itself is
/// tested.
pub fn check_axioms_with(
    sample: &[PrefValue],
    zero: &PrefValue,
    one: &PrefValue,
    plus: impl Fn(&PrefValue, &PrefValue) -> PrefValue,
    times: impl Fn(&PrefValue, &PrefValue) -> PrefValue,
) -> Vec<AxiomViolation> {
    let mut violations = Vec::new();
    let mut record = |axiom: Axiom, witness: &[&PrefValue]| {
        violations.push(AxiomViolation {
            axiom,
            witness: witness.iter().map(|v| (*v).clone()).collect(),
        });
    };

    'plus_comm: for a in sample {
        for b in sample {
            if plus(a, b) != plus(b, a) {
                record(Axiom::PlusCommutative, &[a, b]);
                break 'plus_comm;
            }
        }
    }
    'plus_assoc: for a in sample {
        for b in sample {
            for c in sample {
                if plus(&plus(a, b), c) != plus(a, &plus(b, c)) {
                    record(Axiom::PlusAssociative, &[a, b, c]);
                    break 'plus_assoc;
                }
            }
        }
    }
    for a in sample {
        if plus(a, a) != *a {
            record(Axiom::PlusIdempotent, &[a]);
            break;
        }
    }
    for a in sample {
        if plus(a, zero) != *a {
            record(Axiom::PlusUnit, &[a]);
            break;
        }
    }
    for a in sample {
        if plus(a, one) != *one {
            record(Axiom::PlusAbsorbing, &[a]);
            break;
        }
    }
    'times_comm: for a in sample {
        for b in sample {
            if times(a, b) != times(b, a) {
                record(Axiom::TimesCommutative, &[a, b]);
                break 'times_comm;
            }
        }
    }
    'times_assoc: for a in sample {
        for b in sample {
            for c in sample {
                if times(&times(a, b), c) != times(a, &times(b, c)) {
                    record(Axiom::TimesAssociative, &[a, b, c]);
                    break 'times_assoc;
                }
            }
        }
    }
    for a in sample {
        if times(a, one) != *a {
            record(Axiom::TimesUnit, &[a]);
            break;
        }
    }
    for a in sample {
        if times(a, zero) != *zero {
            record(Axiom::TimesAbsorbing, &[a]);
            break;
        }
    }
    'distrib: for a in sample {
        for b in sample {
            for c in sample {
                if times(a, &plus(b, c)) != plus(&times(a, b), &times(a, c)) {
                    record(Axiom::Distributive, &[a, b, c]);
                    break 'distrib;
                }
            }
        }
    }
    violations
}
