//! Registry of closed-form determinant identities and an exact randomized
//! verifier.
//!
//! Every record pairs a matrix builder with the product (or sum) it is claimed
//! to equal. Parameters are drawn from small exact domains; any sample that
//! hits a pole or leaves the domain is silently redrawn.

mod binomial;
mod hankel_ids;
mod plane;
mod special;
mod standard;
mod wronski;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;
use std::time::Instant;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::exactnum::{int, parse_rational, rat};
use crate::linalg::{det, Strategy};
use crate::{Error, MatrixQ, Rational, Result};

pub use special::{
    chebyshev_u_half_sqrt, condensation_recurrence_check, goulden_jackson_sides, group_det_closed, group_matrix,
    identification_workflow_mrr, izergin_korepin_sides, lu_vandermonde_check, macmahon_matrix, macmahon_product,
    maj_spectrum, meander_sides, mrr_kernel_vector, ode_method_check, okada_matrix, okada_sides, strehl_wilf_sides,
    turnbull_sides, vandermonde_lu, verify_goulden_jackson, verify_group_determinant, verify_izergin_korepin,
    verify_nc_suite, verify_okada, verify_strehl_wilf, verify_turnbull, verify_workflow, GroupKind, WORKFLOWS,
};

/// A bound parameter value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParamValue {
    Scalar(Rational),
    List(Vec<Rational>),
    Table(Vec<Vec<Rational>>),
}

impl ParamValue {
    fn to_json(&self) -> Value {
        match self {
            ParamValue::Scalar(r) => Value::String(r.to_string()),
            ParamValue::List(v) => Value::Array(v.iter().map(|r| Value::String(r.to_string())).collect()),
            ParamValue::Table(t) => Value::Array(
                t.iter().map(|row| Value::Array(row.iter().map(|r| Value::String(r.to_string())).collect())).collect(),
            ),
        }
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Rational]| v.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(",");
        match self {
            ParamValue::Scalar(r) => write!(f, "{r}"),
            ParamValue::List(v) => write!(f, "{}", join(v)),
            ParamValue::Table(t) => write!(f, "{}", t.iter().map(|r| join(r)).collect::<Vec<_>>().join(";")),
        }
    }
}

/// Matrix order plus named parameter bindings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    pub n: usize,
    values: BTreeMap<String, ParamValue>,
}

impl Params {
    pub fn new(n: usize) -> Self {
        Params { n, values: BTreeMap::new() }
    }

    pub fn with(mut self, name: &str, v: impl Into<ParamValue>) -> Self {
        self.values.insert(name.to_string(), v.into());
        self
    }

    pub fn set(&mut self, name: &str, v: impl Into<ParamValue>) {
        self.values.insert(name.to_string(), v.into());
    }

    pub fn get(&self, name: &str) -> Option<&ParamValue> {
        self.values.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.values.keys().map(|s| s.as_str())
    }

    fn missing(name: &str) -> Error {
        Error::Domain(format!("missing or mistyped parameter `{name}`"))
    }

    pub fn r(&self, name: &str) -> Result<&Rational> {
        match self.values.get(name) {
            Some(ParamValue::Scalar(r)) => Ok(r),
            _ => Err(Self::missing(name)),
        }
    }

    /// Integer-valued parameter.
    pub fn i(&self, name: &str) -> Result<i64> {
        let r = self.r(name)?;
        if !r.is_integer() {
            return Err(Error::Domain(format!("parameter `{name}` = {r} must be an integer")));
        }
        i64::try_from(r.to_integer()).map_err(|_| Error::Domain(format!("parameter `{name}` too large")))
    }

    /// List parameter, which must hold at least `len` entries.
    pub fn list(&self, name: &str, len: usize) -> Result<&[Rational]> {
        match self.values.get(name) {
            Some(ParamValue::List(v)) if v.len() >= len => Ok(v),
            Some(ParamValue::List(v)) => {
                Err(Error::Domain(format!("parameter `{name}` needs {len} entries, got {}", v.len())))
            }
            _ => Err(Self::missing(name)),
        }
    }

    /// Composition of `n` stored as a list of positive integers.
    pub fn composition(&self, name: &str) -> Result<Vec<usize>> {
        let v = self.list(name, 0)?;
        let parts = v
            .iter()
            .map(|r| {
                usize::try_from(r.to_integer())
                    .ok()
                    .filter(|&k| k > 0 && r.is_integer())
                    .ok_or_else(|| Error::Domain(format!("`{name}` must hold positive integers")))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.iter().sum::<usize>() != self.n {
            return Err(Error::Domain(format!("`{name}` must sum to n = {}", self.n)));
        }
        Ok(parts)
    }

    pub fn table(&self, name: &str) -> Result<&[Vec<Rational>]> {
        match self.values.get(name) {
            Some(ParamValue::Table(t)) => Ok(t),
            _ => Err(Self::missing(name)),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut m = serde_json::Map::new();
        m.insert("n".into(), json!(self.n));
        for (k, v) in &self.values {
            m.insert(k.clone(), v.to_json());
        }
        Value::Object(m)
    }

    /// Parse `name=value` where the value is a rational, a comma separated
    /// list, or a table with rows separated by `;`.
    pub fn parse_assignment(&mut self, s: &str) -> Result<()> {
        let (name, value) =
            s.split_once('=').ok_or_else(|| Error::Parse(format!("expected name=value, got `{s}`")))?;
        let name = name.trim();
        let v = if value.contains(';') {
            let rows = value
                .split(';')
                .filter(|r| !r.trim().is_empty())
                .map(crate::exactnum::parse_rational_list)
                .collect::<Result<Vec<_>>>()?;
            ParamValue::Table(rows)
        } else if value.contains(',') {
            ParamValue::List(crate::exactnum::parse_rational_list(value)?)
        } else {
            ParamValue::Scalar(parse_rational(value)?)
        };
        if name == "n" {
            let ParamValue::Scalar(r) = &v else {
                return Err(Error::Parse("n must be a nonnegative integer".into()));
            };
            self.n = usize::try_from(r.to_integer())
                .ok()
                .filter(|_| r.is_integer())
                .ok_or_else(|| Error::Parse(format!("n = {r} is not a nonnegative integer")))?;
        } else {
            self.values.insert(name.to_string(), v);
        }
        Ok(())
    }
}

impl From<Rational> for ParamValue {
    fn from(r: Rational) -> Self {
        ParamValue::Scalar(r)
    }
}

impl From<i64> for ParamValue {
    fn from(r: i64) -> Self {
        ParamValue::Scalar(int(r))
    }
}

impl From<Vec<Rational>> for ParamValue {
    fn from(v: Vec<Rational>) -> Self {
        ParamValue::List(v)
    }
}

impl From<Vec<Vec<Rational>>> for ParamValue {
    fn from(v: Vec<Vec<Rational>>) -> Self {
        ParamValue::Table(v)
    }
}

/// Sampling domain of a single scalar.
#[derive(Clone, Copy, Debug)]
pub enum Elem {
    /// Integer in the closed range.
    Int(i64, i64),
    /// Small rational `p/q`, `|p| <= 12`, `1 <= q <= 6`.
    Rat,
    /// Square of a nonzero small rational.
    Square,
    /// Rational strictly between 0 and 1 with denominator at most 9.
    Q,
    /// Square of a [`Elem::Q`] value.
    QSquare,
}

impl Elem {
    fn sample(self, rng: &mut ChaCha8Rng) -> Rational {
        match self {
            Elem::Int(lo, hi) => int(rng.gen_range(lo..=hi)),
            Elem::Rat => rat(rng.gen_range(-12..=12), rng.gen_range(1..=6)),
            Elem::Square => {
                let mut p = 0;
                while p == 0 {
                    p = rng.gen_range(-7..=7);
                }
                let r = rat(p, rng.gen_range(1..=5));
                &r * &r
            }
            Elem::Q => {
                let den = rng.gen_range(2..=9);
                rat(rng.gen_range(1..den), den)
            }
            Elem::QSquare => {
                let q = Elem::Q.sample(rng);
                &q * &q
            }
        }
    }
}

/// Sampling domain of a named parameter; list lengths are `n + extra`.
#[derive(Clone, Copy, Debug)]
pub enum Domain {
    Scalar(Elem),
    List(Elem, usize),
    /// Square table of side `n + extra`.
    Table(Elem, usize),
    /// Strictly decreasing nonnegative integers `<= 12`, length `n`.
    Decreasing,
    /// Integer in `lo..=n + hi_offset`.
    IntUpToN(i64, i64),
    /// Composition `m_1 + ... + m_l = n` into positive parts.
    Composition,
    /// List of length `2n + 2`, for sequences indexed by `0..=2n+1`.
    Doubled(Elem),
}

impl Domain {
    fn sample(self, rng: &mut ChaCha8Rng, n: usize) -> ParamValue {
        match self {
            Domain::Scalar(e) => ParamValue::Scalar(e.sample(rng)),
            Domain::List(e, extra) => ParamValue::List((0..n + extra).map(|_| e.sample(rng)).collect()),
            Domain::Table(e, extra) => ParamValue::Table(
                (0..n + extra).map(|_| (0..n + extra).map(|_| e.sample(rng)).collect()).collect(),
            ),
            Domain::Decreasing => {
                let mut pool: Vec<i64> = (0..=12).collect();
                let mut picked = Vec::with_capacity(n);
                for _ in 0..n.min(13) {
                    let k = rng.gen_range(0..pool.len());
                    picked.push(pool.swap_remove(k));
                }
                picked.sort_unstable_by(|a, b| b.cmp(a));
                ParamValue::List(picked.into_iter().map(int).collect())
            }
            Domain::IntUpToN(lo, off) => ParamValue::Scalar(int(rng.gen_range(lo..=(n as i64 + off).max(lo)))),
            Domain::Doubled(e) => ParamValue::List((0..2 * n + 2).map(|_| e.sample(rng)).collect()),
            Domain::Composition => {
                let mut parts = Vec::new();
                let mut run = 0;
                for k in 0..n {
                    run += 1;
                    if k + 1 == n || rng.gen_bool(0.5) {
                        parts.push(int(run));
                        run = 0;
                    }
                }
                ParamValue::List(parts)
            }
        }
    }
}

/// Proof status of the identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Theorem,
    Conjecture,
}

/// Result of one custom check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

impl Outcome {
    pub fn compare(lhs: &Rational, rhs: &Rational) -> Self {
        Outcome { lhs: lhs.to_string(), rhs: rhs.to_string(), pass: lhs == rhs }
    }
}

pub type Builder = fn(&Params) -> Result<MatrixQ>;
pub type Closed = fn(&Params) -> Result<Rational>;
pub type CustomCheck = fn(&Params, &mut ChaCha8Rng) -> Result<Outcome>;

pub enum Check {
    /// `det(build) = rhs`; with `abs` only absolute values are compared.
    Det { build: Builder, rhs: Closed, abs: bool },
    Custom(CustomCheck),
}

pub struct IdentityRecord {
    pub id: &'static str,
    pub summary: &'static str,
    pub params: Vec<(&'static str, Domain)>,
    pub min_n: usize,
    pub max_n: usize,
    pub status: Status,
    pub tags: &'static [&'static str],
    pub check: Check,
}

impl IdentityRecord {
    fn det_rec(id: &'static str, summary: &'static str, build: Builder, rhs: Closed) -> Self {
        IdentityRecord {
            id,
            summary,
            params: Vec::new(),
            min_n: 1,
            max_n: 5,
            status: Status::Theorem,
            tags: &[],
            check: Check::Det { build, rhs, abs: false },
        }
    }

    fn custom(id: &'static str, summary: &'static str, f: CustomCheck) -> Self {
        IdentityRecord {
            id,
            summary,
            params: Vec::new(),
            min_n: 1,
            max_n: 4,
            status: Status::Theorem,
            tags: &["special"],
            check: Check::Custom(f),
        }
    }

    fn param(mut self, name: &'static str, d: Domain) -> Self {
        self.params.push((name, d));
        self
    }

    fn sizes(mut self, min_n: usize, max_n: usize) -> Self {
        self.min_n = min_n;
        self.max_n = max_n;
        self
    }

    fn tags(mut self, tags: &'static [&'static str]) -> Self {
        self.tags = tags;
        self
    }

    fn abs_only(mut self) -> Self {
        if let Check::Det { abs, .. } = &mut self.check {
            *abs = true;
        }
        self
    }

    fn conjecture(mut self) -> Self {
        self.status = Status::Conjecture;
        self
    }

    pub fn is_det(&self) -> bool {
        matches!(self.check, Check::Det { .. })
    }

    /// Draw a full parameter set for order `n`.
    pub fn sample(&self, rng: &mut ChaCha8Rng, n: usize) -> Params {
        let mut p = Params::new(n);
        for (name, d) in &self.params {
            p.set(name, d.sample(rng, n));
        }
        p
    }

    pub fn build(&self, p: &Params) -> Result<MatrixQ> {
        match &self.check {
            Check::Det { build, .. } => {
                let m = build(p)?;
                m.require_square()?;
                Ok(m)
            }
            Check::Custom(_) => Err(Error::Domain(format!("`{}` is a structural check without a matrix", self.id))),
        }
    }

    /// Determinant of the built matrix.
    pub fn lhs(&self, p: &Params) -> Result<Rational> {
        det(&self.build(p)?, Strategy::Bareiss)
    }

    pub fn closed_form(&self, p: &Params) -> Result<Rational> {
        match &self.check {
            Check::Det { rhs, .. } => rhs(p),
            Check::Custom(_) => Err(Error::Domain(format!("`{}` has no single closed form", self.id))),
        }
    }

    /// Run one check at fixed parameters with the given strategy.
    pub fn check_at(&self, p: &Params, strategy: Strategy, rng: &mut ChaCha8Rng) -> Result<Outcome> {
        self.run(p, strategy, rng).map(|(o, _)| o)
    }

    /// Like `check_at`, also naming the strategy actually used. Laplace
    /// expansion falls back to Bareiss above order 6.
    fn run(&self, p: &Params, strategy: Strategy, rng: &mut ChaCha8Rng) -> Result<(Outcome, &'static str)> {
        match &self.check {
            Check::Det { build, rhs, abs } => {
                let r = rhs(p)?;
                let m = build(p)?;
                let size = m.require_square()?;
                let strategy = if strategy == Strategy::Laplace && size > 6 { Strategy::Bareiss } else { strategy };
                let l = det(&m, strategy)?;
                let pass = if *abs { l.abs() == r.abs() } else { l == r };
                Ok((Outcome { lhs: l.to_string(), rhs: r.to_string(), pass }, strategy.name()))
            }
            Check::Custom(f) => Ok((f(p, rng)?, "structural")),
        }
    }
}

pub fn registry() -> &'static [IdentityRecord] {
    static REG: OnceLock<Vec<IdentityRecord>> = OnceLock::new();
    REG.get_or_init(|| {
        let mut v = standard::records();
        v.extend(wronski::records());
        v.extend(plane::records());
        v.extend(binomial::records());
        v.extend(hankel_ids::records());
        v.extend(special::records());
        v
    })
}

pub fn lookup(id: &str) -> Result<&'static IdentityRecord> {
    registry().iter().find(|r| r.id == id).ok_or_else(|| Error::UnknownId(id.to_string()))
}

pub fn build_matrix(id: &str, p: &Params) -> Result<MatrixQ> {
    lookup(id)?.build(p)
}

pub fn closed_form(id: &str, p: &Params) -> Result<Rational> {
    lookup(id)?.closed_form(p)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trial {
    pub params: Value,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
    pub strategy: String,
    pub micros: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub id: String,
    pub status: Status,
    pub trials: Vec<Trial>,
}

impl VerifyReport {
    pub fn overall(&self) -> bool {
        !self.trials.is_empty() && self.trials.iter().all(|t| t.pass)
    }

    pub fn to_json(&self) -> Value {
        let trials: Vec<Value> = self
            .trials
            .iter()
            .map(|t| {
                json!({
                    "params": t.params,
                    "lhs": t.lhs,
                    "rhs": t.rhs,
                    "pass": t.pass,
                    "strategy": t.strategy,
                    "micros": t.micros,
                })
            })
            .collect();
        json!({
            "id": self.id,
            "status": match self.status { Status::Theorem => "theorem", Status::Conjecture => "conjecture" },
            "trials": trials,
            "overall": if self.overall() { "pass" } else { "fail" },
        })
    }

    /// One-line summary such as `macmahon: pass (5/5)`.
    pub fn summary(&self) -> String {
        let ok = self.trials.iter().filter(|t| t.pass).count();
        let verdict = match (self.overall(), self.status) {
            (true, Status::Conjecture) => "conjecture-consistent",
            (true, Status::Theorem) => "pass",
            (false, _) => "FAIL",
        };
        format!("{}: {verdict} ({ok}/{})", self.id, self.trials.len())
    }
}

fn trial_from(params: Value, outcome: Result<Outcome>, strategy: &str, micros: Option<u64>) -> Trial {
    match outcome {
        Ok(o) => Trial { params, lhs: o.lhs, rhs: o.rhs, pass: o.pass, strategy: strategy.to_string(), micros },
        Err(e) => Trial {
            params,
            lhs: format!("error: {e}"),
            rhs: String::new(),
            pass: false,
            strategy: strategy.to_string(),
            micros,
        },
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub trials: usize,
    pub seed: u64,
    /// Cap on the matrix order; records never go below their `min_n`.
    pub max_n: Option<usize>,
    /// Record wall-clock time per trial. Off by default so reports are
    /// reproducible byte for byte.
    pub timing: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { trials: 5, seed: 0, max_n: None, timing: false }
    }
}

fn fnv1a(s: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in s.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Generator for trial `index` of identity `id`; depends on nothing else.
pub fn trial_rng(seed: u64, id: &str, index: u64) -> ChaCha8Rng {
    let s = splitmix(splitmix(seed ^ fnv1a(id)).wrapping_add(index));
    ChaCha8Rng::seed_from_u64(s)
}

const STRATEGIES: [Strategy; 4] = [Strategy::Bareiss, Strategy::Gauss, Strategy::Condensation, Strategy::Laplace];
const MAX_RESAMPLES: usize = 200;

/// Sample and check `opts.trials` parameter sets at the record's largest size.
pub fn verify_identity(id: &str, opts: &VerifyOptions) -> Result<VerifyReport> {
    let rec = lookup(id)?;
    Ok(verify_record(rec, opts))
}

/// Registry ids followed by the method demonstrations.
pub fn all_ids() -> Vec<&'static str> {
    registry().iter().map(|r| r.id).chain(WORKFLOWS.iter().map(|w| w.0)).collect()
}

/// Verify a registry identity or a method demonstration by id.
pub fn verify_any(id: &str, opts: &VerifyOptions) -> Result<VerifyReport> {
    match lookup(id) {
        Ok(rec) => Ok(verify_record(rec, opts)),
        Err(_) => verify_workflow(id, opts.trials, opts.seed, opts.max_n),
    }
}

pub fn verify_record(rec: &IdentityRecord, opts: &VerifyOptions) -> VerifyReport {
    let n = opts.max_n.map_or(rec.max_n, |c| c.min(rec.max_n)).max(rec.min_n);
    let trials = (0..opts.trials.max(1))
        .map(|t| {
            let mut rng = trial_rng(opts.seed, rec.id, t as u64);
            let strategy = STRATEGIES[t % STRATEGIES.len()];
            let mut label = if rec.is_det() { strategy.name() } else { "structural" };
            let start = opts.timing.then(Instant::now);
            let mut last = None;
            for _ in 0..MAX_RESAMPLES {
                let p = rec.sample(&mut rng, n);
                match rec.run(&p, strategy, &mut rng) {
                    Err(Error::Domain(_) | Error::DivisionByZero(_) | Error::DuplicatePoint(_)) => continue,
                    Ok((outcome, used)) => {
                        label = used;
                        last = Some((p, Ok(outcome)));
                        break;
                    }
                    Err(e) => {
                        last = Some((p, Err(e)));
                        break;
                    }
                }
            }
            let micros = start.map(|s| s.elapsed().as_micros() as u64);
            match last {
                Some((p, outcome)) => trial_from(p.to_json(), outcome, label, micros),
                None => trial_from(
                    json!({ "n": n }),
                    Err(Error::Domain(format!("no admissible sample in {MAX_RESAMPLES} draws"))),
                    label,
                    micros,
                ),
            }
        })
        .collect();
    VerifyReport { id: rec.id.to_string(), status: rec.status, trials }
}

/// Shared helpers for the record modules.
pub(crate) mod util {
    use super::*;

    /// Build an `n x n` matrix from a 1-based entry function.
    pub fn mat1(n: usize, mut f: impl FnMut(i64, i64) -> Result<Rational>) -> Result<MatrixQ> {
        MatrixQ::try_from_fn(n, n, |i, j| f(i as i64 + 1, j as i64 + 1))
    }

    /// Build an `n x n` matrix from a 0-based entry function.
    pub fn mat0(n: usize, mut f: impl FnMut(i64, i64) -> Result<Rational>) -> Result<MatrixQ> {
        MatrixQ::try_from_fn(n, n, |i, j| f(i as i64, j as i64))
    }

    /// Product over an integer range, 1 when empty.
    pub fn prod(lo: i64, hi: i64, mut f: impl FnMut(i64) -> Result<Rational>) -> Result<Rational> {
        let mut acc = Rational::one();
        for k in lo..=hi {
            acc *= f(k)?;
        }
        Ok(acc)
    }

    /// Sum over an integer range, 0 when empty.
    pub fn sum(lo: i64, hi: i64, mut f: impl FnMut(i64) -> Result<Rational>) -> Result<Rational> {
        let mut acc = Rational::zero();
        for k in lo..=hi {
            acc += f(k)?;
        }
        Ok(acc)
    }

    /// 1-based access into a list parameter.
    pub fn at(v: &[Rational], i: i64) -> Rational {
        v[(i - 1) as usize].clone()
    }

    pub fn nonzero(x: Rational, what: &str) -> Result<Rational> {
        if x.is_zero() {
            Err(Error::DivisionByZero(what.to_string()))
        } else {
            Ok(x)
        }
    }

    pub fn domain(cond: bool, what: &str) -> Result<()> {
        if cond {
            Ok(())
        } else {
            Err(Error::Domain(what.to_string()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<&str> = registry().iter().map(|r| r.id).collect();
        let len = ids.len();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), len);
    }

    #[test]
    fn rng_is_stable() {
        let a: u64 = trial_rng(42, "macmahon", 3).gen();
        let b: u64 = trial_rng(42, "macmahon", 3).gen();
        let c: u64 = trial_rng(42, "macmahon", 4).gen();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn parse_assignments() {
        let mut p = Params::new(0);
        p.parse_assignment("n=3").unwrap();
        p.parse_assignment("X=1,2,4").unwrap();
        p.parse_assignment("a=-2/3").unwrap();
        p.parse_assignment("T=1,2;3,4").unwrap();
        assert_eq!(p.n, 3);
        assert_eq!(p.list("X", 3).unwrap()[2], int(4));
        assert_eq!(p.r("a").unwrap(), &rat(-2, 3));
        assert_eq!(p.table("T").unwrap()[1][0], int(3));
        assert!(p.i("a").is_err());
    }
}
