//! Closed-form guessing: rational interpolation over towers of successive
//! quotients, polynomial interpolation of determinants, and rational roots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::exactnum::{big, int};
use crate::linalg::{kernel_basis, Matrix};
use crate::{Error, PolyQ, RatFn, Rational, Result};

pub const MAX_LEVEL: usize = 3;

/// Fit `N(x)/D(x)` to all but the last point and accept it only if it also
/// reproduces the last one.
///
/// Degree splits are tried by increasing `deg N + deg D`, numerator-heavy
/// first.
pub fn fit_rational(points: &[(Rational, Rational)]) -> Option<RatFn> {
    let m = points.len();
    if m < 2 {
        return None;
    }
    for i in 0..m {
        if points[..i].iter().any(|(x, _)| *x == points[i].0) {
            return None;
        }
    }
    let fit = &points[..m - 1];
    for total in 0..=m - 2 {
        for den_deg in 0..=total {
            let num_deg = total - den_deg;
            if let Some(f) = fit_split(fit, num_deg, den_deg).filter(|f| reproduces(f, points)) {
                return Some(f);
            }
        }
    }
    None
}

fn fit_split(fit: &[(Rational, Rational)], p: usize, r: usize) -> Option<RatFn> {
    let cols = p + r + 2;
    let sys = Matrix::from_fn(fit.len(), cols, |i, j| {
        let (x, y) = &fit[i];
        if j <= p {
            crate::exactnum::powu(x, j as u64)
        } else {
            -(y * crate::exactnum::powu(x, (j - p - 1) as u64))
        }
    });
    for v in kernel_basis(&sys).ok()? {
        let num = PolyQ::new(v[..=p].to_vec());
        let den = PolyQ::new(v[p + 1..].to_vec());
        if den.is_zero() {
            continue;
        }
        if let Ok(f) = RatFn::new(num, den) {
            if reproduces(&f, fit) {
                return Some(f);
            }
        }
    }
    None
}

fn reproduces(f: &RatFn, points: &[(Rational, Rational)]) -> bool {
    points.iter().all(|(x, y)| f.eval(x).is_ok_and(|v| &v == y))
}

/// Nested product `a_n = c_0 prod_{i1<n} (c_1 prod_{i2<i1} (... law(i_k)))`,
/// with `level = 0` meaning `a_n = law(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GuessExpr {
    pub level: usize,
    /// First term of each derived sequence above the law's level.
    pub initial: Vec<Rational>,
    pub law: RatFn,
}

impl GuessExpr {
    /// Value at index `n >= 1`.
    pub fn eval(&self, n: usize) -> Result<Rational> {
        self.eval_level(0, n)
    }

    fn eval_level(&self, depth: usize, n: usize) -> Result<Rational> {
        if depth == self.level {
            return self.law.eval(&int(n as i64));
        }
        let mut acc = self.initial[depth].clone();
        for i in 1..n {
            acc *= self.eval_level(depth + 1, i)?;
        }
        Ok(acc)
    }

    fn var(depth: usize) -> String {
        if depth == 0 {
            "n".into()
        } else {
            format!("i{depth}")
        }
    }

    /// Human readable nested product, e.g. `prod_{i1=1}^{n-1} 2*(2*i1 - 1)/i1`.
    pub fn render(&self) -> String {
        self.render_level(0)
    }

    fn render_level(&self, depth: usize) -> String {
        if depth == self.level {
            return factored(&self.law, &Self::var(depth));
        }
        let inner = format!(
            "prod_{{{v}=1}}^{{{u}-1}} ({})",
            self.render_level(depth + 1),
            v = Self::var(depth + 1),
            u = Self::var(depth)
        );
        let c = &self.initial[depth];
        if c.is_one() {
            inner
        } else {
            format!("{c}*{inner}")
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "level": self.level,
            "text": self.render(),
            "tree": self.tree(0),
        })
    }

    fn tree(&self, depth: usize) -> Value {
        if depth == self.level {
            return json!({
                "op": "ratfn",
                "var": Self::var(depth),
                "num": self.law.num().coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
                "den": self.law.den().coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
            });
        }
        json!({
            "op": "mul",
            "args": [
                {"op": "const", "value": self.initial[depth].to_string()},
                {
                    "op": "prod",
                    "var": Self::var(depth + 1),
                    "from": 1,
                    "to": format!("{}-1", Self::var(depth)),
                    "body": self.tree(depth + 1),
                }
            ]
        })
    }
}

/// Render a rational function as a constant times integer linear factors.
pub fn factored(f: &RatFn, var: &str) -> String {
    fn split(p: &PolyQ, var: &str) -> (Rational, Vec<String>) {
        let Ok((roots, cof)) = linear_factors(p) else {
            return (Rational::one(), vec![p.to_string_in(var)]);
        };
        let mut scale = Rational::one();
        let mut parts = Vec::new();
        for (r, mult) in &roots {
            // root a/b gives the factor (b*var - a)
            let b = big(r.denom().clone());
            let lin = PolyQ::new(vec![-(r * &b), b.clone()]);
            for _ in 0..*mult {
                scale /= &b;
                parts.push(if r.is_zero() { var.to_string() } else { format!("({})", lin.to_string_in(var)) });
            }
        }
        if cof.degree().unwrap_or(0) == 0 {
            scale *= cof.leading();
        } else {
            parts.push(format!("({})", cof.to_string_in(var)));
        }
        (scale, parts)
    }
    let (sn, pn) = split(f.num(), var);
    let (sd, pd) = split(f.den(), var);
    let c = sn / sd;
    let mut num: Vec<String> = Vec::new();
    let (cn, cd) = (big(c.numer().clone()), big(c.denom().clone()));
    if pn.is_empty() || !cn.is_one() {
        num.push(if cn == -Rational::one() && !pn.is_empty() { "-1".into() } else { cn.to_string() });
    }
    num.extend(pn);
    let mut den: Vec<String> = Vec::new();
    if !cd.is_one() {
        den.push(cd.to_string());
    }
    den.extend(pd);
    let n = num.join("*");
    match den.len() {
        0 => n,
        1 => format!("{n}/{}", den[0]),
        _ => format!("{n}/({})", den.join("*")),
    }
}

/// Result of the quotient cascade.
#[derive(Clone, Debug, Default)]
pub struct RateResult {
    pub guesses: Vec<GuessExpr>,
    /// Level at which a zero term stopped the quotient tower.
    pub blocked_at: Option<usize>,
    /// Per-parity guesses, tried only when the whole sequence fails.
    pub even: Vec<GuessExpr>,
    pub odd: Vec<GuessExpr>,
}

impl RateResult {
    pub fn accepted(&self) -> bool {
        !self.guesses.is_empty() || (!self.even.is_empty() && !self.odd.is_empty())
    }
}

fn cascade(terms: &[Rational], max_level: usize) -> (Vec<GuessExpr>, Option<usize>) {
    let mut guesses = Vec::new();
    let mut seq = terms.to_vec();
    let mut initial = Vec::new();
    for level in 0..=max_level.min(MAX_LEVEL) {
        if level > 0 {
            if seq.iter().any(Zero::is_zero) {
                return (guesses, Some(level));
            }
            initial.push(seq[0].clone());
            seq = seq.windows(2).map(|w| &w[1] / &w[0]).collect();
        }
        if seq.len() < 2 {
            break;
        }
        let pts: Vec<_> = seq.iter().enumerate().map(|(i, v)| (int(i as i64 + 1), v.clone())).collect();
        if let Some(law) = fit_rational(&pts) {
            let g = GuessExpr { level, initial: initial.clone(), law };
            if terms.iter().enumerate().all(|(i, t)| g.eval(i + 1).is_ok_and(|v| &v == t)) {
                guesses.push(g);
            }
        }
    }
    (guesses, None)
}

/// Rate-style guessing on `a_1, a_2, ...` up to `max_level` quotient levels.
pub fn rate_guess(terms: &[Rational], max_level: usize) -> RateResult {
    let (guesses, blocked_at) = cascade(terms, max_level);
    let mut out = RateResult { guesses, blocked_at, ..Default::default() };
    if out.guesses.is_empty() && terms.len() >= 4 {
        let odd: Vec<_> = terms.iter().step_by(2).cloned().collect();
        let even: Vec<_> = terms.iter().skip(1).step_by(2).cloned().collect();
        out.odd = cascade(&odd, max_level).0;
        out.even = cascade(&even, max_level).0;
    }
    out
}

/// Interpolate `f` as a polynomial of degree at most `degree_bound`, sampling
/// the integers `0, 1, -1, 2, -2, ...` and skipping points where `f` is
/// undefined.
pub fn interpolate_samples(f: impl Fn(&Rational) -> Result<Rational>, degree_bound: usize) -> Result<PolyQ> {
    let mut pts = Vec::with_capacity(degree_bound + 1);
    let mut k: i64 = 0;
    let mut misses = 0;
    while pts.len() <= degree_bound {
        let x = int(if k % 2 == 0 { -(k / 2) } else { k / 2 + 1 });
        k += 1;
        match f(&x) {
            Ok(y) => pts.push((x, y)),
            Err(Error::Domain(_)) | Err(Error::DivisionByZero(_)) => {
                misses += 1;
                if misses > 64 + 4 * degree_bound {
                    return Err(Error::Insufficient("too many undefined sample points".into()));
                }
            }
            Err(e) => return Err(e),
        }
    }
    PolyQ::interpolate(&pts)
}

/// Determinant of a registry record as a polynomial in one parameter.
pub fn interpolate_det_poly(
    id: &str,
    fixed: &crate::catalog::Params,
    free: &str,
    degree_bound: usize,
) -> Result<PolyQ> {
    let rec = crate::catalog::lookup(id)?;
    interpolate_samples(
        |v| {
            let mut p = fixed.clone();
            p.set(free, v.clone());
            rec.lhs(&p)
        },
        degree_bound,
    )
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut p = BigInt::from(2u32);
    let limit = BigInt::from(1_000_000u32);
    while &p * &p <= n && p <= limit {
        let mut e = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            primes.push((p.clone(), e));
        }
        p += 1;
    }
    if n > BigInt::one() {
        primes.push((n, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::new();
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

/// Rational roots with multiplicities, and the cofactor left after dividing
/// them out.
pub fn linear_factors(p: &PolyQ) -> Result<(Vec<(Rational, usize)>, PolyQ)> {
    if p.is_zero() {
        return Err(Error::Domain("linear factors of the zero polynomial".into()));
    }
    let mut rest = p.clone();
    let mut roots = Vec::new();
    let zero_mult = rest.coeffs().iter().take_while(|c| c.is_zero()).count();
    if zero_mult > 0 {
        roots.push((Rational::zero(), zero_mult));
        rest = PolyQ::new(rest.coeffs()[zero_mult..].to_vec());
    }
    let lcm = rest.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = rest.coeffs().iter().map(|c| (c * big(lcm.clone())).to_integer()).collect();
    if ints.len() > 1 {
        let (c0, lead) = (&ints[0], ints.last().unwrap());
        let dens = divisors(lead);
        let nums = divisors(c0);
        // a root a/b in lowest terms has (b - a) | F(1) and (b + a) | F(-1)
        let at_one: BigInt = ints.iter().sum();
        let at_minus_one: BigInt =
            ints.iter().enumerate().map(|(k, c)| if k % 2 == 0 { c.clone() } else { -c }).sum();
        let divides = |d: BigInt, v: &BigInt| v.is_zero() || (!d.is_zero() && (v % d).is_zero());
        let mut cands: Vec<Rational> = Vec::new();
        for a in &nums {
            for b in &dens {
                if !a.gcd(b).is_one() {
                    continue;
                }
                for a in [a.clone(), -a] {
                    if divides(b - &a, &at_one) && divides(b + &a, &at_minus_one) {
                        cands.push(Rational::new(a, b.clone()));
                    }
                }
            }
        }
        cands.sort_by(|x, y| x.abs().cmp(&y.abs()).then(y.cmp(x)));
        for r in cands {
            let mut mult = 0;
            while rest.degree().unwrap_or(0) > 0 && rest.eval(&r).is_zero() {
                rest = rest.div_rem(&PolyQ::linear(-r.clone()))?.0;
                mult += 1;
            }
            if mult > 0 {
                roots.push((r, mult));
            }
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    Ok((roots, rest))
}

/// Small integer index from a rational, if it is one.
pub fn as_small_int(r: &Rational) -> Option<i64> {
    r.is_integer().then(|| r.to_integer().to_i64()).flatten()
}
