//! Exhaustive enumeration and exact checks of the counting identities.
//!
//! Each identity is checked instance by instance, an instance being one
//! value of `(n, r)`.  Instances run in parallel; the report lists them in
//! a fixed order regardless of scheduling.  Polynomial identities are
//! compared as exact polynomials with big-integer coefficients.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::assemblee::{
    cycles_of, enumerate_assemblees, enumerate_sp, foata, normalize_cycles, Assemblee,
    CrossingRule, SignedPerm,
};
use crate::bijections::{
    arrow_zigzag, arrow_zigzag_via_flatten, assemblee_of_cycles, at_insertion, at_zigzag,
    fusion_exchange, insertion, insertion_inverse, insertion_via_flatten, zeta, zeta_inverse,
};
use crate::laguerre::{
    enumerate_mlh, enumerate_mlh_star, for_each_mlh, inversions, mlh_to_sp, plain_to_star, rho,
    rho_inverse, sp_to_mlh, star_to_plain, Mlh, MlhStar,
};
use crate::poly::{binomial, factorial, q_factorial, MultiPoly};
use crate::shapes::{words_with_diagonals, Label, Letter, ShapeWord};
use crate::tableaux::{enumerate_at_plus, for_each_filling, PackedKind, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown identity {0:?}; known: {}", IDENTITIES.iter().map(|i| i.id).collect::<Vec<_>>().join(", "))]
    UnknownIdentity(String),
    #[error("unknown object kind {0:?}")]
    UnknownKind(String),
    #[error("size {n} exceeds the enumeration bound {max}")]
    BoundExceeded { n: usize, max: usize },
    #[error("zero parameter")]
    ZeroParameter,
}

/// An entry of the identity catalogue.
#[derive(Debug, Clone, Copy)]
pub struct Identity {
    pub id: &'static str,
    pub default_max_n: usize,
    pub description: &'static str,
}

pub const IDENTITIES: &[Identity] = &[
    Identity { id: "ZNR", default_max_n: 7, description: "Y_{n,r}(alpha,beta,1,1) = C(n,r) (alpha+beta+r)_{n-r}" },
    Identity { id: "MVGEN", default_max_n: 6, description: "refined count by arrows per diagonal strip, plain and extended forms" },
    Identity { id: "YSTAT", default_max_n: 5, description: "Y_{n,r}(alpha,beta,q,y) from tableaux equals the assemblee statistics LRmax*, RLmin*, cro, wex" },
    Identity { id: "YPLUS", default_max_n: 6, description: "Y_{n,r}(alpha,beta,q,y) over RAT(n,r) equals the sum over RAT+(n+1,r+1) with topup" },
    Identity { id: "LAH", default_max_n: 7, description: "|A(n,r)| = C(n-1,r-1) n!/r! and |RAT+| = |A| = |AS| via independent enumerators" },
    Identity { id: "QFACT", default_max_n: 6, description: "sum over MLH(n,r) of q^wt = [r]_q! * sum over AS(n,r) of q^cro" },
    Identity { id: "PACKED", default_max_n: 6, description: "packed counts: horizontal = vertical = (n-1)!, diagonal = n!" },
    Identity { id: "IISZ", default_max_n: 5, description: "arrow zigzag = Foata map of the insertion epsilon-word" },
    Identity { id: "IFLAT", default_max_n: 5, description: "insertion commutes with flattening" },
    Identity { id: "ZFLAT", default_max_n: 5, description: "arrow zigzag commutes with flattening" },
    Identity { id: "FEI", default_max_n: 5, description: "fusion-exchange of iota^-1(e(pi)) inverts the zigzag and the insertion" },
    Identity { id: "FEZ", default_max_n: 5, description: "arrow zigzag of fusion-exchange(pi) = Foata map of iota(pi)" },
    Identity { id: "ZRPT", default_max_n: 5, description: "up-free zigzag bijection transports diag, tile, row, topup, frow, fcell" },
    Identity { id: "SPMLH", default_max_n: 6, description: "signed permutations to modified histories: bijection with wt = cro" },
    Identity { id: "RHO", default_max_n: 6, description: "SP(n,r) = AS(n,r) x S_r with cro additive" },
    Identity { id: "CK", default_max_n: 5, description: "zigzag on alternative tableaux = Foata map of insertion" },
    Identity { id: "CN", default_max_n: 5, description: "insertion on extended alternative tableaux is a bijection; free rows = RL-minima" },
    Identity { id: "PASEP", default_max_n: 6, description: "Z_{n,r} = (alpha beta)^{n-r} Y_{n,r}(1/alpha,1/beta,q) is a polynomial; q=1 closed form" },
];

pub fn identity(id: &str) -> Result<&'static Identity, VerifyError> {
    IDENTITIES
        .iter()
        .find(|i| i.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| VerifyError::UnknownIdentity(id.to_string()))
}

/// Settings shared by all checks.
#[derive(Debug, Clone, Copy)]
pub struct Options {
    pub max_n: Option<usize>,
    /// Crossing convention; only changed to show that checks notice.
    pub rule: CrossingRule,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            max_n: None,
            rule: CrossingRule::Standard,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceReport {
    pub n: usize,
    pub r: Option<usize>,
    pub pass: bool,
    /// Number of objects or coefficients compared.
    pub checked: usize,
    pub millis: u128,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub max_n: usize,
    pub instances: Vec<InstanceReport>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.instances.iter().all(|i| i.pass)
    }

    pub fn first_counterexample(&self) -> Option<&str> {
        self.instances
            .iter()
            .find_map(|i| i.counterexample.as_deref())
    }

    /// One line per instance: `PASS ZNR n=5 r=2 (120 checked, 3 ms)`.
    pub fn lines(&self) -> Vec<String> {
        self.instances
            .iter()
            .map(|i| {
                let r = i.r.map(|r| format!(" r={r}")).unwrap_or_default();
                let mut s = format!(
                    "{} {} n={}{} ({} checked, {} ms)",
                    if i.pass { "PASS" } else { "FAIL" },
                    self.id,
                    i.n,
                    r,
                    i.checked,
                    i.millis
                );
                if let Some(c) = &i.counterexample {
                    s.push_str(&format!(": {c}"));
                }
                s
            })
            .collect()
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in self.lines() {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// Result of one instance: how many things were compared and the first
/// mismatch.
struct Outcome {
    checked: usize,
    counterexample: Option<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            checked: 0,
            counterexample: None,
        }
    }

    /// Records one comparison; keeps the first failure message.
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(what());
        }
    }

    fn poly(vars_left: &MultiPoly, vars_right: &MultiPoly, label: &str) -> Outcome {
        let mut o = Outcome::new();
        o.checked = vars_left.terms().len().max(vars_right.terms().len());
        if vars_left != vars_right {
            o.counterexample = Some(format!("{label}: {vars_left} != {vars_right}"));
        }
        o
    }
}

type Check = fn(usize, Option<usize>, &Options) -> Outcome;

fn plan(id: &str) -> (Check, usize, Box<dyn Fn(usize) -> Vec<Option<usize>>>) {
    let all_r = |n: usize| (0..=n).map(Some).collect::<Vec<_>>();
    let pos_r = |n: usize| (1..=n).map(Some).collect::<Vec<_>>();
    let no_r = |_: usize| vec![None];
    match id {
        "ZNR" => (check_znr, 1, Box::new(all_r)),
        "MVGEN" => (check_mvgen, 1, Box::new(all_r)),
        "YSTAT" => (check_ystat, 0, Box::new(all_r)),
        "YPLUS" => (check_yplus, 0, Box::new(all_r)),
        "LAH" => (check_lah, 1, Box::new(pos_r)),
        "QFACT" => (check_qfact, 1, Box::new(pos_r)),
        "PACKED" => (check_packed, 1, Box::new(no_r)),
        "IISZ" => (check_iisz, 0, Box::new(all_r)),
        "IFLAT" => (check_iflat, 0, Box::new(all_r)),
        "ZFLAT" => (check_zflat, 0, Box::new(all_r)),
        "FEI" => (check_fei, 0, Box::new(all_r)),
        "FEZ" => (check_fez, 0, Box::new(all_r)),
        "ZRPT" => (check_zrpt, 0, Box::new(all_r)),
        "SPMLH" => (check_spmlh, 1, Box::new(pos_r)),
        "RHO" => (check_rho, 1, Box::new(pos_r)),
        "CK" => (check_ck, 0, Box::new(no_r)),
        "CN" => (check_cn, 0, Box::new(no_r)),
        "PASEP" => (check_pasep, 1, Box::new(all_r)),
        _ => unreachable!("catalogue and plan agree"),
    }
}

/// Runs one identity over all instances up to the bound.
pub fn check_identity(id: &str, opts: &Options) -> Result<IdentityReport, VerifyError> {
    let entry = identity(id)?;
    let max_n = opts.max_n.unwrap_or(entry.default_max_n);
    let (check, min_n, rs) = plan(entry.id);
    let jobs: Vec<(usize, Option<usize>)> = (min_n..=max_n)
        .flat_map(|n| rs(n).into_iter().map(move |r| (n, r)))
        .collect();
    let instances = jobs
        .into_par_iter()
        .map(|(n, r)| {
            let start = Instant::now();
            let o = check(n, r, opts);
            InstanceReport {
                n,
                r,
                pass: o.counterexample.is_none(),
                checked: o.checked,
                millis: start.elapsed().as_millis(),
                counterexample: o.counterexample,
            }
        })
        .collect();
    Ok(IdentityReport {
        id: entry.id.to_string(),
        max_n,
        instances,
    })
}

/// Runs every identity in the catalogue.
pub fn check_all(opts: &Options) -> Vec<IdentityReport> {
    IDENTITIES
        .iter()
        .map(|i| check_identity(i.id, opts).expect("catalogue id"))
        .collect()
}

// ---------------------------------------------------------------------------
// Enumeration helpers

/// Extended tableaux of size `n` with `r` diagonal strips, enumerated
/// directly from their shapes rather than through the extension map.
pub fn enumerate_extended(n: usize, r: usize) -> Vec<Rat> {
    words_with_diagonals(n, r)
        .par_iter()
        .filter(|w| w.letters().first() == Some(&Letter::Diagonal))
        .flat_map_iter(|w| {
            let mut out = Vec::new();
            for_each_filling(w, |t| {
                if t.is_extended() {
                    out.push(t)
                }
            });
            out
        })
        .collect()
}

/// Sums `weight` over all fillings of the given words into monomial counts.
fn filling_poly(
    words: &[ShapeWord],
    vars: &[&str],
    keep: impl Fn(&Rat) -> bool + Sync,
    weight: impl Fn(&Rat) -> Vec<u32> + Sync,
) -> MultiPoly {
    let counts = words
        .par_iter()
        .map(|w| {
            let mut m: HashMap<Vec<u32>, u64> = HashMap::new();
            for_each_filling(w, |t| {
                if keep(&t) {
                    *m.entry(weight(&t)).or_insert(0) += 1;
                }
            });
            m
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    MultiPoly::from_counts(vars, counts)
}

pub const Y_VARS: [&str; 4] = ["alpha", "beta", "q", "y"];

/// `Y_{n,r}(alpha, beta, q, y)` summed over tableaux of size `(n, r)`.
pub fn y_from_tableaux(n: usize, r: usize) -> MultiPoly {
    filling_poly(
        &words_with_diagonals(n, r),
        &Y_VARS,
        |_| true,
        |t| {
            let s = t.stats();
            vec![s.frow as u32, s.fcol as u32, s.fcell as u32, s.row as u32]
        },
    )
}

/// The same polynomial summed over extended tableaux of size `(n+1, r+1)`,
/// with `topup` in place of the free columns.
pub fn y_from_extended(n: usize, r: usize) -> MultiPoly {
    let words: Vec<ShapeWord> = words_with_diagonals(n + 1, r + 1)
        .into_iter()
        .filter(|w| w.letters().first() == Some(&Letter::Diagonal))
        .collect();
    filling_poly(&words, &Y_VARS, Rat::is_extended, |t| {
        let s = t.stats();
        vec![s.frow as u32, s.topup as u32, s.fcell as u32, s.row as u32]
    })
}

/// The same polynomial summed over assemblées of `n+1` with `r+1` blocks,
/// weighted by special LR-maxima, special RL-minima, crossings and weak
/// excedances.
pub fn y_from_assemblees(n: usize, r: usize, rule: CrossingRule) -> MultiPoly {
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    for pi in enumerate_assemblees(n + 1, r + 1) {
        let tau = pi.to_signed();
        let e = vec![
            tau.lrmax_star() as u32,
            tau.rlmin_star() as u32,
            tau.crossings_with(rule).total as u32,
            tau.wex() as u32,
        ];
        *counts.entry(e).or_insert(0) += 1;
    }
    MultiPoly::from_counts(&Y_VARS, counts)
}

/// `C(n,r) (alpha + beta + r)_{n-r}` in the variables of [`Y_VARS`].
pub fn y_at_q1_closed_form(n: usize, r: usize) -> MultiPoly {
    let a = MultiPoly::var(&Y_VARS, "alpha");
    let b = MultiPoly::var(&Y_VARS, "beta");
    let base = &(&a + &b) + &a.constant_like(r as u64);
    &a.constant_like(binomial(n as u64, r as u64)) * &base.rising((n - r) as u32)
}

/// The two-species exclusion process partition function
/// `Z_{n,r} = (alpha beta)^{n-r} Y_{n,r}(1/alpha, 1/beta, q)` at exact
/// rational parameters.
pub fn pasep_z(
    n: usize,
    r: usize,
    alpha: &BigRational,
    beta: &BigRational,
    q: &BigRational,
) -> Result<BigRational, VerifyError> {
    if alpha.is_zero() || beta.is_zero() {
        return Err(VerifyError::ZeroParameter);
    }
    let y = y_from_tableaux(n, r);
    let value = y.eval(&[alpha.recip(), beta.recip(), q.clone(), BigRational::one()]);
    Ok(value * num_traits::pow(alpha * beta, n - r))
}

/// `Z_{n,r}` as a polynomial in `alpha, beta, q`: the exponent of alpha in
/// each term of `Y` is replaced by `n - r` minus it, likewise for beta.
pub fn pasep_z_poly(n: usize, r: usize) -> Option<MultiPoly> {
    let y = y_from_tableaux(n, r).specialize("y", 1);
    let m = (n - r) as u32;
    let mut out = MultiPoly::zero(&Y_VARS[..3]);
    for (e, c) in y.terms() {
        if e[0] > m || e[1] > m {
            return None;
        }
        out.add_term(vec![m - e[0], m - e[1], e[2]], c.clone());
    }
    Some(out)
}

/// Kinds accepted by [`enumerate_objects`].
pub const OBJECT_KINDS: &[&str] = &[
    "rat",
    "rat_plus",
    "at",
    "at_plus",
    "assemblee",
    "signed_sp",
    "signed_as",
    "mlh",
    "mlh_star",
];

/// Largest size accepted by [`enumerate_objects`].
pub const MAX_ENUMERATION_N: usize = 8;

/// One enumerated object.
#[derive(Debug, Clone)]
pub enum Object {
    Rat(Rat),
    Assemblee(Assemblee),
    Signed(SignedPerm),
    Mlh(Mlh),
    MlhStar(MlhStar),
}

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Object::Rat(t) => f.write_str(&t.to_line()),
            Object::Assemblee(a) => write!(f, "{a}"),
            Object::Signed(s) => write!(f, "{s}"),
            Object::Mlh(h) => write!(f, "{h}"),
            Object::MlhStar(h) => write!(f, "{h}"),
        }
    }
}

/// Complete, duplicate-free lists of objects of one kind.  For `rat_plus`
/// the size is that of the extended tableau (`n` strips, `r` diagonal).
pub fn enumerate_objects(kind: &str, n: usize, r: usize) -> Result<Vec<Object>, VerifyError> {
    if n > MAX_ENUMERATION_N {
        return Err(VerifyError::BoundExceeded {
            n,
            max: MAX_ENUMERATION_N,
        });
    }
    let rats = |v: Vec<Rat>| v.into_iter().map(Object::Rat).collect();
    Ok(match kind {
        "rat" => rats(crate::tableaux::enumerate_rat(n, r)),
        "rat_plus" => rats(enumerate_extended(n, r)),
        "at" => rats(crate::tableaux::enumerate_at(n)),
        "at_plus" => rats(enumerate_at_plus(n)),
        "assemblee" => enumerate_assemblees(n, r)
            .into_iter()
            .map(Object::Assemblee)
            .collect(),
        "signed_sp" => enumerate_sp(n, r).into_iter().map(Object::Signed).collect(),
        "signed_as" => crate::assemblee::enumerate_as(n, r)
            .into_iter()
            .map(Object::Signed)
            .collect(),
        "mlh" => enumerate_mlh(n, r).into_iter().map(Object::Mlh).collect(),
        "mlh_star" => enumerate_mlh_star(n, r)
            .into_iter()
            .map(Object::MlhStar)
            .collect(),
        other => return Err(VerifyError::UnknownKind(other.to_string())),
    })
}

fn labels_u32(labels: &[Label]) -> BTreeSet<u32> {
    labels.iter().filter_map(|l| l.num()).collect()
}

fn cycles_as_map(cycles: &[Vec<Label>]) -> BTreeMap<Label, Label> {
    let mut m = BTreeMap::new();
    for c in cycles {
        for (k, &x) in c.iter().enumerate() {
            m.insert(x, c[(k + 1) % c.len()]);
        }
    }
    m
}

// ---------------------------------------------------------------------------
// Checks

fn check_znr(n: usize, r: Option<usize>, _: &Options) -> Outcome {
    let r = r.unwrap();
    let y = y_from_tableaux(n, r).specialize("q", 1).specialize("y", 1);
    Outcome::poly(
        &y,
        &y_at_q1_closed_form(n, r),
        "Y(alpha,beta,1,1) vs closed form",
    )
}

fn z_vars(k: usize) -> Vec<String> {
    (1..=k).map(|i| format!("z{i}")).collect()
}

fn check_mvgen(n: usize, r: Option<usize>, _: &Options) -> Outcome {
    let r = r.unwrap();
    // Plain form over RAT(n, r).
    let zs = z_vars(r);
    let mut names: Vec<&str> = vec!["alpha", "beta"];
    names.extend(zs.iter().map(String::as_str));
    let lhs = filling_poly(
        &words_with_diagonals(n, r),
        &names,
        |_| true,
        |t| {
            let s = t.stats();
            let mut e = vec![s.frow as u32, s.fcol as u32];
            e.extend(s.diag_arrows.iter().map(|&a| a as u32));
            e
        },
    );
    let mut base = MultiPoly::zero(&names);
    for v in &names {
        base = &base + &MultiPoly::var(&names, v);
    }
    let rhs =
        &MultiPoly::constant(&names, binomial(n as u64, r as u64)) * &base.rising((n - r) as u32);
    let mut o = Outcome::poly(&lhs, &rhs, "plain form");

    // Extended form over RAT+(n+1, r+1).
    let zs = z_vars(r + 1);
    let mut names: Vec<&str> = vec!["alpha"];
    names.extend(zs.iter().map(String::as_str));
    let words: Vec<ShapeWord> = words_with_diagonals(n + 1, r + 1)
        .into_iter()
        .filter(|w| w.letters().first() == Some(&Letter::Diagonal))
        .collect();
    let lhs = filling_poly(&words, &names, Rat::is_extended, |t| {
        let s = t.stats();
        let mut e = vec![s.frow as u32];
        e.extend(s.diag_arrows.iter().map(|&a| a as u32));
        e
    });
    let mut base = MultiPoly::zero(&names);
    for v in &names {
        base = &base + &MultiPoly::var(&names, v);
    }
    let rhs =
        &MultiPoly::constant(&names, binomial(n as u64, r as u64)) * &base.rising((n - r) as u32);
    let o2 = Outcome::poly(&lhs, &rhs, "extended form");
    o.checked += o2.checked;
    o.counterexample = o.counterexample.or(o2.counterexample);
    o
}

fn check_ystat(n: usize, r: Option<usize>, opts: &Options) -> Outcome {
    let r = r.unwrap();
    Outcome::poly(
        &y_from_tableaux(n, r),
        &y_from_assemblees(n, r, opts.rule),
        "tableaux vs assemblees",
    )
}

fn check_yplus(n: usize, r: Option<usize>, _: &Options) -> Outcome {
    let r = r.unwrap();
    Outcome::poly(
        &y_from_tableaux(n, r),
        &y_from_extended(n, r),
        "RAT(n,r) vs RAT+(n+1,r+1)",
    )
}

fn check_lah(n: usize, r: Option<usize>, _: &Options) -> Outcome {
    let r = r.unwrap();
    let mut o = Outcome::new();
    let lah = binomial(n as u64 - 1, r as u64 - 1) * factorial(n as u64) / factorial(r as u64);
    let count = BigInt::from(enumerate_assemblees(n, r).len());
    o.check(count == lah, || {
        format!("|A({n},{r})| = {count}, expected {lah}")
    });
    // Three enumerators of objects of size n with r diagonals / blocks.
    let ext = enumerate_extended(n, r).len();
    let signed = enumerate_sp(n, r)
        .iter()
        .filter(|t| t.is_assemblee())
        .count();
    let expected = lah.clone();
    o.check(BigInt::from(ext) == expected, || {
        format!("|RAT+({n},{r})| = {ext}, expected {expected}")
    });
    o.check(BigInt::from(signed) == expected, || {
        format!("|AS({n},{r})| = {signed}, expected {expected}")
    });
    o
}

fn check_qfact(n: usize, r: Option<usize>, opts: &Options) -> Outcome {
    let r = r.unwrap();
    let vars = ["q"];
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    for_each_mlh(n, r, |h| {
        *counts.entry(vec![h.weight_exponent()]).or_insert(0) += 1
    });
    let lhs = MultiPoly::from_counts(&vars, counts);
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    for tau in crate::assemblee::enumerate_as(n, r) {
        *counts
            .entry(vec![tau.crossings_with(opts.rule).total as u32])
            .or_insert(0) += 1;
    }
    let rhs = &q_factorial(&vars, "q", r as u32) * &MultiPoly::from_counts(&vars, counts);
    Outcome::poly(&lhs, &rhs, "histories vs [r]_q! * assemblees")
}

fn check_packed(n: usize, _: Option<usize>, _: &Options) -> Outcome {
    let mut o = Outcome::new();
    let mut h = 0usize;
    let mut v = 0usize;
    for t in crate::tableaux::enumerate_rat(n, 0) {
        match t.packed_kind() {
            PackedKind::Horizontal => h += 1,
            PackedKind::Vertical => v += 1,
            _ => {}
        }
    }
    let d = crate::tableaux::enumerate_rat(n, 1)
        .iter()
        .filter(|t| t.packed_kind() == PackedKind::Diagonal)
        .count();
    let f1 = factorial(n as u64 - 1);
    let f = factorial(n as u64);
    o.check(BigInt::from(h) == f1, || {
        format!("h({n}) = {h}, expected {f1}")
    });
    o.check(BigInt::from(v) == f1, || {
        format!("v({n}) = {v}, expected {f1}")
    });
    o.check(BigInt::from(d) == f, || {
        format!("d({n}) = {d}, expected {f}")
    });
    o
}

fn for_each_extended(n: usize, r: usize, mut f: impl FnMut(&Rat)) {
    for t in enumerate_extended(n + 1, r + 1) {
        f(&t);
    }
}

fn check_iisz(n: usize, r: Option<usize>, _: &Options) -> Outcome {
    let mut o = Outcome::new();
    for_each_extended(n, r.unwrap(), |t| {
        let ins = insertion(t).and_then(|pi| Ok(pi.eps_word()?));
        let zig = arrow_zigzag(t);
        let ok = match (&ins, &zig) {
            (Ok(word), Ok(cycles)) => normalize_cycles(&foata(word)) == *cycles,
            _ => false,
        };
        o.check(ok, || {
            format!("{}: insertion {ins:?}, zigzag {zig:?}", t.to_line())
        });
    });
    o
}

fn check_iflat(n: usize, r: Option<usize>, _: &Options) -> Outcome {
    let mut o = Outcome::new();
    for_each_extended(n, r.unwrap(), |t| {
        let a = insertion(t);
        let b = insertion_via_flatten(t);
        o.check(a.is_ok() && a == b, || {
            format!("{}: {a:?} vs {b:?}", t.to_line())
        });
    });
    o
}

fn check_zflat(n: usize, r: Option<usize>, _: &Options) -> Outcome {
    let mut o = Outcome::new();
    for_each_extended(n, r.unwrap(), |t| {
        let a = arrow_zigzag(t);
        let b = arrow_zigzag_via_flatten(t);
        o.check(a.is_ok() && a == b, || {
            format!("{}: {a:?} vs {b:?}", t.to_line())
        });
    });
    o
}

fn check_fei(n: usize, r: Option<usize>, _: &Options) -> Outcome {
    let mut o = Outcome::new();
    let r = r.unwrap();
    for pi in enumerate_assemblees(n + 1, r + 1) {
        let result = (|| {
            let sigma = Assemblee::from_iota(&pi.eps_word()?)?;
            let t = fusion_exchange(&sigma)?;
            let back = assemblee_of_cycles(&arrow_zigzag(&t)?)?;
            let inv = insertion_inverse(&pi)?;
            Ok::<_, crate::bijections::BijectionError>(back == pi && inv == t)
        })();
        o.check(result == Ok(true), || format!("{pi}: {result:?}"));
    }
    o
}

fn check_fez(n: usize, r: Option<usize>, _: &Options) -> Outcome {
    let mut o = Outcome::new();
    let r = r.unwrap();
    let mut images = HashSet::new();
    for pi in enumerate_assemblees(n + 1, r + 1) {
        let result = (|| {
            let t = fusion_exchange(&pi)?;
            let zig = arrow_zigzag(&t)?;
            let expected = normalize_cycles(&foata(&pi.iota()?));
            Ok::<_, crate::bijections::BijectionError>((zig == expected, t))
        })();
        match result {
            Ok((ok, t)) => {
                o.check(ok, || format!("{pi}: zigzag differs from Foata of iota"));
                o.check(images.insert(t.clone()), || {
                    format!("{pi}: repeated image {}", t.to_line())
                });
            }
            Err(e) => o.check(false, || format!("{pi}: {e}")),
        }
    }
    let total = enumerate_extended(n + 1, r + 1).len();
    o.check(images.len() == total, || {
        format!("{} images for {total} extended tableaux", images.len())
    });
    o
}

fn check_zrpt(n: usize, r: Option<usize>, opts: &Options) -> Outcome {
    let mut o = Outcome::new();
    let r = r.unwrap();
    let mut images = HashSet::new();
    for_each_extended(n, r, |t| {
        let tau = match zeta(t) {
            Ok(tau) => tau,
            Err(e) => return o.check(false, || format!("{}: {e}", t.to_line())),
        };
        let s = t.stats();
        let w = t.word();
        let diag: Vec<Label> = (0..w.len())
            .filter(|&p| w.letter(p) == Letter::Diagonal)
            .map(|p| w.label(p))
            .collect();
        let cro = tau.crossings_with(opts.rule).total;
        let st = tau.stats();
        let checks = [
            (
                "diag = neg",
                labels_u32(&diag) == tau.neg().into_iter().collect::<BTreeSet<_>>(),
            ),
            ("tile = sinv", s.tile == st.sinv),
            ("row = wex", s.row == st.wex),
            ("topup = RLmin*", s.topup == st.rlmin_star),
            ("frow = LRmax*", s.frow == st.lrmax_star),
            ("fcell = cro", s.fcell == cro),
            ("image is an assemblee", tau.is_assemblee()),
            ("inverse", zeta_inverse(&tau).as_ref() == Ok(t)),
        ];
        for (name, ok) in checks {
            o.check(ok, || format!("{name} fails for {} -> {tau}", t.to_line()));
        }
        o.check(images.insert(tau.clone()), || {
            format!("repeated image {tau}")
        });
    });
    let total = enumerate_assemblees(n + 1, r + 1).len();
    o.check(images.len() == total, || {
        format!("{} images for {total} assemblees", images.len())
    });
    o
}

fn check_spmlh(n: usize, r: Option<usize>, opts: &Options) -> Outcome {
    let mut o = Outcome::new();
    let r = r.unwrap();
    let mut images = HashSet::new();
    for tau in enumerate_sp(n, r) {
        match sp_to_mlh(&tau) {
            Ok(h) => {
                let cro = tau.crossings_with(opts.rule).total;
                o.check(h.weight_exponent() as usize == cro, || {
                    format!("{tau}: weight {} vs cro {cro}", h.weight_exponent())
                });
                o.check(mlh_to_sp(&h).as_ref() == Ok(&tau), || {
                    format!("{tau}: inverse fails on {h}")
                });
                let plain = star_to_plain(&h);
                o.check(
                    plain.weight_exponent() == h.weight_exponent() && plain_to_star(&plain) == h,
                    || format!("{h}: pairing with {plain} fails"),
                );
                o.check(images.insert(h.clone()), || format!("repeated image {h}"));
            }
            Err(e) => o.check(false, || format!("{tau}: {e}")),
        }
    }
    let stars = enumerate_mlh_star(n, r);
    o.check(
        stars.len() == images.len() && stars.iter().all(|h| images.contains(h)),
        || format!("{} histories vs {} images", stars.len(), images.len()),
    );
    o
}

fn check_rho(n: usize, r: Option<usize>, opts: &Options) -> Outcome {
    let mut o = Outcome::new();
    let r = r.unwrap();
    let mut images = HashSet::new();
    for nu in enumerate_sp(n, r) {
        match rho(&nu) {
            Ok((tau, sigma)) => {
                let lhs = nu.crossings_with(opts.rule).total;
                let rhs = tau.crossings_with(opts.rule).total + inversions(&sigma);
                o.check(lhs == rhs, || format!("{nu}: cro {lhs} vs {rhs}"));
                o.check(tau.is_assemblee(), || {
                    format!("{nu}: {tau} not an assemblee")
                });
                o.check(rho_inverse(&tau, &sigma).as_ref() == Ok(&nu), || {
                    format!("{nu}: inverse fails")
                });
                o.check(images.insert((tau, sigma)), || {
                    format!("{nu}: repeated image")
                });
            }
            Err(e) => o.check(false, || format!("{nu}: {e}")),
        }
    }
    let expected = enumerate_assemblees(n, r).len()
        * factorial(r as u64).to_string().parse::<usize>().unwrap();
    o.check(images.len() == expected, || {
        format!("{} images, expected {expected}", images.len())
    });
    o
}

fn check_ck(n: usize, _: Option<usize>, _: &Options) -> Outcome {
    let mut o = Outcome::new();
    for t in enumerate_at_plus(n + 1) {
        let zig = at_zigzag(&t);
        let ins = at_insertion(&t);
        let ok = match (&zig, &ins) {
            (Ok(z), Ok(w)) => *z == cycles_as_map(&foata(w)),
            _ => false,
        };
        o.check(ok, || {
            format!("{}: zigzag {zig:?}, insertion {ins:?}", t.to_line())
        });
    }
    o
}

fn check_cn(n: usize, _: Option<usize>, _: &Options) -> Outcome {
    let mut o = Outcome::new();
    let mut images = HashSet::new();
    for t in enumerate_at_plus(n + 1) {
        match at_insertion(&t) {
            Ok(w) => {
                let mut rlmin = BTreeSet::new();
                let mut min = None;
                for &x in w.iter().rev() {
                    if min.is_none_or(|m| x < m) {
                        rlmin.insert(x);
                        min = Some(x);
                    }
                }
                let free: BTreeSet<Label> = t.free_rows().into_iter().collect();
                o.check(free == rlmin, || {
                    format!("{}: free rows {free:?} vs RL-minima {rlmin:?}", t.to_line())
                });
                let cycles = cycles_of(&cycles_as_map(&foata(&w)));
                o.check(!cycles.is_empty() || w.is_empty(), || "empty".into());
                o.check(images.insert(w.clone()), || format!("repeated image {w:?}"));
            }
            Err(e) => o.check(false, || format!("{}: {e}", t.to_line())),
        }
    }
    let f = factorial(n as u64 + 1);
    o.check(BigInt::from(images.len()) == f, || {
        format!("{} images, expected {f}", images.len())
    });
    o
}

fn check_pasep(n: usize, r: Option<usize>, _: &Options) -> Outcome {
    let r = r.unwrap();
    let mut o = Outcome::new();
    let z = pasep_z_poly(n, r);
    o.check(z.is_some(), || "alpha or beta degree exceeds n - r".into());
    let Some(z) = z else { return o };
    let samples: [(i64, i64, i64, i64); 3] = [(1, 2, 3, 5), (2, 3, 7, 4), (5, 1, 1, 6)];
    for &(an, ad, bn, bd) in &samples {
        let alpha = BigRational::new(an.into(), ad.into());
        let beta = BigRational::new(bn.into(), bd.into());
        let one = BigRational::one();
        let direct = pasep_z(n, r, &alpha, &beta, &one).unwrap();
        let from_poly = z.eval(&[alpha.clone(), beta.clone(), one.clone()]);
        o.check(direct == from_poly, || {
            format!("alpha={alpha}, beta={beta}: {direct} vs {from_poly}")
        });
        // Closed form at q = 1.
        let mut rising = BigRational::one();
        let x = alpha.recip() + beta.recip() + BigRational::from_integer(BigInt::from(r));
        for j in 0..(n - r) {
            rising *= &x + BigRational::from_integer(BigInt::from(j));
        }
        let closed = num_traits::pow(&alpha * &beta, n - r)
            * BigRational::from_integer(binomial(n as u64, r as u64))
            * rising;
        o.check(direct == closed, || {
            format!("alpha={alpha}, beta={beta}: {direct} vs closed form {closed}")
        });
    }
    o
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y_vars_poly(terms: &[([u32; 4], i64)]) -> MultiPoly {
        MultiPoly::from_counts(
            &Y_VARS,
            terms.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c))),
        )
    }

    #[test]
    fn y_two_one_by_hand() {
        // beta + beta q + 1 + y + alpha y + alpha q y
        let expected = y_vars_poly(&[
            ([0, 1, 0, 0], 1),
            ([0, 1, 1, 0], 1),
            ([0, 0, 0, 0], 1),
            ([0, 0, 0, 1], 1),
            ([1, 0, 0, 1], 1),
            ([1, 0, 1, 1], 1),
        ]);
        assert_eq!(y_from_tableaux(2, 1), expected);
        assert_eq!(y_from_assemblees(2, 1, CrossingRule::Standard), expected);
        assert_eq!(y_from_extended(2, 1), expected);
    }

    #[test]
    fn small_y_values() {
        assert_eq!(y_from_tableaux(1, 1), MultiPoly::constant(&Y_VARS, 1));
        let a = MultiPoly::var(&Y_VARS, "alpha");
        let b = MultiPoly::var(&Y_VARS, "beta");
        let y = MultiPoly::var(&Y_VARS, "y");
        // A lone row strip is a free row and a weak excedance.
        assert_eq!(y_from_tableaux(1, 0), &(&a * &y) + &b);
    }

    #[test]
    fn pasep_small_values() {
        let alpha = BigRational::new(2.into(), 3.into());
        let beta = BigRational::new(5.into(), 7.into());
        let q = BigRational::new(1.into(), 2.into());
        assert_eq!(pasep_z(1, 0, &alpha, &beta, &q).unwrap(), &alpha + &beta);
        assert_eq!(
            pasep_z(3, 3, &alpha, &beta, &q).unwrap(),
            BigRational::one()
        );
        assert_eq!(
            pasep_z(1, 0, &BigRational::zero(), &beta, &q),
            Err(VerifyError::ZeroParameter)
        );
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_objects("assemblee", 3, 2).unwrap().len(), 6);
        assert_eq!(enumerate_objects("at", 4, 0).unwrap().len(), 120);
        for n in 1..=5 {
            assert_eq!(
                enumerate_objects("assemblee", n, 1).unwrap().len() as u64,
                (1..=n as u64).product::<u64>()
            );
        }
        assert!(matches!(
            enumerate_objects("tree", 3, 1),
            Err(VerifyError::UnknownKind(_))
        ));
        assert!(matches!(
            enumerate_objects("rat", 12, 1),
            Err(VerifyError::BoundExceeded { .. })
        ));
    }

    #[test]
    fn every_identity_passes_at_small_size() {
        for entry in IDENTITIES {
            let report = check_identity(
                entry.id,
                &Options {
                    max_n: Some(3),
                    ..Options::default()
                },
            )
            .unwrap();
            assert!(report.passed(), "{}", report);
            assert!(report.instances.iter().all(|i| i.checked > 0), "{}", report);
        }
    }

    #[test]
    fn strict_upper_crossings_are_detected() {
        let opts = Options {
            max_n: Some(3),
            rule: CrossingRule::StrictUpper,
        };
        let report = check_identity("ZRPT", &opts).unwrap();
        assert!(!report.passed());
        assert!(report
            .first_counterexample()
            .unwrap()
            .contains("fcell = cro"));
    }

    #[test]
    fn unknown_identity_is_an_error() {
        assert!(matches!(
            check_identity("NOPE", &Options::default()),
            Err(VerifyError::UnknownIdentity(_))
        ));
        assert_eq!(identity("znr").unwrap().id, "ZNR");
    }
}
