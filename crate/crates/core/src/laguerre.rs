//! Marked Laguerre histories and their bijection with signed permutations.
//!
//! A marked Laguerre history is a labelled 2-Motzkin path whose steps may
//! carry a mark.  The modified form moves the second label of each up step
//! onto its matching down step and distinguishes two kinds of marks, `a`
//! and `d`.  The map [`sp_to_mlh`] reads a signed permutation from its arc
//! diagram one vertex at a time; [`mlh_to_sp`] rebuilds the diagram.
//!
//! Token formats, one step per whitespace-separated token:
//! plain histories use `U:3!`, `H:0`, `h:1`, `D:2!` (kind, label, optional
//! mark); modified histories use `U`, `U!a`, `U!d`, `U!ad`, `H:3!a`,
//! `h:1`, `D:0,2`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::assemblee::{AssembleeError, SignedPerm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaguerreError {
    #[error("invalid history: {}", format_violations(.0))]
    Invalid(Vec<(usize, String)>),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not in the signed permutation class: {0}")]
    NotSignedClass(String),
    #[error("malformed history: {0}")]
    Malformed(String),
    #[error(transparent)]
    Assemblee(#[from] AssembleeError),
}

fn format_violations(v: &[(usize, String)]) -> String {
    v.iter()
        .map(|(k, m)| format!("step {}: {m}", k + 1))
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StepKind {
    Up,
    /// Solid horizontal step.
    Solid,
    /// Dashed horizontal step.
    Dashed,
    Down,
}

impl StepKind {
    fn symbol(self) -> char {
        match self {
            StepKind::Up => 'U',
            StepKind::Solid => 'H',
            StepKind::Dashed => 'h',
            StepKind::Down => 'D',
        }
    }

    fn from_symbol(c: &str) -> Option<StepKind> {
        Some(match c {
            "U" => StepKind::Up,
            "H" => StepKind::Solid,
            "h" => StepKind::Dashed,
            "D" => StepKind::Down,
            _ => return None,
        })
    }

    fn rise(self) -> i64 {
        match self {
            StepKind::Up => 1,
            StepKind::Down => -1,
            _ => 0,
        }
    }
}

/// Starting heights of a path, or the index of the first step leaving the
/// half plane / the final height if the path does not return to zero.
fn start_heights(kinds: impl Iterator<Item = StepKind>) -> (Vec<u32>, Vec<(usize, String)>) {
    let mut h: i64 = 0;
    let mut out = Vec::new();
    let mut errors = Vec::new();
    for (k, kind) in kinds.enumerate() {
        out.push(h.max(0) as u32);
        h += kind.rise();
        if h < 0 {
            errors.push((k, "path goes below height 0".to_string()));
            h = 0;
        }
    }
    if h != 0 {
        errors.push((
            out.len().saturating_sub(1),
            format!("path ends at height {h}"),
        ));
    }
    (out, errors)
}

/// Steps of an up step starting at height `h - 1` matched to the leftmost
/// down step to its right starting at height `h`.
fn matching(kinds: &[StepKind]) -> BTreeMap<usize, usize> {
    let mut stack = Vec::new();
    let mut out = BTreeMap::new();
    for (k, &kind) in kinds.iter().enumerate() {
        match kind {
            StepKind::Up => stack.push(k),
            StepKind::Down => {
                if let Some(u) = stack.pop() {
                    out.insert(u, k);
                }
            }
            _ => {}
        }
    }
    out
}

/// A step of a marked Laguerre history.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Step {
    pub kind: StepKind,
    pub label: u32,
    pub marked: bool,
}

/// A marked Laguerre history.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mlh {
    steps: Vec<Step>,
}

impl Mlh {
    pub fn new(steps: Vec<Step>) -> Result<Mlh, LaguerreError> {
        let (heights, mut errors) = start_heights(steps.iter().map(|s| s.kind));
        for (k, (s, &h)) in steps.iter().zip(&heights).enumerate() {
            let max = match s.kind {
                StepKind::Up | StepKind::Solid => Some(h),
                StepKind::Dashed | StepKind::Down => h.checked_sub(1),
            };
            match max {
                None => errors.push((k, format!("{} step at height 0", s.kind.symbol()))),
                Some(m) if s.label > m => {
                    errors.push((k, format!("label {} exceeds {m}", s.label)))
                }
                _ => {}
            }
        }
        if let Some(first) = steps.first() {
            if !first.marked {
                errors.push((0, "first step must be marked".into()));
            }
        }
        errors.sort();
        if errors.is_empty() {
            Ok(Mlh { steps })
        } else {
            Err(LaguerreError::Invalid(errors))
        }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn heights(&self) -> Vec<u32> {
        start_heights(self.steps.iter().map(|s| s.kind)).0
    }

    pub fn marks(&self) -> usize {
        self.steps.iter().filter(|s| s.marked).count()
    }

    /// Sum of labels plus the starting heights of marked steps.
    pub fn weight_exponent(&self) -> u32 {
        let heights = self.heights();
        self.steps
            .iter()
            .zip(heights)
            .map(|(s, h)| s.label + if s.marked { h } else { 0 })
            .sum()
    }
}

impl fmt::Display for Mlh {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<String> = self
            .steps
            .iter()
            .map(|s| {
                format!(
                    "{}:{}{}",
                    s.kind.symbol(),
                    s.label,
                    if s.marked { "!" } else { "" }
                )
            })
            .collect();
        f.write_str(&tokens.join(" "))
    }
}

impl FromStr for Mlh {
    type Err = LaguerreError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let steps = s
            .split_whitespace()
            .map(|t| {
                let bad = || LaguerreError::Parse(format!("bad step token {t:?}"));
                let (kind, rest) = t.split_once(':').ok_or_else(bad)?;
                let kind = StepKind::from_symbol(kind).ok_or_else(bad)?;
                let (label, marked) = match rest.strip_suffix('!') {
                    Some(l) => (l, true),
                    None => (rest, false),
                };
                Ok(Step {
                    kind,
                    label: label.parse().map_err(|_| bad())?,
                    marked,
                })
            })
            .collect::<Result<Vec<_>, LaguerreError>>()?;
        Mlh::new(steps)
    }
}

/// A step of a modified marked Laguerre history.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StarStep {
    Up { a: bool, d: bool },
    Solid { label: u32, a: bool },
    Dashed { label: u32, a: bool },
    Down(u32, u32),
}

impl StarStep {
    pub fn kind(self) -> StepKind {
        match self {
            StarStep::Up { .. } => StepKind::Up,
            StarStep::Solid { .. } => StepKind::Solid,
            StarStep::Dashed { .. } => StepKind::Dashed,
            StarStep::Down(..) => StepKind::Down,
        }
    }

    pub fn mark_a(self) -> bool {
        match self {
            StarStep::Up { a, .. } | StarStep::Solid { a, .. } | StarStep::Dashed { a, .. } => a,
            StarStep::Down(..) => false,
        }
    }

    pub fn mark_d(self) -> bool {
        matches!(self, StarStep::Up { d: true, .. })
    }

    pub fn marks(self) -> usize {
        self.mark_a() as usize + self.mark_d() as usize
    }

    fn label_sum(self) -> u32 {
        match self {
            StarStep::Up { .. } => 0,
            StarStep::Solid { label, .. } | StarStep::Dashed { label, .. } => label,
            StarStep::Down(i, j) => i + j,
        }
    }
}

impl fmt::Display for StarStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let marks = |a: bool, d: bool| {
            let m = format!("{}{}", if a { "a" } else { "" }, if d { "d" } else { "" });
            if m.is_empty() {
                m
            } else {
                format!("!{m}")
            }
        };
        match *self {
            StarStep::Up { a, d } => write!(f, "U{}", marks(a, d)),
            StarStep::Solid { label, a } => write!(f, "H:{label}{}", marks(a, false)),
            StarStep::Dashed { label, a } => write!(f, "h:{label}{}", marks(a, false)),
            StarStep::Down(i, j) => write!(f, "D:{i},{j}"),
        }
    }
}

impl FromStr for StarStep {
    type Err = LaguerreError;

    fn from_str(t: &str) -> Result<Self, Self::Err> {
        let bad = || LaguerreError::Parse(format!("bad step token {t:?}"));
        let (body, marks) = match t.split_once('!') {
            Some((b, m)) => (b, m),
            None => (t, ""),
        };
        let (a, d) = match marks {
            "" if !t.contains('!') => (false, false),
            "a" => (true, false),
            "d" => (false, true),
            "ad" => (true, true),
            _ => return Err(bad()),
        };
        let (kind, label) = match body.split_once(':') {
            Some((k, l)) => (k, Some(l)),
            None => (body, None),
        };
        let num = |s: &str| s.parse::<u32>().map_err(|_| bad());
        match (StepKind::from_symbol(kind).ok_or_else(bad)?, label) {
            (StepKind::Up, None) => Ok(StarStep::Up { a, d }),
            (StepKind::Solid, Some(l)) if !d => Ok(StarStep::Solid { label: num(l)?, a }),
            (StepKind::Dashed, Some(l)) if !d => Ok(StarStep::Dashed { label: num(l)?, a }),
            (StepKind::Down, Some(l)) if !a && !d => {
                let (i, j) = l.split_once(',').ok_or_else(bad)?;
                Ok(StarStep::Down(num(i)?, num(j)?))
            }
            _ => Err(bad()),
        }
    }
}

/// A modified marked Laguerre history.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MlhStar {
    steps: Vec<StarStep>,
}

impl MlhStar {
    pub fn new(steps: Vec<StarStep>) -> Result<MlhStar, LaguerreError> {
        let (heights, mut errors) = start_heights(steps.iter().map(|s| s.kind()));
        for (k, (s, &h)) in steps.iter().zip(&heights).enumerate() {
            let check = |label: u32, max: Option<u32>| match max {
                None => Some("step with empty label range at height 0".to_string()),
                Some(m) if label > m => Some(format!("label {label} exceeds {m}")),
                _ => None,
            };
            let problem = match *s {
                StarStep::Up { .. } => None,
                StarStep::Solid { label, .. } => check(label, Some(h)),
                StarStep::Dashed { label, .. } => check(label, h.checked_sub(1)),
                StarStep::Down(i, j) => check(i.max(j), h.checked_sub(1)),
            };
            if let Some(p) = problem {
                errors.push((k, p));
            }
        }
        if let Some(first) = steps.first() {
            if !first.mark_a() {
                errors.push((0, "first step must carry mark a".into()));
            }
        }
        errors.sort();
        if errors.is_empty() {
            Ok(MlhStar { steps })
        } else {
            Err(LaguerreError::Invalid(errors))
        }
    }

    pub fn steps(&self) -> &[StarStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn heights(&self) -> Vec<u32> {
        start_heights(self.steps.iter().map(|s| s.kind())).0
    }

    /// Total number of marks, counting `a` and `d` separately.
    pub fn marks(&self) -> usize {
        self.steps.iter().map(|s| s.marks()).sum()
    }

    /// Sum of labels, plus the starting height once per mark, plus one per
    /// `d` mark.
    pub fn weight_exponent(&self) -> u32 {
        self.steps
            .iter()
            .zip(self.heights())
            .map(|(s, h)| s.label_sum() + h * s.marks() as u32 + s.mark_d() as u32)
            .sum()
    }
}

impl fmt::Display for MlhStar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<String> = self.steps.iter().map(|s| s.to_string()).collect();
        f.write_str(&tokens.join(" "))
    }
}

impl FromStr for MlhStar {
    type Err = LaguerreError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let steps = s
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<_>, _>>()?;
        MlhStar::new(steps)
    }
}

/// Splits each down-step label pair between the down step and its matching
/// up step, and moves `d` marks from up steps to their matching down steps.
pub fn star_to_plain(h: &MlhStar) -> Mlh {
    let kinds: Vec<StepKind> = h.steps.iter().map(|s| s.kind()).collect();
    let pairs = matching(&kinds);
    let mut steps: Vec<Step> = h
        .steps
        .iter()
        .map(|s| match *s {
            StarStep::Up { a, .. } => Step {
                kind: StepKind::Up,
                label: 0,
                marked: a,
            },
            StarStep::Solid { label, a } => Step {
                kind: StepKind::Solid,
                label,
                marked: a,
            },
            StarStep::Dashed { label, a } => Step {
                kind: StepKind::Dashed,
                label,
                marked: a,
            },
            StarStep::Down(i, _) => Step {
                kind: StepKind::Down,
                label: i,
                marked: false,
            },
        })
        .collect();
    for (&u, &d) in &pairs {
        if let (StarStep::Up { d: dm, .. }, StarStep::Down(_, j)) = (h.steps[u], h.steps[d]) {
            steps[u].label = j;
            steps[d].marked = dm;
        }
    }
    Mlh::new(steps).expect("the pairing preserves validity")
}

/// Inverse of [`star_to_plain`].
pub fn plain_to_star(h: &Mlh) -> MlhStar {
    let kinds: Vec<StepKind> = h.steps.iter().map(|s| s.kind).collect();
    let pairs = matching(&kinds);
    let mut steps: Vec<StarStep> = h
        .steps
        .iter()
        .map(|s| match s.kind {
            StepKind::Up => StarStep::Up {
                a: s.marked,
                d: false,
            },
            StepKind::Solid => StarStep::Solid {
                label: s.label,
                a: s.marked,
            },
            StepKind::Dashed => StarStep::Dashed {
                label: s.label,
                a: s.marked,
            },
            StepKind::Down => StarStep::Down(s.label, 0),
        })
        .collect();
    for (&u, &d) in &pairs {
        steps[u] = StarStep::Up {
            a: h.steps[u].marked,
            d: h.steps[d].marked,
        };
        steps[d] = StarStep::Down(h.steps[d].label, h.steps[u].label);
    }
    MlhStar::new(steps).expect("the pairing preserves validity")
}

fn require_sp(tau: &SignedPerm) -> Result<usize, LaguerreError> {
    let n = tau.len();
    if tau
        .domain()
        .iter()
        .enumerate()
        .any(|(k, &i)| i != k as u32 + 1)
    {
        return Err(LaguerreError::NotSignedClass("domain must be 1..n".into()));
    }
    if n > 0 && tau.image(1) > 0 {
        return Err(LaguerreError::NotSignedClass(
            "1 must have a negative image".into(),
        ));
    }
    Ok(n)
}

/// The modified marked Laguerre history of a signed permutation whose first
/// entry is negative.  Step `i` is read off the arcs at vertex `i`; its
/// labels are the crossing counts indexed by `i`.
pub fn sp_to_mlh(tau: &SignedPerm) -> Result<MlhStar, LaguerreError> {
    let n = require_sp(tau)?;
    let profile = tau.crossings();
    let upper = |i: u32| profile.upper_by_b.get(&(i as i64)).copied().unwrap_or(0) as u32;
    let lower = |i: u32| profile.lower_by_b.get(&(i as i64)).copied().unwrap_or(0) as u32;
    let mut steps = Vec::with_capacity(n);
    for i in 1..=n as u32 {
        let img = tau.image(i);
        let pre = tau.preimage(i);
        let (out, inc) = (img.unsigned_abs() as u32, pre.unsigned_abs() as u32);
        // Open arcs at `i` go right; the count of open upper arcs before `i`.
        let h = (1..i).filter(|&j| tau.abs_image(j) >= i).count() as u32;
        let step = if out == i {
            if img > 0 {
                StarStep::Solid { label: 0, a: false }
            } else {
                StarStep::Solid { label: h, a: true }
            }
        } else if out > i && inc > i {
            StarStep::Up {
                a: img < 0,
                d: pre < 0,
            }
        } else if inc < i && i < out {
            StarStep::Solid {
                label: upper(i),
                a: img < 0,
            }
        } else if out < i && i < inc {
            StarStep::Dashed {
                label: lower(i),
                a: pre < 0,
            }
        } else {
            StarStep::Down(upper(i), lower(i))
        };
        steps.push(step);
    }
    MlhStar::new(steps).map_err(|e| LaguerreError::Malformed(format!("internal: {e}")))
}

/// Partial arc diagram built left to right by [`mlh_to_sp`].
struct Partial {
    open_upper: Vec<i64>,
    open_lower: Vec<i64>,
    next_negative: i64,
    /// Image of each positive vertex reached by a closed arc.
    image: BTreeMap<i64, i64>,
    /// For each negative vertex, the right ends of its lower and upper arc.
    neg_lower: BTreeMap<i64, i64>,
    neg_upper: BTreeMap<i64, i64>,
}

impl Partial {
    fn take_negative(&mut self) -> i64 {
        let m = self.next_negative;
        self.next_negative -= 1;
        m
    }

    fn close_upper(&mut self, a: i64, i: i64) {
        if a > 0 {
            self.image.insert(a, i);
        } else {
            self.neg_upper.insert(a, i);
        }
    }

    fn close_lower(&mut self, b: i64, i: i64) {
        if b > 0 {
            self.image.insert(i, b);
        } else {
            self.neg_lower.insert(b, i);
        }
    }
}

/// The open arc among `open` (excluding the arc itself) with exactly `k`
/// other open left endpoints to its right, where `extra` further crossing
/// arcs are added by the current step.  The count decreases strictly with
/// the endpoint, so the choice is unique.
fn choose(open: &[i64], k: u32, extra: u32, step: usize) -> Result<i64, LaguerreError> {
    let fits: Vec<i64> = open
        .iter()
        .copied()
        .filter(|&a| open.iter().filter(|&&c| c > a).count() as u32 + extra == k)
        .collect();
    match fits.as_slice() {
        [a] => Ok(*a),
        [] => Err(LaguerreError::Malformed(format!(
            "step {}: no arc gives count {k}",
            step + 1
        ))),
        _ => unreachable!("open arcs have distinct endpoints"),
    }
}

fn remove(v: &mut Vec<i64>, x: i64) {
    let p = v.iter().position(|&y| y == x).expect("open arc present");
    v.remove(p);
}

/// Inverse of [`sp_to_mlh`]: rebuilds the arc diagram vertex by vertex,
/// taking fresh negative vertices from right to left.
pub fn mlh_to_sp(h: &MlhStar) -> Result<SignedPerm, LaguerreError> {
    let n = h.len();
    let mut st = Partial {
        open_upper: Vec::new(),
        open_lower: Vec::new(),
        next_negative: -1,
        image: BTreeMap::new(),
        neg_lower: BTreeMap::new(),
        neg_upper: BTreeMap::new(),
    };
    for (k, (&step, height)) in h.steps.iter().zip(h.heights()).enumerate() {
        let i = k as i64 + 1;
        debug_assert_eq!(st.open_upper.len(), height as usize);
        match step {
            StarStep::Up { a, d } => {
                let m = if a { Some(st.take_negative()) } else { None };
                let l = if d { Some(st.take_negative()) } else { None };
                match m {
                    Some(m) => {
                        st.close_lower(m, i);
                        st.open_upper.push(m);
                    }
                    None => st.open_upper.push(i),
                }
                match l {
                    Some(l) => {
                        st.close_upper(l, i);
                        st.open_lower.push(l);
                    }
                    None => st.open_lower.push(i),
                }
            }
            StarStep::Solid { label, a: false } if label == 0 => {
                st.image.insert(i, i);
            }
            StarStep::Solid { label, a: true } if label == height => {
                let m = st.take_negative();
                st.close_lower(m, i);
                st.close_upper(m, i);
            }
            StarStep::Solid { label, a } => {
                let extra = if a { 0 } else { 1 };
                let x = choose(&st.open_upper, label, extra, k)?;
                remove(&mut st.open_upper, x);
                st.close_upper(x, i);
                if a {
                    let m = st.take_negative();
                    st.close_lower(m, i);
                    st.open_upper.push(m);
                } else {
                    st.open_upper.push(i);
                }
            }
            StarStep::Dashed { label, a } => {
                let b = choose(&st.open_lower, label, 0, k)?;
                remove(&mut st.open_lower, b);
                st.close_lower(b, i);
                if a {
                    let m = st.take_negative();
                    st.close_upper(m, i);
                    st.open_lower.push(m);
                } else {
                    st.open_lower.push(i);
                }
            }
            StarStep::Down(ku, kl) => {
                let x = choose(&st.open_upper, ku, 0, k)?;
                let b = choose(&st.open_lower, kl, 0, k)?;
                remove(&mut st.open_upper, x);
                remove(&mut st.open_lower, b);
                st.close_upper(x, i);
                st.close_lower(b, i);
            }
        }
    }
    for (&m, &d) in &st.neg_lower {
        let e = *st
            .neg_upper
            .get(&m)
            .ok_or_else(|| LaguerreError::Malformed("negative vertex without upper arc".into()))?;
        st.image.insert(d, -e);
    }
    if st.image.len() != n {
        return Err(LaguerreError::Malformed("arcs do not close".into()));
    }
    Ok(SignedPerm::from_values(st.image.into_values().collect())?)
}

/// Number of inversions of a permutation given in one-line notation.
pub fn inversions(sigma: &[u32]) -> usize {
    let mut c = 0;
    for a in 0..sigma.len() {
        for b in a + 1..sigma.len() {
            if sigma[a] > sigma[b] {
                c += 1;
            }
        }
    }
    c
}

/// Splits a signed permutation into one in the assemblée class and the
/// permutation `sigma` of `1..=r` recording the order of the negated values:
/// with negative positions `a_1 < ... < a_r` and negated absolute values
/// `b_1 < ... < b_r`, `nu(a_j) = -b_{sigma(j)}` while `tau(a_j) = -b_j`.
pub fn rho(nu: &SignedPerm) -> Result<(SignedPerm, Vec<u32>), LaguerreError> {
    require_sp(nu)?;
    let a = nu.neg();
    let mut b: Vec<u32> = a.iter().map(|&x| nu.abs_image(x)).collect();
    b.sort_unstable();
    let sigma: Vec<u32> = a
        .iter()
        .map(|&x| b.binary_search(&nu.abs_image(x)).unwrap() as u32 + 1)
        .collect();
    let mut values = nu.values().to_vec();
    for (j, &x) in a.iter().enumerate() {
        values[x as usize - 1] = -(b[j] as i64);
    }
    Ok((SignedPerm::from_values(values)?, sigma))
}

/// Inverse of [`rho`].
pub fn rho_inverse(tau: &SignedPerm, sigma: &[u32]) -> Result<SignedPerm, LaguerreError> {
    tau.check_assemblee()?;
    let a = tau.neg();
    let mut check: Vec<u32> = sigma.to_vec();
    check.sort_unstable();
    if check != (1..=a.len() as u32).collect::<Vec<_>>() {
        return Err(LaguerreError::Malformed(format!(
            "{sigma:?} is not a permutation of 1..{}",
            a.len()
        )));
    }
    let b: Vec<u32> = a.iter().map(|&x| tau.abs_image(x)).collect();
    let mut values = tau.values().to_vec();
    for (j, &x) in a.iter().enumerate() {
        values[x as usize - 1] = -(b[sigma[j] as usize - 1] as i64);
    }
    Ok(SignedPerm::from_values(values)?)
}

/// Calls `visit` on every marked Laguerre history of length `n` with `r`
/// marks, in depth-first order with step kinds ordered U, H, h, D and
/// labels increasing.
pub fn for_each_mlh(n: usize, r: usize, mut visit: impl FnMut(&Mlh)) {
    fn go(
        n: usize,
        r: usize,
        h: u32,
        marks: usize,
        acc: &mut Vec<Step>,
        visit: &mut dyn FnMut(&Mlh),
    ) {
        let k = acc.len();
        if k == n {
            if h == 0 && marks == r {
                visit(&Mlh { steps: acc.clone() });
            }
            return;
        }
        if h as usize > n - k || marks > r || marks + (n - k) < r {
            return;
        }
        for kind in [
            StepKind::Up,
            StepKind::Solid,
            StepKind::Dashed,
            StepKind::Down,
        ] {
            let labels = match kind {
                StepKind::Up | StepKind::Solid => h + 1,
                _ => h,
            };
            let next_h = (h as i64 + kind.rise()) as u32;
            for label in 0..labels {
                for marked in [false, true] {
                    if k == 0 && !marked {
                        continue;
                    }
                    acc.push(Step {
                        kind,
                        label,
                        marked,
                    });
                    go(n, r, next_h, marks + marked as usize, acc, visit);
                    acc.pop();
                }
            }
        }
    }
    go(n, r, 0, 0, &mut Vec::new(), &mut visit);
}

pub fn enumerate_mlh(n: usize, r: usize) -> Vec<Mlh> {
    let mut out = Vec::new();
    for_each_mlh(n, r, |h| out.push(h.clone()));
    out
}

/// Calls `visit` on every modified marked Laguerre history of length `n`
/// with `r` marks.
pub fn for_each_mlh_star(n: usize, r: usize, mut visit: impl FnMut(&MlhStar)) {
    fn go(
        n: usize,
        r: usize,
        h: u32,
        marks: usize,
        acc: &mut Vec<StarStep>,
        visit: &mut dyn FnMut(&MlhStar),
    ) {
        let k = acc.len();
        if k == n {
            if h == 0 && marks == r {
                visit(&MlhStar { steps: acc.clone() });
            }
            return;
        }
        if h as usize > n - k || marks > r {
            return;
        }
        let mut options = Vec::new();
        for (a, d) in [(false, false), (true, false), (false, true), (true, true)] {
            options.push(StarStep::Up { a, d });
        }
        for label in 0..=h {
            options.push(StarStep::Solid { label, a: false });
            options.push(StarStep::Solid { label, a: true });
        }
        for label in 0..h {
            options.push(StarStep::Dashed { label, a: false });
            options.push(StarStep::Dashed { label, a: true });
        }
        for i in 0..h {
            for j in 0..h {
                options.push(StarStep::Down(i, j));
            }
        }
        for s in options {
            if k == 0 && !s.mark_a() {
                continue;
            }
            let next_h = (h as i64 + s.kind().rise()) as u32;
            acc.push(s);
            go(n, r, next_h, marks + s.marks(), acc, visit);
            acc.pop();
        }
    }
    go(n, r, 0, 0, &mut Vec::new(), &mut visit);
}

pub fn enumerate_mlh_star(n: usize, r: usize) -> Vec<MlhStar> {
    let mut out = Vec::new();
    for_each_mlh_star(n, r, |h| out.push(h.clone()));
    out
}
