//! Assemblées, ε-words, signed permutations and their arc diagrams.
//!
//! An assemblée is a set of disjoint nonempty sequences (blocks).  Three
//! interchangeable encodings are provided:
//!
//! * the canonical word `f` (blocks sorted by head and concatenated) with the
//!   set of heads;
//! * the ε-word, which threads auxiliary separators `e1 < e2 < ...` between
//!   the blocks;
//! * the signed permutation obtained from `f` by negating every head.
//!
//! Signed permutations carry arc diagrams, whose crossings give the `q`
//! statistic, together with the shape word and the weak excedance and special
//! record statistics.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::shapes::{Label, Letter, ShapeWord};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AssembleeError {
    #[error("blocks are not disjoint or contain an empty block")]
    BadBlocks,
    #[error("the ground set does not contain 1")]
    MissingOne,
    #[error("malformed e-word: {0}")]
    BadEpsWord(String),
    #[error("not a signed permutation: {0}")]
    NotSignedPerm(String),
    #[error("not in the assemblée class: {0}")]
    NotAssemblee(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// A set of disjoint blocks, stored sorted by head.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Assemblee {
    blocks: Vec<Vec<u32>>,
}

impl Assemblee {
    pub fn new(mut blocks: Vec<Vec<u32>>) -> Result<Self, AssembleeError> {
        if blocks.iter().any(|b| b.is_empty()) {
            return Err(AssembleeError::BadBlocks);
        }
        let mut seen = BTreeSet::new();
        for &x in blocks.iter().flatten() {
            if x == 0 || !seen.insert(x) {
                return Err(AssembleeError::BadBlocks);
            }
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(Assemblee { blocks })
    }

    /// Rebuilds an assemblée from its canonical word and its heads.
    pub fn from_canonical(f: &[u32], heads: &BTreeSet<u32>) -> Result<Self, AssembleeError> {
        if !f.is_empty() && !heads.contains(&f[0]) {
            return Err(AssembleeError::BadBlocks);
        }
        let mut blocks: Vec<Vec<u32>> = Vec::new();
        for &x in f {
            if heads.contains(&x) {
                blocks.push(Vec::new());
            }
            blocks.last_mut().unwrap().push(x);
        }
        let a = Assemblee::new(blocks)?;
        if a.canonical().0 != f || a.blocks.len() != heads.len() {
            return Err(AssembleeError::BadBlocks);
        }
        Ok(a)
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn ground_set(&self) -> Vec<u32> {
        let mut g: Vec<u32> = self.blocks.iter().flatten().copied().collect();
        g.sort_unstable();
        g
    }

    pub fn heads(&self) -> Vec<u32> {
        self.blocks.iter().map(|b| b[0]).collect()
    }

    /// The canonical word and the set of heads.
    pub fn canonical(&self) -> (Vec<u32>, BTreeSet<u32>) {
        (
            self.blocks.iter().flatten().copied().collect(),
            self.heads().into_iter().collect(),
        )
    }

    /// The ε-word: the block containing 1 is cut as `C1 1 C2`; the other
    /// blocks are sorted by their last element; the result is
    /// `C1 1 e1 B2 e2 ... Bk ek C2`.
    pub fn eps_word(&self) -> Result<Vec<Label>, AssembleeError> {
        let first = self
            .blocks
            .iter()
            .position(|b| b.contains(&1))
            .ok_or(AssembleeError::MissingOne)?;
        let b1 = &self.blocks[first];
        let cut = b1.iter().position(|&x| x == 1).unwrap() + 1;
        let mut rest: Vec<&Vec<u32>> = self
            .blocks
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != first)
            .map(|(_, b)| b)
            .collect();
        rest.sort_by_key(|b| *b.last().unwrap());
        let mut out: Vec<Label> = b1[..cut].iter().map(|&x| Label::Num(x)).collect();
        out.push(Label::Eps(1));
        for (k, b) in rest.iter().enumerate() {
            out.extend(b.iter().map(|&x| Label::Num(x)));
            out.push(Label::Eps(k as u32 + 2));
        }
        out.extend(b1[cut..].iter().map(|&x| Label::Num(x)));
        Ok(out)
    }

    /// Inverse of [`Assemblee::eps_word`].
    pub fn from_eps_word(word: &[Label]) -> Result<Self, AssembleeError> {
        let bad = |m: &str| AssembleeError::BadEpsWord(m.to_string());
        let eps: Vec<usize> = word
            .iter()
            .enumerate()
            .filter(|(_, l)| l.is_eps())
            .map(|(p, _)| p)
            .collect();
        if eps.is_empty() {
            return Err(bad("no e-letters"));
        }
        for (k, &p) in eps.iter().enumerate() {
            if word[p] != Label::Eps(k as u32 + 1) {
                return Err(bad("e-letters must appear as e1, e2, ... in order"));
            }
            if p == 0 || word[p - 1].is_eps() {
                return Err(bad("every e-letter must follow an integer"));
            }
        }
        let d: Vec<Label> = eps.iter().map(|&p| word[p - 1]).collect();
        if d[0] != Label::Num(1) {
            return Err(bad("1 must come right before e1"));
        }
        if d.windows(2).any(|w| w[0] >= w[1]) {
            return Err(bad("integers before the e-letters must increase"));
        }
        let num = |s: &[Label]| -> Vec<u32> { s.iter().filter_map(|l| l.num()).collect() };
        let mut b1 = num(&word[..eps[0]]);
        b1.extend(num(&word[eps[eps.len() - 1] + 1..]));
        let mut blocks = vec![b1];
        for w in eps.windows(2) {
            blocks.push(num(&word[w[0] + 1..w[1]]));
        }
        let a = Assemblee::new(blocks).map_err(|_| bad("repeated integer"))?;
        if a.eps_word()? != word {
            return Err(bad("not the e-word of an assemblée"));
        }
        Ok(a)
    }

    /// The word `u = f^{-1}` with `e_i` inserted right after position
    /// `h_i`, the i-th head.  The ground set must be `1..=n`.
    pub fn iota(&self) -> Result<Vec<Label>, AssembleeError> {
        let (f, heads) = self.canonical();
        let n = f.len();
        if self.ground_set() != (1..=n as u32).collect::<Vec<_>>() {
            return Err(AssembleeError::NotAssemblee(
                "ground set must be 1..n".into(),
            ));
        }
        let mut u = vec![0u32; n];
        for (p, &v) in f.iter().enumerate() {
            u[v as usize - 1] = p as u32 + 1;
        }
        let mut out = Vec::with_capacity(n + heads.len());
        let mut k = 0;
        for (p, &x) in u.iter().enumerate() {
            out.push(Label::Num(x));
            if heads.contains(&(p as u32 + 1)) {
                k += 1;
                out.push(Label::Eps(k));
            }
        }
        Ok(out)
    }

    /// Inverse of [`Assemblee::iota`].
    pub fn from_iota(word: &[Label]) -> Result<Self, AssembleeError> {
        let bad = |m: &str| AssembleeError::BadEpsWord(m.to_string());
        let mut u = Vec::new();
        let mut heads = BTreeSet::new();
        let mut k = 0;
        for &l in word {
            match l {
                Label::Num(x) => u.push(x),
                Label::Eps(e) => {
                    k += 1;
                    if e != k || u.is_empty() {
                        return Err(bad("e-letters out of order"));
                    }
                    heads.insert(u.len() as u32);
                }
            }
        }
        let n = u.len();
        let mut f = vec![0u32; n];
        for (p, &x) in u.iter().enumerate() {
            if x == 0 || x as usize > n || f[x as usize - 1] != 0 {
                return Err(bad("integers must form a permutation of 1..n"));
            }
            f[x as usize - 1] = p as u32 + 1;
        }
        let a = Assemblee::from_canonical(&f, &heads).map_err(|_| bad("heads out of order"))?;
        if a.iota()? != word {
            return Err(bad("not an image of iota"));
        }
        Ok(a)
    }

    /// The signed permutation obtained from the canonical word by negating
    /// every head.
    pub fn to_signed(&self) -> SignedPerm {
        let (f, heads) = self.canonical();
        let values = f
            .iter()
            .map(|&x| {
                if heads.contains(&x) {
                    -(x as i64)
                } else {
                    x as i64
                }
            })
            .collect();
        SignedPerm {
            domain: self.ground_set(),
            values,
        }
    }

    /// Inverse of [`Assemblee::to_signed`]; checks class membership.
    pub fn from_signed(tau: &SignedPerm) -> Result<Self, AssembleeError> {
        tau.check_assemblee()?;
        let mut blocks: Vec<Vec<u32>> = Vec::new();
        for &v in &tau.values {
            if v < 0 {
                blocks.push(Vec::new());
            }
            blocks.last_mut().unwrap().push(v.unsigned_abs() as u32);
        }
        Assemblee::new(blocks)
    }
}

impl fmt::Display for Assemblee {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            let s: Vec<String> = b.iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", s.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for Assemblee {
    type Err = AssembleeError;

    /// Parses `[3 5 2 9][6 4 7][8 1]`; blocks may come in any order.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || AssembleeError::Parse(format!("bad assemblée {s:?}"));
        let mut blocks = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('[').ok_or_else(bad)?;
            let end = body.find(']').ok_or_else(bad)?;
            let block = body[..end]
                .split([' ', ','])
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<u32>().map_err(|_| bad()))
                .collect::<Result<Vec<_>, _>>()?;
            blocks.push(block);
            rest = body[end + 1..].trim_start();
        }
        Assemblee::new(blocks)
    }
}

/// Formats a word of labels separated by spaces.
pub fn format_labels(word: &[Label]) -> String {
    word.iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Formats cycles as `(11,8,1,e1)(4,3)`.
pub fn format_cycles<T: fmt::Display>(cycles: &[Vec<T>]) -> String {
    cycles
        .iter()
        .map(|c| {
            format!(
                "({})",
                c.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        })
        .collect()
}

/// Parses cycles written as `(11,8,1,e1)(4,3)`.
pub fn parse_cycles(s: &str) -> Result<Vec<Vec<Label>>, AssembleeError> {
    let bad = || AssembleeError::Parse(format!("bad cycles {s:?}"));
    let mut out = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(bad)?;
        let end = body.find(')').ok_or_else(bad)?;
        let cycle = body[..end]
            .split([',', ' '])
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<Label>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        if cycle.is_empty() {
            return Err(bad());
        }
        out.push(cycle);
        rest = body[end + 1..].trim_start();
    }
    Ok(out)
}

/// Cuts a word right after each of its right-to-left minima; each piece is
/// read as a cycle.
pub fn foata<T: Ord + Copy>(word: &[T]) -> Vec<Vec<T>> {
    let mut is_min = vec![false; word.len()];
    let mut best: Option<T> = None;
    for (p, &x) in word.iter().enumerate().rev() {
        if best.is_none_or(|b| x < b) {
            is_min[p] = true;
            best = Some(x);
        }
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    for (p, &x) in word.iter().enumerate() {
        cur.push(x);
        if is_min[p] {
            out.push(std::mem::take(&mut cur));
        }
    }
    out
}

/// Writes each cycle ending with its minimum, sorts cycles by minimum and
/// concatenates them.
pub fn foata_inv<T: Ord + Copy>(cycles: &[Vec<T>]) -> Vec<T> {
    let mut normal = normalize_cycles(cycles);
    normal.sort_by_key(|c| *c.last().unwrap());
    normal.into_iter().flatten().collect()
}

/// Rotates each cycle so that it ends with its minimum and orders the cycles
/// by minimum.
pub fn normalize_cycles<T: Ord + Copy>(cycles: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = cycles
        .iter()
        .filter(|c| !c.is_empty())
        .map(|c| {
            let m = c.iter().enumerate().min_by_key(|(_, &x)| x).unwrap().0;
            let mut r = c[m + 1..].to_vec();
            r.extend_from_slice(&c[..=m]);
            r
        })
        .collect();
    out.sort_by_key(|c| *c.last().unwrap());
    out
}

/// The cycles of a permutation given as a map, in normalized form.
pub fn cycles_of<T: Ord + Copy>(map: &BTreeMap<T, T>) -> Vec<Vec<T>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &start in map.keys() {
        if seen.contains(&start) {
            continue;
        }
        let mut c = vec![start];
        seen.insert(start);
        let mut x = map[&start];
        while x != start {
            seen.insert(x);
            c.push(x);
            x = map[&x];
        }
        out.push(c);
    }
    normalize_cycles(&out)
}

/// Record statistics of a word of distinct entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WordStats {
    pub inv: usize,
    /// Values that are right-to-left minima, in increasing order.
    pub rl_min: Vec<u32>,
    /// Values that are right-to-left maxima, in increasing order.
    pub rl_max: Vec<u32>,
    /// Values `v` such that `v + 1` appears to the left of `v`.
    pub ides: Vec<u32>,
}

pub fn word_stats(v: &[u32]) -> WordStats {
    let mut inv = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            inv += usize::from(v[i] > v[j]);
        }
    }
    let mut rl_min = Vec::new();
    let mut rl_max = Vec::new();
    let (mut lo, mut hi) = (u32::MAX, 0);
    for &x in v.iter().rev() {
        if x < lo {
            lo = x;
            rl_min.push(x);
        }
        if x > hi {
            hi = x;
            rl_max.push(x);
        }
    }
    rl_min.sort_unstable();
    rl_max.sort_unstable();
    let pos: BTreeMap<u32, usize> = v.iter().enumerate().map(|(p, &x)| (x, p)).collect();
    let ides = pos
        .iter()
        .filter(|&(&x, &p)| pos.get(&(x + 1)).is_some_and(|&q| q < p))
        .map(|(&x, _)| x)
        .collect();
    WordStats {
        inv,
        rl_min,
        rl_max,
        ides,
    }
}

/// A signed permutation of a finite set of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    domain: Vec<u32>,
    values: Vec<i64>,
}

/// Which middle inequality upper crossings use; `StrictUpper` exists only to
/// demonstrate that the tests detect a change of convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrossingRule {
    Standard,
    StrictUpper,
}

/// An arc diagram on vertices `-r..-1` followed by the domain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArcDiagram {
    pub negatives: usize,
    pub domain: Vec<u32>,
    /// Upper arcs `(a, b)` with `a <= b`; `a == b` is a loop.
    pub upper: Vec<(i64, i64)>,
    /// Lower arcs `(a, b)` with `a < b`.
    pub lower: Vec<(i64, i64)>,
    /// For each negative vertex `-j`, the pair `(d_j, |tau(d_j)|)` joined
    /// through it.
    pub spirals: Vec<(i64, i64)>,
}

/// Crossing counts indexed by the right endpoint `b` of the first arc.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossingProfile {
    pub upper_by_b: BTreeMap<i64, usize>,
    pub lower_by_b: BTreeMap<i64, usize>,
    pub upper: usize,
    pub lower: usize,
    pub total: usize,
}

impl CrossingProfile {
    /// Upper counts for the listed vertices, zero where absent.
    pub fn upper_vector(&self, domain: &[u32]) -> Vec<usize> {
        domain
            .iter()
            .map(|&b| self.upper_by_b.get(&(b as i64)).copied().unwrap_or(0))
            .collect()
    }

    pub fn lower_vector(&self, domain: &[u32]) -> Vec<usize> {
        domain
            .iter()
            .map(|&b| self.lower_by_b.get(&(b as i64)).copied().unwrap_or(0))
            .collect()
    }
}

/// Permutation-side statistics of a signed permutation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignedStats {
    pub shape: String,
    pub sinv: usize,
    pub wex: usize,
    pub neg: Vec<u32>,
    pub lrmax_star: usize,
    pub rlmin_star: usize,
    pub cro: usize,
}

impl SignedPerm {
    pub fn new(domain: Vec<u32>, values: Vec<i64>) -> Result<Self, AssembleeError> {
        let bad = |m: &str| AssembleeError::NotSignedPerm(m.to_string());
        if domain.len() != values.len() {
            return Err(bad("domain and values differ in length"));
        }
        if domain.windows(2).any(|w| w[0] >= w[1]) || domain.first() == Some(&0) {
            return Err(bad("domain must be increasing positive integers"));
        }
        let mut abs: Vec<u32> = values.iter().map(|v| v.unsigned_abs() as u32).collect();
        abs.sort_unstable();
        if abs != domain || values.contains(&0) {
            return Err(bad("absolute values must permute the domain"));
        }
        Ok(SignedPerm { domain, values })
    }

    /// A signed permutation of `1..=n` from its one-line values.
    pub fn from_values(values: Vec<i64>) -> Result<Self, AssembleeError> {
        let domain = (1..=values.len() as u32).collect();
        SignedPerm::new(domain, values)
    }

    pub fn domain(&self) -> &[u32] {
        &self.domain
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    fn pos(&self, i: u32) -> usize {
        self.domain
            .binary_search(&i)
            .expect("element of the domain")
    }

    /// `tau(i)` for `i` in the domain.
    pub fn image(&self, i: u32) -> i64 {
        self.values[self.pos(i)]
    }

    pub fn abs_image(&self, i: u32) -> u32 {
        self.image(i).unsigned_abs() as u32
    }

    /// `tau^{-1}(i)` as a signed value: `-k` when `tau(k) = -i`.
    pub fn preimage(&self, i: u32) -> i64 {
        let p = self
            .values
            .iter()
            .position(|v| v.unsigned_abs() as u32 == i)
            .expect("element of the domain");
        let k = self.domain[p] as i64;
        if self.values[p] < 0 {
            -k
        } else {
            k
        }
    }

    /// Positions with a negative image, increasing.
    pub fn neg(&self) -> Vec<u32> {
        self.domain
            .iter()
            .zip(&self.values)
            .filter(|(_, &v)| v < 0)
            .map(|(&i, _)| i)
            .collect()
    }

    /// Checks the assemblée class: the least element is negative and the
    /// absolute images of negative positions increase.
    pub fn check_assemblee(&self) -> Result<(), AssembleeError> {
        let neg = self.neg();
        if self.domain.is_empty() {
            return Ok(());
        }
        if neg.first() != self.domain.first() {
            return Err(AssembleeError::NotAssemblee(
                "the least element must have a negative image".into(),
            ));
        }
        let imgs: Vec<u32> = neg.iter().map(|&d| self.abs_image(d)).collect();
        if imgs.windows(2).any(|w| w[0] >= w[1]) {
            return Err(AssembleeError::NotAssemblee(
                "absolute images of negative positions must increase".into(),
            ));
        }
        Ok(())
    }

    pub fn is_assemblee(&self) -> bool {
        self.check_assemblee().is_ok()
    }

    /// Negative positions sorted by the order comparing
    /// `min(i, |tau(i)|)`, where on a tie the element equal to that minimum
    /// as a position comes first.
    pub fn neg_order(&self) -> Vec<u32> {
        let mut neg = self.neg();
        neg.sort_by(|&i, &j| {
            let (ki, kj) = (i.min(self.abs_image(i)), j.min(self.abs_image(j)));
            ki.cmp(&kj).then_with(|| (ki != i).cmp(&(kj != j)))
        });
        neg
    }

    pub fn arc_diagram(&self) -> ArcDiagram {
        let order = self.neg_order();
        let rank: BTreeMap<u32, i64> = order
            .iter()
            .enumerate()
            .map(|(k, &d)| (d, k as i64 + 1))
            .collect();
        let mut upper = Vec::new();
        let mut lower = Vec::new();
        let mut spirals = vec![(0, 0); order.len()];
        for (&i, &v) in self.domain.iter().zip(&self.values) {
            let i = i as i64;
            if v >= i {
                upper.push((i, v));
            } else if v > 0 {
                lower.push((v, i));
            } else {
                let j = rank[&(i as u32)];
                lower.push((-j, i));
                upper.push((-j, -v));
                spirals[j as usize - 1] = (i, -v);
            }
        }
        upper.sort_unstable();
        lower.sort_unstable();
        ArcDiagram {
            negatives: order.len(),
            domain: self.domain.clone(),
            upper,
            lower,
            spirals,
        }
    }

    pub fn crossings(&self) -> CrossingProfile {
        self.crossings_with(CrossingRule::Standard)
    }

    pub fn crossings_with(&self, rule: CrossingRule) -> CrossingProfile {
        self.arc_diagram().crossings_with(rule)
    }

    pub fn cro(&self) -> usize {
        self.crossings().total
    }

    /// The shape word: `2` for a weak excedance, `1` for a negative image,
    /// `0` otherwise; labelled by the domain.
    pub fn shape(&self) -> ShapeWord {
        let letters = self
            .domain
            .iter()
            .zip(&self.values)
            .map(|(&i, &v)| {
                if v >= i as i64 {
                    Letter::Row
                } else if v < 0 {
                    Letter::Diagonal
                } else {
                    Letter::Column
                }
            })
            .collect();
        let labels = self.domain.iter().map(|&i| Label::Num(i)).collect();
        ShapeWord::new(letters, labels).expect("domain is increasing")
    }

    pub fn wex(&self) -> usize {
        self.domain
            .iter()
            .zip(&self.values)
            .filter(|(&i, &v)| v >= i as i64)
            .count()
    }

    /// Positive values exceeding every absolute value at an earlier position
    /// and at every negative position.
    pub fn lrmax_star(&self) -> usize {
        let neg_max = self
            .neg()
            .iter()
            .map(|&d| self.abs_image(d))
            .max()
            .unwrap_or(0) as i64;
        let mut prefix = 0i64;
        let mut count = 0;
        for &v in &self.values {
            if v > prefix && v > neg_max {
                count += 1;
            }
            prefix = prefix.max(v.abs());
        }
        count
    }

    /// Positive values below every absolute value at a later position and at
    /// every negative position.
    pub fn rlmin_star(&self) -> usize {
        let neg_min = self
            .neg()
            .iter()
            .map(|&d| self.abs_image(d))
            .min()
            .unwrap_or(u32::MAX) as i64;
        let mut suffix = i64::MAX;
        let mut count = 0;
        for &v in self.values.iter().rev() {
            if v > 0 && v < suffix && v < neg_min {
                count += 1;
            }
            suffix = suffix.min(v.abs());
        }
        count
    }

    pub fn stats(&self) -> SignedStats {
        let sh = self.shape();
        SignedStats {
            shape: sh.digits(),
            sinv: sh.inversions(),
            wex: self.wex(),
            neg: self.neg(),
            lrmax_star: self.lrmax_star(),
            rlmin_star: self.rlmin_star(),
            cro: self.cro(),
        }
    }

    /// The inverse signed permutation.
    pub fn inverse(&self) -> SignedPerm {
        let mut values = vec![0i64; self.len()];
        for (&i, &v) in self.domain.iter().zip(&self.values) {
            let p = self.pos(v.unsigned_abs() as u32);
            values[p] = v.signum() * i as i64;
        }
        SignedPerm {
            domain: self.domain.clone(),
            values,
        }
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        if self
            .domain
            .iter()
            .enumerate()
            .all(|(k, &i)| i == k as u32 + 1)
        {
            write!(f, "{}", vals.join(" "))
        } else {
            let dom: Vec<String> = self.domain.iter().map(|v| v.to_string()).collect();
            write!(f, "{} / {}", dom.join(" "), vals.join(" "))
        }
    }
}

impl FromStr for SignedPerm {
    type Err = AssembleeError;

    /// Parses `-5 4 9` or, with an explicit domain, `2 4 7 8 / -7 8 4 2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let ints = |t: &str| -> Result<Vec<i64>, AssembleeError> {
            t.split_whitespace()
                .map(|x| {
                    x.parse::<i64>()
                        .map_err(|_| AssembleeError::Parse(format!("bad integer {x:?}")))
                })
                .collect()
        };
        match s.split_once('/') {
            Some((dom, vals)) => {
                let dom = ints(dom)?
                    .into_iter()
                    .map(|x| {
                        u32::try_from(x).map_err(|_| AssembleeError::Parse("bad domain".into()))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                SignedPerm::new(dom, ints(vals)?)
            }
            None => SignedPerm::from_values(ints(s)?),
        }
    }
}

impl ArcDiagram {
    pub fn crossings_with(&self, rule: CrossingRule) -> CrossingProfile {
        let mut upper_by_b = BTreeMap::new();
        let mut lower_by_b = BTreeMap::new();
        let mut upper = 0;
        let mut lower = 0;
        for &(a, b) in &self.upper {
            for &(c, d) in &self.upper {
                let middle = match rule {
                    CrossingRule::Standard => c <= b,
                    CrossingRule::StrictUpper => c < b,
                };
                if a < c && middle && b < d {
                    *upper_by_b.entry(b).or_insert(0) += 1;
                    upper += 1;
                }
            }
        }
        for &(a, b) in &self.lower {
            for &(c, d) in &self.lower {
                if a < c && c < b && b < d {
                    *lower_by_b.entry(b).or_insert(0) += 1;
                    lower += 1;
                }
            }
        }
        CrossingProfile {
            upper_by_b,
            lower_by_b,
            upper,
            lower,
            total: upper + lower,
        }
    }
}

/// All assemblées on `1..=n` with `r` blocks.
pub fn enumerate_assemblees(n: usize, r: usize) -> Vec<Assemblee> {
    let mut out = Vec::new();
    if r == 0 || r > n {
        return out;
    }
    for_each_permutation(n, |f| {
        // Choose r - 1 further cut points whose values increase after f[0].
        fn cuts(
            f: &[u32],
            start: usize,
            last_head: u32,
            left: usize,
            acc: &mut Vec<usize>,
            out: &mut Vec<Assemblee>,
        ) {
            if left == 0 {
                let mut blocks = Vec::new();
                let mut prev = 0;
                for &c in acc.iter().chain(std::iter::once(&f.len())) {
                    blocks.push(f[prev..c].to_vec());
                    prev = c;
                }
                out.push(Assemblee { blocks });
                return;
            }
            for p in start..f.len() {
                if f[p] > last_head {
                    acc.push(p);
                    cuts(f, p + 1, f[p], left - 1, acc, out);
                    acc.pop();
                }
            }
        }
        cuts(f, 1, f[0], r - 1, &mut Vec::new(), &mut out);
    });
    out
}

/// Calls `visit` on every permutation of `1..=n` in lexicographic order.
pub fn for_each_permutation(n: usize, mut visit: impl FnMut(&[u32])) {
    let mut p: Vec<u32> = (1..=n as u32).collect();
    loop {
        visit(&p);
        let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
            return;
        };
        let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// All signed permutations of `1..=n` with `r` negative positions, one of
/// which is `1`.
pub fn enumerate_sp(n: usize, r: usize) -> Vec<SignedPerm> {
    let mut out = Vec::new();
    if n == 0 || r == 0 || r > n {
        return out;
    }
    let subsets = subsets_of(n - 1, r - 1);
    for_each_permutation(n, |p| {
        for s in &subsets {
            let mut values: Vec<i64> = p.iter().map(|&x| x as i64).collect();
            values[0] = -values[0];
            for &k in s {
                values[k + 1] = -values[k + 1];
            }
            out.push(SignedPerm::from_values(values).unwrap());
        }
    });
    out
}

/// All signed permutations in the assemblée class on `1..=n` with `r`
/// negative positions.
pub fn enumerate_as(n: usize, r: usize) -> Vec<SignedPerm> {
    enumerate_assemblees(n, r)
        .iter()
        .map(Assemblee::to_signed)
        .collect()
}

/// All `k`-subsets of `0..n` as increasing vectors.
pub fn subsets_of(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        for x in start..n {
            if n - x < k - acc.len() {
                break;
            }
            acc.push(x);
            go(x + 1, n, k, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a(s: &str) -> Assemblee {
        s.parse().unwrap()
    }

    fn sp(s: &str) -> SignedPerm {
        s.parse().unwrap()
    }

    fn labels(s: &str) -> Vec<Label> {
        crate::shapes::parse_labels(s).unwrap()
    }

    /// Independent crossing count over arc endpoint pairs, by brute force
    /// on the definition, without using the per-b bookkeeping.
    fn brute_cro(t: &SignedPerm) -> usize {
        let d = t.arc_diagram();
        let crosses = |x: (i64, i64), y: (i64, i64), weak: bool| {
            let (first, second) = if x.0 < y.0 { (x, y) } else { (y, x) };
            let middle = if weak {
                second.0 <= first.1
            } else {
                second.0 < first.1
            };
            first.0 != second.0 && middle && first.1 < second.1
        };
        let mut c = 0;
        for (k, &x) in d.upper.iter().enumerate() {
            c += d.upper[k + 1..]
                .iter()
                .filter(|&&y| crosses(x, y, true))
                .count();
        }
        for (k, &x) in d.lower.iter().enumerate() {
            c += d.lower[k + 1..]
                .iter()
                .filter(|&&y| crosses(x, y, false))
                .count();
        }
        c
    }

    #[test]
    fn canonical_examples() {
        let (f, heads) = a("[3 5 2 9][6 4 7][8 1]").canonical();
        assert_eq!(f, vec![3, 5, 2, 9, 6, 4, 7, 8, 1]);
        assert_eq!(heads.into_iter().collect::<Vec<_>>(), vec![3, 6, 8]);
        let (f, heads) = a("[2 1 3]").canonical();
        assert_eq!((f, heads.len()), (vec![2, 1, 3], 1));
        assert_eq!(a("[3][1][2]").canonical().0, vec![1, 2, 3]);
        assert!("[1 2][2]".parse::<Assemblee>().is_err());
    }

    #[test]
    fn eps_word_examples() {
        let p = a("[9 10 5 2 6][11 8 1 4 3 7][12 13]");
        assert_eq!(
            p.eps_word().unwrap(),
            labels("11 8 1 e1 9 10 5 2 6 e2 12 13 e3 4 3 7")
        );
        assert_eq!(a("[1]").eps_word().unwrap(), labels("1 e1"));
        assert_eq!(a("[2]").eps_word(), Err(AssembleeError::MissingOne));
        assert!(Assemblee::from_eps_word(&labels("2 e1 1")).is_err());
    }

    #[test]
    fn eps_word_roundtrip() {
        for n in 1..=6 {
            for r in 1..=n {
                for p in enumerate_assemblees(n, r) {
                    let e = p.eps_word().unwrap();
                    assert_eq!(Assemblee::from_eps_word(&e).unwrap(), p);
                }
            }
        }
    }

    #[test]
    fn foata_examples() {
        let w = [8, 5, 9, 2, 4, 1, 3, 7, 6, 10];
        assert_eq!(
            foata(&w),
            vec![vec![8, 5, 9, 2, 4, 1], vec![3], vec![7, 6], vec![10]]
        );
        assert_eq!(foata(&[1, 2, 3]), vec![vec![1], vec![2], vec![3]]);
        assert_eq!(foata_inv(&foata(&w)), w.to_vec());
    }

    #[test]
    fn foata_roundtrip() {
        for n in 0..=7 {
            for_each_permutation(n, |p| {
                assert_eq!(foata_inv(&foata(p)), p.to_vec());
            });
        }
        for p in enumerate_assemblees(5, 2) {
            let e = p.eps_word().unwrap();
            assert_eq!(foata_inv(&foata(&e)), e);
        }
    }

    #[test]
    fn iota_examples() {
        let p = a("[2 8 5][3 9 7 1][4][6]");
        assert_eq!(p.iota().unwrap(), labels("7 1 e1 4 e2 8 e3 3 9 e4 6 2 5"));
        assert_eq!(a("[1]").iota().unwrap(), labels("1 e1"));
        assert_eq!(Assemblee::from_iota(&p.iota().unwrap()).unwrap(), p);
    }

    #[test]
    fn iota_with_one_block_inverts_canonical_word() {
        for n in 1..=6 {
            for p in enumerate_assemblees(n, 1) {
                let i = p.iota().unwrap();
                let back = Assemblee::from_eps_word(&i).unwrap();
                let f = p.canonical().0;
                let mut inv = vec![0; n];
                for (k, &x) in f.iter().enumerate() {
                    inv[x as usize - 1] = k as u32 + 1;
                }
                assert_eq!(back.canonical().0, inv);
            }
        }
    }

    #[test]
    fn iota_images_are_eps_words() {
        for n in 1..=6 {
            for r in 1..=n {
                for p in enumerate_assemblees(n, r) {
                    let i = p.iota().unwrap();
                    assert!(Assemblee::from_eps_word(&i).is_ok(), "{p}");
                    assert_eq!(Assemblee::from_iota(&i).unwrap(), p);
                }
            }
        }
    }

    #[test]
    fn signed_examples() {
        let p = a("[5 4 9][6 1][7 3 8 2]");
        assert_eq!(p.to_signed().to_string(), "-5 4 9 -6 1 -7 3 8 2");
        assert_eq!(a("[1]").to_signed().to_string(), "-1");
        assert!(Assemblee::from_signed(&sp("-2 -1")).is_err());
        assert!(Assemblee::from_signed(&sp("2 -1")).is_err());
    }

    #[test]
    fn signed_roundtrip() {
        for n in 1..=6 {
            for r in 1..=n {
                for p in enumerate_assemblees(n, r) {
                    let t = p.to_signed();
                    assert!(t.is_assemblee());
                    assert_eq!(Assemblee::from_signed(&t).unwrap(), p);
                }
            }
        }
    }

    #[test]
    fn neg_order_example() {
        assert_eq!(sp("-4 5 3 -6 -2 1").neg_order(), vec![1, 5, 4]);
    }

    #[test]
    fn arc_diagram_examples() {
        let d = sp("-4 5 3 -6 -2 1").arc_diagram();
        assert_eq!(d.upper, vec![(-3, 6), (-2, 2), (-1, 4), (2, 5), (3, 3)]);
        assert_eq!(d.lower, vec![(-3, 4), (-2, 5), (-1, 1), (1, 6)]);
        let d = sp("1 2 3").arc_diagram();
        assert_eq!(d.upper, vec![(1, 1), (2, 2), (3, 3)]);
        assert!(d.lower.is_empty());
    }

    #[test]
    fn arc_degrees() {
        for n in 1..=5 {
            for r in 1..=n {
                for t in enumerate_sp(n, r) {
                    let d = t.arc_diagram();
                    let mut deg: BTreeMap<i64, usize> = BTreeMap::new();
                    for &(x, y) in d.upper.iter().chain(&d.lower) {
                        *deg.entry(x).or_default() += 1;
                        *deg.entry(y).or_default() += 1;
                    }
                    for v in (1..=n as i64).chain(-(r as i64)..0) {
                        assert_eq!(deg[&v], 2, "{t} vertex {v}");
                    }
                }
            }
        }
    }

    #[test]
    fn neg_order_is_total() {
        for n in 1..=6 {
            for r in 1..=n {
                for t in enumerate_sp(n, r) {
                    let key = |i: u32| {
                        let k = i.min(t.abs_image(i));
                        (k, k != i)
                    };
                    let mut keys: Vec<_> = t.neg().into_iter().map(key).collect();
                    keys.sort();
                    keys.dedup();
                    assert_eq!(keys.len(), r, "{t}");
                }
            }
        }
    }

    #[test]
    fn crossing_examples() {
        let t = sp("-4 5 3 -6 -2 1");
        let c = t.crossings();
        assert_eq!((c.total, c.upper, c.lower), (6, 3, 3));
        assert_eq!(c.upper_vector(t.domain()), vec![0, 2, 0, 1, 0, 0]);
        assert_eq!(c.lower_vector(t.domain()), vec![0, 0, 0, 2, 1, 0]);
        let c = sp("-5 4 9 -6 1 -7 3 8 2").crossings();
        assert_eq!((c.upper, c.lower), (4, 7));
        assert_ne!(t.crossings_with(CrossingRule::StrictUpper).total, 6);
    }

    #[test]
    fn spiral_arcs_nest_for_assemblees() {
        for n in 1..=6 {
            for r in 1..=n {
                for t in enumerate_as(n, r) {
                    let d = t.arc_diagram();
                    // The halves of the spiral arcs meet at the negative
                    // vertices; the spirals are noncrossing iff no two of
                    // these halves cross.
                    let halves = |arcs: &[(i64, i64)]| -> Vec<(i64, i64)> {
                        arcs.iter().copied().filter(|x| x.0 < 0).collect()
                    };
                    let spiral = ArcDiagram {
                        upper: halves(&d.upper),
                        lower: halves(&d.lower),
                        ..d.clone()
                    };
                    assert_eq!(
                        spiral.crossings_with(CrossingRule::Standard).total,
                        0,
                        "{t}"
                    );
                    // The negative vertex order matches the order of positions.
                    assert_eq!(t.neg_order(), t.neg());
                    assert_eq!(t.cro(), brute_cro(&t));
                }
            }
        }
    }

    #[test]
    fn stats_examples() {
        let s = sp("-5 4 9 -6 1 -7 3 8 2").stats();
        assert_eq!(s.shape, "122101020");
        assert_eq!((s.sinv, s.wex, s.rlmin_star, s.lrmax_star), (19, 3, 2, 1));
        assert_eq!(s.neg, vec![1, 4, 6]);
        let s = sp("-1 2 3").stats();
        assert_eq!(
            (s.shape.as_str(), s.sinv, s.wex, s.lrmax_star),
            ("122", 0, 2, 2)
        );
        for n in 1..=6 {
            let mut v: Vec<i64> = (1..=n).collect();
            v[0] = -1;
            assert_eq!(SignedPerm::from_values(v).unwrap().wex(), n as usize - 1);
        }
    }

    #[test]
    fn special_records_match_definition() {
        for n in 1..=5 {
            for r in 1..=n {
                for t in enumerate_sp(n, r) {
                    let v = t.values();
                    let dvals: Vec<i64> = t.neg().iter().map(|&d| t.abs_image(d) as i64).collect();
                    let mut lr = 0;
                    let mut rl = 0;
                    for i in 0..v.len() {
                        let before = v[..i].iter().map(|x| x.abs()).chain(dvals.iter().copied());
                        let after = v[i + 1..]
                            .iter()
                            .map(|x| x.abs())
                            .chain(dvals.iter().copied());
                        if before.clone().all(|k| v[i] > k) {
                            lr += 1;
                        }
                        if v[i] > 0 && after.clone().all(|k| v[i] < k) {
                            rl += 1;
                        }
                    }
                    assert_eq!((t.lrmax_star(), t.rlmin_star()), (lr, rl), "{t}");
                }
            }
        }
    }

    #[test]
    fn word_stats_examples() {
        let s = word_stats(&[8, 5, 9, 2, 4, 1, 3, 7, 6, 10]);
        assert_eq!(s.rl_min, vec![1, 3, 6, 10]);
        let s = word_stats(&[1, 2, 3, 4]);
        assert_eq!((s.inv, s.rl_min.len()), (0, 4));
        for n in 1..=6 {
            for_each_permutation(n, |p| {
                let s = word_stats(p);
                let posn = |x: u32| p.iter().position(|&y| y == x).unwrap();
                let ides: Vec<u32> = (1..n as u32).filter(|&v| posn(v + 1) < posn(v)).collect();
                assert_eq!(s.ides, ides);
                assert!(s.rl_min.contains(p.last().unwrap()));
                assert!(s.rl_max.contains(p.last().unwrap()));
            });
        }
    }

    #[test]
    fn lah_counts() {
        let binom = |n: u64, k: u64| (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1));
        let fact = |n: u64| (1..=n).product::<u64>();
        assert_eq!(enumerate_assemblees(3, 2).len(), 6);
        for n in 1..=7u64 {
            for r in 1..=n {
                let expect = binom(n - 1, r - 1) * fact(n) / fact(r);
                assert_eq!(
                    enumerate_assemblees(n as usize, r as usize).len() as u64,
                    expect
                );
                let sp_expect = binom(n - 1, r - 1) * fact(n);
                if n <= 6 {
                    assert_eq!(enumerate_sp(n as usize, r as usize).len() as u64, sp_expect);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn crossing_profile_sums(perm in Just((1..=7i64).collect::<Vec<_>>()).prop_shuffle(),
                                 signs in proptest::collection::vec(any::<bool>(), 7)) {
            let values: Vec<i64> = perm.iter().zip(&signs).map(|(&v, &s)| if s { -v } else { v }).collect();
            let t = SignedPerm::from_values(values).unwrap();
            let c = t.crossings();
            prop_assert_eq!(c.upper_by_b.values().sum::<usize>() + c.lower_by_b.values().sum::<usize>(), c.total);
            prop_assert_eq!(c.total, brute_cro(&t));
            prop_assert_eq!(t.inverse().inverse(), t);
        }
    }
}
