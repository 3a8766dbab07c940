//! Bijections between extended tableaux, assemblées and signed permutations.
//!
//! * [`at_insertion`] and [`at_zigzag`] are the classical insertion and
//!   zigzag bijections on extended alternative tableaux.
//! * [`insertion`] builds an assemblée from an extended tableau through its
//!   ε-word, with inverse [`insertion_inverse`].
//! * [`arrow_zigzag`] follows zigzag paths turning at every arrow and returns
//!   a permutation in cycle form on the labels and the letters `e1, e2, ...`.
//! * [`fusion_exchange`] passes interval labels from the southeast border to
//!   the northwest border, fusing neighbouring intervals into arrows.
//! * [`zeta`] follows zigzag paths turning at up-arrows and free tiles and
//!   returns a signed permutation; [`zeta_inverse`] peels corners.
//!
//! A zigzag path enters a strip at the northwest border and walks toward the
//! strip's southeast edge.  At a turning tile it continues in the other strip
//! through that tile, so every path exits at some southeast border edge.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::assemblee::{
    cycles_of, foata_inv, normalize_cycles, Assemblee, AssembleeError, SignedPerm,
};
use crate::shapes::{Label, Letter, RhombicDiagram, ShapeError, ShapeWord, TileKind};
use crate::tableaux::{Arrow, ArrowKind, Rat, TableauError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BijectionError {
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    Assemblee(#[from] AssembleeError),
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error("not an extended tableau: {0}")]
    NotExtended(String),
    #[error("({0},{1}) is not a corner")]
    NotCorner(u32, u32),
    #[error("corner ({i},{j}) has type {found}, not {expected}")]
    CornerType {
        i: u32,
        j: u32,
        found: CornerType,
        expected: CornerType,
    },
    #[error("{0}")]
    Malformed(String),
}

/// A permutation in cycle form, each cycle ending with its least entry and
/// cycles ordered by that entry.
pub type Cycles = Vec<Vec<Label>>;

/// Exit label of the zigzag path entering each strip, indexed by border
/// position.  `turning[id]` marks the tiles where paths change strip.
pub fn zigzag_exits(rat: &Rat, turning: &[bool]) -> Vec<Label> {
    let d = rat.diagram();
    let w = d.word();
    (0..w.len())
        .map(|start| {
            let mut pos = start;
            let mut ids = d.strip_ids_from_se(pos);
            // Tiles still ahead in the current strip; the next one is ids[left - 1].
            let mut left = ids.len();
            while left > 0 {
                let id = ids[left - 1];
                if turning[id] {
                    let other = d.other_strip(id, w.label(pos));
                    pos = w.position(other).expect("strip of the tile");
                    ids = d.strip_ids_from_se(pos);
                    left = d.depth_in(id, pos);
                } else {
                    left -= 1;
                }
            }
            w.label(pos)
        })
        .collect()
}

/// The map from entry strip to exit strip.
pub fn zigzag_map(rat: &Rat, turning: &[bool]) -> BTreeMap<Label, Label> {
    let labels = rat.word().labels();
    labels
        .iter()
        .copied()
        .zip(zigzag_exits(rat, turning))
        .collect()
}

/// Tiles holding an arrow.
pub fn arrow_tiles(rat: &Rat) -> Vec<bool> {
    rat.cells().iter().map(Option::is_some).collect()
}

/// Tiles holding an up-arrow or free.
pub fn up_free_tiles(rat: &Rat) -> Vec<bool> {
    rat.free_cells()
        .into_iter()
        .zip(rat.cells())
        .map(|(free, a)| free || *a == Some(ArrowKind::Up))
        .collect()
}

/// For the strip at `pos`: the other strip of the tile holding the strip's
/// up-arrow, and the rows with a left-arrow in the strip, increasing.
fn strip_arrows(rat: &Rat, pos: usize) -> (Option<Label>, Vec<Label>) {
    let d = rat.diagram();
    let label = d.word().label(pos);
    let mut up = None;
    let mut lefts = Vec::new();
    for &id in d.strip_ids_from_se(pos) {
        let (i, j) = d.tile(id).strips;
        if j != label {
            continue;
        }
        match rat.cells()[id] {
            Some(ArrowKind::Up) => up = Some(i),
            Some(ArrowKind::Left) => lefts.push(i),
            None => {}
        }
    }
    lefts.sort_unstable();
    (up, lefts)
}

fn insert_before(
    word: &mut Vec<Label>,
    target: Label,
    items: &[Label],
) -> Result<(), BijectionError> {
    let p = word.iter().position(|&x| x == target).ok_or_else(|| {
        BijectionError::Malformed(format!("{target} is not in the word when it is needed"))
    })?;
    word.splice(p..p, items.iter().copied());
    Ok(())
}

fn require_extended(rat: &Rat) -> Result<(), BijectionError> {
    if !rat.word().has_default_labels() {
        return Err(BijectionError::NotExtended("labels must be 1..n".into()));
    }
    if !rat.is_extended() {
        return Err(BijectionError::NotExtended(
            "needs a leading diagonal letter and an up-arrow in every column".into(),
        ));
    }
    Ok(())
}

fn require_alternative(rat: &Rat) -> Result<(), BijectionError> {
    if rat.word().letters().contains(&Letter::Diagonal) {
        return Err(BijectionError::Malformed(
            "alternative tableaux have no diagonal strips".into(),
        ));
    }
    Ok(())
}

/// Insertion bijection on extended alternative tableaux, returned as a word
/// on the labels.  Starting from the free rows in increasing order, each
/// column `c` (by decreasing label) inserts its left-arrow rows followed by
/// `c` right before the row of its up-arrow.
pub fn at_insertion(rat: &Rat) -> Result<Vec<Label>, BijectionError> {
    require_alternative(rat)?;
    let w = rat.word();
    let mut word = rat.free_rows();
    for p in (0..w.len())
        .rev()
        .filter(|&p| w.letter(p) == Letter::Column)
    {
        let c = w.label(p);
        let (up, mut items) = strip_arrows(rat, p);
        let j =
            up.ok_or_else(|| BijectionError::NotExtended(format!("column {c} has no up-arrow")))?;
        items.push(c);
        insert_before(&mut word, j, &items)?;
    }
    Ok(word)
}

/// Zigzag bijection on alternative tableaux: paths turn at every arrow.
pub fn at_zigzag(rat: &Rat) -> Result<BTreeMap<Label, Label>, BijectionError> {
    require_alternative(rat)?;
    Ok(zigzag_map(rat, &arrow_tiles(rat)))
}

fn diagonal_labels(w: &ShapeWord) -> Vec<Label> {
    (0..w.len())
        .filter(|&p| w.letter(p) == Letter::Diagonal)
        .map(|p| w.label(p))
        .collect()
}

/// The ε-word built by the insertion algorithm on an extended tableau.
pub fn insertion_word(rat: &Rat) -> Result<Vec<Label>, BijectionError> {
    require_extended(rat)?;
    let w = rat.word();
    let diagonals = diagonal_labels(w);
    let eps_of = |d: Label| {
        diagonals
            .binary_search(&d)
            .ok()
            .map(|t| Label::Eps(t as u32 + 1))
    };
    let mut word: Vec<Label> = (1..=diagonals.len() as u32).map(Label::Eps).collect();
    word.extend(rat.free_rows());
    for p in (0..w.len()).rev() {
        let l = w.label(p);
        let (up, mut items) = strip_arrows(rat, p);
        let target = match w.letter(p) {
            Letter::Row => continue,
            Letter::Diagonal => eps_of(l).expect("diagonal label"),
            Letter::Column => {
                let h = up.ok_or_else(|| {
                    BijectionError::NotExtended(format!("column {l} has no up-arrow"))
                })?;
                eps_of(h).unwrap_or(h)
            }
        };
        items.push(l);
        insert_before(&mut word, target, &items)?;
    }
    Ok(word)
}

/// Insertion bijection from extended tableaux to assemblées.
pub fn insertion(rat: &Rat) -> Result<Assemblee, BijectionError> {
    Ok(Assemblee::from_eps_word(&insertion_word(rat)?)?)
}

/// The same map computed by flattening and running [`at_insertion`].
pub fn insertion_via_flatten(rat: &Rat) -> Result<Assemblee, BijectionError> {
    require_extended(rat)?;
    Ok(Assemblee::from_eps_word(&at_insertion(&rat.flatten()?)?)?)
}

fn require_interval(pi: &Assemblee) -> Result<usize, BijectionError> {
    let n = pi.len();
    if pi.ground_set() != (1..=n as u32).collect::<Vec<_>>() {
        return Err(AssembleeError::NotAssemblee("ground set must be 1..n".into()).into());
    }
    Ok(n)
}

/// Inverse of [`insertion`].
///
/// The shape comes from the ε-word: an entry followed by a larger entry or
/// ending the word is a row, an entry followed by an ε-letter is a diagonal
/// strip, and any other entry is a column.  Strips are then peeled by
/// increasing label.
pub fn insertion_inverse(pi: &Assemblee) -> Result<Rat, BijectionError> {
    let n = require_interval(pi)?;
    let e = pi.eps_word()?;
    let mut letters = vec![Letter::Row; n];
    let mut diagonals = Vec::new();
    for (p, &x) in e.iter().enumerate() {
        let Label::Num(v) = x else { continue };
        letters[v as usize - 1] = match e.get(p + 1) {
            Some(Label::Eps(_)) => {
                diagonals.push(x);
                Letter::Diagonal
            }
            Some(&y) if y > x => Letter::Row,
            Some(_) => Letter::Column,
            None => Letter::Row,
        };
    }
    let word = ShapeWord::from_letters(letters.clone());
    let mut cur = e;
    let mut arrows = Vec::new();
    for (k, &letter) in letters.iter().enumerate() {
        let l = Label::Num(k as u32 + 1);
        let p = cur
            .iter()
            .position(|&x| x == l)
            .expect("every label is present");
        // Start of the increasing run of integers ending at `l`, bounded below.
        let run_start = |cur: &[Label], floor: Label| {
            let mut s = p;
            while s > 0 && cur[s - 1] > floor && cur[s - 1] < cur[s] && !cur[s - 1].is_eps() {
                s -= 1;
            }
            s
        };
        match letter {
            Letter::Row => {}
            Letter::Column => {
                let j = *cur.get(p + 1).ok_or_else(|| {
                    BijectionError::Malformed(format!("column {l} has no right neighbour"))
                })?;
                // A diagonal neighbour stands for its ε-letter, whose left-arrow
                // rows were already removed, so the run has no lower bound.
                let (anchor, floor) = match j {
                    Label::Eps(t) => (diagonals[t as usize - 1], j),
                    d if diagonals.contains(&d) => (d, Label::Eps(0)),
                    h => (h, h),
                };
                let s = run_start(&cur, floor);
                arrows.push(Arrow::new(ArrowKind::Up, anchor, l));
                arrows.extend(cur[s..p].iter().map(|&r| Arrow::new(ArrowKind::Left, r, l)));
                cur.drain(s..=p);
            }
            Letter::Diagonal => {
                let s = run_start(&cur, Label::Eps(0));
                arrows.extend(cur[s..p].iter().map(|&r| Arrow::new(ArrowKind::Left, r, l)));
                cur.drain(s..p);
            }
        }
    }
    Ok(Rat::new(&word, &arrows)?)
}

/// Arrow-zigzag map: paths turn at every arrow.  The result is the cycle
/// form of the entry-to-exit permutation with `e_t` inserted right after the
/// `t`-th diagonal label.
pub fn arrow_zigzag(rat: &Rat) -> Result<Cycles, BijectionError> {
    require_extended(rat)?;
    let diagonals = diagonal_labels(rat.word());
    let mut cycles = cycles_of(&zigzag_map(rat, &arrow_tiles(rat)));
    for (t, d) in diagonals.iter().enumerate() {
        let cycle = cycles
            .iter_mut()
            .find(|c| c.contains(d))
            .expect("every label lies on a cycle");
        let p = cycle.iter().position(|x| x == d).unwrap();
        cycle.insert(p + 1, Label::Eps(t as u32 + 1));
    }
    Ok(normalize_cycles(&cycles))
}

/// The same map computed by flattening and running [`at_zigzag`].
pub fn arrow_zigzag_via_flatten(rat: &Rat) -> Result<Cycles, BijectionError> {
    require_extended(rat)?;
    Ok(cycles_of(&at_zigzag(&rat.flatten()?)?))
}

/// The assemblée whose ε-word is the Foata preimage of the cycles.
pub fn assemblee_of_cycles(cycles: &[Vec<Label>]) -> Result<Assemblee, BijectionError> {
    Ok(Assemblee::from_eps_word(&foata_inv(cycles))?)
}

/// A label set of the fusion-exchange algorithm: an integer interval or empty.
pub type LabelSet = Option<(u32, u32)>;

/// True when `a` and `b` are nonempty and `a` ends right before `b` starts.
fn precedes(a: LabelSet, b: LabelSet) -> bool {
    matches!((a, b), (Some(a), Some(b)) if a.1 + 1 == b.0)
}

/// Formats a label set as `{3}`, `[4,7]` or `∅`.
pub fn format_label_set(s: LabelSet) -> String {
    match s {
        None => "∅".into(),
        Some((a, b)) if a == b => format!("{{{a}}}"),
        Some((a, b)) => format!("[{a},{b}]"),
    }
}

/// The shape word assigned to an assemblée by the fusion-exchange map: a
/// head gives a diagonal letter, an inverse descent of the canonical word a
/// column, and any other entry a row.
pub fn fusion_exchange_shape(pi: &Assemblee) -> Result<ShapeWord, BijectionError> {
    let n = require_interval(pi)?;
    let (f, heads) = pi.canonical();
    let mut at = vec![0usize; n + 2];
    for (p, &a) in f.iter().enumerate() {
        at[a as usize] = p;
    }
    let letters = f
        .iter()
        .enumerate()
        .map(|(p, &a)| {
            if heads.contains(&a) {
                Letter::Diagonal
            } else if (a as usize) < n && at[a as usize + 1] < p {
                Letter::Column
            } else {
                Letter::Row
            }
        })
        .collect();
    Ok(ShapeWord::from_letters(letters))
}

/// Fusion-exchange map together with the label sets left on the northwest
/// border, listed from its northeast end.
pub fn fusion_exchange_with_labels(pi: &Assemblee) -> Result<(Rat, Vec<LabelSet>), BijectionError> {
    let word = fusion_exchange_shape(pi)?;
    let (f, _) = pi.canonical();
    let diagram = Arc::new(RhombicDiagram::build(&word));
    let mut border: Vec<LabelSet> = f.iter().map(|&a| Some((a, a))).collect();
    let mut arrows = Vec::new();
    // Tiles are stored in an order where each one's east and south sides are
    // already on the current border, at positions p and p + 1.
    for t in diagram.tiles() {
        let p = t.border_pos;
        let (east, south) = (border[p], border[p + 1]);
        let (i, j) = t.strips;
        if precedes(south, east) && t.kind != TileKind::Tall {
            arrows.push(Arrow::new(ArrowKind::Up, i, j));
            border[p] = None;
            border[p + 1] = Some((south.unwrap().0, east.unwrap().1));
        } else if precedes(east, south) && t.kind != TileKind::Short {
            arrows.push(Arrow::new(ArrowKind::Left, i, j));
            border[p] = Some((east.unwrap().0, south.unwrap().1));
            border[p + 1] = None;
        } else {
            border.swap(p, p + 1);
        }
    }
    Ok((Rat::with_diagram(diagram, &arrows)?, border))
}

/// Fusion-exchange map from assemblées to extended tableaux.
pub fn fusion_exchange(pi: &Assemblee) -> Result<Rat, BijectionError> {
    Ok(fusion_exchange_with_labels(pi)?.0)
}

/// Inverse of [`fusion_exchange`]: the assemblée whose ι-word is the ε-word
/// of the insertion image.
pub fn fusion_exchange_inverse(rat: &Rat) -> Result<Assemblee, BijectionError> {
    Ok(Assemblee::from_iota(&insertion_word(rat)?)?)
}

/// The zigzag map turning at up-arrows and free tiles.  The image of a
/// diagonal strip is negated.
pub fn zeta(rat: &Rat) -> Result<SignedPerm, BijectionError> {
    if !rat.is_extended() {
        return Err(BijectionError::NotExtended(
            "needs a leading diagonal letter and an up-arrow in every column".into(),
        ));
    }
    let w = rat.word();
    let mut domain = Vec::with_capacity(w.len());
    for &l in w.labels() {
        domain
            .push(l.num().ok_or_else(|| {
                BijectionError::Malformed(format!("label {l} is not an integer"))
            })?);
    }
    let values = zigzag_exits(rat, &up_free_tiles(rat))
        .into_iter()
        .enumerate()
        .map(|(p, exit)| {
            let v = exit.num().expect("integer labels") as i64;
            if w.letter(p) == Letter::Diagonal {
                -v
            } else {
                v
            }
        })
        .collect();
    Ok(SignedPerm::new(domain, values)?)
}

/// Type of a corner: the arrow in the corner tile, or none.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CornerType {
    Left,
    Up,
    Empty,
}

impl fmt::Display for CornerType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CornerType::Left => "L",
            CornerType::Up => "U",
            CornerType::Empty => "0",
        })
    }
}

/// A corner `(i, j)` of adjacent southeast border labels and its type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CornerOp {
    pub i: u32,
    pub j: u32,
    pub kind: CornerType,
}

impl fmt::Display for CornerOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.kind, self.i, self.j)
    }
}

impl FromStr for CornerOp {
    type Err = BijectionError;

    /// Parses `U(4,7)`, `L(2,3)` or `0(5,6)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || BijectionError::Malformed(format!("bad corner {s:?}"));
        let s = s.trim();
        let (kind, rest) = s.split_once('(').ok_or_else(bad)?;
        let kind = match kind {
            "L" => CornerType::Left,
            "U" => CornerType::Up,
            "0" => CornerType::Empty,
            _ => return Err(bad()),
        };
        let (a, b) = rest
            .strip_suffix(')')
            .and_then(|r| r.split_once(','))
            .ok_or_else(bad)?;
        Ok(CornerOp {
            i: a.trim().parse().map_err(|_| bad())?,
            j: b.trim().parse().map_err(|_| bad())?,
            kind,
        })
    }
}

fn num(l: Label) -> Result<u32, BijectionError> {
    l.num()
        .ok_or_else(|| BijectionError::Malformed(format!("label {l} is not an integer")))
}

/// Corner at border positions `k, k + 1` of a tableau, if those letters descend.
fn rat_corner_at(rat: &Rat, k: usize) -> Result<Option<CornerOp>, BijectionError> {
    let w = rat.word();
    if k + 1 >= w.len() || w.letter(k) <= w.letter(k + 1) {
        return Ok(None);
    }
    let (i, j) = (w.label(k), w.label(k + 1));
    let kind = match rat.arrow_at(i, j) {
        Some(ArrowKind::Left) => CornerType::Left,
        Some(ArrowKind::Up) => CornerType::Up,
        None => CornerType::Empty,
    };
    Ok(Some(CornerOp {
        i: num(i)?,
        j: num(j)?,
        kind,
    }))
}

/// The topmost corner of a tableau.
pub fn first_corner(rat: &Rat) -> Option<CornerOp> {
    (0..rat.len()).find_map(|k| rat_corner_at(rat, k).ok().flatten())
}

/// All corners of a tableau, from the top.
pub fn corners(rat: &Rat) -> Vec<CornerOp> {
    (0..rat.len())
        .filter_map(|k| rat_corner_at(rat, k).ok().flatten())
        .collect()
}

fn check_rat_corner(rat: &Rat, op: CornerOp) -> Result<usize, BijectionError> {
    let w = rat.word();
    let k = w
        .position(Label::Num(op.i))
        .ok_or(BijectionError::NotCorner(op.i, op.j))?;
    let found = rat_corner_at(rat, k)?
        .filter(|c| c.j == op.j)
        .ok_or(BijectionError::NotCorner(op.i, op.j))?;
    if found.kind != op.kind {
        return Err(BijectionError::CornerType {
            i: op.i,
            j: op.j,
            found: found.kind,
            expected: op.kind,
        });
    }
    Ok(k)
}

/// Removes a corner from a tableau: the row strip `i` for a left-arrow, the
/// column strip `j` for an up-arrow, and only the corner tile otherwise.
pub fn reduce_rat(rat: &Rat, op: CornerOp) -> Result<Rat, BijectionError> {
    let k = check_rat_corner(rat, op)?;
    let w = rat.word();
    let (i, j) = (Label::Num(op.i), Label::Num(op.j));
    let mut letters = w.letters().to_vec();
    let mut labels = w.labels().to_vec();
    let mut arrows: Vec<Arrow> = rat
        .arrows()
        .into_iter()
        .filter(|a| (a.i, a.j) != (i, j))
        .collect();
    let removed = match op.kind {
        CornerType::Left => Some((k, i)),
        CornerType::Up => Some((k + 1, j)),
        CornerType::Empty => {
            letters.swap(k, k + 1);
            arrows = swap_labels(&arrows, i, j);
            None
        }
    };
    if let Some((p, gone)) = removed {
        if let Some(a) = arrows.iter().find(|a| a.i == gone || a.j == gone) {
            return Err(BijectionError::Malformed(format!(
                "strip {gone} holds {a} besides its corner arrow"
            )));
        }
        letters.remove(p);
        labels.remove(p);
    }
    Ok(Rat::new(&ShapeWord::new(letters, labels)?, &arrows)?)
}

/// Inverse of [`reduce_rat`].
pub fn expand_rat(rat: &Rat, op: CornerOp) -> Result<Rat, BijectionError> {
    let w = rat.word();
    let (i, j) = (Label::Num(op.i), Label::Num(op.j));
    let mut letters = w.letters().to_vec();
    let mut labels = w.labels().to_vec();
    let mut arrows = rat.arrows();
    let adjacent_err = || BijectionError::NotCorner(op.i, op.j);
    match op.kind {
        CornerType::Left => {
            let p = w.position(j).ok_or_else(adjacent_err)?;
            if w.position(i).is_some() || (p > 0 && w.label(p - 1) >= i) {
                return Err(adjacent_err());
            }
            letters.insert(p, Letter::Row);
            labels.insert(p, i);
            arrows.push(Arrow::new(ArrowKind::Left, i, j));
        }
        CornerType::Up => {
            let p = w.position(i).ok_or_else(adjacent_err)?;
            if w.position(j).is_some() || (p + 1 < w.len() && w.label(p + 1) <= j) {
                return Err(adjacent_err());
            }
            letters.insert(p + 1, Letter::Column);
            labels.insert(p + 1, j);
            arrows.push(Arrow::new(ArrowKind::Up, i, j));
        }
        CornerType::Empty => {
            let p = w.position(i).ok_or_else(adjacent_err)?;
            if w.position(j) != Some(p + 1) || w.letter(p) >= w.letter(p + 1) {
                return Err(adjacent_err());
            }
            letters.swap(p, p + 1);
            arrows = swap_labels(&arrows, i, j);
        }
    }
    Ok(Rat::new(&ShapeWord::new(letters, labels)?, &arrows)?)
}

/// Exchanges the strip labels `i` and `j`, which are adjacent on the border.
/// Removing a free corner tile swaps the border edges of its two strips, so
/// each strip takes over the other's label.
fn swap_labels(arrows: &[Arrow], i: Label, j: Label) -> Vec<Arrow> {
    let swap = |l: Label| {
        if l == i {
            j
        } else if l == j {
            i
        } else {
            l
        }
    };
    arrows
        .iter()
        .map(|a| Arrow::new(a.kind, swap(a.i), swap(a.j)))
        .collect()
}

/// Shape-descent of a signed permutation at domain positions `k, k + 1`.
fn signed_descent_at(tau: &SignedPerm, k: usize) -> Option<CornerOp> {
    let sh = tau.shape();
    if k + 1 >= sh.len() || sh.letter(k) <= sh.letter(k + 1) {
        return None;
    }
    let (i, j) = (tau.domain()[k], tau.domain()[k + 1]);
    let kind = if tau.values()[k] == i as i64 {
        CornerType::Left
    } else if tau.values()[k + 1] == i as i64 {
        CornerType::Up
    } else {
        CornerType::Empty
    };
    Some(CornerOp { i, j, kind })
}

/// The leftmost shape-descent of a signed permutation.
pub fn first_shape_descent(tau: &SignedPerm) -> Option<CornerOp> {
    (0..tau.len()).find_map(|k| signed_descent_at(tau, k))
}

/// All shape-descents of a signed permutation, from the left.
pub fn shape_descents(tau: &SignedPerm) -> Vec<CornerOp> {
    (0..tau.len())
        .filter_map(|k| signed_descent_at(tau, k))
        .collect()
}

fn check_signed_descent(tau: &SignedPerm, op: CornerOp) -> Result<usize, BijectionError> {
    let k = tau
        .domain()
        .binary_search(&op.i)
        .map_err(|_| BijectionError::NotCorner(op.i, op.j))?;
    let found = signed_descent_at(tau, k)
        .filter(|c| c.j == op.j)
        .ok_or(BijectionError::NotCorner(op.i, op.j))?;
    if found.kind != op.kind {
        return Err(BijectionError::CornerType {
            i: op.i,
            j: op.j,
            found: found.kind,
            expected: op.kind,
        });
    }
    Ok(k)
}

/// Signed-permutation side of [`reduce_rat`]: deletes the fixed point `i`,
/// deletes `j -> i` and redirects the preimage of `±j` to `±i`, or swaps the
/// images of `i` and `j`.
pub fn reduce_signed(tau: &SignedPerm, op: CornerOp) -> Result<SignedPerm, BijectionError> {
    let k = check_signed_descent(tau, op)?;
    let mut domain = tau.domain().to_vec();
    let mut values = tau.values().to_vec();
    match op.kind {
        CornerType::Left => {
            domain.remove(k);
            values.remove(k);
        }
        CornerType::Up => {
            let y = values
                .iter()
                .position(|v| v.unsigned_abs() == op.j as u64)
                .expect("j has a preimage");
            values[y] = values[y].signum() * op.i as i64;
            domain.remove(k + 1);
            values.remove(k + 1);
        }
        CornerType::Empty => values.swap(k, k + 1),
    }
    Ok(SignedPerm::new(domain, values)?)
}

/// Inverse of [`reduce_signed`].
pub fn expand_signed(tau: &SignedPerm, op: CornerOp) -> Result<SignedPerm, BijectionError> {
    let mut domain = tau.domain().to_vec();
    let mut values = tau.values().to_vec();
    let bad = || BijectionError::NotCorner(op.i, op.j);
    match op.kind {
        CornerType::Left => {
            let p = domain.binary_search(&op.i).err().ok_or_else(bad)?;
            domain.insert(p, op.i);
            values.insert(p, op.i as i64);
        }
        CornerType::Up => {
            let p = domain.binary_search(&op.i).map_err(|_| bad())?;
            if domain.binary_search(&op.j).is_ok() {
                return Err(bad());
            }
            let y = values
                .iter()
                .position(|v| v.unsigned_abs() == op.i as u64)
                .ok_or_else(bad)?;
            values[y] = values[y].signum() * op.j as i64;
            domain.insert(p + 1, op.j);
            values.insert(p + 1, op.i as i64);
        }
        CornerType::Empty => {
            let p = domain.binary_search(&op.i).map_err(|_| bad())?;
            if domain.get(p + 1) != Some(&op.j) {
                return Err(bad());
            }
            values.swap(p, p + 1);
        }
    }
    let out = SignedPerm::new(domain, values)?;
    check_signed_descent(&out, op)?;
    Ok(out)
}

/// Inverse of [`zeta`]: reduces the signed permutation at its leftmost
/// shape-descent until none is left, then replays the corners on the
/// tableau side starting from the tile-free tableau of the remaining shape.
pub fn zeta_inverse(tau: &SignedPerm) -> Result<Rat, BijectionError> {
    tau.check_assemblee()?;
    let mut ops = Vec::new();
    let mut cur = tau.clone();
    while let Some(op) = first_shape_descent(&cur) {
        cur = reduce_signed(&cur, op)?;
        ops.push(op);
    }
    let mut rat = Rat::empty(&cur.shape());
    for &op in ops.iter().rev() {
        rat = expand_rat(&rat, op)?;
    }
    Ok(rat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assemblee::{enumerate_as, enumerate_assemblees, foata, word_stats};
    use crate::tableaux::{enumerate_at_plus, enumerate_rat_plus};
    use std::collections::HashSet;

    fn labels_to_u32(w: &[Label]) -> Vec<u32> {
        w.iter().map(|l| l.num().unwrap()).collect()
    }

    #[test]
    fn at_zigzag_is_foata_of_at_insertion() {
        for n in 1..=6 {
            for t in enumerate_at_plus(n) {
                let ins = at_insertion(&t).unwrap();
                let zz = cycles_of(&at_zigzag(&t).unwrap());
                assert_eq!(zz, normalize_cycles(&foata(&ins)), "{}", t.to_line());
            }
        }
    }

    #[test]
    fn at_insertion_free_rows_are_right_to_left_minima() {
        for n in 1..=6 {
            let all = enumerate_at_plus(n);
            let mut seen = HashSet::new();
            for t in &all {
                let ins = labels_to_u32(&at_insertion(t).unwrap());
                let free: Vec<u32> = t.free_rows().iter().map(|l| l.num().unwrap()).collect();
                assert_eq!(word_stats(&ins).rl_min, free);
                assert!(seen.insert(ins));
            }
        }
    }

    #[test]
    fn insertion_roundtrip_and_flatten_route() {
        for n in 0..=4 {
            for r in 0..=n {
                let all = enumerate_rat_plus(n, r);
                let mut images = HashSet::new();
                for t in &all {
                    let pi = insertion(t).unwrap();
                    assert_eq!(insertion_via_flatten(t).unwrap(), pi, "{}", t.to_line());
                    assert_eq!(&insertion_inverse(&pi).unwrap(), t, "{pi}");
                    assert!(images.insert(pi));
                }
                let target: HashSet<Assemblee> =
                    enumerate_assemblees(n + 1, r + 1).into_iter().collect();
                assert_eq!(images, target, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn arrow_zigzag_three_ways() {
        for n in 0..=4 {
            for r in 0..=n {
                for t in enumerate_rat_plus(n, r) {
                    let z = arrow_zigzag(&t).unwrap();
                    assert_eq!(arrow_zigzag_via_flatten(&t).unwrap(), z, "{}", t.to_line());
                    let e = insertion_word(&t).unwrap();
                    assert_eq!(normalize_cycles(&foata(&e)), z, "{}", t.to_line());
                }
            }
        }
    }

    #[test]
    fn fusion_exchange_inverts_insertion_route() {
        for n in 0..=4 {
            for r in 0..=n {
                for pi in enumerate_assemblees(n + 1, r + 1) {
                    let (t, nw) = fusion_exchange_with_labels(&pi).unwrap();
                    assert!(t.is_extended(), "{pi}");
                    assert_eq!(fusion_exchange_inverse(&t).unwrap(), pi);
                    let via =
                        insertion_inverse(&Assemblee::from_eps_word(&pi.iota().unwrap()).unwrap())
                            .unwrap();
                    assert_eq!(t, via, "{pi}");
                    let sets: Vec<(u32, u32)> = nw.into_iter().flatten().collect();
                    assert!(sets.windows(2).all(|w| w[0].1 + 1 == w[1].0), "{pi}");
                }
            }
        }
    }

    #[test]
    fn zeta_bijection_and_inverse() {
        for n in 0..=4 {
            for r in 0..=n {
                let mut images = HashSet::new();
                for t in enumerate_rat_plus(n, r) {
                    let tau = zeta(&t).unwrap();
                    assert!(tau.is_assemblee(), "{}", t.to_line());
                    assert_eq!(zeta_inverse(&tau).unwrap(), t, "{tau}");
                    assert!(images.insert(tau));
                }
                let target: HashSet<SignedPerm> = enumerate_as(n + 1, r + 1).into_iter().collect();
                assert_eq!(images, target);
            }
        }
    }

    #[test]
    fn corner_operators_commute_with_zeta() {
        for n in 0..=4 {
            for r in 0..=n {
                for t in enumerate_rat_plus(n, r) {
                    let tau = zeta(&t).unwrap();
                    let Some(op) = first_corner(&t) else {
                        assert!(first_shape_descent(&tau).is_none());
                        continue;
                    };
                    assert_eq!(first_shape_descent(&tau), Some(op));
                    let t2 = reduce_rat(&t, op).unwrap();
                    let tau2 = reduce_signed(&tau, op).unwrap();
                    assert_eq!(zeta(&t2).unwrap(), tau2);
                    let drop = usize::from(op.kind == CornerType::Empty);
                    assert_eq!(t.stats().fcell, t2.stats().fcell + drop);
                    assert_eq!(tau.cro(), tau2.cro() + drop);
                    assert_eq!(expand_rat(&t2, op).unwrap(), t);
                    assert_eq!(expand_signed(&tau2, op).unwrap(), tau);
                }
            }
        }
    }

    #[test]
    fn corner_text_roundtrip() {
        for s in ["U(4,7)", "L(2,3)", "0(5,6)"] {
            assert_eq!(s.parse::<CornerOp>().unwrap().to_string(), s);
        }
        assert!("X(1,2)".parse::<CornerOp>().is_err());
    }

    #[test]
    fn smallest_cases() {
        let t = Rat::empty(&ShapeWord::parse("1", None).unwrap());
        assert_eq!(insertion(&t).unwrap().to_string(), "[1]");
        assert_eq!(zeta(&t).unwrap().to_string(), "-1");
        assert_eq!(
            arrow_zigzag(&t).unwrap(),
            vec![vec![Label::Num(1), Label::Eps(1)]]
        );
        let pi: Assemblee = "[1]".parse().unwrap();
        assert_eq!(fusion_exchange(&pi).unwrap(), t);
        assert_eq!(insertion_inverse(&pi).unwrap(), t);
    }

    #[test]
    fn non_extended_input_is_rejected() {
        let t = Rat::empty(&ShapeWord::parse("20", None).unwrap());
        assert!(matches!(insertion(&t), Err(BijectionError::NotExtended(_))));
        assert!(matches!(zeta(&t), Err(BijectionError::NotExtended(_))));
    }
}
