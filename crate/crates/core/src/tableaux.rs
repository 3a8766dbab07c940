//! Arrow fillings of rhombic diagrams.
//!
//! A [`Rat`] places at most one arrow in each tile.  Up-arrows live in tiles
//! of a column (squares and short rhombi) and left-arrows in tiles of a row
//! (squares and tall rhombi).  An arrow points along its strip toward the
//! northwest border, covering every tile of the strip from its own tile to
//! the border, and no arrow may point at another arrow.
//!
//! Besides validation and statistics this module provides the structural
//! maps between fillings: extension by a top diagonal strip, flattening of
//! diagonal strips into rows and columns, splitting into packed pieces, and
//! straightening of packed pieces with one diagonal strip.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::shapes::{Label, Letter, RhombicDiagram, ShapeError, ShapeWord, TileKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ArrowKind {
    Up,
    Left,
}

impl ArrowKind {
    pub fn symbol(self) -> char {
        match self {
            ArrowKind::Up => 'U',
            ArrowKind::Left => 'L',
        }
    }
}

/// An arrow in the tile where strips `i < j` cross.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrow {
    pub kind: ArrowKind,
    pub i: Label,
    pub j: Label,
}

impl Arrow {
    pub fn new(kind: ArrowKind, i: Label, j: Label) -> Self {
        Arrow { kind, i, j }
    }
    pub fn up(i: u32, j: u32) -> Self {
        Arrow::new(ArrowKind::Up, Label::Num(i), Label::Num(j))
    }
    pub fn left(i: u32, j: u32) -> Self {
        Arrow::new(ArrowKind::Left, Label::Num(i), Label::Num(j))
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@({},{})", self.kind.symbol(), self.i, self.j)
    }
}

impl FromStr for Arrow {
    type Err = TableauError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || TableauError::Parse(format!("bad arrow {s:?}"));
        let s = s.trim();
        let (kind, rest) = s.split_once('@').ok_or_else(bad)?;
        let kind = match kind {
            "U" => ArrowKind::Up,
            "L" => ArrowKind::Left,
            _ => return Err(bad()),
        };
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (a, b) = inner.split_once(',').ok_or_else(bad)?;
        Ok(Arrow::new(kind, a.parse()?, b.parse()?))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableauError {
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error("no tile at ({0},{1})")]
    NoTile(Label, Label),
    #[error("{0} is not allowed: up-arrows need a column tile and left-arrows a row tile")]
    Placement(Arrow),
    #[error("two arrows in the tile ({0},{1})")]
    DoubleArrow(Label, Label),
    #[error("arrow {from} points at arrow {to}")]
    Pointing { from: Arrow, to: Arrow },
    #[error("not an extended tableau: {0}")]
    NotExtended(String),
    #[error("not a flattened tableau: {0}")]
    NotFlat(String),
    #[error("not a packed tableau with one diagonal strip")]
    NotPackedDiagonal,
    #[error("tableau has a free row")]
    FreeRow,
    #[error("tableau has no free column")]
    NoFreeColumn,
    #[error("labels must be 1..n for this operation")]
    NonDefaultLabels,
    #[error("{0}")]
    Parse(String),
}

/// A rhombic alternative tableau: a diagram together with a valid filling.
#[derive(Clone)]
pub struct Rat {
    diagram: Arc<RhombicDiagram>,
    arrows: Vec<Option<ArrowKind>>,
}

impl PartialEq for Rat {
    fn eq(&self, other: &Self) -> bool {
        self.word() == other.word() && self.arrows == other.arrows
    }
}

impl Eq for Rat {}

impl std::hash::Hash for Rat {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.word().hash(state);
        self.arrows.hash(state);
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rat({})", self.to_line())
    }
}

/// Statistics of a filling.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct TableauStats {
    pub fcell: usize,
    pub frow: usize,
    pub fcol: usize,
    pub row: usize,
    pub col: usize,
    pub diag: usize,
    pub tile: usize,
    pub topup: usize,
    /// Arrow counts of the diagonal strips, northeast strip first.
    pub diag_arrows: Vec<usize>,
}

/// Type of a packed tableau.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PackedKind {
    Horizontal,
    Vertical,
    Diagonal,
    NotPacked,
}

/// Fillings that break the pointing rule, as `(pointing, pointed at)`.
pub type Violations = Vec<(Arrow, Arrow)>;

impl Rat {
    /// The empty filling of `word`.
    pub fn empty(word: &ShapeWord) -> Rat {
        let diagram = Arc::new(RhombicDiagram::build(word));
        let arrows = vec![None; diagram.tiles().len()];
        Rat { diagram, arrows }
    }

    /// Builds a filling from arrows given by strip pairs and validates it.
    pub fn new(word: &ShapeWord, arrows: &[Arrow]) -> Result<Rat, TableauError> {
        Rat::with_diagram(Arc::new(RhombicDiagram::build(word)), arrows)
    }

    /// Like [`Rat::new`] but reuses an existing diagram.
    pub fn with_diagram(
        diagram: Arc<RhombicDiagram>,
        arrows: &[Arrow],
    ) -> Result<Rat, TableauError> {
        let mut cells = vec![None; diagram.tiles().len()];
        for &a in arrows {
            let id = diagram
                .tile_id(a.i, a.j)
                .ok_or(TableauError::NoTile(a.i, a.j))?;
            let kind = diagram.tile(id).kind;
            let allowed = match a.kind {
                ArrowKind::Up => kind.in_column(),
                ArrowKind::Left => kind.in_row(),
            };
            if !allowed {
                return Err(TableauError::Placement(a));
            }
            if cells[id].is_some() {
                return Err(TableauError::DoubleArrow(a.i, a.j));
            }
            cells[id] = Some(a.kind);
        }
        let rat = Rat {
            diagram,
            arrows: cells,
        };
        if let Some(&(from, to)) = rat.violations().first() {
            return Err(TableauError::Pointing { from, to });
        }
        Ok(rat)
    }

    /// Builds a filling from per-tile arrows without checking the pointing
    /// rule; used by enumeration where validity holds by construction.
    fn from_cells(diagram: Arc<RhombicDiagram>, arrows: Vec<Option<ArrowKind>>) -> Rat {
        Rat { diagram, arrows }
    }

    pub fn diagram(&self) -> &RhombicDiagram {
        &self.diagram
    }

    pub fn diagram_arc(&self) -> &Arc<RhombicDiagram> {
        &self.diagram
    }

    pub fn word(&self) -> &ShapeWord {
        self.diagram.word()
    }

    pub fn len(&self) -> usize {
        self.word().len()
    }

    pub fn is_empty(&self) -> bool {
        self.word().is_empty()
    }

    /// Arrow per tile id.
    pub fn cells(&self) -> &[Option<ArrowKind>] {
        &self.arrows
    }

    pub fn arrow_at(&self, i: Label, j: Label) -> Option<ArrowKind> {
        self.diagram.tile_id(i, j).and_then(|id| self.arrows[id])
    }

    /// All arrows, sorted by strip pair.
    pub fn arrows(&self) -> Vec<Arrow> {
        let mut out: Vec<Arrow> = self
            .arrows
            .iter()
            .enumerate()
            .filter_map(|(id, a)| {
                a.map(|kind| {
                    let (i, j) = self.diagram.tile(id).strips;
                    Arrow::new(kind, i, j)
                })
            })
            .collect();
        out.sort_by_key(|a| (a.i, a.j));
        out
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.iter().filter(|a| a.is_some()).count()
    }

    /// Pairs of arrows where the first points at the second.
    ///
    /// Tiles are scanned in placement order, which runs from the southeast
    /// toward the northwest inside every strip, so the last arrow seen in a
    /// strip is the one pointing at the next tile of that strip.
    pub fn violations(&self) -> Violations {
        let d = &*self.diagram;
        let n = d.word().len();
        let mut last_up: Vec<Option<usize>> = vec![None; n];
        let mut last_left: Vec<Option<usize>> = vec![None; n];
        let mut out = Vec::new();
        let arrow = |id: usize| {
            let t = d.tile(id);
            Arrow::new(self.arrows[id].unwrap(), t.strips.0, t.strips.1)
        };
        for (id, t) in d.tiles().iter().enumerate() {
            let pi = d.word().position(t.strips.0).unwrap();
            let pj = d.word().position(t.strips.1).unwrap();
            if let Some(kind) = self.arrows[id] {
                if t.kind.in_column() {
                    if let Some(src) = last_up[pj] {
                        out.push((arrow(src), arrow(id)));
                    }
                }
                if t.kind.in_row() {
                    if let Some(src) = last_left[pi] {
                        out.push((arrow(src), arrow(id)));
                    }
                }
                match kind {
                    ArrowKind::Up => last_up[pj] = Some(id),
                    ArrowKind::Left => last_left[pi] = Some(id),
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.violations().is_empty()
    }

    /// For each tile, whether it is free: empty and not pointed at.
    pub fn free_cells(&self) -> Vec<bool> {
        let d = &*self.diagram;
        let n = d.word().len();
        let mut up = vec![false; n];
        let mut left = vec![false; n];
        let mut out = Vec::with_capacity(self.arrows.len());
        for (id, t) in d.tiles().iter().enumerate() {
            let pi = d.word().position(t.strips.0).unwrap();
            let pj = d.word().position(t.strips.1).unwrap();
            match self.arrows[id] {
                Some(ArrowKind::Up) => {
                    up[pj] = true;
                    out.push(false);
                }
                Some(ArrowKind::Left) => {
                    left[pi] = true;
                    out.push(false);
                }
                None => {
                    let pointed = (t.kind.in_column() && up[pj]) || (t.kind.in_row() && left[pi]);
                    out.push(!pointed);
                }
            }
        }
        out
    }

    /// For each border position, whether its strip holds an arrow of the kind
    /// that lives in it (an up-arrow for a column, a left-arrow for a row).
    fn lines_with_arrow(&self) -> Vec<bool> {
        let d = &*self.diagram;
        let mut out = vec![false; d.word().len()];
        for (id, a) in self.arrows.iter().enumerate() {
            let t = d.tile(id);
            match a {
                Some(ArrowKind::Up) => out[d.word().position(t.strips.1).unwrap()] = true,
                Some(ArrowKind::Left) => out[d.word().position(t.strips.0).unwrap()] = true,
                None => {}
            }
        }
        out
    }

    /// Labels of columns without an up-arrow.
    pub fn free_columns(&self) -> Vec<Label> {
        self.free_lines(Letter::Column)
    }

    /// Labels of rows without a left-arrow.
    pub fn free_rows(&self) -> Vec<Label> {
        self.free_lines(Letter::Row)
    }

    fn free_lines(&self, letter: Letter) -> Vec<Label> {
        let used = self.lines_with_arrow();
        let w = self.word();
        (0..w.len())
            .filter(|&p| w.letter(p) == letter && !used[p])
            .map(|p| w.label(p))
            .collect()
    }

    pub fn stats(&self) -> TableauStats {
        let d = &*self.diagram;
        let w = d.word();
        let (col, diag, row) = w.counts();
        let fcell = self.free_cells().iter().filter(|&&f| f).count();
        let mut diag_arrows = Vec::with_capacity(diag);
        let mut topup = 0;
        for p in (0..w.len()).filter(|&p| w.letter(p) == Letter::Diagonal) {
            let ids = d.strip_ids_from_se(p);
            let count = ids.iter().filter(|&&id| self.arrows[id].is_some()).count();
            if diag_arrows.is_empty() {
                topup = ids
                    .iter()
                    .filter(|&&id| self.arrows[id] == Some(ArrowKind::Up))
                    .count();
            }
            diag_arrows.push(count);
        }
        TableauStats {
            fcell,
            frow: self.free_rows().len(),
            fcol: self.free_columns().len(),
            row,
            col,
            diag,
            tile: d.tiles().len(),
            topup,
            diag_arrows,
        }
    }

    /// True if the word starts with a diagonal letter and every column holds
    /// an up-arrow.
    pub fn is_extended(&self) -> bool {
        self.word().letters().first() == Some(&Letter::Diagonal) && self.free_columns().is_empty()
    }

    /// Adds a diagonal strip on top with a new smallest label and fills every
    /// free column with an up-arrow in its new top tile.  Labels shift by one.
    pub fn extend(&self) -> Result<Rat, TableauError> {
        if !self.word().has_default_labels() {
            return Err(TableauError::NonDefaultLabels);
        }
        let shift = |l: Label| match l {
            Label::Num(v) => Label::Num(v + 1),
            other => other,
        };
        let mut letters = vec![Letter::Diagonal];
        letters.extend_from_slice(self.word().letters());
        let word = ShapeWord::from_letters(letters);
        let mut arrows: Vec<Arrow> = self
            .arrows()
            .into_iter()
            .map(|a| Arrow::new(a.kind, shift(a.i), shift(a.j)))
            .collect();
        for c in self.free_columns() {
            arrows.push(Arrow::new(ArrowKind::Up, Label::Num(1), shift(c)));
        }
        Rat::new(&word, &arrows)
    }

    /// Inverse of [`Rat::extend`].
    pub fn restrict(&self) -> Result<Rat, TableauError> {
        if !self.word().has_default_labels() {
            return Err(TableauError::NonDefaultLabels);
        }
        if !self.is_extended() {
            return Err(TableauError::NotExtended(
                "needs a leading diagonal letter and an up-arrow in every column".into(),
            ));
        }
        let word = ShapeWord::from_letters(self.word().letters()[1..].to_vec());
        let unshift = |l: Label| match l {
            Label::Num(v) => Label::Num(v - 1),
            other => other,
        };
        let arrows: Vec<Arrow> = self
            .arrows()
            .into_iter()
            .filter(|a| a.i != Label::Num(1))
            .map(|a| Arrow::new(a.kind, unshift(a.i), unshift(a.j)))
            .collect();
        Rat::new(&word, &arrows)
    }

    /// Replaces the diagonal strips `d_1 < ... < d_k` by columns, adds rows
    /// `e1..ek` on top with an up-arrow at `(e_t, d_t)`, and moves the
    /// up-arrows of diagonal strip `d_t` into row `e_t`.
    pub fn flatten(&self) -> Result<Rat, TableauError> {
        if !self.is_extended() {
            return Err(TableauError::NotExtended(
                "flattening needs an extended tableau".into(),
            ));
        }
        let w = self.word();
        if w.labels().iter().any(|l| l.is_eps()) {
            return Err(TableauError::NotExtended(
                "labels already contain e-labels".into(),
            ));
        }
        let diagonals: Vec<Label> = (0..w.len())
            .filter(|&p| w.letter(p) == Letter::Diagonal)
            .map(|p| w.label(p))
            .collect();
        let eps_of = |d: Label| {
            let t = diagonals.binary_search(&d).unwrap();
            Label::Eps(t as u32 + 1)
        };
        let mut letters = vec![Letter::Row; diagonals.len()];
        let mut labels: Vec<Label> = (1..=diagonals.len() as u32).map(Label::Eps).collect();
        for p in 0..w.len() {
            letters.push(match w.letter(p) {
                Letter::Diagonal => Letter::Column,
                l => l,
            });
            labels.push(w.label(p));
        }
        let word = ShapeWord::new(letters, labels)?;
        let mut arrows: Vec<Arrow> = diagonals
            .iter()
            .map(|&d| Arrow::new(ArrowKind::Up, eps_of(d), d))
            .collect();
        for a in self.arrows() {
            if diagonals.binary_search(&a.i).is_ok() {
                arrows.push(Arrow::new(a.kind, eps_of(a.i), a.j));
            } else {
                arrows.push(a);
            }
        }
        Rat::new(&word, &arrows)
    }

    /// Inverse of [`Rat::flatten`].
    pub fn unflatten(&self) -> Result<Rat, TableauError> {
        let w = self.word();
        let k = w.labels().iter().take_while(|l| l.is_eps()).count();
        if k == 0 {
            return Err(TableauError::NotFlat("no e-labelled rows".into()));
        }
        for p in 0..k {
            if w.label(p) != Label::Eps(p as u32 + 1) || w.letter(p) != Letter::Row {
                return Err(TableauError::NotFlat(
                    "e-labels must be rows e1..ek on top".into(),
                ));
            }
        }
        if w.letters().contains(&Letter::Diagonal) {
            return Err(TableauError::NotFlat("diagonal letter present".into()));
        }
        let arrows = self.arrows();
        let mut d: Vec<Label> = Vec::with_capacity(k);
        for t in 1..=k as u32 {
            let in_row: Vec<&Arrow> = arrows.iter().filter(|a| a.i == Label::Eps(t)).collect();
            if in_row.iter().any(|a| a.kind == ArrowKind::Left) {
                return Err(TableauError::NotFlat(format!("left-arrow in row e{t}")));
            }
            let first = in_row
                .iter()
                .map(|a| a.j)
                .min()
                .ok_or_else(|| TableauError::NotFlat(format!("row e{t} has no up-arrow")))?;
            d.push(first);
        }
        if d.windows(2).any(|p| p[0] >= p[1]) {
            return Err(TableauError::NotFlat(
                "row anchors are not increasing".into(),
            ));
        }
        let mut letters = Vec::with_capacity(w.len() - k);
        let mut labels = Vec::with_capacity(w.len() - k);
        for p in k..w.len() {
            let l = w.label(p);
            letters.push(if d.contains(&l) {
                Letter::Diagonal
            } else {
                w.letter(p)
            });
            labels.push(l);
        }
        let word = ShapeWord::new(letters, labels)?;
        let mut out = Vec::new();
        for a in arrows {
            match a.i {
                Label::Eps(t) => {
                    let dt = d[t as usize - 1];
                    if a.j != dt {
                        out.push(Arrow::new(a.kind, dt, a.j));
                    }
                }
                _ => out.push(a),
            }
        }
        let rat = Rat::new(&word, &out)?;
        if rat.flatten().as_ref() != Ok(self) {
            return Err(TableauError::NotFlat(
                "not the image of an extended tableau".into(),
            ));
        }
        Ok(rat)
    }

    /// Splits along the equivalence generated by `i ~ j` whenever the tile
    /// `(i,j)` holds an arrow.  Each class is returned with its labels and the
    /// restricted filling relabelled `1..`, classes ordered by least label.
    pub fn split(&self) -> Vec<(Vec<Label>, Rat)> {
        let w = self.word();
        let n = w.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let next = parent[y];
                parent[y] = r;
                y = next;
            }
            r
        }
        let arrows = self.arrows();
        for a in &arrows {
            let x = find(&mut parent, w.position(a.i).unwrap());
            let y = find(&mut parent, w.position(a.j).unwrap());
            parent[x.max(y)] = x.min(y);
        }
        let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for p in 0..n {
            let root = find(&mut parent, p);
            classes.entry(root).or_default().push(p);
        }
        classes
            .into_values()
            .map(|positions| {
                let labels: Vec<Label> = positions.iter().map(|&p| w.label(p)).collect();
                let letters = positions.iter().map(|&p| w.letter(p)).collect();
                let rank = |l: Label| Label::Num(labels.binary_search(&l).unwrap() as u32 + 1);
                let sub: Vec<Arrow> = arrows
                    .iter()
                    .filter(|a| labels.binary_search(&a.i).is_ok())
                    .map(|a| Arrow::new(a.kind, rank(a.i), rank(a.j)))
                    .collect();
                let rat = Rat::new(&ShapeWord::from_letters(letters), &sub)
                    .expect("restriction to an arrow class is a valid filling");
                (labels, rat)
            })
            .collect()
    }

    /// Inverse of [`Rat::split`].
    pub fn unsplit(parts: &[(Vec<Label>, Rat)]) -> Result<Rat, TableauError> {
        let mut entries: Vec<(Label, Letter)> = Vec::new();
        let mut arrows = Vec::new();
        for (labels, rat) in parts {
            if labels.len() != rat.len() {
                return Err(ShapeError::LabelLengthMismatch {
                    letters: rat.len(),
                    labels: labels.len(),
                }
                .into());
            }
            let pos = |l: Label| rat.word().position(l).unwrap();
            for (p, &l) in labels.iter().enumerate() {
                entries.push((l, rat.word().letter(p)));
            }
            for a in rat.arrows() {
                arrows.push(Arrow::new(a.kind, labels[pos(a.i)], labels[pos(a.j)]));
            }
        }
        entries.sort();
        let (labels, letters): (Vec<Label>, Vec<Letter>) =
            entries.into_iter().map(|(l, x)| (l, x)).unzip();
        Rat::new(&ShapeWord::new(letters, labels)?, &arrows)
    }

    pub fn packed_kind(&self) -> PackedKind {
        let n = self.len();
        if n == 0 || self.arrow_count() != n - 1 {
            return PackedKind::NotPacked;
        }
        match self.word().counts().1 {
            1 => PackedKind::Diagonal,
            0 => {
                if self.free_rows().len() == 1 {
                    PackedKind::Horizontal
                } else {
                    PackedKind::Vertical
                }
            }
            _ => PackedKind::NotPacked,
        }
    }

    /// Turns a packed tableau with one diagonal strip into a tableau without
    /// diagonal strips: the short tiles are removed and the tall tiles become
    /// squares.
    pub fn straighten(&self) -> Result<Rat, TableauError> {
        if self.packed_kind() != PackedKind::Diagonal {
            return Err(TableauError::NotPackedDiagonal);
        }
        let w = self.word();
        let p = w
            .letters()
            .iter()
            .position(|&l| l == Letter::Diagonal)
            .unwrap();
        let d = w.label(p);
        let mut letters = w.letters().to_vec();
        letters[p] = Letter::Column;
        let word = ShapeWord::new(letters, w.labels().to_vec())?;
        let arrows: Vec<Arrow> = self.arrows().into_iter().filter(|a| a.i != d).collect();
        Rat::new(&word, &arrows)
    }

    /// Inverse of [`Rat::straighten`]: the rightmost free column becomes the
    /// diagonal strip and every free column to its left receives an up-arrow
    /// in its new short tile.
    pub fn unstraighten(&self) -> Result<Rat, TableauError> {
        let w = self.word();
        if w.letters().contains(&Letter::Diagonal) {
            return Err(TableauError::NotFlat("diagonal letter present".into()));
        }
        if !self.free_rows().is_empty() {
            return Err(TableauError::FreeRow);
        }
        let free = self.free_columns();
        let c = *free.first().ok_or(TableauError::NoFreeColumn)?;
        let p = w.position(c).unwrap();
        let mut letters = w.letters().to_vec();
        letters[p] = Letter::Diagonal;
        let word = ShapeWord::new(letters, w.labels().to_vec())?;
        let mut arrows = self.arrows();
        arrows.extend(free[1..].iter().map(|&j| Arrow::new(ArrowKind::Up, c, j)));
        Rat::new(&word, &arrows)
    }

    /// One-line text form, e.g. `shape: 20 | arrows: U@(1,2)`.
    pub fn to_line(&self) -> String {
        self.to_text().trim_end().replace('\n', " | ")
    }

    /// Multi-line text form.
    pub fn to_text(&self) -> String {
        let mut s = format!("shape: {}\n", self.word().digits());
        if !self.word().has_default_labels() {
            let labels: Vec<String> = self.word().labels().iter().map(|l| l.to_string()).collect();
            s.push_str(&format!("labels: {}\n", labels.join(" ")));
        }
        let arrows: Vec<String> = self.arrows().iter().map(|a| a.to_string()).collect();
        s.push_str(&format!("arrows: {}\n", arrows.join(" ")).replace(": \n", ":\n"));
        s
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for Rat {
    type Err = TableauError;

    /// Accepts `shape:`, optional `labels:` and optional `arrows:` fields,
    /// separated by newlines or `|`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut shape = None;
        let mut labels = None;
        let mut arrows = Vec::new();
        for field in s
            .split(['\n', '|'])
            .map(str::trim)
            .filter(|f| !f.is_empty())
        {
            let (key, value) = field.split_once(':').ok_or_else(|| {
                TableauError::Parse(format!("expected `key: value`, got {field:?}"))
            })?;
            match key.trim() {
                "shape" => shape = Some(value.trim().to_string()),
                "labels" => labels = Some(crate::shapes::parse_labels(value)?),
                "arrows" => {
                    for tok in value.split_whitespace() {
                        arrows.push(tok.parse()?);
                    }
                }
                other => return Err(TableauError::Parse(format!("unknown field {other:?}"))),
            }
        }
        let shape = shape.ok_or_else(|| TableauError::Parse("missing `shape:` field".into()))?;
        let word = ShapeWord::parse(&shape, labels.as_deref())?;
        Rat::new(&word, &arrows)
    }
}

/// Calls `visit` on every valid filling of `word`.
///
/// Tiles are decided in placement order.  Inside every strip this runs from
/// the southeast edge toward the northwest border, so a tile is pointed at
/// exactly when an earlier tile of its row holds a left-arrow or an earlier
/// tile of its column holds an up-arrow; arrows never need to be checked
/// against tiles decided later.
pub fn for_each_filling(word: &ShapeWord, mut visit: impl FnMut(Rat)) {
    let diagram = Arc::new(RhombicDiagram::build(word));
    let n = word.len();
    let ends: Vec<(usize, usize, TileKind)> = diagram
        .tiles()
        .iter()
        .map(|t| {
            (
                word.position(t.strips.0).unwrap(),
                word.position(t.strips.1).unwrap(),
                t.kind,
            )
        })
        .collect();
    struct State {
        cells: Vec<Option<ArrowKind>>,
        up: Vec<bool>,
        left: Vec<bool>,
    }
    fn go(
        k: usize,
        ends: &[(usize, usize, TileKind)],
        st: &mut State,
        diagram: &Arc<RhombicDiagram>,
        visit: &mut dyn FnMut(Rat),
    ) {
        if k == ends.len() {
            visit(Rat::from_cells(diagram.clone(), st.cells.clone()));
            return;
        }
        let (pi, pj, kind) = ends[k];
        go(k + 1, ends, st, diagram, visit);
        let pointed = (kind.in_column() && st.up[pj]) || (kind.in_row() && st.left[pi]);
        if pointed {
            return;
        }
        if kind.in_column() {
            st.cells[k] = Some(ArrowKind::Up);
            st.up[pj] = true;
            go(k + 1, ends, st, diagram, visit);
            st.up[pj] = false;
        }
        if kind.in_row() {
            st.cells[k] = Some(ArrowKind::Left);
            st.left[pi] = true;
            go(k + 1, ends, st, diagram, visit);
            st.left[pi] = false;
        }
        st.cells[k] = None;
    }
    let mut st = State {
        cells: vec![None; ends.len()],
        up: vec![false; n],
        left: vec![false; n],
    };
    go(0, &ends, &mut st, &diagram, &mut visit);
}

/// All valid fillings of `word`.
pub fn enumerate_fillings(word: &ShapeWord) -> Vec<Rat> {
    let mut out = Vec::new();
    for_each_filling(word, |r| out.push(r));
    out
}

/// All tableaux of size `n` with `r` diagonal strips.
pub fn enumerate_rat(n: usize, r: usize) -> Vec<Rat> {
    crate::shapes::words_with_diagonals(n, r)
        .iter()
        .flat_map(enumerate_fillings)
        .collect()
}

/// All extended tableaux of size `n + 1` with `r + 1` diagonal strips, as
/// extensions of the tableaux of size `n` with `r` diagonal strips.
pub fn enumerate_rat_plus(n: usize, r: usize) -> Vec<Rat> {
    enumerate_rat(n, r)
        .iter()
        .map(|t| t.extend().expect("extension of a valid tableau"))
        .collect()
}

/// All alternative tableaux of size `n` (no diagonal strips).
pub fn enumerate_at(n: usize) -> Vec<Rat> {
    enumerate_rat(n, 0)
}

/// All extended alternative tableaux of size `n`: the shape starts with a
/// row and every column holds an up-arrow.
pub fn enumerate_at_plus(n: usize) -> Vec<Rat> {
    crate::shapes::words_with_diagonals(n, 0)
        .iter()
        .filter(|w| w.letters().first() == Some(&Letter::Row))
        .flat_map(enumerate_fillings)
        .filter(|t| t.free_columns().is_empty())
        .collect()
}
