//! Shape words over `{0,1,2}` and the rhombic diagrams they tile.
//!
//! A shape word traces the southeast border of a region on the triangular
//! lattice, read from its northeast corner: `2` is a unit step south, `1` a
//! step southwest and `0` a step west.  [`RhombicDiagram::build`] fills the
//! region by repeatedly removing the leftmost descent of the word, which
//! yields the maximal tiling.  Coordinates are stored doubled so that the
//! midpoint of every tile side is a lattice point as well.
//!
//! Each border edge starts a *strip*, the chain of tiles glued along edges
//! parallel to it.  A tile lies in exactly two strips, named by the labels of
//! the border edges where they start.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A border label.
///
/// `Eps(k)` labels sit below every numeric label; they stand for the
/// auxiliary rows added by the flattening map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Eps(u32),
    Num(u32),
}

impl Label {
    /// The numeric value, if this is not an auxiliary label.
    pub fn num(self) -> Option<u32> {
        match self {
            Label::Num(v) => Some(v),
            Label::Eps(_) => None,
        }
    }

    pub fn is_eps(self) -> bool {
        matches!(self, Label::Eps(_))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Eps(k) => write!(f, "e{k}"),
            Label::Num(v) => write!(f, "{v}"),
        }
    }
}

impl FromStr for Label {
    type Err = ShapeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (eps, digits) = match s.strip_prefix('e') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let value: u32 = digits
            .parse()
            .map_err(|_| ShapeError::BadLabel(s.to_string()))?;
        if value == 0 {
            return Err(ShapeError::BadLabel(s.to_string()));
        }
        Ok(if eps {
            Label::Eps(value)
        } else {
            Label::Num(value)
        })
    }
}

/// Parses a whitespace separated list of labels such as `e1 e2 1 4`.
pub fn parse_labels(text: &str) -> Result<Vec<Label>, ShapeError> {
    text.split_whitespace().map(str::parse).collect()
}

/// One letter of a shape word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    /// `0`: a west step; its strip is a column.
    Column = 0,
    /// `1`: a southwest step; its strip is a diagonal strip.
    Diagonal = 1,
    /// `2`: a south step; its strip is a row.
    Row = 2,
}

impl Letter {
    pub fn digit(self) -> u8 {
        self as u8
    }

    pub fn from_digit(d: u8) -> Option<Letter> {
        match d {
            0 => Some(Letter::Column),
            1 => Some(Letter::Diagonal),
            2 => Some(Letter::Row),
            _ => None,
        }
    }

    /// The border step in doubled coordinates.
    pub fn step(self) -> Point {
        match self {
            Letter::Row => Point::new(0, -2),
            Letter::Diagonal => Point::new(-2, -2),
            Letter::Column => Point::new(-2, 0),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShapeError {
    #[error("bad character {ch:?} at position {pos} in shape word")]
    BadCharacter { ch: char, pos: usize },
    #[error("shape word has {letters} letters but {labels} labels were given")]
    LabelLengthMismatch { letters: usize, labels: usize },
    #[error("labels must be strictly increasing")]
    LabelsNotIncreasing,
    #[error("bad label {0:?}")]
    BadLabel(String),
    #[error("label {0} does not occur in the shape word")]
    UnknownLabel(Label),
}

/// A word over `{0,1,2}` whose letters carry strictly increasing labels,
/// read from northeast to southwest.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShapeWord {
    letters: Vec<Letter>,
    labels: Vec<Label>,
}

impl ShapeWord {
    pub fn new(letters: Vec<Letter>, labels: Vec<Label>) -> Result<Self, ShapeError> {
        if letters.len() != labels.len() {
            return Err(ShapeError::LabelLengthMismatch {
                letters: letters.len(),
                labels: labels.len(),
            });
        }
        if labels.windows(2).any(|w| w[0] >= w[1]) {
            return Err(ShapeError::LabelsNotIncreasing);
        }
        Ok(ShapeWord { letters, labels })
    }

    /// A word labelled `1..=n`.
    pub fn from_letters(letters: Vec<Letter>) -> Self {
        let labels = (1..=letters.len() as u32).map(Label::Num).collect();
        ShapeWord { letters, labels }
    }

    /// Parses digits such as `22101020`, optionally with explicit labels.
    pub fn parse(text: &str, labels: Option<&[Label]>) -> Result<Self, ShapeError> {
        let mut letters = Vec::with_capacity(text.len());
        for (pos, ch) in text.trim().chars().enumerate() {
            let letter = ch
                .to_digit(10)
                .and_then(|d| Letter::from_digit(d as u8))
                .ok_or(ShapeError::BadCharacter { ch, pos })?;
            letters.push(letter);
        }
        match labels {
            Some(l) => ShapeWord::new(letters, l.to_vec()),
            None => Ok(ShapeWord::from_letters(letters)),
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn letter(&self, pos: usize) -> Letter {
        self.letters[pos]
    }

    pub fn label(&self, pos: usize) -> Label {
        self.labels[pos]
    }

    /// Border position of a label.
    pub fn position(&self, label: Label) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    pub fn letter_of(&self, label: Label) -> Option<Letter> {
        self.position(label).map(|p| self.letters[p])
    }

    /// `(#0, #1, #2)`.
    pub fn counts(&self) -> (usize, usize, usize) {
        let mut c = [0usize; 3];
        for l in &self.letters {
            c[l.digit() as usize] += 1;
        }
        (c[0], c[1], c[2])
    }

    /// Number of pairs `i < j` with `w_i > w_j`.
    pub fn inversions(&self) -> usize {
        let mut seen = [0usize; 3];
        let mut inv = 0;
        for l in self.letters.iter().rev() {
            let d = l.digit() as usize;
            inv += seen[..d].iter().sum::<usize>();
            seen[d] += 1;
        }
        inv
    }

    /// True when the labels are exactly `1..=n`.
    pub fn has_default_labels(&self) -> bool {
        self.labels
            .iter()
            .enumerate()
            .all(|(i, &l)| l == Label::Num(i as u32 + 1))
    }

    /// The digit string, e.g. `22101020`.
    pub fn digits(&self) -> String {
        self.letters
            .iter()
            .map(|l| char::from(b'0' + l.digit()))
            .collect()
    }
}

impl fmt::Display for ShapeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.digits())
    }
}

/// A lattice point in doubled coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    pub fn midpoint(self, other: Point) -> Point {
        Point::new((self.x + other.x) / 2, (self.y + other.y) / 2)
    }
}

impl std::ops::Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl std::ops::Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TileKind {
    /// A row crossing a column.
    Square,
    /// A row crossing a diagonal strip.
    Tall,
    /// A diagonal strip crossing a column.
    Short,
}

impl TileKind {
    pub fn from_letters(a: Letter, b: Letter) -> Option<TileKind> {
        match (a, b) {
            (Letter::Row, Letter::Column) => Some(TileKind::Square),
            (Letter::Row, Letter::Diagonal) => Some(TileKind::Tall),
            (Letter::Diagonal, Letter::Column) => Some(TileKind::Short),
            _ => None,
        }
    }

    /// True if the tile belongs to a column, so it may hold an up-arrow.
    pub fn in_column(self) -> bool {
        matches!(self, TileKind::Square | TileKind::Short)
    }

    /// True if the tile belongs to a row, so it may hold a left-arrow.
    pub fn in_row(self) -> bool {
        matches!(self, TileKind::Square | TileKind::Tall)
    }
}

/// A tile of the maximal tiling.
///
/// For strips `(i, j)` with `i < j`, strip `i` crosses the tile through its
/// east and west sides and strip `j` through its north and south sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tile {
    pub kind: TileKind,
    pub strips: (Label, Label),
    /// Corners in the order northeast, southeast, southwest, northwest.
    pub corners: [Point; 4],
    /// Border position of the east side when the tile was placed.
    pub border_pos: usize,
}

impl Tile {
    pub fn north(&self) -> Point {
        self.corners[0].midpoint(self.corners[3])
    }
    pub fn east(&self) -> Point {
        self.corners[0].midpoint(self.corners[1])
    }
    pub fn south(&self) -> Point {
        self.corners[1].midpoint(self.corners[2])
    }
    pub fn west(&self) -> Point {
        self.corners[3].midpoint(self.corners[2])
    }
    /// Sides in the order N, E, S, W.
    pub fn sides(&self) -> [Point; 4] {
        [self.north(), self.east(), self.south(), self.west()]
    }
}

/// The tiled region of a shape word.
#[derive(Debug, Clone)]
pub struct RhombicDiagram {
    word: ShapeWord,
    tiles: Vec<Tile>,
    index: HashMap<(Label, Label), usize>,
    /// For each border position, the tiles of its strip from the southeast
    /// edge toward the northwest border, which is also placement order.
    strips: Vec<Vec<usize>>,
    /// For each tile, its index in `strips` of its first and second strip.
    depth: Vec<[usize; 2]>,
    se_border: Vec<Point>,
    nw_border: Vec<Point>,
    nw_labels: Vec<Label>,
}

impl RhombicDiagram {
    /// Tiles the region of `word` by repeatedly resolving its leftmost descent.
    pub fn build(word: &ShapeWord) -> RhombicDiagram {
        let n = word.len();
        let (a, b, c) = word.counts();
        let start = Point::new(2 * (a + b) as i64, 2 * (b + c) as i64);
        let mut points = Vec::with_capacity(n + 1);
        points.push(start);
        for &l in word.letters() {
            let last = *points.last().unwrap();
            points.push(last + l.step());
        }
        let se_border = points.clone();

        let mut letters = word.letters().to_vec();
        let mut labels = word.labels().to_vec();
        let mut tiles = Vec::with_capacity(word.inversions());
        let mut index = HashMap::new();
        let mut strips: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut depth = Vec::new();

        while let Some(p) = (0..n.saturating_sub(1)).find(|&p| letters[p] > letters[p + 1]) {
            let kind = TileKind::from_letters(letters[p], letters[p + 1])
                .expect("a descent pairs two distinct letters");
            let corner_nw = points[p] + letters[p + 1].step();
            let strips_pair = (labels[p], labels[p + 1]);
            debug_assert!(strips_pair.0 < strips_pair.1);
            let id = tiles.len();
            tiles.push(Tile {
                kind,
                strips: strips_pair,
                corners: [points[p], points[p + 1], points[p + 2], corner_nw],
                border_pos: p,
            });
            index.insert(strips_pair, id);
            let si = word.position(strips_pair.0).unwrap();
            let sj = word.position(strips_pair.1).unwrap();
            depth.push([strips[si].len(), strips[sj].len()]);
            strips[si].push(id);
            strips[sj].push(id);
            letters.swap(p, p + 1);
            labels.swap(p, p + 1);
            points[p + 1] = corner_nw;
        }

        RhombicDiagram {
            word: word.clone(),
            tiles,
            index,
            strips,
            depth,
            se_border,
            nw_border: points,
            nw_labels: labels,
        }
    }

    pub fn word(&self) -> &ShapeWord {
        &self.word
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn tile(&self, id: usize) -> &Tile {
        &self.tiles[id]
    }

    /// Id of the tile where strips `i < j` cross.
    pub fn tile_id(&self, i: Label, j: Label) -> Option<usize> {
        self.index.get(&(i, j)).copied()
    }

    /// The tile where strips `i < j` cross, present iff `w_i > w_j`.
    pub fn cell_at(&self, i: Label, j: Label) -> Option<&Tile> {
        self.tile_id(i, j).map(|id| &self.tiles[id])
    }

    /// Tiles of a strip ordered from the northwest border toward the strip's
    /// southeast border edge.
    pub fn strip_cells(&self, label: Label) -> Result<Vec<&Tile>, ShapeError> {
        let pos = self
            .word
            .position(label)
            .ok_or(ShapeError::UnknownLabel(label))?;
        Ok(self.strips[pos]
            .iter()
            .rev()
            .map(|&id| &self.tiles[id])
            .collect())
    }

    /// Tile ids of the strip at border position `pos`, southeast end first.
    pub fn strip_ids_from_se(&self, pos: usize) -> &[usize] {
        &self.strips[pos]
    }

    /// Index of tile `id` inside strip `pos` counted from the southeast end.
    pub fn depth_in(&self, id: usize, pos: usize) -> usize {
        let t = &self.tiles[id];
        if self.word.label(pos) == t.strips.0 {
            self.depth[id][0]
        } else {
            debug_assert_eq!(self.word.label(pos), t.strips.1);
            self.depth[id][1]
        }
    }

    /// Depths of tile `id` in its first and second strip.
    pub fn depths(&self, id: usize) -> [usize; 2] {
        self.depth[id]
    }

    pub fn se_border(&self) -> &[Point] {
        &self.se_border
    }

    pub fn nw_border(&self) -> &[Point] {
        &self.nw_border
    }

    /// Strip labels along the northwest border, northeast end first.
    pub fn nw_labels(&self) -> &[Label] {
        &self.nw_labels
    }

    /// The strip of `label` other than the one through `id`.
    pub fn other_strip(&self, id: usize, label: Label) -> Label {
        let (i, j) = self.tiles[id].strips;
        if label == i {
            j
        } else {
            i
        }
    }
}

/// Parses a shape word, optionally with labels; convenience for the
/// `shape:` / `labels:` text format.
pub fn parse_shape_word(text: &str, labels: Option<&[Label]>) -> Result<ShapeWord, ShapeError> {
    ShapeWord::parse(text, labels)
}

/// All words of length `n`, in lexicographic order of their digits.
pub fn all_words(n: usize) -> Vec<ShapeWord> {
    (0..=n).flat_map(|r| words_with_diagonals(n, r)).collect()
}

/// All words of length `n` with exactly `r` diagonal letters, labelled
/// `1..=n`, in lexicographic order of their digits.
pub fn words_with_diagonals(n: usize, r: usize) -> Vec<ShapeWord> {
    fn go(n: usize, r: usize, cur: &mut Vec<Letter>, out: &mut Vec<ShapeWord>) {
        let ones = cur.iter().filter(|&&l| l == Letter::Diagonal).count();
        if cur.len() == n {
            if ones == r {
                out.push(ShapeWord::from_letters(cur.clone()));
            }
            return;
        }
        let left = n - cur.len();
        for l in [Letter::Column, Letter::Diagonal, Letter::Row] {
            let ones_next = ones + usize::from(l == Letter::Diagonal);
            if ones_next <= r && r - ones_next <= left - 1 {
                cur.push(l);
                go(n, r, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if r <= n {
        go(n, r, &mut Vec::with_capacity(n), &mut out);
    }
    out
}
