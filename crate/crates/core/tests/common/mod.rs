//! Shared fixtures: worked tableaux transcribed from TikZ drawings.
//!
//! A drawing lists tiles by their lowest (then leftmost) corner in unit
//! coordinates, plus arrow glyphs placed in tiles and dots marking free
//! tiles.  The helpers here rebuild the tableau from a shape word and check
//! that the drawing's tiles are exactly the tiles of the maximal tiling.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use rhombic::shapes::{Label, ShapeWord, TileKind};
use rhombic::tableaux::{Arrow, ArrowKind, Rat};

/// Tiles of a drawing as `(kind, lowest corner)` in doubled coordinates.
fn parse_tiles(text: &str) -> Vec<(TileKind, (i64, i64))> {
    let mut out = Vec::new();
    for (name, args) in macros(text) {
        let kind = match name.as_str() {
            "cell" | "cells" | "cellt" => TileKind::Square,
            "tall" => TileKind::Tall,
            "short" => TileKind::Short,
            other => panic!("unexpected tile macro {other}"),
        };
        out.push((kind, args));
    }
    out
}

/// Splits `\name{x}{y}` and `\nameXY` macros into name and doubled point.
fn macros(text: &str) -> Vec<(String, (i64, i64))> {
    let mut out = Vec::new();
    for chunk in text.split('\\').map(str::trim).filter(|c| !c.is_empty()) {
        let name: String = chunk
            .chars()
            .take_while(|c| c.is_ascii_alphabetic())
            .collect();
        let rest = &chunk[name.len()..];
        let coords: Vec<f64> = if rest.starts_with('{') {
            rest.split(['{', '}'])
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse()
                        .unwrap_or_else(|_| panic!("bad coordinate in {chunk}"))
                })
                .collect()
        } else {
            rest.chars()
                .map(|c| c.to_digit(10).expect("digit pair") as f64)
                .collect()
        };
        assert_eq!(coords.len(), 2, "macro {chunk} needs two coordinates");
        out.push((name, ((2.0 * coords[0]) as i64, (2.0 * coords[1]) as i64)));
    }
    out
}

fn tile_vertices(kind: TileKind, (x, y): (i64, i64)) -> [(i64, i64); 4] {
    match kind {
        TileKind::Square => [(x, y), (x + 2, y), (x + 2, y + 2), (x, y + 2)],
        TileKind::Tall => [(x, y), (x + 2, y + 2), (x + 2, y + 4), (x, y + 2)],
        TileKind::Short => [(x, y), (x + 2, y), (x + 4, y + 2), (x + 2, y + 2)],
    }
}

fn lowest(points: impl Iterator<Item = (i64, i64)>) -> (i64, i64) {
    points
        .min_by_key(|&(x, y)| (y, x))
        .expect("a tile has corners")
}

/// Maps `(kind, normalized lowest corner)` to tile id for the diagram of
/// `rat`, after checking it agrees with the drawing's tile list.
fn matched_tiles(rat: &Rat, tiles: &str) -> HashMap<(TileKind, (i64, i64)), usize> {
    let (sx, sy) = shift_to_origin(tiles);
    let drawn: BTreeSet<(u8, (i64, i64))> = parse_tiles(tiles)
        .into_iter()
        .map(|(k, (x, y))| (kind_code(k), (x - sx, y - sy)))
        .collect();

    let d = rat.diagram();
    let min_x = d
        .tiles()
        .iter()
        .flat_map(|t| t.corners)
        .map(|p| p.x)
        .min()
        .unwrap_or(0);
    let min_y = d
        .tiles()
        .iter()
        .flat_map(|t| t.corners)
        .map(|p| p.y)
        .min()
        .unwrap_or(0);
    let mut map = HashMap::new();
    for (id, t) in d.tiles().iter().enumerate() {
        let (x, y) = lowest(t.corners.iter().map(|p| (p.x, p.y)));
        map.insert((t.kind, (x - min_x, y - min_y)), id);
    }
    let built: BTreeSet<_> = map.keys().map(|&(k, p)| (kind_code(k), p)).collect();
    assert_eq!(
        drawn,
        built,
        "drawn tiles differ from the maximal tiling of {}",
        rat.word()
    );
    map
}

fn kind_code(k: TileKind) -> u8 {
    match k {
        TileKind::Square => 0,
        TileKind::Tall => 1,
        TileKind::Short => 2,
    }
}

fn shift_to_origin(tiles: &str) -> (i64, i64) {
    let drawn = parse_tiles(tiles);
    let min_x = drawn
        .iter()
        .flat_map(|&(k, p)| tile_vertices(k, p))
        .map(|p| p.0)
        .min()
        .unwrap();
    let min_y = drawn
        .iter()
        .flat_map(|&(k, p)| tile_vertices(k, p))
        .map(|p| p.1)
        .min()
        .unwrap();
    (min_x, min_y)
}

/// Builds the tableau of a drawing on the given shape word.
pub fn drawn_rat(word: &ShapeWord, tiles: &str, arrows: &str) -> Rat {
    let empty = Rat::empty(word);
    let map = matched_tiles(&empty, tiles);
    let (sx, sy) = shift_to_origin(tiles);
    let d = empty.diagram();
    let mut out = Vec::new();
    for (name, (x, y)) in macros(arrows) {
        let (kind, arrow) = match name.as_str() {
            "upArr" => (TileKind::Square, ArrowKind::Up),
            "leftArr" => (TileKind::Square, ArrowKind::Left),
            "slantUpArr" => (TileKind::Short, ArrowKind::Up),
            "slantLeftArr" => (TileKind::Tall, ArrowKind::Left),
            other => panic!("unexpected arrow macro {other}"),
        };
        let id = *map
            .get(&(kind, (x - sx, y - sy)))
            .unwrap_or_else(|| panic!("arrow {name} at ({x},{y}) is not on a drawn tile"));
        let (i, j) = d.tile(id).strips;
        out.push(Arrow::new(arrow, i, j));
    }
    Rat::new(word, &out).expect("drawn filling is valid")
}

/// Checks the arrows of `rat` against a drawing (tiles and arrow glyphs).
pub fn assert_drawn(rat: &Rat, tiles: &str, arrows: &str) {
    let expected = drawn_rat(rat.word(), tiles, arrows);
    assert_eq!(rat, &expected, "tableau differs from the drawing");
}

/// Tile ids marked with a dot in a drawing.
pub fn dotted_tiles(rat: &Rat, tiles: &str, dots: &str) -> BTreeSet<usize> {
    let map = matched_tiles(rat, tiles);
    let (sx, sy) = shift_to_origin(tiles);
    macros(dots)
        .into_iter()
        .map(|(name, (x, y))| {
            let kind = match name.as_str() {
                "cellDot" => TileKind::Square,
                "tallDot" => TileKind::Tall,
                "shortDot" => TileKind::Short,
                other => panic!("unexpected dot macro {other}"),
            };
            *map.get(&(kind, (x - sx, y - sy)))
                .unwrap_or_else(|| panic!("dot {name} at ({x},{y}) is not on a drawn tile"))
        })
        .collect()
}

pub fn word(digits: &str) -> ShapeWord {
    ShapeWord::parse(digits, None).expect("valid shape word")
}

pub fn labels(text: &str) -> Vec<Label> {
    rhombic::shapes::parse_labels(text).expect("valid labels")
}

/// An alternative tableau (no diagonal strips) of size 10.
pub mod alternative {
    pub const WORD: &str = "2220220002";
    pub const TILES: &str = r"\cell{3}{4} \cell{2}{4} \cell{1}{4} \cell{0}{4} \cell{3}{3} \cell{2}{3} \cell{1}{3} \cell{0}{3} \cell{3}{2} \cell{2}{2} \cell{1}{2} \cell{0}{2} \cell{2}{1} \cell{1}{1} \cell{0}{1} \cell{2}{0} \cell{1}{0} \cell{0}{0}";
    pub const ARROWS: &str =
        r"\upArr{0}{4} \upArr{1}{1} \upArr{3}{4} \leftArr{0}{1} \upArr{2}{0} \leftArr{3}{3}";
}

/// The running example with two diagonal strips.
pub mod worked {
    pub const WORD: &str = "22101020";
    pub const TILES: &str = r"\tall{4}{3} \cell{3}{3} \tall{2}{2} \cell{1}{2} \cell{0}{2} \tall{4}{2} \cell{3}{2} \tall{2}{1} \cell{1}{1} \cell{0}{1} \short{3}{4} \short{2}{4} \short{1}{4} \short{1}{3} \short{0}{3} \cell{0}{0}";
    pub const ARROWS: &str = r"\slantUpArr{2}{4} \slantLeftArr{2}{2} \leftArr{0}{0}";
}

/// The extension of [`worked`].
pub mod worked_extended {
    pub const WORD: &str = "122101020";
    pub const TILES: &str = r"\short{4}{5} \short{3}{5} \short{2}{5} \tall{4}{3} \cell{3}{3} \tall{2}{2} \cell{1}{2} \cell{0}{2} \tall{4}{2} \cell{3}{2} \tall{2}{1} \cell{1}{1} \cell{0}{1} \short{3}{4} \short{2}{4} \short{1}{4} \short{1}{3} \short{0}{3} \cell{0}{0}";
    pub const ARROWS: &str =
        r"\slantUpArr{4}{5} \slantUpArr{2}{4} \slantUpArr{2}{5} \slantLeftArr{2}{2} \leftArr{0}{0}";
    pub const DOTS: &str = r"\cellDot01 \cellDot11 \tallDot21 \cellDot32 \tallDot42 \cellDot33 \tallDot43 \shortDot34 \shortDot03 \shortDot13 \shortDot14";
}

/// A tableau whose arrows fall into seven connected classes.
pub mod split_source {
    pub const WORD: &str = "201220200121001";
    pub const TILES: &str = r"\cell{9}{8} \tall{8}{7} \cell{7}{7} \cell{6}{7} \cell{5}{7} \tall{4}{6} \tall{3}{5} \cell{2}{5} \cell{1}{5} \tall{0}{4} \short{7}{8} \short{6}{8} \short{5}{8} \short{4}{8} \short{3}{8} \cell{7}{6} \cell{6}{6} \cell{5}{6} \tall{4}{5} \tall{3}{4} \cell{2}{4} \cell{1}{4} \tall{0}{3} \cell{7}{5} \cell{6}{5} \cell{5}{5} \tall{4}{4} \tall{3}{3} \cell{2}{3} \cell{1}{3} \tall{0}{2} \cell{6}{4} \cell{5}{4} \tall{4}{3} \tall{3}{2} \cell{2}{2} \cell{1}{2} \tall{0}{1} \short{3}{7} \short{2}{7} \tall{3}{1} \cell{2}{1} \cell{1}{1} \tall{0}{0} \short{2}{6} \short{1}{6}";
    pub const ARROWS: &str = r"\upArr{9}{8} \slantUpArr{7}{8} \upArr{6}{4} \slantUpArr{3}{7} \slantUpArr{1}{6} \leftArr{5}{4} \slantLeftArr{3}{3} \leftArr{1}{1}";
}

/// A packed tableau with one diagonal strip.
pub mod straighten_source {
    pub const WORD: &str = "2220010202200";
    pub const TILES: &str = r"\cell{6}{6} \cell{5}{6} \tall{4}{5} \cell{3}{5} \cell{2}{5} \cell{1}{5} \cell{0}{5} \cell{6}{5} \cell{5}{5} \tall{4}{4} \cell{3}{4} \cell{2}{4} \cell{1}{4} \cell{0}{4} \cell{6}{4} \cell{5}{4} \tall{4}{3} \cell{3}{3} \cell{2}{3} \cell{1}{3} \cell{0}{3} \short{3}{6} \short{2}{6} \short{1}{6} \short{0}{6} \cell{2}{2} \cell{1}{2} \cell{0}{2} \cell{1}{1} \cell{0}{1} \cell{1}{0} \cell{0}{0}";
    pub const ARROWS: &str = r"\upArr{5}{6} \upArr{1}{5} \upArr{3}{4} \upArr{6}{4} \slantUpArr{2}{6} \slantUpArr{0}{6} \leftArr{0}{5} \leftArr{1}{4} \slantLeftArr{4}{3} \leftArr{2}{2} \leftArr{0}{1} \leftArr{1}{0}";
}

/// The straightened form of [`straighten_source`].
pub mod straighten_image {
    pub const WORD: &str = "2220000202200";
    pub const TILES: &str = r"\cell{6}{5} \cell{5}{5} \cellt{4}{5} \cell{3}{5} \cell{2}{5} \cell{1}{5} \cell{0}{5} \cell{6}{4} \cell{5}{4} \cellt{4}{4} \cell{3}{4} \cell{2}{4} \cell{1}{4} \cell{0}{4} \cell{6}{3} \cell{5}{3} \cellt{4}{3} \cell{3}{3} \cell{2}{3} \cell{1}{3} \cell{0}{3} \cell{2}{2} \cell{1}{2} \cell{0}{2} \cell{1}{1} \cell{0}{1} \cell{1}{0} \cell{0}{0}";
    pub const ARROWS: &str = r"\upArr{5}{5} \upArr{1}{5} \upArr{3}{4} \upArr{6}{3} \leftArr{0}{5} \leftArr{1}{4} \leftArr{4}{3} \leftArr{2}{2} \leftArr{0}{1} \leftArr{1}{0}";
}

/// An extended tableau with three diagonal strips, used for insertion,
/// zigzag and flattening.
pub mod flatten_source {
    pub const WORD: &str = "1220012020021";
    pub const TILES: &str = r"\short{6}{7} \short{5}{7} \short{4}{7} \short{3}{7} \short{2}{7} \cell{6}{6} \cell{5}{6} \tall{4}{5} \cell{3}{5} \cell{2}{5} \cell{1}{5} \tall{0}{4} \cell{6}{5} \cell{5}{5} \tall{4}{4} \cell{3}{4} \cell{2}{4} \cell{1}{4} \tall{0}{3} \short{3}{6} \short{2}{6} \short{1}{6} \cell{3}{3} \cell{2}{3} \cell{1}{3} \tall{0}{2} \cell{2}{2} \cell{1}{2} \tall{0}{1} \tall{0}{0}";
    pub const ARROWS: &str = r"\slantUpArr{2}{7} \slantUpArr{4}{7} \slantUpArr{2}{6} \upArr{5}{6} \upArr{6}{5} \slantLeftArr{4}{5} \leftArr{2}{2} \slantLeftArr{0}{0}";
}

/// The flattened form of [`flatten_source`], with three extra rows on top.
pub mod flatten_image {
    pub const TILES: &str = r"\cell{7}{7} \cells{6}{7} \cells{5}{7} \cell{4}{7} \cells{3}{7} \cells{2}{7} \cells{1}{7} \cell{0}{7} \cell{7}{6} \cell{6}{6} \cell{5}{6} \cell{4}{6} \cells{3}{6} \cells{2}{6} \cells{1}{6} \cell{0}{6} \cell{7}{5} \cell{6}{5} \cell{5}{5} \cell{4}{5} \cell{3}{5} \cell{2}{5} \cell{1}{5} \cell{0}{5} \cell{6}{4} \cell{5}{4} \cellt{4}{4} \cell{3}{4} \cell{2}{4} \cell{1}{4} \cellt{0}{4} \cell{6}{3} \cell{5}{3} \cellt{4}{3} \cell{3}{3} \cell{2}{3} \cell{1}{3} \cellt{0}{3} \cell{3}{2} \cell{2}{2} \cell{1}{2} \cellt{0}{2} \cell{2}{1} \cell{1}{1} \cellt{0}{1} \cellt{0}{0}";
    pub const ARROWS: &str = r"\upArr{7}{7} \upArr{3}{7} \upArr{1}{7} \upArr{4}{6} \upArr{2}{6} \upArr{0}{5} \upArr{5}{4} \upArr{6}{3} \leftArr{4}{4} \leftArr{2}{1} \leftArr{0}{0}";
}

/// The tableau produced by fusion-exchange in the worked example.
pub mod fusion_exchange {
    pub const WORD: &str = "120021200";
    pub const TILES: &str = r"\short{4}{4} \short{3}{4} \short{2}{4} \short{1}{4} \cell{4}{3} \cell{3}{3} \tall{2}{2} \cell{1}{2} \cell{0}{2} \tall{2}{1} \cell{1}{1} \cell{0}{1} \short{1}{3} \short{0}{3} \cell{1}{0} \cell{0}{0}";
    pub const ARROWS: &str =
        r"\upArr{0}{0} \upArr{1}{2} \upArr{3}{3} \slantUpArr{4}{4} \leftArr{1}{1}";
}

/// A four-strip extended tableau on the labels {2,4,7,8}, before and after
/// deleting the up-arrow corner (4,7).
pub mod corner {
    pub const LABELS: &str = "2 4 7 8";
    pub const WORD: &str = "1200";
    pub const TILES: &str = r"\short{1}{1} \short{0}{1} \cell{1}{0} \cell{0}{0}";
    pub const ARROWS: &str = r"\slantUpArr{0}{1} \upArr{1}{0}";
    pub const REDUCED_LABELS: &str = "2 4 8";
    pub const REDUCED_WORD: &str = "120";
    pub const REDUCED_TILES: &str = r"\short{0}{1} \cell{0}{0}";
    pub const REDUCED_ARROWS: &str = r"\slantUpArr{0}{1}";
}
