//! Writes SVG and TikZ drawings of a tableau, an arc diagram and a history
//! into a directory (default `rhombic-drawings`).
//!
//! Run with `cargo run --example render -- out-dir`.

use std::fs;
use std::path::PathBuf;

use rhombic::assemblee::SignedPerm;
use rhombic::bijections::zeta;
use rhombic::laguerre::sp_to_mlh;
use rhombic::render::{render_mlh_star, render_rat, render_signed, Format};
use rhombic::tableaux::Rat;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(
        std::env::args()
            .nth(1)
            .unwrap_or_else(|| "rhombic-drawings".into()),
    );
    fs::create_dir_all(&dir)?;

    let rat: Rat = "shape: 122101020 | arrows: U@(1,5) U@(1,9) L@(2,6) U@(4,7) L@(8,9)".parse()?;
    let tau: SignedPerm = zeta(&rat)?;
    let h = sp_to_mlh(&tau)?;

    let outputs = [
        ("tableau.svg", render_rat(&rat, Format::Svg)?),
        ("tableau.tex", render_rat(&rat, Format::Tikz)?),
        ("arcs.svg", render_signed(&tau, Format::Svg)?),
        ("arcs.tex", render_signed(&tau, Format::Tikz)?),
        ("history.svg", render_mlh_star(&h, Format::Svg)?),
    ];
    for (name, text) in outputs {
        let path = dir.join(name);
        fs::write(&path, text)?;
        println!("wrote {}", path.display());
    }
    println!("\n{}", render_mlh_star(&h, Format::Ascii)?);
    Ok(())
}
