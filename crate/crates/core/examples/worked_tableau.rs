//! Walks one tableau through the structural maps and the bijections.
//!
//! Run with `cargo run --example worked_tableau`.

use rhombic::bijections::{arrow_zigzag, insertion, insertion_inverse, zeta, zeta_inverse};
use rhombic::shapes::Label;
use rhombic::tableaux::Rat;

fn labels(ls: &[Label]) -> String {
    ls.iter()
        .map(Label::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let rat: Rat = "shape: 22101020 | arrows: L@(1,5) U@(3,6) L@(7,8)".parse()?;
    println!("tableau:        {}", rat.to_line());
    println!("valid:          {}", rat.is_valid());
    println!("statistics:     {:?}", rat.stats());
    println!("free rows:      {}", labels(&rat.free_rows()));
    println!("free columns:   {}", labels(&rat.free_columns()));

    let ext = rat.extend()?;
    println!("\nextended:       {}", ext.to_line());
    println!("restricted:     {}", ext.restrict()?.to_line());
    let flat = ext.flatten()?;
    println!("flattened:      {}", flat.to_line());

    let pi = insertion(&ext)?;
    println!("\ninsertion:      {pi}");
    let cycles: Vec<String> = arrow_zigzag(&ext)?
        .iter()
        .map(|c| format!("({})", labels(c)))
        .collect();
    println!("zigzag cycles:  {}", cycles.concat());
    let tau = zeta(&ext)?;
    println!("signed image:   {tau}");
    println!("signed stats:   {:?}", tau.stats());

    assert_eq!(insertion_inverse(&pi)?, ext);
    assert_eq!(zeta_inverse(&tau)?, ext);
    println!("\nboth bijections invert on this tableau");

    println!("\ndiagonal components after splitting:");
    for (labels_of, part) in ext.split() {
        println!("  {{{}}}: {}", labels(&labels_of), part.to_line());
    }
    Ok(())
}
