//! Computes a few generating polynomials three ways and runs the identity
//! checker.
//!
//! Run with `cargo run --release --example identities`.

use rhombic::assemblee::CrossingRule;
use rhombic::verify::{
    check_identity, pasep_z_poly, y_from_assemblees, y_from_tableaux, Options, IDENTITIES,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (n, r) in [(1, 0), (2, 1), (3, 1), (3, 2)] {
        let from_tableaux = y_from_tableaux(n, r);
        let from_assemblees = y_from_assemblees(n, r, CrossingRule::Standard);
        println!("n={n} r={r}: {from_tableaux}");
        assert_eq!(from_tableaux, from_assemblees);
    }
    if let Some(z) = pasep_z_poly(3, 1) {
        println!("\npartition function at n=3, r=1: {z}");
    }

    let opts = Options {
        max_n: Some(4),
        ..Options::default()
    };
    println!();
    for ident in IDENTITIES {
        let report = check_identity(ident.id, &opts)?;
        let status = if report.passed() { "PASS" } else { "FAIL" };
        println!("{status} {:<6} {}", ident.id, ident.description);
    }
    Ok(())
}
