//! Encodes signed permutations as marked Laguerre histories and back, and
//! splits one into an assemblée part and a permutation of the negatives.
//!
//! Run with `cargo run --example histories`.

use rhombic::assemblee::SignedPerm;
use rhombic::laguerre::{
    enumerate_mlh_star, inversions, mlh_to_sp, rho, rho_inverse, sp_to_mlh, star_to_plain,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let tau: SignedPerm = "-4 5 3 -6 -2 1".parse()?;
    let h = sp_to_mlh(&tau)?;
    println!("signed permutation: {tau}");
    println!("crossings:          {}", tau.cro());
    println!("marked history:     {h}");
    println!("weight exponent:    {}", h.weight_exponent());
    println!("heights:            {:?}", h.heights());
    println!("plain form:         {}", star_to_plain(&h));
    assert_eq!(mlh_to_sp(&h)?, tau);

    let (base, sigma) = rho(&tau)?;
    println!("\nassemblée part:     {base} ({} crossings)", base.cro());
    println!(
        "negatives order:    {sigma:?} ({} inversions)",
        inversions(&sigma)
    );
    assert_eq!(rho_inverse(&base, &sigma)?, tau);

    println!("\nall histories with 3 steps and 1 marked start:");
    for h in enumerate_mlh_star(3, 1) {
        println!("  {:<16} -> {}", h.to_string(), mlh_to_sp(&h)?);
    }
    Ok(())
}
