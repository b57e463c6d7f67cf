//! Schubert polynomials by divided differences, Monk's rule and flag-variety products.

use schubert::comb::Permutation;
use schubert::flag::{flag_poincare, flag_product, monk_multiply, schubert_polynomial, stability_check, FlClassSum};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for w in Permutation::all(3) {
        println!("S_{w} = {}", schubert_polynomial(&w).poly);
    }

    let w: Permutation = "1432".parse()?;
    println!("S_{w} = {}", schubert_polynomial(&w).poly);
    assert!(stability_check(&"231".parse()?, 3)?);

    // σ_s2 · σ_s2 in H*(Fl(4)), once by Monk and once in general
    let s2 = FlClassSum::basis(Permutation::simple(2, 4));
    let monk = monk_multiply(&s2, 2)?;
    let general = flag_product(&s2, &s2)?;
    assert_eq!(monk, general);
    for (u, c) in general.iter() {
        println!("σ_s2^2 contains {c} σ_{u}");
    }

    println!("Poincaré polynomial of Fl(4): {}", flag_poincare(4)?.display_with(&["q"]));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
