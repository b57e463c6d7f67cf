//! Reduced pipe dreams and their generating function.

use schubert::comb::Permutation;
use schubert::flag::schubert_polynomial;
use schubert::pipedream::{enumerate_reduced, fk_polynomial, trace_permutation};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let w: Permutation = "1432".parse()?;
    let dreams = enumerate_reduced(&w);
    println!("{} reduced pipe dreams for {w}", dreams.len());
    for d in &dreams {
        assert_eq!(trace_permutation(d), w);
        println!("{d}\nreading word {}, weight {}\n", d.reading_word(), d.monomial());
    }

    let fk = fk_polynomial(&w);
    assert_eq!(fk, schubert_polynomial(&w).poly);
    println!("sum of weights = {fk}");

    let counts: Vec<usize> = Permutation::all(4).iter().map(|u| enumerate_reduced(u).len()).collect();
    println!("pipe-dream counts over S4: {counts:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
