//! Volumes of GZ polytopes and faces, the volume pairing and degrees of flag Schubert varieties.

use schubert::comb::Permutation;
use schubert::gz::{flag_schubert_degree, gz_lattice_points, gz_volume_polynomial, kp_pairing, Weight};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let vol = gz_volume_polynomial(3)?;
    println!("vol GZ(l1,l2,l3) = {}", vol.display_with(&["l1", "l2", "l3"]));
    println!("vol GZ(0,1,2) = {}", vol.evaluate_int(&[0, 1, 2])?);

    let lambda: Weight = "(0,1,2)".parse()?;
    let counts: Vec<usize> = (0..=5).map(|m| gz_lattice_points(&lambda.scaled(m)).map(|p| p.len())).collect::<Result<_, _>>()?;
    println!("lattice points of m·GZ(0,1,2), m = 0..5: {counts:?}");

    let w0 = Permutation::longest(3);
    for w in Permutation::all(3) {
        let dual = w0.compose(&w)?;
        println!("⟨{w}, {dual}⟩ = {}   deg X_{w} = {}", kp_pairing(&w, &dual, 3)?, flag_schubert_degree(&w, &lambda)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
