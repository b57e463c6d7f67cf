//! Gelfand–Tsetlin patterns, Kogan faces and Demazure characters.

use schubert::comb::Permutation;
use schubert::gz::{
    demazure_character, enumerate_reduced_kogan_faces, gz_lattice_points, kogan_face_word, weyl_dimension, Weight,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let lambda: Weight = "(0,1,2)".parse()?;
    let points = gz_lattice_points(&lambda)?;
    println!("{} GZ patterns for {lambda}, Weyl dimension {}", points.len(), weyl_dimension(&lambda));
    for p in points.iter().take(3) {
        println!("  {p}");
    }

    let w: Permutation = "132".parse()?;
    for face in enumerate_reduced_kogan_faces(&w) {
        println!("face {face} reads {}", kogan_face_word(&face));
    }

    for w in Permutation::all(3) {
        let ch = demazure_character(&w, &lambda)?;
        println!("dim D_{w}{lambda} = {}", ch.dimension());
    }
    let full = demazure_character(&Permutation::identity(3), &lambda)?;
    assert!(full.is_symmetric());
    println!("character of the full module: {full}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
