//! Duality, degrees, Poincaré polynomials and Plücker relations for Grassmannians.

use num_rational::BigRational;
use schubert::comb::Partition;
use schubert::grassmannian::{
    duality_pairing, gr_poincare, grassmannian_degree, is_decomposable, plucker_quadrics_k2, schubert_degree_gr,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let pairing = duality_pairing(2, 4)?;
    for (lambda, row) in pairing.index.iter().zip(&pairing.entries) {
        let row: Vec<String> = row.iter().map(|c| c.to_string()).collect();
        println!("{:>6}  {}", lambda.to_string(), row.join(" "));
    }

    for (k, n) in [(2, 4), (2, 5), (3, 6)] {
        println!("deg Gr({k},{n}) = {}", grassmannian_degree(k, n));
    }
    let lambda = Partition::new(vec![1]);
    println!("deg of the σ(1) cycle in Gr(2,5) = {}", schubert_degree_gr(&lambda, 2, 5)?);
    println!("Poincaré polynomial of Gr(2,4): {}", gr_poincare(2, 4)?.display_with(&["q"]));

    let names = ["p12", "p13", "p14", "p23", "p24", "p34"];
    for r in plucker_quadrics_k2(4) {
        println!("Plücker relation: {} = 0", r.to_poly(4).display_with(&names));
    }
    // the span of e1 + e2 and e3 in order p12 p13 p14 p23 p24 p34
    let coords: Vec<BigRational> = [0, 1, 0, 1, 0, 0].iter().map(|&c| BigRational::from_integer(c.into())).collect();
    println!("decomposable: {}", is_decomposable(&coords, 4)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
