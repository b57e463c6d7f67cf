//! Schur polynomials, Schur expansions and Littlewood–Richardson coefficients.

use schubert::comb::{ssyt_enumerate, Partition};
use schubert::poly::MultiPoly;
use schubert::schur::{lr_coefficient, lr_expansion, pieri_partition_set, schur_bialternant, schur_expand, schur_ssyt, PieriKind};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let lambda = Partition::new(vec![2, 1]);
    let s21 = schur_ssyt(&lambda, 3);
    assert_eq!(s21, schur_bialternant(&lambda, 3)?);
    println!("s{lambda}(x1,x2,x3) = {s21}  ({} tableaux)", ssyt_enumerate(&lambda, 3).len());

    let product = lr_expansion(&lambda, &lambda, 6);
    for (nu, c) in product.iter() {
        println!("c^{nu}_(2,1),(2,1) = {c}");
    }
    let nu = Partition::new(vec![3, 2, 1]);
    println!("c^{nu} = {}", lr_coefficient(&lambda, &lambda, &nu));

    let f: MultiPoly = "x1^2 + x2^2 + x3^2 + x1*x2 + x1*x3 + x2*x3".parse()?;
    for (mu, c) in schur_expand(&f)?.iter() {
        println!("{f} has {c} s{mu}");
    }

    let strip = pieri_partition_set(&Partition::new(vec![3, 2]), 2, PieriKind::Row);
    let shapes: Vec<String> = strip.iter().map(|p| p.to_string()).collect();
    println!("(3,2) ⊗ 2 = {}", shapes.join(", "));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
