//! How many lines in 3-space meet four general lines? Compute σ1^4 in H*(Gr(2,4)).

use schubert::comb::{Partition, Rect};
use schubert::grassmannian::{gr_product, pieri_multiply, GrClassSum};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let rect = Rect::grassmannian(2, 4)?;
    let sigma1 = GrClassSum::special(rect, 1)?;

    let mut power = GrClassSum::one(rect);
    for step in 1..=4 {
        power = gr_product(&power, &sigma1)?;
        println!("σ1^{step} = {}", render(&power));
    }

    // Pieri with m = 1 is the same operation
    let mut pieri = GrClassSum::one(rect);
    for _ in 0..4 {
        pieri = pieri_multiply(&pieri, 1)?;
    }
    assert_eq!(pieri, power);

    let lines = power.get(&Partition::new(vec![2, 2]));
    println!("lines meeting four general lines: {lines}");
    assert_eq!(lines, 2.into());
    Ok(())
}

fn render(x: &GrClassSum) -> String {
    let terms: Vec<String> = x.iter().map(|(l, c)| format!("{c}*s{l}")).collect();
    terms.join(" + ")
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
