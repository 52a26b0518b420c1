//! Sums, intersections, products and radicals of hyperideals.

use hyperlab::ideal::{self, intersect, product, radical, radical_exponent, sum};
use hyperlab::{Ideal, Ring};

fn main() -> hyperlab::Result<()> {
    let r = Ring::integer_scaled(&[2, 4])?;
    let (a, b) = (Ideal::multiple(12), Ideal::multiple(20));
    println!("{r}");
    println!("  {a} + {b} = {}", sum(&r, &a, &b)?);
    println!("  {a} ∩ {b} = {}", intersect(&r, &a, &b)?);
    println!("  {a} · {b} = {}", product(&r, &a, &b)?);

    for m in [12, 120, 32, 105] {
        let rad = radical(&r, &Ideal::multiple(m))?;
        println!("  √{m}Z = {}", rad.ideal);
        for (x, n) in rad.certificates.iter().take(3) {
            println!("      {x}^{n} lands inside");
        }
    }
    let i = Ideal::multiple(120);
    println!("  least n with 15ⁿ ⊆ 120Z: {:?}", radical_exponent(&r, &i, 15)?);

    let z = Ring::modular_coset(12, &[0, 4, 8])?;
    let lattice: Vec<String> = ideal::lattice(&z)?.iter().map(|i| i.to_string()).collect();
    println!("{z}: lattice {}", lattice.join(" "));
    Ok(())
}
