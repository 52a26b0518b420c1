//! Full classification of a handful of ideals, with failure witnesses.

use hyperlab::{classify_all, Ideal, Predicate, Ring};

fn main() -> hyperlab::Result<()> {
    let cases = [
        (Ring::integer_scaled(&[2, 3])?, Ideal::multiple(12)),
        (Ring::integer_scaled(&[2, 3])?, Ideal::multiple(5)),
        (Ring::integer_scaled(&[2, 4])?, Ideal::multiple(2)),
        (Ring::integer_scaled(&[2, 4])?, Ideal::multiple(120)),
        (Ring::modular_scaled(6, &[1, 2, 3, 4, 5])?, Ideal::Explicit([0].into())),
    ];
    for (r, i) in &cases {
        let c = classify_all(r, i)?;
        println!("{} {}  √={}  min primes {:?}", c.ring, c.ideal, c.radical, c.min_primes);
        for p in Predicate::ALL {
            println!("    {p:<8} {}", c.verdict(p));
        }
    }
    Ok(())
}
