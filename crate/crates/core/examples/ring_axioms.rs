//! Axiom reports for a few members of each family.

use hyperlab::Ring;

fn main() -> hyperlab::Result<()> {
    let rings = [
        Ring::integer_scaled(&[2, 3])?,
        Ring::integer_scaled(&[-1, 2])?,
        Ring::modular_scaled(6, &[1, 2, 3, 4, 5])?,
        Ring::modular_scaled(6, &[1])?,
        Ring::modular_coset(12, &[0, 6])?,
    ];
    for r in &rings {
        let rep = r.check_axioms();
        println!(
            "{r:<22} hyperring={} strongly_distributive={} proper={}",
            rep.is_hyperring(),
            rep.strongly_distributive,
            rep.proper
        );
        for (axiom, xs) in &rep.counterexamples {
            println!("    {axiom} fails at {xs:?}");
        }
    }
    let r = &rings[0];
    println!("{r}: 3∘4 = {}, 2∘2∘2 = {}", r.hmul(3, 4)?, r.hpower(2, 3)?);
    Ok(())
}
