//! Grid searches for ideals with one property and not another.

use hyperlab::laws::Grid;
use hyperlab::{find_separating_examples, Predicate, Ring};

fn main() -> hyperlab::Result<()> {
    let mut grid = Grid::with_rings(vec![
        Ring::integer_scaled(&[2, 3])?,
        Ring::integer_scaled(&[2, 4])?,
        Ring::modular_scaled(6, &[1, 2, 3, 4, 5])?,
    ]);
    grid.apply_params("dmax=40")?;
    let pairs = [
        (Predicate::TwoAbsorbingPrimary, Predicate::TwoAbsorbing),
        (Predicate::TwoAbsorbingPrimary, Predicate::Primary),
        (Predicate::TwoAbsorbing, Predicate::Prime),
        (Predicate::CIdeal, Predicate::CuIdeal),
    ];
    for (holds, fails) in pairs {
        let found = find_separating_examples(holds, fails, &grid)?;
        println!("{holds} but not {fails}: {} instances", found.len());
        for s in found.iter().take(4) {
            println!("    {} {} :: {}", s.ring, s.instance, s.witness);
        }
    }
    Ok(())
}
