//! Runs every registered law over the default grid and prints a summary.

use hyperlab::laws::{run_all, Grid};

fn main() -> hyperlab::Result<()> {
    let grid = Grid::default();
    for rep in run_all(&grid)? {
        println!(
            "{:6} instances={:7} premises={:6} violations={:3} companion={:?} {:.2?}",
            rep.law,
            rep.instances,
            rep.premises_satisfied,
            rep.violations.len(),
            rep.companion_found,
            rep.wall_time
        );
        for v in rep.violations.iter().take(3) {
            println!("    {} :: {}", v.instance, v.witness);
        }
        for n in &rep.notes {
            println!("    note: {n}");
        }
    }
    Ok(())
}
