//! Quotients, projections and their kernels, images and preimages.

use hyperlab::ideal::lattice;
use hyperlab::{classify, quotient, GoodHom, Ideal, Predicate, Ring};

fn main() -> hyperlab::Result<()> {
    let r = Ring::integer_scaled(&[2, 4])?;
    let q = quotient(&r, &Ideal::multiple(4))?;
    println!("{r} / 4Z = {}", q.target);

    let f = GoodHom::projection(&r, &Ideal::multiple(4))?;
    let image = f.image(&Ideal::multiple(2))?;
    println!("f = {f}; kernel {}; f(2Z) = {image}", f.kernel()?);
    println!("  2ap(f(2Z)) = {}", classify(f.target(), &image, Predicate::TwoAbsorbingPrimary)?);

    let z24 = GoodHom::projection(&r, &Ideal::multiple(24))?;
    for j in lattice(z24.target())? {
        let g = j.generator(z24.target());
        if (2..24).contains(&g) {
            let h = GoodHom::compose(GoodHom::projection(z24.target(), &j)?, z24.clone())?;
            println!("{h}: kernel {}", h.kernel()?);
        }
    }

    let c = Ring::modular_coset(12, &[0, 6])?;
    for j in lattice(&c)? {
        if j.generator(&c) >= 2 {
            let p = GoodHom::projection(&c, &j)?;
            println!("{p}: target {}, preimage of zero {}", p.target(), p.kernel()?);
        }
    }
    Ok(())
}
