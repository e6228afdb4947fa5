//! Arithmetic, valuations and the ideal chain in `Z/27` and `F_9[x]/(x^2)`.

use fvr::ring::Ring;

fn main() -> fvr::Result<()> {
    for spec in ["zpr:p=3,r=3", "fqxr:p=3,s=2,r=2"] {
        let ring = Ring::parse(spec)?;
        println!("{ring}: q = {}, order {}, {} units", ring.q(), ring.order(), ring.unit_count());

        let z = ring.uniformizer();
        let a = ring.elem(5)?;
        let b = ring.mul(z, ring.elem(7)?);
        println!("  a = {}, b = {}", ring.display(a), ring.display(b));
        println!("  a + b = {}, a * b = {}", ring.display(ring.add(a, b)), ring.display(ring.mul(a, b)));
        println!("  v(a) = {}, v(b) = {}, v(ab) = {}", ring.valuation(a), ring.valuation(b), ring.valuation(ring.mul(a, b)));
        println!("  a^-1 = {}", ring.display(ring.inv(a)?));

        // k * b = z^2 has solutions forming a coset of an ideal
        let target = ring.mul_z_pow(ring.one(), 2);
        if let Some(coset) = ring.solve_linear(b, target) {
            let sols: Vec<String> = coset.elements(&ring).map(|k| ring.display(k)).collect();
            println!("  k * b = z^2 for k in {{{}}}", sols.join(", "));
        }
        let chain: Vec<String> = (0..=ring.r()).map(|k| ring.ideal_size(k).to_string()).collect();
        println!("  |(z^k)| = {}", chain.join(", "));
    }
    Ok(())
}
