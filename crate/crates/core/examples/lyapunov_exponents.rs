// Lyapunov exponents from critical escape rates.

use nadyn::exactval::FieldDesc;
use nadyn::greenlyap::{przytycki_chi, DEFAULT_MAX_STEPS};
use nadyn::parse::parse_poly;

pub fn run_example() -> nadyn::Result<()> {
    for p in [2u64, 3, 5] {
        let k = FieldDesc::padic(p)?;
        let poly = parse_poly(&k, &format!("(z^{p} - z^{})/{p}", p * p))?;
        let b = przytycki_chi(&poly, DEFAULT_MAX_STEPS)?;
        println!(
            "p = {p}: chi({poly}) = {}  (lower bound {})",
            b.chi,
            nadyn::rat::fmt_q(&b.lower_bound())
        );
        for t in &b.critical_terms {
            println!(
                "    factor {} x{}: sum g = {}",
                t.factor, t.weight, t.green_sum
            );
        }
    }
    let k = FieldDesc::padic(3)?;
    let p1 = parse_poly(&k, "(1/9)*(z^12 - z^9)")?;
    let b = przytycki_chi(&p1, DEFAULT_MAX_STEPS)?;
    println!(
        "chi({p1}) = {}, no critical escape: {:?}",
        b.chi,
        b.equality_holds()
    );
    for d in [2usize, 3, 6, 9] {
        let zd = parse_poly(&k, &format!("z^{d}"))?;
        println!(
            "chi(z^{d}) over Q_3 = {}",
            przytycki_chi(&zd, DEFAULT_MAX_STEPS)?.chi
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> nadyn::Result<()> {
    run_example()
}
