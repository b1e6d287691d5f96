// Green functions: single orbits and sums over the roots of a polynomial.

use nadyn::exactval::FieldDesc;
use nadyn::greenlyap::{escape_radius, green_sum_over_roots, green_value, DEFAULT_MAX_STEPS};
use nadyn::parse::{parse_poly, parse_scalar};

pub fn run_example() -> nadyn::Result<()> {
    let lt = FieldDesc::laurent();
    let p = parse_poly(&lt, "z^2 + 1/t")?;
    println!("{p}: escape radius {}", escape_radius(&p)?);
    for z in ["0", "t", "1/t^3"] {
        let r = green_value(&p, &parse_scalar(&lt, z)?, DEFAULT_MAX_STEPS)?;
        println!("  g({z}) = {r:?}");
    }

    let q3 = FieldDesc::padic(3)?;
    let p0 = parse_poly(&q3, "(1/3)*z^3 - (1/3)*z^9")?;
    // the six nonzero critical points satisfy c^6 = 1/3
    let crit = parse_poly(&q3, "z^6 - 1/3")?;
    let s = green_sum_over_roots(&p0, &crit, DEFAULT_MAX_STEPS)?;
    println!("sum of g over the roots of {crit}: {s}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> nadyn::Result<()> {
    run_example()
}
