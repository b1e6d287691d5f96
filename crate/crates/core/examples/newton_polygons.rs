// Newton polygons, root valuations and the action of a polynomial on balls.

use nadyn::exactval::FieldDesc;
use nadyn::parse::{parse_poly, parse_scalar};
use nadyn::polynewt::{ball_degree, ball_image_radius, newton_polygon, root_valuations};
use nadyn::rat::q;

pub fn run_example() -> nadyn::Result<()> {
    let q3 = FieldDesc::padic(3)?;
    // the fixed-point equation of (z^12 - z^9)/9
    let f = parse_poly(&q3, "(1/9)*z^12 - (1/9)*z^9 - z")?;
    println!("polygon of {f}: {}", newton_polygon(&f)?);
    for class in root_valuations(&f)? {
        println!(
            "  {} roots of valuation {}",
            class.multiplicity, class.valuation
        );
    }

    let q2 = FieldDesc::padic(2)?;
    let sq = parse_poly(&q2, "z^2")?;
    let one = parse_scalar(&q2, "1")?;
    for rho in [q(0, 1), q(1, 2), q(1, 1), q(2, 1)] {
        println!(
            "z^2 on B(1, rho={rho}) over Q_2: degree {}, image log-radius {}",
            ball_degree(&sq, &one, &rho)?,
            ball_image_radius(&sq, &one, &rho)?
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> nadyn::Result<()> {
    run_example()
}
