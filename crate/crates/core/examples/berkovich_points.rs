// Diameter, hyperbolic distance, spherical derivative and wildness at
// ball points.

use nadyn::berkpoly::{
    diam_log, hyperbolic_distance, image_point, insep_degree, spherical_derivative_log, wf_value,
    TypeIIPoint,
};
use nadyn::exactval::FieldDesc;
use nadyn::parse::{parse_point, parse_poly};

pub fn run_example() -> nadyn::Result<()> {
    let q3 = FieldDesc::padic(3)?;
    let gauss = TypeIIPoint::gauss(&q3);
    let x = parse_point(&q3, "(0; 2)")?;
    let y = parse_point(&q3, "(3; 3)")?;
    println!("log diam {x} = {}", diam_log(&x));
    println!("d_H({x}, {y}) = {}", hyperbolic_distance(&x, &y));

    let p0 = parse_poly(&q3, "(1/3)*z^3 - (1/3)*z^9")?;
    println!("P = {p0}");
    println!("  P(x_can) = {}", image_point(&p0, &gauss)?);
    println!(
        "  log||P'||(x_can) = {}",
        spherical_derivative_log(&p0, &gauss)?
    );
    for pt in ["(0; 0)", "(0; 1)", "(0; 2)"] {
        let x = parse_point(&q3, pt)?;
        println!(
            "  wf{x} = {}, insep = {}",
            wf_value(&p0, &x)?,
            insep_degree(&p0, &x)?
        );
    }
    // rho = 1/4 needs a field with 1/4 in its value group
    let rad = FieldDesc::radical(3, nadyn::rat::q(1, 3), 12)?;
    let p0r = parse_poly(&rad, "(1/3)*z^3 - (1/3)*z^9")?;
    let x = parse_point(&rad, "(0; 1/4)")?;
    println!("  over {rad}: insep{x} = {}", insep_degree(&p0r, &x)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> nadyn::Result<()> {
    run_example()
}
