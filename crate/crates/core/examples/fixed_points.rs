// Valuations and multipliers of periodic points.

use nadyn::exactval::FieldDesc;
use nadyn::greenlyap::fixed_point_report;
use nadyn::parse::parse_poly;

pub fn run_example() -> nadyn::Result<()> {
    let k = FieldDesc::padic(3)?;
    let p1 = parse_poly(&k, "(1/9)*z^12 - (1/9)*z^9")?;
    let one = parse_poly(&k, "1")?;
    for n in 1..=2 {
        println!("period {n} points of {p1}:");
        for c in fixed_point_report(&p1, &one, n)? {
            println!(
                "  {:>3} at valuation {:<5} multiplier {:<6} {}",
                c.count,
                c.valuation.to_string(),
                c.multiplier_valuation.to_string(),
                c.class
            );
        }
    }
    // a rational map: z^2 / (z + 3)
    let num = parse_poly(&k, "z^2")?;
    let den = parse_poly(&k, "z + 3")?;
    for c in fixed_point_report(&num, &den, 2)? {
        println!(
            "R^2, R = z^2/(z+3): {} at {} -> {}",
            c.count, c.valuation, c.class
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> nadyn::Result<()> {
    run_example()
}
