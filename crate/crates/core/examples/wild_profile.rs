// Exact profile of degree and wildness along a segment, and the wild locus.

use nadyn::berkpoly::{segment_profile, wild_locus};
use nadyn::exactval::FieldDesc;
use nadyn::parse::{parse_poly, parse_scalar};
use nadyn::rat::{fmt_q, qi};

pub fn run_example() -> nadyn::Result<()> {
    for (field, poly, center) in [
        ("padic:3", "(1/3)*z^3 - (1/3)*z^9", "0"),
        ("padic:2", "z^2", "1"),
        ("padic:5", "z^4 + 5*z", "0"),
    ] {
        let k = nadyn::parse::parse_field(field)?;
        let p = parse_poly(&k, poly)?;
        let prof = segment_profile(&p, &parse_scalar(&k, center)?, &qi(0), &qi(2))?;
        println!("{p} over {field}, center {center}:");
        for piece in &prof.pieces {
            println!(
                "  [{}, {}] deg {} insep {} wf = {}*rho + {}",
                fmt_q(&piece.from),
                fmt_q(&piece.to),
                piece.degree,
                piece.insep,
                fmt_q(&piece.wf.slope),
                fmt_q(&piece.wf.intercept)
            );
        }
        for w in wild_locus(&prof) {
            let (l, r) = (
                if w.from_closed { "[" } else { "(" },
                if w.to_closed { "]" } else { ")" },
            );
            println!("  wild on {l}{}, {}{r}", fmt_q(&w.from), fmt_q(&w.to));
        }
    }
    let _ = FieldDesc::laurent();
    Ok(())
}

#[allow(dead_code)]
fn main() -> nadyn::Result<()> {
    run_example()
}
