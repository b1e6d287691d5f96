// Bounded versus blowing-up multipliers in t-adic families, and the scan of
// `(1-a) z^4 + a z^3` over Q_3.

use nadyn::exactval::FieldDesc;
use nadyn::greenlyap::{benedetto_scan, family_classify, DEFAULT_MAX_STEPS};
use nadyn::parse::parse_poly;

pub fn run_example() -> nadyn::Result<()> {
    let lt = FieldDesc::laurent();
    for poly in ["z^2 + t", "z^2 + 1/t", "z^3/t"] {
        let p = parse_poly(&lt, poly)?;
        let r = family_classify(&p, 2, DEFAULT_MAX_STEPS)?;
        println!("{poly}: chi = {}, regime {}", r.chi, r.regime);
        for c in r.repelling() {
            println!(
                "    period {} repelling, rate {}",
                c.period,
                c.growth_rate.as_ref().map_or("-".into(), nadyn::rat::fmt_q)
            );
        }
    }
    for row in benedetto_scan(3, -3..=3, DEFAULT_MAX_STEPS)? {
        println!("{row}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> nadyn::Result<()> {
    run_example()
}
