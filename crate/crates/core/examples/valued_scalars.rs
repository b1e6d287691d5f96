// Exact valuations and residues in the three supported fields.

use nadyn::exactval::FieldDesc;
use nadyn::parse::parse_scalar;

pub fn run_example() -> nadyn::Result<()> {
    let q3 = FieldDesc::padic(3)?;
    let ninth = parse_scalar(&q3, "1/9")?;
    println!("v_3(1/9) = {}", ninth.val());
    println!("7 mod 3 = {:?}", parse_scalar(&q3, "7")?.reduce_residue()?);

    // u^6 = 1/3, so v(u) = -1/6
    let rad = FieldDesc::radical(3, nadyn::rat::q(1, 3), 6)?;
    let u = parse_scalar(&rad, "u")?;
    println!(
        "in {rad}: v(u) = {}, u^3 * u^3 = {}",
        u.val(),
        u.pow(3).checked_mul(&u.pow(3))?
    );
    let x = parse_scalar(&rad, "1 + 3*u - u^5")?;
    println!("v({x}) = {}", x.val());

    let lt = FieldDesc::laurent();
    let f = parse_scalar(&lt, "(t^2 + t)/(1 - t)")?;
    println!("v_t({f}) = {}", f.val());
    println!(
        "residue of (2+t)/(1+t) = {:?}",
        parse_scalar(&lt, "(2+t)/(1+t)")?.reduce_residue()?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> nadyn::Result<()> {
    run_example()
}
