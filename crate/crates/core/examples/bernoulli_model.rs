// The affine Bernoulli model: coding, measures, entropy and periodic points.

use nadyn::bernoulli::{
    build_model, cylinder_masses, entropy_stats, equidistribution_table, model_lyapunov,
    periodic_points, Itinerary,
};
use nadyn::rat::{fmt_q, q};

pub fn run_example() -> nadyn::Result<()> {
    let m = build_model(&[2, 3], None)?;
    println!(
        "dilations {:?}: d = {}, {:?}, lattes-like {}",
        m.dilations, m.d, m.julia_type, m.lattes_like
    );
    let x = q(3, 10);
    println!(
        "R({}) = {}, code {}",
        fmt_q(&x),
        fmt_q(&m.apply(&x)?),
        m.full_itinerary(&x)?
    );
    let w: Itinerary = "(21)".parse()?;
    println!("decode {w} = {}", fmt_q(&m.decode(&w)?));

    for p in periodic_points(&m, 2)? {
        println!(
            "  period-2 point {} word {} weight {}",
            fmt_q(&p.point),
            p.word,
            p.weight
        );
    }
    let (eq, me) = cylinder_masses(&m, &"12".parse()?)?;
    println!(
        "cylinder [12]: equilibrium {}, max-entropy {}",
        fmt_q(&eq),
        fmt_q(&me)
    );
    let e = entropy_stats(&m);
    println!(
        "h_top = {}, h_rho = {} ~ {:.4}",
        e.h_top,
        e.h_rho,
        e.h_rho.approx()
    );
    let worst = equidistribution_table(&m, 8, 4)?
        .into_iter()
        .map(|r| r.weighted_deviation.max(r.unweighted_deviation))
        .max()
        .unwrap();
    println!(
        "largest deviation over words of length <= 4 at n = 8: {}",
        fmt_q(&worst)
    );
    for p in [2, 3, 5] {
        println!(
            "chi over residue prime {p}: {}",
            fmt_q(&model_lyapunov(&m, p)?)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> nadyn::Result<()> {
    run_example()
}
