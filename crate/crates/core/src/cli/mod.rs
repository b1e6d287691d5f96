//! The `nadyn` command line.
//!
//! Every command prints one JSON document (or a plain-text table with
//! `--format table`). Exit codes: 0 success, 2 parse error, 3 domain error,
//! 4 result left undetermined. Failures print `{"error": {"kind", "detail"}}`.

mod table;

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde::Serialize;
use serde_json::{json, Value};

use crate::berkpoly::{
    diam_log, image_point, insep_degree, local_degree, segment_profile, spherical_derivative_log,
    wf_value, wild_bound, wild_locus, PointType, TypeIIPoint,
};
use crate::bernoulli::{self, BernoulliModel, Layout, Orientation, Word};
use crate::error::Error;
use crate::exactval::FieldDesc;
use crate::greenlyap::{
    benedetto_scan, family_classify, fixed_point_report, green_sum_over_roots, green_value,
    przytycki_chi, GreenResult, Regime, RootGreenSum, DEFAULT_MAX_STEPS,
};
use crate::parse::{
    parse_dilations, parse_field, parse_point, parse_poly, parse_rational, parse_scalar,
};
use crate::polynewt::{newton_polygon, root_valuations, Poly};
use crate::rat::fmt_q;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_UNDETERMINED: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "nadyn", version, about = "Exact non-archimedean dynamics")]
struct Cli {
    /// padic:P | radical:P,b,m | laurent
    #[arg(long, global = true, default_value = "padic:3")]
    field: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_STEPS)]
    max_steps: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args, Debug)]
struct PolyArg {
    /// Polynomial in z, e.g. "(1/3)*z^3 - (1/3)*z^9"
    #[arg(long)]
    poly: String,
}

#[derive(Args, Debug)]
struct PointArgs {
    #[command(flatten)]
    poly: PolyArg,
    /// Point as "(center; rho)"
    #[arg(long, allow_hyphen_values = true)]
    point: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Newton polygon and root valuations
    Np(PolyArg),
    /// Local degree and image of a point
    Degree(PointArgs),
    /// Spherical derivative at a point
    Sd(PointArgs),
    /// Wildness function at a point
    Wf(PointArgs),
    /// Piecewise profile along the segment {(center; rho)}
    Profile {
        #[command(flatten)]
        poly: PolyArg,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        center: String,
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
        /// Include the (rho, wf) polyline
        #[arg(long)]
        emit_plot_data: bool,
    },
    /// Green function at a point, or summed over the roots of --roots
    Green {
        #[command(flatten)]
        poly: PolyArg,
        #[arg(long, allow_hyphen_values = true, required_unless_present = "roots")]
        at: Option<String>,
        /// Squarefree polynomial whose roots are summed over
        #[arg(long, conflicts_with = "at")]
        roots: Option<String>,
    },
    /// Lyapunov exponent via critical escape rates
    Lyap(PolyArg),
    /// Fixed points of the n-th iterate of poly/den
    Fixed {
        #[command(flatten)]
        poly: PolyArg,
        #[arg(long, default_value = "1")]
        den: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// t-adic family classification, or the Benedetto scan with --benedetto
    Family {
        #[arg(long, required_unless_present = "benedetto")]
        poly: Option<String>,
        #[arg(long, default_value_t = 3)]
        n_max: usize,
        /// Scan (1-a) z^(p+1) + a z^p over a = 2 p^v for this prime p
        #[arg(long, conflicts_with = "poly")]
        benedetto: Option<u64>,
        #[arg(long, default_value_t = -3, allow_hyphen_values = true)]
        vmin: i64,
        #[arg(long, default_value_t = 3, allow_hyphen_values = true)]
        vmax: i64,
    },
    /// Affine Bernoulli model
    Bernoulli(BernoulliArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Report {
    Model,
    Apply,
    Itinerary,
    Decode,
    Periodic,
    Masses,
    Entropy,
    Equidistribution,
    Lyapunov,
    Hull,
}

#[derive(Args, Debug)]
struct BernoulliArgs {
    /// Dilation factors, e.g. "2,3"
    #[arg(long)]
    dilations: String,
    #[arg(long, value_enum, default_value_t = Report::Model)]
    report: Report,
    /// Interval starts, e.g. "0,1/2" (default: left-packed)
    #[arg(long)]
    starts: Option<String>,
    /// Branch orientations, e.g. "+,-" (default: all increasing)
    #[arg(long)]
    orient: Option<String>,
    #[arg(long)]
    x: Option<String>,
    /// Finite word ("12") or eventually periodic code ("1(2)")
    #[arg(long)]
    word: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    prime: Option<u64>,
}

/// Parse `args` (including the program name), run, and return the exit code
/// with everything meant for stdout.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if !e.use_stderr() {
                return (EXIT_OK, e.render().to_string());
            }
            let detail = e.render().to_string();
            let v = json!({"error": {"kind": "parse", "detail": detail.trim_end()}});
            return (
                EXIT_PARSE,
                serde_json::to_string_pretty(&v).expect("json") + "\n",
            );
        }
    };
    let format = cli.format;
    let (code, value) = match dispatch(&cli) {
        Ok((value, undetermined)) => (
            if undetermined {
                EXIT_UNDETERMINED
            } else {
                EXIT_OK
            },
            value,
        ),
        Err(e) => (exit_code(&e), error_json(&e)),
    };
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&value).expect("json") + "\n",
        Format::Table => table::render(&value),
    };
    (code, text)
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => EXIT_PARSE,
        _ => EXIT_DOMAIN,
    }
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::DivisionByZero => "division_by_zero",
        Error::MixedFields(..) => "mixed_fields",
        Error::NegativeValuation(_) => "negative_valuation",
        Error::InvalidField(_) => "invalid_field",
        Error::ZeroPolynomial => "zero_polynomial",
        Error::ConstantPolynomial => "constant_polynomial",
        Error::DegreeTooSmall(_) => "degree_too_small",
        Error::TypeIIIPoint(_) => "type_iii_point",
        Error::ResultantDegenerate => "resultant_degenerate",
        Error::InvalidDilations(_) => "invalid_dilations",
        Error::GapError(_) => "gap",
        Error::TooLarge(_) => "too_large",
        Error::Parse(_) => "parse",
        Error::Precondition(_) => "precondition",
    }
}

fn error_json(e: &Error) -> Value {
    json!({"error": {"kind": error_kind(e), "detail": e.to_string()}})
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable report")
}

type Outcome = crate::Result<(Value, bool)>;

fn dispatch(cli: &Cli) -> Outcome {
    if let Command::Bernoulli(args) = &cli.command {
        return bernoulli_cmd(args);
    }
    if let Command::Family {
        benedetto: Some(p),
        vmin,
        vmax,
        ..
    } = &cli.command
    {
        let rows = benedetto_scan(*p, *vmin..=*vmax, cli.max_steps)?;
        let undetermined = rows.iter().any(|r| r.chi.exact().is_none());
        return Ok((json!({"prime": p, "rows": to_value(&rows)}), undetermined));
    }
    let field = parse_field(&cli.field)?;
    match &cli.command {
        Command::Np(a) => np_cmd(&field, a),
        Command::Degree(a) => degree_cmd(&field, a),
        Command::Sd(a) => sd_cmd(&field, a),
        Command::Wf(a) => wf_cmd(&field, a),
        Command::Profile {
            poly,
            center,
            from,
            to,
            emit_plot_data,
        } => {
            let p = parse_poly(&field, &poly.poly)?;
            let c = parse_scalar(&field, center)?;
            let prof = segment_profile(&p, &c, &parse_rational(from)?, &parse_rational(to)?)?;
            let mut v = json!({
                "poly": p.to_string(),
                "center": c.to_string(),
                "breakpoints": to_value(&prof)["breakpoints"],
                "pieces": to_value(&prof)["pieces"],
                "wild_locus": to_value(&wild_locus(&prof)),
            });
            if *emit_plot_data {
                let pts: Vec<[String; 2]> = prof
                    .wf_polyline()
                    .iter()
                    .map(|(r, w)| [fmt_q(r), fmt_q(w)])
                    .collect();
                v["plot"] = to_value(&pts);
            }
            Ok((v, false))
        }
        Command::Green { poly, at, roots } => {
            let p = parse_poly(&field, &poly.poly)?;
            if let Some(m) = roots {
                let m = parse_poly(&field, m)?;
                let s = green_sum_over_roots(&p, &m, cli.max_steps)?;
                let v = match &s {
                    RootGreenSum::Exact { sum, steps } => {
                        json!({"variant": "exact", "sum": fmt_q(sum), "steps": steps})
                    }
                    RootGreenSum::Undetermined {
                        lower,
                        upper,
                        steps,
                    } => json!({
                        "variant": "undetermined",
                        "lower": fmt_q(lower),
                        "upper": fmt_q(upper),
                        "steps": steps,
                    }),
                };
                return Ok((v, s.exact().is_none()));
            }
            let z = parse_scalar(&field, at.as_deref().expect("clap enforces --at"))?;
            let r = green_value(&p, &z, cli.max_steps)?;
            Ok((to_value(&r), matches!(r, GreenResult::Undetermined { .. })))
        }
        Command::Lyap(a) => {
            let p = parse_poly(&field, &a.poly)?;
            let b = przytycki_chi(&p, cli.max_steps)?;
            let terms: Vec<Value> = b
                .critical_terms
                .iter()
                .map(|t| {
                    json!({
                        "factor": t.factor.to_string(),
                        "weight": t.weight,
                        "green_sum": t.green_sum.to_string(),
                    })
                })
                .collect();
            let v = json!({
                "chi": b.chi.to_string(),
                "lower_bound": fmt_q(&b.lower_bound()),
                "equality_eq73": b.equality_holds(),
                "gamma_log": fmt_q(&b.gamma_log),
                "a_log": fmt_q(&b.a_log),
                "d": b.d,
                "d_prime": b.d_prime,
                "terms": terms,
            });
            Ok((v, b.chi.exact().is_none()))
        }
        Command::Fixed { poly, den, n } => {
            let p = parse_poly(&field, &poly.poly)?;
            let q = parse_poly(&field, den)?;
            let rep = fixed_point_report(&p, &q, *n)?;
            Ok((json!({"n": n, "classes": to_value(&rep)}), false))
        }
        Command::Family { poly, n_max, .. } => {
            let p = parse_poly(&field, poly.as_deref().expect("clap enforces --poly"))?;
            let r = family_classify(&p, *n_max, cli.max_steps)?;
            let v = json!({
                "chi": r.chi.to_string(),
                "regime": r.regime.to_string(),
                "multipliers_bounded": r.multipliers_bounded,
                "cycles": to_value(&r.cycles),
            });
            Ok((v, r.regime == Regime::Undetermined))
        }
        Command::Bernoulli(_) => unreachable!("handled above"),
    }
}

fn np_cmd(field: &FieldDesc, a: &PolyArg) -> Outcome {
    let p = parse_poly(field, &a.poly)?;
    let np = newton_polygon(&p)?;
    let vertices: Vec<(usize, String)> =
        np.vertices().iter().map(|(i, v)| (*i, fmt_q(v))).collect();
    let edges: Vec<Value> = np
        .edges()
        .iter()
        .map(|(s, l)| json!({"slope": fmt_q(s), "length": l}))
        .collect();
    let v = json!({
        "poly": p.to_string(),
        "vertices": vertices,
        "edges": edges,
        "roots": to_value(&root_valuations(&p)?),
    });
    Ok((v, false))
}

fn point_inputs(field: &FieldDesc, a: &PointArgs) -> crate::Result<(Poly, TypeIIPoint)> {
    Ok((
        parse_poly(field, &a.poly.poly)?,
        parse_point(field, &a.point)?,
    ))
}

fn point_type(x: &TypeIIPoint) -> &'static str {
    match x.point_type() {
        PointType::TypeII => "II",
        PointType::TypeIII => "III",
    }
}

fn degree_cmd(field: &FieldDesc, a: &PointArgs) -> Outcome {
    let (p, x) = point_inputs(field, a)?;
    let img = image_point(&p, &x)?;
    let v = json!({
        "point": x.to_string(),
        "type": point_type(&x),
        "degree": local_degree(&p, &x)?,
        "image": {"center": img.center.to_string(), "rho": fmt_q(&img.rho)},
    });
    Ok((v, false))
}

fn sd_cmd(field: &FieldDesc, a: &PointArgs) -> Outcome {
    let (p, x) = point_inputs(field, a)?;
    let v = json!({
        "point": x.to_string(),
        "sd_log": fmt_q(&spherical_derivative_log(&p, &x)?),
    });
    Ok((v, false))
}

fn wf_cmd(field: &FieldDesc, a: &PointArgs) -> Outcome {
    let (p, x) = point_inputs(field, a)?;
    let img = image_point(&p, &x)?;
    let insep = match insep_degree(&p, &x) {
        Ok(q) => Some(q),
        Err(Error::TypeIIIPoint(_)) => None,
        Err(e) => return Err(e),
    };
    let v = json!({
        "point": x.to_string(),
        "type": point_type(&x),
        "wf": fmt_q(&wf_value(&p, &x)?),
        "sd_log": fmt_q(&spherical_derivative_log(&p, &x)?),
        "diam_log": fmt_q(&diam_log(&x)),
        "image_diam_log": fmt_q(&diam_log(&img)),
        "local_degree": local_degree(&p, &x)?,
        "insep_degree": insep,
        "wf_upper_bound": insep.map(|q| fmt_q(&wild_bound(field, q))),
    });
    Ok((v, false))
}

fn parse_layout(args: &BernoulliArgs, k: usize) -> crate::Result<Option<Layout>> {
    if args.starts.is_none() && args.orient.is_none() {
        return Ok(None);
    }
    let dil = parse_dilations(&args.dilations)?;
    let mut layout = Layout::left_packed(&dil);
    if let Some(s) = &args.starts {
        layout.starts = s
            .split(',')
            .map(parse_rational)
            .collect::<crate::Result<_>>()?;
    }
    if let Some(o) = &args.orient {
        layout.orientations = o
            .split(',')
            .map(|t| match t.trim() {
                "+" | "inc" => Ok(Orientation::Increasing),
                "-" | "dec" => Ok(Orientation::Decreasing),
                other => Err(Error::Parse(format!("bad orientation {other:?}"))),
            })
            .collect::<crate::Result<_>>()?;
    }
    if layout.starts.len() != k || layout.orientations.len() != k {
        return Err(Error::Parse(format!("layout must list {k} branches")));
    }
    Ok(Some(layout))
}

fn need<'a, T>(x: &'a Option<T>, flag: &str) -> crate::Result<&'a T> {
    x.as_ref()
        .ok_or_else(|| Error::Parse(format!("this report needs --{flag}")))
}

fn bernoulli_cmd(args: &BernoulliArgs) -> Outcome {
    let dil = parse_dilations(&args.dilations)?;
    let model = bernoulli::build_model(&dil, parse_layout(args, dil.len())?)?;
    let v = match args.report {
        Report::Model => model_json(&model),
        Report::Apply => {
            let x = parse_rational(need(&args.x, "x")?)?;
            json!({"x": fmt_q(&x), "image": fmt_q(&model.apply(&x)?)})
        }
        Report::Itinerary => {
            let x = parse_rational(need(&args.x, "x")?)?;
            match args.n {
                Some(n) => {
                    json!({"x": fmt_q(&x), "itinerary": model.itinerary(&x, n)?.to_string()})
                }
                None => json!({"x": fmt_q(&x), "itinerary": model.full_itinerary(&x)?.to_string()}),
            }
        }
        Report::Decode => {
            let w: bernoulli::Itinerary = need(&args.word, "word")?.parse()?;
            json!({"word": w.to_string(), "point": fmt_q(&model.decode(&w)?)})
        }
        Report::Periodic => {
            let n = *need(&args.n, "n")?;
            let pts = bernoulli::periodic_points(&model, n)?;
            let total: num_bigint::BigInt = pts.iter().map(|p| &p.weight).sum();
            json!({"n": n, "total_weight": total.to_string(), "points": to_value(&pts)})
        }
        Report::Masses => {
            let w: Word = need(&args.word, "word")?.parse()?;
            let (eq, me) = bernoulli::cylinder_masses(&model, &w)?;
            json!({"word": w.to_string(), "equilibrium": fmt_q(&eq), "maxent": fmt_q(&me)})
        }
        Report::Entropy => to_value(&bernoulli::entropy_stats(&model)),
        Report::Equidistribution => {
            let n = *need(&args.n, "n")?;
            let m = args.m.unwrap_or(n);
            let rows = bernoulli::equidistribution_table(&model, n, m)?;
            let exact = rows
                .iter()
                .all(|r| r.weighted_deviation.is_zero() && r.unweighted_deviation.is_zero());
            json!({"n": n, "m": m, "all_deviations_zero": exact, "rows": to_value(&rows)})
        }
        Report::Lyapunov => {
            let p = *need(&args.prime, "prime")?;
            json!({"prime": p, "chi": fmt_q(&bernoulli::model_lyapunov(&model, p)?)})
        }
        Report::Hull => json!({"endpoints": to_value(&model.hull_endpoints())}),
    };
    Ok((v, false))
}

fn model_json(model: &BernoulliModel) -> Value {
    let mut v = to_value(model);
    v["k"] = json!(model.k());
    v
}
