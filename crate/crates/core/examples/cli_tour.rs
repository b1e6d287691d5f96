// The command line driven in-process.

pub fn run_example() -> nadyn::Result<()> {
    let calls: [&[&str]; 4] = [
        &[
            "lyap",
            "--field",
            "padic:3",
            "--poly",
            "(1/3)*z^3 - (1/3)*z^9",
        ],
        &[
            "green",
            "--field",
            "laurent",
            "--poly",
            "z^2 + (1)/(t)",
            "--at",
            "0",
        ],
        &["bernoulli", "--dilations", "2,3", "--report", "entropy"],
        &[
            "fixed",
            "--format",
            "table",
            "--poly",
            "(1/9)*z^12 - (1/9)*z^9",
        ],
    ];
    for args in calls {
        let (code, out) = nadyn::cli::run(std::iter::once("nadyn").chain(args.iter().copied()));
        println!("$ nadyn {}  (exit {code})\n{out}", args.join(" "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> nadyn::Result<()> {
    run_example()
}
