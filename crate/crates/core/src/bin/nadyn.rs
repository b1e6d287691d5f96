fn main() {
    let (code, out) = nadyn::cli::run(std::env::args_os());
    print!("{out}");
    std::process::exit(code);
}
