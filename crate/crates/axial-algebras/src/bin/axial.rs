use std::io::Write;

fn main() {
    let mut out = std::io::stdout().lock();
    let code = axial_algebras::cli::run(std::env::args().skip(1), &mut out);
    let _ = out.flush();
    std::process::exit(code);
}
