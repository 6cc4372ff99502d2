fn main() {
    let code = gschur::cli::run(std::env::args_os());
    std::process::exit(code);
}
