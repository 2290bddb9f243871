fn main() {
    std::process::exit(symqudit::cli::run(std::env::args_os()));
}
