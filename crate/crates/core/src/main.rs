fn main() {
    std::process::exit(regfact::cli::run(std::env::args_os()));
}
