fn main() {
    std::process::exit(kgeo_cli::cli::run(std::env::args_os()));
}
