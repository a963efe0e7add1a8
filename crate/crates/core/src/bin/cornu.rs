fn main() {
    std::process::exit(cornu::plot::run_cli(std::env::args_os().skip(1)));
}
