fn main() {
    std::process::exit(geomfree_cli::run(std::env::args_os()));
}
