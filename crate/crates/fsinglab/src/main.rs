fn main() {
    std::process::exit(fsinglab::cli_placeholder());
}
