fn main() {
    std::process::exit(wpfol_cli::run());
}
