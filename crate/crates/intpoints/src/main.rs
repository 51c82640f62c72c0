fn main() {
    std::process::exit(intpoints::cli::run());
}
