fn main() {
    std::process::exit(rootgap::cli::run());
}
