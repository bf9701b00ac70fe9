fn main() {
    std::process::exit(demazure::cli::main());
}
