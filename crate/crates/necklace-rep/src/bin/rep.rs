fn main() {
    std::process::exit(necklace_rep::cli::main());
}
