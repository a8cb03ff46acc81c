fn main() {
    std::process::exit(leibniz_bialgebra::cli::main())
}
