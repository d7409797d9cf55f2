fn main() {
    edgescm::cli::main()
}
