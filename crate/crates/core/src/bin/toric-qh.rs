fn main() {
    std::process::exit(toric_qh::cli::main(std::env::args_os()));
}
