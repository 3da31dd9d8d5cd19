fn main() {
    std::process::exit(cxr_pipeline::cli::main());
}
