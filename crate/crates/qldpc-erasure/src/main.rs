fn main() {
    std::process::exit(qldpc_erasure::cli::run(std::env::args_os()));
}
