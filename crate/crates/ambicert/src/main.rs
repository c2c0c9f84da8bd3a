fn main() { std::process::exit(ambicert::cli::run()); }
