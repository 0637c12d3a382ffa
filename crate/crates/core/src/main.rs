fn main() {
    std::process::exit(metric_balls::cli::run(std::env::args_os()));
}
