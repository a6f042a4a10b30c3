use env_logger::Env;

fn main() {
    env_logger::Builder::from_env(Env::new().filter("STARLIT_LOG")).init();
    std::process::exit(starlit::cli::run(std::env::args_os()));
}
