use std::io::Write;

fn main() {
    if let Some(threads) = std::env::var("POLYPROD_THREADS")
        .ok()
        .and_then(|t| t.parse::<usize>().ok())
    {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .expect("thread pool is configured once");
    }
    let outcome = polyprod_cli::run(std::env::args().skip(1));
    std::io::stdout()
        .write_all(outcome.stdout.as_bytes())
        .expect("stdout");
    std::io::stderr()
        .write_all(outcome.stderr.as_bytes())
        .expect("stderr");
    std::process::exit(outcome.code);
}
