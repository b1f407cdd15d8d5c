//! A short dichotomy run written as CSV to stdout.

use cecac::bench::{run_suite, write_csv, Suite};

fn main() {
    let rows = run_suite(Suite::Dichotomy, 50, 3).unwrap();
    write_csv(std::io::stdout(), &rows).unwrap();
}
