use std::io::{self, Read};
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let mut stdin = io::stdin().lock();
    let mut input = Vec::new();
    let stdin_reader = move || -> io::Result<Vec<u8>> {
        stdin.read_to_end(&mut input)?;
        Ok(input)
    };
    let code = bchrome::cli::run(
        &args,
        stdin_reader,
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    ExitCode::from(code)
}
