use std::io::Write;

use clap::Parser;
use superomni_cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not our failure
            let _ = stdout.write_all(out.text.as_bytes());
            if out.pass {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("superomni: {e}");
            e.exit_code()
        }
    };
    std::process::exit(code);
}
