//! Drive the command layer from Rust: the same jobs the `niep` binary runs.

use niep::cli::{run_with_env_tol, Command, Input, JobSpec};
use serde_json::json;

fn main() {
    let jobs = [
        JobSpec::new(Command::RealizeSuleimanova, vec![Input::Inline(json!({"values": [4, -1, -1, -1]}))]),
        JobSpec::new(
            Command::RealizePair,
            vec![
                Input::Inline(json!({"values": [10, -1, -2, -3]})),
                Input::Inline(json!({"values": [20, -1, -2, -3]})),
            ],
        ),
        JobSpec::new(Command::Check, vec![Input::Inline(json!({"values": [1, -2]}))]),
    ];
    for job in &jobs {
        let out = run_with_env_tol(job, None);
        println!(
            "{:<20} exit {}  status {}  {}",
            job.command.name(),
            out.exit_code,
            out.document["status"],
            out.document.get("message").and_then(|m| m.as_str()).unwrap_or("")
        );
    }
}
