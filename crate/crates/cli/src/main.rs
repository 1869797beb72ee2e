// Copyright 2026 The diagsynth Authors
// SPDX-License-Identifier: Apache-2.0

use clap::Parser;
use diagsynth_cli::{run, Cli};

fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    std::process::exit(run(cli));
}
