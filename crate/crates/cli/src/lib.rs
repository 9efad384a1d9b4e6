//! Command-line tool and HTTP service around the `hindi_ime` engine.

pub mod cli;
pub mod server;
