//! Command-line front end and HTTP API for negdetect.

pub mod config;
pub mod output;
pub mod server;
