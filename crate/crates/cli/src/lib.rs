//! Library half of the CLI: class-expression parsing, output rendering and
//! the built-in verification suites. The `gysin` binary is a thin dispatcher
//! over these.

pub mod checks;
pub mod output;
pub mod parse;
