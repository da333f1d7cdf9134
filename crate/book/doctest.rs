// Every chapter is pulled in as module docs so `cargo test --doc` runs the
// book's code blocks against the current library.

#[doc = include_str!("src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("src/graphs.md")]
pub mod graphs {}
#[doc = include_str!("src/cycles.md")]
pub mod cycles {}
#[doc = include_str!("src/inflation.md")]
pub mod inflation {}
#[doc = include_str!("src/embeddings.md")]
pub mod embeddings {}
#[doc = include_str!("src/atlas.md")]
pub mod atlas {}
#[doc = include_str!("src/search.md")]
pub mod search {}
#[doc = include_str!("src/cli.md")]
pub mod cli {}
