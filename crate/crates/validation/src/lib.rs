//! Holds the `acceptance` test target; run it with
//! `cargo test -p forster-validation --test acceptance`.
