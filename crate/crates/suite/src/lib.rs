//! Test-only package; the acceptance run lives in `tests/acceptance.rs`.
