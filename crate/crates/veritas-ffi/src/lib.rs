//! C ABI surface; fleshed out alongside the core evaluators.
