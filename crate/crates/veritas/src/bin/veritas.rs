fn main() {
    // CLI wired up after the evaluators land.
}
