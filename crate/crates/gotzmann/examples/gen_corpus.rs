//! Regenerate the committed seed corpus:
//! `cargo run -p gotzmann --example gen_corpus > crates/gotzmann/tests/data/seed_corpus.json`

fn main() {
    let ideals = gotzmann::oracle::generate_corpus(
        gotzmann::oracle::CORPUS_SEED,
        gotzmann::oracle::CORPUS_COUNT,
    );
    let json = serde_json::json!({
        "seed": gotzmann::oracle::CORPUS_SEED,
        "count": gotzmann::oracle::CORPUS_COUNT,
        "ideals": ideals.iter().map(|i| i.to_json()).collect::<Vec<_>>(),
    });
    println!("{}", serde_json::to_string_pretty(&json).unwrap());
}
