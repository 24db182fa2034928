#![no_main]

use libfuzzer_sys::fuzz_target;
use wood_engine::{pair_from_json, pair_to_json};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(pair) = pair_from_json(s) {
        let again = pair_from_json(&pair_to_json(&pair)).expect("encoded pairs decode");
        assert_eq!(pair_to_json(&again), pair_to_json(&pair));
    }
});
