#![no_main]

use libfuzzer_sys::fuzz_target;
use wood_engine::{curve_from_json, curve_to_json};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(curve) = curve_from_json(s) {
        let again = curve_from_json(&curve_to_json(&curve)).expect("encoded curves decode");
        assert_eq!(curve_to_json(&again), curve_to_json(&curve));
    }
});
