#![no_main]

use libfuzzer_sys::fuzz_target;
use splitting_types::SplittingType;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(t) = s.parse::<SplittingType>() {
        assert_eq!(t.to_string().parse::<SplittingType>().expect("display parses"), t);
    }
});
