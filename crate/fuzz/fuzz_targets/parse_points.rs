#![no_main]

use libfuzzer_sys::fuzz_target;
use nerve_forge::harness::{parse_points, points_to_json};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(ps) = parse_points(text) {
        let again = parse_points(&points_to_json(&ps)).expect("canonical output parses");
        assert_eq!(again, ps);
    }
});
