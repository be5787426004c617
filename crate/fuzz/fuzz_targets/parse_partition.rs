#![no_main]

use libfuzzer_sys::fuzz_target;
use nerve_forge::harness::{parse_partition, partition_to_json};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = parse_partition(text) {
        assert!(p.part_sizes().iter().all(|&s| s > 0));
        assert_eq!(parse_partition(&partition_to_json(&p)).unwrap(), p);
    }
});
