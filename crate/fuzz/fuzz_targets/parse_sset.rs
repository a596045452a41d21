#![no_main]

use libfuzzer_sys::fuzz_target;
use workbench_core::interchange::{parse_sset, write_sset};

// Anything that parses must write back to a fixed point.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(set) = parse_sset(text) {
        let written = write_sset(&set);
        let again = parse_sset(&written).expect("written set parses");
        assert_eq!(write_sset(&again), written);
    }
});
