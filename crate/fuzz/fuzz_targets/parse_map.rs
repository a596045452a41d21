#![no_main]

use std::sync::Arc;

use libfuzzer_sys::fuzz_target;
use workbench_core::interchange::{map_file, parse_map, to_canonical_json};
use workbench_core::std_simplex;

// Maps are resolved against Δ¹ → Δ², which covers degenerate values.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let domain = Arc::new(std_simplex(1));
    let codomain = Arc::new(std_simplex(2));
    if let Ok(map) = parse_map(text, &domain, &codomain) {
        let written = to_canonical_json(&map_file(&map));
        let again = parse_map(&written, &domain, &codomain).expect("written map parses");
        assert_eq!(again, map);
    }
});
