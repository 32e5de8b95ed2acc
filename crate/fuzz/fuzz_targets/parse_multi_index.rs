#![no_main]

use libfuzzer_sys::fuzz_target;
use monorees::grid::parse_multi_index;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(n) = parse_multi_index(text) {
        let shown: Vec<String> = n.entries().iter().map(u32::to_string).collect();
        assert_eq!(parse_multi_index(&shown.join(",")).unwrap(), n);
    }
});
