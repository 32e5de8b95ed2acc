#![no_main]

use libfuzzer_sys::fuzz_target;
use monorees::dsl::parse_workspace;

// Anything that parses must print to text that parses back to the same workspace.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(ws) = parse_workspace(text) {
        let printed = ws.to_string();
        let again = parse_workspace(&printed).expect("printed workspace reparses");
        assert_eq!(again.to_string(), printed);
    }
});
