#![no_main]

use libfuzzer_sys::fuzz_target;
use monorees::grid::{parse_grid, MAX_GRID_POINTS};

fuzz_target!(|data: &[u8]| {
    let Some((&arity, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let arity = (arity % 5) as usize;
    if let Ok(points) = parse_grid(text, (arity > 0).then_some(arity)) {
        assert!(points.len() as u64 <= MAX_GRID_POINTS);
        if arity > 0 {
            assert!(points.iter().all(|p| p.arity() == arity));
        }
    }
});
