#![no_main]

use libfuzzer_sys::fuzz_target;

// Structure-constant tables: parsing plus the full validation pass
// (associativity, unit, idempotents, radical) must never panic.
fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let _ = agemo::formats::parse_algebra_table(s);
    }
});
