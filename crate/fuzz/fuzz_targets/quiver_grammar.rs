#![no_main]

use libfuzzer_sys::fuzz_target;

// The quiver grammar must reject malformed input with a structured
// error, never a panic.
fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let _ = agemo::quiver::parse_quiver(s);
    }
});
