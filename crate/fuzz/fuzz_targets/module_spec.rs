#![no_main]

use libfuzzer_sys::fuzz_target;

use agemo::scalar::Field;

// The builtin-spec mini-language `name:key=value,...`.
fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(call) = agemo::formats::parse_spec(s) {
            let _ = call.rational("alpha", Field::Rational);
            let _ = call.rational("q", Field::Prime(7));
            let _ = call.allow_only(&["alpha", "q", "side"]);
        }
    }
});
