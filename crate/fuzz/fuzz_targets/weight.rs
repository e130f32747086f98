#![no_main]
use e510::sl5rep::Weight;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(w) = s.parse::<Weight>() {
            assert_eq!(w.to_string().parse::<Weight>().ok(), Some(w));
        }
    }
});
