#![no_main]
use e510::sl5rep::Decomposition;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let _ = Decomposition::from_json(s);
    }
});
