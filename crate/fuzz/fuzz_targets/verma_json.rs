#![no_main]
use e510::sl5rep::Weight;
use e510::verma::VermaVector;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let _ = VermaVector::from_json(Weight([0, 0, 0, 1]), 5, s);
    }
});
