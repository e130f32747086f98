#![no_main]
use e510::superalgebra::GradedElement;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(a) = s.parse::<GradedElement>() {
            assert_eq!(a.to_string().parse::<GradedElement>().ok(), Some(a));
        }
    }
});
