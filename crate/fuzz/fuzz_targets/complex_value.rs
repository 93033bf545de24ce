#![no_main]

use libfuzzer_sys::fuzz_target;
use oscbath::ComplexValue;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(z) = text.parse::<ComplexValue>() {
        assert!(z.re().is_finite() && z.im().is_finite());
        let again: ComplexValue = z.to_string().parse().expect("display output parses");
        assert_eq!(again.get(), z.get());
    }
});
