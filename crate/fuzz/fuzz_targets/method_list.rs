#![no_main]

use libfuzzer_sys::fuzz_target;
use oscbath::{JMethod, Method};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(methods) = oscbath_cli::parse_method_list(text) {
        assert!(!methods.is_empty());
        for m in &methods {
            assert_eq!(m.name().parse::<Method>().ok(), Some(*m));
        }
    }
    if let Ok(m) = text.parse::<JMethod>() {
        assert_eq!(m.name().parse::<JMethod>().ok(), Some(m));
    }
});
