#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(settings) = oscbath_cli::parse_config(text) else { return };
    if let Ok(config) = settings.build() {
        // a built config must describe a valid bath and a finite grid
        assert!(config.model.validate().is_ok());
        let thetas = config.grid.values();
        assert!(thetas.iter().all(|t| t.is_finite() && *t > 0.0));
    }
});
