#![no_main]
use libfuzzer_sys::fuzz_target;

use tracedcat_cli::Scenario;

fuzz_target!(|data: &[u8]| {
    let Ok(name) = std::str::from_utf8(data) else { return };
    if let Ok(s) = name.parse::<Scenario>() {
        let _ = s.defaults();
        let _ = s.note();
        // group files are named by path, which need not round-trip
        if !name.starts_with("group-algebra:") {
            assert_eq!(s.name(), name);
        }
    }
});
