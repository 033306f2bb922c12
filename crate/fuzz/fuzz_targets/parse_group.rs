#![no_main]
use libfuzzer_sys::fuzz_target;

use tracedcat::formats::parse_group;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = parse_group(text) {
        let e = g.identity();
        for a in 0..g.order() {
            assert_eq!(g.mul(a, g.inverse(a)), e);
        }
    }
});
