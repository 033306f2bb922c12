#![no_main]
use libfuzzer_sys::fuzz_target;

use tracedcat::formats::parse_poset;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = parse_poset("P", text) {
        // a parsed order is reflexive and antisymmetric
        for x in 0..p.size() {
            assert!(p.leq(x, x));
            for y in 0..p.size() {
                assert!(x == y || !(p.leq(x, y) && p.leq(y, x)));
            }
        }
    }
});
