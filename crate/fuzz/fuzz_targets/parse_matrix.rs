#![no_main]
use libfuzzer_sys::fuzz_target;

use tracedcat::formats::parse_matrix;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(m) = parse_matrix(text) {
        let d = m.to_dense();
        assert_eq!(d.len(), m.rows());
        assert!(d.iter().all(|r| r.len() == m.cols()));
    }
});
