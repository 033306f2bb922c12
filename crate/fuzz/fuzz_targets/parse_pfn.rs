#![no_main]
use libfuzzer_sys::fuzz_target;

use tracedcat::formats::{parse_label_set, parse_pfn};
use tracedcat::model_iter::SetObj;

// first line: a label set; the rest: a partial function on it
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let (head, body) = text.split_once('\n').unwrap_or((text, ""));
    let Ok(set) = parse_label_set(head) else { return };
    let s = SetObj::base(set);
    let t = SetObj::sum(&s, &SetObj::range(1));
    let _ = parse_pfn(&s, &t, body);
});
