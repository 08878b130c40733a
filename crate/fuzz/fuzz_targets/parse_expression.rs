#![no_main]

use libfuzzer_sys::fuzz_target;
use qhyper::expr::{parse_expression, parse_poly};
use qhyper::Params;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if text.len() > 256 {
        return;
    }
    if let Ok(parsed) = parse_expression(text) {
        let p = Params::default();
        if let Ok((x, kind)) = parse_poly(text, &p) {
            assert_eq!(kind, parsed.kind);
            let _ = x.to_string();
        }
    }
});
