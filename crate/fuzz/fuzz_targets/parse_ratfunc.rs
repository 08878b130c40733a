#![no_main]

use libfuzzer_sys::fuzz_target;
use qhyper::expr::parse_ratfunc;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if text.len() > 256 {
        return;
    }
    if let Ok(f) = parse_ratfunc(text) {
        let back = parse_ratfunc(&f.to_string()).expect("printed form parses");
        assert_eq!(back, f);
    }
});
