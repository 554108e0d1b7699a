//! The decimal scalar parser. The first byte picks the precision so short
//! and long mantissas are both exercised.

#![no_main]

use libfuzzer_sys::fuzz_target;
use qbb::real::Real;

fuzz_target!(|data: &[u8]| {
    let Some((&p, rest)) = data.split_first() else { return };
    let prec = 16 + u32::from(p) * 4;
    if let Ok(s) = std::str::from_utf8(rest) {
        if let Ok(x) = Real::parse(s, prec) {
            assert!(x.is_finite());
            let back = Real::parse(&x.to_decimal(), prec).expect("printed value parses");
            assert_eq!(back, x);
        }
    }
});
