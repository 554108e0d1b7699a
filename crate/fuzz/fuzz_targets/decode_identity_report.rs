#![no_main]

use libfuzzer_sys::fuzz_target;
use qbb::io::{decode_identity_report, encode_identity_report};

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(r) = decode_identity_report(text) {
            let again = decode_identity_report(&encode_identity_report(&r)).expect("re-encoded report decodes");
            assert_eq!(again.id, r.id);
            assert_eq!(again.pass, r.pass);
        }
    }
});
