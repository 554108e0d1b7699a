#![no_main]

use libfuzzer_sys::fuzz_target;
use qbb::io::{decode_connection_expansion, encode_connection_expansion};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(e) = decode_connection_expansion(text) {
        let again = decode_connection_expansion(&encode_connection_expansion(&e)).expect("re-encoded expansion decodes");
        assert_eq!(again.coeffs.len(), e.coeffs.len());
    }
});
