//! Arbitrary text into the zero-table decoder. Accepted tables must survive
//! a re-encode.

#![no_main]

use libfuzzer_sys::fuzz_target;
use qbb::io::{decode_zero_table, encode_zero_table};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(t) = decode_zero_table(text) {
        let again = decode_zero_table(&encode_zero_table(&t)).expect("re-encoded table decodes");
        assert_eq!(again.zeros.len(), t.zeros.len());
    }
});
