//! Replays the checked-in fuzz corpus through the same bodies as the fuzz
//! targets. Seeds named `bad_*` must be rejected, the rest accepted.

use std::fs;
use std::path::PathBuf;

use qbb::io::{
    decode_connection_expansion, decode_identity_report, decode_zero_table, encode_connection_expansion,
    encode_identity_report, encode_zero_table,
};
use qbb::real::Real;

fn seeds(target: &str) -> Vec<(String, Vec<u8>)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let path = e.unwrap().path();
            (path.file_name().unwrap().to_string_lossy().into_owned(), fs::read(&path).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

fn check(target: &str, accept: impl Fn(&[u8]) -> bool) {
    for (name, data) in seeds(target) {
        assert_eq!(accept(&data), !name.starts_with("bad_"), "{target}/{name}");
    }
}

#[test]
fn zero_table_seeds() {
    check("decode_zero_table", |data| {
        let Ok(t) = decode_zero_table(std::str::from_utf8(data).unwrap()) else { return false };
        let again = decode_zero_table(&encode_zero_table(&t)).unwrap();
        assert_eq!(again.zeros.len(), t.zeros.len());
        true
    });
}

#[test]
fn identity_report_seeds() {
    check("decode_identity_report", |data| {
        let Ok(r) = decode_identity_report(std::str::from_utf8(data).unwrap()) else { return false };
        let again = decode_identity_report(&encode_identity_report(&r)).unwrap();
        assert_eq!((again.id, again.pass), (r.id, r.pass));
        true
    });
}

#[test]
fn connection_expansion_seeds() {
    check("decode_connection_expansion", |data| {
        let Ok(e) = decode_connection_expansion(std::str::from_utf8(data).unwrap()) else { return false };
        let again = decode_connection_expansion(&encode_connection_expansion(&e)).unwrap();
        assert_eq!(again.coeffs.len(), e.coeffs.len());
        true
    });
}

#[test]
fn decimal_seeds() {
    check("parse_decimal", |data| {
        let (&p, rest) = data.split_first().unwrap();
        let prec = 16 + u32::from(p) * 4;
        let Ok(x) = Real::parse(std::str::from_utf8(rest).unwrap(), prec) else { return false };
        assert_eq!(Real::parse(&x.to_decimal(), prec).unwrap(), x);
        true
    });
}
