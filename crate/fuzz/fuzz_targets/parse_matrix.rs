#![no_main]

use bigraph::{canonical_form, BinaryMatrix};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(a) = text.parse::<BinaryMatrix>() else {
        return;
    };
    assert_eq!(a.to_string(), text);
    if a.num_rows() <= 6 {
        let c = canonical_form(&a);
        assert_eq!(c.count_ones(), a.count_ones());
        assert_eq!(canonical_form(&c), c);
    }
});
