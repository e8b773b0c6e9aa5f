#![no_main]

use bigraph::document::{census_from_json, census_to_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(census) = census_from_json(data) {
        let again = census_to_json(&census);
        let reparsed = census_from_json(again.as_bytes()).expect("re-encoded census decodes");
        assert_eq!(reparsed, census);
    }
});
