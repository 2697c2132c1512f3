#![no_main]

use circulant::parse::parse_u64_list;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(values) = parse_u64_list(s) {
        let joined = values
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(",");
        assert_eq!(parse_u64_list(&joined).unwrap(), values);
    }
});
