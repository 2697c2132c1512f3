#![no_main]

use circulant::parse::parse_graph_line;
use libfuzzer_sys::fuzz_target;

// keeps gcd-class construction cheap
const MAX_ORDER: u64 = 1 << 16;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let Ok((n, input)) = parse_graph_line(s) else {
        return;
    };
    if n > MAX_ORDER {
        return;
    }
    if let Ok(g) = input.build(n) {
        let members = g.symbol().members();
        assert_eq!(g.degree(), members.len() as u64);
        assert!(members
            .iter()
            .all(|&s| s > 0 && s < n && g.symbol().contains(n - s)));
        if let Some(d) = g.integrality_decomposition() {
            assert_eq!(d.degree(), g.degree());
        }
    }
});
