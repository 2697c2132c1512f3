#![no_main]

use circulant::quantum::{is_scalar_at, transfer_amplitude_exact, RationalAngle};
use circulant::DivisorSet;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(t) = s.parse::<RationalAngle>() {
        assert!(t.denom() > 0);
        assert_eq!(RationalAngle::new(t.numer(), t.denom()).unwrap(), t);
        assert!(t.to_f64().is_finite());
        let d = DivisorSet::new(12, [1, 4, 6]).unwrap();
        for b in 0..12 {
            let amp = transfer_amplitude_exact(&d, 0, b, t).unwrap();
            assert!(amp.modulus <= 1.0 + 1e-9);
        }
        let _ = is_scalar_at(&d, t);
    }
});
