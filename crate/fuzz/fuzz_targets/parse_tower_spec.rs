#![no_main]

use libfuzzer_sys::fuzz_target;

// lines: d, p, kind, level, optional polynomials
fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let mut parts = s.splitn(5, '\n');
    let (Some(d), Some(p), Some(kind)) = (parts.next(), parts.next(), parts.next()) else { return };
    let level = parts.next().and_then(|l| l.trim().parse().ok()).unwrap_or(0u32).min(4);
    let _ = zptorsion::parse::parse_tower_spec(d, p, kind, level, parts.next());
});
