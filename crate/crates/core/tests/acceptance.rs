//! One line per acceptance criterion. Run with
//! `cargo test -p zptorsion --test acceptance`.
//!
//! Criteria listed in KNOWN_RED fail for reasons recorded next to them; the
//! binary exits nonzero only when some other criterion fails.

mod common;

use std::collections::BTreeSet;
use std::fmt::Display;
use std::time::{Duration, Instant};

use zptorsion::arith::cyclotomic_real_minpoly;
use zptorsion::arith::numfield::{make_labeled, quadratic_field, rationals};
use zptorsion::classifier::{
    classify, derive_theorem_list, najman_list, shipped_corpus, verify_certificate, BaseClass, ClassificationResult,
};
use zptorsion::curve::model::{EllipticCurveQ, GroupShape};
use zptorsion::gl2::{enumerate_subgroups, fixed_cyclic_subgroups, gl2_order, is_abelian, is_admissible_image};
use zptorsion::isogeny::{kernel_field_degrees, kernel_fingerprints_in};
use zptorsion::lmfdb::mazur_list;
use zptorsion::torsion::torsion_over_field;
use zptorsion::tower::level::{quadratic_base, tower_level};
use zptorsion::tower::predicates::{admits_subfield, admits_subfield_with, contains_mu, Admits};
use zptorsion::tower::spec::{TowerKind, TowerSpec};

/// 3: GL2(Z/4) has abelian subgroups of order 6 (none of them a Galois image).
/// 4: the d = -1 and d = -3 lists here omit Z/15, which needs Q(sqrt 5) or
///    Q(sqrt -15); d = -3 also keeps Z/6 x Z/6.
/// 8: curves whose 25-isogeny is not backed by 5-torsion over K are determined.
const KNOWN_RED: [u32; 3] = [3, 4, 8];

struct Outcome {
    pass: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { pass: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { pass: false, detail: detail.into() }
}

fn curve(label: &str) -> EllipticCurveQ {
    shipped_corpus().get(label).unwrap_or_else(|| panic!("{label} is not in the fixtures")).curve()
}

fn show_set(s: &BTreeSet<GroupShape>) -> String {
    s.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ")
}

fn shapes(cyclic: &[u64], two: &[u64]) -> BTreeSet<GroupShape> {
    let mut out: BTreeSet<GroupShape> = cyclic.iter().map(|&n| GroupShape::cyclic(n)).collect();
    out.extend(two.iter().map(|&n| GroupShape::new(2, 2 * n).unwrap()));
    out
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let out = f();
    (out, t.elapsed())
}

fn c1() -> Outcome {
    let mut notes = vec![];
    let mut ok = true;
    for (label, d) in [("50b1", 5), ("50b2", -15)] {
        let k = quadratic_field(d).unwrap();
        let (t, el) = timed(|| torsion_over_field(&curve(label), &k));
        match t {
            Ok(t) => {
                ok &= t.shape == GroupShape::cyclic(15) && el < Duration::from_secs(30);
                notes.push(format!("{label} over Q(sqrt {d}): {} in {:.1}s", t.shape, el.as_secs_f64()));
            }
            Err(e) => {
                ok = false;
                notes.push(format!("{label}: {e}"));
            }
        }
    }
    Outcome { pass: ok, detail: notes.join("; ") }
}

const NAJMAN_FIELDS: [i64; 10] = [-1, -2, -3, -5, -6, -15, 2, 3, 5, 6];

fn c2() -> Outcome {
    let corpus = shipped_corpus();
    if corpus.records.len() < 30 {
        return fail(format!("only {} fixture curves", corpus.records.len()));
    }
    let q = rationals();
    let mazur = mazur_list();
    let fields: Vec<_> = NAJMAN_FIELDS.iter().map(|&d| (d, quadratic_field(d).unwrap(), najman_list(BaseClass::of(d)))).collect();
    let mut checked = 0;
    for rec in &corpus.records {
        let e = rec.curve();
        match torsion_over_field(&e, &q) {
            Ok(t) if mazur.contains(&t.shape) => {}
            Ok(t) => return fail(format!("{} has {} over Q", rec.label, t.shape)),
            Err(err) => return fail(format!("{} over Q: {err}", rec.label)),
        }
        for (d, k, list) in &fields {
            match torsion_over_field(&e, k) {
                Ok(t) if list.contains(&t.shape) => checked += 1,
                Ok(t) => return fail(format!("{} has {} over Q(sqrt {d})", rec.label, t.shape)),
                Err(err) => return fail(format!("{} over Q(sqrt {d}): {err}", rec.label)),
            }
        }
    }
    pass(format!("{} curves over Q and {checked} curve-field pairs", corpus.records.len()))
}

fn c3() -> Outcome {
    let (o3, o4) = (gl2_order(3), gl2_order(4));
    let six: Vec<_> = enumerate_subgroups(4).unwrap().into_iter().filter(|h| h.order() == 6).collect();
    let abelian: Vec<_> = six.iter().filter(|h| is_abelian(h)).collect();
    let admissible_abelian = abelian.iter().filter(|h| is_admissible_image(h)).count();
    let two: Vec<_> = enumerate_subgroups(3).unwrap().into_iter().filter(|h| h.order() == 2).collect();
    let fixing = two.iter().filter(|h| !fixed_cyclic_subgroups(h, 3).is_empty()).count();
    let detail = format!(
        "|GL2(Z/3)| = {o3}, |GL2(Z/4)| = {o4}; {} subgroups of order 6 in GL2(Z/4), {} abelian ({admissible_abelian} of those admissible); {fixing}/{} order-2 subgroups of GL2(Z/3) fix a line",
        six.len(),
        abelian.len(),
        two.len()
    );
    let ok = o3 == 48 && o4 == 96 && !six.is_empty() && abelian.is_empty() && !two.is_empty() && fixing == two.len();
    Outcome { pass: ok, detail }
}

fn c4() -> Outcome {
    let generic = shapes(&[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 15, 16, 18, 21, 27], &[1, 2, 3, 4, 5, 6, 7, 9]);
    let mut minus1 = generic.clone();
    minus1.insert(GroupShape::new(4, 4).unwrap());
    let mut minus3 = generic.clone();
    minus3.extend([3, 6, 9].map(|b| GroupShape::new(3, b).unwrap()));
    let anti = shapes(&[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16], &[1, 2, 3, 4, 5, 6, 7, 9]);
    let mut cases = vec![
        ("p = 3 cyclotomic, generic d", TowerKind::Cyclotomic, 3, BaseClass::Generic, generic),
        ("p = 3 cyclotomic, d = -1", TowerKind::Cyclotomic, 3, BaseClass::Minus1, minus1),
        ("p = 3 cyclotomic, d = -3", TowerKind::Cyclotomic, 3, BaseClass::Minus3, minus3),
        ("p = 3 anticyclotomic", TowerKind::Anticyclotomic, 3, BaseClass::Generic, anti),
    ];
    for p in [7, 11, 13] {
        for class in [BaseClass::Generic, BaseClass::Minus1, BaseClass::Minus3] {
            cases.push(("Najman", TowerKind::Cyclotomic, p, class, najman_list(class).into_iter().collect()));
        }
    }
    let mut ok = true;
    let mut notes = vec![];
    for (name, kind, p, class, want) in cases {
        let got = derive_theorem_list(p, kind, class).unwrap();
        if got != want {
            ok = false;
            let missing: BTreeSet<_> = want.difference(&got).copied().collect();
            let extra: BTreeSet<_> = got.difference(&want).copied().collect();
            notes.push(format!("{name} (p = {p}, {class:?}): missing [{}], extra [{}]", show_set(&missing), show_set(&extra)));
        }
    }
    if ok {
        pass("all lists reproduced")
    } else {
        fail(notes.join("; "))
    }
}

const C5_DS: [i64; 5] = [5, -1, -3, -6, -15];
const C5_CURVES: usize = 24;

fn c5() -> Outcome {
    let records = &shipped_corpus().records[..C5_CURVES];
    let mut runs = 0;
    for rec in records {
        let e = rec.curve();
        for d in C5_DS {
            let k = quadratic_field(d).unwrap();
            let tk = match torsion_over_field(&e, &k) {
                Ok(t) => t.shape,
                Err(err) => return fail(format!("{} over Q(sqrt {d}): {err}", rec.label)),
            };
            for p in [7, 11, 13] {
                let spec = TowerSpec::cyclotomic(d, p).unwrap();
                match classify(&e, &spec) {
                    Ok((ClassificationResult::Determined { shape }, cert)) if shape == tk => {
                        if !verify_certificate(&cert, &e, &spec) {
                            return fail(format!("certificate for {} on {spec} does not verify", rec.label));
                        }
                        runs += 1;
                    }
                    Ok((r, _)) => return fail(format!("{} on {spec}: {}, expected {tk}", rec.label, show_result(&r))),
                    Err(err) => return fail(format!("{} on {spec}: {err}", rec.label)),
                }
            }
        }
    }
    pass(format!("{} curves x {} specs = {runs} classifications, all verified", records.len(), C5_DS.len() * 3))
}

fn c6() -> Outcome {
    let corpus = shipped_corpus();
    let grid = common::grid();
    let mut notes = vec![];
    let mut ok = true;
    for (label, n, degree, p) in [("1849a1", 43, 21, 7), ("4489a1", 67, 33, 11)] {
        let e = curve(label);
        let degrees = kernel_field_degrees(&e, n).unwrap_or_default();
        ok &= degrees == vec![degree];
        let fps = kernel_fingerprints_in(corpus, &e, n).unwrap_or_default();
        let towers: Vec<_> = grid.iter().filter(|s| s.p == p).collect();
        let rejected = towers.iter().all(|s| !fps.is_empty() && fps.iter().all(|f| admits_subfield(s, f) == Admits::No));
        ok &= rejected;
        notes.push(format!("{label}: degrees {degrees:?}, rejected in {} p = {p} towers: {rejected}", towers.len()));
    }
    let elevens: Vec<_> = corpus.records.iter().filter(|r| r.has_isogeny(11)).collect();
    let fives: Vec<_> = grid.iter().filter(|s| s.p == 5).collect();
    for rec in &elevens {
        let e = rec.curve();
        let fps = kernel_fingerprints_in(corpus, &e, 11).unwrap_or_default();
        let quintic: Vec<_> = fps.iter().filter(|f| f.degree == 5).collect();
        let by_ramification = !quintic.is_empty()
            && fives.iter().all(|s| {
                quintic.iter().all(|f| {
                    let (a, why) = admits_subfield_with(s, f, None);
                    a == Admits::No && why.contains("ramifies")
                })
            });
        ok &= by_ramification;
        if !by_ramification {
            notes.push(format!("{}: quintic kernel field not rejected by ramification", rec.label));
        }
    }
    notes.push(format!("{} curves with an 11-isogeny, quintic field rejected in {} p = 5 towers", elevens.len(), fives.len()));
    Outcome { pass: ok, detail: notes.join("; ") }
}

fn c7() -> Outcome {
    let mut notes = vec![];
    let mut ok = true;
    let z9 = make_labeled(&cyclotomic_real_minpoly(9).unwrap(), Some("Q(zeta9)+".into())).unwrap();
    let t = torsion_over_field(&curve("162b1"), &z9).map(|t| t.shape);
    ok &= t.as_ref().ok() == Some(&GroupShape::cyclic(21));
    notes.push(format!("162b1 over Q(zeta9)+: {}", fmt_res(&t)));
    for (label, spec, want) in [
        ("162b1", TowerSpec::cyclotomic(-2, 3).unwrap(), GroupShape::cyclic(21)),
        ("54b3", TowerSpec::anticyclotomic(-6, 3).unwrap(), GroupShape::new(2, 18).unwrap()),
    ] {
        let r = classify(&curve(label), &spec).map(|(r, _)| r);
        ok &= matches!(&r, Ok(ClassificationResult::Determined { shape }) if *shape == want);
        notes.push(format!("{label} on {spec}: {}", fmt_res(&r.map(|r| show_result(&r)))));
    }
    Outcome { pass: ok, detail: notes.join("; ") }
}

fn show_result(r: &ClassificationResult) -> String {
    match r {
        ClassificationResult::Determined { shape } => format!("determined {shape}"),
        ClassificationResult::Conditional { options, .. } => format!("conditional on [{}]", show_set(options)),
    }
}

fn fmt_res<T: Display, E: Display>(r: &Result<T, E>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

fn c8() -> Outcome {
    let corpus = shipped_corpus();
    let labels = corpus.search_isogeny(999, 25);
    let mut twenty_five = vec![];
    let mut explained = vec![];
    let mut unexplained = vec![];
    let mut conditional = 0;
    for label in &labels {
        let e = curve(label);
        for d in [-1, -2, 5] {
            let spec = TowerSpec::cyclotomic(d, 5).unwrap();
            let mut five_over_k = false;
            for n in [0, 1] {
                let field = if n == 0 { quadratic_base(&spec) } else { tower_level(&spec, n) };
                match field.and_then(|f| torsion_over_field(&e, &f)) {
                    Ok(t) => {
                        if t.shape.q_part(5).1 >= 2 {
                            twenty_five.push(format!("{label} d = {d} level {n}"));
                        }
                        if n == 0 {
                            five_over_k = t.shape.q_part(5).1 > 0;
                        }
                    }
                    Err(err) => return fail(format!("{label} d = {d} level {n}: {err}")),
                }
            }
            match classify(&e, &spec) {
                Ok((ClassificationResult::Conditional { .. }, _)) => conditional += 1,
                Ok((ClassificationResult::Determined { shape }, _)) if !five_over_k => explained.push(format!("{label}/{d} {shape}")),
                Ok((ClassificationResult::Determined { shape }, _)) => unexplained.push(format!("{label}/{d} {shape}")),
                Err(err) => return fail(format!("{label} d = {d}: {err}")),
            }
        }
    }
    let scanned = format!("{} curves x 3 fields, levels 0 and 1", labels.len());
    if labels.len() < 20 || !twenty_five.is_empty() {
        return fail(format!("{scanned}; Z/25 found: {}", twenty_five.join(", ")));
    }
    let mut summary = format!("{scanned}: no Z/25; classify Conditional for {conditional}/{}", 3 * labels.len());
    if !explained.is_empty() {
        let sample = explained.iter().take(4).cloned().collect::<Vec<_>>().join(", ");
        summary += &format!("; Determined for {} pairs with E(K)[5] = 0, where Z/25 over L is impossible ({sample}, ...)", explained.len());
    }
    if !unexplained.is_empty() {
        summary += &format!("; Determined despite E(K)[5] != 0: {}", unexplained.join(", "));
    }
    Outcome { pass: explained.is_empty() && unexplained.is_empty(), detail: summary }
}

fn c9() -> Outcome {
    let grid = common::grid();
    for s in &grid {
        for n in 1..=200 {
            if contains_mu(s, n) != common::mu_oracle(s, n) {
                return fail(format!("{s} n = {n}: contains_mu says {}", contains_mu(s, n)));
            }
        }
    }
    pass(format!("{} towers x n <= 200", grid.len()))
}

fn c10() -> Outcome {
    let mut notes = vec![];
    let mut ok = true;
    for (name, check) in common::props::ALL {
        if let Err(e) = check(64) {
            ok = false;
            notes.push(format!("{name}: {e}"));
        }
    }
    if ok {
        pass(format!("{} suites, 64 cases each", common::props::ALL.len()))
    } else {
        fail(notes.join("; "))
    }
}

fn main() {
    let criteria: [(u32, &str, u64, fn() -> Outcome); 10] = [
        (1, "15-torsion over quadratic fields", 30, c1),
        (2, "Mazur and Najman membership", 300, c2),
        (3, "GL2 facts", 60, c3),
        (4, "theorem lists", 60, c4),
        (5, "classification equals torsion over K for p >= 7", 600, c5),
        (6, "isogeny escape hatches", 60, c6),
        (7, "p = 3 exceptional realizations", 300, c7),
        (8, "p = 5 scan", 900, c8),
        (9, "roots of unity oracle", 60, c9),
        (10, "arithmetic property suites", 300, c10),
    ];
    let only: Option<u32> = std::env::var("ACCEPTANCE_ONLY").ok().and_then(|s| s.parse().ok());
    let mut unexpected = vec![];
    for (n, name, budget, run) in criteria {
        if only.is_some_and(|o| o != n) {
            continue;
        }
        let (out, el) = timed(run);
        let in_time = el <= Duration::from_secs(budget);
        let ok = out.pass && in_time;
        let time = format!("{:.1}s of {budget}s", el.as_secs_f64());
        println!("criterion {n:>2} {} {name} ({time}): {}", if ok { "PASS" } else { "FAIL" }, out.detail);
        if !ok && !KNOWN_RED.contains(&n) {
            unexpected.push(n);
        }
        if ok && KNOWN_RED.contains(&n) {
            println!("             criterion {n} is listed as known red but passed");
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
