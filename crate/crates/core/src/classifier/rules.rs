//! The elimination and descent rules, evaluated one candidate shape at a time.

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::lists::{najman_list, BaseClass};
use crate::arith::rat::{euler_phi, factor_u64, fmt_rat};
use crate::curve::model::{vp, EllipticCurveQ, GroupShape};
use crate::error::{Error, Result};
use crate::gl2::{enumerate_subgroups, is_abelian, is_admissible_image};
use crate::isogeny::{has_rational_cyclic_isogeny_in, is_admissible_degree, kernel_fingerprints_in};
use crate::lmfdb::Corpus;
use crate::tower::fingerprint::FieldFingerprint;
use crate::tower::predicates::{admits_subfield, contains_mu, global_torsion_bound, max_mu, Admits, GlobalBound};
use crate::tower::spec::{TowerKind, TowerSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum RuleId {
    RootsOfUnityBound = 1,
    WeilFilter = 2,
    IsogenyBound = 3,
    IsogenyRequired = 4,
    FiniteJFieldOfDefinition = 5,
    GcdDescent = 6,
    TwoAdic = 7,
    ThreeAdic = 8,
    Gl2AbelianImage = 9,
    AntiCyclotomicOdd = 10,
}

impl RuleId {
    /// Evaluation order; part of the certificate format.
    pub const ORDER: [RuleId; 10] = [
        RuleId::RootsOfUnityBound,
        RuleId::WeilFilter,
        RuleId::IsogenyBound,
        RuleId::IsogenyRequired,
        RuleId::FiniteJFieldOfDefinition,
        RuleId::GcdDescent,
        RuleId::TwoAdic,
        RuleId::ThreeAdic,
        RuleId::Gl2AbelianImage,
        RuleId::AntiCyclotomicOdd,
    ];

    pub fn code(self) -> u8 {
        self as u8
    }

    /// The statement each rule relies on.
    pub fn anchor(self) -> &'static str {
        match self {
            RuleId::RootsOfUnityBound => "for p > 3 the roots of unity in L already lie in K; |E(L)_tors| <= 163 n^2 with mu_n the roots of unity in L",
            RuleId::WeilFilter => "Z/a x Z/a in E(L) forces mu_a in L (Weil pairing)",
            RuleId::IsogenyBound => "E(L)_tors = Z/a x Z/ab with L/Q Galois gives a rational cyclic b-isogeny; such degrees are bounded",
            RuleId::IsogenyRequired => "torsion growth forces a rational cyclic isogeny of the implied degree",
            RuleId::FiniteJFieldOfDefinition => "kernel points of isogenies realized by finitely many j lie in L only if their fields embed in L",
            RuleId::GcdDescent => "Gal(L/K) acts on a cyclic q-part through a group of order prime to p, so that part is defined over K",
            RuleId::TwoAdic => "2-primary growth in a pro-p extension is limited by the automorphisms of the 2-part",
            RuleId::ThreeAdic => "for p != 3 the 3-primary part of E(L) is defined over K",
            RuleId::Gl2AbelianImage => "an admissible abelian image mod 3 or mod 4 of order 2 p^k has order 2",
            RuleId::AntiCyclotomicOdd => "Gal(K_anti/K) acts by inversion, so odd torsion of E(K_anti) is defined over K",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RuleId::RootsOfUnityBound => "RootsOfUnityBound",
            RuleId::WeilFilter => "WeilFilter",
            RuleId::IsogenyBound => "IsogenyBound",
            RuleId::IsogenyRequired => "IsogenyRequired",
            RuleId::FiniteJFieldOfDefinition => "FiniteJFieldOfDefinition",
            RuleId::GcdDescent => "GcdDescent",
            RuleId::TwoAdic => "TwoAdic",
            RuleId::ThreeAdic => "ThreeAdic",
            RuleId::Gl2AbelianImage => "Gl2AbelianImage",
            RuleId::AntiCyclotomicOdd => "AntiCyclotomicOdd",
        }
    }
}

impl From<RuleId> for u8 {
    fn from(r: RuleId) -> u8 {
        r.code()
    }
}

impl TryFrom<u8> for RuleId {
    type Error = String;
    fn try_from(c: u8) -> std::result::Result<Self, String> {
        RuleId::ORDER.iter().copied().find(|r| r.code() == c).ok_or_else(|| format!("unknown rule id {c}"))
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The q-part of E(L) agrees with that of E(K), up to q^level (all of it when `level` is None).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Descent {
    pub q: u64,
    pub level: Option<u32>,
}

impl Descent {
    pub fn full(q: u64) -> Self {
        Descent { q, level: None }
    }

    pub fn upto(q: u64, level: u32) -> Self {
        Descent { q, level: Some(level) }
    }

    /// The part of `s` this descent speaks about, as exponents.
    pub fn part(&self, s: &GroupShape) -> (u32, u32) {
        match self.level {
            None => s.q_part(self.q),
            Some(j) => s.torsion(self.q.pow(j)).q_part(self.q),
        }
    }
}

impl fmt::Display for Descent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.level {
            None => write!(f, "{}-primary part", self.q),
            Some(j) => write!(f, "{}^{j}-torsion", self.q),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Conclusion {
    Keep,
    Eliminate { reason: String },
    Descend { descents: Vec<Descent> },
}

#[derive(Clone, Debug)]
pub enum Mode<'a> {
    /// no curve: quantify over every E/Q and every field of the class
    Symbolic(BaseClass),
    Curve { curve: &'a EllipticCurveQ, torsion_k: GroupShape },
}

/// Everything a rule may consult.
pub struct Context<'a> {
    pub spec: TowerSpec,
    pub mode: Mode<'a>,
    pub corpus: &'a Corpus,
    isogenies: RefCell<BTreeMap<u64, bool>>,
}

impl<'a> Context<'a> {
    pub fn new(spec: TowerSpec, mode: Mode<'a>, corpus: &'a Corpus) -> Self {
        Context { spec, mode, corpus, isogenies: RefCell::default() }
    }

    fn has_isogeny(&self, e: &EllipticCurveQ, n: u64) -> Result<bool> {
        if let Some(&b) = self.isogenies.borrow().get(&n) {
            return Ok(b);
        }
        let b = has_rational_cyclic_isogeny_in(self.corpus, e, n)?;
        self.isogenies.borrow_mut().insert(n, b);
        Ok(b)
    }

    fn mode_json(&self) -> Value {
        match &self.mode {
            Mode::Symbolic(c) => json!({ "class": c }),
            Mode::Curve { torsion_k, .. } => json!({ "torsion_k": torsion_k }),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Evaluation {
    pub inputs: Value,
    pub conclusion: Conclusion,
}

enum Proposal {
    Keep,
    Eliminate(String),
    Descend(Vec<Descent>),
}

/// Degree of the rational cyclic isogeny forced by E(L) = s and E(K) = g.
pub fn implied_isogeny_degree(s: &GroupShape, g: &GroupShape, p: u64) -> u64 {
    let two_rational = g.order() % 2 == 0 || (s.order() % 2 == 0 && p != 3);
    let mut primes: Vec<u64> = factor_u64(s.b() * g.b()).into_iter().map(|(q, _)| q).collect();
    if !primes.contains(&2) {
        primes.push(2);
    }
    primes
        .into_iter()
        .map(|q| {
            let mut e = vp(s.b() / s.a(), q).max(vp(g.b() / g.a(), q));
            if q == 2 && two_rational {
                e = e.max(1);
            }
            q.pow(e)
        })
        .product()
}

/// Can E(K) be consistent with E(L) = s after the given descents?
fn compatible(ctx: &Context, s: &GroupShape, descents: &[Descent]) -> std::result::Result<(), String> {
    let agree = |g: &GroupShape| s.contains(g) && descents.iter().all(|d| d.part(g) == d.part(s));
    let what = descents.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(", ");
    match &ctx.mode {
        Mode::Curve { torsion_k, .. } => {
            if agree(torsion_k) {
                Ok(())
            } else {
                Err(format!("E(K) = {} cannot agree with {} on the {what}", show(torsion_k), show(s)))
            }
        }
        Mode::Symbolic(class) => {
            let p = ctx.spec.p;
            let ok = najman_list(*class).iter().any(|g| agree(g) && is_admissible_degree(implied_isogeny_degree(s, g, p)));
            if ok {
                Ok(())
            } else {
                Err(format!("no torsion group over K agrees with {} on the {what}", show(s)))
            }
        }
    }
}

pub(crate) fn show(s: &GroupShape) -> String {
    if s.a() == 1 {
        format!("Z/{}", s.b())
    } else {
        format!("Z/{} x Z/{}", s.a(), s.b())
    }
}

pub fn evaluate_rule(rule: RuleId, ctx: &Context, shape: GroupShape) -> Result<Evaluation> {
    evaluate_rule_with(rule, ctx, shape, &[])
}

/// Evaluates `rule` on `shape`, given the descents already established for it.
pub fn evaluate_rule_with(rule: RuleId, ctx: &Context, shape: GroupShape, prior: &[Descent]) -> Result<Evaluation> {
    let (detail, proposal) = match rule {
        RuleId::RootsOfUnityBound => roots_of_unity(ctx, &shape),
        RuleId::WeilFilter => weil(ctx, &shape),
        RuleId::IsogenyBound => isogeny_bound(&shape),
        RuleId::IsogenyRequired => isogeny_required(ctx, &shape)?,
        RuleId::FiniteJFieldOfDefinition => finite_j(ctx, &shape)?,
        RuleId::GcdDescent => gcd_descent(ctx, &shape),
        RuleId::TwoAdic => two_adic(ctx, &shape),
        RuleId::ThreeAdic => three_adic(ctx, &shape),
        RuleId::Gl2AbelianImage => gl2_abelian(ctx, &shape)?,
        RuleId::AntiCyclotomicOdd => anti_odd(ctx, &shape),
    };
    let conclusion = match proposal {
        Proposal::Keep => Conclusion::Keep,
        Proposal::Eliminate(reason) => Conclusion::Eliminate { reason },
        Proposal::Descend(ds) => {
            let mut all = prior.to_vec();
            all.extend(ds.iter().copied());
            match compatible(ctx, &shape, &all) {
                Ok(()) => Conclusion::Descend { descents: ds },
                Err(reason) => Conclusion::Eliminate { reason },
            }
        }
    };
    let inputs = json!({
        "rule": rule,
        "shape": shape,
        "p": ctx.spec.p,
        "d": ctx.spec.d,
        "tower": ctx.spec.kind.short_name(),
        "mode": ctx.mode_json(),
        "prior": prior,
        "detail": detail,
    });
    Ok(Evaluation { inputs, conclusion })
}

fn roots_of_unity(ctx: &Context, s: &GroupShape) -> (Value, Proposal) {
    let spec = &ctx.spec;
    let bound = global_torsion_bound(spec);
    let detail = json!({ "a": s.a(), "max_mu": max_mu(spec), "bound": bound });
    if spec.p > 3 && !mu_in_base(spec.d, s.a()) {
        return (detail, Proposal::Eliminate(format!("mu_{} is not in K and p = {} > 3", s.a(), spec.p)));
    }
    if let GlobalBound::Finite(b) = bound {
        if s.order() > b {
            return (detail, Proposal::Eliminate(format!("order {} exceeds the bound {b}", s.order())));
        }
    }
    (detail, Proposal::Keep)
}

fn mu_in_base(d: i64, n: u64) -> bool {
    n <= 2 || (n == 4 && d == -1) || ((n == 3 || n == 6) && d == -3)
}

fn weil(ctx: &Context, s: &GroupShape) -> (Value, Proposal) {
    let ok = contains_mu(&ctx.spec, s.a());
    let detail = json!({ "a": s.a(), "contains_mu": ok });
    if ok {
        (detail, Proposal::Keep)
    } else {
        (detail, Proposal::Eliminate(format!("mu_{} is not contained in L", s.a())))
    }
}

fn isogeny_bound(s: &GroupShape) -> (Value, Proposal) {
    let n = s.b() / s.a();
    let ok = is_admissible_degree(n);
    let detail = json!({ "cyclic_degree": n, "admissible": ok });
    if ok {
        (detail, Proposal::Keep)
    } else {
        (detail, Proposal::Eliminate(format!("no rational cyclic {n}-isogeny exists")))
    }
}

fn isogeny_required(ctx: &Context, s: &GroupShape) -> Result<(Value, Proposal)> {
    let Mode::Curve { curve, torsion_k } = &ctx.mode else {
        return Ok((json!({ "symbolic": true }), Proposal::Keep));
    };
    let n = implied_isogeny_degree(s, torsion_k, ctx.spec.p);
    if !is_admissible_degree(n) {
        return Ok((json!({ "degree": n, "admissible": false }), Proposal::Eliminate(format!("would need a rational cyclic {n}-isogeny"))));
    }
    let has = ctx.has_isogeny(curve, n)?;
    let detail = json!({ "degree": n, "has_isogeny": has });
    if has {
        Ok((detail, Proposal::Keep))
    } else {
        Ok((detail, Proposal::Eliminate(format!("E has no rational cyclic {n}-isogeny"))))
    }
}

/// Isogeny degrees realized by finitely many j-invariants.
pub const FINITE_J_DEGREES: [u64; 11] = [11, 14, 15, 17, 19, 21, 27, 37, 43, 67, 163];

/// Embedding test for a field of any curve in the class: only the degree and
/// ramification indices above primes other than p can be used.
fn admits_in_class(ctx: &Context, f: &FieldFingerprint) -> Admits {
    match &ctx.mode {
        Mode::Symbolic(BaseClass::Generic) => {
            let mut rest = f.degree;
            while rest % ctx.spec.p == 0 {
                rest /= ctx.spec.p;
            }
            if rest > 2 || f.ramification.iter().any(|(&q, &e)| q != ctx.spec.p && e > 2) {
                Admits::No
            } else {
                Admits::Unknown
            }
        }
        _ => admits_subfield(&ctx.spec, f),
    }
}

fn finite_j(ctx: &Context, s: &GroupShape) -> Result<(Value, Proposal)> {
    let n = s.b() / s.a();
    let mut detail = serde_json::Map::new();
    for m in FINITE_J_DEGREES.into_iter().filter(|m| n % m == 0) {
        let records: Vec<(String, Vec<FieldFingerprint>, Option<FieldFingerprint>)> = match &ctx.mode {
            Mode::Curve { curve, .. } => {
                let fps = kernel_fingerprints_in(ctx.corpus, curve, m).ok_or_else(|| {
                    Error::MissingFact(format!("kernel field data for the {m}-isogeny of j = {}", fmt_rat(&curve.j_invariant())))
                })?;
                let j = curve.j_invariant();
                let two = ctx.corpus.records.iter().filter(|r| r.j == j).find_map(|r| r.two_division_field.clone());
                vec![(fmt_rat(&j), fps, two)]
            }
            Mode::Symbolic(_) => {
                let mut seen = BTreeMap::new();
                for r in ctx.corpus.records.iter().filter(|r| r.has_isogeny(m)) {
                    let e = seen.entry(fmt_rat(&r.j)).or_insert((vec![], None));
                    if let Some(f) = r.kernel_fields.get(&m) {
                        if e.0.is_empty() {
                            e.0 = f.clone();
                        }
                    }
                    if e.1.is_none() {
                        e.1 = r.two_division_field.clone();
                    }
                }
                seen.into_iter().map(|(j, (f, t))| (j, f, t)).collect()
            }
        };
        if records.is_empty() {
            detail.insert(m.to_string(), json!("no curves in the corpus"));
            continue;
        }
        let mut rows = vec![];
        let mut viable = false;
        for (j, fps, two) in &records {
            let kernel: Vec<Admits> = fps.iter().map(|f| admits_in_class(ctx, f)).collect();
            let two_ok = match (s.a() % 2 == 0, two) {
                (true, Some(f)) => admits_in_class(ctx, f),
                _ => Admits::Unknown,
            };
            let ok = (fps.is_empty() || kernel.iter().any(|a| *a != Admits::No)) && two_ok != Admits::No;
            viable |= ok;
            rows.push(json!({ "j": j, "kernel": fps, "kernel_admits": kernel, "two_division": two, "two_division_admits": two_ok }));
        }
        detail.insert(m.to_string(), Value::Array(rows));
        if !viable {
            return Ok((
                Value::Object(detail),
                Proposal::Eliminate(format!("no curve with a rational {m}-isogeny has its kernel fields inside L")),
            ));
        }
    }
    Ok((Value::Object(detail), Proposal::Keep))
}

fn gcd_descent(ctx: &Context, s: &GroupShape) -> (Value, Proposal) {
    let p = ctx.spec.p;
    let mut ds = vec![];
    let mut rows = vec![];
    for (q, _) in factor_u64(s.b()) {
        let (i, k) = s.q_part(q);
        if q == 2 || i > 0 {
            continue;
        }
        let j = (0..=k).rev().find(|&j| euler_phi(q.pow(j)) % p != 0).unwrap_or(0);
        let phi = euler_phi(q.pow(k));
        rows.push(json!({ "q": q, "k": k, "phi": phi, "gcd": p.pow(vp(phi, p)), "level_degree": "2 p^a", "descend_to": j }));
        if j == k {
            ds.push(Descent::full(q));
        } else if j > 0 {
            ds.push(Descent::upto(q, j));
        }
    }
    let detail = Value::Array(rows);
    if ds.is_empty() {
        (detail, Proposal::Keep)
    } else {
        (detail, Proposal::Descend(ds))
    }
}

fn two_adic(ctx: &Context, s: &GroupShape) -> (Value, Proposal) {
    let p = ctx.spec.p;
    let (al, be) = s.q_part(2);
    let detail = json!({ "alpha": al, "beta": be });
    let prop = match (al, be) {
        (0, 0) => Proposal::Keep,
        (0, _) => Proposal::Descend(vec![Descent::full(2)]),
        (1, 1) if p != 3 => Proposal::Descend(vec![Descent::full(2)]),
        (1, 1) => Proposal::Keep,
        (1, 2) => Proposal::Descend(vec![Descent::upto(2, 2)]),
        (1, 3) => Proposal::Descend(vec![Descent::full(2)]),
        (1, _) => Proposal::Eliminate(format!("Z/2 x Z/{} needs a 2-part the automorphisms cannot move", 1u64 << be)),
        (2, b) if p != 3 && b > 2 => Proposal::Eliminate(format!("Z/4 x Z/{} cannot occur for p != 3", 1u64 << b)),
        (2, _) if p != 3 => Proposal::Descend(vec![Descent::full(2)]),
        _ => Proposal::Keep,
    };
    (detail, prop)
}

fn three_adic(ctx: &Context, s: &GroupShape) -> (Value, Proposal) {
    let (i, k) = s.q_part(3);
    let detail = json!({ "alpha": i, "beta": k });
    if ctx.spec.p != 3 && k > 0 {
        (detail, Proposal::Descend(vec![Descent::full(3)]))
    } else {
        (detail, Proposal::Keep)
    }
}

/// Orders of the admissible abelian subgroups of GL2(Z/3) and GL2(Z/4).
fn admissible_abelian_orders() -> Result<&'static [(u64, usize)]> {
    static ORDERS: OnceLock<Vec<(u64, usize)>> = OnceLock::new();
    if let Some(v) = ORDERS.get() {
        return Ok(v);
    }
    let mut v = vec![];
    for n in [3, 4] {
        for h in enumerate_subgroups(n)? {
            if is_abelian(&h) && is_admissible_image(&h) {
                v.push((n, h.order()));
            }
        }
    }
    v.sort_unstable();
    v.dedup();
    Ok(ORDERS.get_or_init(|| v))
}

fn gl2_abelian(ctx: &Context, s: &GroupShape) -> Result<(Value, Proposal)> {
    if ctx.spec.kind != TowerKind::Cyclotomic || (s.a() % 3 != 0 && s.a() % 4 != 0) {
        return Ok((json!({ "applies": false }), Proposal::Keep));
    }
    let p = ctx.spec.p;
    let orders = admissible_abelian_orders()?;
    let of_form = |o: usize| {
        let mut o = o as u64;
        if o % 2 != 0 {
            return false;
        }
        o /= 2;
        let mut k = 0;
        while o % p == 0 {
            o /= p;
            k += 1;
        }
        o == 1 && k > 0
    };
    let premise = orders.iter().all(|&(_, o)| !of_form(o));
    let detail = json!({ "admissible_abelian_orders": orders, "premise": premise });
    if !premise {
        return Ok((detail, Proposal::Keep));
    }
    let mut ds = vec![];
    if s.a() % 4 == 0 {
        ds.push(Descent::full(2));
    }
    if s.a() % 3 == 0 {
        ds.push(Descent::upto(3, 1));
    }
    Ok((detail, Proposal::Descend(ds)))
}

fn anti_odd(ctx: &Context, s: &GroupShape) -> (Value, Proposal) {
    if !ctx.spec.is_anticyclotomic() {
        return (json!({ "applies": false }), Proposal::Keep);
    }
    let ds: Vec<Descent> = factor_u64(s.b()).into_iter().filter(|&(q, _)| q != 2).map(|(q, _)| Descent::full(q)).collect();
    let detail = json!({ "odd_primes": ds.iter().map(|d| d.q).collect::<Vec<_>>() });
    if ds.is_empty() {
        (detail, Proposal::Keep)
    } else {
        (detail, Proposal::Descend(ds))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(a: u64, b: u64) -> GroupShape {
        GroupShape::new(a, b).unwrap()
    }

    fn symbolic(d: i64, p: u64) -> (TowerSpec, Corpus) {
        (TowerSpec::cyclotomic(d, p).unwrap(), Corpus::shipped())
    }

    #[test]
    fn weil_filter_and_isogeny_bound() {
        let (spec, corpus) = symbolic(5, 7);
        let ctx = Context::new(spec, Mode::Symbolic(BaseClass::Special(5)), &corpus);
        let ev = evaluate_rule(RuleId::WeilFilter, &ctx, shape(3, 3)).unwrap();
        assert!(matches!(ev.conclusion, Conclusion::Eliminate { .. }));
        let ev = evaluate_rule(RuleId::IsogenyBound, &ctx, GroupShape::cyclic(31)).unwrap();
        assert!(matches!(ev.conclusion, Conclusion::Eliminate { .. }));
        let ev = evaluate_rule(RuleId::IsogenyBound, &ctx, GroupShape::cyclic(15)).unwrap();
        assert_eq!(ev.conclusion, Conclusion::Keep);
    }

    #[test]
    fn rule_ids_round_trip() {
        for r in RuleId::ORDER {
            assert_eq!(RuleId::try_from(r.code()).unwrap(), r);
        }
        assert!(RuleId::try_from(0).is_err());
        assert_eq!(serde_json::to_string(&RuleId::TwoAdic).unwrap(), "7");
    }

    #[test]
    fn implied_degree() {
        assert_eq!(implied_isogeny_degree(&shape(2, 50), &shape(1, 5), 5), 50);
        assert_eq!(implied_isogeny_degree(&GroupShape::cyclic(25), &GroupShape::cyclic(5), 5), 25);
        assert_eq!(implied_isogeny_degree(&shape(2, 2), &GroupShape::trivial(), 3), 1);
        assert_eq!(implied_isogeny_degree(&shape(2, 2), &GroupShape::trivial(), 7), 2);
    }

    #[test]
    fn gcd_descent_levels() {
        let (spec, corpus) = symbolic(-2, 3);
        let ctx = Context::new(spec, Mode::Symbolic(BaseClass::Generic), &corpus);
        // 3 | phi(7): nothing; 5 descends fully; 9 only up to level 1
        assert_eq!(evaluate_rule(RuleId::GcdDescent, &ctx, GroupShape::cyclic(7)).unwrap().conclusion, Conclusion::Keep);
        let ev = evaluate_rule(RuleId::GcdDescent, &ctx, GroupShape::cyclic(15)).unwrap();
        assert_eq!(ev.conclusion, Conclusion::Descend { descents: vec![Descent::full(3), Descent::full(5)] });
        let ev = evaluate_rule(RuleId::GcdDescent, &ctx, GroupShape::cyclic(18)).unwrap();
        assert_eq!(ev.conclusion, Conclusion::Descend { descents: vec![Descent::upto(3, 1)] });
        let ev = evaluate_rule(RuleId::GcdDescent, &ctx, GroupShape::cyclic(17)).unwrap();
        assert!(matches!(ev.conclusion, Conclusion::Eliminate { .. }));
    }
}
