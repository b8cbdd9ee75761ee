//! Rule-based classification of E(L)_tors for a Z_p-extension L of K = Q(sqrt d).

pub mod certificate;
pub mod lists;
pub mod rules;

use std::collections::BTreeSet;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

pub use certificate::{canonical_json, Certificate, Facts, Step};
pub use lists::{ambient_list, generated_candidates, najman_list, BaseClass};
pub use rules::{evaluate_rule, evaluate_rule_with, Conclusion, Context, Descent, Evaluation, Mode, RuleId};

use crate::curve::model::{vp, EllipticCurveQ, GroupShape};
use crate::error::{Error, Result};
use crate::lmfdb::Corpus;
use crate::torsion::{torsion_over_field_with, TorsionConfig};
use crate::tower::level::{quadratic_base, tower_level};
use crate::tower::spec::{TowerKind, TowerSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClassificationResult {
    Determined { shape: GroupShape },
    Conditional { options: BTreeSet<GroupShape>, obstruction: String },
}

impl ClassificationResult {
    pub fn is_determined(&self) -> bool {
        matches!(self, ClassificationResult::Determined { .. })
    }

    pub fn shape(&self) -> Option<GroupShape> {
        match self {
            ClassificationResult::Determined { shape } => Some(*shape),
            ClassificationResult::Conditional { .. } => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyOptions {
    /// highest tower level whose torsion may be computed directly
    pub level_cap: u32,
    /// largest absolute degree handed to the torsion engine
    pub degree_cap: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { level_cap: 1, degree_cap: TorsionConfig::default().degree_cap }
    }
}

pub fn shipped_corpus() -> &'static Corpus {
    static C: OnceLock<Corpus> = OnceLock::new();
    C.get_or_init(Corpus::shipped)
}

/// Starting shapes: the abelian-extension list for cyclotomic towers, generated shapes otherwise.
pub fn candidates(spec: &TowerSpec) -> Vec<GroupShape> {
    match spec.kind {
        TowerKind::Cyclotomic => ambient_list(),
        _ => generated_candidates(spec),
    }
}

/// Runs `rules` in order over every candidate. Returns the steps that did
/// something and the shapes left standing.
pub fn run_rules(ctx: &Context, cands: &[GroupShape], rules: &[RuleId]) -> Result<(Vec<Step>, Vec<GroupShape>)> {
    let mut steps = vec![];
    let mut survivors = vec![];
    for &s in cands {
        let mut prior: Vec<Descent> = vec![];
        let mut alive = true;
        for &rule in rules {
            let ev = evaluate_rule_with(rule, ctx, s, &prior)?;
            if ev.conclusion == Conclusion::Keep {
                continue;
            }
            let step = Step { shape: s, rule, inputs: certificate::digest(&ev.inputs), conclusion: ev.conclusion.clone() };
            steps.push(step);
            match ev.conclusion {
                Conclusion::Descend { descents } => prior.extend(descents),
                Conclusion::Eliminate { .. } => {
                    alive = false;
                    break;
                }
                Conclusion::Keep => {}
            }
        }
        if alive {
            survivors.push(s);
        }
    }
    Ok((steps, survivors))
}

/// The shapes that survive the full rule set for every E/Q and every K of the class.
pub fn derive_theorem_list(p: u64, kind: TowerKind, class: BaseClass) -> Result<BTreeSet<GroupShape>> {
    derive_theorem_list_in(shipped_corpus(), p, kind, class)
}

pub fn derive_theorem_list_in(corpus: &Corpus, p: u64, kind: TowerKind, class: BaseClass) -> Result<BTreeSet<GroupShape>> {
    let spec = TowerSpec::new(class.representative(), p, kind, 0)?;
    let ctx = Context::new(spec.clone(), Mode::Symbolic(class), corpus);
    let (_, survivors) = run_rules(&ctx, &candidates(&spec), &RuleId::ORDER)?;
    Ok(survivors.into_iter().collect())
}

/// v_p of |Aut(Z/q^i x Z/q^j)| for i <= j.
fn aut_valuation(i: u32, j: u32, q: u64, p: u64) -> u32 {
    if j == 0 {
        return 0;
    }
    let (q_exp, unit_part) = if i == 0 {
        (j - 1, q - 1)
    } else if i < j {
        (3 * i + j - 2, (q - 1) * (q - 1))
    } else {
        (4 * i - 3, (q - 1) * (q - 1) * (q + 1))
    };
    if q == p {
        q_exp
    } else {
        vp(unit_part, p)
    }
}

/// Is E(L) = s consistent with the torsion found over the levels? Over level n,
/// Gal(L/K) acts on a q-part through a quotient of order <= p^n whenever
/// v_p |Aut| <= n, so such a q-part is already visible there.
fn consistent_with_levels(s: &GroupShape, facts: &Facts, p: u64) -> bool {
    facts.level_torsion.iter().all(|(&n, t)| {
        s.contains(t)
            && crate::arith::rat::factor_u64(s.order()).into_iter().all(|(q, _)| {
                let (i, j) = s.q_part(q);
                aut_valuation(i, j, q, p) > n || s.q_part(q) == t.q_part(q)
            })
    })
}

fn show_all(v: &[GroupShape]) -> String {
    v.iter().map(rules::show).collect::<Vec<_>>().join(", ")
}

fn conclude(spec: &TowerSpec, survivors: &[GroupShape], facts: &Facts) -> Result<ClassificationResult> {
    let resolved: Vec<GroupShape> = survivors.iter().copied().filter(|s| consistent_with_levels(s, facts, spec.p)).collect();
    match resolved.as_slice() {
        [] => Err(Error::MissingFact("direct torsion computations contradict every candidate".into())),
        [s] => Ok(ClassificationResult::Determined { shape: *s }),
        _ => {
            let obstruction = if spec.p == 5 && resolved.iter().any(|s| s.q_part(5).1 >= 2) {
                "X0(25) genus 0 case".to_string()
            } else if let Some((n, why)) = facts.unavailable.iter().next() {
                format!("growth to {} not excluded; level {n} unavailable: {why}", show_all(&resolved))
            } else {
                format!("growth to {} not excluded by the rules or the computed levels", show_all(&resolved))
            };
            Ok(ClassificationResult::Conditional { options: resolved.into_iter().collect(), obstruction })
        }
    }
}

fn level_facts(e: &EllipticCurveQ, spec: &TowerSpec, opts: &ClassifyOptions, facts: &mut Facts) {
    let cfg = TorsionConfig { degree_cap: opts.degree_cap, ..TorsionConfig::default() };
    for n in 1..=opts.level_cap {
        let deg = spec.level_degree(n);
        if deg > opts.degree_cap as u64 {
            facts.unavailable.insert(n, format!("degree {deg} exceeds the cap {}", opts.degree_cap));
            return;
        }
        match tower_level(spec, n).and_then(|f| torsion_over_field_with(e, &f, &cfg)) {
            Ok(t) => {
                facts.level_torsion.insert(n, t.shape);
            }
            Err(err) => {
                facts.unavailable.insert(n, err.to_string());
                return;
            }
        }
    }
}

pub fn classify(e: &EllipticCurveQ, spec: &TowerSpec) -> Result<(ClassificationResult, Certificate)> {
    classify_in(shipped_corpus(), e, spec, &ClassifyOptions::default())
}

/// Classifies E(L)_tors. Level torsion is computed directly only for p = 3;
/// for larger p the rules alone decide, leaving the Z/25 case open at p = 5.
pub fn classify_in(corpus: &Corpus, e: &EllipticCurveQ, spec: &TowerSpec, opts: &ClassifyOptions) -> Result<(ClassificationResult, Certificate)> {
    let spec = spec.at_level(0);
    let k = quadratic_base(&spec)?;
    let cfg = TorsionConfig { degree_cap: opts.degree_cap, ..TorsionConfig::default() };
    let torsion_k = torsion_over_field_with(e, &k, &cfg)?.shape;
    let ctx = Context::new(spec.clone(), Mode::Curve { curve: e, torsion_k }, corpus);
    let cands: Vec<GroupShape> = candidates(&spec).into_iter().filter(|s| s.contains(&torsion_k)).collect();
    let (steps, survivors) = run_rules(&ctx, &cands, &RuleId::ORDER)?;
    let mut facts = Facts { torsion_k: Some(torsion_k), ..Facts::default() };
    if spec.p == 3 && survivors.len() > 1 {
        level_facts(e, &spec, opts, &mut facts);
    }
    let result = conclude(&spec, &survivors, &facts)?;
    let cert = Certificate {
        version: certificate::CERTIFICATE_VERSION,
        curve: e.to_strings(),
        label: e.label().map(str::to_string),
        spec,
        options: *opts,
        candidates: cands,
        facts,
        steps,
        result: result.clone(),
    };
    Ok((result, cert))
}

pub fn verify_certificate(cert: &Certificate, e: &EllipticCurveQ, spec: &TowerSpec) -> bool {
    verify_certificate_report(shipped_corpus(), cert, e, spec).is_ok()
}

/// Replays a certificate against freshly computed facts; the error names the
/// first thing that failed to reproduce.
pub fn verify_certificate_report(corpus: &Corpus, cert: &Certificate, e: &EllipticCurveQ, spec: &TowerSpec) -> std::result::Result<(), String> {
    if cert.curve != e.to_strings() {
        return Err("certificate is for a different curve".into());
    }
    if cert.spec != spec.at_level(0) {
        return Err("certificate is for a different tower".into());
    }
    let (_, fresh) = classify_in(corpus, e, spec, &cert.options).map_err(|err| format!("replay failed: {err}"))?;
    certificate::diff(cert, &fresh)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aut_valuations() {
        // Aut(Z/2 x Z/2) = S3, Aut(Z/25) has order 20, GL2(Z/4) has order 96
        assert_eq!(aut_valuation(1, 1, 2, 3), 1);
        assert_eq!(aut_valuation(0, 2, 5, 5), 1);
        assert_eq!(aut_valuation(2, 2, 2, 3), 1);
        assert_eq!(aut_valuation(1, 2, 2, 3), 0);
        assert_eq!(aut_valuation(0, 3, 3, 3), 2);
        assert_eq!(aut_valuation(0, 1, 7, 3), 1);
        assert_eq!(aut_valuation(0, 1, 19, 3), 2);
    }

    #[test]
    fn najman_lists_for_large_p() {
        for p in [7, 11, 13] {
            let l = derive_theorem_list(p, TowerKind::Cyclotomic, BaseClass::Generic).unwrap();
            assert_eq!(l, najman_list(BaseClass::Generic).into_iter().collect(), "p = {p}");
        }
    }
}
