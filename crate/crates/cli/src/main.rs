use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use zptorsion::classifier::{
    canonical_json, classify_in, derive_theorem_list_in, verify_certificate_report, BaseClass, Certificate,
    ClassificationResult, ClassifyOptions,
};
use zptorsion::curve::model::{EllipticCurveQ, GroupShape};
use zptorsion::gl2::{enumerate_subgroups, fixed_cyclic_subgroups, gl2_order, is_abelian, is_admissible_image};
use zptorsion::isogeny::{has_rational_cyclic_isogeny_in, kernel_field_degrees_in};
use zptorsion::lmfdb::{is_valid_label, Gateway};
use zptorsion::parse::{parse_curve, parse_tower_kind, parse_tower_spec};
use zptorsion::torsion::torsion_over_field;
use zptorsion::tower::level::{quadratic_base, tower_level};
use zptorsion::tower::spec::TowerSpec;
use zptorsion::{Error, Result};

#[derive(Parser)]
#[command(name = "zptors", version, about = "Torsion of rational elliptic curves in Z_p-extensions of quadratic fields")]
struct Cli {
    /// print canonical JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// never touch the network
    #[arg(long, global = true)]
    offline: bool,
    /// curve cache file layered over the shipped fixtures
    #[arg(long, global = true, value_name = "PATH")]
    cache: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct TowerArgs {
    /// squarefree d, K = Q(sqrt d)
    #[arg(long, allow_hyphen_values = true)]
    field: String,
    #[arg(long)]
    prime: String,
    /// cyc, anti or custom
    #[arg(long, default_value = "cyc")]
    tower: String,
    /// level polynomials of a custom tower, separated by ';'
    #[arg(long)]
    poly: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// E(F)_tors for K = Q(sqrt d), or a tower level when --prime is given
    Torsion {
        /// label such as 50b1, or [a1,a2,a3,a4,a6]
        #[arg(long, allow_hyphen_values = true)]
        curve: String,
        /// squarefree d, K = Q(sqrt d)
        #[arg(long, allow_hyphen_values = true)]
        field: String,
        /// compute over level --level of the Z_p-tower instead of K
        #[arg(long)]
        prime: Option<String>,
        /// cyc, anti or custom
        #[arg(long, default_value = "cyc")]
        tower: String,
        #[arg(long, default_value_t = 0)]
        level: u32,
        #[arg(long)]
        poly: Option<String>,
    },
    /// classify E(L)_tors with a certificate
    Classify {
        /// label such as 50b1, or [a1,a2,a3,a4,a6]
        #[arg(long, allow_hyphen_values = true)]
        curve: String,
        #[command(flatten)]
        tower: TowerArgs,
        /// highest tower level computed directly (p = 3 only)
        #[arg(long, default_value_t = 1)]
        level_cap: u32,
        /// write the certificate here
        #[arg(long, value_name = "PATH")]
        certificate: Option<PathBuf>,
    },
    /// groups left by the rules for every curve and every K of a class
    DeriveList {
        #[arg(long)]
        prime: u64,
        #[arg(long, default_value = "cyc")]
        tower: String,
        /// generic, -1, -3 or a specific d
        #[arg(long, default_value = "generic", allow_hyphen_values = true)]
        base_class: String,
    },
    /// rational cyclic isogeny of the given degree
    Isogeny {
        /// label such as 50b1, or [a1,a2,a3,a4,a6]
        #[arg(long, allow_hyphen_values = true)]
        curve: String,
        #[arg(long)]
        degree: u64,
    },
    /// subgroup facts for GL2(Z/3) and GL2(Z/4)
    Gl2Facts,
    /// look up a curve record
    Fetch {
        /// Cremona or LMFDB label
        #[arg(long)]
        label: String,
    },
    /// classify every curve with a given isogeny degree up to a conductor bound
    Scan {
        #[arg(long)]
        conductor_max: u64,
        #[arg(long)]
        isogeny_degree: u64,
        #[arg(long)]
        prime: String,
        #[arg(long, default_value = "cyc")]
        tower: String,
        /// comma separated discriminants
        #[arg(long, default_value = "-1,-2,5", allow_hyphen_values = true)]
        fields: String,
        /// worker threads, 0 for one per core
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// replay a certificate
    Verify {
        #[arg(long)]
        certificate: PathBuf,
    },
}

fn show(s: &GroupShape) -> String {
    if s.a() == 1 {
        format!("Z/{}Z", s.b())
    } else {
        format!("Z/{}Z x Z/{}Z", s.a(), s.b())
    }
}

fn result_text(r: &ClassificationResult) -> String {
    match r {
        ClassificationResult::Determined { shape } => format!("Determined {}", show(shape)),
        ClassificationResult::Conditional { options, obstruction } => {
            let o: Vec<String> = options.iter().map(show).collect();
            format!("Conditional {{{}}} ({obstruction})", o.join(", "))
        }
    }
}

struct Env {
    json: bool,
    gateway: Gateway,
}

impl Env {
    fn curve(&self, s: &str) -> Result<EllipticCurveQ> {
        if is_valid_label(s.trim()) {
            Ok(self.gateway.fetch_curve(s.trim())?.curve())
        } else {
            parse_curve(s)
        }
    }

    fn emit(&self, v: Value, text: impl FnOnce() -> String) {
        let out = if self.json { canonical_json(&v) } else { text() };
        // a closed pipe is not an error worth reporting
        let _ = writeln!(std::io::stdout().lock(), "{out}");
    }
}

fn parse_class(s: &str) -> Result<BaseClass> {
    match s.trim() {
        "generic" => Ok(BaseClass::Generic),
        t => t.parse::<i64>().map(BaseClass::of).map_err(|_| Error::Parse(format!("bad base class {t:?}"))),
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let env = Env { json: cli.json, gateway: Gateway::open(cli.cache.as_deref(), cli.offline)? };
    match cli.cmd {
        Cmd::Torsion { curve, field, prime, tower, level, poly } => {
            let e = env.curve(&curve)?;
            let f = match prime {
                None => quadratic_base(&parse_tower_spec(&field, "3", "cyc", 0, None)?)?,
                Some(p) => {
                    let spec = parse_tower_spec(&field, &p, &tower, level, poly.as_deref())?;
                    tower_level(&spec, level)?
                }
            };
            let t = torsion_over_field(&e, &f)?;
            env.emit(json!({ "curve": e.to_strings(), "field": f.defining_poly().to_string(), "torsion": t.shape }), || show(&t.shape));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Classify { curve, tower, level_cap, certificate } => {
            let e = env.curve(&curve)?;
            let spec = parse_tower_spec(&tower.field, &tower.prime, &tower.tower, 0, tower.poly.as_deref())?;
            let opts = ClassifyOptions { level_cap, ..ClassifyOptions::default() };
            let (r, cert) = classify_in(&env.gateway.corpus(), &e, &spec, &opts)?;
            if let Some(path) = certificate {
                std::fs::write(&path, cert.to_json())?;
            }
            env.emit(json!({ "result": r, "certificate": cert }), || {
                let mut out = result_text(&r);
                for s in &cert.steps {
                    out.push_str(&format!("\n  [{},{}] {}: {}", s.shape.a(), s.shape.b(), s.rule, conclusion_text(&s.conclusion)));
                }
                out
            });
            Ok(if r.is_determined() { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }
        Cmd::DeriveList { prime, tower, base_class } => {
            let class = parse_class(&base_class)?;
            let kind = parse_tower_kind(&tower)?;
            let list = derive_theorem_list_in(&env.gateway.corpus(), prime, kind, class)?;
            env.emit(json!({ "prime": prime, "tower": tower, "base_class": class, "shapes": list }), || {
                let v: Vec<String> = list.iter().map(show).collect();
                format!("{} shapes\n{}", v.len(), v.join("\n"))
            });
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Isogeny { curve, degree } => {
            let e = env.curve(&curve)?;
            let corpus = env.gateway.corpus();
            let has = has_rational_cyclic_isogeny_in(&corpus, &e, degree)?;
            let degrees = if has { kernel_field_degrees_in(&corpus, &e, degree).ok() } else { None };
            env.emit(json!({ "degree": degree, "has_isogeny": has, "kernel_field_degrees": degrees }), || match &degrees {
                Some(d) => format!("rational {degree}-isogeny: yes, kernel field degrees {d:?}"),
                None if has => format!("rational {degree}-isogeny: yes"),
                None => format!("rational {degree}-isogeny: no"),
            });
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Gl2Facts => {
            let g4 = enumerate_subgroups(4)?;
            let six: Vec<_> = g4.iter().filter(|h| h.order() == 6).collect();
            let six_abelian = six.iter().filter(|h| is_abelian(h)).count();
            let six_abelian_admissible = six.iter().filter(|h| is_abelian(h) && is_admissible_image(h)).count();
            let g3 = enumerate_subgroups(3)?;
            let twos: Vec<_> = g3.iter().filter(|h| h.order() == 2).collect();
            let fixing = twos.iter().filter(|h| !fixed_cyclic_subgroups(h, 3).is_empty()).count();
            let v = json!({
                "gl2_order_3": gl2_order(3),
                "gl2_order_4": gl2_order(4),
                "order6_subgroups_mod4": six.len(),
                "order6_abelian_mod4": six_abelian,
                "order6_abelian_admissible_mod4": six_abelian_admissible,
                "order2_subgroups_mod3": twos.len(),
                "order2_fixing_a_line_mod3": fixing,
            });
            env.emit(v, || {
                format!(
                    "|GL2(Z/3)| = {}\n|GL2(Z/4)| = {}\norder-6 subgroups of GL2(Z/4): {} ({} abelian, {} abelian and admissible)\norder-2 subgroups of GL2(Z/3) fixing an order-3 line: {}/{}",
                    gl2_order(3),
                    gl2_order(4),
                    six.len(),
                    six_abelian,
                    six_abelian_admissible,
                    fixing,
                    twos.len()
                )
            });
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Fetch { label } => {
            let r = env.gateway.fetch_curve(&label)?;
            let e = r.curve();
            env.emit(
                json!({
                    "label": r.label,
                    "a_invariants": e.to_strings(),
                    "conductor": r.conductor.to_string(),
                    "torsion_q": r.torsion_q,
                    "cyclic_isogeny_degrees": r.cyclic_isogeny_degrees,
                }),
                || format!("{} {} conductor {} torsion {} isogenies {:?}", r.label, e, r.conductor, show(&r.torsion_q), r.cyclic_isogeny_degrees),
            );
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Scan { conductor_max, isogeny_degree, prime, tower, fields, jobs } => {
            let labels = env.gateway.search_isogeny(conductor_max, isogeny_degree)?;
            let ds: Vec<String> = fields.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
            let specs = ds.iter().map(|d| parse_tower_spec(d, &prime, &tower, 0, None)).collect::<Result<Vec<TowerSpec>>>()?;
            let corpus = env.gateway.corpus();
            let work: Vec<(String, TowerSpec)> = labels.iter().flat_map(|l| specs.iter().map(move |s| (l.clone(), s.clone()))).collect();
            let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().map_err(|e| Error::Parse(e.to_string()))?;
            let rows: Vec<Value> = pool.install(|| {
                work.par_iter()
                    .map(|(label, spec)| {
                        let e = corpus.get(label).expect("search result is in the corpus").curve();
                        let k = quadratic_base(spec).and_then(|k| torsion_over_field(&e, &k));
                        let r = classify_in(&corpus, &e, spec, &ClassifyOptions::default());
                        json!({
                            "label": label,
                            "d": spec.d,
                            "torsion_k": k.as_ref().ok().map(|t| t.shape),
                            "result": r.as_ref().ok().map(|r| r.0.clone()),
                            "error": r.err().map(|e| e.to_string()),
                        })
                    })
                    .collect()
            });
            env.emit(json!({ "rows": rows }), || {
                rows.iter()
                    .map(|r| {
                        let res = match serde_json::from_value::<ClassificationResult>(r["result"].clone()) {
                            Ok(x) => result_text(&x),
                            Err(_) => format!("error: {}", r["error"].as_str().unwrap_or("?")),
                        };
                        format!("{} d={} {}", r["label"].as_str().unwrap_or("?"), r["d"], res)
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            });
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { certificate } => {
            let cert = Certificate::from_json(&std::fs::read_to_string(&certificate)?)?;
            let coeffs = format!("[{}]", cert.curve.join(","));
            let e = parse_curve(&coeffs)?;
            let verdict = verify_certificate_report(&env.gateway.corpus(), &cert, &e, &cert.spec);
            env.emit(json!({ "valid": verdict.is_ok(), "diagnostic": verdict.as_ref().err() }), || match &verdict {
                Ok(()) => "certificate valid".to_string(),
                Err(d) => format!("certificate invalid: {d}"),
            });
            Ok(if verdict.is_ok() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn conclusion_text(c: &zptorsion::classifier::Conclusion) -> String {
    use zptorsion::classifier::Conclusion::*;
    match c {
        Keep => "keep".into(),
        Eliminate { reason } => format!("eliminated: {reason}"),
        Descend { descents } => {
            let v: Vec<String> = descents.iter().map(|d| d.to_string()).collect();
            format!("defined over K: {}", v.join(", "))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
