//! Analysis reports as JSON or text.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};
use toric_orbits::catalog::{cross_check, CheckReport, NotApplicable, Recognizer};
use toric_orbits::cox::{check_catalog, SampleReport};
use toric_orbits::{Analysis, Cone, InfiniteReason, Verdict};

const MAX_SAFE: i64 = (1 << 53) - 1;

/// Sampled points per orbit under `--check`.
const TRIALS: usize = 20;

#[derive(Debug, Clone, Copy, Default)]
pub struct Options {
    pub orbits: bool,
    pub roots: bool,
    pub seed: u64,
}

/// A JSON number when exactly representable as a double, else a string.
pub fn int(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) if (-MAX_SAFE..=MAX_SAFE).contains(&v) => json!(v),
        _ => json!(x.to_string()),
    }
}

fn ints(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(int).collect())
}

fn cone(c: &Cone) -> Value {
    json!(c.rays())
}

fn vec_text(xs: &[BigInt]) -> String {
    let parts: Vec<String> = xs.iter().map(BigInt::to_string).collect();
    format!("({})", parts.join(", "))
}

fn set_text(xs: &[usize]) -> String {
    let parts: Vec<String> = xs.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

pub struct CheckOutcome {
    pub recognizers: Result<CheckReport, NotApplicable>,
    /// Present when the catalog exists.
    pub sampling: Option<SampleReport>,
}

impl CheckOutcome {
    pub fn run(a: &Analysis, seed: u64) -> Self {
        let sampling = match (&a.radiant, &a.orbits) {
            (Some(data), Some(records)) => {
                Some(check_catalog(&a.fan, &data.classes, &a.roots, records, seed, TRIALS))
            }
            _ => None,
        };
        CheckOutcome {
            recognizers: cross_check(&a.fan, &a.verdict),
            sampling,
        }
    }
}

fn recognizer_json(r: &Recognizer) -> Value {
    match r {
        Recognizer::WeightedProjective { weights } => json!({
            "name": "weighted_projective",
            "weights": weights.as_deref().map(ints),
        }),
        Recognizer::Surface { negative_coords } => json!({
            "name": "surface",
            "negative_coords": negative_coords.as_ref().map(|v| v.iter().map(|c| ints(c)).collect::<Vec<_>>()),
        }),
    }
}

fn verdict_json(v: &Verdict) -> Value {
    match v {
        Verdict::Finite { count } => json!({ "finite": true, "orbit_count": count }),
        Verdict::Infinite(InfiniteReason::NotRadiant) => json!({
            "finite": false,
            "witness": { "kind": "NotRadiant" },
        }),
        Verdict::Infinite(InfiniteReason::NonFreeMonoid { cone: c, irreducibles }) => json!({
            "finite": false,
            "witness": {
                "kind": "NonFreeMonoid",
                "cone": cone(c),
                "irreducibles": irreducibles.iter().map(|g| ints(g)).collect::<Vec<_>>(),
            },
        }),
    }
}

pub fn to_json(a: &Analysis, opts: &Options, check: Option<&CheckOutcome>) -> Value {
    let fan = &a.fan;
    let mut out = serde_json::Map::new();
    out.insert(
        "fan".into(),
        json!({
            "dim": fan.dim(),
            "rays": fan.ray_vectors().iter().map(|r| ints(r)).collect::<Vec<_>>(),
            "max_cone_count": fan.max_cones().len(),
            "cone_count": fan.all_cones().len(),
            "complete": true,
            "simplicial": true,
        }),
    );
    out.insert(
        "class_group".into(),
        json!({
            "free_rank": a.class_group.free_rank,
            "torsion": ints(&a.class_group.torsion_invariants),
        }),
    );
    out.insert(
        "bilateral".into(),
        match &a.radiant {
            None => Value::Null,
            Some(d) => json!({
                "positive": d.bilateral.positive,
                "negative": d.bilateral.negative,
                "classes": d.classes.classes().iter().map(|c| ints(c)).collect::<Vec<_>>(),
            }),
        },
    );
    let semisimple = a.semisimple_count();
    let mut roots = json!({
        "total": a.roots.len(),
        "semisimple": semisimple,
        "unipotent": a.roots.len() - semisimple,
        "in_u": a.in_u_count(),
    });
    if opts.roots {
        roots["list"] = a
            .roots
            .iter()
            .map(|r| {
                json!({
                    "e": ints(&r.e),
                    "ray": r.distinguished_ray,
                    "semisimple": r.is_semisimple(),
                    "in_u": r.in_u,
                })
            })
            .collect();
    }
    out.insert("roots".into(), roots);
    out.insert(
        "v".into(),
        match &a.v {
            None => Value::Null,
            Some(v) => json!({
                "v": ints(&v.v),
                "positive_basis_coords": ints(&v.basis_coords),
                "spacing": v.spacing,
            }),
        },
    );
    out.insert(
        "precedence".into(),
        match &a.radiant {
            None => json!([]),
            Some(d) => d.precedence.pairs().map(|(x, y)| json!([x, y])).collect(),
        },
    );
    out.insert("verdict".into(), verdict_json(&a.verdict));
    out.insert("basic_subset_count".into(), json!(a.basic_subsets.len()));
    if opts.orbits {
        if let Some(records) = &a.orbits {
            out.insert(
                "orbits".into(),
                records
                    .iter()
                    .map(|r| {
                        json!({
                            "dimension": r.dimension,
                            "rays": r.basic.rays,
                            "hat": r.basic.hat,
                            "t_orbit_cones": r.t_orbit_cones.iter().map(cone).collect::<Vec<_>>(),
                        })
                    })
                    .collect(),
            );
        }
    }
    if let Some(c) = check {
        let recognizers = match &c.recognizers {
            Ok(report) => json!({
                "applicable": true,
                "agrees": report.agrees(),
                "checks": report.checks.iter().map(|k| json!({
                    "recognizer": recognizer_json(&k.recognizer),
                    "predicted_finite": k.predicted_finite,
                    "agrees": k.agrees,
                })).collect::<Vec<_>>(),
            }),
            Err(e) => json!({ "applicable": false, "reason": e.to_string() }),
        };
        let sampling = c.sampling.as_ref().map(|s| {
            json!({ "seed": opts.seed, "points": s.points, "mismatches": s.mismatches })
        });
        out.insert("check".into(), json!({ "recognizers": recognizers, "sampling": sampling }));
    }
    Value::Object(out)
}

pub fn to_text(a: &Analysis, opts: &Options, check: Option<&CheckOutcome>) -> String {
    let fan = &a.fan;
    let mut s = String::new();
    let w = &mut s;
    writeln!(
        w,
        "fan: dimension {}, {} rays, {} maximal cones, {} cones, complete",
        fan.dim(),
        fan.ray_count(),
        fan.max_cones().len(),
        fan.all_cones().len()
    )
    .unwrap();
    let mut group = format!("Z^{}", a.class_group.free_rank);
    for t in &a.class_group.torsion_invariants {
        write!(group, " + Z/{t}").unwrap();
    }
    writeln!(w, "class group: {group}").unwrap();
    match &a.radiant {
        None => writeln!(w, "bilateral: none").unwrap(),
        Some(d) => {
            writeln!(
                w,
                "bilateral: positive {}, negative {}",
                set_text(&d.bilateral.positive),
                set_text(&d.bilateral.negative)
            )
            .unwrap();
            for (r, c) in d.classes.classes().iter().enumerate() {
                writeln!(w, "  class of ray {r}: {}", vec_text(c)).unwrap();
            }
        }
    }
    let semisimple = a.semisimple_count();
    writeln!(
        w,
        "roots: {} total, {} semisimple, {} unipotent, {} in U",
        a.roots.len(),
        semisimple,
        a.roots.len() - semisimple,
        a.in_u_count()
    )
    .unwrap();
    if opts.roots {
        for r in &a.roots {
            let kind = if r.is_semisimple() { "semisimple" } else { "unipotent" };
            let u = if r.in_u { ", in U" } else { "" };
            writeln!(w, "  {} at ray {}: {kind}{u}", vec_text(&r.e), r.distinguished_ray).unwrap();
        }
    }
    if let Some(v) = &a.v {
        writeln!(w, "v: {} (positive basis {})", vec_text(&v.v), vec_text(&v.basis_coords)).unwrap();
    }
    if let Some(d) = &a.radiant {
        let pairs: Vec<String> = d.precedence.pairs().map(|(x, y)| format!("{x} < {y}")).collect();
        writeln!(w, "precedence: {}", if pairs.is_empty() { "none".into() } else { pairs.join(", ") }).unwrap();
    }
    writeln!(w, "verdict: {}", a.verdict).unwrap();
    if let Verdict::Infinite(InfiniteReason::NonFreeMonoid { irreducibles, .. }) = &a.verdict {
        let gens: Vec<String> = irreducibles.iter().map(|g| vec_text(g)).collect();
        writeln!(w, "  irreducibles: {}", gens.join(" ")).unwrap();
    }
    writeln!(w, "basic subsets: {}", a.basic_subsets.len()).unwrap();
    if opts.orbits {
        if let Some(records) = &a.orbits {
            writeln!(w, "orbits:").unwrap();
            for r in records {
                let cones: Vec<String> = r.t_orbit_cones.iter().map(Cone::to_string).collect();
                writeln!(
                    w,
                    "  dim {}  A = {}  hat = {}  cones: {}",
                    r.dimension,
                    set_text(&r.basic.rays),
                    set_text(&r.basic.hat),
                    cones.join(" ")
                )
                .unwrap();
            }
        }
    }
    if let Some(c) = check {
        match &c.recognizers {
            Ok(report) => {
                let verdict = if report.agrees() { "agrees" } else { "DISAGREES" };
                writeln!(w, "check: {} recognizer(s), {verdict}", report.checks.len()).unwrap();
            }
            Err(e) => writeln!(w, "check: {e}").unwrap(),
        }
        if let Some(sm) = &c.sampling {
            writeln!(
                w,
                "sampling: seed {}, {} points, {} mismatches",
                opts.seed, sm.points, sm.mismatches
            )
            .unwrap();
        }
    }
    s
}
