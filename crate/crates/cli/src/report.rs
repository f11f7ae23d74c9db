//! JSON payloads (schema-stable) and text rendering for every
//! subcommand. The machine schema is versioned and byte-deterministic
//! for identical inputs; only the envelope's `timing_ms` varies.

use serde::Serialize;

use salem_core::interval::RatInterval;
use salem_core::k3::K3Report;
use salem_core::lattice::EigenspaceReport;
use salem_core::poly::format_poly;
use salem_core::salem::SalemClassification;
use salem_core::scalar::rat_to_f64;
use salem_core::sturm::RootLocationReport;
use salem_core::torus::{TorusDecision, TorusVerdict, WitnessFile, WitnessReport};
use salem_core::IntPoly;

pub const SCHEMA: &str = "salem-cli/1";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize)]
pub struct Envelope {
    pub schema: &'static str,
    pub version: &'static str,
    pub command: String,
    pub input: serde_json::Value,
    pub result: serde_json::Value,
    pub timing_ms: u128,
}

#[derive(Serialize)]
pub struct LambdaJson {
    pub lo: String,
    pub hi: String,
    pub approx: f64,
    pub width: f64,
}

pub fn lambda_json(l: &RatInterval) -> LambdaJson {
    LambdaJson {
        lo: l.lo().to_string(),
        hi: l.hi().to_string(),
        approx: l.midpoint_f64(),
        width: rat_to_f64(&l.width()),
    }
}

#[derive(Serialize)]
pub struct EntropyJson {
    pub value: f64,
    pub error_bound: f64,
}

#[derive(Serialize)]
pub struct LocationsJson {
    pub real_gt1: usize,
    pub real_in_unit: usize,
    pub real_lt_minus1: usize,
    pub real_in_neg_unit: usize,
    pub on_circle: usize,
    pub at_one: usize,
    pub at_minus_one: usize,
    pub complex_off_circle: usize,
}

pub fn locations_json(l: &RootLocationReport) -> LocationsJson {
    LocationsJson {
        real_gt1: l.n_real_gt1,
        real_in_unit: l.n_real_in_unit,
        real_lt_minus1: l.n_real_lt_minus1,
        real_in_neg_unit: l.n_real_in_neg_unit,
        on_circle: l.n_on_circle,
        at_one: l.at_one,
        at_minus_one: l.at_minus_one,
        complex_off_circle: l.n_complex_off_circle,
    }
}

pub fn coeffs_desc(p: &IntPoly) -> Vec<String> {
    p.coeffs().iter().rev().map(|c| c.to_string()).collect()
}

#[derive(Serialize)]
pub struct ClassifyResult {
    pub poly: String,
    pub coeffs_desc: Vec<String>,
    pub degree: usize,
    pub monic: bool,
    pub reciprocal: bool,
    pub is_salem: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub cyclotomic_factors: Vec<(u64, u32)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub core: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub locations: Option<LocationsJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<LambdaJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entropy: Option<EntropyJson>,
}

pub fn classify_result(c: &SalemClassification, entropy: Option<EntropyJson>) -> ClassifyResult {
    ClassifyResult {
        poly: c.input.to_string(),
        coeffs_desc: coeffs_desc(&c.input),
        degree: c.degree,
        monic: c.monic,
        reciprocal: c.reciprocal,
        is_salem: c.is_salem,
        reason: c.reason.as_ref().map(|r| r.to_string()),
        cyclotomic_factors: c.cyclotomic_factors.clone(),
        core: (c.core != c.input).then(|| c.core.to_string()),
        locations: c.locations.as_ref().map(locations_json),
        lambda: c.lambda.as_ref().map(lambda_json),
        entropy,
    }
}

pub fn classify_text(r: &ClassifyResult) -> String {
    let mut out = format!("input: {}\ndegree: {}\n", r.poly, r.degree);
    if r.is_salem {
        out.push_str("salem: yes\n");
        if let Some(l) = &r.lambda {
            out.push_str(&format!("lambda ≈ {:.12} (bracket width ≈ {:.2e})\n", l.approx, l.width));
        }
        if let Some(e) = &r.entropy {
            out.push_str(&format!(
                "entropy ≈ {:.12} (error bound ≈ {:.2e})\n",
                e.value, e.error_bound
            ));
        }
    } else {
        out.push_str(&format!(
            "salem: no ({})\n",
            r.reason.as_deref().unwrap_or("unknown")
        ));
        if !r.cyclotomic_factors.is_empty() {
            let fs: Vec<String> = r
                .cyclotomic_factors
                .iter()
                .map(|(n, m)| if *m == 1 { format!("Phi_{n}") } else { format!("Phi_{n}^{m}") })
                .collect();
            out.push_str(&format!("cyclotomic factors: {}\n", fs.join(" · ")));
        }
    }
    out
}

#[derive(Serialize)]
pub struct CheckJson {
    pub name: String,
    pub pass: bool,
}

pub fn witness_checks(rep: &WitnessReport) -> Vec<CheckJson> {
    rep.checks()
        .into_iter()
        .map(|(name, pass)| CheckJson { name: name.to_string(), pass })
        .collect()
}

#[derive(Serialize)]
pub struct Deg4Json {
    pub s_at_one: String,
    pub s_at_minus_one: String,
    pub case_a: bool,
    pub case_b: bool,
    pub case_c: bool,
    pub cofactors: Vec<CofactorJson>,
}

#[derive(Serialize)]
pub struct CofactorJson {
    pub c: String,
    pub square_property: bool,
}

#[derive(Serialize)]
pub struct SquareJson {
    pub q_at_one: String,
    pub q_at_minus_one: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<String>,
}

#[derive(Serialize)]
pub struct ProjectiveJson {
    /// `Some(false)` means ruled out; `None` means undetermined here.
    pub possible: Option<bool>,
    pub note: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elliptic_product: Option<String>,
}

#[derive(Serialize)]
pub struct TorusResult {
    pub poly: String,
    pub degree: usize,
    pub is_salem: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub salem_reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<LambdaJson>,
    pub realizable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub square: Option<SquareJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub deg4: Option<Deg4Json>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessFile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<Vec<CheckJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub projective: Option<ProjectiveJson>,
}

pub fn torus_not_salem(poly: &IntPoly, reason: &str) -> TorusResult {
    TorusResult {
        poly: poly.to_string(),
        degree: poly.deg0(),
        is_salem: false,
        salem_reason: Some(reason.to_string()),
        lambda: None,
        realizable: false,
        case: None,
        obstruction: Some("input is not a Salem polynomial".into()),
        square: None,
        deg4: None,
        witness: None,
        verification: None,
        projective: None,
    }
}

fn projective_json(s: &IntPoly) -> Option<ProjectiveJson> {
    use salem_core::projective::{projective_flags, EllipticProductVerdict};
    let flags = projective_flags(s).ok()?;
    let elliptic_product = flags.elliptic_product.map(|ep| match ep.verdict {
        EllipticProductVerdict::Yes { trace, det, .. } => {
            format!("realizable on E x E: witness of trace {trace}, det {det}")
        }
        EllipticProductVerdict::Unknown => "unknown (sufficient condition not met)".to_string(),
    });
    Some(ProjectiveJson {
        possible: flags.projective_torus_possible,
        note: flags.note,
        elliptic_product,
    })
}

pub fn torus_result(d: &TorusDecision) -> anyhow::Result<TorusResult> {
    let deg4 = d.deg4.as_ref().map(|a| Deg4Json {
        s_at_one: a.s_at_one.to_string(),
        s_at_minus_one: a.s_at_minus_one.to_string(),
        case_a: a.case_a,
        case_b: a.case_b,
        case_c: a.case_c,
        cofactors: a
            .cofactor_holds
            .iter()
            .map(|(c, ok)| CofactorJson { c: c.to_string(), square_property: *ok })
            .collect(),
    });
    let mut r = TorusResult {
        poly: d.classification.input.to_string(),
        degree: d.degree,
        is_salem: true,
        salem_reason: None,
        lambda: Some(lambda_json(&d.lambda)),
        realizable: d.realizable(),
        case: None,
        obstruction: None,
        square: None,
        deg4,
        witness: None,
        verification: None,
        projective: projective_json(&d.classification.input),
    };
    match &d.verdict {
        TorusVerdict::Realizable { witness, report } => {
            r.case = Some(witness.case.as_str().to_string());
            r.square = Some(SquareJson {
                q_at_one: witness.q.eval(&1.into()).to_string(),
                q_at_minus_one: witness.q.eval(&(-1).into()).to_string(),
                m: Some(witness.m.to_string()),
                n: Some(witness.n.to_string()),
            });
            // entries beyond the i64 file range drop the embedded
            // document; the in-memory verification stands either way
            r.witness = WitnessFile::from_witness(witness).ok();
            r.verification = Some(witness_checks(report));
        }
        TorusVerdict::DegreeTooLarge => {
            r.obstruction = Some(format!(
                "degree {} exceeds six, the bound for torus automorphisms",
                d.degree
            ));
        }
        TorusVerdict::SquarePropertyFails { square } => {
            r.obstruction = Some("square property fails".into());
            r.square = Some(SquareJson {
                q_at_one: square.q_at_one.to_string(),
                q_at_minus_one: square.q_at_minus_one.to_string(),
                m: square.m.as_ref().map(|x| x.to_string()),
                n: square.n.as_ref().map(|x| x.to_string()),
            });
        }
        TorusVerdict::NoCofactorWorks => {
            r.obstruction = Some("no quadratic cofactor yields the square property".into());
        }
    }
    Ok(r)
}

pub fn torus_text(r: &TorusResult) -> String {
    let mut out = format!("input: {}\n", r.poly);
    if !r.is_salem {
        out.push_str(&format!(
            "salem: no ({})\ntorus-realizable: no\n",
            r.salem_reason.as_deref().unwrap_or("unknown")
        ));
        return out;
    }
    let lam = r.lambda.as_ref().map(|l| l.approx).unwrap_or(f64::NAN);
    out.push_str(&format!("salem: yes (degree {}, lambda ≈ {:.12})\n", r.degree, lam));
    if r.realizable {
        out.push_str(&format!(
            "torus-realizable: yes (case {})\n",
            r.case.as_deref().unwrap_or("?")
        ));
        if let Some(w) = &r.witness {
            out.push_str(&format!(
                "cofactor: {}\n",
                format_desc_coeffs(&w.c)
            ));
            out.push_str(&format!("Q = {}\n", format_desc_coeffs(&w.q)));
            if let Some(sq) = &r.square {
                out.push_str(&format!(
                    "Q(1) = {} = -m^2 (m = {}), Q(-1) = {} = n^2 (n = {})\n",
                    sq.q_at_one,
                    sq.m.as_deref().unwrap_or("?"),
                    sq.q_at_minus_one,
                    sq.n.as_deref().unwrap_or("?")
                ));
            }
            out.push_str(&format!(
                "P = {} (j = {}, k = {})\n",
                format_desc_coeffs(&w.p),
                w.j,
                w.k
            ));
            out.push_str(&format!("F1 (action on H1) rows: {:?}\n", w.f1));
            out.push_str(&format!("F2 (action on H2) rows: {:?}\n", w.f2));
        }
        if let Some(checks) = &r.verification {
            let passed = checks.iter().filter(|c| c.pass).count();
            out.push_str(&format!("verification: {}/{} checks pass\n", passed, checks.len()));
        }
    } else {
        out.push_str(&format!(
            "torus-realizable: no ({})\n",
            r.obstruction.as_deref().unwrap_or("unknown")
        ));
        if let Some(sq) = &r.square {
            out.push_str(&format!(
                "Q(1) = {}, Q(-1) = {}\n",
                sq.q_at_one, sq.q_at_minus_one
            ));
        }
        if let Some(d4) = &r.deg4 {
            out.push_str(&format!(
                "cases: a={} b={} c={} (S(1) = {}, S(-1) = {})\n",
                d4.case_a, d4.case_b, d4.case_c, d4.s_at_one, d4.s_at_minus_one
            ));
        }
    }
    if let Some(p) = &r.projective {
        let status = match p.possible {
            Some(true) => "yes",
            Some(false) => "no",
            None => "undetermined",
        };
        out.push_str(&format!("projective torus possible: {status} ({})\n", p.note));
        if let Some(ep) = &p.elliptic_product {
            out.push_str(&format!("E x E construction: {ep}\n"));
        }
    }
    out
}

fn format_desc_coeffs(desc: &[i64]) -> String {
    let p = IntPoly::from_descending_i64(desc);
    p.to_string()
}

#[derive(Serialize)]
pub struct NecessaryJson {
    pub s_at_minus_one: String,
    pub s_at_one: String,
    pub abs_s_minus_one_is_square: bool,
    pub abs_s_one_is_square: bool,
    pub neg_product_is_square: bool,
}

#[derive(Serialize)]
pub struct IsometryConditionJson {
    pub p: usize,
    pub q: usize,
    pub holds: bool,
}

#[derive(Serialize)]
pub struct K3Result {
    pub poly: String,
    pub degree: usize,
    pub is_salem: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub salem_reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub necessary: Option<NecessaryJson>,
    pub product_is_minus_one: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub isometry_condition: Option<IsometryConditionJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub torus_realizable: Option<bool>,
    pub verdict: String,
    pub notes: Vec<String>,
}

pub fn k3_not_salem(poly: &IntPoly, reason: &str) -> K3Result {
    K3Result {
        poly: poly.to_string(),
        degree: poly.deg0(),
        is_salem: false,
        salem_reason: Some(reason.to_string()),
        necessary: None,
        product_is_minus_one: false,
        isometry_condition: None,
        torus_realizable: None,
        verdict: "not_salem".into(),
        notes: vec!["input is not a Salem polynomial".into()],
    }
}

pub fn k3_result(poly: &IntPoly, rep: &K3Report) -> K3Result {
    K3Result {
        poly: poly.to_string(),
        degree: rep.degree,
        is_salem: true,
        salem_reason: None,
        necessary: Some(NecessaryJson {
            s_at_minus_one: rep.necessary.s_at_minus_one.to_string(),
            s_at_one: rep.necessary.s_at_one.to_string(),
            abs_s_minus_one_is_square: rep.necessary.abs_s_minus_one_is_square,
            abs_s_one_is_square: rep.necessary.abs_s_one_is_square,
            neg_product_is_square: rep.necessary.neg_product_is_square,
        }),
        product_is_minus_one: rep.product_is_minus_one,
        isometry_condition: rep
            .isometry_condition
            .map(|(p, q, holds)| IsometryConditionJson { p, q, holds }),
        torus_realizable: rep.torus.as_ref().map(|t| t.realizable()),
        verdict: rep.verdict.as_str().to_string(),
        notes: rep.notes.clone(),
    }
}

pub fn k3_text(r: &K3Result) -> String {
    let mut out = format!("input: {}\ndegree: {}\n", r.poly, r.degree);
    if !r.is_salem {
        out.push_str(&format!(
            "salem: no ({})\nverdict: not_salem\n",
            r.salem_reason.as_deref().unwrap_or("unknown")
        ));
        return out;
    }
    if let Some(n) = &r.necessary {
        out.push_str(&format!(
            "S(-1) = {}, S(1) = {}\nnecessary squares: |S(-1)| {}, |S(1)| {}, -S(-1)S(1) {}\n",
            n.s_at_minus_one,
            n.s_at_one,
            yn(n.abs_s_minus_one_is_square),
            yn(n.abs_s_one_is_square),
            yn(n.neg_product_is_square)
        ));
    }
    out.push_str(&format!("S(-1)·S(1) = -1: {}\n", yn(r.product_is_minus_one)));
    if let Some(ic) = &r.isometry_condition {
        out.push_str(&format!(
            "sufficient condition at signature ({},{}): {}\n",
            ic.p,
            ic.q,
            yn(ic.holds)
        ));
    }
    if let Some(t) = r.torus_realizable {
        out.push_str(&format!("torus-realizable: {}\n", yn(t)));
    }
    out.push_str(&format!("verdict: {}\n", r.verdict));
    for n in &r.notes {
        out.push_str(&format!("note: {n}\n"));
    }
    out
}

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Serialize)]
pub struct EntropyResult {
    pub poly: String,
    pub is_salem: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub salem_reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<LambdaJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entropy: Option<EntropyJson>,
}

pub fn entropy_text(r: &EntropyResult) -> String {
    if !r.is_salem {
        return format!(
            "input: {}\nsalem: no ({})\nentropy: undefined\n",
            r.poly,
            r.salem_reason.as_deref().unwrap_or("unknown")
        );
    }
    let l = r.lambda.as_ref().unwrap();
    let e = r.entropy.as_ref().unwrap();
    format!(
        "input: {}\nlambda ≈ {:.12} (bracket width ≈ {:.2e})\nentropy ≈ {:.12} (error bound ≈ {:.2e})\n",
        r.poly, l.approx, l.width, e.value, e.error_bound
    )
}

#[derive(Serialize)]
pub struct TraceResult {
    pub poly: String,
    pub degree: usize,
    pub trace: String,
    pub trace_coeffs_desc: Vec<String>,
}

pub fn trace_result(s: &IntPoly, r: &IntPoly) -> TraceResult {
    TraceResult {
        poly: s.to_string(),
        degree: s.deg0(),
        trace: format_poly(r, "x"),
        trace_coeffs_desc: coeffs_desc(r),
    }
}

pub fn trace_text(r: &TraceResult) -> String {
    format!("input: {}\nR(x) = {}\n", r.poly, r.trace)
}

#[derive(Serialize)]
pub struct EnumItem {
    pub poly: String,
    pub coeffs_desc: Vec<String>,
    pub lambda: LambdaJson,
    pub entropy: f64,
}

#[derive(Serialize)]
pub struct EnumerateResult {
    pub degree: usize,
    pub bound: u32,
    pub count: usize,
    pub items: Vec<EnumItem>,
}

pub fn enumerate_text(r: &EnumerateResult) -> String {
    let mut out = format!(
        "degree {} with |coefficients| ≤ {}: {} salem polynomial(s)\n",
        r.degree, r.bound, r.count
    );
    for item in &r.items {
        out.push_str(&format!(
            "lambda ≈ {:.12}  entropy ≈ {:.12}  {}\n",
            item.lambda.approx, item.entropy, item.poly
        ));
    }
    out
}

#[derive(Serialize)]
pub struct EigenJson {
    pub tau: f64,
    pub dimension: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub signature: Option<(usize, usize)>,
    pub margin: f64,
    pub residual: f64,
}

pub fn eigen_json(rep: &EigenspaceReport) -> Vec<EigenJson> {
    rep.entries
        .iter()
        .map(|e| EigenJson {
            tau: e.tau,
            dimension: e.dimension,
            signature: e.signature,
            margin: e.margin,
            residual: e.residual,
        })
        .collect()
}

#[derive(Serialize)]
pub struct VerifyResult {
    pub kind: String,
    pub all_pass: bool,
    pub checks: Vec<CheckJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub salem_core: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ambient_signature: Option<(usize, usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eigenspaces: Option<Vec<EigenJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

pub fn verify_text(r: &VerifyResult) -> String {
    let mut out = format!("kind: {}\n", r.kind);
    for c in &r.checks {
        out.push_str(&format!("[{}] {}\n", if c.pass { "pass" } else { "FAIL" }, c.name));
    }
    if let Some(sig) = r.ambient_signature {
        out.push_str(&format!("ambient signature: ({}, {}, {})\n", sig.0, sig.1, sig.2));
    }
    if let Some(eigen) = &r.eigenspaces {
        for e in eigen {
            out.push_str(&format!(
                "tau ≈ {:.6}: dim {}, signature {:?}, margin {:.2e}, residual {:.2e}\n",
                e.tau, e.dimension, e.signature, e.margin, e.residual
            ));
        }
    }
    if let Some(n) = &r.note {
        out.push_str(&format!("note: {n}\n"));
    }
    out.push_str(if r.all_pass { "verification: PASS\n" } else { "verification: FAIL\n" });
    out
}
