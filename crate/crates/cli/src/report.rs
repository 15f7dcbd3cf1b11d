use std::fmt::Write as _;

use serde::Serialize;

use quintic_core::critical::{CriticalKind, CriticalRecord, ScanReport};
use quintic_core::invariants::{LctVerdict, WeightSystem};
use quintic_core::luna::BoundaryReport;
use quintic_core::poly::SparsePolynomial;
use quintic_core::sl2::{SL2Rep, SliceReport};
use quintic_core::stability::{HullVerdict, KempfFlag, StabilityReport, TorusVerdict};
use quintic_core::{ExponentVector, MonomialConfiguration, OneParamSubgroup, Rational};

/// Output of one subcommand. Both renderings carry the same data.
pub trait Report {
    fn json(&self) -> String;
    fn text(&self) -> String;
}

macro_rules! json_via_serde {
    ($($t:ty),*) => {$(
        impl $t {
            fn to_json(&self) -> String {
                serde_json::to_string_pretty(self).expect("serializable report")
            }
        }
    )*};
}

fn monomials(cfg: &MonomialConfiguration) -> String {
    cfg.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(", ")
}

#[derive(Serialize)]
pub struct CriticalRow {
    pub index: usize,
    pub lambda: OneParamSubgroup,
    pub kind: CriticalKind,
    pub nonneg_count: usize,
    pub zero_count: usize,
    pub zero_monomials: Vec<ExponentVector>,
    pub tie_class: Vec<OneParamSubgroup>,
}

#[derive(Serialize)]
pub struct CriticalReport {
    pub degree: u32,
    pub tie_rule: String,
    pub count: usize,
    pub records: Vec<CriticalRow>,
}

impl CriticalReport {
    pub fn new(degree: u32, tie_rule: &str, records: &[CriticalRecord]) -> Self {
        let records: Vec<CriticalRow> = records
            .iter()
            .enumerate()
            .map(|(i, r)| CriticalRow {
                index: i + 1,
                lambda: r.lambda,
                kind: r.kind,
                nonneg_count: r.nonneg.len(),
                zero_count: r.zero.len(),
                zero_monomials: r.zero.to_vec(),
                tie_class: r.tie_class.clone(),
            })
            .collect();
        CriticalReport { degree, tie_rule: tie_rule.to_string(), count: records.len(), records }
    }
}

json_via_serde!(CriticalReport, ScanView, ClassifyReport, SliceView, GenusView, PgView, LctView, CoverView, BranchView);

impl Report for CriticalReport {
    fn json(&self) -> String {
        self.to_json()
    }

    fn text(&self) -> String {
        let mut s = format!("degree {}: {} critical subgroups (tie rule {})\n", self.degree, self.count, self.tie_rule);
        for r in &self.records {
            let _ = write!(s, "λ{:<3} {:<20} {:<21} |M⊕| = {:<3} |M0| = {}", r.index, r.lambda.to_string(), format!("{:?}", r.kind), r.nonneg_count, r.zero_count);
            if r.tie_class.len() > 1 {
                let ties: Vec<String> = r.tie_class.iter().map(|l| l.to_string()).collect();
                let _ = write!(s, "  ties: {}", ties.join(" "));
            }
            s.push('\n');
        }
        s
    }
}

#[derive(Serialize)]
pub struct ScanView {
    pub degree: u32,
    pub bound: i64,
    pub strategy: String,
    pub critical_count: usize,
    pub scanned: u64,
    pub complete: bool,
    pub violations: Vec<OneParamSubgroup>,
}

impl ScanView {
    pub fn new(r: &ScanReport, critical_count: usize) -> Self {
        ScanView {
            degree: r.degree,
            bound: r.bound,
            strategy: r.strategy.clone(),
            critical_count,
            scanned: r.scanned,
            complete: r.violations.is_empty(),
            violations: r.violations.clone(),
        }
    }
}

impl Report for ScanView {
    fn json(&self) -> String {
        self.to_json()
    }

    fn text(&self) -> String {
        let mut s = format!(
            "degree {}, bound {}, strategy {}: scanned {} normalized subgroups against {} critical\n",
            self.degree, self.bound, self.strategy, self.scanned, self.critical_count
        );
        if self.complete {
            s.push_str("complete: no violations\n");
        } else {
            let _ = writeln!(s, "incomplete: {} violations", self.violations.len());
            for v in &self.violations {
                let _ = writeln!(s, "  {v}");
            }
        }
        s
    }
}

#[derive(Serialize)]
pub struct FlagView {
    pub point: Option<usize>,
    pub line: Option<[usize; 2]>,
    pub plane: Option<usize>,
    pub partial: bool,
    pub display: String,
}

impl From<&KempfFlag> for FlagView {
    fn from(f: &KempfFlag) -> Self {
        FlagView { point: f.point, line: f.line, plane: f.plane, partial: f.partial, display: f.to_string() }
    }
}

#[derive(Serialize)]
pub struct WeightedMonomial {
    pub monomial: ExponentVector,
    pub weight: String,
}

#[derive(Serialize)]
pub struct HullView {
    pub position: &'static str,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub barycentric: Vec<WeightedMonomial>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub supporting: Option<OneParamSubgroup>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub separating: Option<OneParamSubgroup>,
}

impl From<&HullVerdict> for HullView {
    fn from(h: &HullVerdict) -> Self {
        let bary = |b: &[(ExponentVector, Rational)]| {
            b.iter().map(|(m, w)| WeightedMonomial { monomial: *m, weight: w.to_string() }).collect()
        };
        match h {
            HullVerdict::Inside { barycentric } => {
                HullView { position: h.name(), barycentric: bary(barycentric), supporting: None, separating: None }
            }
            HullVerdict::Boundary { barycentric, supporting } => HullView {
                position: h.name(),
                barycentric: bary(barycentric),
                supporting: Some(*supporting),
                separating: None,
            },
            HullVerdict::Outside { separating } => {
                HullView { position: h.name(), barycentric: Vec::new(), supporting: None, separating: Some(*separating) }
            }
        }
    }
}

#[derive(Serialize)]
pub struct CertificateView {
    pub permutation: [usize; 4],
    pub critical_index: usize,
    pub lambda: OneParamSubgroup,
    pub lambda_original: OneParamSubgroup,
    pub mu: i64,
    pub flag: FlagView,
}

#[derive(Serialize)]
pub struct WorstView {
    pub lambda: OneParamSubgroup,
    pub normalized: OneParamSubgroup,
    pub mu: i64,
    pub squared_ratio: String,
    pub flag: FlagView,
}

#[derive(Serialize)]
pub struct ClassifyReport {
    pub polynomial: String,
    pub degree: u32,
    pub support: Vec<ExponentVector>,
    pub verdict: TorusVerdict,
    pub hull: HullView,
    pub certificate: Option<CertificateView>,
    pub worst: Option<WorstView>,
}

impl ClassifyReport {
    pub fn new(f: &SparsePolynomial, support: &MonomialConfiguration, rep: &StabilityReport) -> Self {
        let certificate = rep.certificate.as_ref().zip(rep.certificate_flag.as_ref()).map(|(c, flag)| CertificateView {
            permutation: c.permutation.0,
            critical_index: c.critical_index + 1,
            lambda: c.lambda,
            lambda_original: c.lambda_original,
            mu: c.mu,
            flag: flag.into(),
        });
        let worst = rep.worst.as_ref().zip(rep.worst_flag.as_ref()).map(|(w, flag)| WorstView {
            lambda: w.lambda,
            normalized: w.normalized,
            mu: w.mu,
            squared_ratio: w.squared_ratio.to_string(),
            flag: flag.into(),
        });
        ClassifyReport {
            polynomial: f.to_string(),
            degree: support.degree(),
            support: support.to_vec(),
            verdict: rep.verdict,
            hull: (&rep.hull).into(),
            certificate,
            worst,
        }
    }
}

impl Report for ClassifyReport {
    fn json(&self) -> String {
        self.to_json()
    }

    fn text(&self) -> String {
        let mut s = format!("{:?} (torus); ", self.verdict);
        match &self.certificate {
            None => s.push_str("no non-stability certificate\n"),
            Some(c) => {
                let _ = writeln!(
                    s,
                    "non-stability certificate: permutation {:?} maps the support into M⊕ of critical λ{} = {}, μ = {}",
                    c.permutation, c.critical_index, c.lambda, c.mu
                );
            }
        }
        let _ = writeln!(s, "polynomial: {}", self.polynomial);
        let _ = writeln!(s, "degree {}, {} monomials in support", self.degree, self.support.len());
        let _ = write!(s, "centroid: {}", self.hull.position);
        if let Some(l) = self.hull.supporting {
            let _ = write!(s, ", supporting {l}");
        }
        if let Some(l) = self.hull.separating {
            let _ = write!(s, ", separating {l}");
        }
        s.push('\n');
        if !self.hull.barycentric.is_empty() {
            let parts: Vec<String> =
                self.hull.barycentric.iter().map(|b| format!("{}·{}", b.weight, b.monomial)).collect();
            let _ = writeln!(s, "barycentric: {}", parts.join(" + "));
        }
        if let Some(c) = &self.certificate {
            let _ = writeln!(s, "certificate subgroup in input coordinates: {}", c.lambda_original);
            let _ = writeln!(s, "certificate flag: {}", c.flag.display);
        }
        if let Some(w) = &self.worst {
            let _ = writeln!(
                s,
                "worst subgroup: {} (normalized {}), μ = {}, (μ/‖λ‖)² = {}",
                w.lambda, w.normalized, w.mu, w.squared_ratio
            );
            let _ = writeln!(s, "worst flag: {}", w.flag.display);
        }
        s
    }
}

pub struct BoundaryView(pub Vec<BoundaryReport>);

impl Report for BoundaryView {
    fn json(&self) -> String {
        serde_json::to_string_pretty(&self.0).expect("serializable report")
    }

    fn text(&self) -> String {
        let mut s = String::new();
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                s.push('\n');
            }
            match r.label {
                Some(k) => {
                    let _ = writeln!(s, "λ{k} = {}", r.lambda);
                }
                None => {
                    let _ = writeln!(s, "λ = {}", r.lambda);
                }
            }
            let _ = writeln!(s, "  zero monomials ({}): {}", r.zero_monomials.len(), monomials(&r.zero_monomials));
            let _ = writeln!(s, "  centralizer dim: {}", r.centralizer_dim);
            let _ = writeln!(s, "  normal weights ({}): {}", r.normal_weights.len(), r.normal_weights);
            let _ = writeln!(s, "  fiber positive ({}): {}", r.fiber_pos.len(), r.fiber_pos);
            let _ = writeln!(s, "  fiber negative ({}): {}", r.fiber_neg.len(), r.fiber_neg);
            let _ = writeln!(s, "  fiber zero count: {}", r.fiber_zero_count);
            let _ = writeln!(s, "  orbit rank: {} (seed {})", r.orbit_rank, r.seed);
            let _ = write!(s, "  dimension estimate: {}", r.dim_estimate);
            match r.reference_dim {
                Some(d) if r.dim_mismatch => {
                    let _ = write!(s, " (reference {d}, MISMATCH)");
                }
                Some(d) => {
                    let _ = write!(s, " (reference {d})");
                }
                None => {}
            }
            s.push('\n');
        }
        s
    }
}

#[derive(Serialize)]
pub struct SliceView(pub SliceReport);

fn rep_line(name: &str, r: &SL2Rep) -> String {
    format!("{name:<14} {r}  (dim {})\n", r.dimension())
}

impl Report for SliceView {
    fn json(&self) -> String {
        self.to_json()
    }

    fn text(&self) -> String {
        let r = &self.0;
        let mut s = String::new();
        s.push_str(&rep_line("linear forms", &r.linear_forms));
        s.push_str(&rep_line("quintic forms", &r.quintic_forms));
        s.push_str(&rep_line("adjoint", &r.adjoint));
        s.push_str(&rep_line("stabilizer", &r.stabilizer));
        s.push_str(&rep_line("orbit tangent", &r.orbit_tangent));
        s.push_str(&rep_line("normal", &r.normal));
        s.push_str(&rep_line("expected", &r.expected_normal));
        let _ = writeln!(s, "normal matches expected: {}", r.normal_matches);
        let _ = writeln!(s, "torus character check: {}", r.torus_check);
        s
    }
}

#[derive(Serialize)]
pub struct GenusView {
    pub degree: u32,
    pub genus: u64,
    pub closed_form: u64,
    pub binomial_sum: u64,
}

impl Report for GenusView {
    fn json(&self) -> String {
        self.to_json()
    }

    fn text(&self) -> String {
        format!(
            "{}\nlattice count {}, closed form {}, binomial sum {} (degree {})\n",
            self.genus, self.genus, self.closed_form, self.binomial_sum, self.degree
        )
    }
}

#[derive(Serialize)]
pub struct PgView {
    pub degree: u32,
    pub pg: u64,
}

impl Report for PgView {
    fn json(&self) -> String {
        self.to_json()
    }

    fn text(&self) -> String {
        format!("{}\n(degree {})\n", self.pg, self.degree)
    }
}

#[derive(Serialize)]
pub struct LctView {
    pub weights: Vec<String>,
    pub weighted_degree: String,
    pub lct: String,
    pub threshold: String,
    pub verdict: LctVerdict,
}

impl LctView {
    pub fn new(ws: &WeightSystem, lct: &Rational, verdict: LctVerdict) -> Self {
        LctView {
            weights: ws.weights().iter().map(|w| w.to_string()).collect(),
            weighted_degree: ws.weighted_degree().to_string(),
            lct: lct.to_string(),
            threshold: quintic_core::invariants::lct_threshold().to_string(),
            verdict,
        }
    }
}

impl Report for LctView {
    fn json(&self) -> String {
        self.to_json()
    }

    fn text(&self) -> String {
        format!(
            "lct ≥ {} for weights ({}) and weighted degree {}\nverdict against threshold {}: {:?}\n",
            self.lct,
            self.weights.join(", "),
            self.weighted_degree,
            self.threshold,
            self.verdict
        )
    }
}

#[derive(Serialize)]
pub struct CoverView {
    pub h4: String,
    pub h6: String,
    pub discriminant: String,
}

impl Report for CoverView {
    fn json(&self) -> String {
        self.to_json()
    }

    fn text(&self) -> String {
        format!("h4 = {}\nh6 = {}\ndiscriminant = {}\n", self.h4, self.h6, self.discriminant)
    }
}

#[derive(Serialize)]
pub struct BranchView {
    pub octic: String,
}

impl Report for BranchView {
    fn json(&self) -> String {
        self.to_json()
    }

    fn text(&self) -> String {
        format!("octic = {}\n", self.octic)
    }
}
