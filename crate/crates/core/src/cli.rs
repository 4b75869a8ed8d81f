//! Report types and command implementations behind the `codezeta` binary.
//!
//! Every command returns a serializable value or a [`CliError`] carrying the
//! process exit code: 2 for invalid input, 3 for a violated internal
//! invariant.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::{macwilliams, weight_distribution_via_smaller, CodeDescription, CodeProfile, WeightDistribution};
use crate::duality::{fsd_report, FsdReport};
use crate::field::field_of_size;
use crate::fixtures;
use crate::funcfield::{
    b_relations_check, b_sequence, class_number_bounds, profile_from_lpoly, profile_from_point_counts,
    FunctionFieldProfile, RelationsReport,
};
use crate::rha::{field_bound, log_diagnostic, rha_check, FieldBound, LogDiagnostic, RhaVerdict};
use crate::zeta::{weights_from_dc, weights_from_zeta_gf, ZetaProfile};

/// Window of log coefficients reported by `code analyze`.
pub const LOG_WINDOW: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliError {
    pub kind: String,
    pub message: String,
    pub exit_code: i32,
}

impl CliError {
    pub fn validation(e: impl ToString) -> Self {
        Self::new(e.to_string(), 2)
    }

    pub fn internal(e: impl ToString) -> Self {
        Self::new(e.to_string(), 3)
    }

    fn new(message: String, exit_code: i32) -> Self {
        let kind = message
            .split_once(':')
            .map(|(k, _)| k.trim().to_string())
            .filter(|k| !k.is_empty() && !k.contains(' '))
            .unwrap_or_else(|| "Error".into());
        CliError { kind, message, exit_code }
    }

    /// Machine-readable form written to standard error.
    pub fn to_json(&self) -> String {
        serde_json::json!({ "error": self.kind, "message": self.message, "exit_code": self.exit_code })
            .to_string()
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

/// Full analysis of one code.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub code: CodeDescription,
    pub rank_deficient_input: bool,
    pub weights: WeightDistribution,
    pub dual_weights: WeightDistribution,
    pub zeta: ZetaProfile,
    pub fsd: FsdReport,
    pub rha: RhaVerdict,
    /// Present for codes with `n = 2k`, `d = d⊥` and positive genus.
    pub field_bound: Option<FieldBound>,
    pub log: LogDiagnostic,
    pub timing_ms: f64,
}

impl AnalysisReport {
    /// Re-checks every invariant the report is supposed to carry.
    pub fn validate(&self) -> Result<(), CliError> {
        let code = self.code.build().map_err(CliError::validation)?;
        let w = &self.weights;
        w.validate().map_err(CliError::internal)?;
        if (w.n, w.k, w.q) != (code.n(), code.k(), code.q()) {
            return Err(CliError::internal("ConsistencyFailure: weights do not match the code"));
        }
        let dual = macwilliams(w).map_err(CliError::internal)?;
        if dual != self.dual_weights {
            return Err(CliError::internal("ConsistencyFailure: dual weights disagree with MacWilliams"));
        }
        let profile = CodeProfile::from_distribution(w).map_err(CliError::internal)?;
        if profile != self.zeta.profile {
            return Err(CliError::internal("ConsistencyFailure: profile mismatch"));
        }
        self.zeta.validate().map_err(CliError::internal)?;
        if &weights_from_dc(&self.zeta.d, &profile).map_err(CliError::internal)? != w
            || &weights_from_zeta_gf(&self.zeta.p, &profile).map_err(CliError::internal)? != w
        {
            return Err(CliError::internal("ConsistencyFailure: zeta data does not reproduce the weights"));
        }
        let fsd = fsd_report(w, &dual, &self.zeta).map_err(CliError::internal)?;
        if fsd != self.fsd {
            return Err(CliError::internal("ConsistencyFailure: self-duality report mismatch"));
        }
        let rha = rha_check(&self.zeta.p, profile.q).map_err(CliError::internal)?;
        if rha.holds != self.rha.holds || rha.method != self.rha.method {
            return Err(CliError::internal("ConsistencyFailure: RHA verdict mismatch"));
        }
        Ok(())
    }

    /// Human-readable summary.
    pub fn table(&self, view: CodeView) -> String {
        let p = &self.zeta.profile;
        let mut s = String::new();
        let _ = writeln!(s, "code      [n={}, k={}, d={}] over GF({})", p.n, p.k, p.d, p.q);
        let _ = writeln!(s, "genus     g={}  g_dual={}  r={}  d_dual={}", p.g, p.g_dual, p.r(), p.d_dual);
        if matches!(view, CodeView::Analyze | CodeView::Wdist) {
            let _ = writeln!(s, "weights   {}", nonzero_counts(&self.weights));
            let _ = writeln!(s, "dual      {}", nonzero_counts(&self.dual_weights));
        }
        if matches!(view, CodeView::Analyze | CodeView::Zeta) {
            let _ = writeln!(s, "P(t)      {}", self.zeta.p);
            let _ = writeln!(s, "D(t)      {}", self.zeta.d);
            let a: Vec<String> = self.zeta.a.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(s, "a         ({})", a.join(", "));
        }
        if matches!(view, CodeView::Analyze | CodeView::Fsd) {
            let f = &self.fsd;
            let _ = writeln!(s, "fsd       weight_equal={} zeta_fixed={} d_fixed={} coeff_relations={}",
                f.weight_equal, f.zeta_fixed, f.d_fixed, f.coeff_relations);
            let _ = writeln!(s, "          from_half={} from_low_weights={} preconditions={}",
                f.reconstruction_from_half, f.reconstruction_from_low_weights, f.parameter_preconditions);
        }
        if matches!(view, CodeView::Analyze | CodeView::Rha) {
            let r = &self.rha;
            let _ = writeln!(s, "rha       holds={} method={:?} max_residual={:.3e}", r.holds, r.method, r.max_residual());
            let _ = writeln!(s, "  {:>24} {:>24} {:>12}", "re", "im", "|t|√q - 1");
            for d in &r.root_diagnostics {
                let _ = writeln!(s, "  {:>24.16} {:>24.16} {:>12.3e}", d.re, d.im, d.residual);
            }
            if let Some(fb) = &self.field_bound {
                let _ = writeln!(s, "bound     nu={} holds={}", fb.nu, fb.bound_holds);
            }
            let _ = writeln!(s, "log       max |S_v| q^(-v/2) = {:.6} over v <= {}", self.log.max_normalized, self.log.s.len());
        }
        s
    }
}

fn nonzero_counts(w: &WeightDistribution) -> String {
    w.counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(i, c)| format!("{i}:{c}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Which part of the analysis a `code` subcommand emits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CodeView {
    Analyze,
    Wdist,
    Zeta,
    Fsd,
    Rha,
}

impl AnalysisReport {
    /// JSON for the requested view.
    pub fn view_json(&self, view: CodeView) -> serde_json::Value {
        use serde_json::json;
        match view {
            CodeView::Analyze => serde_json::to_value(self).expect("serializable"),
            CodeView::Wdist => json!({ "weights": self.weights, "dual_weights": self.dual_weights }),
            CodeView::Zeta => serde_json::to_value(&self.zeta).expect("serializable"),
            CodeView::Fsd => serde_json::to_value(&self.fsd).expect("serializable"),
            CodeView::Rha => json!({ "rha": self.rha, "field_bound": self.field_bound, "log": self.log }),
        }
    }
}

/// Runs the whole pipeline on a code description.
pub fn analyze_code(desc: &CodeDescription, budget: u128) -> Result<AnalysisReport, CliError> {
    let start = Instant::now();
    let code = desc.build().map_err(CliError::validation)?;
    let weights = weight_distribution_via_smaller(&code, budget).map_err(CliError::validation)?;
    let dual_weights = macwilliams(&weights).map_err(CliError::internal)?;
    let profile = CodeProfile::from_distribution(&weights).map_err(CliError::internal)?;
    let zeta = ZetaProfile::from_distribution(&weights, &profile).map_err(CliError::internal)?;
    zeta.validate().map_err(CliError::internal)?;
    if weights_from_dc(&zeta.d, &profile).map_err(CliError::internal)? != weights {
        return Err(CliError::internal("ConsistencyFailure: D does not reproduce the weights"));
    }
    let fsd = fsd_report(&weights, &dual_weights, &zeta).map_err(CliError::internal)?;
    let rha = rha_check(&zeta.p, profile.q).map_err(CliError::internal)?;
    let field_bound = if fsd.parameter_preconditions && profile.g > 0 {
        Some(
            field_bound(profile.k, profile.d, profile.g, weights.count(profile.d), profile.q)
                .map_err(CliError::internal)?,
        )
    } else {
        None
    };
    let log = log_diagnostic(&zeta.p, profile.q, LOG_WINDOW).map_err(CliError::internal)?;
    Ok(AnalysisReport {
        code: code.description(),
        rank_deficient_input: code.rank_deficient_input(),
        weights,
        dual_weights,
        zeta,
        fsd,
        rha,
        field_bound,
        log,
        timing_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

pub fn read_code(path: &Path) -> Result<CodeDescription, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::validation(format!("IoError: {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::validation(format!("ParseError: {}: {e}", path.display())))
}

pub fn cmd_code_analyze(input: &Path, budget: u128) -> Result<AnalysisReport, CliError> {
    analyze_code(&read_code(input)?, budget)
}

/// Analyses every `*.json` file of a directory in parallel, sorted by path.
pub fn cmd_code_analyze_dir(
    dir: &Path,
    budget: u128,
) -> Result<Vec<(PathBuf, Result<AnalysisReport, CliError>)>, CliError> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| CliError::validation(format!("IoError: {}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    Ok(files
        .into_par_iter()
        .map(|p| {
            let r = cmd_code_analyze(&p, budget);
            (p, r)
        })
        .collect())
}

pub fn cmd_fixtures(
    name: &str,
    q: Option<u64>,
    n: Option<usize>,
    k: Option<usize>,
) -> Result<CodeDescription, CliError> {
    fixtures::by_name(name, q, n, k).map_err(CliError::validation)
}

pub fn cmd_random_code(q: u64, n: usize, k: usize, seed: u64) -> Result<CodeDescription, CliError> {
    let field = field_of_size(q).map_err(CliError::validation)?;
    fixtures::random_code(&field, n, k, seed)
        .map(|c| c.description())
        .map_err(CliError::validation)
}

/// Output of `ff analyze`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FfReport {
    pub profile: FunctionFieldProfile,
    #[serde(rename = "B")]
    pub b: Vec<i128>,
    pub relations: RelationsReport,
    pub class_number_bounds: bool,
}

impl FfReport {
    pub fn table(&self) -> String {
        let p = &self.profile;
        let join = |v: &[i128]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
        let mut s = String::new();
        let _ = writeln!(s, "q={} g={} h={}", p.q, p.g, p.h);
        let _ = writeln!(s, "L      [{}]", join(&p.l));
        let _ = writeln!(s, "A      [{}]", join(&p.a));
        let _ = writeln!(s, "D_F    [{}]", join(&p.d_f));
        let hs: Vec<String> = p.h_seq.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(s, "h_seq  [{}]", hs.join(", "));
        let _ = writeln!(s, "B      [{}]", join(&self.b));
        let _ = writeln!(s, "relations {} ({} terms)   class-number bounds {}",
            self.relations.holds, self.relations.checked, self.class_number_bounds);
        for f in &self.relations.failures {
            let _ = writeln!(s, "  failed {:?} at {}", f.relation, f.index);
        }
        s
    }
}

/// Input to `ff analyze`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FfInput {
    LPoly(Vec<i128>),
    Points(Vec<i128>),
}

pub fn cmd_ff_analyze(input: &FfInput, q: u64, window: Option<usize>) -> Result<FfReport, CliError> {
    let profile = match input {
        FfInput::LPoly(l) => profile_from_lpoly(l, q),
        FfInput::Points(n) => profile_from_point_counts(n, q),
    }
    .map_err(CliError::validation)?;
    let n = window.unwrap_or(3 * profile.g);
    let b = b_sequence(&profile, n)
        .map_err(CliError::internal)?
        .iter()
        .map(|x| {
            x.to_i128()
                .ok_or_else(|| CliError::validation("Overflow: B_i exceeds 128 bits"))
        })
        .collect::<Result<_, _>>()?;
    let relations = b_relations_check(&profile, n).map_err(CliError::internal)?;
    Ok(FfReport {
        class_number_bounds: class_number_bounds(&profile),
        profile,
        b,
        relations,
    })
}

/// Parses a comma-separated integer list such as `1,0,4,0,4`.
pub fn parse_int_list(s: &str) -> Result<Vec<i128>, CliError> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i128>()
                .map_err(|e| CliError::validation(format!("ParseError: {t:?}: {e}")))
        })
        .collect()
}

/// Serializes `value` as pretty JSON, to `out` when given and otherwise
/// returned for printing.
pub fn emit_json<T: Serialize>(value: &T, out: Option<&Path>) -> Result<Option<String>, CliError> {
    let text = serde_json::to_string_pretty(value).map_err(CliError::internal)?;
    match out {
        Some(path) => {
            std::fs::write(path, text + "\n")
                .map_err(|e| CliError::validation(format!("IoError: {}: {e}", path.display())))?;
            Ok(None)
        }
        None => Ok(Some(text)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::DEFAULT_BUDGET;
    use crate::poly::rat;

    #[test]
    fn hamming_report() {
        let r = analyze_code(&fixtures::hamming74(), DEFAULT_BUDGET).unwrap();
        assert_eq!(r.zeta.c, vec![rat(1, 5)]);
        assert!(r.rha.holds);
        assert!(!r.fsd.weight_equal && r.fsd.zeta_fixed);
        assert!(r.field_bound.is_none());
        r.validate().unwrap();
        let text = serde_json::to_string(&r).unwrap();
        let back: AnalysisReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        back.validate().unwrap();
    }

    #[test]
    fn zero_column_exit_code() {
        let f = crate::field::make_field(2, 1, None).unwrap();
        let desc = CodeDescription::from_indices(&f, &[vec![1, 0, 1]]);
        let e = analyze_code(&desc, DEFAULT_BUDGET).unwrap_err();
        assert_eq!((e.kind.as_str(), e.exit_code), ("ZeroColumn", 2));
    }

    #[test]
    fn ff_reports() {
        let r = cmd_ff_analyze(&FfInput::LPoly(vec![1, 0, 2]), 2, None).unwrap();
        assert_eq!((r.profile.h, r.profile.d_f.clone()), (3, vec![1]));
        assert!(r.relations.holds);
        let e = cmd_ff_analyze(&FfInput::LPoly(vec![1, 1]), 2, None).unwrap_err();
        assert_eq!((e.kind.as_str(), e.exit_code), ("OddDegree", 2));
        assert_eq!(parse_int_list("1, 0,4").unwrap(), vec![1, 0, 4]);
    }
}
