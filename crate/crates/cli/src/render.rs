//! Text, CSV and JSON rendering of command results.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use braidknot::concordance::{InequalityReport, InvariantProfile};
use braidknot::harness::acceptance::CriterionOutcome;
use braidknot::harness::{scan_csv, scan_report, DefectReport, FamilySpec, LipschitzReport, ScanRow};
use braidknot::{BraidWord, KnotRep, NormalCoordinates, OmegaPoint};
use num_traits::{Signed, ToPrimitive};
use serde_json::json;

use crate::svg::{line_plot, Series};
use crate::{Failure, Format, Settings};

/// Collects the whole output, written once at the end.
pub struct Output {
    format: Format,
    paper_sign: bool,
    path: Option<PathBuf>,
    buf: String,
}

fn csv_lines(records: &[Vec<String>]) -> String {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    for r in records {
        w.write_record(r).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("csv output is UTF-8")
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

impl Output {
    pub fn new(s: &Settings) -> Self {
        Self { format: s.format, paper_sign: s.paper_sign, path: s.output.clone(), buf: String::new() }
    }

    pub fn finish(self) -> std::io::Result<()> {
        match self.path {
            Some(p) => std::fs::write(p, self.buf),
            None => std::io::stdout().lock().write_all(self.buf.as_bytes()),
        }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.buf.push_str(s.as_ref());
        self.buf.push('\n');
    }

    fn json(&mut self, v: serde_json::Value) {
        let text = serde_json::to_string_pretty(&v).expect("values serialize");
        self.line(text);
    }

    fn signed(&self, p: &InvariantProfile) -> InvariantProfile {
        if self.paper_sign { p.sign_flipped() } else { p.clone() }
    }

    pub fn profile(&mut self, braid: &BraidWord, input: Option<&BraidWord>, p: &InvariantProfile, extra: &[(OmegaPoint, i64)]) {
        let p = self.signed(p);
        match self.format {
            Format::Text => {
                if let Some(a) = input {
                    self.line(format!("input         {a}"));
                }
                self.line(format!("braid         {braid}"));
                self.line(format!("signature     {}", p.signature));
                self.line(format!("determinant   {}", p.determinant));
                if let Some(a) = &p.alexander {
                    self.line(format!("alexander     {a}"));
                }
                for (w, v) in &p.omega_signatures {
                    self.line(format!("sign_{:<9}{v}", w.to_string()));
                }
                for (w, v) in extra {
                    self.line(format!("sign_{:<9}{v}", w.to_string()));
                }
                self.line(format!("g4            {} ..= {}", p.g4_lower, p.g4_upper.map_or("?".into(), |g| g.to_string())));
                self.line(format!(
                    "genus3        {} ..= {}",
                    p.genus3_lower.map_or("?".into(), |g| g.to_string()),
                    p.genus3_upper
                ));
            }
            Format::Csv => {
                let mut head = vec!["braid".to_string()];
                let mut row = vec![braid.to_string()];
                if let Some(a) = input {
                    head.insert(0, "input".into());
                    row.insert(0, a.to_string());
                }
                head.extend(["signature", "determinant", "alexander"].map(String::from));
                row.extend([p.signature.to_string(), p.determinant.to_string(), opt(p.alexander.as_ref().map(|a| a.to_pairs()))]);
                for (w, v) in &p.omega_signatures {
                    head.push(format!("sign_{w}"));
                    row.push(v.to_string());
                }
                for (w, v) in extra {
                    head.push(format!("sign_{w}"));
                    row.push(v.to_string());
                }
                head.extend(["g4_lower", "g4_upper", "genus3_lower", "genus3_upper"].map(String::from));
                row.extend([p.g4_lower.to_string(), opt(p.g4_upper), opt(p.genus3_lower), p.genus3_upper.to_string()]);
                self.buf.push_str(&csv_lines(&[head, row]));
            }
            Format::Json => {
                let extra: serde_json::Map<String, serde_json::Value> =
                    extra.iter().map(|(w, v)| (w.to_string(), json!(v))).collect();
                self.json(json!({
                    "input": input.map(|a| a.to_string()),
                    "braid": braid.to_string(),
                    "profile": p,
                    "extra_omega_signatures": extra,
                }));
            }
        }
    }

    pub fn defect(
        &mut self,
        a: &BraidWord,
        b: &BraidWord,
        k: &KnotRep,
        p: &InvariantProfile,
        bound: u64,
        suite: &InequalityReport,
    ) {
        let p = self.signed(p);
        match self.format {
            Format::Text => {
                self.line(format!("alpha         {a}"));
                self.line(format!("beta          {b}"));
                self.line(format!("defect        {}", k.braid()));
                self.line(format!("signature     {}", p.signature));
                self.line(format!("determinant   {}", p.determinant));
                self.line(format!("g4_lower      {} (bound 3n+1 = {bound})", p.g4_lower));
                for r in &suite.rows {
                    let status = if r.pass { "ok" } else { "VIOLATED" };
                    self.line(format!("{:<28}{:>4} <= {:<4} {status}", r.name, r.measured, r.bound));
                }
            }
            Format::Csv => {
                let mut recs = vec![["check", "measured", "bound", "pass"].map(String::from).to_vec()];
                recs.push(vec!["defect g4_lower".into(), p.g4_lower.to_string(), bound.to_string(), (p.g4_lower <= bound).to_string()]);
                for r in &suite.rows {
                    recs.push(vec![r.name.clone(), r.measured.to_string(), r.bound.to_string(), r.pass.to_string()]);
                }
                self.buf.push_str(&csv_lines(&recs));
            }
            Format::Json => self.json(json!({
                "alpha": a.to_string(),
                "beta": b.to_string(),
                "defect": k.braid().to_string(),
                "profile": p,
                "bound": bound,
                "inequalities": suite,
            })),
        }
    }

    pub fn family(&mut self, spec: &FamilySpec, rows: Vec<ScanRow>) -> Result<(), Failure> {
        match self.format {
            Format::Csv => {
                let text = scan_csv(&rows, &spec.options.omegas)?;
                self.buf.push_str(&text);
            }
            Format::Json => self.json(serde_json::to_value(scan_report(spec, rows)).expect("report serializes")),
            Format::Text => {
                self.line(format!("family {} (base {}), p = {}..={}", spec.name, spec.base, spec.powers.0, spec.powers.1));
                self.line(format!("{:>4} {:>6} {:>5} {:>10} {:>22} {:>9} {:>6}", "p", "length", "comp", "signature", "determinant", "g4", "pass"));
                for r in &rows {
                    let det = r.profile.as_ref().map_or(String::new(), |p| p.determinant.to_string());
                    let g4 = r.profile.as_ref().map_or(String::new(), |p| format!("{}..{}", p.g4_lower, opt(p.g4_upper)));
                    let pass = match (&r.error, r.pass) {
                        (Some(e), _) => format!("error: {e}"),
                        (None, Some(true)) => "yes".into(),
                        (None, Some(false)) => "NO".into(),
                        (None, None) => "-".into(),
                    };
                    self.line(format!(
                        "{:>4} {:>6} {:>5} {:>10} {:>22} {:>9} {:>6}",
                        r.p, r.length, r.components, r.signature, det, g4, pass
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn criteria(&mut self, outcomes: &[CriterionOutcome]) -> Result<(), Failure> {
        match self.format {
            Format::Text => {
                for o in outcomes {
                    let status = if o.pass { "PASS" } else { "FAIL" };
                    self.line(format!("{status} [{:>2}] {}: {}", o.id, o.name, o.detail));
                }
                let passed = outcomes.iter().filter(|o| o.pass).count();
                self.line(format!("{passed} of {} criteria passed", outcomes.len()));
            }
            Format::Csv => {
                let mut recs = vec![["id", "name", "pass", "detail"].map(String::from).to_vec()];
                recs.extend(outcomes.iter().map(|o| vec![o.id.to_string(), o.name.clone(), o.pass.to_string(), o.detail.clone()]));
                self.buf.push_str(&csv_lines(&recs));
            }
            Format::Json => self.json(json!(outcomes)),
        }
        Ok(())
    }

    pub fn defect_sweep(&mut self, r: &DefectReport) -> Result<(), Failure> {
        match self.format {
            Format::Text => {
                self.line(format!("B{}, words of length <= {}: {} pairs", r.strands, r.max_len, r.pairs));
                self.line(format!("max g4_lower of the defect: {} (bound {})", r.max_observed, r.bound));
                self.line(format!("violations: {}", r.violations.len()));
                for w in &r.worst {
                    self.line(format!("  attained by {} | {}", w.a, w.b));
                }
            }
            Format::Csv => {
                let mut recs = vec![["a", "b", "g4_lower", "bound"].map(String::from).to_vec()];
                for w in r.violations.iter().chain(&r.worst) {
                    recs.push(vec![w.a.to_string(), w.b.to_string(), w.g4_lower.to_string(), r.bound.to_string()]);
                }
                self.buf.push_str(&csv_lines(&recs));
            }
            Format::Json => self.json(json!(r)),
        }
        Ok(())
    }

    pub fn lipschitz_sweep(&mut self, r: &LipschitzReport) -> Result<(), Failure> {
        match self.format {
            Format::Text => {
                self.line(format!("B{}, {} samples of length <= {}, seed {:#x}", r.strands, r.samples, r.max_len, r.seed));
                self.line(format!("worst g4_lower - ceil(len/2): {}", r.worst_margin));
                if let Some(w) = &r.worst {
                    self.line(format!("  attained by {}", w.word));
                }
                self.line(format!("violations: {}", r.violations.len()));
            }
            Format::Csv => {
                let mut recs = vec![["word", "g4_lower", "ceiling", "g4_upper"].map(String::from).to_vec()];
                for w in r.violations.iter().chain(&r.worst) {
                    recs.push(vec![w.word.to_string(), w.g4_lower.to_string(), w.ceiling.to_string(), w.g4_upper.to_string()]);
                }
                self.buf.push_str(&csv_lines(&recs));
            }
            Format::Json => self.json(json!(r)),
        }
        Ok(())
    }

    pub fn normal_form(&mut self, a: &BraidWord, c: &NormalCoordinates) {
        match self.format {
            Format::Text => self.line(format!("{a}\n{c}")),
            Format::Csv => self.buf.push_str(&csv_lines(&[
                vec!["braid".into(), "coordinates".into()],
                vec![a.to_string(), c.to_string()],
            ])),
            Format::Json => self.json(json!({ "braid": a.to_string(), "coordinates": c })),
        }
    }
}

/// Applies `--paper-sign` to the signature columns of a scan.
pub fn signed_rows(rows: Vec<ScanRow>, paper_sign: bool) -> Vec<ScanRow> {
    if !paper_sign {
        return rows;
    }
    rows.into_iter()
        .map(|mut r| {
            r.signature = -r.signature;
            r.profile = r.profile.map(|p| p.sign_flipped());
            r
        })
        .collect()
}

pub fn family_svg(spec: &FamilySpec, rows: &[ScanRow]) -> String {
    let ok: Vec<&ScanRow> = rows.iter().filter(|r| r.error.is_none()).collect();
    let signature = Series {
        label: "signature".into(),
        colour: "steelblue",
        points: ok.iter().map(|r| (r.p as f64, r.signature as f64)).collect(),
    };
    let determinant = Series {
        label: "log10 determinant".into(),
        colour: "firebrick",
        points: ok
            .iter()
            .filter_map(|r| {
                let d = r.profile.as_ref()?.determinant.abs();
                let bits = d.bits();
                // keep the leading 52 bits so huge determinants still plot
                let shift = bits.saturating_sub(52);
                let mantissa = (d >> shift).to_f64()?;
                (mantissa > 0.0).then(|| (r.p as f64, mantissa.log10() + shift as f64 * 2f64.log10()))
            })
            .collect(),
    };
    let mut title = String::new();
    let _ = write!(title, "{} ({})", spec.name, spec.base);
    line_plot(&title, &[signature, determinant])
}
