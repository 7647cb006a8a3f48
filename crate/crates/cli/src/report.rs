//! Serializable reports and their text rendering. Scalars are carried as strings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use skewcoh::deformation::{format_word, orbifold_algebra, square_bracket_transvection, DeformationError, DeformationParams};
use skewcoh::formula::{full_report, nonmodular_crosscheck, CheckStatus, CohomologyReport};
use skewcoh::oracle::{oracle_report, representative_basis, CochainTwo, OracleReport};
use skewcoh::{CyclicGroup, Execution, Matrix, Scalar};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ElementSummary {
    pub index: usize,
    pub codim: usize,
    pub chi: String,
    pub reflection: bool,
    pub nondiagonalizable_reflection: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GroupSummary {
    pub field: String,
    pub dim: usize,
    pub order: usize,
    pub generator: Vec<Vec<String>>,
    pub transfer_image: Vec<Vec<String>>,
    pub elements: Vec<ElementSummary>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PieceSection {
    pub name: String,
    pub dim: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SummandSection {
    pub index: usize,
    pub case: String,
    pub pieces: Vec<PieceSection>,
    pub total: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FormulaSection {
    pub per_element: Vec<SummandSection>,
    pub total_dim: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct OracleElement {
    pub index: usize,
    pub z_dim: usize,
    pub b_dim: usize,
    pub hh_dim: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct OracleSection {
    pub per_element: Vec<OracleElement>,
    pub total_dim: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Verdict {
    pub pass: bool,
    /// Elements whose dimensions disagree.
    pub mismatches: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CheckSection {
    pub status: String,
    pub details: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CrosscheckSection {
    pub coprime: CheckSection,
    pub split: CheckSection,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CochainSection {
    /// `λ(e_k)`, tagged with `lambda_tag`.
    pub lambda: Vec<String>,
    /// Row `m`, column `q`: `e_m` component of `α` on the `q`-th pair `e_a ∧ e_b`, `a < b`.
    pub alpha: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RepSection {
    pub index: usize,
    pub alpha_tag: String,
    pub lambda_tag: String,
    pub basis: Vec<CochainSection>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WitnessSection {
    pub word: String,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ConfluenceSection {
    pub passed: bool,
    pub words_checked: usize,
    pub witness: Option<WitnessSection>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct HilbertSection {
    pub degree: usize,
    pub count: usize,
    pub expected: usize,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DeformSection {
    pub prime: u64,
    pub rules: Vec<String>,
    /// `[γ,γ](g^i ⊗ v₁∧v₂)` per `i`, or why the bracket is out of reach.
    pub bracket: Result<Vec<Vec<String>>, String>,
    pub bracket_zero: Option<bool>,
    pub confluence: ConfluenceSection,
    /// Empty when confluence failed.
    pub hilbert: Vec<HilbertSection>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub group: GroupSummary,
    pub formula: Option<FormulaSection>,
    pub oracle: Option<OracleSection>,
    pub verdict: Option<Verdict>,
    pub nonmodular: Option<CrosscheckSection>,
    pub representatives: Option<Vec<RepSection>>,
    pub deformation: Option<DeformSection>,
    pub pass: bool,
}

fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_string).collect()
}

fn grid(m: &Matrix) -> Vec<Vec<String>> {
    m.row_vecs().iter().map(|r| strings(r)).collect()
}

pub fn group_summary(gr: &CyclicGroup, exec: Execution) -> anyhow::Result<GroupSummary> {
    let data = gr.all_element_data(exec)?;
    Ok(GroupSummary {
        field: gr.field().to_string(),
        dim: gr.dim(),
        order: gr.order(),
        generator: grid(gr.generator()),
        transfer_image: gr.transfer().image.vectors().iter().map(|v| strings(v)).collect(),
        elements: data
            .iter()
            .map(|d| ElementSummary {
                index: d.index,
                codim: d.codim,
                chi: d.chi_of_generator.to_string(),
                reflection: d.is_reflection(),
                nondiagonalizable_reflection: gr.is_nondiagonalizable_reflection(d),
            })
            .collect(),
    })
}

pub fn formula_section(r: &CohomologyReport) -> FormulaSection {
    FormulaSection {
        per_element: r
            .per_element
            .iter()
            .map(|s| SummandSection {
                index: s.element_index,
                case: s.case.to_string(),
                pieces: s
                    .pieces
                    .iter()
                    .map(|p| PieceSection {
                        name: p.name.to_string(),
                        dim: p.dim,
                    })
                    .collect(),
                total: s.total,
            })
            .collect(),
        total_dim: r.total_dim,
    }
}

pub fn oracle_section(r: &OracleReport) -> OracleSection {
    OracleSection {
        per_element: r
            .per_element
            .iter()
            .map(|c| OracleElement {
                index: c.element_index,
                z_dim: c.z_dim,
                b_dim: c.b_dim,
                hh_dim: c.hh_dim,
            })
            .collect(),
        total_dim: r.total_dim,
    }
}

pub fn compare(f: &FormulaSection, o: &OracleSection) -> Verdict {
    let mismatches: Vec<usize> = f
        .per_element
        .iter()
        .zip(&o.per_element)
        .filter(|(s, c)| s.total != c.hh_dim)
        .map(|(s, _)| s.index)
        .collect();
    Verdict {
        pass: mismatches.is_empty() && f.per_element.len() == o.per_element.len(),
        mismatches,
    }
}

fn check_section(c: &CheckStatus) -> CheckSection {
    match c {
        CheckStatus::Pass => CheckSection {
            status: "pass".into(),
            details: Vec::new(),
        },
        CheckStatus::Fail(v) => CheckSection {
            status: "fail".into(),
            details: v.clone(),
        },
        CheckStatus::NotApplicable(why) => CheckSection {
            status: "not applicable".into(),
            details: vec![why.clone()],
        },
    }
}

fn cochain_section(c: &CochainTwo) -> CochainSection {
    CochainSection {
        lambda: strings(&c.lambda),
        alpha: grid(&c.alpha),
    }
}

fn tag(i: usize) -> String {
    match i {
        0 => "1".into(),
        1 => "g".into(),
        _ => format!("g^{i}"),
    }
}

/// Which sections to compute.
#[derive(Clone, Copy, Debug, Default)]
pub struct Sections {
    pub oracle: bool,
    pub representatives: bool,
    pub nonmodular: bool,
}

pub fn cohomology_report(command: &str, gr: &CyclicGroup, want: Sections, exec: Execution) -> anyhow::Result<Report> {
    let group = group_summary(gr, exec)?;
    let formula = full_report(gr)?;
    let formula_sec = formula_section(&formula);
    let mut pass = true;
    let nonmodular = if want.nonmodular {
        let c = nonmodular_crosscheck(gr, &formula)?;
        pass &= !c.coprime.is_fail() && !c.split.is_fail();
        Some(CrosscheckSection {
            coprime: check_section(&c.coprime),
            split: check_section(&c.split),
        })
    } else {
        None
    };
    let (oracle_sec, verdict, representatives) = if want.oracle || want.representatives {
        let oracle = oracle_report(gr)?;
        let sec = oracle_section(&oracle);
        let verdict = compare(&formula_sec, &sec);
        pass &= verdict.pass;
        let reps = if want.representatives {
            let mut out = Vec::new();
            for c in &oracle.per_element {
                let basis = representative_basis(gr, c)?;
                out.push(RepSection {
                    index: c.element_index,
                    alpha_tag: tag(c.element_index),
                    lambda_tag: tag(gr.mul_index(c.element_index, 1 % gr.order())),
                    basis: basis.iter().map(cochain_section).collect(),
                });
            }
            Some(out)
        } else {
            None
        };
        (Some(sec), Some(verdict), reps)
    } else {
        (None, None, None)
    };
    Ok(Report {
        command: command.to_string(),
        group,
        formula: Some(formula_sec),
        oracle: oracle_sec,
        verdict,
        nonmodular,
        representatives,
        deformation: None,
        pass,
    })
}

pub fn deform_section(params: &DeformationParams, exec: Execution) -> anyhow::Result<DeformSection> {
    let prime = params.field().characteristic();
    let rs = orbifold_algebra(params);
    let (bracket, bracket_zero) = match square_bracket_transvection(params) {
        Ok(values) => {
            let zero = values.iter().flatten().all(Scalar::is_zero);
            (Ok(values.iter().map(|v| strings(v)).collect()), Some(zero))
        }
        Err(e @ (DeformationError::UnsupportedKappaShape | DeformationError::UnsupportedGroup)) => {
            (Err(e.to_string()), None)
        }
        Err(e) => return Err(e.into()),
    };
    let confluence = rs.confluence_check_with(3, exec);
    let hilbert = if confluence.passed() {
        (0..=4)
            .map(|d| {
                rs.hilbert_check(d, &confluence).map(|h| HilbertSection {
                    degree: d,
                    count: h.count,
                    expected: h.expected,
                    passed: h.passed(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?
    } else {
        Vec::new()
    };
    let pass = bracket_zero != Some(false) && confluence.passed() && hilbert.iter().all(|h| h.passed);
    Ok(DeformSection {
        prime,
        rules: rs.rules().iter().map(ToString::to_string).collect(),
        bracket,
        bracket_zero,
        confluence: ConfluenceSection {
            passed: confluence.passed(),
            words_checked: confluence.words_checked,
            witness: confluence.witness.map(|w| WitnessSection {
                word: format_word(&w.word),
                left: w.left.to_string(),
                right: w.right.to_string(),
            }),
        },
        hilbert,
        pass,
    })
}

pub fn deform_report(params: &DeformationParams, exec: Execution) -> anyhow::Result<Report> {
    let section = deform_section(params, exec)?;
    Ok(Report {
        command: "deform".into(),
        group: group_summary(params.group(), exec)?,
        formula: None,
        oracle: None,
        verdict: None,
        nonmodular: None,
        representatives: None,
        pass: section.pass,
        deformation: Some(section),
    })
}

fn row(v: &[String]) -> String {
    format!("[{}]", v.join(", "))
}

fn rows(m: &[Vec<String>]) -> String {
    format!("[{}]", m.iter().map(|r| row(r)).collect::<Vec<_>>().join(", "))
}

pub fn render_text(r: &Report) -> String {
    let mut s = String::new();
    let g = &r.group;
    let _ = writeln!(s, "group: order {} in GL_{}({}), generator {}", g.order, g.dim, g.field, rows(&g.generator));
    if g.transfer_image.is_empty() {
        let _ = writeln!(s, "im T = 0");
    } else {
        let _ = writeln!(s, "im T ≠ 0, basis {}", rows(&g.transfer_image));
    }
    for e in &g.elements {
        let mut flags = String::new();
        if e.nondiagonalizable_reflection {
            flags.push_str(", nondiagonalizable reflection");
        } else if e.reflection {
            flags.push_str(", reflection");
        }
        let _ = writeln!(s, "  g^{}: codim {}, chi(g) = {}{flags}", e.index, e.codim, e.chi);
    }
    if let Some(f) = &r.formula {
        let _ = writeln!(s, "formula: total dim {}", f.total_dim);
        for e in &f.per_element {
            let pieces: Vec<String> = e.pieces.iter().map(|p| format!("{} {}", p.name, p.dim)).collect();
            let _ = writeln!(s, "  g^{} [{}]: {} ({})", e.index, e.case, e.total, pieces.join(", "));
        }
    }
    if let Some(o) = &r.oracle {
        let _ = writeln!(s, "oracle: total dim {}", o.total_dim);
        for e in &o.per_element {
            let _ = writeln!(s, "  g^{}: Z {} B {} HH {}", e.index, e.z_dim, e.b_dim, e.hh_dim);
        }
    }
    if let Some(v) = &r.verdict {
        if v.pass {
            let _ = writeln!(s, "comparison: pass");
        } else {
            let _ = writeln!(s, "comparison: FAIL at elements {:?}", v.mismatches);
        }
    }
    if let Some(c) = &r.nonmodular {
        for (name, sec) in [("coprime", &c.coprime), ("split", &c.split)] {
            let _ = writeln!(s, "nonmodular {name}: {}", sec.status);
            for d in &sec.details {
                let _ = writeln!(s, "  {d}");
            }
        }
    }
    if let Some(reps) = &r.representatives {
        let _ = writeln!(s, "representatives (α ⊗ h, λ ⊗ hg):");
        for rep in reps {
            let _ = writeln!(
                s,
                "  h = {}, hg = {}: {} basis cochains",
                rep.alpha_tag,
                rep.lambda_tag,
                rep.basis.len()
            );
            for c in &rep.basis {
                let _ = writeln!(s, "    λ = {} ⊗ {}, α = {} ⊗ {}", row(&c.lambda), rep.lambda_tag, rows(&c.alpha), rep.alpha_tag);
            }
        }
    }
    if let Some(d) = &r.deformation {
        let _ = writeln!(s, "deformation over F_{}:", d.prime);
        for rule in &d.rules {
            let _ = writeln!(s, "  {rule}");
        }
        match (&d.bracket, d.bracket_zero) {
            (Ok(_), Some(true)) => {
                let _ = writeln!(s, "square bracket: zero");
            }
            (Ok(v), _) => {
                let _ = writeln!(s, "square bracket: NONZERO {}", rows(v));
            }
            (Err(why), _) => {
                let _ = writeln!(s, "square bracket: not computed ({why})");
            }
        }
        let c = &d.confluence;
        match &c.witness {
            None => {
                let _ = writeln!(s, "confluence: pass ({} words)", c.words_checked);
            }
            Some(w) => {
                let _ = writeln!(s, "confluence: FAIL at {}: {} vs {}", w.word, w.left, w.right);
            }
        }
        for h in &d.hilbert {
            let _ = writeln!(
                s,
                "hilbert d={}: {} normal monomials, expected {}{}",
                h.degree,
                h.count,
                h.expected,
                if h.passed { "" } else { " FAIL" }
            );
        }
    }
    let _ = writeln!(s, "result: {}", if r.pass { "pass" } else { "FAIL" });
    s
}
