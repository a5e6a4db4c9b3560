//! Numerical verification harness for the mutual disposition of adjacent
//! strata near a base stratum.
//!
//! Fix a point A of a stratum U of dimension s ≤ n−2. Pinning the first s
//! coefficients a_1..a_s at their A-values cuts each adjacent stratum of
//! dimension s+1 down to a curve ending at A (the strata are graphs over
//! the leading coefficients, so the cut is a genuine curve); the harness
//! traces those curves, reads their projections in the (a_{s+1}, a_{s+2})
//! plane, and checks the slope, smooth-joining, slope-ordering, sidedness,
//! and above/below properties of the family.
//!
//! Curve families are indexed from the rightmost component of the
//! multiplicity vector: i = 1 is the largest root. In that indexing the
//! split curves of one component share a slope, slopes strictly decrease
//! with i, splits of an even-indexed component project to the right of A
//! and odd-indexed ones to the left, and the complexification curve V_i
//! continues U_{i,1} smoothly through A on the opposite side.

mod trace;
mod verify;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::geomkit::{sample_stratum, SampleBox, SampleError, StratumPoint};
use crate::polycore::MultiplicityVector;
use crate::stratlat::{CoverLabel, Stratum};

pub use trace::{default_scales, trace_adjacent_curve, trace_all_curves, TraceError};
pub use verify::{
    verify_all, verify_lemma_leftright, verify_lemma_slope, verify_lemma_slopebis,
    verify_lemma_updown, verify_lemma_uv, LemmaTolerances,
};

#[derive(Debug, Clone, PartialEq)]
pub enum SetupError {
    /// The section needs two coordinates beyond the pinned ones:
    /// dim U ≤ n − 2.
    DimensionTooLarge { dim: u32, max: u32 },
    Sample(SampleError),
}

impl fmt::Display for SetupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetupError::DimensionTooLarge { dim, max } => {
                write!(f, "stratum dimension {} exceeds the section limit {}", dim, max)
            }
            SetupError::Sample(e) => write!(f, "sampling failed: {}", e),
        }
    }
}

impl std::error::Error for SetupError {}

/// A base point A on a stratum U of dimension s together with the section
/// coordinates (a_{s+1}, a_{s+2}).
#[derive(Debug, Clone)]
pub struct SectionSetup {
    pub stratum: Stratum,
    pub base: StratumPoint,
    /// Dimension s of U: the number of pinned coefficients.
    pub s: usize,
    /// 1-based coefficient indices of the section plane: (s+1, s+2).
    pub coords: (usize, usize),
}

/// Samples the base point from a seed.
pub fn section_setup(
    stratum: &Stratum,
    seed: u64,
    sample_box: &SampleBox,
) -> Result<SectionSetup, SetupError> {
    let point = sample_stratum(stratum, seed, sample_box).map_err(SetupError::Sample)?;
    section_setup_from_point(point)
}

/// Builds the section at a caller-provided point.
pub fn section_setup_from_point(base: StratumPoint) -> Result<SectionSetup, SetupError> {
    let stratum = base.stratum.clone();
    let n = stratum.ambient_degree();
    let dim = stratum.dimension();
    if dim + 2 > n {
        return Err(SetupError::DimensionTooLarge { dim, max: n - 2 });
    }
    let s = dim as usize;
    Ok(SectionSetup {
        stratum,
        base,
        s,
        coords: (s + 1, s + 2),
    })
}

/// Identification of an adjacent-stratum curve, indexed from the rightmost
/// component: splitting component i (counted from the largest root) with j
/// the multiplicity kept by the larger of the two new roots, or deleting a
/// component equal to 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CurveLabel {
    Split { i: usize, j: u32 },
    Delete { i: usize },
}

impl CurveLabel {
    pub fn family(&self) -> usize {
        match self {
            CurveLabel::Split { i, .. } | CurveLabel::Delete { i } => *i,
        }
    }

    /// Converts a poset cover label (components counted from the smallest
    /// root, `left` kept by the smaller new root) for a vector with q
    /// components.
    pub fn from_cover(label: &CoverLabel, mv: &MultiplicityVector) -> Self {
        let q = mv.group_count();
        match *label {
            CoverLabel::Split { component, left } => CurveLabel::Split {
                i: q + 1 - component,
                j: mv.parts()[component - 1] - left,
            },
            CoverLabel::Delete2 { component } => CurveLabel::Delete {
                i: q + 1 - component,
            },
        }
    }
}

impl fmt::Display for CurveLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveLabel::Split { i, j } => write!(f, "U[{},{}]", i, j),
            CurveLabel::Delete { i } => write!(f, "V[{}]", i),
        }
    }
}

/// One traced point of an adjacent curve, at a fixed perturbation scale.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct CurvePoint {
    pub scale: f64,
    /// a_{s+1} − A_{s+1}
    pub d1: f64,
    /// a_{s+2} − A_{s+2}
    pub d2: f64,
    /// max_u |a_u − A_u| over the pinned coordinates after solving
    pub residual: f64,
}

/// A traced adjacent-stratum curve with its fitted tangent data.
#[derive(Debug, Clone)]
pub struct AdjacentCurve {
    pub label: CurveLabel,
    /// The cover label in poset convention that produced this curve.
    pub cover_label: CoverLabel,
    pub upper_mv: MultiplicityVector,
    pub points: Vec<CurvePoint>,
    /// Extrapolated limit of d2/d1 as the scale shrinks.
    pub slope: f64,
    /// Intercept of the limit tangent line a_{s+2} = k·a_{s+1} + θ.
    pub theta: f64,
    /// Sign of d1: +1 projects to the right of A on the a_{s+1} axis,
    /// −1 to the left. Constant across scales.
    pub side: i8,
    pub slope_cauchy: bool,
    pub slope_est_error: f64,
}

/// The verdict of one lemma check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum LemmaId {
    Slope,
    Uv,
    Slopebis,
    Leftright,
    Updown,
}

impl LemmaId {
    pub const ALL: [LemmaId; 5] = [
        LemmaId::Slope,
        LemmaId::Uv,
        LemmaId::Slopebis,
        LemmaId::Leftright,
        LemmaId::Updown,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            LemmaId::Slope => "slope",
            LemmaId::Uv => "UV",
            LemmaId::Slopebis => "slopebis",
            LemmaId::Leftright => "leftright",
            LemmaId::Updown => "updown",
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of one lemma verification at one section setup.
#[derive(Debug, Clone)]
pub struct LemmaReport {
    pub lemma: LemmaId,
    pub stratum: Stratum,
    pub seed: Option<u64>,
    pub verdict: Verdict,
    /// True when the lemma's hypothesis is empty at this stratum.
    pub vacuous: bool,
    /// Named numerical slacks by which the asserted relations hold.
    pub margins: BTreeMap<String, f64>,
    pub details: Vec<String>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// JSON form of a lemma report.
#[derive(Debug, Serialize)]
pub struct LemmaReportJson {
    pub lemma: String,
    pub stratum: Vec<u32>,
    pub n: u32,
    pub seed: Option<u64>,
    pub verdict: Verdict,
    pub vacuous: bool,
    pub margins: BTreeMap<String, f64>,
    pub details: Vec<String>,
}

impl From<&LemmaReport> for LemmaReportJson {
    fn from(r: &LemmaReport) -> Self {
        LemmaReportJson {
            lemma: r.lemma.name().to_string(),
            stratum: r.stratum.mv().parts().to_vec(),
            n: r.stratum.ambient_degree(),
            seed: r.seed,
            verdict: r.verdict,
            vacuous: r.vacuous,
            margins: r.margins.clone(),
            details: r.details.clone(),
        }
    }
}
