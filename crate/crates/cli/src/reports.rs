//! Machine-readable report shapes. Field order is fixed by struct order and
//! all content is deterministic, so byte-identical reruns are guaranteed.

use serde::Serialize;

#[derive(Serialize)]
pub struct VerifyHopfReport {
    pub verb: &'static str,
    pub input: String,
    pub passed: bool,
    pub axioms: Vec<&'static str>,
    pub failures: Vec<String>,
    pub commutative: bool,
    pub cocommutative: bool,
    pub finite_dimensional: bool,
    pub noetherian: &'static str,
}

#[derive(Serialize)]
pub struct VerifyObjectReport {
    pub verb: &'static str,
    pub input: String,
    pub kind: String,
    pub module_passed: Option<bool>,
    pub comodule_passed: Option<bool>,
    pub compat_passed: Option<bool>,
    pub failing_pairs: Vec<(usize, usize)>,
    pub passed: bool,
}

#[derive(Serialize)]
pub struct CoinvReport {
    pub verb: &'static str,
    pub input: String,
    pub dim: usize,
    pub basis: Vec<Vec<String>>,
}

#[derive(Serialize)]
pub struct DecomposeReport {
    pub verb: &'static str,
    pub input: String,
    pub kind: String,
    pub dim: usize,
    pub status: String,
    pub summand_dims: Vec<usize>,
    pub certificates: Vec<String>,
    pub witness_dim: Option<usize>,
}

#[derive(Serialize)]
pub struct ProjectiveReport {
    pub verb: &'static str,
    pub input: String,
    pub kind: String,
    pub projective: bool,
}

#[derive(Serialize)]
pub struct QybeReport {
    pub verb: &'static str,
    pub input: String,
    pub invertible: bool,
    pub qybe: bool,
}

#[derive(Serialize)]
pub struct AdjunctionReport {
    pub verb: &'static str,
    pub inputs: Vec<String>,
    pub kind: String,
    pub lhs_dim: usize,
    pub rhs_dim: usize,
    pub bijective: bool,
    pub projectivity_route: String,
}

#[derive(Serialize)]
pub struct HypothesesDto {
    pub commutative_required: bool,
    pub commutative: bool,
    pub finite_dimensional: bool,
    pub noetherian: &'static str,
    pub semisimple: bool,
    pub cosemisimple: bool,
    pub all_hold: bool,
}

#[derive(Serialize)]
pub struct SampleDto {
    pub name: String,
    pub dim: usize,
    pub semisimple: bool,
    pub summand_dims: Vec<usize>,
    pub witness_dim: Option<usize>,
}

#[derive(Serialize)]
pub struct SemisimpleReport {
    pub verb: &'static str,
    pub input: String,
    pub kind: String,
    pub hypotheses: HypothesesDto,
    pub onedim_classes: usize,
    pub samples: Vec<SampleDto>,
    pub simple_object_count: Option<usize>,
    pub center_simple_count: Option<usize>,
    pub verdict: String,
}

pub const NOETHERIAN_NOTE: &str = "finite dimension implies noetherian";
