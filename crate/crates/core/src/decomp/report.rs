//! The category-level semisimplicity verdicts: evaluate the hypotheses,
//! decompose a deterministic sample of objects, census the simple objects
//! through the governing algebra, and report.

use super::{
    decompose, decompose_object, onedim_census, simple_count_via_center, DecompOptions,
    DecompStatus, GeneratorSet,
};
use crate::compat::{free, hom_object, onedim, tensor, trivial, Object, ObjectKind};
use crate::double::{drinfeld_double, long_algebra};
use crate::error::Result;
use crate::hopf::Hopf;
use crate::linalg::Vector;
use crate::rep::{regular_comodule, regular_module, trivial_comodule};

#[derive(Clone, Copy, Debug)]
pub struct SampleSpec {
    /// Constructed sample objects are kept only up to this dimension.
    pub max_dim: usize,
    pub seed: u64,
}

impl Default for SampleSpec {
    fn default() -> Self {
        SampleSpec { max_dim: 8, seed: 0xC0FFEE }
    }
}

#[derive(Clone, Debug)]
pub struct Hypotheses {
    pub kind: ObjectKind,
    pub commutative_required: bool,
    pub commutative: bool,
    /// Always true here: the loader only admits finite dimension, which is
    /// the noetherian hypothesis in this setting.
    pub finite_dimensional: bool,
    pub semisimple: bool,
    pub cosemisimple: bool,
    pub all_hold: bool,
}

#[derive(Clone, Debug)]
pub struct SampleResult {
    pub name: String,
    pub dim: usize,
    pub semisimple: bool,
    pub summand_dims: Vec<usize>,
    pub witness_dim: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    ConsistentSemisimple,
    Counterexample { sample: String, witness_dim: usize },
    HypothesesFailNoWitness,
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::ConsistentSemisimple => "CONSISTENT-SEMISIMPLE",
            Verdict::Counterexample { .. } => "COUNTEREXAMPLE",
            Verdict::HypothesesFailNoWitness => "HYPOTHESES-FAIL-NO-WITNESS",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SemisimplicityReport {
    pub hypotheses: Hypotheses,
    /// Isomorphism classes of one-dimensional objects of the kind.
    pub onedim_classes: usize,
    pub samples: Vec<SampleResult>,
    /// Simple-object count of the category, from decomposing the regular
    /// module of the governing algebra (D(H) or H (x) H*); only computed
    /// when the hypotheses hold.
    pub simple_object_count: Option<usize>,
    /// The same count through central primitive idempotents, as a second
    /// route inside the report.
    pub center_simple_count: Option<usize>,
    pub verdict: Verdict,
}

fn render_vector(h: &Hopf, v: &[crate::linalg::Scalar]) -> String {
    let f = h.field();
    v.iter().map(|x| f.render(x)).collect::<Vec<_>>().join(",")
}

/// Deterministic sample of objects for one Hopf algebra and kind, capped by
/// `max_dim`: the trivial object, every one-dimensional object, the free
/// object on k, and tensor/hom-constructed combinations.
fn build_samples(
    h: &Hopf,
    kind: ObjectKind,
    onedims: &[(Vector, Vector)],
    max_dim: usize,
) -> Result<Vec<(String, Object)>> {
    let n = h.dim();
    let mut out: Vec<(String, Object)> = Vec::new();
    out.push(("trivial(1)".into(), trivial(h, 1, kind)));
    for (chi, t) in onedims {
        let name = format!("onedim(chi=[{}],t=[{}])", render_vector(h, chi), render_vector(h, t));
        out.push((name, onedim(h, chi, t, kind)?));
    }
    if n <= max_dim {
        let fk = free(&trivial_comodule(h, 1), kind)?;
        if let Some((chi, t)) = onedims.first() {
            let od = onedim(h, chi, t, kind)?;
            out.push(("tensor(free(k),onedim[0])".into(), tensor(&fk, &od)?));
        }
        if n * n <= max_dim {
            out.push(("tensor(free(k),free(k))".into(), tensor(&fk, &fk)?));
            out.push(("free(H)".into(), free(&regular_comodule(h), kind)?));
        }
        if h.is_commutative() {
            let (homff, _) = hom_object(&fk, &fk)?;
            out.push(("hom(free(k),free(k))".into(), homff));
        }
        out.push(("free(k)".into(), fk));
    }
    out.retain(|(_, obj)| obj.dim() <= max_dim);
    Ok(out)
}

/// Count isomorphism classes among the summands of a decomposition of one
/// module (the regular module of the governing algebra).
fn count_simple_classes(gens: &GeneratorSet, report: &super::DecompositionReport) -> Result<usize> {
    let mut reps: Vec<&crate::linalg::Subspace> = Vec::new();
    for s in &report.summands {
        let mut known = false;
        for r in &reps {
            if super::isomorphic_substructures(gens, &s.subspace, gens, r)? {
                known = true;
                break;
            }
        }
        if !known {
            reps.push(&s.subspace);
        }
    }
    Ok(reps.len())
}

/// Evaluate the hypotheses of the semisimplicity theorems on `H`, decompose
/// every sampled object, and produce the verdict:
/// `CONSISTENT-SEMISIMPLE` when the hypotheses hold and every sample
/// decomposes; `COUNTEREXAMPLE` when they fail and a non-split witness is
/// found; `HYPOTHESES-FAIL-NO-WITNESS` otherwise.
pub fn semisimplicity_report(
    h: &Hopf,
    kind: ObjectKind,
    spec: &SampleSpec,
) -> Result<SemisimplicityReport> {
    let commutative_required = kind == ObjectKind::Yd;
    let commutative = h.is_commutative();
    let semisimple = h.is_semisimple()?;
    let cosemisimple = h.is_cosemisimple()?;
    let all_hold = (!commutative_required || commutative) && semisimple && cosemisimple;
    let hypotheses = Hypotheses {
        kind,
        commutative_required,
        commutative,
        finite_dimensional: true,
        semisimple,
        cosemisimple,
        all_hold,
    };

    let (onedims, _) = onedim_census(h, kind)?;
    let samples_in = build_samples(h, kind, &onedims, spec.max_dim)?;
    let opts = DecompOptions { seed: spec.seed, ..DecompOptions::default() };
    let mut samples = Vec::with_capacity(samples_in.len());
    let mut first_witness: Option<(String, usize)> = None;
    for (name, obj) in &samples_in {
        let report = decompose_object(obj, &opts)?;
        let witness_dim = match &report.status {
            DecompStatus::Semisimple => None,
            DecompStatus::NonSplit { witness, .. } => Some(witness.dim()),
        };
        if let Some(wd) = witness_dim {
            if first_witness.is_none() {
                first_witness = Some((name.clone(), wd));
            }
        }
        samples.push(SampleResult {
            name: name.clone(),
            dim: obj.dim(),
            semisimple: report.is_semisimple(),
            summand_dims: report.summand_dims(),
            witness_dim,
        });
    }

    let (simple_object_count, center_simple_count) = if all_hold {
        let governing = match kind {
            ObjectKind::Yd => drinfeld_double(h)?.hopf,
            ObjectKind::Long => long_algebra(h)?.hopf,
        };
        let gens = GeneratorSet::from_module(&regular_module(&governing));
        let reg_report = decompose(&gens, &opts)?;
        let classes = if reg_report.is_semisimple() {
            Some(count_simple_classes(&gens, &reg_report)?)
        } else {
            None
        };
        (classes, Some(simple_count_via_center(&governing)?))
    } else {
        (None, None)
    };

    let all_samples_split = samples.iter().all(|s| s.semisimple);
    let verdict = if all_hold && all_samples_split {
        Verdict::ConsistentSemisimple
    } else if !all_hold {
        match first_witness {
            Some((sample, witness_dim)) => Verdict::Counterexample { sample, witness_dim },
            None => Verdict::HypothesesFailNoWitness,
        }
    } else {
        Verdict::HypothesesFailNoWitness
    };

    Ok(SemisimplicityReport {
        hypotheses,
        onedim_classes: onedims.len(),
        samples,
        simple_object_count,
        center_simple_count,
        verdict,
    })
}
