//! Shipped fixtures: the concrete Hopf algebras and standard objects the
//! test batteries and reports run on.

use std::sync::Arc;

use crate::error::Result;
use crate::hopf::{group_algebra, sweedler_h4, Hopf, HopfAlgebra};
use crate::linalg::Field;

/// Cayley table of the cyclic group of order `n`.
pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
}

pub fn cyclic_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g{i}"),
        })
        .collect()
}

/// Cayley table of S3 from explicit permutations of three letters;
/// composition is `(p * q)(i) = p[q[i]]`.
pub fn s3_table() -> (Vec<Vec<usize>>, Vec<String>) {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [1, 0, 2],
        [2, 1, 0],
        [0, 2, 1],
        [1, 2, 0],
        [2, 0, 1],
    ];
    let names = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"]
        .map(String::from)
        .to_vec();
    let compose = |p: &[usize; 3], q: &[usize; 3]| -> [usize; 3] {
        [p[q[0]], p[q[1]], p[q[2]]]
    };
    let table = perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| {
                    let pq = compose(p, q);
                    perms.iter().position(|r| *r == pq).unwrap()
                })
                .collect()
        })
        .collect();
    (table, names)
}

pub fn group_hopf(field: Field, table: &[Vec<usize>], names: &[String]) -> Result<Hopf> {
    Ok(Arc::new(group_algebra(field, table, names)?))
}

pub fn gf2_c2() -> Hopf {
    group_hopf(Field::gf(2).unwrap(), &cyclic_table(2), &cyclic_names(2)).unwrap()
}

pub fn gf3_c2() -> Hopf {
    group_hopf(Field::gf(3).unwrap(), &cyclic_table(2), &cyclic_names(2)).unwrap()
}

pub fn q_c2() -> Hopf {
    group_hopf(Field::rationals(), &cyclic_table(2), &cyclic_names(2)).unwrap()
}

pub fn gf5_c4() -> Hopf {
    group_hopf(Field::gf(5).unwrap(), &cyclic_table(4), &cyclic_names(4)).unwrap()
}

pub fn gf7_s3() -> Hopf {
    let (table, names) = s3_table();
    group_hopf(Field::gf(7).unwrap(), &table, &names).unwrap()
}

pub fn dual_gf5_c4() -> Hopf {
    gf5_c4().dual().unwrap()
}

pub fn sweedler_h4_gf5() -> Hopf {
    Arc::new(sweedler_h4(Field::gf(5).unwrap()).unwrap())
}

/// The six shipped verification fixtures, by name.
pub fn shipped_fixtures() -> Vec<(&'static str, Hopf)> {
    vec![
        ("gf2_c2", gf2_c2()),
        ("q_c2", q_c2()),
        ("gf5_c4", gf5_c4()),
        ("gf7_s3", gf7_s3()),
        ("dual_gf5_c4", dual_gf5_c4()),
        ("sweedler_h4_gf5", sweedler_h4_gf5()),
    ]
}

pub fn hopf_by_name(name: &str) -> Option<Hopf> {
    shipped_fixtures()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, h)| h)
}

/// Fixture Hopf algebras used by the mutation robustness battery.
pub fn mutation_fixtures() -> Vec<(&'static str, Hopf)> {
    vec![("gf2_c2", gf2_c2()), ("gf3_c2", gf3_c2())]
}

pub fn arc_hopf(h: HopfAlgebra) -> Hopf {
    Arc::new(h)
}

/// The 2-dimensional object over GF(2)[C2] with action `g -> [[1,1],[0,1]]`
/// and trivial coaction: a valid object of either kind (all coactions in
/// sight are trivial), indecomposable with the non-split subobject
/// `span{(1,0)}`.
pub fn nonsplit_witness_gf2(kind: crate::compat::ObjectKind) -> crate::compat::Object {
    let h = gf2_c2();
    let f = h.field();
    let g = crate::linalg::Matrix::from_rows(
        f,
        vec![
            crate::linalg::scalars_from_i64(f, &[1, 1]),
            crate::linalg::scalars_from_i64(f, &[0, 1]),
        ],
    );
    let module = crate::rep::ModuleStructure {
        hopf: h.clone(),
        dim: 2,
        action: vec![crate::linalg::Matrix::identity(f, 2), g],
    };
    let comodule = crate::rep::trivial_comodule(&h, 2);
    crate::compat::Object::new(kind, module, comodule).expect("the witness satisfies both laws")
}

/// Deterministic object battery for one fixture: trivial, all 1-dimensional
/// objects, free objects and small tensor/sum combinations, capped by
/// dimension. Used by the verification batteries.
pub fn standard_objects(
    h: &Hopf,
    kind: crate::compat::ObjectKind,
    max_dim: usize,
) -> Result<Vec<(String, crate::compat::Object)>> {
    use crate::compat::{direct_sum, free, onedim, tensor, trivial};
    use crate::rep::{regular_comodule, trivial_comodule};
    let n = h.dim();
    let mut out = Vec::new();
    out.push(("trivial(1)".to_string(), trivial(h, 1, kind)));
    let (onedims, _) = crate::decomp::onedim_census(h, kind)?;
    let built: Vec<crate::compat::Object> = onedims
        .iter()
        .map(|(chi, t)| onedim(h, chi, t, kind))
        .collect::<Result<_>>()?;
    for (i, obj) in built.iter().enumerate() {
        out.push((format!("onedim[{i}]"), obj.clone()));
    }
    if built.len() >= 2 {
        out.push((
            "sum(onedim[0],onedim[1])".to_string(),
            direct_sum(&built[0], &built[1])?,
        ));
    }
    if n <= max_dim {
        let fk = free(&trivial_comodule(h, 1), kind)?;
        if let Some(od) = built.first() {
            out.push(("tensor(onedim[0],free(k))".to_string(), tensor(od, &fk)?));
        }
        if n + 1 <= max_dim {
            out.push((
                "sum(trivial(1),free(k))".to_string(),
                direct_sum(&trivial(h, 1, kind), &fk)?,
            ));
        }
        if n * n <= max_dim {
            out.push(("free(H)".to_string(), free(&regular_comodule(h), kind)?));
            out.push(("tensor(free(k),free(k))".to_string(), tensor(&fk, &fk)?));
        }
        out.push(("free(k)".to_string(), fk));
    }
    out.retain(|(_, obj)| obj.dim() <= max_dim && obj.dim() > 0);
    Ok(out)
}
