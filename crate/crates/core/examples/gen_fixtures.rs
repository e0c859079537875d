//! Regenerates `fixtures/` from the built-in presets.
//!
//! Fault fixtures are found by trying every single-coefficient perturbation of
//! a base object and keeping the one whose failing entries are fewest while
//! still including the target entry.
//!
//! Run with `cargo run --release --example gen_fixtures`.

use std::fs;
use std::path::{Path, PathBuf};

use hopfcross::braiding::{certify_quadruple, cyclic_bicharacter_braiding, BraidingQuadruple, PairingData};
use hopfcross::crossed::{
    canonical_maps, linearize_group_crossed_system, verify_crossed_system, CertifiedSystem, CrossedSystemData, GroupCrossedData,
};
use hopfcross::field::{zeta, Field, Scalar};
use hopfcross::hopf::{cyclic_group_algebra, s3_group_algebra, sweedler_h4, tensor_hopf, verify_hopf, AxiomReport, HopfData};
use hopfcross::io::{self, CrossedDoc, HopfDoc, HopfRef, TemplateDoc};
use hopfcross::linalg::LinMap;
use hopfcross::presets::{
    c2_h4_trivial, corpus, corpus_braidings, gamma_c2_to_h4, h4_c3_quadruple, h4_c3_quadruple_reference, h4_c3_system, h4_c3_template, h4_p, k_c3,
};
use serde_json::json;

fn write(dir: &Path, name: &str, body: &str) {
    fs::write(dir.join(name), body).unwrap_or_else(|e| panic!("{name}: {e}"));
}

fn embed(cols: &[Vec<usize>], dim: usize, labels: &[&str]) -> String {
    let mut m = LinMap::zeros(vec![cols.len()], vec![dim]);
    for (i, support) in cols.iter().enumerate() {
        for &j in support {
            m.set(j, i, Scalar::one());
        }
    }
    io::map_json(&m, Some(labels.iter().map(|s| s.to_string()).collect()))
}

/// Best perturbation: (failure count, description, object).
struct Best<T> {
    target: String,
    found: Option<(usize, String, T, Vec<String>)>,
}

impl<T> Best<T> {
    fn new(target: &str) -> Self {
        Best { target: target.into(), found: None }
    }

    fn offer(&mut self, r: &AxiomReport, what: String, obj: impl FnOnce() -> T) {
        let failed = r.failed_names();
        if !failed.contains(&self.target) {
            return;
        }
        if self.found.as_ref().is_none_or(|(n, ..)| failed.len() < *n) {
            self.found = Some((failed.len(), what, obj(), failed));
        }
    }

    fn take(self) -> (String, T, Vec<String>) {
        let (_, what, obj, failed) = self.found.unwrap_or_else(|| panic!("no perturbation fails {}", self.target));
        (what, obj, failed)
    }
}

fn deltas(field: Field) -> Vec<Scalar> {
    let mut d = vec![Scalar::one(), Scalar::from_int(-1)];
    if let Some(z) = field.generator() {
        d.push(z.clone());
        d.push(-&z);
    }
    d
}

fn hopf_fault(target: &str, bases: &[HopfData]) -> (String, HopfDoc, Vec<String>) {
    let mut best = Best::new(target);
    for h in bases {
        let doc = HopfDoc::from_hopf(h);
        let d = h.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for delta in deltas(h.field) {
                        let mut doc = doc.clone();
                        let pos = doc.comult.iter().position(|e| (e.0, e.1, e.2) == (i, j, k));
                        let old = pos.map(|p| io_scalar(&doc.comult[p].3, h.field)).unwrap_or_else(Scalar::zero);
                        let new = (&old + &delta).to_string();
                        match pos {
                            Some(p) => doc.comult[p].3 = new,
                            None => doc.comult.push((i, j, k, new)),
                        }
                        let Ok(bad) = doc.to_hopf(None) else { continue };
                        let r = verify_hopf(&bad);
                        best.offer(&r, format!("{}: comult ({i},{j},{k}) += {delta}", h.name), || doc.clone());
                    }
                }
            }
        }
    }
    best.take()
}

fn io_scalar(text: &str, field: Field) -> Scalar {
    field.parse(text).expect("own output")
}

fn system_fault(target: &str, bases: &[CrossedSystemData]) -> (String, CrossedSystemData, Vec<String>) {
    let mut best = Best::new(target);
    for s in bases {
        let f = s.a.field;
        for which in ["action", "cocycle"] {
            let map = if which == "action" { &s.act } else { &s.cocycle };
            for r in 0..map.rows() {
                for c in 0..map.cols() {
                    for delta in deltas(f) {
                        let mut bad = s.clone();
                        let m = if which == "action" { &mut bad.act } else { &mut bad.cocycle };
                        let v = m.get(r, c) + &delta;
                        m.set(r, c, v);
                        let Ok(bad) = CrossedSystemData::new(bad.a.clone(), bad.h.clone(), bad.act, bad.cocycle) else { continue };
                        let rep = verify_crossed_system(&bad);
                        best.offer(&rep, format!("{}#{}: {which} ({r},{c}) += {delta}", s.a.name, s.h.name), || bad);
                    }
                }
            }
        }
    }
    best.take()
}

fn quad_fault(target: &str, bases: &[(&str, CertifiedSystem, BraidingQuadruple)]) -> (String, &'static str, BraidingQuadruple, Vec<String>) {
    let mut best: Best<(usize, BraidingQuadruple)> = Best::new(target);
    for (bi, (name, s, q)) in bases.iter().enumerate() {
        best.offer(&certify_quadruple(s, q), format!("{name}: unperturbed"), || (bi, q.clone()));
        let f = Field::cyclotomic(3);
        for which in 0..4 {
            let get = |q: &BraidingQuadruple| -> PairingData {
                match which {
                    0 => q.p.clone(),
                    1 => q.tau.clone(),
                    2 => q.u.clone(),
                    _ => q.v.clone(),
                }
            };
            let base = get(q);
            for i in 0..base.left_dim {
                for j in 0..base.right_dim {
                    for delta in deltas(f) {
                        let mut pd = base.clone();
                        pd.set(i, j, pd.get(i, j) + &delta);
                        let mut bad = q.clone();
                        match which {
                            0 => bad.p = pd,
                            1 => bad.tau = pd,
                            2 => bad.u = pd,
                            _ => bad.v = pd,
                        }
                        let rep = certify_quadruple(s, &bad);
                        let part = ["p", "tau", "u", "v"][which];
                        best.offer(&rep, format!("{name}: {part} ({i},{j}) += {delta}"), || (bi, bad));
                    }
                }
            }
        }
    }
    let (what, (bi, q), failed) = best.take();
    let file: &'static str = match bases[bi].0 {
        "h4_c3" => "h4_c3_system.json",
        "c2_h4" => "c2_h4_trivial_system.json",
        "klein_bilinear" => "klein_bilinear_system.json",
        "trivial" => "trivial_system.json",
        "smash" => "smash_system.json",
        "group_c2_c2" => "group_c2_c2_system.json",
        _ => "coboundary_system.json",
    };
    (what, file, q, failed)
}

/// A = k[C2], H = k[C2 × C2], trivial action, bilinear cocycle f(x, y) = t^{x1 y2}.
fn klein_bilinear(field: Field) -> CertifiedSystem {
    let h: Vec<[usize; 2]> = vec![[0, 0], [1, 0], [0, 1], [1, 1]];
    let idx = |x: [usize; 2]| h.iter().position(|y| *y == x).unwrap();
    let data = GroupCrossedData {
        a_table: vec![vec![0, 1], vec![1, 0]],
        a_labels: vec!["1".into(), "t".into()],
        h_table: (0..4).map(|i| (0..4).map(|j| idx([(h[i][0] + h[j][0]) % 2, (h[i][1] + h[j][1]) % 2])).collect()).collect(),
        h_labels: vec!["1".into(), "a".into(), "b".into(), "ab".into()],
        cocycle: (0..4).map(|i| (0..4).map(|j| h[i][0] * h[j][1]).collect()).collect(),
        action: vec![vec![0, 1]; 4],
    };
    linearize_group_crossed_system(&data, field).unwrap().0
}

fn main() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let faults = dir.join("faults");
    fs::create_dir_all(&faults).unwrap();
    let q = Field::Rational;
    let z3 = Field::cyclotomic(3);

    // Hopf algebras
    let h4 = sweedler_h4(q).unwrap();
    write(&dir, "h4.json", &io::hopf_json(&h4));
    let mut corrupt = HopfDoc::from_hopf(&h4);
    // x·g = −gx becomes +gx
    let xg = corrupt.mult.iter_mut().find(|e| (e.0, e.1) == (2, 1)).unwrap();
    xg.3 = "1".into();
    corrupt.name = "H4 corrupted".into();
    write(&dir, "h4_corrupt.json", &io::to_json(&corrupt));
    let kc3 = k_c3(q);
    write(&dir, "k_c3.json", &io::hopf_json(&kc3));
    write(&dir, "k_c2.json", &io::hopf_json(&cyclic_group_algebra(2, "s", q)));
    write(&dir, "tensor_h4_c3.json", &io::hopf_json(&tensor_hopf(&h4, &kc3).unwrap()));

    // crossed systems
    let mut doc = CrossedDoc::from_system(&h4_c3_system(q));
    doc.a = HopfRef::Path("h4.json".into());
    doc.h = HopfRef::Path("k_c3.json".into());
    write(&dir, "h4_c3_system.json", &io::to_json(&doc));
    let systems = corpus(q);
    for (name, s) in &systems {
        if *name != "h4_c3" {
            write(&dir, &format!("{name}_system.json"), &io::system_json(s.data()));
        }
    }
    write(&dir, "klein_bilinear_system.json", &io::system_json(klein_bilinear(q).data()));
    write(&dir, "c2_h4_trivial_system.json", &io::system_json(&c2_h4_trivial(q)));
    write(&dir, "gamma_c2_h4.json", &io::map_json(&gamma_c2_to_h4(), None));
    let h4c3 = CertifiedSystem::certify(h4_c3_system(q)).unwrap();
    write(&dir, "h4_c3_product.json", &io::hopf_json(h4c3.product()));
    let m = canonical_maps(&h4c3);
    write(&dir, "h4_c3_embed_a.json", &io::map_json(&m.i_a, Some(h4.labels.clone())));
    write(&dir, "h4_c3_embed_h.json", &io::map_json(&m.i_h, Some(kc3.labels.clone())));

    // factorization inputs
    write(&dir, "k_c4.json", &io::hopf_json(&cyclic_group_algebra(4, "s", q)));
    write(&dir, "c4_embed_a.json", &embed(&[vec![0], vec![2]], 4, &["1", "t"]));
    write(&dir, "c4_embed_h.json", &embed(&[vec![0], vec![1]], 4, &["1", "s"]));
    write(&dir, "s3.json", &io::hopf_json(&s3_group_algebra(q)));
    write(&dir, "s3_embed_a.json", &embed(&[vec![0], vec![1]], 6, &["e", "(12)"]));
    write(&dir, "s3_embed_h.json", &embed(&[vec![0], vec![2], vec![3]], 6, &["e", "(13)", "(23)"]));

    // braidings
    let (one, two, z) = (Scalar::one(), Scalar::from_int(2), zeta(3, 1));
    write(&dir, "quad_alpha1.json", &io::quadruple_json(&h4_c3_quadruple(&one, &z), Some(z3)));
    write(&dir, "quad_alpha2.json", &io::quadruple_json(&h4_c3_quadruple(&two, &z), Some(z3)));
    write(&dir, "quad_gamma1.json", &io::quadruple_json(&h4_c3_quadruple(&one, &one), None));
    write(&dir, "quad_reference.json", &io::quadruple_json(&h4_c3_quadruple_reference(&one, &z), Some(z3)));
    let cands = vec![vec![one.clone(), two.clone()], vec![one.clone(), z.clone(), zeta(3, 2)]];
    write(&dir, "template_h4_c3.json", &io::to_json(&TemplateDoc::from_template(&h4_c3_template(), &cands, Some(z3))));

    // fault fixtures
    let mut manifest = vec![];
    let hopf_bases = [sweedler_h4(z3).unwrap(), k_c3(z3), cyclic_group_algebra(4, "s", z3)];
    let (what, doc, failed) = hopf_fault("coassociativity", &hopf_bases);
    write(&faults, "coassociativity.json", &io::to_json(&doc));
    println!("coassociativity <- {what}: {failed:?}");
    manifest.push(json!({"target": "coassociativity", "kind": "hopf", "file": "coassociativity.json"}));

    let sys_bases: Vec<CrossedSystemData> = corpus(z3).into_iter().map(|(_, s)| s.into_data()).collect();
    // the co-conditions hold automatically for cocommutative H, so those faults need H = H4
    let h4_z = sweedler_h4(z3).unwrap();
    let non_cocomm: Vec<CrossedSystemData> =
        [cyclic_group_algebra(2, "s", z3), k_c3(z3)].into_iter().map(|a| CrossedSystemData::trivial(a, h4_z.clone()).unwrap()).collect();
    for target in ["twisted_module", "cocycle", "action_cosymmetric", "cocycle_cosymmetric"] {
        let bases = if target.ends_with("cosymmetric") { &non_cocomm } else { &sys_bases };
        let (what, s, failed) = system_fault(target, bases);
        let file = format!("{target}.json");
        write(&faults, &file, &io::system_json(&s));
        println!("{target} <- {what}: {failed:?}");
        manifest.push(json!({"target": target, "kind": "crossed", "file": file}));
    }

    let mut quad_bases = corpus_braidings(z3);
    // SBR5 holds automatically for commutative H, so add a base with H = H4
    let c2h4 = CertifiedSystem::certify(c2_h4_trivial(z3)).unwrap();
    let q = BraidingQuadruple {
        p: cyclic_bicharacter_braiding(2, &Scalar::from_int(-1)).unwrap(),
        tau: h4_p(&one),
        u: PairingData::counit(&c2h4.a, &c2h4.h),
        v: PairingData::counit(&c2h4.h, &c2h4.a),
    };
    assert!(certify_quadruple(&c2h4, &q).all_passed());
    quad_bases.push(("c2_h4", c2h4, q));
    // a nonsymmetric cocycle on an abelian H admits no τ satisfying compat3
    let klein = klein_bilinear(z3);
    let q = BraidingQuadruple::counit(&klein);
    quad_bases.push(("klein_bilinear", klein, q));
    let targets = ["RS3", "LS1", "SBR5", "compat1", "compat2", "compat3", "compat4", "compat5", "compat6", "compat7"];
    for target in targets {
        let (what, system, q, failed) = quad_fault(target, &quad_bases);
        let file = format!("{}.json", target.to_lowercase());
        write(&faults, &file, &io::quadruple_json(&q, Some(z3)));
        println!("{target} <- {what}: {failed:?}");
        manifest.push(json!({"target": target, "kind": "braid", "system": system, "file": file}));
    }
    write(&faults, "manifest.json", &io::to_json(&manifest));
}
