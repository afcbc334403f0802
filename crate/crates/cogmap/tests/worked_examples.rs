//! Golden runs over the bundled fixtures. Expected vectors are either the
//! published traces or, where noted, recomputed by the independent oracles
//! in `common`.

mod common;

use cogmap::crisp::{fcm_average, fcm_combine, fcm_infer, frm_combine, frm_infer};
use cogmap::dispatch::{infer, Engine, RunRequest, Seed};
use cogmap::fixtures::{fixture, fixture_document, validate_fixture_catalog, FIXTURES};
use cogmap::fuzzy::{fuzzy_infer, maxmin_backward, maxmin_forward, FuzzyPattern, Mode};
use cogmap::neutro::parse_rational;
use cogmap::neutrosophic::{ncm_infer, ncm_propagate, nrm_infer};
use cogmap::survey::enumerate_hidden_patterns;
use cogmap::{
    load_model, save_model, Classification, Matrix, ModelKind, NeutroValue, Rational, Side,
    TriState,
};

fn rats(text: &str) -> Vec<Rational> {
    text.split_whitespace()
        .map(|s| parse_rational(s).unwrap())
        .collect()
}

fn tris(text: &str) -> Vec<TriState> {
    text.split_whitespace()
        .map(|s| s.parse().unwrap())
        .collect()
}

fn bits(text: &str) -> Vec<u8> {
    text.split_whitespace()
        .map(|s| s.parse().unwrap())
        .collect()
}

fn unit(i: usize, n: usize) -> Vec<u8> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn unit_r(i: usize, n: usize) -> Vec<Rational> {
    let mut v = vec![Rational::from_integer(0.into()); n];
    v[i] = Rational::from_integer(1.into());
    v
}

fn signed(name: &str) -> Matrix<i64> {
    fixture(name).unwrap().signed_matrix().unwrap()
}

fn real(name: &str) -> Matrix<Rational> {
    fixture(name).unwrap().real_matrix().unwrap()
}

fn tenths_matrix(m: &Matrix<Rational>) -> Vec<Vec<u32>> {
    m.to_rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    let t = x * Rational::from_integer(10.into());
                    assert!(t.is_integer());
                    u32::try_from(t.to_integer()).unwrap()
                })
                .collect()
        })
        .collect()
}

fn to_tenths(v: &[Rational]) -> Vec<u32> {
    tenths_matrix(&Matrix::from_rows(vec![v.to_vec()]).unwrap()).remove(0)
}

fn monopartite(p: FuzzyPattern<Rational>) -> cogmap::HiddenPattern<Vec<Rational>> {
    match p {
        FuzzyPattern::Monopartite(p) => p,
        FuzzyPattern::Bipartite(_) => panic!("expected a monopartite run"),
    }
}

fn bipartite<T>(p: FuzzyPattern<T>) -> cogmap::HiddenPattern<cogmap::Pair<T>> {
    match p {
        FuzzyPattern::Bipartite(p) => p,
        FuzzyPattern::Monopartite(_) => panic!("expected a bipartite run"),
    }
}

#[test]
fn catalog_loads_with_expected_shapes() {
    let report = validate_fixture_catalog().unwrap();
    assert_eq!(report.len(), FIXTURES.len());
    let shape = |name: &str| report.iter().find(|e| e.name == name).unwrap().shape;
    assert_eq!(shape("socio-economic"), (5, 5));
    assert_eq!(shape("teacher-student"), (5, 3));
    assert_eq!(shape("teacher-student-nrm"), (5, 3));
    assert_eq!(shape("child-labor"), (7, 7));
    assert_eq!(shape("child-labor-ncm"), (7, 7));
    assert_eq!(shape("teachers-frm-m1"), (8, 13));
    assert_eq!(shape("teachers-frm-m2"), (8, 13));
    assert_eq!(shape("educationalists-fuzzy"), (9, 14));
    assert_eq!(shape("educationalists-fuzzy-neutro"), (9, 14));
    let nine = report
        .iter()
        .filter(|e| e.name.starts_with("public-") && e.shape == (9, 9))
        .count();
    assert_eq!(nine, 13);
    let kind = |name: &str| report.iter().find(|e| e.name == name).unwrap().kind;
    assert_eq!(kind("child-labor-ncm"), ModelKind::Ncm);
    assert_eq!(kind("public-combined-N"), ModelKind::Fuzzy);
}

#[test]
fn catalog_round_trips_byte_for_byte() {
    for (name, doc) in FIXTURES {
        let model = load_model(doc).unwrap();
        assert_eq!(save_model(&model), *doc, "{name}");
        assert_eq!(load_model(&save_model(&model)).unwrap(), model, "{name}");
    }
}

#[test]
fn socio_economic_limit_cycle() {
    let p = fcm_infer(&signed("socio-economic"), &bits("1 0 0 0 0")).unwrap();
    assert_eq!(p.classification, Classification::LimitCycle);
    assert_eq!(p.period, 4);
    let expected = [
        bits("1 0 0 0 1"),
        bits("1 0 0 1 1"),
        bits("1 1 0 1 1"),
        bits("1 1 0 0 1"),
    ];
    assert_eq!(p.states, expected);
    assert_eq!(p.raw[0], vec![0, 0, -1, 0, 1]);
}

#[test]
fn teacher_student_fixed_binary_pair() {
    let p = frm_infer(&signed("teacher-student"), &bits("1 0 0 0 0"), Side::Domain).unwrap();
    let pair = p.fixed_point().unwrap();
    assert_eq!(pair.domain, bits("1 0 0 1 0"));
    assert_eq!(pair.range, bits("1 0 0"));
    assert_eq!(
        signed("teacher-student").transpose().row(0),
        &[1, 0, 0, 1, 0]
    );
}

#[test]
fn child_labor_crisp_fixed_point() {
    let p = fcm_infer(&signed("child-labor"), &unit(0, 7)).unwrap();
    assert_eq!(p.fixed_point(), Some(&bits("1 0 0 1 1 1 0")));
    // The printed second raw vector ends in 0; the matrix gives −1 (the
    // thresholded state is the same either way).
    assert_eq!(p.raw[1], vec![2, 0, 0, 1, 1, 1, -1]);
}

#[test]
fn child_labor_ncm_fixed_point() {
    let model = fixture("child-labor-ncm").unwrap();
    let n = model.values();
    let p = ncm_infer(n, &tris("1 0 0 0 0 0 0")).unwrap();
    assert_eq!(p.fixed_point(), Some(&tris("1 I 0 1 1 0 0")));
    let raw = ncm_propagate(&tris("1 I 0 1 1 0 0"), n).unwrap();
    let rendered: Vec<String> = raw.iter().map(ToString::to_string).collect();
    assert_eq!(rendered, ["2+I", "I", "-1+I", "1", "1", "0", "0"]);
    assert!(p.raw.iter().flatten().any(|v| v.to_string() == "2+I"));
    assert!(p.raw.iter().flatten().any(|v| v.to_string() == "-1+I"));
}

#[test]
fn teacher_student_nrm() {
    let model = fixture("teacher-student-nrm").unwrap();
    let n = model.values();
    let first = ncm_propagate(&tris("1 0 0 0 0"), n).unwrap();
    let rendered: Vec<String> = first.iter().map(ToString::to_string).collect();
    assert_eq!(rendered, ["1", "I", "I"]);
    let p = nrm_infer(n, &tris("1 0 0 0 0"), Side::Domain).unwrap();
    let pair = p.fixed_point().unwrap();
    assert_eq!(pair.range, tris("1 I I"));
    assert_eq!(pair.domain, tris("1 I I 1 I"));
    assert!(n
        .transpose()
        .iter_rows()
        .all(|col| col[4] == NeutroValue::i()));
}

#[test]
fn teachers_frm_m1_from_both_sides() {
    let e = signed("teachers-frm-m1");
    let range = bits("1 1 0 0 1 1 1 1 1 1 0 1 1");
    for (seed, side) in [(unit(3, 8), Side::Domain), (unit(6, 13), Side::Range)] {
        let p = frm_infer(&e, &seed, side).unwrap();
        let pair = p.fixed_point().unwrap();
        assert_eq!(pair.domain, vec![1; 8], "{side}");
        assert_eq!(pair.range, range, "{side}");
    }
}

#[test]
fn teachers_frm_runs_match_brute_force() {
    for name in ["teachers-frm-m1", "teachers-frm-m2"] {
        let e = signed(name);
        let rows = e.to_rows();
        for d in 0..8 {
            let clamp = [d];
            let oracle = common::recurring((unit(d, 8), vec![0u8; 13]), |(a, _)| {
                let b: Vec<u8> = (0..13)
                    .map(|j| {
                        u8::from((0..8).map(|i| i64::from(a[i]) * rows[i][j]).sum::<i64>() > 0)
                    })
                    .collect();
                let mut back: Vec<u8> = (0..8)
                    .map(|i| {
                        u8::from((0..13).map(|j| rows[i][j] * i64::from(b[j])).sum::<i64>() > 0)
                    })
                    .collect();
                for &c in &clamp {
                    back[c] = 1;
                }
                (back, b)
            });
            let p = frm_infer(&e, &unit(d, 8), Side::Domain).unwrap();
            let got: Vec<(Vec<u8>, Vec<u8>)> = p
                .states
                .iter()
                .map(|s| (s.domain.clone(), s.range.clone()))
                .collect();
            assert_eq!(got, oracle, "{name} D{}", d + 1);
        }
    }
}

#[test]
fn teachers_frm_combine_is_entrywise_sum() {
    let (a, b) = (signed("teachers-frm-m1"), signed("teachers-frm-m2"));
    let sum = frm_combine(&[a.clone(), b.clone()]).unwrap();
    assert_eq!(sum.shape(), (8, 13));
    for i in 0..8 {
        for j in 0..13 {
            assert_eq!(sum[(i, j)], a[(i, j)] + b[(i, j)]);
        }
    }
}

#[test]
fn educationalists_first_images() {
    let m = real("educationalists-fuzzy");
    let b = unit_r(0, 9)
        .into_iter()
        .zip(unit_r(5, 9))
        .map(|(x, y)| x.max(y))
        .collect::<Vec<_>>();
    let a1 = maxmin_forward(&b, &m).unwrap();
    assert_eq!(
        a1,
        rats("0.8 0.8 0.9 0.6 0.4 0.6 0.9 0.8 0 0 0 0.6 0.8 0.8")
    );
    // Published as (0.9, 0.8, 0.8, 0.8, 0.8, 0.8, 0.8, 0.8, 0.6); the sixth
    // row reaches 0.9 through column 7, where both A₁ and the row hold 0.9.
    assert_eq!(
        maxmin_backward(&m, &a1).unwrap(),
        rats("0.9 0.8 0.8 0.8 0.8 0.9 0.8 0.8 0.6")
    );
    let mut ones = vec![Rational::from_integer(0.into()); 14];
    for k in [0, 2, 8, 13] {
        ones[k] = Rational::from_integer(1.into());
    }
    assert_eq!(
        maxmin_backward(&m, &ones).unwrap(),
        rats("0.9 0.9 0.8 0.8 0.9 0.8 0.7 0.7 0.6")
    );
}

#[test]
fn educationalists_fixed_point_matches_oracle() {
    let m = real("educationalists-fuzzy");
    let seed = rats("1 0 0 0 0 1 0 0 0");
    let p = bipartite(fuzzy_infer(&m, &seed, Mode::Bipartite(Side::Domain)).unwrap());
    assert_eq!(p.classification, Classification::FixedPoint);
    let t = tenths_matrix(&m);
    let oracle = common::recurring((to_tenths(&seed), vec![0u32; 14]), |(b, _)| {
        let a = common::maxmin_step(&t, b);
        (common::maxmin_back(&t, &a), a)
    });
    assert_eq!(oracle.len(), 1);
    let fixed = p.fixed_point().unwrap();
    assert_eq!(to_tenths(&fixed.domain), oracle[0].0);
    assert_eq!(to_tenths(&fixed.range), oracle[0].1);
    // The published B* lists 0.8 for the sixth component; row 6 meets the
    // range state in column 7 at 0.9, so the exact value is 0.9.
    assert_eq!(fixed.domain, rats("0.9 0.8 0.8 0.8 0.8 0.9 0.8 0.8 0.8"));
}

#[test]
fn educationalists_neutrosophic_variant_terminates() {
    let model = fixture("educationalists-fuzzy-neutro").unwrap();
    let seed: Vec<NeutroValue> = "1 0 0 0 0 1 0 0 0"
        .split(' ')
        .map(|s| s.parse().unwrap())
        .collect();
    let p = bipartite(fuzzy_infer(model.values(), &seed, Mode::Bipartite(Side::Domain)).unwrap());
    assert!(p.period >= 1);
    let last = p.trace.last().unwrap();
    assert!(p.states.contains(last));
}

#[test]
fn public_experts_combine_and_average() {
    let experts: Vec<Matrix<i64>> = (1..=10)
        .map(|k| signed(&format!("public-expert-{k}")))
        .collect();
    let sum = fcm_combine(&experts).unwrap();
    assert_eq!(sum, signed("public-combined"));
    assert_eq!(sum[(0, 1)], 10);
    let avg = fcm_average(&experts).unwrap();
    assert_eq!(avg, real("public-combined-N"));
    assert_eq!(avg[(0, 1)], Rational::from_integer(1.into()));
    assert_eq!(avg[(5, 8)], parse_rational("0.6").unwrap());
}

#[test]
fn public_expert_two_reaches_all_ones() {
    let p = fcm_infer(&signed("public-expert-2"), &unit(5, 9)).unwrap();
    assert_eq!(p.fixed_point(), Some(&vec![1; 9]));
}

#[test]
fn public_opinion_max_min_runs() {
    let n = real("public-combined-N");
    let x1 = maxmin_forward(&unit_r(5, 9), &n).unwrap();
    assert_eq!(x1, rats("0.2 0.3 0.1 0.1 0.2 0 0.5 0.2 0.6"));
    let t = tenths_matrix(&n);
    // (name, 0-based seed node, expected period)
    let runs = [
        ("X", 5, 2),
        ("Y", 0, 2),
        ("Z", 3, 1),
        ("T", 1, 2),
        ("V", 8, 2),
        ("W", 6, 2),
    ];
    for (name, node, period) in runs {
        let p = monopartite(fuzzy_infer(&n, &unit_r(node, 9), Mode::Monopartite).unwrap());
        let oracle = common::recurring(to_tenths(&unit_r(node, 9)), |x| common::maxmin_step(&t, x));
        let got: Vec<Vec<u32>> = p.states.iter().map(|s| to_tenths(s)).collect();
        assert_eq!(got, oracle, "{name}");
        assert_eq!(p.period, period, "{name}");
    }
    let z = monopartite(fuzzy_infer(&n, &unit_r(3, 9), Mode::Monopartite).unwrap());
    assert_eq!(
        z.fixed_point(),
        Some(&rats("0.5 0.5 0.4 0.5 0.5 0.6 0.6 0.5 0.6"))
    );
}

#[test]
fn public_ncm_has_two_indeterminate_nodes() {
    let model = fixture("public-ncm").unwrap();
    let p = ncm_infer(model.values(), &tris("1 0 0 0 0 0 0 0 0")).unwrap();
    assert_eq!(p.fixed_point(), Some(&tris("1 1 1 1 1 I 1 1 I")));
}

#[test]
fn enumeration_tables() {
    let socio = fixture("socio-economic").unwrap();
    let rows = enumerate_hidden_patterns(&socio, Engine::Fcm).unwrap();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[0].seed, "C1");
    assert_eq!(rows[0].period, 4);

    let ncm = fixture("child-labor-ncm").unwrap();
    let rows = enumerate_hidden_patterns(&ncm, Engine::Ncm).unwrap();
    assert_eq!(rows[0].classification, Classification::FixedPoint);
    assert_eq!(
        serde_json_cells(&rows[0].recurring[0]),
        ["1", "I", "0", "1", "1", "0", "0"]
    );

    let frm = fixture("teacher-student").unwrap();
    let rows = enumerate_hidden_patterns(&frm, Engine::Frm).unwrap();
    assert_eq!(rows.len(), 8);
    assert_eq!(rows[5].seed, "R1");
    assert_eq!(rows[5].side, Some(Side::Range));

    let n = fixture("public-combined-N").unwrap();
    let rows = enumerate_hidden_patterns(&n, Engine::Fuzzy).unwrap();
    let class = |label: &str| rows.iter().find(|r| r.seed == label).unwrap().period;
    assert_eq!(class("P4"), 1);
    assert_eq!(class("P2"), 2);
}

fn serde_json_cells(view: &cogmap::render::StateView) -> Vec<String> {
    match view {
        cogmap::render::StateView::Vector(cells) => cells.iter().map(ToString::to_string).collect(),
        cogmap::render::StateView::Pair { .. } => panic!("expected a vector"),
    }
}

#[test]
fn dispatch_rejects_mismatched_engines() {
    let socio = fixture("socio-economic").unwrap();
    let request = RunRequest::new(Seed::Crisp(unit(0, 5)));
    assert!(infer(&socio, "socio-economic", Engine::Ncm, &request).is_err());
    assert!(infer(&socio, "socio-economic", Engine::Fcm, &request).is_ok());
    assert!(fixture_document("teacher-student").is_some());
}
