use super::*;
use crate::lrc::singleton_like_bound;

fn coords(v: &[usize]) -> Vec<usize> {
    v.iter().map(|c| c - 1).collect()
}

#[test]
fn catalog_lookups() {
    let c4 = lookup("C4").unwrap();
    assert_eq!(c4.label, "4");
    assert_eq!(c4.status, Status::Constructed);
    assert!(c4.formulas.contains("n=l(r+2)") && c4.range.contains("1 ≤ r ≤ 3"));

    let open = lookup_label("33d=10");
    assert_eq!(open.len(), 2);
    assert!(open.iter().any(|f| f.status == Status::Open && f.range == "4 ≤ l ≤ 9"));

    // (2,4) with s = 2, l − s = 2
    let p = LrcParams { n: 20, k: 5, d: 10, r: 2, delta: 4 };
    assert_eq!(singleton_like_bound(p.n, p.k, p.r, p.delta), 10);
    let why = exclusions_for(&p);
    assert_eq!(why.len(), 1);
    assert_eq!(why[0].status, Status::Nonexistent);
    assert!(why[0].reason.unwrap().contains("lines in PG(2,F4) must intersect"));

    assert!(matches!(lookup("C99"), Err(Error::UnknownFamily(_))));
}

#[test]
fn every_formula_member_meets_the_bound() {
    for f in catalog() {
        for (p, _) in f.members(128) {
            assert_eq!(
                singleton_like_bound(p.n, p.k, p.r, p.delta),
                p.d as i64,
                "{} {p}",
                f.id
            );
            assert!(exclusions_for(&p).is_empty(), "{} {p} is excluded", f.id);
        }
    }
}

#[test]
fn builds_match_formula_lengths_and_dimensions() {
    for f in catalog().iter().filter(|f| f.status == Status::Constructed) {
        for (p, b) in f.members(40) {
            for &v in f.variants {
                let built = match build(f.id, &b.clone().variant(v)) {
                    Ok(b) => b,
                    // printed puncture sets that lose locality differ from the default
                    Err(Error::LocalityFailure { .. }) if v == Variant::Printed => {
                        let d = b.d.unwrap();
                        assert_ne!(chain_step(f.id, d, v).unwrap(), chain_step(f.id, d, Variant::A).unwrap());
                        continue;
                    }
                    Err(e) => panic!("{} {p}: {e}", f.id),
                };
                assert_eq!((built.code.n(), built.code.k()), (p.n, p.k), "{} {p} {v:?}", f.id);
                assert_eq!(built.expected.d, p.d);
                assert_eq!((built.r, built.delta), (p.r, p.delta));
            }
        }
    }
}

#[test]
fn c1_variant_b_overlapping_groups() {
    let b = build("C1", &BuildParams::with_l(2).variant(Variant::B)).unwrap();
    assert_eq!(b.code.params().unwrap(), CodeParams { n: 9, k: 5, d: 3 });
    assert_eq!(b.profile.groups[0].support, vec![0, 1, 2, 3, 4]);
    assert_eq!(b.profile.groups[1].support, vec![4, 5, 6, 7, 8]);
    assert_eq!(b.profile.parity.rows(), 4);
}

#[test]
fn small_examples() {
    let b = build("C12", &BuildParams::with_k_delta(2, 5)).unwrap();
    assert_eq!(b.code.params().unwrap(), CodeParams { n: 10, k: 2, d: 5 });
    assert_eq!((b.r, b.delta), (1, 5));

    let b = build("C16", &BuildParams::with_d(11)).unwrap();
    assert_eq!(b.code.params().unwrap(), CodeParams { n: 15, k: 3, d: 11 });

    let b = build("C17G", &BuildParams::with_l(4)).unwrap();
    assert_eq!((b.code.n(), b.code.k()), (24, 7));
    assert_eq!((b.r, b.delta, b.profile.l()), (3, 4, 4));
}

#[test]
fn range_and_catalog_errors() {
    let bad = [
        ("C1", BuildParams::with_l(1)),
        ("C14", BuildParams::with_k_delta(4, 3)),
        ("C12", BuildParams::with_k_delta(2, 4)),
        ("C17G", BuildParams::with_l(18)),
        ("C16", BuildParams::with_d(4)),
        ("C6", BuildParams::with_l(2).variant(Variant::B)),
        ("C4", BuildParams::with_l(2).r(4)),
        ("OPEN-34l=4", BuildParams::with_l(18)),
    ];
    for (id, p) in bad {
        assert!(matches!(build(id, &p), Err(Error::Range(_))), "{id} {p:?}");
    }
    let e = build("C1", &BuildParams::with_l(1)).unwrap_err().to_string();
    assert!(e.contains("l ≥ 2"), "{e}");
    assert!(matches!(build("nope", &BuildParams::with_l(2)), Err(Error::UnknownFamily(_))));
}

fn parity(id: &str, p: BuildParams) -> Mat4 {
    build(id, &p).unwrap().profile.parity
}

#[test]
fn puncture_relationships() {
    for l in 2..=4 {
        for v in [Variant::A, Variant::B] {
            let p = BuildParams::with_l(l).variant(v);
            let c1 = parity("C1", p.clone());
            let c5 = parity("C5", p.clone());

            // one column per group of C1: position 4 of the first group,
            // position 4 of every later 5-column group
            let mut cut = vec![3, 7];
            cut.extend((0..l - 2).map(|g| 9 + 5 * g + 3));
            assert_eq!(c1.delete_columns(&cut), parity("C2", p.clone()));
            let c1_code = LinearCode::from_parity(c1.clone()).unwrap();
            let c2_code = LinearCode::from_parity(parity("C2", p.clone())).unwrap();
            assert_eq!(c1_code.shorten(&cut).unwrap().generator().row_basis(), c2_code.generator().row_basis());

            assert_eq!(c1.delete_columns(&[0]), parity("C3", p.clone()));
            assert_eq!(c5.delete_columns(&[0]), parity("C10", p.clone()));

            // C8: position 5 of every 6-column group of C5
            let mut cut = vec![4, 9];
            cut.extend((0..l - 2).map(|g| 11 + 6 * g + 4));
            assert_eq!(c5.delete_columns(&cut), parity("C8", p.clone()));
        }
        let c6 = parity("C6", BuildParams::with_l(l));
        let cut: Vec<usize> = (0..l).map(|g| 5 * g + 4).collect();
        assert_eq!(c6.delete_columns(&cut), parity("C7", BuildParams::with_l(l)));

        for (id, width) in [("C4", 5), ("C11", 6)] {
            let full = parity(id, BuildParams::with_l(l).r(3));
            for drop in 1..=2 {
                let cut: Vec<usize> = (0..l)
                    .flat_map(|g| (width - drop..width).map(move |c| g * width + c))
                    .collect();
                assert_eq!(full.delete_columns(&cut), parity(id, BuildParams::with_l(l).r(3 - drop)));
            }
        }
    }
}

#[test]
fn generator_chain_steps() {
    assert_eq!(chain_step("C16", 11, Variant::A).unwrap(), ChainStep::Puncture(vec![13]));
    assert_eq!(chain_step("C16", 8, Variant::A).unwrap(), ChainStep::Puncture(vec![13, 14, 15, 16]));
    assert_eq!(chain_step("C17", 12, Variant::A).unwrap(), ChainStep::Puncture(vec![2, 3, 4, 5]));
    assert_eq!(chain_step("C18", 5, Variant::A).unwrap(), ChainStep::Puncture((11..=17).collect()));
    assert_eq!(
        chain_step("C19", 6, Variant::Printed).unwrap(),
        ChainStep::Puncture((13..=18).collect())
    );
    let g = chain_generator("C16", 7, Variant::A).unwrap();
    assert_eq!(g.cols(), 11);
    assert_eq!(g.col(0), vec![Gf4::ZERO, Gf4::ONE, Gf4::ZERO]);
    assert_eq!(g.col(1), g16().col(0));
    assert_eq!(
        chain_generator("C17", 11, Variant::A).unwrap(),
        g17().delete_columns(&coords(&[13, 17, 18, 19, 21]))
    );
}

#[test]
fn c17g_table_properties() {
    assert!(verify_c17g_properties(17));
    assert!(verify_c17g_properties(4));
    assert_eq!(c17g_forbidden_combinations().len(), 15);

    let mut table = c17g_table();
    table[0][0] = table[0][1].clone();
    assert!(!verify_c17g_table(&table, 17));

    // a triple inside another's span breaks property (2)
    let mut table = c17g_table();
    table[1] = table[0].clone();
    assert!(!verify_c17g_table(&table, 4));
}

#[test]
fn c17g_global_columns() {
    let h = c17g_parity(4);
    let t = c17g_table();
    assert_eq!(h.rows(), 12 + 5);
    for g in 0..4 {
        for j in 0..3 {
            let col: Vec<Gf4> = (12..17).map(|r| h.get(r, 6 * g + 3 + j)).collect();
            assert_eq!(col, t[g][j]);
        }
        for j in 0..3 {
            assert!((12..17).all(|r| h.get(r, 6 * g + j).is_zero()));
        }
    }
}

#[test]
fn cls_k_from_rank() {
    for (id, l, k) in [("CLS2_1", 4, 5), ("CLS2_1", 5, 7), ("CLS3_1", 5, 5)] {
        let b = build(id, &BuildParams::with_l(l)).unwrap();
        assert_eq!(b.code.k(), b.code.n() - b.profile.parity.rank());
        assert_eq!(b.code.k(), k);
        assert_eq!(singleton_like_bound(b.code.n(), k, 2, 3), b.expected.d as i64);
    }
}

#[test]
fn cls3_1_printed_differs_only_in_two_entries() {
    let a = parity("CLS3_1", BuildParams::with_l(5));
    let p = parity("CLS3_1", BuildParams::with_l(5).variant(Variant::Printed));
    let diff: Vec<(usize, usize)> = (0..a.rows())
        .flat_map(|r| (0..a.cols()).map(move |c| (r, c)))
        .filter(|&(r, c)| a.get(r, c) != p.get(r, c))
        .collect();
    assert_eq!(diff, vec![(14, 10), (14, 11)]);
}

#[test]
fn variant_parse() {
    assert_eq!("b".parse::<Variant>().unwrap(), Variant::B);
    assert_eq!("Printed".parse::<Variant>().unwrap(), Variant::Printed);
    assert!("c".parse::<Variant>().is_err());
}
