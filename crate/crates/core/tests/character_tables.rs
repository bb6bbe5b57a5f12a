use ocgroup::analysis::{class_data, is_rational_group};
use ocgroup::chartab::{class_constants, dixon_character_table, rationality_counts};
use ocgroup::construct::builtin;

fn degrees(name: &str) -> Vec<u64> {
    dixon_character_table(&builtin(name).unwrap()).unwrap().degrees()
}

#[test]
fn known_degree_lists() {
    assert_eq!(degrees("s3"), vec![1, 1, 2]);
    assert_eq!(degrees("q8"), vec![1, 1, 1, 1, 2]);
    assert_eq!(degrees("sym:4"), vec![1, 1, 2, 3, 3]);
    assert_eq!(degrees("a5"), vec![1, 3, 3, 4, 5]);
    assert_eq!(degrees("gl23"), vec![1, 1, 2, 2, 2, 3, 3, 4]);
    assert_eq!(degrees("sl25"), vec![1, 2, 2, 3, 3, 4, 4, 5, 6]);
    assert_eq!(degrees("w"), vec![1, 1, 1, 1, 2, 8]);
}

#[test]
fn trivial_group_has_one_character() {
    let t = dixon_character_table(&builtin("cyc:1").unwrap()).unwrap();
    assert_eq!(t.rows.len(), 1);
    assert!(t.rows[0].values[0].value_eq_int(1));
    let a = class_constants(&builtin("cyc:1").unwrap()).unwrap();
    assert_eq!(a.get(0, 0, 0), 1);
}

#[test]
fn q8_characters_are_rational() {
    let t = dixon_character_table(&builtin("q8").unwrap()).unwrap();
    assert!(t.rows.iter().all(|c| c.is_rational()));
    assert_eq!(rationality_counts(&t), (5, 5));
}

#[test]
fn rationality_count_examples() {
    let c3 = dixon_character_table(&builtin("cyc:3").unwrap()).unwrap();
    assert_eq!(rationality_counts(&c3), (1, 1));
    let s3 = dixon_character_table(&builtin("s3").unwrap()).unwrap();
    assert_eq!(rationality_counts(&s3), (3, 3));
    let a5 = dixon_character_table(&builtin("a5").unwrap()).unwrap();
    let (chars, classes) = rationality_counts(&a5);
    assert_eq!(chars, classes);
    assert!(chars < 5);
}

#[test]
fn a5_golden_ratio_values() {
    let t = dixon_character_table(&builtin("a5").unwrap()).unwrap();
    let mut irrational: Vec<f64> = t
        .rows
        .iter()
        .flat_map(|c| c.values.iter())
        .filter(|v| !v.is_rational())
        .map(|v| v.to_complex().0)
        .collect();
    irrational.sort_by(f64::total_cmp);
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let expect = [1.0 - phi, 1.0 - phi, phi, phi];
    assert_eq!(irrational.len(), 4);
    for (a, b) in irrational.iter().zip(expect) {
        assert!((a - b).abs() < 1e-9);
    }
}

#[test]
fn class_constant_counting_identity() {
    for name in ["s3", "q8", "sym:4", "dih:5"] {
        let g = builtin(name).unwrap();
        let a = class_constants(&g).unwrap();
        let data = class_data(&g).unwrap();
        let r = a.class_count();
        for i in 0..r {
            for j in 0..r {
                let lhs: usize =
                    (0..r).map(|k| a.get(i, j, k) as usize * data.classes[k].size).sum();
                assert_eq!(lhs, data.classes[i].size * data.classes[j].size, "{name}");
            }
        }
    }
}

#[test]
fn class_constants_do_not_depend_on_target() {
    // brute recount with every member of C_k as the target
    let g = builtin("sym:4").unwrap();
    let a = class_constants(&g).unwrap();
    let data = class_data(&g).unwrap();
    let elems = g.elements().unwrap();
    let class_of = |p: &ocgroup::Permutation| {
        data.class_of[elems.iter().position(|e| e == p).unwrap()] as usize
    };
    for k in 0..data.len() {
        for &z in &data.members[k] {
            let z = &elems[z as usize];
            for i in 0..data.len() {
                for j in 0..data.len() {
                    let count = elems
                        .iter()
                        .filter(|x| class_of(x) == i && class_of(&(&x.inverse() * z)) == j)
                        .count();
                    assert_eq!(count as u32, a.get(i, j, k));
                }
            }
        }
    }
}

#[test]
fn catalog_tables_are_consistent() {
    let names = [
        "s3", "q8", "sd16", "gl23", "sl25", "w", "s5", "a5", "sym:4", "alt:4", "dih:6", "cyc:12",
        "genq:16", "ea:3:2", "dih:4",
    ];
    for name in names {
        let g = builtin(name).unwrap();
        let t = dixon_character_table(&g).unwrap();
        let n = g.order() as u64;
        assert_eq!(t.rows.len(), t.classes.len(), "{name}");
        assert_eq!(t.degrees().iter().map(|d| d * d).sum::<u64>(), n, "{name}");
        assert!(t.degrees().iter().all(|d| n.is_multiple_of(*d)), "{name}");
        assert!(t.rows_orthogonal(), "{name} rows");
        assert!(t.columns_orthogonal(), "{name} columns");
        // values at the identity are the degrees
        for c in &t.rows {
            assert!(c.values[0].value_eq_int(c.degree as i64));
        }
        let (chars, classes) = rationality_counts(&t);
        assert_eq!(chars, classes, "{name}");
        let all_rational = t.rows.iter().all(|c| c.is_rational());
        assert_eq!(all_rational, is_rational_group(&g).unwrap(), "{name}");
    }
}

#[test]
fn floating_point_orthogonality_agrees() {
    let t = dixon_character_table(&builtin("gl23").unwrap()).unwrap();
    let n = 48.0;
    for a in &t.rows {
        for b in &t.rows {
            let (mut re, mut im) = (0.0, 0.0);
            for (j, c) in t.classes.iter().enumerate() {
                let (x, y) = a.values[j].to_complex();
                let (u, v) = b.values[j].to_complex();
                re += c.size as f64 * (x * u + y * v);
                im += c.size as f64 * (y * u - x * v);
            }
            let want = if a == b { n } else { 0.0 };
            assert!((re - want).abs() < 1e-6 && im.abs() < 1e-6);
        }
    }
}
