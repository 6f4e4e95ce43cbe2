macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!("../examples/", stringify!($name), ".rs"));
        }
    };
}

example!(translate);
example!(dcurve);
example!(worm);
example!(digraph);
example!(align);
example!(dotplot);
example!(distmat);
example!(tree);
example!(pipeline);

#[test]
fn translate_example() {
    let lines = translate::run_example().unwrap();
    assert_eq!(lines.len(), 4);
    assert!(lines[1].starts_with("frame 0 MVHLTPEEKSAVTA*"));
}

#[test]
fn dcurve_example() {
    let (csv, descriptor, pcc, svg) = dcurve::run_example().unwrap();
    assert_eq!(csv.lines().nth(9), Some("9,-2,-2,4,-2,1,-1"));
    assert_eq!(descriptor, [-2.0 / 9.0, 1.0 / 9.0, -1.0 / 9.0]);
    assert!((-1.0..=1.0).contains(&pcc));
    assert!(svg.contains("polyline"));
}

#[test]
fn worm_example() {
    let (bits, spots, d, dist, _) = worm::run_example().unwrap();
    assert_eq!(bits, "001101011101010100");
    assert_eq!(spots, 9);
    assert_eq!(d[1], d[2]);
    assert!(dist > 0.0);
}

#[test]
fn digraph_example() {
    let (csv, total, expected, d) = digraph::run_example().unwrap();
    assert_eq!(csv.lines().count(), 5);
    assert!((total - expected).abs() < 1e-12);
    assert!(d.iter().all(|v| *v >= 0.0));
}

#[test]
fn align_example() {
    let (global, local) = align::run_example().unwrap();
    assert!(global.starts_with("# human 0-24 vs mouse 0-24"));
    assert!(local.starts_with("# human"));
}

#[test]
fn dotplot_example() {
    let (rows, pbm) = dotplot::run_example().unwrap();
    assert_eq!(rows.len(), 18);
    assert!(pbm.starts_with("P1\n18 18\n"));
}

#[test]
fn distmat_example() {
    let out = distmat::run_example().unwrap();
    assert_eq!(out.len(), 6);
    for (_, csv) in out {
        assert_eq!(csv.lines().count(), 5);
    }
}

#[test]
fn tree_example() {
    let (nj, up, leaves, svg) = tree::run_example().unwrap();
    assert!(nj.ends_with(';') && up.ends_with(';'));
    assert_eq!(leaves, 5);
    assert!(svg.contains("human"));
}

#[test]
fn pipeline_example() {
    let out = pipeline::run_example().unwrap();
    assert_eq!(out.len(), 3);
    for (_, csv, newick) in out {
        assert_eq!(csv.lines().count(), 6);
        assert!(newick.contains("chimp"));
    }
}
