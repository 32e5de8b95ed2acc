use monorees::asymptotics::{fit_polynomial, length_table, LengthTable, LengthValue, TableMode};
use monorees::dsl::parse_workspace;
use monorees::geometry::{analytic_spread, integral_closure};
use monorees::grid::parse_grid;
use monorees::regularity::{betti_table, regularity};
use monorees::saturation::saturate_certified;
use monorees::{Error, MultiIndex};

const DEMO: &str = "\
ring X Y Z
ideal T = X*Y, Y*Z, X*Z
ideal A = X^2, X*Y
poly f = X - Y
family F = [T] sat m
family H = [A] sat f
";

#[test]
fn triangle_square_gains_xyz() {
    let ws = parse_workspace(DEMO).unwrap();
    let sat = saturate_certified(ws.family("F").unwrap(), &MultiIndex::from([2])).unwrap();
    let ring = ws.ring();
    let shown: Vec<String> = sat.gens().iter().map(|g| ring.fmt_monomial(g)).collect();
    assert!(shown.contains(&"X*Y*Z".to_string()), "{shown:?}");
    assert_eq!(sat.num_gens(), 4);
}

#[test]
fn triangle_geometry() {
    let ws = parse_workspace(DEMO).unwrap();
    let t = ws.ideal("T").unwrap();
    assert_eq!(analytic_spread(t).unwrap(), 3);
    assert_eq!(&integral_closure(t).unwrap(), t);
    // XYZ lies in the saturation of the square but has degree 3 < 4, so not in its closure
    let square = t.pow(2).unwrap();
    assert_eq!(integral_closure(&square).unwrap(), square);
    assert_eq!(regularity(t).unwrap(), 2);
}

#[test]
fn torsion_table_csv_round_trip() {
    let text = "ring X Y\nideal A = X^2, X*Y\nfamily F = [A] sat m\n";
    let ws = parse_workspace(text).unwrap();
    let grid = parse_grid("1..6", Some(1)).unwrap();
    let table = length_table(ws.family("F").unwrap(), &grid, &TableMode::Torsion).unwrap();
    let csv = table.to_csv_string();
    assert!(csv.starts_with("n_1,value\n1,1\n2,3\n3,6\n"), "{csv}");
    let back = LengthTable::read_csv(csv.as_bytes()).unwrap();
    assert_eq!(back, table);
    let p = fit_polynomial(&back, 2).unwrap().unwrap();
    assert_eq!(p.to_string(), "1/2*n^2 + 1/2*n");
}

#[test]
fn infinite_lengths_serialize_as_inf() {
    let csv = "n_1,n_2,value\n1,1,INF\n1,2,4\n";
    let t = LengthTable::read_csv(csv.as_bytes()).unwrap();
    assert_eq!(t.get(&MultiIndex::from([1, 1])), Some(LengthValue::Infinite));
    assert_eq!(t.to_csv_string(), csv);
    assert!(matches!(LengthTable::read_csv("n_1,value\n1,x\n".as_bytes()), Err(Error::Table(_))));
}

#[test]
fn betti_csv_lists_multidegrees() {
    let ws = parse_workspace("ring X Y\nideal M = X, Y\n").unwrap();
    let csv = betti_table(ws.ideal("M").unwrap()).unwrap().to_csv_string();
    assert_eq!(csv, "i,multidegree,beta\n0,0:0,1\n1,0:1,1\n1,1:0,1\n2,1:1,1\n");
}

#[test]
fn parse_errors_carry_positions() {
    match parse_workspace("ring X Y\nideal I = X + Y\n") {
        Err(Error::Parse { line, col, .. }) => assert_eq!((line, col), (2, 13)),
        other => panic!("{other:?}"),
    }
    assert!(matches!(parse_workspace("ring X Y\nideal I = Q\n"), Err(Error::Parse { line: 2, .. })));
    assert!(matches!(parse_workspace("ring X X\n"), Err(Error::Parse { .. }) | Err(Error::Domain(_))));
}
