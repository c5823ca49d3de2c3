use cyclepack::Graph;

#[test]
fn frozen_table() {
    let text = include_str!("data/planarity_table.txt");
    let mut checked = 0;
    for line in text
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
    {
        let mut toks = line.split_whitespace();
        let want = toks.next().unwrap() == "planar";
        let n: usize = toks.next().unwrap().parse().unwrap();
        let edges = toks.map(|e| {
            let (u, v) = e.split_once('-').unwrap();
            (u.parse().unwrap(), v.parse().unwrap())
        });
        let g = Graph::from_edges(n, edges).unwrap();
        assert_eq!(g.is_planar(), want, "{line}");
        checked += 1;
    }
    assert_eq!(checked, 160);
}
