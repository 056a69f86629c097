//! Simple undirected graphs, degree-corrected block-model sampling, and
//! edge-list / label-file ingestion.
//!
//! Sampling iterates unordered pairs in lexicographic order and draws one
//! uniform variate per pair, so a run is fully determined by its seed.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use nalgebra::DMatrix;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Pareto};

use crate::error::Error;

/// Simple undirected graph: symmetric 0/1 adjacency with zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>, // row-major n*n
    node_names: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph on `n` nodes from an edge list. Duplicates and both
    /// orientations collapse; self-loops are dropped.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        let mut g = Graph::empty(n);
        for &(i, j) in edges {
            if i >= n {
                return Err(Error::NodeOutOfRange { index: i, n });
            }
            if j >= n {
                return Err(Error::NodeOutOfRange { index: j, n });
            }
            if i != j {
                g.adj[i * n + j] = true;
                g.adj[j * n + i] = true;
            }
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![false; n * n],
            node_names: None,
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 0..n {
            for j in 0..n {
                g.adj[i * n + j] = i != j;
            }
        }
        g
    }

    /// Attaches original node identifiers; must be `n` distinct entries.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self, Error> {
        if names.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "{} names for {} nodes",
                names.len(),
                self.n
            )));
        }
        let mut seen = HashMap::new();
        for (idx, name) in names.iter().enumerate() {
            if seen.insert(name.clone(), idx).is_some() {
                return Err(Error::InvalidParameter(format!(
                    "duplicate node name {name:?}"
                )));
            }
        }
        self.node_names = Some(names);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.n + j]
    }

    pub fn node_names(&self) -> Option<&[String]> {
        self.node_names.as_deref()
    }

    /// Row sums of the adjacency matrix.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n)
            .map(|i| self.adj[i * self.n..(i + 1) * self.n].iter().filter(|&&b| b).count())
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().iter().sum::<usize>() / 2
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[i * self.n..(i + 1) * self.n]
            .iter()
            .enumerate()
            .filter_map(|(j, &b)| b.then_some(j))
    }

    /// Dense 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.n, self.n, |i, j| f64::from(self.adj[i * self.n + j]))
    }

    /// Connected components as lists of node indices, each sorted, ordered by
    /// their smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut components = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut component = Vec::new();
            seen[start] = true;
            while let Some(v) = stack.pop() {
                component.push(v);
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.connected_components().len() == 1
    }
}

/// Ground-truth model: memberships, degree parameters and connectivity.
#[derive(Debug, Clone, PartialEq)]
pub struct DcsbmParams {
    r: usize,
    membership: Vec<usize>,
    theta: Vec<f64>,
    connectivity: DMatrix<f64>,
}

impl DcsbmParams {
    pub fn new(
        r: usize,
        membership: Vec<usize>,
        theta: Vec<f64>,
        connectivity: DMatrix<f64>,
    ) -> Result<Self, Error> {
        if r == 0 {
            return Err(Error::InvalidParameter("cluster count must be >= 1".into()));
        }
        if membership.len() != theta.len() {
            return Err(Error::DimensionMismatch(format!(
                "membership length {} vs theta length {}",
                membership.len(),
                theta.len()
            )));
        }
        if connectivity.nrows() != r || connectivity.ncols() != r {
            return Err(Error::DimensionMismatch(format!(
                "connectivity is {}x{}, expected {r}x{r}",
                connectivity.nrows(),
                connectivity.ncols()
            )));
        }
        let mut present = vec![false; r];
        for &label in &membership {
            if label >= r {
                return Err(Error::LabelOutOfRange { index: label, r });
            }
            present[label] = true;
        }
        if !present.iter().all(|&p| p) {
            return Err(Error::InvalidParameter(
                "every cluster label must appear at least once".into(),
            ));
        }
        for v in &theta {
            if !v.is_finite() || *v < 0.0 {
                return Err(Error::InvalidParameter(
                    "theta entries must be finite and nonnegative".into(),
                ));
            }
        }
        for i in 0..r {
            for j in 0..r {
                let v = connectivity[(i, j)];
                if !v.is_finite() || v < 0.0 {
                    return Err(Error::InvalidParameter(
                        "connectivity entries must be finite and nonnegative".into(),
                    ));
                }
                if connectivity[(i, j)] != connectivity[(j, i)] {
                    return Err(Error::InvalidParameter(
                        "connectivity matrix must be symmetric".into(),
                    ));
                }
            }
        }
        Ok(DcsbmParams {
            r,
            membership,
            theta,
            connectivity,
        })
    }

    /// Planted-partition parameters: contiguous clusters of the given sizes,
    /// within-cluster probability `p` and cross-cluster probability `q`.
    pub fn planted(sizes: &[usize], p: f64, q: f64, theta: Vec<f64>) -> Result<Self, Error> {
        let r = sizes.len();
        let n: usize = sizes.iter().sum();
        if theta.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "theta length {} vs total size {n}",
                theta.len()
            )));
        }
        if sizes.iter().any(|&s| s == 0) {
            return Err(Error::InvalidParameter("cluster sizes must be >= 1".into()));
        }
        let mut membership = Vec::with_capacity(n);
        for (label, &size) in sizes.iter().enumerate() {
            membership.extend(std::iter::repeat_n(label, size));
        }
        let connectivity = DMatrix::from_fn(r, r, |a, b| if a == b { p } else { q });
        DcsbmParams::new(r, membership, theta, connectivity)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.membership.len()
    }

    pub fn membership(&self) -> &[usize] {
        &self.membership
    }

    pub fn theta(&self) -> &[f64] {
        &self.theta
    }

    pub fn connectivity(&self) -> &DMatrix<f64> {
        &self.connectivity
    }

    pub fn cluster_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.r];
        for &label in &self.membership {
            sizes[label] += 1;
        }
        sizes
    }
}

/// Per-cluster theta mass, per-cluster degree scale, and per-node expected
/// degree scale derived from the model parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct PopulationDegrees {
    /// Per-cluster sum of theta over members.
    pub theta_sums: Vec<f64>,
    /// Per-cluster weighted connectivity mass driving average degrees.
    pub degree_scales: Vec<f64>,
    /// Per-node value `theta_i * degree_scale(cluster of i)`.
    pub expected_degrees: Vec<f64>,
}

/// Mean-one Pareto draws: shape `alpha`, scale `(alpha - 1) / alpha`.
pub fn pareto_theta(alpha: f64, n: usize, seed: u64) -> Result<Vec<f64>, Error> {
    if !(alpha > 1.0) {
        return Err(Error::InfiniteMeanShape(alpha));
    }
    if n == 0 {
        return Err(Error::InvalidParameter("sample count must be >= 1".into()));
    }
    let scale = (alpha - 1.0) / alpha;
    let pareto = Pareto::new(scale, alpha)
        .map_err(|e| Error::InvalidParameter(format!("pareto: {e}")))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..n).map(|_| pareto.sample(&mut rng)).collect())
}

/// Samples a graph from the model: each unordered pair `{i, j}` is connected
/// independently with probability `min(1, theta_i theta_j B_ab)`.
pub fn sample_dcsbm(params: &DcsbmParams, seed: u64) -> Graph {
    let n = params.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in (i + 1)..n {
            let b = params.connectivity[(params.membership[i], params.membership[j])];
            let p = (params.theta[i] * params.theta[j] * b).min(1.0);
            let u: f64 = rng.random();
            if u < p {
                g.adj[i * n + j] = true;
                g.adj[j * n + i] = true;
            }
        }
    }
    g
}

/// Evaluates the population quantities exactly from the parameters.
pub fn population_degrees(params: &DcsbmParams) -> PopulationDegrees {
    let r = params.r;
    let mut theta_sums = vec![0.0; r];
    for (i, &label) in params.membership.iter().enumerate() {
        theta_sums[label] += params.theta[i];
    }
    let degree_scales: Vec<f64> = (0..r)
        .map(|a| {
            (0..r)
                .map(|b| params.connectivity[(a, b)] * theta_sums[b])
                .sum()
        })
        .collect();
    let expected_degrees = params
        .membership
        .iter()
        .zip(&params.theta)
        .map(|(&label, &theta)| theta * degree_scales[label])
        .collect();
    PopulationDegrees {
        theta_sums,
        degree_scales,
        expected_degrees,
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    }
}

/// Reads a whitespace-separated edge list. `#` starts a comment; node
/// identifiers are arbitrary strings mapped to indices in first-appearance
/// order, duplicate edges and both orientations collapse, self-loops are
/// dropped (the node is kept).
pub fn load_edge_list(path: impl AsRef<Path>) -> Result<Graph, Error> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)?;
    let mut ids: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut intern = |token: &str, ids: &mut Vec<String>| -> usize {
        *index.entry(token.to_string()).or_insert_with(|| {
            ids.push(token.to_string());
            ids.len() - 1
        })
    };
    for (lineno, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(Error::ParseLine {
                path: path.display().to_string(),
                line: lineno + 1,
                reason: format!("expected two node identifiers, got {raw:?}"),
            });
        };
        let ia = intern(a, &mut ids);
        let ib = intern(b, &mut ids);
        if ia != ib {
            edges.push((ia, ib));
        }
    }
    Graph::from_edges(ids.len(), &edges)?.with_names(ids)
}

/// Reads `node_id label` pairs, one per line, `#` comments. Duplicate node
/// ids are rejected.
pub fn load_labels(path: impl AsRef<Path>) -> Result<Vec<(String, String)>, Error> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)?;
    let mut pairs = Vec::new();
    let mut seen: HashMap<String, usize> = HashMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (Some(id), Some(label), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(Error::ParseLine {
                path: path.display().to_string(),
                line: lineno + 1,
                reason: format!("expected \"node_id label\", got {raw:?}"),
            });
        };
        if seen.insert(id.to_string(), lineno).is_some() {
            return Err(Error::DuplicateNodeId {
                path: path.display().to_string(),
                line: lineno + 1,
                id: id.to_string(),
            });
        }
        pairs.push((id.to_string(), label.to_string()));
    }
    Ok(pairs)
}

/// Writes `node_id label` lines in node order.
pub fn format_labels(ids: &[String], labels: &[usize]) -> String {
    let mut out = String::new();
    for (id, label) in ids.iter().zip(labels) {
        let _ = writeln!(out, "{id} {label}");
    }
    out
}

/// Induced subgraph on the largest connected component, together with the
/// old-to-new index map. Ties between equal-sized components go to the one
/// containing the smallest original index.
pub fn largest_connected_component(g: &Graph) -> Result<(Graph, Vec<Option<usize>>), Error> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let components = g.connected_components();
    // Components are discovered in order of their smallest member, so the
    // first maximum realizes the tie-break.
    let largest = components
        .iter()
        .max_by_key(|c| c.len())
        .expect("nonempty graph has a component");
    let mut map = vec![None; g.n()];
    for (new, &old) in largest.iter().enumerate() {
        map[old] = Some(new);
    }
    let mut sub = Graph::empty(largest.len());
    for (new_i, &old_i) in largest.iter().enumerate() {
        for old_j in g.neighbors(old_i) {
            if let Some(new_j) = map[old_j] {
                sub.adj[new_i * sub.n + new_j] = true;
            }
        }
    }
    if let Some(names) = g.node_names() {
        sub = sub.with_names(largest.iter().map(|&i| names[i].clone()).collect())?;
    }
    Ok((sub, map))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn pareto_scale_from_shape() {
        // Mean alpha*beta/(alpha-1) = 1 forces beta = (alpha-1)/alpha.
        let draws = pareto_theta(2.0, 1000, 1).unwrap();
        assert!(draws.iter().all(|&x| x >= 0.5));
        let draws = pareto_theta(5.0, 1000, 1).unwrap();
        assert!(draws.iter().all(|&x| x >= 0.8 - 1e-12));
    }

    #[test]
    fn pareto_monte_carlo_mean() {
        let draws = pareto_theta(3.0, 100_000, 42).unwrap();
        let mean = draws.iter().sum::<f64>() / draws.len() as f64;
        assert!((mean - 1.0).abs() < 0.02, "mean {mean}");
    }

    #[test]
    fn pareto_rejects_bad_inputs() {
        assert!(matches!(
            pareto_theta(1.0, 10, 0),
            Err(Error::InfiniteMeanShape(_))
        ));
        assert!(matches!(
            pareto_theta(0.5, 10, 0),
            Err(Error::InfiniteMeanShape(_))
        ));
        assert!(pareto_theta(2.0, 0, 0).is_err());
    }

    #[test]
    fn pareto_deterministic() {
        assert_eq!(
            pareto_theta(2.5, 64, 9).unwrap(),
            pareto_theta(2.5, 64, 9).unwrap()
        );
    }

    #[test]
    fn sample_zero_connectivity_gives_empty_graph() {
        let params =
            DcsbmParams::planted(&[3, 3], 0.0, 0.0, vec![1.0; 6]).unwrap();
        let g = sample_dcsbm(&params, 0);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn sample_unit_theta_full_connectivity_gives_complete_graph() {
        let params = DcsbmParams::planted(&[4, 4], 1.0, 1.0, vec![1.0; 8]).unwrap();
        let g = sample_dcsbm(&params, 3);
        assert_eq!(g, Graph::complete(8));
    }

    #[test]
    fn sample_is_valid_and_deterministic() {
        let theta = pareto_theta(2.0, 50, 7).unwrap();
        let params = DcsbmParams::planted(&[25, 25], 0.4, 0.1, theta).unwrap();
        let g = sample_dcsbm(&params, 11);
        for i in 0..50 {
            assert!(!g.has_edge(i, i));
            for j in 0..50 {
                assert_eq!(g.has_edge(i, j), g.has_edge(j, i));
            }
        }
        assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
        assert_eq!(g, sample_dcsbm(&params, 11));
    }

    // Monte Carlo oracle: within-block edge counts are Binomial(C(g,2), p).
    #[test]
    fn sample_within_block_counts_match_binomial_moments() {
        let params = DcsbmParams::planted(&[200, 200], 0.1, 0.03, vec![1.0; 400]).unwrap();
        let pairs = 200.0 * 199.0 / 2.0;
        let mean = pairs * 0.1;
        let sd = (pairs * 0.1 * 0.9).sqrt();
        for seed in 0..20 {
            let g = sample_dcsbm(&params, seed);
            for block in 0..2 {
                let offset = block * 200;
                let mut count = 0usize;
                for i in 0..200 {
                    for j in (i + 1)..200 {
                        if g.has_edge(offset + i, offset + j) {
                            count += 1;
                        }
                    }
                }
                let deviation = (count as f64 - mean).abs();
                assert!(
                    deviation <= 4.0 * sd,
                    "seed {seed} block {block}: count {count}, expected {mean:.1} +/- {:.1}",
                    4.0 * sd
                );
            }
        }
    }

    #[test]
    fn degrees_examples() {
        assert_eq!(Graph::complete(3).degrees(), vec![2, 2, 2]);
        assert_eq!(Graph::empty(4).degrees(), vec![0, 0, 0, 0]);
        assert_eq!(path3().degrees(), vec![1, 2, 1]);
    }

    #[test]
    fn population_degrees_direct_substitution() {
        let params = DcsbmParams::planted(&[2, 2], 0.5, 0.1, vec![1.0; 4]).unwrap();
        let pop = population_degrees(&params);
        assert_eq!(pop.theta_sums, vec![2.0, 2.0]);
        for a in 0..2 {
            assert!((pop.degree_scales[a] - 1.2).abs() < 1e-15);
        }
        for f in &pop.expected_degrees {
            assert!((f - 1.2).abs() < 1e-15);
        }
    }

    #[test]
    fn population_degrees_single_cluster() {
        let params = DcsbmParams::planted(&[3], 0.7, 0.0, vec![0.5, 1.0, 1.5]).unwrap();
        let pop = population_degrees(&params);
        assert!((pop.theta_sums[0] - 3.0).abs() < 1e-15);
        assert!((pop.degree_scales[0] - 0.7 * 3.0).abs() < 1e-15);
    }

    #[test]
    fn population_degrees_l1_identity() {
        // ||f||_1 = sum_{a,b} B_ab G_a G_b, for arbitrary parameters.
        let theta = pareto_theta(3.0, 30, 5).unwrap();
        let mut membership = Vec::new();
        for i in 0..30 {
            membership.push(i % 3);
        }
        let connectivity =
            DMatrix::from_fn(3, 3, |a, b| 0.1 + 0.05 * ((a * b) as f64) + 0.2 * f64::from(a == b));
        let params = DcsbmParams::new(3, membership, theta, connectivity.clone()).unwrap();
        let pop = population_degrees(&params);
        let f_l1: f64 = pop.expected_degrees.iter().sum();
        let mut rhs = 0.0;
        for a in 0..3 {
            for b in 0..3 {
                rhs += connectivity[(a, b)] * pop.theta_sums[a] * pop.theta_sums[b];
            }
        }
        assert!((f_l1 - rhs).abs() <= 1e-12 * rhs.abs().max(1.0));
    }

    #[test]
    fn params_validation() {
        assert!(DcsbmParams::new(2, vec![0, 0], vec![1.0, 1.0], DMatrix::zeros(2, 2)).is_err());
        assert!(DcsbmParams::new(1, vec![0], vec![-1.0], DMatrix::zeros(1, 1)).is_err());
        let asym = DMatrix::from_row_slice(2, 2, &[0.5, 0.1, 0.2, 0.5]);
        assert!(DcsbmParams::new(2, vec![0, 1], vec![1.0, 1.0], asym).is_err());
        // Size-1 clusters are allowed.
        assert!(DcsbmParams::planted(&[1, 3], 0.5, 0.1, vec![1.0; 4]).is_ok());
    }

    fn write_temp(content: &str) -> std::path::PathBuf {
        let dir = std::env::temp_dir();
        let path = dir.join(format!(
            "cmm_graph_test_{}_{}.txt",
            std::process::id(),
            content.len()
        ));
        std::fs::write(&path, content).unwrap();
        path
    }

    #[test]
    fn edge_list_path_graph() {
        let path = write_temp("a b\nb c\n");
        let g = load_edge_list(&path).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.degrees(), vec![1, 2, 1]);
        assert_eq!(
            g.node_names().unwrap(),
            &["a".to_string(), "b".to_string(), "c".to_string()]
        );
        std::fs::remove_file(path).ok();
    }

    #[test]
    fn edge_list_collapses_orientations_and_duplicates() {
        let path = write_temp("a b\nb a\na b\n");
        let g = load_edge_list(&path).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edge_count(), 1);
        std::fs::remove_file(path).ok();
    }

    #[test]
    fn edge_list_drops_self_loops_keeps_node() {
        let path = write_temp("# comment line\na a\n");
        let g = load_edge_list(&path).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
        std::fs::remove_file(path).ok();
    }

    #[test]
    fn edge_list_reports_malformed_line_number() {
        let path = write_temp("a b\nc\n");
        match load_edge_list(&path) {
            Err(Error::ParseLine { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        std::fs::remove_file(path).ok();
    }

    #[test]
    fn labels_roundtrip_and_duplicates() {
        let path = write_temp("a 1\nb 2 # trailing\n");
        let pairs = load_labels(&path).unwrap();
        assert_eq!(
            pairs,
            vec![
                ("a".to_string(), "1".to_string()),
                ("b".to_string(), "2".to_string())
            ]
        );
        std::fs::remove_file(path).ok();
        let dup = write_temp("a 1\na 2\n");
        assert!(matches!(
            load_labels(&dup),
            Err(Error::DuplicateNodeId { line: 2, .. })
        ));
        std::fs::remove_file(dup).ok();
    }

    #[test]
    fn lcc_connected_graph_is_itself() {
        let g = path3();
        let (sub, map) = largest_connected_component(&g).unwrap();
        assert_eq!(sub, g);
        assert_eq!(map, vec![Some(0), Some(1), Some(2)]);
    }

    #[test]
    fn lcc_drops_isolated_node() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let (sub, map) = largest_connected_component(&g).unwrap();
        assert_eq!(sub.n(), 3);
        assert_eq!(sub.edge_count(), 3);
        assert_eq!(map[3], None);
    }

    #[test]
    fn lcc_tie_breaks_by_smallest_index() {
        // Two components of size 2: {0,3} and {1,2}; the one containing 0 wins.
        let g = Graph::from_edges(4, &[(0, 3), (1, 2)]).unwrap();
        let (_, map) = largest_connected_component(&g).unwrap();
        assert_eq!(map[0], Some(0));
        assert_eq!(map[3], Some(1));
        assert_eq!(map[1], None);
    }

    #[test]
    fn lcc_empty_graph_errors() {
        assert!(matches!(
            largest_connected_component(&Graph::empty(0)),
            Err(Error::EmptyGraph)
        ));
    }
}
