//! 3-SAT to rainbow s–t cut.
//!
//! For a 3CNF formula φ with variables x_1..x_n and clauses c_1..c_m, the
//! graph G_φ has vertices s, t, x_j^0 and x_j^1 per variable, and c_i plus
//! c_i^1..c_i^3 per clause. For the k-th literal of clause i over x_j, a
//! positive literal contributes the edges
//!
//! ```text
//! x_j^0–c_i    (color r_i^k)
//! c_i–c_i^k     (color r_i^5)
//! c_i^k–x_j^1   (color r_i^4)
//! ```
//!
//! and a negative literal the same with x_j^0 and x_j^1 exchanged. Further,
//! s–t and every t–c_i share r_0, and s–x_j^0, s–x_j^1 share r_j.
//! G_φ has a rainbow s–t cut exactly when φ is satisfiable.
//!
//! In a rainbow cut, t keeps every c_i (r_0 is spent on s–t), at most one
//! of x_j^0, x_j^1 leaves the s-side, and each clause can afford to cut at
//! most two of its three two-edge paths (one r_i^4 edge, one r_i^5 edge). The
//! assignment sets x_j true exactly when x_j^1 is cut away from s.

use std::fmt::Write as _;

use crate::coloring::DEFAULT_BUDGET;
use crate::error::{Error, Result};
use crate::graph::{is_rainbow, Color, CutCertificate, EdgeColoring, Graph, VertexId};
use crate::rainbow::find_rainbow_cut_exact_with_budget;

/// A literal over variable `variable` (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Literal {
    pub variable: usize,
    pub positive: bool,
}

impl Literal {
    pub fn positive(variable: usize) -> Self {
        Literal {
            variable,
            positive: true,
        }
    }

    pub fn negative(variable: usize) -> Self {
        Literal {
            variable,
            positive: false,
        }
    }

    /// DIMACS form: `v` or `-v`.
    pub fn to_dimacs(self) -> i64 {
        let v = self.variable as i64;
        if self.positive {
            v
        } else {
            -v
        }
    }

    pub fn holds_under(self, a: &Assignment) -> bool {
        a.value(self.variable) == self.positive
    }
}

pub type Clause = [Literal; 3];

/// A 3CNF formula; every clause has three literals over distinct variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CnfFormula {
    variable_count: usize,
    clauses: Vec<Clause>,
}

impl CnfFormula {
    pub fn new(variable_count: usize, clauses: Vec<Clause>) -> Result<Self> {
        for (i, clause) in clauses.iter().enumerate() {
            for (k, lit) in clause.iter().enumerate() {
                if lit.variable == 0 || lit.variable > variable_count {
                    return Err(Error::InvalidFormula(format!(
                        "clause {}: variable {} out of range 1..={variable_count}",
                        i + 1,
                        lit.variable
                    )));
                }
                if clause[..k].iter().any(|l| l.variable == lit.variable) {
                    return Err(Error::InvalidFormula(format!(
                        "clause {}: repeated variable {}",
                        i + 1,
                        lit.variable
                    )));
                }
            }
        }
        Ok(CnfFormula {
            variable_count,
            clauses,
        })
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn is_satisfied_by(&self, a: &Assignment) -> bool {
        a.values.len() == self.variable_count
            && self
                .clauses
                .iter()
                .all(|clause| clause.iter().any(|l| l.holds_under(a)))
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.variable_count, self.clauses.len());
        for clause in &self.clauses {
            for lit in clause {
                write!(out, "{} ", lit.to_dimacs()).expect("writing to a String cannot fail");
            }
            out.push_str("0\n");
        }
        out
    }
}

/// Truth values for variables 1..=n.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment {
    values: Vec<bool>,
}

impl Assignment {
    pub fn new(values: Vec<bool>) -> Self {
        Assignment { values }
    }

    /// Value of `variable` (1-based).
    pub fn value(&self, variable: usize) -> bool {
        self.values[variable - 1]
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }
}

fn cnf_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses DIMACS CNF restricted to clauses of exactly three literals over
/// distinct variables. Clauses may span lines; a `%` line ends the input.
pub fn parse_dimacs_cnf(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut last_line = 0;

    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        if trimmed.starts_with('%') {
            break;
        }
        last_line = line_no;
        if trimmed.starts_with('p') {
            if header.is_some() {
                return Err(cnf_err(line_no, "duplicate header"));
            }
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            let ["p", "cnf", n, m] = fields[..] else {
                return Err(cnf_err(
                    line_no,
                    "header must be `p cnf <variables> <clauses>`",
                ));
            };
            let n = n
                .parse()
                .map_err(|_| cnf_err(line_no, format!("bad variable count `{n}`")))?;
            let m = m
                .parse()
                .map_err(|_| cnf_err(line_no, format!("bad clause count `{m}`")))?;
            header = Some((n, m));
            continue;
        }
        let Some((n, _)) = header else {
            return Err(cnf_err(line_no, "clause before header"));
        };
        for tok in trimmed.split_whitespace() {
            let lit: i64 = tok
                .parse()
                .map_err(|_| cnf_err(line_no, format!("bad literal `{tok}`")))?;
            if lit == 0 {
                let clause: Clause = current.as_slice().try_into().map_err(|_| {
                    cnf_err(
                        line_no,
                        format!("clause has {} literals, expected 3", current.len()),
                    )
                })?;
                current.clear();
                for (k, l) in clause.iter().enumerate() {
                    if clause[..k].iter().any(|p| p.variable == l.variable) {
                        return Err(cnf_err(
                            line_no,
                            format!("repeated variable {} in clause", l.variable),
                        ));
                    }
                }
                clauses.push(clause);
                continue;
            }
            let variable = lit.unsigned_abs() as usize;
            if variable > n {
                return Err(cnf_err(
                    line_no,
                    format!("variable {variable} out of range 1..={n}"),
                ));
            }
            current.push(Literal {
                variable,
                positive: lit > 0,
            });
        }
    }

    let Some((n, m)) = header else {
        return Err(cnf_err(0, "missing `p cnf` header"));
    };
    if !current.is_empty() {
        return Err(cnf_err(last_line, "last clause is not terminated by 0"));
    }
    if clauses.len() != m {
        return Err(cnf_err(
            0,
            format!(
                "header declares {m} clauses but {} were given",
                clauses.len()
            ),
        ));
    }
    CnfFormula::new(n, clauses)
}

/// Largest variable count [`solve_sat_bruteforce`] enumerates.
pub const BRUTEFORCE_MAX_VARIABLES: usize = 24;

/// The lexicographically first satisfying assignment, ordering assignments
/// as bit strings x_1 x_2 … x_n with false before true; `None` when the
/// formula is unsatisfiable.
pub fn solve_sat_bruteforce(f: &CnfFormula) -> Result<Option<Assignment>> {
    let n = f.variable_count();
    if n > BRUTEFORCE_MAX_VARIABLES {
        return Err(Error::TooLarge(format!(
            "{n} variables exceed the brute-force limit of {BRUTEFORCE_MAX_VARIABLES}"
        )));
    }
    for bits in 0u32..(1u32 << n) {
        let a = Assignment::new((0..n).map(|j| (bits >> (n - 1 - j)) & 1 == 1).collect());
        if f.is_satisfied_by(&a) {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

/// G_φ together with its coloring, terminals and name tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionArtifact {
    pub formula: CnfFormula,
    pub graph: Graph,
    pub coloring: EdgeColoring,
    pub s: VertexId,
    pub t: VertexId,
    /// Name of each vertex, indexed by vertex id.
    pub vertex_names: Vec<String>,
    /// Name of each color, indexed by color id.
    pub color_names: Vec<String>,
}

impl ReductionArtifact {
    fn n(&self) -> usize {
        self.formula.variable_count()
    }

    /// x_j^bit for variable `j` (1-based).
    pub fn variable_vertex(&self, j: usize, bit: bool) -> VertexId {
        2 + 2 * (j - 1) + usize::from(bit)
    }

    /// c_i for clause `i` (1-based).
    pub fn clause_vertex(&self, i: usize) -> VertexId {
        2 + 2 * self.n() + 4 * (i - 1)
    }

    /// c_i^k, k in 1..=3.
    pub fn clause_path_vertex(&self, i: usize, k: usize) -> VertexId {
        self.clause_vertex(i) + k
    }

    /// r_i^k for clause `i`, k in 1..=5.
    pub fn clause_color(&self, i: usize, k: usize) -> Color {
        self.n() + 1 + 5 * (i - 1) + (k - 1)
    }

    /// r_j for variable `j`.
    pub fn variable_color(&self, j: usize) -> Color {
        j
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.vertex_names.iter().position(|n| n == name)
    }

    pub fn color_by_name(&self, name: &str) -> Option<Color> {
        self.color_names.iter().position(|n| n == name)
    }
}

/// The colored graph G_φ.
///
/// Vertex ids: s, t, then x_1^0, x_1^1, …, x_n^0, x_n^1, then per clause
/// c_i, c_i^1, c_i^2, c_i^3. Color ids: r_0 = 0, r_j = j, then per clause
/// r_i^1..r_i^5. Edges: s–t, the variable pairs s–x_j^0, s–x_j^1, then
/// per clause t–c_i followed by the three literal paths in literal order.
pub fn build_theorem2_graph(f: &CnfFormula) -> ReductionArtifact {
    let n = f.variable_count();
    let m = f.clauses().len();
    let mut vertex_names = vec!["s".to_string(), "t".to_string()];
    for j in 1..=n {
        vertex_names.push(format!("x{j}^0"));
        vertex_names.push(format!("x{j}^1"));
    }
    for i in 1..=m {
        vertex_names.push(format!("c{i}"));
        for k in 1..=3 {
            vertex_names.push(format!("c{i}^{k}"));
        }
    }
    let mut color_names = vec!["r_0".to_string()];
    color_names.extend((1..=n).map(|j| format!("r_{j}")));
    for i in 1..=m {
        color_names.extend((1..=5).map(|k| format!("r_{i}^{k}")));
    }

    // ids only depend on n, so a placeholder artifact gives the layout
    let mut art = ReductionArtifact {
        formula: f.clone(),
        graph: Graph::new(0, vec![]).expect("empty graph"),
        coloring: EdgeColoring::from_colors(vec![]),
        s: 0,
        t: 1,
        vertex_names,
        color_names,
    };

    let (s, t) = (art.s, art.t);
    let mut edges = vec![(s, t)];
    let mut colors = vec![0];
    for j in 1..=n {
        for bit in [false, true] {
            edges.push((s, art.variable_vertex(j, bit)));
            colors.push(art.variable_color(j));
        }
    }
    for (idx, clause) in f.clauses().iter().enumerate() {
        let i = idx + 1;
        let ci = art.clause_vertex(i);
        edges.push((t, ci));
        colors.push(0);
        for (kdx, lit) in clause.iter().enumerate() {
            let k = kdx + 1;
            // positive: source x^0, sink x^1; negative: the reverse
            let source = art.variable_vertex(lit.variable, !lit.positive);
            let sink = art.variable_vertex(lit.variable, lit.positive);
            let cik = art.clause_path_vertex(i, k);
            edges.push((source, ci));
            colors.push(art.clause_color(i, k));
            edges.push((ci, cik));
            colors.push(art.clause_color(i, 5));
            edges.push((cik, sink));
            colors.push(art.clause_color(i, 4));
        }
    }
    let vertex_count = art.vertex_names.len();
    let palette = art.color_names.len();
    art.graph = Graph::new(vertex_count, edges).expect("G_phi is a simple graph");
    art.coloring = EdgeColoring::new(colors, palette).expect("colors within the named palette");
    art
}

/// A rainbow s–t cut in G_φ built from a satisfying assignment.
///
/// x_j^{value} goes to the t-side with t and every c_i. On each clause, the
/// paths of false literals still join an s-side sink to c_i: the first is cut
/// at its r_i^4 edge, the second (if any) at its r_i^5 edge.
pub fn build_cut_from_assignment(
    a: &ReductionArtifact,
    asg: &Assignment,
) -> Result<CutCertificate> {
    let n = a.formula.variable_count();
    if asg.values().len() != n {
        return Err(Error::InvalidFormula(format!(
            "assignment has {} values for {n} variables",
            asg.values().len()
        )));
    }
    if !a.formula.is_satisfied_by(asg) {
        return Err(Error::UnsatisfyingAssignment);
    }
    let mut on_s = vec![false; a.graph.vertex_count()];
    on_s[a.s] = true;
    for j in 1..=n {
        on_s[a.variable_vertex(j, !asg.value(j))] = true;
    }
    for (idx, clause) in a.formula.clauses().iter().enumerate() {
        let i = idx + 1;
        let mut false_seen = 0;
        for (kdx, lit) in clause.iter().enumerate() {
            if !lit.holds_under(asg) {
                false_seen += 1;
                if false_seen == 2 {
                    on_s[a.clause_path_vertex(i, kdx + 1)] = true;
                }
            }
        }
    }
    let cert = CutCertificate::from_side(&a.graph, &on_s).minimized(&a.graph, a.s);
    cert.validate(&a.graph, a.s, a.t)?;
    if !is_rainbow(&a.coloring, &cert.cut_edges)? {
        return Err(Error::InvalidCertificate(
            "constructed cut is not rainbow".into(),
        ));
    }
    Ok(cert)
}

/// Reads an assignment off a rainbow s–t cut in G_φ: x_j is true exactly
/// when x_j^1 is separated from s. The result is checked against φ.
pub fn extract_assignment_from_cut(
    a: &ReductionArtifact,
    cut: &CutCertificate,
) -> Result<Assignment> {
    cut.validate(&a.graph, a.s, a.t)?;
    if !is_rainbow(&a.coloring, &cut.cut_edges)? {
        return Err(Error::InvalidCertificate("cut is not rainbow".into()));
    }
    let minimal = cut.minimized(&a.graph, a.s);
    let on_s = minimal.s_side_mask(&a.graph);
    let n = a.formula.variable_count();
    let mut values = Vec::with_capacity(n);
    for j in 1..=n {
        let zero = on_s[a.variable_vertex(j, false)];
        let one = on_s[a.variable_vertex(j, true)];
        if !zero && !one {
            return Err(Error::InvalidCertificate(format!(
                "both s-edges of variable {j} are in the cut"
            )));
        }
        values.push(!one);
    }
    let asg = Assignment::new(values);
    if !a.formula.is_satisfied_by(&asg) {
        return Err(Error::InvalidCertificate(
            "extracted assignment does not satisfy the formula".into(),
        ));
    }
    Ok(asg)
}

/// Both sides of the equivalence for one formula, with witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionReport {
    pub variables: usize,
    pub clauses: usize,
    pub vertices: usize,
    pub edges: usize,
    pub colors: usize,
    pub satisfiable: bool,
    pub cut_exists: bool,
    /// First satisfying assignment, from brute force.
    pub assignment: Option<Assignment>,
    /// Cut built from `assignment`.
    pub cut_from_assignment: Option<CutCertificate>,
    /// Cut found by the exact rainbow cut search.
    pub search_cut: Option<CutCertificate>,
    /// Assignment read off `search_cut`.
    pub assignment_from_cut: Option<Assignment>,
}

impl ReductionReport {
    pub fn equivalent(&self) -> bool {
        self.satisfiable == self.cut_exists
    }
}

pub const VERIFY_MAX_VARIABLES: usize = 16;
pub const VERIFY_MAX_CLAUSES: usize = 12;

pub fn verify_reduction(f: &CnfFormula) -> Result<ReductionReport> {
    verify_reduction_with_budget(f, DEFAULT_BUDGET)
}

/// Decides satisfiability by brute force and rainbow-cut existence by exact
/// search, validating the witness for each direction.
pub fn verify_reduction_with_budget(f: &CnfFormula, budget: u64) -> Result<ReductionReport> {
    if f.variable_count() > VERIFY_MAX_VARIABLES || f.clauses().len() > VERIFY_MAX_CLAUSES {
        return Err(Error::TooLarge(format!(
            "verification handles at most {VERIFY_MAX_VARIABLES} variables and \
             {VERIFY_MAX_CLAUSES} clauses"
        )));
    }
    let assignment = solve_sat_bruteforce(f)?;
    let art = build_theorem2_graph(f);
    let search_cut =
        find_rainbow_cut_exact_with_budget(&art.graph, &art.coloring, art.s, art.t, budget)?;
    let cut_from_assignment = assignment
        .as_ref()
        .map(|asg| build_cut_from_assignment(&art, asg))
        .transpose()?;
    let assignment_from_cut = search_cut
        .as_ref()
        .map(|cut| extract_assignment_from_cut(&art, cut))
        .transpose()?;
    Ok(ReductionReport {
        variables: f.variable_count(),
        clauses: f.clauses().len(),
        vertices: art.graph.vertex_count(),
        edges: art.graph.edge_count(),
        colors: art.coloring.color_count(),
        satisfiable: assignment.is_some(),
        cut_exists: search_cut.is_some(),
        assignment,
        cut_from_assignment,
        search_cut,
        assignment_from_cut,
    })
}
