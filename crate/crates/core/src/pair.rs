//! Binomial edge ideals of pairs of graphs: generators over an m x n variable
//! grid, the two distinguished term orders, the row/column multigrading, and
//! the linear-quotients test for the sequence of variable classes.

use serde::{Deserialize, Serialize};

use crate::error::GbError;
use crate::field::Field;
use crate::gb::{buchberger_reduced, colon_by, GbLimits};
use crate::graph::Graph;
use crate::order::{OrderKind, TermOrder};
use crate::poly::{Monomial, PolyRing, Polynomial};

/// The polynomial ring on the grid `x[i,j]`, `1 <= i <= m`, `1 <= j <= n`,
/// stored row-major.
#[derive(Clone, Debug)]
pub struct PairRing<F: Field> {
    pub ring: PolyRing<F>,
    pub m: usize,
    pub n: usize,
}

impl<F: Field> PairRing<F> {
    pub fn new(m: usize, n: usize, field: F) -> Self {
        assert!(m >= 1 && n >= 1);
        let mut vars = Vec::with_capacity(m * n);
        for i in 1..=m {
            for j in 1..=n {
                vars.push(format!("x[{i},{j}]"));
            }
        }
        PairRing {
            ring: PolyRing::new(vars, field),
            m,
            n,
        }
    }

    pub fn var_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(1 <= i && i <= self.m && 1 <= j && j <= self.n);
        (i - 1) * self.n + (j - 1)
    }

    pub fn var(&self, i: usize, j: usize) -> Polynomial<F> {
        self.ring.var_poly(self.var_index(i, j))
    }

    /// Lexicographic order induced by
    /// `x[1,1] > x[1,2] > ... > x[1,n] > x[2,1] > ... > x[m,n]`.
    pub fn lex_order(&self) -> TermOrder {
        TermOrder::lex(self.m * self.n)
    }

    /// Reverse lexicographic order induced by
    /// `x[1,n] > x[2,n] > ... > x[m,n] > x[1,n-1] > ... > x[m,1]`.
    pub fn revlex_order(&self) -> TermOrder {
        let mut desc = Vec::with_capacity(self.m * self.n);
        for j in (1..=self.n).rev() {
            for i in 1..=self.m {
                desc.push(self.var_index(i, j));
            }
        }
        TermOrder::new(OrderKind::DegRevLex, desc)
    }

    /// The 2-minor `[i j | k l] = x[i,k] x[j,l] - x[i,l] x[j,k]`.
    pub fn minor(&self, (i, j): (usize, usize), (k, l): (usize, usize)) -> Polynomial<F> {
        assert!(i < j && k < l, "minor indices must be increasing");
        let one = self.ring.field().one();
        let pos = Monomial::var(self.ring.n_vars(), self.var_index(i, k))
            .mul(&Monomial::var(self.ring.n_vars(), self.var_index(j, l)));
        let neg = Monomial::var(self.ring.n_vars(), self.var_index(i, l))
            .mul(&Monomial::var(self.ring.n_vars(), self.var_index(j, k)));
        self.ring
            .term(pos, one.clone())
            .sub(&self.ring, &self.ring.term(neg, one))
    }

    /// The generator order of the linear-quotients test: columns left to
    /// right, rows bottom to top within each column.
    pub fn quotient_sequence(&self) -> Vec<(usize, usize)> {
        let mut seq = Vec::with_capacity(self.m * self.n);
        for j in 1..=self.n {
            for i in (1..=self.m).rev() {
                seq.push((i, j));
            }
        }
        seq
    }
}

/// The `|E(G1)| * |E(G2)|` minors `[i j | k l]` with `{i,j}` an edge of the
/// first graph and `{k,l}` an edge of the second.
pub fn pair_ideal_generators<F: Field>(
    g1: &Graph,
    g2: &Graph,
    pr: &PairRing<F>,
) -> Result<Vec<Polynomial<F>>, GbError> {
    if pr.m != g1.n() || pr.n != g2.n() {
        return Err(GbError::RingSizeMismatch {
            ring_vars: pr.m * pr.n,
            needed: g1.n() * g2.n(),
        });
    }
    let mut gens = Vec::with_capacity(g1.edge_count() * g2.edge_count());
    for (i, j) in g1.edges() {
        for (k, l) in g2.edges() {
            gens.push(pr.minor((i, j), (k, l)));
        }
    }
    Ok(gens)
}

/// Multidegree in `Z^{m+n}`: the variable `x[i,j]` has degree `e_i + e_{j+m}`.
/// Every term must share it, otherwise the polynomial is inhomogeneous.
pub fn multidegree<F: Field>(pr: &PairRing<F>, f: &Polynomial<F>) -> Option<Vec<u32>> {
    let mut common: Option<Vec<u32>> = None;
    for (mono, _) in f.terms() {
        let mut deg = vec![0u32; pr.m + pr.n];
        for i in 1..=pr.m {
            for j in 1..=pr.n {
                let e = mono.exp(pr.var_index(i, j));
                deg[i - 1] += e;
                deg[pr.m + j - 1] += e;
            }
        }
        match &common {
            None => common = Some(deg),
            Some(d) if *d == deg => {}
            Some(_) => return None,
        }
    }
    common
}

/// One step of the linear-quotients test.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QuotientStep {
    /// The variable `(i, j)` being coloned by.
    pub var: (usize, usize),
    pub passed: bool,
    /// A minimal basis element of the quotient, of degree at least two, that
    /// does not reduce to the linear part. Present exactly on failure.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LinearQuotientsReport {
    pub steps: Vec<QuotientStep>,
}

impl LinearQuotientsReport {
    pub fn all_passed(&self) -> bool {
        self.steps.iter().all(|s| s.passed)
    }

    pub fn first_failure(&self) -> Option<&QuotientStep> {
        self.steps.iter().find(|s| !s.passed)
    }
}

/// Walks the variable sequence `x[m,1], ..., x[1,1], x[m,2], ..., x[1,n]`,
/// each time coloning the ideal plus the earlier variables by the next one,
/// and checks the quotient is generated by linear forms on top of what is
/// already there. Stops at the first failing step.
pub fn linear_quotients_check<F: Field>(
    g1: &Graph,
    g2: &Graph,
    pr: &PairRing<F>,
    limits: &GbLimits,
) -> Result<LinearQuotientsReport, GbError> {
    let order = pr.lex_order();
    let ideal = pair_ideal_generators(g1, g2, pr)?;
    let mut current: Vec<Polynomial<F>> = ideal;
    let mut steps = Vec::new();
    for (i, j) in pr.quotient_sequence() {
        let w = pr.var(i, j);
        let quotient = colon_by(&pr.ring, &current, &w, &order, limits)?;
        let quotient_gb = buchberger_reduced(&pr.ring, &quotient, &order, limits)?;
        let mut with_linear: Vec<Polynomial<F>> = current.clone();
        with_linear.extend(
            quotient_gb
                .elements()
                .iter()
                .filter(|e| e.degree() <= 1)
                .cloned(),
        );
        let lower_gb = buchberger_reduced(&pr.ring, &with_linear, &order, limits)?;
        // the quotient always contains the lower ideal, so equality reduces
        // to membership of the quotient basis
        let witness = quotient_gb
            .elements()
            .iter()
            .find(|e| !lower_gb.contains(&pr.ring, e));
        match witness {
            None => {
                steps.push(QuotientStep {
                    var: (i, j),
                    passed: true,
                    witness: None,
                });
                current.push(w);
            }
            Some(e) => {
                steps.push(QuotientStep {
                    var: (i, j),
                    passed: false,
                    witness: Some(e.to_text(&pr.ring, &order)),
                });
                break;
            }
        }
    }
    Ok(LinearQuotientsReport { steps })
}
