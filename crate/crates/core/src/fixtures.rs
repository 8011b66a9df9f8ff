//! Built-in verification fixtures: hand-checked small inputs with pinned
//! outcomes, runnable as a suite from the CLI.

use serde::{Deserialize, Serialize};

use crate::bar::{BarLimits, BettiEngine};
use crate::closed::{brute_force_closed, is_closed, ClosednessCertificate};
use crate::decision::{c_universal_classify, cross_check, decide_pair, PairStatus};
use crate::error::GbError;
use crate::field::PrimeField;
use crate::gb::{buchberger_reduced, colon_by, ideal_equal, GbLimits};
use crate::graph::Graph;
use crate::pair::{linear_quotients_check, pair_ideal_generators, PairRing};
use crate::poly::{parse_poly, Polynomial};

/// The net: a triangle `{2,3,4}` with pendant edges `{1,2}, {3,5}, {4,6}`.
pub fn h1_net() -> Graph {
    Graph::new(6, &[(2, 3), (2, 4), (3, 4), (1, 2), (3, 5), (4, 6)]).unwrap()
}

/// The 3-sun: inner triangle `{1,2,3}`, outer vertices `4, 5, 6` adjacent to
/// `{1,2}`, `{2,3}`, `{1,3}` respectively.
pub fn h2_sun() -> Graph {
    Graph::new(
        6,
        &[
            (1, 2),
            (1, 3),
            (2, 3),
            (1, 4),
            (2, 4),
            (2, 5),
            (3, 5),
            (1, 6),
            (3, 6),
        ],
    )
    .unwrap()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FixtureStatus {
    Pass,
    Fail(String),
    Skipped(String),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FixtureResult {
    pub name: String,
    pub status: FixtureStatus,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FixtureReport {
    pub results: Vec<FixtureResult>,
}

impl FixtureReport {
    pub fn all_passed(&self) -> bool {
        self.results
            .iter()
            .all(|r| !matches!(r.status, FixtureStatus::Fail(_)))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub p: u64,
    pub gb: GbLimits,
    pub bar: BarLimits,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            p: 32003,
            gb: GbLimits::default(),
            bar: BarLimits::default(),
        }
    }
}

fn check(name: &str, run: impl FnOnce() -> Result<(), String>) -> FixtureResult {
    FixtureResult {
        name: name.to_string(),
        status: match run() {
            Ok(()) => FixtureStatus::Pass,
            Err(msg) => FixtureStatus::Fail(msg),
        },
    }
}

fn ensure(cond: bool, msg: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

fn gb_err(e: GbError) -> String {
    e.to_string()
}

/// The six-minor ideal on a 3x3 grid: rows `{1,2}, {1,3}, {2,3}` against
/// columns `{1,2}` and `{1,3}`.
pub fn six_minor_ideal(pr: &PairRing<PrimeField>) -> Vec<Polynomial<PrimeField>> {
    let rows = [(1, 2), (1, 3), (2, 3)];
    let mut gens = Vec::new();
    for cols in [(1, 2), (1, 3)] {
        for &r in &rows {
            gens.push(pr.minor(r, cols));
        }
    }
    gens
}

/// All nine 2-minors of the 3x3 grid.
pub fn all_two_minors(pr: &PairRing<PrimeField>) -> Vec<Polynomial<PrimeField>> {
    let idx = [(1, 2), (1, 3), (2, 3)];
    let mut gens = Vec::new();
    for &r in &idx {
        for &c in &idx {
            gens.push(pr.minor(r, c));
        }
    }
    gens
}

fn six_minor_basis_fixture(cfg: &SuiteConfig) -> Result<(), String> {
    let field = PrimeField::new(cfg.p).map_err(gb_err)?;
    let pr = PairRing::new(3, 3, field);
    let order = pr.lex_order();
    let gens = six_minor_ideal(&pr);
    let gb = buchberger_reduced(&pr.ring, &gens, &order, &cfg.gb).map_err(gb_err)?;

    // expected: the six generators plus four degree-3 binomials obtained by
    // multiplying column-{2,3} minors with first-column variables
    let mut expected: Vec<Polynomial<PrimeField>> = gens.clone();
    for (v, rows) in [
        ((2, 1), (1, 2)),
        ((3, 1), (1, 2)),
        ((3, 1), (1, 3)),
        ((3, 1), (2, 3)),
    ] {
        expected.push(pr.var(v.0, v.1).mul(&pr.ring, &pr.minor(rows, (2, 3))));
    }
    expected.sort_by(|a, b| {
        order.cmp(
            a.leading_term(&order).unwrap().0,
            b.leading_term(&order).unwrap().0,
        )
    });
    ensure(
        gb.elements() == expected.as_slice(),
        &format!(
            "reduced basis has {} elements, expected the 6 generators plus 4 cubics",
            gb.elements().len()
        ),
    )
}

fn six_minor_colon_fixture(cfg: &SuiteConfig) -> Result<(), String> {
    let field = PrimeField::new(cfg.p).map_err(gb_err)?;
    let pr = PairRing::new(3, 3, field);
    let order = pr.lex_order();
    let gens = six_minor_ideal(&pr);
    let x3 = pr.var(3, 1);
    let colon = colon_by(&pr.ring, &gens, &x3, &order, &cfg.gb).map_err(gb_err)?;
    let nine = all_two_minors(&pr);
    let equal = ideal_equal(&pr.ring, &colon, &nine, &order, &cfg.gb).map_err(gb_err)?;
    ensure(equal, "colon by x[3,1] must equal the full minor ideal")?;
    // the colon strictly contains the original ideal
    let same = ideal_equal(&pr.ring, &colon, &gens, &order, &cfg.gb).map_err(gb_err)?;
    ensure(!same, "colon by x[3,1] must be strictly larger than the ideal")
}

fn two_by_three_colon_fixture(cfg: &SuiteConfig) -> Result<(), String> {
    let field = PrimeField::new(cfg.p).map_err(gb_err)?;
    let pr = PairRing::new(2, 3, field);
    let order = pr.lex_order();
    let h1 = pr.minor((1, 2), (1, 2));
    let h2 = pr.minor((1, 2), (2, 3));
    let g = pr.minor((1, 2), (1, 3));
    let colon = colon_by(
        &pr.ring,
        &[h1.clone(), h2.clone()],
        &pr.var(2, 2),
        &order,
        &cfg.gb,
    )
    .map_err(gb_err)?;
    let equal = ideal_equal(&pr.ring, &colon, &[h1, h2, g], &order, &cfg.gb).map_err(gb_err)?;
    ensure(equal, "(h1, h2) : x[2,2] must equal (h1, h2, g)")
}

fn net_labeling_fixture() -> Result<(), String> {
    let h1 = h1_net();
    let cert = is_closed(&h1);
    ensure(
        matches!(cert, ClosednessCertificate::Net(_)),
        "the net must be recognized by a net witness",
    )?;
    ensure(cert.verify(&h1), "net witness must verify")?;
    let brute = brute_force_closed(&h1).map_err(|e| e.to_string())?;
    ensure(brute.is_none(), "no labeling of the net is closed")?;
    // restriction to the first five vertices is closed
    let (h1p, _) = h1.induced(&[1, 2, 3, 4, 5]);
    ensure(
        is_closed(&h1p).is_closed(),
        "the five-vertex restriction is closed",
    )?;
    ensure(
        brute_force_closed(&h1p).map_err(|e| e.to_string())?.is_some(),
        "brute force must find a closed labeling of the restriction",
    )
}

fn koszul_pair_fixture(cfg: &SuiteConfig) -> Result<(), String> {
    let field = PrimeField::new(cfg.p).map_err(gb_err)?;
    let p4 = Graph::path(4);
    let k3 = Graph::complete(3);
    let verdict = decide_pair(&p4, &k3);
    ensure(verdict.status == PairStatus::Koszul, "(P4, K3) is Koszul")?;
    let report = cross_check(&p4, &k3, &verdict, field, &cfg.gb);
    ensure(report.gb_lex_quadratic == Some(true), "lex basis quadratic")?;
    ensure(
        report.gb_revlex_quadratic == Some(true),
        "revlex basis quadratic",
    )?;
    ensure(
        report.linear_quotients_ok == Some(true),
        "linear quotients pass",
    )?;
    ensure(report.consistent, "cross-check consistent")
}

fn double_path_fixture(cfg: &SuiteConfig) -> Result<(), String> {
    let field = PrimeField::new(cfg.p).map_err(gb_err)?;
    let p3 = Graph::path(3);
    let verdict = decide_pair(&p3, &p3);
    ensure(
        verdict.status == PairStatus::NotKoszul,
        "(P3, P3) is not Koszul",
    )?;
    let pr = PairRing::new(3, 3, field);
    let report = linear_quotients_check(&p3, &p3, &pr, &cfg.gb).map_err(gb_err)?;
    let step = report
        .first_failure()
        .ok_or("the quotient walk must fail")?;
    ensure(
        step.var == (2, 1),
        &format!("first failure at x[2,1], got x[{},{}]", step.var.0, step.var.1),
    )?;
    // the cube witness: x[1,2]^2 x[3,3] lies in the failing quotient but not
    // in the ideal plus its linear part
    let order = pr.lex_order();
    let gens = pair_ideal_generators(&p3, &p3, &pr).map_err(gb_err)?;
    let mut lower = gens.clone();
    lower.push(pr.var(3, 1));
    let quotient = colon_by(&pr.ring, &lower, &pr.var(2, 1), &order, &cfg.gb).map_err(gb_err)?;
    let quotient_gb = buchberger_reduced(&pr.ring, &quotient, &order, &cfg.gb).map_err(gb_err)?;
    let quotient_plus_linear: Vec<Polynomial<PrimeField>> = lower
        .iter()
        .cloned()
        .chain(
            quotient_gb
                .elements()
                .iter()
                .filter(|e| e.degree() <= 1)
                .cloned(),
        )
        .collect();
    let lower_gb =
        buchberger_reduced(&pr.ring, &quotient_plus_linear, &order, &cfg.gb).map_err(gb_err)?;
    let cube = parse_poly(&pr.ring, "x[1,2]^2*x[3,3]").map_err(gb_err)?;
    ensure(
        quotient_gb.contains(&pr.ring, &cube),
        "x[1,2]^2 x[3,3] lies in the quotient",
    )?;
    ensure(
        !lower_gb.contains(&pr.ring, &cube),
        "x[1,2]^2 x[3,3] is not explained by linear generators",
    )
}

fn net_pair_fixture() -> Result<(), String> {
    let verdict = decide_pair(&h1_net(), &Graph::complete(3));
    ensure(
        verdict.status == PairStatus::NotKoszul,
        "(net, K3) is not Koszul",
    )?;
    ensure(
        matches!(verdict.certificate1, ClosednessCertificate::Net(_)),
        "certificate is the net witness",
    )
}

fn betti_table_fixture(cfg: &SuiteConfig) -> Result<FixtureStatus, String> {
    let field = PrimeField::new(cfg.p).map_err(gb_err)?;
    let p3 = Graph::path(3);
    let pr = PairRing::new(3, 3, field);
    let gens = pair_ideal_generators(&p3, &p3, &pr).map_err(gb_err)?;
    let gb = buchberger_reduced(&pr.ring, &gens, &pr.lex_order(), &cfg.gb).map_err(gb_err)?;
    let mut engine = BettiEngine::new(pr.ring.clone(), &gb, cfg.bar).map_err(|e| e.to_string())?;
    for (i, j, expect) in [(0, 0, 1usize), (1, 1, 9), (2, 2, 40), (3, 5, 2)] {
        match engine.betti(i, j) {
            Ok(value) => {
                if value != expect {
                    return Err(format!("betti({i},{j}) = {value}, expected {expect}"));
                }
            }
            Err(crate::error::BarError::DimCapExceeded { dim, cap, .. }) => {
                return Ok(FixtureStatus::Skipped(format!(
                    "betti({i},{j}) needs dimension {dim}, cap {cap}"
                )));
            }
            Err(e) => return Err(e.to_string()),
        }
    }
    Ok(FixtureStatus::Pass)
}

fn c_universal_fixture() -> Result<(), String> {
    let (ok, _) = c_universal_classify(&Graph::complete(4), &Graph::complete(5));
    ensure(ok, "pairs of complete graphs are c-universally Koszul")?;
    let (ok, obs) = c_universal_classify(&Graph::path(3), &Graph::complete(3));
    ensure(!ok && obs.is_some(), "a path side breaks the classification")
}

/// Runs the built-in fixtures and reports pass/fail/skip per item.
pub fn verify_fixture_suite(cfg: &SuiteConfig) -> FixtureReport {
    let mut results = vec![
        check("net recognized, no closed labeling among 720", net_labeling_fixture),
        check("six-minor ideal: reduced basis adds four cubics", || {
            six_minor_basis_fixture(cfg)
        }),
        check("six-minor ideal: colon by x[3,1] is the full minor ideal", || {
            six_minor_colon_fixture(cfg)
        }),
        check("two-by-three grid: colon acquires the third minor", || {
            two_by_three_colon_fixture(cfg)
        }),
        check("(P4, K3): Koszul with all algebraic checks", || {
            koszul_pair_fixture(cfg)
        }),
        check("(P3, P3): quotient walk fails at x[2,1] with a cube witness", || {
            double_path_fixture(cfg)
        }),
        check("(net, K3): not Koszul with net certificate", net_pair_fixture),
        check("c-universal classification instances", c_universal_fixture),
    ];
    results.push(FixtureResult {
        name: "residue-field Betti numbers of the double path".into(),
        status: match betti_table_fixture(cfg) {
            Ok(status) => status,
            Err(msg) => FixtureStatus::Fail(msg),
        },
    });
    FixtureReport { results }
}
