//! Registry of checkable claims about Borsuk numbers of matroids.
//!
//! Each claim has a stable id, a set of default desk-scale instances, and a
//! checker that recomputes everything it asserts from scratch. The ids are
//! the vocabulary of the `verify` CLI subcommand; reports are emitted in a
//! machine-readable form and never assert more than what was computed.

use std::time::Instant;

use crate::coloring::{
    borsuk_number, chromatic_number, has_borsuk_property, rankr_part_bound, rankr_partition,
    theta_partition, validate_certificate, BorsukValue, ColoringError,
};
use crate::dsatur::Budget;
use crate::families::{
    catalan, catalan_minus, fano, graphic, non_pappus, sbip_gadget, sbip_graphic_example, theta,
    uniform, v_line, vertex_replacement, SimpleGraph,
};
use crate::graphs::{
    categorical_product, kneser_graph, schrijver_graph, subgraph_embedding_exists, EmbedOutcome,
};
use crate::matroid::{Label, Matroid};
use crate::verify::{
    check_hedetniemi_instance, enumerate_matroids, has_bip, has_strong_bip,
    has_two_disjoint_bases, Status, VerificationReport, VerifyError,
};

/// All registered claim ids, sorted.
pub fn claim_ids() -> Vec<&'static str> {
    let mut ids = vec![
        "thm:main",
        "thm:rank2",
        "thm:rankr",
        "prop:dual",
        "prop:conn",
        "cor:conn",
        "prop:ser",
        "lem:kneser",
        "prop:upper",
        "prop:pappus",
        "prop:catalan",
        "prop:theta_n",
        "prop:rank2",
        "lem:connec",
        "prop:sbip-ser",
        "prop:sbip-graphic",
        "prop:graphic-bn",
        "id:hedet",
        "quest:hedet",
        "eq:ser-par",
        "prop:numb",
    ];
    ids.sort_unstable();
    ids
}

/// Runs one registered claim. Claims quantified over a single matroid accept
/// an explicit instance; the rest run their default instance set.
pub fn check_claim(
    id: &str,
    instance: Option<&Matroid>,
    budget: &Budget,
) -> Result<Vec<VerificationReport>, VerifyError> {
    let single = |default: Vec<(String, Matroid)>| -> Vec<(String, Matroid)> {
        match instance {
            Some(m) => vec![("given instance".to_owned(), m.clone())],
            None => default,
        }
    };
    match id {
        "thm:main" => Ok(thm_main(single(default_main_instances()), budget)),
        "thm:rank2" => Ok(thm_rank2(single(default_rank2_instances()), budget)),
        "thm:rankr" => Ok(thm_rankr(single(default_rankr_instances()), budget)),
        "prop:dual" => Ok(prop_dual(single(default_dual_instances()), budget)),
        "lem:kneser" => Ok(lem_kneser(single(default_kneser_instances()), budget)),
        "prop:upper" => Ok(prop_upper(single(default_upper_instances()), budget)),
        other => {
            if instance.is_some() {
                return Err(VerifyError::BadInstance(other.to_owned()));
            }
            match other {
                "prop:conn" => Ok(prop_conn(budget)),
                "cor:conn" => Ok(cor_conn(budget)),
                "prop:ser" => Ok(prop_ser(budget)),
                "prop:pappus" => Ok(prop_pappus(budget)),
                "prop:catalan" => Ok(prop_catalan(budget)),
                "prop:theta_n" => Ok(prop_theta_n(budget)),
                "prop:rank2" => prop_rank2(budget),
                "lem:connec" => Ok(lem_connec(budget)),
                "prop:sbip-ser" => Ok(prop_sbip_ser(budget)),
                "prop:sbip-graphic" => Ok(prop_sbip_graphic()),
                "prop:graphic-bn" => Ok(prop_graphic_bn(budget)),
                "id:hedet" => Ok(id_hedet(budget)),
                "quest:hedet" => Ok(quest_hedet(budget)),
                "eq:ser-par" => Ok(eq_ser_par()),
                "prop:numb" => Ok(prop_numb()),
                unknown => Err(VerifyError::UnknownClaim(unknown.to_owned())),
            }
        }
    }
}

/// Runs every registered claim with its defaults, sorted by claim id and
/// instance.
pub fn check_all_claims(budget: &Budget) -> Result<Vec<VerificationReport>, VerifyError> {
    let mut reports = Vec::new();
    for id in claim_ids() {
        reports.extend(check_claim(id, None, budget)?);
    }
    reports.sort_by(|a, b| (&a.claim_id, &a.instance).cmp(&(&b.claim_id, &b.instance)));
    Ok(reports)
}

fn f_of(m: &Matroid, budget: &Budget) -> Result<BorsukValue, ColoringError> {
    Ok(borsuk_number(m, budget)?.value)
}

fn inconclusive(
    claim: &str,
    instance: &str,
    expected: &str,
    started: Instant,
    bounds: (usize, usize),
) -> VerificationReport {
    VerificationReport::new(
        claim,
        instance,
        expected,
        format!("budget exhausted within [{}, {}]", bounds.0, bounds.1),
        Status::Inconclusive,
        started,
    )
}

macro_rules! try_value {
    ($claim:expr, $instance:expr, $expected:expr, $started:expr, $reports:expr, $value:expr) => {
        match $value {
            Ok(v) => v,
            Err(ColoringError::BudgetExhausted { lower, upper }) => {
                $reports.push(inconclusive(
                    $claim,
                    $instance,
                    $expected,
                    $started,
                    (lower, upper),
                ));
                continue;
            }
            Err(e) => {
                $reports.push(VerificationReport::new(
                    $claim,
                    $instance,
                    $expected,
                    format!("error: {e}"),
                    Status::Fail,
                    $started,
                ));
                continue;
            }
        }
    };
}

fn pass_fail(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn default_main_instances() -> Vec<(String, Matroid)> {
    vec![
        ("uniform(2,4)".into(), uniform(2, 4).unwrap()),
        ("uniform(2,5)".into(), uniform(2, 5).unwrap()),
        ("uniform(1,3)".into(), uniform(1, 3).unwrap()),
        ("theta(1)".into(), theta(1).unwrap()),
        ("catalan(2,4)".into(), catalan(2, 4).unwrap()),
        ("graphic(K4)".into(), graphic(&SimpleGraph::complete(4)).unwrap()),
        ("fano".into(), fano()),
        ("v_line(2)".into(), v_line(2).unwrap()),
    ]
}

/// A matroid such that it or its dual has two disjoint bases has the Borsuk
/// property.
fn thm_main(instances: Vec<(String, Matroid)>, budget: &Budget) -> Vec<VerificationReport> {
    let claim = "thm:main";
    let expected = "f(M) <= n - c + 1";
    let mut reports = Vec::new();
    for (name, m) in instances {
        let started = Instant::now();
        if !has_two_disjoint_bases(&m) && !has_two_disjoint_bases(&m.dual()) {
            reports.push(VerificationReport::new(
                claim,
                &name,
                expected,
                "hypothesis not satisfied: neither the matroid nor its dual has two disjoint bases",
                Status::Skipped,
                started,
            ));
            continue;
        }
        let evidence = try_value!(
            claim,
            &name,
            expected,
            started,
            reports,
            has_borsuk_property(&m, budget)
        );
        reports.push(
            VerificationReport::new(
                claim,
                &name,
                expected,
                format!(
                    "f = {}, n - c + 1 = {}",
                    evidence.value, evidence.bound
                ),
                pass_fail(evidence.holds),
                started,
            )
            .with_instance_json(&m),
        );
    }
    reports
}

fn default_rank2_instances() -> Vec<(String, Matroid)> {
    vec![
        ("uniform(1,2)".into(), uniform(1, 2).unwrap()),
        ("uniform(1,3)".into(), uniform(1, 3).unwrap()),
        ("uniform(2,4)".into(), uniform(2, 4).unwrap()),
        (
            "uniform(2,3)+loop".into(),
            uniform(2, 3).unwrap().direct_sum(&uniform(0, 1).unwrap()),
        ),
        ("theta(2)".into(), theta(2).unwrap()),
    ]
}

/// Every matroid of rank at most two with at least two bases has the Borsuk
/// property.
fn thm_rank2(instances: Vec<(String, Matroid)>, budget: &Budget) -> Vec<VerificationReport> {
    let claim = "thm:rank2";
    let expected = "rank <= 2 and >= 2 bases imply f(M) <= n - c + 1";
    let mut reports = Vec::new();
    for (name, m) in instances {
        let started = Instant::now();
        if m.rank() > 2 || m.bases().len() < 2 {
            reports.push(VerificationReport::new(
                claim,
                &name,
                expected,
                format!(
                    "hypothesis not satisfied: rank {} with {} bases",
                    m.rank(),
                    m.bases().len()
                ),
                Status::Skipped,
                started,
            ));
            continue;
        }
        let evidence = try_value!(
            claim,
            &name,
            expected,
            started,
            reports,
            has_borsuk_property(&m, budget)
        );
        reports.push(
            VerificationReport::new(
                claim,
                &name,
                expected,
                format!("f = {}, bound = {}", evidence.value, evidence.bound),
                pass_fail(evidence.holds),
                started,
            )
            .with_instance_json(&m),
        );
    }
    reports
}

fn default_rankr_instances() -> Vec<(String, Matroid)> {
    vec![
        ("uniform(3,4)".into(), uniform(3, 4).unwrap()),
        ("uniform(4,6)".into(), uniform(4, 6).unwrap()),
        ("theta(5)".into(), theta(5).unwrap()),
        ("theta(6)".into(), theta(6).unwrap()),
        (
            "graphic(sbip example)".into(),
            graphic(&sbip_graphic_example()).unwrap(),
        ),
    ]
}

/// A connected rank-r matroid whose bases pairwise intersect has Borsuk
/// number at most `2^(r-2) (r+2)^2`, witnessed constructively.
fn thm_rankr(instances: Vec<(String, Matroid)>, budget: &Budget) -> Vec<VerificationReport> {
    let claim = "thm:rankr";
    let mut reports = Vec::new();
    for (name, m) in instances {
        let started = Instant::now();
        let r = m.rank();
        let expected = format!("f(M) <= 2^(r-2) (r+2)^2 with r = {r}, via a valid partition");
        if m.bases().len() < 2
            || has_two_disjoint_bases(&m)
            || m.connected_components().count() != 1
        {
            reports.push(VerificationReport::new(
                claim,
                &name,
                &expected,
                "hypothesis not satisfied: needs a connected matroid with >= 2 pairwise intersecting bases",
                Status::Skipped,
                started,
            ));
            continue;
        }
        let cert = match rankr_partition(&m) {
            Ok(c) => c,
            Err(e) => {
                reports.push(VerificationReport::new(
                    claim,
                    &name,
                    &expected,
                    format!("construction failed: {e}"),
                    Status::Fail,
                    started,
                ));
                continue;
            }
        };
        let bound = rankr_part_bound(r);
        let valid = validate_certificate(&m, &cert).is_valid();
        let f = try_value!(claim, &name, &expected, started, reports, f_of(&m, budget));
        let within = (cert.part_count() as u128) <= bound
            && f <= BorsukValue::Finite(cert.part_count());
        reports.push(
            VerificationReport::new(
                claim,
                &name,
                &expected,
                format!(
                    "partition: {} parts (bound {bound}), valid = {valid}, f = {f}",
                    cert.part_count()
                ),
                pass_fail(valid && within),
                started,
            )
            .with_instance_json(&m),
        );
    }
    reports
}

fn default_dual_instances() -> Vec<(String, Matroid)> {
    vec![
        ("theta(3)".into(), theta(3).unwrap()),
        ("uniform(2,5)".into(), uniform(2, 5).unwrap()),
        ("fano".into(), fano()),
        ("catalan(2,3)".into(), catalan(2, 3).unwrap()),
        (
            "uniform(2,3)+loop".into(),
            uniform(2, 3).unwrap().direct_sum(&uniform(0, 1).unwrap()),
        ),
        ("uniform(1,1)".into(), uniform(1, 1).unwrap()),
    ]
}

/// `f(M) = f(M*)`.
fn prop_dual(instances: Vec<(String, Matroid)>, budget: &Budget) -> Vec<VerificationReport> {
    let claim = "prop:dual";
    let expected = "f(M) == f(M*)";
    let mut reports = Vec::new();
    for (name, m) in instances {
        let started = Instant::now();
        let f = try_value!(claim, &name, expected, started, reports, f_of(&m, budget));
        let f_dual = try_value!(
            claim,
            &name,
            expected,
            started,
            reports,
            f_of(&m.dual(), budget)
        );
        reports.push(
            VerificationReport::new(
                claim,
                &name,
                expected,
                format!("f(M) = {f}, f(M*) = {f_dual}"),
                pass_fail(f == f_dual),
                started,
            )
            .with_instance_json(&m),
        );
    }
    reports
}

/// `f(M (+) M') <= min(f(M), f(M'))`.
fn prop_conn(budget: &Budget) -> Vec<VerificationReport> {
    let claim = "prop:conn";
    let expected = "f(M (+) M') <= min(f(M), f(M'))";
    let pairs = [
        ("uniform(2,4) (+) uniform(1,3)", uniform(2, 4).unwrap(), uniform(1, 3).unwrap()),
        ("uniform(2,5) (+) theta(2)", uniform(2, 5).unwrap(), theta(2).unwrap()),
        ("fano (+) uniform(1,2)", fano(), uniform(1, 2).unwrap()),
    ];
    let mut reports = Vec::new();
    for (name, a, b) in pairs {
        let started = Instant::now();
        let fa = try_value!(claim, name, expected, started, reports, f_of(&a, budget));
        let fb = try_value!(claim, name, expected, started, reports, f_of(&b, budget));
        let sum = a.direct_sum(&b);
        let fs = try_value!(claim, name, expected, started, reports, f_of(&sum, budget));
        reports.push(
            VerificationReport::new(
                claim,
                name,
                expected,
                format!("f(M) = {fa}, f(M') = {fb}, f(sum) = {fs}"),
                pass_fail(fs <= fa.min(fb)),
                started,
            )
            .with_instance_json(&sum),
        );
    }
    reports
}

/// If one summand has the Borsuk property, so does the direct sum.
fn cor_conn(budget: &Budget) -> Vec<VerificationReport> {
    let claim = "cor:conn";
    let expected = "one summand with the Borsuk property implies the sum has it";
    let pairs = [
        ("uniform(2,4) (+) uniform(1,1)", uniform(2, 4).unwrap(), uniform(1, 1).unwrap()),
        ("theta(3) (+) uniform(1,1)", theta(3).unwrap(), uniform(1, 1).unwrap()),
        ("uniform(2,3) (+) uniform(2,4)", uniform(2, 3).unwrap(), uniform(2, 4).unwrap()),
    ];
    let mut reports = Vec::new();
    for (name, a, b) in pairs {
        let started = Instant::now();
        let ea = try_value!(
            claim,
            name,
            expected,
            started,
            reports,
            has_borsuk_property(&a, budget)
        );
        let eb = try_value!(
            claim,
            name,
            expected,
            started,
            reports,
            has_borsuk_property(&b, budget)
        );
        if !ea.holds && !eb.holds {
            reports.push(VerificationReport::new(
                claim,
                name,
                expected,
                "hypothesis not satisfied: neither summand has the property",
                Status::Skipped,
                started,
            ));
            continue;
        }
        let sum = a.direct_sum(&b);
        let es = try_value!(
            claim,
            name,
            expected,
            started,
            reports,
            has_borsuk_property(&sum, budget)
        );
        reports.push(
            VerificationReport::new(
                claim,
                name,
                expected,
                format!(
                    "summands hold = ({}, {}), sum: f = {} <= {}: {}",
                    ea.holds, eb.holds, es.value, es.bound, es.holds
                ),
                pass_fail(es.holds),
                started,
            )
            .with_instance_json(&sum),
        );
    }
    reports
}

fn value_add(a: BorsukValue, b: BorsukValue) -> BorsukValue {
    match (a, b) {
        (BorsukValue::Finite(x), BorsukValue::Finite(y)) => BorsukValue::Finite(x + y),
        _ => BorsukValue::Infinite,
    }
}

/// `f(Ser(M, M')) <= f(M) + f(M')`, and `<= min(f(M), f(M'))` when M has two
/// disjoint bases avoiding the shared element.
fn prop_ser(budget: &Budget) -> Vec<VerificationReport> {
    let claim = "prop:ser";
    let expected = "f(Ser) <= f(M) + f(M'), and <= min when two disjoint bases avoid p";
    let p: Label = 1.into();
    let pairs = [
        ("Ser(uniform(2,5), uniform(2,5))", uniform(2, 5).unwrap(), uniform(2, 5).unwrap()),
        ("Ser(uniform(2,4), uniform(1,3))", uniform(2, 4).unwrap(), uniform(1, 3).unwrap()),
        ("Ser(uniform(3,4), uniform(1,4))", uniform(3, 4).unwrap(), uniform(1, 4).unwrap()),
    ];
    let mut reports = Vec::new();
    for (name, a, b) in pairs {
        let started = Instant::now();
        let ser = match a.series_connection(&p, &b, &p) {
            Ok(s) => s,
            Err(e) => {
                reports.push(VerificationReport::new(
                    claim,
                    name,
                    expected,
                    format!("connection failed: {e}"),
                    Status::Fail,
                    started,
                ));
                continue;
            }
        };
        let fa = try_value!(claim, name, expected, started, reports, f_of(&a, budget));
        let fb = try_value!(claim, name, expected, started, reports, f_of(&b, budget));
        let fs = try_value!(claim, name, expected, started, reports, f_of(&ser, budget));
        let sum_ok = fs <= value_add(fa, fb);
        let p_index = a.index_of(&p).expect("shared element");
        let min_applies = a.bases().iter().enumerate().any(|(i, &x)| {
            !x.contains(p_index)
                && a.bases()
                    .iter()
                    .skip(i + 1)
                    .any(|&y| !y.contains(p_index) && x.is_disjoint_from(y))
        });
        let min_ok = !min_applies || fs <= fa.min(fb);
        reports.push(
            VerificationReport::new(
                claim,
                name,
                expected,
                format!(
                    "f(M) = {fa}, f(M') = {fb}, f(Ser) = {fs}, min-variant applies = {min_applies}"
                ),
                pass_fail(sum_ok && min_ok),
                started,
            )
            .with_instance_json(&ser),
        );
    }
    reports
}

fn default_kneser_instances() -> Vec<(String, Matroid)> {
    vec![
        ("uniform(2,4)".into(), uniform(2, 4).unwrap()),
        ("uniform(2,5)".into(), uniform(2, 5).unwrap()),
        ("theta(2)".into(), theta(2).unwrap()),
        ("catalan(2,3)".into(), catalan(2, 3).unwrap()),
        ("graphic(K4)".into(), graphic(&SimpleGraph::complete(4)).unwrap()),
    ]
}

/// For a matroid with two disjoint bases, `chi(KG(M)) = f(M)`.
fn lem_kneser(instances: Vec<(String, Matroid)>, budget: &Budget) -> Vec<VerificationReport> {
    let claim = "lem:kneser";
    let expected = "chi(KG(M)) == f(M)";
    let mut reports = Vec::new();
    for (name, m) in instances {
        let started = Instant::now();
        if !has_two_disjoint_bases(&m) {
            reports.push(VerificationReport::new(
                claim,
                &name,
                expected,
                "hypothesis not satisfied: no two disjoint bases",
                Status::Skipped,
                started,
            ));
            continue;
        }
        let kg = match kneser_graph(&m) {
            Ok(g) => g,
            Err(e) => {
                reports.push(VerificationReport::new(
                    claim,
                    &name,
                    expected,
                    format!("error: {e}"),
                    Status::Fail,
                    started,
                ));
                continue;
            }
        };
        let chi = try_value!(
            claim,
            &name,
            expected,
            started,
            reports,
            chromatic_number(&kg, budget).map(|(k, _)| k)
        );
        let f = try_value!(claim, &name, expected, started, reports, f_of(&m, budget));
        reports.push(
            VerificationReport::new(
                claim,
                &name,
                expected,
                format!("chi(KG) = {chi}, f = {f}"),
                pass_fail(BorsukValue::Finite(chi) == f),
                started,
            )
            .with_instance_json(&m),
        );
    }
    reports
}

fn default_upper_instances() -> Vec<(String, Matroid)> {
    vec![
        ("fano".into(), fano()),
        ("v_line(5)".into(), v_line(5).unwrap()),
        ("uniform(2,5)".into(), uniform(2, 5).unwrap()),
        (
            "graphic(sbip example)".into(),
            graphic(&sbip_graphic_example()).unwrap(),
        ),
        ("theta(5)".into(), theta(5).unwrap()),
    ]
}

/// `chi(KG(M)) <= min |C*|` and, when `n >= 2 rk - 1`,
/// `chi(KG(M)) <= n - 2 rk + 2`.
fn prop_upper(instances: Vec<(String, Matroid)>, budget: &Budget) -> Vec<VerificationReport> {
    let claim = "prop:upper";
    let expected = "chi(KG(M)) <= min cocircuit size, and <= n - 2 rk + 2 when applicable";
    let mut reports = Vec::new();
    for (name, m) in instances {
        let started = Instant::now();
        let kg = match kneser_graph(&m) {
            Ok(g) => g,
            Err(e) => {
                reports.push(VerificationReport::new(
                    claim,
                    &name,
                    expected,
                    format!("error: {e}"),
                    Status::Fail,
                    started,
                ));
                continue;
            }
        };
        let chi = try_value!(
            claim,
            &name,
            expected,
            started,
            reports,
            chromatic_number(&kg, budget).map(|(k, _)| k)
        );
        let min_cocircuit = m
            .cocircuits()
            .iter()
            .map(|c| c.card())
            .min()
            .unwrap_or(usize::MAX);
        let coc_ok = chi <= min_cocircuit;
        let (n, r) = (m.n(), m.rank());
        let kneser_bound = (n + 1 >= 2 * r).then(|| n + 2 - 2 * r);
        let kneser_ok = kneser_bound.is_none_or(|b| chi <= b);
        reports.push(
            VerificationReport::new(
                claim,
                &name,
                expected,
                format!(
                    "chi = {chi}, min |C*| = {min_cocircuit}, n - 2 rk + 2 = {kneser_bound:?}"
                ),
                pass_fail(coc_ok && kneser_ok),
                started,
            )
            .with_instance_json(&m),
        );
    }
    reports
}

/// `chi(KG(F7)) = 3` and `chi(KG(non-Pappus)) = 5`, with the corresponding
/// Schrijver graphs embedded as subgraphs.
fn prop_pappus(budget: &Budget) -> Vec<VerificationReport> {
    let claim = "prop:pappus";
    let mut reports = Vec::new();
    for (name, m, sg_params, expected_chi) in [
        ("fano", fano(), (7usize, 3usize), 3usize),
        ("non-pappus", non_pappus(), (9, 3), 5),
    ] {
        let started = Instant::now();
        let expected = format!("chi(KG) == {expected_chi} and SG{sg_params:?} embeds");
        let kg = kneser_graph(&m).expect("kneser graph");
        let chi = try_value!(
            claim,
            name,
            &expected,
            started,
            reports,
            chromatic_number(&kg, budget).map(|(k, _)| k)
        );
        let sg = schrijver_graph(sg_params.0, sg_params.1).expect("schrijver graph");
        let embeds = matches!(
            subgraph_embedding_exists(&sg, &kg, 50_000_000),
            EmbedOutcome::Found(_)
        );
        reports.push(
            VerificationReport::new(
                claim,
                name,
                &expected,
                format!("chi = {chi}, embedding found = {embeds}"),
                pass_fail(chi == expected_chi && embeds),
                started,
            )
            .with_instance_json(&m),
        );
    }
    reports
}

/// `chi(KG(C(r,m))) = chi(KG(C^-(r,m))) = m - r + 2`.
fn prop_catalan(budget: &Budget) -> Vec<VerificationReport> {
    let claim = "prop:catalan";
    let mut reports = Vec::new();
    for (r, m) in [(2usize, 3usize), (2, 4), (3, 5)] {
        let started = Instant::now();
        let name = format!("catalan({r},{m})");
        let expected = format!("chi(KG(C)) == chi(KG(C-)) == {}", m - r + 2);
        let full = catalan(r, m).unwrap();
        let minus = catalan_minus(r, m).unwrap();
        let chi_full = try_value!(
            claim,
            &name,
            &expected,
            started,
            reports,
            chromatic_number(&kneser_graph(&full).expect("kg"), budget).map(|(k, _)| k)
        );
        let chi_minus = try_value!(
            claim,
            &name,
            &expected,
            started,
            reports,
            chromatic_number(&kneser_graph(&minus).expect("kg"), budget).map(|(k, _)| k)
        );
        reports.push(
            VerificationReport::new(
                claim,
                &name,
                &expected,
                format!("chi(KG(C)) = {chi_full}, chi(KG(C-)) = {chi_minus}"),
                pass_fail(chi_full == m - r + 2 && chi_minus == m - r + 2),
                started,
            )
            .with_instance_json(&full),
        );
    }
    reports
}

/// Theta matroids: exact small values, and for `n >= 5` the strong basis
/// intersection property plus a validating `n - 2`-part partition.
fn prop_theta_n(budget: &Budget) -> Vec<VerificationReport> {
    let claim = "prop:theta_n";
    let mut reports = Vec::new();
    {
        let started = Instant::now();
        let expected = "f(theta(1)) == inf";
        let f = borsuk_number(&theta(1).unwrap(), budget)
            .map(|r| r.value)
            .unwrap_or(BorsukValue::Finite(0));
        reports.push(VerificationReport::new(
            claim,
            "theta(1)",
            expected,
            format!("f = {f}"),
            pass_fail(f == BorsukValue::Infinite),
            started,
        ));
    }
    for n in 2..=4usize {
        let started = Instant::now();
        let name = format!("theta({n})");
        let expected = "f == 2";
        let m = theta(n).unwrap();
        let f = try_value!(claim, &name, expected, started, reports, f_of(&m, budget));
        reports.push(
            VerificationReport::new(
                claim,
                &name,
                expected,
                format!("f = {f}"),
                pass_fail(f == BorsukValue::Finite(2)),
                started,
            )
            .with_instance_json(&m),
        );
    }
    for n in 5..=6usize {
        let started = Instant::now();
        let name = format!("theta({n})");
        let expected = format!("strong bip and a valid partition with <= {} parts", n - 2);
        let m = theta(n).unwrap();
        let strong = has_strong_bip(&m);
        let cert = match theta_partition(n) {
            Ok(c) => c,
            Err(e) => {
                reports.push(VerificationReport::new(
                    claim,
                    &name,
                    &expected,
                    format!("construction failed: {e}"),
                    Status::Fail,
                    started,
                ));
                continue;
            }
        };
        let valid = validate_certificate(&m, &cert).is_valid();
        reports.push(
            VerificationReport::new(
                claim,
                &name,
                &expected,
                format!(
                    "strong bip = {strong}, parts = {}, valid = {valid}",
                    cert.part_count()
                ),
                pass_fail(strong && valid && cert.part_count() <= n - 2),
                started,
            )
            .with_instance_json(&m),
        );
    }
    reports
}

/// Exhaustive: every rank-two matroid with at least two bases and the strong
/// basis intersection property has a loop or a coloop.
fn prop_rank2(_budget: &Budget) -> Result<Vec<VerificationReport>, VerifyError> {
    let claim = "prop:rank2";
    let expected = "strong bip and >= 2 bases imply a loop or a coloop";
    let mut reports = Vec::new();
    for n in 2..=6usize {
        let started = Instant::now();
        let name = format!("all rank-2 basis systems on [{n}]");
        let mut checked = 0usize;
        let mut failures = 0usize;
        for m in enumerate_matroids(n, 2)? {
            if m.bases().len() < 2 || !has_strong_bip(&m) {
                continue;
            }
            checked += 1;
            let has_loop_or_coloop = !m.loops().is_empty() || !m.coloops().is_empty();
            if !has_loop_or_coloop {
                failures += 1;
            }
        }
        reports.push(VerificationReport::new(
            claim,
            &name,
            expected,
            format!("{checked} instances with strong bip, {failures} without loop or coloop"),
            pass_fail(failures == 0),
            started,
        ));
    }
    Ok(reports)
}

/// Series connections inherit the basis intersection property from either
/// side; parallel connections inherit it when one side has pairwise basis
/// intersections of size at least two.
fn lem_connec(_budget: &Budget) -> Vec<VerificationReport> {
    let claim = "lem:connec";
    let p: Label = 1.into();
    let mut reports = Vec::new();
    let ser_pairs = [
        ("Ser(uniform(3,4), uniform(2,4))", uniform(3, 4).unwrap(), uniform(2, 4).unwrap()),
        ("Ser(uniform(2,4), uniform(3,4))", uniform(2, 4).unwrap(), uniform(3, 4).unwrap()),
        ("Ser(theta(2), uniform(2,4))", theta(2).unwrap(), uniform(2, 4).unwrap()),
    ];
    for (name, a, b) in ser_pairs {
        let started = Instant::now();
        let expected = "bip(M) or bip(M') implies bip(Ser(M, M'))";
        if !has_bip(&a) && !has_bip(&b) {
            reports.push(VerificationReport::new(
                claim,
                name,
                expected,
                "hypothesis not satisfied: neither side has bip",
                Status::Skipped,
                started,
            ));
            continue;
        }
        let glue_a = a.labels()[0].clone();
        let glue_b = b.labels()[0].clone();
        match a.series_connection(&glue_a, &b, &glue_b) {
            Ok(ser) => {
                let ok = has_bip(&ser);
                reports.push(
                    VerificationReport::new(
                        claim,
                        name,
                        expected,
                        format!("bip(Ser) = {ok}"),
                        pass_fail(ok),
                        started,
                    )
                    .with_instance_json(&ser),
                );
            }
            Err(e) => reports.push(VerificationReport::new(
                claim,
                name,
                expected,
                format!("connection failed: {e}"),
                Status::Fail,
                started,
            )),
        }
    }
    let par_pairs = [
        ("Par(uniform(3,4), uniform(2,4))", uniform(3, 4).unwrap(), uniform(2, 4).unwrap()),
        ("Par(uniform(4,6), uniform(2,5))", uniform(4, 6).unwrap(), uniform(2, 5).unwrap()),
    ];
    for (name, a, b) in par_pairs {
        let started = Instant::now();
        let expected = "pairwise basis intersections >= 2 in M imply bip(Par(M, M'))";
        let min_intersection = {
            let bases = a.bases();
            let mut s = usize::MAX;
            for (i, &x) in bases.iter().enumerate() {
                for &y in &bases[i + 1..] {
                    s = s.min(x.intersection(y).card());
                }
            }
            s
        };
        if min_intersection < 2 {
            reports.push(VerificationReport::new(
                claim,
                name,
                expected,
                format!("hypothesis not satisfied: min intersection {min_intersection}"),
                Status::Skipped,
                started,
            ));
            continue;
        }
        match a.parallel_connection(&p, &b, &p) {
            Ok(par) => {
                let ok = has_bip(&par);
                reports.push(
                    VerificationReport::new(
                        claim,
                        name,
                        expected,
                        format!("bip(Par) = {ok}"),
                        pass_fail(ok),
                        started,
                    )
                    .with_instance_json(&par),
                );
            }
            Err(e) => reports.push(VerificationReport::new(
                claim,
                name,
                expected,
                format!("connection failed: {e}"),
                Status::Fail,
                started,
            )),
        }
    }
    reports
}

/// When every two bases of M intersect in at least two elements,
/// `Ser(M, M*)` is connected with the strong basis intersection property.
fn prop_sbip_ser(_budget: &Budget) -> Vec<VerificationReport> {
    let claim = "prop:sbip-ser";
    let expected = "Ser(M, M*) is connected with strong bip";
    let p: Label = 1.into();
    let mut reports = Vec::new();
    for (m_par, n_par) in [(3usize, 1usize), (4, 2)] {
        let started = Instant::now();
        let name = format!("uniform({m_par},{})", m_par + n_par);
        let m = uniform(m_par, m_par + n_par).unwrap();
        let ser = match m.series_connection(&p, &m.dual(), &p) {
            Ok(s) => s,
            Err(e) => {
                reports.push(VerificationReport::new(
                    claim,
                    &name,
                    expected,
                    format!("connection failed: {e}"),
                    Status::Fail,
                    started,
                ));
                continue;
            }
        };
        let connected = ser.connected_components().count() == 1;
        let strong = has_strong_bip(&ser);
        reports.push(
            VerificationReport::new(
                claim,
                &name,
                expected,
                format!("connected = {connected}, strong bip = {strong}"),
                pass_fail(connected && strong),
                started,
            )
            .with_instance_json(&ser),
        );
    }
    reports
}

/// When `M(H)` and `M*(L)` both have the basis intersection property, the
/// graphic matroid of the replacement graph has the strong version.
fn prop_sbip_graphic() -> Vec<VerificationReport> {
    let claim = "prop:sbip-graphic";
    let expected = "bip(M(H)) and bip(M*(L)) imply strong bip(M(G))";
    let mut reports = Vec::new();
    let instances: Vec<(&str, SimpleGraph, usize, SimpleGraph, Vec<(usize, usize)>)> = vec![
        ("K3 patched with the planar gadget", SimpleGraph::complete(3), 2, sbip_gadget(), vec![(1, 3), (2, 0)]),
        ("C4 patched with the planar gadget", SimpleGraph::cycle(4), 3, sbip_gadget(), vec![(2, 0), (3, 3)]),
        ("K4 patched with K4", SimpleGraph::complete(4), 3, SimpleGraph::complete(4), vec![(3, 0), (4, 1), (5, 2)]),
    ];
    for (name, host, v0, patch, attach) in instances {
        let started = Instant::now();
        let bip_host = has_bip(&graphic(&host).expect("host matroid"));
        let bip_dual_patch = has_bip(&graphic(&patch).expect("patch matroid").dual());
        if !bip_host || !bip_dual_patch {
            reports.push(VerificationReport::new(
                claim,
                name,
                expected,
                format!(
                    "hypothesis not satisfied: bip(M(H)) = {bip_host}, bip(M*(L)) = {bip_dual_patch}"
                ),
                Status::Skipped,
                started,
            ));
            continue;
        }
        match vertex_replacement(&host, v0, &patch, &attach) {
            Ok(g) => {
                let m = graphic(&g).expect("replacement matroid");
                let strong = has_strong_bip(&m);
                let connected = m.connected_components().count() == 1;
                reports.push(
                    VerificationReport::new(
                        claim,
                        name,
                        expected,
                        format!("strong bip = {strong}, connected = {connected}"),
                        pass_fail(strong),
                        started,
                    )
                    .with_instance_json(&m),
                );
            }
            Err(e) => reports.push(VerificationReport::new(
                claim,
                name,
                expected,
                format!("replacement failed: {e}"),
                Status::Fail,
                started,
            )),
        }
    }
    reports
}

/// If `M(L)` has two disjoint spanning trees, `f(M(G)) <= f(M(H))`.
fn prop_graphic_bn(budget: &Budget) -> Vec<VerificationReport> {
    let claim = "prop:graphic-bn";
    let expected = "f(M(G)) <= f(M(H))";
    let mut reports = Vec::new();
    let instances: Vec<(&str, SimpleGraph, usize, SimpleGraph, Vec<(usize, usize)>)> = vec![
        ("K3 patched with K4", SimpleGraph::complete(3), 2, SimpleGraph::complete(4), vec![(1, 0), (2, 1)]),
        ("C4 patched with K4", SimpleGraph::cycle(4), 3, SimpleGraph::complete(4), vec![(2, 0), (3, 1)]),
    ];
    for (name, host, v0, patch, attach) in instances {
        let started = Instant::now();
        let patch_matroid = graphic(&patch).expect("patch matroid");
        if !has_two_disjoint_bases(&patch_matroid) {
            reports.push(VerificationReport::new(
                claim,
                name,
                expected,
                "hypothesis not satisfied: M(L) has no two disjoint spanning trees",
                Status::Skipped,
                started,
            ));
            continue;
        }
        let g = match vertex_replacement(&host, v0, &patch, &attach) {
            Ok(g) => g,
            Err(e) => {
                reports.push(VerificationReport::new(
                    claim,
                    name,
                    expected,
                    format!("replacement failed: {e}"),
                    Status::Fail,
                    started,
                ));
                continue;
            }
        };
        let mg = graphic(&g).expect("replacement matroid");
        let mh = graphic(&host).expect("host matroid");
        let fg = try_value!(claim, name, expected, started, reports, f_of(&mg, budget));
        let fh = try_value!(claim, name, expected, started, reports, f_of(&mh, budget));
        reports.push(
            VerificationReport::new(
                claim,
                name,
                expected,
                format!("f(M(G)) = {fg}, f(M(H)) = {fh}"),
                pass_fail(fg <= fh),
                started,
            )
            .with_instance_json(&mg),
        );
    }
    reports
}

/// `KG(M (+) M')` equals the categorical product `KG(M) x KG(M')` under the
/// canonical pair indexing.
fn id_hedet(_budget: &Budget) -> Vec<VerificationReport> {
    let claim = "id:hedet";
    let expected = "KG(M (+) M') == KG(M) x KG(M') under pair indexing";
    let pairs = [
        ("uniform(1,2) x uniform(1,2)", uniform(1, 2).unwrap(), uniform(1, 2).unwrap()),
        ("uniform(2,4) x uniform(2,4)", uniform(2, 4).unwrap(), uniform(2, 4).unwrap()),
        ("uniform(2,4) x uniform(1,3)", uniform(2, 4).unwrap(), uniform(1, 3).unwrap()),
    ];
    let mut reports = Vec::new();
    for (name, a, b) in pairs {
        let started = Instant::now();
        let (ok, detail) = product_identity_holds(&a, &b);
        reports.push(VerificationReport::new(
            claim,
            name,
            expected,
            detail,
            pass_fail(ok),
            started,
        ));
    }
    reports
}

/// Checks the product identity structurally; returns a description of the
/// comparison.
pub fn product_identity_holds(a: &Matroid, b: &Matroid) -> (bool, String) {
    let sum = a.direct_sum(b);
    let kg_sum = kneser_graph(&sum).expect("kneser graph of sum");
    let kg_a = kneser_graph(a).expect("kneser graph");
    let kg_b = kneser_graph(b).expect("kneser graph");
    let product = categorical_product(&kg_a, &kg_b).expect("product");
    if kg_sum.vertex_count() != product.vertex_count() {
        return (
            false,
            format!(
                "vertex counts differ: {} vs {}",
                kg_sum.vertex_count(),
                product.vertex_count()
            ),
        );
    }
    // canonical pair indexing: (i, j) -> index of the union basis
    let nb = b.bases().len();
    let n = a.n();
    let mut to_sum = vec![usize::MAX; product.vertex_count()];
    for (i, &x) in a.bases().iter().enumerate() {
        for (j, &y) in b.bases().iter().enumerate() {
            let union = crate::set::ElementSet::from_mask(x.mask() | (y.mask() << n));
            match sum.basis_index(union) {
                Some(index) => to_sum[i * nb + j] = index,
                None => return (false, "pair union is not a basis of the sum".into()),
            }
        }
    }
    let mut edges_match = true;
    'outer: for p in 0..product.vertex_count() {
        for q in p + 1..product.vertex_count() {
            if product.has_edge(p, q) != kg_sum.has_edge(to_sum[p], to_sum[q]) {
                edges_match = false;
                break 'outer;
            }
        }
    }
    let detail = format!(
        "{} vertices, {} edges on both sides, adjacency match = {edges_match}",
        kg_sum.vertex_count(),
        kg_sum.edge_count()
    );
    (edges_match && kg_sum.edge_count() == product.edge_count(), detail)
}

/// Exact comparison of `f(M (+) M')` with `min(f(M), f(M'))` on default
/// pairs.
fn quest_hedet(budget: &Budget) -> Vec<VerificationReport> {
    let pairs = [
        (uniform(2, 4).unwrap(), uniform(2, 4).unwrap()),
        (uniform(1, 1).unwrap(), uniform(2, 4).unwrap()),
        (theta(2).unwrap(), theta(2).unwrap()),
    ];
    pairs
        .iter()
        .map(|(a, b)| check_hedetniemi_instance(a, b, budget))
        .collect()
}

/// `(Ser(M, M'))* == Par(M*, M'*)` as labelled matroids.
fn eq_ser_par() -> Vec<VerificationReport> {
    let claim = "eq:ser-par";
    let expected = "(Ser(M, M'))* == Par(M*, M'*)";
    let p: Label = 1.into();
    let pairs = [
        ("uniform(2,4) with uniform(1,3)", uniform(2, 4).unwrap(), uniform(1, 3).unwrap()),
        ("uniform(2,5) with uniform(2,5)", uniform(2, 5).unwrap(), uniform(2, 5).unwrap()),
        ("uniform(3,4) with uniform(1,4)", uniform(3, 4).unwrap(), uniform(1, 4).unwrap()),
    ];
    let mut reports = Vec::new();
    for (name, a, b) in pairs {
        let started = Instant::now();
        let outcome = a
            .series_connection(&p, &b, &p)
            .map(|ser| ser.dual())
            .and_then(|ser_dual| {
                a.dual()
                    .parallel_connection(&p, &b.dual(), &p)
                    .map(|par| (ser_dual, par))
            });
        match outcome {
            Ok((ser_dual, par)) => {
                let equal = ser_dual == par;
                reports.push(VerificationReport::new(
                    claim,
                    name,
                    expected,
                    format!(
                        "both sides have {} bases, equal = {equal}",
                        ser_dual.bases().len()
                    ),
                    pass_fail(equal),
                    started,
                ));
            }
            Err(e) => reports.push(VerificationReport::new(
                claim,
                name,
                expected,
                format!("construction failed: {e}"),
                Status::Fail,
                started,
            )),
        }
    }
    reports
}

/// Squared Euclidean distance of basis incidence vectors equals the
/// symmetric-difference distance, over all basis pairs.
fn prop_numb() -> Vec<VerificationReport> {
    let claim = "prop:numb";
    let expected = "||x_B - x_B'||^2 == |B symdiff B'| for all basis pairs";
    let instances = [
        ("uniform(2,4)", uniform(2, 4).unwrap()),
        ("theta(3)", theta(3).unwrap()),
        ("fano", fano()),
        ("catalan(2,4)", catalan(2, 4).unwrap()),
        ("graphic(K4)", graphic(&SimpleGraph::complete(4)).unwrap()),
    ];
    let mut reports = Vec::new();
    for (name, m) in instances {
        let started = Instant::now();
        let mut pairs = 0usize;
        let mut mismatches = 0usize;
        for &b in m.bases() {
            for &b2 in m.bases() {
                let x = m.incidence_vector(b).expect("basis");
                let y = m.incidence_vector(b2).expect("basis");
                let squared: usize = x
                    .iter()
                    .zip(&y)
                    .map(|(&p, &q)| (p as i32 - q as i32).pow(2) as usize)
                    .sum();
                pairs += 1;
                if squared != b.symmetric_difference(b2).card() {
                    mismatches += 1;
                }
            }
        }
        reports.push(
            VerificationReport::new(
                claim,
                name,
                expected,
                format!("{pairs} pairs checked, {mismatches} mismatches"),
                pass_fail(mismatches == 0),
                started,
            )
            .with_instance_json(&m),
        );
    }
    reports
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_complete() {
        let ids = claim_ids();
        assert!(ids.contains(&"thm:main"));
        assert!(ids.contains(&"prop:pappus"));
        assert!(ids.contains(&"quest:hedet"));
        assert_eq!(ids.len(), 21);
        assert!(matches!(
            check_claim("nonsense", None, &Budget::unlimited()),
            Err(VerifyError::UnknownClaim(_))
        ));
    }

    #[test]
    fn thm_main_skips_theta1() {
        let reports = check_claim("thm:main", Some(&theta(1).unwrap()), &Budget::unlimited())
            .unwrap();
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0].status, Status::Skipped);
    }

    #[test]
    fn pappus_claim_passes() {
        let reports = check_claim("prop:pappus", None, &Budget::unlimited()).unwrap();
        assert_eq!(reports.len(), 2);
        for r in &reports {
            assert_eq!(r.status, Status::Pass, "{}: {}", r.instance, r.computed);
        }
    }

    #[test]
    fn ser_par_identity_passes() {
        for r in check_claim("eq:ser-par", None, &Budget::unlimited()).unwrap() {
            assert_eq!(r.status, Status::Pass, "{}: {}", r.instance, r.computed);
        }
    }

    #[test]
    fn product_identity_on_pair_of_u12() {
        let a = uniform(1, 2).unwrap();
        let (ok, _) = product_identity_holds(&a, &a);
        assert!(ok);
        // 4 vertices, 2 edges
        let kg = kneser_graph(&a.direct_sum(&a)).unwrap();
        assert_eq!(kg.vertex_count(), 4);
        assert_eq!(kg.edge_count(), 2);
    }

    #[test]
    fn sbip_graphic_claim() {
        let reports = check_claim("prop:sbip-graphic", None, &Budget::unlimited()).unwrap();
        let passes = reports.iter().filter(|r| r.status == Status::Pass).count();
        let skips = reports.iter().filter(|r| r.status == Status::Skipped).count();
        assert_eq!(passes, 2, "{reports:#?}");
        assert_eq!(skips, 1, "K4-in-K4 hypothesis fails");
    }

    #[test]
    fn instance_override_rejected_for_pair_claims() {
        let m = uniform(2, 4).unwrap();
        assert!(matches!(
            check_claim("prop:conn", Some(&m), &Budget::unlimited()),
            Err(VerifyError::BadInstance(_))
        ));
    }
}
