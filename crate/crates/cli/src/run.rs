//! Scenario execution: one report entry per element, in input order.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use semireal::affine_rational::{
    classify_affine_rational, rationality_certificates_linear, AffineRationalError, AffineRationality, AffineReality,
};
use semireal::group::{
    coprime_residues, element_order, generate_closure, search_witness, Certificate, FiniteGroup, GroupElement,
    OrderResult, Relation,
};
use semireal::heisenberg::{
    check_square_law, complex_heisenberg_reality, gsp_x, gsp_y, heisenberg_presentation, random_complex_heisenberg,
    ComplexHeisenbergElement, GSpElement, Heisenberg3, HeisenbergElement, HeisenbergVerdict, LambdaCase,
    RotationInstance, ScalarInstance, SolvableError, SolvableInstance, Torus, TorusHeisenbergInstance,
};
use semireal::semidirect::{
    make_power_witness, make_real_witness, rational_witness_via_lift, real_witness_via_lift, SemidirectError,
};
use semireal::sl2::{
    classify_rational_sl2v, classify_real_with, sl2v_order, ElementOrder, PolyVector, RationalityVerdict,
    RealityResult, SL2Element, SearchFamilies, Sl2VElement,
};
use semireal::{AffineElement, Field, Fp, GaussianRational, Matrix, Rational, SemidirectElement, Vector};

use crate::codec::{scalar, square_matrix, vector};
use crate::error::CliError;
use crate::report::{
    enc_affine, enc_circle, enc_gsp_heisenberg, enc_sl2v, enc_torus_heisenberg, CertRecord, CheckOutcome, Entry,
    GroupKind, Report, REPORT_VERSION,
};
use crate::scenario::{
    AffineScenario, FiniteScenario, HeisenbergScenario, Route, Scenario, ScenarioBody, Sl2vScenario, SolvableFixture,
    SolvableScenario,
};

pub const DEFAULT_SEED: u64 = 0;
pub const DEFAULT_BOUND: u64 = 10_000;
pub const DEFAULT_CAP: usize = 100_000;

/// Largest finite order of an element of GL(4, ℚ).
const MAX_FINITE_ORDER_GL4_Q: u64 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions {
    pub seed: u64,
    pub bound: u64,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            seed: DEFAULT_SEED,
            bound: DEFAULT_BOUND,
        }
    }
}

type Outcome = (GroupKind, Vec<Entry>, Vec<CheckOutcome>);

pub fn run_scenario(scenario: &Scenario, echo: Value, opts: &RunOptions) -> Result<Report, CliError> {
    if opts.bound == 0 {
        return Err(CliError::Usage("--bound must be positive".into()));
    }
    let (group, entries, checks) = match &scenario.body {
        ScenarioBody::Finite(sc) => with_prime(sc.p, sc, opts)?,
        ScenarioBody::Sl2v(sc) => run_sl2v(sc, opts)?,
        ScenarioBody::Affine(sc) => run_affine(sc, opts)?,
        ScenarioBody::Heisenberg(sc) => run_heisenberg(sc, opts)?,
        ScenarioBody::Solvable(sc) => run_solvable(sc, opts)?,
    };
    Ok(Report {
        schema_version: REPORT_VERSION,
        scenario: echo,
        seed: opts.seed,
        bound: opts.bound,
        group,
        entries,
        checks,
        digest: String::new(),
    }
    .seal())
}

/// Maps `f` over `items` on scoped threads; results keep input order.
fn par_map<T: Sync, R: Send>(items: &[T], f: impl Fn(usize, &T) -> R + Sync) -> Vec<R> {
    if items.is_empty() {
        return Vec::new();
    }
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get()).min(items.len());
    let chunk = items.len().div_ceil(threads);
    let f = &f;
    std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .enumerate()
            .map(|(c, part)| {
                scope.spawn(move || {
                    part.iter()
                        .enumerate()
                        .map(|(j, t)| f(c * chunk + j, t))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("worker thread panicked"))
            .collect()
    })
}

fn entry(index: usize, element: Value, order: String) -> Entry {
    Entry {
        index,
        element,
        order,
        real: "Unknown".into(),
        rational: "Unknown".into(),
        route: None,
        notes: Vec::new(),
        certificates: Vec::new(),
    }
}

fn order_label(r: OrderResult) -> String {
    match r {
        OrderResult::Finite(m) => m.to_string(),
        OrderResult::ExceedsBound(_) => "unknown".into(),
    }
}

fn internal(e: impl ToString) -> CliError {
    CliError::Internal(e.to_string())
}

fn record<G: GroupElement>(id: String, cert: &Certificate<G>, enc: impl Fn(&G) -> Value) -> CertRecord {
    CertRecord::new(id, cert.relation(), enc(cert.subject()), enc(cert.witness()))
}

fn with_prime(p: u64, sc: &FiniteScenario, opts: &RunOptions) -> Result<Outcome, CliError> {
    match p {
        2 => run_finite::<2>(sc, opts),
        3 => run_finite::<3>(sc, opts),
        5 => run_finite::<5>(sc, opts),
        7 => run_finite::<7>(sc, opts),
        11 => run_finite::<11>(sc, opts),
        13 => run_finite::<13>(sc, opts),
        _ => Err(CliError::Usage(format!("p = {p} is not one of 2, 3, 5, 7, 11, 13"))),
    }
}

fn run_finite<const P: u64>(sc: &FiniteScenario, opts: &RunOptions) -> Result<Outcome, CliError> {
    let dim = sc.dim;
    if dim == 0 {
        return Err(CliError::Usage("dim must be positive".into()));
    }
    let linear: Vec<Matrix<Fp<P>>> = sc
        .linear_generators
        .iter()
        .map(|m| square_matrix(m, dim))
        .collect::<Result<_, _>>()?;
    let mut generators = linear
        .iter()
        .map(|a| AffineElement::linear_part(a.clone()))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::Parse(format!("linear generator: {e}")))?;
    if sc.translations {
        generators.extend((0..dim).map(|i| AffineElement::translation_part(Vector::basis(dim, i))));
    }
    if generators.is_empty() {
        return Err(CliError::Usage("no generators".into()));
    }
    let cap = sc.cap.unwrap_or(DEFAULT_CAP);
    let group = generate_closure(&generators, cap).map_err(|e| CliError::Usage(e.to_string()))?;
    let linear_group = if linear.is_empty() {
        generate_closure(&[Matrix::identity(dim)], cap)
    } else {
        generate_closure(&linear, cap)
    }
    .map_err(|e| CliError::Usage(e.to_string()))?;

    let elements: Vec<AffineElement<Fp<P>>> = match &sc.elements {
        None => group.elements().to_vec(),
        Some(list) => list
            .iter()
            .map(|e| {
                let a = AffineElement::new(square_matrix(&e.linear, dim)?, vector(&e.translation)?)
                    .map_err(|err| CliError::Parse(err.to_string()))?;
                if group.contains(&a) {
                    Ok(a)
                } else {
                    Err(CliError::Usage(format!("element {} is not in the generated group", enc_affine(&a))))
                }
            })
            .collect::<Result<_, _>>()?,
    };
    let entries = par_map(&elements, |i, s| finite_entry(i, s, &group, &linear_group, sc, opts))
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    let checks = vec![CheckOutcome {
        name: "group order".into(),
        passed: true,
        detail: format!("|G| = {}, |linear part| = {}", group.order(), linear_group.order()),
    }];
    Ok((GroupKind::Affine { field: format!("F{P}") }, entries, checks))
}

fn finite_entry<const P: u64>(
    index: usize,
    s: &AffineElement<Fp<P>>,
    group: &FiniteGroup<AffineElement<Fp<P>>>,
    linear_group: &FiniteGroup<Matrix<Fp<P>>>,
    sc: &FiniteScenario,
    opts: &RunOptions,
) -> Result<Entry, CliError> {
    let order = element_order(s, opts.bound);
    let mut e = entry(index, enc_affine(s), order_label(order));
    let OrderResult::Finite(m) = order else {
        e.notes.push(format!("order exceeds bound {}", opts.bound));
        return Ok(e);
    };
    let mut relations = vec![(Relation::Inverse, format!("{index}:inverse"))];
    relations.extend(
        coprime_residues(m)
            .into_iter()
            .map(|k| (Relation::Power(k as i64), format!("{index}:k={k}"))),
    );
    let x = s.linear();
    let fixed_point = x.has_fixed_point().map_err(internal)?;
    let constructive = sc.route == Route::Auto && !sc.all_witnesses && !fixed_point;
    e.route = Some(if constructive { "constructive" } else { "exhaustive" }.into());

    let mut found = Vec::new();
    for (relation, id) in relations {
        let certs: Vec<Certificate<AffineElement<Fp<P>>>> = if constructive {
            match search_witness(linear_group.elements(), x, relation) {
                None => Vec::new(),
                Some(h) => vec![match relation {
                    Relation::Inverse => make_real_witness(x, s.translation(), h.witness()),
                    Relation::Power(k) => make_power_witness(x, s.translation(), h.witness(), k),
                }
                .map_err(internal)?],
            }
        } else if sc.all_witnesses {
            let target = relation.target(s);
            group
                .elements()
                .iter()
                .filter(|g| s.conjugate_by(g) == target)
                .map(|g| Certificate::new(s.clone(), g.clone(), relation).map_err(internal))
                .collect::<Result<_, _>>()?
        } else {
            search_witness(group.elements(), s, relation).into_iter().collect()
        };
        found.push(!certs.is_empty());
        let many = certs.len() > 1;
        for (j, c) in certs.iter().enumerate() {
            let id = if many { format!("{id}#{j}") } else { id.clone() };
            e.certificates.push(record(id, c, enc_affine));
        }
    }
    e.real = if found[0] { "Real" } else { "NotReal" }.into();
    e.rational = if found[1..].iter().all(|&f| f) { "Rational" } else { "NotRational" }.into();
    if constructive && !found.iter().all(|&f| f) {
        e.notes.push("verdicts without a witness come from the linear quotient".into());
    }
    Ok(e)
}

fn families(sc: &Sl2vScenario) -> Result<SearchFamilies, CliError> {
    let mut f = SearchFamilies::default();
    let parse = |list: &Vec<String>| list.iter().map(|s| scalar::<Rational>(s)).collect::<Result<Vec<_>, _>>();
    if let Some(g) = &sc.t_grid {
        f.t_grid = parse(g)?;
    }
    if let Some(g) = &sc.conjugation_grid {
        f.conjugation_grid = parse(g)?;
    }
    Ok(f)
}

fn run_sl2v(sc: &Sl2vScenario, opts: &RunOptions) -> Result<Outcome, CliError> {
    let n = sc.n;
    let t = match &sc.t {
        Some(t) => scalar::<Rational>(t)?,
        None => Rational::one(),
    };
    let fam = families(sc)?;
    let mut inputs = Vec::new();
    for el in &sc.elements {
        let g = SL2Element::from_matrix(&square_matrix(&el.x, 2)?).map_err(|e| CliError::Parse(e.to_string()))?;
        let v = vector::<Rational>(&el.v)?;
        if v.dim() != n + 1 {
            return Err(CliError::Parse(format!("v needs {} coefficients, found {}", n + 1, v.dim())));
        }
        inputs.push((g, PolyVector::new(v).map_err(|e| CliError::Parse(e.to_string()))?));
    }
    if let Some(r) = &sc.random {
        if r.r_values.is_empty() || r.height < 1 {
            return Err(CliError::Usage("random needs r_values and a positive height".into()));
        }
        let rs = r.r_values.iter().map(|s| scalar::<Rational>(s)).collect::<Result<Vec<_>, _>>()?;
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        for i in 0..r.count {
            let x = SL2Element::diagonal(&rs[i % rs.len()]).map_err(|e| CliError::Parse(e.to_string()))?;
            inputs.push((x, PolyVector::random(&mut rng, n, r.height)));
        }
    }
    let entries = par_map(&inputs, |i, (x, v)| sl2v_entry(i, x, v, &t, &fam, sc.rationality, opts))
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    Ok((GroupKind::Sl2v { n }, entries, Vec::new()))
}

fn sl2v_entry(
    index: usize,
    x: &SL2Element,
    v: &PolyVector,
    t: &Rational,
    fam: &SearchFamilies,
    rationality: bool,
    opts: &RunOptions,
) -> Result<Entry, CliError> {
    let usage = |e: semireal::sl2::Sl2Error| CliError::Usage(format!("element {index}: {e}"));
    let subject = Sl2VElement::new(x.clone(), v.clone());
    let order = match sl2v_order(x, v, opts.bound).map_err(usage)? {
        Some(ElementOrder::Finite(m)) => m.to_string(),
        Some(ElementOrder::Infinite) => "infinite".into(),
        None => "unknown".into(),
    };
    let mut e = entry(index, enc_sl2v(&subject), order);
    match classify_real_with(x, v, t, fam).map_err(usage)? {
        RealityResult::RealWithWitness(c) => {
            e.real = "Real".into();
            e.certificates.push(record(format!("{index}:inverse"), &c, enc_sl2v));
        }
        RealityResult::NotReal(reason) => {
            e.real = "NotReal".into();
            e.notes.push(reason.to_string());
        }
        RealityResult::Unknown(searched) => {
            e.notes.push(format!("no witness in: {}", searched.join("; ")));
        }
    }
    if rationality {
        match classify_rational_sl2v(x, v, opts.bound).map_err(usage)? {
            RationalityVerdict::Rational { certificates, .. } => {
                e.rational = "Rational".into();
                for (k, c) in &certificates {
                    e.certificates.push(record(format!("{index}:k={k}"), c, enc_sl2v));
                }
            }
            RationalityVerdict::NotRational { reason, .. } => {
                e.rational = "NotRational".into();
                e.notes.push(format!("not rational: {reason}"));
            }
            RationalityVerdict::Unknown(why) => e.notes.push(format!("rationality unknown: {why}")),
        }
    }
    Ok(e)
}

fn run_affine(sc: &AffineScenario, opts: &RunOptions) -> Result<Outcome, CliError> {
    match (sc.field.as_str(), sc.p) {
        ("Q", _) => affine_over::<Rational>("Q", sc, opts),
        ("Q(i)", _) => affine_over::<GaussianRational>("Q(i)", sc, opts),
        ("F_p", Some(2)) => affine_over::<Fp<2>>("F2", sc, opts),
        ("F_p", Some(3)) => affine_over::<Fp<3>>("F3", sc, opts),
        ("F_p", Some(5)) => affine_over::<Fp<5>>("F5", sc, opts),
        ("F_p", Some(7)) => affine_over::<Fp<7>>("F7", sc, opts),
        ("F_p", Some(11)) => affine_over::<Fp<11>>("F11", sc, opts),
        ("F_p", Some(13)) => affine_over::<Fp<13>>("F13", sc, opts),
        (f, p) => Err(CliError::Usage(format!("unsupported field {f:?} with p = {p:?}"))),
    }
}

fn affine_over<F: Field>(label: &str, sc: &AffineScenario, opts: &RunOptions) -> Result<Outcome, CliError> {
    let inputs = sc
        .elements
        .iter()
        .map(|el| {
            let x = crate::codec::matrix::<F>(&el.x)?;
            let a = AffineElement::new(x, vector(&el.v)?).map_err(|e| CliError::Parse(e.to_string()))?;
            Ok((a, el.order))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let entries = par_map(&inputs, |i, (a, m)| affine_entry(i, a, *m, opts))
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    Ok((GroupKind::Affine { field: label.into() }, entries, Vec::new()))
}

fn affine_entry<F: Field>(index: usize, s: &AffineElement<F>, order: Option<u64>, opts: &RunOptions) -> Result<Entry, CliError> {
    let mut e = entry(index, enc_affine(s), "unknown".into());
    let x = s.linear();
    let m = match order {
        Some(m) => m,
        None => match element_order(x, opts.bound) {
            OrderResult::Finite(m) => m,
            OrderResult::ExceedsBound(b) => {
                e.notes.push(format!("order of the linear part exceeds bound {b}"));
                return Ok(e);
            }
        },
    };
    let certs = match rationality_certificates_linear(x, m) {
        Ok(c) => c,
        Err(AffineRationalError::NotRational { k }) => {
            e.rational = "NotRational".into();
            e.notes.push(format!("linear part is not conjugate to its power {k}"));
            return Ok(e);
        }
        Err(AffineRationalError::NotFiniteOrder { m }) => {
            return Err(CliError::Usage(format!("element {index}: x^{m} is not the identity")))
        }
        Err(err @ AffineRationalError::Inconclusive { .. }) => {
            e.notes.push(err.to_string());
            return Ok(e);
        }
        Err(err) => return Err(internal(err)),
    };
    match classify_affine_rational(x, s.translation(), m, &certs) {
        Ok(AffineRationality::Rational(set)) => {
            e.order = set.order.to_string();
            e.real = "Real".into();
            e.rational = "Rational".into();
            e.route = Some("block".into());
            let inverse_k = set.order.saturating_sub(1).max(1);
            if let Some(c) = set.witnesses.get(&inverse_k) {
                let inv = c.with_relation(Relation::Inverse).map_err(internal)?;
                e.certificates.push(record(format!("{index}:inverse"), &inv, enc_affine));
            }
            for (k, c) in &set.witnesses {
                e.certificates.push(record(format!("{index}:k={k}"), c, enc_affine));
            }
        }
        Ok(AffineRationality::InfiniteOrder(report)) => {
            e.order = "infinite".into();
            e.notes.push(format!("kernel component {} grows linearly under powers", report.kernel_component));
            match &report.reality {
                AffineReality::Real(c) => {
                    e.real = "Real".into();
                    e.rational = "Rational".into();
                    e.certificates.push(record(format!("{index}:inverse"), c, enc_affine));
                    let minus = c.with_relation(Relation::Power(-1)).map_err(internal)?;
                    e.certificates.push(record(format!("{index}:k=-1"), &minus, enc_affine));
                }
                AffineReality::NotReal => {
                    e.real = "NotReal".into();
                    e.rational = "NotRational".into();
                    e.notes.push("no inverting linear part negates the kernel component".into());
                }
                AffineReality::Inconclusive => e.notes.push("no invertible inverting linear part sampled".into()),
            }
        }
        Err(err @ (AffineRationalError::UnsupportedCharacteristic | AffineRationalError::Inconclusive { .. })) => {
            e.notes.push(err.to_string());
        }
        Err(err) => return Err(internal(err)),
    }
    Ok(e)
}

fn gsp(rows: &Option<crate::codec::MatrixRows>, default: GSpElement) -> Result<GSpElement, CliError> {
    match rows {
        None => Ok(default),
        Some(r) => GSpElement::new(square_matrix(r, 4)?).map_err(|e| CliError::Parse(e.to_string())),
    }
}

/// Exact order of `x·n` when `N` is torsion-free: `(x·n)^m = e` for the
/// order `m` of `x`, or infinite.
fn torsion_free_order<H, N>(s: &SemidirectElement<H, N>, max_acting_order: u64) -> String
where
    H: GroupElement + semireal::semidirect::Automorphism<N>,
    N: GroupElement,
{
    let Some(m) = (1..=max_acting_order).find(|&m| s.h.pow(m as i64).is_identity()) else {
        return "infinite".into();
    };
    if s.pow(m as i64).is_identity() {
        m.to_string()
    } else {
        "infinite".into()
    }
}

fn run_heisenberg(sc: &HeisenbergScenario, opts: &RunOptions) -> Result<Outcome, CliError> {
    let x = gsp(&sc.x, gsp_x())?;
    let h = gsp(&sc.h, gsp_y())?;
    if x.conjugate_by(&h) != x.inverse() {
        return Err(CliError::Usage("h does not conjugate x to its inverse".into()));
    }
    let mut inputs = sc
        .elements
        .iter()
        .map(|el| {
            let v = vector::<Rational>(&el.v)?;
            if v.dim() != 4 {
                return Err(CliError::Parse("Heisenberg vectors have 4 coordinates".into()));
            }
            Ok(HeisenbergElement::new(v, scalar(&el.t)?))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(r) = &sc.random {
        if r.height < 1 {
            return Err(CliError::Usage("random height must be positive".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        inputs.extend((0..r.count).map(|_| HeisenbergElement::random(&mut rng, 4, r.height)));
    }
    let presentation = heisenberg_presentation();
    let entries = par_map(&inputs, |index, n| -> Result<Entry, CliError> {
        let s = SemidirectElement::new(x.clone(), n.clone());
        let order = torsion_free_order(&s, MAX_FINITE_ORDER_GL4_Q);
        let mut e = entry(index, enc_gsp_heisenberg(&s), order.clone());
        e.route = Some("lift".into());
        match real_witness_via_lift(&x, n, &presentation, &h) {
            Ok(c) => {
                e.real = "Real".into();
                e.certificates.push(record(format!("{index}:inverse"), &c, enc_gsp_heisenberg));
            }
            Err(SemidirectError::FixedPoint { level, .. }) => {
                e.notes.push(format!("x fixes a nonzero vector on level {level}"));
                return Ok(e);
            }
            Err(err) => return Err(internal(err)),
        }
        let Ok(m) = order.parse::<u64>() else {
            return Ok(e);
        };
        let mut all = true;
        for k in coprime_residues(m) {
            let xk = x.pow(k as i64);
            let hk = if xk == x {
                x.identity_like()
            } else if xk == x.inverse() {
                h.clone()
            } else {
                all = false;
                e.notes.push(format!("no linear conjugator for k = {k}"));
                continue;
            };
            let c = rational_witness_via_lift(&x, n, &presentation, &hk, k as i64).map_err(internal)?;
            e.certificates.push(record(format!("{index}:k={k}"), &c, enc_gsp_heisenberg));
        }
        e.rational = if all { "Rational" } else { "Partial" }.into();
        Ok(e)
    })
    .into_iter()
    .collect::<Result<Vec<_>, _>>()?;
    let checks = vec![CheckOutcome {
        name: "similitude".into(),
        passed: true,
        detail: format!("mu(x) = {}, mu(h) = {}", x.mu(), h.mu()),
    }];
    Ok((GroupKind::GspHeisenberg { dim: 4 }, entries, checks))
}

fn run_solvable(sc: &SolvableScenario, opts: &RunOptions) -> Result<Outcome, CliError> {
    match sc.instance {
        SolvableFixture::Rotation => Ok((GroupKind::Circle, fixture_entries(&RotationInstance, enc_circle), vec![square_law(&RotationInstance)])),
        SolvableFixture::Scalar => {
            let inst = ScalarInstance::default();
            let enc = |s: &SemidirectElement<Matrix<Rational>, Vector<Rational>>| enc_affine(&s.to_affine());
            Ok((GroupKind::Affine { field: "Q".into() }, fixture_entries(&inst, enc), vec![square_law(&inst)]))
        }
        SolvableFixture::TorusHeisenberg => {
            let inst = TorusHeisenbergInstance::<Rational>::new();
            Ok((
                GroupKind::TorusHeisenberg { field: "Q".into() },
                fixture_entries(&inst, enc_torus_heisenberg),
                vec![square_law(&inst)],
            ))
        }
        SolvableFixture::ComplexTorusHeisenberg => {
            let inst = TorusHeisenbergInstance::<GaussianRational>::new();
            Ok((
                GroupKind::TorusHeisenberg { field: "Q(i)".into() },
                fixture_entries(&inst, enc_torus_heisenberg),
                vec![square_law(&inst)],
            ))
        }
        SolvableFixture::ComplexHeisenberg => run_complex_heisenberg(sc, opts),
    }
}

fn square_law<I: SolvableInstance>(inst: &I) -> CheckOutcome {
    let (passed, detail) = match check_square_law(inst) {
        Ok(r) => (
            true,
            format!(
                "{} witnesses over {} pairs; every real x has x^2 = e",
                r.witnesses_found, r.pairs_checked
            ),
        ),
        Err(e) => (false, e.to_string()),
    };
    CheckOutcome {
        name: "square law".into(),
        passed,
        detail,
    }
}

/// Roots of unity in ℚ(i) have order dividing 4, as do rational points of
/// finite order on the circle.
const FIXTURE_TORSION: u64 = 4;

fn fixture_entries<I: SolvableInstance>(
    inst: &I,
    enc: impl Fn(&SemidirectElement<I::Acting, I::Normal>) -> Value,
) -> Vec<Entry> {
    let normal = inst.normal_samples();
    let mut entries = Vec::new();
    for x in inst.acting_samples() {
        for n in &normal {
            let index = entries.len();
            let s = SemidirectElement::new(x.clone(), n.clone());
            let mut e = entry(index, enc(&s), torsion_free_order(&s, FIXTURE_TORSION));
            match inst.find_reality_witness(&x, n) {
                Some(g) => match Certificate::new(s.clone(), g, Relation::Inverse) {
                    Ok(c) => {
                        e.real = "Real".into();
                        e.certificates.push(record(format!("{index}:inverse"), &c, &enc));
                    }
                    Err(err) => e.notes.push(format!("search returned a non-witness: {err}")),
                },
                None if !x.mul(&x).is_identity() => {
                    e.real = "NotReal".into();
                    e.notes.push("x^2 != e, so x n is not real (A abelian)".into());
                }
                None => e.notes.push("no witness among the sampled conjugators".into()),
            }
            entries.push(e);
        }
    }
    entries
}

fn run_complex_heisenberg(sc: &SolvableScenario, opts: &RunOptions) -> Result<Outcome, CliError> {
    type Z = GaussianRational;
    let lambda = match &sc.lambda {
        Some(l) => scalar::<Z>(l)?,
        None => Z::one(),
    };
    if lambda.is_zero() {
        return Err(CliError::Usage("lambda must be nonzero".into()));
    }
    let mut inputs: Vec<(bool, ComplexHeisenbergElement)> = Vec::new();
    for el in &sc.elements {
        let x = scalar::<Z>(&el.x)?;
        let minus = if x.is_one() {
            false
        } else if (-x).is_one() {
            true
        } else {
            return Err(CliError::Parse(format!("x must be 1 or -1, found {:?}", el.x)));
        };
        let [a, b, c] = el.n.as_slice() else {
            return Err(CliError::Parse("n needs three coordinates".into()));
        };
        inputs.push((minus, Heisenberg3::new(scalar(a)?, scalar(b)?, scalar(c)?)));
    }
    if let Some(r) = &sc.random {
        if r.height < 1 {
            return Err(CliError::Usage("random height must be positive".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let half = Z::from_i64(2).inv().expect("2 is invertible");
        for i in 0..r.count {
            let mut n = random_complex_heisenberg(&mut rng, r.height);
            if i % 2 == 0 {
                n.c = n.a.clone() * n.b.clone() * half.clone();
            }
            inputs.push((true, n));
        }
    }
    let entries = par_map(&inputs, |index, (minus, n)| -> Result<Entry, CliError> {
        let x = if *minus { -Z::one() } else { Z::one() };
        let s = SemidirectElement::new(Torus::new(x).map_err(internal)?, n.clone());
        let mut e = entry(index, enc_torus_heisenberg(&s), torsion_free_order(&s, FIXTURE_TORSION));
        let case = if *minus {
            LambdaCase::MinusOne { lambda: lambda.clone() }
        } else {
            LambdaCase::Identity
        };
        match complex_heisenberg_reality(n, &case) {
            Ok(HeisenbergVerdict::Real(c)) => {
                e.real = "Real".into();
                e.certificates.push(record(format!("{index}:inverse"), &c, enc_torus_heisenberg));
            }
            Ok(HeisenbergVerdict::NotReal { residual, lambdas_checked }) => {
                e.real = "NotReal".into();
                e.notes.push(format!(
                    "residual 2c - ab = {residual} at every lambda in {{{}}}",
                    lambdas_checked.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(", ")
                ));
            }
            Err(SolvableError::Internal(m)) => return Err(CliError::Violation(m)),
            Err(err) => return Err(internal(err)),
        }
        Ok(e)
    })
    .into_iter()
    .collect::<Result<Vec<_>, _>>()?;

    let two = Z::from_i64(2);
    let mismatches: Vec<usize> = inputs
        .iter()
        .zip(&entries)
        .filter(|((minus, _), _)| *minus)
        .filter(|((_, n), e)| (n.a.clone() * n.b.clone() == two.clone() * n.c.clone()) != (e.real == "Real"))
        .map(|(_, e)| e.index)
        .collect();
    let checked = inputs.iter().filter(|(m, _)| *m).count();
    let check = CheckOutcome {
        name: "closed form ab = 2c".into(),
        passed: mismatches.is_empty(),
        detail: if mismatches.is_empty() {
            format!("verdict matches ab = 2c on {checked} elements with x = -1")
        } else {
            format!("verdict disagrees with ab = 2c at entries {mismatches:?}")
        },
    };
    Ok((GroupKind::TorusHeisenberg { field: "Q(i)".into() }, entries, vec![check]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn par_map_preserves_order() {
        let items: Vec<usize> = (0..97).collect();
        let out = par_map(&items, |i, &x| (i, x * 2));
        assert!(out.iter().enumerate().all(|(i, &(j, y))| i == j && y == 2 * i));
        assert!(par_map(&Vec::<u8>::new(), |_, _| 0).is_empty());
    }

    #[test]
    fn torsion_free_orders() {
        let s = SemidirectElement::new(Torus::<Rational>::from_i64(-1).unwrap(), Heisenberg3::from_i64s(2, 1, 1));
        assert_eq!(torsion_free_order(&s, 4), "2");
        let s = SemidirectElement::new(Torus::<Rational>::from_i64(-1).unwrap(), Heisenberg3::from_i64s(1, 1, 1));
        assert_eq!(torsion_free_order(&s, 4), "infinite");
        let s = SemidirectElement::new(Torus::<Rational>::from_i64(3).unwrap(), Heisenberg3::identity());
        assert_eq!(torsion_free_order(&s, 4), "infinite");
    }
}
