//! Named verification suites behind the `verify` command.
//!
//! Each check either passes or reports a counterexample string; nothing
//! panics. Suites cover the algebra relations, the represented
//! idempotents, the dimension formulas and the characteristic maps,
//! honoring the requested size bounds. Randomized checks draw from a
//! fixed seed so identical invocations print identical reports.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::brauer::{basis, count_basis, diagram_multiply, jm_element, BrauerDiagram, BrauerElement};
use crate::charmap::{
    ch_by_trace_with, ch_closed_form, gl_character_operator, gl_characteristic_op,
    symmetrizer_image, CentralIdempotentSpec,
};
use crate::groups::{dimension, dim_sp, idempotent_normalizer};
use crate::par;
use crate::rat::Rat;
use crate::symfunc::{
    double_schur_eval, double_schur_poly, evaluation_point, schur, ParamSequence, SchurExpansion,
};
use crate::tensorrep::{represent, Family, GroupKind, IdempotentTower};
use crate::young::{hook_product, partitions_of, standard_tableaux, Partition, SkewShape};

/// Outcome of one named check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Which suite to run.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Relations,
    Idempotents,
    Dims,
    Charmap,
    All,
}

impl std::str::FromStr for Suite {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "relations" => Ok(Suite::Relations),
            "idempotents" => Ok(Suite::Idempotents),
            "dims" => Ok(Suite::Dims),
            "charmap" => Ok(Suite::Charmap),
            "all" => Ok(Suite::All),
            other => Err(crate::Error::Parse(format!(
                "unknown suite {other:?}; expected relations|idempotents|dims|charmap|all"
            ))),
        }
    }
}

/// Size bounds shared by the suites.
#[derive(Clone, Debug)]
pub struct Bounds {
    pub max_m: usize,
    pub big_ns: Vec<usize>,
    pub force: bool,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_m: 4,
            big_ns: vec![5, 6],
            force: false,
        }
    }
}

impl Bounds {
    fn orthogonal_kinds(&self) -> Vec<GroupKind> {
        self.big_ns
            .iter()
            .filter_map(|&n| GroupKind::orthogonal(n).ok())
            .collect()
    }

    fn symplectic_kinds(&self) -> Vec<GroupKind> {
        self.big_ns
            .iter()
            .filter(|&&n| n % 2 == 0)
            .filter_map(|&n| GroupKind::symplectic(n).ok())
            .collect()
    }

    fn brauer_kinds(&self) -> Vec<GroupKind> {
        let mut kinds = self.orthogonal_kinds();
        kinds.extend(self.symplectic_kinds());
        kinds
    }
}

type Check = (String, Box<dyn FnOnce() -> Result<(), String> + Send>);

fn named(name: &str, f: impl FnOnce() -> Result<(), String> + Send + 'static) -> Check {
    (name.to_string(), Box::new(f))
}

/// Run a suite and collect one result per check, in a fixed order.
pub fn run_suite(suite: Suite, bounds: &Bounds) -> Vec<CheckResult> {
    let mut checks: Vec<Check> = vec![];
    if matches!(suite, Suite::Relations | Suite::All) {
        relation_checks(&mut checks, bounds);
    }
    if matches!(suite, Suite::Idempotents | Suite::All) {
        idempotent_checks(&mut checks, bounds);
    }
    if matches!(suite, Suite::Dims | Suite::All) {
        dimension_checks(&mut checks, bounds);
    }
    if matches!(suite, Suite::Charmap | Suite::All) {
        charmap_checks(&mut checks, bounds);
    }
    par::map(checks, |(name, f)| match f() {
        Ok(()) => CheckResult {
            name,
            pass: true,
            detail: String::new(),
        },
        Err(detail) => CheckResult {
            name,
            pass: false,
            detail,
        },
    })
}

fn err(context: impl std::fmt::Display) -> String {
    context.to_string()
}

/// Deterministic pseudo-random element with small support.
fn random_element(m: usize, omega: &Rat, permutations_only: bool, rng: &mut ChaCha8Rng) -> BrauerElement {
    let pool: Vec<BrauerDiagram> = if permutations_only {
        basis(m)
            .into_iter()
            .filter(|d| d.as_permutation().is_some())
            .collect()
    } else {
        basis(m)
    };
    let mut e = BrauerElement::zero(m, omega.clone());
    let terms = rng.gen_range(1..=3);
    for _ in 0..terms {
        let d = pool.choose(rng).expect("nonempty basis").clone();
        let num = rng.gen_range(-3..=3i64);
        let den = rng.gen_range(1..=3i64);
        e.add_term(d, Rat::new(num, den));
    }
    e
}

fn relation_checks(checks: &mut Vec<Check>, bounds: &Bounds) {
    let max_m = bounds.max_m.max(2);
    for omega in [Rat::from_int(3), Rat::from_int(-4), Rat::new(7, 2)] {
        let w = omega.clone();
        checks.push(named(
            &format!("relations: defining relations at omega={omega}"),
            move || defining_relations(max_m, &w),
        ));
        let w = omega.clone();
        checks.push(named(
            &format!("relations: Jucys-Murphy commutativity at omega={omega}"),
            move || {
                for m in 2..=max_m {
                    for a in 1..=m {
                        for b in a + 1..=m {
                            let xa = jm_element(a, m, &w).map_err(err)?;
                            let xb = jm_element(b, m, &w).map_err(err)?;
                            if xa.mul(&xb).map_err(err)? != xb.mul(&xa).map_err(err)? {
                                return Err(format!("[x_{a}, x_{b}] != 0 at m={m}"));
                            }
                        }
                    }
                }
                Ok(())
            },
        ));
        let w = omega.clone();
        checks.push(named(
            &format!("relations: Jucys-Murphy hook and swap identities at omega={omega}"),
            move || jm_mixed_relations(max_m, &w),
        ));
    }
    checks.push(named("relations: associativity on sampled triples", move || {
        let w = Rat::new(-5, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for m in 2..=5usize {
            let all = basis(m);
            for _ in 0..8 {
                let a = BrauerElement::from_diagram(all.choose(&mut rng).unwrap().clone(), w.clone());
                let b = BrauerElement::from_diagram(all.choose(&mut rng).unwrap().clone(), w.clone());
                let c = BrauerElement::from_diagram(all.choose(&mut rng).unwrap().clone(), w.clone());
                let left = a.mul(&b).map_err(err)?.mul(&c).map_err(err)?;
                let right = a.mul(&b.mul(&c).map_err(err)?).map_err(err)?;
                if left != right {
                    return Err(format!("associativity broke at m={m}"));
                }
            }
        }
        Ok(())
    }));
    checks.push(named("relations: permutation span closes under products", move || {
        let w = Rat::from_int(6);
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for m in 2..=4usize {
            let perms: Vec<BrauerDiagram> = basis(m)
                .into_iter()
                .filter(|d| d.as_permutation().is_some())
                .collect();
            for _ in 0..10 {
                let d1 = perms.choose(&mut rng).unwrap();
                let d2 = perms.choose(&mut rng).unwrap();
                let prod = diagram_multiply(d1, d2, &w).map_err(err)?;
                if prod.num_terms() != 1 {
                    return Err(format!("product of permutations not a single diagram at m={m}"));
                }
                let (d, c) = prod.terms().next().expect("one term");
                if c != &Rat::one() {
                    return Err("permutation product picked up a loop factor".into());
                }
                let p1 = d1.as_permutation().expect("permutation");
                let p2 = d2.as_permutation().expect("permutation");
                let composed: Vec<usize> = (1..=m).map(|a| p2[p1[a - 1] - 1]).collect();
                if d.as_permutation().as_deref() != Some(&composed[..]) {
                    return Err(format!("composition mismatch at m={m}"));
                }
            }
        }
        Ok(())
    }));
    checks.push(named("relations: basis count is the odd double factorial", || {
        for m in 1..=5usize {
            let expected: u64 = (1..=m as u64).map(|k| 2 * k - 1).product();
            let got = count_basis(m);
            if got != expected {
                return Err(format!("m={m}: {got} diagrams, expected {expected}"));
            }
        }
        Ok(())
    }));
}

fn defining_relations(max_m: usize, w: &Rat) -> Result<(), String> {
    for m in 2..=max_m {
        let id = BrauerElement::identity(m, w.clone());
        let sa = |a: usize| {
            BrauerDiagram::transposition(a, a + 1, m).map(|d| BrauerElement::from_diagram(d, w.clone()))
        };
        let ea = |a: usize| {
            BrauerDiagram::contraction(a, a + 1, m).map(|d| BrauerElement::from_diagram(d, w.clone()))
        };
        for a in 1..m {
            let s = sa(a).map_err(err)?;
            let e = ea(a).map_err(err)?;
            if s.mul(&s).map_err(err)? != id {
                return Err(format!("s_{a}^2 != 1 at m={m}"));
            }
            if e.mul(&e).map_err(err)? != e.scale(w) {
                return Err(format!("e_{a}^2 != omega e_{a} at m={m}"));
            }
            if e.mul(&s).map_err(err)? != e || s.mul(&e).map_err(err)? != e {
                return Err(format!("e_{a} s_{a} absorption failed at m={m}"));
            }
        }
        for a in 1..m.saturating_sub(1) {
            let s1 = sa(a).map_err(err)?;
            let s2 = sa(a + 1).map_err(err)?;
            let braid_l = s1.mul(&s2).map_err(err)?.mul(&s1).map_err(err)?;
            let braid_r = s2.mul(&s1).map_err(err)?.mul(&s2).map_err(err)?;
            if braid_l != braid_r {
                return Err(format!("braid relation failed at a={a}, m={m}"));
            }
            let e1 = ea(a).map_err(err)?;
            let e2 = ea(a + 1).map_err(err)?;
            if e1.mul(&e2).map_err(err)?.mul(&e1).map_err(err)? != e1 {
                return Err(format!("hook contraction relation failed at a={a}, m={m}"));
            }
            if e2.mul(&e1).map_err(err)?.mul(&e2).map_err(err)? != e2 {
                return Err(format!("hook contraction relation failed at a={a}+1, m={m}"));
            }
        }
    }
    Ok(())
}

fn jm_mixed_relations(max_m: usize, w: &Rat) -> Result<(), String> {
    for m in 2..=max_m {
        let e_last = BrauerElement::from_diagram(
            BrauerDiagram::contraction(m - 1, m, m).map_err(err)?,
            w.clone(),
        );
        let s_last = BrauerElement::from_diagram(
            BrauerDiagram::transposition(m - 1, m, m).map_err(err)?,
            w.clone(),
        );
        let xm = jm_element(m, m, w).map_err(err)?;
        let xm1 = jm_element(m - 1, m, w).map_err(err)?;
        let lhs = e_last.mul(&xm).map_err(err)?;
        let rhs = e_last.mul(&xm1).map_err(err)?.scale(&Rat::from_int(-1));
        if lhs != rhs {
            return Err(format!("hook Jucys-Murphy identity failed at m={m}"));
        }
        let lhs = s_last.mul(&xm).map_err(err)?;
        let rhs = xm1
            .mul(&s_last)
            .map_err(err)?
            .add(&BrauerElement::identity(m, w.clone()))
            .map_err(err)?
            .sub(&e_last)
            .map_err(err)?;
        if lhs != rhs {
            return Err(format!("swap Jucys-Murphy identity failed at m={m}"));
        }
    }
    Ok(())
}

/// Shapes of `m` boxes admissible for the kind.
fn admissible_shapes(m: usize, kind: &GroupKind) -> Vec<Partition> {
    partitions_of(m, None, None)
        .into_iter()
        .filter(|lam| kind.check_shape(lam).is_ok())
        .collect()
}

fn idempotent_checks(checks: &mut Vec<Check>, bounds: &Bounds) {
    let max_m = bounds.max_m;
    let force = bounds.force;
    checks.push(named(
        "idempotents: representation is a homomorphism on 100 random pairs",
        move || {
            let mut rng = ChaCha8Rng::seed_from_u64(41);
            let kinds = [
                GroupKind::orthogonal(3).map_err(err)?,
                GroupKind::symplectic(4).map_err(err)?,
            ];
            for trial in 0..100 {
                let kind = kinds[trial % 2];
                let m = rng.gen_range(2..=max_m.clamp(2, 4));
                let e1 = random_element(m, &kind.omega(), false, &mut rng);
                let e2 = random_element(m, &kind.omega(), false, &mut rng);
                let lhs = represent(&e1.mul(&e2).map_err(err)?, &kind, force).map_err(err)?;
                let rhs = represent(&e1, &kind, force)
                    .map_err(err)?
                    .compose(&represent(&e2, &kind, force).map_err(err)?)
                    .map_err(err)?;
                if lhs != rhs {
                    return Err(format!("pair {trial} failed under {kind} at m={m}"));
                }
            }
            Ok(())
        },
    ));
    for kind in bounds.brauer_kinds() {
        let force = bounds.force;
        checks.push(named(
            &format!("idempotents: idempotency and orthogonality under {kind}"),
            move || {
                for m in 1..=max_m {
                    let mut tower = IdempotentTower::new(kind, force);
                    for lam in admissible_shapes(m, &kind) {
                        let tableaux = standard_tableaux(&lam);
                        let ops = tower.build(&tableaux).map_err(err)?;
                        for (i, e) in ops.iter().enumerate() {
                            if &e.compose(e).map_err(err)? != e.as_ref() {
                                return Err(format!("E^2 != E for {lam} tableau {i} under {kind}"));
                            }
                            for (j, f) in ops.iter().enumerate() {
                                if i != j && !e.compose(f).map_err(err)?.is_zero() {
                                    return Err(format!(
                                        "E_{i} E_{j} != 0 for {lam} under {kind}"
                                    ));
                                }
                            }
                        }
                    }
                }
                Ok(())
            },
        ));
        let force = bounds.force;
        checks.push(named(
            &format!("idempotents: Jucys-Murphy eigenvalues under {kind}"),
            move || {
                for m in 1..=max_m {
                    let mut tower = IdempotentTower::new(kind, force);
                    for lam in admissible_shapes(m, &kind) {
                        for t in standard_tableaux(&lam) {
                            let e = tower.idempotent(&t).map_err(err)?;
                            let contents = t.contents(&kind.omega());
                            for a in 1..=m {
                                let x = crate::tensorrep::jm_operator(&kind, a, m, force)
                                    .map_err(err)?;
                                let expected = e.scale(&contents[a - 1]);
                                if x.compose(&e).map_err(err)? != expected
                                    || e.compose(&x).map_err(err)? != expected
                                {
                                    return Err(format!(
                                        "x_{a} eigenvalue failed for {lam} under {kind}"
                                    ));
                                }
                            }
                        }
                    }
                }
                Ok(())
            },
        ));
        let force = bounds.force;
        checks.push(named(
            &format!("idempotents: central idempotents commute with generators under {kind}"),
            move || {
                for m in 2..=max_m {
                    let mut tower = IdempotentTower::new(kind, force);
                    for lam in admissible_shapes(m, &kind) {
                        let spec = CentralIdempotentSpec::new(lam.clone(), kind).map_err(err)?;
                        let phi = spec.build(&mut tower).map_err(err)?;
                        let d = spec.normalizer().map_err(err)?;
                        let scaled = phi.scale(&d);
                        if scaled.compose(&scaled).map_err(err)? != scaled {
                            return Err(format!("(D phi)^2 != D phi for {lam} under {kind}"));
                        }
                        for a in 1..m {
                            for generator in [
                                BrauerDiagram::transposition(a, a + 1, m).map_err(err)?,
                                BrauerDiagram::contraction(a, a + 1, m).map_err(err)?,
                            ] {
                                let op = represent(
                                    &BrauerElement::from_diagram(generator, kind.omega()),
                                    &kind,
                                    force,
                                )
                                .map_err(err)?;
                                if !phi.commutes_with(&op).map_err(err)? {
                                    return Err(format!(
                                        "phi for {lam} fails to commute at a={a} under {kind}"
                                    ));
                                }
                            }
                        }
                    }
                }
                Ok(())
            },
        ));
    }
}

fn dimension_checks(checks: &mut Vec<Check>, bounds: &Bounds) {
    let max_m = bounds.max_m;
    let mut kinds = bounds.brauer_kinds();
    for &n in &bounds.big_ns {
        if let Ok(kind) = GroupKind::general_linear(n) {
            kinds.push(kind);
        }
    }
    for kind in kinds {
        let force = bounds.force;
        checks.push(named(
            &format!("dims: idempotent traces match hook formulas under {kind}"),
            move || {
                for m in 1..=max_m {
                    let mut tower = IdempotentTower::new(kind, force);
                    for lam in admissible_shapes(m, &kind) {
                        let label = match kind.family() {
                            Family::Symplectic => lam.conjugate(),
                            _ => lam.clone(),
                        };
                        let expected = match kind.family() {
                            Family::Symplectic => dim_sp(&label, kind.big_n()).map_err(err)?.value,
                            _ => dimension(&label, &kind).map_err(err)?.value,
                        };
                        for t in standard_tableaux(&lam) {
                            let e = tower.idempotent(&t).map_err(err)?;
                            if e.trace() != expected {
                                return Err(format!(
                                    "trace {} != {} for {lam} under {kind}",
                                    e.trace(),
                                    expected
                                ));
                            }
                        }
                    }
                }
                Ok(())
            },
        ));
        let force = bounds.force;
        checks.push(named(
            &format!("dims: partial traces reduce idempotents under {kind}"),
            move || partial_trace_identities(&kind, max_m, force),
        ));
    }
}

/// The partial trace of `E_T` over the last slot equals the predicted
/// multiple of `E_U`: hook ratios times `N + c_m` in the symmetric-group
/// case, dimension ratios for the Brauer actions.
fn partial_trace_identities(kind: &GroupKind, max_m: usize, force: bool) -> Result<(), String> {
    for m in 2..=max_m {
        let mut tower = IdempotentTower::new(*kind, force);
        for lam in admissible_shapes(m, kind) {
            for t in standard_tableaux(&lam) {
                let e = tower.idempotent(&t).map_err(err)?;
                let parent = t.parent();
                let e_parent = tower.idempotent(&parent).map_err(err)?;
                let mu = parent.shape().clone();
                let ratio = match kind.family() {
                    Family::GeneralLinear => {
                        let c_m = t.contents(&kind.omega())[m - 1].clone();
                        let h_ratio = hook_product(&SkewShape::whole(mu.clone()))
                            .checked_div(&hook_product(&SkewShape::whole(lam.clone())))
                            .map_err(err)?;
                        (Rat::from_int(kind.big_n() as i64) + c_m) * h_ratio
                    }
                    Family::Orthogonal => dimension(&lam, kind)
                        .map_err(err)?
                        .value
                        .checked_div(&dimension(&mu, kind).map_err(err)?.value)
                        .map_err(err)?,
                    Family::Symplectic => dim_sp(&lam.conjugate(), kind.big_n())
                        .map_err(err)?
                        .value
                        .checked_div(
                            &dim_sp(&mu.conjugate(), kind.big_n()).map_err(err)?.value,
                        )
                        .map_err(err)?,
                };
                let reduced = e.partial_trace(m).map_err(err)?;
                if reduced != e_parent.scale(&ratio) {
                    return Err(format!(
                        "partial trace of {lam} tableau {t} under {kind} missed the ratio {ratio}"
                    ));
                }
            }
        }
    }
    Ok(())
}

fn charmap_checks(checks: &mut Vec<Check>, bounds: &Bounds) {
    let force = bounds.force;
    for kind in bounds.brauer_kinds() {
        let max_even = bounds.max_m - bounds.max_m % 2;
        checks.push(named(
            &format!("charmap: closed form equals trace oracle under {kind}"),
            move || {
                let mut tower = IdempotentTower::new(kind, force);
                for m in (2..=max_even).step_by(2) {
                    for lam in admissible_shapes(m, &kind) {
                        let closed = ch_closed_form(&lam, &kind, true).map_err(err)?;
                        let traced = ch_by_trace_with(&lam, &mut tower).map_err(err)?;
                        if closed != traced {
                            return Err(format!("closed form vs trace differ for {lam} under {kind}"));
                        }
                    }
                }
                Ok(())
            },
        ));
        let max_odd = bounds.max_m;
        checks.push(named(
            &format!("charmap: odd sizes trace to zero under {kind}"),
            move || {
                let mut tower = IdempotentTower::new(kind, force);
                for m in [1usize, 3] {
                    if m > max_odd {
                        continue;
                    }
                    for lam in admissible_shapes(m, &kind) {
                        let traced = ch_by_trace_with(&lam, &mut tower).map_err(err)?;
                        if !traced.is_zero() {
                            return Err(format!("nonzero image for odd {lam} under {kind}"));
                        }
                    }
                }
                Ok(())
            },
        ));
        checks.push(named(
            &format!("charmap: pruning leaves results unchanged under {kind}"),
            move || {
                for m in (2..=max_even).step_by(2) {
                    for lam in admissible_shapes(m, &kind) {
                        let pruned = ch_closed_form(&lam, &kind, true).map_err(err)?;
                        let full = ch_closed_form(&lam, &kind, false).map_err(err)?;
                        if pruned != full {
                            return Err(format!("pruning changed the image of {lam} under {kind}"));
                        }
                    }
                }
                Ok(())
            },
        ));
        checks.push(named(
            &format!("charmap: row and column closed forms under {kind}"),
            move || {
                for l in 1..=2usize {
                    for anti in [false, true] {
                        let lam = if anti {
                            Partition::new(vec![1; 2 * l]).map_err(err)?
                        } else {
                            Partition::new(vec![2 * l]).map_err(err)?
                        };
                        let row_col_form = match symmetrizer_image(l, &kind, anti) {
                            Ok(image) => image,
                            // bound violations are legitimately out of range
                            Err(_) => continue,
                        };
                        let closed = ch_closed_form(&lam, &kind, true).map_err(err)?;
                        let d = idempotent_normalizer(&lam, &kind).map_err(err)?;
                        if closed.scale(&d) != row_col_form {
                            return Err(format!(
                                "row-column closed form mismatch for l={l} anti={anti} under {kind}"
                            ));
                        }
                    }
                }
                Ok(())
            },
        ));
    }
    checks.push(named("charmap: flagship coefficients at N=6 and N=7", move || {
        let spots = [
            (6usize, 1680i64, 360i64),
            (7, 3024, 840),
        ];
        let lam = Partition::new(vec![2, 2]).map_err(err)?;
        for (big_n, row_den, col_den) in spots {
            let kind = GroupKind::orthogonal(big_n).map_err(err)?;
            let image = ch_closed_form(&lam, &kind, true).map_err(err)?;
            let row = Partition::new(vec![2]).map_err(err)?;
            let col = Partition::new(vec![1, 1]).map_err(err)?;
            if image.terms.coeff(&row) != Rat::new(1, row_den)
                || image.terms.coeff(&col) != Rat::new(1, col_den)
            {
                return Err(format!("coefficients at N={big_n} are off"));
            }
        }
        Ok(())
    }));
    checks.push(named("charmap: symmetric-group characters map to Schur polynomials", move || {
        for big_n in 2..=4usize {
            for m in 1..=3usize {
                for lam in partitions_of(m, Some(big_n), None) {
                    let chi = gl_character_operator(&lam, big_n, force).map_err(err)?;
                    let expansion = gl_characteristic_op(&chi).map_err(err)?;
                    let mut expected = SchurExpansion::zero(big_n);
                    expected.add_term(lam.clone(), Rat::one());
                    if expansion != expected {
                        return Err(format!("character of {lam} at N={big_n} missed s_{lam}"));
                    }
                }
            }
        }
        Ok(())
    }));
    checks.push(named("charmap: double Schur vanishing and factorizations", move || {
        let n = 4usize;
        for eps in [Rat::zero(), Rat::new(1, 2), Rat::one()] {
            let seq = ParamSequence::with_epsilon(eps.clone()).map_err(err)?;
            for size_nu in 1..=4usize {
                for size_rho in 0..=4usize {
                    for nu in partitions_of(size_nu, Some(n), None) {
                        for rho in partitions_of(size_rho, Some(n), None) {
                            if rho.contains(&nu) {
                                continue;
                            }
                            let point = evaluation_point(&rho, n, &seq).map_err(err)?;
                            if !double_schur_eval(&nu, n, &seq, &point).is_zero() {
                                return Err(format!(
                                    "no vanishing at nu={nu} rho={rho} eps={eps}"
                                ));
                            }
                        }
                    }
                }
            }
            // row and column factorizations for l <= k <= 2l <= 4
            for l in 1..=2usize {
                for k in l..=2 * l {
                    let wide = 5usize;
                    let row_nu = Partition::new(vec![l]).map_err(err)?;
                    let row_rho = Partition::new(vec![k]).map_err(err)?;
                    let point = evaluation_point(&row_rho, wide, &seq).map_err(err)?;
                    let got = double_schur_eval(&row_nu, wide, &seq, &point);
                    let mut expected = Rat::one();
                    for r in 0..l {
                        expected *= &(seq.a((k + wide) as i64) - seq.a((wide + r) as i64));
                    }
                    if got != expected {
                        return Err(format!("row factorization failed at l={l} k={k} eps={eps}"));
                    }
                    let col_nu = Partition::new(vec![1; l]).map_err(err)?;
                    let col_rho = Partition::new(vec![1; k]).map_err(err)?;
                    let point = evaluation_point(&col_rho, wide, &seq).map_err(err)?;
                    let got = double_schur_eval(&col_nu, wide, &seq, &point);
                    let low = seq.a((wide + 1 - k) as i64);
                    let mut expected = Rat::one();
                    for j in (wide - l + 2)..=(wide + 1) {
                        expected *= &(seq.a(j as i64) - &low);
                    }
                    if got != expected {
                        return Err(format!(
                            "column factorization failed at l={l} k={k} eps={eps}"
                        ));
                    }
                }
            }
        }
        // the zero sequence collapses to classical Schur polynomials
        for nu in partitions_of(3, Some(3), None) {
            let plain = schur(&nu, 3);
            let collapsed = double_schur_poly(&nu, 3, &ParamSequence::zero());
            if plain.poly() != collapsed.poly() {
                return Err(format!("zero-sequence reduction failed for {nu}"));
            }
        }
        Ok(())
    }));
}

/// Render results as aligned text lines, one per check.
pub fn render_report(results: &[CheckResult]) -> String {
    let mut out = String::new();
    for r in results {
        if r.pass {
            out.push_str(&format!("PASS {}\n", r.name));
        } else {
            out.push_str(&format!("FAIL {}: {}\n", r.name, r.detail));
        }
    }
    let failed = results.iter().filter(|r| !r.pass).count();
    out.push_str(&format!(
        "{} checks, {} passed, {} failed\n",
        results.len(),
        results.len() - failed,
        failed
    ));
    out
}
