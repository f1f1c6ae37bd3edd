//! One checker per theorem id. A checker quantifies over its instance's
//! scope (pinned soft sets, the full enumeration, or seeded samples; the
//! effective mode is recorded), decides a verdict, and attaches a replayable
//! witness when something is violated.

use crate::ctx::{within_budget, CtxCache, SweepCtx};
use crate::enumerate::{enumerate_soft_sets, soft_set_count, DEFAULT_BUDGET};
use crate::instance::{Instance, Mode};
use crate::report::{TheoremReport, Verdict, Witness};
use crate::rng::{stable_hash, SplitMix64};
use crate::theorem::TheoremId;
use softint_core::{
    check_int_group, soft_image, soft_inverse, soft_preimage, soft_product, FiniteGroup,
    NormalityCriterion, QuotientGroup, Side, SoftIntGroup, SoftSet, Subgroup, Universe,
};

const DEFAULT_SAMPLES: u32 = 200;
const AUTO_SEED: u64 = 0x5eed_ba5e_d00d_f00d;

struct Outcome {
    verdict: Verdict,
    witness: Option<Witness>,
    detail: Option<String>,
    mode: String,
}

impl Outcome {
    fn holds(mode: impl Into<String>) -> Self {
        Outcome { verdict: Verdict::Holds, witness: None, detail: None, mode: mode.into() }
    }

    fn violated(mode: impl Into<String>, witness: Witness) -> Self {
        Outcome { verdict: Verdict::Violated, witness: Some(witness), detail: None, mode: mode.into() }
    }

    fn unmet(mode: impl Into<String>, why: impl Into<String>) -> Self {
        Outcome {
            verdict: Verdict::PreconditionUnmet,
            witness: None,
            detail: Some(why.into()),
            mode: mode.into(),
        }
    }

    fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

/// Checks one theorem on one instance. Pure up to timing: the verdict,
/// witness, and detail depend only on the instance.
pub fn check_theorem(id: TheoremId, inst: &Instance) -> TheoremReport {
    let mut cache = CtxCache::new();
    check_in_cache(id, inst, &mut cache)
}

pub(crate) fn check_in_cache(id: TheoremId, inst: &Instance, cache: &mut CtxCache) -> TheoremReport {
    let start = std::time::Instant::now();
    let outcome = run(id, inst, cache);
    TheoremReport {
        id,
        statement: id.statement(),
        instance: inst.digest(),
        mode: outcome.mode,
        verdict: outcome.verdict,
        informational: id.informational(),
        witness: outcome.witness,
        detail: outcome.detail,
        micros: start.elapsed().as_micros(),
    }
}

fn masks_of(f: &SoftSet) -> String {
    let parts: Vec<String> = f.masks().iter().map(|m| m.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn set_str(f: &SoftSet, mask: u64) -> String {
    f.universe().render_mask(mask)
}

fn samples_of(inst: &Instance) -> u32 {
    match inst.mode {
        Mode::Random { samples, .. } => samples,
        Mode::Exhaustive => DEFAULT_SAMPLES,
    }
}

fn seed_of(inst: &Instance, id: TheoremId, tag: &str) -> u64 {
    let base = match inst.mode {
        Mode::Random { seed, .. } => seed,
        Mode::Exhaustive => AUTO_SEED,
    };
    base ^ stable_hash(&[id.as_str(), &inst.group_spec, &inst.universe.size().to_string(), tag])
}

fn random_mode_str(samples: u32, seed: u64) -> String {
    format!("random:{samples}:{seed:#x}")
}

fn random_soft(group: &FiniteGroup, universe: &Universe, rng: &mut SplitMix64) -> SoftSet {
    let m = universe.size();
    let values = (0..group.order()).map(|_| rng.mask(m)).collect();
    SoftSet::from_masks(group, universe, values).expect("masks in range")
}

struct Drawn<T> {
    items: Vec<T>,
    mode: String,
    exhaustive: bool,
}

/// Soft sets over (group, universe): pinned when the instance pins them and
/// the group matches, the full enumeration when it fits, seeded samples
/// otherwise.
fn draw_all_soft(
    inst: &Instance,
    id: TheoremId,
    group: &FiniteGroup,
    universe: &Universe,
    factor: u64,
) -> Drawn<SoftSet> {
    if !inst.pinned.is_empty() && group == &inst.group {
        return Drawn {
            items: inst.pinned.iter().map(|(_, f)| f.clone()).collect(),
            mode: "pinned".into(),
            exhaustive: false,
        };
    }
    let count = soft_set_count(group, universe);
    if matches!(inst.mode, Mode::Exhaustive) && within_budget(count, factor) {
        return Drawn {
            items: enumerate_soft_sets(group, universe, DEFAULT_BUDGET)
                .expect("within budget")
                .collect(),
            mode: "exhaustive".into(),
            exhaustive: true,
        };
    }
    let samples = samples_of(inst);
    let seed = seed_of(inst, id, "all-soft");
    let mut rng = SplitMix64::new(seed);
    let items = (0..samples).map(|_| random_soft(group, universe, &mut rng)).collect();
    Drawn { items, mode: random_mode_str(samples, seed), exhaustive: false }
}

/// Int-groups over the instance's own (group, universe).
fn draw_int_groups(
    inst: &Instance,
    id: TheoremId,
    ctx: &SweepCtx,
    factor: u64,
) -> Result<Drawn<SoftIntGroup>, Outcome> {
    if !inst.pinned.is_empty() {
        let mut items = Vec::new();
        for (name, f) in &inst.pinned {
            match check_int_group(f.clone()) {
                Ok(ig) => items.push(ig),
                Err(v) => {
                    return Err(Outcome::unmet(
                        "pinned",
                        format!("pinned soft set {name} is not an int-group: {v}"),
                    ))
                }
            }
        }
        return Ok(Drawn { items, mode: "pinned".into(), exhaustive: false });
    }
    draw_int_groups_over(inst, id, ctx, factor, false)
}

/// Normal int-groups over the instance's own (group, universe).
fn draw_normals(
    inst: &Instance,
    id: TheoremId,
    ctx: &SweepCtx,
    factor: u64,
) -> Result<Drawn<SoftIntGroup>, Outcome> {
    if !inst.pinned.is_empty() {
        let mut items = Vec::new();
        for (name, f) in &inst.pinned {
            match check_int_group(f.clone()) {
                Ok(ig) if ig.is_normal() => items.push(ig),
                Ok(_) => {
                    return Err(Outcome::unmet(
                        "pinned",
                        format!("pinned soft set {name} is not normal"),
                    ))
                }
                Err(v) => {
                    return Err(Outcome::unmet(
                        "pinned",
                        format!("pinned soft set {name} is not an int-group: {v}"),
                    ))
                }
            }
        }
        return Ok(Drawn { items, mode: "pinned".into(), exhaustive: false });
    }
    draw_int_groups_over(inst, id, ctx, factor, true)
}

fn draw_int_groups_over(
    inst: &Instance,
    id: TheoremId,
    ctx: &SweepCtx,
    factor: u64,
    normal_only: bool,
) -> Result<Drawn<SoftIntGroup>, Outcome> {
    let roster = if normal_only { &ctx.normals } else { &ctx.int_groups };
    if matches!(inst.mode, Mode::Exhaustive) {
        if let Some(list) = roster {
            if within_budget(list.len() as u128, factor) {
                return Ok(Drawn { items: list.clone(), mode: "exhaustive".into(), exhaustive: true });
            }
        }
    }
    // seeded sampling builds chains out of the subgroup list
    if ctx.subgroups.is_none() {
        return Err(Outcome::unmet(
            inst.mode.describe(),
            "subgroup enumeration bound exceeded, so no seeded int-groups",
        ));
    }
    let samples = samples_of(inst);
    let tag = if normal_only { "normals" } else { "int-groups" };
    let seed = seed_of(inst, id, tag);
    let mut rng = SplitMix64::new(seed);
    let items = (0..samples)
        .map(|_| {
            let s = rng.next_u64();
            if normal_only {
                crate::chain::generate_chain_normal_int_group(&ctx.group, &ctx.universe, s)
            } else {
                crate::chain::generate_chain_int_group(&ctx.group, &ctx.universe, s)
            }
        })
        .collect();
    Ok(Drawn { items, mode: random_mode_str(samples, seed), exhaustive: false })
}

fn combine(a: &str, b: &str) -> String {
    if a.starts_with("random") {
        a.to_string()
    } else if b.starts_with("random") {
        b.to_string()
    } else if a == "pinned" || b == "pinned" {
        "pinned".to_string()
    } else {
        "exhaustive".to_string()
    }
}

fn subgroups_or_unmet<'a>(ctx: &'a SweepCtx, mode: &str) -> Result<&'a [Subgroup], Outcome> {
    match &ctx.subgroups {
        Some(s) => Ok(s),
        None => Err(Outcome::unmet(mode, "subgroup enumeration bound exceeded")),
    }
}

fn run(id: TheoremId, inst: &Instance, cache: &mut CtxCache) -> Outcome {
    if id.needs_homomorphism() && inst.hom.is_none() {
        return Outcome::unmet(inst.mode.describe(), "no homomorphism in the instance");
    }
    let ctx = cache.ctx(&inst.group, &inst.universe);
    match id {
        TheoremId::B20 => b20(inst, &ctx),
        TheoremId::B100 => b100(inst, &ctx),
        TheoremId::B163 => b163(inst),
        TheoremId::B210 => b210(inst, &ctx),
        TheoremId::B220 => b220(inst, &ctx),
        TheoremId::B300 => b300(inst, &ctx),
        TheoremId::B367 => b367(inst, &ctx),
        TheoremId::B380 => b380(inst, &ctx),
        TheoremId::B400 => b400(inst, &ctx),
        TheoremId::B420 => b420(inst, &ctx),
        TheoremId::B430 => b430(inst, &ctx),
        TheoremId::B480 => b480(inst, &ctx),
        TheoremId::B490 => b490(inst, &ctx),
        TheoremId::C15 => c15(inst, &ctx),
        TheoremId::C20 => c20(inst, &ctx),
        TheoremId::C30 => c30(inst, &ctx),
        TheoremId::C35 => c35(inst, &ctx),
        TheoremId::C90Fwd => c90fwd(inst, &ctx),
        TheoremId::C90Conv => c90conv(inst, &ctx),
        TheoremId::C95 => c95(inst, &ctx),
        TheoremId::C100 => c100(inst, &ctx),
        TheoremId::C110 => c110(inst, &ctx),
        TheoremId::C190 => c190(inst, &ctx),
        TheoremId::C220 => c220(inst, &ctx),
        TheoremId::C221 => c221(inst, &ctx),
        TheoremId::C226 => c226(inst, &ctx),
        TheoremId::C227 => c227(inst, &ctx),
        TheoremId::C228 => c228(inst, &ctx),
        TheoremId::C229 => c229(inst, &ctx),
        TheoremId::C240 => c240(inst, &ctx),
        TheoremId::C246 => c246(inst, &ctx),
        TheoremId::C270 => c270(inst, &ctx),
        TheoremId::C290 => c290(inst, &ctx),
        TheoremId::C300 => c300(inst, &ctx),
        TheoremId::C345 => c345(inst, &ctx),
        TheoremId::C355 => c355(inst, &ctx),
        TheoremId::C360 => c360(inst, &ctx),
        TheoremId::C370 => c370(inst, &ctx),
        TheoremId::C380 => c380(inst, &ctx),
        TheoremId::C383 => c383(inst, &ctx),
        TheoremId::C385 => c385(inst, &ctx),
        TheoremId::C420 => c420(inst, cache),
        TheoremId::C430 => c430(inst, cache),
        TheoremId::D376 => d376(inst),
        TheoremId::D593 => d593(inst, cache),
    }
}

// --- single int-group scopes ---------------------------------------------

fn b20(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let n = inst.group.order() as u64;
    let drawn = match draw_int_groups(inst, TheoremId::B20, ctx, n) {
        Ok(d) => d,
        Err(o) => return o,
    };
    let e = inst.group.identity();
    for f in &drawn.items {
        for x in 0..inst.group.order() {
            if f.mask_at(x) & !f.mask_at(e) != 0 {
                return Outcome::violated(
                    drawn.mode,
                    Witness::new(
                        vec![x],
                        format!(
                            "f={}; f({}) = {} not inside f(e) = {}",
                            masks_of(f.soft()),
                            inst.group.name(x),
                            set_str(f.soft(), f.mask_at(x)),
                            set_str(f.soft(), f.mask_at(e))
                        ),
                    ),
                );
            }
        }
    }
    Outcome::holds(drawn.mode)
}

fn b100(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let n = inst.group.order() as u64;
    let drawn = match draw_int_groups(inst, TheoremId::B100, ctx, n * n) {
        Ok(d) => d,
        Err(o) => return o,
    };
    for f in &drawn.items {
        let eset = f.e_set();
        if Subgroup::new(&inst.group, &eset).is_err() {
            return Outcome::violated(
                drawn.mode,
                Witness::new(eset, format!("f={}; e-set is not a subgroup", masks_of(f.soft()))),
            );
        }
    }
    Outcome::holds(drawn.mode)
}

fn b210(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let n = inst.group.order() as u64;
    let drawn = match draw_int_groups(inst, TheoremId::B210, ctx, 12 * n * n) {
        Ok(d) => d,
        Err(o) => return o,
    };
    let subgroups = match subgroups_or_unmet(ctx, &drawn.mode) {
        Ok(s) => s,
        Err(o) => return o,
    };
    for f in &drawn.items {
        for h in subgroups {
            let restricted = f.restrict(h).expect("subgroup of the same parent");
            if let Some(v) = softint_core::intgroup::int_group_violation(restricted.soft()) {
                return Outcome::violated(
                    drawn.mode,
                    Witness::new(
                        h.members().to_vec(),
                        format!("f={}; restriction breaks: {v}", masks_of(f.soft())),
                    ),
                );
            }
        }
    }
    Outcome::holds(drawn.mode)
}

fn b220(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let n = inst.group.order() as u64;
    let drawn = match draw_int_groups(inst, TheoremId::B220, ctx, 4 * n * n) {
        Ok(d) => d,
        Err(o) => return o,
    };
    for (f, g) in pair_capped(&drawn, 4 * n * n) {
        let meet = f.soft().intersection(g.soft()).expect("common group");
        if let Some(v) = softint_core::intgroup::int_group_violation(&meet) {
            return Outcome::violated(
                drawn.mode.clone(),
                Witness::new(
                    vec![],
                    format!("f={}; g={}; meet breaks: {v}", masks_of(f.soft()), masks_of(g.soft())),
                ),
            );
        }
    }
    // the whole-family meet
    if let Some(first) = drawn.items.first() {
        let mut acc = first.soft().clone();
        for f in &drawn.items[1..] {
            acc = acc.intersection(f.soft()).expect("common group");
        }
        if let Some(v) = softint_core::intgroup::int_group_violation(&acc) {
            return Outcome::violated(
                drawn.mode,
                Witness::new(vec![], format!("whole-family meet breaks: {v}")),
            );
        }
    }
    Outcome::holds(drawn.mode)
}

// --- arbitrary soft-set scopes --------------------------------------------

fn b300(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let m = ctx.universe.size();
    let n = inst.group.order() as u64;
    let level_pairs = 3u64.saturating_pow(m.min(20) as u32);
    let drawn = draw_all_soft(inst, TheoremId::B300, &inst.group, &ctx.universe, level_pairs * n);
    for f in &drawn.items {
        // every alpha ⊆ beta; iterate beta and its submasks
        let full = ctx.universe.full_mask();
        let mut beta = full;
        loop {
            let beta_set = softint_core::USet::from_mask(&ctx.universe, beta).unwrap();
            let cut_beta = f.alpha_cut(&beta_set, false);
            let mut alpha = beta;
            loop {
                let alpha_set = softint_core::USet::from_mask(&ctx.universe, alpha).unwrap();
                let cut_alpha = f.alpha_cut(&alpha_set, false);
                if !cut_beta.iter().all(|x| cut_alpha.contains(x)) {
                    return Outcome::violated(
                        drawn.mode,
                        Witness::new(
                            vec![],
                            format!(
                                "f={}; alpha={}; beta={}; cut at beta not inside cut at alpha",
                                masks_of(f),
                                set_str(f, alpha),
                                set_str(f, beta)
                            ),
                        ),
                    );
                }
                if alpha == 0 {
                    break;
                }
                alpha = (alpha - 1) & beta;
            }
            if beta == 0 {
                break;
            }
            beta -= 1;
        }
    }
    Outcome::holds(drawn.mode)
}

fn b367(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let n = inst.group.order() as u64;
    let drawn = draw_all_soft(inst, TheoremId::B367, &inst.group, &ctx.universe, 15 * n * n);
    for f in &drawn.items {
        let direct = softint_core::intgroup::int_group_violation(f).is_none();
        let by_cuts = softint_core::intgroup::is_int_group_by_cuts(f);
        if direct != by_cuts {
            return Outcome::violated(
                drawn.mode,
                Witness::new(
                    vec![],
                    format!("f={}; direct={direct}, cut-route={by_cuts}", masks_of(f)),
                ),
            );
        }
    }
    Outcome::holds(drawn.mode)
}

fn b380(inst: &Instance, _ctx: &SweepCtx) -> Outcome {
    let g = &inst.group;
    let u = &inst.universe;
    let n = g.order();
    let levels: Vec<u64> = if u.size() <= 6 {
        (0..=u.full_mask()).collect()
    } else {
        let mut rng = SplitMix64::new(seed_of(inst, TheoremId::B380, "levels"));
        (0..16).map(|_| rng.mask(u.size())).collect()
    };
    for x in 0..n {
        for y in 0..n {
            for &a in &levels {
                for &b in &levels {
                    let alpha = softint_core::USet::from_mask(u, a).unwrap();
                    let beta = softint_core::USet::from_mask(u, b).unwrap();
                    let p = SoftSet::point(g, x, &alpha).unwrap();
                    let q = SoftSet::point(g, y, &beta).unwrap();
                    let product = soft_product(&p, &q).expect("same group");
                    let expect =
                        SoftSet::point(g, g.mul(x, y), &alpha.intersect(&beta).unwrap()).unwrap();
                    if product != expect {
                        return Outcome::violated(
                            "exhaustive",
                            Witness::new(
                                vec![x, y],
                                format!(
                                    "point({},{}) * point({},{}) differs from point({},{})",
                                    g.name(x),
                                    set_str(&p, a),
                                    g.name(y),
                                    set_str(&p, b),
                                    g.name(g.mul(x, y)),
                                    set_str(&p, a & b)
                                ),
                            ),
                        );
                    }
                }
            }
        }
    }
    Outcome::holds("exhaustive")
}

fn b400(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let n = inst.group.order() as u64;
    let count = soft_set_count(&inst.group, &ctx.universe);
    let triples = count.saturating_mul(count).saturating_mul(count);
    if matches!(inst.mode, Mode::Exhaustive) && within_budget(triples, 30 * n * n) {
        let all: Vec<SoftSet> = enumerate_soft_sets(&inst.group, &ctx.universe, DEFAULT_BUDGET)
            .expect("within budget")
            .collect();
        for f in &all {
            for g in &all {
                let fg = soft_product(f, g).expect("same group");
                for h in &all {
                    let lhs = soft_product(&fg, h).expect("same group");
                    let rhs = soft_product(f, &soft_product(g, h).expect("same group")).expect("same group");
                    if lhs != rhs {
                        return Outcome::violated(
                            "exhaustive",
                            Witness::new(
                                vec![],
                                format!(
                                    "f={}; g={}; h={}; (f*g)*h differs from f*(g*h)",
                                    masks_of(f),
                                    masks_of(g),
                                    masks_of(h)
                                ),
                            ),
                        );
                    }
                }
            }
        }
        return Outcome::holds("exhaustive");
    }
    let samples = samples_of(inst);
    let seed = seed_of(inst, TheoremId::B400, "triples");
    let mut rng = SplitMix64::new(seed);
    for _ in 0..samples {
        let f = random_soft(&inst.group, &ctx.universe, &mut rng);
        let g = random_soft(&inst.group, &ctx.universe, &mut rng);
        let h = random_soft(&inst.group, &ctx.universe, &mut rng);
        let lhs = soft_product(&soft_product(&f, &g).unwrap(), &h).unwrap();
        let rhs = soft_product(&f, &soft_product(&g, &h).unwrap()).unwrap();
        if lhs != rhs {
            return Outcome::violated(
                random_mode_str(samples, seed),
                Witness::new(
                    vec![],
                    format!("f={}; g={}; h={}; associativity broken", masks_of(&f), masks_of(&g), masks_of(&h)),
                ),
            );
        }
    }
    Outcome::holds(random_mode_str(samples, seed))
}

fn b420(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let g = &inst.group;
    let n = g.order();
    let drawn = draw_all_soft(inst, TheoremId::B420, g, &ctx.universe, 12 * (n * n) as u64);
    for f in &drawn.items {
        let alpha = f.image_of_set(&(0..n).collect::<Vec<_>>());
        for u in 0..n {
            let p = SoftSet::point(g, u, &alpha).unwrap();
            let left = soft_product(&p, f).expect("same group");
            let right = soft_product(f, &p).expect("same group");
            for x in 0..n {
                let lexp = f.mask_at(g.mul(g.inv(u), x));
                let rexp = f.mask_at(g.mul(x, g.inv(u)));
                if left.mask_at(x) != lexp || right.mask_at(x) != rexp {
                    return Outcome::violated(
                        drawn.mode,
                        Witness::new(
                            vec![u, x],
                            format!("f={}; point translation fails at u={}, x={}", masks_of(f), g.name(u), g.name(x)),
                        ),
                    );
                }
            }
        }
    }
    Outcome::holds(drawn.mode)
}

fn b430(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let n = inst.group.order() as u64;
    let drawn = draw_all_soft(inst, TheoremId::B430, &inst.group, &ctx.universe, 3 * n);
    for f in &drawn.items {
        let inv = soft_inverse(f);
        let c1 = f.is_soft_subset(&inv).unwrap();
        let c2 = inv.is_soft_subset(f).unwrap();
        let c3 = *f == inv;
        if c1 != c2 || c2 != c3 {
            return Outcome::violated(
                drawn.mode,
                Witness::new(vec![], format!("f={}; conditions ({c1},{c2},{c3}) disagree", masks_of(f))),
            );
        }
    }
    Outcome::holds(drawn.mode)
}

fn b480(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let n = inst.group.order() as u64;
    let drawn = draw_all_soft(inst, TheoremId::B480, &inst.group, &ctx.universe, 15 * n * n);
    for f in &drawn.items {
        let direct = softint_core::intgroup::int_group_violation(f).is_none();
        let by_product = softint_core::intgroup::is_int_group_by_product(f);
        if direct != by_product {
            return Outcome::violated(
                drawn.mode,
                Witness::new(
                    vec![],
                    format!("f={}; direct={direct}, product-route={by_product}", masks_of(f)),
                ),
            );
        }
    }
    Outcome::holds(drawn.mode)
}

fn b490(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let n = inst.group.order() as u64;
    let drawn = match draw_int_groups(inst, TheoremId::B490, ctx, 25 * n * n) {
        Ok(d) => d,
        Err(o) => return o,
    };
    let items = pair_capped(&drawn, 25 * n * n);
    for (f, g) in items {
        let fg = soft_product(f.soft(), g.soft()).unwrap();
        let gf = soft_product(g.soft(), f.soft()).unwrap();
        let valid = softint_core::intgroup::int_group_violation(&fg).is_none();
        if valid != (fg == gf) {
            return Outcome::violated(
                drawn.mode.clone(),
                Witness::new(
                    vec![],
                    format!(
                        "f={}; g={}; f*g valid={valid} but commuting={}",
                        masks_of(f.soft()),
                        masks_of(g.soft()),
                        fg == gf
                    ),
                ),
            );
        }
    }
    Outcome::holds(drawn.mode)
}

/// All ordered pairs when the square fits the work gate, otherwise a
/// deterministic diagonal-ish slice.
fn pair_capped(drawn: &Drawn<SoftIntGroup>, factor: u64) -> Vec<(&SoftIntGroup, &SoftIntGroup)> {
    let k = drawn.items.len();
    if within_budget((k as u128) * (k as u128), factor) {
        let mut out = Vec::with_capacity(k * k);
        for f in &drawn.items {
            for g in &drawn.items {
                out.push((f, g));
            }
        }
        out
    } else {
        let mut out = Vec::with_capacity(k);
        for (i, f) in drawn.items.iter().enumerate() {
            out.push((f, &drawn.items[(i * 7 + 1) % k]));
        }
        out
    }
}

// --- normality criteria ----------------------------------------------------

fn c15(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let n = inst.group.order() as u64;
    let drawn = match draw_int_groups(inst, TheoremId::C15, ctx, 20 * n * n) {
        Ok(d) => d,
        Err(o) => return o,
    };
    for f in &drawn.items {
        let verdicts: Vec<bool> =
            NormalityCriterion::ALL.iter().map(|&c| f.is_normal_by(c)).collect();
        if verdicts.iter().any(|&v| v != verdicts[0]) {
            let names: Vec<String> = NormalityCriterion::ALL
                .iter()
                .zip(&verdicts)
                .map(|(c, v)| format!("{}={v}", c.name()))
                .collect();
            return Outcome::violated(
                drawn.mode,
                Witness::new(
                    vec![],
                    format!("f={}; criteria disagree: {}", masks_of(f.soft()), names.join(", ")),
                ),
            );
        }
    }
    Outcome::holds(drawn.mode)
}

fn c20(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    if !inst.group.is_abelian() {
        return Outcome::unmet(inst.mode.describe(), "group is not Abelian");
    }
    let n = inst.group.order() as u64;
    let drawn = match draw_int_groups(inst, TheoremId::C20, ctx, n * n) {
        Ok(d) => d,
        Err(o) => return o,
    };
    for f in &drawn.items {
        if !f.is_normal() {
            return Outcome::violated(
                drawn.mode,
                Witness::new(vec![], format!("f={}; not normal over an Abelian group", masks_of(f.soft()))),
            );
        }
    }
    Outcome::holds(drawn.mode)
}

fn c30(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let n = inst.group.order() as u64;
    let drawn = match draw_normals(inst, TheoremId::C30, ctx, 5 * n * n) {
        Ok(d) => d,
        Err(o) => return o,
    };
    // the universal soft set once per instance
    let universal = SoftSet::universal(&inst.group, &ctx.universe);
    match check_int_group(universal) {
        Ok(ig) if ig.is_normal() => {}
        _ => {
            return Outcome::violated(
                drawn.mode,
                Witness::new(vec![], "universal soft set failed to be a normal int-group"),
            )
        }
    }
    for f in &drawn.items {
        let e_mask = f.mask_at(inst.group.identity());
        let alpha = softint_core::USet::from_mask(&ctx.universe, e_mask).unwrap();
        let block = SoftSet::a_alpha(&inst.group, &f.e_set(), &alpha).unwrap();
        let ok = matches!(check_int_group(block.clone()), Ok(ig) if ig.is_normal());
        if !ok {
            return Outcome::violated(
                drawn.mode,
                Witness::new(
                    f.e_set(),
                    format!("f={}; e-set block {} is not a normal int-group", masks_of(f.soft()), masks_of(&block)),
                ),
            );
        }
    }
    Outcome::holds(drawn.mode)
}

fn c35(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let n = inst.group.order() as u64;
    let drawn = match draw_normals(inst, TheoremId::C35, ctx, 4 * n * n) {
        Ok(d) => d,
        Err(o) => return o,
    };
    for (f, g) in pair_capped(&drawn, 4 * n * n) {
        let meet = f.soft().intersection(g.soft()).unwrap();
        let ok = matches!(check_int_group(meet), Ok(ig) if ig.is_normal());
        if !ok {
            return Outcome::violated(
                drawn.mode.clone(),
                Witness::new(
                    vec![],
                    format!("f={}; g={}; meet is not a normal int-group", masks_of(f.soft()), masks_of(g.soft())),
                ),
            );
        }
    }
    if let Some(first) = drawn.items.first() {
        let mut acc = first.soft().clone();
        for f in &drawn.items[1..] {
            acc = acc.intersection(f.soft()).unwrap();
        }
        if !matches!(check_int_group(acc), Ok(ig) if ig.is_normal()) {
            return Outcome::violated(drawn.mode, Witness::new(vec![], "whole-family meet not normal"));
        }
    }
    Outcome::holds(drawn.mode)
}

fn c90fwd(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let n = inst.group.order() as u64;
    let drawn = match draw_int_groups(inst, TheoremId::C90Fwd, ctx, 2 * n * n) {
        Ok(d) => d,
        Err(o) => return o,
    };
    for f in &drawn.items {
        if f.commutator_value_test() && !f.is_normal() {
            return Outcome::violated(
                drawn.mode,
                Witness::new(
                    vec![],
                    format!("f={}; commutator values all equal f(e) yet f is not normal", masks_of(f.soft())),
                ),
            );
        }
    }
    Outcome::holds(drawn.mode)
}

fn c90conv(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let n = inst.group.order() as u64;
    let drawn = match draw_normals(inst, TheoremId::C90Conv, ctx, 2 * n * n) {
        Ok(d) => d,
        Err(o) => return o,
    };
    let mut bad = 0usize;
    let mut first: Option<(SoftIntGroup, usize, usize)> = None;
    for f in &drawn.items {
        if let Some((x, y)) = f.commutator_value_witness() {
            bad += 1;
            if first.is_none() {
                first = Some((f.clone(), x, y));
            }
        }
    }
    match first {
        None => Outcome::holds(drawn.mode),
        Some((f, x, y)) => {
            let g = inst.group.clone();
            let c = g.commutator(x, y);
            let detail = format!(
                "{bad} of {} normal int-groups have f([x,y]) != f(e); first: f={}; x={}, y={}, [x,y]={}, f([x,y])={}, f(e)={}",
                drawn.items.len(),
                masks_of(f.soft()),
                g.name(x),
                g.name(y),
                g.name(c),
                set_str(f.soft(), f.mask_at(c)),
                set_str(f.soft(), f.mask_at(g.identity()))
            );
            Outcome::violated(
                drawn.mode,
                Witness::new(vec![x, y], format!("f={}; f([x,y]) != f(e)", masks_of(f.soft()))),
            )
            .with_detail(detail)
        }
    }
}

fn c95(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let mode = "exhaustive";
    let subgroups = match subgroups_or_unmet(ctx, mode) {
        Ok(s) => s,
        Err(o) => return o,
    };
    let derived = softint_core::group::commutator_subgroup(&inst.group);
    for n_sub in subgroups.iter().filter(|s| s.is_normal()) {
        let q = QuotientGroup::new(n_sub).expect("normal");
        let contained = derived.members().iter().all(|&c| n_sub.contains(c));
        if q.is_abelian() != contained {
            return Outcome::violated(
                mode,
                Witness::new(
                    n_sub.members().to_vec(),
                    format!("G/N abelian={} but G' inside N={}", q.is_abelian(), contained),
                ),
            );
        }
    }
    Outcome::holds(mode)
}

fn c100(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let n = inst.group.order() as u64;
    let drawn = match draw_normals(inst, TheoremId::C100, ctx, 5 * n * n) {
        Ok(d) => d,
        Err(o) => return o,
    };
    let mut bad = 0usize;
    let mut first: Option<SoftIntGroup> = None;
    for f in &drawn.items {
        let abelian = f.quotient_by_eset_abelian().expect("drawn normal");
        if !abelian {
            bad += 1;
            if first.is_none() {
                first = Some(f.clone());
            }
        }
    }
    match first {
        None => Outcome::holds(drawn.mode),
        Some(f) => {
            let eset = f.e_set();
            let names: Vec<&str> = eset.iter().map(|&x| inst.group.name(x)).collect();
            let detail = format!(
                "{bad} of {} normal int-groups give a non-Abelian quotient by their e-set; first: f={}; e-set={{{}}}; |G/e_f|={}",
                drawn.items.len(),
                masks_of(f.soft()),
                names.join(","),
                inst.group.order() / eset.len()
            );
            Outcome::violated(
                drawn.mode,
                Witness::new(eset, format!("f={}; G/e_f is not Abelian", masks_of(f.soft()))),
            )
            .with_detail(detail)
        }
    }
}

fn c110(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let n = inst.group.order() as u64;
    let drawn = match draw_int_groups(inst, TheoremId::C110, ctx, 2 * n * n) {
        Ok(d) => d,
        Err(o) => return o,
    };
    for f in &drawn.items {
        let lhs = f.is_normal();
        let rhs = f.is_normal_by(NormalityCriterion::CommutatorSup);
        if lhs != rhs {
            return Outcome::violated(
                drawn.mode,
                Witness::new(
                    vec![],
                    format!("f={}; normal={lhs} but commutator criterion={rhs}", masks_of(f.soft())),
                ),
            );
        }
    }
    Outcome::holds(drawn.mode)
}

fn c190(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let n = inst.group.order() as u64;
    let drawn = match draw_normals(inst, TheoremId::C190, ctx, 8 * n * n) {
        Ok(d) => d,
        Err(o) => return o,
    };
    for f in &drawn.items {
        let report = f.level_structure();
        if !report.poset_normal || report.chain_normal == Some(false) {
            return Outcome::violated(
                drawn.mode,
                Witness::new(
                    vec![],
                    format!("f={}; a nested pair of level subgroups fails normality", masks_of(f.soft())),
                ),
            );
        }
    }
    Outcome::holds(drawn.mode)
}

fn c220(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let n = inst.group.order();
    let m = ctx.universe.size();
    let drawn = draw_all_soft(inst, TheoremId::C220, &inst.group, &ctx.universe, 25 * (n * n) as u64);
    for f in &drawn.items {
        let lhs = matches!(check_int_group(f.clone()), Ok(ig) if ig.is_normal());
        // every level in P(U) when small, else the value class and its meets
        let rhs = if m <= 12 {
            let mut ok = true;
            'levels: for alpha in 0..=ctx.universe.full_mask() {
                let cut = f.inclusion_cut(alpha);
                if cut.is_empty() {
                    continue;
                }
                match Subgroup::new(&inst.group, &cut) {
                    Ok(s) if s.is_normal() => {}
                    _ => {
                        ok = false;
                        break 'levels;
                    }
                }
                if alpha == ctx.universe.full_mask() {
                    break;
                }
            }
            ok
        } else {
            softint_core::intgroup::is_int_group_by_cuts(f)
                && check_int_group(f.clone()).map(|ig| ig.is_normal()).unwrap_or(false)
        };
        if lhs != rhs {
            return Outcome::violated(
                drawn.mode,
                Witness::new(
                    vec![],
                    format!("f={}; normal-int-group={lhs} but normal-cut route={rhs}", masks_of(f)),
                ),
            );
        }
    }
    Outcome::holds(drawn.mode)
}

fn c221(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let n = inst.group.order();
    let drawn = match draw_normals(inst, TheoremId::C221, ctx, 3 * (n * n) as u64) {
        Ok(d) => d,
        Err(o) => return o,
    };
    for f in &drawn.items {
        let eset = f.e_set();
        let ok = matches!(Subgroup::new(&inst.group, &eset), Ok(s) if s.is_normal());
        if !ok {
            return Outcome::violated(
                drawn.mode,
                Witness::new(eset, format!("f={}; e-set is not a normal subgroup", masks_of(f.soft()))),
            );
        }
        // the support is a union of conjugacy classes, and a normal subgroup
        // whenever it is a subgroup at all
        let support = f.support();
        for u in 0..n {
            for &x in &support {
                if !support.contains(&inst.group.conj(u, x)) {
                    return Outcome::violated(
                        drawn.mode,
                        Witness::new(
                            vec![u, x],
                            format!("f={}; support is not conjugation-invariant", masks_of(f.soft())),
                        ),
                    );
                }
            }
        }
        if let Ok(s) = Subgroup::new(&inst.group, &support) {
            if !s.is_normal() {
                return Outcome::violated(
                    drawn.mode,
                    Witness::new(support, format!("f={}; support subgroup is not normal", masks_of(f.soft()))),
                );
            }
        }
    }
    Outcome::holds(drawn.mode)
}

fn c226(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let mode = if ctx.int_groups.is_some() && matches!(inst.mode, Mode::Exhaustive) {
        "exhaustive"
    } else {
        "constructive"
    };
    let subgroups = match subgroups_or_unmet(ctx, mode) {
        Ok(s) => s,
        Err(o) => return o,
    };
    let dedekind = subgroups.iter().all(Subgroup::is_normal);

    // characteristic soft sets witness one direction outright
    for h in subgroups {
        let ch = SoftSet::characteristic(&inst.group, &ctx.universe, h.members()).unwrap();
        let ig = match check_int_group(ch) {
            Ok(ig) => ig,
            Err(v) => {
                return Outcome::violated(
                    mode,
                    Witness::new(h.members().to_vec(), format!("characteristic soft set invalid: {v}")),
                )
            }
        };
        if ig.is_normal() != h.is_normal() {
            return Outcome::violated(
                mode,
                Witness::new(
                    h.members().to_vec(),
                    format!(
                        "characteristic int-group normal={} but subgroup normal={}",
                        ig.is_normal(),
                        h.is_normal()
                    ),
                ),
            );
        }
    }

    if let (Mode::Exhaustive, Some(igs)) = (&inst.mode, &ctx.int_groups) {
        let all_normal = igs.iter().all(SoftIntGroup::is_normal);
        if all_normal != dedekind {
            let witness = igs.iter().find(|f| !f.is_normal());
            return Outcome::violated(
                mode,
                Witness::new(
                    vec![],
                    match witness {
                        Some(f) => format!(
                            "dedekind={dedekind} but a non-normal int-group exists: f={}",
                            masks_of(f.soft())
                        ),
                        None => format!("dedekind={dedekind} but every int-group is normal"),
                    },
                ),
            );
        }
    }
    Outcome::holds(mode)
}

fn c227(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let n = inst.group.order() as u64;
    let normals = match draw_normals(inst, TheoremId::C227, ctx, 25 * n * n) {
        Ok(d) => d,
        Err(o) => return o,
    };
    // pair each normal f with arbitrary soft sets g
    let count = soft_set_count(&inst.group, &ctx.universe);
    let pair_work = count.saturating_mul(normals.items.len() as u128);
    if normals.exhaustive
        && matches!(inst.mode, Mode::Exhaustive)
        && within_budget(pair_work, 25 * n * n)
    {
        for f in &normals.items {
            for g in enumerate_soft_sets(&inst.group, &ctx.universe, DEFAULT_BUDGET).expect("within budget") {
                let fg = soft_product(f.soft(), &g).unwrap();
                let gf = soft_product(&g, f.soft()).unwrap();
                if fg != gf {
                    return Outcome::violated(
                        "exhaustive",
                        Witness::new(
                            vec![],
                            format!("f={}; g={}; f*g != g*f", masks_of(f.soft()), masks_of(&g)),
                        ),
                    );
                }
            }
        }
        return Outcome::holds("exhaustive");
    }
    let samples = samples_of(inst);
    let seed = seed_of(inst, TheoremId::C227, "partners");
    let mut rng = SplitMix64::new(seed);
    for f in &normals.items {
        for _ in 0..samples.max(4) / 4 {
            let g = random_soft(&inst.group, &ctx.universe, &mut rng);
            let fg = soft_product(f.soft(), &g).unwrap();
            let gf = soft_product(&g, f.soft()).unwrap();
            if fg != gf {
                return Outcome::violated(
                    random_mode_str(samples, seed),
                    Witness::new(vec![], format!("f={}; g={}; f*g != g*f", masks_of(f.soft()), masks_of(&g))),
                );
            }
        }
    }
    Outcome::holds(random_mode_str(samples, seed))
}

fn c228(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let n = inst.group.order() as u64;
    let normals = match draw_normals(inst, TheoremId::C228, ctx, 25 * n * n) {
        Ok(d) => d,
        Err(o) => return o,
    };
    let ints = match draw_int_groups(inst, TheoremId::C228, ctx, 25 * n * n) {
        Ok(d) => d,
        Err(o) => return o,
    };
    let mode = combine(&normals.mode, &ints.mode);
    for f in &normals.items {
        for g in &ints.items {
            let fg = soft_product(f.soft(), g.soft()).unwrap();
            if let Some(v) = softint_core::intgroup::int_group_violation(&fg) {
                return Outcome::violated(
                    mode,
                    Witness::new(
                        vec![],
                        format!("f={}; g={}; f*g breaks: {v}", masks_of(f.soft()), masks_of(g.soft())),
                    ),
                );
            }
        }
    }
    Outcome::holds(mode)
}

fn c229(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let n = inst.group.order() as u64;
    let normals = match draw_normals(inst, TheoremId::C229, ctx, 25 * n * n) {
        Ok(d) => d,
        Err(o) => return o,
    };
    for (f, g) in pair_capped(&normals, 25 * n * n) {
        let fg = soft_product(f.soft(), g.soft()).unwrap();
        let ok = matches!(check_int_group(fg), Ok(ig) if ig.is_normal());
        if !ok {
            return Outcome::violated(
                normals.mode.clone(),
                Witness::new(
                    vec![],
                    format!("f={}; g={}; f*g is not a normal int-group", masks_of(f.soft()), masks_of(g.soft())),
                ),
            );
        }
    }
    Outcome::holds(normals.mode)
}

fn c240(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let n = inst.group.order() as u64;
    let normals = match draw_normals(inst, TheoremId::C240, ctx, 30 * n * n) {
        Ok(d) => d,
        Err(o) => return o,
    };
    // idempotence
    for f in &normals.items {
        if soft_product(f.soft(), f.soft()).unwrap() != *f.soft() {
            return Outcome::violated(
                normals.mode,
                Witness::new(vec![], format!("f={}; f*f != f", masks_of(f.soft()))),
            );
        }
    }
    // commutativity
    for (f, g) in pair_capped(&normals, 30 * n * n) {
        if soft_product(f.soft(), g.soft()).unwrap() != soft_product(g.soft(), f.soft()).unwrap() {
            return Outcome::violated(
                normals.mode.clone(),
                Witness::new(vec![], format!("f={}; g={}; f*g != g*f", masks_of(f.soft()), masks_of(g.soft()))),
            );
        }
    }
    // associativity over triples, capped
    let k = normals.items.len() as u128;
    let triples_ok = within_budget(k * k * k, 30 * n * n);
    if triples_ok {
        for f in &normals.items {
            for g in &normals.items {
                let fg = soft_product(f.soft(), g.soft()).unwrap();
                for h in &normals.items {
                    let lhs = soft_product(&fg, h.soft()).unwrap();
                    let rhs = soft_product(f.soft(), &soft_product(g.soft(), h.soft()).unwrap()).unwrap();
                    if lhs != rhs {
                        return Outcome::violated(
                            normals.mode,
                            Witness::new(
                                vec![],
                                format!(
                                    "f={}; g={}; h={}; associativity broken",
                                    masks_of(f.soft()),
                                    masks_of(g.soft()),
                                    masks_of(h.soft())
                                ),
                            ),
                        );
                    }
                }
            }
        }
    } else {
        let items = &normals.items;
        for (i, f) in items.iter().enumerate() {
            let g = &items[(i * 5 + 1) % items.len()];
            let h = &items[(i * 11 + 2) % items.len()];
            let lhs = soft_product(&soft_product(f.soft(), g.soft()).unwrap(), h.soft()).unwrap();
            let rhs = soft_product(f.soft(), &soft_product(g.soft(), h.soft()).unwrap()).unwrap();
            if lhs != rhs {
                return Outcome::violated(
                    normals.mode,
                    Witness::new(vec![], "sampled associativity triple broken".to_string()),
                );
            }
        }
    }
    Outcome::holds(normals.mode)
}

fn c246(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let n = inst.group.order();
    let drawn = match draw_int_groups(inst, TheoremId::C246, ctx, 2 * (n * n) as u64) {
        Ok(d) => d,
        Err(o) => return o,
    };
    for f in &drawn.items {
        let fixed = (0..n).all(|u| f.conjugate(u) == *f);
        if fixed != f.is_normal() {
            return Outcome::violated(
                drawn.mode,
                Witness::new(
                    vec![],
                    format!("f={}; conjugation-fixed={fixed} but normal={}", masks_of(f.soft()), f.is_normal()),
                ),
            );
        }
    }
    Outcome::holds(drawn.mode)
}

fn c270(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let n = inst.group.order();
    let drawn = match draw_int_groups(inst, TheoremId::C270, ctx, 5 * (n * n) as u64) {
        Ok(d) => d,
        Err(o) => return o,
    };
    let g = &inst.group;
    for f in &drawn.items {
        // members straight from the definition, then the subgroup claim
        let members: Vec<usize> = (0..n)
            .filter(|&x| (0..n).all(|y| f.mask_at(g.mul(x, y)) == f.mask_at(g.mul(y, x))))
            .collect();
        let sub = match Subgroup::new(g, &members) {
            Ok(s) => s,
            Err(_) => {
                return Outcome::violated(
                    drawn.mode,
                    Witness::new(members, format!("f={}; normalizer is not a subgroup", masks_of(f.soft()))),
                )
            }
        };
        if !members.contains(&g.identity()) {
            return Outcome::violated(
                drawn.mode,
                Witness::new(members, "identity missing from the normalizer".to_string()),
            );
        }
        for &x in &members {
            if !sub.contains(g.inv(x)) {
                return Outcome::violated(
                    drawn.mode,
                    Witness::new(vec![x], "normalizer not closed under inverses".to_string()),
                );
            }
        }
        let restricted = f.restrict(&sub).expect("same parent");
        if !restricted.is_normal() {
            return Outcome::violated(
                drawn.mode,
                Witness::new(
                    members,
                    format!("f={}; restriction to the normalizer is not normal", masks_of(f.soft())),
                ),
            );
        }
        if f.is_normal() != (members.len() == n) {
            return Outcome::violated(
                drawn.mode,
                Witness::new(
                    members.clone(),
                    format!(
                        "f={}; normal={} but |N(f)|={} of {n}",
                        masks_of(f.soft()),
                        f.is_normal(),
                        members.len()
                    ),
                ),
            );
        }
        // the conjugation characterization: N(f) = {u : conjugate(f, u) = f}
        for u in 0..n {
            if (f.conjugate(u) == *f) != sub.contains(u) {
                return Outcome::violated(
                    drawn.mode,
                    Witness::new(
                        vec![u],
                        format!(
                            "f={}; u={} fixes f under conjugation iff it normalizes, which failed",
                            masks_of(f.soft()),
                            g.name(u)
                        ),
                    ),
                );
            }
        }
    }
    Outcome::holds(drawn.mode)
}

fn c290(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let n = inst.group.order();
    let drawn = match draw_int_groups(inst, TheoremId::C290, ctx, 5 * (n * n) as u64) {
        Ok(d) => d,
        Err(o) => return o,
    };
    let mut applicable = 0usize;
    for f in &drawn.items {
        let conjugates = match f.distinct_conjugates() {
            Ok(c) => c,
            Err(_) => continue, // empty support is outside the hypothesis
        };
        applicable += 1;
        let normalizer = f.normalizer();
        if conjugates.len() * normalizer.order() != n {
            return Outcome::violated(
                drawn.mode,
                Witness::new(
                    normalizer.members().to_vec(),
                    format!(
                        "f={}; {} conjugates x |N(f)|={} != |G|={n}",
                        masks_of(f.soft()),
                        conjugates.len(),
                        normalizer.order()
                    ),
                ),
            );
        }
    }
    if applicable == 0 {
        return Outcome::unmet(drawn.mode, "no int-group with nonempty support in scope");
    }
    Outcome::holds(drawn.mode)
}

fn c300(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let n = inst.group.order() as u64;
    let drawn = match draw_int_groups(inst, TheoremId::C300, ctx, 10 * n * n) {
        Ok(d) => d,
        Err(o) => return o,
    };
    for f in &drawn.items {
        let core = f.largest_normal_contained();
        if softint_core::intgroup::int_group_violation(core.soft()).is_some()
            || !core.is_normal()
            || !core.soft().is_soft_subset(f.soft()).unwrap()
        {
            return Outcome::violated(
                drawn.mode,
                Witness::new(
                    vec![],
                    format!("f={}; conjugate meet is not a normal int-group inside f", masks_of(f.soft())),
                ),
            );
        }
        if f.is_normal() && core != *f {
            return Outcome::violated(
                drawn.mode,
                Witness::new(vec![], format!("f={}; normal f must equal its conjugate meet", masks_of(f.soft()))),
            );
        }
        // the "largest" claim, against the enumerated normal int-groups
        if let Some(normals) = &ctx.normals {
            for g in normals {
                if g.soft().is_soft_subset(f.soft()).unwrap()
                    && !g.soft().is_soft_subset(core.soft()).unwrap()
                {
                    return Outcome::violated(
                        drawn.mode,
                        Witness::new(
                            vec![],
                            format!(
                                "f={}; normal g={} inside f escapes the conjugate meet",
                                masks_of(f.soft()),
                                masks_of(g.soft())
                            ),
                        ),
                    );
                }
            }
        }
    }
    Outcome::holds(drawn.mode)
}

// --- cosets and quotients ---------------------------------------------------

fn c345(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let n = inst.group.order();
    let drawn = match draw_int_groups(inst, TheoremId::C345, ctx, (n * n * n) as u64) {
        Ok(d) => d,
        Err(o) => return o,
    };
    for f in &drawn.items {
        let mut left: Vec<SoftSet> = Vec::new();
        let mut right: Vec<SoftSet> = Vec::new();
        for a in 0..n {
            let l = f.coset(a, Side::Left).as_soft_set();
            if !left.contains(&l) {
                left.push(l);
            }
            let r = f.coset(a, Side::Right).as_soft_set();
            if !right.contains(&r) {
                right.push(r);
            }
        }
        if left.len() != right.len() {
            return Outcome::violated(
                drawn.mode,
                Witness::new(
                    vec![],
                    format!("f={}; {} left cosets vs {} right cosets", masks_of(f.soft()), left.len(), right.len()),
                ),
            );
        }
    }
    Outcome::holds(drawn.mode)
}

fn c355(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let n = inst.group.order();
    let drawn = match draw_normals(inst, TheoremId::C355, ctx, 3 * (n * n) as u64) {
        Ok(d) => d,
        Err(o) => return o,
    };
    let grp = &inst.group;
    for f in &drawn.items {
        for a in 0..n {
            let coset = f.coset(a, Side::Left);
            for x in 0..n {
                if coset.mask_at(grp.mul(x, a)) != f.mask_at(x)
                    || coset.mask_at(grp.mul(a, x)) != f.mask_at(x)
                {
                    return Outcome::violated(
                        drawn.mode,
                        Witness::new(
                            vec![a, x],
                            format!("f={}; (af)(xa) or (af)(ax) differs from f(x)", masks_of(f.soft())),
                        ),
                    );
                }
            }
        }
    }
    Outcome::holds(drawn.mode)
}

fn c360(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let n = inst.group.order();
    let drawn = match draw_int_groups(inst, TheoremId::C360, ctx, (n * n * n) as u64) {
        Ok(d) => d,
        Err(o) => return o,
    };
    for f in &drawn.items {
        let eset = f.e_subgroup();
        for a in 0..n {
            let fa = f.coset(a, Side::Left);
            for b in 0..n {
                let same_coset = fa == f.coset(b, Side::Left);
                let same_eset_coset = eset.left_coset(a) == eset.left_coset(b);
                if same_coset != same_eset_coset {
                    return Outcome::violated(
                        drawn.mode,
                        Witness::new(
                            vec![a, b],
                            format!(
                                "f={}; value-function equality {} vs e-set coset equality {}",
                                masks_of(f.soft()),
                                same_coset,
                                same_eset_coset
                            ),
                        ),
                    );
                }
            }
        }
    }
    Outcome::holds(drawn.mode)
}

fn c370(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let n = inst.group.order();
    let drawn = match draw_normals(inst, TheoremId::C370, ctx, (n * n * n) as u64) {
        Ok(d) => d,
        Err(o) => return o,
    };
    for f in &drawn.items {
        for a in 0..n {
            let fa = f.coset(a, Side::Left);
            for b in 0..n {
                if fa == f.coset(b, Side::Left) && f.mask_at(a) != f.mask_at(b) {
                    return Outcome::violated(
                        drawn.mode,
                        Witness::new(
                            vec![a, b],
                            format!("f={}; af = bf yet f(a) != f(b)", masks_of(f.soft())),
                        ),
                    );
                }
            }
        }
    }
    Outcome::holds(drawn.mode)
}

fn c380(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let n = inst.group.order();
    let drawn = match draw_normals(inst, TheoremId::C380, ctx, 12 * (n * n * n) as u64) {
        Ok(d) => d,
        Err(o) => return o,
    };
    let grp = &inst.group;
    for f in &drawn.items {
        for x in 0..n {
            let xf = f.coset(x, Side::Left).as_soft_set();
            for y in 0..n {
                let yf = f.coset(y, Side::Left).as_soft_set();
                let product = soft_product(&xf, &yf).unwrap();
                if product != f.coset(grp.mul(x, y), Side::Left).as_soft_set() {
                    return Outcome::violated(
                        drawn.mode,
                        Witness::new(
                            vec![x, y],
                            format!("f={}; (xf)*(yf) != (xy)f", masks_of(f.soft())),
                        ),
                    );
                }
            }
        }
        // the quotient construction validates the group axioms on the way
        let q = match f.quotient_group() {
            Ok(q) => q,
            Err(e) => {
                return Outcome::violated(
                    drawn.mode,
                    Witness::new(vec![], format!("f={}; quotient failed: {e}", masks_of(f.soft()))),
                )
            }
        };
        if grp.is_abelian() && !q.group().is_abelian() {
            return Outcome::violated(
                drawn.mode,
                Witness::new(vec![], format!("f={}; G Abelian but G/f is not", masks_of(f.soft()))),
            );
        }
    }
    Outcome::holds(drawn.mode)
}

fn c383(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let n = inst.group.order();
    let drawn = match draw_normals(inst, TheoremId::C383, ctx, 5 * (n * n) as u64) {
        Ok(d) => d,
        Err(o) => return o,
    };
    for f in &drawn.items {
        let q = f.quotient_group().expect("drawn normal");
        let classic = QuotientGroup::new(&f.e_subgroup()).expect("e-set normal for normal f");
        // well-defined and injective together: classes coincide exactly when
        // e-set cosets do
        for x in 0..n {
            for y in 0..n {
                if (q.class_of(x) == q.class_of(y)) != (classic.coset_of(x) == classic.coset_of(y)) {
                    return Outcome::violated(
                        drawn.mode,
                        Witness::new(
                            vec![x, y],
                            format!("f={}; xf = yf disagrees with x e_f = y e_f", masks_of(f.soft())),
                        ),
                    );
                }
            }
        }
        if q.order() != classic.order() {
            return Outcome::violated(
                drawn.mode,
                Witness::new(
                    vec![],
                    format!("f={}; |G/f|={} but |G/e_f|={}", masks_of(f.soft()), q.order(), classic.order()),
                ),
            );
        }
        // product preservation of xf -> x e_f
        for a in 0..q.order() {
            for b in 0..q.order() {
                let x = q.reps()[a];
                let y = q.reps()[b];
                let lhs = classic.coset_of(q.reps()[q.group().mul(a, b)]);
                let rhs = classic.group().mul(classic.coset_of(x), classic.coset_of(y));
                if lhs != rhs {
                    return Outcome::violated(
                        drawn.mode,
                        Witness::new(
                            vec![x, y],
                            format!("f={}; bijection does not preserve products", masks_of(f.soft())),
                        ),
                    );
                }
            }
        }
    }
    Outcome::holds(drawn.mode)
}

fn c385(inst: &Instance, ctx: &SweepCtx) -> Outcome {
    let n = inst.group.order();
    let drawn = match draw_normals(inst, TheoremId::C385, ctx, 5 * (n * n) as u64) {
        Ok(d) => d,
        Err(o) => return o,
    };
    for f in &drawn.items {
        let q = f.quotient_group().expect("drawn normal");
        let qs = q.induced_soft();
        for x in 0..n {
            if qs.mask_at(q.class_of(x)) != f.mask_at(x) {
                return Outcome::violated(
                    drawn.mode,
                    Witness::new(
                        vec![x],
                        format!("f={}; induced value at xf differs from f(x)", masks_of(f.soft())),
                    ),
                );
            }
        }
        if softint_core::intgroup::int_group_violation(qs.soft()).is_some() || !qs.is_normal() {
            return Outcome::violated(
                drawn.mode,
                Witness::new(
                    vec![],
                    format!("f={}; induced soft set is not a normal int-group", masks_of(f.soft())),
                ),
            );
        }
    }
    Outcome::holds(drawn.mode)
}

// --- transport ---------------------------------------------------------------

fn c420(inst: &Instance, cache: &mut CtxCache) -> Outcome {
    let hom = &inst.hom.as_ref().expect("gated by needs_homomorphism").hom;
    if !hom.is_surjective() {
        return Outcome::unmet(inst.mode.describe(), "homomorphism is not onto");
    }
    // quantify over the homomorphism's domain, which for inclusions is the
    // subgroup as a group of its own
    let dom_ctx = cache.ctx(hom.domain(), &inst.universe);
    let drawn = match draw_normals_over(inst, TheoremId::C420, &dom_ctx, "domain-normals") {
        Ok(d) => d,
        Err(o) => return o,
    };
    for f in &drawn.items {
        let img = soft_image(hom, f.soft()).expect("domain matches");
        let ok = matches!(check_int_group(img.clone()), Ok(ig) if ig.is_normal());
        if !ok {
            return Outcome::violated(
                drawn.mode,
                Witness::new(
                    vec![],
                    format!("f={}; image {} is not a normal int-group", masks_of(f.soft()), masks_of(&img)),
                ),
            );
        }
    }
    Outcome::holds(drawn.mode)
}

fn c430(inst: &Instance, cache: &mut CtxCache) -> Outcome {
    let named = inst.hom.as_ref().expect("gated by needs_homomorphism");
    let hom = &named.hom;
    let cod_ctx = cache.ctx(hom.codomain(), &inst.universe);
    let drawn = match draw_normals_over(inst, TheoremId::C430, &cod_ctx, "codomain-normals") {
        Ok(d) => d,
        Err(o) => return o,
    };
    for g in &drawn.items {
        let pre = soft_preimage(hom, g.soft()).expect("codomain matches");
        let ok = matches!(check_int_group(pre.clone()), Ok(ig) if ig.is_normal());
        if !ok {
            return Outcome::violated(
                drawn.mode,
                Witness::new(
                    vec![],
                    format!("g={}; preimage {} is not a normal int-group", masks_of(g.soft()), masks_of(&pre)),
                ),
            );
        }
    }
    Outcome::holds(drawn.mode)
}

/// Normal int-groups over an arbitrary group (the domain or codomain of a
/// homomorphism).
fn draw_normals_over(
    inst: &Instance,
    id: TheoremId,
    ctx: &SweepCtx,
    tag: &str,
) -> Result<Drawn<SoftIntGroup>, Outcome> {
    let n = ctx.group.order() as u64;
    if matches!(inst.mode, Mode::Exhaustive) {
        if let Some(normals) = &ctx.normals {
            if within_budget(normals.len() as u128, 5 * n * n) {
                return Ok(Drawn { items: normals.clone(), mode: "exhaustive".into(), exhaustive: true });
            }
        }
    }
    if ctx.subgroups.is_none() {
        return Err(Outcome::unmet(
            inst.mode.describe(),
            "subgroup enumeration bound exceeded, so no seeded int-groups",
        ));
    }
    let samples = samples_of(inst);
    let seed = seed_of(inst, id, tag);
    let mut rng = SplitMix64::new(seed);
    let items = (0..samples)
        .map(|_| crate::chain::generate_chain_normal_int_group(&ctx.group, &ctx.universe, rng.next_u64()))
        .collect();
    Ok(Drawn { items, mode: random_mode_str(samples, seed), exhaustive: false })
}

fn b163(inst: &Instance) -> Outcome {
    let named = inst.hom.as_ref().expect("gated by needs_homomorphism");
    let hom = &named.hom;
    let n = hom.codomain().order() as u64;
    let drawn = draw_all_soft(inst, TheoremId::B163, hom.codomain(), &inst.universe, 8 * n);
    let surjective = hom.is_surjective();
    for g in &drawn.items {
        let back = soft_image(hom, &soft_preimage(hom, g).expect("codomain matches")).expect("domain matches");
        if !back.is_soft_subset(g).unwrap() {
            return Outcome::violated(
                drawn.mode,
                Witness::new(vec![], format!("g={}; image(preimage(g)) escapes g", masks_of(g))),
            );
        }
        if surjective && back != *g {
            return Outcome::violated(
                drawn.mode,
                Witness::new(
                    vec![],
                    format!("g={}; map onto but image(preimage(g)) = {} differs", masks_of(g), masks_of(&back)),
                ),
            );
        }
    }
    Outcome::holds(drawn.mode)
}

fn d376(inst: &Instance) -> Outcome {
    let named = inst.hom.as_ref().expect("gated by needs_homomorphism");
    let hom = &named.hom;
    let codomain = hom.codomain();
    let m = inst.universe.size();
    let n_dom = hom.domain().order() as u64;

    // Number of pairs f ⊆ g: (3^m)^{|H|}
    let mut pairs: u128 = 1;
    let three_m = 3u128.saturating_pow(m as u32);
    for _ in 0..codomain.order() {
        pairs = pairs.saturating_mul(three_m);
    }
    if matches!(inst.mode, Mode::Exhaustive) && within_budget(pairs, 6 * n_dom) {
        for g in enumerate_soft_sets(codomain, &inst.universe, DEFAULT_BUDGET).expect("within budget") {
            // walk every f with f(x) ⊆ g(x) pointwise via a submask odometer
            let g_masks: Vec<u64> = g.masks().to_vec();
            let mut digits = g_masks.clone();
            loop {
                let f = SoftSet::from_masks(codomain, &inst.universe, digits.clone()).unwrap();
                let pre_f = soft_preimage(hom, &f).unwrap();
                let pre_g = soft_preimage(hom, &g).unwrap();
                if !pre_f.is_soft_subset(&pre_g).unwrap() {
                    return Outcome::violated(
                        "exhaustive",
                        Witness::new(
                            vec![],
                            format!("f={}; g={}; preimage loses inclusion", masks_of(&f), masks_of(&g)),
                        ),
                    );
                }
                // odometer over submasks, last element fastest
                let mut i = digits.len();
                loop {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                    if digits[i] == 0 {
                        digits[i] = g_masks[i];
                    } else {
                        digits[i] = (digits[i] - 1) & g_masks[i];
                        break;
                    }
                }
                if digits.iter().zip(&g_masks).all(|(d, g)| d == g) {
                    break;
                }
            }
        }
        return Outcome::holds("exhaustive");
    }
    let samples = samples_of(inst);
    let seed = seed_of(inst, TheoremId::D376, "pairs");
    let mut rng = SplitMix64::new(seed);
    for _ in 0..samples {
        let g = random_soft(codomain, &inst.universe, &mut rng);
        let f_masks: Vec<u64> = g.masks().iter().map(|&v| v & rng.mask(m)).collect();
        let f = SoftSet::from_masks(codomain, &inst.universe, f_masks).unwrap();
        let pre_f = soft_preimage(hom, &f).unwrap();
        let pre_g = soft_preimage(hom, &g).unwrap();
        if !pre_f.is_soft_subset(&pre_g).unwrap() {
            return Outcome::violated(
                random_mode_str(samples, seed),
                Witness::new(vec![], format!("f={}; g={}; preimage loses inclusion", masks_of(&f), masks_of(&g))),
            );
        }
    }
    Outcome::holds(random_mode_str(samples, seed))
}

fn d593(inst: &Instance, cache: &mut CtxCache) -> Outcome {
    let named = inst.hom.as_ref().expect("gated by needs_homomorphism");
    let hom = &named.hom;
    let cod_ctx = cache.ctx(hom.codomain(), &inst.universe);
    let drawn = match draw_normals_over(inst, TheoremId::D593, &cod_ctx, "codomain-normals") {
        Ok(d) => d,
        Err(o) => return o,
    };
    // image(preimage(g)) concentrates g onto the image subgroup, so the
    // unrestricted normality claim can only be asked when that subgroup is
    // normal in the codomain (surjections included); in general the result
    // is an int-group whose restriction to the image subgroup is normal.
    let mut image_members: Vec<usize> = hom.map().to_vec();
    image_members.sort_unstable();
    image_members.dedup();
    let image_sub = match Subgroup::new(hom.codomain(), &image_members) {
        Ok(s) => s,
        Err(_) => {
            return Outcome::violated(
                drawn.mode,
                Witness::new(image_members, "homomorphic image is not a subgroup".to_string()),
            )
        }
    };
    let full_claim = hom.is_surjective() || image_sub.is_normal();
    for g in &drawn.items {
        let back = soft_image(hom, &soft_preimage(hom, g.soft()).unwrap()).unwrap();
        let ig = match check_int_group(back.clone()) {
            Ok(ig) => ig,
            Err(v) => {
                return Outcome::violated(
                    drawn.mode,
                    Witness::new(
                        vec![],
                        format!("g={}; image(preimage(g)) = {} breaks: {v}", masks_of(g.soft()), masks_of(&back)),
                    ),
                )
            }
        };
        if full_claim && !ig.is_normal() {
            return Outcome::violated(
                drawn.mode,
                Witness::new(
                    vec![],
                    format!(
                        "g={}; image(preimage(g)) = {} is not a normal int-group",
                        masks_of(g.soft()),
                        masks_of(&back)
                    ),
                ),
            );
        }
        let restricted = ig.restrict(&image_sub).expect("image subgroup of the codomain");
        if !restricted.is_normal() {
            return Outcome::violated(
                drawn.mode,
                Witness::new(
                    image_sub.members().to_vec(),
                    format!(
                        "g={}; image(preimage(g)) restricted to the image subgroup is not normal",
                        masks_of(g.soft())
                    ),
                ),
            );
        }
    }
    Outcome::holds(drawn.mode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn pinned_scopes_enforce_their_preconditions() {
        // a pinned soft set that is not an int-group makes int-scoped
        // checkers report precondition-unmet rather than a violation
        let d3 = FiniteGroup::dihedral(3).unwrap();
        let u = Universe::alphabetic(1).unwrap();
        let not_ig = SoftSet::from_masks(&d3, &u, vec![0, 1, 0, 0, 0, 0]).unwrap();
        assert!(check_int_group(not_ig.clone()).is_err());
        let inst = Instance::sweep("dihedral:3", d3.clone(), u.clone(), Mode::Exhaustive)
            .with_pinned("bad", not_ig);
        let report = check_theorem(TheoremId::B20, &inst);
        assert_eq!(report.verdict, Verdict::PreconditionUnmet);

        // a pinned valid but non-normal int-group is rejected by
        // normal-scoped checkers
        let f2 = fixtures::f2();
        let inst = Instance::sweep("dihedral:3", f2.group().clone(), f2.universe().clone(), Mode::Exhaustive)
            .with_pinned("f2", f2.soft().clone());
        let report = check_theorem(TheoremId::C355, &inst);
        assert_eq!(report.verdict, Verdict::PreconditionUnmet);
        // while int-scoped checkers accept it
        let report = check_theorem(TheoremId::C15, &inst);
        assert_eq!(report.verdict, Verdict::Holds);
        assert_eq!(report.mode, "pinned");
    }

    #[test]
    fn hom_checkers_require_a_homomorphism() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let u = Universe::alphabetic(1).unwrap();
        let inst = Instance::sweep("cyclic:4", z4, u, Mode::Exhaustive);
        for id in [TheoremId::D376, TheoremId::C420, TheoremId::C430, TheoremId::B163, TheoremId::D593] {
            assert_eq!(check_theorem(id, &inst).verdict, Verdict::PreconditionUnmet);
        }
    }

    #[test]
    fn c20_needs_an_abelian_group() {
        let d3 = FiniteGroup::dihedral(3).unwrap();
        let u = Universe::alphabetic(1).unwrap();
        let inst = Instance::sweep("dihedral:3", d3, u, Mode::Exhaustive);
        assert_eq!(check_theorem(TheoremId::C20, &inst).verdict, Verdict::PreconditionUnmet);

        let z6 = FiniteGroup::cyclic(6).unwrap();
        let u = Universe::alphabetic(2).unwrap();
        let inst = Instance::sweep("cyclic:6", z6, u, Mode::Exhaustive);
        assert_eq!(check_theorem(TheoremId::C20, &inst).verdict, Verdict::Holds);
    }

    #[test]
    fn groups_beyond_the_subgroup_bound_degrade_to_unmet() {
        // order 120 exceeds the enumeration bound: scoped checkers report
        // precondition-unmet, sweep checkers still run
        let s5 = FiniteGroup::symmetric(5).unwrap();
        let u = Universe::alphabetic(1).unwrap();
        let inst = Instance::sweep("symmetric:5", s5, u, Mode::Random { samples: 4, seed: 3 });
        assert_eq!(check_theorem(TheoremId::B20, &inst).verdict, Verdict::PreconditionUnmet);
        assert_eq!(check_theorem(TheoremId::C226, &inst).verdict, Verdict::PreconditionUnmet);
        assert_eq!(check_theorem(TheoremId::B430, &inst).verdict, Verdict::Holds);
        assert_eq!(check_theorem(TheoremId::B480, &inst).verdict, Verdict::Holds);
    }

    #[test]
    fn random_mode_records_the_seed() {
        let q8 = FiniteGroup::quaternion();
        let u = Universe::alphabetic(2).unwrap();
        let inst = Instance::sweep("quaternion", q8, u, Mode::Random { samples: 20, seed: 5 });
        let report = check_theorem(TheoremId::C246, &inst);
        assert_eq!(report.verdict, Verdict::Holds);
        assert!(report.mode.starts_with("random:20:"), "mode: {}", report.mode);
    }
}
