//! Verb dispatch: every verb maps onto one operation chain of the library,
//! with deterministic output for golden testing.

use softint_core::io::{emit_soft_set, parse_group_spec, parse_soft_set, IoError};
use softint_core::{
    check_int_group, soft_image, soft_preimage, soft_product, FiniteGroup, Homomorphism,
    IntGroupViolation, NormalityCriterion, QuotientGroup, SoftIntGroup, SoftSet, Subgroup,
};
use softint_suite::{run_suite, Mode, SuiteConfig};

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or verb; exit 2.
    Usage(String),
    /// Bad input file or spec; exit 2.
    Input(String),
    /// A failed operation on well-formed input; exit 1.
    Op(String),
}

impl From<IoError> for CliError {
    fn from(e: IoError) -> Self {
        CliError::Input(e.to_string())
    }
}

struct Flags {
    group: Option<String>,
    soft: Option<String>,
    soft2: Option<String>,
    hom: Option<String>,
    universe: Option<usize>,
    format: String,
    preset: Option<String>,
    groups: Option<String>,
    universes: Option<String>,
    mode: Option<String>,
    list: bool,
}

fn parse_flags(args: &[String]) -> Result<Flags, CliError> {
    let mut flags = Flags {
        group: None,
        soft: None,
        soft2: None,
        hom: None,
        universe: None,
        format: "text".into(),
        preset: None,
        groups: None,
        universes: None,
        mode: None,
        list: false,
    };
    let mut i = 0;
    let value = |i: &mut usize| -> Result<String, CliError> {
        *i += 1;
        args.get(*i)
            .cloned()
            .ok_or_else(|| CliError::Usage(format!("flag {} needs a value", args[*i - 1])))
    };
    while i < args.len() {
        match args[i].as_str() {
            "--group" => flags.group = Some(value(&mut i)?),
            "--soft" => flags.soft = Some(value(&mut i)?),
            "--soft2" => flags.soft2 = Some(value(&mut i)?),
            "--hom" => flags.hom = Some(value(&mut i)?),
            "--universe" => {
                let v = value(&mut i)?;
                flags.universe =
                    Some(v.parse().map_err(|_| CliError::Usage(format!("bad universe size {v:?}")))?);
            }
            "--format" => {
                let v = value(&mut i)?;
                if v != "text" && v != "structured" {
                    return Err(CliError::Usage(format!("unknown format {v:?}")));
                }
                flags.format = v;
            }
            "--preset" => flags.preset = Some(value(&mut i)?),
            "--groups" => flags.groups = Some(value(&mut i)?),
            "--universes" => flags.universes = Some(value(&mut i)?),
            "--mode" => flags.mode = Some(value(&mut i)?),
            "--list" => flags.list = true,
            other => return Err(CliError::Usage(format!("unknown flag {other:?}"))),
        }
        i += 1;
    }
    Ok(flags)
}

pub fn dispatch(args: &[String]) -> Result<u8, CliError> {
    let verb = args[0].as_str();
    let flags = parse_flags(&args[1..])?;
    match verb {
        "validate" => validate(&flags),
        "normal" => normal(&flags),
        "levels" => levels(&flags),
        "normalizer" => normalizer(&flags),
        "conjugates" => conjugates(&flags),
        "product" => product(&flags),
        "quotient" => quotient(&flags),
        "image" => transport(&flags, true),
        "preimage" => transport(&flags, false),
        "enumerate" => enumerate(&flags),
        "theorems" => theorems(&flags),
        other => Err(CliError::Usage(format!("unknown verb {other:?}"))),
    }
}

fn load_group(flags: &Flags) -> Result<FiniteGroup, CliError> {
    let spec = flags.group.as_ref().ok_or_else(|| CliError::Usage("--group is required".into()))?;
    Ok(parse_group_spec(spec)?)
}

fn load_soft(flags: &Flags, group: &FiniteGroup) -> Result<SoftSet, CliError> {
    let path = flags.soft.as_ref().ok_or_else(|| CliError::Usage("--soft is required".into()))?;
    load_soft_at(path, group)
}

fn load_soft_at(path: &str, group: &FiniteGroup) -> Result<SoftSet, CliError> {
    let src = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {path}: {e}")))?;
    Ok(parse_soft_set(group, &src)?)
}

fn members_str(group: &FiniteGroup, members: &[usize]) -> String {
    let names: Vec<&str> = members.iter().map(|&m| group.name(m)).collect();
    format!("{{{}}}", names.join(","))
}

fn values_str(f: &SoftSet) -> String {
    let parts: Vec<String> =
        (0..f.group().order()).map(|x| f.universe().render_mask(f.mask_at(x))).collect();
    format!("[{}]", parts.join(","))
}

/// Validation plus the emitted `# validated:` note for soft sets the CLI
/// prints back out.
fn validation_note(f: &SoftSet) -> Option<String> {
    match check_int_group(f.clone()) {
        Ok(ig) if ig.is_normal() => Some("int-group, normal".into()),
        Ok(_) => Some("int-group".into()),
        Err(_) => None,
    }
}

fn describe_violation(f: &SoftSet, v: IntGroupViolation) -> (String, String) {
    let g = f.group();
    match v {
        IntGroupViolation::Groupoid { x, y } => {
            let xy = g.mul(x, y);
            (
                format!("witness ({},{})", g.name(x), g.name(y)),
                format!(
                    "f({}*{}) = f({}) = {}; f({}) & f({}) = {}",
                    g.name(x),
                    g.name(y),
                    g.name(xy),
                    f.universe().render_mask(f.mask_at(xy)),
                    g.name(x),
                    g.name(y),
                    f.universe().render_mask(f.mask_at(x) & f.mask_at(y))
                ),
            )
        }
        IntGroupViolation::Inverse { x } => (
            format!("witness ({})", g.name(x)),
            format!(
                "f({}) = {}; f({}^-1) = {}",
                g.name(x),
                f.universe().render_mask(f.mask_at(x)),
                g.name(x),
                f.universe().render_mask(f.mask_at(g.inv(x)))
            ),
        ),
    }
}

fn validate(flags: &Flags) -> Result<u8, CliError> {
    let group = load_group(flags)?;
    let soft = load_soft(flags, &group)?;
    match check_int_group(soft.clone()) {
        Ok(ig) => {
            if ig.is_normal() {
                println!("int-group: yes; normal: yes");
                Ok(0)
            } else {
                let (x, y) = ig.normality_witness().expect("not normal");
                println!("int-group: yes; normal: no; witness ({},{})", group.name(x), group.name(y));
                let conj = group.conj(x, y);
                println!(
                    "  f({}{}{}^-1) = f({}) = {}; f({}) = {}",
                    group.name(x),
                    group.name(y),
                    group.name(x),
                    group.name(conj),
                    soft.universe().render_mask(soft.mask_at(conj)),
                    group.name(y),
                    soft.universe().render_mask(soft.mask_at(y))
                );
                Ok(0)
            }
        }
        Err(v) => {
            let (witness, detail) = describe_violation(&soft, v);
            println!("int-group: no; {witness}");
            println!("  {detail}");
            Ok(1)
        }
    }
}

fn require_int_group(soft: SoftSet) -> Result<SoftIntGroup, CliError> {
    check_int_group(soft).map_err(|v| CliError::Op(format!("not an int-group: {v}")))
}

fn normal(flags: &Flags) -> Result<u8, CliError> {
    let group = load_group(flags)?;
    let soft = load_soft(flags, &group)?;
    match check_int_group(soft.clone()) {
        Ok(ig) => {
            println!("int-group: yes");
            let verdicts: Vec<bool> =
                NormalityCriterion::ALL.iter().map(|&c| ig.is_normal_by(c)).collect();
            for (c, v) in NormalityCriterion::ALL.iter().zip(&verdicts) {
                println!("{}: {}", c.name(), if *v { "yes" } else { "no" });
            }
            let agree = verdicts.iter().all(|&v| v == verdicts[0]);
            println!("agreement: {}", if agree { "yes" } else { "no" });
            println!("normal: {}", if verdicts[0] { "yes" } else { "no" });
            Ok(u8::from(!verdicts[0]))
        }
        Err(v) => {
            let (witness, detail) = describe_violation(&soft, v);
            println!("int-group: no; {witness}");
            println!("  {detail}");
            Ok(1)
        }
    }
}

fn levels(flags: &Flags) -> Result<u8, CliError> {
    let group = load_group(flags)?;
    let ig = require_int_group(load_soft(flags, &group)?)?;
    println!("int-group: yes; normal: {}", if ig.is_normal() { "yes" } else { "no" });

    let image = ig.soft().image_class();
    let sets: Vec<String> = image.sets.iter().map(|s| s.to_string()).collect();
    println!("image (over support): {}", sets.join(", "));

    let report = ig.level_structure();
    println!("level subgroups ({}):", report.subgroups.len());
    for sub in &report.subgroups {
        println!("  {} (order {})", members_str(&group, sub.members()), sub.order());
    }
    if report.is_chain {
        let chain: Vec<String> =
            report.subgroups.iter().map(|s| members_str(&group, s.members())).collect();
        println!("images form a chain: {}", chain.join(" <= "));
        let ok = report.chain_normal == Some(true);
        match report.chain_violation {
            Some((i, j)) => println!(
                "chain-form level normality: no ({} not normal in {})",
                members_str(&group, report.subgroups[i].members()),
                members_str(&group, report.subgroups[j].members())
            ),
            None => println!("chain-form level normality: yes"),
        }
        println!("verdict: {}", if ok { "soft level normal" } else { "not soft level normal" });
        println!("poset-form level-normal: {}", if report.poset_normal { "yes" } else { "no" });
    } else {
        println!(
            "images not a chain; poset-form level-normal: {}",
            if report.poset_normal { "yes" } else { "no" }
        );
    }
    Ok(0)
}

fn normalizer(flags: &Flags) -> Result<u8, CliError> {
    let group = load_group(flags)?;
    let ig = require_int_group(load_soft(flags, &group)?)?;
    let n = ig.normalizer();
    println!("N(f) = {} (order {})", members_str(&group, n.members()), n.order());
    println!("index [G : N(f)] = {}", n.index());
    println!("normal: {}", if ig.is_normal() { "yes" } else { "no" });
    Ok(0)
}

fn conjugates(flags: &Flags) -> Result<u8, CliError> {
    let group = load_group(flags)?;
    let ig = require_int_group(load_soft(flags, &group)?)?;
    let n = ig.normalizer();
    println!(
        "normalizer N(f) = {} (order {}), index {}",
        members_str(&group, n.members()),
        n.order(),
        n.index()
    );
    let conjugates = ig
        .distinct_conjugates()
        .map_err(|e| CliError::Op(e.to_string()))?;
    println!("distinct conjugates: {}", conjugates.len());
    let mut seen: Vec<&SoftIntGroup> = Vec::new();
    for u in 0..group.order() {
        let c = ig.conjugate(u);
        if let Some(pos) = conjugates.iter().position(|k| *k == c) {
            if !seen.iter().any(|k| **k == c) {
                println!("  conjugate {} (by {}): {}", pos, group.name(u), values_str(c.soft()));
                seen.push(&conjugates[pos]);
            }
        }
    }
    println!(
        "index check: {} conjugates x |N(f)| {} = {}",
        conjugates.len(),
        n.order(),
        conjugates.len() * n.order()
    );
    Ok(0)
}

fn product(flags: &Flags) -> Result<u8, CliError> {
    let group = load_group(flags)?;
    let f = load_soft(flags, &group)?;
    let path2 = flags.soft2.as_ref().ok_or_else(|| CliError::Usage("--soft2 is required".into()))?;
    let g = load_soft_at(path2, &group)?;
    let fg = soft_product(&f, &g).map_err(|e| CliError::Op(e.to_string()))?;
    print!("{}", emit_soft_set(&fg, validation_note(&fg).as_deref()));
    Ok(0)
}

fn quotient(flags: &Flags) -> Result<u8, CliError> {
    let group = load_group(flags)?;
    let ig = require_int_group(load_soft(flags, &group)?)?;
    let q = ig.quotient_group().map_err(|e| CliError::Op(e.to_string()))?;
    println!("quotient group G/f: order {}", q.order());
    println!("coset table:");
    for a in 0..q.order() {
        let row: Vec<&str> = (0..q.order()).map(|b| q.group().name(q.group().mul(a, b))).collect();
        println!("  {}", row.join(" "));
    }
    let eset = ig.e_subgroup();
    let classic = QuotientGroup::new(&eset).map_err(|e| CliError::Op(e.to_string()))?;
    println!("cosets as e-set cosets (e_f = {}):", members_str(&group, eset.members()));
    for (i, &rep) in q.reps().iter().enumerate() {
        println!(
            "  {} <-> {}",
            q.group().name(i),
            members_str(&group, &eset.left_coset(rep))
        );
    }
    let qs = q.induced_soft();
    println!("induced soft values:");
    for i in 0..q.order() {
        println!("  {} : {}", q.group().name(i), qs.universe().render_mask(qs.mask_at(i)));
    }
    let mut preserved = q.order() == classic.order();
    'outer: for a in 0..q.order() {
        for b in 0..q.order() {
            let lhs = classic.coset_of(q.reps()[q.group().mul(a, b)]);
            let rhs = classic.group().mul(classic.coset_of(q.reps()[a]), classic.coset_of(q.reps()[b]));
            if lhs != rhs {
                preserved = false;
                break 'outer;
            }
        }
    }
    println!("bijection xf -> x e_f product-preserving: {}", if preserved { "yes" } else { "no" });
    Ok(u8::from(!preserved))
}

fn parse_hom(spec: &str, group: &FiniteGroup) -> Result<Homomorphism, CliError> {
    let parse_members = |body: &str| -> Result<Vec<usize>, CliError> {
        body.split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| CliError::Usage(format!("bad element index {p:?} in hom spec")))
            })
            .collect()
    };
    if spec == "identity" {
        return Ok(Homomorphism::identity(group));
    }
    if let Some(rest) = spec.strip_prefix("mod:") {
        let (n, k) = rest
            .split_once(':')
            .ok_or_else(|| CliError::Usage("mod spec is mod:n:k".into()))?;
        let n: usize = n.parse().map_err(|_| CliError::Usage("bad n in mod:n:k".into()))?;
        let k: usize = k.parse().map_err(|_| CliError::Usage("bad k in mod:n:k".into()))?;
        return Homomorphism::cyclic_mod(n, k).map_err(|e| CliError::Input(e.to_string()));
    }
    if let Some(n) = spec.strip_prefix("sign:") {
        let n: usize = n.parse().map_err(|_| CliError::Usage("bad n in sign:n".into()))?;
        return Homomorphism::dihedral_sign(n).map_err(|e| CliError::Input(e.to_string()));
    }
    if let Some(body) = spec.strip_prefix("quot:") {
        let members = parse_members(body)?;
        let sub = Subgroup::new(group, &members).map_err(|e| CliError::Input(e.to_string()))?;
        let q = QuotientGroup::new(&sub).map_err(|e| CliError::Input(e.to_string()))?;
        return Ok(q.projection());
    }
    if let Some(body) = spec.strip_prefix("incl:") {
        let members = parse_members(body)?;
        let sub = Subgroup::new(group, &members).map_err(|e| CliError::Input(e.to_string()))?;
        return Ok(Homomorphism::inclusion(&sub));
    }
    Err(CliError::Usage(format!(
        "unknown hom spec {spec:?}; expected mod:n:k, sign:n, quot:..., incl:..., or identity"
    )))
}

fn transport(flags: &Flags, forward: bool) -> Result<u8, CliError> {
    let group = load_group(flags)?;
    let spec = flags.hom.as_ref().ok_or_else(|| CliError::Usage("--hom is required".into()))?;
    let hom = parse_hom(spec, &group)?;
    let side_group = if forward { hom.domain() } else { hom.codomain() };
    let soft = load_soft(flags, side_group)?;
    let result = if forward {
        soft_image(&hom, &soft).map_err(|e| CliError::Op(e.to_string()))?
    } else {
        soft_preimage(&hom, &soft).map_err(|e| CliError::Op(e.to_string()))?
    };
    print!("{}", emit_soft_set(&result, validation_note(&result).as_deref()));
    Ok(0)
}

fn enumerate(flags: &Flags) -> Result<u8, CliError> {
    let group = load_group(flags)?;
    let m = flags.universe.ok_or_else(|| CliError::Usage("--universe is required".into()))?;
    let universe = softint_core::Universe::alphabetic(m).map_err(|e| CliError::Input(e.to_string()))?;
    let total = softint_suite::soft_set_count(&group, &universe);
    let igs: Vec<SoftIntGroup> =
        softint_suite::enumerate_int_groups(&group, &universe, softint_suite::DEFAULT_BUDGET)
            .map_err(|e| CliError::Op(e.to_string()))?
            .collect();
    let normal = igs.iter().filter(|f| f.is_normal()).count();
    println!("soft sets: {total}");
    println!("int-groups: {}", igs.len());
    println!("normal int-groups: {normal}");
    if flags.list {
        for f in &igs {
            let tag = if f.is_normal() { " (normal)" } else { "" };
            println!("  {}{tag}", values_str(f.soft()));
        }
    }
    Ok(0)
}

fn theorems(flags: &Flags) -> Result<u8, CliError> {
    let config = match (&flags.preset, &flags.groups) {
        (Some(p), _) if p == "desk" => {
            let mut c = SuiteConfig::desk();
            if let Some(mode) = &flags.mode {
                c.mode = parse_mode(mode)?;
            }
            c
        }
        (Some(p), _) => return Err(CliError::Usage(format!("unknown preset {p:?}"))),
        (None, Some(groups)) => {
            let universes = flags
                .universes
                .as_deref()
                .unwrap_or("1,2")
                .split(',')
                .map(|p| p.trim().parse::<usize>().map_err(|_| CliError::Usage(format!("bad universe size {p:?}"))))
                .collect::<Result<Vec<usize>, CliError>>()?;
            SuiteConfig {
                group_specs: groups.split(',').map(|s| s.trim().to_string()).collect(),
                universe_sizes: universes,
                mode: match &flags.mode {
                    Some(m) => parse_mode(m)?,
                    None => Mode::Exhaustive,
                },
            }
        }
        (None, None) => {
            return Err(CliError::Usage("theorems needs --preset desk or --groups".into()))
        }
    };
    let report = run_suite(&config).map_err(|e| CliError::Input(e.to_string()))?;
    if flags.format == "structured" {
        print!("{}", report.to_structured());
    } else {
        print!("{}", report.to_text());
    }
    Ok(report.exit_code() as u8)
}

fn parse_mode(spec: &str) -> Result<Mode, CliError> {
    if spec == "exhaustive" {
        return Ok(Mode::Exhaustive);
    }
    if let Some(rest) = spec.strip_prefix("random:") {
        let (n, seed) = rest
            .split_once(':')
            .ok_or_else(|| CliError::Usage("random mode is random:N:SEED".into()))?;
        let samples: u32 = n.parse().map_err(|_| CliError::Usage("bad N in random:N:SEED".into()))?;
        let seed: u64 = seed.parse().map_err(|_| CliError::Usage("bad SEED in random:N:SEED".into()))?;
        return Ok(Mode::Random { samples, seed });
    }
    Err(CliError::Usage(format!("unknown mode {spec:?}")))
}
