//! The `wreathlab` command line.
//!
//! Every subcommand prints one report, as text or (with `--format json`) as
//! a single JSON document. Exit status: 0 on success, 1 when a check is
//! falsified, 2 on usage or input errors.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::automorphisms::{
    all_compatible_specs, block_map, blocks_of, verify_characteristic, AutSpecText, CharSubgroupTag, LampAutSpec,
};
use crate::classifier::{biconditional_experiment, classify, cross_validate_cyclic, Outcome};
use crate::dl::{check_cayley_isomorphism, dl_ball, element_of_vertex, graph_neighbors, vertex_of_element, DLVertex};
use crate::error::{Error, Result};
use crate::group::{
    abelianization, automorphism_group, build_group, center, commutator_subgroup, conjugacy_classes, is_simple,
    AbelianDecomposition, FiniteGroup, GroupAut,
};
use crate::suite::{run_acceptance, run_criterion};
use crate::twisted::{
    block_class_count, block_fixed_points, reidemeister_abelian, reidemeister_fh, reidemeister_wreath,
    twisted_classes, window_class_count, window_class_count_direct,
};
use crate::wreath::{
    normal_form, parse_word, word_length_bfs, word_length_ct, GeneratingSet, Side, WreathElement, WreathGroup,
};
use crate::Caps;

#[derive(Parser, Debug)]
#[command(name = "wreathlab", version, about = "Exact computations in wreath products G ≀ Z")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Largest BFS radius.
    #[arg(long, default_value_t = Caps::default().ball, global = true)]
    pub ball_cap: usize,
    /// Largest non-cyclic group whose automorphisms are enumerated.
    #[arg(long, default_value_t = Caps::default().aut, global = true)]
    pub aut_cap: usize,
    /// Largest block or window carrier enumerated element by element.
    #[arg(long, default_value_t = Caps::default().carrier, global = true)]
    pub carrier_cap: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Finite groups.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Elements, words, normal forms and word lengths.
    #[command(subcommand)]
    Wreath(WreathCmd),
    /// Diestel-Leader graphs.
    #[command(subcommand)]
    Dl(DlCmd),
    /// Automorphisms of G ≀ Z.
    #[command(subcommand)]
    Aut(AutCmd),
    /// Twisted classes and Reidemeister numbers.
    #[command(subcommand)]
    Reid(ReidCmd),
    /// Decide property R∞ for G ≀ Z.
    Classify {
        #[arg(long)]
        group: String,
    },
    /// Batch experiments.
    #[command(subcommand)]
    Suite(SuiteCmd),
}

#[derive(Subcommand, Debug)]
pub enum GroupCmd {
    /// Order, generators, center, commutator subgroup, classes, automorphisms.
    Info {
        /// `C5`, `C2xC4`, `D12`, `Q8`, `S5`, `A6`, or `@file` with a table.
        spec: String,
    },
}

/// The wreath product: `--n N` for `L_N`, or `--group SPEC`.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct Base {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub group: Option<String>,
}

/// An element, as a literal `[p=v, ...]@m` or as a word.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct ElementArg {
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub word: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum WreathCmd {
    Mul {
        #[command(flatten)]
        base: Base,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    Inv {
        #[command(flatten)]
        base: Base,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Evaluate a word over `{a, t}` (`--set at`) or `{ta^k}` (`--set ta`).
    Eval {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, default_value = "at")]
        set: GeneratingSet,
    },
    Normform {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        el: ElementArg,
        #[arg(long, default_value = "at")]
        set: GeneratingSet,
        #[arg(long, default_value = "rf")]
        side: Side,
    },
    /// Word length over `{a, t}` by the closed formula.
    Len {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        el: ElementArg,
        #[arg(long, default_value = "at")]
        set: GeneratingSet,
    },
    /// Word length by breadth-first search, up to `--ball-cap`.
    Lenbfs {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        el: ElementArg,
        /// Alphabet of the input word.
        #[arg(long, default_value = "at")]
        set: GeneratingSet,
        /// Generating set for the metric.
        #[arg(long, default_value = "at")]
        metric: GeneratingSet,
    },
}

#[derive(Subcommand, Debug)]
pub enum DlCmd {
    /// Sphere sizes of DL(m, n) around the origin.
    Ball {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        radius: usize,
        #[arg(long)]
        list: bool,
    },
    /// Check that the Cayley graph of L_m over `{t a^k}` is DL(m, m).
    CheckIso {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        radius: usize,
    },
    /// Element to vertex, or vertex to element with `--vertex`.
    Locate {
        #[arg(long)]
        m: usize,
        #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["x", "word"])]
        vertex: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        word: Option<String>,
        #[arg(long, default_value = "ta")]
        set: GeneratingSet,
    },
}

#[derive(Subcommand, Debug)]
pub enum AutCmd {
    Apply {
        #[command(flatten)]
        base: Base,
        /// `xi=<index|*k> c=<int> eps=<+1|-1>`.
        #[arg(long, allow_hyphen_values = true)]
        aut: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        /// Follow with conjugation by this element.
        #[arg(long, allow_hyphen_values = true)]
        conj: Option<String>,
    },
    /// Block maps, class counts and fixed points over a window of positions.
    Blocks {
        #[command(flatten)]
        base: Base,
        #[arg(long, allow_hyphen_values = true)]
        aut: String,
        /// Comma-separated positions.
        #[arg(long, allow_hyphen_values = true, default_value = "0,1")]
        window: String,
    },
    /// Check a subgroup against every `(xi, c, eps)` with `c` in `--offsets`.
    VerifyChar {
        #[command(flatten)]
        base: Base,
        /// lamp-base, commutator-lamps, center-wreath, h<d>, sylow<p>.
        #[arg(long)]
        tag: CharSubgroupTag,
        #[arg(long, default_value_t = 4)]
        window: usize,
        #[arg(long, allow_hyphen_values = true, default_value = "-1,0,1")]
        offsets: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Orbit,
    Cokernel,
    Fh,
    All,
}

#[derive(Subcommand, Debug)]
pub enum ReidCmd {
    /// `R(phi)` for an automorphism of a finite group.
    Finite {
        #[arg(long)]
        group: String,
        /// Index into the automorphism list, or `*k` on a cyclic group.
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        phi: String,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
    },
    /// `R` of an automorphism of G ≀ Z.
    Wreath {
        #[command(flatten)]
        base: Base,
        #[arg(long, allow_hyphen_values = true)]
        aut: String,
    },
    /// Twisted classes of `phi'` on the blocks meeting a window.
    Window {
        #[command(flatten)]
        base: Base,
        #[arg(long, allow_hyphen_values = true)]
        aut: String,
        #[arg(long, allow_hyphen_values = true)]
        window: String,
        /// Also count by orbit enumeration on the whole window carrier.
        #[arg(long)]
        direct: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum SuiteCmd {
    /// The acceptance criteria; exit 0 iff all pass.
    Acceptance {
        #[arg(long)]
        criterion: Option<u8>,
    },
    /// Classify C(m) for 2 <= m <= limit against `2 | m or 3 | m`.
    Cyclic {
        #[arg(long, default_value_t = 30)]
        limit: usize,
    },
    /// Abelian groups: in the R∞ family iff no finite witness exists.
    Biconditional {
        #[arg(long, default_value_t = 36)]
        max_order: usize,
    },
}

/// A finished report: machine-readable form, text form, and whether every
/// check in it held.
struct Report {
    json: Value,
    text: String,
    ok: bool,
}

impl Report {
    fn new(json: impl Serialize, text: String) -> Result<Self> {
        let json = serde_json::to_value(json).map_err(|e| Error::Domain(e.to_string()))?;
        Ok(Report { json, text, ok: true })
    }

    fn checked(mut self, ok: bool) -> Self {
        self.ok = ok;
        self
    }
}

/// Parses `args` (including the program name), runs, and returns the exit
/// status. Output goes to `out`, diagnostics to `err`.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let caps = Caps { ball: cli.ball_cap, aut: cli.aut_cap, carrier: cli.carrier_cap };
    match execute(&cli.command, &caps) {
        Ok(report) => {
            let body = match cli.format {
                Format::Json => serde_json::to_string_pretty(&report.json).expect("values serialize"),
                Format::Text => report.text.trim_end().to_string(),
            };
            let _ = writeln!(out, "{body}");
            if report.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            match cli.format {
                Format::Json => {
                    let _ = writeln!(out, "{}", json!({ "error": e.to_string() }));
                }
                Format::Text => {
                    let _ = writeln!(err, "error: {e}");
                }
            }
            2
        }
    }
}

pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn load_group(spec: &str) -> Result<FiniteGroup> {
    match spec.strip_prefix('@') {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::GroupSpec(format!("{path}: {e}")))?;
            build_group(&text)
        }
        None => build_group(spec),
    }
}

fn wreath_of(base: &Base) -> Result<WreathGroup> {
    match (&base.n, &base.group) {
        (Some(n), _) => WreathGroup::lamplighter(*n),
        (None, Some(spec)) => Ok(WreathGroup::new(load_group(spec)?)),
        (None, None) => unreachable!("clap requires one of --n, --group"),
    }
}

fn element(w: &WreathGroup, text: &str) -> Result<WreathElement> {
    let x: WreathElement = text.parse()?;
    w.check(&x)?;
    Ok(x)
}

fn element_or_word(w: &WreathGroup, el: &ElementArg, set: GeneratingSet) -> Result<WreathElement> {
    match (&el.x, &el.word) {
        (Some(x), _) => element(w, x),
        (None, Some(word)) => w.eval_word(&parse_word(word, set, w.base().order())?),
        (None, None) => unreachable!("clap requires one of --x, --word"),
    }
}

fn aut_spec(w: &WreathGroup, text: &str, caps: &Caps) -> Result<LampAutSpec> {
    text.parse::<AutSpecText>()?.resolve(w, caps.aut)
}

fn int_list(text: &str) -> Result<Vec<i64>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| t.trim().parse().map_err(|_| Error::Domain(format!("`{t}` is not an integer"))))
        .collect()
}

fn execute(cmd: &Command, caps: &Caps) -> Result<Report> {
    match cmd {
        Command::Group(GroupCmd::Info { spec }) => group_info(spec, caps),
        Command::Wreath(c) => wreath_cmd(c, caps),
        Command::Dl(c) => dl_cmd(c, caps),
        Command::Aut(c) => aut_cmd(c, caps),
        Command::Reid(c) => reid_cmd(c, caps),
        Command::Classify { group } => {
            let v = classify(&load_group(group)?, caps);
            let mut text = format!("{} (order {}): {:?}\n", v.group, v.order, v.outcome);
            for c in v.certificates() {
                let tag = if v.certificate.as_ref() == Some(c) { "certificate" } else { "corroborating" };
                text += &format!("  {tag} {}: {}\n", c.rule, c.facts.join("; "));
            }
            if let Some(w) = &v.witness {
                text += &format!("  witness {}: R = {}\n", w.description, w.value);
            }
            for t in &v.rules_tried {
                text += &format!("  rule {:<18} {:?}: {}\n", t.rule, t.status, t.detail);
            }
            for n in &v.notes {
                text += &format!("  note: {n}\n");
            }
            Report::new(&v, text)
        }
        Command::Suite(c) => suite_cmd(c, caps),
    }
}

fn group_info(spec: &str, caps: &Caps) -> Result<Report> {
    let g = load_group(spec)?;
    let z = center(&g);
    let comm = commutator_subgroup(&g);
    let classes = conjugacy_classes(&g);
    let auts = automorphism_group(&g, caps.aut).map(|a| a.len());
    let ab = abelianization(&g);
    let decomposition = g.is_abelian().then(|| AbelianDecomposition::of_group(&g)).transpose()?;
    let label = |xs: &[usize]| xs.iter().map(|&x| g.label(x)).collect::<Vec<_>>();
    let json = json!({
        "group": g.family().to_string(),
        "order": g.order(),
        "abelian": g.is_abelian(),
        "cyclic": g.is_cyclic(),
        "simple": is_simple(&g),
        "generators": label(g.generators()),
        "center": label(&z),
        "commutator_subgroup_order": comm.len(),
        "abelianization": ab.to_string(),
        "decomposition": decomposition.as_ref().map(|d| d.to_string()),
        "conjugacy_class_sizes": classes.iter().map(Vec::len).collect::<Vec<_>>(),
        "automorphisms": auts.as_ref().ok(),
    });
    let mut text = format!("{} of order {}\n", g.family(), g.order());
    text += &format!("abelian: {}, cyclic: {}, simple: {}\n", g.is_abelian(), g.is_cyclic(), is_simple(&g));
    text += &format!("generators: {}\n", label(g.generators()).join(", "));
    text += &format!("center: order {} {{{}}}\n", z.len(), label(&z).join(", "));
    text += &format!("commutator subgroup: order {}\n", comm.len());
    text += &format!("abelianization: {ab}\n");
    if let Some(d) = &decomposition {
        text += &format!("decomposition: {d}\n");
    }
    text += &format!("conjugacy classes: {}\n", classes.len());
    text += &match &auts {
        Ok(n) => format!("automorphisms: {n}\n"),
        Err(e) => format!("automorphisms: {e}\n"),
    };
    Report::new(json, text)
}

fn wreath_cmd(cmd: &WreathCmd, caps: &Caps) -> Result<Report> {
    match cmd {
        WreathCmd::Mul { base, x, y } => {
            let w = wreath_of(base)?;
            let p = w.mul(&element(&w, x)?, &element(&w, y)?);
            Report::new(json!({ "product": p.to_string() }), p.to_string())
        }
        WreathCmd::Inv { base, x } => {
            let w = wreath_of(base)?;
            let p = w.inv(&element(&w, x)?);
            Report::new(json!({ "inverse": p.to_string() }), p.to_string())
        }
        WreathCmd::Eval { n, word, set } => {
            let w = WreathGroup::lamplighter(*n)?;
            let parsed = parse_word(word, *set, *n)?;
            let x = w.eval_word(&parsed)?;
            Report::new(json!({ "word": parsed.to_string(), "element": x.to_string() }), x.to_string())
        }
        WreathCmd::Normform { n, el, set, side } => {
            let w = WreathGroup::lamplighter(*n)?;
            let x = element_or_word(&w, el, *set)?;
            let nf = normal_form(&w, &x, *side)?;
            let json = json!({
                "element": x.to_string(),
                "normal_form": nf.to_string(),
                "factors": nf.factors().collect::<Vec<_>>(),
                "shift": nf.shift,
                "word": nf.to_word().to_string(),
            });
            Report::new(json, nf.to_string())
        }
        WreathCmd::Len { n, el, set } => {
            let w = WreathGroup::lamplighter(*n)?;
            let x = element_or_word(&w, el, *set)?;
            let len = word_length_ct(&w, &x)?;
            Report::new(json!({ "element": x.to_string(), "length": len }), len.to_string())
        }
        WreathCmd::Lenbfs { n, el, set, metric } => {
            let w = WreathGroup::lamplighter(*n)?;
            let x = element_or_word(&w, el, *set)?;
            let len = word_length_bfs(&w, &x, *metric, caps.ball).ok_or_else(|| Error::Capacity {
                what: format!("distance of {x}"),
                cap: caps.ball,
                flag: "--ball-cap",
            })?;
            Report::new(json!({ "element": x.to_string(), "set": metric.to_string(), "length": len }), len.to_string())
        }
    }
}

fn dl_cmd(cmd: &DlCmd, caps: &Caps) -> Result<Report> {
    match cmd {
        DlCmd::Ball { m, n, radius, list } => {
            let n = n.unwrap_or(*m);
            if *radius > caps.ball {
                return Err(Error::Capacity { what: format!("radius {radius}"), cap: caps.ball, flag: "--ball-cap" });
            }
            if *m < 2 || n < 2 {
                return Err(Error::Domain("DL(m, n) needs m, n >= 2".into()));
            }
            let spheres = dl_ball(*m, n, *radius);
            let sizes: Vec<usize> = spheres.iter().map(Vec::len).collect();
            let mut text = format!("DL({m}, {n}) radius {radius}: spheres {sizes:?}\n");
            if *list {
                for (r, s) in spheres.iter().enumerate() {
                    for v in s {
                        text += &format!("{r} {v}\n");
                    }
                }
            }
            let json = if *list {
                json!({ "m": m, "n": n, "radius": radius, "sphere_sizes": sizes, "spheres": spheres })
            } else {
                json!({ "m": m, "n": n, "radius": radius, "sphere_sizes": sizes })
            };
            Report::new(json, text)
        }
        DlCmd::CheckIso { m, radius } => {
            if *radius > caps.ball {
                return Err(Error::Capacity { what: format!("radius {radius}"), cap: caps.ball, flag: "--ball-cap" });
            }
            let r = check_cayley_isomorphism(*m, *radius)?;
            let text = format!(
                "{}: Cayley graph of L_{m} vs DL({m}, {m}) to radius {radius}, {} vertices, spheres {:?}{}",
                if r.passed { "pass" } else { "FAIL" },
                r.vertices_checked,
                r.cayley_spheres,
                r.mismatch.as_ref().map(|s| format!("\n{s}")).unwrap_or_default()
            );
            let ok = r.passed;
            Ok(Report::new(&r, text)?.checked(ok))
        }
        DlCmd::Locate { m, vertex, x, word, set } => {
            let w = WreathGroup::lamplighter(*m)?;
            let (v, g) = match (vertex, x, word) {
                (Some(v), _, _) => {
                    let v: DLVertex = v.parse()?;
                    v.validate(*m, *m)?;
                    let g = element_of_vertex(&v, *m)?;
                    (v, g)
                }
                (None, Some(x), _) => {
                    let g = element(&w, x)?;
                    (vertex_of_element(&g), g)
                }
                (None, None, Some(word)) => {
                    let g = w.eval_word(&parse_word(word, *set, *m)?)?;
                    (vertex_of_element(&g), g)
                }
                _ => return Err(Error::Domain("give one of --vertex, --x, --word".into())),
            };
            let nbrs = graph_neighbors(&v, *m, *m);
            let json = json!({ "element": g.to_string(), "vertex": v, "neighbors": nbrs });
            Report::new(json, format!("{g}\n{v}"))
        }
    }
}

fn aut_cmd(cmd: &AutCmd, caps: &Caps) -> Result<Report> {
    match cmd {
        AutCmd::Apply { base, aut, x, conj } => {
            let w = wreath_of(base)?;
            let mut s = aut_spec(&w, aut, caps)?;
            if let Some(c) = conj {
                s = s.with_conjugator(element(&w, c)?);
            }
            let g = element(&w, x)?;
            let image = w.apply_aut(&s, &g);
            let json = json!({ "spec": s.describe(w.base()), "element": g.to_string(), "image": image.to_string() });
            Report::new(json, image.to_string())
        }
        AutCmd::Blocks { base, aut, window } => {
            let w = wreath_of(base)?;
            let s = aut_spec(&w, aut, caps)?;
            let mut rows = Vec::new();
            let mut text = format!("{}\n", s.describe(w.base()));
            for (lo, hi) in blocks_of(&s, &int_list(window)?)? {
                let b = block_map(&w, &s, lo)?;
                let count = block_class_count(&w, &s, lo, caps.carrier)?;
                let fixed = block_fixed_points(&w, &s, lo)?;
                text += &format!(
                    "block {{{lo}, {hi}}} {:?}: {count} twisted classes, fixed points {fixed:?}\n",
                    b.kind
                );
                rows.push(json!({
                    "block": [lo, hi],
                    "kind": b.kind,
                    "map": b.map,
                    "class_count": count,
                    "fixed_points": fixed,
                }));
            }
            Report::new(json!({ "spec": s.describe(w.base()), "blocks": rows }), text)
        }
        AutCmd::VerifyChar { base, tag, window, offsets } => {
            let w = wreath_of(base)?;
            let specs = all_compatible_specs(&w, caps.aut, &int_list(offsets)?)?;
            let r = verify_characteristic(&w, *tag, &specs, *window)?;
            let mut text = format!(
                "{}: {} in {} ≀ Z, {} specs x {} members, {} checks\n",
                if r.passed { "pass" } else { "FAIL" },
                r.tag,
                w.base().family(),
                r.specs,
                r.members,
                r.checks
            );
            for v in &r.violations {
                text += &format!("  {v}\n");
            }
            let ok = r.passed;
            Ok(Report::new(&r, text)?.checked(ok))
        }
    }
}

fn finite_aut(g: &FiniteGroup, text: &str, caps: &Caps) -> Result<GroupAut> {
    match text.strip_prefix('*') {
        Some(k) => GroupAut::cyclic_unit(g, k.parse().map_err(|_| Error::InvalidAutomorphism(text.into()))?),
        None => {
            let i: usize = text.parse().map_err(|_| Error::InvalidAutomorphism(text.into()))?;
            let auts = automorphism_group(g, caps.aut)?;
            let count = auts.len();
            auts.into_iter()
                .nth(i)
                .ok_or_else(|| Error::InvalidAutomorphism(format!("index {i}; Aut(G) has {count} elements")))
        }
    }
}

fn reid_cmd(cmd: &ReidCmd, caps: &Caps) -> Result<Report> {
    match cmd {
        ReidCmd::Finite { group, phi, method } => {
            let g = load_group(group)?;
            let phi = finite_aut(&g, phi, caps)?;
            let mut json = serde_json::Map::new();
            let mut text = String::new();
            let mut counts = Vec::new();
            if matches!(method, MethodArg::Orbit | MethodArg::All) {
                let r = twisted_classes(&g, &phi);
                text += &format!("orbit: {} classes, representatives {:?}\n", r.count, r.representatives);
                counts.push(r.count);
                json.insert("orbit".into(), serde_json::to_value(&r).expect("serializes"));
            }
            if matches!(method, MethodArg::Cokernel) || (*method == MethodArg::All && g.is_abelian()) {
                let c = reidemeister_abelian(&g, &phi)?;
                text += &format!("cokernel: {c}\n");
                counts.push(c);
                json.insert("cokernel".into(), c.into());
            }
            if matches!(method, MethodArg::Fh | MethodArg::All) {
                let c = reidemeister_fh(&g, &phi);
                text += &format!("fh: {c}\n");
                counts.push(c);
                json.insert("fh".into(), c.into());
            }
            let agree = counts.windows(2).all(|p| p[0] == p[1]);
            json.insert("agree".into(), agree.into());
            Ok(Report::new(json, text)?.checked(agree))
        }
        ReidCmd::Wreath { base, aut } => {
            let w = wreath_of(base)?;
            let s = aut_spec(&w, aut, caps)?;
            let r = reidemeister_wreath(&w, &s, caps.carrier)?;
            let mut text = format!("{}\n", s.describe(w.base()));
            for b in &r.blocks {
                text += &format!(
                    "  {} offset {} block {{{}, {}}} {:?}: {} classes ({:?})\n",
                    if b.twisted_by_t { "t·φ'" } else { "φ' " },
                    b.offset,
                    b.index,
                    b.partner,
                    b.kind,
                    b.class_count,
                    b.method
                );
            }
            text += &match &r.result {
                crate::twisted::ReidemeisterResult::Finite { value } => format!("R = {value}\n"),
                crate::twisted::ReidemeisterResult::InfiniteCertified { reason } => format!("R = infinity: {reason}\n"),
                crate::twisted::ReidemeisterResult::Unknown => "R unknown\n".into(),
            };
            let json = json!({ "spec": s.describe(w.base()), "report": r });
            Report::new(json, text)
        }
        ReidCmd::Window { base, aut, window, direct } => {
            let w = wreath_of(base)?;
            let s = aut_spec(&w, aut, caps)?;
            let window = int_list(window)?;
            let product = window_class_count(&w, &s, &window, caps.carrier)?;
            let mut text = format!("product over blocks: {product}\n");
            let mut json = json!({ "spec": s.describe(w.base()), "window": window, "product": product });
            let mut ok = true;
            if *direct {
                let d = window_class_count_direct(&w, &s, &window, caps.carrier)?;
                text += &format!("direct enumeration: {d}\n");
                json["direct"] = d.into();
                ok = d == product;
            }
            Ok(Report::new(json, text)?.checked(ok))
        }
    }
}

fn suite_cmd(cmd: &SuiteCmd, caps: &Caps) -> Result<Report> {
    match cmd {
        SuiteCmd::Acceptance { criterion } => {
            let reports = match criterion {
                Some(id) => vec![run_criterion(*id, caps)?],
                None => run_acceptance(caps),
            };
            let mut text = String::new();
            for r in &reports {
                text += &format!(
                    "[{}] criterion {}: {} ({} checks)\n",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.id,
                    r.name,
                    r.checks
                );
                for d in &r.details {
                    text += &format!("    {d}\n");
                }
            }
            let ok = reports.iter().all(|r| r.passed);
            Ok(Report::new(&reports, text)?.checked(ok))
        }
        SuiteCmd::Cyclic { limit } => {
            let r = cross_validate_cyclic(*limit, caps)?;
            let mut text = String::new();
            for row in &r.rows {
                let how = match (row.outcome, row.rule, row.witness_value) {
                    (Outcome::RInf, Some(rule), _) => rule.to_string(),
                    (Outcome::NotRInf, _, Some(v)) => format!("witness R = {v}"),
                    _ => "-".into(),
                };
                text += &format!(
                    "C{:<4} {:<8} {:<24} {}\n",
                    row.m,
                    format!("{:?}", row.outcome),
                    how,
                    if row.pass { "ok" } else { "MISMATCH" }
                );
            }
            text += &format!("{}\n", if r.passed { "all pass" } else { "FAILED" });
            let ok = r.passed;
            Ok(Report::new(&r, text)?.checked(ok))
        }
        SuiteCmd::Biconditional { max_order } => {
            let r = biconditional_experiment(*max_order, caps)?;
            let mut text = String::new();
            for row in &r.rows {
                let found = match row.witness_found {
                    Some(true) => row.witness.clone().unwrap_or_default(),
                    Some(false) => "none".into(),
                    None => "incomplete".into(),
                };
                text += &format!("{:<16} in family: {:<5} witness: {found}\n", row.group, row.in_frak_a);
            }
            for f in &r.findings {
                text += &format!("finding: {f}\n");
            }
            let ok = r.findings.is_empty();
            Ok(Report::new(&r, text)?.checked(ok))
        }
    }
}
