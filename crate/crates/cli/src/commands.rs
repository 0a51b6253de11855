use std::path::Path;

use anyhow::Result;
use pqg_core::appendix::appendix_report;
use pqg_core::closure::Closure;
use pqg_core::rep::one_block_fusion_set;
use pqg_core::tensor::{verify_functor_uncoloured, FunctorReport};
use pqg_core::{
    classify as classify_set, enumerate as enumerate_class, gram_rank, realize as realize_triple,
    ColourSet, ColouredPartition, FusionSet, FusionTriple, Partition, PartitionClass,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};

use crate::{
    input, AppendixArgs, ClosureArgs, EnumerateArgs, Format, FusionTableArgs, GramArgs,
    TpVerifyArgs,
};

/// Result of a command: the JSON and text renderings and whether every check passed.
pub struct Output {
    pub json: Value,
    pub text: String,
    pub passed: bool,
}

impl Output {
    fn report(json: Value, text: String) -> Self {
        Self {
            json,
            text,
            passed: true,
        }
    }

    pub fn print(&self, format: Format) {
        match format {
            Format::Json => println!("{}", self.json),
            Format::Text => println!("{}", self.text),
        }
    }
}

pub fn failure_record(e: &anyhow::Error) -> Value {
    let kind = if let Some(core) = e.downcast_ref::<pqg_core::Error>() {
        core.kind()
    } else if e.downcast_ref::<std::io::Error>().is_some() {
        "Io"
    } else if e.downcast_ref::<serde_json::Error>().is_some() {
        "Json"
    } else {
        "Usage"
    };
    json!({ "status": "error", "kind": kind, "message": format!("{e:#}") })
}

pub fn enumerate(a: &EnumerateArgs) -> Result<Output> {
    let class = if a.nc {
        PartitionClass::NonCrossing
    } else if a.pair {
        PartitionClass::Pair
    } else if a.nc_pair {
        PartitionClass::NonCrossingPair
    } else {
        PartitionClass::All
    };
    let ps = enumerate_class(a.k, a.l, class)?;
    let cs = ColourSet::uncoloured();
    let records: Vec<Value> = ps
        .iter()
        .map(|p| json!(ColouredPartition::uncoloured(p.clone()).to_record(&cs)))
        .collect();
    let text = ps
        .iter()
        .map(Partition::to_text)
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Output::report(Value::Array(records), text))
}

fn all_partitions(max_row: usize) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for k in 0..=max_row {
        for l in 0..=max_row {
            out.extend(enumerate_class(k, l, PartitionClass::All)?);
        }
    }
    Ok(out)
}

fn random_partition(rng: &mut StdRng, k: usize, l: usize) -> Partition {
    let n = k + l;
    Partition::from_labels(k, l, (0..n).map(|_| rng.random_range(0..n)))
}

pub fn tp_verify(a: &TpVerifyArgs, seed: u64) -> Result<Output> {
    let pairs: Vec<(Partition, Partition)> = if a.samples == 0 {
        let ps = all_partitions(a.max_row)?;
        ps.iter()
            .flat_map(|p| ps.iter().map(move |q| (p.clone(), q.clone())))
            .collect()
    } else {
        let mut rng = StdRng::seed_from_u64(seed);
        (0..a.samples)
            .map(|_| {
                let (k, m, l) = (
                    rng.random_range(0..=a.max_row),
                    rng.random_range(0..=a.max_row),
                    rng.random_range(0..=a.max_row),
                );
                (
                    random_partition(&mut rng, m, l),
                    random_partition(&mut rng, k, m),
                )
            })
            .collect()
    };
    let mut checks = 0usize;
    let mut violations = Vec::new();
    for n in &a.dims {
        for (p, q) in &pairs {
            let FunctorReport { checked, violation } =
                verify_functor_uncoloured(p, q, *n as usize)?;
            checks += checked.len();
            if let Some(law) = violation {
                violations
                    .push(json!({ "p": p.to_text(), "q": q.to_text(), "dim": n, "law": law }));
            }
        }
    }
    let passed = violations.is_empty();
    let text = format!(
        "{} pairs, N in {:?}: {} law checks, {} violations",
        pairs.len(),
        a.dims,
        checks,
        violations.len()
    );
    let json = json!({
        "pairs": pairs.len(),
        "dims": a.dims,
        "checks": checks,
        "violations": violations,
        "passed": passed,
    });
    Ok(Output { json, text, passed })
}

pub fn gram(a: &GramArgs) -> Result<Output> {
    let c = input::category_from(&a.source)?;
    let upper = input::word(c.colours(), &a.upper)?;
    let lower = input::word(c.colours(), &a.lower)?;
    let members = c.members(&upper, &lower);
    let rank = gram_rank(&members, a.dim as usize)?;
    let json = json!({
        "upper": a.upper,
        "lower": a.lower,
        "dim": a.dim,
        "partitions": members.len(),
        "rank": rank,
        "independent": rank == members.len(),
    });
    let text = format!(
        "{} partitions, rank {} at N = {}",
        members.len(),
        rank,
        a.dim
    );
    Ok(Output::report(json, text))
}

fn words(letters: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                (0..letters).map(move |x| {
                    let mut v = w.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

pub fn fusion_table(a: &FusionTableArgs) -> Result<Output> {
    let s = match &a.fusion_set {
        Some(path) => input::fusion_set(path)?,
        None => {
            let c = input::category(a.builtin.as_deref(), a.category.as_deref())?;
            one_block_fusion_set(&c, a.bound as usize)?
        }
    };
    let letters = a.letters.map_or(s.len(), |n| (n as usize).min(s.len()));
    let ws = words(letters, a.maxlen as usize);
    let mut rows = Vec::new();
    let mut lines = Vec::new();
    for w in &ws {
        for v in &ws {
            let product = s.word_tensor(w, v);
            let terms: Vec<Value> = product
                .ordered_terms()
                .into_iter()
                .map(|(u, m)| json!({ "word": s.format_word(u), "multiplicity": m }))
                .collect();
            rows.push(
                json!({ "left": s.format_word(w), "right": s.format_word(v), "terms": terms }),
            );
            lines.push(format!(
                "{}⊗{} = {}",
                s.format_word(w),
                s.format_word(v),
                product.format(&s)
            ));
        }
    }
    let json = json!({ "elements": s.names(), "rows": rows });
    Ok(Output::report(json, lines.join("\n")))
}

pub fn classify(path: &Path) -> Result<Output> {
    let s = input::fusion_set(path)?;
    let json = json!(classify_set(&s)?.to_record());
    Ok(Output::report(json.clone(), json.to_string()))
}

pub fn realize(path: &Path) -> Result<Output> {
    let t = FusionTriple::from_record(&input::triple(path)?)?;
    let json = json!(realize_triple(&t).to_record());
    Ok(Output::report(json.clone(), json.to_string()))
}

pub fn appendix(a: &AppendixArgs) -> Result<Output> {
    let s: FusionSet = input::fusion_set(&a.file)?;
    let beta = input::element(&s, &a.beta)?;
    let gamma = input::element(&s, &a.gamma)?;
    let r = appendix_report(&s, beta, gamma, a.maxlen as usize)?;
    let verdict = |b: bool| if b { "yes" } else { "no" };
    let text = [
        format!("words up to length {}: {}", r.max_len, r.words),
        format!("|D| = {}, |E| = {}, |F| = {}", r.d, r.e, r.f),
        format!("r = {}", r.r.join(", ")),
        format!("D and E partition the words: {}", verdict(r.d_e_partition)),
        format!("F∘D misses D: {}", verdict(r.f_circ_d_misses_d)),
        format!("r_i∘E pairwise disjoint: {}", verdict(r.r_circ_e_disjoint)),
        format!("truncated: {}", verdict(r.truncated)),
    ]
    .join("\n");
    let passed = r.passed();
    Ok(Output {
        json: json!(r),
        text,
        passed,
    })
}

pub fn closure(a: &ClosureArgs) -> Result<Output> {
    let file = input::generators(&a.file)?;
    let cs = file.colours.unwrap_or_default();
    let gens = file
        .generators
        .iter()
        .map(|g| ColouredPartition::from_record(g, &cs))
        .collect::<pqg_core::Result<Vec<_>>>()?;
    let bound = a.bound as usize;
    let slack = a.slack.map_or(bound, |s| s as usize);
    let c = Closure::new(cs.clone(), gens, bound, slack)?;
    let classes = c.classes_up_to(bound);
    let records: Vec<Value> = classes
        .iter()
        .map(|r| json!(r.to_partition().to_record(&cs)))
        .collect();
    let text = classes
        .iter()
        .map(|r| r.to_partition().to_text(&cs))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Output::report(Value::Array(records), text))
}
