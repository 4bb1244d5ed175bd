use std::io::{self, Read};
use std::path::{Path, PathBuf};

use reptree::morphism::{small_case_scan, verify_ternary_image, Morphism};
use reptree::search::{Checkpoint, CheckpointConfig};
use reptree::table::{Tier, TREE_STATS};
use reptree::{
    explore_with, grow as grow_word, scan, stats_check, Budget, Error, ExploreOptions,
    FreenessSpec, GrowResult, SearchOutcome, Word,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    Negative = 1,
    Usage = 2,
    Budget = 3,
}

fn usage(e: impl std::fmt::Display) -> Status {
    eprintln!("error: {e}");
    Status::Usage
}

fn parse_spec(spec: &str) -> Result<FreenessSpec, Status> {
    spec.parse().map_err(usage)
}

pub fn check(k: usize, spec: &str) -> Status {
    let spec = match parse_spec(spec) {
        Ok(s) => s,
        Err(st) => return st,
    };
    let mut input = String::new();
    if let Err(e) = io::stdin().read_to_string(&mut input) {
        return usage(e);
    }
    let mut lines: Vec<&str> = input.lines().collect();
    if lines.is_empty() {
        lines.push("");
    }
    let mut words = Vec::with_capacity(lines.len());
    for line in lines {
        match Word::parse(k, line) {
            Ok(w) => words.push(w),
            Err(e) => return usage(e),
        }
    }
    let mut status = Status::Success;
    for w in &words {
        match scan(w, &spec) {
            None => println!("FREE"),
            Some(wit) => {
                println!(
                    "end={} period={} length={} exponent={}",
                    wit.end,
                    wit.period,
                    wit.length,
                    wit.exponent()
                );
                status = Status::Negative;
            }
        }
    }
    status
}

pub struct TreeArgs {
    pub k: usize,
    pub spec: String,
    pub budget: Budget,
    pub shards: usize,
    pub split_depth: Option<usize>,
    pub json: bool,
    pub checkpoint: Option<PathBuf>,
    pub checkpoint_every: u64,
    pub resume: Option<PathBuf>,
}

pub fn tree(args: TreeArgs) -> Status {
    let spec = match parse_spec(&args.spec) {
        Ok(s) => s,
        Err(st) => return st,
    };
    let resume = match args.resume.as_deref().map(Checkpoint::read).transpose() {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    let opts = ExploreOptions {
        budget: args.budget,
        shards: args.shards,
        split_depth: args.split_depth,
        checkpoint: args.checkpoint.map(|path| CheckpointConfig {
            path,
            every: args.checkpoint_every,
        }),
        resume,
    };
    let outcome = match explore_with(args.k, &spec, &opts) {
        Ok(o) => o,
        Err(e) => return usage(e),
    };
    if let SearchOutcome::Finite(stats) = &outcome {
        if !stats_check(stats) {
            eprintln!("error: tree statistics failed their consistency audit");
            return Status::Negative;
        }
    }
    if args.json {
        println!("{}", outcome.record(args.k, &spec).to_json());
    }
    match &outcome {
        SearchOutcome::Finite(s) => {
            if !args.json {
                println!("k                  {}", s.k);
                println!("spec               {}", s.spec);
                println!("leaves L           {}", s.leaves);
                println!("internal I         {}", s.internal);
                println!("height h           {}", s.height);
                println!("max length M       {}", s.max_len);
                println!("max-length I'      {}", s.max_count);
                println!("lex-least          {}", s.lex_least);
                println!("nodes visited      {}", s.nodes_visited);
            }
            Status::Success
        }
        SearchOutcome::BudgetExceeded {
            nodes_visited,
            deepest_free_word,
        } => {
            eprintln!(
                "inconclusive: budget exceeded after {nodes_visited} nodes; deepest free word \
                 has length {} ({deepest_free_word})",
                deepest_free_word.len()
            );
            Status::Budget
        }
    }
}

pub fn grow(k: usize, spec: &str, target: usize, budget: Budget) -> Status {
    let spec = match parse_spec(spec) {
        Ok(s) => s,
        Err(st) => return st,
    };
    match grow_word(k, &spec, target, budget) {
        Ok(GrowResult::Found(w)) => {
            println!("{w}");
            Status::Success
        }
        Ok(GrowResult::Exhausted { max_len_reached }) => {
            eprintln!("exhausted: no free word longer than {max_len_reached}");
            println!("Exhausted({max_len_reached})");
            Status::Negative
        }
        Ok(GrowResult::BudgetExceeded { nodes_visited }) => {
            eprintln!("inconclusive: budget exceeded after {nodes_visited} nodes");
            Status::Budget
        }
        Err(e) => usage(e),
    }
}

pub fn table(tier: Option<Tier>, selectors: &[String], shards: usize) -> Status {
    let mut rows = Vec::new();
    for row in TREE_STATS {
        let selected = if selectors.is_empty() {
            tier.is_none_or(|t| t == row.tier)
        } else {
            let mut any = false;
            for sel in selectors {
                match row.matches(sel) {
                    Ok(m) => any |= m,
                    Err(e) => return usage(e),
                }
            }
            any
        };
        if selected {
            rows.push(row);
        }
    }
    if rows.is_empty() {
        println!("no rows");
        return Status::Success;
    }
    let (mut passed, mut failed) = (0, 0);
    for row in rows {
        let opts = ExploreOptions {
            shards,
            ..Default::default()
        };
        let outcome = match explore_with(row.k, &row.spec(), &opts) {
            Ok(o) => o,
            Err(e) => return usage(e),
        };
        let stats = outcome.stats().expect("unlimited budget");
        let mut mismatches = row.compare(stats);
        if !stats_check(stats) {
            mismatches.push(reptree::table::Mismatch {
                field: "audit",
                expected: "consistent".into(),
                actual: "inconsistent".into(),
            });
        }
        if mismatches.is_empty() {
            passed += 1;
            println!(
                "PASS {} [{}] I={} h={} I'={} {}",
                row.label(),
                row.tier.as_str(),
                stats.internal,
                stats.height,
                stats.max_count,
                stats.lex_least
            );
        } else {
            failed += 1;
            println!("FAIL {} [{}]", row.label(), row.tier.as_str());
            for m in mismatches {
                println!("  {}: expected {} got {}", m.field, m.expected, m.actual);
            }
        }
    }
    println!("{passed} passed, {failed} failed");
    if failed == 0 {
        Status::Success
    } else {
        Status::Negative
    }
}

fn load_morphism(builtin: Option<&str>, file: Option<&Path>) -> Result<Morphism, Status> {
    match (builtin, file) {
        (_, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(usage)?;
            Morphism::parse(&text).map_err(usage)
        }
        (name, None) => {
            let name = name.unwrap_or("h");
            Morphism::builtin(name).ok_or_else(|| usage(format!("unknown morphism {name:?}")))
        }
    }
}

pub fn verify_sync(builtin: Option<&str>, file: Option<&Path>) -> Status {
    let m = match load_morphism(builtin, file) {
        Ok(m) => m,
        Err(st) => return st,
    };
    let report = match m.check_synchronizing() {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    for c in &report.counterexamples {
        println!(
            "counterexample: image of {} at offset {} inside image of {}{}",
            c.c.to_char(),
            c.offset,
            c.a.to_char(),
            c.b.to_char()
        );
    }
    println!(
        "{} ({} triples x {} offsets, {} counterexamples)",
        if report.synchronizing {
            "synchronizing"
        } else {
            "not synchronizing"
        },
        report.triples,
        report.offsets,
        report.counterexamples.len()
    );
    if report.synchronizing {
        Status::Success
    } else {
        Status::Negative
    }
}

pub fn theorem3(n: usize, budget: Budget) -> Status {
    match verify_ternary_image(n, budget) {
        Ok(r) => {
            println!("source length      {}", r.source.len());
            println!("image length       {}", r.image.len());
            match r.witness {
                None => println!("witness            none"),
                Some(w) => println!(
                    "witness            end={} period={} length={} exponent={}",
                    w.end,
                    w.period,
                    w.length,
                    w.exponent()
                ),
            }
            println!(
                "transfer bound     {}",
                if r.transfer_bound_holds {
                    "holds"
                } else {
                    "fails"
                }
            );
            if r.success() {
                println!("success");
                Status::Success
            } else {
                println!("failure");
                Status::Negative
            }
        }
        Err(Error::BudgetExceeded { nodes_visited }) => {
            eprintln!("inconclusive: budget exceeded after {nodes_visited} nodes");
            Status::Budget
        }
        Err(e) => usage(e),
    }
}

pub fn smallcase(
    builtin: Option<&str>,
    file: Option<&Path>,
    source_spec: &str,
    image_spec: &str,
    max_root: usize,
    cap: u64,
) -> Status {
    let m = match load_morphism(builtin, file) {
        Ok(m) => m,
        Err(st) => return st,
    };
    let (src, img) = match (parse_spec(source_spec), parse_spec(image_spec)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(st), _) | (_, Err(st)) => return st,
    };
    match small_case_scan(&m, &src, &img, max_root, cap) {
        Ok(hits) => {
            for (u, w) in &hits {
                println!(
                    "source {u}: end={} period={} length={} exponent={}",
                    w.end,
                    w.period,
                    w.length,
                    w.exponent()
                );
            }
            println!("{} repetitions with period below {max_root}", hits.len());
            if hits.is_empty() {
                Status::Success
            } else {
                Status::Negative
            }
        }
        Err(Error::CapExceeded { cap }) => {
            eprintln!("inconclusive: more than {cap} source words");
            Status::Budget
        }
        Err(e) => usage(e),
    }
}
