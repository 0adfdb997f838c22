use std::time::Instant;

use anyhow::{bail, Context, Result};
use kcover::oracle::{random_tree_with, rng, OracleBudget};
use kcover::tree::tree_lower_bound;
use rand::Rng;

use crate::commands::{run_alg, spec_for};
use crate::{BenchArgs, Status};

struct Row {
    id: usize,
    size: Option<usize>,
    elapsed_ms: f64,
}

fn trial(a: &BenchArgs, id: usize, seed: u64) -> Result<Row> {
    let spec = spec_for(a.alg, a.k, 1)?;
    let g = random_tree_with(a.n, &mut rng(seed));
    let start = Instant::now();
    let c = run_alg(a.alg, &g, spec, false, &OracleBudget::default())
        .with_context(|| format!("instance {id} (seed {seed})"))?;
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(Row {
        id,
        size: c.map(|c| c.len()),
        elapsed_ms,
    })
}

pub(crate) fn run(a: &BenchArgs) -> Result<Status> {
    let spec = spec_for(a.alg, a.k, 1)?;
    if a.threads == 0 {
        bail!("--threads must be at least 1");
    }
    if a.n < spec.k() {
        bail!("--n must be at least k={}", spec.k());
    }
    // per-instance seeds come from one stream so instance i is the same
    // regardless of thread count
    let mut master = rng(a.seed);
    let seeds: Vec<u64> = (0..a.trials).map(|_| master.gen()).collect();

    let mut rows: Vec<Row> = Vec::with_capacity(a.trials);
    if a.threads == 1 {
        for (id, &s) in seeds.iter().enumerate() {
            rows.push(trial(a, id, s)?);
        }
    } else {
        let chunk = a.trials.div_ceil(a.threads).max(1);
        let parts: Vec<Result<Vec<Row>>> = std::thread::scope(|scope| {
            let handles: Vec<_> = seeds
                .chunks(chunk)
                .enumerate()
                .map(|(ci, part)| {
                    scope.spawn(move || {
                        part.iter()
                            .enumerate()
                            .map(|(j, &s)| trial(a, ci * chunk + j, s))
                            .collect()
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("bench worker panicked"))
                .collect()
        });
        for part in parts {
            rows.extend(part?);
        }
    }
    rows.sort_by_key(|r| r.id);

    let lb = tree_lower_bound(a.n, spec.k());
    let sink: Box<dyn std::io::Write> = match &a.csv {
        Some(p) => {
            Box::new(std::fs::File::create(p).with_context(|| format!("writing {}", p.display()))?)
        }
        None => Box::new(std::io::stdout()),
    };
    let mut w = csv::Writer::from_writer(sink);
    w.write_record([
        "instance_id",
        "n",
        "k",
        "l",
        "alg",
        "alg_size",
        "lower_bound",
        "ratio",
        "elapsed_ms",
    ])?;
    let mut inconclusive = false;
    for r in &rows {
        let (size, ratio) = match r.size {
            Some(s) => (s.to_string(), format!("{:.4}", s as f64 / lb as f64)),
            None => {
                inconclusive = true;
                (String::new(), String::new())
            }
        };
        let elapsed = if a.timing {
            format!("{:.3}", r.elapsed_ms)
        } else {
            "0".to_string()
        };
        w.write_record([
            r.id.to_string(),
            a.n.to_string(),
            spec.k().to_string(),
            "1".to_string(),
            a.alg.name().to_string(),
            size,
            lb.to_string(),
            ratio,
            elapsed,
        ])?;
    }
    w.flush()?;
    if inconclusive {
        log::warn!("some instances exceeded the oracle budget; their alg_size is blank");
        return Ok(Status::Inconclusive);
    }
    Ok(Status::Ok)
}
