//! Command-line front end: dataset tooling, index build/query, the
//! analytic curves, and the benchmark runner.
//!
//! Exit codes: 0 on success, 2 for invalid configuration or arguments,
//! 3 for numeric failures inside the theory engine, 1 otherwise.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use fastlsh_cli::bench::{run_experiment, ExperimentReport};
use fastlsh_cli::config::{ConfigError, ExperimentConfig};
use fastlsh_cli::io::{
    dataset_fingerprint, fingerprint_hex, read_fvecs, write_fvecs, write_ivecs, IoError,
};
use fastlsh_cli::persist::{load_index, save_index};
use fastlsh_cli::report::{emit_report, write_report, ReportFormat};
use fastlsh_cli::timed::{time_hashing, timed_query};
use fastlsh_core::data::{
    brute_force_knn, dataset_sigma_profile, gen_synthetic, Envelope, SigmaBucket, SigmaProfile,
    SyntheticKind,
};
use fastlsh_core::hash::Scheme;
use fastlsh_core::index::{build_index, IndexConfig};
use fastlsh_core::theory::{
    collision_prob_e2lsh, collision_prob_fast, collision_prob_mips, matched_width,
    mc_collision_oracle, moments_stx, rho_curve, CollisionModel, OracleScheme, QuadratureConfig,
    RhoScheme,
};

#[derive(Parser)]
#[command(name = "fastlsh", version, about = "Sampling-based LSH toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dataset generation, pair statistics, and ground truth
    Data {
        #[command(subcommand)]
        cmd: DataCmd,
    },
    /// Build and query LSH indexes
    Index {
        #[command(subcommand)]
        cmd: IndexCmd,
    },
    /// Collision probabilities, rho curves, and moments
    Theory {
        #[command(subcommand)]
        cmd: TheoryCmd,
    },
    /// Experiment runner and hash-evaluation timing
    Bench {
        #[command(subcommand)]
        cmd: BenchCmd,
    },
}

#[derive(Subcommand)]
enum DataCmd {
    /// Generate a synthetic dataset as fvecs
    Gen {
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        num: usize,
        #[arg(long)]
        dim: usize,
        /// unit_hypersphere | gaussian | clustered
        #[arg(long, default_value = "gaussian")]
        kind: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// scale every vector to unit norm
        #[arg(long)]
        normalize: bool,
    },
    /// Sigma profile over sampled pairs (CSV: s_bucket,sigma_min,sigma_mean,sigma_max,count)
    Stats {
        #[arg(long)]
        data: PathBuf,
        #[arg(long, default_value_t = 100_000)]
        pairs: usize,
        #[arg(long, default_value_t = 50)]
        buckets: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "csv")]
        format: String,
        #[arg(long)]
        normalize: bool,
    },
    /// Exact k-NN ground truth (ids as ivecs, distances optional fvecs)
    Gt {
        #[arg(long)]
        data: PathBuf,
        #[arg(long)]
        queries: PathBuf,
        #[arg(long, default_value_t = 10)]
        k: usize,
        #[arg(long)]
        out_ids: PathBuf,
        #[arg(long)]
        out_dists: Option<PathBuf>,
        #[arg(long)]
        normalize: bool,
    },
}

#[derive(Args)]
struct SchemeArgs {
    /// fastlsh | e2lsh | achash
    #[arg(long)]
    scheme: String,
    #[arg(long, default_value_t = 30)]
    m: usize,
    #[arg(long, default_value_t = 0.25)]
    density: f64,
}

#[derive(Subcommand)]
enum IndexCmd {
    /// Build an index and persist it
    Build {
        #[arg(long)]
        data: PathBuf,
        #[command(flatten)]
        scheme: SchemeArgs,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        width: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        normalize: bool,
    },
    /// Query a persisted index
    Query {
        #[arg(long)]
        index: PathBuf,
        #[arg(long)]
        data: PathBuf,
        #[arg(long)]
        queries: PathBuf,
        #[arg(long, default_value_t = 10)]
        topk: usize,
        #[arg(long, default_value = "csv")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        normalize: bool,
    },
}

#[derive(Subcommand)]
enum TheoryCmd {
    /// Collision probabilities (CSV: scheme,s,sigma,m,n,width,delta,p[,mc_p,mc_stderr])
    Pcollision {
        /// comma-separated distances
        #[arg(long, value_delimiter = ',')]
        s: Vec<f64>,
        #[arg(long, default_value_t = 0.0)]
        sigma: f64,
        #[arg(long, default_value_t = 30)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// full-projection bucket width; the sampled width is matched as
        /// sqrt(m/n)·width unless --width-t overrides it
        #[arg(long, default_value_t = 4.0)]
        width: f64,
        #[arg(long)]
        width_t: Option<f64>,
        /// inner-product shift Δ; uses the shifted model when > 0
        #[arg(long, default_value_t = 0.0)]
        delta: f64,
        /// cross-check each point against this many Monte-Carlo trials
        #[arg(long, default_value_t = 0)]
        mc_trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// rho(c) curves (CSV: scheme,c,rho,p1,p2)
    Rho {
        #[arg(long, default_value_t = 20.0)]
        c_max: f64,
        #[arg(long, default_value_t = 0.1)]
        c_step: f64,
        #[arg(long, default_value_t = 4.0)]
        width: f64,
        #[arg(long)]
        width_t: Option<f64>,
        #[arg(long, default_value_t = 30)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// constant sigma at every distance (exclusive with --sigma-profile)
        #[arg(long)]
        sigma: Option<f64>,
        /// sigma profile CSV from `data stats`
        #[arg(long)]
        sigma_profile: Option<PathBuf>,
        /// min | mean | max
        #[arg(long, default_value = "mean")]
        envelope: String,
        /// both | e2lsh | fastlsh
        #[arg(long, default_value = "both")]
        scheme: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Moments of the projection gap (CSV: m,s,sigma,n,m1,m2,m3,m4,epsilon,lambda)
    Moments {
        #[arg(long, default_value_t = 1.0)]
        s: f64,
        #[arg(long)]
        sigma: f64,
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', default_value = "15,30,45,60")]
        m_list: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum BenchCmd {
    /// Run a full experiment from a config file
    Run {
        #[arg(long)]
        config: PathBuf,
        /// override the config's seed
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value = "json")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time hash evaluation over a dataset
    TimeHash {
        #[arg(long)]
        data: PathBuf,
        #[command(flatten)]
        scheme: SchemeArgs,
        #[arg(long, default_value_t = 500)]
        hashes: usize,
        #[arg(long, default_value_t = 1.0)]
        width: f64,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        normalize: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

/// 2 for invalid configuration/arguments, 3 for numeric failures, 1 else.
fn exit_code_for(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if let Some(core) = cause.downcast_ref::<fastlsh_core::Error>() {
            return match core {
                fastlsh_core::Error::InvalidArgument(_) => 2,
                fastlsh_core::Error::NumericFailure(_) => 3,
                fastlsh_core::Error::UndefinedRho => 3,
            };
        }
        if cause.downcast_ref::<ConfigError>().is_some() {
            return 2;
        }
        if let Some(io) = cause.downcast_ref::<IoError>() {
            return match io {
                IoError::Core(fastlsh_core::Error::InvalidArgument(_)) => 2,
                _ => 1,
            };
        }
    }
    1
}

fn out_writer(path: &Option<PathBuf>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(std::io::BufWriter::new(std::fs::File::create(p)?)),
        None => Box::new(std::io::stdout().lock()),
    })
}

fn load_dataset(path: &PathBuf, normalize: bool) -> anyhow::Result<fastlsh_core::Dataset> {
    let mut ds = read_fvecs(path)?;
    if normalize {
        ds.normalize()?;
    }
    Ok(ds)
}

fn parse_scheme(s: &str) -> anyhow::Result<Scheme> {
    s.parse::<Scheme>().map_err(anyhow::Error::from)
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Data { cmd } => run_data(cmd),
        Command::Index { cmd } => run_index(cmd),
        Command::Theory { cmd } => run_theory(cmd),
        Command::Bench { cmd } => run_bench(cmd),
    }
}

fn run_data(cmd: DataCmd) -> anyhow::Result<()> {
    match cmd {
        DataCmd::Gen {
            out,
            num,
            dim,
            kind,
            seed,
            normalize,
        } => {
            let kind: SyntheticKind = kind.parse().map_err(anyhow::Error::from)?;
            let mut ds = gen_synthetic(num, dim, kind, seed)?;
            if normalize {
                ds.normalize()?;
            }
            write_fvecs(&ds, &out)?;
            eprintln!(
                "wrote {} x {} ({}), fingerprint {}",
                ds.len(),
                ds.dim(),
                out.display(),
                fingerprint_hex(&dataset_fingerprint(&ds))
            );
            Ok(())
        }
        DataCmd::Stats {
            data,
            pairs,
            buckets,
            seed,
            out,
            format,
            normalize,
        } => {
            let ds = load_dataset(&data, normalize)?;
            let profile = dataset_sigma_profile(&ds, pairs, buckets, seed)?;
            let mut w = out_writer(&out)?;
            match format.as_str() {
                "csv" => {
                    writeln!(w, "s_bucket,sigma_min,sigma_mean,sigma_max,count")?;
                    for b in &profile.buckets {
                        writeln!(
                            w,
                            "{},{},{},{},{}",
                            0.5 * (b.s_lo + b.s_hi),
                            b.sigma_min,
                            b.sigma_mean,
                            b.sigma_max,
                            b.count
                        )?;
                    }
                }
                "json" => {
                    let rows: Vec<serde_json::Value> = profile
                        .buckets
                        .iter()
                        .map(|b| {
                            serde_json::json!({
                                "s_bucket": 0.5 * (b.s_lo + b.s_hi),
                                "sigma_min": b.sigma_min,
                                "sigma_mean": b.sigma_mean,
                                "sigma_max": b.sigma_max,
                                "count": b.count,
                            })
                        })
                        .collect();
                    serde_json::to_writer_pretty(&mut w, &rows)?;
                    writeln!(w)?;
                }
                other => anyhow::bail!("unknown format {other:?} (expected csv|json)"),
            }
            Ok(())
        }
        DataCmd::Gt {
            data,
            queries,
            k,
            out_ids,
            out_dists,
            normalize,
        } => {
            let ds = load_dataset(&data, normalize)?;
            let qs = load_dataset(&queries, normalize)?;
            let truth = brute_force_knn(&ds, &qs, k)?;
            let ids: Vec<Vec<u32>> = truth
                .iter()
                .map(|nbs| nbs.iter().map(|nb| nb.id).collect())
                .collect();
            write_ivecs(&ids, &out_ids)?;
            if let Some(dist_path) = out_dists {
                let mut flat = Vec::with_capacity(truth.len() * k);
                for nbs in &truth {
                    flat.extend(nbs.iter().map(|nb| nb.dist as f32));
                }
                let dists = fastlsh_core::Dataset::from_raw("distances".into(), k, flat)?;
                write_fvecs(&dists, &dist_path)?;
            }
            Ok(())
        }
    }
}

fn run_index(cmd: IndexCmd) -> anyhow::Result<()> {
    match cmd {
        IndexCmd::Build {
            data,
            scheme,
            k,
            l,
            width,
            seed,
            out,
            normalize,
        } => {
            let ds = load_dataset(&data, normalize)?;
            let cfg = IndexConfig {
                scheme: parse_scheme(&scheme.scheme)?,
                k,
                l,
                width,
                m: scheme.m,
                achash_density: scheme.density,
                seed,
            };
            let index = build_index(&ds, &cfg)?;
            save_index(&index, &dataset_fingerprint(&ds), &out)?;
            eprintln!(
                "indexed {} points into {} tables ({})",
                ds.len(),
                l,
                out.display()
            );
            Ok(())
        }
        IndexCmd::Query {
            index,
            data,
            queries,
            topk,
            format,
            out,
            normalize,
        } => {
            let (idx, stored_fp) = load_index(&index)?;
            let ds = load_dataset(&data, normalize)?;
            if dataset_fingerprint(&ds) != stored_fp {
                anyhow::bail!(
                    "dataset fingerprint does not match the one the index was built over"
                );
            }
            let qs = load_dataset(&queries, normalize)?;
            let mut w = out_writer(&out)?;
            match format.as_str() {
                "csv" => {
                    writeln!(w, "query,rank,id,dist,candidates,hash_ns,scan_ns")?;
                    for (qi, q) in qs.rows().enumerate() {
                        let r = timed_query(&idx, &ds, q, topk)?;
                        for (rank, nb) in r.neighbors.iter().enumerate() {
                            writeln!(
                                w,
                                "{qi},{rank},{},{},{},{},{}",
                                nb.id, nb.dist, r.candidate_count, r.hash_ns, r.scan_ns
                            )?;
                        }
                    }
                }
                "json" => {
                    let mut rows = Vec::new();
                    for (qi, q) in qs.rows().enumerate() {
                        let r = timed_query(&idx, &ds, q, topk)?;
                        rows.push(serde_json::json!({
                            "query": qi,
                            "neighbors": r.neighbors.iter()
                                .map(|nb| serde_json::json!({"id": nb.id, "dist": nb.dist}))
                                .collect::<Vec<_>>(),
                            "candidates": r.candidate_count,
                            "hash_ns": r.hash_ns,
                            "scan_ns": r.scan_ns,
                        }));
                    }
                    serde_json::to_writer_pretty(&mut w, &rows)?;
                    writeln!(w)?;
                }
                other => anyhow::bail!("unknown format {other:?} (expected csv|json)"),
            }
            Ok(())
        }
    }
}

fn read_sigma_profile_csv(path: &PathBuf) -> anyhow::Result<SigmaProfile> {
    let mut rdr = csv::Reader::from_path(path)?;
    let mut buckets = Vec::new();
    for rec in rdr.records() {
        let rec = rec?;
        let center: f64 = rec[0].parse()?;
        buckets.push(SigmaBucket {
            s_lo: center,
            s_hi: center,
            sigma_min: rec[1].parse()?,
            sigma_mean: rec[2].parse()?,
            sigma_max: rec[3].parse()?,
            count: rec[4].parse()?,
        });
    }
    Ok(SigmaProfile { buckets })
}

fn run_theory(cmd: TheoryCmd) -> anyhow::Result<()> {
    let quad = QuadratureConfig::default();
    match cmd {
        TheoryCmd::Pcollision {
            s,
            sigma,
            m,
            n,
            width,
            width_t,
            delta,
            mc_trials,
            seed,
            out,
        } => {
            let w_t = width_t.unwrap_or_else(|| matched_width(width, m, n));
            let mut w = out_writer(&out)?;
            write!(w, "scheme,s,sigma,m,n,width,delta,p")?;
            if mc_trials > 0 {
                write!(w, ",mc_p,mc_stderr")?;
            }
            writeln!(w)?;
            for &dist in &s {
                let cm = CollisionModel::new(dist, sigma, m, n)?;
                let p = if delta > 0.0 {
                    collision_prob_mips(&cm, delta, w_t, &quad)?
                } else {
                    collision_prob_fast(&cm, w_t, &quad)?
                };
                write!(w, "fastlsh,{dist},{sigma},{m},{n},{w_t},{delta},{p}")?;
                if mc_trials > 0 {
                    let (v, u) = fastlsh_core::data::pair_with_target_stats(n, dist, sigma)?;
                    let est = mc_collision_oracle(
                        &v,
                        &u,
                        &OracleScheme::FastLsh { m, width: w_t },
                        mc_trials,
                        seed,
                    )?;
                    write!(w, ",{},{}", est.p, est.stderr)?;
                }
                writeln!(w)?;
                let pe = collision_prob_e2lsh(dist, width)?;
                write!(w, "e2lsh,{dist},0,{n},{n},{width},0,{pe}")?;
                if mc_trials > 0 {
                    write!(w, ",,")?;
                }
                writeln!(w)?;
            }
            Ok(())
        }
        TheoryCmd::Rho {
            c_max,
            c_step,
            width,
            width_t,
            m,
            n,
            sigma,
            sigma_profile,
            envelope,
            scheme,
            out,
        } => {
            anyhow::ensure!(c_step > 0.0 && c_max >= 1.0, "need c_max >= 1 and c_step > 0");
            let mut grid = Vec::new();
            let mut c = 1.0;
            while c <= c_max + 1e-9 {
                grid.push(c);
                c += c_step;
            }
            let env = match envelope.as_str() {
                "min" => Envelope::Min,
                "mean" => Envelope::Mean,
                "max" => Envelope::Max,
                other => anyhow::bail!("unknown envelope {other:?}"),
            };
            let profile = sigma_profile.as_ref().map(read_sigma_profile_csv).transpose()?;
            let sigma_at = move |dist: f64| -> f64 {
                if let Some(ref p) = profile {
                    p.sigma_at(dist, env).unwrap_or(0.0)
                } else {
                    sigma.unwrap_or(0.0)
                }
            };
            let w_t = width_t.unwrap_or_else(|| matched_width(width, m, n));
            let mut w = out_writer(&out)?;
            writeln!(w, "scheme,c,rho,p1,p2")?;
            if scheme == "both" || scheme == "e2lsh" {
                for pt in rho_curve(&grid, &RhoScheme::E2Lsh { width }, &quad) {
                    let pt = pt?;
                    writeln!(w, "e2lsh,{},{},{},{}", pt.c, pt.rho, pt.p1, pt.p2)?;
                }
            }
            if scheme == "both" || scheme == "fastlsh" {
                let rs = RhoScheme::FastLsh {
                    width: w_t,
                    m,
                    n,
                    sigma_at: &sigma_at,
                };
                for pt in rho_curve(&grid, &rs, &QuadratureConfig::fast()) {
                    let pt = pt?;
                    writeln!(w, "fastlsh,{},{},{},{}", pt.c, pt.rho, pt.p1, pt.p2)?;
                }
            }
            Ok(())
        }
        TheoryCmd::Moments {
            s,
            sigma,
            n,
            m_list,
            out,
        } => {
            let mut w = out_writer(&out)?;
            writeln!(w, "m,s,sigma,n,m1,m2,m3,m4,epsilon,lambda")?;
            for &m in &m_list {
                let cm = CollisionModel::new(s, sigma, m, n)?;
                let mo = moments_stx(&cm)?;
                writeln!(
                    w,
                    "{m},{s},{sigma},{n},{},{},{},{},{},{}",
                    mo.m1, mo.m2, mo.m3, mo.m4, mo.epsilon, mo.lambda
                )?;
            }
            Ok(())
        }
    }
}

fn run_bench(cmd: BenchCmd) -> anyhow::Result<()> {
    match cmd {
        BenchCmd::Run {
            config,
            seed,
            format,
            out,
        } => {
            let mut cfg = ExperimentConfig::from_path(&config)?;
            if let Some(s) = seed {
                cfg.seed = s;
            }
            let format: ReportFormat = format.parse()?;
            let report: ExperimentReport = run_experiment(&cfg)?;
            match out {
                Some(path) => emit_report(&report, format, path)?,
                None => write_report(&report, format, std::io::stdout().lock())?,
            }
            Ok(())
        }
        BenchCmd::TimeHash {
            data,
            scheme,
            hashes,
            width,
            reps,
            seed,
            normalize,
        } => {
            let ds = load_dataset(&data, normalize)?;
            let sch = parse_scheme(&scheme.scheme)?;
            let mut hs = Vec::with_capacity(hashes);
            for j in 0..hashes {
                let hseed = fastlsh_core::rng::split_seed(
                    seed,
                    fastlsh_core::rng::stream::HASHER,
                    0,
                    j as u64,
                );
                hs.push(match sch {
                    Scheme::FastLsh => {
                        fastlsh_core::HasherParams::fastlsh(ds.dim(), scheme.m, width, hseed)?
                    }
                    Scheme::E2Lsh => fastlsh_core::HasherParams::e2lsh(ds.dim(), width, hseed)?,
                    Scheme::AcHash => fastlsh_core::HasherParams::achash(
                        ds.dim(),
                        width,
                        scheme.density,
                        hseed,
                    )?,
                });
            }
            let t = time_hashing(&ds, &hs, reps)?;
            let value = serde_json::json!({
                "scheme": scheme.scheme,
                "points": t.points,
                "hashes": t.hashes,
                "median_ns": t.median_ns,
                "per_rep_ns": t.per_rep_ns,
                "ns_per_hash": t.median_ns as f64 / (t.points * t.hashes) as f64,
            });
            println!("{}", serde_json::to_string_pretty(&value)?);
            Ok(())
        }
    }
}
