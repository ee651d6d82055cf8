//! Parameter-grid sweeps. Tuples are generated in a canonical nested order,
//! distributed over worker threads, and re-assembled by index, so the output
//! stream is byte-identical no matter the parallelism width.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::Args;

use pqblocks::numtheory::{is_prime, ord_mod, prime_power, primes_dividing_psi_product};
use pqblocks::oracle;
use pqblocks::Error;

use crate::{parse_epsilon, Family};

#[derive(Args)]
pub struct SweepArgs {
    /// Which family of groups to sweep.
    #[arg(value_enum)]
    family: Family,
    /// Smallest degree/rank (defaults: sym 3, alt 4, typea/typebc 2).
    #[arg(long)]
    n_min: Option<u32>,
    /// Largest degree/rank, inclusive.
    #[arg(long)]
    n_max: u32,
    /// Only use primes up to this bound.
    #[arg(long)]
    prime_bound: Option<u64>,
    /// Field sizes for the Lie families, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "2,3,5")]
    fields: Vec<u64>,
    /// Series signs for typea, comma separated (+1, -1).
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        default_value = "+1,-1"
    )]
    epsilons: Vec<String>,
    /// Write the JSON-lines records here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write a CSV summary (header: group,n,p,q,intersection,
    /// witness_found,witness_label).
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Cross-check each tuple against the exhaustive oracle where its
    /// bounds allow.
    #[arg(long)]
    oracle: bool,
}

#[derive(Clone, Copy)]
struct Tuple {
    n: u32,
    p: u64,
    q: u64,
    field: Option<u64>,
    epsilon: Option<i8>,
}

struct Outcome {
    tuple: Tuple,
    group: String,
    witness: Option<serde_json::Value>,
    witness_label: Option<String>,
    error: Option<String>,
    oracle: Option<(usize, bool)>,
    ok: bool,
}

fn prime_pairs(limit: u64) -> Vec<(u64, u64)> {
    let primes: Vec<u64> = (2..=limit).filter(|&p| is_prime(p)).collect();
    let mut out = Vec::new();
    for (i, &p) in primes.iter().enumerate() {
        for &q in &primes[i + 1..] {
            out.push((p, q));
        }
    }
    out
}

fn build_tuples(args: &SweepArgs) -> Result<Vec<Tuple>, Error> {
    let bound = args.prime_bound.unwrap_or(u64::MAX);
    let mut tuples = Vec::new();
    match args.family {
        Family::Sym | Family::Alt => {
            let n_min = args
                .n_min
                .unwrap_or(if args.family == Family::Sym { 3 } else { 4 });
            for n in n_min..=args.n_max {
                for (p, q) in prime_pairs((n as u64).min(bound)) {
                    tuples.push(Tuple {
                        n,
                        p,
                        q,
                        field: None,
                        epsilon: None,
                    });
                }
            }
        }
        Family::Typea | Family::Typebc => {
            let n_min = args.n_min.unwrap_or(2);
            let epsilons: Vec<i8> = if args.family == Family::Typea {
                args.epsilons
                    .iter()
                    .map(|e| parse_epsilon(e))
                    .collect::<Result<_, _>>()?
            } else {
                vec![1]
            };
            for &field in &args.fields {
                if prime_power(field).is_none() {
                    return Err(Error::invalid(format!("{field} is not a prime power")));
                }
                for &epsilon in &epsilons {
                    for n in n_min..=args.n_max {
                        let base = match args.family {
                            Family::Typea => epsilon as i64 * field as i64,
                            _ => (field * field) as i64,
                        };
                        // With an explicit bound, scan orders directly; this
                        // keeps large ranks usable where the cyclotomic
                        // values would overflow. The unbounded route is
                        // complete but needs the values to fit.
                        let primes: Vec<u64> = match args.prime_bound {
                            Some(b) => (2..=b)
                                .filter(|&p| {
                                    is_prime(p)
                                        && base.rem_euclid(p as i64) != 0
                                        && ord_mod(base, p).map(|e| e <= n as u64).unwrap_or(false)
                                })
                                .collect(),
                            None => primes_dividing_psi_product(base, n)?,
                        };
                        for (i, &p) in primes.iter().enumerate() {
                            for &q in &primes[i + 1..] {
                                tuples.push(Tuple {
                                    n,
                                    p,
                                    q,
                                    field: Some(field),
                                    epsilon: if args.family == Family::Typea {
                                        Some(epsilon)
                                    } else {
                                        None
                                    },
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(tuples)
}

fn group_name(family: Family, t: &Tuple) -> String {
    match family {
        Family::Sym => "sym".to_string(),
        Family::Alt => "alt".to_string(),
        Family::Typea => {
            let field = t.field.unwrap_or(0);
            if t.epsilon == Some(-1) {
                format!("2A(Q={field})")
            } else {
                format!("A(Q={field})")
            }
        }
        Family::Typebc => format!("BC(Q={})", t.field.unwrap_or(0)),
    }
}

fn oracle_in_bounds(family: Family, t: &Tuple) -> bool {
    match family {
        Family::Sym | Family::Alt => t.n <= oracle::MAX_INTERSECTION_N,
        Family::Typea => t.n <= oracle::MAX_TYPE_A_N && t.field.unwrap_or(0) <= oracle::MAX_FIELD,
        Family::Typebc => t.n <= oracle::MAX_TYPE_BC_N && t.field.unwrap_or(0) <= oracle::MAX_FIELD,
    }
}

fn run_tuple(family: Family, t: Tuple, with_oracle: bool) -> Outcome {
    let witness: Result<(serde_json::Value, String), Error> = match family {
        Family::Sym => pqblocks::witness_sn::witness_symmetric(t.n, t.p, t.q)
            .map(|w| (w.to_json(), w.partition.format_exponential())),
        Family::Alt => pqblocks::witness_sn::witness_alternating(t.n, t.p, t.q).map(|w| {
            (
                w.to_json(),
                format!("{}|{}", w.partition, w.constituent.as_str()),
            )
        }),
        Family::Typea => pqblocks::witness_lie::TypeAContext::new(
            t.n,
            t.field.unwrap_or(0),
            t.epsilon.unwrap_or(1),
            t.p,
            t.q,
        )
        .and_then(|ctx| pqblocks::witness_lie::witness_type_a(&ctx))
        .map(|w| (w.to_json(), w.partition.format_exponential())),
        Family::Typebc => {
            pqblocks::witness_lie::TypeBCContext::new(t.n, t.field.unwrap_or(0), t.p, t.q)
                .and_then(|ctx| pqblocks::witness_lie::witness_type_bc(&ctx))
                .map(|w| (w.to_json(), w.symbol.to_string()))
        }
    };
    let oracle_result = if with_oracle && oracle_in_bounds(family, &t) {
        let report = match family {
            Family::Sym => oracle::intersection_sym(t.n, t.p, t.q),
            Family::Alt => oracle::intersection_alt(t.n, t.p, t.q),
            Family::Typea => oracle::intersection_type_a(
                t.n,
                t.field.unwrap_or(0),
                t.epsilon.unwrap_or(1),
                t.p,
                t.q,
            ),
            Family::Typebc => oracle::intersection_type_bc(t.n, t.field.unwrap_or(0), t.p, t.q),
        };
        report.ok().map(|r| (r.cardinality(), r.witness_contained))
    } else {
        None
    };
    let (witness_json, label, error) = match witness {
        Ok((json, label)) => (Some(json), Some(label), None),
        Err(e) => (None, None, Some(e.to_string())),
    };
    let ok = error.is_none() && oracle_result.map(|(card, c)| c && card > 1).unwrap_or(true);
    Outcome {
        tuple: t,
        group: group_name(family, &t),
        witness: witness_json,
        witness_label: label,
        error,
        oracle: oracle_result,
        ok,
    }
}

fn record_json(family: Family, o: &Outcome) -> serde_json::Value {
    let mut map = serde_json::Map::new();
    map.insert("family".into(), family.as_str().into());
    map.insert("n".into(), o.tuple.n.into());
    if let Some(field) = o.tuple.field {
        map.insert("Q".into(), field.into());
    }
    if let Some(epsilon) = o.tuple.epsilon {
        map.insert("epsilon".into(), epsilon.into());
    }
    map.insert("p".into(), o.tuple.p.into());
    map.insert("q".into(), o.tuple.q.into());
    map.insert("ok".into(), o.ok.into());
    map.insert(
        "witness".into(),
        o.witness.clone().unwrap_or(serde_json::Value::Null),
    );
    map.insert(
        "error".into(),
        o.error
            .clone()
            .map(Into::into)
            .unwrap_or(serde_json::Value::Null),
    );
    map.insert(
        "oracle".into(),
        o.oracle
            .map(|(cardinality, contained)| {
                serde_json::json!({"cardinality": cardinality, "witness_contained": contained})
            })
            .unwrap_or(serde_json::Value::Null),
    );
    serde_json::Value::Object(map)
}

fn csv_row(o: &Outcome) -> String {
    let intersection = o.oracle.map(|(c, _)| c.to_string()).unwrap_or_default();
    let label = o.witness_label.clone().unwrap_or_default();
    format!(
        "{},{},{},{},{},{},\"{}\"",
        o.group,
        o.tuple.n,
        o.tuple.p,
        o.tuple.q,
        intersection,
        o.witness.is_some(),
        label.replace('"', "\"\"")
    )
}

pub fn cmd_sweep(args: &SweepArgs) -> Result<(), Error> {
    if args.jobs == 0 {
        return Err(Error::invalid("--jobs must be at least 1"));
    }
    let tuples = build_tuples(args)?;
    let family = args.family;
    let with_oracle = args.oracle;

    let mut outcomes: Vec<Option<Outcome>> = Vec::with_capacity(tuples.len());
    outcomes.resize_with(tuples.len(), || None);
    let jobs = args.jobs.min(tuples.len().max(1));
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for worker in 0..jobs {
            let tuples = &tuples;
            handles.push(scope.spawn(move || {
                let mut done = Vec::new();
                let mut idx = worker;
                while idx < tuples.len() {
                    done.push((idx, run_tuple(family, tuples[idx], with_oracle)));
                    idx += jobs;
                }
                done
            }));
        }
        for handle in handles {
            for (idx, outcome) in handle.join().expect("worker panicked") {
                outcomes[idx] = Some(outcome);
            }
        }
    });
    let outcomes: Vec<Outcome> = outcomes
        .into_iter()
        .map(|o| o.expect("all indices run"))
        .collect();

    let mut sink: Box<dyn Write> = match &args.out {
        Some(path) => {
            Box::new(BufWriter::new(File::create(path).map_err(|e| {
                Error::invalid(format!("cannot write {path:?}: {e}"))
            })?))
        }
        None => Box::new(std::io::stdout().lock()),
    };
    for o in &outcomes {
        writeln!(sink, "{}", record_json(family, o))
            .map_err(|e| Error::invalid(format!("write failed: {e}")))?;
    }
    sink.flush().ok();
    drop(sink);

    if let Some(path) = &args.csv {
        let mut csv = BufWriter::new(
            File::create(path)
                .map_err(|e| Error::invalid(format!("cannot write {path:?}: {e}")))?,
        );
        writeln!(csv, "group,n,p,q,intersection,witness_found,witness_label")
            .map_err(|e| Error::invalid(format!("write failed: {e}")))?;
        for o in &outcomes {
            writeln!(csv, "{}", csv_row(o))
                .map_err(|e| Error::invalid(format!("write failed: {e}")))?;
        }
    }

    let failures = outcomes.iter().filter(|o| !o.ok).count();
    eprintln!(
        "sweep {}: {} records, {} failures",
        family.as_str(),
        outcomes.len(),
        failures
    );
    if failures > 0 {
        return Err(Error::verification(format!(
            "{failures} parameter tuples failed"
        )));
    }
    Ok(())
}
