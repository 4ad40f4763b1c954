//! Range sweeps with a CSV report, one row per attempted tuple.

use std::str::FromStr;
use std::thread;
use std::time::Instant;

use clap::Subcommand;
use heffter::heffter::necessary_conditions;
use heffter::{build_ihs, build_integer_heffter, classify, support_of, verify_ihs, verify_integer_heffter, Feasibility};

use crate::io::emit;
use crate::{exit_code, Failure, Global};

pub const HEADER: &str = "params,verdict,verified,members,support_max,wall_ms";

/// `a..b` (inclusive), a single value, or a comma-separated list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntRange(Vec<usize>);

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad number {t:?}"));
        if let Some((a, b)) = s.split_once("..") {
            let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
            Ok(IntRange((a..=b).collect()))
        } else {
            s.split(',').map(num).collect::<Result<_, _>>().map(IntRange)
        }
    }
}

#[derive(Subcommand)]
pub enum SweepKind {
    /// IHS(m,n;c) over odd m, n >= 7 with mnc = 0 or 3 mod 4
    Ihs {
        #[arg(long)]
        m: IntRange,
        #[arg(long)]
        n: IntRange,
        #[arg(long)]
        c: IntRange,
    },
    /// H(ck/d, cs/d; s, k) with d = gcd(s,k), over tuples passing the necessary conditions
    Heffter {
        #[arg(long)]
        s: IntRange,
        #[arg(long)]
        k: IntRange,
        /// Multipliers c
        #[arg(long, default_value = "1..8")]
        c: IntRange,
        /// Only coprime (s,k), and for each residue of c mod 4 only the smallest valid c
        #[arg(long)]
        minimal: bool,
    },
}

#[derive(Clone, Copy, Debug)]
enum Job {
    Ihs(usize, usize, usize),
    Heffter(usize, usize, usize, usize),
}

struct Row {
    line: String,
    failed: bool,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn jobs(kind: &SweepKind) -> Vec<Job> {
    let mut out = Vec::new();
    match kind {
        SweepKind::Ihs { m, n, c } => {
            for &m in &m.0 {
                for &n in &n.0 {
                    for &c in &c.0 {
                        let odd = m % 2 == 1 && n % 2 == 1 && m >= 7 && n >= 7;
                        if odd && c >= 1 && matches!((m * n * c) % 4, 0 | 3) {
                            out.push(Job::Ihs(m, n, c));
                        }
                    }
                }
            }
        }
        SweepKind::Heffter { s, k, c, minimal } => {
            for &k in &k.0 {
                for &s in &s.0 {
                    let d = gcd(s, k);
                    if d == 0 || (*minimal && d != 1) {
                        continue;
                    }
                    let mut seen = [false; 4];
                    for &c in &c.0 {
                        let (m, n) = (c * k / d, c * s / d);
                        if !necessary_conditions(m, n, s, k) || (*minimal && std::mem::replace(&mut seen[c % 4], true)) {
                            continue;
                        }
                        out.push(Job::Heffter(m, n, s, k));
                    }
                }
            }
        }
    }
    out
}

fn run_job(job: Job) -> Row {
    let start = Instant::now();
    let (params, result) = match job {
        Job::Ihs(m, n, c) => (
            format!("{m} {n} {c}"),
            build_ihs(m, n, c).map(|set| {
                let ok = verify_ihs(&set, m, n, c).passed;
                ("constructed".to_string(), ok, set.len(), support_of(&set).max())
            }),
        ),
        Job::Heffter(m, n, s, k) => {
            let verdict = classify(m, n, s, k);
            let params = format!("{m} {n} {s} {k}");
            if verdict != Feasibility::ConstructedHere {
                let ms = start.elapsed().as_secs_f64() * 1e3;
                return Row {
                    line: format!("{params},{verdict},skipped,0,,{ms:.3}"),
                    failed: false,
                };
            }
            (
                params,
                build_integer_heffter(m, n, s, k).map(|h| {
                    let ok = verify_integer_heffter(&h, s, k).passed;
                    (verdict.to_string(), ok, 1, support_of([&h]).max())
                }),
            )
        }
    };
    let ms = start.elapsed().as_secs_f64() * 1e3;
    match result {
        Ok((verdict, ok, members, top)) => Row {
            line: format!(
                "{params},{verdict},{},{members},{},{ms:.3}",
                if ok { "yes" } else { "no" },
                top.map_or(String::new(), |t| t.to_string())
            ),
            failed: !ok,
        },
        Err(e) => {
            let code = exit_code(&e);
            let (verdict, verified) = match code {
                3 => ("external", "skipped"),
                2 => ("invalid-params", "no"),
                _ => ("self-check-failed", "no"),
            };
            Row {
                line: format!("{params},{verdict},{verified},0,,{ms:.3}"),
                failed: code != 3,
            }
        }
    }
}

/// Runs the jobs on a few threads; rows come back in job order.
fn run_all(jobs: &[Job]) -> Vec<Row> {
    let workers = thread::available_parallelism().map_or(1, |n| n.get()).min(jobs.len().max(1));
    let mut rows: Vec<(usize, Row)> = thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                scope.spawn(move || {
                    jobs.iter()
                        .enumerate()
                        .skip(w)
                        .step_by(workers)
                        .map(|(i, &j)| (i, run_job(j)))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("sweep worker panicked")).collect()
    });
    rows.sort_by_key(|r| r.0);
    rows.into_iter().map(|r| r.1).collect()
}

pub fn run(g: &Global, kind: &SweepKind) -> Result<(), Failure> {
    let rows = run_all(&jobs(kind));
    let mut text = String::from(HEADER);
    text.push('\n');
    for r in &rows {
        text.push_str(&r.line);
        text.push('\n');
    }
    emit(g, &text)?;
    let bad = rows.iter().filter(|r| r.failed).count();
    if bad == 0 {
        Ok(())
    } else {
        Err(Failure::new(4, format!("{bad} of {} rows failed", rows.len())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!("7..11".parse::<IntRange>().unwrap().0, vec![7, 8, 9, 10, 11]);
        assert_eq!("7,9".parse::<IntRange>().unwrap().0, vec![7, 9]);
        assert_eq!("5".parse::<IntRange>().unwrap().0, vec![5]);
        assert!("x".parse::<IntRange>().is_err());
        assert!("9..7".parse::<IntRange>().unwrap().0.is_empty());
    }

    #[test]
    fn ihs_filter() {
        let kind = SweepKind::Ihs {
            m: "6..9".parse().unwrap(),
            n: "7".parse().unwrap(),
            c: "1..4".parse().unwrap(),
        };
        let got: Vec<String> = jobs(&kind).iter().map(|j| format!("{j:?}")).collect();
        assert_eq!(got, ["Ihs(7, 7, 3)", "Ihs(7, 7, 4)", "Ihs(9, 7, 1)", "Ihs(9, 7, 4)"]);
    }

    #[test]
    fn minimal_heffter() {
        let kind = SweepKind::Heffter {
            s: "9".parse().unwrap(),
            k: "7".parse().unwrap(),
            c: "1..12".parse().unwrap(),
            minimal: true,
        };
        let got: Vec<String> = jobs(&kind).iter().map(|j| format!("{j:?}")).collect();
        assert_eq!(got, ["Heffter(7, 9, 9, 7)", "Heffter(28, 36, 9, 7)"]);
    }
}
