//! Runs order algorithms over catalogued automorphisms and checks that they
//! agree. Instances run on worker threads, each with its own counter.

use std::io::Write;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use pcdyn_core::{automorphism_order, DynOptions, OpCounter, PcAutomorphism, PcError};

use crate::corpus::CorpusEntry;
use crate::error::{HarnessError, Result};
use crate::generic::generic_order;
use crate::oracle::brute_automorphism_order;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    Algo1,
    Generic,
    Oracle,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Self::Algo1 => "algo1",
            Self::Generic => "generic",
            Self::Oracle => "oracle",
        }
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "algo1" => Ok(Self::Algo1),
            "generic" => Ok(Self::Generic),
            "oracle" => Ok(Self::Oracle),
            _ => Err(format!("unknown algorithm '{s}', expected algo1, generic or oracle")),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub group: String,
    pub instance: String,
    pub algorithm: &'static str,
    pub result: String,
    pub mults: u64,
    pub wall_ms: f64,
}

#[derive(Clone, Debug, Default)]
pub struct BenchReport {
    pub records: Vec<BenchRecord>,
}

impl BenchReport {
    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(["group", "instance", "algorithm", "result", "mults", "wall_ms"])?;
        for r in &self.records {
            out.write_record([
                r.group.as_str(),
                r.instance.as_str(),
                r.algorithm,
                r.result.as_str(),
                &r.mults.to_string(),
                &format!("{:.3}", r.wall_ms),
            ])?;
        }
        out.flush().map_err(|source| HarnessError::Io { path: "<csv>".into(), source })?;
        Ok(())
    }

    pub fn find(&self, group: &str, instance: &str, algorithm: Algorithm) -> Option<&BenchRecord> {
        self.records
            .iter()
            .find(|r| r.group == group && r.instance == instance && r.algorithm == algorithm.name())
    }
}

struct Instance<'a> {
    group: &'a str,
    label: &'a str,
    alpha: &'a PcAutomorphism,
}

fn run_one(inst: &Instance<'_>, algo: Algorithm, opts: DynOptions, budget: u64) -> Result<Option<BenchRecord>> {
    let ctr = OpCounter::new();
    let start = Instant::now();
    let result = match algo {
        Algorithm::Algo1 => automorphism_order(inst.alpha, opts, &ctr)?.value.value(),
        Algorithm::Generic => generic_order(inst.alpha, &ctr).order,
        Algorithm::Oracle => match brute_automorphism_order(inst.alpha, budget, &ctr) {
            Ok(o) => o,
            Err(PcError::BudgetExceeded { .. }) => return Ok(None),
            Err(e) => return Err(e.into()),
        },
    };
    Ok(Some(BenchRecord {
        group: inst.group.to_owned(),
        instance: inst.label.to_owned(),
        algorithm: algo.name(),
        result: result.to_string(),
        mults: ctr.multiplications(),
        wall_ms: start.elapsed().as_secs_f64() * 1e3,
    }))
}

/// One row per (catalogued automorphism, algorithm). The oracle is skipped
/// on groups over `budget`. Any disagreement is an error.
pub fn run_bench(entries: &[CorpusEntry], algos: &[Algorithm], opts: DynOptions, budget: u64) -> Result<BenchReport> {
    let instances: Vec<Instance<'_>> = entries
        .iter()
        .flat_map(|e| e.automorphisms.iter().map(move |a| Instance { group: &e.name, label: &a.label, alpha: &a.map }))
        .collect();
    let slots: Vec<Mutex<Option<Result<Vec<BenchRecord>>>>> = instances.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(instances.len().max(1));
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::Relaxed);
                let Some(inst) = instances.get(k) else { break };
                let rows = algos
                    .iter()
                    .map(|&a| run_one(inst, a, opts, budget))
                    .collect::<Result<Vec<_>>>()
                    .map(|v| v.into_iter().flatten().collect());
                *slots[k].lock().unwrap() = Some(rows);
            });
        }
    });
    let mut report = BenchReport::default();
    for (inst, slot) in instances.iter().zip(slots) {
        let rows = slot.into_inner().unwrap().expect("every instance ran")?;
        if let Some(first) = rows.first() {
            if let Some(bad) = rows.iter().find(|r| r.result != first.result) {
                return Err(HarnessError::Disagreement {
                    group: inst.group.to_owned(),
                    instance: inst.label.to_owned(),
                    detail: format!("{} says {}, {} says {}", first.algorithm, first.result, bad.algorithm, bad.result),
                });
            }
        }
        report.records.extend(rows);
    }
    Ok(report)
}
