//! Verification reports.

use serde::Serialize;

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    Skip,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

impl Counts {
    pub fn add(&mut self, other: &Counts) {
        self.pass += other.pass;
        self.fail += other.fail;
        self.skip += other.skip;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub check: String,
    pub anchor: String,
    /// A single instance or a family such as `random(seed=1,count=50)`.
    pub instance: String,
    pub verdict: Verdict,
    /// Always present on `Fail`: the first failing instance and what went wrong.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub instances: Counts,
}

impl Record {
    /// Folds per-instance outcomes into one record.
    pub fn aggregate<'a>(
        check: &str,
        anchor: &str,
        family: &str,
        outcomes: impl IntoIterator<Item = (&'a str, &'a Outcome)>,
    ) -> Record {
        let mut counts = Counts::default();
        let mut witness = None;
        for (instance, outcome) in outcomes {
            match outcome {
                Outcome::Pass => counts.pass += 1,
                Outcome::Skip => counts.skip += 1,
                Outcome::Fail(w) => {
                    counts.fail += 1;
                    if witness.is_none() {
                        witness = Some(if instance == family {
                            w.clone()
                        } else {
                            format!("{}: {}", instance, w)
                        });
                    }
                }
            }
        }
        let verdict = if counts.fail > 0 {
            Verdict::Fail
        } else if counts.pass > 0 {
            Verdict::Pass
        } else {
            Verdict::Skip
        };
        Record {
            check: check.to_string(),
            anchor: anchor.to_string(),
            instance: family.to_string(),
            verdict,
            witness,
            instances: counts,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub records: Counts,
    pub distinct_checks: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub suite: String,
    pub seed: u64,
    pub count: usize,
    pub records: Vec<Record>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new(suite: &str, seed: u64, count: usize, records: Vec<Record>) -> VerificationReport {
        let mut counts = Counts::default();
        for r in &records {
            match r.verdict {
                Verdict::Pass => counts.pass += 1,
                Verdict::Fail => counts.fail += 1,
                Verdict::Skip => counts.skip += 1,
            }
        }
        let mut ids: Vec<&str> = records.iter().map(|r| r.check.as_str()).collect();
        ids.sort_unstable();
        ids.dedup();
        let distinct_checks = ids.len();
        VerificationReport {
            schema: SCHEMA,
            suite: suite.to_string(),
            seed,
            count,
            records,
            summary: Summary {
                records: counts,
                distinct_checks,
            },
        }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.records.fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| r.verdict == Verdict::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
