//! Command-line flags and their translation into a [`Job`].

use clap::{Args, Parser, Subcommand};

use crate::{Command, Format, Job};

#[derive(Debug, Parser)]
#[command(
    name = "verma",
    version,
    about = "Singular vectors, characters and tensor products for W(2,2) and Heisenberg-Virasoro Verma modules"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Include the wall-clock time in the report.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Sub,
}

#[derive(Debug, Default, Args)]
pub struct WeightArgs {
    /// `w22` or `hv`.
    #[arg(long)]
    pub algebra: Option<String>,
    /// Declare a symbolic parameter (at most 3).
    #[arg(long = "symbolic", value_name = "NAME")]
    pub symbolic: Vec<String>,
    /// Shorthand for `--symbolic c`.
    #[arg(long = "c-sym")]
    pub c_sym: bool,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub h: Option<String>,
    #[arg(long = "hW", allow_hyphen_values = true)]
    pub h_w: Option<String>,
    #[arg(long = "hI", allow_hyphen_values = true)]
    pub h_i: Option<String>,
    #[arg(long = "cLI", allow_hyphen_values = true)]
    pub c_li: Option<String>,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: String,
    /// Eigenvalue of `I_n` on the series (Heisenberg-Virasoro only).
    #[arg(long = "F", allow_hyphen_values = true)]
    pub f: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Sub {
    /// The singular vector u' (with --p) or all singular vectors at a level.
    Singular {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long)]
        p: Option<u32>,
        #[arg(long)]
        level: Option<u32>,
    },
    /// The subsingular vector with leading term L_{-p}^r v.
    Subsingular {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        r: u32,
    },
    /// Structure of the Verma module.
    Classify {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long = "max-p")]
        max_p: Option<u32>,
    },
    /// Characters of the Verma module and its quotients.
    Character {
        #[arg(long = "symbolic", value_name = "NAME")]
        symbolic: Vec<String>,
        #[arg(long, allow_hyphen_values = true)]
        h: Option<String>,
        #[arg(long)]
        p: Option<u32>,
        #[arg(long)]
        r: Option<u32>,
        /// Truncation order N.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Irreducibility of V'_{alpha,beta} tensored with the irreducible quotient.
    Tensor {
        #[command(flatten)]
        weight: WeightArgs,
        #[command(flatten)]
        series: SeriesArgs,
        /// `irreducible`, `lprime` or `verma`, for --check.
        #[arg(long)]
        factor: Option<String>,
        #[arg(long)]
        window: Option<i64>,
        #[arg(long)]
        depth: Option<u32>,
        /// Indices n at which to test U_{n-1} against U_n, U_{n+1}, ...
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        check: Vec<i64>,
        #[arg(long = "max-p")]
        max_p: Option<u32>,
    },
    /// The F = 0 decision for the Heisenberg-Virasoro algebra.
    HvDecide {
        #[command(flatten)]
        weight: WeightArgs,
        #[command(flatten)]
        series: SeriesArgs,
    },
    /// Subsingular vectors at the necessary h over a (p, r) grid.
    Scan {
        #[arg(long)]
        pmax: u32,
        #[arg(long)]
        rmax: u32,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        offsets: Vec<String>,
        #[arg(long = "max-level")]
        max_level: Option<u32>,
    },
}

fn put(job: Job, key: &str, value: Option<impl ToString>) -> Job {
    match value {
        Some(v) => job.with(key, v),
        None => job,
    }
}

fn list<T: ToString>(xs: &[T]) -> Option<String> {
    if xs.is_empty() {
        None
    } else {
        Some(xs.iter().map(T::to_string).collect::<Vec<_>>().join(","))
    }
}

impl WeightArgs {
    fn apply(&self, job: Job) -> Job {
        let mut symbolic = self.symbolic.clone();
        if self.c_sym && !symbolic.iter().any(|s| s == "c") {
            symbolic.push("c".into());
        }
        let job = put(job, "algebra", self.algebra.as_ref());
        let job = put(job, "symbolic", list(&symbolic));
        let job = put(job, "c", self.c.as_ref());
        let job = put(job, "h", self.h.as_ref());
        let job = put(job, "hW", self.h_w.as_ref());
        let job = put(job, "hI", self.h_i.as_ref());
        put(job, "cLI", self.c_li.as_ref())
    }
}

impl SeriesArgs {
    fn apply(&self, job: Job) -> Job {
        let job = job.with("alpha", &self.alpha).with("beta", &self.beta);
        put(job, "F", self.f.as_ref())
    }
}

impl Sub {
    pub fn to_job(&self) -> Job {
        match self {
            Sub::Singular { weight, p, level } => {
                let job = weight.apply(Job::new(Command::Singular));
                put(put(job, "p", *p), "level", *level)
            }
            Sub::Subsingular { weight, p, r } => weight.apply(Job::new(Command::Subsingular)).with("p", p).with("r", r),
            Sub::Classify { weight, max_p } => put(weight.apply(Job::new(Command::Classify)), "maxP", *max_p),
            Sub::Character { symbolic, h, p, r, order } => {
                let job = put(Job::new(Command::Character), "symbolic", list(symbolic));
                let job = put(put(job, "h", h.as_ref()), "p", *p);
                put(put(job, "r", *r), "order", *order)
            }
            Sub::Tensor { weight, series, factor, window, depth, check, max_p } => {
                let job = series.apply(weight.apply(Job::new(Command::Tensor)));
                let job = put(put(job, "factor", factor.as_ref()), "window", *window);
                let job = put(put(job, "depth", *depth), "check", list(check));
                put(job, "maxP", *max_p)
            }
            Sub::HvDecide { weight, series } => {
                let job = weight.apply(Job::new(Command::HvDecide));
                series.apply(put(job, "algebra", Some("hv")))
            }
            Sub::Scan { pmax, rmax, offsets, max_level } => {
                let job = Job::new(Command::Scan).with("pmax", pmax).with("rmax", rmax);
                put(put(job, "offsets", list(offsets)), "maxLevel", *max_level)
            }
        }
    }
}
