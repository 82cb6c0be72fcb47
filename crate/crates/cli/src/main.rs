use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use legfront::constructions::{legendrianize, push_off, whitehead_double};
use legfront::invariants::{self, InvariantReport};
use legfront::moves::fuzz;
use legfront::obstructions::{genus_bound, slice_check, stein_check, HandleStatus, SliceVerdict};
use legfront::oracles::{
    kauffman_bracket, oracle_component_writhe, oracle_linking, MAX_BRACKET_CROSSINGS,
};
use legfront::render::{render, RenderFormat, RenderSpec};
use legfront::report::{
    describe_sites, ComponentCheck, DoubleDoc, Envelope, FuzzDoc, GenusDoc, InvariantsDoc,
    LegendrianizeDoc, LinkingCheck, PushOffDoc, SliceDoc, SteinDoc, VerifyDoc,
};
use legfront::{parse_front, parse_grid, to_generic_code, Error, OrientedFront};

/// Legendrian fronts: invariants, constructions and obstructions.
#[derive(Parser)]
#[command(name = "legfront", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Per-component bb, cusp counts, tb, rot and the linking matrix
    Invariants {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Framed Legendrian push-off of a knot
    Pushoff {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        framing: i64,
        #[arg(long)]
        json: bool,
    },
    /// Iterated positive Whitehead double of a knot
    Double {
        file: PathBuf,
        #[arg(short = 'n', default_value_t = 1)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Front of a grid diagram
    Legendrianize {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// One-sided sliceness obstruction for a knot
    SliceCheck {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Genus lower bound for framed surfaces bounded by each component
    GenusBound {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        framing: i64,
        /// restrict to one component
        #[arg(long)]
        component: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Stein realizability of 2-handles, one framing per component in order
    SteinCheck {
        file: PathBuf,
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        framings: Vec<i64>,
        #[arg(long)]
        json: bool,
    },
    /// Random front moves with an invariance verdict
    Fuzz {
        file: PathBuf,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        allow_stab: bool,
        #[arg(long)]
        json: bool,
    },
    /// ASCII or SVG picture of a front
    Render {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        #[arg(long)]
        column_width: Option<usize>,
        #[arg(long)]
        strand_spacing: Option<usize>,
        /// label components at their first left cusp
        #[arg(long)]
        labels: bool,
        /// number the event columns
        #[arg(long)]
        event_labels: bool,
        /// write to a file instead of standard output
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Cross-check writhe and linking against the PD-code oracles
    Verify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Svg,
}

#[derive(Debug)]
enum Failure {
    Io(PathBuf, std::io::Error),
    Domain(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Io(p, e) => write!(f, "{}: {e}", p.display()),
            Failure::Domain(e) => write!(f, "{e}"),
            Failure::Usage(m) => write!(f, "{m}"),
        }
    }
}

type Outcome = Result<String, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn load(path: &Path) -> Result<OrientedFront, Failure> {
    Ok(parse_front(&read(path)?)?.orient_default())
}

fn invariants_text(r: &InvariantReport) -> String {
    let mut out = String::new();
    for c in &r.components {
        out.push_str(&format!(
            "component {}: bb {}, right cusps {}, down {}, up {}, tb {}, rot {}\n",
            c.index, c.bb, c.right_cusps, c.down_cusps, c.up_cusps, c.tb, c.rot
        ));
    }
    let n = r.components.len();
    for j in 0..n {
        for k in j + 1..n {
            out.push_str(&format!("lk({j}, {k}) = {}\n", r.linking[j][k]));
        }
    }
    out
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Invariants { file, json } => {
            let of = load(&file)?;
            let doc = InvariantsDoc {
                word: of.diagram().word(),
                invariants: invariants::report(&of)?,
            };
            Ok(if json {
                Envelope::new("invariants", doc).to_json()
            } else {
                format!("word: {}\n{}", doc.word, invariants_text(&doc.invariants))
            })
        }
        Command::Pushoff {
            file,
            framing,
            json,
        } => {
            let of = load(&file)?;
            let p = push_off(&of, framing)?;
            let doc = PushOffDoc {
                word: p.front.diagram().word(),
                framing,
                knot_index: p.knot_index,
                companion_index: p.companion_index,
                stab_count: p.stab_count,
                positive_twists: p.positive_twists,
                case: p.case,
                invariants: invariants::report(&p.front)?,
            };
            Ok(if json {
                Envelope::new("pushoff", doc).to_json()
            } else {
                format!(
                    "word: {}\nframing {}: knot {}, companion {}, {:?}, {} positive twists, {} left twists\n{}",
                    doc.word,
                    framing,
                    doc.knot_index,
                    doc.companion_index,
                    doc.case,
                    doc.positive_twists,
                    doc.stab_count,
                    invariants_text(&doc.invariants)
                )
            })
        }
        Command::Double { file, n, json } => {
            let of = load(&file)?;
            let wh = whitehead_double(&of, n)?;
            let doc = DoubleDoc {
                word: wh.diagram().word(),
                iterations: n,
                invariants: invariants::report(&wh)?,
            };
            Ok(if json {
                Envelope::new("double", doc).to_json()
            } else {
                format!("word: {}\n{}", doc.word, invariants_text(&doc.invariants))
            })
        }
        Command::Legendrianize { file, json } => {
            let g = parse_grid(&read(&file)?)?;
            let of = legendrianize(&g);
            let doc = LegendrianizeDoc {
                grid_size: g.size(),
                word: of.diagram().word(),
                invariants: invariants::report(&of)?,
            };
            Ok(if json {
                Envelope::new("legendrianize", doc).to_json()
            } else {
                format!("word: {}\n{}", doc.word, invariants_text(&doc.invariants))
            })
        }
        Command::SliceCheck { file, json } => {
            let of = load(&file)?;
            let doc = SliceDoc {
                word: of.diagram().word(),
                certificate: slice_check(&of)?,
            };
            let c = &doc.certificate;
            Ok(if json {
                Envelope::new("slice-check", doc).to_json()
            } else {
                let verdict = match c.verdict {
                    SliceVerdict::NotSlice => "NotSlice",
                    SliceVerdict::Inconclusive => "Inconclusive",
                };
                format!(
                    "{verdict}: tb {} + |rot {}| = {}; a slice disk needs {} >= {} ({})\n",
                    c.tb,
                    c.rot,
                    c.rhs,
                    c.lhs,
                    c.rhs,
                    if c.inequality_holds {
                        "holds"
                    } else {
                        "violated"
                    }
                )
            })
        }
        Command::GenusBound {
            file,
            framing,
            component,
            json,
        } => {
            let of = load(&file)?;
            let ks: Vec<usize> = match component {
                Some(k) => vec![k],
                None => (0..of.component_count()).collect(),
            };
            let bounds = ks
                .into_iter()
                .map(|k| genus_bound(&of, k, framing))
                .collect::<Result<Vec<_>, _>>()?;
            let doc = GenusDoc {
                word: of.diagram().word(),
                bounds,
            };
            Ok(if json {
                Envelope::new("genus-bound", doc).to_json()
            } else {
                doc.bounds
                    .iter()
                    .map(|g| {
                        format!(
                            "component {}: tb {}, rot {}, framing {}: genus >= {} ({:?})\n",
                            g.component, g.tb, g.rot, g.framing, g.bound, g.slice_verdict
                        )
                    })
                    .collect()
            })
        }
        Command::SteinCheck {
            file,
            framings,
            json,
        } => {
            let of = load(&file)?;
            if framings.len() != of.component_count() {
                return Err(Failure::Usage(format!(
                    "{} framings given for {} components",
                    framings.len(),
                    of.component_count()
                )));
            }
            let handles: Vec<(usize, i64)> = framings.into_iter().enumerate().collect();
            let doc = SteinDoc {
                word: of.diagram().word(),
                report: stein_check(&of, &handles)?,
            };
            Ok(if json {
                Envelope::new("stein-check", doc).to_json()
            } else {
                let mut out = String::new();
                for h in &doc.report.handles {
                    let status = match &h.status {
                        HandleStatus::ExactStein => "ExactStein".to_string(),
                        HandleStatus::SteinAfterStabilizations { k, sites } => format!(
                            "SteinAfterStabilizations({k}) via {}",
                            describe_sites(sites).join("; ")
                        ),
                        HandleStatus::NotCertified { deficit } => {
                            format!("NotCertified(deficit {deficit})")
                        }
                    };
                    out.push_str(&format!(
                        "component {}: framing {}, tb {}: {status}\n",
                        h.component, h.framing, h.tb
                    ));
                }
                out.push_str(if doc.report.certified {
                    "certified\n"
                } else {
                    "not certified\n"
                });
                out
            })
        }
        Command::Fuzz {
            file,
            steps,
            seed,
            allow_stab,
            json,
        } => {
            let of = load(&file)?;
            let o = fuzz(&of, steps, seed, allow_stab);
            let doc = FuzzDoc {
                steps,
                seed,
                allow_stab,
                applied: o.applied,
                skipped: o.skipped,
                net_stabilizations: o.net_stabilizations,
                word_before: of.diagram().word(),
                word_after: o.front.diagram().word(),
                before: invariants::report(&of)?,
                after: invariants::report(&o.front)?,
                invariance_holds: o.invariance_holds(&of)?,
            };
            Ok(if json {
                Envelope::new("fuzz", doc).to_json()
            } else {
                format!(
                    "before: {}\n{}after: {}\n{}applied {}, skipped {}, net stabilizations {}\ninvariance: {}\n",
                    doc.word_before,
                    invariants_text(&doc.before),
                    doc.word_after,
                    invariants_text(&doc.after),
                    doc.applied,
                    doc.skipped,
                    doc.net_stabilizations,
                    if doc.invariance_holds { "pass" } else { "FAIL" }
                )
            })
        }
        Command::Render {
            file,
            format,
            column_width,
            strand_spacing,
            labels,
            event_labels,
            output,
        } => {
            let of = load(&file)?;
            let base = match format {
                Format::Ascii => RenderSpec::ascii(),
                Format::Svg => RenderSpec::svg(),
            };
            let spec = RenderSpec::new(
                match format {
                    Format::Ascii => RenderFormat::Ascii,
                    Format::Svg => RenderFormat::Svg,
                },
                column_width.unwrap_or(base.column_width),
                strand_spacing.unwrap_or(base.strand_spacing),
                labels,
                event_labels,
            )
            .map_err(|e| Failure::Usage(e.to_string()))?;
            let doc = render(&of, &spec);
            match output {
                Some(path) => {
                    fs::write(&path, doc).map_err(|e| Failure::Io(path, e))?;
                    Ok(String::new())
                }
                None => Ok(doc),
            }
        }
        Command::Verify { file, json } => {
            let of = load(&file)?;
            let report = invariants::report(&of)?;
            let code = to_generic_code(&of);
            let mut agrees = true;
            let mut components = Vec::new();
            for c in &report.components {
                let oracle = oracle_component_writhe(&code, c.index)?;
                agrees &= oracle == c.bb;
                components.push(ComponentCheck {
                    component: c.index,
                    writhe: c.bb,
                    oracle_writhe: oracle,
                });
            }
            let mut linking = Vec::new();
            let n = report.components.len();
            for j in 0..n {
                for k in j + 1..n {
                    let oracle = oracle_linking(&code, j, k)?;
                    agrees &= oracle == report.linking[j][k];
                    linking.push(LinkingCheck {
                        pair: [j, k],
                        linking: report.linking[j][k],
                        oracle_linking: oracle,
                    });
                }
            }
            let bracket = match kauffman_bracket(&code, MAX_BRACKET_CROSSINGS) {
                Ok(p) => Some(p.to_string()),
                Err(Error::TooLarge { .. }) => None,
                Err(e) => return Err(e.into()),
            };
            let doc = VerifyDoc {
                word: of.diagram().word(),
                pd: code.to_string(),
                components,
                linking,
                bracket,
                agrees,
            };
            Ok(if json {
                Envelope::new("verify", doc).to_json()
            } else {
                let mut out = format!("word: {}\npd: {}\n", doc.word, doc.pd);
                for c in &doc.components {
                    out.push_str(&format!(
                        "component {}: writhe {}, oracle {}\n",
                        c.component, c.writhe, c.oracle_writhe
                    ));
                }
                for l in &doc.linking {
                    out.push_str(&format!(
                        "lk({}, {}): {}, oracle {}\n",
                        l.pair[0], l.pair[1], l.linking, l.oracle_linking
                    ));
                }
                out.push_str(&format!(
                    "bracket: {}\n",
                    doc.bracket
                        .as_deref()
                        .unwrap_or("skipped (too many crossings)")
                ));
                out.push_str(if doc.agrees { "agree\n" } else { "DISAGREE\n" });
                out
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(mut text) => {
            if !text.is_empty() && !text.ends_with('\n') {
                text.push('\n');
            }
            match std::io::stdout().lock().write_all(text.as_bytes()) {
                // a closed pipe (e.g. `| head`) is not a failure
                Ok(()) => ExitCode::SUCCESS,
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: writing output: {e}");
                    ExitCode::from(1)
                }
            }
        }
        Err(Failure::Usage(m)) => {
            eprintln!("usage error: {m}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
