//! `qd` — command-line surface for the quasi-diagram calculus.
//!
//! Diagrams are always passed as quoted cycle text plus an explicit `--n`;
//! the degree is never inferred from the largest named point, so isolated
//! points beyond it stay representable. Every command is deterministic:
//! identical arguments produce identical bytes on stdout.
//!
//! Exit codes: 0 ok, 2 parse error (including bad flags), 3 invariant
//! violation (e.g. not an involution), 4 domain or bound error.

mod draw;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use quasidiagram::diagram::SurfaceInvariants;
use quasidiagram::enumerate::{self, Predicate};
use quasidiagram::gentle::GentlePresentation;
use quasidiagram::group::{self, SymmetryGroup};
use quasidiagram::homology::{self, ExtendedNat, KoszulInfo};
use quasidiagram::moves;
use quasidiagram::{Error, QuasiDiagram};

#[derive(Parser)]
#[command(
    name = "qd",
    version,
    about = "Quasi-diagram calculus for gentle algebras with one maximal path"
)]
struct Cli {
    /// Bound on sweep degrees (enumerate, orbits, counts, oracle-check).
    #[arg(long, global = true, default_value_t = 10)]
    max_degree: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one diagram: faces, regularity, gldim, Koszul dual,
    /// surface invariants. JSON on stdout.
    Analyze {
        #[arg(long)]
        n: usize,
        /// Cycle notation, e.g. "(1 3)(2 4)" or "id".
        diagram: String,
    },
    /// List or count the involutions of one degree, optionally filtered.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = FilterArg::All)]
        filter: FilterArg,
        /// Print only the number of matching diagrams.
        #[arg(long)]
        count_only: bool,
        #[arg(long, value_enum, default_value_t = ListFormat::Text)]
        format: ListFormat,
    },
    /// Partition a filtered class into orbits under rotations or the full
    /// dihedral group.
    Orbits {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = FilterArg::MaximalChord)]
        filter: FilterArg,
        #[arg(long, value_enum, default_value_t = GroupArg::Dihedral)]
        group: GroupArg,
        #[arg(long, value_enum, default_value_t = ListFormat::Json)]
        format: ListFormat,
    },
    /// The Koszul dual diagram, when it exists (gldim = n-1).
    Dual {
        #[arg(long)]
        n: usize,
        diagram: String,
        #[arg(long, value_enum, default_value_t = ListFormat::Text)]
        format: ListFormat,
    },
    /// Insert an isolated point at a position, producing a degree n+1
    /// diagram.
    Expand {
        #[arg(long)]
        n: usize,
        /// Position 1..=n+1.
        #[arg(long)]
        at: usize,
        diagram: String,
        #[arg(long, value_enum, default_value_t = ListFormat::Text)]
        format: ListFormat,
    },
    /// Remove an isolated point, producing a degree n-1 diagram.
    Contract {
        #[arg(long)]
        n: usize,
        /// An isolated point of the diagram.
        #[arg(long)]
        at: usize,
        diagram: String,
        #[arg(long, value_enum, default_value_t = ListFormat::Text)]
        format: ListFormat,
    },
    /// The glued quiver presentation, as DOT or JSON.
    Quiver {
        #[arg(long)]
        n: usize,
        diagram: String,
        #[arg(long, value_enum, default_value_t = QuiverFormat::Dot)]
        format: QuiverFormat,
    },
    /// Static SVG drawing: labeled n-gon with one chord per transposition.
    Draw {
        #[arg(long)]
        n: usize,
        diagram: String,
        /// Image width and height in pixels.
        #[arg(long, default_value_t = 400)]
        size: u32,
    },
    /// Sweep every involution of one degree asserting that the orbit-walk
    /// global dimension matches the quiver oracle.
    OracleCheck {
        #[arg(long)]
        n: usize,
    },
    /// CSV table of class counts for degrees 1..=n.
    Counts {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FilterArg {
    All,
    Chord,
    Maximal,
    Regular,
    #[value(alias = "rotatably-regular")]
    Rotreg,
    MaximalChord,
    KoszulExists,
}

impl From<FilterArg> for Predicate {
    fn from(f: FilterArg) -> Predicate {
        match f {
            FilterArg::All => Predicate::All,
            FilterArg::Chord => Predicate::Chord,
            FilterArg::Maximal => Predicate::Maximal,
            FilterArg::Regular => Predicate::Regular,
            FilterArg::Rotreg => Predicate::RotatablyRegular,
            FilterArg::MaximalChord => Predicate::MaximalChord,
            FilterArg::KoszulExists => Predicate::KoszulExists,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GroupArg {
    Dihedral,
    Rotations,
}

impl From<GroupArg> for SymmetryGroup {
    fn from(g: GroupArg) -> SymmetryGroup {
        match g {
            GroupArg::Dihedral => SymmetryGroup::Dihedral,
            GroupArg::Rotations => SymmetryGroup::Rotations,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ListFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum QuiverFormat {
    Dot,
    Json,
}

/// Everything `analyze` reports about one diagram.
#[derive(Serialize)]
struct AnalysisReport {
    diagram: QuasiDiagram,
    chords: Vec<(usize, usize)>,
    isolated: Vec<usize>,
    faces: Vec<Vec<usize>>,
    regular: bool,
    maximal: bool,
    chord_diagram: bool,
    gldim: ExtendedNat,
    koszul: KoszulInfo,
    surface: SurfaceInvariants,
}

impl AnalysisReport {
    fn build(d: &QuasiDiagram) -> Result<Self, Error> {
        Ok(AnalysisReport {
            chords: d.chords(),
            isolated: d.isolated_points(),
            faces: d.faces().cycles().to_vec(),
            regular: homology::is_regular(d),
            maximal: d.is_maximal(),
            chord_diagram: d.is_chord_diagram(),
            gldim: homology::gldim(d),
            koszul: homology::koszul_info(d),
            surface: d.surface_invariants()?,
            diagram: d.clone(),
        })
    }
}

fn main() {
    let cli = Cli::parse();
    if cli.max_degree > 14 {
        eprintln!(
            "warning: --max-degree {} will sweep more than {} involutions per degree",
            cli.max_degree,
            enumerate::telephone(14)
        );
    }
    match run(cli) {
        Ok(output) => print!("{output}"),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(exit_code(&err));
        }
    }
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse { .. } => 2,
        Error::NotAnInvolution { .. } | Error::Internal(_) | Error::DegreeMismatch { .. } => 3,
        Error::Domain(_) | Error::NotRegular | Error::NoKoszulDual { .. } => 4,
    }
}

fn check_bound(n: usize, max_degree: usize) -> Result<(), Error> {
    if n > max_degree {
        return Err(Error::Domain(format!(
            "degree {n} exceeds the sweep bound {max_degree} (raise with --max-degree)"
        )));
    }
    Ok(())
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    text
}

fn diagram_output(d: &QuasiDiagram, format: ListFormat) -> String {
    match format {
        ListFormat::Text => format!("{d}\n"),
        ListFormat::Json => pretty(d),
    }
}

fn run(cli: Cli) -> Result<String, Error> {
    match cli.command {
        Command::Analyze { n, diagram } => {
            if n == 0 {
                return Err(Error::Domain("analyze requires degree >= 1".into()));
            }
            let d = QuasiDiagram::parse(&diagram, n)?;
            Ok(pretty(&AnalysisReport::build(&d)?))
        }
        Command::Enumerate {
            n,
            filter,
            count_only,
            format,
        } => {
            check_bound(n, cli.max_degree)?;
            let stream = enumerate::filter(enumerate::involutions(n), filter.into());
            if count_only {
                return Ok(format!("{}\n", stream.count()));
            }
            match format {
                ListFormat::Text => {
                    let mut out = String::new();
                    for d in stream {
                        out.push_str(&d.to_string());
                        out.push('\n');
                    }
                    Ok(out)
                }
                ListFormat::Json => {
                    let all: Vec<QuasiDiagram> = stream.collect();
                    Ok(pretty(&all))
                }
            }
        }
        Command::Orbits {
            n,
            filter,
            group,
            format,
        } => {
            check_bound(n, cli.max_degree)?;
            let class: Vec<QuasiDiagram> =
                enumerate::filter(enumerate::involutions(n), filter.into()).collect();
            let report = group::orbit_partition(&class, group.into())?;
            match format {
                ListFormat::Json => Ok(pretty(&report)),
                ListFormat::Text => {
                    let mut out = String::new();
                    for orbit in &report.orbits {
                        let members: Vec<String> = orbit.iter().map(|d| d.to_string()).collect();
                        out.push_str(&format!("size={}: {}\n", orbit.len(), members.join(", ")));
                    }
                    Ok(out)
                }
            }
        }
        Command::Dual { n, diagram, format } => {
            let d = QuasiDiagram::parse(&diagram, n)?;
            let dual = quasidiagram::gentle::koszul_dual_diagram(&d)?;
            Ok(diagram_output(&dual, format))
        }
        Command::Expand {
            n,
            at,
            diagram,
            format,
        } => {
            let d = QuasiDiagram::parse(&diagram, n)?;
            Ok(diagram_output(&moves::expand(&d, at)?, format))
        }
        Command::Contract {
            n,
            at,
            diagram,
            format,
        } => {
            let d = QuasiDiagram::parse(&diagram, n)?;
            Ok(diagram_output(&moves::contract(&d, at)?, format))
        }
        Command::Quiver { n, diagram, format } => {
            let d = QuasiDiagram::parse(&diagram, n)?;
            let p = GentlePresentation::from_diagram(&d)?;
            Ok(match format {
                QuiverFormat::Dot => p.to_dot(),
                QuiverFormat::Json => {
                    let mut text = p.to_json();
                    text.push('\n');
                    text
                }
            })
        }
        Command::Draw { n, diagram, size } => {
            let d = QuasiDiagram::parse(&diagram, n)?;
            if d.degree() == 0 {
                return Err(Error::Domain("cannot draw the empty diagram".into()));
            }
            Ok(draw::render(&d, size))
        }
        Command::OracleCheck { n } => {
            check_bound(n, cli.max_degree)?;
            let total = enumerate::telephone(n);
            let mut verified = 0u64;
            for d in enumerate::involutions(n) {
                let via_orbits = homology::gldim(&d);
                let via_quiver = GentlePresentation::from_diagram(&d)?.oracle_gldim();
                if via_orbits != via_quiver {
                    return Err(Error::Internal(format!(
                        "gldim disagreement on {d}: orbit walk {via_orbits}, quiver {via_quiver}"
                    )));
                }
                if homology::is_regular(&d) != via_quiver.is_finite() {
                    return Err(Error::Internal(format!(
                        "regularity vs finiteness disagreement on {d}"
                    )));
                }
                verified += 1;
            }
            if verified != total {
                return Err(Error::Internal(format!(
                    "swept {verified} involutions, expected {total}"
                )));
            }
            Ok(format!("{verified}-of-{total}: OK\n"))
        }
        Command::Counts { n } => {
            check_bound(n, cli.max_degree)?;
            let mut out = String::new();
            out.push_str(enumerate::CountsTable::CSV_HEADER);
            out.push('\n');
            for degree in 1..=n {
                out.push_str(&enumerate::counts_table(degree).csv_row());
                out.push('\n');
            }
            Ok(out)
        }
    }
}
