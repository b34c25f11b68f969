//! The `regfact` command line.
//!
//! Exit status: 0 on success, 1 when verification finds a problem, 2 for
//! usage or parameter errors, 3 when a construction fails its own checks.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::builder::PossibleValuesParser;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::constructions::{self, Construction};
use crate::error::Error;
use crate::export;
use crate::group::{Group, GroupFamily};
use crate::oracle::{self, SearchBudget};
use crate::schema::{self, Document};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTEGRITY: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "regfact",
    version,
    about = "Regular 1-factorizations of K_2n with complete sets of rainbow spanning trees"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build and certify a construction, then write it out.
    Generate {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        output: Output,
    },
    /// Check a JSON document from scratch.
    Verify {
        path: PathBuf,
        #[arg(long)]
        quiet: bool,
    },
    /// Enumerate every starter of a small group.
    Search {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 10_000_000)]
        max_nodes: u64,
        #[arg(long, value_enum, default_value_t = SearchFormat::Summary)]
        format: SearchFormat,
        #[command(flatten)]
        output: Output,
    },
    /// Describe a group and its construction, or list the families.
    Info {
        #[arg(long, value_parser = PossibleValuesParser::new(GroupFamily::NAMES), requires = "param")]
        family: Option<String>,
        #[arg(long, requires = "family")]
        param: Option<u32>,
        #[arg(long, env = "REGFACT_MAX_ORDER")]
        max_order: Option<usize>,
    },
    /// DOT drawing of R + e1 and R*j + e2 with styled components.
    Figure {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Clone, Args)]
pub struct Target {
    #[arg(long, value_parser = PossibleValuesParser::new(GroupFamily::NAMES))]
    pub family: String,
    /// `s` for dicyclic, `n` for the other families.
    #[arg(long)]
    pub param: u32,
    /// Refuse groups larger than this.
    #[arg(long, env = "REGFACT_MAX_ORDER")]
    pub max_order: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct Output {
    /// Write the artifact here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub quiet: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Edgelist,
    Summary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SearchFormat {
    Json,
    Summary,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let mut io = Io { out, err };
    match cli.command {
        Command::Generate {
            target,
            format,
            output,
        } => generate(&mut io, &target, format, &output),
        Command::Verify { path, quiet } => verify(&mut io, &path, quiet),
        Command::Search {
            target,
            max_nodes,
            format,
            output,
        } => search(&mut io, &target, max_nodes, format, &output),
        Command::Info {
            family,
            param,
            max_order,
        } => info(&mut io, family.as_deref().zip(param), max_order),
        Command::Figure { target, output } => figure(&mut io, &target, &output),
    }
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn fail(&mut self, code: i32, e: &dyn std::fmt::Display) -> i32 {
        let _ = writeln!(self.err, "error: {e}");
        code
    }

    /// Writes the artifact to the file or standard output. Returns the
    /// stream for human-readable notes: standard error when the artifact
    /// went to standard output.
    fn emit(&mut self, output: &Output, text: &str) -> Result<&mut dyn Write, i32> {
        match &output.out {
            Some(path) => match std::fs::write(path, text) {
                Ok(()) => Ok(&mut *self.out),
                Err(e) => Err(self.fail(EXIT_USAGE, &format!("{}: {e}", path.display()))),
            },
            None => {
                let _ = self.out.write_all(text.as_bytes());
                Ok(&mut *self.err)
            }
        }
    }
}

fn code_of(e: &Error) -> i32 {
    match e {
        Error::Integrity(_) | Error::InvalidStarter(_) => EXIT_INTEGRITY,
        _ => EXIT_USAGE,
    }
}

fn resolve(target: &Target) -> Result<(GroupFamily, Group), Error> {
    let family = GroupFamily::from_name(&target.family, target.param)?;
    let group = Group::new(family)?;
    check_size(&group, target.max_order)?;
    Ok((family, group))
}

fn check_size(group: &Group, max_order: Option<usize>) -> Result<(), Error> {
    match max_order {
        Some(limit) if group.order() > limit => Err(Error::UnsupportedParameter {
            family: group.family().name(),
            parameter: group.family().parameter(),
            reason: format!(
                "group order {} exceeds REGFACT_MAX_ORDER = {limit}",
                group.order()
            ),
        }),
        _ => Ok(()),
    }
}

fn build(io: &mut Io<'_>, target: &Target) -> Result<Construction, i32> {
    let (family, _) = resolve(target).map_err(|e| io.fail(code_of(&e), &e))?;
    Construction::new(family).map_err(|e| io.fail(code_of(&e), &e))
}

fn generate(io: &mut Io<'_>, target: &Target, format: Format, output: &Output) -> i32 {
    let c = match build(io, target) {
        Ok(c) => c,
        Err(code) => return code,
    };
    let text = match format {
        Format::Json => match Document::from_construction(&c).to_json() {
            Ok(t) => t,
            Err(e) => return io.fail(EXIT_USAGE, &e),
        },
        Format::Dot => export::trees_dot(&c),
        Format::Edgelist => export::edgelist(&c),
        Format::Summary => export::summary(&c),
    };
    let notes = match io.emit(output, &text) {
        Ok(w) => w,
        Err(code) => return code,
    };
    if !output.quiet && format != Format::Summary {
        let _ = writeln!(
            notes,
            "{}: |G| = {}, {} factors, {} trees, certified",
            c.family,
            c.group.order(),
            c.factorization.len(),
            c.trees.len()
        );
    }
    EXIT_OK
}

fn verify(io: &mut Io<'_>, path: &PathBuf, quiet: bool) -> i32 {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return io.fail(EXIT_USAGE, &format!("{}: {e}", path.display())),
    };
    let doc = match Document::from_json(&text) {
        Ok(d) => d,
        Err(e) => return io.fail(EXIT_USAGE, &e),
    };
    let report = match schema::verify(&doc) {
        Ok(r) => r,
        Err(e) => return io.fail(EXIT_USAGE, &e),
    };
    if !quiet {
        let _ = write!(io.out, "{report}");
    }
    if report.passed() {
        EXIT_OK
    } else {
        let _ = writeln!(
            io.err,
            "verification failed: {}",
            report.failed_ids().join(", ")
        );
        EXIT_VERIFY
    }
}

fn search(
    io: &mut Io<'_>,
    target: &Target,
    max_nodes: u64,
    format: SearchFormat,
    output: &Output,
) -> i32 {
    let (family, group) = match resolve(target) {
        Ok(x) => x,
        Err(e) => return io.fail(code_of(&e), &e),
    };
    let budget = SearchBudget {
        max_group_order: target
            .max_order
            .unwrap_or(SearchBudget::ORDER_LIMIT)
            .min(SearchBudget::ORDER_LIMIT),
        max_nodes,
    };
    let outcome = match oracle::exhaustive_starter_search(&group, budget) {
        Ok(o) => o,
        Err(e) => return io.fail(code_of(&e), &e),
    };
    let text = match format {
        SearchFormat::Json => {
            let docs: Vec<Document> = outcome
                .starters
                .iter()
                .map(Document::from_starter)
                .collect();
            match serde_json::to_string_pretty(&docs) {
                Ok(t) => t + "\n",
                Err(e) => return io.fail(EXIT_USAGE, &e),
            }
        }
        SearchFormat::Summary => {
            let explicit = constructions::transcribe(family)
                .map(|t| outcome.contains(&t.starter))
                .unwrap_or(false);
            format!(
                "group: {family}\nstarters: {}\ncomplete: {}\nnodes: {}\ncontains the explicit starter: {}\n",
                outcome.starters.len(),
                outcome.complete,
                outcome.nodes,
                if explicit { "yes" } else { "no" }
            )
        }
    };
    let notes = match io.emit(output, &text) {
        Ok(w) => w,
        Err(code) => return code,
    };
    if !output.quiet && format == SearchFormat::Json {
        let _ = writeln!(
            notes,
            "{family}: {} starters, complete = {}",
            outcome.starters.len(),
            outcome.complete
        );
    }
    EXIT_OK
}

fn info(io: &mut Io<'_>, target: Option<(&str, u32)>, max_order: Option<usize>) -> i32 {
    let Some((name, param)) = target else {
        let _ = writeln!(
            io.out,
            "dicyclic      --param s   order 4s, s >= 2\n\
             abelian       --param n   Z_2 x Z_n, order 2n, 4 | n\n\
             semidihedral  --param n   order 2n, n a power of two >= 8\n\
             modular       --param n   order 2n, n a power of two >= 8"
        );
        return EXIT_OK;
    };
    let target = Target {
        family: name.to_string(),
        param,
        max_order,
    };
    let (_, group) = match resolve(&target) {
        Ok(x) => x,
        Err(e) => return io.fail(code_of(&e), &e),
    };
    let involutions: Vec<String> = group
        .involutions()
        .iter()
        .map(ToString::to_string)
        .collect();
    let _ = writeln!(io.out, "involutions: {{{}}}", involutions.join(", "));
    let c = match build(io, &target) {
        Ok(c) => c,
        Err(code) => return code,
    };
    let _ = write!(io.out, "{}", export::summary(&c));
    EXIT_OK
}

fn figure(io: &mut Io<'_>, target: &Target, output: &Output) -> i32 {
    let c = match build(io, target) {
        Ok(c) => c,
        Err(code) => return code,
    };
    let text = export::figure_dot(&c);
    let notes = match io.emit(output, &text) {
        Ok(w) => w,
        Err(code) => return code,
    };
    if !output.quiet {
        let _ = writeln!(
            notes,
            "{}: R has {} edges in {} components",
            c.family,
            c.lemma.base_graph.len(),
            crate::graph::component_count(&c.group, &c.lemma.base_graph)
        );
    }
    EXIT_OK
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_with(
            std::iter::once("regfact").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn generate_q8_json() {
        let (code, out, err) = run_capture(&["generate", "--family", "dicyclic", "--param", "2"]);
        assert_eq!(code, EXIT_OK, "{err}");
        assert!(out.contains("\"schema\": 1"));
        assert!(err.contains("7 factors, 4 trees"));
    }

    #[test]
    fn guards_exit_2() {
        let (code, _, err) = run_capture(&["generate", "--family", "abelian", "--param", "6"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("abelian"));
        let (code, _, _) = run_capture(&["generate", "--family", "dicyclic", "--param", "1"]);
        assert_eq!(code, EXIT_USAGE);
        let (code, _, _) = run_capture(&["generate", "--family", "cyclic", "--param", "8"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn max_order_caps_size() {
        let (code, _, err) = run_capture(&[
            "generate",
            "--family",
            "modular",
            "--param",
            "32",
            "--max-order",
            "32",
        ]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("REGFACT_MAX_ORDER"));
    }

    #[test]
    fn info_lists_families() {
        let (code, out, _) = run_capture(&["info"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.lines().count(), 4);
        let (code, out, _) = run_capture(&["info", "--family", "abelian", "--param", "4"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("involutions: {a^2, b, b*a^2}"));
    }

    #[test]
    fn help_is_not_an_error() {
        let (code, out, _) = run_capture(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("generate"));
    }
}
