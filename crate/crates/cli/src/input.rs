use crate::Failure;
use clap::Args;
use reedcheck_core::corpus::{read_graph6_stream, GraphBatch, StreamPolicy};
use std::fs::File;
use std::io::{BufRead, BufReader, Cursor};
use std::path::PathBuf;

#[derive(Args)]
pub struct InputArgs {
    /// graph6 strings; read from stdin when neither these nor --source are given.
    pub graphs: Vec<String>,
    /// File with one graph6 string per line ("-" for stdin).
    #[arg(long)]
    pub source: Option<PathBuf>,
    /// Abort on the first malformed line (default).
    #[arg(long, conflicts_with = "lenient")]
    pub strict: bool,
    /// Skip malformed lines, reporting them on stderr.
    #[arg(long)]
    pub lenient: bool,
}

impl InputArgs {
    pub fn from_source(source: PathBuf, lenient: bool) -> Self {
        InputArgs {
            graphs: Vec::new(),
            source: Some(source),
            strict: !lenient,
            lenient,
        }
    }

    fn policy(&self) -> StreamPolicy {
        if self.lenient {
            StreamPolicy::Lenient
        } else {
            StreamPolicy::Strict
        }
    }
}

fn decode(reader: impl BufRead, name: &str, policy: StreamPolicy) -> Result<GraphBatch, Failure> {
    let batch = read_graph6_stream(reader, policy).map_err(|e| Failure::Input(format!("{name}: {e}")))?;
    for s in &batch.skipped {
        eprintln!("reedcheck: {name}: skipped line {}: {}", s.line, s.error);
    }
    Ok(batch)
}

/// Positional graphs first, then the --source stream; stdin if neither.
pub fn read_graphs(args: &InputArgs) -> Result<GraphBatch, Failure> {
    let policy = args.policy();
    let mut out = GraphBatch::default();
    if !args.graphs.is_empty() {
        let joined = args.graphs.join("\n");
        let b = decode(Cursor::new(joined), "arguments", policy)?;
        out.graphs.extend(b.graphs);
        out.skipped.extend(b.skipped);
    }
    let source = match (&args.source, args.graphs.is_empty()) {
        (Some(p), _) => Some(p.clone()),
        (None, true) => Some(PathBuf::from("-")),
        (None, false) => None,
    };
    if let Some(path) = source {
        let b = if path.as_os_str() == "-" {
            decode(std::io::stdin().lock(), "stdin", policy)?
        } else {
            let f = File::open(&path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            decode(BufReader::new(f), &path.display().to_string(), policy)?
        };
        out.graphs.extend(b.graphs);
        out.skipped.extend(b.skipped);
    }
    Ok(out)
}
