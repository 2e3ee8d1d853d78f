use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

/// Exact intersection homology of stratified simplicial complexes.
#[derive(Debug, Parser)]
#[command(name = "strathom", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Complex file (`strathom-complex v1`).
    #[arg(long = "in", value_name = "FILE")]
    pub input: PathBuf,
    /// Apply barycentric subdivision this many times first.
    #[arg(long, value_name = "K", default_value_t = 0)]
    pub subdivide: usize,
    /// Machine-readable output.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct Twisted {
    #[command(flatten)]
    pub input: Input,
    /// Cocycle file (`strathom-cocycle v1`).
    #[arg(long, value_name = "FILE")]
    pub cocycle: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the structural flags of a complex.
    Validate {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Ordinary integral homology.
    Homology(Input),
    /// Middle-perversity intersection homology.
    Ih(Input),
    /// Intersection homology twisted by the local system of a cocycle.
    Twisted(Twisted),
    /// Signed Euler characteristic witness from twisted ranks.
    Witness {
        #[command(flatten)]
        twisted: Twisted,
        /// Complex dimension the twisted ranks should concentrate in.
        #[arg(long, value_name = "N")]
        n: usize,
    },
    /// Compare the gauge and cover constructions of the twisted boundary.
    Crosscheck(Twisted),
    /// Built-in model spaces.
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    /// List the standard entries.
    List {
        #[arg(long)]
        json: bool,
    },
    /// Write an entry's complex and cocycle files.
    Emit {
        /// Entry name, e.g. `genus_g(2)`.
        name: String,
        #[arg(long, value_name = "DIR", default_value = ".")]
        out: PathBuf,
        #[arg(long)]
        json: bool,
    },
}
