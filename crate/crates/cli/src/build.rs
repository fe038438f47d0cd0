use anyhow::{anyhow, bail, Context, Result};
use clap::Args;
use coolnum::generators::*;
use coolnum::{ilt_t, Graph};

/// Family parameters shared by `gen` and `strategy`.
#[derive(Args, Debug, Clone, Default)]
pub struct FamilyParams {
    /// Order (path, cycle, complete), side length (grid) or path order (ilt-path).
    #[arg(long)]
    pub n: Option<usize>,
    /// Spine length of a complete caterpillar.
    #[arg(long)]
    pub d: Option<usize>,
    /// Number of spider legs, or star leaves.
    #[arg(long)]
    pub legs: Option<usize>,
    /// Spider leg length.
    #[arg(long)]
    pub r: Option<usize>,
    /// Base graph for ilt, as family:size (e.g. path:6).
    #[arg(long)]
    pub base: Option<String>,
    /// ILT iterations.
    #[arg(long)]
    pub t: Option<usize>,
}

pub fn need(value: Option<usize>, flag: &str, family: &str) -> Result<usize> {
    value.ok_or_else(|| anyhow!("{family} needs --{flag}"))
}

/// Builds a graph of `family` from its size-only shorthand, as in `path:6`.
fn from_shorthand(arg: &str) -> Result<Graph> {
    let (family, size) = arg.split_once(':').ok_or_else(|| anyhow!("expected family:size, got `{arg}`"))?;
    let size: usize = size.parse().with_context(|| format!("bad size in `{arg}`"))?;
    let params = match family {
        "caterpillar" => FamilyParams { d: Some(size), ..Default::default() },
        "star" => FamilyParams { legs: Some(size), ..Default::default() },
        "path" | "cycle" | "grid" | "complete" => FamilyParams { n: Some(size), ..Default::default() },
        other => bail!("family `{other}` has no family:size shorthand"),
    };
    build(family, &params)
}

pub fn build(family: &str, p: &FamilyParams) -> Result<Graph> {
    let g = match family {
        "path" => gen_path(need(p.n, "n", family)?)?,
        "cycle" => gen_cycle(need(p.n, "n", family)?)?,
        "grid" => gen_grid(need(p.n, "n", family)?)?,
        "complete" => gen_complete(need(p.n, "n", family)?)?,
        "caterpillar" => gen_complete_caterpillar(need(p.d, "d", family)?)?,
        "spider" => gen_spider(need(p.legs, "legs", family)?, need(p.r, "r", family)?)?,
        "star" => gen_star(need(p.legs, "legs", family)?)?,
        "ilt" => {
            let base = p.base.as_deref().ok_or_else(|| anyhow!("ilt needs --base family:size"))?;
            ilt_t(&from_shorthand(base)?, need(p.t, "t", family)?)?.graph
        }
        other => return Err(coolnum::Error::UnknownFamily(other.to_string()).into()),
    };
    Ok(g)
}
