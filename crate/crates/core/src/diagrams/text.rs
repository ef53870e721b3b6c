//! One-line text form: `n=<int>; arcs=(i1,j1)(i2,j2)...`, arcs in canonical order.

use std::fmt;
use std::str::FromStr;

use super::{Arc, ArcDiagram, BraidDiagram, PartitionDiagram};
use crate::error::Error;

impl fmt::Display for ArcDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}; arcs=", self.n)?;
        for arc in &self.arcs {
            write!(f, "({},{})", arc.left, arc.right)?;
        }
        Ok(())
    }
}

impl FromStr for ArcDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = |why: &str| Error::Parse(format!("{why} in {s:?}"));
        let rest = s.trim().strip_prefix("n=").ok_or_else(|| bad("missing `n=`"))?;
        let (n_text, rest) = rest.split_once("; arcs=").ok_or_else(|| bad("missing `; arcs=`"))?;
        let n: usize = n_text.parse().map_err(|_| bad("bad vertex count"))?;
        let mut arcs = Vec::new();
        let mut rest = rest;
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| bad("expected `(`"))?;
            let (pair, tail) = body.split_once(')').ok_or_else(|| bad("unclosed arc"))?;
            let (i, j) = pair.split_once(',').ok_or_else(|| bad("arc without comma"))?;
            let i: usize = i.parse().map_err(|_| bad("bad arc endpoint"))?;
            let j: usize = j.parse().map_err(|_| bad("bad arc endpoint"))?;
            arcs.push(Arc::new(i, j));
            rest = tail;
        }
        ArcDiagram::new(n, arcs)
    }
}

impl FromStr for PartitionDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        PartitionDiagram::try_from(s.parse::<ArcDiagram>()?)
    }
}

impl FromStr for BraidDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        BraidDiagram::try_from(s.parse::<ArcDiagram>()?)
    }
}
