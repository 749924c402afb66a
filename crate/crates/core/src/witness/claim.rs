use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Hops;
use crate::oracle::ClassKind;

use super::lazyset::LazySet;

/// A class claim about `G^∞` with lazily described sets.
///
/// OUT claims use `out_witness`, IN claims `in_witness`; INOUT claims use
/// both plus `partition = (out part, in part)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LazyClaim {
    pub kind: ClassKind,
    pub out_witness: Option<LazySet>,
    pub in_witness: Option<LazySet>,
    pub partition: Option<(LazySet, LazySet)>,
}

impl LazyClaim {
    pub fn out(hops: impl Into<Hops>, witness: LazySet) -> Self {
        LazyClaim {
            kind: ClassKind::Out(hops.into()),
            out_witness: Some(witness),
            in_witness: None,
            partition: None,
        }
    }

    pub fn in_(hops: impl Into<Hops>, witness: LazySet) -> Self {
        LazyClaim {
            kind: ClassKind::In(hops.into()),
            out_witness: None,
            in_witness: Some(witness),
            partition: None,
        }
    }

    pub fn inout(
        in_hops: impl Into<Hops>,
        out_hops: impl Into<Hops>,
        out_part: LazySet,
        out_witness: LazySet,
        in_part: LazySet,
        in_witness: LazySet,
    ) -> Self {
        LazyClaim {
            kind: ClassKind::InOut {
                in_hops: in_hops.into(),
                out_hops: out_hops.into(),
            },
            out_witness: Some(out_witness),
            in_witness: Some(in_witness),
            partition: Some((out_part, in_part)),
        }
    }

    /// The same claim as an INOUT claim: an OUT claim puts everything on
    /// the out side, an IN claim everything on the in side.
    pub fn as_inout(&self, in_hops: Hops, out_hops: Hops) -> LazyClaim {
        let none = LazySet::empty;
        let pick = |w: &Option<LazySet>| w.clone().unwrap_or_else(none);
        match self.kind {
            ClassKind::Out(_) => LazyClaim::inout(
                in_hops,
                out_hops,
                LazySet::everything(),
                pick(&self.out_witness),
                none(),
                none(),
            ),
            ClassKind::In(_) => LazyClaim::inout(
                in_hops,
                out_hops,
                none(),
                none(),
                LazySet::everything(),
                pick(&self.in_witness),
            ),
            ClassKind::InOut { .. } => {
                let (o, i) = self.partition.clone().unwrap_or_else(|| (none(), none()));
                LazyClaim::inout(in_hops, out_hops, o, pick(&self.out_witness), i, pick(&self.in_witness))
            }
        }
    }
}

/// One line per field: `kind`, then `out`, `in`, `part-out`, `part-in` as
/// present. `#` starts a comment line.
impl fmt::Display for LazyClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "kind {}", self.kind)?;
        if let Some(w) = &self.out_witness {
            writeln!(f, "out {w}")?;
        }
        if let Some(w) = &self.in_witness {
            writeln!(f, "in {w}")?;
        }
        if let Some((o, i)) = &self.partition {
            writeln!(f, "part-out {o}")?;
            writeln!(f, "part-in {i}")?;
        }
        Ok(())
    }
}

impl FromStr for LazyClaim {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut kind = None;
        let (mut out_w, mut in_w, mut part_out, mut part_in) = (None, None, None, None);
        let mut last_line = 0;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            last_line = line;
            let l = raw.trim();
            if l.is_empty() || l.starts_with('#') {
                continue;
            }
            let (key, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
            let err = |msg: String| Error::Parse { line, msg };
            let set = || rest.trim().parse::<LazySet>().map_err(|e| err(e.to_string()));
            let slot = match key {
                "kind" => {
                    if kind.is_some() {
                        return Err(err("duplicate kind line".into()));
                    }
                    let k = rest.trim().parse::<ClassKind>().map_err(|e| err(e.to_string()))?;
                    kind = Some(k);
                    continue;
                }
                "out" => &mut out_w,
                "in" => &mut in_w,
                "part-out" => &mut part_out,
                "part-in" => &mut part_in,
                other => return Err(err(format!("unknown field `{other}`"))),
            };
            if slot.is_some() {
                return Err(err(format!("duplicate `{key}` line")));
            }
            *slot = Some(set()?);
        }
        let err = |msg: &str| Error::Parse {
            line: last_line,
            msg: msg.into(),
        };
        let kind = kind.ok_or_else(|| err("missing kind line"))?;
        match kind {
            ClassKind::Out(_) if out_w.is_some() && in_w.is_none() && part_out.is_none() && part_in.is_none() => {}
            ClassKind::In(_) if in_w.is_some() && out_w.is_none() && part_out.is_none() && part_in.is_none() => {}
            ClassKind::InOut { .. } if out_w.is_some() && in_w.is_some() && part_out.is_some() && part_in.is_some() => {
            }
            ClassKind::Out(_) => return Err(err("OUT claims take exactly an `out` line")),
            ClassKind::In(_) => return Err(err("IN claims take exactly an `in` line")),
            ClassKind::InOut { .. } => return Err(err("INOUT claims need out, in, part-out and part-in")),
        }
        Ok(LazyClaim {
            kind,
            out_witness: out_w,
            in_witness: in_w,
            partition: part_out.zip(part_in),
        })
    }
}
