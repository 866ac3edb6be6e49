//! Line-oriented problem files.
//!
//! ```text
//! # comment
//! field Q[s]/(s^2 + s + 1)      # default Q
//! ring x, y
//! ideal X: y - x^2
//! points P: (0,0), (1,1)
//! algebra B: x, y
//! algebra A: x, y / y           # or `/ <ideal name>`
//! algebra K:
//! map phi: B -> A via x, y
//! map psi: K -> A via
//! diagram: phi=phi, psi=psi
//! ```

use std::collections::HashSet;

use pushout_core::parse::{parse_field, parse_point, parse_poly_list, split_top_level};
use pushout_core::pullback::{AlgebraMap, AlgebraPresentation, PullbackDiagram};
use pushout_core::{AlgebraError, FieldElement, FieldSpec, IdealPresentation, Ring, RingRef};
use thiserror::Error;

#[derive(Debug, Error)]
#[error("line {line}: {}: {source}", source.kind())]
pub struct ProblemError {
    pub line: usize,
    pub source: AlgebraError,
}

#[derive(Clone, Debug)]
pub struct ProblemFile {
    pub field: FieldSpec,
    pub ring: Option<RingRef>,
    pub ideals: Vec<(String, IdealPresentation)>,
    pub points: Vec<(String, Vec<Vec<FieldElement>>)>,
    pub algebras: Vec<(String, AlgebraPresentation)>,
    pub maps: Vec<(String, AlgebraMap)>,
    pub diagram: Option<PullbackDiagram>,
}

fn lookup<'a, T>(items: &'a [(String, T)], name: &str) -> Option<&'a T> {
    items.iter().find(|(n, _)| n == name).map(|(_, v)| v)
}

impl ProblemFile {
    pub fn ideal(&self, name: &str) -> Option<&IdealPresentation> {
        lookup(&self.ideals, name)
    }

    pub fn point_set(&self, name: &str) -> Option<&Vec<Vec<FieldElement>>> {
        lookup(&self.points, name)
    }
}

fn syntax(msg: impl Into<String>) -> AlgebraError {
    AlgebraError::Parse(msg.into())
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// `Name: rest` → `(Name, rest)`.
fn named(rest: &str) -> Result<(String, &str), AlgebraError> {
    let (name, body) = rest
        .split_once(':')
        .ok_or_else(|| syntax("expected `<name>: ...`"))?;
    let name = name.trim();
    if !is_identifier(name) {
        return Err(syntax(format!("invalid name `{name}`")));
    }
    Ok((name.to_string(), body.trim()))
}

fn var_list(text: &str) -> Result<Vec<String>, AlgebraError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|v| {
            let v = v.trim();
            if is_identifier(v) {
                Ok(v.to_string())
            } else {
                Err(syntax(format!("invalid variable name `{v}`")))
            }
        })
        .collect()
}

struct Builder {
    file: ProblemFile,
    field_set: bool,
    names: HashSet<String>,
}

impl Builder {
    fn claim(&mut self, name: &str) -> Result<(), AlgebraError> {
        if !self.names.insert(name.to_string()) {
            return Err(syntax(format!("`{name}` is already defined")));
        }
        Ok(())
    }

    fn ring(&self) -> Result<&RingRef, AlgebraError> {
        self.file
            .ring
            .as_ref()
            .ok_or_else(|| syntax("no `ring` declared yet"))
    }

    fn line(&mut self, keyword: &str, rest: &str) -> Result<(), AlgebraError> {
        match keyword {
            "field" => {
                if self.field_set || self.file.ring.is_some() {
                    return Err(syntax("`field` must come once, before `ring`"));
                }
                self.file.field = parse_field(rest)?;
                self.field_set = true;
            }
            "ring" => {
                if self.file.ring.is_some() {
                    return Err(syntax("`ring` declared twice"));
                }
                let vars = var_list(rest)?;
                if vars.is_empty() {
                    return Err(syntax("`ring` needs at least one variable"));
                }
                self.file.ring = Some(Ring::grevlex(&vars, self.file.field.clone())?);
            }
            "ideal" => {
                let (name, body) = named(rest)?;
                let ring = self.ring()?.clone();
                let ideal = IdealPresentation::new(&ring, parse_poly_list(body, &ring)?)?;
                self.claim(&name)?;
                self.file.ideals.push((name, ideal));
            }
            "points" => {
                let (name, body) = named(rest)?;
                let ring = self.ring()?.clone();
                let pts = split_top_level(body)
                    .into_iter()
                    .map(|p| parse_point(p, ring.field()))
                    .collect::<Result<Vec<_>, _>>()?;
                if pts.is_empty() {
                    return Err(syntax("`points` needs at least one point"));
                }
                if let Some(p) = pts.iter().find(|p| p.len() != ring.nvars()) {
                    return Err(AlgebraError::DimensionMismatch(format!(
                        "point with {} coordinates in a ring with {} variables",
                        p.len(),
                        ring.nvars()
                    )));
                }
                self.claim(&name)?;
                self.file.points.push((name, pts));
            }
            "algebra" => {
                let (name, body) = named(rest)?;
                let (vars, rels) = match body.split_once('/') {
                    Some((v, r)) => (v, Some(r.trim())),
                    None => (body, None),
                };
                let ring = Ring::grevlex(&var_list(vars)?, self.file.field.clone())?;
                let relations = match rels {
                    None => IdealPresentation::zero(&ring),
                    Some(r) if is_identifier(r) && ring.var_index(r).is_none() => {
                        let ideal = self
                            .file
                            .ideal(r)
                            .ok_or_else(|| AlgebraError::UndefinedName(r.to_string()))?;
                        ideal.to_ring(&ring)?
                    }
                    Some(r) => IdealPresentation::new(&ring, parse_poly_list(r, &ring)?)?,
                };
                self.claim(&name)?;
                self.file
                    .algebras
                    .push((name, AlgebraPresentation::new(relations)));
            }
            "map" => {
                let (name, body) = named(rest)?;
                let (src, tail) = body
                    .split_once("->")
                    .ok_or_else(|| syntax("expected `<source> -> <target> via <images>`"))?;
                let tail = tail.trim();
                let (tgt, images) = match tail.split_once(char::is_whitespace) {
                    Some((t, r)) => (t, r.trim()),
                    None => (tail, ""),
                };
                let images = images
                    .strip_prefix("via")
                    .ok_or_else(|| syntax("expected `via` after the target"))?;
                let algebra = |n: &str| {
                    lookup(&self.file.algebras, n.trim())
                        .cloned()
                        .ok_or_else(|| AlgebraError::UndefinedName(n.trim().to_string()))
                };
                let (source, target) = (algebra(src)?, algebra(tgt)?);
                let images = parse_poly_list(images.trim(), target.ring())?;
                let map = AlgebraMap::new(source, target, images)?;
                self.claim(&name)?;
                self.file.maps.push((name, map));
            }
            "diagram" => {
                let body = rest
                    .strip_prefix(':')
                    .ok_or_else(|| syntax("expected `diagram: phi=<map>, psi=<map>`"))?;
                if self.file.diagram.is_some() {
                    return Err(syntax("`diagram` declared twice"));
                }
                let (mut phi, mut psi) = (None, None);
                for part in body.split(',') {
                    let (k, v) = part
                        .split_once('=')
                        .ok_or_else(|| syntax(format!("expected `key=map`, got `{}`", part.trim())))?;
                    let map = lookup(&self.file.maps, v.trim())
                        .cloned()
                        .ok_or_else(|| AlgebraError::UndefinedName(v.trim().to_string()))?;
                    match k.trim() {
                        "phi" => phi = Some(map),
                        "psi" => psi = Some(map),
                        other => return Err(syntax(format!("unknown diagram key `{other}`"))),
                    }
                }
                let (Some(phi), Some(psi)) = (phi, psi) else {
                    return Err(syntax("diagram needs both phi and psi"));
                };
                self.file.diagram = Some(PullbackDiagram::new(phi, psi)?);
            }
            other => return Err(syntax(format!("unknown directive `{other}`"))),
        }
        Ok(())
    }
}

pub fn parse(text: &str) -> Result<ProblemFile, ProblemError> {
    let mut b = Builder {
        file: ProblemFile {
            field: FieldSpec::rationals(),
            ring: None,
            ideals: Vec::new(),
            points: Vec::new(),
            algebras: Vec::new(),
            maps: Vec::new(),
            diagram: None,
        },
        field_set: false,
        names: HashSet::new(),
    };
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let split = content
            .find(|c: char| c.is_whitespace() || c == ':')
            .unwrap_or(content.len());
        let (keyword, rest) = content.split_at(split);
        b.line(keyword, rest.trim_start())
            .map_err(|source| ProblemError { line: i + 1, source })?;
    }
    Ok(b.file)
}
