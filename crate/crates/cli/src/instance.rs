//! Line-oriented instance documents.
//!
//! A document is a list of `[name]` sections, each a `kind:` line followed by
//! `key: value` lines. The last section is the instance the document describes;
//! earlier sections exist to be referenced by constructions. `#` starts a comment line.
//!
//! ```text
//! [s]
//! kind: table
//! labels: e a
//! row: e a
//! row: a e
//!
//! [u]
//! kind: construction
//! op: adjoin_zero s
//! ```

use std::fmt::Write as _;

use sgchain_core::acts::Act;
use sgchain_core::chains::SymbolicReesZ;
use sgchain_core::constructions::{
    principal_factor, rees_matrix_zero, rees_quotient, u_construction, x_extension, zero_direct_union,
    FiniteGroup, ReesMatrixSpec, SandwichEntry,
};
use sgchain_core::rewrite::{FpSemigroup, RewritingSystem, Word};
use sgchain_core::FiniteSemigroup;
use thiserror::Error;

use crate::zoo;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("section {section}: {message}")]
    Semantic { section: String, message: String },
}

impl InstanceError {
    fn semantic(section: &str, message: impl ToString) -> InstanceError {
        InstanceError::Semantic {
            section: section.to_string(),
            message: message.to_string(),
        }
    }
}

/// A reference to another section of the same document or to a built-in instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ref {
    Section(String),
    Zoo(String),
}

impl Ref {
    fn parse(token: &str) -> Ref {
        match token.strip_prefix("zoo:") {
            Some(name) => Ref::Zoo(name.to_string()),
            None => Ref::Section(token.to_string()),
        }
    }

    fn print(&self) -> String {
        match self {
            Ref::Section(s) => s.clone(),
            Ref::Zoo(z) => format!("zoo:{}", z),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    /// A table section (or zoo entry) that must be a group.
    Ref(Ref),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActKind {
    Regular,
    OnePoint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructionOp {
    ReesQuotient { base: Ref, ideal: Vec<String> },
    ZeroDirectUnion(Vec<Ref>),
    UAct { base: Ref, act: ActKind },
    AdjoinZero(Ref),
    AdjoinIdentity(Ref),
    PrincipalFactor { base: Ref, element: String },
    XExtension { s: Ref, t: Ref },
}

impl ConstructionOp {
    fn refs(&self) -> Vec<&Ref> {
        match self {
            ConstructionOp::ReesQuotient { base, .. }
            | ConstructionOp::UAct { base, .. }
            | ConstructionOp::PrincipalFactor { base, .. }
            | ConstructionOp::AdjoinZero(base)
            | ConstructionOp::AdjoinIdentity(base) => vec![base],
            ConstructionOp::ZeroDirectUnion(parts) => parts.iter().collect(),
            ConstructionOp::XExtension { s, t } => vec![s, t],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InstanceSpec {
    Table {
        labels: Vec<String>,
        rows: Vec<Vec<String>>,
    },
    Presentation {
        gens: Vec<String>,
        /// Letter order for shortlex; a permutation of `gens`.
        order: Vec<String>,
        relations: Vec<(Vec<String>, Vec<String>)>,
    },
    ReesFinite {
        group: GroupSpec,
        rows: usize,
        cols: usize,
        /// `cols` lines of `rows` entries; `None` is a sandwich zero.
        p: Vec<Vec<Option<String>>>,
    },
    ReesZ {
        rows: usize,
        cols: usize,
        p: Vec<Vec<Option<i64>>>,
    },
    Construction(ConstructionOp),
}

impl InstanceSpec {
    pub fn kind_name(&self) -> &'static str {
        match self {
            InstanceSpec::Table { .. } => "table",
            InstanceSpec::Presentation { .. } => "presentation",
            InstanceSpec::ReesFinite { .. } => "rees",
            InstanceSpec::ReesZ { .. } => "reesz",
            InstanceSpec::Construction(_) => "construction",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub name: String,
    pub spec: InstanceSpec,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub sections: Vec<Section>,
}

/// What a document describes once every reference is resolved.
#[derive(Clone, Debug)]
pub enum Resolved {
    Finite(FiniteSemigroup),
    Fp(FpSemigroup),
    ReesZ(SymbolicReesZ),
}

impl Resolved {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Resolved::Finite(_) => "finite",
            Resolved::Fp(_) => "presentation",
            Resolved::ReesZ(_) => "reesz",
        }
    }
}

struct Builder {
    name: String,
    line: usize,
    kind: Option<(String, usize)>,
    fields: Vec<(String, String, usize)>,
}

fn err(line: usize, message: impl ToString) -> ParseError {
    ParseError {
        line,
        message: message.to_string(),
    }
}

fn tokens(value: &str) -> Vec<String> {
    value.split_whitespace().map(str::to_string).collect()
}

fn parse_usize(value: &str, line: usize, key: &str) -> Result<usize, ParseError> {
    value
        .trim()
        .parse()
        .map_err(|_| err(line, format!("{} expects a non-negative integer, got {:?}", key, value.trim())))
}

/// Splits a word written as space-separated letters, `x^n` powers, or run together
/// when every generator is a single character.
fn parse_word(text: &str, gens: &[String], line: usize) -> Result<Vec<String>, ParseError> {
    let raw: Vec<String> = if !text.contains(char::is_whitespace) && gens.iter().all(|g| g.chars().count() == 1) {
        let mut out = Vec::new();
        let mut chars = text.chars().peekable();
        while let Some(c) = chars.next() {
            let mut tok = c.to_string();
            if chars.peek() == Some(&'^') {
                tok.push(chars.next().unwrap());
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    tok.push(*d);
                    chars.next();
                }
            }
            out.push(tok);
        }
        out
    } else {
        tokens(text)
    };
    let mut word = Vec::new();
    for tok in raw {
        let (letter, power) = match tok.split_once('^') {
            Some((l, n)) => (
                l.to_string(),
                n.parse::<usize>()
                    .ok()
                    .filter(|&n| n > 0)
                    .ok_or_else(|| err(line, format!("bad exponent in {:?}", tok)))?,
            ),
            None => (tok.clone(), 1),
        };
        if !gens.contains(&letter) {
            return Err(err(line, format!("unknown generator {:?}", letter)));
        }
        word.extend(std::iter::repeat(letter).take(power));
    }
    if word.is_empty() {
        return Err(err(line, "empty word"));
    }
    Ok(word)
}

impl Builder {
    fn single(&self, key: &str) -> Result<Option<(&str, usize)>, ParseError> {
        let mut hits = self.fields.iter().filter(|(k, _, _)| k == key);
        let first = hits.next();
        if let Some((_, _, line)) = hits.next() {
            return Err(err(*line, format!("duplicate key {:?}", key)));
        }
        Ok(first.map(|(_, v, l)| (v.as_str(), *l)))
    }

    fn required(&self, key: &str) -> Result<(&str, usize), ParseError> {
        self.single(key)?
            .ok_or_else(|| err(self.line, format!("section [{}] is missing {:?}", self.name, key)))
    }

    fn all(&self, key: &str) -> Vec<(&str, usize)> {
        self.fields
            .iter()
            .filter(|(k, _, _)| k == key)
            .map(|(_, v, l)| (v.as_str(), *l))
            .collect()
    }

    fn check_keys(&self, allowed: &[&str]) -> Result<(), ParseError> {
        match self.fields.iter().find(|(k, _, _)| !allowed.contains(&k.as_str())) {
            Some((k, _, l)) => Err(err(*l, format!("unexpected key {:?} for this kind", k))),
            None => Ok(()),
        }
    }

    fn finish(self, earlier: &[Section]) -> Result<Section, ParseError> {
        let (kind, kind_line) = self
            .kind
            .clone()
            .ok_or_else(|| err(self.line, format!("section [{}] has no kind", self.name)))?;
        let check_ref = |r: &Ref, line: usize| -> Result<(), ParseError> {
            match r {
                Ref::Section(s) if earlier.iter().any(|x| &x.name == s) => Ok(()),
                Ref::Section(s) => Err(err(line, format!("unknown section {:?} (only earlier sections may be referenced)", s))),
                Ref::Zoo(z) if zoo::NAMES.contains(&z.as_str()) => Ok(()),
                Ref::Zoo(z) => Err(err(line, format!("unknown built-in instance {:?}", z))),
            }
        };
        let spec = match kind.as_str() {
            "table" => {
                self.check_keys(&["labels", "row"])?;
                let (labels, lline) = self.required("labels")?;
                let labels = tokens(labels);
                if labels.is_empty() {
                    return Err(err(lline, "no labels"));
                }
                let rows: Vec<Vec<String>> = self.all("row").iter().map(|(v, _)| tokens(v)).collect();
                for ((v, line), row) in self.all("row").iter().zip(&rows) {
                    if row.len() != labels.len() {
                        return Err(err(*line, format!("row has {} entries, expected {}", row.len(), labels.len())));
                    }
                    if let Some(bad) = row.iter().find(|x| !labels.contains(x)) {
                        return Err(err(*line, format!("unknown label {:?} in row {:?}", bad, v)));
                    }
                }
                if rows.len() != labels.len() {
                    return Err(err(self.line, format!("{} rows given, expected {}", rows.len(), labels.len())));
                }
                InstanceSpec::Table { labels, rows }
            }
            "presentation" => {
                self.check_keys(&["gens", "order", "rel"])?;
                let (gens, gline) = self.required("gens")?;
                let gens = tokens(gens);
                if gens.is_empty() {
                    return Err(err(gline, "no generators"));
                }
                let order = match self.single("order")? {
                    Some((o, oline)) => {
                        let order = tokens(o);
                        let mut a = order.clone();
                        let mut b = gens.clone();
                        a.sort();
                        b.sort();
                        if a != b {
                            return Err(err(oline, "order must list each generator exactly once"));
                        }
                        order
                    }
                    None => gens.clone(),
                };
                let mut relations = Vec::new();
                for (rel, line) in self.all("rel") {
                    let (l, r) = rel
                        .split_once('=')
                        .ok_or_else(|| err(line, "relation needs the form LHS = RHS"))?;
                    if r.contains('=') {
                        return Err(err(line, "relation has more than one '='"));
                    }
                    relations.push((parse_word(l.trim(), &gens, line)?, parse_word(r.trim(), &gens, line)?));
                }
                InstanceSpec::Presentation { gens, order, relations }
            }
            "rees" | "reesz" => {
                let allowed: &[&str] = if kind == "rees" {
                    &["group", "rows", "cols", "p"]
                } else {
                    &["rows", "cols", "p"]
                };
                self.check_keys(allowed)?;
                let (rows, rline) = self.required("rows")?;
                let rows = parse_usize(rows, rline, "rows")?;
                let (cols, cline) = self.required("cols")?;
                let cols = parse_usize(cols, cline, "cols")?;
                let p_lines = self.all("p");
                if p_lines.len() != cols {
                    return Err(err(self.line, format!("{} p lines given, expected one per column ({})", p_lines.len(), cols)));
                }
                for (v, line) in &p_lines {
                    if tokens(v).len() != rows {
                        return Err(err(*line, format!("p line needs {} entries", rows)));
                    }
                }
                if kind == "rees" {
                    let (group, gline) = self.required("group")?;
                    let toks = tokens(group);
                    let group = match toks.as_slice() {
                        [c, n] if c == "cyclic" => GroupSpec::Cyclic(parse_usize(n, gline, "cyclic")?),
                        [c] if c == "trivial" => GroupSpec::Cyclic(1),
                        [r] => {
                            let r = Ref::parse(r);
                            check_ref(&r, gline)?;
                            GroupSpec::Ref(r)
                        }
                        _ => return Err(err(gline, "group expects `cyclic N`, `trivial` or a reference")),
                    };
                    let p = p_lines
                        .iter()
                        .map(|(v, _)| tokens(v).into_iter().map(|t| (t != ".").then_some(t)).collect())
                        .collect();
                    InstanceSpec::ReesFinite { group, rows, cols, p }
                } else {
                    let mut p = Vec::new();
                    for (v, line) in &p_lines {
                        let row = tokens(v)
                            .iter()
                            .map(|t| {
                                if t == "." {
                                    Ok(None)
                                } else {
                                    t.parse::<i64>()
                                        .map(Some)
                                        .map_err(|_| err(*line, format!("entry {:?} is neither an integer nor '.'", t)))
                                }
                            })
                            .collect::<Result<Vec<_>, _>>()?;
                        p.push(row);
                    }
                    InstanceSpec::ReesZ { rows, cols, p }
                }
            }
            "construction" => {
                self.check_keys(&["op"])?;
                let (op, line) = self.required("op")?;
                let toks = tokens(op);
                let (name, args) = toks.split_first().ok_or_else(|| err(line, "empty op"))?;
                let arity = |n: usize| -> Result<(), ParseError> {
                    if args.len() == n {
                        Ok(())
                    } else {
                        Err(err(line, format!("{} takes {} argument(s)", name, n)))
                    }
                };
                let op = match name.as_str() {
                    "rees_quotient" => {
                        if args.len() < 2 {
                            return Err(err(line, "rees_quotient takes a base and at least one ideal element"));
                        }
                        ConstructionOp::ReesQuotient {
                            base: Ref::parse(&args[0]),
                            ideal: args[1..].to_vec(),
                        }
                    }
                    "zero_direct_union" => {
                        if args.is_empty() {
                            return Err(err(line, "zero_direct_union takes at least one part"));
                        }
                        ConstructionOp::ZeroDirectUnion(args.iter().map(|a| Ref::parse(a)).collect())
                    }
                    "u_act" => {
                        arity(2)?;
                        let act = match args[1].as_str() {
                            "regular" => ActKind::Regular,
                            "one_point" => ActKind::OnePoint,
                            other => return Err(err(line, format!("unknown act {:?} (regular or one_point)", other))),
                        };
                        ConstructionOp::UAct {
                            base: Ref::parse(&args[0]),
                            act,
                        }
                    }
                    "adjoin_zero" => {
                        arity(1)?;
                        ConstructionOp::AdjoinZero(Ref::parse(&args[0]))
                    }
                    "adjoin_identity" => {
                        arity(1)?;
                        ConstructionOp::AdjoinIdentity(Ref::parse(&args[0]))
                    }
                    "principal_factor" => {
                        arity(2)?;
                        ConstructionOp::PrincipalFactor {
                            base: Ref::parse(&args[0]),
                            element: args[1].clone(),
                        }
                    }
                    "x_extension" => {
                        arity(2)?;
                        ConstructionOp::XExtension {
                            s: Ref::parse(&args[0]),
                            t: Ref::parse(&args[1]),
                        }
                    }
                    other => return Err(err(line, format!("unknown construction {:?}", other))),
                };
                for r in op.refs() {
                    check_ref(r, line)?;
                }
                InstanceSpec::Construction(op)
            }
            other => return Err(err(kind_line, format!("unknown kind {:?}", other))),
        };
        Ok(Section { name: self.name, spec })
    }
}

pub fn parse_document(text: &str) -> Result<Document, ParseError> {
    let mut sections: Vec<Section> = Vec::new();
    let mut current: Option<Builder> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix('[') {
            let name = rest
                .strip_suffix(']')
                .map(str::trim)
                .filter(|n| !n.is_empty() && !n.contains(char::is_whitespace) && !n.starts_with("zoo:"))
                .ok_or_else(|| err(line, format!("bad section header {:?}", trimmed)))?;
            if let Some(b) = current.take() {
                sections.push(b.finish(&sections)?);
            }
            if sections.iter().any(|s| s.name == name) {
                return Err(err(line, format!("duplicate section [{}]", name)));
            }
            current = Some(Builder {
                name: name.to_string(),
                line,
                kind: None,
                fields: Vec::new(),
            });
            continue;
        }
        let (key, value) = trimmed
            .split_once(':')
            .ok_or_else(|| err(line, format!("expected `key: value`, got {:?}", trimmed)))?;
        let key = key.trim();
        let value = value.trim();
        let b = current.get_or_insert_with(|| Builder {
            name: "main".to_string(),
            line,
            kind: None,
            fields: Vec::new(),
        });
        if key == "kind" {
            if b.kind.is_some() {
                return Err(err(line, "duplicate kind"));
            }
            if !b.fields.is_empty() {
                return Err(err(line, "kind must come first in a section"));
            }
            b.kind = Some((value.to_string(), line));
        } else {
            if b.kind.is_none() {
                return Err(err(line, "kind must come first in a section"));
            }
            b.fields.push((key.to_string(), value.to_string(), line));
        }
    }
    if let Some(b) = current.take() {
        sections.push(b.finish(&sections)?);
    }
    if sections.is_empty() {
        return Err(err(0, "empty document"));
    }
    Ok(Document { sections })
}

pub fn print_document(doc: &Document) -> String {
    let mut out = String::new();
    for (k, sec) in doc.sections.iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        writeln!(out, "[{}]", sec.name).unwrap();
        writeln!(out, "kind: {}", sec.spec.kind_name()).unwrap();
        match &sec.spec {
            InstanceSpec::Table { labels, rows } => {
                writeln!(out, "labels: {}", labels.join(" ")).unwrap();
                for r in rows {
                    writeln!(out, "row: {}", r.join(" ")).unwrap();
                }
            }
            InstanceSpec::Presentation { gens, order, relations } => {
                writeln!(out, "gens: {}", gens.join(" ")).unwrap();
                writeln!(out, "order: {}", order.join(" ")).unwrap();
                for (l, r) in relations {
                    writeln!(out, "rel: {} = {}", l.join(" "), r.join(" ")).unwrap();
                }
            }
            InstanceSpec::ReesFinite { group, rows, cols, p } => {
                match group {
                    GroupSpec::Cyclic(n) => writeln!(out, "group: cyclic {}", n).unwrap(),
                    GroupSpec::Ref(r) => writeln!(out, "group: {}", r.print()).unwrap(),
                }
                writeln!(out, "rows: {}\ncols: {}", rows, cols).unwrap();
                for line in p {
                    let entries: Vec<&str> = line.iter().map(|e| e.as_deref().unwrap_or(".")).collect();
                    writeln!(out, "p: {}", entries.join(" ")).unwrap();
                }
            }
            InstanceSpec::ReesZ { rows, cols, p } => {
                writeln!(out, "rows: {}\ncols: {}", rows, cols).unwrap();
                for line in p {
                    let entries: Vec<String> = line
                        .iter()
                        .map(|e| e.map_or_else(|| ".".to_string(), |g| g.to_string()))
                        .collect();
                    writeln!(out, "p: {}", entries.join(" ")).unwrap();
                }
            }
            InstanceSpec::Construction(op) => {
                let text = match op {
                    ConstructionOp::ReesQuotient { base, ideal } => {
                        format!("rees_quotient {} {}", base.print(), ideal.join(" "))
                    }
                    ConstructionOp::ZeroDirectUnion(parts) => format!(
                        "zero_direct_union {}",
                        parts.iter().map(Ref::print).collect::<Vec<_>>().join(" ")
                    ),
                    ConstructionOp::UAct { base, act } => format!(
                        "u_act {} {}",
                        base.print(),
                        match act {
                            ActKind::Regular => "regular",
                            ActKind::OnePoint => "one_point",
                        }
                    ),
                    ConstructionOp::AdjoinZero(r) => format!("adjoin_zero {}", r.print()),
                    ConstructionOp::AdjoinIdentity(r) => format!("adjoin_identity {}", r.print()),
                    ConstructionOp::PrincipalFactor { base, element } => {
                        format!("principal_factor {} {}", base.print(), element)
                    }
                    ConstructionOp::XExtension { s, t } => format!("x_extension {} {}", s.print(), t.print()),
                };
                writeln!(out, "op: {}", text).unwrap();
            }
        }
    }
    out
}

impl Document {
    pub fn parse(text: &str) -> Result<Document, ParseError> {
        parse_document(text)
    }

    pub fn print(&self) -> String {
        print_document(self)
    }

    /// Name of the section the document describes.
    pub fn target(&self) -> &str {
        &self.sections.last().expect("non-empty document").name
    }

    pub fn resolve(&self) -> Result<Resolved, InstanceError> {
        self.resolve_section(self.sections.len() - 1, &mut Vec::new())
    }

    fn resolve_ref(&self, r: &Ref, stack: &mut Vec<String>) -> Result<Resolved, InstanceError> {
        match r {
            Ref::Section(name) => {
                let idx = self
                    .sections
                    .iter()
                    .position(|s| &s.name == name)
                    .ok_or_else(|| InstanceError::semantic(name, "unknown section"))?;
                self.resolve_section(idx, stack)
            }
            Ref::Zoo(name) => {
                let key = format!("zoo:{}", name);
                if stack.contains(&key) {
                    return Err(InstanceError::semantic(name, "cyclic reference"));
                }
                stack.push(key);
                let doc = zoo::document(name).ok_or_else(|| InstanceError::semantic(name, "unknown built-in instance"))?;
                let out = doc.resolve_section(doc.sections.len() - 1, stack);
                stack.pop();
                out
            }
        }
    }

    fn resolve_finite(&self, r: &Ref, stack: &mut Vec<String>, section: &str) -> Result<FiniteSemigroup, InstanceError> {
        match self.resolve_ref(r, stack)? {
            Resolved::Finite(s) => Ok(s),
            other => Err(InstanceError::semantic(
                section,
                format!("{} is a {} instance; a finite semigroup is required", r.print(), other.kind_name()),
            )),
        }
    }

    fn resolve_section(&self, idx: usize, stack: &mut Vec<String>) -> Result<Resolved, InstanceError> {
        let sec = &self.sections[idx];
        let name = sec.name.as_str();
        let sem = |e: sgchain_core::Error| InstanceError::semantic(name, e);
        Ok(match &sec.spec {
            InstanceSpec::Table { labels, rows } => {
                let index = |l: &String| labels.iter().position(|x| x == l).expect("validated label");
                let table = rows.iter().map(|r| r.iter().map(index).collect()).collect();
                Resolved::Finite(FiniteSemigroup::from_table(labels.clone(), table, None, None).map_err(sem)?)
            }
            InstanceSpec::Presentation { order, relations, .. } => {
                let letter = |l: &String| order.iter().position(|x| x == l).expect("validated letter") as u16;
                let rels = relations
                    .iter()
                    .map(|(l, r)| (Word::new(l.iter().map(letter).collect()), Word::new(r.iter().map(letter).collect())))
                    .collect();
                Resolved::Fp(FpSemigroup::new(
                    RewritingSystem::from_relations(order.clone(), rels).map_err(sem)?,
                ))
            }
            InstanceSpec::ReesFinite { group, rows, cols, p } => {
                let group = match group {
                    GroupSpec::Cyclic(n) => FiniteGroup::cyclic(*n).map_err(sem)?,
                    GroupSpec::Ref(r) => FiniteGroup::from_semigroup(self.resolve_finite(r, stack, name)?).map_err(sem)?,
                };
                let mut entries = Vec::new();
                for line in p {
                    let mut row = Vec::new();
                    for e in line {
                        row.push(match e {
                            None => SandwichEntry::Zero,
                            Some(l) => SandwichEntry::Group(
                                group
                                    .semigroup()
                                    .index_of(l)
                                    .ok_or_else(|| InstanceError::semantic(name, format!("{:?} is not a group element", l)))?,
                            ),
                        });
                    }
                    entries.push(row);
                }
                let spec = ReesMatrixSpec::new(group, *rows, *cols, entries).map_err(sem)?;
                Resolved::Finite(rees_matrix_zero(&spec).map_err(sem)?)
            }
            InstanceSpec::ReesZ { rows, cols, p } => {
                let entries = p
                    .iter()
                    .map(|line| line.iter().map(|e| e.map_or(SandwichEntry::Zero, SandwichEntry::Group)).collect())
                    .collect();
                Resolved::ReesZ(SymbolicReesZ::new(*rows, *cols, entries).map_err(sem)?)
            }
            InstanceSpec::Construction(op) => {
                let key = format!("section:{}", name);
                if stack.contains(&key) {
                    return Err(InstanceError::semantic(name, "cyclic reference"));
                }
                stack.push(key);
                let out = self.resolve_op(op, stack, name);
                stack.pop();
                Resolved::Finite(out?)
            }
        })
    }

    fn resolve_op(&self, op: &ConstructionOp, stack: &mut Vec<String>, name: &str) -> Result<FiniteSemigroup, InstanceError> {
        let sem = |e: sgchain_core::Error| InstanceError::semantic(name, e);
        Ok(match op {
            ConstructionOp::ReesQuotient { base, ideal } => {
                let s = self.resolve_finite(base, stack, name)?;
                let set = s
                    .set_of_labels(ideal.iter().map(String::as_str))
                    .ok_or_else(|| InstanceError::semantic(name, "ideal lists an unknown label"))?;
                rees_quotient(&s, &set).map_err(sem)?.semigroup
            }
            ConstructionOp::ZeroDirectUnion(parts) => {
                let parts = parts
                    .iter()
                    .map(|r| self.resolve_finite(r, stack, name))
                    .collect::<Result<Vec<_>, _>>()?;
                zero_direct_union(&parts).map_err(sem)?.semigroup
            }
            ConstructionOp::UAct { base, act } => {
                let s = self.resolve_finite(base, stack, name)?;
                let a = match act {
                    ActKind::Regular => Act::regular(&s),
                    ActKind::OnePoint => Act::one_point(&s),
                };
                u_construction(&s, &a).map_err(sem)?.semigroup
            }
            ConstructionOp::AdjoinZero(r) => self.resolve_finite(r, stack, name)?.adjoin_zero(),
            ConstructionOp::AdjoinIdentity(r) => self.resolve_finite(r, stack, name)?.adjoin_identity(),
            ConstructionOp::PrincipalFactor { base, element } => {
                let s = self.resolve_finite(base, stack, name)?;
                let a = s
                    .index_of(element)
                    .ok_or_else(|| InstanceError::semantic(name, format!("unknown element {:?}", element)))?;
                principal_factor(&s, a).semigroup
            }
            ConstructionOp::XExtension { s, t } => {
                let s = self.resolve_finite(s, stack, name)?;
                let t = self.resolve_finite(t, stack, name)?;
                x_extension(&s, &t).map_err(sem)?
            }
        })
    }
}

/// Parses and resolves a document in one step.
pub fn load(text: &str) -> Result<(Document, Resolved), InstanceError> {
    let doc = Document::parse(text)?;
    let resolved = doc.resolve()?;
    Ok((doc, resolved))
}

#[cfg(test)]
mod tests {
    use super::*;

    const LZ2: &str = "kind: table\nlabels: l1 l2\nrow: l1 l1\nrow: l2 l2\n";

    #[test]
    fn implicit_section() {
        let doc = Document::parse(LZ2).unwrap();
        assert_eq!(doc.target(), "main");
        match doc.resolve().unwrap() {
            Resolved::Finite(s) => assert_eq!(s.size(), 2),
            _ => panic!("expected a table"),
        }
    }

    #[test]
    fn presentation_words() {
        let text = "kind: presentation\ngens: a b\norder: a b\nrel: a b b = b\nrel: aba = a^2b\n";
        let doc = Document::parse(text).unwrap();
        match &doc.sections[0].spec {
            InstanceSpec::Presentation { relations, .. } => {
                assert_eq!(relations[1].1, vec!["a", "a", "b"]);
            }
            _ => panic!(),
        }
        match doc.resolve().unwrap() {
            Resolved::Fp(fp) => assert!(fp.is_confluent()),
            _ => panic!(),
        }
    }

    #[test]
    fn reesz_dots() {
        let doc = Document::parse("kind: reesz\nrows: 2\ncols: 2\np: 0 .\np: . 0\n").unwrap();
        assert_eq!(
            doc.sections[0].spec,
            InstanceSpec::ReesZ {
                rows: 2,
                cols: 2,
                p: vec![vec![Some(0), None], vec![None, Some(0)]]
            }
        );
        assert!(matches!(doc.resolve().unwrap(), Resolved::ReesZ(_)));
    }

    #[test]
    fn parse_errors_carry_lines() {
        let e = Document::parse("kind: table\nlabels: a b\nrow: a a\nrow: a c\n").unwrap_err();
        assert_eq!(e.line, 4);
        let e = Document::parse("labels: a\n").unwrap_err();
        assert_eq!(e.line, 1);
        let e = Document::parse("[x]\nkind: construction\nop: adjoin_zero y\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = Document::parse("kind: presentation\ngens: a\nrel: a a = c\n").unwrap_err();
        assert_eq!(e.line, 3);
    }

    #[test]
    fn non_associative_is_semantic() {
        let e = load("kind: table\nlabels: x y\nrow: x y\nrow: x x\n").unwrap_err();
        match e {
            InstanceError::Semantic { message, .. } => assert!(message.contains("not associative")),
            other => panic!("{:?}", other),
        }
    }

    #[test]
    fn constructions_resolve() {
        let text = format!("[s]\n{}\n[z]\nkind: construction\nop: adjoin_zero s\n\n[q]\nkind: construction\nop: rees_quotient z 0\n", LZ2);
        let (doc, r) = load(&text).unwrap();
        assert_eq!(doc.target(), "q");
        match r {
            Resolved::Finite(s) => assert_eq!(s.size(), 3),
            _ => panic!(),
        }
        assert_eq!(Document::parse(&doc.print()).unwrap(), doc);
    }
}
