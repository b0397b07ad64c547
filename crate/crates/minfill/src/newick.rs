//! Newick text format for topologies.
//!
//! Leaves carry integer labels `1..=n`; internal vertices are unnamed and
//! unweighted. Parsing accepts a root of arity 3 (an internal vertex of the
//! unrooted tree) or arity 2 (a rooting edge, which is suppressed). Emission
//! is canonical: the tree is rooted at its centroid vertex, or at the
//! centroid edge, and children are ordered by canonical subtree code, ties
//! broken by smallest leaf label.

use thiserror::Error;

use crate::topology::{Topology, TopologyError};

/// Newick parse failure with the byte position it was detected at.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
#[error("newick parse error at byte {position}: {kind}")]
pub struct NewickError {
    pub position: usize,
    pub kind: NewickErrorKind,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum NewickErrorKind {
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unexpected character '{0}'")]
    UnexpectedChar(char),
    #[error("expected an integer leaf label")]
    ExpectedLabel,
    #[error("leaf label {0} appears twice")]
    DuplicateLabel(usize),
    #[error("leaf labels must be exactly 1..={expected_max}, found {found}")]
    LabelOutOfRange { found: usize, expected_max: usize },
    #[error("internal vertex has {0} children, binary trees need 2")]
    NonBinary(usize),
    #[error("root has {0} children, expected 2 or 3")]
    BadRootArity(usize),
    #[error("trailing input after ';'")]
    TrailingInput,
    #[error("{0}")]
    Structure(TopologyError),
}

struct Node {
    children: Vec<Node>,
    label: Option<usize>,
    position: usize,
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, kind: NewickErrorKind) -> NewickError {
        NewickError { position: self.pos, kind }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn subtree(&mut self) -> Result<Node, NewickError> {
        self.skip_ws();
        let position = self.pos;
        match self.peek() {
            None => Err(self.err(NewickErrorKind::UnexpectedEnd)),
            Some(b'(') => {
                self.pos += 1;
                let mut children = vec![self.subtree()?];
                loop {
                    self.skip_ws();
                    match self.peek() {
                        Some(b',') => {
                            self.pos += 1;
                            children.push(self.subtree()?);
                        }
                        Some(b')') => {
                            self.pos += 1;
                            break;
                        }
                        Some(c) => return Err(self.err(NewickErrorKind::UnexpectedChar(c as char))),
                        None => return Err(self.err(NewickErrorKind::UnexpectedEnd)),
                    }
                }
                Ok(Node { children, label: None, position })
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while matches!(self.peek(), Some(d) if d.is_ascii_digit()) {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
                let label: usize = text
                    .parse()
                    .map_err(|_| NewickError { position: start, kind: NewickErrorKind::ExpectedLabel })?;
                Ok(Node { children: Vec::new(), label: Some(label), position: start })
            }
            Some(c) => Err(self.err(NewickErrorKind::UnexpectedChar(c as char))),
        }
    }
}

/// Parses a semicolon-terminated Newick string into a topology.
pub fn parse_newick(text: &str) -> Result<Topology, NewickError> {
    let mut p = Parser { bytes: text.as_bytes(), pos: 0 };
    let root = p.subtree()?;
    p.skip_ws();
    match p.peek() {
        Some(b';') => p.pos += 1,
        Some(c) => return Err(p.err(NewickErrorKind::UnexpectedChar(c as char))),
        None => return Err(p.err(NewickErrorKind::UnexpectedEnd)),
    }
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err(NewickErrorKind::TrailingInput));
    }

    // collect labels and validate arities
    let mut labels = Vec::new();
    collect_labels(&root, &mut labels)?;
    let n = labels.len();
    let at = |position, kind| NewickError { position, kind };
    if n < 3 {
        return Err(at(0, NewickErrorKind::Structure(TopologyError::TooFewLeaves(n))));
    }
    let mut seen = vec![false; n];
    for &(label, position) in &labels {
        if label == 0 || label > n {
            return Err(at(
                position,
                NewickErrorKind::LabelOutOfRange { found: label, expected_max: n },
            ));
        }
        if seen[label - 1] {
            return Err(at(position, NewickErrorKind::DuplicateLabel(label)));
        }
        seen[label - 1] = true;
    }
    check_arity(&root, true)?;

    // assign vertex ids and collect edges
    let mut edges = Vec::new();
    let mut next_internal = n;
    if root.children.len() == 2 {
        let a = build(&root.children[0], n, &mut next_internal, &mut edges);
        let b = build(&root.children[1], n, &mut next_internal, &mut edges);
        edges.push((a, b));
    } else {
        build(&root, n, &mut next_internal, &mut edges);
    }
    Topology::from_edges(n, edges)
        .map_err(|e| at(0, NewickErrorKind::Structure(e)))
}

fn collect_labels(node: &Node, out: &mut Vec<(usize, usize)>) -> Result<(), NewickError> {
    if let Some(label) = node.label {
        out.push((label, node.position));
    }
    for c in &node.children {
        collect_labels(c, out)?;
    }
    Ok(())
}

fn check_arity(node: &Node, is_root: bool) -> Result<(), NewickError> {
    if node.label.is_some() {
        return Ok(());
    }
    let k = node.children.len();
    if is_root {
        if k != 2 && k != 3 {
            return Err(NewickError {
                position: node.position,
                kind: NewickErrorKind::BadRootArity(k),
            });
        }
    } else if k != 2 {
        return Err(NewickError { position: node.position, kind: NewickErrorKind::NonBinary(k) });
    }
    for c in &node.children {
        check_arity(c, false)?;
    }
    Ok(())
}

fn build(node: &Node, n: usize, next_internal: &mut usize, edges: &mut Vec<(usize, usize)>) -> usize {
    if let Some(label) = node.label {
        return label - 1;
    }
    let id = *next_internal;
    *next_internal += 1;
    for c in &node.children {
        let cid = build(c, n, next_internal, edges);
        edges.push((id, cid));
    }
    id
}

fn subtree_key(t: &Topology, v: usize, parent: usize) -> (Vec<u8>, usize) {
    let code = rooted_shape_code(t, v, parent);
    let min_label = min_leaf_label(t, v, parent);
    (code, min_label)
}

fn rooted_shape_code(t: &Topology, v: usize, parent: usize) -> Vec<u8> {
    if t.is_leaf(v) {
        return b"()".to_vec();
    }
    let mut children: Vec<Vec<u8>> = t
        .neighbors(v)
        .iter()
        .filter(|&&(w, _)| w != parent)
        .map(|&(w, _)| rooted_shape_code(t, w, v))
        .collect();
    children.sort();
    let mut code = vec![b'('];
    for c in children {
        code.extend_from_slice(&c);
    }
    code.push(b')');
    code
}

fn min_leaf_label(t: &Topology, v: usize, parent: usize) -> usize {
    if t.is_leaf(v) {
        return t.leaf_label(v);
    }
    t.neighbors(v)
        .iter()
        .filter(|&&(w, _)| w != parent)
        .map(|&(w, _)| min_leaf_label(t, w, v))
        .min()
        .unwrap()
}

fn render(t: &Topology, v: usize, parent: usize, out: &mut String) {
    if t.is_leaf(v) {
        out.push_str(&t.leaf_label(v).to_string());
        return;
    }
    let mut children: Vec<usize> =
        t.neighbors(v).iter().filter(|&&(w, _)| w != parent).map(|&(w, _)| w).collect();
    children.sort_by_cached_key(|&w| subtree_key(t, w, v));
    out.push('(');
    for (i, w) in children.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        render(t, *w, v, out);
    }
    out.push(')');
}

/// Canonical Newick form of a topology. Parsing the result yields a
/// label-preservingly isomorphic tree.
pub fn emit_newick(t: &Topology) -> String {
    let (c1, c2) = t.centroid();
    let mut out = String::new();
    match c2 {
        None => render(t, c1, usize::MAX, &mut out),
        Some(c2) => {
            let mut sides = [(c1, c2), (c2, c1)];
            sides.sort_by_cached_key(|&(v, p)| subtree_key(t, v, p));
            out.push('(');
            render(t, sides[0].0, sides[0].1, &mut out);
            out.push(',');
            render(t, sides[1].0, sides[1].1, &mut out);
            out.push(')');
        }
    }
    out.push(';');
    out
}
