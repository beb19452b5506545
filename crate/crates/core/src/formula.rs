//! MSO₁ formulas over labeled graphs.
//!
//! Concrete syntax is S-expressions:
//!
//! ```text
//! free X                       # optional header declaring free set variables
//! (forall u (forall v (implies (adj u v) (or (in u X) (in v X)))))
//! ```
//!
//! Keywords: `exists`, `forall` (vertex quantifiers), `existsS`, `forallS`
//! (set quantifiers), `and`, `or`, `not`, `implies`, `iff`, and the atoms
//! `(adj x y)`, `(= x y)`, `(in x X)`, `(label L x)`, `true`, `false`.
//! `and`/`or` take one or more operands.

use std::collections::BTreeMap;
use std::fmt;

use crate::bits::Bits;
use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, LabeledGraph, VertexSet};

/// Default number of atom evaluations a single [`Formula::evaluate`] call may
/// perform.
pub const DEFAULT_ATOM_BUDGET: u64 = 1_000_000_000;

/// Abstract syntax. Variables are referred to by name.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Node {
    True,
    False,
    Exists(String, Box<Node>),
    Forall(String, Box<Node>),
    ExistsSet(String, Box<Node>),
    ForallSet(String, Box<Node>),
    And(Vec<Node>),
    Or(Vec<Node>),
    Not(Box<Node>),
    Implies(Box<Node>, Box<Node>),
    Iff(Box<Node>, Box<Node>),
    Adj(String, String),
    Eq(String, String),
    In(String, String),
    Label(String, String),
}

impl Node {
    /// `(q_S, q_v)`: occurrences of set and vertex quantifiers.
    fn count_quantifiers(&self) -> (usize, usize) {
        match self {
            Node::True | Node::False => (0, 0),
            Node::Adj(..) | Node::Eq(..) | Node::In(..) | Node::Label(..) => (0, 0),
            Node::Exists(_, b) | Node::Forall(_, b) => {
                let (s, v) = b.count_quantifiers();
                (s, v + 1)
            }
            Node::ExistsSet(_, b) | Node::ForallSet(_, b) => {
                let (s, v) = b.count_quantifiers();
                (s + 1, v)
            }
            Node::Not(b) => b.count_quantifiers(),
            Node::And(xs) | Node::Or(xs) => xs.iter().fold((0, 0), |(s, v), x| {
                let (a, b) = x.count_quantifiers();
                (s + a, v + b)
            }),
            Node::Implies(a, b) | Node::Iff(a, b) => {
                let (s1, v1) = a.count_quantifiers();
                let (s2, v2) = b.count_quantifiers();
                (s1 + s2, v1 + v2)
            }
        }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::True => f.write_str("true"),
            Node::False => f.write_str("false"),
            Node::Exists(x, b) => write!(f, "(exists {x} {b})"),
            Node::Forall(x, b) => write!(f, "(forall {x} {b})"),
            Node::ExistsSet(x, b) => write!(f, "(existsS {x} {b})"),
            Node::ForallSet(x, b) => write!(f, "(forallS {x} {b})"),
            Node::And(xs) | Node::Or(xs) => {
                f.write_str(if matches!(self, Node::And(_)) { "(and" } else { "(or" })?;
                for x in xs {
                    write!(f, " {x}")?;
                }
                f.write_str(")")
            }
            Node::Not(b) => write!(f, "(not {b})"),
            Node::Implies(a, b) => write!(f, "(implies {a} {b})"),
            Node::Iff(a, b) => write!(f, "(iff {a} {b})"),
            Node::Adj(x, y) => write!(f, "(adj {x} {y})"),
            Node::Eq(x, y) => write!(f, "(= {x} {y})"),
            Node::In(x, s) => write!(f, "(in {x} {s})"),
            Node::Label(l, x) => write!(f, "(label {l} {x})"),
        }
    }
}

/// Compiled form: variables resolved to slots.
#[derive(Clone, Debug)]
enum Op {
    True,
    False,
    ExistsV(usize, Box<Op>),
    ForallV(usize, Box<Op>),
    ExistsS(usize, Box<Op>),
    ForallS(usize, Box<Op>),
    And(Vec<Op>),
    Or(Vec<Op>),
    Not(Box<Op>),
    Implies(Box<Op>, Box<Op>),
    Iff(Box<Op>, Box<Op>),
    Adj(usize, usize),
    Eq(usize, usize),
    In(usize, usize),
    Label(usize, usize),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Kind {
    Vertex,
    Set,
}

/// A checked MSO₁ formula with its declared free set variables.
#[derive(Clone, Debug)]
pub struct Formula {
    root: Node,
    free: Vec<String>,
    op: Op,
    vertex_slots: usize,
    set_slots: usize,
    label_names: Vec<String>,
    q_s: usize,
    q_v: usize,
}

impl PartialEq for Formula {
    fn eq(&self, other: &Self) -> bool {
        self.root == other.root && self.free == other.free
    }
}

/// Assignment of vertex sets to free set variables.
pub type Interpretation = BTreeMap<String, VertexSet>;

struct Compiler<'a> {
    scope: Vec<(&'a str, Kind, usize)>,
    vdepth: usize,
    sdepth: usize,
    max_v: usize,
    max_s: usize,
    labels: Vec<String>,
}

impl<'a> Compiler<'a> {
    fn lookup(&self, name: &str, want: Kind) -> Result<usize> {
        match self.scope.iter().rev().find(|(n, _, _)| *n == name) {
            None => Err(Error::UnboundVariable(name.to_string())),
            Some(&(_, kind, slot)) if kind == want => Ok(slot),
            Some(&(_, kind, _)) => invalid(format!(
                "variable `{name}` is a {} variable but is used as a {} variable",
                kind_name(kind),
                kind_name(want)
            )),
        }
    }

    fn bind<T>(&mut self, name: &'a str, kind: Kind, body: &'a Node, f: impl FnOnce(usize, Box<Op>) -> T) -> Result<T> {
        let slot = match kind {
            Kind::Vertex => {
                self.vdepth += 1;
                self.max_v = self.max_v.max(self.vdepth);
                self.vdepth - 1
            }
            Kind::Set => {
                self.sdepth += 1;
                self.max_s = self.max_s.max(self.sdepth);
                self.sdepth - 1
            }
        };
        self.scope.push((name, kind, slot));
        let inner = self.compile(body);
        self.scope.pop();
        match kind {
            Kind::Vertex => self.vdepth -= 1,
            Kind::Set => self.sdepth -= 1,
        }
        Ok(f(slot, Box::new(inner?)))
    }

    fn compile(&mut self, node: &'a Node) -> Result<Op> {
        Ok(match node {
            Node::True => Op::True,
            Node::False => Op::False,
            Node::Exists(x, b) => self.bind(x, Kind::Vertex, b.as_ref(), Op::ExistsV)?,
            Node::Forall(x, b) => self.bind(x, Kind::Vertex, b.as_ref(), Op::ForallV)?,
            Node::ExistsSet(x, b) => self.bind(x, Kind::Set, b.as_ref(), Op::ExistsS)?,
            Node::ForallSet(x, b) => self.bind(x, Kind::Set, b.as_ref(), Op::ForallS)?,
            Node::And(xs) | Node::Or(xs) => {
                if xs.is_empty() {
                    return invalid("`and`/`or` need at least one operand");
                }
                let ops = xs.iter().map(|x| self.compile(x)).collect::<Result<Vec<_>>>()?;
                if matches!(node, Node::And(_)) {
                    Op::And(ops)
                } else {
                    Op::Or(ops)
                }
            }
            Node::Not(b) => Op::Not(Box::new(self.compile(b)?)),
            Node::Implies(a, b) => Op::Implies(Box::new(self.compile(a)?), Box::new(self.compile(b)?)),
            Node::Iff(a, b) => Op::Iff(Box::new(self.compile(a)?), Box::new(self.compile(b)?)),
            Node::Adj(x, y) => Op::Adj(self.lookup(x, Kind::Vertex)?, self.lookup(y, Kind::Vertex)?),
            Node::Eq(x, y) => Op::Eq(self.lookup(x, Kind::Vertex)?, self.lookup(y, Kind::Vertex)?),
            Node::In(x, s) => Op::In(self.lookup(x, Kind::Vertex)?, self.lookup(s, Kind::Set)?),
            Node::Label(l, x) => {
                let idx = match self.labels.iter().position(|n| n == l) {
                    Some(i) => i,
                    None => {
                        self.labels.push(l.clone());
                        self.labels.len() - 1
                    }
                };
                Op::Label(idx, self.lookup(x, Kind::Vertex)?)
            }
        })
    }
}

fn kind_name(k: Kind) -> &'static str {
    match k {
        Kind::Vertex => "vertex",
        Kind::Set => "set",
    }
}

impl Formula {
    /// Checks scoping and builds a formula whose free set variables are
    /// `free` (in order).
    pub fn new(root: Node, free: Vec<String>) -> Result<Formula> {
        for (i, x) in free.iter().enumerate() {
            if free[..i].contains(x) {
                return invalid(format!("free variable `{x}` declared twice"));
            }
        }
        let mut c = Compiler {
            scope: free.iter().enumerate().map(|(i, x)| (x.as_str(), Kind::Set, i)).collect(),
            vdepth: 0,
            sdepth: free.len(),
            max_v: 0,
            max_s: free.len(),
            labels: Vec::new(),
        };
        let op = c.compile(&root)?;
        let (vertex_slots, set_slots, label_names) = (c.max_v, c.max_s, c.labels);
        let (q_s, q_v) = root.count_quantifiers();
        Ok(Formula {
            root,
            free,
            op,
            vertex_slots,
            set_slots,
            label_names,
            q_s,
            q_v,
        })
    }

    /// Parses formula-file text: optional `free ...` header line, `#`
    /// comments, one S-expression.
    pub fn parse(text: &str) -> Result<Formula> {
        let (free, body) = split_header(text);
        let root = parse_sexpr(&body)?;
        Formula::new(root, free)
    }

    /// Parses a bare S-expression with the given free set variables.
    pub fn parse_with_free(text: &str, free: &[&str]) -> Result<Formula> {
        let root = parse_sexpr(text)?;
        Formula::new(root, free.iter().map(|s| s.to_string()).collect())
    }

    pub fn root(&self) -> &Node {
        &self.root
    }

    pub fn free_vars(&self) -> &[String] {
        &self.free
    }

    pub fn is_sentence(&self) -> bool {
        self.free.is_empty()
    }

    /// `(q_S, q_v)` counted as quantifier occurrences.
    pub fn count_quantifiers(&self) -> (usize, usize) {
        (self.q_s, self.q_v)
    }

    /// Formula-file rendering (header line plus S-expression).
    pub fn to_file_text(&self) -> String {
        let mut s = String::new();
        if !self.free.is_empty() {
            s.push_str("free");
            for x in &self.free {
                s.push(' ');
                s.push_str(x);
            }
            s.push('\n');
        }
        s.push_str(&self.root.to_string());
        s.push('\n');
        s
    }

    /// Standard semantics with the default atom budget.
    pub fn evaluate(&self, g: &LabeledGraph, itp: &Interpretation) -> Result<bool> {
        self.evaluate_with_budget(g, itp, DEFAULT_ATOM_BUDGET)
    }

    pub fn evaluate_with_budget(&self, g: &LabeledGraph, itp: &Interpretation, budget: u64) -> Result<bool> {
        let n = g.graph.n();
        let mut free_sets = Vec::with_capacity(self.free.len());
        if !self.free.is_empty() {
            for x in &self.free {
                let set = itp
                    .get(x)
                    .ok_or_else(|| Error::InvalidInput(format!("no interpretation for free variable `{x}`")))?;
                set.check_range(n)?;
                free_sets.push(set.to_bits(n));
            }
            if let Some(extra) = itp.keys().find(|k| !self.free.contains(k)) {
                return invalid(format!("interpretation names unknown variable `{extra}`"));
            }
        }
        let labels = self
            .label_names
            .iter()
            .map(|l| g.label(l).map(|s| s.to_bits(n)).unwrap_or_else(|| Bits::new(n)))
            .collect();
        self.run(&g.graph, labels, free_sets, budget)
    }

    /// Evaluation with free variables given as bit sets, in declaration order.
    pub(crate) fn evaluate_bits(&self, g: &Graph, free_sets: Vec<Bits>, budget: u64) -> Result<bool> {
        let n = g.n();
        let labels = vec![Bits::new(n); self.label_names.len()];
        self.run(g, labels, free_sets, budget)
    }

    fn run(&self, g: &Graph, labels: Vec<Bits>, free_sets: Vec<Bits>, budget: u64) -> Result<bool> {
        let n = g.n();
        let mut sets = free_sets;
        sets.resize(self.set_slots, Bits::new(n));
        let mut ev = Evaluator {
            g,
            labels,
            vars: vec![0; self.vertex_slots],
            sets,
            remaining: budget,
        };
        ev.eval(&self.op)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.root)
    }
}

struct Evaluator<'a> {
    g: &'a Graph,
    labels: Vec<Bits>,
    vars: Vec<usize>,
    sets: Vec<Bits>,
    remaining: u64,
}

impl Evaluator<'_> {
    #[inline]
    fn tick(&mut self) -> Result<()> {
        if self.remaining == 0 {
            return Err(Error::ResourceLimit("atom evaluation budget exhausted".into()));
        }
        self.remaining -= 1;
        Ok(())
    }

    fn eval(&mut self, op: &Op) -> Result<bool> {
        Ok(match op {
            Op::True => true,
            Op::False => false,
            Op::ExistsV(slot, b) | Op::ForallV(slot, b) => {
                let want = matches!(op, Op::ExistsV(..));
                for v in 0..self.g.n() {
                    self.vars[*slot] = v;
                    if self.eval(b)? == want {
                        return Ok(want);
                    }
                }
                !want
            }
            Op::ExistsS(slot, b) | Op::ForallS(slot, b) => {
                let want = matches!(op, Op::ExistsS(..));
                let n = self.g.n();
                if n > 63 {
                    return Err(Error::ResourceLimit(format!(
                        "set quantifier over {n} vertices"
                    )));
                }
                for mask in 0..1u64 << n {
                    self.sets[*slot].assign_mask(mask);
                    if self.eval(b)? == want {
                        return Ok(want);
                    }
                }
                !want
            }
            Op::And(xs) => {
                for x in xs {
                    if !self.eval(x)? {
                        return Ok(false);
                    }
                }
                true
            }
            Op::Or(xs) => {
                for x in xs {
                    if self.eval(x)? {
                        return Ok(true);
                    }
                }
                false
            }
            Op::Not(b) => !self.eval(b)?,
            Op::Implies(a, b) => !self.eval(a)? || self.eval(b)?,
            Op::Iff(a, b) => self.eval(a)? == self.eval(b)?,
            Op::Adj(x, y) => {
                self.tick()?;
                self.g.has_edge(self.vars[*x], self.vars[*y])
            }
            Op::Eq(x, y) => {
                self.tick()?;
                self.vars[*x] == self.vars[*y]
            }
            Op::In(x, s) => {
                self.tick()?;
                self.sets[*s].contains(self.vars[*x])
            }
            Op::Label(l, x) => {
                self.tick()?;
                self.labels[*l].contains(self.vars[*x])
            }
        })
    }
}

/// Splits off a leading `free ...` header line; returns the declared names
/// and the remaining text with line structure preserved.
fn split_header(text: &str) -> (Vec<String>, String) {
    let mut free = Vec::new();
    let mut out = String::with_capacity(text.len());
    let mut seen_content = false;
    for line in text.lines() {
        let content = line.split('#').next().unwrap_or("").trim();
        if !seen_content && !content.is_empty() {
            seen_content = true;
            let mut toks = content.split_whitespace();
            if toks.next() == Some("free") {
                free.extend(toks.map(str::to_string));
                out.push('\n');
                continue;
            }
        }
        out.push_str(line);
        out.push('\n');
    }
    (free, out)
}

#[derive(Debug)]
enum Sexp {
    Atom(String, usize, usize),
    List(Vec<Sexp>, usize, usize),
}

impl Sexp {
    fn pos(&self) -> (usize, usize) {
        match self {
            Sexp::Atom(_, l, c) | Sexp::List(_, l, c) => (*l, *c),
        }
    }
}

fn syntax_err<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Syntax {
        line,
        column,
        message: message.into(),
    })
}

#[derive(Debug)]
enum Tok {
    Open,
    Close,
    Atom(String),
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize, usize)>> {
    let mut toks = Vec::new();
    for (li, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let (ln, col) = (li + 1, i + 1);
            match c {
                '(' => {
                    toks.push((Tok::Open, ln, col));
                    i += 1;
                }
                ')' => {
                    toks.push((Tok::Close, ln, col));
                    i += 1;
                }
                c if c.is_whitespace() => i += 1,
                _ => {
                    let start = i;
                    while i < chars.len() && !chars[i].is_whitespace() && chars[i] != '(' && chars[i] != ')' {
                        i += 1;
                    }
                    toks.push((Tok::Atom(chars[start..i].iter().collect()), ln, col));
                }
            }
        }
    }
    Ok(toks)
}

fn read_sexp(toks: &[(Tok, usize, usize)], pos: &mut usize) -> Result<Sexp> {
    let Some((tok, l, c)) = toks.get(*pos) else {
        let (l, c) = toks.last().map(|t| (t.1, t.2)).unwrap_or((1, 1));
        return syntax_err(l, c, "unexpected end of input");
    };
    *pos += 1;
    match tok {
        Tok::Atom(a) => Ok(Sexp::Atom(a.clone(), *l, *c)),
        Tok::Close => syntax_err(*l, *c, "unexpected `)`"),
        Tok::Open => {
            let mut items = Vec::new();
            loop {
                match toks.get(*pos) {
                    None => return syntax_err(*l, *c, "unclosed `(`"),
                    Some((Tok::Close, _, _)) => {
                        *pos += 1;
                        return Ok(Sexp::List(items, *l, *c));
                    }
                    Some(_) => items.push(read_sexp(toks, pos)?),
                }
            }
        }
    }
}

fn parse_sexpr(text: &str) -> Result<Node> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return syntax_err(1, 1, "empty formula");
    }
    let mut pos = 0;
    let sexp = read_sexp(&toks, &mut pos)?;
    if let Some((_, l, c)) = toks.get(pos) {
        return syntax_err(*l, *c, "trailing input after formula");
    }
    to_node(&sexp)
}

fn name(s: &Sexp) -> Result<String> {
    match s {
        Sexp::Atom(a, l, c) => {
            if is_keyword(a) {
                syntax_err(*l, *c, format!("keyword `{a}` used as a name"))
            } else {
                Ok(a.clone())
            }
        }
        Sexp::List(_, l, c) => syntax_err(*l, *c, "expected a name, found a list"),
    }
}

fn is_keyword(a: &str) -> bool {
    matches!(
        a,
        "exists" | "forall" | "existsS" | "forallS" | "and" | "or" | "not" | "implies" | "iff" | "adj" | "=" | "in" | "label" | "true" | "false"
    )
}

fn to_node(s: &Sexp) -> Result<Node> {
    let (items, l, c) = match s {
        Sexp::Atom(a, l, c) => {
            return match a.as_str() {
                "true" => Ok(Node::True),
                "false" => Ok(Node::False),
                _ => syntax_err(*l, *c, format!("unexpected atom `{a}`")),
            }
        }
        Sexp::List(items, l, c) => (items, *l, *c),
    };
    let Some(Sexp::Atom(head, _, _)) = items.first() else {
        return syntax_err(l, c, "expected an operator");
    };
    let args = &items[1..];
    let arity = |k: usize| -> Result<()> {
        if args.len() == k {
            Ok(())
        } else {
            syntax_err(l, c, format!("`{head}` takes {k} arguments, got {}", args.len()))
        }
    };
    let node = match head.as_str() {
        "exists" | "forall" | "existsS" | "forallS" => {
            arity(2)?;
            let var = name(&args[0])?;
            let body = Box::new(to_node(&args[1])?);
            match head.as_str() {
                "exists" => Node::Exists(var, body),
                "forall" => Node::Forall(var, body),
                "existsS" => Node::ExistsSet(var, body),
                _ => Node::ForallSet(var, body),
            }
        }
        "and" | "or" => {
            if args.is_empty() {
                return syntax_err(l, c, format!("`{head}` needs at least one operand"));
            }
            let xs = args.iter().map(to_node).collect::<Result<Vec<_>>>()?;
            if head == "and" {
                Node::And(xs)
            } else {
                Node::Or(xs)
            }
        }
        "not" => {
            arity(1)?;
            Node::Not(Box::new(to_node(&args[0])?))
        }
        "implies" | "iff" => {
            arity(2)?;
            let a = Box::new(to_node(&args[0])?);
            let b = Box::new(to_node(&args[1])?);
            if head == "implies" {
                Node::Implies(a, b)
            } else {
                Node::Iff(a, b)
            }
        }
        "adj" | "=" | "in" | "label" => {
            arity(2)?;
            let (a, b) = (name(&args[0])?, name(&args[1])?);
            match head.as_str() {
                "adj" => Node::Adj(a, b),
                "=" => Node::Eq(a, b),
                "in" => Node::In(a, b),
                _ => Node::Label(a, b),
            }
        }
        other => {
            let (l, c) = items[0].pos();
            return syntax_err(l, c, format!("unknown operator `{other}`"));
        }
    };
    Ok(node)
}

/// `φ_VC(X)`: every edge has an endpoint in `X`.
pub fn vertex_cover_formula() -> Formula {
    Formula::parse_with_free(
        "(forall u (forall v (implies (adj u v) (or (in u X) (in v X)))))",
        &["X"],
    )
    .expect("static formula")
}
