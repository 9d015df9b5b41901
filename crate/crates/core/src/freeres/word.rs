//! Nested words: elements of `F^{n+1}C(c, d)`.
//!
//! A word of level `n` is a rooted tree whose leaves all sit at depth
//! `n + 1` and are non-identity morphisms. The children of the root are the
//! letters, written last-applied first as in `(g, f) = g ∘ f`. Only the root
//! may be empty.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::fincat::{FinCategory, Functor, Mor, Obj};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    Leaf(Mor),
    Branch(Vec<Node>),
}

impl Node {
    fn leaves_into(&self, out: &mut Vec<Mor>) {
        match self {
            Node::Leaf(m) => out.push(*m),
            Node::Branch(ch) => ch.iter().for_each(|c| c.leaves_into(out)),
        }
    }

    fn children(&self) -> &[Node] {
        match self {
            Node::Leaf(_) => &[],
            Node::Branch(ch) => ch,
        }
    }

    fn map(&self, f: &Functor) -> Node {
        match self {
            Node::Leaf(m) => Node::Leaf(f.mor(*m)),
            Node::Branch(ch) => Node::Branch(ch.iter().map(|c| c.map(f)).collect()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    pub level: usize,
    pub source: Obj,
    /// Letters, last-applied first.
    pub root: Vec<Node>,
}

impl Word {
    pub fn empty(level: usize, source: Obj) -> Self {
        Word { level, source, root: Vec::new() }
    }

    /// The level-0 word of a chain of morphisms, last-applied first.
    /// Identities are dropped.
    pub fn from_chain(cat: &FinCategory, source: Obj, chain: &[Mor]) -> Self {
        Word {
            level: 0,
            source,
            root: chain.iter().filter(|m| !cat.is_identity(**m)).map(|m| Node::Leaf(*m)).collect(),
        }
    }

    /// `F^n` of a single morphism: the atom `((…(f)…))` of level `n`.
    pub fn atom(cat: &FinCategory, f: Mor, level: usize) -> Self {
        let mut w = Word::from_chain(cat, cat.source(f), &[f]);
        for _ in 0..level {
            w = w.extra_f();
        }
        w
    }

    pub fn is_empty(&self) -> bool {
        self.root.is_empty()
    }

    /// Leaves, last-applied first.
    pub fn leaves(&self) -> Vec<Mor> {
        let mut out = Vec::new();
        self.root.iter().for_each(|c| c.leaves_into(&mut out));
        out
    }

    pub fn target(&self, cat: &FinCategory) -> Obj {
        self.leaves().first().map_or(self.source, |m| cat.target(*m))
    }

    /// Letters as words of level `n − 1`, last-applied first.
    pub fn letters(&self, cat: &FinCategory) -> Vec<Word> {
        assert!(self.level > 0, "level-0 letters are morphisms");
        let mut out = Vec::with_capacity(self.root.len());
        let mut src = self.source;
        for node in self.root.iter().rev() {
            let w = Word { level: self.level - 1, source: src, root: node.children().to_vec() };
            src = w.target(cat);
            out.push(w);
        }
        out.reverse();
        out
    }

    /// The word with the given letters (last-applied first).
    pub fn from_letters(source: Obj, letters: Vec<Word>) -> Self {
        let level = letters.first().map_or(0, |l| l.level + 1);
        Word { level, source, root: letters.into_iter().map(|l| Node::Branch(l.root)).collect() }
    }

    /// Structural check: uniform leaf depth, nonempty letters, composable
    /// leaves.
    pub fn validate(&self, cat: &FinCategory) -> Result<()> {
        fn depth_ok(n: &Node, remaining: usize) -> bool {
            match n {
                Node::Leaf(_) => remaining == 0,
                Node::Branch(ch) => remaining > 0 && !ch.is_empty() && ch.iter().all(|c| depth_ok(c, remaining - 1)),
            }
        }
        if !self.root.iter().all(|c| depth_ok(c, self.level)) {
            return Err(Error::Validation(format!("malformed word {}", self.show(cat))));
        }
        let mut cur = self.source;
        for m in self.leaves().iter().rev() {
            if cat.is_identity(*m) || cat.source(*m) != cur {
                return Err(Error::Validation(format!("word {} is not a chain of non-identities", self.show(cat))));
            }
            cur = cat.target(*m);
        }
        Ok(())
    }

    /// `self ∘ first`: concatenation of letters.
    pub fn compose(&self, cat: &FinCategory, first: &Word) -> Result<Word> {
        if self.level != first.level {
            return Err(Error::Operator("composing words of different levels".into()));
        }
        if first.target(cat) != self.source {
            return Err(Error::Operator(format!("{} and {} are not composable", self.show(cat), first.show(cat))));
        }
        let mut root = self.root.clone();
        root.extend(first.root.iter().cloned());
        Ok(Word { level: self.level, source: first.source, root })
    }

    /// The augmentation: composite of all leaves.
    pub fn augment(&self, cat: &FinCategory) -> Mor {
        cat.compose_chain(self.source, &self.leaves()).expect("leaves of a word compose")
    }

    /// `d_i` for `0 ≤ i ≤ n`, `n ≥ 1`.
    pub fn face(&self, cat: &FinCategory, i: usize) -> Result<Word> {
        let n = self.level;
        if n == 0 || i > n {
            return Err(Error::Operator(format!("face d{i} undefined at level {n}")));
        }
        // `nodes` sit at depth `depth`; the root's children are at depth 1
        fn flatten(nodes: &[Node], depth: usize, i: usize, n: usize, cat: &FinCategory) -> Vec<Node> {
            if i == n && depth == n {
                // level-0 letters: compose them, dropping identities
                return nodes
                    .iter()
                    .filter_map(|node| {
                        let mut ls = Vec::new();
                        node.leaves_into(&mut ls);
                        let src = cat.source(*ls.last().unwrap());
                        let h = cat.compose_chain(src, &ls).expect("leaves compose");
                        (!cat.is_identity(h)).then_some(Node::Leaf(h))
                    })
                    .collect();
            }
            if i < n && depth == i + 1 {
                return nodes.iter().flat_map(|node| node.children().iter().cloned()).collect();
            }
            nodes
                .iter()
                .filter_map(|node| {
                    let ch = flatten(node.children(), depth + 1, i, n, cat);
                    (!ch.is_empty()).then_some(Node::Branch(ch))
                })
                .collect()
        }
        let root = flatten(&self.root, 1, i, n, cat);
        Ok(Word { level: n - 1, source: self.source, root })
    }

    /// `s_i` for `0 ≤ i ≤ n`.
    pub fn degeneracy(&self, i: usize) -> Result<Word> {
        let n = self.level;
        if i > n {
            return Err(Error::Operator(format!("degeneracy s{i} undefined at level {n}")));
        }
        fn wrap(nodes: &[Node], depth: usize, i: usize) -> Vec<Node> {
            if depth == i {
                return nodes.iter().map(|c| Node::Branch(vec![c.clone()])).collect();
            }
            nodes.iter().map(|node| Node::Branch(wrap(node.children(), depth + 1, i))).collect()
        }
        Ok(Word { level: n + 1, source: self.source, root: wrap(&self.root, 0, i) })
    }

    /// The extra degeneracy `F`: the whole word as a single letter.
    pub fn extra_f(&self) -> Word {
        let root = if self.root.is_empty() { Vec::new() } else { vec![Node::Branch(self.root.clone())] };
        Word { level: self.level + 1, source: self.source, root }
    }

    /// Indices `i` with `self = s_i(d_i self)`: every node at depth `i + 1`
    /// has exactly one child.
    pub fn degeneracy_indices(&self) -> Vec<usize> {
        let n = self.level;
        let mut out = Vec::new();
        for i in 0..n {
            let mut level: Vec<&Node> = self.root.iter().collect();
            for _ in 0..i {
                level = level.iter().flat_map(|node| node.children().iter()).collect();
            }
            if level.iter().all(|node| node.children().len() == 1) {
                out.push(i);
            }
        }
        out
    }

    pub fn is_degenerate(&self) -> bool {
        !self.degeneracy_indices().is_empty()
    }

    /// Image under a functor that sends non-identities to non-identities.
    pub fn map(&self, f: &Functor) -> Word {
        Word { level: self.level, source: f.obj(self.source), root: self.root.iter().map(|c| c.map(f)).collect() }
    }

    /// Text form, e.g. `((g,f))`.
    pub fn show(&self, cat: &FinCategory) -> String {
        fn node(n: &Node, cat: &FinCategory, out: &mut String) {
            match n {
                Node::Leaf(m) => out.push_str(cat.name(*m)),
                Node::Branch(ch) => list(ch, cat, out),
            }
        }
        fn list(ch: &[Node], cat: &FinCategory, out: &mut String) {
            out.push('(');
            for (i, c) in ch.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                node(c, cat, out);
            }
            out.push(')');
        }
        let mut out = String::new();
        list(&self.root, cat, &mut out);
        if self.root.is_empty() && self.level > 0 {
            let _ = write!(out, "^{}", self.level);
        }
        out
    }

    /// Parses the text form. Empty words need `source` and, above level 0,
    /// the suffix `^n` for their level.
    pub fn parse(cat: &FinCategory, text: &str, source: Option<Obj>) -> Result<Word> {
        let err = |m: &str| Error::parse("word", format!("{m} in {text:?}"));
        let (body, empty_level) = match text.trim().split_once('^') {
            Some((b, l)) => (b.trim(), Some(l.trim().parse::<usize>().map_err(|_| err("bad level suffix"))?)),
            None => (text.trim(), None),
        };
        let chars: Vec<char> = body.chars().collect();
        let mut pos = 0;
        fn parse_list(chars: &[char], pos: &mut usize, cat: &FinCategory) -> std::result::Result<Vec<Node>, String> {
            if chars.get(*pos) != Some(&'(') {
                return Err("expected '('".into());
            }
            *pos += 1;
            let mut out = Vec::new();
            if chars.get(*pos) == Some(&')') {
                *pos += 1;
                return Ok(out);
            }
            loop {
                if chars.get(*pos) == Some(&'(') {
                    out.push(Node::Branch(parse_list(chars, pos, cat)?));
                } else {
                    let start = *pos;
                    while *pos < chars.len() && !matches!(chars[*pos], ',' | ')' | '(') {
                        *pos += 1;
                    }
                    let name: String = chars[start..*pos].iter().collect();
                    let m = cat.morphism_by_name(name.trim()).map_err(|_| format!("unknown morphism {}", name.trim()))?;
                    out.push(Node::Leaf(m));
                }
                match chars.get(*pos) {
                    Some(',') => *pos += 1,
                    Some(')') => {
                        *pos += 1;
                        return Ok(out);
                    }
                    _ => return Err("expected ',' or ')'".into()),
                }
            }
        }
        let root = parse_list(&chars, &mut pos, cat).map_err(|m| err(&m))?;
        if pos != chars.len() {
            return Err(err("trailing characters"));
        }
        fn depth(n: &Node) -> usize {
            match n {
                Node::Leaf(_) => 0,
                Node::Branch(ch) => 1 + ch.first().map_or(0, depth),
            }
        }
        let level = match root.first() {
            Some(n) => depth(n),
            None => empty_level.unwrap_or(0),
        };
        let leaves: Vec<Mor> = {
            let mut v = Vec::new();
            root.iter().for_each(|c| c.leaves_into(&mut v));
            v
        };
        let source = match leaves.last() {
            Some(m) => cat.source(*m),
            None => source.ok_or_else(|| err("empty word needs a source object"))?,
        };
        let w = Word { level, source, root };
        w.validate(cat)?;
        Ok(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::FinPoset;

    fn cat2() -> FinCategory {
        FinPoset::chain(2).to_category()
    }

    #[test]
    fn faces_of_the_nondegenerate_edge() {
        let c = cat2();
        let w = Word::parse(&c, "((1<2,0<1))", None).unwrap();
        assert_eq!(w.face(&c, 0).unwrap().show(&c), "(1<2,0<1)");
        assert_eq!(w.face(&c, 1).unwrap().show(&c), "(0<2)");
        assert!(!w.is_degenerate());
    }

    #[test]
    fn comultiplication() {
        let c = cat2();
        let w = Word::parse(&c, "(1<2,0<1)", None).unwrap();
        assert_eq!(w.degeneracy(0).unwrap().show(&c), "((1<2),(0<1))");
        assert!(w.degeneracy(0).unwrap().is_degenerate());
    }

    #[test]
    fn extra_degeneracy_and_counit() {
        let c = cat2();
        let w = Word::parse(&c, "((1<2),(0<1))", None).unwrap();
        assert_eq!(w.extra_f().face(&c, 0).unwrap(), w);
        let e = Word::empty(2, Obj(1));
        assert_eq!(e.extra_f(), Word::empty(3, Obj(1)));
    }

    #[test]
    fn composition_and_augmentation() {
        let c = cat2();
        let g = Word::parse(&c, "(1<2)", None).unwrap();
        let f = Word::parse(&c, "(0<1)", None).unwrap();
        let gf = g.compose(&c, &f).unwrap();
        assert_eq!(gf.show(&c), "(1<2,0<1)");
        assert_eq!(c.name(gf.augment(&c)), "0<2");
        assert_eq!(Word::empty(0, Obj(1)).compose(&c, &f).unwrap(), f);
    }

    #[test]
    fn parse_round_trip() {
        let c = cat2();
        for t in ["((1<2),(0<1))", "(((0<2)))", "()^2"] {
            let w = Word::parse(&c, t, Some(Obj(0))).unwrap();
            assert_eq!(w.show(&c), t);
        }
        assert!(Word::parse(&c, "(0<1,1<2)", None).is_err());
    }
}
