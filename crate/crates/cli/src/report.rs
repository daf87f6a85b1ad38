//! Ordered report tree rendered as indented text or JSON.

use hopfkit::AxiomReport;

#[derive(Clone, Debug)]
pub enum Node {
    Text(String),
    Bool(bool),
    Int(usize),
    List(Vec<Node>),
    Map(Vec<(String, Node)>),
    Check {
        name: String,
        passed: bool,
        witness: Option<String>,
    },
    /// A report line with a status word, such as `pass` or `n/a`.
    Item {
        name: String,
        status: String,
        detail: String,
    },
}

impl From<&str> for Node {
    fn from(s: &str) -> Self {
        Node::Text(s.to_string())
    }
}

impl From<String> for Node {
    fn from(s: String) -> Self {
        Node::Text(s)
    }
}

impl From<bool> for Node {
    fn from(b: bool) -> Self {
        Node::Bool(b)
    }
}

impl From<usize> for Node {
    fn from(n: usize) -> Self {
        Node::Int(n)
    }
}

impl<T: Into<Node>> From<Vec<T>> for Node {
    fn from(v: Vec<T>) -> Self {
        Node::List(v.into_iter().map(Into::into).collect())
    }
}

#[derive(Clone, Debug, Default)]
pub struct Map(pub Vec<(String, Node)>);

impl Map {
    pub fn new() -> Self {
        Map(Vec::new())
    }

    pub fn put(&mut self, key: &str, v: impl Into<Node>) -> &mut Self {
        self.0.push((key.to_string(), v.into()));
        self
    }

    pub fn checks(&mut self, key: &str, rep: &AxiomReport) -> &mut Self {
        self.put(key, checks(rep))
    }
}

impl From<Map> for Node {
    fn from(m: Map) -> Self {
        Node::Map(m.0)
    }
}

pub fn checks(rep: &AxiomReport) -> Node {
    Node::List(
        rep.checks
            .iter()
            .map(|c| Node::Check { name: c.name.clone(), passed: c.passed, witness: c.witness.clone() })
            .collect(),
    )
}

fn is_inline(n: &Node) -> bool {
    match n {
        Node::Text(_) | Node::Bool(_) | Node::Int(_) => true,
        Node::List(v) => v.iter().all(|x| matches!(x, Node::Text(_) | Node::Bool(_) | Node::Int(_))),
        _ => false,
    }
}

fn inline(n: &Node) -> String {
    match n {
        Node::Text(s) => s.clone(),
        Node::Bool(b) => b.to_string(),
        Node::Int(i) => i.to_string(),
        Node::List(v) => format!("[{}]", v.iter().map(inline).collect::<Vec<_>>().join(", ")),
        _ => unreachable!(),
    }
}

fn text_into(out: &mut String, n: &Node, indent: usize) {
    let pad = " ".repeat(indent);
    match n {
        Node::Map(entries) => {
            for (k, v) in entries {
                if is_inline(v) {
                    out.push_str(&format!("{pad}{k}: {}\n", inline(v)));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    text_into(out, v, indent + 2);
                }
            }
        }
        Node::List(items) => {
            for (i, item) in items.iter().enumerate() {
                match item {
                    Node::Check { name, passed, witness } => {
                        let mark = if *passed { "pass" } else { "FAIL" };
                        match witness {
                            Some(w) => out.push_str(&format!("{pad}[{mark}] {name}: {w}\n")),
                            None => out.push_str(&format!("{pad}[{mark}] {name}\n")),
                        }
                    }
                    Node::Item { name, status, detail } => {
                        out.push_str(&format!("{pad}[{status}] {name}: {detail}\n"));
                    }
                    Node::Map(_) => {
                        out.push_str(&format!("{pad}- [{i}]\n"));
                        text_into(out, item, indent + 2);
                    }
                    other => {
                        out.push_str(&format!("{pad}- {}\n", inline_or_nested(other, indent)));
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", inline(other))),
    }
}

fn inline_or_nested(n: &Node, indent: usize) -> String {
    if is_inline(n) {
        inline(n)
    } else {
        let mut s = String::from("\n");
        text_into(&mut s, n, indent + 2);
        s.trim_end().to_string()
    }
}

pub fn to_text(root: &Node) -> String {
    let mut out = String::new();
    text_into(&mut out, root, 0);
    out
}

fn json_into(out: &mut String, n: &Node, indent: usize) {
    let q = |s: &str| serde_json::to_string(s).expect("string");
    let pad = " ".repeat(indent + 2);
    let close = " ".repeat(indent);
    match n {
        Node::Text(s) => out.push_str(&q(s)),
        Node::Bool(b) => out.push_str(&b.to_string()),
        Node::Int(i) => out.push_str(&i.to_string()),
        Node::Check { name, passed, witness } => {
            out.push_str(&format!("{{\"name\": {}, \"passed\": {passed}", q(name)));
            if let Some(w) = witness {
                out.push_str(&format!(", \"witness\": {}", q(w)));
            }
            out.push('}');
        }
        Node::Item { name, status, detail } => {
            out.push_str(&format!("{{\"name\": {}, \"status\": {}, \"detail\": {}}}", q(name), q(status), q(detail)));
        }
        Node::List(items) if items.is_empty() => out.push_str("[]"),
        Node::List(items) if is_inline(n) => {
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                json_into(out, item, indent);
            }
            out.push(']');
        }
        Node::List(items) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad);
                json_into(out, item, indent + 2);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&close);
            out.push(']');
        }
        Node::Map(entries) if entries.is_empty() => out.push_str("{}"),
        Node::Map(entries) => {
            out.push_str("{\n");
            for (i, (k, v)) in entries.iter().enumerate() {
                out.push_str(&format!("{pad}{}: ", q(k)));
                json_into(out, v, indent + 2);
                out.push_str(if i + 1 < entries.len() { ",\n" } else { "\n" });
            }
            out.push_str(&close);
            out.push('}');
        }
    }
}

pub fn to_json(root: &Node) -> String {
    let mut out = String::new();
    json_into(&mut out, root, 0);
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Node {
        let mut m = Map::new();
        m.put("dim", 3usize).put("flags", vec![true, false]).put("name", "a \"b\"");
        let mut inner = Map::new();
        inner.put("k", "v");
        m.put("rows", Node::List(vec![inner.into()]));
        m.into()
    }

    #[test]
    fn json_parses_and_keeps_order() {
        let s = to_json(&sample());
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["dim"], 3);
        assert_eq!(v["rows"][0]["k"], "v");
        assert!(s.find("\"dim\"").unwrap() < s.find("\"flags\"").unwrap());
    }

    #[test]
    fn text_layout() {
        let s = to_text(&sample());
        assert!(s.starts_with("dim: 3\nflags: [true, false]\n"));
        assert!(s.contains("rows:\n  - [0]\n    k: v\n"));
    }
}
