//! Text formats: PACE-style graphs (.gr) and tree-decompositions (.td),
//! stable-set families, and vertex weightings. Writers are canonical so
//! parse/write round-trips are bit-exact; file writes go through a
//! temp-then-rename step.

use crate::bitset::VertexSet;
use crate::family::StableSetFamily;
use crate::graph::Graph;
use crate::td::TreeDecomposition;
use crate::weights::WeightFunction;
use std::io::Write;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

fn parse_err(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Parse { line: line + 1, msg: msg.into() }
}

// ---------------------------------------------------------------- graphs

/// Canonical .gr text: `p tw n m`, label comments, then sorted 1-based
/// edge lines.
pub fn write_gr(g: &Graph) -> String {
    let mut out = String::new();
    out.push_str(&format!("p tw {} {}\n", g.n(), g.edge_count()));
    for v in 0..g.n() {
        out.push_str(&format!("c label {} {}\n", v + 1, g.label(v)));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

pub fn parse_gr(text: &str) -> Result<Graph, FormatError> {
    let mut n: Option<usize> = None;
    let mut m_declared = 0usize;
    let mut labels: Vec<Option<String>> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("c ") {
            if let Some(label_part) = rest.strip_prefix("label ") {
                let mut it = label_part.splitn(2, ' ');
                let idx: usize = it
                    .next()
                    .unwrap_or("")
                    .parse()
                    .map_err(|_| parse_err(ln, "bad label index"))?;
                let text = it.next().ok_or_else(|| parse_err(ln, "label text missing"))?;
                if idx == 0 {
                    return Err(parse_err(ln, "label index must be 1-based"));
                }
                if labels.len() < idx {
                    labels.resize(idx, None);
                }
                labels[idx - 1] = Some(text.to_string());
            }
            continue;
        }
        if line == "c" {
            continue;
        }
        if let Some(rest) = line.strip_prefix("p ") {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            if parts.len() != 3 || parts[0] != "tw" {
                return Err(parse_err(ln, "expected `p tw <n> <m>`"));
            }
            n = Some(parts[1].parse().map_err(|_| parse_err(ln, "bad vertex count"))?);
            m_declared = parts[2].parse().map_err(|_| parse_err(ln, "bad edge count"))?;
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(parse_err(ln, format!("expected edge line, found {:?}", line)));
        }
        let u: usize = parts[0].parse().map_err(|_| parse_err(ln, "bad endpoint"))?;
        let v: usize = parts[1].parse().map_err(|_| parse_err(ln, "bad endpoint"))?;
        if u == 0 || v == 0 {
            return Err(parse_err(ln, "vertex indices are 1-based"));
        }
        edges.push((u - 1, v - 1));
    }
    let n = n.ok_or_else(|| parse_err(0, "missing `p tw` header"))?;
    if edges.len() != m_declared {
        return Err(parse_err(0, format!("header declares {} edges, found {}", m_declared, edges.len())));
    }
    let labels: Vec<String> = (0..n)
        .map(|v| {
            labels
                .get(v)
                .cloned()
                .flatten()
                .unwrap_or_else(|| format!("v{}", v + 1))
        })
        .collect();
    Graph::from_edges(labels, edges).map_err(|e| parse_err(0, e.to_string()))
}

// ------------------------------------------------------ decompositions

/// Canonical .td text: `s td <bags> <max_bag_size> <n>`, bag lines,
/// then sorted 1-based tree-edge lines.
pub fn write_td(td: &TreeDecomposition, host_n: usize) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "s td {} {} {}\n",
        td.node_count(),
        td.max_bag_size(),
        host_n
    ));
    for (i, bag) in td.bags().iter().enumerate() {
        out.push_str(&format!("b {}", i + 1));
        for v in bag.iter() {
            out.push_str(&format!(" {}", v + 1));
        }
        out.push('\n');
    }
    for &(a, b) in td.edges() {
        out.push_str(&format!("{} {}\n", a + 1, b + 1));
    }
    out
}

/// Parses a .td file; returns the decomposition and the declared host size.
pub fn parse_td(text: &str) -> Result<(TreeDecomposition, usize), FormatError> {
    let mut header: Option<(usize, usize)> = None; // (bags, host n)
    let mut bags: Vec<Option<VertexSet>> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line == "c" || line.starts_with("c ") {
            continue;
        }
        if let Some(rest) = line.strip_prefix("s ") {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            if parts.len() != 4 || parts[0] != "td" {
                return Err(parse_err(ln, "expected `s td <bags> <max_bag_size> <n>`"));
            }
            let nbags = parts[1].parse().map_err(|_| parse_err(ln, "bad bag count"))?;
            let n = parts[3].parse().map_err(|_| parse_err(ln, "bad vertex count"))?;
            header = Some((nbags, n));
            bags.resize(nbags, None);
            continue;
        }
        if let Some(rest) = line.strip_prefix("b ") {
            let mut parts = rest.split_whitespace();
            let id: usize = parts
                .next()
                .unwrap_or("")
                .parse()
                .map_err(|_| parse_err(ln, "bad bag id"))?;
            if id == 0 || id > bags.len() {
                return Err(parse_err(ln, format!("bag id {} out of range", id)));
            }
            let mut bag = VertexSet::new();
            for p in parts {
                let v: usize = p.parse().map_err(|_| parse_err(ln, "bad bag vertex"))?;
                if v == 0 {
                    return Err(parse_err(ln, "vertex indices are 1-based"));
                }
                bag.insert(v - 1);
            }
            if bags[id - 1].is_some() {
                return Err(parse_err(ln, format!("bag {} defined twice", id)));
            }
            bags[id - 1] = Some(bag);
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(parse_err(ln, format!("expected tree edge, found {:?}", line)));
        }
        let a: usize = parts[0].parse().map_err(|_| parse_err(ln, "bad tree edge"))?;
        let b: usize = parts[1].parse().map_err(|_| parse_err(ln, "bad tree edge"))?;
        if a == 0 || b == 0 || a > bags.len() || b > bags.len() {
            return Err(parse_err(ln, "tree edge endpoint out of range"));
        }
        edges.push((a - 1, b - 1));
    }
    let (nbags, host_n) = header.ok_or_else(|| parse_err(0, "missing `s td` header"))?;
    let bags: Vec<VertexSet> = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| parse_err(0, format!("bag {} missing", i + 1))))
        .collect::<Result<_, _>>()?;
    debug_assert_eq!(bags.len(), nbags);
    Ok((TreeDecomposition::new(bags, edges), host_n))
}

// ------------------------------------------------------------- families

/// One set per line, 1-based indices, space separated.
pub fn write_family(f: &StableSetFamily) -> String {
    let mut out = String::new();
    for s in f.iter() {
        let line: Vec<String> = s.iter().map(|v| (v + 1).to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_family(text: &str) -> Result<StableSetFamily, FormatError> {
    let mut sets = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line == "c" || line.starts_with("c ") {
            continue;
        }
        let mut set = VertexSet::new();
        for p in line.split_whitespace() {
            let v: usize = p.parse().map_err(|_| parse_err(ln, "bad vertex index"))?;
            if v == 0 {
                return Err(parse_err(ln, "vertex indices are 1-based"));
            }
            set.insert(v - 1);
        }
        sets.push(set);
    }
    Ok(StableSetFamily::new(sets))
}

// -------------------------------------------------------------- weights

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightHeader {
    pub bound: u64,
    pub target: u64,
    pub graph_hash: String,
}

/// Weight file: a header comment recording (bound, target, graph hash),
/// then one `<vertex> <weight>` line per vertex, 1-based, ascending.
pub fn write_weights(w: &WeightFunction, header: &WeightHeader) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "c bound {} target {} graph {}\n",
        header.bound, header.target, header.graph_hash
    ));
    for v in 0..w.len() {
        out.push_str(&format!("{} {}\n", v + 1, w.get(v)));
    }
    out
}

/// Parses a weight file over `n` vertices; unlisted vertices get weight 0.
pub fn parse_weights(text: &str, n: usize) -> Result<(WeightFunction, Option<WeightHeader>), FormatError> {
    let mut w = WeightFunction::uniform(n, 0);
    let mut header = None;
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("c ") {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            if parts.len() == 6 && parts[0] == "bound" && parts[2] == "target" && parts[4] == "graph" {
                header = Some(WeightHeader {
                    bound: parts[1].parse().map_err(|_| parse_err(ln, "bad bound"))?,
                    target: parts[3].parse().map_err(|_| parse_err(ln, "bad target"))?,
                    graph_hash: parts[5].to_string(),
                });
            }
            continue;
        }
        if line == "c" {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(parse_err(ln, format!("expected `<vertex> <weight>`, found {:?}", line)));
        }
        let v: usize = parts[0].parse().map_err(|_| parse_err(ln, "bad vertex"))?;
        let weight: u64 = parts[1].parse().map_err(|_| parse_err(ln, "bad weight"))?;
        if v == 0 || v > n {
            return Err(parse_err(ln, format!("vertex {} out of range (n = {})", v, n)));
        }
        w.set(v - 1, weight);
    }
    Ok((w, header))
}

// ------------------------------------------------------------- file io

/// Writes atomically: temp file in the target directory, then rename.
pub fn write_file_atomic(path: &Path, content: &str) -> Result<(), FormatError> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
    let tmp = match dir {
        Some(d) => d.join(format!(
            ".{}.tmp-{}",
            path.file_name().and_then(|f| f.to_str()).unwrap_or("out"),
            std::process::id()
        )),
        None => std::path::PathBuf::from(format!(".out.tmp-{}", std::process::id())),
    };
    {
        let mut f = std::fs::File::create(&tmp)?;
        f.write_all(content.as_bytes())?;
        f.sync_all()?;
    }
    std::fs::rename(&tmp, path)?;
    Ok(())
}

pub fn read_gr_file(path: &Path) -> Result<Graph, FormatError> {
    parse_gr(&std::fs::read_to_string(path)?)
}

pub fn read_td_file(path: &Path) -> Result<(TreeDecomposition, usize), FormatError> {
    parse_td(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gr_round_trip_is_bit_exact() {
        let g = Graph::cycle(5).unwrap();
        let text = write_gr(&g);
        let parsed = parse_gr(&text).unwrap();
        assert_eq!(parsed, g);
        assert_eq!(write_gr(&parsed), text);
    }

    #[test]
    fn gr_parses_header_first_files_without_labels() {
        let text = "c a comment\np tw 3 2\n1 2\n2 3\n";
        let g = parse_gr(text).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.label(0), "v1");
    }

    #[test]
    fn gr_rejects_malformed() {
        assert!(parse_gr("p tw 2 1\n").is_err()); // declared edge missing
        assert!(parse_gr("1 2\n").is_err()); // no header
        assert!(parse_gr("p tw 2 1\n0 1\n").is_err()); // 0-based index
        assert!(parse_gr("p tw 2 1\n1 1\n").is_err()); // self loop
    }

    #[test]
    fn td_round_trip_is_bit_exact() {
        let td = TreeDecomposition::new(
            vec![[0, 1].into_iter().collect(), [1, 2].into_iter().collect()],
            vec![(0, 1)],
        );
        let text = write_td(&td, 3);
        let (parsed, n) = parse_td(&text).unwrap();
        assert_eq!(n, 3);
        assert_eq!(parsed, td);
        assert_eq!(write_td(&parsed, n), text);
    }

    #[test]
    fn td_rejects_malformed() {
        assert!(parse_td("b 1 1 2\n").is_err()); // no header
        assert!(parse_td("s td 2 2 3\nb 1 1 2\n").is_err()); // bag 2 missing
        assert!(parse_td("s td 1 2 3\nb 1 1 2\nb 1 2\n").is_err()); // duplicate bag
        assert!(parse_td("s td 2 2 3\nb 1 1\nb 2 2\n1 3\n").is_err()); // edge out of range
    }

    #[test]
    fn family_round_trip() {
        let f = StableSetFamily::new(vec![
            [0, 2].into_iter().collect(),
            [1].into_iter().collect(),
            [0, 1, 4].into_iter().collect(),
        ]);
        let text = write_family(&f);
        let parsed = parse_family(&text).unwrap();
        assert_eq!(parsed, f);
        assert_eq!(write_family(&parsed), text);
    }

    #[test]
    fn weights_round_trip_with_header() {
        let w = WeightFunction::from_vec(vec![2, 0, 1]);
        let header = WeightHeader { bound: 2, target: 3, graph_hash: "abcd".into() };
        let text = write_weights(&w, &header);
        let (parsed, h) = parse_weights(&text, 3).unwrap();
        assert_eq!(parsed, w);
        assert_eq!(h, Some(header));
    }

    #[test]
    fn atomic_write_creates_file() {
        let dir = std::env::temp_dir().join(format!("tdp-fmt-test-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("g.gr");
        write_file_atomic(&path, "p tw 1 0\n").unwrap();
        assert_eq!(std::fs::read_to_string(&path).unwrap(), "p tw 1 0\n");
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
