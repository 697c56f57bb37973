//! Graph model of Auslander-Reiten quivers: nodes with translation
//! structure, stable-quiver extraction, mesh linting and deterministic
//! DOT / JSON / ASCII exporters.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct ARNode {
    pub id: String,
    pub label: String,
    pub dim: usize,
    pub injective: bool,
    /// Window-boundary nodes have incomplete meshes; exporters mark them so
    /// missing arrows are not mistaken for structure.
    pub boundary: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ARArrow {
    pub src: String,
    pub dst: String,
}

/// A translation quiver: multiplicity-free arrows plus a partial translation
/// defined on non-injective nodes whose translate is present.
#[derive(Clone, Debug, Serialize)]
pub struct ARQuiver {
    pub nodes: Vec<ARNode>,
    pub arrows: Vec<ARArrow>,
    pub translation: BTreeMap<String, String>,
}

/// Grid placement hints for the ASCII exporter: component index, row, column.
#[derive(Clone, Debug, Default)]
pub struct GridLayout {
    pub coords: BTreeMap<String, (usize, i64, i64)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeshViolation {
    pub node: String,
    pub detail: String,
}

impl ARQuiver {
    pub fn new(
        nodes: Vec<ARNode>,
        arrows: Vec<ARArrow>,
        translation: BTreeMap<String, String>,
    ) -> Result<Self> {
        let ids: BTreeSet<&String> = nodes.iter().map(|n| &n.id).collect();
        if ids.len() != nodes.len() {
            return Err(Error::InvalidObject("duplicate node ids in AR quiver".into()));
        }
        let mut seen = BTreeSet::new();
        for a in &arrows {
            if !ids.contains(&a.src) || !ids.contains(&a.dst) {
                return Err(Error::InvalidObject(format!(
                    "arrow {} -> {} has an undeclared endpoint",
                    a.src, a.dst
                )));
            }
            if !seen.insert((a.src.clone(), a.dst.clone())) {
                return Err(Error::InvalidObject(format!(
                    "duplicate arrow {} -> {}",
                    a.src, a.dst
                )));
            }
        }
        for (src, dst) in &translation {
            if !ids.contains(src) || !ids.contains(dst) {
                return Err(Error::InvalidObject("translation endpoint missing".into()));
            }
            let node = nodes.iter().find(|n| &n.id == src).unwrap();
            if node.injective {
                return Err(Error::InvalidObject(format!(
                    "translation defined on injective node {src}"
                )));
            }
        }
        Ok(ARQuiver { nodes, arrows, translation })
    }

    pub fn node(&self, id: &str) -> Option<&ARNode> {
        self.nodes.iter().find(|n| n.id == id)
    }

    /// Deletes injective nodes, incident arrows, and restricts translation.
    pub fn stable(&self) -> ARQuiver {
        let keep: BTreeSet<&String> =
            self.nodes.iter().filter(|n| !n.injective).map(|n| &n.id).collect();
        ARQuiver {
            nodes: self.nodes.iter().filter(|n| !n.injective).cloned().collect(),
            arrows: self
                .arrows
                .iter()
                .filter(|a| keep.contains(&a.src) && keep.contains(&a.dst))
                .cloned()
                .collect(),
            translation: self
                .translation
                .iter()
                .filter(|(s, d)| keep.contains(s) && keep.contains(d))
                .map(|(s, d)| (s.clone(), d.clone()))
                .collect(),
        }
    }

    /// Mesh consistency for translation arrows drawn `m -> DTr(m)`: for
    /// every interior node `m` with translate `t`, the multiset of arrow
    /// targets out of `m` must equal the multiset of arrow sources into `t`
    /// (both are the middle terms of the almost split sequence starting at
    /// `m`). Boundary nodes are skipped, not flagged.
    pub fn mesh_lint(&self) -> Vec<MeshViolation> {
        let mut violations = Vec::new();
        for node in &self.nodes {
            if node.boundary {
                continue;
            }
            let Some(tid) = self.translation.get(&node.id) else {
                continue;
            };
            let tnode = self.node(tid).expect("translation endpoints validated");
            if tnode.boundary {
                continue;
            }
            let mut succs: Vec<&String> = self
                .arrows
                .iter()
                .filter(|a| a.src == node.id)
                .map(|a| &a.dst)
                .collect();
            let mut preds: Vec<&String> = self
                .arrows
                .iter()
                .filter(|a| &a.dst == tid)
                .map(|a| &a.src)
                .collect();
            succs.sort();
            preds.sort();
            if succs != preds {
                violations.push(MeshViolation {
                    node: node.id.clone(),
                    detail: format!(
                        "arrows out of {} go to {:?}, arrows into translate {} come from {:?}",
                        node.id, succs, tid, preds
                    ),
                });
            }
        }
        violations
    }

    /// Graphviz DOT: solid arrows, dashed translation, doubled borders for
    /// injectives, dashed borders for boundary nodes. Byte-deterministic.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph ar_quiver {\n  rankdir=LR;\n  node [shape=box];\n");
        for n in &self.nodes {
            let mut attrs = vec![format!("label=\"{}\"", n.label)];
            if n.injective {
                attrs.push("peripheries=2".to_string());
            }
            if n.boundary {
                attrs.push("style=dashed".to_string());
            }
            out.push_str(&format!("  \"{}\" [{}];\n", n.id, attrs.join(", ")));
        }
        for a in &self.arrows {
            out.push_str(&format!("  \"{}\" -> \"{}\";\n", a.src, a.dst));
        }
        for (s, d) in &self.translation {
            out.push_str(&format!(
                "  \"{s}\" -> \"{d}\" [style=dashed, constraint=false];\n"
            ));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("AR quiver serializes")
    }

    /// Diagonal-grid ASCII rendering. Nodes are placed by the layout hints;
    /// mesh arrows between adjacent rows render as `/` and `\`, same-row
    /// steps as `->`, and the translation as a dotted `..>` when the cell it
    /// crosses is empty.
    pub fn to_ascii(&self, layout: &GridLayout) -> String {
        let mut components: BTreeSet<usize> = BTreeSet::new();
        for (c, _, _) in layout.coords.values() {
            components.insert(*c);
        }
        let mut out = String::new();
        for &comp in &components {
            if components.len() > 1 {
                out.push_str(&format!("component {comp}\n"));
            }
            out.push_str(&self.render_component(layout, comp));
            out.push('\n');
        }
        out
    }

    fn render_component(&self, layout: &GridLayout, comp: usize) -> String {
        let placed: BTreeMap<&String, (i64, i64)> = layout
            .coords
            .iter()
            .filter(|(_, (c, _, _))| *c == comp)
            .map(|(id, (_, r, col))| (id, (*r, *col)))
            .collect();
        if placed.is_empty() {
            return String::new();
        }
        let min_row = placed.values().map(|(r, _)| *r).min().unwrap();
        let max_row = placed.values().map(|(r, _)| *r).max().unwrap();
        let min_col = placed.values().map(|(_, c)| *c).min().unwrap();
        let max_col = placed.values().map(|(_, c)| *c).max().unwrap();
        let ncols = (max_col - min_col + 1) as usize;
        let cell = self
            .nodes
            .iter()
            .filter(|n| placed.contains_key(&n.id))
            .map(|n| n.label.len() + if n.injective { 2 } else { 0 })
            .max()
            .unwrap_or(4)
            + 2;
        let nrows = (max_row - min_row + 1) as usize;
        let width = ncols * cell;
        let mut grid = vec![vec![' '; width]; nrows * 2 - 1];

        let pos = |r: i64, c: i64| -> (usize, usize) {
            (((r - min_row) * 2) as usize, ((c - min_col) as usize) * cell)
        };
        let mut occupied: BTreeMap<(i64, i64), &String> = BTreeMap::new();
        for (id, (r, c)) in &placed {
            occupied.insert((*r, *c), id);
        }
        for (id, (r, c)) in &placed {
            let node = self.node(id).unwrap();
            let text = if node.injective {
                format!("[{}]", node.label)
            } else {
                node.label.clone()
            };
            let (gr, gc) = pos(*r, *c);
            let start = gc + (cell - text.len()) / 2;
            for (i, ch) in text.chars().enumerate() {
                grid[gr][start + i] = ch;
            }
        }
        for a in &self.arrows {
            let (Some(&(r1, c1)), Some(&(r2, c2))) = (placed.get(&a.src), placed.get(&a.dst))
            else {
                continue;
            };
            if r2 == r1 + 1 && c2 == c1 + 1 {
                // Down-right diagonal.
                let (gr, gc) = pos(r1, c1);
                grid[gr + 1][gc + cell - 1] = '\\';
            } else if r2 == r1 - 1 && c2 == c1 + 1 {
                // Up-right diagonal.
                let (gr, gc) = pos(r2, c2);
                grid[gr + 1][gc - 1] = '/';
            } else if r2 == r1 && c2 == c1 + 1 {
                // Horizontal step (injective in a mesh).
                let (gr, gc) = pos(r1, c1);
                let from = gc + cell - (cell / 4);
                grid[gr][from] = '-';
                grid[gr][from + 1] = '>';
            }
        }
        for (s, d) in &self.translation {
            let (Some(&(r1, c1)), Some(&(r2, c2))) = (placed.get(s), placed.get(d)) else {
                continue;
            };
            if r1 == r2 && c2 == c1 + 2 && !occupied.contains_key(&(r1, c1 + 1)) {
                let (gr, gc) = pos(r1, c1 + 1);
                let mid = gc + cell / 2;
                grid[gr][mid - 1] = '.';
                grid[gr][mid] = '.';
                grid[gr][mid + 1] = '>';
            }
        }
        let mut out = String::new();
        for row in grid {
            let line: String = row.into_iter().collect();
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny() -> ARQuiver {
        let nodes = vec![
            ARNode { id: "a".into(), label: "a".into(), dim: 1, injective: false, boundary: false },
            ARNode { id: "b".into(), label: "b".into(), dim: 2, injective: true, boundary: false },
            ARNode { id: "c".into(), label: "c".into(), dim: 1, injective: false, boundary: false },
        ];
        let arrows = vec![
            ARArrow { src: "a".into(), dst: "b".into() },
            ARArrow { src: "b".into(), dst: "c".into() },
        ];
        let mut tr = BTreeMap::new();
        tr.insert("a".to_string(), "c".to_string());
        ARQuiver::new(nodes, arrows, tr).unwrap()
    }

    #[test]
    fn stable_removes_injectives_and_is_idempotent() {
        let q = tiny();
        let s = q.stable();
        assert_eq!(s.nodes.len(), 2);
        assert!(s.arrows.is_empty());
        assert_eq!(s.translation.len(), 1);
        let s2 = s.stable();
        assert_eq!(s2.nodes.len(), s.nodes.len());
        assert_eq!(s2.arrows.len(), s.arrows.len());
        assert_eq!(s2.translation, s.translation);
    }

    #[test]
    fn quiver_with_no_injectives_unchanged_by_stable() {
        let nodes = vec![ARNode {
            id: "x".into(),
            label: "x".into(),
            dim: 1,
            injective: false,
            boundary: false,
        }];
        let q = ARQuiver::new(nodes, vec![], BTreeMap::new()).unwrap();
        let s = q.stable();
        assert_eq!(s.nodes.len(), 1);
    }

    #[test]
    fn duplicate_arrows_rejected() {
        let nodes = vec![
            ARNode { id: "a".into(), label: "a".into(), dim: 1, injective: false, boundary: false },
            ARNode { id: "b".into(), label: "b".into(), dim: 1, injective: false, boundary: false },
        ];
        let arrows = vec![
            ARArrow { src: "a".into(), dst: "b".into() },
            ARArrow { src: "a".into(), dst: "b".into() },
        ];
        assert!(ARQuiver::new(nodes, arrows, BTreeMap::new()).is_err());
    }

    #[test]
    fn empty_quiver_exports() {
        let q = ARQuiver::new(vec![], vec![], BTreeMap::new()).unwrap();
        assert!(q.to_dot().starts_with("digraph"));
        assert!(q.to_json().contains("\"nodes\": []"));
        assert_eq!(q.to_ascii(&GridLayout::default()), "");
    }

    #[test]
    fn fault_injection_mesh_lint() {
        // Hand-built mesh 0 -> m -> x -> t -> 0 with translation m -> t;
        // deleting one arrow must produce exactly one violation.
        let nodes = vec![
            ARNode { id: "m".into(), label: "m".into(), dim: 1, injective: false, boundary: false },
            ARNode { id: "x".into(), label: "x".into(), dim: 2, injective: false, boundary: false },
            ARNode { id: "t".into(), label: "t".into(), dim: 1, injective: false, boundary: false },
        ];
        let arrows = vec![
            ARArrow { src: "m".into(), dst: "x".into() },
            ARArrow { src: "x".into(), dst: "t".into() },
        ];
        let mut tr = BTreeMap::new();
        tr.insert("m".to_string(), "t".to_string());
        let ok = ARQuiver::new(nodes.clone(), arrows.clone(), tr.clone()).unwrap();
        assert!(ok.mesh_lint().is_empty());
        let broken = ARQuiver::new(nodes, vec![arrows[1].clone()], tr).unwrap();
        assert_eq!(broken.mesh_lint().len(), 1);
    }
}
