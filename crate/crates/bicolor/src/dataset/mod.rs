//! The sphere-puzzle dataset: verbatim printed tables, an errata overlay,
//! validation of the data against its own stated invariants, and two
//! independent constructions of the folded graph G′ — one by quotienting
//! the 32-vertex graph G along the antipodal covering, one through the
//! pentagon/triple correspondence on O_3. The two routes share no code, so
//! they can cross-check each other.

mod tables;

use crate::cycles::{canonical_cycle, CycleClass, OrientedCycleWord};
use crate::error::{Error, Result};
use crate::graph::BiregularGraph;
use crate::petersen::{build_petersen, induced_color_cycle, theta_correspondence};
use crate::report::ValidationReport;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// One of the 30 sphere faces, written `w_i`: symbol 1..=5, index 1..=6.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceId {
    pub symbol: u8,
    pub index: u8,
}

impl FaceId {
    pub fn parse(text: &str) -> Result<Self> {
        let err = || Error::input(format!("face id `{text}`: expected `symbol_index`"));
        let (s, i) = text.split_once('_').ok_or_else(err)?;
        let symbol: u8 = s.parse().map_err(|_| err())?;
        let index: u8 = i.parse().map_err(|_| err())?;
        if !(1..=5).contains(&symbol) || !(1..=6).contains(&index) {
            return Err(Error::input(format!(
                "face id `{text}`: symbol must be 1..=5, index 1..=6"
            )));
        }
        Ok(FaceId { symbol, index })
    }
}

impl fmt::Display for FaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.symbol, self.index)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexKind {
    Y,
    YPrime,
    X,
    XPrime,
    Z,
    ZPrime,
}

impl VertexKind {
    pub fn is_deg5(self) -> bool {
        matches!(self, VertexKind::Y | VertexKind::YPrime)
    }
}

/// One of the 32 inner vertices: y_0..y_5, y'_0..y'_5 (degree 5) and
/// x_1..x_5, x'_1..x'_5, z_1..z_5, z'_1..z'_5 (degree 3).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InnerVertexName {
    pub kind: VertexKind,
    pub index: u8,
}

impl InnerVertexName {
    pub fn new(kind: VertexKind, index: u8) -> Result<Self> {
        let ok = if kind.is_deg5() {
            index <= 5
        } else {
            (1..=5).contains(&index)
        };
        if !ok {
            return Err(Error::input(format!(
                "vertex index {index} out of range for its kind"
            )));
        }
        Ok(InnerVertexName { kind, index })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let err = || Error::input(format!("vertex name `{text}`: expected like `y_0` or `x'_3`"));
        let (head, idx) = text.split_once('_').ok_or_else(err)?;
        let (letter, primed) = match head.strip_suffix('\'') {
            Some(l) => (l, true),
            None => (head, false),
        };
        let kind = match (letter, primed) {
            ("y", false) => VertexKind::Y,
            ("y", true) => VertexKind::YPrime,
            ("x", false) => VertexKind::X,
            ("x", true) => VertexKind::XPrime,
            ("z", false) => VertexKind::Z,
            ("z", true) => VertexKind::ZPrime,
            _ => return Err(err()),
        };
        let index: u8 = idx.parse().map_err(|_| err())?;
        InnerVertexName::new(kind, index)
    }

    pub fn is_deg5(&self) -> bool {
        self.kind.is_deg5()
    }

    /// Vertex id within its own part of G: degree-5 names fill 0..12
    /// (y_0..y_5 then y'_0..y'_5), degree-3 names fill 0..20
    /// (x_1..x_5, x'_1..x'_5, z_1..z_5, z'_1..z'_5).
    pub fn graph_id(&self) -> usize {
        let i = self.index as usize;
        match self.kind {
            VertexKind::Y => i,
            VertexKind::YPrime => 6 + i,
            VertexKind::X => i - 1,
            VertexKind::XPrime => 5 + (i - 1),
            VertexKind::Z => 10 + (i - 1),
            VertexKind::ZPrime => 15 + (i - 1),
        }
    }
}

impl fmt::Display for InnerVertexName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (letter, primed) = match self.kind {
            VertexKind::Y => ("y", false),
            VertexKind::YPrime => ("y", true),
            VertexKind::X => ("x", false),
            VertexKind::XPrime => ("x", true),
            VertexKind::Z => ("z", false),
            VertexKind::ZPrime => ("z", true),
        };
        write!(
            f,
            "{letter}{}_{}",
            if primed { "'" } else { "" },
            self.index
        )
    }
}

/// Degree-5 vertex names of G in id order.
pub fn deg5_order() -> Vec<InnerVertexName> {
    let mut names = Vec::with_capacity(12);
    for kind in [VertexKind::Y, VertexKind::YPrime] {
        for index in 0..=5 {
            names.push(InnerVertexName { kind, index });
        }
    }
    names
}

/// Degree-3 vertex names of G in id order.
pub fn deg3_order() -> Vec<InnerVertexName> {
    let mut names = Vec::with_capacity(20);
    for kind in [
        VertexKind::X,
        VertexKind::XPrime,
        VertexKind::Z,
        VertexKind::ZPrime,
    ] {
        for index in 1..=5 {
            names.push(InnerVertexName { kind, index });
        }
    }
    names
}

/// A named pentagon class: `y_i` or its companion, rendered `yb_i` in ASCII.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassLabel {
    pub bar: bool,
    pub index: u8,
}

impl ClassLabel {
    pub fn parse(text: &str) -> Result<Self> {
        let err = || Error::input(format!("class label `{text}`: expected `y_i` or `yb_i`"));
        let (head, idx) = text.split_once('_').ok_or_else(err)?;
        let bar = match head {
            "y" => false,
            "yb" => true,
            _ => return Err(err()),
        };
        let index: u8 = idx.parse().map_err(|_| err())?;
        if index > 5 {
            return Err(err());
        }
        Ok(ClassLabel { bar, index })
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y{}_{}", if self.bar { "b" } else { "" }, self.index)
    }
}

/// One printed triangle-path row: end face, degree-5 vertex, degree-3
/// vertex, end face. Both ends carry the row's symbol (its w-color).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct S3PRecord {
    pub end_a: FaceId,
    pub deg5: InnerVertexName,
    pub deg3: InnerVertexName,
    pub end_b: FaceId,
}

impl S3PRecord {
    pub fn symbol(&self) -> u8 {
        self.end_a.symbol
    }

    fn parse(tokens: &[String; 4], row: usize) -> Result<Self> {
        let ctx = |e: Error| Error::input(format!("s3p row {row}: {e}"));
        let rec = S3PRecord {
            end_a: FaceId::parse(&tokens[0]).map_err(ctx)?,
            deg5: InnerVertexName::parse(&tokens[1]).map_err(ctx)?,
            deg3: InnerVertexName::parse(&tokens[2]).map_err(ctx)?,
            end_b: FaceId::parse(&tokens[3]).map_err(ctx)?,
        };
        if rec.end_a.symbol != rec.end_b.symbol {
            return Err(Error::input(format!(
                "s3p row {row}: end faces {} and {} carry different symbols",
                rec.end_a, rec.end_b
            )));
        }
        if !rec.deg5.is_deg5() {
            return Err(Error::input(format!(
                "s3p row {row}: {} is not a degree-5 name",
                rec.deg5
            )));
        }
        if rec.deg3.is_deg5() {
            return Err(Error::input(format!(
                "s3p row {row}: {} is not a degree-3 name",
                rec.deg3
            )));
        }
        Ok(rec)
    }
}

/// Clockwise face list around one inner vertex: 5 faces for degree-5
/// names, 3 for degree-3 names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexFaceRecord {
    pub vertex: InnerVertexName,
    pub faces: Vec<FaceId>,
}

impl VertexFaceRecord {
    fn parse(name: &str, faces: &[String]) -> Result<Self> {
        let vertex = InnerVertexName::parse(name)?;
        let want = if vertex.is_deg5() { 5 } else { 3 };
        if faces.len() != want {
            return Err(Error::input(format!(
                "face list for {vertex}: {} faces, expected {want}",
                faces.len()
            )));
        }
        let faces = faces
            .iter()
            .map(|f| FaceId::parse(f))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| Error::input(format!("face list for {vertex}: {e}")))?;
        Ok(VertexFaceRecord { vertex, faces })
    }
}

/// One printed correction. `original` must match the transcription exactly
/// before `replacement` is swapped in, so an overlay can never silently
/// drift away from the table it claims to fix. S3p rows are addressed by
/// 0-based position in the printed 60-row order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "table", rename_all = "snake_case", deny_unknown_fields)]
pub enum Erratum {
    S3p {
        row: usize,
        original: [String; 4],
        replacement: [String; 4],
        justification: String,
    },
    VertexFaces {
        vertex: String,
        original: Vec<String>,
        replacement: Vec<String>,
        justification: String,
    },
}

impl Erratum {
    pub fn summary(&self) -> String {
        match self {
            Erratum::S3p { row, .. } => format!("s3p row {row}"),
            Erratum::VertexFaces { vertex, .. } => format!("vertex_faces {vertex}"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrataOverlay {
    pub errata: Vec<Erratum>,
}

impl ErrataOverlay {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("overlay serialization cannot fail")
    }
}

/// One pentagon-correspondence display row, verbatim: source label, the
/// five oriented vertex words as printed, and the trailing label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theta5Row {
    pub source: ClassLabel,
    pub words: Vec<[u8; 3]>,
    pub label: ClassLabel,
}

/// One triple-correspondence display row, verbatim: source name and the
/// six oriented vertex words as printed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theta3Row {
    pub source: InnerVertexName,
    pub words: Vec<[u8; 3]>,
}

/// Entry of a printed alternating vertex/face cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathEntry {
    Vertex(InnerVertexName),
    Face(FaceId),
}

/// The full transcription with any errata applied; `applied_errata` keeps
/// the provenance of every accepted correction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GccDataset {
    pub s3p: Vec<S3PRecord>,
    pub vertex_faces: Vec<VertexFaceRecord>,
    pub display1: Vec<(ClassLabel, Vec<u8>)>,
    pub display2: Vec<(InnerVertexName, Vec<u8>)>,
    pub theta5_rows: Vec<Theta5Row>,
    pub theta3_rows: Vec<Theta3Row>,
    pub pentagon_cycles: Vec<Vec<PathEntry>>,
    pub circle_patterns: [[(u8, u8); 4]; 3],
    pub applied_errata: Vec<String>,
}

impl GccDataset {
    pub fn faces_of(&self, v: InnerVertexName) -> Option<&[FaceId]> {
        self.vertex_faces
            .iter()
            .find(|r| r.vertex == v)
            .map(|r| r.faces.as_slice())
    }

    pub fn display1_word(&self, label: ClassLabel) -> Option<&[u8]> {
        self.display1
            .iter()
            .find(|(l, _)| *l == label)
            .map(|(_, w)| w.as_slice())
    }

    pub fn display1_class(&self, label: ClassLabel) -> Option<CycleClass> {
        let word = self.display1_word(label)?;
        let word = OrientedCycleWord::new(word.to_vec()).ok()?;
        Some(canonical_cycle(&word))
    }

    pub fn display2_word(&self, name: InnerVertexName) -> Option<&[u8]> {
        self.display2
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, w)| w.as_slice())
    }

    pub fn display2_subset(&self, name: InnerVertexName) -> Option<[u8; 3]> {
        let w = self.display2_word(name)?;
        if w.len() != 3 {
            return None;
        }
        let mut s = [w[0], w[1], w[2]];
        s.sort_unstable();
        Some(s)
    }
}

fn parse_word(text: &str) -> Result<Vec<u8>> {
    text.chars()
        .map(|c| match c {
            '1'..='5' => Ok(c as u8 - b'0'),
            _ => Err(Error::input(format!(
                "word `{text}`: symbols must be digits 1..=5"
            ))),
        })
        .collect()
}

fn parse_triple(text: &str) -> Result<[u8; 3]> {
    let w = parse_word(text)?;
    if w.len() != 3 {
        return Err(Error::input(format!("word `{text}`: expected 3 symbols")));
    }
    Ok([w[0], w[1], w[2]])
}

fn s3p_token_rows() -> Vec<[String; 4]> {
    tables::S3P
        .lines()
        .map(|line| {
            let t: Vec<&str> = line.split_whitespace().collect();
            assert_eq!(t.len(), 4, "transcribed s3p row must have 4 tokens");
            [t[0].into(), t[1].into(), t[2].into(), t[3].into()]
        })
        .collect()
}

fn vertex_face_token_rows() -> Vec<(String, Vec<String>)> {
    tables::VERTEX_FACES
        .lines()
        .map(|line| {
            let mut t = line.split_whitespace().map(String::from);
            let name = t.next().expect("transcribed face row names a vertex");
            (name, t.collect())
        })
        .collect()
}

/// Builds the dataset from the transcription, applying the overlay if one
/// is given. Every erratum must name an existing row and quote its printed
/// content exactly; parse failures in replacements are load errors.
pub fn load_dataset(overlay: Option<&ErrataOverlay>) -> Result<GccDataset> {
    let mut s3p_rows = s3p_token_rows();
    let mut face_rows = vertex_face_token_rows();
    let mut applied = Vec::new();

    for erratum in overlay.map(|o| o.errata.as_slice()).unwrap_or_default() {
        match erratum {
            Erratum::S3p {
                row,
                original,
                replacement,
                ..
            } => {
                let target = s3p_rows.get_mut(*row).ok_or_else(|| {
                    Error::input(format!("erratum targets nonexistent s3p row {row}"))
                })?;
                if target != original {
                    return Err(Error::input(format!(
                        "erratum for s3p row {row}: printed row is {target:?}, erratum quotes {original:?}"
                    )));
                }
                *target = replacement.clone();
            }
            Erratum::VertexFaces {
                vertex,
                original,
                replacement,
                ..
            } => {
                let target = face_rows
                    .iter_mut()
                    .find(|(name, _)| name == vertex)
                    .ok_or_else(|| {
                        Error::input(format!("erratum targets nonexistent vertex `{vertex}`"))
                    })?;
                if target.1 != *original {
                    return Err(Error::input(format!(
                        "erratum for vertex {vertex}: printed faces are {:?}, erratum quotes {original:?}",
                        target.1
                    )));
                }
                target.1 = replacement.clone();
            }
        }
        applied.push(erratum.summary());
    }

    let s3p = s3p_rows
        .iter()
        .enumerate()
        .map(|(row, tokens)| S3PRecord::parse(tokens, row))
        .collect::<Result<Vec<_>>>()?;
    let vertex_faces = face_rows
        .iter()
        .map(|(name, faces)| VertexFaceRecord::parse(name, faces))
        .collect::<Result<Vec<_>>>()?;

    let display1 = tables::DISPLAY1
        .lines()
        .map(|line| {
            let (label, word) = line.split_once(' ').expect("display row has two fields");
            Ok((ClassLabel::parse(label)?, parse_word(word)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let display2 = tables::DISPLAY2
        .lines()
        .map(|line| {
            let (name, word) = line.split_once(' ').expect("display row has two fields");
            Ok((InnerVertexName::parse(name)?, parse_word(word)?))
        })
        .collect::<Result<Vec<_>>>()?;

    let theta5_rows = tables::THETA5_ROWS
        .lines()
        .map(|line| {
            let t: Vec<&str> = line.split_whitespace().collect();
            assert_eq!(t.len(), 9, "pentagon correspondence row has 9 tokens");
            assert_eq!(t[1], "->");
            assert_eq!(t[7], "=");
            Ok(Theta5Row {
                source: ClassLabel::parse(t[0])?,
                words: t[2..7]
                    .iter()
                    .map(|w| parse_triple(w))
                    .collect::<Result<Vec<_>>>()?,
                label: ClassLabel::parse(t[8])?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let theta3_rows = tables::THETA3_ROWS
        .lines()
        .map(|line| {
            let t: Vec<&str> = line.split_whitespace().collect();
            assert_eq!(t.len(), 8, "triple correspondence row has 8 tokens");
            assert_eq!(t[1], "->");
            Ok(Theta3Row {
                source: InnerVertexName::parse(t[0])?,
                words: t[2..8]
                    .iter()
                    .map(|w| parse_triple(w))
                    .collect::<Result<Vec<_>>>()?,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let pentagon_cycles = tables::PENTAGON_CYCLES
        .lines()
        .map(|line| {
            line.split_whitespace()
                .enumerate()
                .map(|(i, token)| {
                    if i % 2 == 0 {
                        Ok(PathEntry::Vertex(InnerVertexName::parse(token)?))
                    } else {
                        Ok(PathEntry::Face(FaceId::parse(token)?))
                    }
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(GccDataset {
        s3p,
        vertex_faces,
        display1,
        display2,
        theta5_rows,
        theta3_rows,
        pentagon_cycles,
        circle_patterns: tables::CIRCLE_PATTERNS,
        applied_errata: applied,
    })
}

/// The correction overlay shipped with the crate.
pub fn shipped_errata() -> ErrataOverlay {
    ErrataOverlay::from_json(include_str!("../../data/errata.json"))
        .expect("shipped overlay parses")
}

/// Dataset with the shipped corrections applied.
pub fn load_default() -> GccDataset {
    load_dataset(Some(&shipped_errata())).expect("shipped overlay applies cleanly")
}

/// Checks the printed tables against their own stated invariants:
/// per-vertex row counts (`s3p.count`), end-face membership
/// (`s3p.membership`), the two-shared-faces property (`s3p.sharing`),
/// face-word validity (`faces.word`), and display-word distinctness
/// (`display.word`).
pub fn validate_dataset(ds: &GccDataset) -> ValidationReport {
    let mut report = ValidationReport::new();

    // (a) row counts: degree-5 vertices in exactly 5 rows, one per symbol;
    // degree-3 vertices in exactly 3.
    let mut rows_of: BTreeMap<InnerVertexName, Vec<u8>> = BTreeMap::new();
    for rec in &ds.s3p {
        rows_of.entry(rec.deg5).or_default().push(rec.symbol());
        rows_of.entry(rec.deg3).or_default().push(rec.symbol());
    }
    for rec in &ds.vertex_faces {
        let v = rec.vertex;
        let symbols = rows_of.get(&v).cloned().unwrap_or_default();
        let expected = if v.is_deg5() { 5 } else { 3 };
        let mut sorted = symbols.clone();
        sorted.sort_unstable();
        sorted.dedup();
        let one_per_symbol = sorted.len() == symbols.len();
        let full_spread = !v.is_deg5() || sorted == vec![1, 2, 3, 4, 5];
        if symbols.len() != expected || !one_per_symbol || !full_spread {
            report.push(
                "s3p.count",
                v.to_string(),
                format!("occurs in {} rows with symbols {symbols:?}, expected {expected} distinct", symbols.len()),
            );
        }
    }

    // (b) each end face must lie in the adjacent inner vertex's face list.
    for (row, rec) in ds.s3p.iter().enumerate() {
        for (end, vertex) in [(rec.end_a, rec.deg5), (rec.end_b, rec.deg3)] {
            match ds.faces_of(vertex) {
                None => report.push(
                    "s3p.membership",
                    format!("row {row}"),
                    format!("{vertex} has no face list"),
                ),
                Some(faces) if !faces.contains(&end) => report.push(
                    "s3p.membership",
                    format!("row {row}"),
                    format!("end face {end} is not incident to {vertex}"),
                ),
                _ => {}
            }
        }
    }

    // (c) the two inner vertices of a row share exactly two faces.
    for (row, rec) in ds.s3p.iter().enumerate() {
        let (Some(f5), Some(f3)) = (ds.faces_of(rec.deg5), ds.faces_of(rec.deg3)) else {
            continue; // already reported under (b)
        };
        let shared: Vec<FaceId> = f5.iter().copied().filter(|f| f3.contains(f)).collect();
        if shared.len() != 2 {
            report.push(
                "s3p.sharing",
                format!("row {row}"),
                format!(
                    "{} and {} share faces {shared:?}, expected exactly 2",
                    rec.deg5, rec.deg3
                ),
            );
        }
    }

    // (d) face words: distinct faces, and symbols (subindices dropped)
    // forming a valid cycle word — a full permutation at degree-5 vertices.
    for rec in &ds.vertex_faces {
        let mut faces = rec.faces.clone();
        faces.sort_unstable();
        faces.dedup();
        let symbols: Vec<u8> = rec.faces.iter().map(|f| f.symbol).collect();
        let mut sorted = symbols.clone();
        sorted.sort_unstable();
        sorted.dedup();
        let distinct_ok = faces.len() == rec.faces.len() && sorted.len() == symbols.len();
        let spread_ok = !rec.vertex.is_deg5() || sorted == vec![1, 2, 3, 4, 5];
        if !distinct_ok || !spread_ok {
            report.push(
                "faces.word",
                rec.vertex.to_string(),
                format!("face symbols {symbols:?} do not form a valid cycle word"),
            );
        }
    }

    // (e) display words canonicalize to 12 distinct 5-classes and 10
    // distinct 3-subsets.
    let mut classes = BTreeSet::new();
    for (label, word) in &ds.display1 {
        match OrientedCycleWord::new(word.clone()) {
            Err(e) => report.push("display.word", label.to_string(), e.to_string()),
            Ok(w) => {
                if w.len() != 5 || !classes.insert(canonical_cycle(&w)) {
                    report.push(
                        "display.word",
                        label.to_string(),
                        format!("word {word:?} is not a fresh 5-class"),
                    );
                }
            }
        }
    }
    let mut subsets = BTreeSet::new();
    for (name, word) in &ds.display2 {
        let mut s = word.clone();
        s.sort_unstable();
        s.dedup();
        if word.len() != 3 || s.len() != 3 || !subsets.insert(s) {
            report.push(
                "display.word",
                name.to_string(),
                format!("word {word:?} is not a fresh 3-subset"),
            );
        }
    }

    report
}

/// The 32-vertex graph G: 12 degree-5 vertices, 20 degree-3 vertices, one
/// edge per triangle-path row (in row order — edge index equals row
/// index), tagged by the row's symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphereGraph {
    pub graph: BiregularGraph,
    pub y_names: Vec<InnerVertexName>,
    pub x_names: Vec<InnerVertexName>,
}

impl SphereGraph {
    /// Tagged neighbors of a degree-5 vertex, sorted by tag.
    pub fn y_neighbors(&self, y: usize) -> Vec<(InnerVertexName, u8)> {
        let mut v: Vec<(InnerVertexName, u8)> = self
            .graph
            .y_star(y)
            .into_iter()
            .map(|e| {
                let (_, x, tag) = self.graph.edges[e];
                (self.x_names[x], tag)
            })
            .collect();
        v.sort_unstable_by_key(|&(_, tag)| tag);
        v
    }
}

/// Builds G from the rows as loaded. Deliberately total: degree defects in
/// uncorrected data surface through `validate_biregular`, not here.
pub fn build_g(ds: &GccDataset) -> Result<SphereGraph> {
    let edges: Vec<(usize, usize, u8)> = ds
        .s3p
        .iter()
        .map(|rec| (rec.deg5.graph_id(), rec.deg3.graph_id(), rec.symbol()))
        .collect();
    Ok(SphereGraph {
        graph: BiregularGraph::new(12, 20, 5, 3, edges)?,
        y_names: deg5_order(),
        x_names: deg3_order(),
    })
}

/// The antipodal pairing: vertices of G grouped two-by-two by the
/// unoriented class of their face-symbol words. Fibers are listed by
/// smallest member id; that order names the folded graph's vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringMap {
    pub y_pairs: Vec<[usize; 2]>,
    pub x_pairs: Vec<[usize; 2]>,
    pub y_classes: Vec<CycleClass>,
    pub x_classes: Vec<CycleClass>,
}

/// Derives the pairing from face words alone. Errors if any class fails
/// to collect exactly two vertices.
pub fn covering_map(ds: &GccDataset) -> Result<CoveringMap> {
    let group = |names: &[InnerVertexName]| -> Result<(Vec<[usize; 2]>, Vec<CycleClass>)> {
        let mut by_class: BTreeMap<CycleClass, Vec<usize>> = BTreeMap::new();
        for name in names {
            let faces = ds
                .faces_of(*name)
                .ok_or_else(|| Error::input(format!("{name} has no face list")))?;
            let word: Vec<u8> = faces.iter().map(|f| f.symbol).collect();
            let word = OrientedCycleWord::new(word)
                .map_err(|e| Error::input(format!("face word of {name}: {e}")))?;
            by_class
                .entry(canonical_cycle(&word))
                .or_default()
                .push(name.graph_id());
        }
        let mut fibers: Vec<([usize; 2], CycleClass)> = Vec::new();
        for (class, mut ids) in by_class {
            ids.sort_unstable();
            if ids.len() != 2 {
                return Err(Error::input(format!(
                    "face-word class {class} covers {} vertices, expected 2",
                    ids.len()
                )));
            }
            fibers.push(([ids[0], ids[1]], class));
        }
        fibers.sort_unstable_by_key(|(pair, _)| pair[0]);
        Ok(fibers.into_iter().unzip())
    };
    let (y_pairs, y_classes) = group(&deg5_order())?;
    let (x_pairs, x_classes) = group(&deg3_order())?;
    Ok(CoveringMap {
        y_pairs,
        x_pairs,
        y_classes,
        x_classes,
    })
}

impl CoveringMap {
    pub fn y_fiber(&self, y: usize) -> Option<usize> {
        self.y_pairs.iter().position(|p| p.contains(&y))
    }

    pub fn x_fiber(&self, x: usize) -> Option<usize> {
        self.x_pairs.iter().position(|p| p.contains(&x))
    }

    /// Checks that folding G along this pairing is a genuine 2-to-1
    /// covering: every star projects injectively (`cover.local`) and the
    /// two members of each fiber project to the same tagged star
    /// (`cover.star`). Edges inside a fiber cannot occur — fibers live in
    /// one part of the bipartition and edges cross it.
    pub fn check_cover(&self, g: &SphereGraph) -> ValidationReport {
        let mut report = ValidationReport::new();
        let y_proj = |y: usize| -> Vec<(usize, u8)> {
            let mut star: Vec<(usize, u8)> = g
                .graph
                .y_star(y)
                .into_iter()
                .map(|e| {
                    let (_, x, tag) = g.graph.edges[e];
                    (self.x_fiber(x).expect("every x id lies in a fiber"), tag)
                })
                .collect();
            star.sort_unstable();
            star
        };
        let x_proj = |x: usize| -> Vec<(usize, u8)> {
            let mut star: Vec<(usize, u8)> = g
                .graph
                .x_star(x)
                .into_iter()
                .map(|e| {
                    let (y, _, tag) = g.graph.edges[e];
                    (self.y_fiber(y).expect("every y id lies in a fiber"), tag)
                })
                .collect();
            star.sort_unstable();
            star
        };
        let dup = |star: &[(usize, u8)]| star.windows(2).any(|w| w[0] == w[1]);

        for y in 0..g.graph.y_count {
            if dup(&y_proj(y)) {
                report.push(
                    "cover.local",
                    g.y_names[y].to_string(),
                    "two star edges project to the same folded edge",
                );
            }
        }
        for x in 0..g.graph.x_count {
            if dup(&x_proj(x)) {
                report.push(
                    "cover.local",
                    g.x_names[x].to_string(),
                    "two star edges project to the same folded edge",
                );
            }
        }
        for pair in &self.y_pairs {
            if y_proj(pair[0]) != y_proj(pair[1]) {
                report.push(
                    "cover.star",
                    format!("{{{}, {}}}", g.y_names[pair[0]], g.y_names[pair[1]]),
                    "fiber partners project to different tagged stars",
                );
            }
        }
        for pair in &self.x_pairs {
            if x_proj(pair[0]) != x_proj(pair[1]) {
                report.push(
                    "cover.star",
                    format!("{{{}, {}}}", g.x_names[pair[0]], g.x_names[pair[1]]),
                    "fiber partners project to different tagged stars",
                );
            }
        }
        report
    }

    /// The face words force the degree-3 pairing x_i ↔ z'_i and x'_i ↔ z_i,
    /// while the printed pairing statement groups x_i with z_i. One note
    /// per fiber that contradicts the printed claim.
    pub fn discrepancy_notes(&self, g: &SphereGraph) -> Vec<String> {
        let printed_partner = |name: InnerVertexName| {
            let kind = match name.kind {
                VertexKind::Y => VertexKind::YPrime,
                VertexKind::YPrime => VertexKind::Y,
                VertexKind::X => VertexKind::Z,
                VertexKind::Z => VertexKind::X,
                VertexKind::XPrime => VertexKind::ZPrime,
                VertexKind::ZPrime => VertexKind::XPrime,
            };
            InnerVertexName {
                kind,
                index: name.index,
            }
        };
        let mut notes = Vec::new();
        for pair in self.y_pairs.iter().chain(&self.x_pairs) {
            let names = if pair[1] < g.y_names.len() && self.y_pairs.contains(pair) {
                &g.y_names
            } else {
                &g.x_names
            };
            let (a, b) = (names[pair[0]], names[pair[1]]);
            let printed = printed_partner(a);
            if printed != b {
                notes.push(format!(
                    "fiber {{{a}, {b}}}: the printed pairing groups {a} with {printed}; the face words force {b}"
                ));
            }
        }
        notes
    }
}

/// The folded graph G′: 6 degree-5 vertices named by pentagon classes,
/// 10 degree-3 vertices named by 3-subsets, 30 tagged edges sorted by
/// (vertex, tag). Lead printed names are kept as aliases for I/O.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldedGraph {
    pub graph: BiregularGraph,
    pub y_names: Vec<String>,
    pub x_names: Vec<String>,
    pub y_classes: Vec<CycleClass>,
    pub x_subsets: Vec<[u8; 3]>,
}

impl FoldedGraph {
    pub fn y_index_of_class(&self, class: &CycleClass) -> Option<usize> {
        self.y_classes.iter().position(|c| c == class)
    }

    pub fn x_index_of_subset(&self, subset: [u8; 3]) -> Option<usize> {
        self.x_subsets.iter().position(|s| *s == subset)
    }

    /// Tagged neighbors of a degree-5 vertex, sorted by tag.
    pub fn y_neighbors(&self, y: usize) -> Vec<(usize, u8)> {
        let mut v: Vec<(usize, u8)> = self
            .graph
            .y_star(y)
            .into_iter()
            .map(|e| {
                let (_, x, tag) = self.graph.edges[e];
                (x, tag)
            })
            .collect();
        v.sort_unstable_by_key(|&(_, tag)| tag);
        v
    }
}

fn sorted_folded_edges(edges: BTreeSet<(usize, usize, u8)>) -> Vec<(usize, usize, u8)> {
    let mut edges: Vec<(usize, usize, u8)> = edges.into_iter().collect();
    edges.sort_unstable_by_key(|&(y, x, tag)| (y, tag, x));
    edges
}

/// Route one: project G along the covering and deduplicate the projected
/// edges. Total on loaded data — a projection with the wrong preimage
/// count shows up in cross-validation, not as a failure here.
pub fn build_gprime_quotient(ds: &GccDataset) -> Result<FoldedGraph> {
    let g = build_g(ds)?;
    let cover = covering_map(ds)?;
    let mut edges = BTreeSet::new();
    for &(y, x, tag) in &g.graph.edges {
        edges.insert((
            cover.y_fiber(y).expect("every y id lies in a fiber"),
            cover.x_fiber(x).expect("every x id lies in a fiber"),
            tag,
        ));
    }
    let y_names = cover
        .y_pairs
        .iter()
        .map(|p| g.y_names[p[0]].to_string())
        .collect();
    let x_names = cover
        .x_pairs
        .iter()
        .map(|p| g.x_names[p[0]].to_string())
        .collect();
    Ok(FoldedGraph {
        graph: BiregularGraph::new(6, 10, 5, 3, sorted_folded_edges(edges))?,
        y_names,
        x_names,
        y_classes: cover.y_classes,
        x_subsets: cover
            .x_classes
            .iter()
            .map(|c| {
                let w = c.canonical();
                [w[0], w[1], w[2]]
            })
            .collect(),
    })
}

/// Route two: read the six pentagon classes and ten subsets off the
/// display words, then wire y ~ x with tag t whenever the correspondence
/// places x's subset on y's cycle with middle symbol t. Never touches the
/// triangle-path rows or face lists.
pub fn build_gprime_theta(ds: &GccDataset) -> Result<FoldedGraph> {
    let theta = theta_correspondence();
    let mut y_names = Vec::new();
    let mut y_classes = Vec::new();
    for index in 0..=5 {
        let label = ClassLabel { bar: false, index };
        let class = ds
            .display1_class(label)
            .ok_or_else(|| Error::input(format!("no display word for {label}")))?;
        y_names.push(label.to_string());
        y_classes.push(class);
    }
    let mut x_names = Vec::new();
    let mut x_subsets = Vec::new();
    for (name, _) in &ds.display2 {
        let subset = ds
            .display2_subset(*name)
            .ok_or_else(|| Error::input(format!("display word of {name} is not a 3-subset")))?;
        x_names.push(name.to_string());
        x_subsets.push(subset);
    }

    let mut edges = BTreeSet::new();
    for (i, class) in y_classes.iter().enumerate() {
        for (vertex, tag) in theta.star_tags(class)? {
            let subset = theta.graph().vertex(vertex);
            let j = x_subsets
                .iter()
                .position(|s| *s == subset)
                .ok_or_else(|| {
                    Error::input(format!("display words name no vertex for {subset:?}"))
                })?;
            edges.insert((i, j, tag));
        }
    }
    Ok(FoldedGraph {
        graph: BiregularGraph::new(6, 10, 5, 3, sorted_folded_edges(edges))?,
        y_names,
        x_names,
        y_classes,
        x_subsets,
    })
}

/// Builds G′ by both routes and diffs them: vertex rows under
/// `route.vertex`, tagged edges under `route.edge`. Empty report ⇔ the
/// two constructions agree exactly.
pub fn cross_validate_gprime(ds: &GccDataset) -> Result<ValidationReport> {
    let quotient = build_gprime_quotient(ds)?;
    let theta = build_gprime_theta(ds)?;
    let mut report = ValidationReport::new();

    for i in 0..6 {
        if quotient.y_names[i] != theta.y_names[i] || quotient.y_classes[i] != theta.y_classes[i] {
            report.push(
                "route.vertex",
                format!("degree-5 vertex {i}"),
                format!(
                    "folding route has {} = {}, correspondence route {} = {}",
                    quotient.y_names[i],
                    quotient.y_classes[i],
                    theta.y_names[i],
                    theta.y_classes[i]
                ),
            );
        }
    }
    for j in 0..10 {
        if quotient.x_names[j] != theta.x_names[j] || quotient.x_subsets[j] != theta.x_subsets[j] {
            report.push(
                "route.vertex",
                format!("degree-3 vertex {j}"),
                format!(
                    "folding route has {} = {:?}, correspondence route {} = {:?}",
                    quotient.x_names[j],
                    quotient.x_subsets[j],
                    theta.x_names[j],
                    theta.x_subsets[j]
                ),
            );
        }
    }

    let fold_edges: BTreeSet<(usize, usize, u8)> = quotient.graph.edges.iter().copied().collect();
    let theta_edges: BTreeSet<(usize, usize, u8)> = theta.graph.edges.iter().copied().collect();
    for &(y, x, tag) in fold_edges.difference(&theta_edges) {
        report.push(
            "route.edge",
            format!("{} -{tag}- {}", quotient.y_names[y], quotient.x_names[x]),
            "edge appears only in the folding route",
        );
    }
    for &(y, x, tag) in theta_edges.difference(&fold_edges) {
        report.push(
            "route.edge",
            format!("{} -{tag}- {}", theta.y_names[y], theta.x_names[x]),
            "edge appears only in the correspondence route",
        );
    }
    Ok(report)
}

/// One great circle: four triangle-path rows of one symbol whose end-face
/// index pairs trace one of the three printed patterns. Row indices equal
/// G edge indices, which is what the distribution tables lean on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreatCircle {
    pub symbol: u8,
    pub pattern: usize,
    pub rows: Vec<usize>,
}

/// Partitions the 60 rows into 15 circles (5 symbols × 3 patterns).
/// Errors if any row matches zero or several patterns, or a circle does
/// not close with exactly 4 rows.
pub fn great_circles(ds: &GccDataset) -> Result<Vec<GreatCircle>> {
    let pattern_has = |p: usize, a: u8, b: u8| {
        ds.circle_patterns[p]
            .iter()
            .any(|&(u, v)| (u, v) == (a, b) || (u, v) == (b, a))
    };
    let mut circles: Vec<GreatCircle> = (1..=5)
        .flat_map(|symbol| {
            (0..3).map(move |pattern| GreatCircle {
                symbol,
                pattern,
                rows: Vec::new(),
            })
        })
        .collect();
    for (row, rec) in ds.s3p.iter().enumerate() {
        let (a, b) = (rec.end_a.index, rec.end_b.index);
        let matches: Vec<usize> = (0..3).filter(|&p| pattern_has(p, a, b)).collect();
        if matches.len() != 1 {
            return Err(Error::input(format!(
                "s3p row {row}: end pair {{{a}, {b}}} matches {} circle patterns",
                matches.len()
            )));
        }
        let idx = (rec.symbol() as usize - 1) * 3 + matches[0];
        circles[idx].rows.push(row);
    }
    for c in &circles {
        if c.rows.len() != 4 {
            return Err(Error::input(format!(
                "symbol {} pattern {} circle has {} rows, expected 4",
                c.symbol,
                c.pattern,
                c.rows.len()
            )));
        }
    }
    Ok(circles)
}

/// Checks the printed alternating vertex/face cycles: every listed face
/// must lie in the face lists of both flanking vertices.
pub fn pentagon_cycles_check(ds: &GccDataset) -> ValidationReport {
    let mut report = ValidationReport::new();
    for (c, cycle) in ds.pentagon_cycles.iter().enumerate() {
        for (k, entry) in cycle.iter().enumerate() {
            let PathEntry::Face(face) = entry else {
                continue;
            };
            let flanks = [&cycle[k - 1], &cycle[(k + 1) % cycle.len()]];
            for flank in flanks {
                let PathEntry::Vertex(v) = flank else {
                    report.push(
                        "pentagon.structure",
                        format!("cycle {c} entry {k}"),
                        "faces and vertices must alternate",
                    );
                    continue;
                };
                if ds.faces_of(*v).is_none_or(|faces| !faces.contains(face)) {
                    report.push(
                        "pentagon.face",
                        format!("cycle {c} entry {k}"),
                        format!("face {face} is not incident to flanking vertex {v}"),
                    );
                }
            }
        }
    }
    report
}

/// Label-side check of the correspondence displays: the vertices listed in
/// each row must trace a genuine cycle of O_3 whose induced color word is
/// the class the row's label names (for pentagon rows, the trailing label;
/// for triple rows, the source name's own display subset).
pub fn check_theta_displays(ds: &GccDataset) -> ValidationReport {
    let mut report = ValidationReport::new();
    let g = build_petersen();

    let resolve = |words: &[[u8; 3]]| -> std::result::Result<Vec<usize>, String> {
        words
            .iter()
            .map(|w| {
                g.vertex_index(*w)
                    .ok_or_else(|| format!("word {w:?} names no vertex"))
            })
            .collect()
    };

    for row in &ds.theta5_rows {
        let loc = format!("row {}", row.source);
        let cycle = match resolve(&row.words) {
            Err(msg) => {
                report.push("theta5.row", &loc, msg);
                continue;
            }
            Ok(c) => c,
        };
        match induced_color_cycle(&g, &cycle) {
            Err(e) => report.push("theta5.row", &loc, e.to_string()),
            Ok(class) => match ds.display1_class(row.label) {
                None => report.push("theta5.row", &loc, format!("label {} has no display word", row.label)),
                Some(expected) if expected != class => report.push(
                    "theta5.row",
                    &loc,
                    format!("induced word is {class}, but label {} names {expected}", row.label),
                ),
                _ => {}
            },
        }
    }
    for row in &ds.theta3_rows {
        let loc = format!("row {}", row.source);
        let cycle = match resolve(&row.words) {
            Err(msg) => {
                report.push("theta3.row", &loc, msg);
                continue;
            }
            Ok(c) => c,
        };
        match induced_color_cycle(&g, &cycle) {
            Err(e) => report.push("theta3.row", &loc, e.to_string()),
            Ok(class) => match ds.display2_subset(row.source) {
                None => report.push("theta3.row", &loc, "source has no display word".to_string()),
                Some(subset) if CycleClass::of_subset(subset) != class => report.push(
                    "theta3.row",
                    &loc,
                    format!("induced word is {class}, but {} names {subset:?}", row.source),
                ),
                _ => {}
            },
        }
    }
    report
}

/// The pentagon display's source-side naming indexes each listed cycle by
/// the companion of its induced word; one note per row where source and
/// induced label differ. Informational — the label-side check above is
/// the consistent reading.
pub fn theta_display_source_notes(ds: &GccDataset) -> Vec<String> {
    let mut notes = Vec::new();
    for row in &ds.theta5_rows {
        let (Some(src), Some(lbl)) = (
            ds.display1_class(row.source),
            ds.display1_class(row.label),
        ) else {
            continue;
        };
        if src != lbl {
            notes.push(format!(
                "display row {}: the listed cycle's induced word is {}, not {}; the source name indexes the companion cycle",
                row.source, row.label, row.source
            ));
        }
    }
    notes
}
