//! Deleting templates for the four template classes and their three variants.
//!
//! The 38 base templates and the errata edits are literal tables under
//! `data/`; see `TEMPLATES.md` at the repository root for how each table maps
//! to the pictured templates. A table block looks like
//!
//! ```text
//! template d7 class D p1=0,0,1 p2=0,0,-1
//! z=1
//! 0..
//! 0..
//! 000
//! z=0
//! 001
//! 010
//! 000
//! z=-1
//! ???
//! ?.?
//! ???
//! ```
//!
//! Planes run from top (largest `z`) to bottom, rows from north to south and
//! characters from west to east. `1` is an object cell, `0` background, `.`
//! don't care and `?` a member of the at-least-one-object group. The centre
//! of the `z=0` plane is the candidate point and is always written `1`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::volume::{cell_index, BinaryVolume, Point3};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CellRequirement {
    Object,
    Background,
    DontCare,
}

impl CellRequirement {
    fn symbol(self) -> char {
        match self {
            CellRequirement::Object => '1',
            CellRequirement::Background => '0',
            CellRequirement::DontCare => '.',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TemplateClass {
    A,
    B,
    C,
    D,
}

impl fmt::Display for TemplateClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for TemplateClass {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "A" => Ok(TemplateClass::A),
            "B" => Ok(TemplateClass::B),
            "C" => Ok(TemplateClass::C),
            "D" => Ok(TemplateClass::D),
            _ => Err(format!("unknown template class `{s}`")),
        }
    }
}

/// Which template family to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// 38 templates; Class D leaves `(p1, p2)` unconstrained.
    OriginalMaSonka,
    /// 62 templates; each Class D template split on `(p1, p2)`.
    Corrected,
    /// `Corrected` with the errata edits applied to seven `dX-2` templates.
    CorrectedErrata,
}

impl Variant {
    pub const ALL: [Variant; 3] =
        [Variant::OriginalMaSonka, Variant::Corrected, Variant::CorrectedErrata];

    pub fn name(self) -> &'static str {
        match self {
            Variant::OriginalMaSonka => "original",
            Variant::Corrected => "corrected",
            Variant::CorrectedErrata => "corrected-errata",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "original" | "ma-sonka" | "original-ma-sonka" => Ok(Variant::OriginalMaSonka),
            "corrected" => Ok(Variant::Corrected),
            "corrected-errata" | "errata" => Ok(Variant::CorrectedErrata),
            other => Err(Error::UnknownVariant(other.to_string())),
        }
    }
}

/// A ternary mask over the neighbourhood of a candidate point at the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Template {
    id: String,
    class: TemplateClass,
    cells: BTreeMap<Point3, CellRequirement>,
    at_least_one_object: Vec<Point3>,
    requires_simple_center: bool,
    p1p2: Option<(Point3, Point3)>,
    compiled: Compiled,
}

/// Bit masks over the 3x3x3 block plus any cells beyond it.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
struct Compiled {
    object: u32,
    background: u32,
    any_of: u32,
    outer: Vec<(Point3, bool)>,
}

fn in_block(o: Point3) -> bool {
    o.x.abs() <= 1 && o.y.abs() <= 1 && o.z.abs() <= 1
}

impl Template {
    /// Builds a template, checking the structural rules every template obeys.
    pub fn new(
        id: impl Into<String>,
        class: TemplateClass,
        cells: impl IntoIterator<Item = (Point3, CellRequirement)>,
        at_least_one_object: Vec<Point3>,
        p1p2: Option<(Point3, Point3)>,
    ) -> std::result::Result<Self, String> {
        let id = id.into();
        let cells: BTreeMap<_, _> = cells
            .into_iter()
            .filter(|&(_, r)| r != CellRequirement::DontCare)
            .collect();
        if cells.contains_key(&Point3::ORIGIN) {
            return Err(format!("{id}: the candidate point cannot carry a requirement"));
        }
        let mut group = at_least_one_object;
        group.sort();
        group.dedup();
        if group.iter().any(|o| cells.contains_key(o) || *o == Point3::ORIGIN) {
            return Err(format!("{id}: '?' cells overlap fixed cells"));
        }
        let is_d = class == TemplateClass::D;
        if group.is_empty() == is_d {
            return Err(format!("{id}: '?' group must be present exactly for Class D"));
        }
        if p1p2.is_some() != is_d {
            return Err(format!("{id}: (p1, p2) must be given exactly for Class D"));
        }
        if let Some((a, b)) = p1p2 {
            if a.norm2() != 1 || b.norm2() != 1 || a == b {
                return Err(format!("{id}: p1 and p2 must be distinct 6-neighbours"));
            }
        }
        let mut compiled = Compiled::default();
        for (&o, &r) in &cells {
            if in_block(o) {
                let bit = 1 << cell_index(o);
                match r {
                    CellRequirement::Object => compiled.object |= bit,
                    CellRequirement::Background => compiled.background |= bit,
                    CellRequirement::DontCare => {}
                }
            } else {
                compiled.outer.push((o, r == CellRequirement::Object));
            }
        }
        for &o in &group {
            if !in_block(o) {
                return Err(format!("{id}: '?' cells must lie in the 3x3x3 block"));
            }
            compiled.any_of |= 1 << cell_index(o);
        }
        Ok(Template {
            id,
            class,
            cells,
            at_least_one_object: group,
            requires_simple_center: is_d,
            p1p2,
            compiled,
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn class(&self) -> TemplateClass {
        self.class
    }

    pub fn at_least_one_object(&self) -> &[Point3] {
        &self.at_least_one_object
    }

    pub fn requires_simple_center(&self) -> bool {
        self.requires_simple_center
    }

    pub fn p1p2_offsets(&self) -> Option<(Point3, Point3)> {
        self.p1p2
    }

    /// Requirement at offset `o` (the origin reports `Object`).
    pub fn cell(&self, o: Point3) -> CellRequirement {
        if o == Point3::ORIGIN {
            return CellRequirement::Object;
        }
        self.cells.get(&o).copied().unwrap_or(CellRequirement::DontCare)
    }

    /// Object and background cells, sorted by offset.
    pub fn fixed_cells(&self) -> impl Iterator<Item = (Point3, CellRequirement)> + '_ {
        self.cells.iter().map(|(&o, &r)| (o, r))
    }

    /// Smallest box holding the 3x3x3 block and every constrained cell.
    pub fn bounds(&self) -> (Point3, Point3) {
        let mut lo = Point3::new(-1, -1, -1);
        let mut hi = Point3::new(1, 1, 1);
        for &o in self.cells.keys() {
            lo = Point3::new(lo.x.min(o.x), lo.y.min(o.y), lo.z.min(o.z));
            hi = Point3::new(hi.x.max(o.x), hi.y.max(o.y), hi.z.max(o.z));
        }
        (lo, hi)
    }

    /// Cell test against a precomputed neighbourhood mask of `p`; the simple-point
    /// requirement is not checked here.
    #[inline]
    pub fn cells_match(&self, bits: u32, vol: &BinaryVolume, p: Point3) -> bool {
        let c = &self.compiled;
        bits & c.object == c.object
            && bits & c.background == 0
            && (c.any_of == 0 || bits & c.any_of != 0)
            && c.outer.iter().all(|&(o, obj)| vol.get(p + o) == obj)
    }

    fn with_cell(&self, id: String, o: Point3, r: CellRequirement) -> Template {
        let mut cells = self.cells.clone();
        cells.insert(o, r);
        let group = self.at_least_one_object.iter().copied().filter(|&g| g != o).collect();
        Template::new(id, self.class, cells, group, self.p1p2)
            .expect("derived template keeps base invariants")
    }
}

/// Answers whether a point is simple; Class D templates consult it.
pub trait SimpleOracle {
    fn is_simple(&self, vol: &BinaryVolume, p: Point3, bits: u32) -> bool;
}

/// The topological-number test from [`crate::verify::simple`].
#[derive(Debug, Clone, Copy, Default)]
pub struct TopologicalSimple;

impl SimpleOracle for TopologicalSimple {
    fn is_simple(&self, _vol: &BinaryVolume, _p: Point3, bits: u32) -> bool {
        crate::verify::simple::is_simple_bits(bits)
    }
}

impl<F: Fn(&BinaryVolume, Point3) -> bool> SimpleOracle for F {
    fn is_simple(&self, vol: &BinaryVolume, p: Point3, _bits: u32) -> bool {
        self(vol, p)
    }
}

/// Whether `t` matches at object point `p`.
pub fn matches(
    t: &Template,
    vol: &BinaryVolume,
    p: Point3,
    oracle: &impl SimpleOracle,
) -> Result<bool> {
    vol.require_object(p)?;
    let bits = vol.neighborhood_bits(p);
    Ok(t.cells_match(bits, vol, p) && (!t.requires_simple_center || oracle.is_simple(vol, p, bits)))
}

/// An immutable, ordered template family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemplateSet {
    variant: Variant,
    templates: Vec<Template>,
}

impl TemplateSet {
    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn templates(&self) -> &[Template] {
        &self.templates
    }

    pub fn len(&self) -> usize {
        self.templates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.templates.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&Template> {
        self.templates.iter().find(|t| t.id == id)
    }

    pub fn count_class(&self, class: TemplateClass) -> usize {
        self.templates.iter().filter(|t| t.class == class).count()
    }

    /// First matching template for a precomputed mask. The simple test runs at
    /// most once, and only when a Class D template's cells match.
    pub fn first_match_bits(
        &self,
        bits: u32,
        vol: &BinaryVolume,
        p: Point3,
        oracle: &impl SimpleOracle,
    ) -> Option<&Template> {
        let mut simple: Option<bool> = None;
        self.templates.iter().find(|t| {
            t.cells_match(bits, vol, p)
                && (!t.requires_simple_center
                    || *simple.get_or_insert_with(|| oracle.is_simple(vol, p, bits)))
        })
    }

    /// Id of the first matching template in set order, if any.
    pub fn matches_any(
        &self,
        vol: &BinaryVolume,
        p: Point3,
        oracle: &impl SimpleOracle,
    ) -> Result<Option<&Template>> {
        vol.require_object(p)?;
        let bits = vol.neighborhood_bits(p);
        Ok(self.first_match_bits(bits, vol, p, oracle))
    }

    /// Human-readable dump, one block per template.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for t in &self.templates {
            out.push_str(&format_template(t));
            out.push('\n');
        }
        out
    }
}

const BASE_TABLE: &str = include_str!("../data/base_templates.txt");
const ERRATA_TABLE: &str = include_str!("../data/errata.txt");

fn base_templates() -> &'static [Template] {
    static BASE: OnceLock<Vec<Template>> = OnceLock::new();
    BASE.get_or_init(|| parse_templates(BASE_TABLE).expect("embedded template table is valid"))
}

/// Builds the literal template family for `variant`.
pub fn build_template_set(variant: Variant) -> TemplateSet {
    let base = base_templates();
    let mut templates: Vec<Template> =
        base.iter().filter(|t| t.class != TemplateClass::D).cloned().collect();
    let class_d = base.iter().filter(|t| t.class == TemplateClass::D);
    match variant {
        Variant::OriginalMaSonka => templates.extend(class_d.cloned()),
        Variant::Corrected | Variant::CorrectedErrata => {
            let errata = if variant == Variant::CorrectedErrata {
                Some(parse_errata(ERRATA_TABLE).expect("embedded errata table is valid"))
            } else {
                None
            };
            for d in class_d {
                for t in split_p1p2(d) {
                    let edited = errata.as_ref().and_then(|e| e.apply(&t));
                    templates.push(edited.unwrap_or(t));
                }
            }
        }
    }
    TemplateSet { variant, templates }
}

/// `dX` into `dX-1`, `dX-2`, `dX-3` with `(p1, p2)` fixed to `(0,0)`, `(0,1)`, `(1,0)`.
pub fn split_p1p2(t: &Template) -> [Template; 3] {
    use CellRequirement::{Background as B, Object as O};
    let (p1, p2) = t.p1p2.expect("Class D template carries (p1, p2)");
    let make = |n: u32, a: CellRequirement, b: CellRequirement| {
        let once = t.with_cell(format!("{}-{n}", t.id), p1, a);
        let id = once.id.clone();
        once.with_cell(id, p2, b)
    };
    [make(1, B, B), make(2, B, O), make(3, O, B)]
}

// ---------------------------------------------------------------------------
// Table format

pub fn format_template(t: &Template) -> String {
    let mut s = format!("template {} class {}", t.id, t.class);
    if let Some((a, b)) = t.p1p2 {
        s.push_str(&format!(" p1={},{},{} p2={},{},{}", a.x, a.y, a.z, b.x, b.y, b.z));
    }
    s.push('\n');
    let (lo, hi) = t.bounds();
    for z in (lo.z..=hi.z).rev() {
        s.push_str(&format!("z={z}\n"));
        for y in (lo.y..=hi.y).rev() {
            for x in lo.x..=hi.x {
                let o = Point3::new(x, y, z);
                let ch = if t.at_least_one_object.contains(&o) { '?' } else { t.cell(o).symbol() };
                s.push(ch);
            }
            s.push('\n');
        }
    }
    s
}

fn parse_point(s: &str) -> Option<Point3> {
    let v: Vec<i64> = s.split(',').map(|c| c.trim().parse().ok()).collect::<Option<_>>()?;
    (v.len() == 3).then(|| Point3::new(v[0], v[1], v[2]))
}

struct Lines<'a> {
    inner: std::iter::Peekable<std::iter::Enumerate<std::str::Lines<'a>>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines { inner: text.lines().enumerate().peekable() }
    }

    /// Next meaningful line, skipping blanks and `#` comments.
    fn next(&mut self) -> Option<(usize, &'a str)> {
        loop {
            let (i, l) = self.inner.next()?;
            let l = l.split('#').next().unwrap_or("").trim();
            if !l.is_empty() {
                return Some((i + 1, l));
            }
        }
    }

    fn peek(&mut self) -> Option<&'a str> {
        while let Some(&(_, l)) = self.inner.peek() {
            let t = l.split('#').next().unwrap_or("").trim();
            if t.is_empty() {
                self.inner.next();
            } else {
                return Some(t);
            }
        }
        None
    }
}

fn table_err(line: usize, msg: impl Into<String>) -> Error {
    Error::TemplateTable { line, msg: msg.into() }
}

type Planes = Vec<(Point3, char)>;

/// Reads `z=K` planes until the next non-plane line. Rows start at `y=1`.
fn parse_planes(lines: &mut Lines<'_>, header_line: usize) -> Result<Planes> {
    let mut out = Vec::new();
    let mut rows_per_plane = None;
    while let Some(l) = lines.peek() {
        let Some(zs) = l.strip_prefix("z=") else { break };
        let (line, _) = lines.next().expect("peeked");
        let z: i64 = zs.parse().map_err(|_| table_err(line, "bad plane header"))?;
        let mut rows = Vec::new();
        while let Some(r) = lines.peek() {
            if r.starts_with("z=") || r.starts_with("template") || r.starts_with("errata") {
                break;
            }
            let (line, r) = lines.next().expect("peeked");
            if r.chars().count() != 3 {
                return Err(table_err(line, "rows must have three cells"));
            }
            rows.push(r);
        }
        if rows.len() < 3 || *rows_per_plane.get_or_insert(rows.len()) != rows.len() {
            return Err(table_err(line, "planes must have the same number (>= 3) of rows"));
        }
        for (ri, r) in rows.iter().enumerate() {
            for (xi, ch) in r.chars().enumerate() {
                out.push((Point3::new(xi as i64 - 1, 1 - ri as i64, z), ch));
            }
        }
    }
    if out.is_empty() {
        return Err(table_err(header_line, "template has no planes"));
    }
    Ok(out)
}

fn build_from_planes(
    id: &str,
    class: TemplateClass,
    planes: &Planes,
    p1p2: Option<(Point3, Point3)>,
    line: usize,
) -> Result<Template> {
    let mut cells = Vec::new();
    let mut group = Vec::new();
    for &(o, ch) in planes {
        if o == Point3::ORIGIN {
            if ch != '1' {
                return Err(table_err(line, format!("{id}: candidate cell must be '1'")));
            }
            continue;
        }
        match ch {
            '1' => cells.push((o, CellRequirement::Object)),
            '0' => cells.push((o, CellRequirement::Background)),
            '.' => {}
            '?' => group.push(o),
            other => return Err(table_err(line, format!("{id}: unexpected cell '{other}'"))),
        }
    }
    Template::new(id, class, cells, group, p1p2).map_err(|m| table_err(line, m))
}

/// Parses a table of `template` blocks (the dump format).
pub fn parse_templates(text: &str) -> Result<Vec<Template>> {
    let mut lines = Lines::new(text);
    let mut out = Vec::new();
    while let Some((line, header)) = lines.next() {
        let words: Vec<&str> = header.split_whitespace().collect();
        if words.len() < 4 || words[0] != "template" || words[2] != "class" {
            return Err(table_err(line, "expected `template <id> class <A|B|C|D> ...`"));
        }
        let class: TemplateClass = words[3].parse().map_err(|m: String| table_err(line, m))?;
        let mut p1 = None;
        let mut p2 = None;
        for w in &words[4..] {
            if let Some(v) = w.strip_prefix("p1=") {
                p1 = parse_point(v);
            } else if let Some(v) = w.strip_prefix("p2=") {
                p2 = parse_point(v);
            } else {
                return Err(table_err(line, format!("unknown attribute `{w}`")));
            }
        }
        let p1p2 = match (p1, p2) {
            (Some(a), Some(b)) => Some((a, b)),
            (None, None) => None,
            _ => return Err(table_err(line, "p1 and p2 must be given together")),
        };
        let planes = parse_planes(&mut lines, line)?;
        out.push(build_from_planes(words[1], class, &planes, p1p2, line)?);
    }
    Ok(out)
}

/// Edits applied to selected `dX-2` templates.
#[derive(Debug, Clone)]
pub struct Errata {
    edits: BTreeMap<String, ErrataEdit>,
}

#[derive(Debug, Clone)]
enum ErrataEdit {
    /// Add an object cell one step beyond the block in the given direction.
    Extend(Point3),
    /// Replace the cell layout; the '?' group is carried over from the template.
    Replace(Planes),
}

impl Errata {
    pub fn edited_ids(&self) -> impl Iterator<Item = &str> {
        self.edits.keys().map(String::as_str)
    }

    fn apply(&self, t: &Template) -> Option<Template> {
        let edit = self.edits.get(&t.id)?;
        Some(match edit {
            ErrataEdit::Extend(dir) => {
                let o = Point3::new(dir.x * 2, dir.y * 2, dir.z * 2);
                t.with_cell(t.id.clone(), o, CellRequirement::Object)
            }
            ErrataEdit::Replace(planes) => {
                let mut cells = Vec::new();
                for &(o, ch) in planes {
                    if o == Point3::ORIGIN {
                        continue;
                    }
                    match ch {
                        '1' => cells.push((o, CellRequirement::Object)),
                        '0' => cells.push((o, CellRequirement::Background)),
                        _ => {}
                    }
                }
                let fixed: Vec<Point3> = cells.iter().map(|c| c.0).collect();
                let group =
                    t.at_least_one_object.iter().copied().filter(|g| !fixed.contains(g)).collect();
                Template::new(t.id.clone(), t.class, cells, group, t.p1p2)
                    .expect("errata replacement keeps base invariants")
            }
        })
    }
}

/// Parses `errata <id> extend <direction>` and `errata <id> replace` + planes.
pub fn parse_errata(text: &str) -> Result<Errata> {
    let mut lines = Lines::new(text);
    let mut edits = BTreeMap::new();
    while let Some((line, header)) = lines.next() {
        let words: Vec<&str> = header.split_whitespace().collect();
        let edit = match words.as_slice() {
            ["errata", _, "extend", dir] => {
                let d = crate::volume::Direction::AXES
                    .into_iter()
                    .find(|d| d.name() == *dir)
                    .ok_or_else(|| table_err(line, format!("unknown direction `{dir}`")))?;
                ErrataEdit::Extend(d.offset())
            }
            ["errata", _, "replace"] => {
                let planes = parse_planes(&mut lines, line)?;
                if !planes.iter().any(|&(o, ch)| o == Point3::ORIGIN && ch == '1') {
                    return Err(table_err(line, "replacement must mark the candidate '1'"));
                }
                if let Some(&(_, ch)) = planes.iter().find(|&&(_, ch)| !matches!(ch, '0' | '1' | 'd' | '.')) {
                    return Err(table_err(line, format!("unexpected cell '{ch}' (use 0, 1 or d)")));
                }
                ErrataEdit::Replace(planes)
            }
            _ => return Err(table_err(line, "expected `errata <id> extend <dir>|replace`")),
        };
        edits.insert(words[1].to_string(), edit);
    }
    Ok(Errata { edits })
}

/// The errata edits bundled with the crate.
pub fn bundled_errata() -> Errata {
    parse_errata(ERRATA_TABLE).expect("embedded errata table is valid")
}
