//! Fixed templates filled from 4-sets and runs of consecutive integers.
//!
//! Parameters are bases: `w` stands for `[w+4, w+16]_4`, `x` for
//! `[x+2, x+8]_2`, `y` for `[y+1, y+4]` and `z` for `[z+1, z+8]`.

use std::fmt;
use std::str::FromStr;

use crate::array::{Block, SumProfile};
use crate::error::{Error, Result};
use crate::interval::{support_of, SupportSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Template {
    P1,
    P2,
    P3,
    Q1,
    Q2,
    R1,
    L,
    M6,
    Z4Star,
}

impl Template {
    pub const ALL: [Template; 9] = [
        Template::P1,
        Template::P2,
        Template::P3,
        Template::Q1,
        Template::Q2,
        Template::R1,
        Template::L,
        Template::M6,
        Template::Z4Star,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Template::P1 => "P1",
            Template::P2 => "P2",
            Template::P3 => "P3",
            Template::Q1 => "Q1",
            Template::Q2 => "Q2",
            Template::R1 => "R1",
            Template::L => "L",
            Template::M6 => "M6",
            Template::Z4Star => "Z4STAR",
        }
    }

    /// Required list lengths `(w, x, y, z)`.
    pub fn arity(self) -> (usize, usize, usize, usize) {
        match self {
            Template::P1 => (1, 0, 4, 2),
            Template::P2 => (0, 7, 0, 1),
            Template::P3 => (0, 0, 7, 1),
            Template::Q1 => (0, 1, 3, 1),
            Template::Q2 => (1, 0, 1, 2),
            Template::R1 => (0, 1, 1, 1),
            Template::L => (0, 0, 2, 1),
            Template::M6 => (0, 0, 9, 0),
            Template::Z4Star => (0, 0, 4, 0),
        }
    }

    /// The sum profile the filled template must have.
    pub fn profile(self) -> SumProfile {
        let zero = |r: usize, c: usize| SumProfile::new(vec![0; r], vec![0; c]);
        match self {
            Template::P1 | Template::P2 | Template::P3 => zero(6, 6),
            Template::Q1 | Template::Q2 => zero(6, 4),
            Template::R1 => zero(4, 4),
            Template::L => SumProfile::new(vec![2, 0, 1, 3], vec![2, 0, 1, 3]),
            Template::M6 => SumProfile::new(vec![0, 0, 2, 1, 1, 2], vec![0, 0, 0, 2, 2, 2]),
            Template::Z4Star => SumProfile::new(vec![1, -1, -1, 1], vec![0, 0, 0, 0]),
        }
    }
}

impl fmt::Display for Template {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Template {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Template::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown template {s:?}")))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TemplateParams {
    pub w: Vec<i64>,
    pub x: Vec<i64>,
    pub y: Vec<i64>,
    pub z: Vec<i64>,
}

impl TemplateParams {
    /// The support the parameters promise: the union of their sets.
    pub fn expected_support(&self) -> SupportSet {
        let mut s = SupportSet::new();
        for &w in &self.w {
            s.extend((1..=4).map(|k| w + 4 * k));
        }
        for &x in &self.x {
            s.extend((1..=4).map(|k| x + 2 * k));
        }
        for &y in &self.y {
            s.extend((1..=4).map(|k| y + k));
        }
        for &z in &self.z {
            s.extend((1..=8).map(|k| z + k));
        }
        s
    }
}

fn check_arity(t: Template, p: &TemplateParams) -> Result<()> {
    let want = t.arity();
    let got = (p.w.len(), p.x.len(), p.y.len(), p.z.len());
    if want != got {
        return Err(Error::Arity {
            template: t.name(),
            expected: format!("(w,x,y,z) = {want:?}"),
            got: format!("{got:?}"),
        });
    }
    Ok(())
}

fn raw(t: Template, p: &TemplateParams, p2_fixed: bool) -> Result<Block> {
    let w = |i: usize| p.w[i - 1];
    let x = |i: usize| p.x[i - 1];
    let y = |i: usize| p.y[i - 1];
    let z = |i: usize| p.z[i - 1];
    let rows: Vec<Vec<i64>> = match t {
        Template::P1 => vec![
            vec![w(1) + 4, -(w(1) + 8), -(z(1) + 1), z(1) + 3, -(z(1) + 2), z(1) + 4],
            vec![-(w(1) + 12), w(1) + 16, z(1) + 5, -(z(1) + 7), z(1) + 6, -(z(1) + 8)],
            vec![-(z(2) + 1), z(2) + 3, y(1) + 1, -(y(1) + 2), y(3) + 1, -(y(3) + 2)],
            vec![z(2) + 5, -(z(2) + 7), -(y(1) + 3), y(1) + 4, y(4) + 2, -(y(4) + 1)],
            vec![-(z(2) + 2), z(2) + 4, y(2) + 1, -(y(2) + 2), -(y(4) + 4), y(4) + 3],
            vec![z(2) + 6, -(z(2) + 8), -(y(2) + 3), y(2) + 4, -(y(3) + 3), y(3) + 4],
        ],
        Template::P2 => {
            let r1c5 = if p2_fixed { -(x(3) + 4) } else { -(x(2) + 4) };
            vec![
                vec![x(1) + 8, -(x(1) + 2), x(2) + 2, -(x(2) + 4), x(3) + 2, -(x(3) + 6)],
                vec![-(x(1) + 6), x(1) + 4, -(x(2) + 8), x(2) + 6, r1c5, x(3) + 8],
                vec![-(x(4) + 2), x(4) + 4, -(x(5) + 2), x(5) + 4, z(1) + 4, -(z(1) + 8)],
                vec![x(4) + 6, -(x(4) + 8), x(5) + 6, -(x(5) + 8), z(1) + 6, -(z(1) + 2)],
                vec![x(6) + 2, -(x(6) + 4), x(7) + 8, -(x(7) + 2), -(z(1) + 5), z(1) + 1],
                vec![-(x(6) + 8), x(6) + 6, -(x(7) + 6), x(7) + 4, -(z(1) + 3), z(1) + 7],
            ]
        }
        Template::P3 => vec![
            vec![y(1) + 4, -(y(1) + 1), y(2) + 1, -(y(2) + 2), y(3) + 1, -(y(3) + 3)],
            vec![-(y(1) + 3), y(1) + 2, -(y(2) + 4), y(2) + 3, -(y(3) + 2), y(3) + 4],
            vec![-(y(4) + 1), y(4) + 2, -(y(5) + 1), y(5) + 2, y(6) + 1, -(y(6) + 3)],
            vec![y(4) + 3, -(y(4) + 4), y(5) + 3, -(y(5) + 4), -(y(6) + 2), y(6) + 4],
            vec![y(7) + 1, -(y(7) + 2), z(1) + 8, z(1) + 2, -(z(1) + 3), -(z(1) + 6)],
            vec![-(y(7) + 4), y(7) + 3, -(z(1) + 7), -(z(1) + 1), z(1) + 5, z(1) + 4],
        ],
        Template::Q1 => vec![
            vec![x(1) + 2, -(x(1) + 4), -(y(1) + 1), y(1) + 3],
            vec![-(x(1) + 6), x(1) + 8, y(1) + 2, -(y(1) + 4)],
            vec![-(y(2) + 1), y(2) + 2, y(3) + 3, -(y(3) + 4)],
            vec![y(2) + 3, -(y(2) + 4), -(y(3) + 1), y(3) + 2],
            vec![z(1) + 8, z(1) + 1, -(z(1) + 5), -(z(1) + 4)],
            vec![-(z(1) + 6), -(z(1) + 3), z(1) + 2, z(1) + 7],
        ],
        Template::Q2 => vec![
            vec![w(1) + 4, -(w(1) + 8), -(z(1) + 1), z(1) + 5],
            vec![-(w(1) + 12), w(1) + 16, z(1) + 2, -(z(1) + 6)],
            vec![-(z(1) + 3), z(1) + 4, y(1) + 1, -(y(1) + 2)],
            vec![z(1) + 7, -(z(1) + 8), -(y(1) + 3), y(1) + 4],
            vec![z(2) + 5, z(2) + 4, -(z(2) + 6), -(z(2) + 3)],
            vec![-(z(2) + 1), -(z(2) + 8), z(2) + 7, z(2) + 2],
        ],
        Template::R1 => vec![
            vec![x(1) + 2, -(x(1) + 6), z(1) + 8, -(z(1) + 4)],
            vec![-(x(1) + 4), x(1) + 8, z(1) + 1, -(z(1) + 5)],
            vec![y(1) + 4, -(y(1) + 3), -(z(1) + 3), z(1) + 2],
            vec![-(y(1) + 2), y(1) + 1, -(z(1) + 6), z(1) + 7],
        ],
        Template::L => vec![
            vec![y(1) + 1, -(y(1) + 2), z(1) + 7, -(z(1) + 4)],
            vec![-(z(1) + 3), -(y(2) + 2), z(1) + 1, y(2) + 4],
            vec![z(1) + 8, y(2) + 1, -(z(1) + 5), -(y(2) + 3)],
            vec![-(y(1) + 4), y(1) + 3, -(z(1) + 2), z(1) + 6],
        ],
        Template::M6 => vec![
            vec![y(1) + 1, -(y(1) + 3), -(y(2) + 1), y(2) + 2, -(y(3) + 1), y(3) + 2],
            vec![-(y(1) + 2), y(1) + 4, y(2) + 3, -(y(2) + 4), y(3) + 3, -(y(3) + 4)],
            vec![-(y(4) + 1), y(4) + 2, y(8) + 1, -(y(7) + 1), y(7) + 4, -(y(8) + 3)],
            vec![y(4) + 3, -(y(4) + 4), -(y(9) + 3), y(7) + 3, -(y(7) + 2), y(9) + 4],
            vec![y(5) + 1, -(y(5) + 3), -(y(8) + 2), y(6) + 4, -(y(6) + 3), y(8) + 4],
            vec![-(y(5) + 2), y(5) + 4, y(9) + 2, -(y(6) + 2), y(6) + 1, -(y(9) + 1)],
        ],
        Template::Z4Star => vec![
            vec![-(y(1) + 1), y(4) + 2, -(y(4) + 4), y(1) + 4],
            vec![y(1) + 3, y(2) + 1, -(y(2) + 3), -(y(1) + 2)],
            vec![-(y(3) + 4), -(y(4) + 1), y(4) + 3, y(3) + 1],
            vec![y(3) + 2, -(y(2) + 2), y(2) + 4, -(y(3) + 3)],
        ],
    };
    Block::from_rows(&rows)
}

/// Self-check shared by [`instantiate_template`]: declared profile and
/// support equal to the union of the parameter sets.
fn check(t: Template, p: &TemplateParams, b: &Block) -> Result<()> {
    let got = b.sum_profile();
    if got != t.profile() {
        return Err(Error::self_check(
            format!("template {t}"),
            format!("sums {:?}/{:?}, expected {:?}/{:?}", got.row_sums, got.col_sums, t.profile().row_sums, t.profile().col_sums),
        ));
    }
    let expected = p.expected_support();
    if !expected.is_set() {
        return Err(Error::self_check(format!("template {t}"), "parameter sets overlap"));
    }
    if support_of([b]) != expected {
        return Err(Error::self_check(
            format!("template {t}"),
            "support is not the union of the parameter sets",
        ));
    }
    Ok(())
}

/// Fills a template. P2 uses the corrected entry `-(x3+4)` in row 2,
/// column 5. Fails if the result breaks its declared profile or support.
pub fn instantiate_template(t: Template, p: &TemplateParams) -> Result<Block> {
    check_arity(t, p)?;
    let b = raw(t, p, true)?;
    check(t, p, &b)?;
    Ok(b)
}

/// P2 exactly as originally printed, with `-(x2+4)` in row 2, column 5.
/// Returns the block together with the outcome of the usual self-check.
pub fn p2_as_printed(p: &TemplateParams) -> Result<(Block, Result<()>)> {
    check_arity(Template::P2, p)?;
    let b = raw(Template::P2, p, false)?;
    let verdict = check(Template::P2, p, &b);
    Ok((b, verdict))
}
