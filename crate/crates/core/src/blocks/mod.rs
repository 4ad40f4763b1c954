//! Building blocks: parameterised block families, fixed templates, the
//! 4-set tiling and the special matrices used by the set constructions.

mod lemmas;
mod special;
mod templates;
mod tiling;

use std::ops::Range;

pub use lemmas::{a2, a3, a_alpha, b2_family, b3_family, b4_family, b_family};
pub(crate) use lemmas::a_alpha_or_empty;
pub use special::{c_pair_block, d_block, d_block_from, special_matrices, u_block_77, SpecialContext};
pub use templates::{
    instantiate_template, p2_as_printed, Template, TemplateParams,
};
pub use tiling::{four_set_block, solve_pqr, solve_uvxy, tile_blocks, Tiling};

use crate::array::{Block, SumProfile};
use crate::error::{Error, Result};
use crate::interval::{support_of, SupportSet};

/// A named slice of a family sharing one declared sum profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyClass {
    pub name: &'static str,
    pub profile: SumProfile,
    pub range: Range<usize>,
}

/// An ordered list of blocks with per-class declared profiles and a
/// declared support. Construction fails if any declaration is violated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockFamily {
    members: Vec<Block>,
    classes: Vec<FamilyClass>,
    declared_support: SupportSet,
}

impl BlockFamily {
    /// Builds a family from `(name, profile, members)` groups kept in order.
    pub(crate) fn checked(
        what: &str,
        groups: Vec<(&'static str, SumProfile, Vec<Block>)>,
        declared_support: SupportSet,
    ) -> Result<Self> {
        let mut members = Vec::new();
        let mut classes = Vec::new();
        for (name, profile, blocks) in groups {
            let start = members.len();
            members.extend(blocks);
            classes.push(FamilyClass {
                name,
                profile,
                range: start..members.len(),
            });
        }
        let fam = Self {
            members,
            classes,
            declared_support,
        };
        let problems = fam.mismatches();
        if !problems.is_empty() {
            return Err(Error::self_check(what, problems.join("; ")));
        }
        Ok(fam)
    }

    pub fn members(&self) -> &[Block] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn classes(&self) -> &[FamilyClass] {
        &self.classes
    }

    /// Members of the named class; empty if there is no such class.
    pub fn class(&self, name: &str) -> &[Block] {
        self.classes
            .iter()
            .find(|c| c.name == name)
            .map_or(&[], |c| &self.members[c.range.clone()])
    }

    pub fn declared_support(&self) -> &SupportSet {
        &self.declared_support
    }

    pub fn support(&self) -> SupportSet {
        support_of(&self.members)
    }

    /// Every disagreement between members and declarations.
    pub fn mismatches(&self) -> Vec<String> {
        let mut out = Vec::new();
        for class in &self.classes {
            for i in class.range.clone() {
                let got = self.members[i].sum_profile();
                if got != class.profile {
                    out.push(format!(
                        "member {i} ({}) has profile {:?}/{:?}, declared {:?}/{:?}",
                        class.name, got.row_sums, got.col_sums, class.profile.row_sums, class.profile.col_sums
                    ));
                }
            }
        }
        let support = self.support();
        if !support.is_set() {
            out.push(format!("duplicated values {:?}", support.duplicates()));
        }
        if support.values() != self.declared_support.values() {
            out.push("support differs from the declared union".to_string());
        }
        out
    }
}
