//! Surgery descriptions of `K^n_{r,s}` on the chain links L7 and C7.
//!
//! On L7 each Dehn twist `τ_c^k` of the word `τ_b^{-r} ∘ τ_a^{s} ∘ τ_b^{-n}`
//! becomes `(1/k, -1/k)` surgery on the push-off pair `c₋ ∪ c₊`, framed by
//! the fiber; the knot itself is the unfilled middle component `L0 = a`.
//! On C7 the exterior of the same knot is the filling of six components
//! along `r, -s, n, -n-1, s, -r`.
//!
//! Export format, one record per line, `\n`-terminated:
//!
//! ```text
//! link <name> params r=<r> s=<s> n=<n>
//! # <note>                                (zero or more)
//! component <label> slope <m>/<n>         (or: component <label> UNFILLED)
//! ```

use std::fmt::{self, Write as _};

use num_bigint::BigInt;

use crate::arith::ProjectiveRational;
use crate::curves::FamilyParams;
use crate::error::{precondition, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LinkName {
    L7,
    C7,
}

impl fmt::Display for LinkName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LinkName::L7 => "L7",
            LinkName::C7 => "C7",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SurgerySlope {
    Filled(ProjectiveRational),
    Unfilled,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Component {
    pub label: String,
    pub slope: SurgerySlope,
}

impl Component {
    fn filled(label: impl Into<String>, slope: ProjectiveRational) -> Self {
        Self { label: label.into(), slope: SurgerySlope::Filled(slope) }
    }

    fn unfilled(label: impl Into<String>) -> Self {
        Self { label: label.into(), slope: SurgerySlope::Unfilled }
    }
}

/// Which fourth C7 slope to emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum C7Variant {
    /// `-n-1`, as in the filling statement.
    #[default]
    Stated,
    /// `-n+1`, as labelled in the surgery diagram.
    Figure,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SurgeryDescription {
    pub link: LinkName,
    pub params: FamilyParams,
    pub components: Vec<Component>,
    pub notes: Vec<String>,
}

impl SurgeryDescription {
    pub fn validate(&self) -> Result<()> {
        if self.components.len() != 7 {
            return Err(precondition(format!("{} needs 7 components, got {}", self.link, self.components.len())));
        }
        let unfilled = self.components.iter().filter(|c| c.slope == SurgerySlope::Unfilled).count();
        if unfilled != 1 {
            return Err(precondition(format!("{} needs exactly one unfilled component, got {unfilled}", self.link)));
        }
        Ok(())
    }

    pub fn filled_slopes(&self) -> impl Iterator<Item = &ProjectiveRational> {
        self.components.iter().filter_map(|c| match &c.slope {
            SurgerySlope::Filled(q) => Some(q),
            SurgerySlope::Unfilled => None,
        })
    }

    pub fn slope_of(&self, label: &str) -> Option<&SurgerySlope> {
        self.components.iter().find(|c| c.label == label).map(|c| &c.slope)
    }
}

fn reciprocal(k: i64) -> ProjectiveRational {
    ProjectiveRational::new(1, k).expect("k != 0 checked by caller")
}

fn int_slope(k: impl Into<BigInt>) -> ProjectiveRational {
    ProjectiveRational::from_integer(k)
}

/// L7 description: push-off pairs of `b` (outer, `k = -r`), `a` (`k = s`)
/// and `b` (inner, `k = -n`), with `c₋ ↦ 1/k` and `c₊ ↦ -1/k`.
pub fn l7_description(p: &FamilyParams) -> Result<SurgeryDescription> {
    let twists = [("L3", "outer b", -p.r()), ("L2", "a", p.s()), ("L1", "inner b", -p.n())];
    for (_, curve, k) in twists {
        if k == 0 {
            return Err(Error::DegenerateTwist { curve });
        }
    }
    let [(_, _, outer), (_, _, mid), (_, _, inner)] = twists;
    let components = vec![
        Component::filled("L-3", reciprocal(outer)),
        Component::filled("L-2", reciprocal(mid)),
        Component::filled("L-1", reciprocal(inner)),
        Component::unfilled("L0"),
        Component::filled("L1", reciprocal(-inner)),
        Component::filled("L2", reciprocal(-mid)),
        Component::filled("L3", reciprocal(-outer)),
    ];
    Ok(SurgeryDescription {
        link: LinkName::L7,
        params: *p,
        components,
        notes: vec![
            "L0 is the knot K^n = a; L-i, Li are the negative and positive push-offs".into(),
            "slopes are framed by the fiber".into(),
        ],
    })
}

/// C7 description: slopes `r, -s, n, -n∓1, s, -r` on components 1..6 and
/// the knot `K*` as component 7.
pub fn c7_description(p: &FamilyParams, variant: C7Variant) -> SurgeryDescription {
    let (r, s, n) = (BigInt::from(p.r()), BigInt::from(p.s()), BigInt::from(p.n()));
    let fourth = match variant {
        C7Variant::Stated => -&n - 1,
        C7Variant::Figure => -&n + 1,
    };
    let slopes = [r.clone(), -s.clone(), n, fourth, s, -r];
    let mut components: Vec<Component> = slopes
        .into_iter()
        .enumerate()
        .map(|(i, k)| Component::filled((i + 1).to_string(), int_slope(k)))
        .collect();
    components.push(Component::unfilled("7"));

    let mut notes = vec![
        "component 7 is the knot K*".into(),
        "the meridian and fiber framing of K^n correspond to the longitude and meridian of K*".into(),
    ];
    if variant == C7Variant::Figure {
        notes.push("variant: fourth slope -n+1".into());
    }
    SurgeryDescription { link: LinkName::C7, params: *p, components, notes }
}

pub fn export(d: &SurgeryDescription) -> String {
    let mut out = String::new();
    let p = &d.params;
    // writes into a String are infallible
    let _ = writeln!(out, "link {} params r={} s={} n={}", d.link, p.r(), p.s(), p.n());
    for note in &d.notes {
        let _ = writeln!(out, "# {}", note.trim_end());
    }
    for c in &d.components {
        match &c.slope {
            SurgerySlope::Filled(q) => {
                let _ = writeln!(out, "component {} slope {}", c.label, q);
            }
            SurgerySlope::Unfilled => {
                let _ = writeln!(out, "component {} UNFILLED", c.label);
            }
        }
    }
    out
}
