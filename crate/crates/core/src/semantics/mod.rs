//! The semantics catalog behind a single [`evaluate`] entry point.

mod cost;
mod cover;
mod filter;
mod layered;
mod misc;
mod order;
mod run;

use std::fmt;
use std::str::FromStr;

pub use cost::CostTable;
pub use filter::{
    eval_filter_semantics, filter_2ac, filter_acyclic, filter_swc, filter_trail, stream_filter, Filter, FilterFn,
};
pub use misc::log_length_bound;
pub use order::{
    eval_order_semantics, order_bag, order_shms, order_shorter, order_shortlex, order_subwalk, trim, OrderCmp,
    OrderKind, SuitableOrder,
};

use crate::error::{Error, Result};
use crate::graph::Database;
use crate::matcher::{Endpoints, ProductGraph, Resolved, Sink, WalkSet};
use crate::rpq::Regex;

/// Default bound on result size, overridable through `RPQLAB_CAP`.
pub const DEFAULT_CAP: usize = 1_000_000;

/// The result cap in effect: `RPQLAB_CAP` if set to a number, else
/// [`DEFAULT_CAP`].
pub fn default_cap() -> usize {
    std::env::var("RPQLAB_CAP").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_CAP)
}

/// Identifiers of the implemented semantics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SemanticsId {
    Trail,
    Acyclic,
    Swc,
    TwoAc,
    Shortest,
    ShortestTrail,
    Shortlex,
    SubwalkMin,
    MinMultiset,
    Shms,
    Shvc,
    Shec,
    Shac,
    BindingTrail,
    Cheapest,
    LogLength,
    GivingUp,
    Weird,
}

impl SemanticsId {
    pub const ALL: [SemanticsId; 18] = [
        SemanticsId::Trail,
        SemanticsId::Acyclic,
        SemanticsId::Swc,
        SemanticsId::TwoAc,
        SemanticsId::Shortest,
        SemanticsId::ShortestTrail,
        SemanticsId::Shortlex,
        SemanticsId::SubwalkMin,
        SemanticsId::MinMultiset,
        SemanticsId::Shms,
        SemanticsId::Shvc,
        SemanticsId::Shec,
        SemanticsId::Shac,
        SemanticsId::BindingTrail,
        SemanticsId::Cheapest,
        SemanticsId::LogLength,
        SemanticsId::GivingUp,
        SemanticsId::Weird,
    ];

    /// Lowercase command-line token.
    pub fn token(self) -> &'static str {
        match self {
            SemanticsId::Trail => "trail",
            SemanticsId::Acyclic => "acyclic",
            SemanticsId::Swc => "swc",
            SemanticsId::TwoAc => "2ac",
            SemanticsId::Shortest => "shortest",
            SemanticsId::ShortestTrail => "shortest-trail",
            SemanticsId::Shortlex => "shortlex",
            SemanticsId::SubwalkMin => "subwalk-min",
            SemanticsId::MinMultiset => "min-multiset",
            SemanticsId::Shms => "shms",
            SemanticsId::Shvc => "shvc",
            SemanticsId::Shec => "shec",
            SemanticsId::Shac => "shac",
            SemanticsId::BindingTrail => "binding-trail",
            SemanticsId::Cheapest => "cheapest",
            SemanticsId::LogLength => "log-length",
            SemanticsId::GivingUp => "giving-up",
            SemanticsId::Weird => "weird",
        }
    }

    /// Short name as used in tables: `Tr`, `Sh`, `ShVC`, ...
    pub fn short(self) -> &'static str {
        match self {
            SemanticsId::Trail => "Tr",
            SemanticsId::Acyclic => "Ac",
            SemanticsId::Swc => "SWC",
            SemanticsId::TwoAc => "2Ac",
            SemanticsId::Shortest => "Sh",
            SemanticsId::ShortestTrail => "ShT",
            SemanticsId::Shortlex => "ShL",
            SemanticsId::SubwalkMin => "SM",
            SemanticsId::MinMultiset => "MM",
            SemanticsId::Shms => "ShMS",
            SemanticsId::Shvc => "ShVC",
            SemanticsId::Shec => "ShEC",
            SemanticsId::Shac => "ShAC",
            SemanticsId::BindingTrail => "BT",
            SemanticsId::Cheapest => "ChW",
            SemanticsId::LogLength => "LL",
            SemanticsId::GivingUp => "GU",
            SemanticsId::Weird => "WEIRD",
        }
    }

    pub fn filter(self) -> Option<Filter> {
        match self {
            SemanticsId::Trail => Some(Filter::Trail),
            SemanticsId::Acyclic => Some(Filter::Acyclic),
            SemanticsId::Swc => Some(Filter::Swc),
            SemanticsId::TwoAc => Some(Filter::TwoAc),
            _ => None,
        }
    }

    pub fn order(self) -> Option<OrderKind> {
        match self {
            SemanticsId::Shortest => Some(OrderKind::Shorter),
            SemanticsId::Shortlex => Some(OrderKind::Shortlex),
            SemanticsId::SubwalkMin => Some(OrderKind::Subwalk),
            SemanticsId::MinMultiset => Some(OrderKind::Bag),
            SemanticsId::Shms => Some(OrderKind::Shms),
            _ => None,
        }
    }

    pub fn is_filter_based(self) -> bool {
        self.filter().is_some()
    }

    pub fn is_order_based(self) -> bool {
        self.order().is_some()
    }
}

impl fmt::Display for SemanticsId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short())
    }
}

impl FromStr for SemanticsId {
    type Err = Error;

    /// Accepts both the command-line token and the short name.
    fn from_str(s: &str) -> Result<Self> {
        SemanticsId::ALL
            .into_iter()
            .find(|id| id.token() == s || id.short() == s)
            .ok_or_else(|| Error::Input(format!("unknown semantics {s:?}")))
    }
}

/// A semantics together with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemanticsSpec {
    pub id: SemanticsId,
    /// Label costs, used by [`SemanticsId::Cheapest`] only.
    pub costs: Option<CostTable>,
    pub cap: usize,
}

impl SemanticsSpec {
    pub fn new(id: SemanticsId) -> Self {
        SemanticsSpec { id, costs: None, cap: default_cap() }
    }

    pub fn with_costs(mut self, costs: CostTable) -> Self {
        self.costs = Some(costs);
        self
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }
}

impl From<SemanticsId> for SemanticsSpec {
    fn from(id: SemanticsId) -> Self {
        SemanticsSpec::new(id)
    }
}

/// The walks selected by `spec` for `r` on `db`, restricted to `endpoints`.
pub fn evaluate(db: &Database, r: &Regex, spec: &SemanticsSpec, endpoints: &Endpoints) -> Result<WalkSet> {
    let ends = endpoints.resolve(db)?;
    let prod = ProductGraph::new(db, r);
    let mut sink = Sink::new(spec.cap);
    evaluate_into(&prod, spec, &ends, &mut sink)?;
    Ok(sink.into_walkset(db))
}

/// Like [`evaluate`], as index walks.
pub(crate) fn evaluate_indexed(
    db: &Database,
    r: &Regex,
    spec: &SemanticsSpec,
    endpoints: &Endpoints,
) -> Result<std::collections::HashSet<crate::matcher::IWalk>> {
    let ends = endpoints.resolve(db)?;
    let prod = ProductGraph::new(db, r);
    let mut sink = Sink::new(spec.cap);
    evaluate_into(&prod, spec, &ends, &mut sink)?;
    Ok(sink.walks)
}

pub(crate) fn evaluate_into(
    prod: &ProductGraph<'_>,
    spec: &SemanticsSpec,
    ends: &Resolved,
    sink: &mut Sink,
) -> Result<()> {
    use SemanticsId::*;
    match spec.id {
        Trail | Acyclic | Swc | TwoAc => filter::eval_builtin(prod, spec.id.filter().unwrap(), ends, sink),
        Shortest => layered::shortest(prod, ends, sink),
        Shortlex => layered::shortlex(prod, ends, sink),
        ShortestTrail => misc::shortest_trail(prod, ends, sink),
        SubwalkMin | MinMultiset | Shms => {
            order::eval_generic(prod, &SuitableOrder::new(spec.id.order().unwrap()), ends, sink)
        }
        Shvc => cover::vertex_cover(prod, ends, sink),
        Shec => cover::element_cover(prod, ends, sink),
        Shac => cover::atom_cover(prod, ends, sink),
        BindingTrail => run::binding_trail(prod, ends, sink),
        Cheapest => {
            let costs =
                spec.costs.as_ref().ok_or_else(|| Error::Input("cheapest-walk semantics needs a cost table".into()))?;
            let weights = costs.edge_weights(prod.database())?;
            layered::cheapest(prod, &weights, ends, sink)
        }
        LogLength => misc::log_length(prod, ends, sink),
        GivingUp => misc::giving_up(prod, ends, sink),
        Weird => misc::weird(prod, ends, sink),
    }
}
