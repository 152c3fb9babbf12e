//! Interval representations: consecutive clique orderings, exact rational
//! realizations, and the brute-force endpoint-order space.

mod endpoint;
mod layout;
mod realize;

pub use endpoint::{
    endpoint_orders, for_each_endpoint_order, End, EndpointOrder, MAX_ENDPOINT_ORDER_VERTICES,
};
pub use layout::{
    enumerate_clique_orders, is_interval, layout_ranges, CliqueLayout, CliqueOrders,
    MAX_LAYOUT_CLIQUES,
};
pub use realize::{format_rational, intersection_graph, realize, Rational, Realization};
