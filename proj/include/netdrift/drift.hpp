#pragma once

#include <span>
#include <vector>

#include "netdrift/dynamics.hpp"
#include "netdrift/graph.hpp"

namespace netdrift {

/// Per-node drift coefficients: v_i = (sum over neighbors j of 1/k_j) - 1,
/// and 0 for isolated nodes. Entries sum to zero on every graph; v is
/// identically zero on regular graphs.
using DriftVector = std::vector<double>;

DriftVector drift_vector(const Graph& g);
void drift_vector_into(const Graph& g, std::span<double> v);

/// Instantaneous change rate of the global state sum under social diffusion:
/// c * (v dot s). Its sign predicts the drift direction, and one discrete
/// step changes the sum by exactly this amount (up to rounding).
/// Computed in one O(m) pass without materializing v.
double drift_rate(const Graph& g, const StateVector& s, double c);

/// Pearson correlation between the drift vector and the state; 0 by
/// convention whenever either side has zero variance.
double state_degree_correlation(const Graph& g, const StateVector& s);

/// Pearson correlation with the same zero-variance convention.
double pearson_correlation(std::span<const double> a, std::span<const double> b);

}  // namespace netdrift
