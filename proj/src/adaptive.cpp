#include "netdrift/adaptive.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "netdrift/errors.hpp"

namespace netdrift {
namespace {

/// Discrete sampler over nonnegative weights via cumulative sums and binary
/// search. Zero-weight entries are never drawn as long as one positive
/// weight exists; a degenerate weight vector falls back to uniform.
class WeightedSampler {
public:
    explicit WeightedSampler(const std::vector<double>& weights) : cum_(weights) {
        double total = 0.0;
        for (double& entry : cum_) {
            total += entry;
            entry = total;
        }
        if (!(total > 0.0) || !std::isfinite(total)) {
            for (std::size_t i = 0; i < cum_.size(); ++i) {
                cum_[i] = static_cast<double>(i + 1);
            }
            total = cum_.empty() ? 0.0 : cum_.back();
        }
        total_ = total;
    }

    std::size_t draw(Rng& rng) const {
        const double x = rng.uniform_double() * total_;
        const auto it = std::upper_bound(cum_.begin(), cum_.end(), x);
        std::size_t i;
        if (it == cum_.end()) {
            // x rounded up to the total; step back over any zero-weight tail
            i = cum_.size() - 1;
            while (i > 0 && cum_[i] == cum_[i - 1]) --i;
        } else {
            i = static_cast<std::size_t>(it - cum_.begin());
        }
        return i;
    }

private:
    std::vector<double> cum_;
    double total_ = 0.0;
};

void check_rewire_params(const RewireParams& params) {
    if (!(params.p >= 0.0 && params.p <= 1.0)) {
        raise(Errc::validation_error, "rewire: p must be in [0, 1]");
    }
    if (!std::isfinite(params.alpha)) {
        raise(Errc::validation_error, "rewire: alpha must be finite");
    }
    if (params.retry_cap < 1) {
        raise(Errc::validation_error, "rewire: retry_cap must be at least 1");
    }
}

}  // namespace

std::vector<double> preferential_weights(const StateVector& s, double alpha) {
    const std::size_t n = s.size();
    std::vector<double> w(n, 1.0);
    if (n == 0 || alpha == 0.0) return w;

    constexpr double kFloor = 1e-12;
    constexpr double kCeil = 1e300;
    std::vector<double> base(n);
    for (std::size_t i = 0; i < n; ++i) {
        // fmax sends NaN states to the floor as well
        base[i] = std::fmin(std::fmax(s[i], kFloor), kCeil);
    }

    // Dividing by the extreme entry maps the weights into [0, 1] with an
    // exact 1 at the reference node, so pow never overflows however large
    // alpha is. Samplers normalize, so the common factor is immaterial.
    const double ref = alpha > 0.0 ? *std::max_element(base.begin(), base.end())
                                   : *std::min_element(base.begin(), base.end());
    for (std::size_t i = 0; i < n; ++i) {
        const double ratio = base[i] / ref;
        w[i] = alpha == 1.0 ? ratio : std::pow(ratio, alpha);
    }

    for (const double value : w) {
        if (value > 0.0 && std::isfinite(value)) return w;
    }
    std::fill(w.begin(), w.end(), 1.0);
    return w;
}

NodePair random_absent_pair(const Graph& g, Rng& rng) {
    if (g.edge_count() >= g.max_edge_count()) {
        raise(Errc::graph_full, "no absent pair: graph is complete");
    }
    const std::uint64_t n = g.node_count();
    for (;;) {
        const auto u = static_cast<NodeId>(rng.uniform_index(n));
        const auto v = static_cast<NodeId>(rng.uniform_index(n));
        if (u == v || g.has_edge(u, v)) continue;
        return u < v ? NodePair{u, v} : NodePair{v, u};
    }
}

void rewire_step_inplace(Graph& g, const StateVector& s, const RewireParams& params, Rng& rng) {
    if (s.size() != g.node_count()) {
        raise(Errc::dimension_mismatch,
              "rewire_step: state length " + std::to_string(s.size()) +
                  " does not match node count " + std::to_string(g.node_count()));
    }
    check_rewire_params(params);
    const auto m = static_cast<double>(g.edge_count());
    const auto r = static_cast<std::size_t>(std::llround(params.p * m));
    if (r == 0) return;

    for (std::size_t t = 0; t < r; ++t) {
        g.remove_edge_at(static_cast<std::size_t>(rng.uniform_index(g.edge_count())));
    }

    const WeightedSampler sampler(preferential_weights(s, params.alpha));
    for (std::size_t t = 0; t < r; ++t) {
        bool placed = false;
        for (int attempt = 0; attempt < params.retry_cap; ++attempt) {
            const auto u = static_cast<NodeId>(sampler.draw(rng));
            const auto v = static_cast<NodeId>(sampler.draw(rng));
            if (u == v || g.has_edge(u, v)) continue;
            g.add_edge(u, v);
            placed = true;
            break;
        }
        if (!placed) {
            const auto [u, v] = random_absent_pair(g, rng);
            g.add_edge(u, v);
        }
    }
}

Graph rewire_step(const Graph& g, const StateVector& s, const RewireParams& params, Rng& rng) {
    Graph out = g;
    rewire_step_inplace(out, s, params, rng);
    return out;
}

void apply_noise_inplace(StateVector& s, const NoiseParams& params, Rng& rng) {
    if (!params.enabled) return;
    if (!(params.sigma >= 0.0)) {
        raise(Errc::validation_error, "apply_noise: sigma must be >= 0");
    }
    if (params.sigma == 0.0) return;
    for (double& value : s) value += rng.normal(0.0, params.sigma);
}

StateVector apply_noise(const StateVector& s, const NoiseParams& params, Rng& rng) {
    StateVector out = s;
    apply_noise_inplace(out, params, rng);
    return out;
}

}  // namespace netdrift
