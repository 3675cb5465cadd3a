#pragma once

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

#include "netdrift/adaptive.hpp"

namespace netdrift {

/// Initial node states are drawn independently from uniform [low, high].
struct InitStateSpec {
    double low = 0.0;
    double high = 1.0;
};

/// Order of the three operations within one simulation iteration.
/// The default runs the diffusion step first so the drift rate recorded
/// before it refers to the same topology the recorded aggregates describe.
enum class OpOrder {
    diffuse_rewire_noise,
    diffuse_noise_rewire,
    rewire_diffuse_noise,
    rewire_noise_diffuse,
    noise_diffuse_rewire,
    noise_rewire_diffuse,
};

std::string_view to_string(OpOrder order) noexcept;
/// Accepts the hyphen-separated spellings produced by to_string, e.g.
/// "diffuse-rewire-noise". Throws ParseError on anything else.
OpOrder parse_op_order(std::string_view text);

struct SimConfig {
    std::uint32_t n = 0;
    std::uint64_t m = 0;
    double c = 0.001;
    RewireParams rewire;
    NoiseParams noise;
    std::uint64_t iterations = 2000;
    std::uint64_t seed = 1;
    std::uint64_t snapshot_every = 0;  // 0 = no snapshots
    InitStateSpec init_state;
    OpOrder op_order = OpOrder::diffuse_rewire_noise;
};

struct SweepSpec {
    SimConfig base;
    std::vector<double> p_values;
    std::vector<double> alpha_values;
    std::uint32_t replicates = 10;
    /// Run length of every sweep cell; delta_s compares the global average at
    /// this iteration against iteration 0.
    std::uint64_t measure_at = 2000;
};

/// Throw ValidationError naming the first violated constraint.
void validate(const SimConfig& config);
void validate(const SweepSpec& spec);

/// Parse and validate a UTF-8 JSON config file. Unknown keys anywhere in the
/// document raise ParseError naming the key; malformed JSON raises ParseError
/// with the parser's position; constraint violations raise ValidationError.
SimConfig load_config(const std::filesystem::path& path);
SweepSpec load_sweep(const std::filesystem::path& path);

}  // namespace netdrift
