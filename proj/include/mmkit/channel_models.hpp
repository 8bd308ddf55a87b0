// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "mmkit/channel_trace.hpp"
#include "mmkit/scenario.hpp"

namespace mmkit {

/// Single-ray geometric line-of-sight channel: each entry is a unit-modulus
/// phasor from the exact path length between the terminal antenna and the
/// base-station element. Frequency blocks use carriers offset by
/// block_bandwidth_hz. Fully deterministic.
ChannelTrace generate_los(const ScenarioConfig& config, unsigned threads = 1);

/// Rayleigh fading: every (block, stream, antenna) path is an independent
/// sum of num_sinusoids sinusoids with uniformly spaced arrival angles and
/// per-path random phases, seeded from rng_seed and the path indices so the
/// result is reproducible for any thread count.
ChannelTrace generate_jakes(const ScenarioConfig& config, unsigned threads = 1);

/// Dispatches on config.model.
ChannelTrace generate(const ScenarioConfig& config, unsigned threads = 1);

} // namespace mmkit
