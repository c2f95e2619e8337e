#pragma once

#include <limits>

#include "oecsim/net/topology.hpp"
#include "oecsim/sim/rng.hpp"

namespace oecsim {

struct TierParams {
    double mean_ms = 0.0;
    double dev_ms = 0.0;  // standard deviation of the one-way delay
};

// Three-tier one-way latency model. Defaults are the measured-network
// parameters the experiments use: intra-zone 5ms/2ms, inter-zone 10ms/3ms,
// device-to-cloud 50ms/6ms (mean / std dev).
class LatencyModel {
public:
    LatencyModel()
        : intra_{5.0, 2.0}, inter_{10.0, 3.0}, cloud_{50.0, 6.0} {}

    LatencyModel(TierParams intra, TierParams inter, TierParams cloud);

    const TierParams& params(LatencyTier tier) const;

    // One draw of one-way delay in ms. Normal with the tier's parameters,
    // re-sampled while negative, so the result is >= 0 and the mean stays
    // within a fraction of a percent of nominal.
    double sample_one_way_ms(LatencyTier tier, RngStream& rng) const;

private:
    TierParams intra_, inter_, cloud_;
};

constexpr double kInfiniteBandwidth = std::numeric_limits<double>::infinity();

// Serialization delay in ms for a payload over the given bandwidth.
// Zero for an infinite pipe or an empty payload.
double transfer_time_ms(std::uint64_t payload_bytes, double bandwidth_bytes_per_s);

}  // namespace oecsim
