#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace oecsim {

using NodeId = std::uint32_t;
using ZoneId = std::int32_t;

constexpr ZoneId kNoZone = -1;  // the cloud sits outside every zone

enum class LatencyTier : std::uint8_t { IntraZone, InterZone, DeviceToCloud };

const char* tier_name(LatencyTier tier);

// Zone placement plus the tree of attachments: every device hangs off exactly
// one edge node (or the cloud in the cloud-only deployment) and every edge
// node hangs off the cloud.
class Topology {
public:
    explicit Topology(NodeId cloud_id) : cloud_(cloud_id) {}

    NodeId cloud() const { return cloud_; }

    void add_node(NodeId id, ZoneId zone);
    bool has_node(NodeId id) const { return id == cloud_ || zone_of_.count(id) > 0; }
    ZoneId zone_of(NodeId id) const;

    void attach(NodeId device, NodeId parent);
    NodeId parent_of(NodeId device) const;
    const std::unordered_map<NodeId, NodeId>& attachments() const { return attachments_; }

    // Tier of the link between two endpoints: any cloud endpoint is
    // DeviceToCloud, same zone is IntraZone, otherwise InterZone.
    // Symmetric in its arguments.
    LatencyTier classify(NodeId src, NodeId dst) const;

private:
    NodeId cloud_;
    std::unordered_map<NodeId, ZoneId> zone_of_;
    std::unordered_map<NodeId, NodeId> attachments_;
};

}  // namespace oecsim
