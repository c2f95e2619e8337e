#include "oecsim/net/topology.hpp"

#include <stdexcept>
#include <string>

namespace oecsim {

const char* tier_name(LatencyTier tier) {
    switch (tier) {
        case LatencyTier::IntraZone: return "intra_zone";
        case LatencyTier::InterZone: return "inter_zone";
        case LatencyTier::DeviceToCloud: return "cloud";
    }
    return "?";
}

void Topology::add_node(NodeId id, ZoneId zone) {
    if (id == cloud_) throw std::logic_error("add_node: id collides with the cloud");
    if (!zone_of_.emplace(id, zone).second) {
        throw std::logic_error("add_node: duplicate node id " + std::to_string(id));
    }
}

ZoneId Topology::zone_of(NodeId id) const {
    if (id == cloud_) return kNoZone;
    auto it = zone_of_.find(id);
    if (it == zone_of_.end()) {
        throw std::out_of_range("zone_of: unknown node id " + std::to_string(id));
    }
    return it->second;
}

void Topology::attach(NodeId device, NodeId parent) {
    if (!has_node(device) || !has_node(parent)) {
        throw std::out_of_range("attach: unknown node id");
    }
    attachments_[device] = parent;
}

NodeId Topology::parent_of(NodeId device) const {
    auto it = attachments_.find(device);
    if (it == attachments_.end()) {
        throw std::out_of_range("parent_of: device " + std::to_string(device) +
                                " has no attachment");
    }
    return it->second;
}

LatencyTier Topology::classify(NodeId src, NodeId dst) const {
    if (src == cloud_ || dst == cloud_) {
        // both must exist; zone_of throws on unknown ids
        if (src != cloud_) (void)zone_of(src);
        if (dst != cloud_) (void)zone_of(dst);
        return LatencyTier::DeviceToCloud;
    }
    return zone_of(src) == zone_of(dst) ? LatencyTier::IntraZone : LatencyTier::InterZone;
}

}  // namespace oecsim
