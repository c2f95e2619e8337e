#pragma once

#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "oecsim/sim/time.hpp"

namespace oecsim {

enum class EventKind : std::uint8_t {
    Arrival,          // a device emits a fresh request
    SendComplete,     // a message (request, reply, upload leg) reaches its endpoint
    ServiceComplete,  // a node finishes serving a request
    ChurnDown,
    ChurnUp,
    LeaseExpiry,
    MonitorTick,
};

// What Event::target indexes into. The spec's event kinds are shared between
// request traffic and upload traffic, so the target carries its own table tag.
enum class EntityKind : std::uint8_t { None, Node, Request, Upload, Lease };

struct Event {
    SimTime fire_at = 0;
    std::uint64_t seq = 0;  // stamped by the queue; FIFO tie-break
    EventKind kind = EventKind::Arrival;
    EntityKind target_kind = EntityKind::None;
    std::uint64_t target = 0;
    std::uint32_t epoch = 0;  // staleness tombstone for rescheduled work
};

// Min-heap on (fire_at, seq). Owns the simulated clock: popping an event
// advances the clock to its timestamp, so time never runs backwards.
class EventQueue {
public:
    SimTime now() const { return now_; }
    bool empty() const { return heap_.empty(); }
    std::size_t size() const { return heap_.size(); }

    void schedule(Event ev) {
        if (ev.fire_at < now_) {
            throw std::logic_error("schedule: event at t=" + std::to_string(ev.fire_at) +
                                   "us lies before clock t=" + std::to_string(now_) + "us");
        }
        ev.seq = next_seq_++;
        heap_.push(ev);
    }

    std::optional<Event> pop_next() {
        if (heap_.empty()) return std::nullopt;
        Event ev = heap_.top();
        heap_.pop();
        now_ = ev.fire_at;
        return ev;
    }

private:
    struct Later {
        bool operator()(const Event& a, const Event& b) const {
            if (a.fire_at != b.fire_at) return a.fire_at > b.fire_at;
            return a.seq > b.seq;
        }
    };

    SimTime now_ = 0;
    std::uint64_t next_seq_ = 0;
    std::priority_queue<Event, std::vector<Event>, Later> heap_;
};

}  // namespace oecsim
