#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "facewalk/token.hpp"

namespace facewalk {

// Raised when a run trips a protocol assertion (CLI maps it to exit code 2).
struct ProtocolError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A token sitting in its sender's queue, waiting for the scheduler.
struct QueuedToken {
    Token token;
    NodeId from = kInvalidNode;
    NodeId to = kInvalidNode;
    std::uint64_t seq = 0;         // global enqueue order
    std::uint32_t causal_depth = 0;
    std::uint64_t enq_step = 0;    // step count when enqueued (fairness diagnostic)
};

// Per-node ordered multiset of pending outgoing tokens. Only touched inside
// an atomic step; the owning node's handler may inspect and modify it.
class SendQueue {
public:
    bool empty() const { return items_.empty(); }
    size_t size() const { return items_.size(); }
    const std::vector<QueuedToken>& items() const { return items_; }

    void push(QueuedToken qt) { items_.push_back(std::move(qt)); }

    // Removes the first queued token satisfying pred; returns it if found.
    template <typename Pred>
    std::optional<QueuedToken> take_first(Pred pred) {
        for (size_t i = 0; i < items_.size(); ++i) {
            if (pred(items_[i])) {
                QueuedToken out = std::move(items_[i]);
                items_.erase(items_.begin() + static_cast<long>(i));
                return out;
            }
        }
        return std::nullopt;
    }

private:
    std::vector<QueuedToken> items_;
};

// Selection policy over all pending sends. Every pending send must eventually
// be picked (fairness).
class Scheduler {
public:
    virtual ~Scheduler() = default;
    // refs: (node, index into that node's queue), listed node-ascending.
    virtual size_t pick(const std::vector<std::pair<NodeId, size_t>>& refs,
                        const std::vector<SendQueue>& queues) = 0;
    virtual const char* name() const = 0;
};

// Picks the globally oldest enqueued send.
class FifoScheduler final : public Scheduler {
public:
    size_t pick(const std::vector<std::pair<NodeId, size_t>>& refs,
                const std::vector<SendQueue>& queues) override;
    const char* name() const override { return "fifo"; }
};

// Picks uniformly among all pending sends.
class RandomScheduler final : public Scheduler {
public:
    explicit RandomScheduler(std::uint64_t seed) : rng_(seed) {}
    size_t pick(const std::vector<std::pair<NodeId, size_t>>& refs,
                const std::vector<SendQueue>& queues) override;
    const char* name() const override { return "random"; }

private:
    std::mt19937_64 rng_;
};

struct DeliveryRecord {
    Token token;
    std::uint32_t causal_depth = 0;
    std::uint64_t step = 0;
};

struct TraceEvent {
    std::uint64_t step = 0;
    NodeId from = kInvalidNode;
    NodeId to = kInvalidNode;
    Hand hand = Hand::R;
    FaceId face;
    std::uint32_t causal_depth = 0;
    bool annihilated = false;
};

using TraceSink = std::function<void(const TraceEvent&)>;

struct RunStats {
    std::uint64_t total_messages = 0;
    std::uint64_t steps = 0;
    bool budget_exceeded = false;
    std::vector<DeliveryRecord> deliveries;
    std::uint64_t max_queue_wait = 0;  // fairness diagnostic, in steps

    // First delivery by (causal depth, hand L first, step).
    const DeliveryRecord* first_delivery() const;
    bool delivered() const { return !deliveries.empty(); }
    std::optional<std::uint32_t> delivery_causal_depth() const;
};

// Single-run message-passing engine. One step atomically removes a token from
// its sender's queue and executes the receiver's handler; channels hold
// nothing between steps.
class Simulation {
public:
    using Handler = std::function<void(Simulation&, const QueuedToken&)>;

    Simulation(int node_count, Handler handler);

    // Enqueues outside any handler (causal depth 1 on transmission).
    void seed(NodeId from, NodeId to, Token t);

    // Handler-side API.
    void send(NodeId to, Token t);     // from = receiving node of the current step
    SendQueue& queue(NodeId n) { return queues_[static_cast<size_t>(n)]; }
    const SendQueue& queue(NodeId n) const { return queues_[static_cast<size_t>(n)]; }
    void record_delivery(const Token& t);
    void mark_annihilated() { annihilated_flag_ = true; }
    NodeId current() const { return current_; }

    bool quiescent() const;
    // Executes one step; returns false when quiescent.
    bool step(Scheduler& sched);
    // Runs until quiescence or until budget() steps have executed.
    RunStats run(Scheduler& sched, const std::function<std::uint64_t()>& budget);
    RunStats run(Scheduler& sched, std::uint64_t max_steps);

    void set_trace(TraceSink sink) { trace_ = std::move(sink); }
    const RunStats& stats() const { return stats_; }

private:
    std::vector<SendQueue> queues_;
    Handler handler_;
    RunStats stats_;
    TraceSink trace_;
    std::uint64_t next_seq_ = 0;
    NodeId current_ = kInvalidNode;
    std::uint32_t current_depth_ = 0;
    bool annihilated_flag_ = false;
};

}  // namespace facewalk
