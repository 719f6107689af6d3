#include "facewalk/kernel.hpp"

#include <algorithm>
#include <limits>

namespace facewalk {

size_t FifoScheduler::pick(const std::vector<std::pair<NodeId, size_t>>& refs,
                           const std::vector<SendQueue>& queues) {
    size_t best = 0;
    std::uint64_t best_seq = std::numeric_limits<std::uint64_t>::max();
    for (size_t i = 0; i < refs.size(); ++i) {
        const auto& qt = queues[static_cast<size_t>(refs[i].first)].items()[refs[i].second];
        if (qt.seq < best_seq) {
            best_seq = qt.seq;
            best = i;
        }
    }
    return best;
}

size_t RandomScheduler::pick(const std::vector<std::pair<NodeId, size_t>>& refs,
                             const std::vector<SendQueue>& queues) {
    (void)queues;
    std::uniform_int_distribution<size_t> pickd(0, refs.size() - 1);
    return pickd(rng_);
}

const DeliveryRecord* RunStats::first_delivery() const {
    const DeliveryRecord* best = nullptr;
    for (const auto& d : deliveries) {
        if (!best) {
            best = &d;
            continue;
        }
        const auto key = [](const DeliveryRecord& r) {
            return std::tuple<std::uint32_t, int, std::uint64_t>(
                r.causal_depth, r.token.hand == Hand::L ? 0 : 1, r.step);
        };
        if (key(d) < key(*best)) best = &d;
    }
    return best;
}

std::optional<std::uint32_t> RunStats::delivery_causal_depth() const {
    const auto* d = first_delivery();
    if (!d) return std::nullopt;
    return d->causal_depth;
}

Simulation::Simulation(int node_count, Handler handler)
    : queues_(static_cast<size_t>(node_count)), handler_(std::move(handler)) {}

void Simulation::seed(NodeId from, NodeId to, Token t) {
    QueuedToken qt;
    qt.token = std::move(t);
    qt.from = from;
    qt.to = to;
    qt.seq = next_seq_++;
    qt.causal_depth = 1;
    qt.enq_step = stats_.steps;
    queues_[static_cast<size_t>(from)].push(std::move(qt));
}

void Simulation::send(NodeId to, Token t) {
    QueuedToken qt;
    qt.token = std::move(t);
    qt.from = current_;
    qt.to = to;
    qt.seq = next_seq_++;
    qt.causal_depth = current_depth_ + 1;
    qt.enq_step = stats_.steps;
    queues_[static_cast<size_t>(current_)].push(std::move(qt));
}

void Simulation::record_delivery(const Token& t) {
    stats_.deliveries.push_back({t, current_depth_, stats_.steps});
}

bool Simulation::quiescent() const {
    for (const auto& q : queues_)
        if (!q.empty()) return false;
    return true;
}

bool Simulation::step(Scheduler& sched) {
    std::vector<std::pair<NodeId, size_t>> refs;
    for (NodeId n = 0; n < static_cast<NodeId>(queues_.size()); ++n)
        for (size_t i = 0; i < queues_[static_cast<size_t>(n)].size(); ++i)
            refs.emplace_back(n, i);
    if (refs.empty()) return false;

    const size_t chosen = sched.pick(refs, queues_);
    const auto [node, idx] = refs[chosen];
    auto& src = queues_[static_cast<size_t>(node)];
    QueuedToken qt = src.items()[idx];
    // Atomic step: dequeue from the sender, then run the receiver's handler.
    src.take_first([&](const QueuedToken& x) { return x.seq == qt.seq; });

    stats_.max_queue_wait = std::max(stats_.max_queue_wait, stats_.steps - qt.enq_step);

    current_ = qt.to;
    current_depth_ = qt.causal_depth;
    annihilated_flag_ = false;
    handler_(*this, qt);
    current_ = kInvalidNode;

    ++stats_.total_messages;
    ++stats_.steps;
    if (trace_) {
        TraceEvent ev;
        ev.step = stats_.steps;
        ev.from = qt.from;
        ev.to = qt.to;
        ev.hand = qt.token.hand;
        ev.face = qt.token.face;
        ev.causal_depth = qt.causal_depth;
        ev.annihilated = annihilated_flag_;
        trace_(ev);
    }
    return true;
}

RunStats Simulation::run(Scheduler& sched, const std::function<std::uint64_t()>& budget) {
    while (!quiescent()) {
        if (stats_.steps >= budget()) {
            stats_.budget_exceeded = true;
            break;
        }
        step(sched);
    }
    return stats_;
}

RunStats Simulation::run(Scheduler& sched, std::uint64_t max_steps) {
    return run(sched, [max_steps] { return max_steps; });
}

}  // namespace facewalk
