#pragma once

#include <vector>

#include "facewalk/faces.hpp"

namespace facewalk {

enum class Hand { L, R };

inline Hand opposite(Hand h) { return h == Hand::L ? Hand::R : Hand::L; }
inline char hand_char(Hand h) { return h == Hand::L ? 'L' : 'R'; }

enum class TokenMode { FaceMode, GreedyMode };

enum class TokenKind { Data, Traceback, SessionData, Cleanup };

// Pair of session endpoints; every node handling a token learns the (s,d) line.
struct Session {
    NodeId source = kInvalidNode;
    NodeId dest = kInvalidNode;

    Session() = default;
    Session(NodeId s, NodeId d) : source(s), dest(d) {
        if (s == d) throw std::invalid_argument("Session: source must differ from dest");
    }
};

// The routed message. Hand and face identify the traversal; the path is
// simulation bookkeeping for metrics, not protocol state.
struct Token {
    TokenKind kind = TokenKind::Data;
    TokenMode mode = TokenMode::FaceMode;
    Hand hand = Hand::R;
    NodeId source = kInvalidNode;
    NodeId dest = kInvalidNode;
    FaceId face;
    double entry_dist = 0.0;          // distance to d of the crossing that opened this face
    bool end_of_session = false;      // final session message clears stored directions
    std::vector<NodeId> path;         // nodes visited since the source, ends at current holder

    bool matches_pair(const Token& o) const {
        return kind == o.kind && source == o.source && dest == o.dest && face == o.face &&
               hand == opposite(o.hand);
    }
};

}  // namespace facewalk
