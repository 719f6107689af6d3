#pragma once

#include <string>

#include "facewalk/kernel.hpp"

namespace facewalk {

// Graph interchange format:
// {"area_side": num, "u": num, "seed": int, "nodes": [{"id","x","y"}...],
//  "edges": [[a,b]...], "planar": bool}, edges listed once, smaller id first.
std::string graph_to_json(const GeometricGraph& g);
GeometricGraph graph_from_json(const std::string& text);

void save_graph(const GeometricGraph& g, const std::string& path);
GeometricGraph load_graph(const std::string& path);

// One JSON object per executed step, for trace files (JSON Lines).
std::string trace_event_to_json(const TraceEvent& ev);

}  // namespace facewalk
