#pragma once

#include "bjsp/instance.hpp"
#include "bjsp/schedule.hpp"

#include <string>

namespace bjsp {

/// Instance file: {"format": "bjsp-v1", "m": int, "g": int, "p": [int...]}.
std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);

/// Schedule file: {"format": "bjsp-v1", "starts": {"1": s, ...},
/// "machines": {...}} (machines optional).  Processing times are rejoined
/// from the instance on load.
std::string schedule_to_json(const Schedule& sched);
Schedule schedule_from_json(const std::string& text, const Instance& inst);

Instance load_instance(const std::string& path);
void save_text(const std::string& path, const std::string& text);
std::string load_text(const std::string& path);

}  // namespace bjsp
