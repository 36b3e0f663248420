#include "bjsp/json_io.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bjsp {

namespace {

constexpr const char* kFormat = "bjsp-v1";

void require_format(const nlohmann::json& doc) {
    if (!doc.contains("format") || doc.at("format") != kFormat)
        throw std::invalid_argument("expected format \"bjsp-v1\"");
}

}  // namespace

std::string instance_to_json(const Instance& inst) {
    nlohmann::ordered_json doc;
    doc["format"] = kFormat;
    doc["m"] = inst.m();
    doc["g"] = inst.g();
    doc["p"] = inst.p();
    return doc.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    require_format(doc);
    return validate_instance(doc.at("m").get<int>(), doc.at("g").get<int>(),
                             doc.at("p").get<std::vector<int>>());
}

std::string schedule_to_json(const Schedule& sched) {
    nlohmann::ordered_json doc;
    doc["format"] = kFormat;
    nlohmann::ordered_json starts = nlohmann::ordered_json::object();
    for (int j = 0; j < sched.n(); ++j)
        starts[std::to_string(j + 1)] = sched.start[j];
    doc["starts"] = starts;
    if (sched.machine) {
        nlohmann::ordered_json machines = nlohmann::ordered_json::object();
        for (int j = 0; j < sched.n(); ++j)
            machines[std::to_string(j + 1)] = (*sched.machine)[j];
        doc["machines"] = machines;
    }
    return doc.dump(2) + "\n";
}

Schedule schedule_from_json(const std::string& text, const Instance& inst) {
    nlohmann::json doc = nlohmann::json::parse(text);
    require_format(doc);
    const auto& starts = doc.at("starts");
    if (static_cast<int>(starts.size()) != inst.n())
        throw std::invalid_argument("schedule must cover every job exactly once");

    Schedule sched;
    sched.proc = inst.p();
    sched.start.assign(inst.n(), 0);
    for (auto it = starts.begin(); it != starts.end(); ++it) {
        int j = std::stoi(it.key());
        if (j < 1 || j > inst.n())
            throw std::invalid_argument("start keys must be 1..n");
        sched.start[j - 1] = it.value().get<int>();
    }
    if (doc.contains("machines")) {
        std::vector<int> machines(inst.n(), 0);
        for (auto it = doc.at("machines").begin(); it != doc.at("machines").end(); ++it) {
            int j = std::stoi(it.key());
            if (j < 1 || j > inst.n())
                throw std::invalid_argument("machine keys must be 1..n");
            machines[j - 1] = it.value().get<int>();
        }
        sched.machine = std::move(machines);
    }
    return sched;
}

Instance load_instance(const std::string& path) {
    return instance_from_json(load_text(path));
}

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

std::string load_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace bjsp
