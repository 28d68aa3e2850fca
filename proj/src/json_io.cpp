#include "csketch/json_io.hpp"

#include <stdexcept>

namespace csketch {

using nlohmann::json;
using nlohmann::ordered_json;

SketchGraph sketch_from_json(const json& j) {
    SketchGraph out;
    for (const auto& jp : j.at("primitives")) {
        Primitive p;
        auto kind = kind_from_name(jp.at("kind").get<std::string>());
        if (!kind) throw std::invalid_argument("unknown primitive kind");
        p.kind = *kind;
        p.params = jp.at("params").get<std::vector<double>>();
        p.construction = jp.value("construction", false);
        out.primitives.push_back(std::move(p));
    }
    if (j.contains("constraints")) {
        for (const auto& jc : j.at("constraints")) {
            auto kind = constraint_kind_from_name(jc.at("kind").get<std::string>());
            if (!kind) throw std::invalid_argument("unknown constraint kind");
            std::optional<double> datum;
            if (jc.contains("datum") && !jc.at("datum").is_null())
                datum = jc.at("datum").get<double>();
            out.constraints.emplace_back(jc.at("i").get<int>(), jc.at("si").get<int>(),
                                         jc.at("j").get<int>(), jc.at("sj").get<int>(), *kind,
                                         datum);
        }
    }
    capture_datums(out);
    return out;
}

ordered_json sketch_to_json(const SketchGraph& sketch) {
    ordered_json j;
    j["primitives"] = ordered_json::array();
    for (const Primitive& p : sketch.primitives) {
        ordered_json jp;
        jp["kind"] = kind_name(p.kind);
        jp["params"] = p.params;
        jp["construction"] = p.construction;
        j["primitives"].push_back(std::move(jp));
    }
    j["constraints"] = ordered_json::array();
    for (const Constraint& c : sketch.constraints) {
        ordered_json jc;
        jc["i"] = c.i;
        jc["si"] = c.si;
        jc["j"] = c.j;
        jc["sj"] = c.sj;
        jc["kind"] = kind_name(c.kind);
        if (c.datum)
            jc["datum"] = *c.datum;
        else
            jc["datum"] = nullptr;
        j["constraints"].push_back(std::move(jc));
    }
    return j;
}

SketchGraph parse_sketch_line(const std::string& line) {
    return sketch_from_json(json::parse(line));
}

std::string sketch_line(const SketchGraph& sketch) { return sketch_to_json(sketch).dump(); }

}  // namespace csketch
