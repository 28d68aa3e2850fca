#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "csketch/sketch.hpp"

namespace csketch {

/// One sketch per JSONL line:
/// {"primitives":[{"kind":"line","params":[...],"construction":false},...],
///  "constraints":[{"i":0,"si":1,"j":1,"sj":2,"kind":"coincident","datum":null},...]}
/// Indices are 0-based. Missing datums are captured from the geometry on
/// import (see capture_datums).
SketchGraph sketch_from_json(const nlohmann::json& j);
nlohmann::ordered_json sketch_to_json(const SketchGraph& sketch);

SketchGraph parse_sketch_line(const std::string& line);
std::string sketch_line(const SketchGraph& sketch);

}  // namespace csketch
