#pragma once

// JSON encodings of fibers, cycles, fiber elements, pencils and automorphisms.
// Integers that do not fit in int64 are written as decimal strings; both forms
// are accepted on input. Malformed documents raise std::invalid_argument.

#include <json.hpp>

#include <string>

#include "lpm/fiber.hpp"
#include "lpm/pencil.hpp"

namespace lpm::io {

using nlohmann::json;

json integer_to_json(const Integer& x);
Integer integer_from_json(const json& j);

json fiber_to_json(const FiberModel& m);
FiberModel fiber_from_json(const json& j);

json cycle_to_json(const Cycle& c);
Cycle cycle_from_json(const FiberModel& m, const json& j);

/// Matrices as nested row-major arrays (a flat array is also accepted);
/// disc elements as braid strings.
json element_to_json(const FiberElement& g);
FiberElement element_from_json(const FiberModel& m, const json& j);

json pencil_to_json(const Pencil& p);
Pencil pencil_from_json(const json& j);

json automorphism_to_json(const Automorphism& a);
Automorphism automorphism_from_json(const FiberModel& m, int strands, const json& j);

json arc_to_json(const Arc& a);

json read_json_file(const std::string& path);

}  // namespace lpm::io
