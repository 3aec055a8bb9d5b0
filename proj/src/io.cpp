#include "lpm/io.hpp"

#include <cstdint>
#include <fstream>
#include <limits>

namespace lpm::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return json(static_cast<std::int64_t>(x));
  }
  return json(x.str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) {
      bad("bad integer '" + s + "'");
    }
    return Integer(s);
  }
  bad("expected an integer, got " + j.dump());
}

json fiber_to_json(const FiberModel& m) {
  switch (m.kind()) {
    case FiberKind::Torus:
      return {{"model", "torus"}};
    case FiberKind::SymplecticHomology:
      return {{"model", "sp"}, {"genus", m.genus()}};
    case FiberKind::PuncturedDisc:
      return {{"model", "disc"}, {"punctures", m.punctures()}};
  }
  return {};
}

FiberModel fiber_from_json(const json& j) {
  const json& model = field(j, "model");
  if (!model.is_string()) bad("fiber model must be a string");
  const auto name = model.get<std::string>();
  auto int_field = [&](const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer()) bad(std::string("fiber field '") + key + "' must be an integer");
    return v.get<int>();
  };
  if (name == "torus") return FiberModel::torus();
  if (name == "sp") return FiberModel::symplectic_homology(int_field("genus"));
  if (name == "disc") return FiberModel::punctured_disc(int_field("punctures"));
  bad("unknown fiber model '" + name + "'");
}

json cycle_to_json(const Cycle& c) {
  if (!c.model().is_homological()) return json(to_string(c.word()));
  json out = json::array();
  for (const auto& x : c.coords()) out.push_back(integer_to_json(x));
  return out;
}

Cycle cycle_from_json(const FiberModel& m, const json& j) {
  if (!m.is_homological()) {
    if (!j.is_string()) bad("disc cycle must be a word string");
    return Cycle::disc_curve(m, parse_free_word(j.get<std::string>(), m.punctures()));
  }
  if (!j.is_array()) bad("homology cycle must be an integer array");
  std::vector<Integer> v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return Cycle::homology(m, std::move(v));
}

json element_to_json(const FiberElement& g) {
  if (!g.model().is_homological()) return json(to_string(g.as_braid()));
  const IntMatrix& m = g.as_matrix();
  json rows = json::array();
  for (int i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (int k = 0; k < m.size(); ++k) row.push_back(integer_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

FiberElement element_from_json(const FiberModel& m, const json& j) {
  if (!m.is_homological()) {
    if (!j.is_string()) bad("disc fiber element must be a braid string");
    return FiberElement::braid(m, parse_braid(j.get<std::string>(), m.punctures()));
  }
  if (!j.is_array()) bad("fiber element must be a matrix");
  const int n = m.dimension();
  std::vector<Integer> entries;
  if (!j.empty() && j.front().is_array()) {
    if (j.size() != static_cast<std::size_t>(n)) bad("matrix must have " + std::to_string(n) + " rows");
    for (const auto& row : j) {
      if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
        bad("matrix rows must have " + std::to_string(n) + " entries");
      }
      for (const auto& x : row) entries.push_back(integer_from_json(x));
    }
  } else {
    for (const auto& x : j) entries.push_back(integer_from_json(x));
  }
  return FiberElement::matrix(m, IntMatrix(n, std::move(entries)));
}

json pencil_to_json(const Pencil& p) {
  json cycles = json::array();
  for (const auto& c : p.cycles()) cycles.push_back(cycle_to_json(c));
  return {{"fiber", fiber_to_json(p.fiber())}, {"cycles", std::move(cycles)}};
}

Pencil pencil_from_json(const json& j) {
  const FiberModel m = fiber_from_json(field(j, "fiber"));
  const json& cs = field(j, "cycles");
  if (!cs.is_array()) bad("'cycles' must be an array");
  std::vector<Cycle> cycles;
  for (const auto& c : cs) cycles.push_back(cycle_from_json(m, c));
  return Pencil(m, std::move(cycles));
}

json automorphism_to_json(const Automorphism& a) {
  return {{"braid", to_string(a.b)}, {"fiber_element", element_to_json(a.g)}};
}

Automorphism automorphism_from_json(const FiberModel& m, int strands, const json& j) {
  const json& b = field(j, "braid");
  if (!b.is_string()) bad("'braid' must be a string");
  FiberElement g = j.contains("fiber_element") ? element_from_json(m, j.at("fiber_element"))
                                               : FiberElement::identity(m);
  return Automorphism{parse_braid(b.get<std::string>(), strands), std::move(g)};
}

json arc_to_json(const Arc& a) { return {{"base", a.base}, {"carrier", to_string(a.carrier)}}; }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    bad("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace lpm::io
