#pragma once

// JSON serialization: ring descriptors, element files, result files,
// witness reports and battery reports. Scalars are written as strings so
// exact values survive a round trip.

#include "bccore/finite_ring.hpp"
#include "bccore/ginverse.hpp"
#include "bccore/matrix_ring.hpp"
#include "bccore/oracle.hpp"
#include "bccore/scalar.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>

namespace bccore {

using json = nlohmann::ordered_json;

/// Malformed file, descriptor or payload.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Descriptors

namespace detail {

inline std::uint32_t parse_u32(std::string_view s, std::string_view what) {
  if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
    throw InputError("bad " + std::string(what) + " '" + std::string(s) + "'");
  return static_cast<std::uint32_t>(std::stoul(std::string(s)));
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (std::size_t pos; (pos = s.find(sep)) != std::string_view::npos; s.remove_prefix(pos + 1)) out.push_back(s.substr(0, pos));
  out.push_back(s);
  return out;
}

}  // namespace detail

/// Parses "Zn:6", "MatZp:2x2:p3", "Mat:Q:3", "Mat:QI:2", "Mat:QI:2:ct",
/// "Mat:GF7:2". Gaussian rings default to conjugate-transpose.
inline RingDescriptor parse_descriptor(std::string_view text) {
  const auto parts = detail::split(text, ':');
  RingDescriptor d;
  if (parts[0] == "Zn" && parts.size() == 2) {
    d.kind = RingDescriptor::Kind::zn;
    d.modulus = detail::parse_u32(parts[1], "modulus");
    d.involution = Involution::identity;
  } else if (parts[0] == "MatZp" && parts.size() == 3) {
    const auto dims = detail::split(parts[1], 'x');
    if (dims.size() != 2 || dims[0] != dims[1] || parts[2].empty() || parts[2][0] != 'p')
      throw InputError("bad descriptor '" + std::string(text) + "'");
    d.kind = RingDescriptor::Kind::matzp;
    d.dimension = detail::parse_u32(dims[0], "dimension");
    d.characteristic = detail::parse_u32(parts[2].substr(1), "characteristic");
    d.involution = Involution::transpose;
  } else if (parts[0] == "Mat" && (parts.size() == 3 || parts.size() == 4)) {
    d.kind = RingDescriptor::Kind::matrix;
    d.dimension = detail::parse_u32(parts[2], "dimension");
    d.involution = Involution::transpose;
    if (parts[1] == "Q") {
      d.scalar = ScalarKind::rational;
    } else if (parts[1] == "QI") {
      d.scalar = ScalarKind::gaussian_rational;
      d.involution = Involution::conjugate_transpose;
    } else if (parts[1].starts_with("GF")) {
      d.scalar = ScalarKind::prime_field;
      d.characteristic = detail::parse_u32(parts[1].substr(2), "characteristic");
    } else {
      throw InputError("unknown field '" + std::string(parts[1]) + "'");
    }
    if (parts.size() == 4) {
      if (parts[3] == "t") d.involution = Involution::transpose;
      else if (parts[3] == "ct") d.involution = Involution::conjugate_transpose;
      else throw InputError("unknown involution '" + std::string(parts[3]) + "'");
    }
  } else {
    throw InputError("bad descriptor '" + std::string(text) + "'");
  }
  try {
    d.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return d;
}

inline json to_json(const RingDescriptor& d) {
  switch (d.kind) {
    case RingDescriptor::Kind::zn:
      return {{"kind", "Zn"}, {"modulus", d.modulus}};
    case RingDescriptor::Kind::matzp:
      return {{"kind", "MatZp"}, {"p", d.characteristic}, {"k", d.dimension}};
    case RingDescriptor::Kind::matrix: {
      json j{{"kind", "matrix"}};
      j["field"] = d.scalar == ScalarKind::rational ? "Q" : d.scalar == ScalarKind::gaussian_rational ? "QI" : "GF";
      if (d.scalar == ScalarKind::prime_field) j["p"] = d.characteristic;
      j["n"] = d.dimension;
      j["involution"] = d.involution == Involution::conjugate_transpose ? "conjugate-transpose" : "transpose";
      return j;
    }
  }
  return {};
}

/// Accepts the object form written by to_json or a descriptor string.
inline RingDescriptor descriptor_from_json(const json& j) {
  if (j.is_string()) return parse_descriptor(j.get<std::string>());
  if (!j.is_object() || !j.contains("kind")) throw InputError("ring must be an object with a kind");
  auto u32 = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned()) throw InputError(std::string("ring field '") + key + "' missing");
    return j[key].get<std::uint32_t>();
  };
  const auto kind = j["kind"].get<std::string>();
  RingDescriptor d;
  if (kind == "Zn") {
    d.kind = RingDescriptor::Kind::zn;
    d.modulus = u32("modulus");
    d.involution = Involution::identity;
  } else if (kind == "MatZp") {
    d.kind = RingDescriptor::Kind::matzp;
    d.characteristic = u32("p");
    d.dimension = u32("k");
    d.involution = Involution::transpose;
  } else if (kind == "matrix") {
    d.kind = RingDescriptor::Kind::matrix;
    d.dimension = u32("n");
    const auto field = j.value("field", std::string("Q"));
    if (field == "Q") d.scalar = ScalarKind::rational;
    else if (field == "QI") d.scalar = ScalarKind::gaussian_rational;
    else if (field == "GF") d.scalar = ScalarKind::prime_field, d.characteristic = u32("p");
    else throw InputError("unknown field '" + field + "'");
    const auto inv = j.value("involution", std::string(field == "QI" ? "conjugate-transpose" : "transpose"));
    if (inv == "transpose") d.involution = Involution::transpose;
    else if (inv == "conjugate-transpose") d.involution = Involution::conjugate_transpose;
    else throw InputError("unknown involution '" + inv + "'");
  } else {
    throw InputError("unknown ring kind '" + kind + "'");
  }
  try {
    d.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return d;
}

// ---------------------------------------------------------------------------
// Rings chosen at run time

using AnyRing = std::variant<MatrixRing<RationalField>, MatrixRing<GaussianRationalField>, MatrixRing<PrimeField>, FiniteRing>;

inline AnyRing make_ring(const RingDescriptor& d) {
  d.validate();
  if (d.kind != RingDescriptor::Kind::matrix) return FiniteRing(d);
  switch (d.scalar) {
    case ScalarKind::rational:
      return MatrixRing<RationalField>(RationalField{}, d.dimension, d.involution);
    case ScalarKind::gaussian_rational:
      return MatrixRing<GaussianRationalField>(GaussianRationalField{}, d.dimension, d.involution);
    case ScalarKind::prime_field:
      return MatrixRing<PrimeField>(PrimeField(d.characteristic), d.dimension, d.involution);
  }
  throw InputError("unsupported descriptor");
}

// ---------------------------------------------------------------------------
// Element payloads

template <class Field>
json payload_to_json(const MatrixRing<Field>& r, const Elem<MatrixRing<Field>>& x) {
  json rows = json::array();
  for (std::size_t i = 0; i < x.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < x.cols(); ++j) row.push_back(r.field().format(x(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json payload_to_json(const FiniteRing&, FiniteElement x) { return x.code; }

template <class Field>
Elem<MatrixRing<Field>> payload_from_json(const MatrixRing<Field>& r, const json& j) {
  const auto n = r.dimension();
  if (!j.is_array() || j.size() != n) throw InputError("payload must have " + std::to_string(n) + " rows");
  auto m = r.zero();
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n) throw InputError("payload row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
    for (std::size_t k = 0; k < n; ++k) {
      const auto& s = j[i][k];
      if (s.is_string()) m(i, k) = r.field().parse(s.get<std::string>());
      else if (s.is_number_integer()) m(i, k) = r.field().from_int(s.get<long>());
      else throw InputError("scalar entries must be strings");
    }
  }
  return m;
}

inline FiniteElement payload_from_json(const FiniteRing& r, const json& j) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    throw InputError("finite ring payload must be a non-negative integer encoding");
  const auto code = j.get<std::uint64_t>();
  if (code >= r.order()) throw InputError("encoding " + std::to_string(code) + " outside " + r.descriptor().to_string());
  return r.element(static_cast<std::uint32_t>(code));
}

/// ring descriptor plus unparsed payload, as read from disk.
struct ElementFile {
  RingDescriptor ring;
  json payload;
};

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline ElementFile element_file_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ring") || !j.contains("payload")) throw InputError("element file needs ring and payload");
  return {descriptor_from_json(j["ring"]), j["payload"]};
}

inline ElementFile read_element_file(const std::string& path) {
  try {
    return element_file_from_json(read_json_file(path));
  } catch (const InputError& e) {
    throw InputError(std::string(e.what()).starts_with(path) ? e.what() : path + ": " + e.what());
  }
}

template <StarRing R>
json element_file_json(const R& r, const Elem<R>& x) {
  return {{"ring", to_json(r.descriptor())}, {"payload", payload_to_json(r, x)}};
}

// ---------------------------------------------------------------------------
// Reports

template <StarRing R>
json to_json(const R& r, const WitnessReport<Elem<R>>& rep) {
  json j;
  j["kind"] = std::string(to_string(rep.kind));
  json inputs = json::object();
  for (const auto& [name, e] : rep.inputs) inputs[name] = payload_to_json(r, e);
  j["inputs"] = std::move(inputs);
  j["candidate"] = rep.candidate ? payload_to_json(r, *rep.candidate) : json(nullptr);
  json verdicts = json::array();
  for (const auto& v : rep.verdicts) verdicts.push_back({{"name", v.name}, {"holds", v.holds}});
  j["verdicts"] = std::move(verdicts);
  if (rep.index) j["index"] = *rep.index;
  j["overall"] = rep.overall;
  return j;
}

/// {status, kind, ring, inputs, witness, verify}; witness only when found.
template <StarRing R>
json result_file_json(const R& r, const WitnessReport<Elem<R>>& rep) {
  json j;
  j["status"] = rep.candidate ? "found" : "not-invertible";
  j["kind"] = std::string(to_string(rep.kind));
  j["ring"] = to_json(r.descriptor());
  json inputs = json::object();
  for (const auto& [name, e] : rep.inputs) inputs[name] = payload_to_json(r, e);
  j["inputs"] = std::move(inputs);
  if (rep.candidate) {
    j["witness"] = payload_to_json(r, *rep.candidate);
    j["verify"] = to_json(r, rep);
  }
  return j;
}

template <StarRing R>
json to_json(const R& r, const DecompositionResult<Elem<R>>& d, const std::vector<Verdict>& verdicts) {
  json j;
  j["status"] = "found";
  j["ring"] = to_json(r.descriptor());
  j["inputs"] = {{"a", payload_to_json(r, d.a)}, {"v", payload_to_json(r, d.v)}};
  j["x"] = payload_to_json(r, d.x);
  j["a1"] = payload_to_json(r, d.a1);
  j["a2"] = payload_to_json(r, d.a2);
  json vs = json::array();
  bool all = true;
  for (const auto& v : verdicts) {
    vs.push_back({{"name", v.name}, {"holds", v.holds}});
    all = all && v.holds;
  }
  j["verdicts"] = std::move(vs);
  j["overall"] = all;
  return j;
}

/// Field order is fixed; wall_ms comes last so it can be dropped for
/// byte comparisons.
inline json to_json(const TheoremBatteryReport& rep, bool with_wall_time = true) {
  json j;
  j["theorem"] = rep.theorem;
  j["corpus"] = rep.corpus;
  j["drawn"] = rep.drawn;
  j["tuples"] = rep.tuples;
  j["agreements"] = rep.agreements;
  json ds = json::array();
  for (const auto& d : rep.disagreements) ds.push_back({{"index", d.index}, {"tuple", d.tuple}, {"failed", d.failed}});
  j["disagreements"] = std::move(ds);
  json printed = json::object();
  for (const auto& [label, count] : rep.printed_mismatches) printed[label] = count;
  j["printed_mismatches"] = std::move(printed);
  j["seed"] = rep.seed ? json(*rep.seed) : json(nullptr);
  if (with_wall_time) j["wall_ms"] = rep.wall_ms;
  return j;
}

/// Removes every "wall_ms" key, recursively.
inline json without_wall_time(json j) {
  if (j.is_object()) {
    j.erase("wall_ms");
    for (auto& [key, value] : j.items()) value = without_wall_time(value);
  } else if (j.is_array()) {
    for (auto& value : j) value = without_wall_time(value);
  }
  return j;
}

}  // namespace bccore
