#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "construct.hpp"
#include "cube.hpp"

namespace nbcube {

/// Raised when certificate text cannot be decoded into a well-formed
/// HealthyPathCertificate: bad JSON, missing or mistyped fields, ids out
/// of range, or a digit mirror that disagrees with the ids.
struct MalformedCertificate : std::runtime_error {
  explicit MalformedCertificate(const std::string& what) : std::runtime_error(what) {}
};

/// Certificates serialize with a redundant digit-string mirror of every
/// id so the files read naturally next to the cube's coordinates. The
/// mirror is checked on the way back in.
inline nlohmann::ordered_json certificate_to_json(const HealthyPathCertificate& cert) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["spec"] = {{"n", cert.spec.n}, {"k", cert.spec.k}};
  j["faults"] = cert.faults;
  j["x"] = cert.x;
  j["y"] = cert.y;
  j["bound"] = cert.bound;
  j["paths"] = cert.paths;
  nlohmann::ordered_json digits;
  digits["x"] = vertex_string(cert.spec, cert.x);
  digits["y"] = vertex_string(cert.spec, cert.y);
  nlohmann::ordered_json fault_digits = nlohmann::ordered_json::array();
  for (int f : cert.faults) fault_digits.push_back(vertex_string(cert.spec, f));
  digits["faults"] = std::move(fault_digits);
  nlohmann::ordered_json path_digits = nlohmann::ordered_json::array();
  for (const Path& p : cert.paths) {
    nlohmann::ordered_json one = nlohmann::ordered_json::array();
    for (int v : p) one.push_back(vertex_string(cert.spec, v));
    path_digits.push_back(std::move(one));
  }
  digits["paths"] = std::move(path_digits);
  j["digits"] = std::move(digits);
  return j;
}

inline std::string serialize_certificate(const HealthyPathCertificate& cert) {
  return certificate_to_json(cert).dump(2) + "\n";
}

namespace detail {

inline const nlohmann::ordered_json& field(const nlohmann::ordered_json& j,
                                           const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    throw MalformedCertificate(std::string("missing field: ") + key);
  return *it;
}

inline int int_field(const nlohmann::ordered_json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_integer())
    throw MalformedCertificate(std::string("field is not an integer: ") + key);
  return v.get<int>();
}

inline std::vector<int> id_list(const nlohmann::ordered_json& v, const char* what,
                                int limit) {
  if (!v.is_array())
    throw MalformedCertificate(std::string(what) + " is not an array");
  std::vector<int> out;
  for (const auto& e : v) {
    if (!e.is_number_integer())
      throw MalformedCertificate(std::string(what) + " holds a non-integer");
    int id = e.get<int>();
    if (id < 0 || id >= limit)
      throw MalformedCertificate(std::string(what) + " holds an out-of-range id");
    out.push_back(id);
  }
  return out;
}

}  // namespace detail

inline HealthyPathCertificate certificate_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object()) throw MalformedCertificate("certificate is not a JSON object");
  if (detail::int_field(j, "version") != 1)
    throw MalformedCertificate("unsupported certificate version");
  const auto& spec_j = detail::field(j, "spec");
  if (!spec_j.is_object()) throw MalformedCertificate("spec is not an object");
  int n = detail::int_field(spec_j, "n");
  int k = detail::int_field(spec_j, "k");
  try {
    CubeSpec spec(n, k);
    const int count = spec.vertex_count();
    HealthyPathCertificate cert{spec,
                                detail::id_list(detail::field(j, "faults"), "faults", count),
                                detail::int_field(j, "x"),
                                detail::int_field(j, "y"),
                                detail::int_field(j, "bound"),
                                {}};
    if (cert.x < 0 || cert.x >= count || cert.y < 0 || cert.y >= count)
      throw MalformedCertificate("endpoint id out of range");
    if (cert.bound < 0) throw MalformedCertificate("bound is negative");
    const auto& paths_j = detail::field(j, "paths");
    if (!paths_j.is_array()) throw MalformedCertificate("paths is not an array");
    for (const auto& p : paths_j)
      cert.paths.push_back(detail::id_list(p, "a path", count));

    const auto& digits = detail::field(j, "digits");
    if (!digits.is_object()) throw MalformedCertificate("digits is not an object");
    auto expect = [&](const nlohmann::ordered_json& got, int id, const char* what) {
      if (!got.is_string() || got.get<std::string>() != vertex_string(spec, id))
        throw MalformedCertificate(std::string("digit mirror disagrees with ") + what);
    };
    expect(detail::field(digits, "x"), cert.x, "x");
    expect(detail::field(digits, "y"), cert.y, "y");
    const auto& fd = detail::field(digits, "faults");
    if (!fd.is_array() || fd.size() != cert.faults.size())
      throw MalformedCertificate("digit mirror of faults has the wrong shape");
    for (std::size_t i = 0; i < cert.faults.size(); ++i)
      expect(fd[i], cert.faults[i], "a fault");
    const auto& pd = detail::field(digits, "paths");
    if (!pd.is_array() || pd.size() != cert.paths.size())
      throw MalformedCertificate("digit mirror of paths has the wrong shape");
    for (std::size_t i = 0; i < cert.paths.size(); ++i) {
      if (!pd[i].is_array() || pd[i].size() != cert.paths[i].size())
        throw MalformedCertificate("digit mirror of paths has the wrong shape");
      for (std::size_t q = 0; q < cert.paths[i].size(); ++q)
        expect(pd[i][q], cert.paths[i][q], "a path vertex");
    }
    return cert;
  } catch (const std::invalid_argument& e) {
    throw MalformedCertificate(std::string("bad cube spec: ") + e.what());
  }
}

inline HealthyPathCertificate parse_certificate(const std::string& text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw MalformedCertificate(std::string("not valid JSON: ") + e.what());
  }
  return certificate_from_json(j);
}

inline void write_certificate(const std::string& path, const HealthyPathCertificate& cert) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << serialize_certificate(cert);
  if (!out) throw std::runtime_error("failed while writing: " + path);
}

inline HealthyPathCertificate read_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_certificate(buf.str());
}

}  // namespace nbcube
