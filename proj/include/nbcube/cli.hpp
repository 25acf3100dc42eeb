#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cayley.hpp"
#include "certificate_io.hpp"
#include "construct.hpp"
#include "cube.hpp"
#include "graph.hpp"
#include "menger.hpp"
#include "survival.hpp"

namespace nbcube {

/// Exit codes: 0 success, 1 verification or construction failure,
/// 2 usage error, 3 search budget exhausted.
struct RunConfig {
  std::string command;
  std::string cube;    // "n,k"
  std::string group;   // "Z6", "Z3xZ3", ...
  std::string gens;    // comma-separated element ids
  std::string ns = "1..4";
  std::string ks = "2..5";
  int budget = 6;
  std::string format = "text";  // text | csv | json
  std::string faults;           // comma-separated vertex ids
  int x = -1;
  int y = -1;
  std::string out_path;
  std::string input;
  int lmax = 1;
  int workers = 1;
  bool no_symmetry = false;
};

namespace cli_detail {

struct UsageError : std::invalid_argument {
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

inline int parse_int(const std::string& text, const char* what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw UsageError(std::string("cannot parse ") + what + ": '" + text + "'");
  }
  if (used != text.size())
    throw UsageError(std::string("cannot parse ") + what + ": '" + text + "'");
  return value;
}

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, sep)) out.push_back(token);
  return out;
}

/// Accepts "3", "1,4", "1..5", and mixtures like "1,3..5".
inline std::vector<int> parse_range_list(const std::string& text, const char* what) {
  std::vector<int> out;
  for (const std::string& token : split(text, ',')) {
    auto dots = token.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_int(token, what));
      continue;
    }
    int lo = parse_int(token.substr(0, dots), what);
    int hi = parse_int(token.substr(dots + 2), what);
    if (lo > hi) throw UsageError(std::string("empty range in ") + what);
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw UsageError(std::string(what) + " is empty");
  return out;
}

inline std::vector<int> parse_id_list(const std::string& text, const char* what) {
  std::vector<int> out;
  if (text.empty()) return out;
  for (const std::string& token : split(text, ',')) out.push_back(parse_int(token, what));
  return out;
}

inline CubeSpec parse_cube(const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != 2) throw UsageError("--cube wants the form n,k");
  try {
    return CubeSpec(parse_int(parts[0], "--cube n"), parse_int(parts[1], "--cube k"));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad cube: ") + e.what());
  }
}

inline std::vector<int> parse_group_orders(const std::string& text) {
  std::vector<int> orders;
  for (std::string token : split(text, 'x')) {
    if (token.empty() || (token[0] != 'Z' && token[0] != 'z'))
      throw UsageError("--group wants the form Z6 or Z3xZ3");
    orders.push_back(parse_int(token.substr(1), "--group order"));
  }
  if (orders.empty()) throw UsageError("--group is empty");
  return orders;
}

inline std::string join_ids(const std::vector<int>& ids, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(ids[i]);
  }
  return out;
}

struct TableRow {
  int n, k, delta, formula;
  std::optional<NbcResult> search;  // empty when the budget ran out
};

inline int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<int> ns = parse_range_list(cfg.ns, "--n");
  std::vector<int> ks = parse_range_list(cfg.ks, "--k");
  if (cfg.budget < 0) throw UsageError("--budget must be nonnegative");
  if (cfg.workers < 1) throw UsageError("--workers must be at least 1");
  const Symmetry sym = cfg.no_symmetry ? Symmetry::None : Symmetry::VertexTransitive;

  std::vector<TableRow> rows;
  for (int n : ns)
    for (int k : ks) {
      CubeSpec s = [&] {
        try {
          return CubeSpec(n, k);
        } catch (const std::invalid_argument& e) {
          throw UsageError(std::string("bad table cell: ") + e.what());
        }
      }();
      TableRow row{n, k, s.degree(), neighbor_connectivity_formula(n, k), std::nullopt};
      Graph g = build_cube(s);
      try {
        row.search = neighbor_connectivity_exact(g, cfg.budget, sym, cfg.workers);
      } catch (const BudgetExhausted&) {
      }
      rows.push_back(std::move(row));
    }

  bool any_mismatch = false, any_unknown = false;
  auto match_of = [&](const TableRow& r) -> std::string {
    if (!r.search) return "unknown";
    return r.search->value == r.formula ? "yes" : "no";
  };
  for (const TableRow& r : rows) {
    std::string m = match_of(r);
    if (m == "no") any_mismatch = true;
    if (m == "unknown") any_unknown = true;
  }

  if (cfg.format == "csv") {
    out << "n,k,delta,formula,search,match,witness\n";
    for (const TableRow& r : rows) {
      out << r.n << ',' << r.k << ',' << r.delta << ',' << r.formula << ',';
      if (r.search)
        out << r.search->value;
      else
        out << '>' << cfg.budget;
      out << ',' << match_of(r) << ',';
      if (r.search) out << join_ids(r.search->witness, ";");
      out << '\n';
    }
  } else if (cfg.format == "json") {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const TableRow& r : rows) {
      nlohmann::ordered_json j;
      j["n"] = r.n;
      j["k"] = r.k;
      j["delta"] = r.delta;
      j["formula"] = r.formula;
      if (r.search)
        j["search"] = r.search->value;
      else
        j["search"] = nullptr;
      j["match"] = match_of(r);
      j["witness"] = r.search ? r.search->witness : std::vector<int>{};
      doc.push_back(std::move(j));
    }
    out << doc.dump(2) << '\n';
  } else if (cfg.format == "text") {
    out << "  n   k  delta  formula  search  match    witness\n";
    for (const TableRow& r : rows) {
      std::ostringstream searched;
      if (r.search)
        searched << r.search->value;
      else
        searched << '>' << cfg.budget;
      std::string witness = r.search && !r.search->witness.empty()
                                ? join_ids(r.search->witness, ",")
                                : "-";
      out << "  " << r.n << "   " << r.k << "  " << r.delta << "      " << r.formula
          << "        " << searched.str() << "       " << match_of(r) << "      "
          << witness << '\n';
    }
  } else {
    throw UsageError("unknown --format: " + cfg.format);
  }
  (void)err;
  if (any_mismatch) return 1;
  if (any_unknown) return 3;
  return 0;
}

inline int cmd_witness(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  (void)err;
  if (cfg.cube.empty() == cfg.group.empty())
    throw UsageError("witness wants exactly one of --cube or --group");

  std::optional<CubeSpec> cube;
  std::vector<int> orders;
  std::vector<int> gens;
  if (!cfg.cube.empty()) {
    cube = parse_cube(cfg.cube);
    orders.assign(static_cast<std::size_t>(cube->n), cube->k);
    int weight = 1;
    for (int i = 0; i < cube->n; ++i) {
      gens.push_back(weight);                   // +e_i
      gens.push_back((cube->k - 1) * weight);   // -e_i
      weight *= cube->k;
    }
  } else {
    orders = parse_group_orders(cfg.group);
    gens = parse_id_list(cfg.gens, "--gens");
    if (gens.empty()) throw UsageError("--group needs --gens");
  }

  AbelianGroup group(orders);
  std::vector<int> s;
  try {
    s = validate_generators(group, gens);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad generators: ") + e.what());
  }
  Graph g = build_cayley(group, s);
  out << "vertices: " << g.vertex_count() << "\n";
  out << "degree: " << s.size() << "\n";

  std::optional<GeneratorOrdering> ordering = find_valid_ordering(group, s);
  if (!ordering) {
    out << "NoValidOrdering: every pairing of these generators multiplies into the "
           "generator set or the identity\n";
    return 1;
  }
  out << "ordering: " << join_ids(*ordering, " ") << "\n";

  CayleyWitness w = generator_pair_witness(g, group, s, *ordering);
  const std::vector<int>& faults = w.faults.vertices();
  out << "witness: " << (faults.empty() ? "(empty)" : join_ids(faults, " ")) << "\n";
  if (cube) {
    std::string digits;
    for (std::size_t i = 0; i < faults.size(); ++i) {
      if (i) digits += ' ';
      digits += vertex_string(*cube, faults[i]);
    }
    out << "witness-digits: " << (faults.empty() ? "(empty)" : digits) << "\n";
  } else {
    std::string coords;
    for (std::size_t i = 0; i < faults.size(); ++i) {
      if (i) coords += ' ';
      std::vector<int> c = group.coords(faults[i]);
      coords += '(' + join_ids(c, ",") + ')';
    }
    out << "witness-coords: " << (faults.empty() ? "(empty)" : coords) << "\n";
  }
  const int half = (static_cast<int>(s.size()) + 1) / 2;
  out << "size: " << faults.size() << "\n";
  out << "half-degree-ceiling: " << half << "\n";
  out << "survival: " << to_string(w.classification) << "\n";
  const bool pass = static_cast<int>(faults.size()) <= half &&
                    (w.classification == GraphClass::Disconnected ||
                     w.classification == GraphClass::Complete);
  out << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? 0 : 1;
}

inline int cmd_paths(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.cube.empty()) throw UsageError("paths needs --cube n,k");
  if (cfg.x < 0 || cfg.y < 0) throw UsageError("paths needs --x and --y");
  CubeSpec s = parse_cube(cfg.cube);
  Graph g = build_cube(s);
  std::vector<int> seeds = parse_id_list(cfg.faults, "--faults");
  FaultSet u = [&] {
    try {
      return FaultSet(g, seeds);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("bad faults: ") + e.what());
    }
  }();

  HealthyPathCertificate cert = s.k == 2 ? hypercube_survival_paths(s, g, u, cfg.x, cfg.y)
                                         : kary_survival_paths(s, g, u, cfg.x, cfg.y);
  ValidationReport rep = validate_certificate(cert);
  if (!rep.pass) {
    err << "internal error: built certificate failed validation\n";
    for (const std::string& d : rep.diagnostics) err << "  " << d << "\n";
    return 1;
  }
  out << "paths: " << cert.paths.size() << " (bound " << cert.bound << ") from "
      << vertex_string(s, cert.x) << " to " << vertex_string(s, cert.y) << "\n";
  if (!cfg.out_path.empty()) {
    write_certificate(cfg.out_path, cert);
    out << "wrote: " << cfg.out_path << "\n";
  }
  return 0;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.input.empty()) throw UsageError("verify needs a certificate file");
  HealthyPathCertificate cert = [&] {
    try {
      return read_certificate(cfg.input);
    } catch (const MalformedCertificate&) {
      throw;
    } catch (const std::runtime_error& e) {
      throw UsageError(e.what());
    }
  }();
  ValidationReport rep = validate_certificate(cert);
  for (const std::string& d : rep.diagnostics) out << d << "\n";
  if (!rep.pass) {
    out << "FAIL\n";
    return 1;
  }
  out << "paths: " << cert.paths.size() << " (bound " << cert.bound << ") from "
      << cert.x << " to " << cert.y << "\n";
  out << "PASS\n";
  (void)err;
  return 0;
}

inline int cmd_check_lemmas(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  (void)err;
  if (cfg.cube.empty()) throw UsageError("check-lemmas needs --cube n,k");
  if (cfg.lmax < 0) throw UsageError("--lmax must be nonnegative");
  CubeSpec s = parse_cube(cfg.cube);
  Graph g = build_cube(s);
  bool all_ok = true;

  CommonNeighborReport cn = check_common_neighbor_property(s, g);
  out << "common-neighbors: pairs=" << cn.pairs_checked << " with0=" << cn.count_by_value[0]
      << " with1=" << cn.count_by_value[1] << " with2=" << cn.count_by_value[2]
      << " violations=" << cn.violations << (cn.ok ? " ok" : " FAIL") << "\n";
  all_ok = all_ok && cn.ok;

  if (s.n >= 3 && s.k >= 3) {
    long long configs = 0, violations = 0;
    const int lcap = std::min(cfg.lmax, s.n - 1);
    std::vector<int> pick;
    for (int ell = 0; ell <= lcap; ++ell) {
      pick.assign(static_cast<std::size_t>(ell), 0);
      for (int i = 0; i < ell; ++i) pick[i] = i;
      bool more = true;
      while (more) {
        FaultSet u(g, pick);
        for (int dim = 0; dim < s.n; ++dim)
          for (int bi = 0; bi < s.k; ++bi)
            for (int bj = 0; bj < s.k; ++bj) {
              if (bi == bj || !blocks_adjacent(s, bi, bj)) continue;
              for (int v = 0; v < g.vertex_count(); ++v) {
                if (digit(s, v, dim) != bi || !u.is_healthy(v)) continue;
                HealthyPairCheck hp = healthy_pair_check(s, g, u, dim, bi, bj, v);
                ++configs;
                if (!hp.ok) ++violations;
              }
            }
        // next lexicographic combination
        more = false;
        for (int i = ell - 1; i >= 0; --i) {
          if (pick[i] < g.vertex_count() - (ell - i)) {
            ++pick[i];
            for (int q = i + 1; q < ell; ++q) pick[q] = pick[q - 1] + 1;
            more = true;
            break;
          }
        }
        if (ell == 0) more = false;
      }
    }
    out << "healthy-pairs: lmax=" << lcap << " configurations=" << configs
        << " violations=" << violations << (violations == 0 ? " ok" : " FAIL") << "\n";
    all_ok = all_ok && violations == 0;
  } else {
    out << "healthy-pairs: skipped (needs n >= 3 and k >= 3)\n";
  }

  out << (all_ok ? "PASS" : "FAIL") << "\n";
  return all_ok ? 0 : 1;
}

}  // namespace cli_detail

/// Runs one already-parsed command. Streams receive everything the
/// command prints; nothing goes to the process-wide stdout/stderr.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "table") return cli_detail::cmd_table(cfg, out, err);
    if (cfg.command == "witness") return cli_detail::cmd_witness(cfg, out, err);
    if (cfg.command == "paths") return cli_detail::cmd_paths(cfg, out, err);
    if (cfg.command == "verify") return cli_detail::cmd_verify(cfg, out, err);
    if (cfg.command == "check-lemmas") return cli_detail::cmd_check_lemmas(cfg, out, err);
    err << "error: unknown command '" << cfg.command << "'\n";
    return 2;
  } catch (const MalformedCertificate& e) {
    err << "malformed certificate: " << e.what() << "\n";
    return 1;
  } catch (const ConstructionFailed& e) {
    err << "construction failed: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    // usage errors, violated builder preconditions, zero bounds
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace nbcube
