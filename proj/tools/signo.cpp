// Command-line surface over the whole library. Subcommands:
//   paths count|list, coherence, mpp vertices|facets|project, lattice
//   fvector|diameter|signohedron, flip diameter|ecc, verify all, project.
// Exit codes: 0 ok, 1 domain error, 2 usage error, 3 verification failure.
#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "signo/coherence.hpp"
#include "signo/flipdyn.hpp"
#include "signo/mppcore.hpp"
#include "signo/signlattice.hpp"
#include "signo/verify.hpp"

using nlohmann::json;
using namespace signo;

namespace {

struct UsageError {
  std::string what;
};

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) out.push_back(cur);
  return out;
}

QVec parse_rats(const std::vector<std::string>& parts) {
  QVec v;
  for (const auto& p : parts) v.push_back(rat_from_string(p));
  return v;
}

std::vector<int> parse_ints(const std::string& csv) {
  std::vector<int> out;
  for (const auto& p : split_csv(csv)) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(p, &pos);
    } catch (const std::exception&) {
      fail(Errc::ParseError, "bad signed index '" + p + "'");
    }
    if (pos != p.size()) fail(Errc::ParseError, "bad signed index '" + p + "'");
    out.push_back(v);
  }
  return out;
}

bool canonical_form(const QVec& a) {
  Rat prev = 0;
  for (const auto& x : a) {
    if (x <= prev) return false;
    prev = x;
  }
  return true;
}

// --n / --a / --a-file resolution; prints a relabeling note when the raw
// functional is not already canonical.
Orientation resolve_orientation(int n, const std::string& a_csv, const std::string& a_file,
                                std::ostream& note) {
  QVec raw;
  if (!a_file.empty()) {
    std::ifstream in(a_file);
    if (!in) fail(Errc::ParseError, "cannot read " + a_file);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.contains("a") || !j["a"].is_array())
      fail(Errc::ParseError, a_file + ": expected {\"a\":[\"1\",\"2\",...]}");
    for (const auto& x : j["a"]) raw.push_back(rat_from_string(x.get<std::string>()));
    if (j.contains("n") && j["n"].get<int>() != static_cast<int>(raw.size()))
      fail(Errc::ParseError, a_file + ": n does not match the length of a");
  } else if (!a_csv.empty()) {
    raw = parse_rats(split_csv(a_csv));
  } else if (n > 0) {
    return Orientation::canonical(n);
  } else {
    throw UsageError{"one of --n, --a, --a-file is required"};
  }
  if (n > 0 && n != static_cast<int>(raw.size()))
    throw UsageError{"--n disagrees with the length of --a"};
  if (canonical_form(raw)) return Orientation(raw);
  auto [o, perm] = normalize(raw);
  note << "relabeled: canonical coordinate i draws raw coordinate source[i] with sign[i]\n";
  note << "  source =";
  for (int s : perm.source) note << ' ' << s + 1;
  note << "\n  sign   =";
  for (int s : perm.sign) note << ' ' << (s > 0 ? '+' : '-');
  note << "\n  a      = " << qvec_to_string(o.values()) << "\n";
  return o;
}

std::string float_vec(const QVec& v) {
  std::ostringstream out;
  out << '(';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", static_cast<double>(v[i]));
    out << buf;
  }
  out << ')';
  return out.str();
}

json qvec_json(const QVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rat_to_string(x));
  return a;
}

void emit_json(const json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(path);
    if (!out) fail(Errc::ParseError, "cannot write " + path);
    out << j.dump(2) << "\n";
  }
}

bool satisfies_all(const QVec& phi, const std::vector<LinConstraint>& sys) {
  for (const auto& c : sys) {
    Rat v = dot(c.coeffs, phi);
    if (c.kind == ConstraintKind::Eq ? v != 0 : v <= 0) return false;
  }
  return true;
}

std::string join_ints(const std::vector<int>& xs) {
  std::string s;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

int cmd_paths_count(int n) {
  Int coherent = 0;
  auto all = enumerate_paths(n);
  for (const auto& p : all) coherent += is_coherent_fast(p);
  std::cout << "count=" << all.size() << " coherent=" << coherent.str() << "\n";
  return 0;
}

int cmd_paths_list(int n, bool want_json, const std::string& json_path) {
  auto all = enumerate_paths(n);
  if (want_json) {
    json arr = json::array();
    for (const auto& p : all) {
      json row;
      row["interior"] = p.interior;
      bool ok = is_coherent_fast(p);
      row["coherent"] = ok;
      if (ok) row["sign"] = path_to_signvector(p, n).str();
      arr.push_back(row);
    }
    emit_json(arr, json_path);
    return 0;
  }
  for (const auto& p : all) {
    std::cout << join_ints(p.interior);
    if (is_coherent_fast(p))
      std::cout << " coherent " << path_to_signvector(p, n).str() << "\n";
    else
      std::cout << " incoherent\n";
  }
  return 0;
}

int cmd_coherence(int n, const std::string& path_csv, const Orientation& o) {
  MonotonePath p = make_path(parse_ints(path_csv), n);
  std::cout << "path: " << join_ints(p.interior) << "\n";
  bool fast = is_coherent_fast(p);
  std::cout << "antipode: " << (fast ? "coherent" : "incoherent") << "\n";
  auto lp = is_coherent_lp(p, o);
  std::cout << "lp: " << (lp ? "coherent" : "incoherent");
  if (lp) std::cout << " phi=" << qvec_to_string(*lp);
  std::cout << "\n";
  if (fast)
    std::cout << "witness: phi=" << qvec_to_string(build_witness(p, o)) << "\n";
  else
    std::cout << "witness: unavailable (incoherent path)\n";
  if (fast != lp.has_value()) {
    std::cerr << "verdict disagreement between the antipode criterion and the LP\n";
    return 3;
  }
  return 0;
}

int cmd_mpp_vertices(const Orientation& o, bool want_json, const std::string& json_path,
                     bool with_float) {
  auto verts = mpp_vertices(o);
  if (want_json) {
    json arr = json::array();
    for (const auto& [sv, p] : verts)
      arr.push_back({{"sign", sv.str()}, {"point", qvec_json(p.coords)}});
    emit_json(arr, json_path);
    return 0;
  }
  for (const auto& [sv, p] : verts) {
    std::cout << sv.str() << ' ' << qvec_to_string(p.coords);
    if (with_float) std::cout << " ~ " << float_vec(p.coords);
    std::cout << "\n";
  }
  return 0;
}

int cmd_mpp_facets(const Orientation& o, bool want_json, const std::string& json_path) {
  auto facets = mpp_facets(o);
  if (want_json) {
    json arr = json::array();
    for (const auto& f : facets)
      arr.push_back({{"i", f.label.i},
                     {"eps", f.label.eps.str()},
                     {"normal", qvec_json(f.normal)},
                     {"rhs", rat_to_string(f.rhs)}});
    emit_json(arr, json_path);
    return 0;
  }
  for (const auto& f : facets)
    std::cout << "i=" << f.label.i << " eps=" << f.label.eps.str()
              << " normal=" << qvec_to_string(f.normal) << " rhs=" << rat_to_string(f.rhs)
              << "\n";
  return 0;
}

int cmd_project(const std::string& cs_file, bool want_json, const std::string& json_path,
                bool with_float) {
  std::ifstream in(cs_file);
  if (!in) fail(Errc::ParseError, "cannot read " + cs_file);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.contains("vertices") || !j.contains("ell"))
    fail(Errc::ParseError, cs_file + ": expected {\"vertices\":[...],\"ell\":[...]}");
  QVec ell;
  for (const auto& x : j["ell"]) ell.push_back(rat_from_string(x.get<std::string>()));
  std::vector<QVec> cloud;
  for (const auto& row : j["vertices"]) {
    QVec v;
    for (const auto& x : row) v.push_back(rat_from_string(x.get<std::string>()));
    if (v.size() != ell.size())
      fail(Errc::DimensionMismatch, cs_file + ": vertex/functional dimensions differ");
    cloud.push_back(std::move(v));
  }
  std::sort(cloud.begin(), cloud.end());
  cloud.erase(std::unique(cloud.begin(), cloud.end()), cloud.end());
  // pair the antipodes; keep the representative with positive functional value
  std::set<QVec> pool(cloud.begin(), cloud.end());
  std::vector<QVec> reps;
  QVec values;
  for (const auto& v : cloud) {
    if (!pool.count(neg(v)))
      fail(Errc::NotGeneric, "vertex cloud is not centrally symmetric");
    Rat t = dot(ell, v);
    if (t == 0) fail(Errc::NotGeneric, "functional vanishes on a vertex");
    if (t > 0) {
      reps.push_back(v);
      values.push_back(t);
    }
  }
  auto out = project_cs(reps, values);
  if (want_json) {
    json arr = json::array();
    for (const auto& p : out) arr.push_back(qvec_json(p));
    emit_json(json{{"vertices", arr}}, json_path);
    return 0;
  }
  for (const auto& p : out) {
    std::cout << qvec_to_string(p);
    if (with_float) std::cout << " ~ " << float_vec(p);
    std::cout << "\n";
  }
  return 0;
}

int cmd_lattice_fvector(int n) {
  auto f = fvector(n);
  for (size_t i = 0; i < f.size(); ++i) std::cout << (i ? " " : "") << f[i].str();
  std::cout << "\n";
  return 0;
}

int cmd_lattice_diameter(int n) {
  std::cout << "diameter=" << mpp_diameter(n) << "\n";
  return 0;
}

int cmd_lattice_signohedron(int n, bool want_json, const std::string& json_path) {
  Signohedron s = signohedron(n);
  if (want_json) {
    json jv = json::array(), jf = json::array();
    for (const auto& [sv, p] : s.vertices)
      jv.push_back({{"sign", sv.str()}, {"point", qvec_json(p)}});
    for (const auto& f : s.facets)
      jf.push_back({{"i", f.label.i},
                    {"eta", f.label.eps.str()},
                    {"normal", qvec_json(f.normal)},
                    {"rhs", rat_to_string(f.rhs)}});
    emit_json(json{{"vertices", jv}, {"facets", jf}}, json_path);
    return 0;
  }
  for (const auto& [sv, p] : s.vertices)
    std::cout << sv.str() << ' ' << qvec_to_string(p) << "\n";
  for (const auto& f : s.facets)
    std::cout << "i=" << f.label.i << " eta=" << f.label.eps.str()
              << " normal=" << qvec_to_string(f.normal) << " rhs=" << rat_to_string(f.rhs)
              << "\n";
  return 0;
}

int cmd_flip_diameter(int n) {
  std::cout << "diameter=" << flip_diameter(n) << "\n";
  return 0;
}

int cmd_flip_ecc(int n, const std::string& report_path) {
  auto cd = dist_to_coherent(n);
  auto fg = flip_graph(n);
  std::cout << "max=" << cd.max_dist << " attaining=" << join_ints(cd.attaining.interior)
            << "\n";
  if (!report_path.empty()) {
    json rows = json::array();
    for (size_t i = 0; i < fg.nodes.size(); ++i)
      rows.push_back({{"interior", fg.nodes[i].interior}, {"dist", cd.dist[i]}});
    emit_json({{"max", cd.max_dist},
               {"attaining", cd.attaining.interior},
               {"dist", rows}},
              report_path);
  }
  return 0;
}

int cmd_verify_all(const Orientation& o, const std::string& json_path, unsigned seed) {
  const int n = o.n();
  std::vector<std::pair<std::string, bool>> checks;
  auto run = [&](const std::string& name, bool ok) {
    checks.emplace_back(name, ok);
    std::cout << "check " << name << ": " << (ok ? "ok" : "FAIL") << "\n";
  };

  auto verts = mpp_vertices(o);
  std::set<QVec> constructed;
  for (const auto& [sv, p] : verts) constructed.insert(p.coords);

  {
    bool ok = Int(verts.size()) == count_coherent_closed(n) &&
              Int(verts.size()) == fvector_closed(n, 0);
    run("vertex-count", ok);
  }
  {
    bool ok = true;
    for (const auto& p : enumerate_paths(n))
      ok = ok && dot(o.values(), bs_point(p, o).coords) == 0;
    run("hyperplane", ok);
  }
  if (n <= 5) {
    std::set<QVec> brute;
    for (const auto& p : brute_mpp(o)) brute.insert(p.coords);
    run("brute-hull", brute == constructed);
  }
  if (n <= 5) {
    bool ok = true;
    for (const auto& p : enumerate_paths(n))
      ok = ok && is_coherent_lp(p, o).has_value() == is_coherent_fast(p);
    run("coherence-lp", ok);
  }
  {
    bool ok = true;
    for (const auto& p : enumerate_paths(n)) {
      if (!is_coherent_fast(p)) continue;
      auto s = path_to_string(p, n);
      ok = ok && satisfies_all(build_witness(s, o), coherence_system(s.cells, o));
    }
    run("witnesses", ok);
  }
  run("facets", confirm_facets(as_labeled_points(verts), mpp_facets(o), n).ok());
  {
    Signohedron s = signohedron(n);
    run("signohedron", equivalent(incidence(as_labeled_points(verts), mpp_facets(o)),
                                  incidence(s.vertices, s.facets)));
  }
  {
    bool ok = true;
    for (int m = 0; m <= n - 2; ++m)
      ok = ok && Int(faces(n, m).size()) == fvector_closed(n, m);
    run("fvector", ok);
  }
  {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(1, 40), den(1, 7), coin(0, 1);
    auto base = incidence(as_labeled_points(verts), mpp_facets(o));
    bool ok = true;
    for (int rep = 0; rep < 3; ++rep) {
      QVec raw;
      std::set<Rat> abs_vals;
      while (static_cast<int>(raw.size()) < n) {
        Rat v = Rat(num(rng)) / den(rng);
        if (!abs_vals.insert(v).second) continue;
        raw.push_back(coin(rng) ? v : Rat(-v));
      }
      const Orientation q = normalize(raw).first;
      ok = ok && equivalent(base, incidence(as_labeled_points(mpp_vertices(q)), mpp_facets(q)));
    }
    run("invariance", ok);
  }

  bool all_ok = true;
  for (const auto& [name, ok] : checks) all_ok = all_ok && ok;
  if (!json_path.empty()) {
    json rows = json::array();
    for (const auto& [name, ok] : checks) rows.push_back({{"name", name}, {"ok", ok}});
    emit_json({{"n", n}, {"a", qvec_json(o.values())}, {"ok", all_ok}, {"checks", rows}},
              json_path);
  }
  return all_ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact monotone path polytopes of cross-polytopes"};
  app.require_subcommand(1);

  int n = 0;
  std::string a_csv, a_file, path_csv, cs_file, report_path, json_path;
  bool with_float = false;
  unsigned seed = 0;
  std::function<int()> action;

  auto add_orientation = [&](CLI::App* cmd) {
    cmd->add_option("--n", n, "dimension (canonical functional 1..n)");
    cmd->add_option("--a", a_csv, "functional values as CSV rationals");
    cmd->add_option("--a-file", a_file, "JSON file {\"n\":3,\"a\":[\"1\",\"2\",\"3\"]}");
  };
  auto add_json = [&](CLI::App* cmd) {
    return cmd->add_option("--json", json_path, "JSON output, to FILE when given")
        ->expected(0, 1);
  };

  auto* paths = app.add_subcommand("paths", "monotone path enumeration");
  paths->require_subcommand(1);
  auto* pc = paths->add_subcommand("count", "population and coherent count");
  pc->add_option("--n", n, "dimension")->required();
  pc->callback([&] { action = [&] { return cmd_paths_count(n); }; });
  auto* pl = paths->add_subcommand("list", "list every path");
  pl->add_option("--n", n, "dimension")->required();
  auto* pl_json = add_json(pl);
  pl->callback([&] {
    action = [&, pl_json] { return cmd_paths_list(n, pl_json->count() > 0, json_path); };
  });

  auto* coh = app.add_subcommand("coherence", "verdicts for one path");
  coh->add_option("--path", path_csv, "interior vertices as CSV signed indices")->required();
  add_orientation(coh);
  coh->callback([&] {
    action = [&] {
      Orientation o = resolve_orientation(n, a_csv, a_file, std::cout);
      return cmd_coherence(o.n(), path_csv, o);
    };
  });

  auto* mpp = app.add_subcommand("mpp", "the monotone path polytope");
  mpp->require_subcommand(1);
  auto* mv = mpp->add_subcommand("vertices", "vertices keyed by sign vector");
  add_orientation(mv);
  auto* mv_json = add_json(mv);
  mv->add_flag("--float", with_float, "append decimal approximations");
  mv->callback([&] {
    action = [&, mv_json] {
      Orientation o = resolve_orientation(n, a_csv, a_file,
                                          mv_json->count() ? std::cerr : std::cout);
      return cmd_mpp_vertices(o, mv_json->count() > 0, json_path, with_float);
    };
  });
  auto* mf = mpp->add_subcommand("facets", "irredundant facet inequalities");
  add_orientation(mf);
  auto* mf_json = add_json(mf);
  mf->callback([&] {
    action = [&, mf_json] {
      Orientation o = resolve_orientation(n, a_csv, a_file,
                                          mf_json->count() ? std::cerr : std::cout);
      return cmd_mpp_facets(o, mf_json->count() > 0, json_path);
    };
  });
  auto* mp = mpp->add_subcommand("project", "centrally symmetric projection");
  mp->add_option("--cs-file", cs_file, "JSON {\"vertices\":[...],\"ell\":[...]}")->required();
  auto* mp_json = add_json(mp);
  mp->add_flag("--float", with_float, "append decimal approximations");
  mp->callback([&] {
    action = [&, mp_json] {
      return cmd_project(cs_file, mp_json->count() > 0, json_path, with_float);
    };
  });

  auto* proj = app.add_subcommand("project", "alias of mpp project");
  proj->add_option("--cs-file", cs_file, "JSON {\"vertices\":[...],\"ell\":[...]}")->required();
  auto* proj_json = add_json(proj);
  proj->add_flag("--float", with_float, "append decimal approximations");
  proj->callback([&] {
    action = [&, proj_json] {
      return cmd_project(cs_file, proj_json->count() > 0, json_path, with_float);
    };
  });

  auto* lat = app.add_subcommand("lattice", "face lattice and graph metrics");
  lat->require_subcommand(1);
  auto* lf = lat->add_subcommand("fvector", "face numbers f_0 .. f_(n-2)");
  lf->add_option("--n", n, "dimension")->required();
  lf->callback([&] { action = [&] { return cmd_lattice_fvector(n); }; });
  auto* ld = lat->add_subcommand("diameter", "polytope graph diameter");
  ld->add_option("--n", n, "dimension")->required();
  ld->callback([&] { action = [&] { return cmd_lattice_diameter(n); }; });
  auto* ls = lat->add_subcommand("signohedron", "dual-model vertices and facets");
  ls->add_option("--n", n, "dimension")->required();
  auto* ls_json = add_json(ls);
  ls->callback([&] {
    action = [&, ls_json] {
      return cmd_lattice_signohedron(n, ls_json->count() > 0, json_path);
    };
  });

  auto* flip = app.add_subcommand("flip", "the flip graph on all paths");
  flip->require_subcommand(1);
  auto* fd = flip->add_subcommand("diameter", "BFS diameter (-1 when disconnected)");
  fd->add_option("--n", n, "dimension")->required();
  fd->callback([&] { action = [&] { return cmd_flip_diameter(n); }; });
  auto* fe = flip->add_subcommand("ecc", "distance to the nearest coherent path");
  fe->add_option("--n", n, "dimension")->required();
  fe->add_option("--report", report_path, "write the full distance table as JSON");
  fe->callback([&] { action = [&] { return cmd_flip_ecc(n, report_path); }; });

  auto* ver = app.add_subcommand("verify", "independent cross-checks");
  ver->require_subcommand(1);
  auto* va = ver->add_subcommand("all", "run every check for one orientation");
  add_orientation(va);
  va->add_option("--json", json_path, "write the report to FILE");
  va->add_option("--seed", seed, "seed for the random-functional invariance check");
  va->callback([&] {
    action = [&] {
      Orientation o = resolve_orientation(n, a_csv, a_file, std::cout);
      return cmd_verify_all(o, json_path, seed);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    return action ? action() : 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
