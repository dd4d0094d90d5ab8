// centsplit: centralizer component groups and Tits-group splittings for
// semisimple classes of reductive groups.
//
// Commands:
//   describe DATUM                  structure of the datum and its
//                                   fundamental groups
//   centralize DATUM --lambda L     Phi(s), W^0(s), A_G(s); --certify adds
//                                   the explicit splitting certificate
//   lift DATUM                      the lifted section tau_2 on A_G
//   frobenius DATUM --lambda L --q Q   F-stability certification
//   verify [--suite S] [--seed N]   acceptance suites
//
// DATUM grammar: TYPE[:ISOGENY][;p=P], e.g. D4:sc, A3:ad, A1xA1:sc;p=2,
// E7:lattice(<semicolon-separated basis rows>).
//
// Exit codes: 0 success, 2 parse error, 3 verification failure,
// 4 oracle size refusal.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "centsplit/centralizer.hpp"
#include "centsplit/frobenius.hpp"
#include "centsplit/fundgroup.hpp"
#include "centsplit/lifting.hpp"
#include "centsplit/rootdata.hpp"
#include "centsplit/tits.hpp"
#include "centsplit/verify.hpp"

using json = nlohmann::ordered_json;
using namespace centsplit;

namespace {

constexpr const char* kSchemaVersion = "1";

json rat_json(const Rat& x) { return to_string(x); }

json vecq_json(const VecQ& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(rat_json(v[i]));
  return a;
}

json word_json(const std::vector<int>& w) {
  json a = json::array();
  for (int i : w) a.push_back(i + 1);  // 1-based node labels
  return a;
}

json invariants_json(const std::vector<Int>& inv) {
  json a = json::array();
  for (const Int& d : inv) a.push_back(d.str());
  return a;
}

json tits_json(const TitsElement& t) {
  json o;
  o["weyl_word"] = word_json(t.weyl_part().reduced_word());
  o["torus_class"] = vecq_json(t.torus_part());
  o["order"] = t.order().str();
  return o;
}

std::string group_name(const std::vector<Int>& inv) {
  if (inv.empty()) return "1";
  std::string s;
  for (const Int& d : inv) {
    if (!s.empty()) s += " x ";
    s += "Z/" + d.str();
  }
  return s;
}

VecQ parse_lambda(const RootDatum& R, const std::string& text,
                  const std::string& basis) {
  std::vector<Rat> coords;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    coords.push_back(parse_rational(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  const int need = basis == "fundamental" ? R.rank_ss() : R.rank();
  if (static_cast<int>(coords.size()) != need)
    throw std::invalid_argument("lambda: expected " + std::to_string(need) +
                                " coordinates, got " +
                                std::to_string(coords.size()));
  if (basis == "fundamental") {
    VecQ lam = VecQ::Zero(R.rank());
    for (int i = 0; i < R.rank_ss(); ++i)
      if (coords[i] != 0) lam += coords[i] * R.fundamental_coweight(i);
    return lam;
  }
  VecQ lam(R.rank());
  for (int i = 0; i < R.rank(); ++i) lam[i] = coords[i];
  return lam;
}

json certificate_json(const SplittingCertificate& cert) {
  json o;
  o["version"] = kSchemaVersion;
  o["datum"] = cert.datum->type().name();
  o["lambda"] = vecq_json(cert.lambda_original);
  o["normalized"] = vecq_json(cert.lambda_normalized);
  json phi = json::array();
  for (int idx : cert.data.phi_s) {
    const Root& r = cert.datum->roots()[idx];
    json coords = json::array();
    for (Eigen::Index i = 0; i < r.root.size(); ++i)
      coords.push_back(static_cast<long long>(r.root[i]));
    phi.push_back(coords);
  }
  o["phi_s"] = phi;
  json w0s;
  w0s["type"] = cert.data.w0s_type.name();
  w0s["order"] = cert.data.w0s_order.str();
  o["w0s"] = w0s;
  o["a_g_s"] = invariants_json(cert.a_g_s_invariants);
  json c;
  json gens = json::array();
  for (const TitsElement& t : cert.a0_images) gens.push_back(tits_json(t));
  c["generators"] = gens;
  c["checks"] = cert.checks;
  o["certificate"] = c;
  return o;
}

void emit(const json& o, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << o.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_describe(const std::string& datum, bool as_json) {
  auto R = parse_datum(datum);
  FundamentalGroup A(*R);
  std::vector<WeylElement> ag = A.a_sub_G();
  std::vector<Int> a_inv = abelian_invariants_of(A.elements());
  std::vector<Int> ag_inv = abelian_invariants_of(ag);
  json o;
  o["version"] = kSchemaVersion;
  o["datum"] = datum;
  o["type"] = R->type().name();
  o["rank"] = R->rank();
  o["num_roots"] = static_cast<long long>(R->roots().size());
  o["weyl_order"] = weyl_order(R->type()).str();
  o["connection_index"] = R->connection_index().str();
  json mins = json::array();
  for (int j : R->minuscule_nodes()) mins.push_back(j + 1);
  o["minuscule_nodes"] = mins;
  o["rho_check"] = vecq_json(R->rho_check());
  o["fundamental_group"] = invariants_json(a_inv);
  o["a_g"] = invariants_json(ag_inv);
  std::string text;
  text += "datum        " + datum + "\n";
  text += "type         " + R->type().name() + "\n";
  text += "rank         " + std::to_string(R->rank()) + "\n";
  text += "|Phi|        " + std::to_string(R->roots().size()) + "\n";
  text += "|W|          " + weyl_order(R->type()).str() + "\n";
  text += "[P~:Q~]      " + R->connection_index().str() + "\n";
  text += "A            " + group_name(a_inv) + "\n";
  text += "A_G          " + group_name(ag_inv) + "\n";
  emit(o, as_json, text);
  return 0;
}

int cmd_centralize(const std::string& datum, const std::string& lambda_text,
                   const std::string& basis, bool certify, bool oracle,
                   const Int& limit, bool as_json) {
  auto R = parse_datum(datum);
  SemisimpleClass s(*R, parse_lambda(*R, lambda_text, basis));
  SplittingCertificate cert = splitting_certificate(s);
  if (oracle) {
    if (weyl_order(R->type()) > limit) {
      std::cerr << "oracle refused: |W| = " << weyl_order(R->type())
                << " exceeds limit " << limit << "\n";
      return 4;
    }
    BruteForceCentralizer bf = brute_force_w_of_s(s, limit);
    if (bf.w_s_order != bf.w0_s_order * Int(cert.data.a_w_s.size()) ||
        bf.invariant_factors != cert.a_g_s_invariants)
      throw VerificationError("oracle disagrees with certificate");
  }
  json o = certificate_json(cert);
  if (!certify) o.erase("certificate");
  std::string text;
  text += "lambda       " + to_string(cert.lambda_original) + "\n";
  text += "normalized   " + to_string(cert.lambda_normalized) + "\n";
  text += "Phi(s)       " + cert.data.w0s_type.name() + "\n";
  text += "|W^0(s)|     " + cert.data.w0s_order.str() + "\n";
  text += "A_G(s)       " + group_name(cert.a_g_s_invariants) + "\n";
  if (certify) {
    text += "section A_0  " + std::to_string(cert.a0_images.size()) +
            " elements, checks:";
    for (const std::string& c : cert.checks) text += " " + c;
    text += "\n";
  }
  emit(o, as_json, text);
  return 0;
}

int cmd_lift(const std::string& datum, bool as_json) {
  auto R = parse_datum(datum);
  LiftContext ctx = make_lift_context(*R);
  json o;
  o["version"] = kSchemaVersion;
  o["datum"] = datum;
  o["a_g_order"] = static_cast<long long>(ctx.tau2.a_g.size());
  json gens = json::array();
  std::string text = "tau_2 on A_G (" + std::to_string(ctx.tau2.a_g.size()) +
                     " elements):\n";
  for (const WeylElement& a : ctx.tau2.a_g) {
    TitsElement t = ctx.tau2.of(a);
    gens.push_back(tits_json(t));
    text += "  w = [";
    bool first = true;
    for (int i : a.reduced_word()) {
      if (!first) text += " ";
      first = false;
      text += std::to_string(i + 1);
    }
    text += "]  torus = " + to_string(t.torus_part()) +
            "  order = " + t.order().str() + "\n";
  }
  o["elements"] = gens;
  emit(o, as_json, text);
  return 0;
}

int cmd_frobenius(const std::string& datum, const std::string& lambda_text,
                  const std::string& basis, long long q, bool as_json) {
  auto R = parse_datum(datum);
  SemisimpleClass s(*R, parse_lambda(*R, lambda_text, basis));
  LiftContext ctx = make_lift_context(*R);
  FrobeniusAction F{Int(q)};
  bool stable = centralizer_F_stable(s, F, *ctx.A_G);
  json o;
  o["version"] = kSchemaVersion;
  o["datum"] = datum;
  o["q"] = q;
  o["lambda"] = vecq_json(s.lambda());
  o["centralizer_F_stable"] = stable;
  std::string text = "centralizer F-stable: " +
                     std::string(stable ? "yes" : "no") + "\n";
  if (stable) {
    FStableSplitting fs = f_stable_splitting(s, F, ctx);
    json c = certificate_json(fs.certificate);
    c.erase("version");
    o["certificate"] = c;
    o["checks"] = fs.certificate.checks;
    text += "A_G(s)       " +
            group_name(fs.certificate.a_g_s_invariants) + "\n";
    text += "checks:";
    for (const std::string& ck : fs.certificate.checks) text += " " + ck;
    text += "\n";
  }
  emit(o, as_json, text);
  return 0;
}

int cmd_verify(const std::string& suite, unsigned seed, const Int& limit,
               bool as_json, const std::string& json_out) {
  std::vector<SuiteResult> results = run_suites(suite, seed, limit);
  json o;
  o["version"] = kSchemaVersion;
  o["suite"] = suite;
  o["seed"] = seed;
  json suites = json::array();
  long long total = 0, failed = 0;
  for (const SuiteResult& r : results) {
    json sj;
    sj["name"] = r.name;
    sj["count"] = static_cast<long long>(r.checks.size());
    sj["failures"] = r.failures();
    json cases = json::array();
    for (const CheckRecord& c : r.checks) {
      json cj;
      cj["key"] = c.key;
      cj["pass"] = c.pass;
      cases.push_back(cj);
    }
    sj["cases"] = cases;
    suites.push_back(sj);
    total += static_cast<long long>(r.checks.size());
    failed += r.failures();
  }
  o["suites"] = suites;
  o["total"] = total;
  o["failed"] = failed;
  if (!json_out.empty()) {
    std::ofstream f(json_out, std::ios::binary);
    f << o.dump(2) << "\n";
  }
  std::string text;
  for (const SuiteResult& r : results) {
    text += r.name + ": " + std::to_string(r.checks.size()) + " checks, " +
            std::to_string(r.failures()) + " failures\n";
    for (const CheckRecord& c : r.checks)
      if (!c.pass) text += "  FAIL " + c.key + "\n";
  }
  text += failed == 0 ? "PASS\n" : "FAIL\n";
  emit(o, as_json, text);
  return failed == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"centralizer component groups and Tits-group splittings"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON on stdout");

  std::string datum, lambda_text, basis = "coroot", suite = "all";
  std::string json_out;
  bool certify = false, oracle = false;
  long long q = 3;
  unsigned seed = 0;
  long long limit_ll = 51840;
  if (const char* env = std::getenv("CENTSPLIT_ORACLE_LIMIT"))
    limit_ll = std::atoll(env);

  CLI::App* c_desc = app.add_subcommand("describe", "describe a root datum");
  c_desc->add_option("datum", datum)->required();

  CLI::App* c_cent =
      app.add_subcommand("centralize", "centralizer of a semisimple class");
  c_cent->add_option("datum", datum)->required();
  c_cent->add_option("--lambda", lambda_text, "cocharacter class")->required();
  c_cent->add_option("--basis", basis)
      ->check(CLI::IsMember({"coroot", "fundamental"}));
  c_cent->add_flag("--certify", certify, "emit the splitting certificate");
  c_cent->add_flag("--oracle", oracle, "confirm by brute force over W");
  c_cent->add_option("--limit", limit_ll, "oracle size limit");

  CLI::App* c_lift = app.add_subcommand("lift", "the section tau_2 on A_G");
  c_lift->add_option("datum", datum)->required();

  CLI::App* c_frob =
      app.add_subcommand("frobenius", "F-stability certification");
  c_frob->add_option("datum", datum)->required();
  c_frob->add_option("--lambda", lambda_text)->required();
  c_frob->add_option("--basis", basis)
      ->check(CLI::IsMember({"coroot", "fundamental"}));
  c_frob->add_option("--q", q, "Frobenius multiplier (>= 2)")->required();

  CLI::App* c_ver = app.add_subcommand("verify", "run acceptance suites");
  c_ver->add_option("--suite", suite, "suite name or 'all'");
  c_ver->add_option("--seed", seed, "seed for randomized suites");
  c_ver->add_option("--limit", limit_ll, "oracle size limit");
  c_ver->add_option("--json-out", json_out, "also write JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    Int limit(limit_ll);
    if (c_desc->parsed()) return cmd_describe(datum, as_json);
    if (c_cent->parsed())
      return cmd_centralize(datum, lambda_text, basis, certify, oracle, limit,
                            as_json);
    if (c_lift->parsed()) return cmd_lift(datum, as_json);
    if (c_frob->parsed())
      return cmd_frobenius(datum, lambda_text, basis, q, as_json);
    if (c_ver->parsed())
      return cmd_verify(suite, seed, limit, as_json, json_out);
  } catch (const std::length_error& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 4;
  } catch (const VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
