#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "gpg/gpg.hpp"

namespace {

using gpg::Json;

struct Options {
  std::uint64_t p = 0;
  unsigned s = 1;
  unsigned m = 0;
  unsigned ell = 1;
  bool complement = false;
  std::string format = "json";
  std::string out;
  std::uint64_t max_order = 0;

  unsigned family = 2;
  unsigned t_max = 4;
  unsigned r_max = 6;
  bool witnesses = false;
  bool controls = false;
  std::string as = "edges";
};

void add_spec_flags(CLI::App* cmd, Options& o, bool with_ell = true) {
  cmd->add_option("--p", o.p, "characteristic")->required();
  cmd->add_option("--s", o.s, "q = p^s")->check(CLI::PositiveNumber);
  cmd->add_option("--m", o.m, "extension degree")->required()->check(CLI::PositiveNumber);
  if (with_ell) {
    cmd->add_option("--ell", o.ell, "exponent q^ell + 1");
    cmd->add_flag("--complement", o.complement, "use the complement graph");
  }
}

void add_output_flags(CLI::App* cmd, Options& o, std::vector<std::string> formats = {"json", "text"}) {
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
  cmd->add_option("--out", o.out, "write to a file instead of stdout");
  cmd->add_option("--max-order", o.max_order, "raise the materialization budget");
}

gpg::GraphSpec spec_of(const Options& o) {
  gpg::GraphSpec spec{o.p, o.s, o.m, o.ell, o.complement};
  gpg::validate(spec);
  return spec;
}

gpg::Budget budget_of(const Options& o) {
  gpg::Budget b = gpg::Budget::from_environment();
  if (o.max_order != 0) b = b.with_max_order(o.max_order);
  return b;
}

std::string big_text(const gpg::BigInt& x) { return x.str(); }

// Returns the process exit status.
int run(const std::string& verb, const Options& o, std::ostream& os) {
  const bool json = o.format == "json";
  const gpg::Budget budget = budget_of(o);

  if (verb == "field") {
    const auto field = gpg::field_for({o.p, o.s, o.m}, budget);
    const Json j = gpg::field_json(*field);
    if (json) {
      os << j.dump(2) << '\n';
    } else {
      os << "F_" << field->size() << " modulus " << j["modulus"].dump() << " alpha " << j["alpha"].get<std::string>()
         << '\n';
    }
    return 0;
  }

  if (verb == "tables") {
    const auto rows = gpg::family_table(o.family, o.t_max);
    if (o.format == "json") {
      os << gpg::tables_json(rows).dump(2) << '\n';
    } else {
      os << gpg::tables_csv(rows);
    }
    return 0;
  }

  const gpg::GraphSpec spec = spec_of(o);

  if (verb == "graph") {
    const gpg::CayleyGraph g = gpg::build_graph(spec, budget);
    Json j = {{"spec", gpg::to_json(spec)},
              {"tag", std::string(gpg::to_string(spec.tag()))},
              {"n", g.order()},
              {"k", g.degree()},
              {"edges", g.adjacency().count() / 2},
              {"connection_set_size", g.connection().elements.size()}};
    if (json) {
      os << j.dump(2) << '\n';
    } else {
      os << spec.label() << ": n=" << g.order() << " k=" << g.degree() << " edges=" << g.adjacency().count() / 2
         << '\n';
    }
    return 0;
  }

  if (verb == "spectrum") {
    const gpg::Spectrum s = gpg::spectrum(spec);
    if (json) {
      os << Json{{"spec", gpg::to_json(spec)}, {"spectrum", gpg::to_json(s)}}.dump(2) << '\n';
    } else {
      os << gpg::spectrum_string(s) << '\n';
    }
    return 0;
  }

  if (verb == "srg") {
    const Json j = gpg::record_json(spec);
    if (json) {
      os << j.dump(2) << '\n';
    } else {
      const gpg::SrgRecord r = gpg::srg_params(spec);
      os << spec.label() << " = srg" << gpg::srg_tuple_string(r) << '\n';
    }
    return 0;
  }

  if (verb == "walks") {
    Json w = Json::object();
    for (unsigned r = 1; r <= o.r_max; ++r) w[std::to_string(r)] = gpg::big(gpg::closed_walks(spec, r));
    if (json) {
      os << Json{{"spec", gpg::to_json(spec)}, {"walks", w}}.dump(2) << '\n';
    } else {
      for (unsigned r = 1; r <= o.r_max; ++r) os << "w_" << r << " = " << gpg::closed_walks(spec, r) << '\n';
    }
    return 0;
  }

  if (verb == "trees") {
    const gpg::BigInt t = gpg::spanning_trees(spec);
    if (json) {
      os << Json{{"spec", gpg::to_json(spec)}, {"trees", gpg::big(t)}}.dump(2) << '\n';
    } else {
      os << t << '\n';
    }
    return 0;
  }

  if (verb == "waring") {
    const gpg::WaringCertificate cert = gpg::waring_number(spec, budget);
    Json j = {{"spec", gpg::to_json(spec)},
              {"k", gpg::big(cert.k_exp)},
              {"field_size", gpg::big(cert.field_size)},
              {"g", cert.g},
              {"witnesses_computed", cert.witnesses.has_value()},
              {"hypothesis_fired", cert.hypothesis_fired}};
    if (o.witnesses && cert.witnesses) {
      Json table = Json::array();
      for (const auto& [x, y] : *cert.witnesses) table.push_back({x.value, y.value});
      j["witnesses"] = table;
    }
    if (json) {
      os << j.dump(2) << '\n';
    } else {
      os << "g(" << cert.k_exp << ", " << cert.field_size << ") = " << cert.g << '\n';
    }
    return 0;
  }

  if (verb == "ramanujan") {
    const gpg::RamanujanEvidence ev = gpg::ramanujan_evidence(spec);
    const bool value = gpg::is_ramanujan(spec);
    if (json) {
      os << Json{{"spec", gpg::to_json(spec)},
                 {"ramanujan", value},
                 {"max_nontrivial_squared", gpg::big(ev.lhs)},
                 {"bound_squared", gpg::big(ev.rhs)}}
                .dump(2)
         << '\n';
    } else {
      os << spec.label() << (value ? " is" : " is not") << " Ramanujan (" << ev.lhs << " vs " << ev.rhs << ")\n";
    }
    return 0;
  }

  if (verb == "zeta") {
    const gpg::ZetaFactorization z = gpg::ihara_zeta(spec);
    if (json) {
      os << gpg::zeta_json(z).dump(2) << '\n';
    } else {
      os << "(1-u^2)^" << z.square_factor_exponent;
      for (const auto& f : z.factors) {
        os << " (1" << (f.s > 0 ? "-" : "+") << big_text(gpg::big_abs(f.s)) << "u-" << f.quad << "u^2)^" << f.exponent;
      }
      os << '\n';
    }
    return 0;
  }

  if (verb == "verify") {
    const gpg::VerificationReport report = gpg::run_suite(spec, budget);
    Json j = gpg::report_json(report);
    bool ok = report.passed();
    if (o.controls) {
      Json controls = Json::array();
      for (const auto& c : gpg::falsification_controls(spec, budget)) {
        controls.push_back({{"name", c.name}, {"pass", c.pass}});
        ok = ok && c.pass;
      }
      j["controls"] = controls;
      j["passed"] = ok;
    }
    if (json) {
      os << j.dump(2) << '\n';
    } else {
      for (const auto& c : report.checks) os << (c.pass ? "PASS " : "FAIL ") << c.name << '\n';
    }
    return ok ? 0 : 1;
  }

  if (verb == "export") {
    const gpg::CayleyGraph g = gpg::build_graph(spec, budget);
    if (o.as == "edges") {
      gpg::write_edge_list(os, g.adjacency());
    } else if (o.as == "dimacs") {
      gpg::write_dimacs(os, g.adjacency(), spec.label());
    } else {
      gpg::write_bitmatrix(os, spec, g.adjacency());
    }
    return 0;
  }

  throw CLI::CallForHelp();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Paley graphs: construction, closed forms and brute-force checks"};
  app.require_subcommand(1, 1);
  Options o;

  struct Verb {
    const char* name;
    const char* help;
  };
  const Verb verbs[] = {
      {"field", "field modulus and primitive element"},
      {"graph", "build the Cayley graph and summarize it"},
      {"spectrum", "closed-form spectrum"},
      {"srg", "strongly regular parameters, intersection array and flags"},
      {"walks", "closed walk counts"},
      {"trees", "spanning tree count"},
      {"waring", "Waring number with witnesses"},
      {"ramanujan", "Ramanujan test"},
      {"zeta", "Ihara zeta factorization"},
      {"tables", "the families over F_2, F_3 and F_4"},
      {"verify", "run every brute-force check"},
      {"export", "write the adjacency as edges, DIMACS or packed bits"},
  };
  for (const auto& v : verbs) {
    CLI::App* cmd = app.add_subcommand(v.name, v.help);
    const std::string name = v.name;
    if (name == "tables") {
      cmd->add_option("--family", o.family, "q in {2,3,4}")->required();
      cmd->add_option("--tmax", o.t_max, "largest t")->check(CLI::Range(2u, 12u));
      add_output_flags(cmd, o, {"csv", "json", "text"});
      o.format = "csv";
      continue;
    }
    add_spec_flags(cmd, o, name != "field");
    add_output_flags(cmd, o, name == "export" ? std::vector<std::string>{"text"} : std::vector<std::string>{"json", "text"});
    if (name == "walks") cmd->add_option("--rmax", o.r_max, "largest walk length")->check(CLI::Range(1u, 64u));
    if (name == "waring") cmd->add_flag("--witnesses", o.witnesses, "include the full witness table");
    if (name == "verify") cmd->add_flag("--controls", o.controls, "also run the falsification controls");
    if (name == "export") {
      cmd->add_option("--as", o.as, "edges, dimacs or bits")->check(CLI::IsMember({"edges", "dimacs", "bits"}));
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  // tables defaults to CSV, everything else to JSON.
  const std::string verb = app.get_subcommands().front()->get_name();
  if (verb != "tables" && app.get_subcommands().front()->count("--format") == 0) o.format = "json";
  if (verb == "tables" && app.get_subcommands().front()->count("--format") == 0) o.format = "csv";

  try {
    std::ostringstream buffer;
    const int status = run(verb, o, buffer);
    if (o.out.empty()) {
      std::cout << buffer.str();
    } else {
      std::ofstream file(o.out, std::ios::binary);
      if (!file) {
        std::cerr << "cannot open " << o.out << '\n';
        return 2;
      }
      file << buffer.str();
    }
    return status;
  } catch (const gpg::Error& e) {
    std::cerr << e.what() << '\n';
    return e.code() == gpg::ErrorCode::InternalError ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
