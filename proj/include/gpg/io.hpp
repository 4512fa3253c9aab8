#pragma once

// Text, JSON and binary serialization. Big integers are always written as
// decimal strings.

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gpg/applications.hpp"
#include "gpg/bigint.hpp"
#include "gpg/error.hpp"
#include "gpg/finite_field.hpp"
#include "gpg/oracles.hpp"
#include "gpg/paley_graphs.hpp"
#include "gpg/spectra_srg.hpp"

namespace gpg {

using Json = nlohmann::ordered_json;

inline Json big(const BigInt& x) { return x.str(); }

inline Json to_json(const GraphSpec& spec) {
  return {{"p", spec.p},           {"s", spec.s},   {"m", spec.m}, {"ell", spec.ell}, {"complemented", spec.complemented},
          {"label", spec.label()}, {"q", big(spec.q())}};
}

inline Json to_json(const Spectrum& s) {
  Json out = Json::array();
  for (const auto& [value, mult] : s.pairs) out.push_back({big(value), big(mult)});
  return out;
}

inline Json field_json(const FieldTable& f) {
  Json modulus = Json::array();
  for (std::uint32_t c : f.modulus()) modulus.push_back(c);
  return {{"p", f.p()},
          {"s", f.params().s},
          {"m", f.params().m},
          {"order", f.size()},
          {"modulus", modulus},
          {"alpha", f.digit_string(f.alpha())},
          {"alpha_encoding", f.alpha().value}};
}

struct RecordOptions {
  std::optional<unsigned> walks_up_to;
  bool trees = false;
};

/// {spec, spectrum, srg, array, flags, walks?, trees?}. Fields that do not
/// apply to this graph (a disconnected or degenerate graph) are null.
inline Json record_json(const GraphSpec& spec, const RecordOptions& options = {}) {
  const FamilyData d = family_data(spec);
  Json out;
  out["spec"] = to_json(spec);
  out["spectrum"] = to_json(spectrum(spec));
  std::optional<SrgRecord> rec;
  try {
    rec = srg_params(spec);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegenerateGraph) throw;
  }
  out["srg"] = rec ? Json{big(rec->v), big(rec->k), big(rec->e), big(rec->d)} : Json(nullptr);
  if (d.at_half && !spec.complemented) {
    out["array"] = nullptr;
  } else {
    const IntersectionArray a = intersection_array(spec);
    out["array"] = {big(a.b0), big(a.b1), big(a.c1), big(a.c2)};
  }
  Json flags;
  flags["primitive"] = rec ? Json(rec->primitive) : Json(false);
  flags["conference"] = rec ? Json(rec->conference) : Json(false);
  if (rec && rec->latin_square) {
    flags["latin_square"] = {{"s", big(rec->latin_square->first)}, {"u", big(rec->latin_square->second)}};
  } else {
    flags["latin_square"] = nullptr;
  }
  flags["ramanujan"] = d.at_half && !spec.complemented ? Json(nullptr) : Json(is_ramanujan(spec));
  out["flags"] = flags;
  if (options.walks_up_to) {
    Json w = Json::object();
    for (unsigned r = 1; r <= *options.walks_up_to; ++r) w[std::to_string(r)] = big(closed_walks(spec, r));
    out["walks"] = w;
  }
  if (options.trees) out["trees"] = big(spanning_trees(spec));
  return out;
}

inline Json zeta_json(const ZetaFactorization& z) {
  Json factors = Json::array();
  for (const auto& f : z.factors) {
    factors.push_back({{"linear_coeff", big(f.linear_coeff())}, {"quad_coeff", big(f.quad_coeff())}, {"exp", big(f.exponent)}});
  }
  return {{"square_exp", big(z.square_factor_exponent)}, {"factors", factors}};
}

inline std::string srg_tuple_string(const SrgRecord& r) {
  return "(" + r.v.str() + "," + r.k.str() + "," + r.e.str() + "," + r.d.str() + ")";
}

/// The three family tables as CSV: t,graph,srg,spectrum.
inline std::string tables_csv(const std::vector<FamilyRow>& rows) {
  std::string out = "t,graph,srg,spectrum\n";
  for (const auto& row : rows) {
    out += std::to_string(row.t) + "," + row.spec.label() + ",\"" + srg_tuple_string(row.srg) + "\",\"" +
           spectrum_string(row.spectrum) + "\"\n";
  }
  return out;
}

inline Json tables_json(const std::vector<FamilyRow>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    out.push_back({{"t", row.t},
                   {"graph", row.spec.label()},
                   {"srg", {big(row.srg.v), big(row.srg.k), big(row.srg.e), big(row.srg.d)}},
                   {"spectrum", to_json(row.spectrum)}});
  }
  return out;
}

inline Json report_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"expected", c.expected},
                      {"observed", c.observed},
                      {"pass", c.pass},
                      {"elapsed_ms", c.elapsed_ms}});
  }
  return {{"spec", to_json(report.spec)}, {"passed", report.passed()}, {"checks", checks}};
}

/// One "i j" line per undirected edge with i < j.
inline void write_edge_list(std::ostream& os, const BitMatrix& a) {
  for (std::uint32_t i = 0; i < a.size(); ++i) {
    for (std::uint32_t j : a.neighbors(i)) {
      if (i < j) os << i << ' ' << j << '\n';
    }
  }
}

/// DIMACS: "p edge n e" then "e i j" with 1-based vertices.
inline void write_dimacs(std::ostream& os, const BitMatrix& a, const std::string& comment = {}) {
  if (!comment.empty()) os << "c " << comment << '\n';
  os << "p edge " << a.size() << ' ' << a.count() / 2 << '\n';
  for (std::uint32_t i = 0; i < a.size(); ++i) {
    for (std::uint32_t j : a.neighbors(i)) {
      if (i < j) os << "e " << i + 1 << ' ' << j + 1 << '\n';
    }
  }
}

/// A single-line JSON header, then ceil(n/8) bytes per row. Within a byte,
/// bit b is column 8 * byte + b.
inline void write_bitmatrix(std::ostream& os, const GraphSpec& spec, const BitMatrix& a) {
  const std::uint32_t row_bytes = (a.size() + 7) / 8;
  Json header = {{"p", spec.p},
                 {"s", spec.s},
                 {"m", spec.m},
                 {"ell", spec.ell},
                 {"complemented", spec.complemented},
                 {"n", a.size()},
                 {"k", a.size() ? a.row_weight(0) : 0},
                 {"row_bytes", row_bytes}};
  os << header.dump() << '\n';
  std::vector<char> buffer(row_bytes);
  for (std::uint32_t i = 0; i < a.size(); ++i) {
    auto row = a.row(i);
    for (std::uint32_t b = 0; b < row_bytes; ++b) {
      buffer[b] = static_cast<char>((row[b / 8] >> (8 * (b % 8))) & 0xFF);
    }
    os.write(buffer.data(), row_bytes);
  }
}

struct BitMatrixDump {
  GraphSpec spec;
  BitMatrix matrix;
};

inline BitMatrixDump read_bitmatrix(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) fail(ErrorCode::InvalidArgument, "bit-matrix dump has no header");
  Json header;
  try {
    header = Json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::InvalidArgument, std::string("bad bit-matrix header: ") + e.what());
  }
  BitMatrixDump out;
  out.spec = {header.at("p").get<std::uint64_t>(), header.at("s").get<unsigned>(), header.at("m").get<unsigned>(),
              header.at("ell").get<unsigned>(), header.at("complemented").get<bool>()};
  const auto n = header.at("n").get<std::uint32_t>();
  const std::uint32_t row_bytes = (n + 7) / 8;
  out.matrix = BitMatrix(n);
  std::vector<char> buffer(row_bytes);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!is.read(buffer.data(), row_bytes)) fail(ErrorCode::InvalidArgument, "bit-matrix dump is truncated");
    auto row = out.matrix.row(i);
    for (std::uint32_t b = 0; b < row_bytes; ++b) {
      row[b / 8] |= std::uint64_t{static_cast<unsigned char>(buffer[b])} << (8 * (b % 8));
    }
  }
  return out;
}

}  // namespace gpg
