#include "commands.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "qbound/errors.hpp"
#include "qbound/fitting.hpp"
#include "qbound/ft_code.hpp"
#include "qbound/matrix_io.hpp"

namespace qbound::cli {

namespace {

using nlohmann::json;

/// Shortest text that reads back to the same double; '.' decimal point
/// regardless of locale.
std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string fmt_fixed(double v, int digits) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, digits);
  return std::string(buf, res.ptr);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(what);
}

// ---- code construction ----------------------------------------------------

struct BuiltCode {
  std::optional<CssCode> css;
  std::optional<StabilizerCode> stabilizer;

  const StabilizerCode& as_stabilizer() {
    if (!stabilizer) stabilizer = css->stabilizer();
    return *stabilizer;
  }
};

BuiltCode make_code(const CodeSource& src) {
  const bool any_hgp = !src.h1.empty() || !src.h2.empty();
  const bool any_css = !src.gx.empty() || !src.gz.empty();
  const bool any_g = !src.g.empty();
  BuiltCode out;
  if (src.kind == "toric") {
    require(src.L >= 2, "toric code needs --L >= 2");
    require(!any_hgp && !any_css && !any_g, "toric code takes no matrix files");
    CssCode code = toric_code(src.L);
    if (src.distance) code = CssCode(code.gx(), code.gz(), src.distance);
    out.css = std::move(code);
  } else if (src.kind == "hgp") {
    require(src.L == 0 && !any_css && !any_g, "hgp takes only --h1 and --h2");
    require(!src.h1.empty() && !src.h2.empty(), "hgp needs --h1 and --h2");
    const CssCode code = hypergraph_product(read_matrix(src.h1), read_matrix(src.h2));
    out.css = CssCode(code.gx(), code.gz(), src.distance);
  } else if (src.kind == "css") {
    require(src.L == 0 && !any_hgp && !any_g, "css takes only --gx and --gz");
    require(!src.gx.empty() && !src.gz.empty(), "css needs --gx and --gz");
    out.css = CssCode(read_matrix(src.gx), read_matrix(src.gz), src.distance);
  } else if (src.kind == "stabilizer") {
    require(src.L == 0 && !any_hgp && !any_css, "stabilizer takes only --g");
    require(!src.g.empty(), "stabilizer needs --g");
    BitMatrix g = read_matrix(src.g);
    require(g.cols() % 2 == 0, "stabilizer generator matrix needs an even number of columns (A_X | A_Z)");
    const std::size_t n = g.cols() / 2;
    out.stabilizer = StabilizerCode(std::move(g), n, src.distance);
  } else {
    throw ValidationError("unknown code kind '" + src.kind + "' (expected toric, hgp, css, stabilizer)");
  }
  return out;
}

CodeSector make_sector(BuiltCode& code, const std::string& ft_errors) {
  if (code.css) {
    if (ft_errors == "x") return css_sector(*code.css, CssSector::kXErrors);
    if (ft_errors == "z") return css_sector(*code.css, CssSector::kZErrors);
    throw ValidationError("--ft-errors must be x or z");
  }
  return stabilizer_sector(*code.stabilizer);
}

ClusterModel make_model(BuiltCode& code, const RunConfig& config) {
  const SectorKind kind = parse_sector_kind(config.sector);
  switch (kind) {
    case SectorKind::kFullPauli:
      return ClusterModel::full_pauli(code.as_stabilizer());
    case SectorKind::kXType:
    case SectorKind::kZType:
      require(code.css.has_value(), "sector " + config.sector + " needs a CSS code");
      return ClusterModel::css(*code.css, kind);
    case SectorKind::kFtBinary: {
      require(config.rounds >= 1, "--rounds must be >= 1");
      return ClusterModel::ft_binary(ft_extend(make_sector(code, config.ft_errors), config.rounds));
    }
  }
  throw ValidationError("unknown sector");
}

// ---- provenance -----------------------------------------------------------

json code_json(const CodeSource& src) {
  json j;
  j["kind"] = src.kind;
  if (src.kind == "toric") j["L"] = src.L;
  if (!src.h1.empty()) j["h1"] = src.h1;
  if (!src.h2.empty()) j["h2"] = src.h2;
  if (!src.gx.empty()) j["gx"] = src.gx;
  if (!src.gz.empty()) j["gz"] = src.gz;
  if (!src.g.empty()) j["g"] = src.g;
  if (src.distance) j["d"] = *src.distance;
  return j;
}

json channel_json(const ChannelParams& ch) {
  return json{{"y", ch.y}, {"p", ch.p}, {"pX", ch.p_x}, {"pZ", ch.p_z}, {"q", ch.q}};
}

void write_csv_provenance(std::ostream& os, const RunConfig& config) {
  os << "# tool: " << kToolName << ' ' << kToolVersion << '\n';
  os << "# config: " << config_json(config).dump() << '\n';
}

json json_envelope(const RunConfig& config) {
  return json{{"tool", kToolName}, {"version", kToolVersion}, {"config", config_json(config)}};
}

/// Writes the rendered document either to config.output or to `out`.
void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
  if (config.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.output, std::ios::binary);
  if (!file) throw ValidationError("cannot write output file " + config.output);
  file << text;
  if (!file) throw ValidationError("failed writing output file " + config.output);
}

void require_format(const RunConfig& config, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (config.format == f) return;
  }
  std::string list;
  for (const char* f : allowed) list += std::string(list.empty() ? "" : ", ") + f;
  throw ValidationError("--format must be one of: " + list);
}

CodeParams theorem_code_params(const RunConfig& config, Theorem theorem) {
  CodeParams params;
  params.scaling = DistanceScaling::parse(config.scaling);
  params.w = config.w;
  params.w_x = config.w_x ? config.w_x : config.w;
  params.w_z = config.w_z ? config.w_z : config.w;
  if (theorem == Theorem::kStabilizer || theorem == Theorem::kStabilizerFt) {
    require(params.w >= 1, "theorem " + to_string(theorem) + " needs --w");
  } else {
    require(params.w_x >= 1 && params.w_z >= 1, "theorem " + to_string(theorem) + " needs --w or both --wX and --wZ");
  }
  return params;
}

void validate_channel(const ChannelParams& ch) {
  for (double v : {ch.y, ch.p, ch.p_x, ch.p_z, ch.q}) {
    require(v >= 0.0 && v <= 1.0, "channel rates must lie in [0, 1]");
  }
}

std::vector<double> rate_grid(double step, double max) {
  require(step > 0 && max >= 0 && max <= 1, "need --step > 0 and 0 <= --rate-max <= 1");
  const auto count = static_cast<std::size_t>(std::floor(max / step + 1e-9)) + 1;
  std::vector<double> grid;
  for (std::size_t i = 0; i < count; ++i) grid.push_back(static_cast<double>(i) * step);
  return grid;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
  return out;
}

}  // namespace

// ---- public helpers -------------------------------------------------------

json config_json(const RunConfig& config) {
  json j;
  j["command"] = config.command;
  const std::string& c = config.command;
  if (c == "build" || c == "census" || c == "ft-extend" || (c == "fit" && config.census_file.empty())) {
    j["code"] = code_json(config.code);
  }
  if (c == "census" || (c == "fit" && config.census_file.empty())) {
    j["sector"] = config.sector;
    j["m_max"] = config.m_max;
    j["max_stored"] = config.max_stored;
    if (config.sector == "ft") {
      j["rounds"] = config.rounds;
      j["ft_errors"] = config.ft_errors;
    }
  }
  if (c == "census") j["oracle"] = config.oracle;
  if (c == "ft-extend") {
    j["rounds"] = config.rounds;
    j["ft_errors"] = config.ft_errors;
  }
  if (c == "threshold") {
    j["theorem"] = config.theorem;
    j["w"] = config.w;
    j["wX"] = config.w_x;
    j["wZ"] = config.w_z;
    j["D"] = config.scaling;
    j["channel"] = channel_json(config.channel);
    if (!config.solve.empty()) j["solve"] = config.solve;
    if (!config.curve.empty()) {
      j["curve"] = config.curve;
      j["points"] = config.points;
    }
  }
  if (c == "badprob") {
    j["kind"] = config.bad_kind;
    j["m_max"] = config.m_max;
    j["step"] = config.step;
    j["rate_max"] = config.rate_max;
  }
  if (c == "fit") {
    if (!config.census_file.empty()) j["census"] = config.census_file;
    j["field"] = config.field;
    j["fit_m_min"] = config.fit_m_min;
    j["fit_m_max"] = config.fit_m_max;
  }
  j["format"] = config.format;
  return j;
}

int resolve_workers(const RunConfig& config) {
  if (config.workers > 0) return config.workers;
  if (config.workers < 0) throw ValidationError("--workers must be >= 0");
  if (const char* env = std::getenv("QBOUND_WORKERS"); env != nullptr && *env != '\0') {
    int value = 0;
    const std::string text(env);
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size() || value < 0) {
      throw ValidationError("QBOUND_WORKERS must be a non-negative integer, got '" + text + "'");
    }
    return value;
  }
  return 0;
}

// ---- build ----------------------------------------------------------------

void cmd_build(const RunConfig& config, std::ostream& out) {
  require_format(config, {"text", "json"});
  BuiltCode code = make_code(config.code);
  json j = json_envelope(config);
  std::ostringstream text;
  if (code.css) {
    const CssCode& c = *code.css;
    const std::size_t rx = c.gx().rank();
    const std::size_t rz = c.gz().rank();
    const std::string d = c.distance() ? std::to_string(*c.distance()) : "?";
    text << "[[" << c.n() << ',' << c.k() << ',' << d << "]]\n";
    text << "type: css\n";
    text << "n=" << c.n() << " k=" << c.k() << " d=" << (c.distance() ? d : "unknown") << '\n';
    text << "w=" << std::max(c.w_x(), c.w_z()) << " wX=" << c.w_x() << " wZ=" << c.w_z() << '\n';
    text << "rows(GX)=" << c.gx().rows() << " rank(GX)=" << rx << " rows(GZ)=" << c.gz().rows() << " rank(GZ)=" << rz
         << '\n';
    text << "k=n-rank(GX)-rank(GZ): " << (c.n() - rx - rz == c.k() ? "pass" : "fail") << '\n';
    text << "GX*GZ^T=0: pass\n";
    j["type"] = "css";
    j["n"] = c.n();
    j["k"] = c.k();
    j["d"] = c.distance() ? json(*c.distance()) : json(nullptr);
    j["w"] = std::max(c.w_x(), c.w_z());
    j["wX"] = c.w_x();
    j["wZ"] = c.w_z();
    j["rank_gx"] = rx;
    j["rank_gz"] = rz;
    j["commutation"] = "pass";
  } else {
    const StabilizerCode& s = *code.stabilizer;
    const std::string d = s.distance() ? std::to_string(*s.distance()) : "?";
    text << "[[" << s.n() << ',' << s.k() << ',' << d << "]]\n";
    text << "type: stabilizer\n";
    text << "n=" << s.n() << " k=" << s.k() << " d=" << (s.distance() ? d : "unknown") << '\n';
    text << "w=" << s.w() << '\n';
    text << "rows(G)=" << s.num_generators() << " rank(G)=" << s.r() << '\n';
    text << "H*G^T=0: pass\n";
    j["type"] = "stabilizer";
    j["n"] = s.n();
    j["k"] = s.k();
    j["d"] = s.distance() ? json(*s.distance()) : json(nullptr);
    j["w"] = s.w();
    j["rank_g"] = s.r();
    j["commutation"] = "pass";
  }
  emit(config, out, config.format == "json" ? j.dump(2) + "\n" : text.str());
}

// ---- census ---------------------------------------------------------------

void cmd_census(const RunConfig& config, std::ostream& out) {
  require_format(config, {"csv", "json"});
  require(config.m_max >= 1, "--m-max must be >= 1");
  require(config.max_stored >= 1, "--max-stored must be >= 1");
  BuiltCode code = make_code(config.code);
  const ClusterModel model = make_model(code, config);

  EnumerationOptions options;
  options.m_max = config.m_max;
  options.max_stored = config.max_stored;
  options.workers = resolve_workers(config);
  const ClusterCensus census = enumerate_clusters(model, options);

  std::optional<ClusterCensus> oracle;
  if (config.oracle) {
    BruteForceOptions bf;
    bf.m_max = config.m_max;
    oracle = brute_force_census(model, bf);
  }

  std::ostringstream doc;
  if (config.format == "csv") {
    write_csv_provenance(doc, config);
    doc << "m,distinct,irreducible,irreducible_nonstabilizer,paths,bound";
    if (oracle) doc << ",bf_distinct,bf_irreducible,bf_irreducible_nonstabilizer,bf_paths";
    doc << '\n';
    for (const CensusRow& row : census.rows) {
      doc << row.m << ',' << row.distinct << ',' << row.irreducible << ',' << row.irreducible_nonstabilizer << ','
          << row.paths << ',' << model.path_bound(row.m).str();
      if (oracle) {
        const CensusRow& b = oracle->at(row.m);
        doc << ',' << b.distinct << ',' << b.irreducible << ',' << b.irreducible_nonstabilizer << ',' << b.paths;
      }
      doc << '\n';
    }
    if (!census.split.empty()) {
      doc << "# split by qubit-error positions\n";
      doc << "# m,m_q,irreducible,irreducible_nonstabilizer\n";
      for (const SplitRow& s : census.split) {
        doc << "# " << s.m << ',' << s.m_q << ',' << s.irreducible << ',' << s.irreducible_nonstabilizer << '\n';
      }
    }
  } else {
    json j = json_envelope(config);
    json rows = json::array();
    for (const CensusRow& row : census.rows) {
      json r{{"m", row.m},
             {"distinct", row.distinct},
             {"irreducible", row.irreducible},
             {"irreducible_nonstabilizer", row.irreducible_nonstabilizer},
             {"paths", row.paths},
             {"bound", model.path_bound(row.m).str()}};
      if (oracle) {
        const CensusRow& b = oracle->at(row.m);
        r["bf_distinct"] = b.distinct;
        r["bf_irreducible"] = b.irreducible;
        r["bf_irreducible_nonstabilizer"] = b.irreducible_nonstabilizer;
        r["bf_paths"] = b.paths;
      }
      rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    if (!census.split.empty()) {
      json split = json::array();
      for (const SplitRow& s : census.split) {
        split.push_back({{"m", s.m},
                         {"m_q", s.m_q},
                         {"irreducible", s.irreducible},
                         {"irreducible_nonstabilizer", s.irreducible_nonstabilizer}});
      }
      j["split"] = std::move(split);
    }
    doc << j.dump(2) << '\n';
  }
  emit(config, out, doc.str());

  if (oracle && !(oracle->rows == census.rows)) {
    for (const CensusRow& row : census.rows) {
      if (!(row == oracle->at(row.m))) {
        throw std::runtime_error("oracle mismatch at m=" + std::to_string(row.m));
      }
    }
  }
}

// ---- threshold ------------------------------------------------------------

void cmd_threshold(const RunConfig& config, std::ostream& out) {
  const Theorem theorem = parse_theorem(config.theorem);
  const CodeParams params = theorem_code_params(config, theorem);
  validate_channel(config.channel);
  require(config.solve.empty() != config.curve.empty(), "threshold needs exactly one of --solve or --curve");

  if (!config.solve.empty()) {
    require_format(config, {"text", "csv", "json"});
    const FreeParam free = parse_free_param(config.solve);
    const double value = solve_threshold(params, free, config.channel, theorem);
    std::ostringstream doc;
    if (config.format == "text") {
      doc << fmt_fixed(value, 9) << '\n';
    } else if (config.format == "csv") {
      write_csv_provenance(doc, config);
      doc << "theorem,free,threshold\n" << to_string(theorem) << ',' << to_string(free) << ',' << fmt(value) << '\n';
    } else {
      json j = json_envelope(config);
      j["theorem"] = to_string(theorem);
      j["free"] = to_string(free);
      j["threshold"] = value;
      doc << j.dump(2) << '\n';
    }
    emit(config, out, doc.str());
    return;
  }

  require_format(config, {"csv", "json"});
  const auto colon = config.curve.find(':');
  require(colon != std::string::npos, "--curve takes the form x:z, e.g. y:p");
  const FreeParam x_param = parse_free_param(config.curve.substr(0, colon));
  const FreeParam z_param = parse_free_param(config.curve.substr(colon + 1));
  require(x_param != z_param, "--curve needs two different rates");
  require(config.points >= 2, "--points must be >= 2");

  const ChannelParams base = with_free_param(config.channel, z_param, 0.0, theorem);
  const double x_max = solve_threshold(params, x_param, base, theorem);
  const double budget = params.scaling.budget();

  std::vector<std::pair<double, double>> curve;
  for (std::size_t i = 0; i < config.points; ++i) {
    const double x = x_max * static_cast<double>(i) / static_cast<double>(config.points - 1);
    const ChannelParams at_x = with_free_param(base, x_param, x, theorem);
    double z = 0.0;
    if (theorem_lhs(theorem, params, at_x) <= budget) z = solve_threshold(params, z_param, at_x, theorem);
    curve.emplace_back(x, z);
  }

  std::ostringstream doc;
  if (config.format == "csv") {
    write_csv_provenance(doc, config);
    doc << to_string(x_param) << ',' << to_string(z_param) << '\n';
    for (const auto& [x, z] : curve) doc << fmt(x) << ',' << fmt(z) << '\n';
  } else {
    json j = json_envelope(config);
    j["theorem"] = to_string(theorem);
    j["x"] = to_string(x_param);
    j["z"] = to_string(z_param);
    json pts = json::array();
    for (const auto& [x, z] : curve) pts.push_back(json::array({x, z}));
    j["curve"] = std::move(pts);
    doc << j.dump(2) << '\n';
  }
  emit(config, out, doc.str());
}

// ---- ft-extend ------------------------------------------------------------

void cmd_ft_extend(const RunConfig& config, std::ostream& out) {
  require_format(config, {"text", "json"});
  require(config.rounds >= 1, "--rounds must be >= 1");
  BuiltCode code = make_code(config.code);
  const CodeSector sector = make_sector(code, config.ft_errors);
  const FtCode ft = ft_extend(sector, config.rounds);

  const BitMatrix& p = ft.checks();
  const BitMatrix& q = ft.degeneracy();
  const bool orthogonal = p.multiply_transpose(q).is_zero();
  const std::size_t rank_p = p.rank();
  const std::size_t rank_q = q.rank();
  const std::size_t k_ranks = ft.length() - rank_p - rank_q;
  if (!config.p_out.empty()) write_matrix(config.p_out, p);
  if (!config.q_out.empty()) write_matrix(config.q_out, q);

  std::ostringstream doc;
  if (config.format == "text") {
    doc << "N=" << ft.length() << '\n';
    doc << "qubit_columns=" << ft.qubit_columns() << " syndrome_columns=" << ft.length() - ft.qubit_columns() << '\n';
    doc << "K=" << k_ranks << " (base k=" << sector.k << ")\n";
    doc << "D_ft=" << (ft.distance() ? std::to_string(*ft.distance()) : "unknown") << '\n';
    doc << "max_row_weight(P)=" << p.max_row_weight() << '\n';
    doc << "PQ^T=0: " << (orthogonal ? "pass" : "fail") << '\n';
    doc << "K=k: " << (k_ranks == sector.k ? "pass" : "fail") << '\n';
  } else {
    json j = json_envelope(config);
    j["N"] = ft.length();
    j["qubit_columns"] = ft.qubit_columns();
    j["K"] = k_ranks;
    j["k"] = sector.k;
    j["D_ft"] = ft.distance() ? json(*ft.distance()) : json(nullptr);
    j["max_row_weight_P"] = p.max_row_weight();
    j["PQT_zero"] = orthogonal;
    doc << j.dump(2) << '\n';
  }
  emit(config, out, doc.str());
  if (!orthogonal) throw std::runtime_error("P Q^T != 0");
}

// ---- badprob --------------------------------------------------------------

void cmd_badprob(const RunConfig& config, std::ostream& out) {
  require_format(config, {"csv", "json"});
  require(config.m_max >= 1 && config.m_max <= 200, "--m-max must lie in [1, 200]");
  const std::vector<double> grid = rate_grid(config.step, config.rate_max);
  constexpr double kTolerance = 1e-12;

  struct Row {
    std::size_t m, m_q;
    double a, b, exact, bound;
  };
  std::vector<Row> rows;
  std::string a_name = "y";
  std::string b_name = "p";
  if (config.bad_kind == "css" || config.bad_kind == "depol") {
    const bool css = config.bad_kind == "css";
    for (std::size_t m = 1; m <= config.m_max; ++m) {
      for (double y : grid) {
        for (double p : grid) {
          const double exact = css ? exact_bad_probability_css(m, y, p) : exact_bad_probability_depol(m, y, p);
          const double bound = css ? bad_bound_css(m, y, p) : bad_bound_depol(m, y, p);
          rows.push_back({m, m, y, p, exact, bound});
        }
      }
    }
  } else if (config.bad_kind == "ft") {
    a_name = "p";
    b_name = "q";
    for (std::size_t m = 1; m <= config.m_max; ++m) {
      for (std::size_t m_q = 0; m_q <= m; ++m_q) {
        for (double p : grid) {
          for (double q : grid) {
            rows.push_back({m, m_q, p, q, exact_bad_probability_ft(m, m_q, p, q), bad_bound_ft(m, m_q, p, q)});
          }
        }
      }
    }
  } else {
    throw ValidationError("--kind must be css, depol or ft");
  }

  std::ostringstream doc;
  const bool ft = config.bad_kind == "ft";
  if (config.format == "csv") {
    write_csv_provenance(doc, config);
    doc << "m," << (ft ? "m_q," : "") << a_name << ',' << b_name << ",exact,bound,dominated\n";
    for (const Row& r : rows) {
      doc << r.m << ',';
      if (ft) doc << r.m_q << ',';
      doc << fmt(r.a) << ',' << fmt(r.b) << ',' << fmt(r.exact) << ',' << fmt(r.bound) << ','
          << (r.exact <= r.bound + kTolerance ? 1 : 0) << '\n';
    }
  } else {
    json j = json_envelope(config);
    json arr = json::array();
    for (const Row& r : rows) {
      json e{{"m", r.m}, {a_name, r.a}, {b_name, r.b}, {"exact", r.exact}, {"bound", r.bound}};
      if (ft) e["m_q"] = r.m_q;
      e["dominated"] = r.exact <= r.bound + kTolerance;
      arr.push_back(std::move(e));
    }
    j["rows"] = std::move(arr);
    doc << j.dump(2) << '\n';
  }
  emit(config, out, doc.str());
}

// ---- fit ------------------------------------------------------------------

ClusterCensus read_census_csv(std::istream& in) {
  ClusterCensus census;
  std::vector<std::string> header;
  std::string line;
  std::size_t number = 0;
  auto column = [&](const std::string& name) -> std::size_t {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    throw ValidationError("census CSV lacks column '" + name + "'");
  };
  std::size_t c_m = 0, c_d = 0, c_i = 0, c_n = 0, c_p = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const std::vector<std::string> cells = split_csv(t);
    if (header.empty()) {
      header = cells;
      c_m = column("m");
      c_d = column("distinct");
      c_i = column("irreducible");
      c_n = column("irreducible_nonstabilizer");
      c_p = column("paths");
      continue;
    }
    if (cells.size() != header.size()) {
      throw ValidationError("census CSV line " + std::to_string(number) + ": expected " +
                            std::to_string(header.size()) + " cells");
    }
    auto number_at = [&](std::size_t c) -> std::uint64_t {
      std::uint64_t v = 0;
      const std::string& s = cells[c];
      const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
      if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw ValidationError("census CSV line " + std::to_string(number) + ": bad integer '" + s + "'");
      }
      return v;
    };
    CensusRow row;
    row.m = number_at(c_m);
    row.distinct = number_at(c_d);
    row.irreducible = number_at(c_i);
    row.irreducible_nonstabilizer = number_at(c_n);
    row.paths = number_at(c_p);
    census.rows.push_back(row);
  }
  if (header.empty()) throw ValidationError("census CSV has no header");
  census.m_max = census.rows.empty() ? 0 : census.rows.back().m;
  return census;
}

void cmd_fit(const RunConfig& config, std::ostream& out) {
  require_format(config, {"json"});
  const CountField field = parse_count_field(config.field);
  ClusterCensus census;
  if (!config.census_file.empty()) {
    require(config.code.kind.empty(), "fit takes either --census or a code, not both");
    std::ifstream in(config.census_file);
    if (!in) throw ValidationError("cannot open census file " + config.census_file);
    census = read_census_csv(in);
  } else {
    require(!config.code.kind.empty(), "fit needs --census or a code");
    require(config.m_max >= 1, "--m-max must be >= 1");
    BuiltCode code = make_code(config.code);
    const ClusterModel model = make_model(code, config);
    EnumerationOptions options;
    options.m_max = config.m_max;
    options.max_stored = config.max_stored;
    options.workers = resolve_workers(config);
    census = enumerate_clusters(model, options);
  }
  const std::size_t hi = config.fit_m_max ? config.fit_m_max : census.m_max;
  const FitResult fit = fit_zeta(census, field, config.fit_m_min, hi);

  json j = json_envelope(config);
  j["field"] = to_string(field);
  j["intercept"] = fit.intercept;
  j["slope"] = fit.slope;
  j["growth_base"] = fit.growth_base;
  j["residual_sum_squares"] = fit.residual_sum_squares;
  j["m_min"] = fit.m_min;
  j["m_max"] = fit.m_max;
  j["weights_used"] = fit.weights_used;
  emit(config, out, j.dump(2) + "\n");
}

// ---- entry point ----------------------------------------------------------

namespace {

void add_code_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("code", c.code.kind, "Code family: toric, hgp, css, stabilizer")
      ->check(CLI::IsMember({"toric", "hgp", "css", "stabilizer"}));
  sub->add_option("--L", c.code.L, "Toric lattice size");
  sub->add_option("--h1", c.code.h1, "First classical check matrix (hgp)");
  sub->add_option("--h2", c.code.h2, "Second classical check matrix (hgp)");
  sub->add_option("--gx", c.code.gx, "X-type generator matrix (css)");
  sub->add_option("--gz", c.code.gz, "Z-type generator matrix (css)");
  sub->add_option("--g", c.code.g, "Binary generator matrix (A_X | A_Z) (stabilizer)");
  sub->add_option("--d", c.code.distance, "Known code distance");
}

void add_output_options(CLI::App* sub, RunConfig& c, std::vector<std::string> formats) {
  sub->add_option("--output,-o", c.output, "Output file (default stdout)");
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember(std::move(formats)));
}

void add_census_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--sector", c.sector, "Error sector: full, x, z, ft")
      ->check(CLI::IsMember({"full", "x", "z", "ft"}));
  sub->add_option("--m-max", c.m_max, "Largest cluster weight");
  sub->add_option("--rounds", c.rounds, "Measurement rounds for the ft sector");
  sub->add_option("--ft-errors", c.ft_errors, "CSS error type extended in the ft sector: x or z")
      ->check(CLI::IsMember({"x", "z"}));
  sub->add_option("--max-stored", c.max_stored, "Cap on stored distinct clusters");
  sub->add_option("--workers", c.workers, "Worker threads (default $QBOUND_WORKERS, else OpenMP default)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Threshold bounds for weight-limited quantum LDPC codes", kToolName};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.set_config("--config", "", "TOML/INI file with option values");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1);

  CLI::App* build = app.add_subcommand("build", "Construct or load a code and print its parameters");
  add_code_options(build, config);
  add_output_options(build, config, {"text", "json"});

  CLI::App* census = app.add_subcommand("census", "Count undetectable clusters by weight");
  add_code_options(census, config);
  add_census_options(census, config);
  census->add_flag("--oracle", config.oracle, "Add brute-force columns and require equality");
  add_output_options(census, config, {"csv", "json"});

  CLI::App* threshold = app.add_subcommand("threshold", "Evaluate or solve the threshold conditions");
  threshold->add_option("--theorem", config.theorem, "1, 2, 3s or 3c");
  threshold->add_option("--w", config.w, "Generator weight cap");
  threshold->add_option("--wX", config.w_x, "X generator weight cap");
  threshold->add_option("--wZ", config.w_z, "Z generator weight cap");
  threshold->add_option("--D", config.scaling, "Distance scaling constant, or inf");
  threshold->add_option("--y", config.channel.y, "Erasure rate");
  threshold->add_option("--p", config.channel.p, "Depolarizing rate");
  threshold->add_option("--pX", config.channel.p_x, "X error rate");
  threshold->add_option("--pZ", config.channel.p_z, "Z error rate");
  threshold->add_option("--q", config.channel.q, "Syndrome error rate");
  threshold->add_option("--solve", config.solve, "Rate to solve for: y, p, pX, pZ, q");
  threshold->add_option("--curve", config.curve, "Boundary curve x:z, e.g. y:p");
  threshold->add_option("--points", config.points, "Curve points");
  add_output_options(threshold, config, {"text", "csv", "json"});

  CLI::App* ft = app.add_subcommand("ft-extend", "Build the space-time code for repeated measurement");
  add_code_options(ft, config);
  ft->add_option("--rounds,-m", config.rounds, "Measurement rounds");
  ft->add_option("--ft-errors", config.ft_errors, "CSS error type: x or z")->check(CLI::IsMember({"x", "z"}));
  ft->add_option("--p-out", config.p_out, "Write P here (.alist or dense)");
  ft->add_option("--q-out", config.q_out, "Write Q here (.alist or dense)");
  add_output_options(ft, config, {"text", "json"});

  CLI::App* badprob = app.add_subcommand("badprob", "Exact bad-error probabilities against their bounds");
  badprob->add_option("--kind", config.bad_kind, "css, depol or ft")->check(CLI::IsMember({"css", "depol", "ft"}));
  badprob->add_option("--m-max", config.m_max, "Largest cluster weight");
  badprob->add_option("--step", config.step, "Rate grid step");
  badprob->add_option("--rate-max", config.rate_max, "Largest grid rate");
  add_output_options(badprob, config, {"csv", "json"});

  CLI::App* fit = app.add_subcommand("fit", "Fit ln(count) = A + zeta m over a census");
  fit->add_option("--census", config.census_file, "Census CSV written by the census command");
  add_code_options(fit, config);
  add_census_options(fit, config);
  fit->add_option("--field", config.field, "distinct, irreducible, irreducible_nonstabilizer, paths");
  fit->add_option("--fit-m-min", config.fit_m_min, "Smallest weight in the fit");
  fit->add_option("--fit-m-max", config.fit_m_max, "Largest weight in the fit (default: census maximum)");
  add_output_options(fit, config, {"json"});

  std::vector<const char*> argv;
  argv.push_back(kToolName);
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitValidation;
  }

  auto default_format = [&config](const char* f) {
    if (config.format.empty()) config.format = f;
  };
  try {
    if (build->parsed()) {
      config.command = "build";
      default_format("text");
      cmd_build(config, out);
    } else if (census->parsed()) {
      config.command = "census";
      default_format("csv");
      cmd_census(config, out);
    } else if (threshold->parsed()) {
      config.command = "threshold";
      default_format(config.solve.empty() ? "csv" : "text");
      cmd_threshold(config, out);
    } else if (ft->parsed()) {
      config.command = "ft-extend";
      default_format("text");
      cmd_ft_extend(config, out);
    } else if (badprob->parsed()) {
      config.command = "badprob";
      default_format("csv");
      cmd_badprob(config, out);
    } else if (fit->parsed()) {
      config.command = "fit";
      default_format("json");
      cmd_fit(config, out);
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace qbound::cli
