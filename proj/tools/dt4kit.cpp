// dt4kit: command-line front end for the toolkit.
//
// Exit codes: 0 success, 1 usage or invalid input, 2 box instability,
// 3 resource limit.  Diagnostics go to stderr, results to stdout or --output.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dt4/charclass.hpp"
#include "dt4/error.hpp"
#include "dt4/ext_engine.hpp"
#include "dt4/localization.hpp"
#include "dt4/quiver.hpp"
#include "dt4/solid_partition.hpp"

namespace {

using Json = nlohmann::ordered_json;
using dt4::Error;
using dt4::ErrorKind;

// Result of a subcommand: the JSON document plus an optional flat table for CSV.
struct Output {
  Json doc;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, std::string("bad integer in ") + what + ": '" + item + "'");
    }
  }
  if (out.empty()) throw Error(ErrorKind::InvalidArgument, std::string(what) + " is empty");
  return out;
}

dt4::exact::BigRational parse_rational(const std::string& text) {
  dt4::exact::BigRational q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0)
    throw Error(ErrorKind::InvalidArgument, "bad rational '" + text + "'");
  q.canonicalize();
  return q;
}

// "i:v" pairs, e.g. "0:-1".
std::pair<std::size_t, std::string> parse_indexed(const std::string& text, const char* what) {
  const auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0)
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " expects INDEX:VALUE, got '" + text + "'");
  std::size_t index = 0;
  try {
    std::size_t used = 0;
    const long v = std::stol(text.substr(0, colon), &used);
    if (used != colon || v < 0) throw std::invalid_argument(text);
    index = static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument, std::string("bad index in ") + what + ": '" + text + "'");
  }
  return {index, text.substr(colon + 1)};
}

int env_limit(const char* name, int fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  try {
    std::size_t used = 0;
    const int v = std::stoi(raw, &used);
    if (used == std::string(raw).size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::InvalidArgument, std::string(name) + " must be a positive integer");
}

std::string str(long v) { return std::to_string(v); }
std::string str(const dt4::exact::BigRational& q) { return q.get_str(); }
std::string str(const dt4::exact::BigInt& z) { return z.get_str(); }

template <typename T>
Json str_array(const std::vector<T>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(str(x));
  return a;
}

Json boxes_json(const dt4::partitions::SolidPartition& sp) {
  Json a = Json::array();
  for (const auto& b : sp.boxes()) a.push_back({b[0], b[1], b[2], b[3]});
  return a;
}

// --- partitions ------------------------------------------------------------

struct PartitionsArgs {
  int n = 1;
  bool count_only = false;
};

Output run_partitions(const PartitionsArgs& a) {
  if (a.n < 0) throw Error(ErrorKind::InvalidArgument, "--n must be nonnegative");
  const auto points = dt4::partitions::enumerate(a.n, env_limit("DT4KIT_MAX_N", dt4::partitions::kDefaultMaxSize));
  Output out;
  out.doc["n"] = a.n;
  out.doc["count"] = str(static_cast<long>(points.size()));
  out.header = {"index", "boxes"};
  if (!a.count_only) {
    Json list = Json::array();
    for (std::size_t i = 0; i < points.size(); ++i) {
      list.push_back(boxes_json(points[i]));
      out.rows.push_back({std::to_string(i), boxes_json(points[i]).dump()});
    }
    out.doc["partitions"] = list;
  }
  return out;
}

// --- localize --------------------------------------------------------------

struct LocalizeArgs {
  int n = 1;
  std::vector<std::string> signs;
  std::string rule = "transport";
  std::optional<int> box_bound;
};

Output run_localize(const LocalizeArgs& a) {
  using namespace dt4::localization;
  if (a.n < 0) throw Error(ErrorKind::InvalidArgument, "--n must be nonnegative");
  const int max_n = env_limit("DT4KIT_MAX_N", dt4::partitions::kDefaultMaxSize);
  if (a.n > max_n)
    throw Error(ErrorKind::ResourceLimit, "--n " + std::to_string(a.n) + " exceeds DT4KIT_MAX_N = " + std::to_string(max_n));

  OrientationChoice orient;
  if (a.rule == "pairing") orient.rule = OrientationRule::PairingOnly;
  else if (a.rule != "transport") throw Error(ErrorKind::InvalidArgument, "unknown orientation rule '" + a.rule + "'");
  for (const auto& s : a.signs) {
    const auto [index, value] = parse_indexed(s, "--sign");
    if (value != "1" && value != "+1" && value != "-1")
      throw Error(ErrorKind::InvalidArgument, "sign must be +1 or -1, got '" + value + "'");
    orient.overrides[index] = value == "-1" ? -1 : 1;
  }
  LocalizationOptions options;
  options.ext.box_bound = a.box_bound;
  options.ext.max_size = max_n;

  Output out;
  out.doc["n_max"] = a.n;
  out.doc["orientation_rule"] = a.rule;
  out.doc["levels"] = Json::array();
  out.header = {"n", "index", "sign", "value"};
  std::size_t largest = 1;
  std::vector<LevelResult> levels;
  for (int n = 0; n <= a.n; ++n) {
    OrientationChoice level_orient;
    level_orient.rule = orient.rule;
    const std::size_t count = n == 0 ? 1 : dt4::partitions::enumerate(n, max_n).size();
    largest = count;
    if (n > 0)
      for (const auto& [index, sign] : orient.overrides)
        if (index < count) level_orient.overrides[index] = sign;
    levels.push_back(localize_level(n, level_orient, options));
  }
  for (const auto& [index, sign] : orient.overrides)
    if (index >= largest)
      throw Error(ErrorKind::InvalidArgument, "orientation override index " + std::to_string(index) + " out of range");
  for (const auto& level : levels) {
    out.doc["levels"].push_back(Json::parse(to_json(level)));
    if (level.n == 0) out.rows.push_back({"0", "0", "1", "1"});
    for (const auto& c : level.contributions)
      out.rows.push_back({std::to_string(level.n), std::to_string(c.fixed_point), std::to_string(c.sign_used),
                          c.value.to_string()});
  }
  out.doc["total"] = levels.back().total.to_string();
  const auto sym = levels.back().total.symmetric_string();
  out.doc["symmetric_form"] = sym ? Json(*sym) : Json(nullptr);
  return out;
}

// --- quiver ----------------------------------------------------------------

struct QuiverArgs {
  std::string preset;
  std::string file;
  std::string d;
  std::string theta;
  std::string e;
  std::string task;
  std::vector<std::string> values;
  std::string epsilon;
};

Output run_quiver(const QuiverArgs& a) {
  using namespace dt4::quiver;
  QuiverPresentation q;
  std::string source;
  if (!a.file.empty()) {
    std::ifstream in(a.file);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read quiver file '" + a.file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    q = parse_quiver_json(buf.str());
    source = "file";
  } else if (a.preset == "kp3" || a.preset.empty()) {
    q = kp3_quiver();
    source = "kp3";
  } else if (a.preset == "kp3-truncated") {
    q = kp3_truncated_quiver();
    source = "kp3-truncated";
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown preset '" + a.preset + "'");
  }
  const std::size_t n = static_cast<std::size_t>(q.vertex_count());
  auto vector_arg = [&](const std::string& text, const char* what, int fill) {
    std::vector<int> v = text.empty() ? std::vector<int>(n, fill) : parse_int_list(text, what);
    if (v.size() != n)
      throw Error(ErrorKind::InvalidArgument, std::string(what) + " needs " + std::to_string(n) + " entries");
    return v;
  };
  if (a.d.empty()) throw Error(ErrorKind::InvalidArgument, "--d is required");
  const DimensionVector d = vector_arg(a.d, "--d", 0);
  for (int x : d)
    if (x < 0) throw Error(ErrorKind::InvalidArgument, "--d entries must be nonnegative");
  const Stability theta = vector_arg(a.theta, "--theta", 0);

  Output out;
  out.doc["task"] = a.task;
  out.doc["quiver"] = source;
  out.doc["d"] = d;
  out.doc["theta"] = theta;
  Json r;
  if (a.task == "slope") {
    r["slope"] = str(slope(theta, d));
  } else if (a.task == "coprime") {
    r["coprime"] = is_coprime(d, theta);
  } else if (a.task == "extdims") {
    const ExtDims x = ext_dims(q, d);
    r["ext0"] = str(x.ext0);
    r["ext1"] = str(x.ext1);
    r["ext2"] = str(x.ext2);
  } else if (a.task == "vd") {
    r["virtual_dim"] = str(virtual_dim_ncdt4(q, d));
    r["full_euler_degree"] = str(full_euler_degree(q, d));
    if (!a.e.empty()) r["framed_virtual_dim"] = str(framed_virtual_dim(q, d, vector_arg(a.e, "--e", 0)));
  } else if (a.task == "framed") {
    const DimensionVector e = vector_arg(a.e, "--e", 0);
    const FramedQuiver f = a.epsilon.empty() ? framed_quiver(q, d, e, theta)
                                             : framed_quiver(q, d, e, theta, parse_rational(a.epsilon));
    r["quiver"] = Json::parse(to_json(f.quiver));
    r["d"] = f.d;
    r["theta"] = str_array(f.theta);
    r["epsilon"] = str(f.epsilon);
  } else if (a.task == "thin-stability") {
    ThinRepresentation rep;
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i] > 1) throw Error(ErrorKind::InvalidArgument, "thin-stability needs every d_i <= 1");
      if (d[i] == 1) rep.support.push_back(static_cast<int>(i));
    }
    for (const auto& v : a.values) {
      const auto [index, value] = parse_indexed(v, "--value");
      rep.arrow_values[index] = parse_rational(value);
    }
    r["stability"] = to_string(thin_stability(q, rep, theta));
  } else if (a.task == "split-check") {
    const SplitReport s = isotropic_split_check(q, d);
    r["paired"] = s.paired;
    r["ext2_half"] = str(s.ext2_half);
    r["moduli_dim"] = str(s.moduli_dim);
    r["ncdt4_degree"] = str(s.ncdt4_degree);
    r["ncdt3_degree"] = str(s.ncdt3_degree);
    r["degrees_match"] = s.degrees_match();
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown quiver task '" + a.task + "'");
  }
  out.doc["result"] = r;
  return out;
}

// --- charclass -------------------------------------------------------------

struct CharclassArgs {
  std::string task;
  long exponent = 1;
  int order = 10;
  long n = 1;
  std::string holonomy = "su4";
  std::string degree = "0,0";
  std::string degree2 = "0,0";
  std::string surface = "p2";
  std::string l1;
  std::string l2;
};

Output run_charclass(const CharclassArgs& a) {
  using namespace dt4::charclass;
  Output out;
  out.doc["task"] = a.task;
  if (a.task == "liqin") {
    out.header = {"eps1", "eps2", "chi", "k_plus_one", "listed_k", "closed_form"};
    Json rows = Json::array();
    bool offset = false;
    for (const auto& row : liqin_table()) {
      Json j;
      j["eps1"] = str(static_cast<long>(row.eps1));
      j["eps2"] = str(static_cast<long>(row.eps2));
      j["chi"] = str(row.chi);
      j["k_plus_one"] = row.k_plus_one ? Json(str(*row.k_plus_one)) : Json(nullptr);
      j["listed_k"] = str(row.listed_k);
      j["closed_form"] = str(row.closed_form);
      offset = offset || row.k_offset();
      out.rows.push_back({str(static_cast<long>(row.eps1)), str(static_cast<long>(row.eps2)), str(row.chi),
                          row.k_plus_one ? str(*row.k_plus_one) : "", str(row.listed_k), str(row.closed_form)});
      rows.push_back(j);
    }
    out.doc["rows"] = rows;
    out.doc["listed_k_offset"] = offset;
  } else if (a.task == "hrr") {
    const HypersurfaceContext ctx = p1p4_sextic_context();
    const auto d1 = parse_int_list(a.degree, "--degree");
    const auto d2 = parse_int_list(a.degree2, "--degree2");
    out.doc["degree"] = d1;
    out.doc["degree2"] = d2;
    out.doc["chi"] = str(hrr_chi(ctx, line_bundle(ctx.ambient, d1), line_bundle(ctx.ambient, d2)));
  } else if (a.task == "linecoh") {
    const HypersurfaceContext ctx = p1p4_sextic_context();
    const auto d = parse_int_list(a.degree, "--degree");
    const LineCohomology h = hypersurface_line_cohomology(ctx, d);
    out.doc["degree"] = d;
    out.doc["ambiguous"] = h.ambiguous;
    out.doc["dims"] = h.ambiguous ? Json(nullptr) : str_array(h.dims);
    if (h.ambiguous) out.doc["reason"] = h.reason;
    out.header = {"i", "h"};
    for (std::size_t i = 0; i < h.dims.size(); ++i) out.rows.push_back({std::to_string(i), str(h.dims[i])});
  } else if (a.task == "gco") {
    if (a.order < 0) throw Error(ErrorKind::InvalidArgument, "--order must be nonnegative");
    const int max_order = env_limit("DT4KIT_MAX_SERIES_ORDER", static_cast<int>(kMaxSeriesOrder));
    if (a.order > max_order) throw Error(ErrorKind::ResourceLimit, "--order exceeds DT4KIT_MAX_SERIES_ORDER");
    const PowerSeries s = gco_series(a.exponent, static_cast<std::size_t>(a.order));
    out.doc["exponent"] = str(a.exponent);
    out.doc["order"] = str(static_cast<long>(a.order));
    out.doc["coefficients"] = str_array(s.coefficients());
    out.header = {"power", "coefficient"};
    for (std::size_t k = 0; k < s.coefficients().size(); ++k)
      out.rows.push_back({std::to_string(k), str(s.coefficients()[k])});
  } else if (a.task == "l1l2") {
    if (a.l1.empty() || a.l2.empty()) throw Error(ErrorKind::InvalidArgument, "--l1 and --l2 are required");
    const auto l1 = parse_int_list(a.l1, "--l1");
    const auto l2 = parse_int_list(a.l2, "--l2");
    L1L2Input in;
    if (a.surface == "p2") {
      if (l1.size() != 1 || l2.size() != 1) throw Error(ErrorKind::InvalidArgument, "P2 line bundles take one degree");
      in = p2_input(l1[0], l2[0]);
    } else if (a.surface == "p1p1") {
      in = p1p1_input(l1, l2);
    } else {
      throw Error(ErrorKind::InvalidArgument, "unknown surface '" + a.surface + "'");
    }
    const L1L2Report rep = l1l2_identity_check(in);
    out.doc["surface"] = a.surface;
    out.doc["applicable"] = rep.applicable;
    if (!rep.applicable) out.doc["reason"] = rep.reason;
    out.doc["lhs"] = str(rep.lhs);
    out.doc["rhs"] = str(rep.rhs);
    out.doc["holds"] = rep.holds();
  } else if (a.task == "curvevd") {
    Holonomy h;
    if (a.holonomy == "su4") h = Holonomy::SU4;
    else if (a.holonomy == "sp2") h = Holonomy::Sp2;
    else throw Error(ErrorKind::InvalidArgument, "unknown holonomy '" + a.holonomy + "'");
    out.doc["n"] = str(a.n);
    out.doc["holonomy"] = a.holonomy;
    out.doc["vd"] = str(curve_vd(a.n, h));
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown charclass task '" + a.task + "'");
  }
  return out;
}

// --- rendering -------------------------------------------------------------

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_string()) {
    out.emplace_back(prefix, j.get<std::string>());
  } else {
    out.emplace_back(prefix, j.dump());
  }
}

std::string render(const Output& out, const std::string& format) {
  std::ostringstream s;
  if (format == "json") {
    s << out.doc.dump(2) << '\n';
    return s.str();
  }
  std::vector<std::pair<std::string, std::string>> flat;
  flatten(out.doc, "", flat);
  if (format == "text") {
    for (const auto& [k, v] : flat) s << k << ": " << v << '\n';
    return s.str();
  }
  if (out.header.empty()) {
    s << "key,value\n";
    for (const auto& [k, v] : flat) s << csv_field(k) << ',' << csv_field(v) << '\n';
    return s.str();
  }
  for (std::size_t i = 0; i < out.header.size(); ++i) s << (i ? "," : "") << csv_field(out.header[i]);
  s << '\n';
  for (const auto& row : out.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) s << (i ? "," : "") << csv_field(row[i]);
    s << '\n';
  }
  return s.str();
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BoxInstability: return 2;
    case ErrorKind::ResourceLimit: return 3;
    default: return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for DT4 invariants on Calabi-Yau 4-folds"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  std::string output;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--output", output, "Write to this file instead of stdout");

  PartitionsArgs pa;
  auto* partitions = app.add_subcommand("partitions", "Enumerate solid partitions of size n");
  partitions->add_option("--n", pa.n, "Size")->required();
  partitions->add_flag("--count-only", pa.count_only, "Only report the count");

  LocalizeArgs la;
  auto* localize = app.add_subcommand("localize", "Equivariant DT4 invariants of points on C^4 through q^n");
  localize->add_option("--n", la.n, "Largest number of points")->required();
  localize->add_option("--sign", la.signs, "Orientation override INDEX:+1|-1 (index within each level)");
  localize->add_option("--orientation-rule", la.rule, "transport (default) or pairing")
      ->check(CLI::IsMember({"transport", "pairing"}));
  localize->add_option("--box-bound", la.box_bound, "Weight box half-width (default n+2)");

  QuiverArgs qa;
  auto* quiver = app.add_subcommand("quiver", "Quiver stability and dimension calculus");
  quiver->add_option("--preset", qa.preset, "kp3 (default) or kp3-truncated");
  quiver->add_option("--file", qa.file, "Quiver JSON file");
  quiver->add_option("--d", qa.d, "Dimension vector, comma separated")->required();
  quiver->add_option("--theta", qa.theta, "Stability, comma separated (default 0)");
  quiver->add_option("--e", qa.e, "Framing vector, comma separated");
  quiver->add_option("--value", qa.values, "Arrow value INDEX:RATIONAL for thin-stability");
  quiver->add_option("--epsilon", qa.epsilon, "Framing perturbation (default from d and theta)");
  quiver->add_option("--task", qa.task, "Task")
      ->required()
      ->check(CLI::IsMember({"slope", "coprime", "extdims", "vd", "framed", "thin-stability", "split-check"}));

  CharclassArgs ca;
  auto* charclass = app.add_subcommand("charclass", "Characteristic-class computations");
  charclass->add_option("--task", ca.task, "Task")
      ->required()
      ->check(CLI::IsMember({"liqin", "hrr", "linecoh", "gco", "l1l2", "curvevd"}));
  charclass->add_option("--exponent", ca.exponent, "gco: exponent of prod (1-q^k)^-e");
  charclass->add_option("--order", ca.order, "gco: truncation order");
  charclass->add_option("--n", ca.n, "curvevd: n");
  charclass->add_option("--holonomy", ca.holonomy, "curvevd: su4 or sp2")->check(CLI::IsMember({"su4", "sp2"}));
  charclass->add_option("--degree", ca.degree, "hrr/linecoh: bidegree on the (2,5) hypersurface in P1xP4");
  charclass->add_option("--degree2", ca.degree2, "hrr: second bidegree, computes chi(O(degree), O(degree2))");
  charclass->add_option("--surface", ca.surface, "l1l2: p2 or p1p1")->check(CLI::IsMember({"p2", "p1p1"}));
  charclass->add_option("--l1", ca.l1, "l1l2: degree(s) of L1");
  charclass->add_option("--l2", ca.l2, "l1l2: degree(s) of L2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    Output out;
    if (*partitions) out = run_partitions(pa);
    else if (*localize) out = run_localize(la);
    else if (*quiver) out = run_quiver(qa);
    else out = run_charclass(ca);
    const std::string text = render(out, format);
    if (output.empty()) {
      std::cout << text;
    } else {
      std::ofstream file(output);
      if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write '" + output + "'");
      file << text;
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "dt4kit: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "dt4kit: " << e.what() << '\n';
    return 1;
  }
}
