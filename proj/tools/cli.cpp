#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "hmlift/analysis.hpp"
#include "hmlift/calculus.hpp"
#include "hmlift/catalog.hpp"
#include "hmlift/error.hpp"
#include "hmlift/kaehler.hpp"
#include "hmlift/lift.hpp"
#include "hmlift/numeric.hpp"
#include "hmlift/parser.hpp"

namespace hmlift::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUsage = 2;

// Input problems that are the caller's fault; reported with exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Loaded {
  std::string path;
  MapSource source;
  ParsedMap map;
};

Loaded load(const std::string& path) {
  const std::string text = read_file(path);
  try {
    MapSource source = parse_map_source(text);
    ParsedMap map = lower_map(source);
    return {path, std::move(source), std::move(map)};
  } catch (const Error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

RealPolyMap as_real(const Loaded& l) {
  if (const auto* r = std::get_if<RealPolyMap>(&l.map)) return *r;
  if (const auto* c = std::get_if<ComplexPolyMap>(&l.map)) return real_identification(*c);
  throw UsageError(l.path + ": map is not polynomial; use numeric-check");
}

json poly_json(const ComplexPoly& p) { return render(p); }

template <class Map>
json components_json(const Map& m) {
  json a = json::array();
  for (const auto& c : m.components()) a.push_back(render(c));
  return a;
}

json vector_json(const GaussianVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

const char* kind_name(Certificate::Kind k) {
  switch (k) {
    case Certificate::Kind::None: return "none";
    case Certificate::Kind::Dilation: return "dilation";
    case Certificate::Kind::Violation: return "violation";
    case Certificate::Kind::Witness: return "witness";
    case Certificate::Kind::MixedPartial: return "mixed_partial";
  }
  return "none";
}

json report_json(const CheckReport& r) {
  json c;
  c["kind"] = kind_name(r.certificate.kind);
  switch (r.certificate.kind) {
    case Certificate::Kind::None: break;
    case Certificate::Kind::Dilation: c["lambda2"] = poly_json(r.certificate.polynomial); break;
    case Certificate::Kind::Violation:
      c["pair"] = {r.certificate.k + 1, r.certificate.l + 1};
      if (r.property == "hessian-conditions") c["entry"] = {r.certificate.i + 1, r.certificate.j + 1};
      c["residual"] = poly_json(r.certificate.polynomial);
      break;
    case Certificate::Kind::Witness:
      c["pair"] = {r.certificate.k + 1, r.certificate.l + 1};
      c["point"] = vector_json(r.certificate.point);
      break;
    case Certificate::Kind::MixedPartial:
      c["first"] = poly_json(r.certificate.polynomial);
      c["second"] = poly_json(r.certificate.second);
      break;
  }
  return {{"property", r.property},
          {"verdict", r.verdict},
          {"certificate", c},
          {"degenerate", r.degenerate},
          {"notes", r.notes}};
}

std::string join_args(int argc, const char* const* argv) {
  std::string s;
  for (int k = 1; k < argc; ++k) s += (k > 1 ? " " : "") + std::string(argv[k]);
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::string lift_names_note(std::size_t m) {
  return "coordinates z1..z" + std::to_string(m) + " are the base, z" + std::to_string(m + 1) + "..z" +
         std::to_string(2 * m) + " the fiber w1..w" + std::to_string(m);
}

struct Options {
  bool json = false;

  std::string lift_file;
  bool lift_real = false;
  bool lift_complex = false;

  std::string check_file;
  bool harmonic = false, hwc = false, morphism = false, holomorphic = false, hessian = false, orth = false;
  std::string blocks;
  std::string expect;

  std::string antilift_file;
  std::size_t split = 0;

  std::string kaehler_file;
  std::string points_file;
  bool search = false;
  std::size_t budget = 500;
  std::uint64_t seed = 1;

  std::string numeric_file;
  std::size_t numeric_points = 100;
  std::uint64_t numeric_seed = 1;
  double tol = kNumericPassTolerance;
  std::string box;
  bool numeric_lift = false;
  std::string numeric_expect;

  std::string reproduce_id;
  bool reproduce_all = false;

  std::string dump_id;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out, json& doc) : o_(o), out_(out), doc_(doc) {}

  int lift() {
    if (o_.lift_real == o_.lift_complex) throw UsageError("lift needs exactly one of --real or --complex");
    const Loaded l = load(o_.lift_file);
    doc_["mode"] = o_.lift_real ? "real" : "complex";
    if (o_.lift_real) {
      const RealPolyMap phi = as_real(l);
      const RealPolyMap lift = complete_lift_real(phi);
      const RealPolyMatrix jac = jacobian(phi);
      json rows = json::array();
      for (std::size_t i = 0; i < jac.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < jac.cols(); ++j) row.push_back(render(jac(i, j)));
        rows.push_back(row);
      }
      doc_["domain_dim"] = lift.domain_dim();
      doc_["components"] = components_json(lift);
      doc_["matrix"] = rows;
      if (!o_.json) {
        out_ << "# Phi(x, y) = M(x) y with y_j = x" << phi.domain_dim() << "+j\n";
        out_ << to_source(lift, l.source.name + "_lift");
        out_ << "# M(x), one row per component\n";
        for (const auto& row : rows) {
          out_ << "#  ";
          for (const auto& e : row) out_ << ' ' << e.get<std::string>();
          out_ << '\n';
        }
      }
      return kExitOk;
    }
    const auto* phi = std::get_if<ComplexPolyMap>(&l.map);
    if (!phi) throw UsageError(l.path + ": --complex needs a map on C^m");
    const ComplexPolyMap lift = complete_lift_complex(*phi);
    doc_["domain_dim"] = lift.domain_dim();
    doc_["components"] = components_json(lift);
    doc_["coordinates"] = lift_names_note(phi->domain_dim());
    if (!o_.json) {
      out_ << "# " << lift_names_note(phi->domain_dim()) << '\n';
      out_ << to_source(lift, l.source.name + "_lift");
    }
    return kExitOk;
  }

  int check() {
    const Loaded l = load(o_.check_file);
    const RealPolyMap real = as_real(l);
    const auto* complex = std::get_if<ComplexPolyMap>(&l.map);
    const bool any = o_.harmonic || o_.hwc || o_.morphism || o_.holomorphic || o_.hessian || o_.orth;
    std::vector<CheckReport> reports;
    if (o_.harmonic || !any) reports.push_back(is_harmonic(real));
    if (o_.hwc || !any) reports.push_back(hwc_certificate(real));
    if (o_.morphism || !any) reports.push_back(is_harmonic_morphism(real));
    if (o_.holomorphic || (!any && complex)) {
      if (complex) {
        reports.push_back(is_holomorphic(*complex));
      } else {
        if (real.domain_dim() % 2 || real.codomain_dim() % 2)
          throw UsageError("--holomorphic needs even dimensions on a real map");
        reports.push_back(is_holomorphic(complexify(real)));
      }
    }
    if (o_.hessian) reports.push_back(hessian_conditions(real));
    if (o_.orth) {
      std::size_t p = real.domain_dim() / 2, q = real.domain_dim() - real.domain_dim() / 2;
      if (!o_.blocks.empty()) {
        const auto parts = split(o_.blocks, ',');
        if (parts.size() != 2) throw UsageError("--blocks expects P,Q");
        p = std::stoul(parts[0]);
        q = std::stoul(parts[1]);
      }
      reports.push_back(is_orthogonal_multiplication(real, p, q));
    }
    std::optional<bool> expect;
    if (o_.expect == "true") expect = true;
    if (o_.expect == "false") expect = false;
    int status = kExitOk;
    json arr = json::array();
    for (const auto& r : reports) {
      arr.push_back(report_json(r));
      if (!o_.json) {
        out_ << r.summary() << '\n';
        for (const auto& n : r.notes) out_ << "  note: " << n << '\n';
      }
      if (expect && r.verdict != *expect) status = kExitViolated;
    }
    doc_["map"] = l.source.name;
    doc_["reports"] = arr;
    return status;
  }

  int antilift() {
    const Loaded l = load(o_.antilift_file);
    const RealPolyMap phi = as_real(l);
    const AntiLiftResult r = anti_lift(phi, LiftSplit{o_.split});
    if (const auto* pre = std::get_if<RealPolyMap>(&r)) {
      doc_["is_complete_lift"] = true;
      doc_["preimage"] = components_json(*pre);
      if (!o_.json) out_ << "complete lift of:\n" << to_source(*pre, l.source.name + "_base");
      return kExitOk;
    }
    const auto& ob = std::get<Obstruction>(r);
    json j;
    j["stage"] = ob.stage == Obstruction::Stage::MixedPartial ? "mixed_partial" : "not_partial_linear";
    j["component"] = ob.component + 1;
    if (ob.stage == Obstruction::Stage::MixedPartial) {
      j["indices"] = {ob.first_index + 1, ob.second_index + 1};
      j["first"] = render(ob.first_value);
      j["second"] = render(ob.second_value);
    } else {
      j["monomial"] = render_monomial(ob.monomial, default_variable_names(phi.domain_dim(), Layout::Real));
    }
    doc_["is_complete_lift"] = false;
    doc_["obstruction"] = j;
    if (!o_.json) out_ << "not a complete lift: " << ob.describe() << '\n';
    return kExitOk;
  }

  int kaehler() {
    const Loaded l = load(o_.kaehler_file);
    const RealPolyMap phi = as_real(l);
    KaehlerReport r;
    if (o_.search) {
      if (!o_.points_file.empty()) throw UsageError("kaehler takes --points or --search, not both");
      r = search_points(phi, o_.budget, o_.seed);
    } else {
      if (o_.points_file.empty()) throw UsageError("kaehler needs --points FILE or --search");
      std::vector<GaussianVector> points;
      std::istringstream in(read_file(o_.points_file));
      std::string line;
      std::size_t lineno = 0;
      while (std::getline(in, line)) {
        ++lineno;
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        GaussianVector p;
        try {
          for (const auto& item : split(line, ',')) p.push_back(parse_gaussian(trim(item)));
        } catch (const Error& e) {
          throw UsageError(o_.points_file + ":" + std::to_string(lineno) + ": " + e.what());
        }
        points.push_back(std::move(p));
      }
      r = span_report(phi, points);
    }
    json pts = json::array();
    for (std::size_t a = 0; a < r.sample_points.size(); ++a)
      pts.push_back({{"point", vector_json(r.sample_points[a])},
                     {"gradient", vector_json(r.gradients[a])},
                     {"rank_after", r.rank_history[a]},
                     {"jacobian_rank", r.jacobian_ranks[a]}});
    doc_["half_dim"] = r.half_dim;
    doc_["samples"] = pts;
    doc_["rank"] = r.rank;
    doc_["isotropy_ok"] = r.isotropy_ok;
    doc_["pairwise_orthogonal"] = r.pairwise_orthogonal;
    doc_["verdict"] = to_string(r.verdict);
    if (!o_.json) {
      for (std::size_t a = 0; a < r.sample_points.size(); ++a) {
        out_ << "grad at (";
        for (std::size_t t = 0; t < r.sample_points[a].size(); ++t)
          out_ << (t ? ", " : "") << r.sample_points[a][t].to_string();
        out_ << ") = (";
        for (std::size_t t = 0; t < r.gradients[a].size(); ++t)
          out_ << (t ? ", " : "") << r.gradients[a][t].to_string();
        out_ << ")  rank " << r.rank_history[a] << ", jacobian rank " << r.jacobian_ranks[a] << '\n';
      }
      out_ << "isotropic: " << (r.isotropy_ok ? "yes" : "no")
           << ", pairwise orthogonal: " << (r.pairwise_orthogonal ? "yes" : "no") << '\n';
      out_ << "rank " << r.rank << " (m = " << r.half_dim << "), verdict " << to_string(r.verdict) << '\n';
    }
    return kExitOk;
  }

  int numeric() {
    const Loaded l = load(o_.numeric_file);
    if (l.source.domain.complex) throw UsageError(l.path + ": numeric-check needs a real map");
    SmoothMap phi = to_smooth(l.source);
    if (o_.numeric_lift) phi = numeric_complete_lift(phi);
    Box box(phi.domain_dim, {-2.0, 2.0});
    if (!o_.box.empty()) {
      const auto parts = split(o_.box, ',');
      if (parts.size() != 1 && parts.size() != phi.domain_dim)
        throw UsageError("--box needs one interval or one per coordinate");
      for (std::size_t j = 0; j < phi.domain_dim; ++j) {
        const auto ab = split(parts[parts.size() == 1 ? 0 : j], ':');
        if (ab.size() != 2) throw UsageError("--box intervals are written a:b");
        box[j] = {std::stod(ab[0]), std::stod(ab[1])};
      }
    }
    const ResidualReport r = numeric_check(phi, sample_points(phi, o_.numeric_points, o_.numeric_seed, box), o_.tol);
    doc_["map"] = phi.name;
    doc_["points"] = r.points.size();
    doc_["laplacian_residuals"] = r.laplacian_residuals;
    doc_["conformality_residual"] = r.conformality_residual;
    doc_["lambda2_range"] = {r.min_lambda2, r.max_lambda2};
    doc_["tolerance"] = r.tolerance;
    doc_["verdict"] = r.pass ? "pass" : "fail";
    doc_["borderline"] = r.borderline;
    if (r.witness) {
      doc_["witness"] = *r.witness;
      doc_["failing_check"] = r.failing_check;
    }
    if (!o_.json) {
      out_ << "numeric evidence for " << phi.name << " at " << r.points.size() << " points (tolerance " << r.tolerance
           << ")\n";
      for (std::size_t k = 0; k < r.laplacian_residuals.size(); ++k)
        out_ << "  max |laplacian " << phi.name << k + 1 << "| = " << r.laplacian_residuals[k] << '\n';
      out_ << "  max conformality residual = " << r.conformality_residual << '\n';
      out_ << "  lambda^2 in [" << r.min_lambda2 << ", " << r.max_lambda2 << "]\n";
      out_ << "verdict: " << (r.pass ? "pass" : "fail");
      if (r.witness) {
        out_ << " (" << r.failing_check << " at";
        for (double v : *r.witness) out_ << ' ' << v;
        out_ << ')';
      }
      if (r.borderline) out_ << " [borderline: residual between tolerance and 1e-3]";
      out_ << '\n';
    }
    if (o_.numeric_expect == "pass" && !r.pass) return kExitViolated;
    if (o_.numeric_expect == "fail" && r.worst_residual() < kNumericFailThreshold) return kExitViolated;
    return kExitOk;
  }

  int reproduce() {
    std::vector<std::string> ids;
    if (o_.reproduce_all) {
      if (!o_.reproduce_id.empty()) throw UsageError("reproduce takes an id or --all, not both");
      for (const auto& e : catalog()) ids.push_back(e.id);
    } else {
      if (o_.reproduce_id.empty()) throw UsageError("reproduce needs an id or --all");
      ids.push_back(o_.reproduce_id);
    }
    int status = kExitOk;
    json entries = json::array();
    std::size_t mismatched = 0;
    for (const auto& id : ids) {
      const EntryReport r = run_entry(id);
      json outcomes = json::array();
      for (const auto& o : r.outcomes)
        outcomes.push_back(
            {{"property", o.property}, {"expected", o.expected}, {"actual", o.actual}, {"detail", o.detail}});
      entries.push_back({{"id", r.id}, {"ok", r.ok()}, {"outcomes", outcomes}, {"details", r.details},
                         {"notes", r.notes}});
      if (!r.ok()) {
        status = kExitViolated;
        ++mismatched;
      }
      if (!o_.json) {
        out_ << "== " << r.id << ": " << lookup(id).summary << '\n';
        for (const auto& o : r.outcomes) {
          out_ << "  [" << (o.matches() ? "ok" : "MISMATCH") << "] " << o.property << ": expected "
               << (o.expected ? "true" : "false") << ", got " << (o.actual ? "true" : "false");
          if (!o.detail.empty()) out_ << "  (" << o.detail << ')';
          out_ << '\n';
        }
        for (const auto& d : r.details) out_ << "  " << d << '\n';
        for (const auto& n : r.notes) out_ << "  note: " << n << '\n';
      }
    }
    doc_["entries"] = entries;
    if (!o_.json) out_ << ids.size() << " entries, " << mismatched << " with mismatches\n";
    return status;
  }

  int catalog_list() {
    json arr = json::array();
    for (const auto& e : catalog()) {
      arr.push_back({{"id", e.id}, {"kind", to_string(e.kind)}, {"summary", e.summary}});
      if (!o_.json) out_ << e.id << "  [" << to_string(e.kind) << "]  " << e.summary << '\n';
    }
    doc_["entries"] = arr;
    return kExitOk;
  }

  int catalog_dump() {
    const CatalogEntry& e = lookup(o_.dump_id);
    doc_["id"] = e.id;
    doc_["definition"] = e.definition;
    if (!o_.json) out_ << e.definition;
    return kExitOk;
  }

 private:
  const Options& o_;
  std::ostream& out_;
  json& doc_;
};

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Complete lifts of polynomial maps and harmonic morphism checks", "hmlift"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Machine-readable report (schema 1)");

  auto* lift = app.add_subcommand("lift", "Complete lift of a polynomial map");
  lift->add_option("FILE", o.lift_file, "Map definition")->required();
  lift->add_flag("--real", o.lift_real, "Real complete lift");
  lift->add_flag("--complex", o.lift_complex, "Complex (Wirtinger) complete lift");

  auto* check = app.add_subcommand("check", "Exact property checks");
  check->add_option("FILE", o.check_file, "Map definition")->required();
  check->add_flag("--harmonic", o.harmonic, "Every component harmonic");
  check->add_flag("--hwc", o.hwc, "Horizontal weak conformality");
  check->add_flag("--morphism", o.morphism, "Harmonic morphism");
  check->add_flag("--holomorphic", o.holomorphic, "Antiholomorphic Jacobian vanishes");
  check->add_flag("--hessian-conditions", o.hessian, "Hessian criterion for lifts");
  check->add_flag("--orthogonal-multiplication", o.orth, "Bilinear map with |phi| = |x||y|");
  check->add_option("--blocks", o.blocks, "Block sizes P,Q for --orthogonal-multiplication");
  check->add_option("--expect", o.expect, "Expected verdict of every requested check")
      ->check(CLI::IsMember({"true", "false"}));

  auto* antilift = app.add_subcommand("antilift", "Decide whether a map is a complete lift");
  antilift->add_option("FILE", o.antilift_file, "Map definition")->required();
  antilift->add_option("--split", o.split, "Base dimension m (domain is R^m x R^m)")->required();

  auto* kaehler = app.add_subcommand("kaehler", "Gradient span test for maps to C");
  kaehler->add_option("FILE", o.kaehler_file, "Map definition")->required();
  kaehler->add_option("--points", o.points_file, "One point per line, comma-separated complex coordinates");
  kaehler->add_flag("--search", o.search, "Random search for rank-raising points");
  kaehler->add_option("--budget", o.budget, "Search trials")->capture_default_str();
  kaehler->add_option("--seed", o.seed, "Search seed")->capture_default_str();

  auto* numeric = app.add_subcommand("numeric-check", "Floating-point harmonic morphism evidence");
  numeric->add_option("FILE", o.numeric_file, "Map definition")->required();
  numeric->add_option("--points", o.numeric_points, "Number of sample points")->capture_default_str();
  numeric->add_option("--seed", o.numeric_seed, "Sampling seed")->capture_default_str();
  numeric->add_option("--tol", o.tol, "Pass tolerance")->capture_default_str();
  numeric->add_option("--box", o.box, "Sampling box a:b or a1:b1,...,am:bm (default -2:2)");
  numeric->add_flag("--lift", o.numeric_lift, "Check the complete lift instead of the map");
  numeric->add_option("--expect", o.numeric_expect, "Expected verdict")->check(CLI::IsMember({"pass", "fail"}));

  auto* reproduce = app.add_subcommand("reproduce", "Recompute catalog entries");
  reproduce->add_option("ID", o.reproduce_id, "Catalog id");
  reproduce->add_flag("--all", o.reproduce_all, "Every catalog entry");

  auto* cat = app.add_subcommand("catalog", "Built-in maps");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "List catalog ids");
  auto* cat_dump = cat->add_subcommand("dump", "Print an entry's map definition");
  cat_dump->add_option("ID", o.dump_id, "Catalog id")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  json doc;
  doc["schema"] = 1;
  doc["command"] = join_args(argc, argv);
  Runner runner(o, out, doc);
  int status = kExitOk;
  try {
    if (*lift) status = runner.lift();
    else if (*check) status = runner.check();
    else if (*antilift) status = runner.antilift();
    else if (*kaehler) status = runner.kaehler();
    else if (*numeric) status = runner.numeric();
    else if (*reproduce) status = runner.reproduce();
    else if (*cat_list) status = runner.catalog_list();
    else if (*cat_dump) status = runner.catalog_dump();
  } catch (const UsageError& e) {
    err << "hmlift: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "hmlift: " << e.what() << '\n';
    return kExitUsage;
  }
  doc["exit_status"] = status;
  if (o.json) out << doc.dump(2) << '\n';
  return status;
}

}  // namespace hmlift::cli
