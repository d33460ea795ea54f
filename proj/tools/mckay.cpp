#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>

#include "mckay/io.hpp"

using namespace mckay;
using io::Json;

namespace {

struct Options {
  bool json = false;
  std::uint64_t seed = 1;
  std::string out;
};

std::vector<long> parse_list(const std::string& text, const std::string& what) {
  std::vector<long> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long x = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(x);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kUsage, what + ": \"" + item + "\" is not an integer");
    }
  }
  return out;
}

std::vector<int> parse_corner(const std::string& text) {
  std::vector<int> out;
  for (long x : parse_list(text, "corner")) out.push_back(static_cast<int>(x));
  return out;
}

DimVector parse_framing(const std::string& text, const GroupData& g) {
  DimVector w;
  w.components = parse_list(text, "framing");
  if (w.components.size() != g.vertex_count()) {
    throw Error(ErrorCode::kUsage, "framing needs " + std::to_string(g.vertex_count()) + " entries");
  }
  return w;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

/// Dimension vector in vertex order, framing vertex last.
Json dims_json(const std::vector<std::size_t>& dims) { return Json(dims); }

void emit(const Options& opt, const Json& report, const std::string& text) {
  if (opt.json) {
    std::cout << io::dump(report);
  } else {
    std::cout << text;
  }
}

// quiver

int cmd_quiver(const Options& opt, const std::string& descriptor, const std::string& frame, bool triple) {
  const auto g = build_group(parse_descriptor(descriptor));
  Quiver q = mckay_quiver(g);
  if (triple) q = triple_quiver(q);
  if (!frame.empty()) q = frame_quiver(q, parse_framing(frame, g));
  const auto adj = q.adjacency();
  std::ostringstream os;
  os << "group " << q.group() << "\n";
  os << "vertices " << q.vertex_count() << "\n";
  os << "arrows " << q.arrow_count() << "\n";
  os << "adjacency\n";
  for (const auto& row : adj) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? " " : "") << row[c];
    os << "\n";
  }
  Json report;
  report["group"] = q.group();
  report["vertices"] = q.vertex_count();
  report["arrows"] = q.arrow_count();
  report["adjacency"] = adj;
  if (!opt.out.empty()) io::write_text_file(opt.out, io::dump(io::quiver_to_json(q)));
  emit(opt, report, os.str());
  return 0;
}

// hilbert

int cmd_hilbert(const Options& opt, const std::string& descriptor, const std::string& algebra_name,
                const std::string& corner_text, const std::string& frame, int kmax, int cap, bool oracle) {
  const auto g = build_group(parse_descriptor(descriptor));
  AlgebraKind kind;
  kind.base = io::algebra_base_from_string(algebra_name);
  DimVector w;
  if (kind.base == AlgebraBase::FramedPreprojective) {
    if (frame.empty()) throw Error(ErrorCode::kUsage, "the framed algebra needs --frame");
    w = parse_framing(frame, g);
  } else if (!frame.empty()) {
    throw Error(ErrorCode::kUsage, "--frame only applies to --algebra piw");
  }
  if (!corner_text.empty()) kind.corner = parse_corner(corner_text);
  if (kmax < 0) throw Error(ErrorCode::kUsage, "kmax must be nonnegative");
  const GradedAlgebra a(g, kind, w, cap);
  const auto dims = hilbert_sequence(a, kmax);

  std::vector<long> molien;
  if (oracle) {
    if (kind.base == AlgebraBase::FramedPreprojective) throw Error(ErrorCode::kUsage, "no oracle for the framed algebra");
    const bool with_z = kind.base == AlgebraBase::GradedPreprojective;
    molien.assign(dims.size(), 0);
    for (int i : a.endpoints())
      for (int j : a.endpoints()) {
        const auto s = molien_sequence(g, i, j, with_z, kmax);
        for (std::size_t k = 0; k < s.size(); ++k) molien[k] += s[k];
      }
  }
  std::ostringstream os;
  Json rows = Json::array();
  int first_mismatch = -1;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    os << k << "," << dims[k];
    Json row;
    row["k"] = k;
    row["dim"] = dims[k];
    if (oracle) {
      os << "," << molien[k];
      row["molien"] = molien[k];
      if (molien[k] != dims[k] && first_mismatch < 0) first_mismatch = static_cast<int>(k);
    }
    os << "\n";
    rows.push_back(std::move(row));
  }
  Json report;
  report["algebra"] = to_string(kind);
  report["group"] = to_string(g.descriptor);
  report["rows"] = rows;
  if (oracle) report["oracle_agrees"] = first_mismatch < 0;
  emit(opt, report, os.str());
  if (first_mismatch >= 0) {
    std::cerr << "OracleMismatch: path count and Molien coefficient differ in degree " << first_mismatch << "\n";
    return 4;
  }
  return 0;
}

// modules

FramedRep load_module(const std::string& path) {
  auto m = io::module_from_json(io::read_json_file(path));
  return m;
}

/// Exit 5 with per-vertex residual summaries when the relations fail.
bool report_residuals(const FramedRep& m) {
  bool bad = false;
  for (const auto& [v, r] : check_relations(m)) {
    if (r.is_zero()) continue;
    bad = true;
    std::size_t nonzero = 0;
    Rational largest = 0;
    for (std::size_t i = 0; i < r.rows(); ++i)
      for (std::size_t j = 0; j < r.cols(); ++j) {
        if (is_zero(r(i, j))) continue;
        ++nonzero;
        const Rational x = abs(r(i, j));
        if (x > largest) largest = x;
      }
    std::cerr << "RelationViolation: residual at vertex " << m.quiver.vertex_label(v) << " has " << nonzero
              << " nonzero entries, max |entry| = " << format_rational(largest) << "\n";
  }
  return bad;
}

void require_framed(const FramedRep& m) {
  if (!m.quiver.framed()) throw Error(ErrorCode::kUsage, "module must live on a framed quiver");
}

struct Verdict {
  bool semistable = false;
  bool stable = false;
  std::optional<std::vector<std::size_t>> witness;
  Rational witness_theta = 0;
};

Verdict stability_verdict(const FramedRep& m, const std::vector<int>& I) {
  Verdict v;
  v.semistable = is_semistable_for(m, I);
  v.stable = is_stable_for(m, I);
  if (v.stable) return v;
  const int inf = *m.quiver.infinity();
  const auto generated = generated_by_vertices(m, {inf});
  Submodule<Rational> witness = generated;
  if (v.semistable && submodule_dims(generated) == m.dims) {
    auto avoid = I;
    avoid.push_back(inf);
    witness = max_submodule_avoiding(m, avoid);
  }
  v.witness = submodule_dims(witness);
  v.witness_theta = theta_I(I, m.dim_vector()).evaluate(submodule_dim_vector(m, witness));
  return v;
}

int cmd_stability(const Options& opt, const std::string& path, const std::string& corner_text, bool brute,
                  std::uint32_t prime) {
  const auto m = load_module(path);
  require_framed(m);
  if (report_residuals(m)) return 5;
  const auto I = normalize_corner(parse_corner(corner_text), m.quiver.base_vertex_count());
  const auto v = stability_verdict(m, I);

  std::ostringstream os;
  Json report;
  os << "dims " << join(m.dims) << "\n";
  os << "semistable " << (v.semistable ? "yes" : "no") << "\n";
  os << "stable " << (v.stable ? "yes" : "no") << "\n";
  os << (v.stable ? "stable" : v.semistable ? "strictly semistable" : "unstable") << "\n";
  report["dims"] = dims_json(m.dims);
  report["semistable"] = v.semistable;
  report["stable"] = v.stable;
  if (v.witness) {
    os << "witness " << join(*v.witness) << " theta " << format_rational(v.witness_theta) << "\n";
    report["witness"] = dims_json(*v.witness);
    report["witness_theta"] = format_rational(v.witness_theta);
  }
  int status = 0;
  if (brute) {
    const auto b = brute_force_stability(m, theta_I(I, m.dim_vector()), prime);
    const auto reduced = specialized_stability_mod(m, I, prime);
    const bool agree = b.semistable == reduced.semistable && b.stable == reduced.stable;
    os << "reduction mod " << prime << ": semistable " << (reduced.semistable ? "yes" : "no") << ", stable "
       << (reduced.stable ? "yes" : "no") << "\n";
    os << "brute force over F_" << prime << ": semistable " << (b.semistable ? "yes" : "no") << ", stable "
       << (b.stable ? "yes" : "no") << ", " << b.submodules << " submodules\n";
    os << "agreement " << (agree ? "yes" : "no") << "\n";
    report["brute_force"] = {{"prime", prime},
                             {"reduced_semistable", reduced.semistable},
                             {"reduced_stable", reduced.stable},
                             {"semistable", b.semistable},
                             {"stable", b.stable},
                             {"submodules", b.submodules},
                             {"agrees", agree}};
    if (!agree) status = 4;
  }
  emit(opt, report, os.str());
  if (status == 4) std::cerr << "OracleMismatch: brute force disagrees with the specialized test\n";
  return status;
}

// vgit

Json summand_report(const PolystableDecomposition<Rational>& d) {
  Json j;
  j["core"] = dims_json(d.core.dims);
  Json simples = Json::array();
  for (const auto& [v, mult] : d.simples) simples.push_back({{"vertex", d.core.quiver.vertex_label(v)}, {"multiplicity", mult}});
  j["simples"] = simples;
  return j;
}

int cmd_vgit(const Options& opt, const std::string& path, const std::string& from_text, const std::string& to_text,
             const std::string& via_text, const std::string& out_dir) {
  const auto m = load_module(path);
  require_framed(m);
  if (report_residuals(m)) return 5;
  const int n = m.quiver.base_vertex_count();
  const auto from = normalize_corner(parse_corner(from_text), n);
  const auto to = normalize_corner(parse_corner(to_text), n);
  const auto direct = vgit_pushforward(m, from, to);
  const auto summands = direct.summands();

  std::vector<std::size_t> total(m.dims.size(), 0);
  for (const auto& s : summands)
    for (std::size_t v = 0; v < total.size(); ++v) total[v] += s.dims[v];
  const bool conserved = total == m.dims;

  std::ostringstream os;
  Json report = summand_report(direct);
  os << "input " << join(m.dims) << "\n";
  os << "core " << join(direct.core.dims) << "\n";
  for (const auto& [v, mult] : direct.simples) os << "simple at vertex " << m.quiver.vertex_label(v) << " multiplicity " << mult << "\n";
  os << "summands " << summands.size() << "\n";
  os << "dimension conserved " << (conserved ? "yes" : "no") << "\n";
  report["summand_count"] = summands.size();
  report["dimension_conserved"] = conserved;
  bool chain_ok = true;
  if (!via_text.empty()) {
    const auto via = normalize_corner(parse_corner(via_text), n);
    const auto chained = vgit_chain(m, {from, via, to});
    chain_ok = same_polystable(direct, chained);
    os << "chain through " << via_text << " agrees " << (chain_ok ? "yes" : "no") << "\n";
    report["chain"] = summand_report(chained);
    report["chain_agrees"] = chain_ok;
  }
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (std::size_t k = 0; k < summands.size(); ++k) {
      const auto file = (std::filesystem::path(out_dir) / ("summand_" + std::to_string(k) + ".json")).string();
      io::write_text_file(file, io::dump(io::module_to_json(summands[k])));
    }
  }
  emit(opt, report, os.str());
  if (!conserved || !chain_ok) {
    std::cerr << "OracleMismatch: " << (conserved ? "chain and direct pushforward differ" : "dimension not conserved") << "\n";
    return 4;
  }
  return 0;
}

// adhm and sample produce module files

int cmd_adhm(const Options& opt, const std::string& path) {
  const auto m = adhm_build_cyclic(io::adhm_from_json(io::read_json_file(path)));
  const auto text = io::dump(io::module_to_json(m));
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    io::write_text_file(opt.out, text);
    std::cout << "dims " << join(m.dims) << "\n";
  }
  return 0;
}

int cmd_sample(const Options& opt, const std::string& descriptor, const std::string& frame, const std::string& dims_text) {
  const auto g = build_group(parse_descriptor(descriptor));
  const auto q = frame_quiver(mckay_quiver(g), frame.empty() ? one_bar(g) : parse_framing(frame, g));
  std::vector<std::size_t> dims;
  for (long d : parse_list(dims_text, "dims")) {
    if (d < 0) throw Error(ErrorCode::kUsage, "negative dimension");
    dims.push_back(static_cast<std::size_t>(d));
  }
  if (dims.size() != static_cast<std::size_t>(q.vertex_count())) {
    throw Error(ErrorCode::kUsage, "dims needs " + std::to_string(q.vertex_count()) + " entries (framing vertex last)");
  }
  std::mt19937_64 rng(opt.seed);
  const auto m = random_flat_rep<Rational>(q, dims, rng);
  const auto text = io::dump(io::module_to_json(m));
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    io::write_text_file(opt.out, text);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computations with McKay quivers, preprojective algebras and their framed modules"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "machine-readable report");
  app.add_option("--seed", opt.seed, "seed for randomized steps");
  app.add_option("--out", opt.out, "output file");

  std::string descriptor, frame, corner, algebra = "pi", module_path, from, to, via, out_dir, dims;
  bool triple = false, oracle = false, brute = false;
  int kmax = 8, cap = kDefaultDegreeCap;
  std::uint32_t prime = 2;

  auto* quiver = app.add_subcommand("quiver", "build a McKay quiver and summarize it");
  quiver->add_option("group", descriptor, "group descriptor such as A3, D5, E6")->required();
  quiver->add_option("--frame", frame, "framing vector, comma separated");
  quiver->add_flag("--triple", triple, "add a loop at every vertex");

  auto* hilbert = app.add_subcommand("hilbert", "graded dimensions as k,dim CSV");
  hilbert->add_option("group", descriptor)->required();
  hilbert->add_option("--algebra", algebra, "pi, piw or pibullet");
  hilbert->add_option("--corner", corner, "corner vertices, comma separated");
  hilbert->add_option("--frame", frame, "framing vector for piw");
  hilbert->add_option("--kmax", kmax, "largest degree");
  hilbert->add_option("--cap", cap, "degree cap");
  hilbert->add_flag("--oracle", oracle, "add the Molien column and fail on mismatch");

  auto* stability = app.add_subcommand("stability", "theta_I stability of a framed module");
  stability->add_option("module", module_path)->required();
  stability->add_option("--corner", corner, "I, comma separated")->required();
  stability->add_flag("--brute-force", brute, "also enumerate submodules over a prime field");
  stability->add_option("--prime", prime, "prime for --brute-force");

  auto* vgit = app.add_subcommand("vgit", "push a stable module to a smaller corner");
  vgit->add_option("module", module_path)->required();
  vgit->add_option("--from", from, "source corner")->required();
  vgit->add_option("--to", to, "target corner")->required();
  vgit->add_option("--compare", via, "intermediate corner for a two-step comparison");
  vgit->add_option("--out-dir", out_dir, "directory for summand module files");

  auto* adhm = app.add_subcommand("adhm", "turn cyclic ADHM data into a framed module");
  adhm->add_option("data", module_path)->required();

  auto* sample = app.add_subcommand("sample", "random flat framed module");
  sample->add_option("group", descriptor)->required();
  sample->add_option("--dims", dims, "dimension vector, framing vertex last")->required();
  sample->add_option("--frame", frame, "framing vector (default: the trivial vertex)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*quiver) return cmd_quiver(opt, descriptor, frame, triple);
    if (*hilbert) return cmd_hilbert(opt, descriptor, algebra, corner, frame, kmax, cap, oracle);
    if (*stability) return cmd_stability(opt, module_path, corner, brute, prime);
    if (*vgit) return cmd_vgit(opt, module_path, from, to, via, out_dir);
    if (*adhm) return cmd_adhm(opt, module_path);
    if (*sample) return cmd_sample(opt, descriptor, frame, dims);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return io::exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
