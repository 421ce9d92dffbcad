#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nspair/errors.hpp"
#include "nspair/germ_degree.hpp"
#include "nspair/invariants.hpp"
#include "nspair/linking.hpp"
#include "nspair/serialize.hpp"

namespace {

using namespace nspair;

struct GlobalOptions {
  std::string emit = "text";
  bool quiet = false;
};

std::string superscript(long long v) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴",
                                 "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string plain = std::to_string(v);
  std::string out;
  for (char c : plain) {
    if (c == '-')
      out += "⁻";
    else
      out += digits[c - '0'];
  }
  return out;
}

std::string h2_text(const std::vector<Int>& factors) {
  std::vector<std::string> parts;
  for (const Int& d : factors) {
    if (d == 1) continue;
    if (d == 0)
      parts.push_back("ℤ");
    else
      parts.push_back("ℤ/" + to_string(d));
  }
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " ⊕ ";
    out += parts[i];
  }
  return out;
}

std::string classification_summary(const ClassificationReport& r, std::optional<int> fiber_dim) {
  if (!r.is_ns_pair) {
    if (r.symmetry_sign == -1 && r.k % 2 == 1) return "NS-pair: no (odd k)";
    const char* group = r.symmetry_sign == -1 ? "H₂(X⁵)" : "coker(A)";
    return std::string("NS-pair: no; ") + group + " = " + h2_text(r.h2_invariant_factors);
  }
  std::string out = "NS-pair: yes; link: " + std::to_string(r.link_components);
  if (r.fiber) {
    const int dim = r.fiber->dim;
    out += " × S" + superscript(dim - 1) + "; fiber: S" + superscript(dim) + "_(" +
           std::to_string(r.link_components) + ")";
  } else {
    out += " components";
    (void)fiber_dim;
  }
  return out;
}

std::string classification_text(const ClassificationReport& r, std::optional<int> fiber_dim,
                                bool quiet) {
  std::string summary = classification_summary(r, fiber_dim);
  if (quiet) return summary + "\n";
  std::string out;
  out += "k = " + std::to_string(r.k) + "\n";
  out += "symmetry sign = " + std::to_string(r.symmetry_sign) + "\n";
  out += "det A = " + to_string(r.det_A) + "\n";
  if (r.pfaffian_A) out += "Pf A = " + to_string(*r.pfaffian_A) + "\n";
  if (r.det_R) out += "det R = " + to_string(*r.det_R) + "\n";
  out += std::string(r.symmetry_sign == -1 ? "H₂(X⁵)" : "coker(A)") + " = " +
         h2_text(r.h2_invariant_factors) + "\n";
  out += summary + "\n";
  return out;
}

std::string tri_text(TriState t) { return to_string(t); }

std::string fiber_text(const FiberDescriptor& f) {
  std::string out = "dim " + std::to_string(f.dim);
  if (f.betti) {
    out += "; betti";
    for (long long b : *f.betti) out += " " + std::to_string(b);
  }
  if (f.boundary_components)
    out += "; boundary components " + std::to_string(*f.boundary_components);
  if (f.bouquet) {
    if (f.bouquet->empty()) {
      out += "; contractible";
    } else {
      out += "; bouquet";
      bool first = true;
      for (const BouquetTerm& t : *f.bouquet) {
        out += first ? " " : " v ";
        first = false;
        out += (t.count ? std::to_string(*t.count) : std::string("?")) + " x S^" +
               std::to_string(t.sphere_dim);
      }
    }
  }
  out += "; torsion-free middle: " + tri_text(f.torsion_free_middle);
  out += "; simply connected: " + tri_text(f.simply_connected);
  return out;
}

std::string record_text(const NSInvariantRecord& r) {
  std::string out;
  out += "record: n = " + std::to_string(r.n) + ", p = " + std::to_string(r.p) + "\n";
  out += "link components: " +
         (r.link_components ? std::to_string(*r.link_components) : std::string("unknown")) + "\n";
  out += "degree: " + (r.degree ? std::to_string(*r.degree) : std::string("unknown")) + "\n";
  out += "trivial: " + tri_text(r.trivial) + "\n";
  out += "fiber: " + fiber_text(r.fiber) + "\n";
  out += "provenance:\n";
  for (const std::string& line : r.provenance) out += "  - " + line + "\n";
  return out;
}

Rat parse_rational_arg(const std::string& text) {
  const auto slash = text.find('/');
  auto digits_only = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!digits_only(text)) throw ParseError("malformed rational '" + text + "'", 0);
    return Rat(Int(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!digits_only(num) || !digits_only(den) || den[0] == '-')
    throw ParseError("malformed rational '" + text + "'", 0);
  Int d(den);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'", 0);
  return Rat(Int(num), d);
}

std::vector<std::string> split_vars(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

NSInvariantRecord load_input_record(const std::string& path) {
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".lkm")
    return to_record(classify(load_linking_matrix(path)));
  return load_record(path);
}

int run_classify(const std::string& path, std::optional<int> fiber_dim, const GlobalOptions& g) {
  LinkingMatrix m = load_linking_matrix(path);
  ClassificationReport report = classify(m, fiber_dim);
  if (g.emit == "json")
    std::cout << dump_json(to_json(report));
  else
    std::cout << classification_text(report, fiber_dim, g.quiet);
  return 0;
}

int run_degree(const std::string& text, const std::string& vars_csv, bool oracle,
               const std::string& radius_text, const GlobalOptions& g) {
  Polynomial germ = parse_germ(text, split_vars(vars_csv));
  DegreeResult result = elk_degree(germ);

  std::optional<long long> oracle_degree;
  Rat radius;
  if (oracle) {
    radius = parse_rational_arg(radius_text);
    oracle_degree = winding_degree(gradient(germ), radius);
    if (*oracle_degree != result.degree)
      throw ContradictionError("winding oracle reports degree " + std::to_string(*oracle_degree) +
                               " but the signature formula reports " +
                               std::to_string(result.degree));
  }

  if (g.emit == "json") {
    Json j = to_json(result);
    if (oracle) {
      Json o;
      o["method"] = "winding";
      o["radius"] = to_string(radius);
      o["degree"] = *oracle_degree;
      o["agrees"] = true;
      j["oracle"] = std::move(o);
    }
    std::cout << dump_json(j);
    return 0;
  }

  std::cout << "degree = " << result.degree << "\n";
  if (!g.quiet) {
    std::cout << "local algebra dimension = " << result.local_algebra_dim << "\n";
    std::cout << "method = " << to_string(result.method) << "\n";
    std::cout << "certificate: " << result.certificate << "\n";
  }
  if (oracle)
    std::cout << "oracle (winding, radius " << to_string(radius) << ") = " << *oracle_degree
              << "; agrees\n";
  return 0;
}

int emit_record(const NSInvariantRecord& rec, const std::string& op_line,
                const std::string& out_path, const GlobalOptions& g) {
  if (!out_path.empty()) save_record(out_path, rec);
  if (g.emit == "json") {
    std::cout << dump_json(to_json(rec));
    return 0;
  }
  std::cout << op_line << "\n";
  if (!g.quiet) std::cout << record_text(rec);
  if (!out_path.empty() && !g.quiet) std::cout << "wrote " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Neuwirth-Stallings pair toolkit: linking-matrix classification, local degrees "
               "of gradient germs, and Milnor-fiber invariant calculus"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--emit", global.emit, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--quiet", global.quiet, "Print only the summary line in text mode");

  // classify
  std::string classify_path;
  std::optional<int> classify_dim;
  CLI::App* cmd_classify = app.add_subcommand("classify", "Classify a linking matrix file");
  cmd_classify->add_option("file", classify_path, "Matrix file (.lkm)")->required();
  cmd_classify->add_option("--n", classify_dim,
                           "Fiber dimension for symmetric (+1) linking data; the skew case is "
                           "fixed at 3");

  // degree
  std::string degree_text;
  std::string degree_vars = "x,y";
  std::string degree_oracle;
  std::string degree_radius = "1/2";
  CLI::App* cmd_degree =
      app.add_subcommand("degree", "Local degree of the gradient of a polynomial germ");
  cmd_degree->add_option("germ", degree_text, "Germ expression text")->required();
  cmd_degree->add_option("--vars", degree_vars, "Comma-separated variable names")
      ->capture_default_str();
  cmd_degree->add_option("--oracle", degree_oracle, "Independent cross-check method")
      ->check(CLI::IsMember({"winding"}));
  cmd_degree->add_option("--radius", degree_radius, "Circle radius for the winding oracle")
      ->capture_default_str();

  // construct
  CLI::App* cmd_construct =
      app.add_subcommand("construct", "Derive a new invariant record from an input");
  cmd_construct->require_subcommand(1);
  std::string in_path, out_path;
  std::optional<int> higher_n;
  std::optional<std::size_t> higher_blocks;

  CLI::App* op_sum = cmd_construct->add_subcommand(
      "sum", "Connected-sum double along the boundary (dimension step up)");
  op_sum->add_option("--in", in_path, "Input record (.nsr) or matrix (.lkm)")->required();
  op_sum->add_option("--out", out_path, "Write the derived record here");

  CLI::App* op_spin = cmd_construct->add_subcommand("spin", "Spin the pair once");
  op_spin->add_option("--in", in_path, "Input record (.nsr) or matrix (.lkm)")->required();
  op_spin->add_option("--out", out_path, "Write the derived record here");

  CLI::App* op_project = cmd_construct->add_subcommand(
      "project", "Compose with a projection (target dimension drops by one)");
  op_project->add_option("--in", in_path, "Input record (.nsr) or matrix (.lkm)")->required();
  op_project->add_option("--out", out_path, "Write the derived record here");

  CLI::App* op_higher = cmd_construct->add_subcommand(
      "higher", "Higher-dimensional analogue from (-1)^n-symmetric linking data");
  op_higher->add_option("--n", higher_n, "Half the source dimension (n >= 3)")->required();
  op_higher->add_option("--in", in_path, "Linking matrix file (.lkm)");
  op_higher->add_option("--blocks", higher_blocks, "Use an elementary-block matrix of this many blocks");
  op_higher->add_option("--out", out_path, "Write the derived record here");

  // generate
  std::size_t gen_blocks = 0;
  std::string gen_out;
  CLI::App* cmd_generate =
      app.add_subcommand("generate", "Emit a direct sum of elementary unimodular blocks");
  cmd_generate->add_option("--blocks", gen_blocks, "Number of elementary 2x2 blocks")->required();
  cmd_generate->add_option("--out", gen_out, "Write the matrix file here");

  for (CLI::App* sub : {cmd_classify, cmd_degree, cmd_construct, cmd_generate, op_sum, op_spin,
                        op_project, op_higher})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cmd_classify) return run_classify(classify_path, classify_dim, global);
    if (*cmd_degree)
      return run_degree(degree_text, degree_vars, degree_oracle == "winding", degree_radius,
                        global);
    if (*cmd_generate) {
      LinkingMatrix m = generate_unimodular_blocks(gen_blocks);
      if (!gen_out.empty()) save_json_file(gen_out, to_json(m));
      if (global.emit == "json") {
        std::cout << dump_json(to_json(m));
      } else {
        std::cout << "generated " << m.k() << " x " << m.k()
                  << " elementary-block linking matrix";
        if (!gen_out.empty()) std::cout << " -> " << gen_out;
        std::cout << "\n";
      }
      return 0;
    }
    if (*cmd_construct) {
      if (*op_sum) {
        NSInvariantRecord in = load_input_record(in_path);
        NSInvariantRecord out = looijenga_sum(in);
        return emit_record(out,
                           "looijenga sum: (" + std::to_string(in.n) + "," + std::to_string(in.p) +
                               ") -> (" + std::to_string(out.n) + "," + std::to_string(out.p) + ")",
                           out_path, global);
      }
      if (*op_spin) {
        NSInvariantRecord in = load_input_record(in_path);
        NSInvariantRecord out = spun(in);
        return emit_record(out,
                           "spin: (" + std::to_string(in.n) + "," + std::to_string(in.p) +
                               ") -> (" + std::to_string(out.n) + "," + std::to_string(out.p) + ")",
                           out_path, global);
      }
      if (*op_project) {
        NSInvariantRecord in = load_input_record(in_path);
        NSInvariantRecord out = compose_projection(in);
        return emit_record(out,
                           "project: (" + std::to_string(in.n) + "," + std::to_string(in.p) +
                               ") -> (" + std::to_string(out.n) + "," + std::to_string(out.p) + ")",
                           out_path, global);
      }
      if (*op_higher) {
        const bool have_in = !in_path.empty();
        const bool have_blocks = higher_blocks.has_value();
        if (have_in == have_blocks)
          throw DimensionError("construct higher needs exactly one of --in or --blocks");
        LinkingMatrix m = have_blocks ? generate_unimodular_blocks(*higher_blocks)
                                      : load_linking_matrix(in_path);
        NSInvariantRecord out = higher_dim_construct(*higher_n, m);
        return emit_record(out,
                           "higher: n = " + std::to_string(*higher_n) + " -> (" +
                               std::to_string(out.n) + "," + std::to_string(out.p) + ")",
                           out_path, global);
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::Input ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
