#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "placto/io.hpp"
#include "placto/knuth.hpp"
#include "placto/suites.hpp"

using namespace placto;

namespace {

enum Exit { kOk = 0, kInput = 1, kInvariant = 2, kUsage = 64 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Inline JSON, or @path to read it from a file.
Json read_json(const std::string& text) {
  std::string body = text;
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw InputError("cannot read " + text.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return Json::parse(body);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("bad JSON: ") + e.what());
  }
}

/// "3,2,1", "" or a JSON array.
Partition read_partition(const std::string& text) {
  if (!text.empty() && text[0] == '[') return partition_from_json(read_json(text));
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size()) throw InputError("bad partition: " + text);
    parts.push_back(v);
  }
  return partition_from_json(Json(parts));
}

void emit(const Json& j, const std::string& format, const std::string& table) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << table;
}

std::string report_table(const Report& r) {
  std::ostringstream os;
  os << (r.ok() ? "PASS " : "FAIL ") << r.name << "  checks=" << r.checks << " domain=" << r.domain_size
     << " max_degree=" << r.max_degree << " elapsed_ms=" << static_cast<long>(r.elapsed_ms) << "\n";
  for (const auto& f : r.failures) os << "  " << f << "\n";
  return os.str();
}

std::string rows_table(const Tableau& t) {
  std::string out;
  for (const auto& row : t.display_rows()) out += "  " + to_string(row) + "\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plactic algebra of rational pairs: normal forms, bijections and identity checks."};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "table";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));

  auto* normalize = app.add_subcommand("normalize", "Normal form t^epsilon u_(S,T) of a word");
  std::vector<std::string> tokens;
  normalize->add_option("word", tokens, "Letters such as 3 and 3v");

  auto* bijection = app.add_subcommand("bijection", "(X, Y) -> (Y', X', Z)");
  std::string x_text, y_text;
  bool verify = false, trace = false;
  bijection->add_option("--X", x_text, "Matrix in M_{A,N} (JSON or @file)")->required();
  bijection->add_option("--Y", y_text, "Matrix in M_{B,Nv} (JSON or @file)")->required();
  bijection->add_flag("--verify", verify, "Re-check both invariants and the inverse");
  bijection->add_flag("--trace", trace, "Include the intermediate stages");

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  SuiteOptions opt;
  std::string caps, sig_a, sig_b;
  std::string suite_help = "Suite:";
  std::vector<std::string> names;
  for (const auto& s : suites()) {
    names.push_back(s.name);
    suite_help += "\n  " + s.name + ": " + s.description;
  }
  verify_cmd->add_option("suite", suite, suite_help)->required();
  verify_cmd->add_option("--n", opt.n, "Relation index bound");
  verify_cmd->add_option("--deg", opt.deg, "x-degree cap");
  verify_cmd->add_option("--kmax", opt.kmax, "Power-sum bound");
  verify_cmd->add_option("--gamma", opt.gamma, "Size bound for s_gamma");
  verify_cmd->add_option("--caps", caps, "total_cap,letter_cap");
  verify_cmd->add_option("--A", sig_a, "Degree signature of A, e.g. 01");
  verify_cmd->add_option("--B", sig_b, "Degree signature of B, e.g. 01");
  verify_cmd->add_option("--seed", opt.seed, "Seed for sampled contexts");

  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^lambda_{mu nu}");
  std::string lam_text, mu_text, nu_text;
  lr->add_option("lambda", lam_text)->required();
  lr->add_option("mu", mu_text)->required();
  lr->add_option("nu", nu_text)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*normalize) {
      Word w;
      for (const auto& t : tokens) {
        Word part = parse_word(t);
        w.insert(w.end(), part.begin(), part.end());
      }
      NormalForm nf = normalize_word(w);
      emit(to_json(nf), format,
           "epsilon = " + std::to_string(nf.epsilon) + "\nS:\n" + rows_table(nf.pair.S) + "T:\n" + rows_table(nf.pair.T));
      return kOk;
    }

    if (*bijection) {
      GeneralizedMatrix X = matrix_from_json(read_json(x_text));
      GeneralizedMatrix Y = matrix_from_json(read_json(y_text));
      if (!X.col_alphabet().is_natural() || !Y.col_alphabet().is_natural_dual())
        throw InputError("X needs columns N and Y needs columns Nv");
      BijectionResult r = main_bijection(X, Y, trace);
      Json out = to_json(r);
      bool ok = true;
      if (verify) {
        Report rep = verify_main_bijection(X, Y, r);
        out["verified"] = rep.ok();
        out["failures"] = rep.failures;
        ok = rep.ok();
      }
      std::string table = "Y' = " + to_string(r.Yp) + "\nX' = " + to_string(r.Xp) + "\nZ = " + to_string(r.Z) + "\n";
      if (r.trace)
        for (const auto& l : r.trace->lines()) table += "  " + l + "\n";
      if (verify) table += ok ? "verified\n" : "VERIFICATION FAILED\n";
      emit(out, format, table);
      return ok ? kOk : kInvariant;
    }

    if (*verify_cmd) {
      if (std::find(names.begin(), names.end(), suite) == names.end()) {
        std::cerr << "unknown suite: " << suite << "\n";
        return kUsage;
      }
      if (!caps.empty()) {
        char comma = 0;
        std::istringstream is(caps);
        if (!(is >> opt.total_cap >> comma >> opt.letter_cap) || comma != ',') throw InputError("--caps expects total,letters");
      }
      for (const auto* s : {&sig_a, &sig_b})
        if (!s->empty() && (s->size() > 8 || s->find_first_not_of("01") != std::string::npos))
          throw InputError("degree signatures are bitstrings such as 01");
      if (!sig_a.empty()) opt.A = sig_a;
      if (!sig_b.empty()) opt.B = sig_b;
      if (opt.n < 1 || opt.deg < 0 || opt.kmax < 1 || opt.gamma < 0 || opt.total_cap < 0 || opt.letter_cap < 1)
        throw InputError("caps must be positive");
      Report r = run_suite(suite, opt);
      emit(to_json(r), format, report_table(r));
      return r.ok() ? kOk : kInvariant;
    }

    if (*lr) {
      Partition lam = read_partition(lam_text), mu = read_partition(mu_text), nu = read_partition(nu_text);
      if (lam.size() != mu.size() + nu.size()) std::cerr << "warning: |lambda| != |mu| + |nu|\n";
      auto c = lr_coefficient(lam, mu, nu);
      emit(Json{{"lambda", to_json(lam)}, {"mu", to_json(mu)}, {"nu", to_json(nu)}, {"coefficient", c}}, format,
           std::to_string(c) + "\n");
      return kOk;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInvariant;
  }
  return kUsage;
}
