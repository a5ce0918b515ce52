#include "laplace2sq/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "laplace2sq/constructor.hpp"
#include "laplace2sq/gaussian.hpp"
#include "laplace2sq/oracle.hpp"
#include "laplace2sq/spectrum.hpp"

namespace laplace2sq {

namespace {

using u64 = std::uint64_t;
using json = nlohmann::ordered_json;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BigInt parse_big(const std::string& s, const char* what) {
  try {
    return BigInt(s);
  } catch (const std::invalid_argument&) {
    throw usage_error(std::string("invalid integer for ") + what + ": '" + s + "'");
  }
}

u64 parse_u64(const std::string& s, const char* what) {
  const BigInt v = parse_big(s, what);
  if (!v.fits_uint64()) {
    throw std::domain_error(std::string(what) + " '" + s + "' exceeds the supported 64-bit width");
  }
  return v.to_uint64();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp + " for writing");
    f << content;
    f.flush();
    if (!f) throw std::runtime_error("short write to " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
  }
}

u64 budget_from_env() {
  const char* env = std::getenv("LAPLACE2SQ_BUDGET");
  if (!env || !*env) return kDefaultScanBudget;
  try {
    const BigInt v{std::string_view(env)};
    if (v.is_negative() || v.is_zero() || !v.fits_uint64()) {
      throw std::domain_error("");
    }
    return v.to_uint64();
  } catch (const std::exception&) {
    throw std::domain_error("LAPLACE2SQ_BUDGET must be a positive 64-bit integer");
  }
}

json recipe_json(const Recipe& r) {
  json j;
  j["target"] = r.target;
  j["branch"] = to_string(r.branch);
  j["k"] = r.k;
  j["p1"] = std::to_string(r.p1);
  if (r.p2 != 0) j["p2"] = std::to_string(r.p2);
  j["value"] = r.value.to_string();
  j["verified"] = r.verified;
  return j;
}

std::string recipe_text(const Recipe& r) {
  std::ostringstream os;
  os << "target=" << r.target << " branch=" << to_string(r.branch) << " k=" << r.k
     << " p1=" << r.p1;
  if (r.p2 != 0) os << " p2=" << r.p2;
  os << " value=" << r.value << " verified=" << (r.verified ? "true" : "false");
  return os.str();
}

json witnesses_json(const MultiplicityReport& rep) {
  json w = json::array();
  for (const auto& tuple : rep.witnesses) {
    json t = json::array();
    for (const auto& v : tuple) t.push_back(v.to_string());
    w.push_back(std::move(t));
  }
  return w;
}

struct TableRow {
  u64 lambda = 0;
  u64 multiplicity = 0;
  u64 num_reps = 0;
  bool has_diagonal = false;
  bool has_zero = false;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Laplacian eigenvalue multiplicities on the square via sums of two squares"};
  app.name("laplace2sq");
  app.require_subcommand(1);

  std::string arg_n, format;

  auto* reps_cmd = app.add_subcommand("reps", "enumerate representations N = a^2 + b^2, 0 <= a <= b");
  reps_cmd->add_option("N", arg_n, "integer to represent")->required();
  reps_cmd->add_option("--format", format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  int dim = 2;
  auto* mult_cmd = app.add_subcommand("mult", "eigenvalue multiplicity of N");
  mult_cmd->add_option("N", arg_n, "eigenvalue candidate")->required();
  mult_cmd->add_option("--dim", dim, "dimension (default 2)")->check(CLI::Range(2, 20));
  mult_cmd->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

  auto* split_cmd = app.add_subcommand("split", "write a prime p ≡ 1 (mod 4) as a^2 + b^2");
  split_cmd->add_option("p", arg_n, "prime to split")->required();
  split_cmd->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

  u64 count = 1;
  auto* construct_cmd = app.add_subcommand("construct", "build an eigenvalue with multiplicity n");
  construct_cmd->add_option("n", arg_n, "target multiplicity")->required();
  construct_cmd->add_option("--count", count, "number of distinct constructions")
      ->check(CLI::PositiveNumber);
  construct_cmd->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

  u64 bound = 0;
  auto* smallest_cmd = app.add_subcommand("smallest", "least eigenvalue with multiplicity n");
  smallest_cmd->add_option("n", arg_n, "target multiplicity")->required();
  smallest_cmd->add_option("--bound", bound, "scan bound")->required()->check(CLI::PositiveNumber);
  smallest_cmd->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

  u64 max = 0;
  std::string out_path;
  auto* table_cmd = app.add_subcommand("table", "per-eigenvalue table for 1..max");
  table_cmd->add_option("--max", max, "upper bound")->required()->check(CLI::PositiveNumber);
  table_cmd->add_option("--dim", dim, "dimension (default 2)")->check(CLI::Range(2, 20));
  table_cmd->add_option("--out", out_path, "write output atomically to this file");
  table_cmd->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

  unsigned jobs = 1;
  auto* verify_cmd = app.add_subcommand("verify", "cross-check enumeration against brute force");
  verify_cmd->add_option("--max", max, "upper bound")->required()->check(CLI::PositiveNumber);
  verify_cmd->add_option("--dim", dim, "dimension (default 2)")->check(CLI::Range(2, 20));
  verify_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 64));
  verify_cmd->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

  auto* highdim_cmd = app.add_subcommand("highdim", "survey viable multiplicities in dimension d");
  highdim_cmd->add_option("--dim", dim, "dimension")->required()->check(CLI::Range(3, 20));
  highdim_cmd->add_option("--bound", bound, "survey bound")->required()->check(CLI::PositiveNumber);
  highdim_cmd->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    const u64 budget = budget_from_env();

    if (reps_cmd->parsed()) {
      const u64 n = parse_u64(arg_n, "N");
      const RepSet rs = enumerate_reps(factorize(n));
      if (format == "json") {
        json j;
        j["n"] = rs.n.to_string();
        j["count"] = rs.reps.size();
        json arr = json::array();
        for (const auto& r : rs.reps) {
          arr.push_back({{"a", r.a.to_string()}, {"b", r.b.to_string()}, {"kind", to_string(r.kind)}});
        }
        j["reps"] = std::move(arr);
        out << dump(j);
      } else if (format == "csv") {
        out << "a,b,kind\n";
        for (const auto& r : rs.reps) out << r.a << ',' << r.b << ',' << to_string(r.kind) << '\n';
      } else {
        for (const auto& r : rs.reps) out << r.a << ' ' << r.b << '\n';
      }
      return 0;
    }

    if (mult_cmd->parsed()) {
      const u64 n = parse_u64(arg_n, "N");
      const MultiplicityReport rep =
          dim == 2 ? multiplicity_2d(n) : multiplicity_nd(n, dim, kDefaultWitnessLimit, budget);
      if (format == "json") {
        json j;
        j["lambda"] = rep.lambda.to_string();
        j["dim"] = rep.dim;
        j["multiplicity"] = rep.multiplicity;
        j["witnesses_materialized"] = rep.witnesses_materialized;
        if (rep.witnesses_materialized) j["witnesses"] = witnesses_json(rep);
        out << dump(j);
      } else {
        out << rep.multiplicity << '\n';
      }
      return 0;
    }

    if (split_cmd->parsed()) {
      const u64 p = parse_u64(arg_n, "p");
      const auto [a, b] = split_prime(p);
      if (format == "json") {
        json j;
        j["p"] = std::to_string(p);
        j["a"] = std::to_string(a);
        j["b"] = std::to_string(b);
        out << dump(j);
      } else {
        out << a << ' ' << b << '\n';
      }
      return 0;
    }

    if (construct_cmd->parsed()) {
      const u64 n = parse_u64(arg_n, "n");
      const std::vector<Recipe> recipes =
          count == 1 ? std::vector<Recipe>{construct(n)} : construct_many(n, count);
      if (format == "json") {
        if (recipes.size() == 1) {
          out << dump(recipe_json(recipes[0]));
        } else {
          json arr = json::array();
          for (const auto& r : recipes) arr.push_back(recipe_json(r));
          out << dump(arr);
        }
      } else {
        for (const auto& r : recipes) out << recipe_text(r) << '\n';
      }
      return 0;
    }

    if (smallest_cmd->parsed()) {
      const u64 n = parse_u64(arg_n, "n");
      const auto found = smallest_with_multiplicity(n, bound, budget);
      if (format == "json") {
        json j;
        j["target"] = n;
        j["bound"] = bound;
        j["lambda"] = found ? json(std::to_string(*found)) : json(nullptr);
        out << dump(j);
      } else {
        if (found) out << *found << '\n';
        else out << "none\n";
      }
      return 0;
    }

    if (table_cmd->parsed()) {
      const bool as_json = format == "json";
      json arr = json::array();
      std::ostringstream os;
      if (!as_json) os << "lambda,multiplicity,num_reps,has_diagonal,has_zero\n";
      for (u64 lambda = 1; lambda <= max; ++lambda) {
        const RepSet rs = enumerate_reps(factorize(lambda));
        TableRow row;
        row.lambda = lambda;
        row.num_reps = rs.reps.size();
        u64 generic = 0;
        for (const auto& r : rs.reps) {
          if (r.kind == RepKind::Generic) ++generic;
          else if (r.kind == RepKind::Diagonal) row.has_diagonal = true;
          else row.has_zero = true;
        }
        row.multiplicity = dim == 2 ? 2 * generic + (row.has_diagonal ? 1 : 0)
                                    : multiplicity_nd(lambda, dim, 0, budget).multiplicity;
        if (as_json) {
          arr.push_back({{"lambda", std::to_string(row.lambda)},
                         {"multiplicity", row.multiplicity},
                         {"num_reps", row.num_reps},
                         {"has_diagonal", row.has_diagonal},
                         {"has_zero", row.has_zero}});
        } else {
          os << row.lambda << ',' << row.multiplicity << ',' << row.num_reps << ','
             << (row.has_diagonal ? 1 : 0) << ',' << (row.has_zero ? 1 : 0) << '\n';
        }
      }
      const std::string output = as_json ? dump(arr) : os.str();
      if (out_path.empty()) out << output;
      else write_atomic(out_path, output);
      return 0;
    }

    if (verify_cmd->parsed()) {
      const SweepResult result = dim == 2 ? verify_sweep_2d(max, jobs, budget)
                                          : verify_sweep_nd(max, dim, jobs, budget);
      if (format == "json") {
        json j;
        j["checked"] = result.checked;
        j["dim"] = dim;
        json mism = json::array();
        for (const auto& m : result.mismatches) {
          mism.push_back({{"lambda", std::to_string(m.lambda)}, {"detail", m.detail}});
        }
        j["mismatches"] = std::move(mism);
        out << dump(j);
      } else {
        out << "checked " << result.checked << " integers\n";
        for (std::size_t i = 0; i < result.mismatches.size() && i < 20; ++i) {
          err << "mismatch at lambda=" << result.mismatches[i].lambda << ": "
              << result.mismatches[i].detail << '\n';
        }
      }
      return result.mismatches.empty() ? 0 : 3;
    }

    if (highdim_cmd->parsed()) {
      const SurveyReport survey = viable_multiplicity_survey(dim, bound, budget);
      if (format == "json") {
        json j;
        j["dim"] = survey.dim;
        j["bound"] = survey.bound;
        j["observed"] = json(survey.observed);
        json ces = json::array();
        for (const auto& ce : survey.counterexamples) {
          ces.push_back({{"lambda", std::to_string(ce.lambda)}, {"multiplicity", ce.multiplicity}});
        }
        j["counterexamples"] = std::move(ces);
        out << dump(j);
      } else {
        out << "dim=" << survey.dim << " bound=" << survey.bound << '\n';
        out << "observed multiplicities:";
        for (u64 m : survey.observed) out << ' ' << m;
        out << '\n';
        if (survey.counterexamples.empty()) {
          out << "counterexamples: none\n";
        } else {
          out << "counterexamples:\n";
          for (const auto& ce : survey.counterexamples) {
            out << "lambda=" << ce.lambda << " multiplicity=" << ce.multiplicity << '\n';
          }
        }
      }
      return 0;
    }

    err << "no subcommand executed\n" << app.help();
    return 2;
  } catch (const usage_error& e) {
    err << e.what() << '\n' << app.help();
    return 2;
  } catch (const budget_error& e) {
    err << "budget error: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << '\n';
    return 1;
  } catch (const std::overflow_error& e) {
    err << "domain error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace laplace2sq
