#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hermicode/report.hpp"

using namespace hermicode;
using report::json;

namespace {

constexpr std::int64_t kDefaultBudget = 10'000'000;

struct Options {
  int p = 0, a = 1, b = 1, N = 1;
  std::string format = "json";
  std::string out;
  std::int64_t budget = kDefaultBudget;
  int threads = 1;
  int variants = 10;
  std::uint64_t seed = 1;
  // sum query
  int rho = -1;
  std::string v_enc;
  std::int64_t scalar_enc = 1;
};

std::int64_t env_budget() {
  if (const char* env = std::getenv("HERMICODE_BUDGET")) {
    try {
      return std::stoll(env);
    } catch (...) {
      throw ConfigError("HERMICODE_BUDGET is not an integer");
    }
  }
  return kDefaultBudget;
}

void add_tower_flags(CLI::App* cmd, Options& opt, bool with_n) {
  cmd->add_option("--p", opt.p, "characteristic (odd prime)")->required();
  cmd->add_option("--a", opt.a, "exponent of s = p^a");
  cmd->add_option("--b", opt.b, "exponent of t = s^b");
  if (with_n) cmd->add_option("--N", opt.N, "geometric dimension");
  cmd->add_option("--format", opt.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", opt.out, "write the report to this path");
  cmd->add_option("--threads", opt.threads, "worker threads (default 1)");
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw ConfigError("cannot write " + opt.out);
    f << text;
  }
}

gf::FieldCtx make_ctx(const Options& opt) {
  return gf::FieldCtx(gf::TowerSpec{opt.p, opt.a, opt.b, opt.N});
}

int run_verify(const Options& opt) {
  const gf::FieldCtx ctx = make_ctx(opt);
  if (opt.format == "csv") throw ConfigError("csv applies to code reports only");
  const auto results = sweeps::run_all(ctx, opt.variants, opt.seed, opt.threads);
  const std::int64_t mismatches = sweeps::total_mismatches(results);

  if (opt.format == "json") {
    json j;
    j["p"] = opt.p;
    j["a"] = opt.a;
    j["b"] = opt.b;
    j["N"] = opt.N;
    j["variants"] = opt.variants;
    j["seed"] = opt.seed;
    j["checks"] = report::check_results(results);
    j["total_mismatches"] = mismatches;
    emit(opt, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    for (const auto& r : results)
      os << r.name << ": instances=" << r.instances << " mismatches=" << r.mismatches
         << "\n";
    os << "total_mismatches=" << mismatches << "\n";
    emit(opt, os.str());
  }
  return mismatches == 0 ? 0 : 1;
}

int run_code(const Options& opt, const std::string& which) {
  const gf::FieldCtx ctx = make_ctx(opt);

  if (which == "compare") {
    if (opt.format == "csv") throw ConfigError("csv applies to single-code reports");
    const auto gamma =
        codes::weight_distribution(ctx, codes::build_gamma(ctx), opt.budget, opt.threads);
    const auto c =
        codes::weight_distribution(ctx, codes::build_c(ctx), opt.budget, opt.threads);
    const auto rm = codes::rm_params(ctx.spec().N, ctx.t());
    const auto ids = codes::check_rm_identities(ctx, gamma, c, rm);

    if (opt.format == "json") {
      json j;
      j["p"] = opt.p;
      j["a"] = opt.a;
      j["b"] = opt.b;
      j["N"] = opt.N;
      j["codes"] = json::array({report::code_params(ctx.spec(), gamma),
                                report::code_params(ctx.spec(), c),
                                report::code_params(ctx.spec(), rm)});
      j["comparisons"] = json::array({report::comparison(codes::compare(gamma, rm)),
                                      report::comparison(codes::compare(c, rm)),
                                      report::comparison(codes::compare(gamma, c))});
      j["identities"]["applicable"] = ids.applicable;
      if (ids.applicable) {
        j["identities"]["d_gamma"] = ids.d_gamma_ok;
        j["identities"]["d_c"] = ids.d_c_ok;
        j["identities"]["rate"] = ids.rate_ok;
        j["identities"]["lambda"] = ids.lambda_ok;
        j["identities"]["lambda_sign"] = ids.lambda_sign_ok;
      }
      emit(opt, j.dump(2) + "\n");
    } else {
      std::ostringstream os;
      for (const auto* p : {&gamma, &c, &rm})
        os << p->label << ": [" << p->n << "," << p->k << "," << p->d_min << "]"
           << " lambda=" << p->lambda.num << "/" << p->lambda.den << "\n";
      os << "d_gamma-d_rm=" << gamma.d_min - rm.d_min
         << " d_c-d_rm=" << c.d_min - rm.d_min << "\n";
      os << "identities_applicable=" << (ids.applicable ? "yes" : "no") << "\n";
      if (ids.applicable) os << "identities_ok=" << (ids.all_ok() ? "yes" : "no") << "\n";
      emit(opt, os.str());
    }
    return (!ids.applicable || ids.all_ok()) ? 0 : 1;
  }

  const auto code = (which == "gamma") ? codes::build_gamma(ctx) : codes::build_c(ctx);
  const auto params = codes::weight_distribution(ctx, code, opt.budget, opt.threads);
  if (opt.format == "json") {
    emit(opt, report::code_params(ctx.spec(), params).dump(2) + "\n");
  } else if (opt.format == "csv") {
    emit(opt, report::code_csv(params));
  } else {
    std::ostringstream os;
    os << params.label << ": [" << params.n << "," << params.k << "," << params.d_min
       << "] w_max=" << *params.w_max << " disparity=" << params.disparity->num << "/"
       << params.disparity->den << "\n";
    emit(opt, os.str());
  }
  return 0;
}

int run_field_info(const Options& opt) {
  const gf::FieldCtx ctx = make_ctx(opt);
  if (opt.format != "json") throw ConfigError("field-info reports are JSON");
  emit(opt, report::field_info(ctx).dump(2) + "\n");
  return 0;
}

int run_sum(const Options& opt) {
  const gf::FieldCtx ctx = make_ctx(opt);
  if (opt.format == "csv") throw ConfigError("csv applies to code reports only");
  const int rho = (opt.rho < 0) ? ctx.spec().N : opt.rho;
  const auto q = quadform::standard_form(ctx, ctx.spec().N, rho);

  std::vector<gf::Fe> v(q.dim(), gf::Fe{0});
  if (!opt.v_enc.empty()) {
    std::stringstream ss(opt.v_enc);
    std::string item;
    std::size_t i = 0;
    while (std::getline(ss, item, ',')) {
      if (i >= v.size()) throw ConfigError("v has more than 2N coordinates");
      v[i++] = ctx.from_code(std::stoll(item));
    }
    if (i != v.size()) throw ConfigError("v needs exactly 2N coordinates");
  }
  const gf::Fe a = ctx.from_code(opt.scalar_enc);

  const auto rep = counting::check_sum(ctx, q, v, a, opt.threads);
  if (opt.format == "json") {
    emit(opt, report::count_report(rep).dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "branch=" << rep.branch
       << " closed=" << std::get<charsum::CycInt>(rep.closed_form).str()
       << " brute=" << std::get<charsum::CycInt>(rep.brute_force).str()
       << " match=" << (rep.match ? "yes" : "no") << "\n";
    emit(opt, os.str());
  }
  return rep.match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hermitian forms, exact character sums and trace-count codes"};
  app.require_subcommand(1);

  Options opt;
  try {
    opt.budget = env_budget();
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  auto* verify = app.add_subcommand("verify", "closed forms against brute-force oracles");
  add_tower_flags(verify, opt, true);
  verify->add_option("--variants", opt.variants, "random basis-changed forms per rank");
  verify->add_option("--seed", opt.seed, "seed for the deterministic variants");

  auto* code = app.add_subcommand("code", "build a code and report its parameters");
  std::string which;
  code->add_option("which", which, "gamma, c or compare")
      ->required()
      ->check(CLI::IsMember({"gamma", "c", "compare"}));
  add_tower_flags(code, opt, true);
  code->add_option("--budget", opt.budget, "max codeword symbols to enumerate");

  auto* info = app.add_subcommand("field-info", "describe the field tower");
  add_tower_flags(info, opt, false);

  auto* sum = app.add_subcommand("sum", "one exponential sum S(a f, v)");
  add_tower_flags(sum, opt, true);
  sum->add_option("--rho", opt.rho, "rank parameter of the standard form (default N)");
  sum->add_option("--v", opt.v_enc, "comma-separated coordinate encodings");
  sum->add_option("--scalar", opt.scalar_enc, "encoding of the scalar in F_s*");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(verify)) return run_verify(opt);
    if (app.got_subcommand(code)) return run_code(opt, which);
    if (app.got_subcommand(info)) return run_field_info(opt);
    if (app.got_subcommand(sum)) return run_sum(opt);
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const CheckFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
