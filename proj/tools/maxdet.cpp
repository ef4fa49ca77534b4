// maxdet: command-line front end.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "maxdet/bounds.hpp"
#include "maxdet/constructions.hpp"
#include "maxdet/equivalence.hpp"
#include "maxdet/errors.hpp"
#include "maxdet/ffield.hpp"
#include "maxdet/matrix.hpp"
#include "maxdet/records.hpp"
#include "maxdet/search.hpp"

using namespace maxdet;
using nlohmann::json;

namespace {

json big(const BigInt& v) {
  if (auto x = to_int64(v)) return *x;
  return to_string(v);
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

ZLogMatrix load(const std::string& path) { return read_zlog_matrix(path); }

LogMatrix load_log(const std::string& path) {
  ZLogMatrix z = load(path);
  if (z.has_zero()) throw ParseError(path + ": zero entries are not allowed here");
  return z.to_log();
}

json gram_json(const GramMatrix& g) {
  json rows = json::array();
  for (int i = 0; i < g.n(); ++i) {
    json row = json::array();
    for (int j = 0; j < g.n(); ++j) row.push_back(g(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

BigInt parse_big(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) throw ParseError("not a nonnegative integer: " + s);
  return BigInt(s);
}

int cmd_table(int ell, bool as_json) {
  auto rows = record_rows(ell);
  if (as_json) {
    json out = json::array();
    for (const auto& r : rows)
      out.push_back({{"n", r.rec.n},
                     {"ell", ell},
                     {"det2", big(r.rec.det2)},
                     {"shown", big(r.shown)},
                     {"factors", r.factors},
                     {"ratio", r.ratio},
                     {"proven", r.rec.proven}});
    emit(out);
    return 0;
  }
  std::cout << "n\t" << (ell == 3 ? "det2/3^(n-1)" : "det2 (odd n: /2^(n-1))") << "\tR\tproven\n";
  for (const auto& r : rows) {
    std::ostringstream ratio;
    ratio << std::fixed << std::setprecision(2) << r.ratio;
    std::cout << r.rec.n << "\t" << r.factors << "\t" << ratio.str() << "\t" << (r.rec.proven ? "yes" : "??") << "\n";
  }
  return 0;
}

struct ConstructArgs {
  std::string kind;
  std::vector<std::string> files;
  int n = 0, q = 0, ell = 3, alpha = 1, unit = -1;
  std::string name;
};

int cmd_construct(const ConstructArgs& a) {
  auto need_files = [&](size_t k) {
    if (a.files.size() != k) throw UsageError("construct " + a.kind + ": expects " + std::to_string(k) + " matrix file(s)");
  };
  if (a.kind == "fourier") {
    std::cout << to_text(fourier(a.n));
  } else if (a.kind == "tensor") {
    need_files(2);
    std::cout << to_text(tensor(load_log(a.files[0]), load_log(a.files[1])));
  } else if (a.kind == "bush") {
    need_files(1);
    std::cout << to_text(bush_type(load_log(a.files[0])));
  } else if (a.kind == "bordered") {
    need_files(1);
    LogMatrix h = load_log(a.files[0]);
    RootScalar u = a.unit < 0 ? best_border_unit(h) : RootScalar(h.ell(), a.unit);
    Bordered b = bordered_rowsum(h, u);
    std::cout << "# unit exponent " << b.unit.exp() << ", det2 " << to_string(b.det2) << "\n" << to_text(b.matrix);
  } else if (a.kind == "paley-core") {
    std::cout << to_text(paley_core(a.q, a.ell));
  } else if (a.kind == "weighing") {
    std::cout << to_text(weighing_border(paley_core(a.q, a.ell)));
  } else if (a.kind == "paley-unit") {
    std::cout << to_text(paley_plus_unit(a.q, RootScalar(3, a.alpha)));
  } else if (a.kind == "fano-barba") {
    std::cout << to_text(barba_from_design(fano_incidence(), a.ell));
  } else if (a.kind == "seed") {
    std::cout << to_text(seed(a.name).matrix);
  } else if (a.kind == "turyn") {
    need_files(1);
    std::cout << to_text(turyn_morphism(load_log(a.files[0])));
  } else {
    throw UsageError("construct: unknown kind '" + a.kind + "'");
  }
  return 0;
}

int cmd_det(const std::string& path) {
  emit({{"det2", big(det_exact(load(path)).squared_modulus)}});
  return 0;
}

int cmd_gram(const std::string& path) {
  GramMatrix g = gram(load(path));
  emit({{"gram", gram_json(g)}, {"det2", big(det_gram(g))}});
  return 0;
}

int cmd_bounds(int n, int ell) {
  BoundReport b = bound_report(n, ell);
  json j{{"n", n}, {"ell", ell}, {"hadamard_sq", big(b.hadamard_sq)}};
  if (b.barba.exact) {
    j["barba_sq"] = big(b.barba.value);
    j["sigma_sq"] = big(b.barba.sigma.squared);
  } else {
    j["barba_sq_approx"] = b.barba.approx.str(20);
  }
  emit(j);
  return 0;
}

int cmd_verify(const std::string& path, bool bh, bool barba, int weight) {
  if (int(bh) + int(barba) + int(weight > 0) != 1) throw UsageError("verify: choose exactly one of --bh, --barba, --weighing W");
  bool ok;
  if (weight > 0)
    ok = verify_weighing(load(path), weight);
  else if (bh)
    ok = verify_bh(load_log(path));
  else
    ok = verify_barba(load_log(path));
  std::cout << (ok ? "pass" : "fail") << "\n";
  return ok ? 0 : 1;
}

int cmd_normalize(const std::string& path) {
  std::cout << to_text(normalize_barba(load_log(path)));
  return 0;
}

int cmd_balance(const std::string& path) {
  Balanced b = balance_matrix(load_log(path));
  auto line = [](const char* tag, const std::vector<int>& v) {
    std::cout << "# " << tag;
    for (int x : v) std::cout << " " << x;
    std::cout << "\n";
  };
  line("d1", b.d1);
  line("d2", b.d2);
  std::cout << to_text(b.matrix);
  return 0;
}

int cmd_cyclotomy(int q, int ell) {
  auto [p, k] = prime_power(q);
  FiniteField field(p, k);
  CyclotomyData d = cyclotomic_classes(field, ell);
  json j{{"q", q}, {"ell", ell}, {"f", d.f}, {"minus_one_class", d.r}, {"numbers", d.numbers}};
  if (ell == 3) {
    CubicCyclotomy c = cubic_cyclotomic_numbers(q);
    j["c"] = c.c;
    j["d"] = c.d * c.d_sign;
    j["closed_form"] = {{"A", c.A}, {"B", c.B}, {"C", c.C}, {"D", c.D}};
    j["triple_sum"] = triple_sum_count(q);
  }
  emit(j);
  return 0;
}

int cmd_search(int n, const std::string& target, int threads, bool standard_form, const std::string& json_path, bool quiet) {
  SearchOptions opt;
  opt.threads = threads;
  opt.standard_form = standard_form;
  if (!quiet)
    opt.on_level = [](int r, std::size_t c, std::size_t p) {
      std::cerr << "r=" << r << " candidates=" << c << " phi=" << p << "\n";
    };
  SearchReport rep = certify(n, parse_big(target), opt);
  const std::string text = report_json(rep);
  if (json_path == "-") {
    std::cout << text << "\n";
  } else {
    if (!json_path.empty()) {
      std::ofstream out(json_path);
      if (!out) throw UsageError("cannot write " + json_path);
      out << text << "\n";
    }
    std::cout << "verdict " << verdict_name(rep.verdict) << "\nfinal " << rep.final_set.size() << "\n";
    for (const auto& f : rep.final_set)
      std::cout << "det2 " << to_string(f.det) << (f.norm_feasible ? "" : " (not a norm)") << "\n";
  }
  return verdict_exit_code(rep.verdict);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximal determinant matrices over roots of unity"};
  app.require_subcommand(1);

  int ell = 3;
  bool as_json = false;
  auto* table = app.add_subcommand("table", "record determinant table");
  table->add_option("--ell", ell, "3 or 4")->required()->check(CLI::IsMember({3, 4}));
  table->add_flag("--json", as_json);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build a matrix, printed in exponent form");
  construct->add_option("kind", ca.kind,
                        "fourier | tensor | bush | bordered | paley-core | weighing | paley-unit | fano-barba | seed | turyn")
      ->required();
  construct->add_option("files", ca.files, "input matrix files");
  construct->add_option("--n", ca.n);
  construct->add_option("--q", ca.q);
  construct->add_option("--ell", ca.ell);
  construct->add_option("--alpha", ca.alpha, "exponent of the unit added to the diagonal (paley-unit)");
  construct->add_option("--unit", ca.unit, "border unit exponent (bordered; default: best)");
  construct->add_option("--name", ca.name, "seed name");

  std::string file;
  auto* det = app.add_subcommand("det", "exact |det|^2");
  det->add_option("file", file)->required();
  auto* gramc = app.add_subcommand("gram", "Gram matrix M M^*");
  gramc->add_option("file", file)->required();

  int n = 0;
  auto* bounds = app.add_subcommand("bounds", "Hadamard and Barba bounds");
  bounds->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  bounds->add_option("--ell", ell)->required()->check(CLI::PositiveNumber);

  bool bh = false, barba = false;
  int weight = 0;
  auto* verify = app.add_subcommand("verify", "check a defining identity");
  verify->add_option("file", file)->required();
  verify->add_flag("--bh", bh);
  verify->add_flag("--barba", barba);
  verify->add_option("--weighing", weight, "weight w in W W^* = w I");

  auto* normalize = app.add_subcommand("normalize", "normalize a Barba matrix");
  normalize->add_option("file", file)->required();
  auto* balance = app.add_subcommand("balance", "balance a mu_3 matrix");
  balance->add_option("file", file)->required();

  int q = 0;
  auto* cyclo = app.add_subcommand("cyclotomy", "cyclotomic numbers of GF(q)");
  cyclo->add_option("--q", q)->required();
  cyclo->add_option("--ell", ell);

  std::string target, json_path;
  int threads = 0;
  bool standard_form = false, quiet = false;
  auto add_search = [&](CLI::App* sc, const char* flag) {
    sc->add_option("--n", n)->required();
    sc->add_option(flag, target)->required();
    sc->add_option("--threads", threads, "workers (default MAXDET_THREADS)");
    sc->add_flag("--standard-form", standard_form);
    sc->add_option("--json", json_path, "write the report here ('-' for stdout)");
    sc->add_flag("--quiet", quiet);
  };
  auto* certify_cmd = app.add_subcommand("certify", "maximality certificate search");
  add_search(certify_cmd, "--target");
  auto* refute = app.add_subcommand("refute", "show no matrix reaches a determinant");
  add_search(refute, "--bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*table) return cmd_table(ell, as_json);
    if (*construct) return cmd_construct(ca);
    if (*det) return cmd_det(file);
    if (*gramc) return cmd_gram(file);
    if (*bounds) return cmd_bounds(n, ell);
    if (*verify) return cmd_verify(file, bh, barba, weight);
    if (*normalize) return cmd_normalize(file);
    if (*balance) return cmd_balance(file);
    if (*cyclo) return cmd_cyclotomy(q, ell);
    if (*certify_cmd || *refute) return cmd_search(n, target, threads, standard_form, json_path, quiet);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
