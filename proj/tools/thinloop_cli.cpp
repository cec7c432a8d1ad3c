// thinloop: build modular Lie algebras, grade them, and check the loop
// algebras for thinness.
//
//   thinloop construct --algebra W --p 3 --n 2
//   thinloop grade --grading mixed --p 3 --n1 1 --n2 1
//   thinloop verify --grading finite --p 3 --q 3 --mu3 0,1
//   thinloop suite --only char2
//
// Exit status: 0 on PASS, 1 on a verification failure, 2 on bad input.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "thinloop/thinloop.hpp"

namespace {

using namespace thinloop;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kConfig = 2;

struct Options {
  std::string algebra = "Hphi1";
  std::string grading = "mixed";
  std::uint32_t p = 3;
  std::uint32_t n = 1;
  std::uint32_t n1 = 1;
  std::optional<std::uint32_t> n2;
  std::optional<std::uint64_t> q;
  std::string field;
  std::string eps;
  std::string mu3;
  std::string sigma;
  std::string rho;
  std::uint32_t ratio = 1;
  std::optional<std::int64_t> depth;
  bool intrinsic = false;
  std::string out;
  std::string only;
  bool quiet = false;
};

// Errors caused by the request rather than by the mathematics.
bool is_config_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::NonPrimeCharacteristic:
    case ErrorCode::ReducibleModulus:
    case ErrorCode::InvalidArgument:
    case ErrorCode::FieldMismatch:
    case ErrorCode::FieldTooLarge:
    case ErrorCode::FieldSizeMismatch:
    case ErrorCode::InvalidToralParams:
    case ErrorCode::NoRootInField:
    case ErrorCode::Mu3InPrimeField:
    case ErrorCode::DenominatorZero:
    case ErrorCode::NotAdditivelyClosed:
    case ErrorCode::ThetaNotAdditive:
      return true;
    default:
      return false;
  }
}

// Writes through a temporary file so readers never see half a report.
void write_atomically(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream f(tmp);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + tmp.string());
    f << text << '\n';
  }
  fs::rename(tmp, target);
}

void emit(const Options& o, const json& j) {
  if (o.out.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    write_atomically(o.out, j.dump(2));
  }
}

// Progress lines go to stderr when the JSON itself is on stdout.
std::ostream& info(const Options& o) { return o.out.empty() ? std::cerr : std::cout; }

// "9", "3^2", or empty for F_p.
FieldPtr parse_field(const std::string& desc, std::uint32_t p) {
  if (desc.empty()) return Field::create(p);
  std::uint64_t order = 0;
  std::uint32_t base = 0, k = 0;
  const auto caret = desc.find('^');
  try {
    if (caret != std::string::npos) {
      base = static_cast<std::uint32_t>(std::stoul(desc.substr(0, caret)));
      k = static_cast<std::uint32_t>(std::stoul(desc.substr(caret + 1)));
    } else {
      order = std::stoull(desc);
    }
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, "bad field descriptor '" + desc + "' (use 9 or 3^2)");
  }
  if (caret == std::string::npos) {
    base = p;
    k = 0;
    for (std::uint64_t v = 1; v < order; v *= p) ++k;
    if (detail::ipow(p, k) != order || k == 0)
      throw Error(ErrorCode::InvalidArgument, "field order " + desc + " is not a power of p = " + std::to_string(p));
  }
  if (base != p) throw Error(ErrorCode::FieldMismatch, "field characteristic differs from p");
  return Field::create(p, k);
}

std::uint32_t resolve_n2(const Options& o) {
  if (o.q) {
    std::uint32_t k = 0;
    std::uint64_t v = 1;
    while (v < *o.q) {
      v *= o.p;
      ++k;
    }
    if (v != *o.q || k == 0) throw Error(ErrorCode::InvalidArgument, "q must be a positive power of p");
    if (o.n2 && *o.n2 != k) throw Error(ErrorCode::InvalidArgument, "--q and --n2 disagree");
    return k;
  }
  return o.n2.value_or(1);
}

std::size_t literal_length(const std::string& s) {
  return s.empty() ? 0 : static_cast<std::size_t>(std::count(s.begin(), s.end(), ',')) + 1;
}

RunConfig make_run_config(const Options& o) {
  if (!detail::is_prime(o.p)) throw Error(ErrorCode::NonPrimeCharacteristic, "characteristic must be prime");
  RunConfig c;
  c.grading = parse_grading(o.grading);
  c.p = o.p;
  c.n1 = o.n1;
  c.n2 = resolve_n2(o);
  c.ratio = o.ratio;
  c.depth = o.depth;
  c.intrinsic_generators = o.intrinsic;
  std::string desc = o.field;
  if (desc.empty() && c.grading == GradingKind::Finite) {
    const std::size_t len = std::max(literal_length(o.mu3), literal_length(o.sigma));
    desc = std::to_string(o.p) + "^" + std::to_string(std::max<std::size_t>(len, 2));
  }
  c.field = parse_field(desc, o.p);
  if (!o.mu3.empty()) c.mu3 = parse_element(*c.field, o.mu3);
  if (!o.sigma.empty()) c.sigma = parse_element(*c.field, o.sigma);
  if (!o.rho.empty()) c.rho = parse_element(*c.field, o.rho);
  if (c.grading == GradingKind::Finite && !c.mu3 && !c.sigma)
    throw Error(ErrorCode::InvalidArgument, "the finite grading needs --mu3 or --sigma");
  return c;
}

int cmd_construct(const Options& o) {
  const FieldPtr f = parse_field(o.field, o.p);
  const std::uint32_t n2 = resolve_n2(o);
  std::optional<StructureTable> t;
  const std::string& a = o.algebra;
  if (a == "W") {
    t = build_W1n(o.p, o.n, f);
  } else if (a == "W-derived") {
    t = build_W1n_derived(o.p, o.n, f);
  } else if (a == "Zassenhaus") {
    const FieldPtr big = o.field.empty() ? Field::create(o.p, o.n) : f;
    t = zassenhaus_group_basis(o.p, o.n, big).table;
  } else if (a == "H2") {
    t = build_H2_second_derived(o.p, o.n1, n2, f);
  } else if (a == "Htau") {
    t = build_H2_phi_tau_derived(o.p, o.n1, n2, f);
  } else if (a == "Hphi1") {
    const FieldElement eps = o.eps.empty() ? f->one() : parse_element(*f, o.eps);
    t = build_H2_phi1(o.p, o.n1, n2, f, eps);
  } else {
    throw Error(ErrorCode::InvalidArgument,
                "unknown algebra '" + a + "' (W, W-derived, Zassenhaus, H2, Htau, Hphi1)");
  }
  const auto rep = validate_table(*t);
  emit(o, to_json(*t));
  info(o) << "dim " << t->dim() << "\n"
          << "Jacobi: " << (rep.ok && rep.encoding_ok ? "PASS" : "FAIL") << " (" << rep.triples_checked
          << " triples)\n";
  return rep.ok && rep.encoding_ok ? kPass : kFail;
}

int cmd_grade(const Options& o) {
  RunConfig c = make_run_config(o);
  c.depth = 1;  // only the graded table is needed
  const FieldPtr f = c.field;
  const CartanParams cp{c.p, c.n1, c.n2};
  StructureTable table(f, {});
  DegreeMap d;
  json extra;
  switch (c.grading) {
    case GradingKind::Mixed:
      table = build_H2_phi1(c.p, c.n1, c.n2, f);
      d = grade_mixed(cp);
      break;
    default: {
      const RunResult r = run(c);
      table = *r.table;
      d = r.degmap;
      if (r.params)
        extra = json{{"sigma", to_json(r.params->sigma)}, {"rho", to_json(r.params->rho)}, {"pi", to_json(r.params->pi)},
                     {"eps", to_json(r.params->eps)}};
    }
  }
  const bool ok = validate_grading(table, d);
  json j{{"table", to_json(table)}, {"grading", to_json(d)}};
  if (!extra.is_null()) j["params"] = extra;
  emit(o, j);
  info(o) << "dim " << table.dim() << ", modulus " << d.modulus << "\n"
          << "grading: " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kPass : kFail;
}

int cmd_verify(const Options& o) {
  const RunConfig c = make_run_config(o);
  const RunResult r = run(c);
  emit(o, to_json(r));
  auto& s = info(o);
  s << to_string(c.grading) << " p=" << c.p << " q=" << r.q << " depth " << r.depth << ": "
    << (r.pass() ? "PASS" : "FAIL") << "\n";
  s << "diamonds:";
  for (const auto& d : r.report.diamonds.records) s << ' ' << d.degree << ':' << d.type_string();
  s << "\n";
  if (r.report.k) s << "k = " << r.report.k->k << "\n";
  for (const auto& n : r.notes) s << "note: " << n << "\n";
  if (!r.pass()) s << "first failure: " << r.first_failure << "\n";
  return r.pass() ? kPass : kFail;
}

int cmd_suite(const Options& o) {
  const auto rows = select_rows(o.only);
  json out = json::array();
  bool all = true;
  std::printf("%-28s %-5s %-5s %9s  %s\n", "row", "crit", "", "seconds", "detail");
  for (const auto& row : rows) {
    const RowResult r = run_row(row);
    all = all && r.pass;
    std::printf("%-28s %-5d %-5s %9.3f  %s\n", r.name.c_str(), r.criterion, r.pass ? "PASS" : "FAIL", r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
    out.push_back(json{{"row", r.name}, {"criterion", r.criterion}, {"pass", r.pass}, {"seconds", r.seconds},
                       {"detail", r.detail}});
  }
  if (!o.out.empty()) write_atomically(o.out, out.dump(2));
  std::printf("%s: %zu rows\n", all ? "PASS" : "FAIL", rows.size());
  return all ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Modular Lie algebras, cyclic gradings and thin loop algebras"};
  app.require_subcommand(1);

  auto field_opts = [&](CLI::App* s) {
    s->add_option("--p", o.p, "characteristic");
    s->add_option("--field", o.field, "field order, e.g. 9 or 3^2 (default F_p)");
    s->add_option("--out", o.out, "write JSON here instead of stdout");
  };
  auto hamiltonian_opts = [&](CLI::App* s) {
    s->add_option("--n1", o.n1, "r = p^n1");
    s->add_option("--n2", o.n2, "q = p^n2");
    s->add_option("--q", o.q, "q, a power of p (alternative to --n2)");
  };
  auto grading_opts = [&](CLI::App* s) {
    s->add_option("--grading", o.grading, "mixed, finite, sigma-zero or eps-zero");
    s->add_option("--mu3", o.mu3, "third-diamond type, coefficient list a0,a1,...");
    s->add_option("--sigma", o.sigma, "sigma literal (overrides --mu3)");
    s->add_option("--rho", o.rho, "rho literal");
    s->add_option("--ratio", o.ratio, "sigma/rho in F_p for eps-zero");
  };

  auto* construct = app.add_subcommand("construct", "build a structure table");
  field_opts(construct);
  hamiltonian_opts(construct);
  construct->add_option("--algebra", o.algebra, "W, W-derived, Zassenhaus, H2, Htau or Hphi1");
  construct->add_option("--n", o.n, "W(1;n)");
  construct->add_option("--eps", o.eps, "deformation parameter for Hphi1");

  auto* grade = app.add_subcommand("grade", "grade H(2;n;Phi(1)) or a degeneration");
  field_opts(grade);
  hamiltonian_opts(grade);
  grading_opts(grade);

  auto* verify = app.add_subcommand("verify", "expand the loop algebra and check it");
  field_opts(verify);
  hamiltonian_opts(verify);
  grading_opts(verify);
  verify->add_option("--depth", o.depth, "last degree expanded (default three periods; THINLOOP_DEPTH)");
  verify->add_flag("--intrinsic", o.intrinsic, "choose X and Y from the expansion instead of the declared pair");

  auto* suite = app.add_subcommand("suite", "run the acceptance matrix");
  suite->add_option("--only", o.only, "row name, tag (char2) or critN");
  suite->add_option("--out", o.out, "write the summary JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }

  try {
    if (*construct) return cmd_construct(o);
    if (*grade) return cmd_grade(o);
    if (*verify) return cmd_verify(o);
    if (*suite) return cmd_suite(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_config_error(e.code()) ? kConfig : kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kConfig;
}
