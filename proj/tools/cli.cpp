#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hopf_forge/errors.hpp"
#include "hopf_forge/integrals.hpp"
#include "hopf_forge/io.hpp"
#include "hopf_forge/report.hpp"
#include "hopf_forge/zoo.hpp"

namespace hopf_forge::cli {

namespace {

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::ParseError:
    case Errc::MalformedTensor:
    case Errc::OrderMismatch:
    case Errc::BadParameters:
    case Errc::NotAGroup:
    case Errc::DimensionMismatch:
    case Errc::BoundExceeded:
      return kBadInput;
    case Errc::EigenvalueNotInField:
    case Errc::NonSplitting:
      return kFieldTooSmall;
    default:
      return kCheckFailed;
  }
}

std::vector<std::string> split_commas(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

bool selected(const std::vector<std::string>& selection, const std::string& name) {
  if (selection.empty()) return true;
  return std::any_of(selection.begin(), selection.end(), [&](const std::string& s) {
    return name == s || name.rfind(s + ":", 0) == 0;
  });
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw Error(Errc::ParseError, "cannot write " + out_path);
  file << text;
}

std::string status_word(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

// Axioms, integrals and the antipode cross-check, in that order.
Checklist verify_checks(const HopfPresentation& h) {
  Checklist list = check_axioms(h);
  auto attempt = [&list](const std::string& name, auto&& body) {
    try {
      const std::string detail = body();
      list.results.push_back({name, detail.empty() ? CheckStatus::Pass : CheckStatus::Fail, detail});
    } catch (const Error& e) {
      if (exit_code_for(e.code()) != kCheckFailed) throw;
      list.results.push_back({name, CheckStatus::Fail, e.what()});
    }
  };
  attempt("integrals", [&h]() -> std::string {
    normalize(IntegralPair{left_integral(h), right_integral_dual(h), false, {}, {}});
    return "";
  });
  attempt("antipode-cross-check", [&h]() -> std::string {
    const Mat computed = compute_antipode(h);
    if (h.has_antipode() && computed != h.antipode()) {
      return "stored antipode differs from the one built from integrals";
    }
    return "";
  });
  return list;
}

struct Options {
  std::string path;
  std::string path_b;
  std::string out_path;
  std::string checks;
  long omega = 1;
  bool json = false;
  int n = 3;
  int root_power = 1;
  int order = 0;
  std::vector<int> cyclic;
  std::string table;
};

std::optional<int> order_opt(const Options& o) {
  return o.order > 0 ? std::optional<int>(o.order) : std::nullopt;
}

HopfPresentation lifted(HopfPresentation h, const Options& o) {
  return o.order > 0 ? lift_order(h, o.order) : h;
}

HopfPresentation group_from_table(const std::string& path, std::optional<int> order) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
    return build_group_algebra(doc.get<std::vector<std::vector<std::size_t>>>(), order);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("Cayley table: ") + e.what());
  }
}

int cmd_verify(const Options& o, std::ostream& out) {
  const HopfPresentation h = load_hopf_file(o.path);
  const Checklist list = verify_checks(h);
  const auto selection = split_commas(o.checks);
  bool ok = true;
  for (const auto& c : list.results) {
    if (!selected(selection, c.name)) continue;
    out << status_word(c.status) << "  " << c.name;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
    ok = ok && c.status != CheckStatus::Fail;
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_report(const Options& o, std::ostream& out, std::ostream& err) {
  HopfPresentation h = load_hopf_file(o.path);
  const Checklist axioms = check_axioms(h);
  if (!axioms.all_passed()) {
    for (const auto& name : axioms.failures()) err << "axiom failed: " << name << "\n";
    return kCheckFailed;
  }
  if (!h.has_antipode()) h = h.with_antipode(compute_antipode(h));
  ReportOptions options;
  options.omega_power = o.omega;
  options.checks = split_commas(o.checks);
  const InvariantReport r = make_report(h, options);
  emit(o.json ? report_json(r) : report_text(r), o.out_path, out);
  return r.checks.all_passed() ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of finite-dimensional Hopf algebras", "hopf-forge"};
  app.require_subcommand(1);
  Options o;

  auto* verify = app.add_subcommand("verify", "Check axioms, integrals and the antipode");
  verify->add_option("file", o.path, "Structure-constants file")->required();
  verify->add_option("--check", o.checks, "Comma-separated check names or prefixes");

  auto* report = app.add_subcommand("report", "Compute the invariant report");
  report->add_option("file", o.path, "Structure-constants file")->required();
  report->add_option("--omega", o.omega, "omega = zeta_n^power, power coprime to the index");
  report->add_flag("--json", o.json, "Machine-readable output");
  report->add_option("--check", o.checks, "Comma-separated check names or prefixes");
  report->add_option("--out", o.out_path, "Write to a file instead of stdout");

  auto* zoo = app.add_subcommand("zoo", "Emit an example algebra");
  zoo->require_subcommand(1);
  auto* taft = zoo->add_subcommand("taft", "Taft algebra T_n");
  taft->add_option("--n", o.n, "n >= 2")->required();
  taft->add_option("--root-power", o.root_power, "w = zeta_n^power");
  taft->add_option("--order", o.order, "Cyclotomic order (multiple of n)");
  auto* group = zoo->add_subcommand("group", "Group algebra");
  auto* cyclic = group->add_option("--cyclic", o.cyclic, "Cyclic factor orders (repeatable)");
  auto* table = group->add_option("--table", o.table, "JSON Cayley table file");
  cyclic->excludes(table);
  group->add_option("--order", o.order, "Cyclotomic order (default: group exponent)");
  auto* sweedler = zoo->add_subcommand("sweedler", "Sweedler's four-dimensional algebra");
  auto* monoid = zoo->add_subcommand("monoid", "Bialgebra k[{1,z}], z^2 = z (no antipode)");
  auto* zoo_tensor = zoo->add_subcommand("tensor", "Tensor product of two files");
  zoo_tensor->add_option("--a", o.path, "First factor")->required();
  zoo_tensor->add_option("--b", o.path_b, "Second factor")->required();
  zoo_tensor->add_option("--order", o.order, "Lift both factors to this order first");
  auto* zoo_dual = zoo->add_subcommand("dual", "Dual of a file");
  zoo_dual->add_option("--a", o.path, "Input file")->required();
  for (auto* sub : zoo->get_subcommands({})) {
    sub->add_option("--out", o.out_path, "Write to a file instead of stdout");
  }

  auto* dual_cmd = app.add_subcommand("dual", "Dual Hopf algebra");
  dual_cmd->add_option("file", o.path, "Structure-constants file")->required();
  dual_cmd->add_option("--out", o.out_path, "Write to a file instead of stdout");

  auto* tensor_cmd = app.add_subcommand("tensor", "Tensor product");
  tensor_cmd->add_option("a", o.path, "First factor")->required();
  tensor_cmd->add_option("b", o.path_b, "Second factor")->required();
  tensor_cmd->add_option("--order", o.order, "Lift both factors to this order first");
  tensor_cmd->add_option("--out", o.out_path, "Write to a file instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*verify) return cmd_verify(o, out);
    if (*report) return cmd_report(o, out, err);
    if (*dual_cmd) {
      emit(serialize_hopf_json(dual(load_hopf_file(o.path))), o.out_path, out);
      return kOk;
    }
    if (*tensor_cmd) {
      const auto a = lifted(load_hopf_file(o.path), o);
      const auto b = lifted(load_hopf_file(o.path_b), o);
      emit(serialize_hopf_json(build_tensor(a, b)), o.out_path, out);
      return kOk;
    }
    std::optional<HopfPresentation> h;
    if (*taft) {
      h = build_taft(o.n, o.root_power, order_opt(o));
    } else if (*group) {
      if (!o.table.empty()) {
        h = group_from_table(o.table, order_opt(o));
      } else if (!o.cyclic.empty()) {
        h = build_abelian_group_algebra(o.cyclic, order_opt(o));
      } else {
        throw Error(Errc::BadParameters, "group needs --cyclic or --table");
      }
    } else if (*sweedler) {
      h = build_sweedler();
    } else if (*monoid) {
      h = build_idempotent_monoid_bialgebra();
    } else if (*zoo_tensor) {
      h = build_tensor(lifted(load_hopf_file(o.path), o), lifted(load_hopf_file(o.path_b), o));
    } else if (*zoo_dual) {
      h = build_dual_spec(load_hopf_file(o.path));
    }
    emit(serialize_hopf_json(*h), o.out_path, out);
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.code() == Errc::EigenvalueNotInField || e.code() == Errc::NonSplitting) {
      err << "hint: raise cyclotomic_order (e.g. lift the file with `tensor --order`)\n";
    } else if (e.code() == Errc::OrderMismatch) {
      err << "hint: pass --order with a common multiple of both cyclotomic orders\n";
    }
    return exit_code_for(e.code());
  }
}

}  // namespace hopf_forge::cli
