#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include "piharmonic/catalog.hpp"
#include "piharmonic/closedform.hpp"
#include "piharmonic/constants.hpp"
#include "piharmonic/errors.hpp"
#include "piharmonic/wz.hpp"

using namespace piharmonic;

namespace {

#ifndef PIHARMONIC_VERSION
#define PIHARMONIC_VERSION "0.0.0"
#endif

void check_digits(int digits) {
  if (digits < 5) throw DomainError("--digits must be at least 5");
  if (digits > 2000) throw DomainError("--digits is capped at 2000");
}

nlohmann::json report_json(const VerifyReport& r) {
  return {{"id", r.id},
          {"anchor", r.anchor},
          {"digits_requested", r.digits_requested},
          {"digits_matched", r.digits_matched},
          {"lhs", r.lhs},
          {"rhs", r.rhs},
          {"terms", r.terms},
          {"method", r.method},
          {"pass", r.pass},
          {"ms", r.ms}};
}

int emit_reports(const std::vector<VerifyReport>& reports, int digits, bool as_json) {
  bool all_pass = true;
  double total_ms = 0.0;
  for (const auto& r : reports) {
    all_pass = all_pass && r.pass;
    total_ms += r.ms;
  }
  if (as_json) {
    nlohmann::json j;
    j["version"] = PIHARMONIC_VERSION;
    j["context"] = {{"digits", digits}, {"bits", PrecisionContext(digits).working_bits}};
    j["reports"] = nlohmann::json::array();
    for (const auto& r : reports) j["reports"].push_back(report_json(r));
    j["pass"] = all_pass;
    j["total_ms"] = total_ms;
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    for (const auto& r : reports) {
      std::printf("[%s] %-24s %4d/%-4d digits %6ld terms  %-20s %9.1f ms\n",
                  r.pass ? "PASS" : "FAIL", r.id.c_str(), r.digits_matched,
                  r.digits_requested, r.terms, r.method.c_str(), r.ms);
      if (!r.pass) {
        std::printf("       lhs = %s\n       rhs = %s\n", r.lhs.c_str(), r.rhs.c_str());
      }
    }
    size_t passed = 0;
    for (const auto& r : reports)
      if (r.pass) ++passed;
    std::printf("%s: %zu/%zu checks, %.1f ms total\n", all_pass ? "PASS" : "FAIL", passed,
                reports.size(), total_ms);
  }
  return all_pass ? 0 : 1;
}

std::vector<VerifyReport> run_verify(const std::vector<const IdentityRecord*>& recs,
                                     int digits, int jobs) {
  std::vector<VerifyReport> out(recs.size());
  if (jobs < 1) jobs = 1;
  if (jobs == 1) {
    for (size_t i = 0; i < recs.size(); ++i) out[i] = verify_record(*recs[i], digits);
    return out;
  }
  std::atomic<size_t> next{0};
  std::vector<std::string> errors(recs.size());
  auto worker = [&] {
    for (size_t i; (i = next.fetch_add(1)) < recs.size();) {
      try {
        out[i] = verify_record(*recs[i], digits);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (size_t i = 0; i < recs.size(); ++i)
    if (!errors[i].empty()) throw Error(recs[i]->id + ": " + errors[i]);
  return out;
}

Rational parse_rational(const std::string& text) { return Rational::parse(text); }

int cmd_list() {
  std::printf("fixed records (verify --id NAME | verify --all):\n");
  for (const auto& r : catalog_records())
    std::printf("  %-14s weight %-46s rhs %s\n", r.id.c_str(), r.anchor.c_str(),
                r.rhs.to_string().c_str());
  std::printf("\nparametrized families (param --id NAME, deriv --id NAME --at P):\n");
  for (const auto& f : catalog_families()) {
    std::printf("  %-8s parameter %s in (%s, %s), points", f.id.c_str(),
                f.param_name.c_str(), f.domain_lo.to_string().c_str(),
                f.domain_hi.to_string().c_str());
    for (const auto& p : f.test_points) std::printf(" %s", p.to_string().c_str());
    std::printf("\n           weight %s\n", f.anchor.c_str());
  }
  std::printf("\ntransformations (transform --kind NAME): dougall chu chu14\n");
  std::printf("wz subcommands: check sum-g sum-h ddk zero\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arbitrary-precision verification of harmonic-number series for 1/pi"};
  app.set_version_flag("--version", std::string(PIHARMONIC_VERSION));
  app.require_subcommand(1);

  auto* list_cmd = app.add_subcommand("list", "catalog contents");

  auto* verify_cmd = app.add_subcommand("verify", "check fixed records");
  std::vector<std::string> ids;
  bool all = false, as_json = false;
  int digits = 40, jobs = 1;
  verify_cmd->add_option("--id", ids, "record id (repeatable)");
  verify_cmd->add_flag("--all", all, "verify the whole catalog");
  verify_cmd->add_option("--digits", digits, "target agreement digits (5..2000)");
  verify_cmd->add_flag("--json", as_json, "machine-readable report");
  verify_cmd->add_option("--jobs", jobs, "worker threads");

  auto* param_cmd = app.add_subcommand("param", "check a family at an exact parameter");
  std::string fam_id, va, vb, vc, vd, ve, vvalue;
  int pdigits = 40;
  bool pjson = false;
  param_cmd->add_option("--id", fam_id, "family id")->required();
  param_cmd->add_option("--a", va, "value for parameter a");
  param_cmd->add_option("--b", vb, "value for parameter b");
  param_cmd->add_option("--c", vc, "value for parameter c");
  param_cmd->add_option("--d", vd, "value for parameter d");
  param_cmd->add_option("--e", ve, "value for parameter e");
  param_cmd->add_option("--value", vvalue, "parameter value (any family)");
  param_cmd->add_option("--digits", pdigits, "target agreement digits");
  param_cmd->add_flag("--json", pjson, "machine-readable report");

  auto* deriv_cmd = app.add_subcommand("deriv", "check a family's parameter derivative");
  std::string dfam_id, dat;
  int ddigits = 40;
  bool djson = false;
  deriv_cmd->add_option("--id", dfam_id, "family id")->required();
  deriv_cmd->add_option("--at", dat, "parameter value")->required();
  deriv_cmd->add_option("--digits", ddigits, "target agreement digits");
  deriv_cmd->add_flag("--json", djson, "machine-readable report");

  auto* trans_cmd = app.add_subcommand("transform", "classical summation checks");
  std::string kind, ta, tb, tc, td, te;
  int tdigits = 30;
  bool tjson = false;
  trans_cmd->add_option("--kind", kind, "dougall, chu, or chu14")->required();
  trans_cmd->add_option("--a", ta, "parameter a");
  trans_cmd->add_option("--b", tb, "parameter b");
  trans_cmd->add_option("--c", tc, "parameter c");
  trans_cmd->add_option("--d", td, "parameter d");
  trans_cmd->add_option("--e", te, "parameter e");
  trans_cmd->add_option("--digits", tdigits, "target agreement digits");
  trans_cmd->add_flag("--json", tjson, "machine-readable report");

  auto* wz_cmd = app.add_subcommand("wz", "certified-pair checks");
  wz_cmd->require_subcommand(1);
  auto* wz_check = wz_cmd->add_subcommand("check", "exact pair relation sweep");
  long nmax = 100, kmax = 100;
  bool negative_control = false;
  wz_check->add_option("--nmax", nmax, "largest n");
  wz_check->add_option("--kmax", kmax, "largest k");
  wz_check->add_flag("--negative-control", negative_control,
                     "perturb the row polynomial 20n+2k+3 to 21n+2k+3");
  auto* wz_sum_g_cmd = wz_cmd->add_subcommand("sum-g", "row sum against 8/pi");
  std::string wz_k = "0";
  int wz_digits = 40;
  bool wz_json = false;
  wz_sum_g_cmd->add_option("--k", wz_k, "row shift: integer >= 0, or a rational in (-1/2, 1/2)");
  wz_sum_g_cmd->add_option("--digits", wz_digits, "target agreement digits");
  wz_sum_g_cmd->add_flag("--json", wz_json, "machine-readable report");
  auto* wz_sum_h_cmd = wz_cmd->add_subcommand("sum-h", "diagonal sum against 8/pi");
  wz_sum_h_cmd->add_option("--digits", wz_digits, "target agreement digits");
  wz_sum_h_cmd->add_flag("--json", wz_json, "machine-readable report");
  auto* wz_ddk_cmd = wz_cmd->add_subcommand("ddk", "derivative of the row sum at k=0");
  auto* wz_zero_cmd = wz_cmd->add_subcommand("zero", "telescoped zero series");
  wz_zero_cmd->add_option("--digits", wz_digits, "target cancellation digits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*list_cmd) return cmd_list();

    if (*verify_cmd) {
      check_digits(digits);
      std::vector<const IdentityRecord*> recs;
      if (all) {
        for (const auto& r : catalog_records()) recs.push_back(&r);
      }
      for (const auto& id : ids) recs.push_back(&catalog_record(id));
      if (recs.empty()) throw DomainError("verify needs --all or at least one --id");
      return emit_reports(run_verify(recs, digits, jobs), digits, as_json);
    }

    if (*param_cmd || *deriv_cmd) {
      bool is_deriv = static_cast<bool>(*deriv_cmd);
      const std::string& want_id = is_deriv ? dfam_id : fam_id;
      const ParamFamily& f = catalog_family(want_id);
      int dg = is_deriv ? ddigits : pdigits;
      check_digits(dg);
      std::string text;
      if (is_deriv) {
        text = dat;
      } else if (!vvalue.empty()) {
        text = vvalue;
      } else {
        struct {
          const char* name;
          const std::string* val;
        } letters[] = {{"a", &va}, {"b", &vb}, {"c", &vc}, {"d", &vd}, {"e", &ve}};
        for (const auto& l : letters) {
          if (l.val->empty()) continue;
          if (f.param_name != l.name)
            throw DomainError("family " + f.id + " is parametrized by " + f.param_name +
                              ", not " + l.name);
          text = *l.val;
        }
        if (text.empty())
          throw DomainError("param needs --" + f.param_name + " or --value");
      }
      Rational p0 = parse_rational(text);
      if (!is_deriv) return emit_reports({verify_family_point(f, p0, dg)}, dg, pjson);
      VerifyReport identity = verify_family_derivative_point(f, p0, dg);
      auto t0 = std::chrono::steady_clock::now();
      CentralDiffReport cd = central_difference_check(f, p0);
      VerifyReport numeric;
      numeric.id = "numeric d/d" + f.param_name + " " + f.id + "(" + f.param_name + "=" +
                   p0.to_string() + ")";
      numeric.anchor = "central difference at h=1e-10 against the assembled derivative";
      numeric.digits_requested = 15;
      numeric.digits_matched = cd.agree;
      numeric.lhs = cd.numeric;
      numeric.rhs = cd.analytic;
      numeric.method = "central-difference";
      numeric.pass = cd.pass;
      numeric.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                             t0)
                       .count();
      return emit_reports({identity, numeric}, dg, djson);
    }

    if (*trans_cmd) {
      check_digits(tdigits);
      TransformTuple t{Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2),
                       Rational(1, 3)};
      if (kind == "dougall") t = {Rational(1, 2), Rational(1, 3), Rational(1, 3),
                                  Rational(1, 3), Rational(0)};
      if (!ta.empty()) t.a = parse_rational(ta);
      if (!tb.empty()) t.b = parse_rational(tb);
      if (!tc.empty()) t.c = parse_rational(tc);
      if (!td.empty()) t.d = parse_rational(td);
      if (!te.empty()) t.e = parse_rational(te);
      return emit_reports({verify_transformation(kind, t, tdigits)}, tdigits, tjson);
    }

    if (*wz_check) {
      PairSweepReport r = wz_pair_sweep(nmax, kmax, negative_control);
      std::printf("telescoping convention: F(n+1,k) - F(n,k) == G(n,k+1) - G(n,k)\n");
      std::printf("pair relation on [0,%ld]x[0,%ld]: %s (%ld pairs)%s%s\n", nmax, kmax,
                  r.pass ? "PASS" : "FAIL", r.checked, r.detail.empty() ? "" : " - ",
                  r.detail.c_str());
      bool bridge = wz_bridge_check(50);
      std::printf("first column matches the (20k+3) record for n <= 50: %s\n",
                  bridge ? "PASS" : "FAIL");
      return (r.pass && bridge) ? 0 : 1;
    }
    if (*wz_sum_g_cmd || *wz_sum_h_cmd) {
      check_digits(wz_digits);
      PrecisionContext ctx(wz_digits);
      auto t0 = std::chrono::steady_clock::now();
      bool is_g = static_cast<bool>(*wz_sum_g_cmd);
      Rational shift = is_g ? Rational::parse(wz_k) : Rational(0);
      SumResult s = is_g ? wz_sum_G(shift, ctx) : wz_sum_H(0, ctx);
      BigReal want = (ClosedForm::integer(8) / ClosedForm::pi()).eval(ctx);
      VerifyReport r;
      r.id = is_g ? ("wz-row-sum(k=" + shift.to_string() + ")") : "wz-diagonal-sum";
      r.anchor = is_g ? "sum over n of G(n,k), constant 8/pi"
                      : "sum over n of F(n+1,n)+G(n,n), equal to 8/pi";
      r.digits_requested = wz_digits;
      r.digits_matched = agree_digits(s.value, want, wz_digits + 10);
      r.lhs = s.value.to_decimal(wz_digits + 5);
      r.rhs = want.to_decimal(wz_digits + 5);
      r.terms = s.terms;
      r.method = s.method;
      r.pass = r.digits_matched >= wz_digits;
      r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                 .count();
      return emit_reports({r}, wz_digits, wz_json);
    }
    if (*wz_ddk_cmd) {
      DdkReport r = wz_ddk_check();
      std::printf("d/dk row sum at k=0: %s (vanishes to %d digits, value %s)\n",
                  r.pass ? "PASS" : "FAIL", r.zero_digits, r.value.c_str());
      return r.pass ? 0 : 1;
    }
    if (*wz_zero_cmd) {
      check_digits(wz_digits);
      bool ok = true;
      for (const auto& r : wz_zero_series(wz_digits)) {
        std::printf("%s: %s (channels exact for %ld terms, sum vanishes to %d digits)\n",
                    r.id.c_str(), r.pass ? "PASS" : "FAIL", r.terms_checked,
                    r.zero_digits);
        ok = ok && r.pass;
      }
      return ok ? 0 : 1;
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
