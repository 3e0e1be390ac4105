#ifndef HOOKSYM_CLI_HPP
#define HOOKSYM_CLI_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "format.hpp"
#include "glchar.hpp"
#include "partitions.hpp"
#include "polyring.hpp"
#include "series.hpp"
#include "superchar.hpp"
#include "symfun.hpp"
#include "tensorprod.hpp"
#include "verify.hpp"

namespace hooksym::cli {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

namespace detail {

struct Options {
  bool json = false;
  std::string lambda_text, mu_text, nu_text, name;
  int trunc = 4;
  int poly_trunc = -1;
  int order = 4;
  int rank = 0;
  int xsize = 2, ysize = 2, zsize = 2;
  int bound = 4;
  int m = 1, n = 1;
  int lambda = 0;
  int llevel = 1, rlevel = 1;
  int size = 4;
  bool verify = false;
  std::string type = "nn";
  std::string method = "tableau";
  std::string perturb;
};

inline void require_nonnegative(int v, const char* what) {
  if (v < 0) throw std::invalid_argument(std::string(what) + " must be nonnegative");
}

inline std::vector<VarId> letters(VarKind kind, int n) {
  require_nonnegative(n, "alphabet size");
  return alphabet(kind, static_cast<std::size_t>(n));
}

inline std::optional<Truncation> optional_trunc(int trunc) {
  if (trunc < 0) return std::nullopt;
  return Truncation{trunc, Grading::uniform()};
}

inline int emit_reports(const std::vector<VerificationReport>& reports, bool as_json, std::ostream& out) {
  bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
  if (as_json) {
    json j = reports.size() == 1 ? to_json(reports.front()) : json::array();
    if (reports.size() != 1)
      for (const auto& r : reports) j.push_back(to_json(r));
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) out << render(r) << "\n";
  }
  return ok ? kOk : kVerificationFailed;
}

inline json table_json(const std::map<GeneralizedPartition, Integer>& t) { return table_to_json(t); }

}  // namespace detail

/// Parses the command line, runs one subcommand and returns the exit code:
/// 0 success, 1 failed verification, 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  detail::Options o;
  CLI::App app{"Hook Schur functions, characters of infinite-rank and affine superalgebras"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Emit JSON instead of text");

  std::function<int()> action;
  auto sub = [&](const char* name, const char* help) { return app.add_subcommand(name, help); };

  auto* schur_cmd = sub("schur", "Schur polynomial s_LAMBDA(x1..xn)");
  schur_cmd->add_option("LAMBDA", o.lambda_text, "Partition, e.g. 2,1")->required();
  schur_cmd->add_option("--xsize", o.xsize, "Number of x variables")->capture_default_str();
  schur_cmd->add_option("--trunc", o.poly_trunc, "Total-degree truncation (negative: none)")->capture_default_str();
  schur_cmd->callback([&] {
    action = [&] {
      auto p = schur(parse_partition(o.lambda_text), detail::letters(VarKind::X, o.xsize), detail::optional_trunc(o.poly_trunc));
      out << (o.json ? to_json(p).dump() : render(p)) << "\n";
      return kOk;
    };
  });

  auto* hs_cmd = sub("hookschur", "Hook Schur function HS_LAMBDA(x;y)");
  hs_cmd->add_option("LAMBDA", o.lambda_text, "Partition")->required();
  hs_cmd->add_option("--xsize", o.xsize, "Number of x variables")->capture_default_str();
  hs_cmd->add_option("--ysize", o.ysize, "Number of y variables")->capture_default_str();
  hs_cmd->add_option("--trunc", o.poly_trunc, "Total-degree truncation (negative: none)")->capture_default_str();
  hs_cmd->add_option("--method", o.method, "tableau or skew")->check(CLI::IsMember({"tableau", "skew"}))->capture_default_str();
  hs_cmd->callback([&] {
    action = [&] {
      const auto lam = parse_partition(o.lambda_text);
      const auto x = detail::letters(VarKind::X, o.xsize), y = detail::letters(VarKind::Y, o.ysize);
      auto p = o.method == "skew" ? hook_schur_skew(lam, x, y, detail::optional_trunc(o.poly_trunc))
                                  : hook_schur_tableau(lam, x, y, detail::optional_trunc(o.poly_trunc));
      out << (o.json ? to_json(p).dump() : render(p)) << "\n";
      return kOk;
    };
  });

  auto* gl_cmd = sub("glchar", "Character of the GL_l module V^LAMBDA");
  gl_cmd->add_option("LAMBDA", o.lambda_text, "Generalized partition, e.g. 1,0,-1")->required();
  gl_cmd->add_option("--rank", o.rank, "l (0: number of parts)")->capture_default_str();
  gl_cmd->callback([&] {
    action = [&] {
      auto c = gl_character(parse_generalized(o.lambda_text, static_cast<std::size_t>(std::max(o.rank, 0))));
      if (o.json)
        out << json{{"rank", c.rank}, {"dimension", dimension(c).str()}, {"terms", to_json(c.poly)}}.dump() << "\n";
      else
        out << render(c.poly) << "\n";
      return kOk;
    };
  });

  auto* lr_cmd = sub("lrcoeff", "Littlewood-Richardson coefficients of s_MU * s_NU");
  lr_cmd->add_option("MU", o.mu_text, "Partition")->required();
  lr_cmd->add_option("NU", o.nu_text, "Partition")->required();
  lr_cmd->callback([&] {
    action = [&] {
      auto t = lr_coefficients(parse_partition(o.mu_text), parse_partition(o.nu_text));
      out << (o.json ? table_to_json(t).dump() + "\n" : render_table(t));
      return kOk;
    };
  });

  auto* mt_cmd = sub("mixedtensor", "Decomposition of V^MU tensor (V^NU)* for GL_l");
  mt_cmd->add_option("MU", o.mu_text, "Partition")->required();
  mt_cmd->add_option("NU", o.nu_text, "Partition")->required();
  mt_cmd->add_option("--rank", o.rank, "l")->required();
  mt_cmd->callback([&] {
    action = [&] {
      detail::require_nonnegative(o.rank, "--rank");
      auto t = mixed_tensor_coefficients(parse_partition(o.mu_text), parse_partition(o.nu_text),
                                         static_cast<std::size_t>(o.rank));
      out << (o.json ? detail::table_json(t).dump() + "\n" : render_table(t));
      return kOk;
    };
  });

  auto* w_cmd = sub("weight", "Highest weight attached to a generalized partition");
  w_cmd->add_option("LAMBDA", o.lambda_text, "Generalized partition")->required();
  w_cmd->add_option("--rank", o.rank, "l (0: number of parts)")->capture_default_str();
  w_cmd->callback([&] {
    action = [&] {
      const auto lam = parse_generalized(o.lambda_text, static_cast<std::size_t>(std::max(o.rank, 0)));
      const Weight w = weight_of(lam);
      if (o.json) {
        json entries = json::object();
        for (const auto& [s, v] : w.entries) entries[HalfInt::from_twice(s).str()] = v;
        out << json{{"lambda", lam.parts()}, {"entries", entries}, {"charge", w.central_charge}, {"h", h_of(lam).str()}}
                   .dump()
            << "\n";
      } else {
        out << to_string(w) << "\n" << "h = " << h_of(lam).str() << "\n";
      }
      return kOk;
    };
  });

  auto* ch_cmd = sub("character", "Truncated character of the level-l module");
  ch_cmd->add_option("LAMBDA", o.lambda_text, "Generalized partition")->required();
  ch_cmd->add_option("--rank", o.rank, "l (0: number of parts)")->capture_default_str();
  ch_cmd->add_option("--zsize", o.zsize, "Number of z variables")->capture_default_str();
  ch_cmd->add_option("--ysize", o.ysize, "Number of y variables")->capture_default_str();
  ch_cmd->add_option("--trunc", o.trunc, "Total-degree truncation")->capture_default_str();
  ch_cmd->callback([&] {
    action = [&] {
      detail::require_nonnegative(o.zsize, "--zsize");
      detail::require_nonnegative(o.ysize, "--ysize");
      const auto lam = parse_generalized(o.lambda_text, static_cast<std::size_t>(std::max(o.rank, 0)));
      auto p = character(lam, static_cast<std::size_t>(o.zsize), static_cast<std::size_t>(o.ysize), o.trunc);
      out << (o.json ? to_json(p).dump() : render(p)) << "\n";
      return kOk;
    };
  });

  auto* q_cmd = sub("qcharacter", "q-character of the level-l module");
  q_cmd->add_option("LAMBDA", o.lambda_text, "Generalized partition")->required();
  q_cmd->add_option("--rank", o.rank, "l (0: number of parts)")->capture_default_str();
  q_cmd->add_option("--order", o.order, "Highest power of q reported")->capture_default_str();
  q_cmd->callback([&] {
    action = [&] {
      detail::require_nonnegative(o.order, "--order");
      const auto lam = parse_generalized(o.lambda_text, static_cast<std::size_t>(std::max(o.rank, 0)));
      const HalfInt h = h_of(lam);
      HalfSeries s = q_character(lam, HalfInt::whole(o.order));
      if (o.json) {
        json j = to_json(s);
        j["h"] = h.str();
        out << j.dump() << "\n";
      } else {
        if (h.twice() != 0) {
          const std::string pre = h.is_integer() ? "q^" + (-h).str() : "q^(" + (-h).str() + ")";
          out << pre << " * (" << render(s.shifted(h)) << ")\n= ";
        }
        out << render(s) << "\n";
      }
      return kOk;
    };
  });

  auto* af_cmd = sub("affine-char", "Level-one affine gl(m|n) character");
  af_cmd->add_option("--type", o.type, "nn or mn")->check(CLI::IsMember({"nn", "mn"}))->capture_default_str();
  af_cmd->add_option("--lambda", o.lambda, "Integer lambda")->capture_default_str();
  af_cmd->add_option("--m", o.m, "Number of y variables (mn)")->capture_default_str();
  af_cmd->add_option("--n", o.n, "Number of z variables")->capture_default_str();
  af_cmd->add_option("--order", o.order, "Highest power of q reported")->capture_default_str();
  af_cmd->callback([&] {
    action = [&] {
      detail::require_nonnegative(o.order, "--order");
      const HalfInt ord = HalfInt::whole(o.order);
      auto p = o.type == "nn" ? affine_character_nn(o.lambda, o.n, ord) : affine_character_mn(o.lambda, o.m, o.n, ord);
      out << (o.json ? to_json(p).dump() : render(p)) << "\n";
      return kOk;
    };
  });

  auto* t_cmd = sub("tensor", "Tensor product of two level-one-or-higher modules");
  t_cmd->add_option("MU", o.mu_text, "Generalized partition of length --llevel")->required();
  t_cmd->add_option("NU", o.nu_text, "Generalized partition of length --rlevel")->required();
  t_cmd->add_option("--llevel", o.llevel, "Level l of the first factor")->capture_default_str();
  t_cmd->add_option("--rlevel", o.rlevel, "Level r of the second factor")->capture_default_str();
  t_cmd->add_option("--bound", o.bound, "Keep |lambda| <= bound and d <= bound")->capture_default_str();
  t_cmd->add_flag("--verify", o.verify, "Compare with restriction multiplicities");
  t_cmd->callback([&] {
    action = [&] {
      detail::require_nonnegative(o.llevel, "--llevel");
      detail::require_nonnegative(o.rlevel, "--rlevel");
      const auto l = static_cast<std::size_t>(o.llevel), r = static_cast<std::size_t>(o.rlevel);
      auto dec = tensor_decompose(parse_generalized(o.mu_text, l), l, parse_generalized(o.nu_text, r), r, o.bound);
      std::vector<TensorMismatch> bad;
      if (o.verify) bad = tensor_branching_mismatches(dec);
      if (o.json) {
        json terms = json::array();
        for (const auto& [k, t] : dec.terms)
          terms.push_back({{"weight", k.parts()}, {"lambda", t.lambda.parts()}, {"d", t.d}, {"multiplicity", t.multiplicity.str()}});
        json j = {{"mu", dec.left.parts()}, {"nu", dec.right.parts()}, {"bound", dec.bound}, {"terms", terms}};
        if (o.verify) {
          json mism = json::array();
          for (const auto& m : bad)
            mism.push_back({{"weight", m.weight.parts()}, {"expected", m.expected.str()}, {"actual", m.actual.str()}});
          j["verification"] = {{"status", bad.empty() ? "pass" : "fail"}, {"mismatches", mism}};
        }
        out << j.dump() << "\n";
      } else {
        out << "bound " << dec.bound << ": terms with |lambda| <= " << dec.bound << " and d <= " << dec.bound << "\n";
        for (const auto& [k, t] : dec.terms)
          out << to_string(k) << ": " << t.multiplicity.str() << "  (lambda=" << to_string(t.lambda) << ", d=" << t.d
              << ")\n";
        if (o.verify) {
          out << (bad.empty() ? "PASS" : "FAIL") << " restriction multiplicities\n";
          for (const auto& m : bad)
            out << "  " << to_string(m.weight) << ": expected " << m.expected.str() << ", got " << m.actual.str() << "\n";
        }
      }
      return bad.empty() ? kOk : kVerificationFailed;
    };
  });

  auto* v_cmd = sub("verify", "Check one identity: q-identity, duality, cauchy, two-defs, level-one, tensor, lr, odd-reflection");
  v_cmd->add_option("NAME", o.name, "Identity")
      ->required()
      ->check(CLI::IsMember({"q-identity", "duality", "cauchy", "two-defs", "level-one", "tensor", "lr", "odd-reflection"}));
  v_cmd->add_option("--lambda", o.lambda_text, "Integer or generalized partition (q-identity, duality, level-one)");
  v_cmd->add_option("--mu", o.mu_text, "First tensor factor");
  v_cmd->add_option("--nu", o.nu_text, "Second tensor factor");
  v_cmd->add_option("--order", o.order, "q-order")->capture_default_str();
  v_cmd->add_option("--trunc", o.trunc, "Degree truncation (cauchy, level-one)")->capture_default_str();
  v_cmd->add_option("--size", o.size, "Largest partition size (two-defs, lr)")->capture_default_str();
  v_cmd->add_option("--xsize", o.xsize, "x alphabet size")->capture_default_str();
  v_cmd->add_option("--ysize", o.ysize, "y alphabet size")->capture_default_str();
  v_cmd->add_option("--zsize", o.zsize, "z alphabet size")->capture_default_str();
  v_cmd->add_option("--bound", o.bound, "Tensor bound")->capture_default_str();
  v_cmd->add_option("--n", o.n, "Largest n (odd-reflection)")->capture_default_str();
  v_cmd->callback([&] {
    action = [&] {
      detail::require_nonnegative(o.order, "--order");
      detail::require_nonnegative(o.trunc, "--trunc");
      detail::require_nonnegative(o.size, "--size");
      VerificationReport r;
      const std::string lam = o.lambda_text.empty() ? "0" : o.lambda_text;
      if (o.name == "q-identity") {
        r = verify_q_identity(parse_int_list(lam).at(0), o.order);
      } else if (o.name == "duality") {
        r = verify_duality(parse_generalized(lam), o.order);
      } else if (o.name == "cauchy") {
        r = verify_hook_cauchy(o.xsize, o.ysize, o.zsize, o.trunc);
      } else if (o.name == "two-defs") {
        r = verify_two_defs(o.size, o.xsize, o.ysize);
      } else if (o.name == "level-one") {
        r = verify_level_one(parse_int_list(lam).at(0), o.zsize, o.trunc);
      } else if (o.name == "tensor") {
        const auto mu = parse_generalized(o.mu_text.empty() ? "0" : o.mu_text);
        const auto nu = parse_generalized(o.nu_text.empty() ? "0" : o.nu_text);
        r = verify_tensor(mu, nu, o.bound);
      } else if (o.name == "lr") {
        r = verify_lr(o.size);
      } else {
        r = verify_odd_reflection(o.n);
      }
      return detail::emit_reports({r}, o.json, out);
    };
  });

  auto* va_cmd = sub("verify-all", "Run every identity check");
  va_cmd->add_option("--order", o.order, "q-order budget")->capture_default_str();
  va_cmd->add_option("--size", o.size, "Size budget")->capture_default_str();
  va_cmd->add_option("--perturb", o.perturb, "Add 1 to one computed coefficient of the named check");
  va_cmd->callback([&] {
    action = [&] {
      VerifyOptions vo;
      if (!o.perturb.empty()) vo.perturb = o.perturb;
      return detail::emit_reports(verify_all(o.order, o.size, vo), o.json, out);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return action();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

/// argv[0] is the program name.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace hooksym::cli

#endif  // HOOKSYM_CLI_HPP
