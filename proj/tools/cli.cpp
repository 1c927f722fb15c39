#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include "schur/asymptotics.hpp"
#include "schur/counter.hpp"
#include "schur/formulas.hpp"
#include "schur/serialize.hpp"
#include "schur/solver.hpp"

namespace schur::cli {

namespace {

using nlohmann::json;

constexpr std::int64_t kBruteForceLimit = 200;

std::string fmt_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string minimizer_field(const Minimizer& m) {
  if (const auto* c = std::get_if<ClassSizeChoice>(&m)) return "m=" + std::to_string(c->m);
  const auto& b = std::get<BlockChoice>(m);
  return "eps=" + std::to_string(b.eps) + ";a=" + std::to_string(b.a) + ";q=" + std::to_string(b.q);
}

// Output goes to --out when given, else to the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot open output file '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

Count brute_force_s(std::int64_t a, std::int64_t b) {
  Count total = 0;
  for (std::int64_t x1 = a; x1 <= b; ++x1)
    for (std::int64_t x2 = x1; x2 <= b; ++x2)
      for (std::int64_t x3 = x2; x3 <= b; ++x3) total += x1 + x2 < x3;
  return total;
}

// Certificate-shaped record from an exhaustive scan. The minimizer is read off
// the witness as-is, so it can lie outside the half-space the solver reports.
json oracle_certificate(std::int64_t k, std::int64_t n, const OracleOptions& oo) {
  auto result = oracle_minimum(shifted_interval(k, n), oo);
  const Coloring& w = result.sample_minimizers.front();
  Minimizer m;
  const Regime regime = regime_for(k, n);
  if (regime == Regime::Mixed) {
    auto p = extract_params(w, -k, n + k);
    m = BlockChoice{p.eps, p.a, p.q};
  } else if (regime == Regime::Unproven) {
    auto bits = w.bits();
    m = BlockChoice{bits[0] == 0 ? 1 : 0, 0, std::count(bits.begin() + 1, bits.end(), 0)};
  } else {
    m = ClassSizeChoice{w.class_size(0)};
  }
  json j = {{"k", k},
            {"n", n},
            {"value", result.minimum},
            {"regime", std::string(regime_name(regime))},
            {"minimizer", m},
            {"witness", w},
            {"recount", count_solutions(w).total},
            {"method", "oracle"},
            {"minimizer_count", result.minimizer_count},
            {"colorings_scanned", result.colorings_scanned}};
  return j;
}

}  // namespace

int run_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err,
               CertificateSource source) {
  OracleOptions oo;
  oo.cap = opts.cap;
  oo.jobs = opts.jobs;
  bool ok = true;
  auto sink = [&](const ValidationRecord& rec) {
    json j = rec;
    out << j.dump() << '\n' << std::flush;
    if (!rec.pass) {
      ok = false;
      err << "mismatch: " << j.dump() << '\n';
    }
  };
  cross_validate({opts.k_min, opts.k_max}, {1, opts.n_max}, sink, oo, std::move(source));
  return ok ? kSuccess : kVerificationFailed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum monochromatic solutions of x1 <= x2 <= x3, x1 + x2 < x3 in 2-colorings"};
  app.require_subcommand(1);

  std::int64_t cap = kDefaultOracleCap;
  bool cap_given = false;
  app.add_option_function<std::int64_t>(
         "--oracle-cap", [&](std::int64_t v) { cap = v; cap_given = true; },
         "Largest interval the exhaustive oracle accepts (env SCHUR_ORACLE_CAP)")
      ->check(CLI::Range(0, 40));

  // s-count
  auto* s_cmd = app.add_subcommand("s-count", "S(a,b): solutions inside [a,b], a >= 1");
  std::int64_t s_a = 1, s_b = 0;
  bool s_check = false;
  s_cmd->add_option("--a", s_a)->required();
  s_cmd->add_option("--b", s_b)->required();
  s_cmd->add_flag("--check", s_check, "Also evaluate the sum form and brute force (b <= 200)");

  // count
  auto* c_cmd = app.add_subcommand("count", "Monochromatic solutions of one coloring");
  std::int64_t c_lo = 1;
  std::string c_bits;
  std::size_t c_list = 0;
  c_cmd->add_option("--lo", c_lo, "Smallest integer of the interval")->required();
  c_cmd->add_option("--coloring", c_bits, "'0'/'1' string, leftmost = smallest integer")
      ->required();
  c_cmd->add_option("--list", c_list, "Also list the first N solutions");

  // multiplicity
  auto* m_cmd = app.add_subcommand("multiplicity", "M_k(n) with a witness coloring");
  std::int64_t m_k = 0, m_n = 1;
  std::string m_method = "auto";
  unsigned m_jobs = 1;
  bool m_no_recount = false;
  m_cmd->add_option("--k", m_k)->required();
  m_cmd->add_option("--n", m_n)->required();
  m_cmd->add_option("--method", m_method)->check(CLI::IsMember({"auto", "reduction", "oracle"}));
  m_cmd->add_option("--jobs", m_jobs)->check(CLI::PositiveNumber);
  m_cmd->add_flag("--no-recount", m_no_recount, "Skip the O(n^2) witness recount");

  // table
  auto* t_cmd = app.add_subcommand("table", "M_k(n) for n = 1..n-max");
  std::int64_t t_k = 0, t_nmax = 1;
  std::string t_format = "csv", t_out;
  t_cmd->add_option("--k", t_k)->required();
  t_cmd->add_option("--n-max", t_nmax)->required();
  t_cmd->add_option("--format", t_format)->check(CLI::IsMember({"csv", "json"}));
  t_cmd->add_option("--out", t_out, "Write to a file instead of stdout");

  // verify
  auto* v_cmd = app.add_subcommand("verify", "Cross-validate the solver against the oracle");
  VerifyOptions vopts;
  std::string v_out;
  v_cmd->add_option("--k-min", vopts.k_min)->required();
  v_cmd->add_option("--k-max", vopts.k_max)->required();
  v_cmd->add_option("--n-max", vopts.n_max)->required();
  v_cmd->add_option("--jobs", vopts.jobs)->check(CLI::PositiveNumber);
  v_cmd->add_option("--out", v_out, "Write the JSON lines report to a file");

  // asymptotic
  auto* a_cmd = app.add_subcommand("asymptotic", "M_k(n) / n^3 against the cubic constant");
  std::int64_t a_k = 0;
  std::vector<std::int64_t> a_ns;
  unsigned a_jobs = 1;
  a_cmd->add_option("--k", a_k)->required();
  a_cmd->add_option("--n-list", a_ns)->required()->delimiter(',');
  a_cmd->add_option("--jobs", a_jobs)->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    auto oracle_cap = [&] { return cap_given ? cap : oracle_cap_from_env(); };

    if (*s_cmd) {
      Count closed = s_count_closed(s_a, s_b);
      out << closed << '\n';
      if (s_check) {
        Count sum = s_count_sum_form(s_a, s_b);
        bool agree = sum == closed;
        out << "sum_form=" << sum;
        if (s_b <= kBruteForceLimit) {
          Count brute = brute_force_s(s_a, s_b);
          agree = agree && brute == closed;
          out << " brute_force=" << brute;
        }
        out << (agree ? " agree" : " DISAGREE") << '\n';
        return agree ? kSuccess : kVerificationFailed;
      }
      return kSuccess;
    }

    if (*c_cmd) {
      const std::int64_t len = static_cast<std::int64_t>(c_bits.size());
      Coloring c = make_coloring(Interval{c_lo, c_lo + len - 1}, c_bits);
      json j = count_solutions(c);
      if (c_list > 0) j["solutions"] = list_solutions(c, c_list);
      out << j.dump() << '\n';
      return kSuccess;
    }

    if (*m_cmd) {
      if (m_method == "oracle") {
        if (m_n < 1) throw InputError("n must be >= 1");
        OracleOptions oo;
        oo.cap = oracle_cap();
        oo.jobs = m_jobs;
        out << oracle_certificate(m_k, m_n, oo).dump() << '\n';
        return kSuccess;
      }
      if (m_method == "reduction" && m_k == -1) {
        throw InputError("k = -1 has no exact reduction; use --method auto or oracle");
      }
      SolveOptions so;
      so.recount = !m_no_recount;
      so.jobs = m_jobs;
      auto cert = multiplicity(m_k, m_n, so);
      json j = cert;
      j["method"] = cert.regime == Regime::Unproven ? "search" : "reduction";
      out << j.dump() << '\n';
      if (cert.recount && *cert.recount != cert.value) {
        err << "witness recount " << *cert.recount << " differs from value " << cert.value << '\n';
        return kVerificationFailed;
      }
      return kSuccess;
    }

    if (*t_cmd) {
      if (t_nmax < 1) throw InputError("--n-max must be >= 1");
      Sink sink(t_out, out);
      SolveOptions so;
      so.recount = false;
      if (t_format == "csv") {
        *sink << "n,value,regime,minimizer\n";
        for (std::int64_t n = 1; n <= t_nmax; ++n) {
          auto cert = multiplicity(t_k, n, so);
          *sink << n << ',' << cert.value << ',' << regime_name(cert.regime) << ','
                << minimizer_field(cert.minimizer) << '\n';
        }
      } else {
        json rows = json::array();
        for (std::int64_t n = 1; n <= t_nmax; ++n) {
          auto cert = multiplicity(t_k, n, so);
          rows.push_back({{"n", n},
                          {"value", cert.value},
                          {"regime", std::string(regime_name(cert.regime))},
                          {"minimizer", cert.minimizer}});
        }
        *sink << rows.dump() << '\n';
      }
      return kSuccess;
    }

    if (*v_cmd) {
      vopts.cap = oracle_cap();
      Sink sink(v_out, out);
      return run_verify(vopts, *sink, err);
    }

    if (*a_cmd) {
      auto rows = ratio_table(a_k, a_ns, a_jobs);
      out << "k,n,value,ratio,deviation\n";
      for (const auto& r : rows) {
        out << r.k << ',' << r.n << ',' << r.value << ',' << fmt_double(r.ratio) << ','
            << fmt_double(r.deviation) << '\n';
      }
      out << "# C=" << fmt_double(constant_c()) << '\n';
      return kSuccess;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntime;
  }
  return kUsage;
}

}  // namespace schur::cli
