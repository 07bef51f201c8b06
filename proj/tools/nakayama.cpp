// Command-line front end: single-algebra reports, classification queries,
// spectra, census streams and verification suites.
//
// Exit codes: 0 success or pass, 1 verification counterexample,
// 2 usage or validation error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nakayama/nakayama.hpp"

namespace nk = nakayama;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

std::optional<nk::QuiverKind> quiver_option(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (auto k = nk::parse_quiver_kind(text)) return k;
  nk::fail(nk::ErrorKind::InvalidSpec, "unknown quiver '" + text + "' (expected line or cycle)");
}

std::vector<int> parse_prefix(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      nk::fail(nk::ErrorKind::InvalidSpec, "malformed resume token '" + text + "'");
    }
  }
  if (out.empty()) nk::fail(nk::ErrorKind::InvalidSpec, "empty resume token");
  return out;
}

std::string prefix_token(const std::vector<int>& p) {
  std::string out;
  for (int x : p) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) nk::fail(nk::ErrorKind::InvalidSpec, "cannot open '" + path + "' for writing");
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void print_report(const nk::InvariantReport& r, bool json) {
  if (json)
    std::cout << nk::to_jsonl(r) << '\n';
  else
    std::cout << nk::to_text(r);
}

int default_cap(int n, nk::QuiverKind kind) {
  return kind == nk::QuiverKind::Cycle ? nk::default_cycle_cap(n) : std::max(2, n);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homological invariants and classification of Nakayama algebras"};
  app.require_subcommand(1, 1);

  // info
  std::string kupisch, quiver;
  bool json = false;
  auto* info = app.add_subcommand("info", "Full invariant report of one algebra");
  info->add_option("--kupisch", kupisch, "Kupisch series, e.g. 2,4,3,3,3 or line:2,2,1")->required();
  info->add_option("--quiver", quiver, "line or cycle (default: inferred from a trailing 1)");
  info->add_flag("--json", json, "JSONL output");

  // classify
  auto* classify = app.add_subcommand("classify", "Defect-one classification queries");
  classify->require_subcommand(1, 1);
  int z_n = 0, z_m = 0;
  auto* classify_z = classify->add_subcommand("z", "The higher Auslander algebra Z_{n,m}");
  classify_z->add_option("--n", z_n, "Number of simples")->required();
  classify_z->add_option("--m", z_m, "Index 1 <= m <= n-1 (gldim n+m-1)")->required();
  classify_z->add_flag("--json", json, "JSONL output");
  auto* classify_d1 = classify->add_subcommand("d1", "Normal form N_{n,a,s} of a defect-one algebra");
  classify_d1->add_option("--kupisch", kupisch, "Kupisch series")->required();
  classify_d1->add_flag("--json", json, "JSONL output");

  // morita
  int mo_n = 0, mo_w = 0;
  auto* morita = app.add_subcommand("morita", "End_B(B + P/soc P) for B selfinjective with series [w,...,w]");
  morita->add_option("--n", mo_n, "Simples of B")->required();
  morita->add_option("--w", mo_w, "Loewy length of B")->required();
  morita->add_flag("--json", json, "JSONL output");

  // spectrum
  int sp_n = 0, cap = 0;
  unsigned jobs = 1;
  std::string out_path;
  auto* spectrum = app.add_subcommand("spectrum", "Global dimensions of higher Auslander algebras (CSV)");
  spectrum->add_option("--n", sp_n, "Number of simples")->required();
  spectrum->add_option("--quiver", quiver, "line or cycle")->required();
  spectrum->add_option("--cap", cap, "Largest Kupisch entry (default 2n)");
  spectrum->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
  spectrum->add_option("--out", out_path, "CSV file (default stdout)");

  // enumerate
  int en_n = 0;
  std::string filter_text = "all", resume;
  auto* enumerate = app.add_subcommand("enumerate", "Stream invariant reports of a family (JSONL)");
  enumerate->add_option("--n", en_n, "Number of simples")->required();
  enumerate->add_option("--quiver", quiver, "line or cycle")->required();
  enumerate->add_option("--cap", cap, "Largest Kupisch entry (default 2n)");
  enumerate->add_option("--filter", filter_text, "all | non-selfinjective | finite-gldim | defect-1");
  enumerate->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
  enumerate->add_option("--resume", resume, "Resume after this checkpoint prefix, e.g. 2,3");
  enumerate->add_option("--out", out_path, "JSONL file (default stdout)");

  // verify
  std::string suite;
  nk::SuiteParams params;
  auto* verify = app.add_subcommand("verify", "Run a verification suite (JSON report)");
  verify->add_option("--suite", suite, "Suite name")->required();
  verify->add_option("--n-min", params.n_min, "Smallest n (suite default when omitted)");
  verify->add_option("--n-max", params.n_max, "Largest n (suite default when omitted)");
  verify->add_option("--cap", params.cap, "Entry cap (w range for morita)");
  verify->add_option("--jobs", params.jobs, "Worker threads (0 = all cores)");
  verify->add_option("--max-counterexamples", params.max_counterexamples, "Counterexamples kept in the report");
  verify->add_option("--samples", params.samples, "Random samples per n above the cap (inequality)");
  verify->add_option("--seed", params.seed, "Sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*info) {
      const nk::Algebra a = nk::parse_algebra(kupisch, quiver_option(quiver));
      print_report(nk::compute_report(a), json);
      return kExitPass;
    }

    if (*classify_z) {
      const nk::DOneParams p = nk::z_params(z_n, z_m);
      nk::InvariantReport r = nk::compute_report(nk::make_d1(p));
      r.z = nk::ZLabel{z_n, z_m};
      if (!json)
        std::cout << "witness            " << nk::format_entries(nk::make_d1(p).dims()) << "  N_{" << p.n << ','
                  << p.a << ',' << p.s << "}\n";
      print_report(r, json);
      return kExitPass;
    }

    if (*classify_d1) {
      const nk::Algebra a = nk::parse_algebra(kupisch, nk::QuiverKind::Cycle);
      const auto p = nk::d1_params(a);
      if (!p) nk::fail(nk::ErrorKind::NotInDomain, "not a defect-one algebra: " + nk::format_entries(a.dims()));
      if (!json)
        std::cout << "witness            " << nk::format_entries(nk::make_d1(*p).dims()) << "  N_{" << p->n << ','
                  << p->a << ',' << p->s << "}\n";
      print_report(nk::compute_report(a), json);
      return kExitPass;
    }

    if (*morita) {
      const nk::Algebra a = nk::morita_nakayama(mo_n, mo_w);
      nk::InvariantReport r = nk::compute_report(a);
      r.morita = nk::MoritaLabel{mo_n, mo_w};
      if (!json) {
        std::cout << "series             " << nk::format_entries(a.dims()) << '\n';
        std::cout << "domdim formula     " << nk::morita_domdim_single(mo_n, mo_w) << '\n';
        if (mo_w > 2 && mo_n >= 3) {
          const auto [gor, gdim] = nk::morita_gorenstein(mo_n, mo_w);
          std::cout << "gorenstein claim   " << (gor ? "yes" : "no") << ", Gdim " << gdim << '\n';
        }
      }
      print_report(r, json);
      return kExitPass;
    }

    if (*spectrum) {
      const nk::QuiverKind kind = *quiver_option(quiver);
      const int c = cap > 0 ? cap : default_cap(sp_n, kind);
      const nk::SpectrumResult s = nk::spectrum(sp_n, kind, c, jobs);
      Output out(out_path);
      out.stream() << nk::spectrum_csv(s);
      std::string values;
      for (int g : s.values()) values += (values.empty() ? "" : ",") + std::to_string(g);
      std::cerr << "zeta(" << nk::to_string(kind) << ", n=" << sp_n << ") = {" << values << "}, scanned "
                << s.scanned << " algebras, cap " << c << '\n';
      return kExitPass;
    }

    if (*enumerate) {
      const nk::QuiverKind kind = *quiver_option(quiver);
      const auto filter = nk::parse_filter(filter_text);
      if (!filter) nk::fail(nk::ErrorKind::InvalidSpec, "unknown filter '" + filter_text + "'");
      nk::EnumSpec spec{en_n, kind, cap > 0 ? cap : default_cap(en_n, kind), *filter, jobs, std::nullopt};
      if (!resume.empty()) spec.resume_after = parse_prefix(resume);
      Output out(out_path);
      std::ostream& os = out.stream();
      std::uint64_t scanned = 0, emitted = 0;
      // Reports are computed in the workers; each shard is flushed before its checkpoint is announced.
      nk::census_stream(
          spec, [](const nk::Algebra& a) -> std::optional<std::string> { return nk::to_jsonl(nk::compute_report(a)); },
          [&](const std::vector<int>& prefix, std::uint64_t shard_scanned, auto&& hits) {
            for (const auto& hit : hits) os << hit.second << '\n';
            os.flush();
            scanned += shard_scanned;
            emitted += hits.size();
            std::cerr << "checkpoint " << prefix_token(prefix) << '\n';
          });
      std::cerr << "scanned " << scanned << " algebras, emitted " << emitted << '\n';
      return kExitPass;
    }

    if (*verify) {
      const nk::VerificationReport r = nk::verify(suite, params);
      std::cout << nk::to_json(r).dump(2) << '\n';
      return r.passed ? kExitPass : kExitCounterexample;
    }
  } catch (const nk::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
