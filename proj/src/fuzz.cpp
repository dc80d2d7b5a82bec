#include "labelana/fuzz.hpp"

#include "labelana/oracle.hpp"

namespace labelana {

FuzzCase make_fuzz_case(int size, std::uint64_t seed, std::uint64_t index) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + index * 0xBF58476D1CE4E5B9ull + 1);
  RandomGraphParams params;
  params.max_vertices = size;
  params.max_edges = std::min(12, 2 * size);
  params.injective = true;
  Graph injective = random_graph(params, rng);
  Graph labeled = relabel_random(injective, 3, rng);
  return FuzzCase{std::move(injective), std::move(labeled)};
}

FuzzSummary run_fuzz(int n, int size, std::uint64_t seed, const Config& config,
                     const std::function<void(int)>& progress) {
  FuzzSummary summary;
  for (int i = 0; i < n; ++i) {
    if (progress) progress(i);
    FuzzCase fc = make_fuzz_case(size, seed, static_cast<std::uint64_t>(i));
    ++summary.cases;
    auto record = [&](const std::string& why, const Graph& g) {
      ++summary.failures;
      if (summary.first_failure_reason.empty()) {
        summary.first_failure_reason = why;
        summary.first_failure_lgr = g.to_lgr();
      }
    };
    try {
      Analysis inj = run_analysis(fc.injective, config);
      OracleReport oracle = run_oracle(fc.injective);

      bool agree = true;
      if (inj.disagreeable.disagreeable != oracle.L) {
        record("disagreeable disagrees with condition (L)", fc.injective);
        agree = false;
      }
      if (inj.sdis.value != oracle.K) {
        record("strongly disagreeable disagrees with condition (K)", fc.injective);
        agree = false;
      }
      bool ih_cert = inj.verdict(Question::IH).status == Status::Certified;
      if (ih_cert != (oracle.L && oracle.connects)) {
        record("IH certification disagrees with (L) and connects-to-loop", fc.injective);
        agree = false;
      }
      if (!inj.space.wlr().holds) {
        record("injective labeling unexpectedly fails weak left-resolving", fc.injective);
        agree = false;
      }
      if (agree) ++summary.oracle_agreements;
      verify_soundness(inj);
    } catch (const Error& e) {
      record(std::string(e.kind_name()) + ": " + e.what(), fc.injective);
    }
    try {
      Analysis lab = run_analysis(fc.labeled, config);
      verify_soundness(lab);
    } catch (const Error& e) {
      record(std::string(e.kind_name()) + ": " + e.what(), fc.labeled);
    }
    if (summary.failures) break;
  }
  return summary;
}

}  // namespace labelana
