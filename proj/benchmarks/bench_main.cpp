#include <benchmark/benchmark.h>

#include <string>

#include "matcha/java_parser.hpp"

namespace {

std::string synthetic_source(int methods) {
  std::string src = "package bench.app;\nimport android.location.LocationManager;\n"
                    "public class Synth {\n";
  for (int i = 0; i < methods; ++i) {
    src += "  void handler" + std::to_string(i) + "(LocationManager lm, String p) {\n";
    src += "    Location loc" + std::to_string(i) + " = lm.getLastKnownLocation(p);\n";
    src += "    String searchHistoryAdapter = p + loc" + std::to_string(i) + ";\n";
    src += "    if (searchHistoryAdapter.length() > 0) { log(searchHistoryAdapter); }\n";
    src += "  }\n";
  }
  src += "}\n";
  return src;
}

void BM_ParseUnit(benchmark::State& state) {
  std::string src = synthetic_source(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto unit = matcha::java::parse_unit(src, "Synth.java");
    benchmark::DoNotOptimize(unit.calls.size());
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(src.size()));
}
BENCHMARK(BM_ParseUnit)->Arg(10)->Arg(100)->Arg(1000);

void BM_NormalizeIdentifier(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        matcha::java::normalize_identifier("searchHistoryAdapterUserIdHTTPServer42"));
  }
}
BENCHMARK(BM_NormalizeIdentifier);

}  // namespace

BENCHMARK_MAIN();
