#include <benchmark/benchmark.h>

#include <nlohmann/json.hpp>

#include "empathy/agreement.hpp"
#include "empathy/random.hpp"
#include "empathy/service.hpp"

using namespace empathy;

namespace {

agreement::ItemTable table(std::size_t items, std::size_t annotators, std::size_t labels) {
  Rng rng(3);
  agreement::ItemTable t(items);
  for (auto& item : t)
    for (std::size_t a = 0; a < annotators; ++a)
      item["a" + std::to_string(a)] = "l" + std::to_string(uniform_below(rng, labels));
  return t;
}

std::vector<agreement::Continuum> continua(std::size_t n) {
  Rng rng(5);
  std::vector<agreement::Continuum> out;
  for (std::size_t d = 0; d < n; ++d) {
    agreement::Continuum c{200, {}};
    for (const char* a : {"a", "b", "c"}) {
      std::size_t pos = uniform_below(rng, 20);
      while (pos + 10 < c.length) {
        const std::size_t len = 1 + uniform_below(rng, 10);
        c.units[a].push_back({pos, pos + len});
        pos += len + 1 + uniform_below(rng, 30);
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

void BM_MultiPi(benchmark::State& state) {
  const auto t = table(state.range(0), 3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(agreement::multi_pi(t));
}
BENCHMARK(BM_MultiPi)->Arg(1000)->Arg(10000);

void BM_KrippendorffAlpha(benchmark::State& state) {
  const auto t = table(state.range(0), 3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(agreement::krippendorff_alpha(t));
}
BENCHMARK(BM_KrippendorffAlpha)->Arg(1000)->Arg(10000);

void BM_Cpm(benchmark::State& state) {
  const auto t = table(state.range(0), 3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(agreement::confusion_probability_matrix(t));
}
BENCHMARK(BM_Cpm)->Arg(10000);

void BM_UnitizedAlpha(benchmark::State& state) {
  const auto cs = continua(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(agreement::unitized_alpha(cs, {.seed = 1, .rounds = 200}));
}
BENCHMARK(BM_UnitizedAlpha)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_Analyze(benchmark::State& state) {
  std::string text;
  for (int i = 0; i < 20; ++i)
    text += "Die Idee ist gut, weil Kunden sparen. Leider fehlt der Preis. Du könntest Bilder ergänzen. ";
  const auto body = nlohmann::json{{"text", text}, {"language", "de"}}.dump();
  const service::ServiceConfig config;
  for (auto _ : state) benchmark::DoNotOptimize(service::handle_analyze(body, config, nullptr));
}
BENCHMARK(BM_Analyze)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
