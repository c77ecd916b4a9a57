#include <benchmark/benchmark.h>

#include <random>

#include <cascade/data.hpp>
#include <cascade/escalation.hpp>
#include <cascade/pipeline.hpp>

using namespace cascade;

namespace {

const TrainedSystem& intent_system() {
  static const TrainedSystem sys = [] {
    const std::string dir = std::string(CASCADE_DATA_DIR) + "/fixtures/";
    PipelineOptions options;
    options.calibrate_temperature = true;
    return train_system(load_corpus({CorpusFormat::jsonl, dir + "intent.jsonl"}), read_file(dir + "intent_rules.json"),
                        options);
  }();
  return sys;
}

void BM_BaselineClassify(benchmark::State& state) {
  const auto& sys = intent_system();
  const auto& docs = sys.split.test;
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sys.model.classify(docs[i++ % docs.size()].text));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_BaselineClassify);

void BM_Aggregate(benchmark::State& state) {
  const LabelSpace labels({"a", "b", "c", "d", "e"});
  std::mt19937 gen(1);
  std::vector<std::vector<AgentVerdict>> sets;
  for (int s = 0; s < 256; ++s) {
    std::vector<AgentVerdict> v;
    for (auto id : kAllAgents) {
      v.push_back(AgentVerdict::suggest(id, Classification(labels.by_id(gen() % 5), (gen() % 100) / 100.0), "bench"));
    }
    sets.push_back(std::move(v));
  }
  const AgentWeights weights({{AgentId::lexical, 0.8}, {AgentId::contextual, 0.5}, {AgentId::logic, 0.9}});
  const Classification primary(labels.by_id(0), 0.4);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(aggregate(sets[i++ % sets.size()], weights, primary, labels));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Aggregate);

void BM_CascadeCorpus(benchmark::State& state) {
  const auto& sys = intent_system();
  const RouterConfig config{state.range(0) / 100.0, true};
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_cascade(sys.split.test, sys.model, sys.suite, config));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(sys.split.test.size()));
}
BENCHMARK(BM_CascadeCorpus)->Arg(0)->Arg(70)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
