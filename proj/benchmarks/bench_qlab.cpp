// Copyright 2026 The qlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "qlab/analysis.hpp"
#include "qlab/canonical.hpp"
#include "qlab/classify.hpp"
#include "qlab/corpus.hpp"
#include "qlab/generators.hpp"
#include "qlab/purity.hpp"
#include "qlab/reticulation.hpp"
#include "qlab/verify.hpp"

namespace {

using namespace qlab;

// Z_n for the argument n.
void BM_GenZn(benchmark::State& st) {
  const auto n = static_cast<unsigned>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(gen_zn(n));
}
BENCHMARK(BM_GenZn)->Arg(12)->Arg(60)->Arg(210)->Arg(480);

void BM_Reticulation(benchmark::State& st) {
  const Quantale A = gen_zn(static_cast<unsigned>(st.range(0)));
  for (auto _ : st) {
    const Reticulation R(A);
    benchmark::DoNotOptimize(R.size());
  }
}
BENCHMARK(BM_Reticulation)->Arg(12)->Arg(60)->Arg(210)->Arg(480);

void BM_PurityTables(benchmark::State& st) {
  const Quantale A = gen_zn(static_cast<unsigned>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(purity_tables(A));
}
BENCHMARK(BM_PurityTables)->Arg(60)->Arg(210)->Arg(480);

void BM_Classify(benchmark::State& st) {
  const Quantale A = gen_zn(static_cast<unsigned>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(classify(A));
}
BENCHMARK(BM_Classify)->Arg(60)->Arg(210);

void BM_CanonicalId(benchmark::State& st) {
  const Quantale A = gen_downset_frame(posets_up_to_iso(4)[static_cast<std::size_t>(st.range(0))]);
  for (auto _ : st) benchmark::DoNotOptimize(canonical_id(A));
}
BENCHMARK(BM_CanonicalId)->Arg(0)->Arg(8)->Arg(15);

void BM_AnalysisWedge(benchmark::State& st) {
  const Quantale A = fixture("WEDGE5");
  for (auto _ : st) {
    const Analysis X(A);
    benchmark::DoNotOptimize(X.flags());
  }
}
BENCHMARK(BM_AnalysisWedge);

void BM_VerifyAllOnFixture(benchmark::State& st) {
  const Analysis X(fixture("Z12"));
  const auto ids = resolve_suite("all");
  for (auto _ : st) benchmark::DoNotOptimize(verify(X, ids));
}
BENCHMARK(BM_VerifyAllOnFixture);

void BM_DefaultCorpus(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(default_corpus());
}
BENCHMARK(BM_DefaultCorpus)->Unit(benchmark::kMillisecond);

void BM_VerifyCorpus(benchmark::State& st) {
  const auto corpus = default_corpus();
  const auto ids = resolve_suite("all");
  for (auto _ : st) benchmark::DoNotOptimize(verify_corpus(corpus, ids, static_cast<unsigned>(st.range(0))));
}
BENCHMARK(BM_VerifyCorpus)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

// The packaged benchmark_main archive carries LTO bytecode from another
// compiler release, so main is provided here.
BENCHMARK_MAIN();
