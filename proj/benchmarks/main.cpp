#include <benchmark/benchmark.h>

#include <random>
#include <sstream>
#include <string>

#include "mdteds/criteria.hpp"
#include "mdteds/matching.hpp"
#include "mdteds/parser.hpp"
#include "mdteds/teds.hpp"

namespace {

// Financial-page stand-in: rows x cols with labels, amounts, a few section
// rows and fills.
std::string synthetic_page(std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> value(100, 999999);
  std::ostringstream out;
  out << "| Item |";
  for (std::size_t c = 1; c < cols; ++c) out << " 20" << 10 + c << " (RM'000) |";
  out << "\n|";
  for (std::size_t c = 0; c < cols; ++c) out << (c == 0 ? ":---|" : "---:|");
  out << '\n';
  for (std::size_t r = 0; r < rows; ++r) {
    if (r % 11 == 10) {
      out << "| SECTION " << r << ' ';
      for (std::size_t c = 0; c < cols; ++c) out << '|';
      out << '\n';
      continue;
    }
    out << "| Line item " << r << " |";
    for (std::size_t c = 1; c < cols; ++c) {
      if ((r + c) % 17 == 0) {
        out << " - |";
      } else {
        out << ' ' << value(rng) << " |";
      }
    }
    out << '\n';
  }
  return out.str();
}

void BM_extract_tables(benchmark::State& state) {
  const std::string doc = synthetic_page(static_cast<std::size_t>(state.range(0)), 6, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mdteds::extract_tables(doc));
  }
}
BENCHMARK(BM_extract_tables)->Arg(30)->Arg(200);

void BM_teds_pair_identity(benchmark::State& state) {
  const auto parsed =
      mdteds::extract_tables(synthetic_page(static_cast<std::size_t>(state.range(0)), 6, 2));
  const mdteds::Table& table = parsed.document.tables.front();
  for (auto _ : state) {
    benchmark::DoNotOptimize(mdteds::teds_pair(table, table));
  }
}
BENCHMARK(BM_teds_pair_identity)->Arg(10)->Arg(30)->Arg(100);

void BM_teds_pair_perturbed(benchmark::State& state) {
  const auto gold =
      mdteds::extract_tables(synthetic_page(static_cast<std::size_t>(state.range(0)), 6, 3));
  const auto pred =
      mdteds::extract_tables(synthetic_page(static_cast<std::size_t>(state.range(0)), 6, 4));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        mdteds::teds_pair(pred.document.tables.front(), gold.document.tables.front()));
  }
}
BENCHMARK(BM_teds_pair_perturbed)->Arg(10)->Arg(30)->Arg(100);

void BM_evaluate_record(benchmark::State& state) {
  const std::string gold = synthetic_page(30, 6, 5);
  const std::string pred = synthetic_page(30, 6, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        mdteds::evaluate_record(pred, gold, mdteds::MergePolicy{}));
  }
}
BENCHMARK(BM_evaluate_record);

void BM_optimal_assignment(benchmark::State& state) {
  std::mt19937 rng(6);
  const int n = static_cast<int>(state.range(0));
  std::vector<std::vector<double>> sim(static_cast<std::size_t>(n),
                                       std::vector<double>(static_cast<std::size_t>(n)));
  std::uniform_real_distribution<double> value(0.0, 1.0);
  for (auto& row : sim) {
    for (double& cell : row) cell = value(rng);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(mdteds::optimal_assignment(sim));
  }
}
BENCHMARK(BM_optimal_assignment)->Arg(4)->Arg(10)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
