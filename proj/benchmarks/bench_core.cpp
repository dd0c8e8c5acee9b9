#include <benchmark/benchmark.h>

#include "alcove/alcove.hpp"

namespace {

using namespace alcove;

const RootDatum& datum_for(const char* name) {
  static std::map<std::string, RootDatum> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, build_root_datum(RootSystemType::parse(name))).first;
  return it->second;
}

void BM_BuildRootDatum_E8(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_root_datum(RootSystemType(Family::E, 8)));
}
BENCHMARK(BM_BuildRootDatum_E8);

void BM_ScaledAlcoveVertices(benchmark::State& state, const char* type) {
  const RootDatum& datum = datum_for(type);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_scaled_alcove_vertices(datum, state.range(0)));
}
BENCHMARK_CAPTURE(BM_ScaledAlcoveVertices, G2, "G2")->Arg(4)->Arg(16);
BENCHMARK_CAPTURE(BM_ScaledAlcoveVertices, F4, "F4")->Arg(2)->Arg(4);
BENCHMARK_CAPTURE(BM_ScaledAlcoveVertices, E8, "E8")->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_BallSum(benchmark::State& state, const char* type) {
  const RootDatum& datum = datum_for(type);
  for (auto _ : state) benchmark::DoNotOptimize(ball_sum(datum, state.range(0)));
}
BENCHMARK_CAPTURE(BM_BallSum, E7, "E7")->Arg(2)->Unit(benchmark::kMillisecond);

void BM_FoldToAlcove(benchmark::State& state) {
  const RootDatum& datum = datum_for("E8");
  std::vector<std::string> coords(8, "-7/3");
  coords[3] = "11/2";
  const ApartmentPoint x = ApartmentPoint::parse(coords);
  for (auto _ : state) benchmark::DoNotOptimize(fold_to_alcove(datum, x));
}
BENCHMARK(BM_FoldToAlcove);

void BM_ApartmentBall(benchmark::State& state, const char* type) {
  const RootDatum& datum = datum_for(type);
  const ApartmentPoint o = ApartmentPoint::origin(datum.rank());
  for (auto _ : state) benchmark::DoNotOptimize(apartment_ball(datum, o, state.range(0)));
}
BENCHMARK_CAPTURE(BM_ApartmentBall, B3, "B3")->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ApartmentBall, D4, "D4")->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SimplicialTable(benchmark::State& state, const char* type) {
  const RootDatum& datum = datum_for(type);
  for (auto _ : state) {
    SimplicialDistanceTable table(datum, state.range(0));
    benchmark::DoNotOptimize(table.explored_vertices());
  }
}
BENCHMARK_CAPTURE(BM_SimplicialTable, G2, "G2")->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SimplicialTable, B3, "B3")->Arg(10)->Unit(benchmark::kMillisecond);

void BM_WallDistance(benchmark::State& state) {
  const RootDatum& datum = datum_for("D4");
  const ApartmentPoint x = ApartmentPoint::parse(std::string("3,-2,1,0"));
  const ApartmentPoint y = ApartmentPoint::parse(std::string("-1,2,0,-3"));
  for (auto _ : state) benchmark::DoNotOptimize(wall_distance(datum, x, y));
}
BENCHMARK(BM_WallDistance);

}  // namespace

BENCHMARK_MAIN();
