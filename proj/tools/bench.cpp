#include <chrono>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cpaths/statistics.hpp"
#include "cpaths/sweep.hpp"

using namespace cpaths;
using Clock = std::chrono::steady_clock;

namespace {

double run_once(const RectangleSequence& R, int nletters, bool parallel,
                int jobs, QPoly& result) {
  auto filter = PathFilter();  // accept everything
  auto stat = [](const TensorPath& p) { return ebar_stat(p); };
  auto t0 = Clock::now();
  result = parallel ? paths_gf_parallel(R, nletters, filter, stat, jobs)
                    : paths_gf_serial(R, nletters, filter, stat);
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Benchmark: serial vs OpenMP path sweeps"};
  std::string rects = "3x2,2x2,2x2";
  int nletters = 5, jobs = 0, reps = 3;
  app.add_option("--rects", rects, "Rectangle sequence RxS,...");
  app.add_option("--nletters", nletters, "Alphabet size");
  app.add_option("--jobs", jobs, "Thread count (0 = all)");
  app.add_option("--reps", reps, "Repetitions, best time kept");
  CLI11_PARSE(app, argc, argv);

  RectangleSequence R = parse_rects(rects);
  std::cout << "sweep of " << path_count(R, nletters) << " paths in "
            << rects << " over {1.." << nletters << "}, statistic Ebar\n";

  QPoly serial, parallel;
  double ts = 1e30, tp = 1e30;
  for (int i = 0; i < reps; ++i) {
    ts = std::min(ts, run_once(R, nletters, false, jobs, serial));
    tp = std::min(tp, run_once(R, nletters, true, jobs, parallel));
  }
  std::cout << "serial:   " << ts << " s\n";
  std::cout << "parallel: " << tp << " s  (speedup " << ts / tp << "x)\n";
  if (serial != parallel) {
    std::cout << "MISMATCH between serial and parallel results\n";
    return 1;
  }
  std::cout << "results identical: " << serial.to_text() << "\n";
  return 0;
}
