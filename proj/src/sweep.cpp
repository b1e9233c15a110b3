#include "cpaths/sweep.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cpaths {

namespace {

std::vector<std::vector<RectTableau>> element_lists(const RectangleSequence& R,
                                                    int nletters) {
  std::vector<std::vector<RectTableau>> lists;
  for (auto& rc : R) lists.push_back(crystal_elements(rc.r, rc.s, nletters));
  return lists;
}

// Enumerate the odometer over lists[from..] with the prefix already placed
// in p.factors; visit each completed path.
template <class V>
void odometer(const std::vector<std::vector<RectTableau>>& lists, size_t from,
              TensorPath& p, V& visit) {
  if (from == lists.size()) {
    visit(p);
    return;
  }
  for (auto& b : lists[from]) {
    p.factors.push_back(b);
    odometer(lists, from + 1, p, visit);
    p.factors.pop_back();
  }
}

int resolve_jobs(int jobs) {
#ifdef _OPENMP
  return jobs > 0 ? jobs : omp_get_max_threads();
#else
  (void)jobs;
  return 1;
#endif
}

}  // namespace

QPoly paths_gf_serial(const RectangleSequence& R, int nletters,
                      const PathFilter& filter, const PathStat& stat) {
  auto lists = element_lists(R, nletters);
  QPoly acc;
  TensorPath p;
  p.nletters = nletters;
  auto visit = [&](const TensorPath& q) {
    if (filter && !filter(q)) return;
    acc.add_term((int)stat(q), 1);
  };
  odometer(lists, 0, p, visit);
  return acc;
}

QPoly paths_gf_parallel(const RectangleSequence& R, int nletters,
                        const PathFilter& filter, const PathStat& stat,
                        int jobs) {
  auto lists = element_lists(R, nletters);
  if (lists.empty()) return paths_gf_serial(R, nletters, filter, stat);
  int n0 = (int)lists[0].size();
  QPoly acc;
#pragma omp parallel num_threads(resolve_jobs(jobs))
  {
    QPoly local;
#pragma omp for schedule(dynamic)
    for (int i = 0; i < n0; ++i) {
      TensorPath p;
      p.nletters = nletters;
      p.factors.push_back(lists[0][i]);
      auto visit = [&](const TensorPath& q) {
        if (filter && !filter(q)) return;
        local.add_term((int)stat(q), 1);
      };
      odometer(lists, 1, p, visit);
    }
#pragma omp critical
    acc += local;
  }
  return acc;
}

QPoly paths_gf(const RectangleSequence& R, int nletters,
               const PathFilter& filter, const PathStat& stat, int jobs) {
#ifdef _OPENMP
  return paths_gf_parallel(R, nletters, filter, stat, jobs);
#else
  return paths_gf_serial(R, nletters, filter, stat);
#endif
}

QTPoly paths_gf2_serial(const RectangleSequence& R, int nletters,
                        const PathFilter& filter, const PathStat2& stat) {
  auto lists = element_lists(R, nletters);
  QTPoly acc;
  TensorPath p;
  p.nletters = nletters;
  auto visit = [&](const TensorPath& q) {
    if (filter && !filter(q)) return;
    auto [a, b] = stat(q);
    acc.add_term((int)a, (int)b, 1);
  };
  odometer(lists, 0, p, visit);
  return acc;
}

QTPoly paths_gf2_parallel(const RectangleSequence& R, int nletters,
                          const PathFilter& filter, const PathStat2& stat,
                          int jobs) {
  auto lists = element_lists(R, nletters);
  if (lists.empty()) return paths_gf2_serial(R, nletters, filter, stat);
  int n0 = (int)lists[0].size();
  QTPoly acc;
#pragma omp parallel num_threads(resolve_jobs(jobs))
  {
    QTPoly local;
#pragma omp for schedule(dynamic)
    for (int i = 0; i < n0; ++i) {
      TensorPath p;
      p.nletters = nletters;
      p.factors.push_back(lists[0][i]);
      auto visit = [&](const TensorPath& q) {
        if (filter && !filter(q)) return;
        auto [a, b] = stat(q);
        local.add_term((int)a, (int)b, 1);
      };
      odometer(lists, 1, p, visit);
    }
#pragma omp critical
    acc += local;
  }
  return acc;
}

QTPoly paths_gf2(const RectangleSequence& R, int nletters,
                 const PathFilter& filter, const PathStat2& stat, int jobs) {
#ifdef _OPENMP
  return paths_gf2_parallel(R, nletters, filter, stat, jobs);
#else
  return paths_gf2_serial(R, nletters, filter, stat);
#endif
}

void for_each_path(const RectangleSequence& R, int nletters,
                   const std::function<void(const TensorPath&)>& visit) {
  auto lists = element_lists(R, nletters);
  TensorPath p;
  p.nletters = nletters;
  odometer(lists, 0, p, visit);
}

long long path_count(const RectangleSequence& R, int nletters) {
  long long n = 1;
  for (auto& rc : R) {
    long long k = (long long)crystal_elements(rc.r, rc.s, nletters).size();
    if (k != 0 && n > (long long)4e18 / k)
      throw std::overflow_error("path_count overflow");
    n *= k;
  }
  return n;
}

}  // namespace cpaths
