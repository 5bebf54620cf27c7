#include <gtest/gtest.h>

#include <atomic>
#include <stdexcept>
#include <vector>

#include "se2frame/parallel.hpp"

namespace se2frame {
namespace {

TEST(ResolveThreads, ZeroMeansHardware) {
  EXPECT_GE(resolve_threads(0), 1);
  EXPECT_EQ(resolve_threads(3), 3);
}

TEST(ParallelFor, VisitsEveryIndexOnce) {
  for (int threads : {1, 2, 7}) {
    std::vector<int> hits(1000, 0);
    std::atomic<std::size_t> progress{0};
    parallel_for(hits.size(), threads, [&](std::size_t i) { ++hits[i]; }, &progress);
    for (int h : hits) EXPECT_EQ(h, 1);
    EXPECT_EQ(progress.load(), hits.size());
  }
}

TEST(ParallelFor, EmptyRangeIsANoOp) {
  bool called = false;
  parallel_for(0, 4, [&](std::size_t) { called = true; });
  EXPECT_FALSE(called);
}

TEST(ParallelFor, RethrowsWorkerException) {
  EXPECT_THROW(parallel_for(100, 4,
                            [](std::size_t i) {
                              if (i == 37) throw std::runtime_error("boom");
                            }),
               std::runtime_error);
}

}  // namespace
}  // namespace se2frame
