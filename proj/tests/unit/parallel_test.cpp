#include <gtest/gtest.h>

#include <cstdlib>
#include <stdexcept>

#include "localelab/parallel.hpp"

using namespace localelab;

TEST(Parallel, ResultsKeepInputOrder) {
  for (unsigned threads : {1U, 2U, 5U}) {
    const auto out = parallel_map<int>(100, [](std::size_t i) { return static_cast<int>(i * i); }, threads);
    ASSERT_EQ(out.size(), 100U);
    for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i], static_cast<int>(i * i));
  }
}

TEST(Parallel, ExceptionsPropagate) {
  auto boom = [](std::size_t i) -> int {
    if (i == 7) throw std::runtime_error("seven");
    return 0;
  };
  EXPECT_THROW(parallel_map<int>(20, boom, 3), std::runtime_error);
}

TEST(Parallel, ThreadCountFromEnvironment) {
  setenv("LOCALELAB_THREADS", "3", 1);
  EXPECT_EQ(thread_count(), 3U);
  setenv("LOCALELAB_THREADS", "junk", 1);
  EXPECT_GE(thread_count(), 1U);
  unsetenv("LOCALELAB_THREADS");
  EXPECT_GE(thread_count(), 1U);
}
