// Times the serial reference against the OpenMP path for each batch kernel
// and checks that both produce the same output.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>

#include "braidforge/garside.hpp"
#include "braidforge/kernels.hpp"
#include "braidforge/word_core.hpp"

using namespace braidforge;

namespace {

template <typename Fn>
auto timed(Fn&& fn, double& ms) {
  const auto start = std::chrono::steady_clock::now();
  auto result = fn();
  ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

template <typename Fn>
bool compare(const std::string& name, Fn&& kernel) {
  double serial_ms = 0, parallel_ms = 0;
  const auto serial = timed([&] { return kernel(Execution::serial); }, serial_ms);
  const auto parallel = timed([&] { return kernel(Execution::parallel); }, parallel_ms);
  const bool same = serial == parallel;
  std::cout << name << "  serial " << serial_ms << " ms  parallel " << parallel_ms << " ms  speedup "
            << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << "  " << (same ? "match" : "MISMATCH")
            << "\n";
  return same;
}

}  // namespace

int main(int argc, char** argv) {
  const int k3 = argc > 1 ? std::atoi(argv[1]) : 14;
  const int k4 = argc > 2 ? std::atoi(argv[2]) : 8;
  std::cout << "threads: " << worker_threads() << "\n";
  bool ok = true;

  ok &= compare("distinct_braids n=3 k=" + std::to_string(k3),
                [&](Execution e) { return distinct_braids_of_length(3, k3, e); });
  ok &= compare("distinct_braids n=4 k=" + std::to_string(k4),
                [&](Execution e) { return distinct_braids_of_length(4, k4, e); });

  const auto delta5 = closure_of(delta_word(5).letters());
  ok &= compare("distinct_factors Delta_5 class", [&](Execution e) { return distinct_factors(delta5, e); });
  const auto factors = distinct_factors(delta5, Execution::serial);
  ok &= compare("canonicalize_batch Delta_5 factors",
                [&](Execution e) { return canonicalize_batch(factors, e); });

  return ok ? 0 : 1;
}
