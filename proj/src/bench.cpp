#include "polyz/bench.hpp"

#include "polyz/kernels.hpp"
#include "polyz/presets.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>
#include <vector>

namespace polyz {

const char *bench_op_name(BenchOp op) { return op == BenchOp::Mul ? "mul" : "pow"; }

namespace {

template <class F>
double median_ns(std::size_t repeats, F &&batch)
{
  std::vector<double> times;
  times.reserve(repeats);
  for (std::size_t r = 0; r < repeats; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    batch();
    auto t1 = std::chrono::steady_clock::now();
    times.push_back(std::chrono::duration<double, std::nano>(t1 - t0).count());
  }
  std::sort(times.begin(), times.end());
  std::size_t n = times.size();
  return n % 2 ? times[n / 2] : (times[n / 2 - 1] + times[n / 2]) / 2;
}

} // namespace

BenchReport run_bench(const BenchOptions &options)
{
  auto kernel = kernel_for(options.preset);
  if (!kernel)
    throw std::invalid_argument("no closed-form kernel for group '" + options.preset + "'");
  Tower tower = preset(options.preset);

  BenchReport report;
  report.options = options;
  if (options.count == 0)
    return report;

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<long long> exp(-options.bound, options.bound);
  std::uniform_int_distribution<long long> power(-25, 25);
  auto draw = [&] {
    NormalWord w(tower.rank());
    for (std::size_t i = 0; i < tower.rank(); ++i)
      w[i] = exp(rng);
    return w;
  };

  std::vector<NormalWord> xs, ys;
  std::vector<Int> ms;
  for (std::size_t i = 0; i < options.count; ++i) {
    xs.push_back(draw());
    if (options.op == BenchOp::Mul)
      ys.push_back(draw());
    else
      ms.push_back(options.power ? *options.power : Int(power(rng)));
  }

  std::vector<NormalWord> by_kernel(options.count), by_engine(options.count);
  auto kernel_batch = [&] {
    for (std::size_t i = 0; i < options.count; ++i)
      by_kernel[i] = options.op == BenchOp::Mul ? kernel->mul(xs[i], ys[i]) : kernel->pow(xs[i], ms[i]);
  };
  auto engine_batch = [&] {
    for (std::size_t i = 0; i < options.count; ++i)
      by_engine[i] = options.op == BenchOp::Mul ? tower.mul(xs[i], ys[i]) : tower.pow(xs[i], ms[i]);
  };

  kernel_batch();
  engine_batch();
  if (options.corrupt_kernel)
    by_kernel[0][0] += 1;
  for (std::size_t i = 0; i < options.count; ++i)
    if (by_kernel[i] != by_engine[i]) {
      report.equal = false;
      report.mismatch = i;
      return report;
    }

  report.kernel_ns = median_ns(options.repeats, kernel_batch);
  report.engine_ns = median_ns(options.repeats, engine_batch);
  return report;
}

} // namespace polyz
