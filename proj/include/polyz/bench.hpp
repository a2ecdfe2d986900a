#ifndef POLYZ_BENCH_HPP
#define POLYZ_BENCH_HPP

#include "polyz/integer.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

namespace polyz {

enum class BenchOp { Mul, Pow };

struct BenchOptions
{
  std::string preset;
  BenchOp op = BenchOp::Pow;
  std::size_t count = 1000;     // random inputs per batch
  std::size_t repeats = 5;      // timed batches per side
  std::uint64_t seed = 1;
  long long bound = 15;         // exponents of random words in [-bound, bound]
  std::optional<Int> power;     // fixed m for Pow; random in [-25, 25] otherwise
  bool corrupt_kernel = false;  // test hook: perturbs the first kernel result
};

struct BenchReport
{
  BenchOptions options;
  bool equal = true;
  std::optional<std::size_t> mismatch; // first differing input
  double kernel_ns = 0;                // median batch time
  double engine_ns = 0;

  double speedup() const { return kernel_ns > 0 ? engine_ns / kernel_ns : 0; }
};

/// Compares the preset's closed-form kernel with the generic engine on the
/// same random inputs. Results are compared before anything is timed; on a
/// mismatch no timing is done. Throws std::invalid_argument for presets
/// without a kernel.
BenchReport run_bench(const BenchOptions &options);

const char *bench_op_name(BenchOp op);

} // namespace polyz

#endif // POLYZ_BENCH_HPP
