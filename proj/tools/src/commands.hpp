#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace hut::tools {

struct SolveOptions {
  std::string in;
  std::string out;
  std::string variant;  // empty: take it from the file
  std::string mode;     // empty: take it from the file
  std::string algo = "auto";
  std::optional<std::string> delta;
  bool optimize = false;
};

struct ReduceOptions {
  std::string from;
  std::string to;
  std::string pipeline;
  std::string in;
  std::string out;
  std::string lambda = "1";
  std::size_t dim = 2;
};

struct VerifyOptions {
  std::string suite = "all";
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  std::size_t maxSize = 8;
  unsigned jobs = 1;
  std::string fault = "none";
  std::string out;
};

struct BenchOptions {
  std::string family;
  std::string sizes;
  std::uint64_t seed = 1;
  std::string out;
};

// Each returns the process exit code and throws on usage errors.
int cmd_solve(const SolveOptions& opt, std::ostream& out);
int cmd_reduce(const ReduceOptions& opt, std::ostream& out);
int cmd_verify(const VerifyOptions& opt, std::ostream& out);
int cmd_bench(const BenchOptions& opt, std::ostream& out);

// Writes text to path, or to out when path is empty.
void emit(const std::string& text, const std::string& path, std::ostream& out);

}  // namespace hut::tools
