#include "grim/octal6.hpp"

#include <bit>
#include <fstream>
#include <stdexcept>

#include "grim/family.hpp"
#include "grim/solver.hpp"

namespace grim {

void extend_octal6(SGSequence& seq, std::size_t max_n,
                   const Octal6Options& options) {
  if (max_n == 0) throw std::invalid_argument("octal6: max_n must be >= 1");
  auto& v = seq.values;
  if (v.empty()) v.assign(2, 0);  // padding, then n = 1
  if (v.size() > max_n) return;
  const std::size_t start = v.size();
  v.resize(max_n + 1, 0);

  std::uint32_t largest = 0;
  for (std::size_t i = 1; i < start; ++i) largest = std::max<std::uint32_t>(largest, v[i]);

  // seen[x] == stamp marks x as a follower value of the current n.
  std::vector<std::uint32_t> seen(std::bit_ceil(largest + 1) * 2 + 2, 0);
  std::uint32_t stamp = 0;

  for (std::size_t n = start; n <= max_n; ++n) {
    ++stamp;
    seen[v[n - 1]] = stamp;
    const std::size_t rest = n - 1;
    if (options.half_splits) {
      for (std::size_t a = 1, b = rest - 1; a <= b; ++a, --b) {
        seen[v[a] ^ v[b]] = stamp;
      }
    } else {
      for (std::size_t a = 1; a + 1 <= rest; ++a) seen[v[a] ^ v[rest - a]] = stamp;
    }
    std::uint32_t m = 0;
    while (seen[m] == stamp) ++m;
    if (m > 0xFFFF) {
      throw std::overflow_error("octal6: value at n=" + std::to_string(n) +
                                " does not fit in 16 bits");
    }
    v[n] = static_cast<std::uint16_t>(m);
    if (m > largest) {
      largest = m;
      // xor of two values below 2^k stays below 2^k.
      const std::size_t need = std::bit_ceil(largest + 1) * 2 + 2;
      if (need > seen.size()) seen.resize(need, 0);
    }
    if (options.progress && options.progress_every > 0 &&
        n % options.progress_every == 0) {
      options.progress(n);
    }
  }
  if (options.progress) options.progress(max_n);
}

SGSequence octal6_sequence(std::size_t max_n, const Octal6Options& options) {
  SGSequence seq;
  extend_octal6(seq, max_n, options);
  return seq;
}

std::vector<std::size_t> zeros(const SGSequence& seq) {
  std::vector<std::size_t> out;
  for (std::size_t n = 2; n <= seq.max_n(); ++n) {
    if (seq.values[n] == 0) out.push_back(n);
  }
  return out;
}

void save_sequence(const SGSequence& seq, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(kOctal6Magic, 8);
  std::vector<char> buf;
  buf.reserve(seq.max_n() * 2);
  for (std::size_t n = 1; n <= seq.max_n(); ++n) {
    buf.push_back(static_cast<char>(seq.values[n] & 0xFF));
    buf.push_back(static_cast<char>(seq.values[n] >> 8));
  }
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

SGSequence load_sequence(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  if (bytes.size() < 8 ||
      !std::equal(bytes.begin(), bytes.begin() + 8, kOctal6Magic)) {
    throw std::runtime_error(path.string() + ": not an octal6 sequence file");
  }
  if (bytes.size() % 2 != 0) {
    throw std::runtime_error(path.string() + ": truncated value");
  }
  SGSequence seq;
  seq.values.push_back(0);
  for (std::size_t i = 8; i < bytes.size(); i += 2) {
    seq.values.push_back(static_cast<std::uint16_t>(bytes[i] | (bytes[i + 1] << 8)));
  }
  return seq;
}

PathEquivalenceReport path_equivalence_check(std::size_t max_n, Solver& solver) {
  PathEquivalenceReport report;
  report.max_n = max_n;
  if (max_n < 2) return report;
  SGSequence seq = octal6_sequence(max_n);
  for (std::size_t n = 2; n <= max_n; ++n) {
    SGValue path_value = solver.sg_value(path_graph(n));
    ++report.checked;
    if (path_value != seq[n]) report.mismatches.push_back({n, path_value, seq[n]});
  }
  return report;
}

PathEquivalenceReport path_equivalence_check(std::size_t max_n) {
  Solver solver;
  return path_equivalence_check(max_n, solver);
}

}  // namespace grim
