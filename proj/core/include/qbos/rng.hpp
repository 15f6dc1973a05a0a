#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace qbos {

// Counter-based PRNG (Philox 4x32, 10 rounds). Output depends only on
// (key, counter), so a (seed, stream) pair names an independent, fully
// reproducible sequence and blocks can be generated in any order. Two
// counter words hold the in-stream block index and two hold the stream id,
// so distinct streams never overlap.
class Philox4x32 {
 public:
  using Block = std::array<std::uint32_t, 4>;

  Philox4x32(std::uint64_t seed, std::uint64_t stream)
      : key_{static_cast<std::uint32_t>(seed),
             static_cast<std::uint32_t>(seed >> 32)},
        stream_lo_(static_cast<std::uint32_t>(stream)),
        stream_hi_(static_cast<std::uint32_t>(stream >> 32)) {}

  Block block(std::uint64_t index) const {
    Block x{static_cast<std::uint32_t>(index),
            static_cast<std::uint32_t>(index >> 32), stream_lo_, stream_hi_};
    std::uint32_t k0 = key_[0];
    std::uint32_t k1 = key_[1];
    for (int round = 0; round < 10; ++round) {
      if (round != 0) {
        k0 += 0x9E3779B9u;
        k1 += 0xBB67AE85u;
      }
      const std::uint64_t p0 = 0xD2511F53ull * x[0];
      const std::uint64_t p1 = 0xCD9E8D57ull * x[2];
      x = Block{static_cast<std::uint32_t>(p1 >> 32) ^ x[1] ^ k0,
                static_cast<std::uint32_t>(p1),
                static_cast<std::uint32_t>(p0 >> 32) ^ x[3] ^ k1,
                static_cast<std::uint32_t>(p0)};
    }
    return x;
  }

 private:
  std::array<std::uint32_t, 2> key_;
  std::uint32_t stream_lo_;
  std::uint32_t stream_hi_;
};

// Names one reproducible sample stream. Equal (seed, stream_id) pairs yield
// bit-identical draws; distinct stream ids are independent.
struct SampleStream {
  std::uint64_t seed{0};
  std::uint64_t stream_id{0};
};

// Sequential uniform variates over a SampleStream. Each Philox block yields
// two doubles built from the top 53 bits of a 64-bit word.
class UniformStream {
 public:
  explicit UniformStream(const SampleStream& s)
      : engine_(s.seed, s.stream_id) {}

  // Uniform on [0, 1).
  double next_unit() {
    if (pending_) {
      pending_ = false;
      return to_unit(spare_);
    }
    const auto b = engine_.block(index_++);
    spare_ = static_cast<std::uint64_t>(b[2]) |
             (static_cast<std::uint64_t>(b[3]) << 32);
    pending_ = true;
    const std::uint64_t first = static_cast<std::uint64_t>(b[0]) |
                                (static_cast<std::uint64_t>(b[1]) << 32);
    return to_unit(first);
  }

 private:
  static double to_unit(std::uint64_t x) {
    return static_cast<double>(x >> 11) * 0x1.0p-53;
  }

  Philox4x32 engine_;
  std::uint64_t index_{0};
  std::uint64_t spare_{0};
  bool pending_{false};
};

}  // namespace qbos
