#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace mdicw {

// Inputs of the certified-randomness accounting.
struct RandomnessBudget {
    double c_lower_bits;   // certified coherence per detected single photon
    double mu;             // signal mean photon number
    double eta;            // end-to-end transmittance
    double clock_rate_hz;

    void validate() const;
};

// c_lower * mu * eta, bits per pulse.
double min_entropy_per_pulse(const RandomnessBudget& b);

// clock_rate_hz * min_entropy_per_pulse, bits per second.
double generation_rate(const RandomnessBudget& b);

// Bit sequence packed into 64-bit words, LSB of word 0 = bit 0. Byte I/O uses
// MSB-first order within each byte.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits);

    std::size_t size() const { return nbits_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool v);
    void push_back(bool v);

    const std::vector<std::uint64_t>& words() const { return words_; }

    static BitVec from_bytes(const std::vector<std::uint8_t>& bytes);
    static BitVec from_bytes(const std::vector<std::uint8_t>& bytes, std::size_t nbits);
    std::vector<std::uint8_t> to_bytes() const;  // zero-padded to a byte boundary

private:
    std::vector<std::uint64_t> words_;
    std::size_t nbits_ = 0;
};

// Output bits of the m x n Toeplitz matrix T over GF(2) applied to raw, where
// n = raw.size(), T[i][j] = seed[i + n - 1 - j] and seed.size() = n + m - 1.
// Throws SeedLengthError on a length mismatch. GF(2)-linear in raw.
BitVec toeplitz_extract(const BitVec& raw, const BitVec& seed, std::size_t m);

// Streamed variant: raw is processed in block_bits-sized input blocks, each
// hashed to floor(block * ratio) bits with the same session seed; outputs are
// concatenated in input order. The seed must cover the largest block,
// i.e. seed.size() >= block_bits + floor(block_bits*ratio) - 1.
BitVec toeplitz_extract_stream(const BitVec& raw, const BitVec& seed, double ratio,
                               std::size_t block_bits = 4096);

}  // namespace mdicw
