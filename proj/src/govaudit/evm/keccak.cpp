// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "keccak.hpp"

#include <array>
#include <bit>
#include <cstring>

#include "../common/errors.hpp"

static_assert(std::endian::native == std::endian::little, "lane absorption assumes little-endian host");

namespace govaudit::evm {

namespace {

constexpr std::array<uint64_t, 24> kRoundConstants = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL, 0x8000000080008000ULL,
    0x000000000000808bULL, 0x0000000080000001ULL, 0x8000000080008081ULL, 0x8000000000008009ULL,
    0x000000000000008aULL, 0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
    0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL, 0x8000000000008003ULL,
    0x8000000000008002ULL, 0x8000000000000080ULL, 0x000000000000800aULL, 0x800000008000000aULL,
    0x8000000080008081ULL, 0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL,
};

// rotation offsets, indexed x + 5*y
constexpr std::array<unsigned, 25> kRotations = {
    0, 1, 62, 28, 27, 36, 44, 6, 55, 20, 3, 10, 43, 25, 39, 41, 45, 15, 21, 8, 18, 2, 61, 56, 14,
};

constexpr uint64_t rotl(uint64_t v, unsigned n) {
    return n == 0 ? v : (v << n | v >> (64 - n));
}

void keccak_f1600(std::array<uint64_t, 25>& s) {
    for (unsigned round = 0; round < 24; ++round) {
        // theta
        uint64_t c[5];
        for (int x = 0; x < 5; ++x)
            c[x] = s[x] ^ s[x + 5] ^ s[x + 10] ^ s[x + 15] ^ s[x + 20];
        for (int x = 0; x < 5; ++x) {
            const uint64_t d = c[(x + 4) % 5] ^ rotl(c[(x + 1) % 5], 1);
            for (int y = 0; y < 5; ++y)
                s[static_cast<size_t>(x + 5 * y)] ^= d;
        }
        // rho + pi
        std::array<uint64_t, 25> b;
        for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y)
                b[static_cast<size_t>(y + 5 * ((2 * x + 3 * y) % 5))] =
                    rotl(s[static_cast<size_t>(x + 5 * y)], kRotations[static_cast<size_t>(x + 5 * y)]);
        // chi
        for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y)
                s[static_cast<size_t>(x + 5 * y)] =
                    b[static_cast<size_t>(x + 5 * y)] ^
                    (~b[static_cast<size_t>((x + 1) % 5 + 5 * y)] &
                     b[static_cast<size_t>((x + 2) % 5 + 5 * y)]);
        // iota
        s[0] ^= kRoundConstants[round];
    }
}

constexpr size_t kRate = 136;  // 1600/8 - 2*32

}  // namespace

Word keccak256(ByteView data) {
    std::array<uint64_t, 25> state{};
    std::array<uint8_t, kRate> block;

    size_t offset = 0;
    while (data.size() - offset >= kRate) {
        for (size_t i = 0; i < kRate / 8; ++i) {
            uint64_t lane;
            std::memcpy(&lane, data.data() + offset + i * 8, 8);
            state[i] ^= lane;  // little-endian host assumed
        }
        keccak_f1600(state);
        offset += kRate;
    }

    block.fill(0);
    const size_t tail = data.size() - offset;
    if (tail > 0)
        std::memcpy(block.data(), data.data() + offset, tail);
    block[tail] ^= 0x01;  // Keccak domain padding
    block[kRate - 1] ^= 0x80;
    for (size_t i = 0; i < kRate / 8; ++i) {
        uint64_t lane;
        std::memcpy(&lane, block.data() + i * 8, 8);
        state[i] ^= lane;
    }
    keccak_f1600(state);

    Word out;
    std::memcpy(out.bytes.data(), state.data(), 32);
    return out;
}

Word keccak256(std::string_view text) {
    return keccak256(ByteView{reinterpret_cast<const uint8_t*>(text.data()), text.size()});
}

Selector compute_selector(std::string_view canonical_signature) {
    if (canonical_signature.empty() || canonical_signature.find(' ') != std::string_view::npos ||
        canonical_signature.find('(') == std::string_view::npos ||
        canonical_signature.back() != ')')
        throw UsageError("signature is not canonical: " + std::string(canonical_signature));
    const Word digest = keccak256(canonical_signature);
    Selector sel;
    std::copy(digest.bytes.begin(), digest.bytes.begin() + 4, sel.bytes.begin());
    return sel;
}

}  // namespace govaudit::evm
