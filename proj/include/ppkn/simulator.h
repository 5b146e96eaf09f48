#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ppkn/circuit.h"

namespace ppkn {

/// One boolean per line; bit i is the value of line i.
using BitState = std::vector<bool>;

/// Packs a state into an integer. Line 0 is the least significant bit.
std::uint64_t encode_state(const BitState &state);
/// Inverse of encode_state for the given width (at most 64).
BitState decode_state(std::uint64_t value, std::size_t width);

/// XORs the conjunction of the gate's controls onto its target.
BitState apply_gate(BitState state, const Gate &gate);
void apply_gate_in_place(BitState &state, const Gate &gate);

/// Left fold of apply_gate over the circuit in program order.
BitState simulate(const Circuit &circuit, BitState input);

/// Bit-sliced state: one word per line, lane j of every word forms one
/// independent basis state.
class BatchState {
   public:
    using Word = std::uint64_t;
    static constexpr std::size_t kLaneCount = sizeof(Word) * 8;

    explicit BatchState(std::size_t width) : words_(width, 0) {
    }
    explicit BatchState(std::vector<Word> words) : words_(std::move(words)) {
    }

    /// Packs up to kLaneCount scalar states; lanes beyond states.size() are zero.
    static BatchState from_states(std::span<const BitState> states);

    static constexpr std::size_t lane_count() {
        return kLaneCount;
    }
    std::size_t width() const {
        return words_.size();
    }
    std::span<Word> words() {
        return words_;
    }
    std::span<const Word> words() const {
        return words_;
    }

    bool get(std::size_t line, std::size_t lane) const {
        return (words_[line] >> lane) & 1;
    }
    void set(std::size_t line, std::size_t lane, bool value);
    BitState lane(std::size_t lane) const;

    bool operator==(const BatchState &) const = default;

   private:
    std::vector<Word> words_;
};

void apply_gate_batch(BatchState &batch, const Gate &gate);
BatchState simulate_batch(const Circuit &circuit, BatchState batch);

/// entries[x] is the encoding of simulate(circuit, decode_state(x)).
struct PermutationTable {
    std::vector<std::uint64_t> entries;

    std::size_t size() const {
        return entries.size();
    }
};

inline constexpr std::size_t kDefaultExhaustiveLineLimit = 20;

/// Enumerates all 2^width basis states. Throws CapacityError above `line_limit`.
/// Large tables are split across threads by input range; the result does not
/// depend on the split.
PermutationTable permutation_of(const Circuit &circuit, std::size_t line_limit = kDefaultExhaustiveLineLimit);

/// True iff every value in [0, size) appears exactly once and size is a power of two.
bool is_bijection(const PermutationTable &table);

}  // namespace ppkn
