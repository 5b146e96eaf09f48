#include "ppkn/simulator.h"

#include <algorithm>
#include <bit>
#include <thread>

#include "ppkn/errors.h"

namespace ppkn {

namespace {

void check_covers(std::size_t width, const Gate &gate) {
    if (gate.max_line() >= width) {
        throw StructuralError(
            "gate '" + to_string(gate) + "' does not fit a state of " + std::to_string(width) + " line(s)");
    }
}

void check_width(const Circuit &circuit, std::size_t width) {
    if (width != circuit.width()) {
        throw StructuralError(
            "state has " + std::to_string(width) + " line(s) but the circuit has " + std::to_string(circuit.width()));
    }
}

// Evaluates basis states [begin, end) in 64-lane batches.
void fill_permutation(const Circuit &circuit, std::uint64_t begin, std::uint64_t end, std::uint64_t *out) {
    const std::size_t width = circuit.width();
    BatchState batch(width);
    for (std::uint64_t base = begin; base < end; base += BatchState::kLaneCount) {
        const std::size_t lanes = static_cast<std::size_t>(std::min<std::uint64_t>(BatchState::kLaneCount, end - base));
        auto words = batch.words();
        std::fill(words.begin(), words.end(), 0);
        for (std::size_t lane = 0; lane < lanes; lane++) {
            const std::uint64_t x = base + lane;
            for (std::size_t line = 0; line < width; line++) {
                words[line] |= ((x >> line) & 1) << lane;
            }
        }
        for (const auto &gate : circuit.gates()) {
            apply_gate_batch(batch, gate);
        }
        for (std::size_t lane = 0; lane < lanes; lane++) {
            std::uint64_t y = 0;
            for (std::size_t line = 0; line < width; line++) {
                y |= ((words[line] >> lane) & 1) << line;
            }
            out[base - begin + lane] = y;
        }
    }
}

}  // namespace

std::uint64_t encode_state(const BitState &state) {
    if (state.size() > 64) {
        throw CapacityError("cannot encode a state wider than 64 lines");
    }
    std::uint64_t v = 0;
    for (std::size_t k = 0; k < state.size(); k++) {
        v |= static_cast<std::uint64_t>(state[k]) << k;
    }
    return v;
}

BitState decode_state(std::uint64_t value, std::size_t width) {
    if (width > 64) {
        throw CapacityError("cannot decode a state wider than 64 lines");
    }
    BitState state(width);
    for (std::size_t k = 0; k < width; k++) {
        state[k] = (value >> k) & 1;
    }
    return state;
}

void apply_gate_in_place(BitState &state, const Gate &gate) {
    check_covers(state.size(), gate);
    bool fire = true;
    for (auto c : gate.controls()) {
        fire = fire && state[c.index];
    }
    if (fire) {
        state[gate.target().index] = !state[gate.target().index];
    }
}

BitState apply_gate(BitState state, const Gate &gate) {
    apply_gate_in_place(state, gate);
    return state;
}

BitState simulate(const Circuit &circuit, BitState input) {
    check_width(circuit, input.size());
    for (const auto &gate : circuit.gates()) {
        apply_gate_in_place(input, gate);
    }
    return input;
}

BatchState BatchState::from_states(std::span<const BitState> states) {
    if (states.empty()) {
        throw UsageError("batch needs at least one state");
    }
    if (states.size() > kLaneCount) {
        throw CapacityError("batch holds at most " + std::to_string(kLaneCount) + " states");
    }
    BatchState batch(states.front().size());
    for (std::size_t lane = 0; lane < states.size(); lane++) {
        if (states[lane].size() != batch.width()) {
            throw StructuralError("batch states differ in width");
        }
        for (std::size_t line = 0; line < batch.width(); line++) {
            batch.set(line, lane, states[lane][line]);
        }
    }
    return batch;
}

void BatchState::set(std::size_t line, std::size_t lane, bool value) {
    const Word mask = Word{1} << lane;
    words_[line] = value ? (words_[line] | mask) : (words_[line] & ~mask);
}

BitState BatchState::lane(std::size_t lane) const {
    BitState state(words_.size());
    for (std::size_t line = 0; line < words_.size(); line++) {
        state[line] = get(line, lane);
    }
    return state;
}

void apply_gate_batch(BatchState &batch, const Gate &gate) {
    check_covers(batch.width(), gate);
    auto words = batch.words();
    BatchState::Word fire = ~BatchState::Word{0};
    for (auto c : gate.controls()) {
        fire &= words[c.index];
    }
    words[gate.target().index] ^= fire;
}

BatchState simulate_batch(const Circuit &circuit, BatchState batch) {
    check_width(circuit, batch.width());
    for (const auto &gate : circuit.gates()) {
        apply_gate_batch(batch, gate);
    }
    return batch;
}

PermutationTable permutation_of(const Circuit &circuit, std::size_t line_limit) {
    line_limit = std::min<std::size_t>(line_limit, 63);
    if (circuit.width() > line_limit) {
        throw CapacityError(
            "exhaustive enumeration is limited to " + std::to_string(line_limit) + " lines, circuit has " +
            std::to_string(circuit.width()));
    }
    const std::uint64_t total = std::uint64_t{1} << circuit.width();
    PermutationTable table;
    table.entries.resize(total);

    constexpr std::uint64_t kParallelThreshold = std::uint64_t{1} << 14;
    const std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
    if (total < kParallelThreshold || threads == 1) {
        fill_permutation(circuit, 0, total, table.entries.data());
        return table;
    }

    // Chunk boundaries are multiples of the lane count.
    const std::uint64_t chunks = std::min<std::uint64_t>(threads, total / BatchState::kLaneCount);
    const std::uint64_t per = (total / chunks + BatchState::kLaneCount - 1) / BatchState::kLaneCount * BatchState::kLaneCount;
    {
        std::vector<std::jthread> workers;
        for (std::uint64_t begin = 0; begin < total; begin += per) {
            const std::uint64_t end = std::min(total, begin + per);
            workers.emplace_back([&circuit, &table, begin, end] {
                fill_permutation(circuit, begin, end, table.entries.data() + begin);
            });
        }
    }
    return table;
}

bool is_bijection(const PermutationTable &table) {
    const std::size_t n = table.entries.size();
    if (n == 0 || !std::has_single_bit(n)) {
        return false;
    }
    std::vector<bool> seen(n, false);
    for (auto v : table.entries) {
        if (v >= n || seen[v]) {
            return false;
        }
        seen[v] = true;
    }
    return true;
}

}  // namespace ppkn
