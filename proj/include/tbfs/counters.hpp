#pragma once

#include "tbfs/common.hpp"

namespace tbfs {

// Operation counters shared across the stack. Every module increments the
// ones it owns; the metrics report and the amortization checks read them.
struct Counters {
    // word_kernels: machine-word operations, one per 64-bit arithmetic step
    u64 kernel_word_ops = 0;
    u64 kernel_calls = 0;

    // big-digit operations: one per container-sized read/write/arith step
    u64 big_ops = 0;

    // pow3 provider
    u64 pow3_calls = 0;
    u64 pow3_multiplies = 0;  // non-squaring multiplies
    u64 pow3_squarings = 0;

    // spill backend
    u64 g_steps = 0;
    u64 node_decodes = 0;
    u64 node_encodes = 0;

    // color store
    u64 color_reads = 0;
    u64 color_writes = 0;
    u64 color_changes = 0;  // writes that changed the color
    u64 conversions_to_regular = 0;
    u64 conversions_to_compact = 0;
    u64 checkouts = 0;
    u64 gray_splices = 0;
    u64 pointer_surgeries = 0;  // containers touched during chain repair
    u64 list_splices = 0;       // iteration-list link/unlink operations

    // bfs engine
    u64 vertex_enumerations = 0;
    u64 enum_degree_sum = 0;  // sum of deg(u) over enumerated vertices
    u64 grayfree_enumerations = 0;
    u64 rounds = 0;

    void reset() { *this = Counters{}; }
};

}  // namespace tbfs
