#pragma once

// Reproducibility snapshot: sample_uniform_dag at n = 12, seed 2024,
// serialized as an edge list. Any drift in the draw order is a break.

inline constexpr const char* kFrozenSeed2024Sample =
    "# n=12\n"
    "1 6\n"
    "2 1\n"
    "2 9\n"
    "2 12\n"
    "3 2\n"
    "3 4\n"
    "3 8\n"
    "4 2\n"
    "4 9\n"
    "4 10\n"
    "5 4\n"
    "5 8\n"
    "5 10\n"
    "6 10\n"
    "6 12\n"
    "7 1\n"
    "7 4\n"
    "7 5\n"
    "7 8\n"
    "7 11\n"
    "7 12\n"
    "8 4\n"
    "8 12\n"
    "9 6\n"
    "11 2\n"
    "11 3\n"
    "11 5\n"
    "12 10\n"
    "\n";
