#pragma once

namespace glab {

// Vertex caps for the exact solvers. GLAB_SOLVER_LIMIT overrides every cap at
// once, clamped to a safe maximum per solver.
struct SolverLimits {
    int chromatic = 20;
    int grundy = 20;
    int achromatic = 10;
    int grundy_brute = 8;

    static SolverLimits from_env();
};

}  // namespace glab
