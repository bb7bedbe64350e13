#pragma once

#include <optional>
#include <vector>

#include "mfr/complex.hpp"
#include "mfr/resolution.hpp"

namespace mfr {

enum class Chunk { none, chain, cochain };

struct PipelineOptions {
    ColumnKind columns = ColumnKind::heap;
    Chunk chunk = Chunk::none;
    bool clearing = true;
    bool sparsify = true;
    bool minimize = true;
    bool lex_first = false;
    std::optional<Axis> cone; // applied to the complex before anything else
    unsigned threads = 1;
};

struct PipelineStats {
    double seconds_cone = 0, seconds_chunk = 0, seconds_reduce = 0, seconds_minimize = 0, seconds_dualize = 0;
    std::size_t phase1_columns = 0;   // nonzero columns entering bireduce
    std::size_t phase1_additions = 0;
    std::size_t phase2_additions = 0;
    std::size_t cleared_columns = 0;  // nonzero columns zeroed by clearing
    std::size_t lw_additions = 0;
    std::size_t peak_columns = 0;     // widest matrix handed to a reduction
};

class InfiniteHomologyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Minimal (if requested) free resolution of H_d via kernel, minimal generating
// system and factorization. Needs d + 1 <= top degree.
FreeResolution homology_mfr(const ChainComplex& c, int d, const PipelineOptions& opts = {},
                            PipelineStats* stats = nullptr);

// Resolutions of H_0..H_dmax through the dual cochain complex with clearing.
// Throws InfiniteHomologyError when some H_d has infinite total dimension.
std::vector<FreeResolution> cohomology_mfr(const ChainComplex& c, int dmax, const PipelineOptions& opts = {},
                                           PipelineStats* stats = nullptr);

// True iff H_d vanishes along the far edges x = max and y = max, i.e. H_d is
// finite-dimensional in total.
bool has_finite_homology(const ChainComplex& c, int d);

// dim H_d at each grade of the box from plain GF(2) ranks of the restricted
// boundary matrices.
HilbertGrid hilbert_oracle(const ChainComplex& c, int d, const GradeBox& box);

// Bounding box of all cell grades, widened by `margin`.
GradeBox bounding_box(const ChainComplex& c, std::int32_t margin = 1);

} // namespace mfr
