#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ssdwt/grid.hpp"

namespace ssdwt {

// ---------------------------------------------------------------------------
// Decision model
// ---------------------------------------------------------------------------

enum class step_kind { prediction, update, reorder };

// One 1-D pass produces a complementary pair of subbands. The vertical pass
// yields (L,H), the horizontal pass on the nominal L rows yields (LL,HL) and
// on the nominal H rows (LH,HH). Prediction owns the high member, update the
// low member.
enum class pair_slot : int { vertical = 0, low_row = 1, high_row = 2 };

// The six lifting slots of one transform level, in the basic heuristic's
// subband order H, L, HL, HH, LL, LH.
enum class lifting_slot : int {
    pred_h = 0,
    upd_l = 1,
    pred_hl = 2,
    pred_hh = 3,
    upd_ll = 4,
    upd_lh = 5,
};

pair_slot pair_of(lifting_slot slot);
bool is_prediction(lifting_slot slot);
const char* slot_name(lifting_slot slot);

struct pair_decisions {
    bool skip_pred = false;
    bool skip_update = false;
    bool skip_reorder = false;

    bool legal() const { return !skip_reorder || (skip_pred && skip_update); }
    bool operator==(const pair_decisions&) const = default;
};

// Up to 9 binary decisions per level; only the five per-pair states with
// legal() are admissible.
struct level_decisions {
    std::array<pair_decisions, 3> pairs{}; // indexed by pair_slot

    pair_decisions& pair(pair_slot p) { return pairs[static_cast<int>(p)]; }
    const pair_decisions& pair(pair_slot p) const { return pairs[static_cast<int>(p)]; }

    bool& skip_flag(lifting_slot slot);
    bool skip_flag(lifting_slot slot) const;

    bool legal() const {
        return pairs[0].legal() && pairs[1].legal() && pairs[2].legal();
    }
    bool operator==(const level_decisions&) const = default;
};

struct decision_set {
    std::vector<level_decisions> levels; // levels[0] is transform level 1

    int level_count() const { return static_cast<int>(levels.size()); }
    bool legal() const;
    bool operator==(const decision_set&) const = default;
};

enum class fixed_variant { dwt, all_skip, fix1, fix2 };

// DWT skips nothing; ALL_SKIP skips everything including reorders; FIX1
// skips every update step; FIX2 additionally skips the HH prediction and the
// (LH,HH) reorder.
decision_set fixed_variant_decisions(fixed_variant variant, int levels);

// ---------------------------------------------------------------------------
// Nominal region geometry
// ---------------------------------------------------------------------------

enum class band : int { ll = 0, hl = 1, lh = 2, hh = 3 };

const char* band_name(band b);

struct region_id {
    int level = 0; // 1..t, or 0 for the whole image (NO-DWT)
    band label = band::ll;

    bool operator==(const region_id&) const = default;
};

struct region {
    region_id id;
    int x = 0, y = 0, w = 0, h = 0;

    std::size_t sample_count() const {
        return static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
    }
    bool empty() const { return w == 0 || h == 0; }
    std::string name() const;
};

// Rectangle dimensions consumed by each level: entry ℓ-1 holds the level-ℓ
// input dims (w_{ℓ-1}, h_{ℓ-1}).
struct level_extent {
    int w = 0, h = 0;
};
std::vector<level_extent> level_extents(int width, int height, int levels);

// Mallat layout: LL_t first, then HL_ℓ, LH_ℓ, HH_ℓ for ℓ = t..1. Always
// 3t + 1 regions (a single whole-image region for t = 0); degenerate inputs
// may yield zero-area regions.
std::vector<region> nominal_regions(int width, int height, int levels);

// ---------------------------------------------------------------------------
// Operation counters
// ---------------------------------------------------------------------------

struct cost_counters {
    std::uint64_t lifting_steps = 0;   // single-sample applications of a lifting step
    std::uint64_t encoded_symbols = 0; // samples passed to the entropy coder
    std::uint64_t entropy_evals = 0;   // samples passed to the H0 estimator

    void reset() { *this = {}; }
};

// ---------------------------------------------------------------------------
// 1-D lifting passes (whole-sample symmetric extension; length 1 is a no-op)
// ---------------------------------------------------------------------------

struct strided_view {
    sample_t* data = nullptr;
    int len = 0;
    int stride = 1;

    sample_t& operator[](int i) { return data[static_cast<std::ptrdiff_t>(i) * stride]; }
    sample_t operator[](int i) const { return data[static_cast<std::ptrdiff_t>(i) * stride]; }
};

void predict_pass(strided_view seg, cost_counters& counters);
void update_pass(strided_view seg, cost_counters& counters);
void reorder_pass(strided_view seg);

void inverse_predict_pass(strided_view seg, cost_counters& counters);
void inverse_update_pass(strided_view seg, cost_counters& counters);
void inverse_reorder_pass(strided_view seg);

// ---------------------------------------------------------------------------
// SS-DWT
// ---------------------------------------------------------------------------

// Forward transform in place. Level ℓ works on the nominal top-left
// w_{ℓ-1}×h_{ℓ-1} rectangle: vertical pass per column, then horizontal pass
// over the nominal L rows, then over the nominal H rows. Level ℓ+1 always
// consumes the nominal top-left quadrant, whether or not reorders ran.
void forward_ssdwt(sample_grid& grid, const decision_set& decisions, cost_counters& counters);
void inverse_ssdwt(sample_grid& grid, const decision_set& decisions, cost_counters& counters);

// Single-level pieces, used by the incremental evaluator. `x0,y0,w,h` is the
// level rectangle (always anchored at 0,0 for the nominal pyramid).
void forward_vertical_pass(sample_grid& grid, int w, int h, const pair_decisions& d,
                           cost_counters& counters);
void forward_row_band_pass(sample_grid& grid, int w, int y0, int rows, const pair_decisions& d,
                           cost_counters& counters);
void forward_level(sample_grid& grid, int w, int h, const level_decisions& d,
                   cost_counters& counters);

// Verifies the dynamic-range guard |v| < 2^(bit_depth + levels + 2) over the
// whole grid; throws errc::range_guard on violation.
void check_range_guard(const sample_grid& grid, int levels);
sample_t range_guard_bound(int bit_depth, int levels);

// ---------------------------------------------------------------------------
// Change impact (incremental re-encoding support)
// ---------------------------------------------------------------------------

// Which parts of a level's pipeline differ after swapping that level's
// decisions, assuming identical level input.
struct level_change {
    bool vertical_differs = false;  // any vertical pair flag changed
    bool odd_rows_differ = false;   // post-vertical nominal H rows content
    bool even_rows_differ = false;  // post-vertical nominal L rows content
    bool low_pass_differs = false;  // L-row horizontal pass must rerun
    bool high_pass_differs = false; // H-row horizontal pass must rerun
    bool ll_differs = false;        // nominal LL quadrant content (feeds level+1)
    bool hl_differs = false;
    bool lh_differs = false;
    bool hh_differs = false;
    bool reorder_toggled = false;   // any of the three reorder flags changed
};

level_change trace_level_change(const level_decisions& before, const level_decisions& after);

struct change_impact {
    std::vector<region_id> regions; // coded regions whose payload can differ
    int level = 0;                  // level of the change
    level_change trace;             // pass-granular recompute instruction
    bool upstream = false;          // levels above `level` must be recomputed
};

// Minimal coded-region set whose payloads can differ when `slot`@`level` is
// toggled in `decisions`. If the toggle leaves the pair's reorder-skip flag
// illegal, the reorder flag flips too, and any reorder flip conservatively
// widens the result to every region at levels >= level.
change_impact affected_regions(const decision_set& decisions, int level, lifting_slot slot);

// Same, for an arbitrary per-level decision swap (used for heuristic trials
// where a derived reorder flag moves together with a lifting flag).
change_impact affected_regions_diff(const decision_set& decisions, int level,
                                    const level_decisions& replacement);

} // namespace ssdwt
