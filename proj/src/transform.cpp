#include "ssdwt/transform.hpp"

#include <algorithm>
#include <cstdlib>

#include "ssdwt/errors.hpp"

namespace ssdwt {

// ---------------------------------------------------------------------------
// Decision model
// ---------------------------------------------------------------------------

pair_slot pair_of(lifting_slot slot) {
    switch (slot) {
    case lifting_slot::pred_h:
    case lifting_slot::upd_l: return pair_slot::vertical;
    case lifting_slot::pred_hl:
    case lifting_slot::upd_ll: return pair_slot::low_row;
    case lifting_slot::pred_hh:
    case lifting_slot::upd_lh: return pair_slot::high_row;
    }
    std::abort();
}

bool is_prediction(lifting_slot slot) {
    return slot == lifting_slot::pred_h || slot == lifting_slot::pred_hl ||
           slot == lifting_slot::pred_hh;
}

const char* slot_name(lifting_slot slot) {
    switch (slot) {
    case lifting_slot::pred_h: return "H";
    case lifting_slot::upd_l: return "L";
    case lifting_slot::pred_hl: return "HL";
    case lifting_slot::pred_hh: return "HH";
    case lifting_slot::upd_ll: return "LL";
    case lifting_slot::upd_lh: return "LH";
    }
    std::abort();
}

bool& level_decisions::skip_flag(lifting_slot slot) {
    pair_decisions& p = pair(pair_of(slot));
    return is_prediction(slot) ? p.skip_pred : p.skip_update;
}

bool level_decisions::skip_flag(lifting_slot slot) const {
    const pair_decisions& p = pair(pair_of(slot));
    return is_prediction(slot) ? p.skip_pred : p.skip_update;
}

bool decision_set::legal() const {
    return std::all_of(levels.begin(), levels.end(),
                       [](const level_decisions& d) { return d.legal(); });
}

decision_set fixed_variant_decisions(fixed_variant variant, int levels) {
    if (levels < 1)
        fail(errc::illegal_decisions, "fixed variants need at least 1 level");
    level_decisions d;
    switch (variant) {
    case fixed_variant::dwt:
        break;
    case fixed_variant::all_skip:
        for (auto& p : d.pairs)
            p = {true, true, true};
        break;
    case fixed_variant::fix1:
        for (auto& p : d.pairs)
            p.skip_update = true;
        break;
    case fixed_variant::fix2:
        for (auto& p : d.pairs)
            p.skip_update = true;
        d.pair(pair_slot::high_row).skip_pred = true;
        d.pair(pair_slot::high_row).skip_reorder = true;
        break;
    }
    return decision_set{std::vector<level_decisions>(levels, d)};
}

// ---------------------------------------------------------------------------
// Geometry
// ---------------------------------------------------------------------------

const char* band_name(band b) {
    switch (b) {
    case band::ll: return "LL";
    case band::hl: return "HL";
    case band::lh: return "LH";
    case band::hh: return "HH";
    }
    std::abort();
}

std::string region::name() const {
    if (id.level == 0)
        return "IMG";
    return std::string(band_name(id.label)) + std::to_string(id.level);
}

std::vector<level_extent> level_extents(int width, int height, int levels) {
    std::vector<level_extent> ext;
    ext.reserve(levels);
    int w = width, h = height;
    for (int l = 0; l < levels; ++l) {
        ext.push_back({w, h});
        w = (w + 1) / 2;
        h = (h + 1) / 2;
    }
    return ext;
}

std::vector<region> nominal_regions(int width, int height, int levels) {
    std::vector<region> out;
    if (levels == 0) {
        out.push_back({{0, band::ll}, 0, 0, width, height});
        return out;
    }
    const auto ext = level_extents(width, height, levels);
    const int top_w = (ext.back().w + 1) / 2;
    const int top_h = (ext.back().h + 1) / 2;
    out.push_back({{levels, band::ll}, 0, 0, top_w, top_h});
    for (int level = levels; level >= 1; --level) {
        const int lw = ext[level - 1].w, lh = ext[level - 1].h;
        const int low_w = (lw + 1) / 2, low_h = (lh + 1) / 2;
        out.push_back({{level, band::hl}, low_w, 0, lw - low_w, low_h});
        out.push_back({{level, band::lh}, 0, low_h, low_w, lh - low_h});
        out.push_back({{level, band::hh}, low_w, low_h, lw - low_w, lh - low_h});
    }
    return out;
}

// ---------------------------------------------------------------------------
// 1-D passes
// ---------------------------------------------------------------------------

namespace {

// Whole-sample symmetric extension: index -i mirrors to i, index l-1+i to
// l-1-i. Callers only ever step one past either end.
inline sample_t left_of(const strided_view& s, int x) {
    return x > 0 ? s[x - 1] : s[1];
}
inline sample_t right_of(const strided_view& s, int x) {
    return x + 1 < s.len ? s[x + 1] : s[s.len - 2];
}

inline sample_t predict_term(sample_t a, sample_t b) { return (a + b) >> 1; }
inline sample_t update_term(sample_t a, sample_t b) { return (a + b + 2) >> 2; }

} // namespace

void predict_pass(strided_view seg, cost_counters& counters) {
    if (seg.len < 2)
        return;
    for (int x = 1; x < seg.len; x += 2)
        seg[x] -= predict_term(left_of(seg, x), right_of(seg, x));
    counters.lifting_steps += static_cast<std::uint64_t>(seg.len / 2);
}

void update_pass(strided_view seg, cost_counters& counters) {
    if (seg.len < 2)
        return;
    for (int x = 0; x < seg.len; x += 2)
        seg[x] += update_term(left_of(seg, x), right_of(seg, x));
    counters.lifting_steps += static_cast<std::uint64_t>((seg.len + 1) / 2);
}

void reorder_pass(strided_view seg) {
    if (seg.len < 3)
        return;
    std::vector<sample_t> tmp(seg.len);
    const int low = (seg.len + 1) / 2;
    for (int x = 0; x < seg.len; ++x)
        tmp[x % 2 ? low + x / 2 : x / 2] = seg[x];
    for (int x = 0; x < seg.len; ++x)
        seg[x] = tmp[x];
}

void inverse_predict_pass(strided_view seg, cost_counters& counters) {
    if (seg.len < 2)
        return;
    for (int x = 1; x < seg.len; x += 2)
        seg[x] += predict_term(left_of(seg, x), right_of(seg, x));
    counters.lifting_steps += static_cast<std::uint64_t>(seg.len / 2);
}

void inverse_update_pass(strided_view seg, cost_counters& counters) {
    if (seg.len < 2)
        return;
    for (int x = 0; x < seg.len; x += 2)
        seg[x] -= update_term(left_of(seg, x), right_of(seg, x));
    counters.lifting_steps += static_cast<std::uint64_t>((seg.len + 1) / 2);
}

void inverse_reorder_pass(strided_view seg) {
    if (seg.len < 3)
        return;
    std::vector<sample_t> tmp(seg.len);
    const int low = (seg.len + 1) / 2;
    for (int x = 0; x < seg.len; ++x)
        tmp[x] = seg[x % 2 ? low + x / 2 : x / 2];
    for (int x = 0; x < seg.len; ++x)
        seg[x] = tmp[x];
}

// ---------------------------------------------------------------------------
// 2-D passes
// ---------------------------------------------------------------------------

namespace {

strided_view column_view(sample_grid& grid, int x, int y0, int len) {
    return {&grid.at(x, y0), len, grid.width};
}
strided_view row_view(sample_grid& grid, int y, int x0, int len) {
    return {&grid.at(x0, y), len, 1};
}

} // namespace

void forward_vertical_pass(sample_grid& grid, int w, int h, const pair_decisions& d,
                           cost_counters& counters) {
    if (!d.skip_pred)
        for (int x = 0; x < w; ++x)
            predict_pass(column_view(grid, x, 0, h), counters);
    if (!d.skip_update)
        for (int x = 0; x < w; ++x)
            update_pass(column_view(grid, x, 0, h), counters);
    if (!d.skip_reorder)
        for (int x = 0; x < w; ++x)
            reorder_pass(column_view(grid, x, 0, h));
}

void forward_row_band_pass(sample_grid& grid, int w, int y0, int rows, const pair_decisions& d,
                           cost_counters& counters) {
    if (!d.skip_pred)
        for (int y = y0; y < y0 + rows; ++y)
            predict_pass(row_view(grid, y, 0, w), counters);
    if (!d.skip_update)
        for (int y = y0; y < y0 + rows; ++y)
            update_pass(row_view(grid, y, 0, w), counters);
    if (!d.skip_reorder)
        for (int y = y0; y < y0 + rows; ++y)
            reorder_pass(row_view(grid, y, 0, w));
}

void forward_level(sample_grid& grid, int w, int h, const level_decisions& d,
                   cost_counters& counters) {
    const int low_rows = (h + 1) / 2;
    forward_vertical_pass(grid, w, h, d.pair(pair_slot::vertical), counters);
    forward_row_band_pass(grid, w, 0, low_rows, d.pair(pair_slot::low_row), counters);
    forward_row_band_pass(grid, w, low_rows, h - low_rows, d.pair(pair_slot::high_row), counters);
}

namespace {

void inverse_vertical_pass(sample_grid& grid, int w, int h, const pair_decisions& d,
                           cost_counters& counters) {
    if (!d.skip_reorder)
        for (int x = 0; x < w; ++x)
            inverse_reorder_pass(column_view(grid, x, 0, h));
    if (!d.skip_update)
        for (int x = 0; x < w; ++x)
            inverse_update_pass(column_view(grid, x, 0, h), counters);
    if (!d.skip_pred)
        for (int x = 0; x < w; ++x)
            inverse_predict_pass(column_view(grid, x, 0, h), counters);
}

void inverse_row_band_pass(sample_grid& grid, int w, int y0, int rows, const pair_decisions& d,
                           cost_counters& counters) {
    if (!d.skip_reorder)
        for (int y = y0; y < y0 + rows; ++y)
            inverse_reorder_pass(row_view(grid, y, 0, w));
    if (!d.skip_update)
        for (int y = y0; y < y0 + rows; ++y)
            inverse_update_pass(row_view(grid, y, 0, w), counters);
    if (!d.skip_pred)
        for (int y = y0; y < y0 + rows; ++y)
            inverse_predict_pass(row_view(grid, y, 0, w), counters);
}

void inverse_level(sample_grid& grid, int w, int h, const level_decisions& d,
                   cost_counters& counters) {
    const int low_rows = (h + 1) / 2;
    inverse_row_band_pass(grid, w, low_rows, h - low_rows, d.pair(pair_slot::high_row), counters);
    inverse_row_band_pass(grid, w, 0, low_rows, d.pair(pair_slot::low_row), counters);
    inverse_vertical_pass(grid, w, h, d.pair(pair_slot::vertical), counters);
}

} // namespace

sample_t range_guard_bound(int bit_depth, int levels) {
    return static_cast<sample_t>(1) << (bit_depth + levels + 2);
}

void check_range_guard(const sample_grid& grid, int levels) {
    const sample_t bound = range_guard_bound(grid.bit_depth, levels);
    for (sample_t v : grid.samples)
        if (v >= bound || v <= -bound)
            fail(errc::range_guard, "transform sample exceeded dynamic-range bound");
}

void forward_ssdwt(sample_grid& grid, const decision_set& decisions, cost_counters& counters) {
    if (!decisions.legal())
        fail(errc::illegal_decisions, "reorder skipped while a lifting step is performed");
    const auto ext = level_extents(grid.width, grid.height, decisions.level_count());
    for (int level = 1; level <= decisions.level_count(); ++level)
        forward_level(grid, ext[level - 1].w, ext[level - 1].h, decisions.levels[level - 1],
                      counters);
    check_range_guard(grid, decisions.level_count());
}

void inverse_ssdwt(sample_grid& grid, const decision_set& decisions, cost_counters& counters) {
    if (!decisions.legal())
        fail(errc::illegal_decisions, "reorder skipped while a lifting step is performed");
    const auto ext = level_extents(grid.width, grid.height, decisions.level_count());
    for (int level = decisions.level_count(); level >= 1; --level)
        inverse_level(grid, ext[level - 1].w, ext[level - 1].h, decisions.levels[level - 1],
                      counters);
}

// ---------------------------------------------------------------------------
// Change impact
// ---------------------------------------------------------------------------

level_change trace_level_change(const level_decisions& before, const level_decisions& after) {
    level_change c;
    const pair_decisions &v0 = before.pair(pair_slot::vertical), &v1 = after.pair(pair_slot::vertical);
    const pair_decisions &lo0 = before.pair(pair_slot::low_row), &lo1 = after.pair(pair_slot::low_row);
    const pair_decisions &hi0 = before.pair(pair_slot::high_row), &hi1 = after.pair(pair_slot::high_row);

    c.reorder_toggled = v0.skip_reorder != v1.skip_reorder ||
                        lo0.skip_reorder != lo1.skip_reorder ||
                        hi0.skip_reorder != hi1.skip_reorder;
    c.vertical_differs = !(v0 == v1);

    // Post-vertical content, by sample parity along the columns.
    const bool odd_rows = v0.skip_pred != v1.skip_pred;
    const bool even_rows = v0.skip_update != v1.skip_update ||
                           (!v1.skip_update && odd_rows); // update reads the predicted odds
    c.odd_rows_differ = odd_rows;
    c.even_rows_differ = even_rows;

    // Which nominal row bands hold changed content.
    bool low_in, high_in;
    if (v0.skip_reorder != v1.skip_reorder) {
        low_in = high_in = true;
    } else if (v1.skip_reorder) {
        low_in = high_in = odd_rows || even_rows; // parities stay interleaved
    } else {
        low_in = even_rows;
        high_in = odd_rows;
    }

    // One nominal row band through its horizontal pass.
    auto trace_band = [](bool input_differs, const pair_decisions& b0, const pair_decisions& b1,
                         bool& low_out, bool& high_out) {
        const bool odd_cols = input_differs || b0.skip_pred != b1.skip_pred;
        const bool even_cols = input_differs || b0.skip_update != b1.skip_update ||
                               (!b1.skip_update && odd_cols);
        if (b0.skip_reorder != b1.skip_reorder) {
            low_out = high_out = true;
        } else if (b1.skip_reorder) {
            low_out = high_out = odd_cols || even_cols;
        } else {
            low_out = even_cols;
            high_out = odd_cols;
        }
    };

    trace_band(low_in, lo0, lo1, c.ll_differs, c.hl_differs);
    trace_band(high_in, hi0, hi1, c.lh_differs, c.hh_differs);
    c.low_pass_differs = low_in || !(lo0 == lo1);
    c.high_pass_differs = high_in || !(hi0 == hi1);
    return c;
}

change_impact affected_regions_diff(const decision_set& decisions, int level,
                                    const level_decisions& replacement) {
    const int t = decisions.level_count();
    change_impact impact;
    impact.level = level;
    impact.trace = trace_level_change(decisions.levels[level - 1], replacement);

    if (impact.trace.reorder_toggled) {
        // Reorders move samples across nominal region boundaries; widen to
        // every region at this level and above.
        impact.upstream = level < t;
        impact.regions.push_back({t, band::ll});
        for (int l = t; l >= level; --l) {
            impact.regions.push_back({l, band::hl});
            impact.regions.push_back({l, band::lh});
            impact.regions.push_back({l, band::hh});
        }
        return impact;
    }

    if (impact.trace.hl_differs)
        impact.regions.push_back({level, band::hl});
    if (impact.trace.lh_differs)
        impact.regions.push_back({level, band::lh});
    if (impact.trace.hh_differs)
        impact.regions.push_back({level, band::hh});
    if (impact.trace.ll_differs) {
        if (level == t) {
            impact.regions.push_back({t, band::ll});
        } else {
            impact.upstream = true;
            impact.regions.push_back({t, band::ll});
            for (int l = t; l > level; --l) {
                impact.regions.push_back({l, band::hl});
                impact.regions.push_back({l, band::lh});
                impact.regions.push_back({l, band::hh});
            }
        }
    }
    return impact;
}

change_impact affected_regions(const decision_set& decisions, int level, lifting_slot slot) {
    if (level < 1 || level > decisions.level_count())
        fail(errc::illegal_decisions, "change level out of range");
    level_decisions replacement = decisions.levels[level - 1];
    bool& flag = replacement.skip_flag(slot);
    flag = !flag;
    // A step flipped to "perform" under a skipped reorder makes the pair
    // illegal; the reorder must then be performed too.
    pair_decisions& p = replacement.pair(pair_of(slot));
    if (!p.legal())
        p.skip_reorder = false;
    return affected_regions_diff(decisions, level, replacement);
}

} // namespace ssdwt
