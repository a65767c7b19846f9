#include "semieq_builder.hpp"

namespace odlin::detail {

SemiEq SemiEqBuilder::dense() const {
    RatMat a(rows_.size(), nvars_);
    RatVec b(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (const auto& [j, c] : rows_[r].terms) a.at(r, j) += c;
        b[r] = rows_[r].rhs;
    }
    return SemiEq(LinSys(std::move(a), std::move(b)), impls_);
}

SemiEqBuilder::Reduced SemiEqBuilder::reduced() const {
    Reduced out;
    std::vector<bool> pinned(nvars_, false);

    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& row : rows_) {
            int sign = 0;
            bool mixed = false, any = false;
            for (const auto& [j, c] : row.terms) {
                if (pinned[j] || c.is_zero()) continue;
                any = true;
                int s = c.is_positive() ? 1 : -1;
                if (sign == 0)
                    sign = s;
                else if (sign != s) {
                    mixed = true;
                    break;
                }
            }
            if (!any) {
                if (!row.rhs.is_zero()) {
                    out.feasible = false;
                    return out;
                }
                continue;
            }
            if (mixed) continue;
            if (row.rhs.is_zero()) {
                for (const auto& [j, c] : row.terms)
                    if (!pinned[j] && !c.is_zero()) {
                        pinned[j] = true;
                        changed = true;
                    }
            } else if ((sign > 0) != row.rhs.is_positive()) {
                out.feasible = false;
                return out;
            }
        }
        for (const auto& [i, j] : impls_)
            if (pinned[j] && !pinned[i]) {
                pinned[i] = true;
                changed = true;
            }
    }

    out.pos_of.assign(nvars_, -1);
    for (std::size_t j = 0; j < nvars_; ++j)
        if (!pinned[j]) {
            out.pos_of[j] = static_cast<long>(out.kept.size());
            out.kept.push_back(j);
        }

    std::vector<std::size_t> live_rows;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        bool live = false;
        for (const auto& [j, c] : rows_[r].terms)
            if (!pinned[j] && !c.is_zero()) {
                live = true;
                break;
            }
        if (live)
            live_rows.push_back(r);
        else if (!rows_[r].rhs.is_zero()) {
            out.feasible = false;
            return out;
        }
    }
    RatMat a(live_rows.size(), out.kept.size());
    RatVec b(live_rows.size());
    for (std::size_t ri = 0; ri < live_rows.size(); ++ri) {
        for (const auto& [j, c] : rows_[live_rows[ri]].terms)
            if (!pinned[j]) a.at(ri, static_cast<std::size_t>(out.pos_of[j])) += c;
        b[ri] = rows_[live_rows[ri]].rhs;
    }
    std::vector<std::pair<std::size_t, std::size_t>> impls;
    for (const auto& [i, j] : impls_)
        if (!pinned[i] && !pinned[j])
            impls.emplace_back(static_cast<std::size_t>(out.pos_of[i]),
                               static_cast<std::size_t>(out.pos_of[j]));
    out.se = SemiEq(LinSys(std::move(a), std::move(b)), std::move(impls));
    return out;
}

bool SemiEqBuilder::check_full(const RatVec& x) const {
    if (x.size() != nvars_ || !x.is_nonnegative()) return false;
    for (const auto& row : rows_) {
        Rat acc;
        for (const auto& [j, c] : row.terms) acc += c * x[j];
        if (acc != row.rhs) return false;
    }
    for (const auto& [i, j] : impls_)
        if (x[i].is_positive() && !x[j].is_positive()) return false;
    return true;
}

}  // namespace odlin::detail
