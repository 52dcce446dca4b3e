#ifndef HOLONOMICA_LINALG_HPP
#define HOLONOMICA_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "holonomica/ratfunc.hpp"

namespace holonomica {

// Incremental detector for the first linear dependence among a stream of
// vectors over the rational-function field. Elimination is fraction-free:
// rows are cleared to polynomial form and reduced by cross-multiplication
// with content removal, Bareiss style.
template <class C>
class DependenceFinder {
public:
    explicit DependenceFinder(std::size_t dim) : dim_(dim) {}

    // Feeds the next vector. On the first dependent vector returns
    // polynomial coefficients c_0..c_m with sum_i c_i * v_i = 0 and
    // c_m != 0; otherwise nullopt.
    std::optional<std::vector<Poly<C>>> feed(const std::vector<RatFunc<C>>& v) {
        // Clear denominators: d = lcm of entry denominators.
        Poly<C> d = Poly<C>::one();
        for (const auto& x : v) {
            Poly<C> g = poly_gcd(d, x.den());
            d = Poly<C>::divrem(d, g).first * x.den();
        }
        std::vector<Poly<C>> data(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            auto [q, r] = Poly<C>::divrem(v[i].num() * d, v[i].den());
            data[i] = q;  // exact by construction of d
        }
        dens_.push_back(d);
        std::vector<Poly<C>> aug(dens_.size());
        aug.back() = Poly<C>::one();

        for (const Row& row : rows_) {
            const Poly<C>& lead = data[row.pivot];
            if (lead.is_zero()) continue;
            const Poly<C> pv = row.data[row.pivot];
            const Poly<C> f = lead;
            for (std::size_t i = 0; i < dim_; ++i)
                data[i] = pv * data[i] - f * row.data[i];
            for (std::size_t i = 0; i < aug.size(); ++i) {
                Poly<C> other = i < row.aug.size() ? row.aug[i] : Poly<C>();
                aug[i] = pv * aug[i] - f * other;
            }
            strip_content(data, aug);
        }

        std::size_t pivot = dim_;
        for (std::size_t i = 0; i < dim_; ++i)
            if (!data[i].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot == dim_) {
            // Dependence on the cleared rows; undo the clearing factors.
            std::vector<Poly<C>> c(aug.size());
            for (std::size_t i = 0; i < aug.size(); ++i) c[i] = aug[i] * dens_[i];
            return c;
        }
        rows_.push_back(Row{std::move(data), std::move(aug), pivot});
        return std::nullopt;
    }

private:
    struct Row {
        std::vector<Poly<C>> data;
        std::vector<Poly<C>> aug;
        std::size_t pivot;
    };

    // Removes the common polynomial and rational content of a full
    // (data | aug) row to limit coefficient blowup.
    void strip_content(std::vector<Poly<C>>& data, std::vector<Poly<C>>& aug) {
        Poly<C> g;
        bool first = true;
        auto absorb = [&](const Poly<C>& p) {
            if (p.is_zero()) return;
            if (first) {
                g = poly_monic(p);
                first = false;
            } else if (g.degree() > 0) {
                g = poly_gcd(g, p);
            }
        };
        for (const auto& p : data) absorb(p);
        for (const auto& p : aug) absorb(p);
        if (first) return;
        if (g.degree() > 0) {
            for (auto& p : data)
                if (!p.is_zero()) p = Poly<C>::divrem(p, g).first;
            for (auto& p : aug)
                if (!p.is_zero()) p = Poly<C>::divrem(p, g).first;
        }
        std::vector<Poly<C>> all = data;
        all.insert(all.end(), aug.begin(), aug.end());
        Rat cont = poly_list_content(all);
        if (cont != 0 && cont != 1) {
            Rat inv = 1 / cont;
            for (auto& p : data) p = poly_scale_rat(p, inv);
            for (auto& p : aug) p = poly_scale_rat(p, inv);
        }
    }

    std::size_t dim_;
    std::vector<Poly<C>> dens_;
    std::vector<Row> rows_;
};

} // namespace holonomica

#endif
